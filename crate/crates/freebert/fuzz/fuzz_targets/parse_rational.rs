//! Rational-string decoder: `p/q` strings from untrusted input must parse or
//! error without panicking (zero denominators, sign clutter, huge digit runs),
//! and formatting must round trip exactly.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = freebert::rat::parse_rat(text) {
        let printed = freebert::rat::fmt_rat(&r);
        let back = freebert::rat::parse_rat(&printed).expect("canonical output must reparse");
        assert_eq!(back, r, "round trip must be exact");
    }
});
