//! Matrix-tuple JSON decoder: arbitrary bytes must either decode into a
//! well-shaped tuple or return an error, never panic; decoded tuples must
//! survive an encode/decode round trip. Size caps in the decoder bound the
//! memory any hostile document can claim.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = freebert::jsonio::tuple_from_json(text) {
        let printed = freebert::jsonio::tuple_to_json(&x);
        let back = freebert::jsonio::tuple_from_json(&printed)
            .expect("canonical output must reparse");
        assert_eq!(back, x, "round trip must be exact");
    }
});
