//! Expression parser: arbitrary bytes must either parse or fail cleanly, and
//! whatever parses must survive a print/parse round trip unchanged. The
//! parser's depth, exponent, and term-count caps keep adversarial inputs
//! (deep nesting, huge powers) from exhausting memory or the stack.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for d in [1u32, 3] {
        if let Ok(f) = freebert::parser::parse(text, d) {
            let printed = freebert::parser::print(&f);
            let back = freebert::parser::parse(&printed, d)
                .expect("canonical output must reparse");
            assert_eq!(back, f, "round trip must be exact");
        }
    }
});
