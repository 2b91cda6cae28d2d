#![no_main]

use evoperm::exactnum::SqrtRational;
use evoperm::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = text.parse::<Rational>() {
        // display/parse must be a fixed point
        let back: Rational = r.to_string().parse().unwrap();
        assert_eq!(back, r);
    }
    if let Ok(s) = text.parse::<SqrtRational>() {
        let back: SqrtRational = s.to_string().parse().unwrap();
        assert_eq!(back.square(), s.square());
    }
});
