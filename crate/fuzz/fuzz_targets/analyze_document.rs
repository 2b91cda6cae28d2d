#![no_main]

use evoperm::cli::{self, AlgebraDocument};
use libfuzzer_sys::fuzz_target;

// Exercises the full analysis pipeline on arbitrary valid documents:
// no panic, deterministic rendering, lossless JSON round-trip.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = AlgebraDocument::parse(text) else {
        return;
    };
    // keep the exact linear algebra small enough to stay fast
    if doc.n > 8 {
        return;
    }
    let report = cli::cmd_analyze(&doc).expect("valid documents analyze");
    assert_eq!(report.render_text(), cli::cmd_analyze(&doc).unwrap().render_text());
    let json = serde_json::to_string(&report).unwrap();
    let back: cli::AnalyzeReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
});
