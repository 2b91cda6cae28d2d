#![no_main]

use evoperm::cli::AlgebraDocument;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = AlgebraDocument::parse(text) else {
        return;
    };
    // a document that parsed must validate to an algebra, and its own
    // JSON form must parse back to the same document
    let alg = doc.to_algebra().expect("parse implies validity");
    assert_eq!(alg.dim(), doc.n);
    let json = serde_json::to_string(&doc).unwrap();
    let back = AlgebraDocument::parse(&json).unwrap();
    assert_eq!(back, doc);
});
