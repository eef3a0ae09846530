#![no_main]

use libfuzzer_sys::fuzz_target;

use dualize::{BoolMatrix, Covering};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(mat) = BoolMatrix::parse(text) else {
        return;
    };
    // Accepted input must round-trip bit-exactly.
    let rendered = mat.to_text();
    let again = BoolMatrix::parse(&rendered).expect("rendered matrix reparses");
    assert_eq!(mat, again);
    assert_eq!(again.to_text(), rendered);
    // Checked queries never panic on in-range arguments.
    let empty = Covering::empty();
    let uncovered = mat.uncovered_rows(&empty).unwrap();
    assert_eq!(uncovered.len(), mat.row_count());
});
