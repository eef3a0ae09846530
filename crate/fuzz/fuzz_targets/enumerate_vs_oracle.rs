#![no_main]

use libfuzzer_sys::fuzz_target;

use dualize::oracle::brute_force_dualize;
use dualize::runcm;
use dualize::{BoolMatrix, Covering};

// Differential target: on tiny matrices decoded from the raw bytes, the
// enumeration must agree exactly with the brute-force dualizer.
fuzz_target!(|data: &[u8]| {
    if data.len() < 2 {
        return;
    }
    let m = (data[0] % 6 + 1) as usize;
    let n = (data[1] % 10 + 1) as usize;
    let bits = &data[2..];
    if bits.len() * 8 < m * n {
        return;
    }
    let mat = BoolMatrix::from_fn(m, n, |i, j| {
        let idx = (i - 1) * n + (j - 1);
        bits[idx / 8] >> (idx % 8) & 1 == 1
    })
    .unwrap();

    let mut enumerated: Vec<Covering> = runcm::coverings(&mat).collect();
    let emitted = enumerated.len();
    enumerated.sort();
    enumerated.dedup();
    assert_eq!(enumerated.len(), emitted, "duplicate covering emitted");

    let expected = brute_force_dualize(&mat).expect("n is under the cap");
    assert_eq!(enumerated, expected, "enumeration differs from oracle");

    // Per-subtask streams partition the full output.
    let mut by_subtask: Vec<Covering> = Vec::new();
    for j in 1..=n {
        for covering in runcm::subtask_coverings(&mat, j).unwrap() {
            assert_eq!(covering.least(), Some(j as u32));
            by_subtask.push(covering);
        }
    }
    by_subtask.sort();
    assert_eq!(by_subtask, expected, "subtask union differs");
});
