#![no_main]

use libfuzzer_sys::fuzz_target;

use dualize::estimator::parse_estimate;
use dualize::scheduler::{distribute_tasks, schedule_makespan};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(sizes) = parse_estimate(text) else {
        return;
    };
    // Parsed estimates are always schedulable on one worker, and the greedy
    // bound holds for any feasible worker count.
    for p in [1, 2, sizes.len()] {
        if p > sizes.len() {
            continue;
        }
        let schedule = distribute_tasks(p, &sizes).expect("parsed sizes are valid");
        let total: f64 = sizes.iter().sum();
        let max = sizes.iter().copied().fold(0.0, f64::max);
        assert!(schedule_makespan(&schedule) <= total / p as f64 + max + 1e-9);
    }
});
