//! Schedule-independence and a coarse edge-count sanity check.

use graph_core::write_graph6;
use random_models::{gnp, random_regular, GnpParams, Seed};
use rayon::prelude::*;

#[test]
fn trials_are_schedule_independent() {
    let params = GnpParams::direct(24, 0.4);
    let seed = Seed::new(0xFEED);
    let serial: Vec<String> = (0..32u64)
        .map(|t| write_graph6(&gnp(&params, &seed, t).unwrap()))
        .collect();
    let parallel: Vec<String> = (0..32u64)
        .into_par_iter()
        .map(|t| write_graph6(&gnp(&params, &seed, t).unwrap()))
        .collect();
    assert_eq!(serial, parallel);
}

#[test]
fn gnp_edge_count_concentrates() {
    // Binomial mean at n = 40, p = 0.5 is C(40,2)/2 = 390. A 5% band over
    // 200 trials is a generator sanity check, not a distributional claim.
    let params = GnpParams::direct(40, 0.5);
    let seed = Seed::new(2024);
    let total: usize = (0..200u64)
        .map(|t| gnp(&params, &seed, t).unwrap().edge_count())
        .sum();
    let mean = total as f64 / 200.0;
    assert!(
        (mean - 390.0).abs() < 390.0 * 0.05,
        "mean edge count {mean} strays from 390"
    );
}

#[test]
fn regular_samples_are_simple_and_regular() {
    let seed = Seed::new(5);
    for (n, d) in [(8, 3), (10, 4), (12, 5), (16, 3)] {
        for trial in 0..10 {
            let g = random_regular(n, d, &seed, trial).unwrap();
            assert!((0..n).all(|v| g.degree(v) == d), "n={n} d={d}");
            assert!((0..n).all(|v| !g.adjacent(v, v)));
        }
    }
}
