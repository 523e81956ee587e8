mod common;

use dfsum_core::{
    coefficients, make_grid, modified_partial_sum, oracle_partial_sum, ConjugacyFlag,
};

#[test]
fn spectral_sums_match_kernel_convolution() {
    let grid = make_grid(64, 64).unwrap();
    let degrees = [(0, 0), (1, 3), (4, 4), (8, 2), (8, 8)];
    let mut worst = 0.0_f64;
    for seed in 0..10 {
        let f = common::random_poly(grid, 8, 8, 100 + seed);
        let spec = coefficients(&f, 31, 31).unwrap();
        for flag in ConjugacyFlag::ALL {
            for (mod_x, mod_y) in [(false, false), (true, false), (false, true), (true, true)] {
                for &(n, m) in &degrees {
                    if (mod_x && n == 0) || (mod_y && m == 0) {
                        continue;
                    }
                    let fast = modified_partial_sum(&spec, n, m, mod_x, mod_y, flag).unwrap();
                    let slow = oracle_partial_sum(&f, n, m, flag, mod_x, mod_y).unwrap();
                    worst = worst.max(fast.sup_distance(&slow).unwrap());
                }
            }
        }
    }
    assert!(worst <= 1e-8, "worst sup discrepancy {worst:e}");
}

#[test]
fn oracle_rejects_underresolved_degrees() {
    let grid = make_grid(16, 64).unwrap();
    let f = common::random_poly(grid, 2, 2, 7);
    assert!(oracle_partial_sum(&f, 3, 1, ConjugacyFlag::NONE, false, false).is_ok());
    assert!(oracle_partial_sum(&f, 4, 1, ConjugacyFlag::NONE, false, false).is_err());
}
