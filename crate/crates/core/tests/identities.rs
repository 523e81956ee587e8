mod common;

use dfsum_core::means::{
    decomposition_residual_1d, decomposition_residual_2d, hardy_identity_residual,
};
use dfsum_core::{coefficients, make_grid, ConjugacyFlag};

#[test]
fn hardy_identity_on_random_polynomials() {
    for seed in 0..3 {
        let spec = common::random_spec(64, 6, 6, 16, seed);
        let r = hardy_identity_residual(&spec, 6, 6, ConjugacyFlag::BOTH).unwrap();
        assert!(r.sup <= 1e-9, "{r:?}");
    }
}

#[test]
fn one_dimensional_decomposition_scan() {
    let grid = make_grid(128, 4).unwrap();
    for seed in 0..4 {
        let f = common::random_poly(grid, 5, 0, seed);
        let spec = coefficients(&f, 40, 0).unwrap();
        for n in 0..=12 {
            for k in 0..=n {
                let r = decomposition_residual_1d(&spec, n, k).unwrap();
                assert!(r.sup <= 1e-9, "n={n} k={k} {r:?}");
            }
        }
    }
}

#[test]
fn two_dimensional_decomposition_all_inner_indices() {
    let spec = common::random_spec(32, 3, 3, 10, 11);
    for i in 0..=4 {
        for j in 0..=4 {
            let r = decomposition_residual_2d(&spec, 4, 4, i, j).unwrap();
            assert!(r.worst_sup() <= 1e-9, "i={i} j={j} {r:?}");
        }
    }
}
