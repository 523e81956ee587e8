use dfsum_core::{lp_quasinorm, make_grid, sample};

// (∬ |cos x|^{1/2} dx dy)² = (2π · 4 ∫_0^{π/2} cos^{1/2} t dt)², evaluated
// to 30 digits with mpmath.
const LP_HALF_ABS_COS: f64 = 906.765_575_678_827_8;

#[test]
fn lp_half_of_abs_cos_matches_reference() {
    let grid = make_grid(1 << 20, 4).unwrap();
    let f = sample(|x, _| x.cos().abs(), &grid).unwrap();
    let v = lp_quasinorm(&f, 0.5).unwrap();
    assert!((v - LP_HALF_ABS_COS).abs() <= 1e-6 * LP_HALF_ABS_COS, "{v}");
}
