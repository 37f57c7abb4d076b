use fraclap_core::adaptive::{auto_digits_matrix, auto_digits_scalar, EscalationConfig};
use fraclap_core::kernels::{Alpha, Family};
use fraclap_core::opmatrix::{build_matrix, make_nodes};
use fraclap_core::oracle::{discrepancy, per_entry_reference};
use fraclap_core::specfun::{hyp2f1_terminating, LowerParam};
use fraclap_core::{BigComplex, BigReal, ExactParam, PrecisionContext};

fn alpha(t: &str) -> Alpha {
    Alpha::parse(t).unwrap()
}

fn hyp_399(a: &str, digits: u32) -> BigReal {
    let ctx = PrecisionContext::new(digits).unwrap();
    let b = ExactParam::parse(a).unwrap().materialize(&ctx).add_i64(1);
    let two = BigComplex::from_real(BigReal::from_i64(2, &ctx));
    let v = hyp2f1_terminating(399, &b, LowerParam::Two, &two, &ctx);
    assert!(v.im.is_zero());
    v.re
}

#[test]
fn terminating_sums_at_high_precision() {
    let v = hyp_399("3/2", 300);
    assert_eq!(v.to_scientific(6), "-2.12769e1");
    let v = hyp_399("sqrt(3)", 300);
    assert_eq!(v.to_scientific(24), "-8.41742043148953740804326e1");
    // too few digits for the cancellation: the sum is garbage
    let low = hyp_399("sqrt(3)", 100).to_f64();
    assert!((low + 84.174_204_314_895_37).abs() > 1.0);
}

#[test]
fn scalar_digits_at_400() {
    let r = auto_digits_scalar(400, &alpha("sqrt(3)"), &EscalationConfig::default(), 16).unwrap();
    let line = 0.47598 * 400.0 + 6.6938;
    assert!((r.digits as f64 - line).abs() <= 15.0, "{} vs {line}", r.digits);
}

#[test]
fn digits_barely_depend_on_alpha() {
    let cfg = EscalationConfig::default().coarse(8);
    let d: Vec<u32> = ["0.25", "1.0", "sqrt(3)", "1.9"]
        .iter()
        .map(|a| auto_digits_matrix(Family::Higgins, 100, 100, &alpha(a), &cfg, 16).unwrap().digits)
        .collect();
    let spread = d.iter().max().unwrap() - d.iter().min().unwrap();
    assert!(spread <= 5, "{d:?}");
}

#[test]
#[ignore = "minutes: 330x330 escalation"]
fn matrix_digits_at_330() {
    let cfg = EscalationConfig::default().coarse(8);
    let r = auto_digits_matrix(Family::Higgins, 330, 330, &alpha("sqrt(3)"), &cfg, 16).unwrap();
    assert!((150..=180).contains(&r.digits), "{}", r.digits);
}

#[test]
#[ignore = "tens of minutes: 500x500 escalation"]
fn matrix_digits_at_500() {
    let cfg = EscalationConfig::default().coarse(8);
    let r = auto_digits_matrix(Family::Higgins, 500, 500, &alpha("sqrt(3)"), &cfg, 200).unwrap();
    let line = 0.47777 * 500.0 + 7.3617;
    assert!((r.digits as f64 - line).abs() <= 15.0, "{} vs {line}", r.digits);
}

#[test]
#[ignore = "minutes: 400x400 per-entry reference"]
fn fast_vs_per_entry_at_400() {
    let a = alpha("sqrt(3)");
    let ctx = PrecisionContext::new(215).unwrap();
    let nodes = make_nodes(400, &ctx);
    let fast = build_matrix(Family::Higgins, &a, &nodes, 400, &ctx).unwrap();
    let slow = per_entry_reference(Family::Higgins, &a, &nodes, 400, &ctx).unwrap();
    assert!(discrepancy(&fast, &slow).unwrap() < 1e-10);
}
