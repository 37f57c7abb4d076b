use alloc::string::ToString;
use alloc::vec::Vec;

use dashu_int::IBig;
use num_complex::Complex64;

use crate::error::Result;
use crate::kernels::{Alpha, Family, FamilySpec, FractionalLaplacian};
use crate::mp::{BigComplex, BigReal, PrecisionContext};
use crate::opmatrix::{MatrixMeta, NodeSet, OperatorMatrix};

/// `-Γ(1+α) (ix+1)^-α Σ_(k=1..n) C(n,k) C(-1-α,k-1) (2/(ix+1))^k`, from scratch.
fn direct_sum(n: u64, alpha: &BigReal, gamma: &BigReal, x: &BigReal, ctx: &PrecisionContext) -> BigComplex {
    let w = BigComplex::new(BigReal::one(ctx), x.clone());
    let z = w.recip().mul_i64(2);
    let wide = ctx.widened(n as u32 + 8);
    let minus_1_a = (-alpha).add_i64(-1);
    let mut zk = z.clone();
    let mut cn = IBig::from(n);
    let mut ca = BigReal::one(ctx);
    let mut s = BigComplex::zero(ctx);
    for k in 1..=n {
        let coeff = BigReal::from_ibig(cn.clone(), &wide).0 * &ca;
        s = s + zk.mul_real(&coeff);
        zk = &zk * &z;
        cn = cn * IBig::from(n - k) / IBig::from(k + 1);
        ca = (ca * minus_1_a.add_i64(-(k as i64 - 1))).div_i64(k as i64);
    }
    (s * w.powf(&-alpha)).mul_real(&-gamma)
}

/// The operator matrix built one entry at a time with no shared factors:
/// the Higgins family through the defining binomial sum, the Christov family
/// through its expanded polynomial form, and the real families through their
/// trigonometric forms.
pub fn per_entry_reference(
    family: Family,
    alpha: &Alpha,
    nodes: &NodeSet,
    cols: usize,
    ctx: &PrecisionContext,
) -> Result<OperatorMatrix> {
    let rows = nodes.len();
    let op = FractionalLaplacian::with_table(alpha, ctx, cols + 1);
    let mut data = Vec::with_capacity(rows * cols);
    let mut overflow = 0;
    for x in nodes.values() {
        let x = x.at(ctx);
        for n in 1..=cols as i64 {
            let v = match family {
                Family::Higgins => direct_sum(n as u64, op.alpha(), op.gamma(), &x, ctx),
                Family::Christov => op.mu_expanded(n, &x),
                _ => BigComplex::from_real(op.real_family(FamilySpec::new(family, n)?, &x)?),
            };
            let (z, of): (Complex64, bool) = v.to_double();
            overflow += of as usize;
            data.push(z);
        }
    }
    let meta = MatrixMeta {
        family,
        alpha: alpha.token().to_string(),
        digits: ctx.digits(),
        node_rule: nodes.rule().to_string(),
        overflow,
    };
    OperatorMatrix::from_parts(rows, cols, data, nodes.to_f64(), meta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mp::gamma;
    use crate::opmatrix::{build_matrix, make_nodes};
    use crate::oracle::discrepancy;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d).unwrap()
    }

    #[test]
    fn single_node() {
        let k = ctx(30);
        let a = Alpha::parse("0.8").unwrap();
        let m = per_entry_reference(Family::Higgins, &a, &make_nodes(1, &k), 1, &k).unwrap();
        let g = gamma(&a.value(&k).add_i64(1), &k).unwrap().to_f64();
        assert!((m.entry(0, 1) - Complex64::new(-2.0 * g, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn agrees_with_fast_assembly() {
        let k = ctx(40);
        for (fam, a) in [
            (Family::Higgins, "1/2"),
            (Family::Christov, "sqrt(3)"),
            (Family::CosHiggins, "0.3"),
            (Family::SinHiggins, "1.5"),
            (Family::CosChristov, "1"),
            (Family::SinChristov, "1.9"),
        ] {
            let a = Alpha::parse(a).unwrap();
            let nodes = make_nodes(4, &k);
            let r = per_entry_reference(fam, &a, &nodes, 4, &k).unwrap();
            let b = build_matrix(fam, &a, &nodes, 4, &k).unwrap();
            let d = discrepancy(&b, &r).unwrap();
            assert!(d < 2f64.powi(-52) * 4.0, "{fam}: {d}");
        }
    }

    #[test]
    fn near_two_stays_finite() {
        let k = ctx(30);
        let a = Alpha::parse("1.95").unwrap();
        let m = per_entry_reference(Family::Higgins, &a, &make_nodes(8, &k), 8, &k).unwrap();
        assert_eq!(m.meta.overflow, 0);
        assert!(m.data().iter().all(|z| z.re.is_finite() && z.im.is_finite()));
    }
}
