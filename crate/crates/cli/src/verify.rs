//! Verification suites run by `fraclap verify`.

use std::fmt;
use std::str::FromStr;

use fraclap_core::kernels::{flap_limit_identity, Alpha, Family, FamilySpec, FractionalLaplacian, LimitKind};
use fraclap_core::opmatrix::{build_matrix, build_matrix_with, make_nodes, Assembly};
use fraclap_core::oracle::{discrepancy, flap_quadrature, per_entry_reference, QuadratureSpec};
use fraclap_core::{BigComplex, BigReal, PrecisionContext};
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    LimitIdentities,
    AlphaOneIdentity,
    OracleAgreement,
    CrossForm,
    Symmetry,
    Assembly,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::LimitIdentities,
        Suite::AlphaOneIdentity,
        Suite::OracleAgreement,
        Suite::CrossForm,
        Suite::Symmetry,
        Suite::Assembly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LimitIdentities => "limit-identities",
            Suite::AlphaOneIdentity => "alpha-one-identity",
            Suite::OracleAgreement => "oracle-agreement",
            Suite::CrossForm => "cross-form",
            Suite::Symmetry => "symmetry",
            Suite::Assembly => "assembly",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|v| v.name()).collect();
                format!("unknown suite `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failures: usize,
    /// Largest error seen, in the suite's own metric.
    pub worst: f64,
    pub tolerance: f64,
    /// First failing case, if any.
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checks > 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Run only these suites; all when empty.
    pub only: Vec<Suite>,
    /// Perturb the computed side of these suites by a relative `1e-6`.
    pub inject: Vec<Suite>,
    pub seed: u64,
}

struct Tally {
    suite: Suite,
    tolerance: f64,
    inject: bool,
    checks: usize,
    failures: usize,
    worst: f64,
    first_failure: Option<String>,
}

impl Tally {
    fn new(suite: Suite, tolerance: f64, opts: &VerifyOptions) -> Self {
        Self {
            suite,
            tolerance,
            inject: opts.inject.contains(&suite),
            checks: 0,
            failures: 0,
            worst: 0.0,
            first_failure: None,
        }
    }

    fn perturb(&self, z: Complex64) -> Complex64 {
        if self.inject {
            z * (1.0 + 1e-6) + Complex64::new(1e-6, 0.0)
        } else {
            z
        }
    }

    /// Records `err` against the tolerance; `what` names the case.
    fn record(&mut self, err: f64, what: impl FnOnce() -> String) {
        self.checks += 1;
        if err.is_nan() || err > self.worst {
            self.worst = err;
        }
        if !(err < self.tolerance) {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(format!("{} (error {err:.3e})", what()));
            }
        }
    }

    fn rel(&mut self, got: Complex64, want: Complex64, what: impl FnOnce() -> String) {
        let got = self.perturb(got);
        let err = if want.norm() == 0.0 { got.norm() } else { (got - want).norm() / want.norm() };
        self.record(err, what);
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            checks: self.checks,
            failures: self.failures,
            worst: self.worst,
            tolerance: self.tolerance,
            first_failure: self.first_failure,
        }
    }
}

fn ctx(digits: u32) -> PrecisionContext {
    PrecisionContext::new(digits).expect("digits above the floor")
}

fn alpha(token: &str) -> Alpha {
    Alpha::parse(token).expect("built-in alpha")
}

fn limit_block(t: &mut Tally, kinds: &[(&str, LimitKind)]) {
    let k = ctx(40);
    let nodes = make_nodes(32, &k);
    for &(a, kind) in kinds {
        let op = FractionalLaplacian::with_table(&alpha(a), &k, 33);
        for x in nodes.values() {
            for n in 1..=32 {
                let got = op.lambda(n, x).to_c64();
                let want = flap_limit_identity(kind, n, x, &k).to_c64();
                t.rel(got, want, || format!("alpha={a} n={n} x={:.6}", x.to_f64()));
            }
        }
    }
}

/// `α ∈ {0, 2}`: `λ_n - 1` and `-λ_n''`, `n = 1..32` on 32 nodes.
pub fn limit_identities(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new(Suite::LimitIdentities, 1e-12, opts);
    limit_block(&mut t, &[("0", LimitKind::Alpha0), ("2", LimitKind::Alpha2)]);
    t.finish()
}

/// `α = 1`: `i sgn(n) λ_n'`, `n = 1..32` on 32 nodes.
pub fn alpha_one_identity(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new(Suite::AlphaOneIdentity, 1e-12, opts);
    limit_block(&mut t, &[("1", LimitKind::Alpha1)]);
    t.finish()
}

/// Adaptive quadrature of the singular integral against the closed form.
pub fn oracle_agreement(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new(Suite::OracleAgreement, 1e-6, opts);
    let k = ctx(30);
    let spec = QuadratureSpec::default();
    for a in ["0.5", "1.0", "1.5"] {
        let al = alpha(a);
        let op = FractionalLaplacian::new(&al, &k);
        for n in [1i64, 2, 3, 5] {
            for x in [0.0, 1.0, -1.0, 3.0] {
                let want = op.lambda(n, &BigReal::from_f64(x, &k)).to_c64();
                match flap_quadrature(n, al.approx_f64(), x, &spec) {
                    Ok(got) => t.rel(got, want, || format!("alpha={a} n={n} x={x}")),
                    Err(e) => t.record(f64::INFINITY, || format!("alpha={a} n={n} x={x}: {e}")),
                }
            }
        }
    }
    t.finish()
}

fn random_alpha(rng: &mut StdRng) -> Alpha {
    match rng.gen_range(0..4) {
        0 => alpha("sqrt(3)"),
        1 => alpha(&format!("{}/{}", rng.gen_range(1..40), 20)),
        _ => alpha(&format!("{:.4}", rng.gen_range(0.0001..1.9999))),
    }
}

/// Hypergeometric vs expanded forms, and real families vs Re/Im of the
/// complex kernels, on 200 random samples.
pub fn cross_form(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new(Suite::CrossForm, 1e-30, opts);
    let k = ctx(50);
    let mut rng = StdRng::seed_from_u64(opts.seed);
    for _ in 0..200 {
        let a = random_alpha(&mut rng);
        let op = FractionalLaplacian::new(&a, &k);
        let x = BigReal::from_f64(rng.gen_range(-6.0..6.0), &k);
        let n: i64 = rng.gen_range(-30..=30);
        let label = |what: &str| format!("{what} alpha={} n={n} x={:.6}", a.token(), x.to_f64());
        let big_rel = |t: &mut Tally, got: BigComplex, want: BigComplex, what: String| {
            let got = if t.inject { got.mul_real(&BigReal::from_f64(1.0 + 1e-6, &k)) } else { got };
            let d = (&got - &want).abs();
            let err = if want.is_zero() { d.to_f64() } else { (d / want.abs()).to_f64() };
            t.record(err, || what);
        };
        match op.lambda_expanded(n, &x) {
            Ok(e) => big_rel(&mut t, e, op.lambda(n, &x), label("lambda")),
            Err(_) => debug_assert_eq!(n, 0),
        }
        big_rel(&mut t, op.mu_expanded(n, &x), op.mu(n, &x), label("mu"));
        let m = n.abs();
        let pairs = [
            (Family::CosHiggins, op.lambda(m, &x).re),
            (Family::SinHiggins, op.lambda(m + 1, &x).im),
            (Family::CosChristov, op.mu(m, &x).re),
            (Family::SinChristov, -op.mu(m, &x).im),
        ];
        for (f, want) in pairs {
            let got = op.real_family(FamilySpec { family: f, n: m }, &x).expect("n >= 0");
            big_rel(&mut t, BigComplex::from_real(got), BigComplex::from_real(want), label(f.name()));
        }
    }
    t.finish()
}

/// Conjugate symmetry in `n` and reflection symmetry in `x`.
pub fn symmetry(opts: &VerifyOptions) -> SuiteReport {
    let mut t = Tally::new(Suite::Symmetry, 1e-14, opts);
    let k = ctx(40);
    for a in ["1/2", "1", "sqrt(3)", "1.9"] {
        let op = FractionalLaplacian::new(&alpha(a), &k);
        for x in [0.0, 0.3, 1.0, 2.5, 17.0] {
            let xp = BigReal::from_f64(x, &k);
            let xm = BigReal::from_f64(-x, &k);
            for n in 1..=20i64 {
                let l = op.lambda(n, &xp).to_c64();
                t.rel(op.lambda(-n, &xp).to_c64(), l.conj(), || format!("lambda_-n alpha={a} n={n} x={x}"));
                t.rel(op.lambda(n, &xm).to_c64(), l.conj(), || format!("lambda(-x) alpha={a} n={n} x={x}"));
                let m = op.mu(n, &xp).to_c64();
                t.rel(op.mu(n, &xm).to_c64(), m.conj(), || format!("mu(-x) alpha={a} n={n} x={x}"));
                t.rel(op.mu(-1 - n, &xp).to_c64(), -m.conj(), || format!("mu_-1-n alpha={a} n={n} x={x}"));
            }
        }
    }
    t.finish()
}

/// Fast assembly against the per-entry reference, both factorisations.
pub fn assembly(opts: &VerifyOptions) -> SuiteReport {
    let n = 32;
    let mut t = Tally::new(Suite::Assembly, f64::EPSILON * n as f64, opts);
    let k = ctx(40);
    let nodes = make_nodes(n, &k);
    for a in ["1/2", "sqrt(3)"] {
        let al = alpha(a);
        let reference = per_entry_reference(Family::Higgins, &al, &nodes, n, &k).expect("reference");
        for asm in [Assembly::Hadamard, Assembly::Diagonal] {
            let mut fast = build_matrix_with(Family::Higgins, &al, &nodes, n, &k, asm).expect("build");
            if t.inject {
                let data: Vec<_> = fast.data().iter().map(|z| t.perturb(*z)).collect();
                fast = fraclap_core::opmatrix::OperatorMatrix::from_parts(n, n, data, fast.nodes().to_vec(), fast.meta)
                    .expect("same shape");
            }
            let d = discrepancy(&fast, &reference).unwrap_or(f64::INFINITY);
            t.record(d, || format!("higgins alpha={a} {asm:?}"));
        }
        for f in [Family::Christov, Family::CosHiggins, Family::SinChristov] {
            let fast = build_matrix(f, &al, &nodes, 12, &k).expect("build");
            let reference = per_entry_reference(f, &al, &nodes, 12, &k).expect("reference");
            let d = discrepancy(&fast, &reference).unwrap_or(f64::INFINITY);
            t.record(d, || format!("{f} alpha={a}"));
        }
    }
    t.finish()
}

pub fn run_suite(s: Suite, opts: &VerifyOptions) -> SuiteReport {
    match s {
        Suite::LimitIdentities => limit_identities(opts),
        Suite::AlphaOneIdentity => alpha_one_identity(opts),
        Suite::OracleAgreement => oracle_agreement(opts),
        Suite::CrossForm => cross_form(opts),
        Suite::Symmetry => symmetry(opts),
        Suite::Assembly => assembly(opts),
    }
}

pub fn run_all(opts: &VerifyOptions) -> Vec<SuiteReport> {
    let selected: Vec<Suite> = if opts.only.is_empty() {
        Suite::ALL.to_vec()
    } else {
        Suite::ALL.into_iter().filter(|s| opts.only.contains(s)).collect()
    };
    selected.into_iter().map(|s| run_suite(s, opts)).collect()
}

pub fn render_table(reports: &[SuiteReport]) -> String {
    let mut s = format!("{:<20} {:>6} {:>6} {:>11} {:>9}  result\n", "suite", "checks", "failed", "worst", "tol");
    for r in reports {
        s.push_str(&format!(
            "{:<20} {:>6} {:>6} {:>11.3e} {:>9.1e}  {}\n",
            r.suite.name(),
            r.checks,
            r.failures,
            r.worst,
            r.tolerance,
            if r.passed() { "PASS" } else { "FAIL" }
        ));
        if let Some(f) = &r.first_failure {
            s.push_str(&format!("  first failure in {}: {f}\n", r.suite.name()));
        }
    }
    s
}
