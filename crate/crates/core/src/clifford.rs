//! Cl(4,2) realised by antilinear operators on the spinor space.
//!
//! Each vector x of E(4,2) acts on spinors as the antilinear map
//! `f ↦ X(x)·conj(f)` with `X(x) = Σ_α x^α Γ_α` and `Γ_α = Σ_α G`. The
//! composition of two antilinear maps is complex-linear, so it gets its own
//! type, [`LinearOp`].

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use nalgebra::Matrix4;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{q_form, Spinor, Tolerance, Vec6, G_DIAG, Q_DIAG};

pub type Mat4 = Matrix4<Complex64>;

const O: Complex64 = Complex64::new(0.0, 0.0);
const P: Complex64 = Complex64::new(1.0, 0.0);
const M: Complex64 = Complex64::new(-1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);
const J: Complex64 = Complex64::new(0.0, -1.0);

type Listing = [[Complex64; 4]; 4];

const SIGMA_LISTING: [Listing; 6] = [
    [[O, O, J, O], [O, O, O, I], [I, O, O, O], [O, J, O, O]],
    [[O, O, M, O], [O, O, O, M], [P, O, O, O], [O, P, O, O]],
    [[O, O, O, I], [O, O, I, O], [O, J, O, O], [J, O, O, O]],
    [[O, I, O, O], [J, O, O, O], [O, O, O, J], [O, O, I, O]],
    [[O, O, O, P], [O, O, M, O], [O, P, O, O], [M, O, O, O]],
    [[O, P, O, O], [M, O, O, O], [O, O, O, P], [O, O, M, O]],
];

const GAMMA_LISTING: [Listing; 6] = [
    [[O, O, I, O], [O, O, O, J], [I, O, O, O], [O, J, O, O]],
    [[O, O, P, O], [O, O, O, P], [P, O, O, O], [O, P, O, O]],
    [[O, O, O, J], [O, O, J, O], [O, J, O, O], [J, O, O, O]],
    [[O, I, O, O], [J, O, O, O], [O, O, O, I], [O, O, J, O]],
    [[O, O, O, M], [O, O, P, O], [O, P, O, O], [M, O, O, O]],
    [[O, P, O, O], [M, O, O, O], [O, O, O, M], [O, O, P, O]],
];

fn from_listing(l: &Listing) -> Mat4 {
    Mat4::from_fn(|i, j| l[i][j])
}

/// The metric G as a matrix.
pub fn g_matrix() -> Mat4 {
    Mat4::from_diagonal(&nalgebra::Vector4::from_fn(|i, _| {
        Complex64::new(G_DIAG[i], 0.0)
    }))
}

/// Totally antisymmetric symbol on four 0-based indices, ε(0,1,2,3) = +1.
pub fn levi_civita(i: usize, j: usize, k: usize, l: usize) -> f64 {
    let p = [i, j, k, l];
    for a in 0..4 {
        for b in (a + 1)..4 {
            if p[a] == p[b] {
                return 0.0;
            }
        }
    }
    let mut sign = 1.0;
    for a in 0..4 {
        for b in (a + 1)..4 {
            if p[a] > p[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// The six antisymmetric Σ_α and the six Γ_α.
#[derive(Debug, Clone, PartialEq)]
pub struct SigmaTable {
    pub sigma: [Mat4; 6],
    pub gamma: [Mat4; 6],
}

impl SigmaTable {
    pub fn standard() -> &'static SigmaTable {
        static TABLE: OnceLock<SigmaTable> = OnceLock::new();
        TABLE.get_or_init(|| SigmaTable {
            sigma: std::array::from_fn(|a| from_listing(&SIGMA_LISTING[a])),
            gamma: std::array::from_fn(|a| from_listing(&GAMMA_LISTING[a])),
        })
    }

    /// Copy of the table with Γ_α (1-based) replaced.
    pub fn with_gamma(&self, alpha: usize, m: Mat4) -> Result<SigmaTable> {
        check_index(alpha)?;
        let mut t = self.clone();
        t.gamma[alpha - 1] = m;
        Ok(t)
    }
}

fn check_index(alpha: usize) -> Result<()> {
    if (1..=6).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(alpha))
    }
}

/// Σ_α, alpha in 1..=6.
pub fn sigma(alpha: usize) -> Result<Mat4> {
    check_index(alpha)?;
    Ok(SigmaTable::standard().sigma[alpha - 1])
}

/// Antilinear operator `v ↦ m·conj(v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntilinearOp {
    pub m: Mat4,
}

/// Complex-linear operator `v ↦ m·v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearOp {
    pub m: Mat4,
}

impl AntilinearOp {
    pub fn new(m: Mat4) -> Self {
        Self { m }
    }

    pub fn zero() -> Self {
        Self { m: Mat4::zeros() }
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        apply(self, v)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            m: self.m * Complex64::new(s, 0.0),
        }
    }
}

impl Add for AntilinearOp {
    type Output = AntilinearOp;
    fn add(self, rhs: Self) -> Self {
        Self { m: self.m + rhs.m }
    }
}

impl Sub for AntilinearOp {
    type Output = AntilinearOp;
    fn sub(self, rhs: Self) -> Self {
        Self { m: self.m - rhs.m }
    }
}

impl Neg for AntilinearOp {
    type Output = AntilinearOp;
    fn neg(self) -> Self {
        Self { m: -self.m }
    }
}

impl LinearOp {
    pub fn new(m: Mat4) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self {
            m: Mat4::identity(),
        }
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        let mut out = [O; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|j| self.m[(i, j)] * v[j]).sum();
        }
        Spinor(out)
    }

    pub fn trace(&self) -> Complex64 {
        self.m.trace()
    }

    pub fn det(&self) -> Complex64 {
        self.m.determinant()
    }
}

impl Mul for LinearOp {
    type Output = LinearOp;
    fn mul(self, rhs: Self) -> Self {
        Self { m: self.m * rhs.m }
    }
}

impl Add for LinearOp {
    type Output = LinearOp;
    fn add(self, rhs: Self) -> Self {
        Self { m: self.m + rhs.m }
    }
}

impl Sub for LinearOp {
    type Output = LinearOp;
    fn sub(self, rhs: Self) -> Self {
        Self { m: self.m - rhs.m }
    }
}

/// Γ_α as an antilinear operator, alpha in 1..=6.
pub fn gamma(alpha: usize) -> Result<AntilinearOp> {
    check_index(alpha)?;
    Ok(AntilinearOp::new(SigmaTable::standard().gamma[alpha - 1]))
}

fn gamma_unchecked(alpha0: usize) -> &'static Mat4 {
    &SigmaTable::standard().gamma[alpha0]
}

pub fn apply(a: &AntilinearOp, v: &Spinor) -> Spinor {
    let mut out = [O; 4];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (0..4).map(|j| a.m[(i, j)] * v[j].conj()).sum();
    }
    Spinor(out)
}

/// A∘B, represented by `A.m · conj(B.m)`.
pub fn compose(a: &AntilinearOp, b: &AntilinearOp) -> LinearOp {
    LinearOp::new(a.m * b.m.map(|z| z.conj()))
}

/// The adjoint with respect to the pseudo-Hermitian form, defined by
/// `(A v | w) = (A* w | v)`. For `v ↦ m·conj(v)` this is `G·ᵗm·G`.
pub fn antilinear_adjoint(a: &AntilinearOp) -> AntilinearOp {
    let g = g_matrix();
    AntilinearOp::new(g * a.m.transpose() * g)
}

/// X(x) = Σ x^α Γ_α.
pub fn x_matrix(x: &Vec6) -> AntilinearOp {
    let mut m = Mat4::zeros();
    for a in 0..6 {
        if x[a] != 0.0 {
            m += gamma_unchecked(a) * Complex64::new(x[a], 0.0);
        }
    }
    AntilinearOp::new(m)
}

fn frobenius(m: &Mat4) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Inverse of [`x_matrix`] on its image.
///
/// The Γ_α are mutually orthogonal under `Re tr(A^† B)` with squared norm 4,
/// so the least-squares coefficients are plain projections.
pub fn vector_from_op(a: &AntilinearOp) -> Result<Vec6> {
    vector_from_op_with(a, &Tolerance::default())
}

pub fn vector_from_op_with(a: &AntilinearOp, tol: &Tolerance) -> Result<Vec6> {
    let (x, residual) = gamma_fit(&a.m);
    if residual > tol.rank_rel_tol * frobenius(&a.m).max(1.0) {
        return Err(Error::NotInGammaSpan { residual });
    }
    Ok(x)
}

/// Least-squares coordinates of `m` in the real Γ span, and the residual norm.
pub(crate) fn gamma_fit(m: &Mat4) -> (Vec6, f64) {
    let mut x = Vec6::ZERO;
    for a in 0..6 {
        let g = gamma_unchecked(a);
        let ip: f64 = g.iter().zip(m.iter()).map(|(p, q)| (p.conj() * q).re).sum();
        x[a] = ip / 4.0;
    }
    let residual = frobenius(&(m - x_matrix(&x).m));
    (x, residual)
}

/// Outcome of an identity check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub name: String,
    pub checks_run: usize,
    pub max_deviation: f64,
    pub tol: f64,
    pub passed: bool,
    /// Location of the largest deviation, if any was nonzero.
    pub worst: Option<String>,
}

impl Report {
    pub(crate) fn new(name: &str, tol: f64) -> Self {
        Self {
            name: name.to_string(),
            checks_run: 0,
            max_deviation: 0.0,
            tol,
            passed: true,
            worst: None,
        }
    }

    pub(crate) fn record(&mut self, deviation: f64, at: impl FnOnce() -> String) {
        self.checks_run += 1;
        if deviation > self.max_deviation || deviation.is_nan() {
            self.max_deviation = deviation;
            self.worst = Some(at());
        }
        self.passed = self.max_deviation <= self.tol;
    }

    pub(crate) fn merge(&mut self, other: &Report) {
        self.checks_run += other.checks_run;
        if other.max_deviation > self.max_deviation || other.max_deviation.is_nan() {
            self.max_deviation = other.max_deviation;
            self.worst = other.worst.clone();
        }
        self.passed = self.max_deviation <= self.tol;
    }
}

pub(crate) fn max_entry_dev(a: &Mat4, b: &Mat4) -> f64 {
    a.iter()
        .zip(b.iter())
        .fold(0.0, |m, (p, q)| m.max((p - q).norm()))
}

/// Γ_αΓ_β + Γ_βΓ_α = 2 Q_αβ I over all 36 ordered pairs.
pub fn check_clifford_relations(tol: f64) -> Report {
    check_clifford_relations_on(SigmaTable::standard(), tol)
}

pub fn check_clifford_relations_on(table: &SigmaTable, tol: f64) -> Report {
    let mut rep = Report::new("clifford_relations", tol);
    for a in 0..6 {
        for b in 0..6 {
            let ga = AntilinearOp::new(table.gamma[a]);
            let gb = AntilinearOp::new(table.gamma[b]);
            let anti = compose(&ga, &gb).m + compose(&gb, &ga).m;
            let q = if a == b { 2.0 * Q_DIAG[a] } else { 0.0 };
            let target = Mat4::identity() * Complex64::new(q, 0.0);
            rep.record(max_entry_dev(&anti, &target), || {
                format!("({}, {})", a + 1, b + 1)
            });
        }
    }
    rep
}

/// Γ_α* = -Γ_α for every α.
pub fn check_anti_self_adjoint(tol: f64) -> Report {
    let mut rep = Report::new("anti_self_adjoint", tol);
    for a in 1..=6 {
        let g = gamma(a).expect("index in range");
        let adj = antilinear_adjoint(&g);
        rep.record(max_entry_dev(&adj.m, &(-g.m)), || format!("alpha={a}"));
    }
    rep
}

/// ½ ε^{ijkl} G_km G_ln S^{mn}, the dual appearing in the reality condition
/// of the Σ matrices.
pub fn sigma_dual(s: &Mat4) -> Mat4 {
    Mat4::from_fn(|i, j| {
        let mut acc = O;
        for k in 0..4 {
            for l in 0..4 {
                let e = levi_civita(i, j, k, l);
                if e != 0.0 {
                    acc += s[(k, l)] * (0.5 * e * G_DIAG[k] * G_DIAG[l]);
                }
            }
        }
        acc
    })
}

/// conj(Σ_α) = ½ ε G G Σ_α entrywise, and each Σ_α antisymmetric.
pub fn check_sigma_self_duality(tol: f64) -> Report {
    let mut rep = Report::new("sigma_self_duality", tol);
    for (a, s) in SigmaTable::standard().sigma.iter().enumerate() {
        let lhs = s.map(|z| z.conj());
        rep.record(max_entry_dev(&lhs, &sigma_dual(s)), || {
            format!("alpha={} duality", a + 1)
        });
        rep.record(max_entry_dev(&s.transpose(), &(-s)), || {
            format!("alpha={} antisymmetry", a + 1)
        });
    }
    rep
}

/// Σ_α G = Γ_α, exact.
pub fn check_gamma_from_sigma(tol: f64) -> Report {
    let mut rep = Report::new("gamma_from_sigma", tol);
    let t = SigmaTable::standard();
    let g = g_matrix();
    for a in 0..6 {
        rep.record(max_entry_dev(&(t.sigma[a] * g), &t.gamma[a]), || {
            format!("alpha={}", a + 1)
        });
    }
    rep
}

/// Right-hand side of the reality condition
/// `conj(X^i_j) = ½ ε^{imnk} G_mj G_nl X^l_k`.
pub fn reality_rhs(x: &Mat4) -> Mat4 {
    Mat4::from_fn(|i, j| {
        let mut acc = O;
        for m in 0..4 {
            for n in 0..4 {
                for k in 0..4 {
                    let e = levi_civita(i, m, n, k);
                    if e == 0.0 {
                        continue;
                    }
                    for l in 0..4 {
                        let g = G_DIAG[m]
                            * f64::from(u8::from(m == j))
                            * G_DIAG[n]
                            * f64::from(u8::from(n == l));
                        if g != 0.0 {
                            acc += x[(l, k)] * (0.5 * e * g);
                        }
                    }
                }
            }
        }
        acc
    })
}

/// Reality condition on an arbitrary matrix.
pub fn check_reality_condition(m: &Mat4, tol: f64) -> Report {
    let mut rep = Report::new("x_reality", tol);
    let lhs = m.map(|z| z.conj());
    let rhs = reality_rhs(m);
    for i in 0..4 {
        for j in 0..4 {
            rep.record((lhs[(i, j)] - rhs[(i, j)]).norm(), || {
                format!("entry ({}, {})", i + 1, j + 1)
            });
        }
    }
    rep
}

pub fn check_x_reality(x: &Vec6, tol: f64) -> Report {
    check_reality_condition(&x_matrix(x).m, tol)
}

/// (det X(x) as a real number, Q(x)²), plus the imaginary part of the
/// determinant that was dropped.
pub fn det_identity_full(x: &Vec6) -> (f64, f64, f64) {
    let d = x_matrix(x).m.determinant();
    let q = q_form(x);
    (d.re, q * q, d.im)
}

pub fn det_identity(x: &Vec6) -> (f64, f64) {
    let (d, q2, _) = det_identity_full(x);
    (d, q2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: usize) -> Vec6 {
        Vec6::basis(a).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn gamma_listing_examples() {
        let g2 = gamma(2).unwrap().m;
        for i in 0..4 {
            for j in 0..4 {
                let expect = matches!((i, j), (0, 2) | (1, 3) | (2, 0) | (3, 1));
                assert_eq!(g2[(i, j)], if expect { P } else { O });
            }
        }
        let g6 = gamma(6).unwrap().m;
        assert_eq!(g6[(0, 1)], P);
        assert_eq!(g6[(1, 0)], M);
        assert_eq!(g6[(2, 3)], M);
        assert_eq!(g6[(3, 2)], P);
        assert_eq!(gamma(1).unwrap().m, sigma(1).unwrap() * g_matrix());
        assert_eq!(gamma(0).unwrap_err(), Error::IndexOutOfRange(0));
        assert_eq!(gamma(7).unwrap_err(), Error::IndexOutOfRange(7));
    }

    #[test]
    fn gamma_equals_sigma_times_g_exactly() {
        assert_eq!(check_gamma_from_sigma(0.0).max_deviation, 0.0);
    }

    #[test]
    fn apply_examples() {
        let out = apply(&gamma(2).unwrap(), &Spinor::basis(1));
        assert_eq!(out, Spinor::basis(3));
        // Γ₁ · conj(i, 0, 0, 0) = -i · (column 1 of Γ₁) = -i · (0, 0, i, 0)
        let v = Spinor([c(0.0, 1.0), O, O, O]);
        let out = apply(&gamma(1).unwrap(), &v);
        assert_eq!(out, Spinor([O, O, c(1.0, 0.0), O]));
        assert_eq!(apply(&gamma(3).unwrap(), &Spinor::ZERO), Spinor::ZERO);
    }

    #[test]
    fn apply_is_conjugate_linear() {
        let v = Spinor([c(1.0, -2.0), c(0.5, 0.5), c(-1.0, 0.0), c(0.0, 3.0)]);
        let l = c(0.25, 1.5);
        let x = x_matrix(&Vec6([0.3, -1.0, 2.0, 0.7, -0.2, 1.1]));
        let lhs = apply(&x, &v.scale(l));
        let rhs = apply(&x, &v).scale(l.conj());
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn compose_examples() {
        let g1 = gamma(1).unwrap();
        let g2 = gamma(2).unwrap();
        let g4 = gamma(4).unwrap();
        assert_eq!(compose(&g1, &g1).m, Mat4::identity());
        assert_eq!(compose(&g4, &g4).m, -Mat4::identity());
        assert_eq!(compose(&g1, &g2).m + compose(&g2, &g1).m, Mat4::zeros());
    }

    #[test]
    fn compose_matches_sequential_application() {
        let a = x_matrix(&Vec6([1.0, 0.5, -0.3, 2.0, 0.0, 1.0]));
        let b = x_matrix(&Vec6([-0.4, 1.0, 1.0, 0.2, 0.9, -1.5]));
        let v = Spinor([c(1.0, 1.0), c(0.0, -1.0), c(2.0, 0.5), c(-0.7, 0.0)]);
        let seq = apply(&a, &apply(&b, &v));
        let lin = compose(&a, &b).apply(&v);
        assert!((seq - lin).norm() < 1e-12);
    }

    /// Builds the adjoint column by column from the defining identity
    /// (A v | w) = (A* w | v) on basis spinors, without the closed form.
    fn adjoint_by_definition(a: &AntilinearOp) -> Mat4 {
        // (A* e_j | e_i) = G_ii (A* e_j)_i and (A* e_j) = m* · conj(e_j) = column j of m*
        Mat4::from_fn(|i, j| {
            let lhs = crate::forms::g_form(&apply(a, &Spinor::basis(i + 1)), &Spinor::basis(j + 1));
            lhs * G_DIAG[i]
        })
    }

    #[test]
    fn adjoint_closed_form_matches_definition() {
        let a = AntilinearOp::new(Mat4::from_fn(|i, j| {
            c((i * 4 + j) as f64 * 0.3 - 1.0, (j as f64) - 0.5 * i as f64)
        }));
        let closed = antilinear_adjoint(&a).m;
        let def = adjoint_by_definition(&a);
        assert!(max_entry_dev(&closed, &def) < 1e-12);
    }

    #[test]
    fn adjoint_examples() {
        for a in 1..=6 {
            let g = gamma(a).unwrap();
            assert_eq!(antilinear_adjoint(&g).m, -g.m);
        }
        let gm = AntilinearOp::new(g_matrix());
        assert_eq!(antilinear_adjoint(&gm).m, g_matrix());
        assert_eq!(
            antilinear_adjoint(&AntilinearOp::zero()),
            AntilinearOp::zero()
        );
    }

    #[test]
    fn x_matrix_reproduces_display() {
        let x = Vec6([1.1, -0.7, 2.3, 0.4, -1.9, 0.6]);
        let (x1, x2, x3, x4, x5, x6) = (x[0], x[1], x[2], x[3], x[4], x[5]);
        let expected: [[Complex64; 4]; 4] = [
            [O, c(x6, x4), c(x2, x1), c(-x5, -x3)],
            [c(-x6, -x4), O, c(x5, -x3), c(x2, -x1)],
            [c(x2, x1), c(x5, -x3), O, c(-x6, x4)],
            [c(-x5, -x3), c(x2, -x1), c(x6, -x4), O],
        ];
        let m = x_matrix(&x).m;
        for i in 0..4 {
            for j in 0..4 {
                assert!((m[(i, j)] - expected[i][j]).norm() < 1e-15, "({i},{j})");
            }
        }
        let m4 = x_matrix(&e(4)).m;
        assert_eq!(m4[(0, 1)], I);
        assert_eq!(m4[(2, 3)], I);
        assert_eq!(x_matrix(&e(1)), gamma(1).unwrap());
        assert_eq!(x_matrix(&Vec6::ZERO), AntilinearOp::zero());
    }

    #[test]
    fn gammas_are_orthogonal_for_the_fit() {
        for a in 0..6 {
            for b in 0..6 {
                let ip: f64 = gamma_unchecked(a)
                    .iter()
                    .zip(gamma_unchecked(b).iter())
                    .map(|(p, q)| (p.conj() * q).re)
                    .sum();
                assert_eq!(ip, if a == b { 4.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn vector_from_op_examples() {
        assert_eq!(vector_from_op(&gamma(5).unwrap()).unwrap(), e(5));
        let x = Vec6([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let back = vector_from_op(&x_matrix(&x)).unwrap();
        assert!(back.max_abs_diff(&x) < 1e-12);
        let id = AntilinearOp::new(Mat4::identity());
        assert!(matches!(
            vector_from_op(&id),
            Err(Error::NotInGammaSpan { .. })
        ));
    }

    #[test]
    fn identity_is_outside_gamma_span_by_solving_fit() {
        // Independent check: the 32 x 6 real system for the coefficients of the
        // identity has no exact solution, since every Γ has zero diagonal.
        for a in 0..6 {
            for i in 0..4 {
                assert_eq!(gamma_unchecked(a)[(i, i)], O);
            }
        }
        let (_, residual) = gamma_fit(&Mat4::identity());
        assert_eq!(residual, 2.0);
    }

    #[test]
    fn clifford_relations_exact() {
        let r = check_clifford_relations(0.0);
        assert!(r.passed);
        assert_eq!(r.max_deviation, 0.0);
        assert_eq!(r.checks_run, 36);
    }

    #[test]
    fn corrupted_table_fails_at_one_one() {
        let t = SigmaTable::standard();
        let bad = t.with_gamma(1, t.gamma[0] * c(2.0, 0.0)).unwrap();
        let r = check_clifford_relations_on(&bad, 1e-9);
        assert!(!r.passed);
        assert_eq!(r.worst.as_deref(), Some("(1, 1)"));
    }

    #[test]
    fn levi_civita_signs() {
        assert_eq!(levi_civita(0, 1, 2, 3), 1.0);
        assert_eq!(levi_civita(1, 0, 2, 3), -1.0);
        assert_eq!(levi_civita(1, 2, 3, 0), -1.0);
        assert_eq!(levi_civita(0, 0, 2, 3), 0.0);
    }

    #[test]
    fn sigma_self_duality_exact() {
        let r = check_sigma_self_duality(0.0);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn reality_condition_on_basis_and_corruption() {
        for a in 1..=6 {
            assert!(check_x_reality(&e(a), 0.0).passed, "alpha={a}");
        }
        let mut m = x_matrix(&Vec6([0.5, 1.0, -1.0, 2.0, 0.3, -0.8])).m;
        m[(0, 1)] += c(0.1, 0.0);
        assert!(!check_reality_condition(&m, 1e-9).passed);
    }

    #[test]
    fn det_identity_examples() {
        assert_eq!(det_identity(&e(1)), (1.0, 1.0));
        let (d, q2) = det_identity(&Vec6([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]));
        assert!(d.abs() < 1e-15);
        assert_eq!(q2, 0.0);
        let (d, q2, im) = det_identity_full(&Vec6([1.0; 6]));
        assert!((d - 4.0).abs() < 1e-12);
        assert_eq!(q2, 4.0);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn gamma_one_determinant_by_cofactors() {
        // Γ₁ is a monomial matrix (one entry per row and column): its
        // determinant is the permutation sign times the product of entries.
        let g = gamma(1).unwrap().m;
        let perm = [2usize, 3, 0, 1];
        let mut prod = P;
        for (i, &j) in perm.iter().enumerate() {
            prod *= g[(i, j)];
        }
        let sign = levi_civita(perm[0], perm[1], perm[2], perm[3]);
        assert_eq!(prod * sign, P);
    }
}
