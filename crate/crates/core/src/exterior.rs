//! Exterior algebra of the spinor space, the antilinear Hodge star and the
//! self-dual bivectors E_α spanning a copy of E(4,2).
//!
//! A k-vector stores its full antisymmetric component array `x^{i₁…i_k}`
//! with `x = (1/k!) x^{i₁…i_k} e_{i₁}∧…∧e_{i_k}`, so `(v∧w)^{ij} = vⁱwʲ − vʲwⁱ`.

use std::ops::{Add, Sub};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::clifford::{levi_civita, SigmaTable};
use crate::error::{Error, Result};
use crate::forms::{Spinor, Tolerance, Vec6, G_DIAG};
use crate::linalg::{self, Row};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
#[cfg(test)]
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Scale applied to `Σ_α^{ij}` to get the components of `E_α`.
pub const E_ALPHA_COMPONENT_SCALE: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn factorial(n: usize) -> f64 {
    (1..=n).product::<usize>() as f64
}

fn flat(idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * 4 + i)
}

fn unflat(mut f: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = f % 4;
        f /= 4;
    }
    out
}

/// Sign of the permutation sorting `idx`, or 0 on a repeated index.
fn perm_sign(idx: &[usize]) -> f64 {
    let mut sign = 1.0;
    for a in 0..idx.len() {
        for b in (a + 1)..idx.len() {
            if idx[a] == idx[b] {
                return 0.0;
            }
            if idx[a] > idx[b] {
                sign = -sign;
            }
        }
    }
    sign
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Increasing k-subsets of {0,1,2,3}.
pub fn monomial_indices(k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..4 {
            cur.push(i);
            rec(i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, &mut Vec::new(), &mut out);
    out
}

/// An element of Λᵏ of the spinor space, k in 0..=4.
#[derive(Debug, Clone, PartialEq)]
pub struct KVector {
    grade: usize,
    comps: Vec<Complex64>,
}

pub type Bivector = KVector;

impl KVector {
    pub fn zero(grade: usize) -> Result<Self> {
        if grade > 4 {
            return Err(Error::InvalidGrade(grade));
        }
        Ok(Self {
            grade,
            comps: vec![ZERO; 4usize.pow(grade as u32)],
        })
    }

    pub fn scalar(z: Complex64) -> Self {
        Self {
            grade: 0,
            comps: vec![z],
        }
    }

    pub fn vector(s: &Spinor) -> Self {
        Self {
            grade: 1,
            comps: s.0.to_vec(),
        }
    }

    /// The volume element e = e₁∧e₂∧e₃∧e₄.
    pub fn volume() -> Self {
        Self::from_antisymmetric_fn(4, |idx| {
            Complex64::new(levi_civita(idx[0], idx[1], idx[2], idx[3]), 0.0)
        })
    }

    /// `e_{i₁}∧…∧e_{i_k}` for strictly increasing 0-based indices.
    pub fn monomial(indices: &[usize]) -> Result<Self> {
        let k = indices.len();
        if k > 4 {
            return Err(Error::InvalidGrade(k));
        }
        let mut out = Self::zero(k)?;
        for (f, c) in out.comps.iter_mut().enumerate() {
            let idx = unflat(f, k);
            let mut sorted = idx.clone();
            sorted.sort_unstable();
            if sorted == indices {
                *c = Complex64::new(perm_sign(&idx), 0.0);
            }
        }
        Ok(out)
    }

    /// Builds a k-vector from independent components given on increasing
    /// index tuples, extending antisymmetrically.
    pub fn from_independent(grade: usize, values: &[Complex64]) -> Result<Self> {
        let basis = monomial_indices(grade);
        if grade > 4 || values.len() != basis.len() {
            return Err(Error::InvalidGrade(grade));
        }
        let mut out = Self::zero(grade)?;
        for (idx, v) in basis.iter().zip(values) {
            let m = Self::monomial(idx)?;
            out = out + m.scale(*v);
        }
        Ok(out)
    }

    /// Components indexed by increasing tuples, in [`monomial_indices`] order.
    pub fn independent(&self) -> Vec<Complex64> {
        monomial_indices(self.grade)
            .iter()
            .map(|idx| self.comps[flat(idx)])
            .collect()
    }

    fn from_antisymmetric_fn(grade: usize, f: impl Fn(&[usize]) -> Complex64) -> Self {
        let n = 4usize.pow(grade as u32);
        Self {
            grade,
            comps: (0..n).map(|i| f(&unflat(i, grade))).collect(),
        }
    }

    /// Bivector with components `m[(i, j)]`; `m` should be antisymmetric.
    pub fn from_matrix(m: &crate::clifford::Mat4) -> Self {
        Self::from_antisymmetric_fn(2, |idx| m[(idx[0], idx[1])])
    }

    pub fn to_matrix(&self) -> Option<crate::clifford::Mat4> {
        (self.grade == 2).then(|| crate::clifford::Mat4::from_fn(|i, j| self.get(&[i, j])))
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn get(&self, idx: &[usize]) -> Complex64 {
        self.comps[flat(idx)]
    }

    pub fn comps(&self) -> &[Complex64] {
        &self.comps
    }

    /// The single component of a grade-0 or grade-4 element (relative to
    /// 1 or to e respectively).
    pub fn top(&self) -> Complex64 {
        match self.grade {
            0 => self.comps[0],
            4 => self.comps[flat(&[0, 1, 2, 3])],
            _ => ZERO,
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            grade: self.grade,
            comps: self.comps.iter().map(|c| c * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Euclidean norm of the full component array.
    pub fn norm(&self) -> f64 {
        self.comps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &KVector) -> f64 {
        if self.grade != other.grade {
            return f64::INFINITY;
        }
        self.comps
            .iter()
            .zip(&other.comps)
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }

    /// Largest violation of antisymmetry under any transposition.
    pub fn antisymmetry_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for f in 0..self.comps.len() {
            let idx = unflat(f, self.grade);
            for a in 0..self.grade {
                for b in (a + 1)..self.grade {
                    let mut t = idx.clone();
                    t.swap(a, b);
                    worst = worst.max((self.comps[f] + self.comps[flat(&t)]).norm());
                }
            }
        }
        worst
    }
}

impl Add for KVector {
    type Output = KVector;
    fn add(self, rhs: KVector) -> KVector {
        assert_eq!(self.grade, rhs.grade, "grade mismatch in addition");
        KVector {
            grade: self.grade,
            comps: self
                .comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for KVector {
    type Output = KVector;
    fn sub(self, rhs: KVector) -> KVector {
        self + rhs.scale_real(-1.0)
    }
}

/// a∧b, with `(a∧b)^{I} = 1/(p!q!) Σ_σ sgn σ a^{σ(1..p)} b^{σ(p+1..p+q)}`.
pub fn wedge(a: &KVector, b: &KVector) -> Result<KVector> {
    let (p, q) = (a.grade, b.grade);
    let n = p + q;
    if n > 4 {
        return Err(Error::GradeOverflow(p, q));
    }
    let perms = permutations(n);
    let norm = 1.0 / (factorial(p) * factorial(q));
    let mut out = KVector::zero(n)?;
    for f in 0..out.comps.len() {
        let idx = unflat(f, n);
        if perm_sign(&idx) == 0.0 {
            continue;
        }
        let mut acc = ZERO;
        for sigma in &perms {
            let permuted: Vec<usize> = sigma.iter().map(|&s| idx[s]).collect();
            let s = perm_sign(sigma);
            acc += a.get(&permuted[..p]) * b.get(&permuted[p..]) * s;
        }
        out.comps[f] = acc * norm;
    }
    Ok(out)
}

/// `(x|y) = (1/p!) G_{i₁j₁}…G_{i_p j_p} x^{i₁…i_p} conj(y^{j₁…j_p})`.
pub fn herm_inner(a: &KVector, b: &KVector) -> Result<Complex64> {
    if a.grade != b.grade {
        return Err(Error::GradeMismatch(a.grade, b.grade));
    }
    let mut acc = ZERO;
    for f in 0..a.comps.len() {
        let g: f64 = unflat(f, a.grade).iter().map(|&i| G_DIAG[i]).product();
        acc += a.comps[f] * b.comps[f].conj() * g;
    }
    Ok(acc / factorial(a.grade))
}

/// `A[I][J]` = coefficient of e in `e_I ∧ e_J`, over increasing tuples I of
/// grade k and J of grade 4-k.
fn star_system(k: usize) -> &'static Vec<Row> {
    static CACHE: OnceLock<Vec<Vec<Row>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        (0..=4)
            .map(|k| {
                let lows = monomial_indices(k);
                let highs = monomial_indices(4 - k);
                lows.iter()
                    .map(|i| {
                        let ei = KVector::monomial(i).expect("valid monomial");
                        highs
                            .iter()
                            .map(|j| {
                                let ej = KVector::monomial(j).expect("valid monomial");
                                wedge(&ei, &ej).expect("grades sum to 4").top()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    });
    &all[k]
}

/// The antilinear Hodge star Λᵏ → Λ⁴⁻ᵏ defined by `x ∧ ⋆y = (x|y) e`.
///
/// Solves that relation for ⋆y with x running over the monomial basis.
pub fn hodge_star(y: &KVector) -> KVector {
    let k = y.grade;
    let sys = star_system(k);
    let lows = monomial_indices(k);
    let n = sys.len();
    let aug: Vec<Row> = sys
        .iter()
        .zip(&lows)
        .map(|(row, idx)| {
            let ei = KVector::monomial(idx).expect("valid monomial");
            let rhs = herm_inner(&ei, y).expect("same grade");
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let red = linalg::rref(&aug, n, 1e-12);
    debug_assert_eq!(red.rank(), n, "star system is a signed permutation");
    let mut z = vec![ZERO; n];
    for (r, &p) in red.pivots.iter().enumerate() {
        z[p] = red.rows[r][n];
    }
    KVector::from_independent(4 - k, &z).expect("matching length")
}

/// Closed form of ⋆ on bivectors, `(⋆y)^{cd} = ½ ε^{abcd} G_aa G_bb conj(y^{ab})`.
pub fn hodge_star_bivector_closed_form(y: &Bivector) -> Option<Bivector> {
    if y.grade != 2 {
        return None;
    }
    Some(KVector::from_antisymmetric_fn(2, |cd| {
        let mut acc = ZERO;
        for a in 0..4 {
            for b in 0..4 {
                let e = levi_civita(a, b, cd[0], cd[1]);
                if e != 0.0 {
                    acc += y.get(&[a, b]).conj() * (0.5 * e * G_DIAG[a] * G_DIAG[b]);
                }
            }
        }
        acc
    }))
}

/// `((b + ⋆b)/2, (b − ⋆b)/2)`.
pub fn selfdual_split(b: &Bivector) -> (Bivector, Bivector) {
    let s = hodge_star(b);
    let plus = (b.clone() + s.clone()).scale_real(0.5);
    let minus = (b.clone() - s).scale_real(0.5);
    (plus, minus)
}

fn basis_bivectors() -> &'static [Bivector; 6] {
    static E: OnceLock<[Bivector; 6]> = OnceLock::new();
    E.get_or_init(|| {
        let t = SigmaTable::standard();
        std::array::from_fn(|a| {
            KVector::from_matrix(&t.sigma[a]).scale_real(E_ALPHA_COMPONENT_SCALE)
        })
    })
}

/// E_α = (1/(2√2)) Σ_α^{ij} e_i∧e_j, whose components are Σ_α/√2.
pub fn basis_bivector(alpha: usize) -> Result<Bivector> {
    if !(1..=6).contains(&alpha) {
        return Err(Error::IndexOutOfRange(alpha));
    }
    Ok(basis_bivectors()[alpha - 1].clone())
}

/// φ(x) = x^α E_α.
pub fn phi(x: &Vec6) -> Bivector {
    let e = basis_bivectors();
    let mut out = KVector::zero(2).expect("grade 2");
    for a in 0..6 {
        if x[a] != 0.0 {
            out = out + e[a].scale_real(x[a]);
        }
    }
    out
}

/// Coordinates of a self-dual bivector in the E_α basis.
pub fn phi_inverse(b: &Bivector) -> Result<Vec6> {
    phi_inverse_with(b, &Tolerance::default())
}

pub fn phi_inverse_with(b: &Bivector, tol: &Tolerance) -> Result<Vec6> {
    if b.grade != 2 {
        return Err(Error::GradeMismatch(b.grade, 2));
    }
    let scale = b.norm().max(1.0);
    let deviation = hodge_star(b).max_abs_diff(b);
    if deviation > tol.abs_tol * scale {
        return Err(Error::NotSelfDual { deviation });
    }
    // The E_α are orthogonal in the Euclidean component inner product, each
    // with squared norm 2.
    let e = basis_bivectors();
    let mut x = Vec6::ZERO;
    for a in 0..6 {
        let ip: f64 = e[a]
            .comps
            .iter()
            .zip(&b.comps)
            .map(|(p, q)| (p.conj() * q).re)
            .sum();
        x[a] = ip / 2.0;
    }
    let residual = (phi(&x) - b.clone()).norm();
    if residual > tol.rank_rel_tol * scale {
        return Err(Error::NotRealCombination { residual });
    }
    Ok(x)
}

/// Whether `b = v∧w` for some spinors, tested by `‖b∧b‖ ≤ tol·‖b‖²`.
pub fn is_decomposable(b: &Bivector, tol: f64) -> bool {
    match wedge(b, b) {
        Ok(bb) => bb.norm() <= tol * b.norm() * b.norm(),
        Err(_) => false,
    }
}

/// Span of the factors of a decomposable bivector: the column space of its
/// antisymmetric component matrix.
pub fn bivector_factor_span(b: &Bivector, rel_tol: f64) -> Vec<Spinor> {
    let rows: Vec<Row> = (0..4)
        .map(|i| (0..4).map(|j| b.get(&[i, j])).collect())
        .collect();
    linalg::image(&rows, 4, rel_tol)
        .into_iter()
        .map(|c| Spinor([c[0], c[1], c[2], c[3]]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::{q_form, Q_DIAG};

    fn ev(i: usize) -> KVector {
        KVector::vector(&Spinor::basis(i))
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn wedge_examples() {
        let e12 = wedge(&ev(1), &ev(2)).unwrap();
        assert_eq!(e12.get(&[0, 1]), ONE);
        assert_eq!(e12.get(&[1, 0]), -ONE);
        assert_eq!(e12.norm(), 2f64.sqrt());
        assert_eq!(wedge(&ev(1), &ev(1)).unwrap().norm(), 0.0);
        let e34 = wedge(&ev(3), &ev(4)).unwrap();
        assert_eq!(wedge(&e12, &e34).unwrap(), KVector::volume());
        assert_eq!(
            wedge(&e12, &KVector::volume()).unwrap_err(),
            Error::GradeOverflow(2, 4)
        );
    }

    #[test]
    fn monomial_matches_iterated_wedge() {
        let e123 = wedge(&wedge(&ev(1), &ev(2)).unwrap(), &ev(3)).unwrap();
        assert_eq!(KVector::monomial(&[0, 1, 2]).unwrap(), e123);
    }

    #[test]
    fn herm_inner_examples() {
        let e12 = wedge(&ev(1), &ev(2)).unwrap();
        let e13 = wedge(&ev(1), &ev(3)).unwrap();
        let e34 = wedge(&ev(3), &ev(4)).unwrap();
        assert_eq!(herm_inner(&e12, &e12).unwrap(), ONE);
        assert_eq!(herm_inner(&e13, &e13).unwrap(), -ONE);
        assert_eq!(herm_inner(&e12, &e34).unwrap(), ZERO);
        assert_eq!(
            herm_inner(&e12, &ev(1)).unwrap_err(),
            Error::GradeMismatch(2, 1)
        );
    }

    #[test]
    fn star_relation_on_all_monomial_pairs() {
        let e = KVector::volume();
        for k in 0..=4 {
            for i in monomial_indices(k) {
                for j in monomial_indices(k) {
                    let x = KVector::monomial(&i).unwrap();
                    let y = KVector::monomial(&j).unwrap();
                    let lhs = wedge(&x, &hodge_star(&y)).unwrap();
                    let rhs = e.scale(herm_inner(&x, &y).unwrap());
                    assert_eq!(lhs, rhs, "k={k} I={i:?} J={j:?}");
                }
            }
        }
    }

    #[test]
    fn star_closed_form_cross_check() {
        let y = KVector::from_independent(
            2,
            &[
                c(1.0, 2.0),
                c(-0.5, 0.0),
                c(0.0, 3.0),
                c(1.5, -1.0),
                c(0.2, 0.7),
                c(-2.0, 0.1),
            ],
        )
        .unwrap();
        let solved = hodge_star(&y);
        let closed = hodge_star_bivector_closed_form(&y).unwrap();
        assert!(solved.max_abs_diff(&closed) < 1e-15);
    }

    #[test]
    fn basis_bivectors_are_self_dual() {
        for a in 1..=6 {
            let e = basis_bivector(a).unwrap();
            assert!(hodge_star(&e).max_abs_diff(&e) < 1e-15, "alpha={a}");
        }
        assert_eq!(basis_bivector(0).unwrap_err(), Error::IndexOutOfRange(0));
    }

    #[test]
    fn basis_bivector_gram_matrix_is_minus_q() {
        // With (x|y) built from G = diag(1,1,-1,-1), every E_α for a
        // positive direction of Q lives on index pairs (a, b) with
        // G_aa G_bb = -1, so its norm is negative.
        for a in 1..=6 {
            for b in 1..=6 {
                let ip =
                    herm_inner(&basis_bivector(a).unwrap(), &basis_bivector(b).unwrap()).unwrap();
                let q = if a == b { Q_DIAG[a - 1] } else { 0.0 };
                assert!((ip - c(-q, 0.0)).norm() < 1e-15, "({a},{b}) -> {ip}");
            }
        }
    }

    #[test]
    fn star_is_antilinear() {
        let e1 = basis_bivector(1).unwrap();
        let s = hodge_star(&e1.scale(c(0.0, 1.0)));
        assert!(s.max_abs_diff(&e1.scale(c(0.0, -1.0))) < 1e-15);
    }

    #[test]
    fn selfdual_split_examples() {
        let e1 = basis_bivector(1).unwrap();
        let (p, m) = selfdual_split(&e1);
        assert!(p.max_abs_diff(&e1) < 1e-15);
        assert!(m.norm() < 1e-15);

        let ie1 = e1.scale(c(0.0, 1.0));
        let (p, m) = selfdual_split(&ie1);
        assert!(p.norm() < 1e-15);
        assert!(m.max_abs_diff(&ie1) < 1e-15);

        let e12 = wedge(&ev(1), &ev(2)).unwrap();
        let (p, m) = selfdual_split(&e12);
        assert!((p.clone() + m.clone()).max_abs_diff(&e12) < 1e-15);
        assert!(hodge_star(&p).max_abs_diff(&p) < 1e-15);
        assert!(hodge_star(&m).max_abs_diff(&m.scale_real(-1.0)) < 1e-15);
        // ⋆(e₁∧e₂) = G₁₁G₂₂ · e₃∧e₄
        assert_eq!(hodge_star(&e12), wedge(&ev(3), &ev(4)).unwrap());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&Vec6::basis(5).unwrap()), basis_bivector(5).unwrap());
        assert_eq!(phi(&Vec6::ZERO).norm(), 0.0);
        let x = Vec6([0.3, -1.2, 0.8, 2.0, -0.4, 1.1]);
        let n = herm_inner(&phi(&x), &phi(&x)).unwrap();
        assert!((n.re + q_form(&x)).abs() < 1e-12 && n.im.abs() < 1e-12);
        let p = phi(&x);
        assert!(hodge_star(&p).max_abs_diff(&p) < 1e-12);
    }

    #[test]
    fn phi_inverse_examples() {
        let back = phi_inverse(&basis_bivector(3).unwrap()).unwrap();
        assert!(back.max_abs_diff(&Vec6::basis(3).unwrap()) < 1e-15);
        let x = Vec6([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert!(phi_inverse(&phi(&x)).unwrap().max_abs_diff(&x) < 1e-9);
        let ie1 = basis_bivector(1).unwrap().scale(c(0.0, 1.0));
        assert!(matches!(phi_inverse(&ie1), Err(Error::NotSelfDual { .. })));
    }

    #[test]
    fn decomposability_examples() {
        assert!(is_decomposable(&wedge(&ev(1), &ev(2)).unwrap(), 1e-9));
        // φ(x)∧φ(x) = (φ(x)|φ(x)) e for self-dual φ(x), nonzero when Q(x) = 2
        let b = phi(&Vec6([1.0, 1.0, 0.0, 0.0, 0.0, 0.0]));
        let bb = wedge(&b, &b).unwrap();
        assert!(bb.top().norm() > 1.0);
        assert!(!is_decomposable(&b, 1e-9));
        assert!(is_decomposable(
            &phi(&Vec6([1.0, 0.0, 0.0, 1.0, 0.0, 0.0])),
            1e-9
        ));
    }

    #[test]
    fn factor_span_of_decomposable_bivector() {
        let v = Spinor([c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0), c(0.0, 0.0)]);
        let w = Spinor([c(0.0, 0.0), c(1.0, 0.0), c(0.0, -1.0), c(3.0, 1.0)]);
        let b = wedge(&KVector::vector(&v), &KVector::vector(&w)).unwrap();
        let span = bivector_factor_span(&b, 1e-12);
        assert_eq!(span.len(), 2);
        let to_rows = |s: &[Spinor]| s.iter().map(|x| x.0.to_vec()).collect::<Vec<_>>();
        assert!(linalg::same_span(&to_rows(&span), &to_rows(&[v, w]), 1e-12));
    }

    #[test]
    fn antisymmetry_is_maintained() {
        let b = phi(&Vec6([0.5, -1.0, 2.0, 0.1, 0.0, 3.0]));
        assert_eq!(b.antisymmetry_defect(), 0.0);
        let t = wedge(&b, &ev(2)).unwrap();
        assert!(t.antisymmetry_defect() < 1e-15);
    }
}
