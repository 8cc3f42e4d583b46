//! Quadratic form of E(4,2), pseudo-Hermitian form of the spinor space, and
//! projective null classes.
//!
//! Q = diag(1, 1, 1, -1, 1, -1) on real 6-vectors, G = diag(1, 1, -1, -1) on
//! complex 4-spinors. The Hermitian form conjugates its second argument.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Diagonal of Q.
pub const Q_DIAG: [f64; 6] = [1.0, 1.0, 1.0, -1.0, 1.0, -1.0];
/// Diagonal of G.
pub const G_DIAG: [f64; 4] = [1.0, 1.0, -1.0, -1.0];

/// Numeric tolerances shared by every module.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rank_rel_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            rank_rel_tol: 1e-9,
        }
    }
}

impl Tolerance {
    /// Both tolerances set to `tol`. Non-positive or non-finite inputs fall
    /// back to the smallest positive normal float.
    pub fn uniform(tol: f64) -> Self {
        let t = if tol.is_finite() && tol > 0.0 {
            tol
        } else {
            f64::MIN_POSITIVE
        };
        Self {
            abs_tol: t,
            rank_rel_tol: t,
        }
    }
}

/// A point of E(4,2).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vec6(pub [f64; 6]);

impl Vec6 {
    pub const ZERO: Vec6 = Vec6([0.0; 6]);

    pub fn new(c: [f64; 6]) -> Self {
        Vec6(c)
    }

    /// Unit vector e_alpha, alpha in 1..=6.
    pub fn basis(alpha: usize) -> Result<Self> {
        if !(1..=6).contains(&alpha) {
            return Err(Error::IndexOutOfRange(alpha));
        }
        let mut c = [0.0; 6];
        c[alpha - 1] = 1.0;
        Ok(Vec6(c))
    }

    /// Sum of squared components.
    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    pub fn scale(&self, s: f64) -> Self {
        Vec6(self.0.map(|v| v * s))
    }

    pub fn max_abs_diff(&self, other: &Vec6) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Whether `q_form` is negligible relative to the squared norm.
    pub fn is_null(&self, tol: f64) -> bool {
        q_form(self).abs() <= tol * self.norm_sq()
    }
}

impl Index<usize> for Vec6 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vec6 {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

impl Add for Vec6 {
    type Output = Vec6;
    fn add(self, rhs: Vec6) -> Vec6 {
        Vec6(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Vec6 {
    type Output = Vec6;
    fn sub(self, rhs: Vec6) -> Vec6 {
        Vec6(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl Neg for Vec6 {
    type Output = Vec6;
    fn neg(self) -> Vec6 {
        self.scale(-1.0)
    }
}

impl Mul<Vec6> for f64 {
    type Output = Vec6;
    fn mul(self, rhs: Vec6) -> Vec6 {
        rhs.scale(self)
    }
}

impl fmt::Display for Vec6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// An element of the complex spinor space H(2,2).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Spinor(pub [Complex64; 4]);

impl Spinor {
    pub const ZERO: Spinor = Spinor([Complex64::new(0.0, 0.0); 4]);

    pub fn new(c: [Complex64; 4]) -> Self {
        Spinor(c)
    }

    pub fn from_real(c: [f64; 4]) -> Self {
        Spinor(c.map(|v| Complex64::new(v, 0.0)))
    }

    pub fn basis(i: usize) -> Self {
        let mut c = [Complex64::new(0.0, 0.0); 4];
        c[i - 1] = Complex64::new(1.0, 0.0);
        Spinor(c)
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Spinor(self.0.map(|z| z * s))
    }

    pub fn conj(&self) -> Self {
        Spinor(self.0.map(|z| z.conj()))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Index<usize> for Spinor {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

impl Add for Spinor {
    type Output = Spinor;
    fn add(self, rhs: Spinor) -> Spinor {
        Spinor(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Spinor {
    type Output = Spinor;
    fn sub(self, rhs: Spinor) -> Spinor {
        Spinor(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

/// Q(x) = x1² + x2² + x3² - x4² + x5² - x6².
pub fn q_form(x: &Vec6) -> f64 {
    q_bilinear(x, x)
}

/// The symmetric bilinear form tx Q y.
pub fn q_bilinear(x: &Vec6, y: &Vec6) -> f64 {
    (0..6).map(|i| Q_DIAG[i] * x[i] * y[i]).sum()
}

/// (s|t) = sum_i G_ii s_i conj(t_i): linear in `s`, conjugate-linear in `t`.
pub fn g_form(s: &Spinor, t: &Spinor) -> Complex64 {
    (0..4).map(|i| s[i] * t[i].conj() * G_DIAG[i]).sum()
}

/// A generator of the null cone, i.e. a point of compactified Minkowski
/// space, stored through its canonical representative: the component of
/// largest magnitude (first one on ties) is scaled to +1.
#[derive(Debug, Clone, Copy)]
pub struct ProjectiveNullLine {
    rep: Vec6,
}

impl ProjectiveNullLine {
    pub fn rep(&self) -> &Vec6 {
        &self.rep
    }

    pub fn approx_eq(&self, other: &ProjectiveNullLine, tol: f64) -> bool {
        self.rep.max_abs_diff(&other.rep) <= tol
    }
}

impl PartialEq for ProjectiveNullLine {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other, Tolerance::default().abs_tol)
    }
}

/// Scale `x` so its largest-magnitude component is +1.
pub(crate) fn canonicalize(x: &Vec6) -> Vec6 {
    let mut pivot = 0;
    for i in 1..6 {
        if x[i].abs() > x[pivot].abs() {
            pivot = i;
        }
    }
    let s = 1.0 / x[pivot];
    // `+ 0.0` folds -0.0 into +0.0
    let mut out = Vec6(x.0.map(|v| v * s + 0.0));
    out[pivot] = 1.0;
    out
}

/// Canonical class [x] of a nonzero null vector.
pub fn projectivize(x: &Vec6) -> Result<ProjectiveNullLine> {
    projectivize_with(x, &Tolerance::default())
}

pub fn projectivize_with(x: &Vec6, tol: &Tolerance) -> Result<ProjectiveNullLine> {
    if !x.is_finite() || x.norm() <= tol.abs_tol {
        return Err(Error::ZeroVector);
    }
    let q = q_form(x);
    let bound = tol.abs_tol * x.norm_sq();
    if q.abs() > bound {
        return Err(Error::NotNull { q, bound });
    }
    Ok(ProjectiveNullLine {
        rep: canonicalize(x),
    })
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
    fn q_form_examples() {
        assert_eq!(q_form(&e(1)), 1.0);
        assert_eq!(q_form(&e(4)), -1.0);
        assert_eq!(q_form(&Vec6([1.0, 0.0, 0.0, 1.0, 0.0, 0.0])), 0.0);
    }

    #[test]
    fn q_bilinear_examples() {
        assert_eq!(q_bilinear(&e(1), &e(1)), 1.0);
        assert_eq!(q_bilinear(&e(1), &e(2)), 0.0);
        assert_eq!(q_bilinear(&e(5), &e(6)), 0.0);
        assert_eq!(q_bilinear(&e(6), &e(6)), -1.0);
    }

    #[test]
    fn g_form_examples() {
        let f1 = Spinor::basis(1);
        let f3 = Spinor::basis(3);
        assert_eq!(g_form(&f1, &f1), c(1.0, 0.0));
        assert_eq!(g_form(&f3, &f3), c(-1.0, 0.0));
        let n = Spinor::from_real([1.0, 0.0, 0.0, 1.0]);
        assert_eq!(g_form(&n, &n), c(0.0, 0.0));
    }

    #[test]
    fn g_form_is_hermitian_and_sesquilinear() {
        let s = Spinor([c(1.0, 2.0), c(-0.5, 0.3), c(0.0, 1.0), c(2.0, -1.0)]);
        let t = Spinor([c(0.7, -1.0), c(1.0, 1.0), c(-2.0, 0.5), c(0.1, 0.0)]);
        let l = c(0.3, -1.7);
        assert!((g_form(&s, &t) - g_form(&t, &s).conj()).norm() < 1e-12);
        assert!((g_form(&s.scale(l), &t) - l * g_form(&s, &t)).norm() < 1e-12);
        assert!((g_form(&s, &t.scale(l)) - l.conj() * g_form(&s, &t)).norm() < 1e-12);
    }

    #[test]
    fn projectivize_examples() {
        let p = projectivize(&Vec6([0.0, 0.0, 0.0, 0.0, 2.0, -2.0])).unwrap();
        assert_eq!(p.rep().0, [0.0, 0.0, 0.0, 0.0, 1.0, -1.0]);
        let p = projectivize(&Vec6([0.0, 0.0, 0.0, 0.0, -1.0, -1.0])).unwrap();
        assert_eq!(p.rep().0, [0.0, 0.0, 0.0, 0.0, 1.0, 1.0]);
        assert!(matches!(projectivize(&e(1)), Err(Error::NotNull { .. })));
        assert_eq!(projectivize(&Vec6::ZERO).unwrap_err(), Error::ZeroVector);
    }

    #[test]
    fn nullity_is_scale_invariant() {
        let x = Vec6([3.0, 4.0, 0.0, 5.0, 1.0, 1.0]);
        assert!(x.is_null(1e-12));
        assert!(x.scale(1e-6).is_null(1e-12));
        assert!(x.scale(1e6).is_null(1e-12));
    }

    #[test]
    fn tie_breaks_on_smallest_index() {
        let p = projectivize(&Vec6([0.0, 0.0, 0.0, 0.0, -0.5, 0.5])).unwrap();
        assert_eq!(p.rep().0, [0.0, 0.0, 0.0, 0.0, 1.0, -1.0]);
    }
}
