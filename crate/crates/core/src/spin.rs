//! SU(2,2) as Spin(4,2) and its covering map onto SO₊(4,2).
//!
//! A spin element U acts on x ∈ E(4,2) by conjugating the antilinear
//! operator X(x): `U ∘ X ∘ U⁻¹`, whose matrix is `U Σ̃ ᵗU G` with
//! `Σ̃ = x^α Σ_α`. The antisymmetric factor `U Σ̃ ᵗU` keeps the result
//! inside the real Γ span whenever U is pseudo-unitary.

use std::ops::{Mul, Neg};

use nalgebra::Matrix6;
use num_complex::Complex64;

use crate::clifford::{compose, g_matrix, gamma_fit, x_matrix, Mat4, SigmaTable};
use crate::error::{Error, Result};
use crate::forms::{q_form, Tolerance, Vec6, Q_DIAG};

/// An element of SU(2,2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinElement {
    m: Mat4,
}

/// A 6×6 real matrix in SO(4,2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConformalMatrix6 {
    pub l: Matrix6<f64>,
}

fn max_abs(m: &Mat4) -> f64 {
    m.iter().fold(0.0, |a, z| a.max(z.norm()))
}

/// Deviation of `m` from the pseudo-unitary and unit-determinant conditions.
pub fn su22_defect(m: &Mat4) -> (f64, f64) {
    let g = g_matrix();
    let unitary = max_abs(&(m * g * m.adjoint() - g));
    let det = (m.determinant() - Complex64::new(1.0, 0.0)).norm();
    (unitary, det)
}

/// `m G m^† = G` and `det m = 1`, both within `tol`.
pub fn is_su22(m: &Mat4, tol: f64) -> bool {
    let (u, d) = su22_defect(m);
    u <= tol && d <= tol
}

impl SpinElement {
    pub fn new(m: Mat4) -> Result<Self> {
        Self::new_with(m, 1e-9)
    }

    pub fn new_with(m: Mat4, tol: f64) -> Result<Self> {
        if is_su22(&m, tol) {
            Ok(Self { m })
        } else {
            Err(Error::NotSu22)
        }
    }

    pub fn identity() -> Self {
        Self {
            m: Mat4::identity(),
        }
    }

    /// The central element i·I (det i⁴ = 1, commutes with G).
    pub fn i_identity() -> Self {
        Self {
            m: Mat4::identity() * Complex64::new(0.0, 1.0),
        }
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }
}

impl Mul for SpinElement {
    type Output = SpinElement;
    fn mul(self, rhs: SpinElement) -> SpinElement {
        SpinElement { m: self.m * rhs.m }
    }
}

impl Neg for SpinElement {
    type Output = SpinElement;
    fn neg(self) -> SpinElement {
        SpinElement { m: -self.m }
    }
}

/// The product x·x′ of two unit vectors of the same signature, acting on
/// spinors through `X conj(X′)`.
pub fn spin_from_vector_pair(x: &Vec6, xp: &Vec6) -> Result<SpinElement> {
    spin_from_vector_pair_with(x, xp, &Tolerance::default())
}

pub fn spin_from_vector_pair_with(x: &Vec6, xp: &Vec6, tol: &Tolerance) -> Result<SpinElement> {
    let q1 = q_form(x);
    let q2 = q_form(xp);
    for q in [q1, q2] {
        if (q.abs() - 1.0).abs() > tol.abs_tol {
            return Err(Error::NotNormalized { q });
        }
    }
    // One unit vector of each sign gives U G U^† = -G: outside U(2,2).
    if q1.signum() != q2.signum() {
        return Err(Error::MixedSignPair { q1, q2 });
    }
    let m = compose(&x_matrix(x), &x_matrix(xp)).m;
    SpinElement::new_with(m, 1e-8)
}

/// Ordered product of vector-pair elements; the empty product is I.
pub fn spin_generate(pairs: &[(Vec6, Vec6)]) -> Result<SpinElement> {
    pairs
        .iter()
        .try_fold(SpinElement::identity(), |acc, (x, xp)| {
            Ok(acc * spin_from_vector_pair(x, xp)?)
        })
}

fn sigma_tilde(x: &Vec6) -> Mat4 {
    let t = SigmaTable::standard();
    let mut m = Mat4::zeros();
    for a in 0..6 {
        if x[a] != 0.0 {
            m += t.sigma[a] * Complex64::new(x[a], 0.0);
        }
    }
    m
}

fn frobenius(m: &Mat4) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// x ↦ U x U⁻¹, read back as a vector of E(4,2).
pub fn vector_action(s: &SpinElement, x: &Vec6) -> Result<Vec6> {
    vector_action_with(s, x, &Tolerance::default())
}

pub fn vector_action_with(s: &SpinElement, x: &Vec6, tol: &Tolerance) -> Result<Vec6> {
    let st = sigma_tilde(x);
    let transformed = s.m * st * s.m.transpose() * g_matrix();
    let (out, residual) = gamma_fit(&transformed);
    let scale = (frobenius(&s.m).powi(2) * frobenius(&st)).max(1.0);
    if residual > tol.rank_rel_tol * scale {
        return Err(Error::ActionLeavesSpan { residual });
    }
    Ok(out)
}

/// L(U): column α is the image of e_α.
pub fn covering_matrix(s: &SpinElement) -> Result<ConformalMatrix6> {
    let mut l = Matrix6::zeros();
    for a in 0..6 {
        let col = vector_action(s, &Vec6::basis(a + 1)?)?;
        for r in 0..6 {
            l[(r, a)] = col[r];
        }
    }
    Ok(ConformalMatrix6 { l })
}

pub fn q_matrix6() -> Matrix6<f64> {
    Matrix6::from_diagonal(&nalgebra::Vector6::from_fn(|i, _| Q_DIAG[i]))
}

impl ConformalMatrix6 {
    pub fn identity() -> Self {
        Self {
            l: Matrix6::identity(),
        }
    }

    pub fn apply(&self, x: &Vec6) -> Vec6 {
        let v = self.l * nalgebra::Vector6::from_column_slice(&x.0);
        Vec6(std::array::from_fn(|i| v[i]))
    }

    /// max |L Q ᵗL − Q|.
    pub fn isometry_defect(&self) -> f64 {
        let q = q_matrix6();
        (self.l * q * self.l.transpose() - q).amax()
    }

    pub fn det(&self) -> f64 {
        self.l.determinant()
    }

    /// Determinant of the block on the negative coordinates 4 and 6.
    pub fn negative_block_det(&self) -> f64 {
        let l = &self.l;
        l[(3, 3)] * l[(5, 5)] - l[(3, 5)] * l[(5, 3)]
    }
}

impl Mul for ConformalMatrix6 {
    type Output = ConformalMatrix6;
    fn mul(self, rhs: Self) -> Self {
        Self { l: self.l * rhs.l }
    }
}

/// Membership in the identity component of SO(4,2): isometry, unit
/// determinant, and positive determinant on the negative-signature block.
pub fn is_so_plus(l: &ConformalMatrix6, tol: f64) -> bool {
    l.isometry_defect() <= tol && (l.det() - 1.0).abs() <= tol && l.negative_block_det() > 0.0
}
