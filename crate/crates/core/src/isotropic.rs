//! Correspondences between isotropic subspaces of E(4,2) and of the spinor
//! space.
//!
//! * a null line ℝx ↦ the maximal isotropic spinor plane `Ker X(x)`;
//! * a maximal isotropic plane N = span{x₁, x₂} ↦ the spinor line
//!   `Im(x₁x₂)`;
//! * an isotropic spinor line ℂv ↦ `N(v) = {x : X(x)v = 0}`.
//!
//! The idempotents `xy`, `yx` (and the four `R_i` for planes) used to prove
//! these correspondences are exposed so they can be checked directly.

use num_complex::Complex64;

use crate::clifford::{apply, compose, gamma, x_matrix, LinearOp};
use crate::error::{Error, Result};
use crate::forms::{
    g_form, projectivize_with, q_bilinear, q_form, ProjectiveNullLine, Spinor, Tolerance, Vec6,
    Q_DIAG,
};
use crate::linalg::{self, Row};

/// A maximal totally isotropic subspace of the spinor space.
#[derive(Debug, Clone, Copy)]
pub struct SpinorPlane {
    basis: [Spinor; 2],
}

/// An isotropic complex line ℂv of the spinor space.
#[derive(Debug, Clone, Copy)]
pub struct SpinorLine {
    rep: Spinor,
}

/// A maximal totally isotropic (two-dimensional) subspace of E(4,2).
#[derive(Debug, Clone, Copy)]
pub struct IsotropicPlaneE {
    basis: [Vec6; 2],
}

fn rows_of(spinors: &[Spinor]) -> Vec<Row> {
    spinors.iter().map(|s| s.0.to_vec()).collect()
}

fn spinor_of(row: &[Complex64]) -> Spinor {
    Spinor([row[0], row[1], row[2], row[3]])
}

impl SpinorPlane {
    pub fn new(b1: Spinor, b2: Spinor) -> Result<Self> {
        Self::new_with(b1, b2, &Tolerance::default())
    }

    pub fn new_with(b1: Spinor, b2: Spinor, tol: &Tolerance) -> Result<Self> {
        if !b1.is_finite() || !b2.is_finite() {
            return Err(Error::InvalidSpinorPlane("non-finite entry"));
        }
        if linalg::rank(&rows_of(&[b1, b2]), 4, tol.rank_rel_tol) != 2 {
            return Err(Error::InvalidSpinorPlane("basis is not independent"));
        }
        for (s, t) in [(b1, b1), (b1, b2), (b2, b2)] {
            if g_form(&s, &t).norm() > tol.abs_tol * s.norm() * t.norm() {
                return Err(Error::InvalidSpinorPlane("basis is not totally isotropic"));
            }
        }
        Ok(Self { basis: [b1, b2] })
    }

    pub fn basis(&self) -> &[Spinor; 2] {
        &self.basis
    }

    /// Span equality, by rank of the stacked bases.
    pub fn same_span(&self, other: &SpinorPlane, rel_tol: f64) -> bool {
        linalg::same_span(&rows_of(&self.basis), &rows_of(&other.basis), rel_tol)
    }

    pub fn contains(&self, v: &Spinor, rel_tol: f64) -> bool {
        let rows = rows_of(&[self.basis[0], self.basis[1], *v]);
        linalg::rank(&rows, 4, rel_tol) == 2
    }
}

impl SpinorLine {
    pub fn new(v: Spinor) -> Result<Self> {
        Self::new_with(v, &Tolerance::default())
    }

    pub fn new_with(v: Spinor, tol: &Tolerance) -> Result<Self> {
        if !v.is_finite() || v.norm() <= tol.abs_tol {
            return Err(Error::ZeroVector);
        }
        let norm = g_form(&v, &v).norm();
        if norm > tol.abs_tol * v.norm_sq() {
            return Err(Error::NotIsotropicSpinor { norm });
        }
        Ok(Self { rep: v })
    }

    pub fn rep(&self) -> &Spinor {
        &self.rep
    }

    /// Equality up to a nonzero complex factor.
    pub fn same_line(&self, other: &SpinorLine, rel_tol: f64) -> bool {
        linalg::same_span(&rows_of(&[self.rep]), &rows_of(&[other.rep]), rel_tol)
    }
}

impl IsotropicPlaneE {
    pub fn new(x1: Vec6, x2: Vec6) -> Result<Self> {
        Self::new_with(x1, x2, &Tolerance::default())
    }

    pub fn new_with(x1: Vec6, x2: Vec6, tol: &Tolerance) -> Result<Self> {
        if !x1.is_finite() || !x2.is_finite() {
            return Err(Error::InvalidIsotropicPlane("non-finite entry"));
        }
        let rows = linalg::real_rows(&[x1.0.to_vec(), x2.0.to_vec()]);
        if linalg::rank(&rows, 6, tol.rank_rel_tol) != 2 {
            return Err(Error::InvalidIsotropicPlane("basis is not independent"));
        }
        for (a, b) in [(x1, x1), (x1, x2), (x2, x2)] {
            if q_bilinear(&a, &b).abs() > tol.abs_tol * a.norm() * b.norm() {
                return Err(Error::InvalidIsotropicPlane(
                    "basis is not totally isotropic",
                ));
            }
        }
        Ok(Self { basis: [x1, x2] })
    }

    pub fn basis(&self) -> &[Vec6; 2] {
        &self.basis
    }

    pub fn same_span(&self, other: &IsotropicPlaneE, rel_tol: f64) -> bool {
        let a = linalg::real_rows(&[self.basis[0].0.to_vec(), self.basis[1].0.to_vec()]);
        let b = linalg::real_rows(&[other.basis[0].0.to_vec(), other.basis[1].0.to_vec()]);
        linalg::same_span(&a, &b, rel_tol)
    }

    pub fn contains(&self, x: &Vec6, rel_tol: f64) -> bool {
        let rows = linalg::real_rows(&[
            self.basis[0].0.to_vec(),
            self.basis[1].0.to_vec(),
            x.0.to_vec(),
        ]);
        linalg::rank(&rows, 6, rel_tol) == 2
    }
}

fn require_null(x: &Vec6, tol: &Tolerance) -> Result<()> {
    projectivize_with(x, tol).map(|_| ())
}

/// A null y with `(x, y) = ½`, so that `xy + yx = I`.
///
/// Takes z = e_β with the largest `|(x, e_β)|` (first on ties) and returns
/// `y = z/(2(x,z)) − (z,z)·x/(4(x,z)²)`.
pub fn partner_null_vector(x: &Vec6) -> Result<Vec6> {
    partner_null_vector_with(x, &Tolerance::default())
}

pub fn partner_null_vector_with(x: &Vec6, tol: &Tolerance) -> Result<Vec6> {
    require_null(x, tol)?;
    let mut beta = 0;
    for b in 1..6 {
        if x[b].abs() > x[beta].abs() {
            beta = b;
        }
    }
    let z = Vec6::basis(beta + 1)?;
    let xz = Q_DIAG[beta] * x[beta];
    let zz = Q_DIAG[beta];
    Ok(z.scale(1.0 / (2.0 * xz)) - x.scale(zz / (4.0 * xz * xz)))
}

/// The complementary idempotents `(xy, yx)` for null x and its partner y.
pub fn idempotent_pair(x: &Vec6, y: &Vec6) -> (LinearOp, LinearOp) {
    let ax = x_matrix(x);
    let ay = x_matrix(y);
    (compose(&ax, &ay), compose(&ay, &ax))
}

/// Kernel of the antilinear operator X(x): the conjugate of the kernel of
/// its matrix.
fn antilinear_kernel(x: &Vec6, rel_tol: f64) -> Vec<Spinor> {
    let m = x_matrix(x).m;
    let rows: Vec<Row> = (0..4)
        .map(|i| (0..4).map(|j| m[(i, j)]).collect())
        .collect();
    linalg::kernel(&rows, 4, rel_tol)
        .iter()
        .map(|k| spinor_of(k).conj())
        .collect()
}

/// S(x) = Ker X(x) for a null x.
pub fn null_to_spinor_plane(x: &Vec6) -> Result<SpinorPlane> {
    null_to_spinor_plane_with(x, &Tolerance::default())
}

pub fn null_to_spinor_plane_with(x: &Vec6, tol: &Tolerance) -> Result<SpinorPlane> {
    require_null(x, tol)?;
    let k = antilinear_kernel(x, tol.rank_rel_tol);
    if k.len() != 2 {
        return Err(Error::RankFailure {
            what: "kernel of X(x)",
            expected: 2,
            found: k.len(),
        });
    }
    SpinorPlane::new_with(k[0], k[1], tol)
}

/// Image of a complex-linear operator.
pub fn linear_image(op: &LinearOp, rel_tol: f64) -> Vec<Spinor> {
    let rows: Vec<Row> = (0..4)
        .map(|i| (0..4).map(|j| op.m[(i, j)]).collect())
        .collect();
    linalg::image(&rows, 4, rel_tol)
        .iter()
        .map(|c| spinor_of(c))
        .collect()
}

/// The spinor line `Im(x₁x₂)` of a maximal isotropic plane of E(4,2).
pub fn plane_to_spinor_line(n: &IsotropicPlaneE) -> Result<SpinorLine> {
    plane_to_spinor_line_with(n, &Tolerance::default())
}

pub fn plane_to_spinor_line_with(n: &IsotropicPlaneE, tol: &Tolerance) -> Result<SpinorLine> {
    let [x1, x2] = n.basis;
    let op = compose(&x_matrix(&x1), &x_matrix(&x2));
    let im = linear_image(&op, tol.rank_rel_tol);
    if im.len() != 1 {
        return Err(Error::RankFailure {
            what: "image of x1 x2",
            expected: 1,
            found: im.len(),
        });
    }
    SpinorLine::new_with(im[0], tol)
}

/// Real 8×6 system `Σ_α x^α Γ_α conj(v) = 0`, split into real and
/// imaginary parts; one block per spinor.
fn annihilator_rows(spinors: &[Spinor]) -> Vec<Vec<f64>> {
    let cols: Vec<Vec<Spinor>> = spinors
        .iter()
        .map(|v| {
            (1..=6)
                .map(|a| apply(&gamma(a).expect("index in range"), v))
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for block in &cols {
        for i in 0..4 {
            rows.push((0..6).map(|a| block[a][i].re).collect());
            rows.push((0..6).map(|a| block[a][i].im).collect());
        }
    }
    rows
}

fn real_kernel(rows: &[Vec<f64>], rel_tol: f64) -> Vec<Vec6> {
    linalg::kernel(&linalg::real_rows(rows), 6, rel_tol)
        .iter()
        .map(|k| Vec6(std::array::from_fn(|i| k[i].re)))
        .collect()
}

/// N(v) = {x ∈ E : X(x) v = 0}.
pub fn spinor_line_to_plane(v: &SpinorLine) -> Result<IsotropicPlaneE> {
    spinor_line_to_plane_with(v, &Tolerance::default())
}

pub fn spinor_line_to_plane_with(v: &SpinorLine, tol: &Tolerance) -> Result<IsotropicPlaneE> {
    let norm = g_form(&v.rep, &v.rep).norm();
    if norm > tol.abs_tol * v.rep.norm_sq() {
        return Err(Error::NotIsotropicSpinor { norm });
    }
    let k = real_kernel(&annihilator_rows(&[v.rep]), tol.rank_rel_tol);
    if k.len() != 2 {
        return Err(Error::RankFailure {
            what: "solution space of X(x)v = 0",
            expected: 2,
            found: k.len(),
        });
    }
    IsotropicPlaneE::new_with(k[0], k[1], tol)
}

/// The null line [x] with S(x) equal to the given spinor plane.
pub fn plane_from_spinor_plane(p: &SpinorPlane) -> Result<ProjectiveNullLine> {
    plane_from_spinor_plane_with(p, &Tolerance::default())
}

pub fn plane_from_spinor_plane_with(
    p: &SpinorPlane,
    tol: &Tolerance,
) -> Result<ProjectiveNullLine> {
    let k = real_kernel(&annihilator_rows(&p.basis), tol.rank_rel_tol);
    if k.len() != 1 {
        return Err(Error::RankFailure {
            what: "vectors annihilating the spinor plane",
            expected: 1,
            found: k.len(),
        });
    }
    projectivize_with(&k[0], tol)
}

/// A maximal isotropic plane P = span{y₁, y₂} with `(x_i, y_j) = ½ δ_ij`.
pub fn dual_isotropic_plane(n: &IsotropicPlaneE) -> [Vec6; 2] {
    let [x1, x2] = n.basis;
    let qx = |x: &Vec6| Vec6(std::array::from_fn(|i| Q_DIAG[i] * x[i]));
    // (x_i, Q x_j) is the Euclidean Gram matrix
    let m = [
        [
            x1.norm_sq(),
            x1.0.iter().zip(&x2.0).map(|(a, b)| a * b).sum::<f64>(),
        ],
        [0.0, x2.norm_sq()],
    ];
    let m01 = m[0][1];
    let det = m[0][0] * m[1][1] - m01 * m01;
    let inv = [[m[1][1] / det, -m01 / det], [-m01 / det, m[0][0] / det]];
    let z: [Vec6; 2] =
        std::array::from_fn(|j| qx(&x1).scale(inv[0][j] / 2.0) + qx(&x2).scale(inv[1][j] / 2.0));
    // y_j = z_j − Σ_k (z_j, z_k) x_k makes (y_i, y_j) = 0 and keeps (x_i, y_j)
    let c = |i: usize, j: usize| -q_bilinear(&z[i], &z[j]);
    std::array::from_fn(|j| z[j] + x1.scale(c(j, 0)) + x2.scale(c(j, 1)))
}

/// The four idempotents `R₁ = P₁P₂, R₂ = P₁Q₂, R₃ = Q₁P₂, R₄ = Q₁Q₂` built
/// from `P_i = x_i y_i` and `Q_i = y_i x_i`.
pub fn four_idempotents(n: &IsotropicPlaneE, dual: &[Vec6; 2]) -> [LinearOp; 4] {
    let [x1, x2] = n.basis;
    let (p1, q1) = idempotent_pair(&x1, &dual[0]);
    let (p2, q2) = idempotent_pair(&x2, &dual[1]);
    [p1 * p2, p1 * q2, q1 * p2, q1 * q2]
}

/// Max |Q(x)| over a set of vectors, used in checks.
pub fn max_nullity_defect(xs: &[Vec6]) -> f64 {
    xs.iter().fold(0.0, |m, x| m.max(q_form(x).abs()))
}
