//! Compactified Minkowski space through spinors.
//!
//! The real space E(4,2) with Q = diag(1,1,1,−1,1,−1) is realized as a real
//! span of antilinear operators Γ_α on the spinor space H(2,2), whose
//! pseudo-hermitian form is G = diag(1,1,−1,−1). From there:
//!
//! - [`clifford`]: the Σ/Γ tables and the Clifford, adjointness, self-duality
//!   and reality identities;
//! - [`exterior`]: Λ(H(2,2)), the antilinear Hodge star, and the embedding of
//!   E(4,2) as self-dual bivectors;
//! - [`spin`]: SU(2,2) acting on E(4,2) and the covering map onto SO₊(4,2);
//! - [`isotropic`]: null lines, isotropic planes and spinor planes/lines;
//! - [`liesphere`]: Lie sphere coordinates, conformal inversion and contact;
//! - [`suites`] and [`cli`]: seeded verification suites and the `cmk`
//!   command line.
//!
//! ```
//! use cmk::{clifford, forms::Vec6};
//!
//! let x = Vec6::new([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]);
//! let (det, q2) = clifford::det_identity(&x);
//! assert_eq!((det, q2), (0.0, 0.0));
//! assert!(clifford::check_clifford_relations(0.0).passed);
//! ```

pub mod cli;
pub mod clifford;
pub mod error;
pub mod exterior;
pub mod forms;
pub mod isotropic;
pub mod liesphere;
pub mod linalg;
pub mod sampling;
pub mod spin;
pub mod suites;

pub use clifford::{AntilinearOp, LinearOp, Mat4, SigmaTable};
pub use error::{Error, Result};
pub use exterior::{Bivector, KVector};
pub use forms::{ProjectiveNullLine, Spinor, Tolerance, Vec6};
pub use isotropic::{IsotropicPlaneE, SpinorLine, SpinorPlane};
pub use liesphere::{InfinityReport, LieEntity};
pub use spin::{ConformalMatrix6, SpinElement};
pub use suites::SuiteResult;
