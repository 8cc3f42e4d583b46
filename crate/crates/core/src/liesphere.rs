//! Lie sphere coordinates: points, oriented spheres and oriented planes of
//! ℝ³ ∪ {∞} as null lines of E(4,2), conformal inversion, and oriented
//! contact.
//!
//! Coordinates, with c² the squared Euclidean norm of the center:
//!
//! | entity            | representative                                   |
//! |-------------------|--------------------------------------------------|
//! | point p           | (p, 0, −(1 − p²)/2, (1 + p²)/2)                  |
//! | sphere (c, r)     | (c, r, −(1 − c² + r²)/2, (1 + c² − r²)/2)        |
//! | plane x·n = h     | (n, 1, h, h)                                     |
//! | ∞                 | (0, 0, 0, 0, 1, 1)                               |
//!
//! Every representative is exactly null. Conformal inversion negates the
//! fifth coordinate; conformal infinity is the set of classes with equal
//! fifth and sixth coordinates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{projectivize_with, q_bilinear, q_form, ProjectiveNullLine, Tolerance, Vec6};
use crate::spin::ConformalMatrix6;

/// A Lie sphere of ℝ³ ∪ {∞}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LieEntity {
    Point {
        p: [f64; 3],
    },
    Infinity,
    Sphere {
        center: [f64; 3],
        signed_radius: f64,
    },
    Plane {
        normal: [f64; 3],
        offset: f64,
    },
}

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn finite3(a: &[f64; 3]) -> bool {
    a.iter().all(|v| v.is_finite())
}

impl LieEntity {
    pub fn validate(&self) -> Result<()> {
        match self {
            LieEntity::Point { p } if !finite3(p) => Err(Error::InvalidEntity("non-finite point")),
            LieEntity::Sphere {
                center,
                signed_radius,
            } => {
                if !finite3(center) || !signed_radius.is_finite() {
                    Err(Error::InvalidEntity("non-finite sphere"))
                } else if *signed_radius == 0.0 {
                    Err(Error::InvalidEntity("zero radius; use a point"))
                } else {
                    Ok(())
                }
            }
            LieEntity::Plane { normal, offset } => {
                if !finite3(normal) || !offset.is_finite() {
                    Err(Error::InvalidEntity("non-finite plane"))
                } else if (dot3(normal, normal).sqrt() - 1.0).abs() > 1e-12 {
                    Err(Error::InvalidEntity("plane normal is not a unit vector"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Largest difference in any parameter; infinite for different kinds.
    pub fn max_abs_diff(&self, other: &LieEntity) -> f64 {
        let d3 =
            |a: &[f64; 3], b: &[f64; 3]| (0..3).fold(0.0f64, |m, i| m.max((a[i] - b[i]).abs()));
        match (self, other) {
            (LieEntity::Infinity, LieEntity::Infinity) => 0.0,
            (LieEntity::Point { p: a }, LieEntity::Point { p: b }) => d3(a, b),
            (
                LieEntity::Sphere {
                    center: c1,
                    signed_radius: r1,
                },
                LieEntity::Sphere {
                    center: c2,
                    signed_radius: r2,
                },
            ) => d3(c1, c2).max((r1 - r2).abs()),
            (
                LieEntity::Plane {
                    normal: n1,
                    offset: h1,
                },
                LieEntity::Plane {
                    normal: n2,
                    offset: h2,
                },
            ) => d3(n1, n2).max((h1 - h2).abs()),
            _ => f64::INFINITY,
        }
    }
}

/// Raw (uncanonicalized) Lie coordinates.
pub fn lie_coordinates(ent: &LieEntity) -> Result<Vec6> {
    ent.validate()?;
    Ok(match *ent {
        LieEntity::Point { p } => sphere_coordinates(&p, 0.0),
        LieEntity::Sphere {
            center,
            signed_radius,
        } => sphere_coordinates(&center, signed_radius),
        LieEntity::Plane { normal, offset } => {
            Vec6([normal[0], normal[1], normal[2], 1.0, offset, offset])
        }
        LieEntity::Infinity => Vec6([0.0, 0.0, 0.0, 0.0, 1.0, 1.0]),
    })
}

fn sphere_coordinates(c: &[f64; 3], r: f64) -> Vec6 {
    let c2 = dot3(c, c);
    let r2 = r * r;
    Vec6([
        c[0],
        c[1],
        c[2],
        r,
        -(1.0 - c2 + r2) / 2.0,
        (1.0 + c2 - r2) / 2.0,
    ])
}

/// The null line of an entity.
pub fn lie_embed(ent: &LieEntity) -> Result<ProjectiveNullLine> {
    let x = lie_coordinates(ent)?;
    // The representative is null identically; rounding stays far below this.
    projectivize_with(&x, &Tolerance::uniform(1e-12))
}

/// Inverse of [`lie_embed`], classifying by the canonical representative.
pub fn lie_extract(p: &ProjectiveNullLine) -> Result<LieEntity> {
    lie_extract_with(p, 1e-9)
}

pub fn lie_extract_with(p: &ProjectiveNullLine, tol: f64) -> Result<LieEntity> {
    let a = p.rep();
    let scale = a.max_abs();
    let tol = tol * scale;
    if (a[4] - a[5]).abs() <= tol {
        let head = (0..4).fold(0.0f64, |m, i| m.max(a[i].abs()));
        if head <= tol {
            return Ok(LieEntity::Infinity);
        }
        if a[3].abs() <= tol {
            return Err(Error::Unclassifiable);
        }
        let normal = [a[0] / a[3], a[1] / a[3], a[2] / a[3]];
        if (dot3(&normal, &normal).sqrt() - 1.0).abs() > 1e-6 {
            return Err(Error::Unclassifiable);
        }
        // renormalize so the entity passes its own validation
        let n = dot3(&normal, &normal).sqrt();
        return Ok(LieEntity::Plane {
            normal: normal.map(|v| v / n),
            offset: a[4] / a[3],
        });
    }
    // sphere normal form has x⁶ − x⁵ = 1
    let s = 1.0 / (a[5] - a[4]);
    let center = [a[0] * s + 0.0, a[1] * s + 0.0, a[2] * s + 0.0];
    let radius = a[3] * s;
    let expected = sphere_coordinates(&center, radius);
    let fit = a.scale(s).max_abs_diff(&expected);
    if fit > 1e-9 * expected.max_abs().max(1.0) {
        return Err(Error::Unclassifiable);
    }
    if radius.abs() <= 1e-12 * dot3(&center, &center).sqrt().max(1.0) {
        Ok(LieEntity::Point { p: center })
    } else {
        Ok(LieEntity::Sphere {
            center,
            signed_radius: radius,
        })
    }
}

/// The O(4,2) reflection (x, t, v, w) ↦ (x, t, −v, w).
pub fn inversion_matrix() -> ConformalMatrix6 {
    let mut l = nalgebra::Matrix6::identity();
    l[(4, 4)] = -1.0;
    ConformalMatrix6 { l }
}

pub fn conformal_inversion(p: &ProjectiveNullLine) -> ProjectiveNullLine {
    let mut x = *p.rep();
    x[4] = -x[4];
    projectivize_with(&x, &Tolerance::uniform(1e-9))
        .expect("the reflection preserves nullity and nonzero-ness")
}

/// Whether the class lies at conformal infinity (x⁵ = x⁶).
pub fn is_at_infinity(p: &ProjectiveNullLine, tol: f64) -> bool {
    let a = p.rep();
    (a[4] - a[5]).abs() <= tol
}

/// Whether two entities are in oriented contact: their Lie coordinates are
/// orthogonal.
pub fn oriented_contact(a: &LieEntity, b: &LieEntity) -> Result<bool> {
    oriented_contact_with(a, b, 1e-9)
}

pub fn oriented_contact_with(a: &LieEntity, b: &LieEntity, tol: f64) -> Result<bool> {
    let pa = lie_embed(a)?;
    let pb = lie_embed(b)?;
    let (x, y) = (pa.rep(), pb.rep());
    Ok(q_bilinear(x, y).abs() <= tol * x.norm() * y.norm())
}

/// Findings of [`fixed_sphere_probe`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InfinityReport {
    pub sample_count: usize,
    /// Largest componentwise change of a canonical representative of the
    /// sphere `[(n, 1, 0, 0)]` under inversion.
    pub fixed_sphere_max_drift: f64,
    /// Largest |Q| over the sphere's representatives.
    pub fixed_sphere_max_null_residual: f64,
    /// Every probed class satisfied the conformal-infinity condition.
    pub fixed_sphere_at_infinity: bool,
    /// Smallest distance from a probed class to the inverted light cone.
    pub min_matching_residual: f64,
    /// Same distance for inverted light-cone classes themselves (control).
    pub lightcone_control_max_residual: f64,
    pub missing_confirmed: bool,
    pub lightcone_image_class: String,
}

/// Deterministic, roughly uniform unit vectors (golden-angle spiral); the
/// first of a single sample is (1, 0, 0).
pub fn spiral_normals(n: usize) -> Vec<[f64; 3]> {
    let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / n as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = golden * i as f64;
            [r * phi.cos(), r * phi.sin(), z]
        })
        .collect()
}

/// Hyperbolic-plane chart `(v, w)` of the inverted light cone, read from the
/// inversion of an actual light-cone event.
fn inverted_lightcone_chart() -> (f64, f64) {
    let event = sphere_coordinates(&[1.0, 0.0, 0.0], 1.0);
    let mut inv = event;
    inv[4] = -inv[4];
    (inv[4], inv[5])
}

/// `min_μ ‖μ·(a⁵, a⁶) − (v₀, w₀)‖`: how far the class is from the inverted
/// light cone `[(x, t, v₀, w₀)]`, x² = t². The first four slots can always
/// be matched for a null class at infinity, so only the chart slots count.
pub fn lightcone_matching_residual(p: &ProjectiveNullLine) -> f64 {
    let (v0, w0) = inverted_lightcone_chart();
    let a = p.rep();
    let (v, w) = (a[4], a[5]);
    let nn = v * v + w * w;
    let mu = if nn > 0.0 {
        (v * v0 + w * w0) / nn
    } else {
        0.0
    };
    ((mu * v - v0).powi(2) + (mu * w - w0).powi(2)).sqrt()
}

/// Probes the 2-sphere `[(n, 1, 0, 0)]`, |n| = 1, at conformal infinity:
/// checks it is null, at infinity and pointwise fixed by inversion, and
/// measures its distance from the image of the light cone under inversion.
pub fn fixed_sphere_probe(samples: usize) -> InfinityReport {
    let normals = spiral_normals(samples.max(1));
    let mut drift: f64 = 0.0;
    let mut null_res: f64 = 0.0;
    let mut all_infinite = true;
    let mut min_res = f64::INFINITY;
    let mut control: f64 = 0.0;
    for n in &normals {
        let x = Vec6([n[0], n[1], n[2], 1.0, 0.0, 0.0]);
        null_res = null_res.max(q_form(&x).abs());
        let class = projectivize_with(&x, &Tolerance::uniform(1e-12))
            .expect("(n, 1, 0, 0) is null for unit n");
        let inv = conformal_inversion(&class);
        drift = drift.max(class.rep().max_abs_diff(inv.rep()));
        all_infinite &= is_at_infinity(&class, 1e-12);
        min_res = min_res.min(lightcone_matching_residual(&class));

        // control: the inverted light-cone event over the same direction
        let event = LieEntity::Sphere {
            center: *n,
            signed_radius: 1.0,
        };
        if let Ok(e) = lie_embed(&event) {
            control = control.max(lightcone_matching_residual(&conformal_inversion(&e)));
        }
    }
    let (v0, w0) = inverted_lightcone_chart();
    InfinityReport {
        sample_count: normals.len(),
        fixed_sphere_max_drift: drift,
        fixed_sphere_max_null_residual: null_res,
        fixed_sphere_at_infinity: all_infinite,
        min_matching_residual: min_res,
        lightcone_control_max_residual: control,
        missing_confirmed: min_res >= 0.1,
        lightcone_image_class: format!("[(x, t, {v0}, {w0})] with x² = t²"),
    }
}
