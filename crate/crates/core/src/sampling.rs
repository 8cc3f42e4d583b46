//! Seeded generators for property checks.
//!
//! All randomness flows through ChaCha8 seeded from a `u64`, so a seed
//! reproduces the same samples on every platform.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exterior::{monomial_indices, KVector};
use crate::forms::{q_form, Spinor, Vec6};
use crate::liesphere::LieEntity;
use crate::spin::{spin_generate, SpinElement};

/// Identifier of the generator, recorded in report headers.
pub const RNG_NAME: &str = "ChaCha8Rng/rand_chacha-0.3";

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn unit(rng: &mut SampleRng) -> f64 {
    rng.gen_range(-1.0..1.0)
}

fn complex(rng: &mut SampleRng) -> Complex64 {
    Complex64::new(unit(rng), unit(rng))
}

/// Components uniform in [-1, 1).
pub fn vec6(rng: &mut SampleRng) -> Vec6 {
    Vec6(std::array::from_fn(|_| unit(rng)))
}

/// A vector with `|Q(x)| ≥ 0.05 ‖x‖²`.
pub fn non_null_vec6(rng: &mut SampleRng) -> Vec6 {
    loop {
        let x = vec6(rng);
        if q_form(&x).abs() >= 0.05 * x.norm_sq() {
            return x;
        }
    }
}

/// A null vector built by solving for the negative-signature pair:
/// (x⁴, x⁶) is placed on the circle of radius √(x₁²+x₂²+x₃²+x₅²).
pub fn null_vec6(rng: &mut SampleRng) -> Vec6 {
    loop {
        let mut x = vec6(rng);
        let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[4] * x[4]).sqrt();
        if r < 0.1 {
            continue;
        }
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        x[3] = r * theta.cos();
        x[5] = r * theta.sin();
        return x;
    }
}

/// A vector with `Q(x) = sign`, from rejection sampling `|Q| > 0.1` and
/// rescaling.
pub fn normalized_vec6(rng: &mut SampleRng, sign: f64) -> Vec6 {
    loop {
        let x = vec6(rng);
        let q = q_form(&x);
        if q.abs() > 0.1 && q.signum() == sign.signum() {
            return x.scale(1.0 / q.abs().sqrt());
        }
    }
}

/// A pair of unit vectors of a common, randomly chosen signature.
pub fn normalized_pair(rng: &mut SampleRng) -> (Vec6, Vec6) {
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    (normalized_vec6(rng, sign), normalized_vec6(rng, sign))
}

/// Product of `pairs` random vector pairs.
pub fn spin_element(rng: &mut SampleRng, pairs: usize) -> Result<SpinElement> {
    let list: Vec<_> = (0..pairs).map(|_| normalized_pair(rng)).collect();
    spin_generate(&list)
}

pub fn spinor(rng: &mut SampleRng) -> Spinor {
    Spinor(std::array::from_fn(|_| complex(rng)))
}

/// A spinor with `(v|v) = 0`: the (3,4) block is rescaled to the norm of
/// the (1,2) block.
pub fn isotropic_spinor(rng: &mut SampleRng) -> Spinor {
    loop {
        let v = spinor(rng);
        let top = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        let bottom = (v[2].norm_sqr() + v[3].norm_sqr()).sqrt();
        if top < 0.1 || bottom < 0.1 {
            continue;
        }
        let s = Complex64::new(top / bottom, 0.0);
        return Spinor([v[0], v[1], v[2] * s, v[3] * s]);
    }
}

pub fn kvector(rng: &mut SampleRng, grade: usize) -> Result<KVector> {
    let n = monomial_indices(grade).len();
    let vals: Vec<Complex64> = (0..n).map(|_| complex(rng)).collect();
    KVector::from_independent(grade, &vals)
}

fn vec3(rng: &mut SampleRng, scale: f64) -> [f64; 3] {
    std::array::from_fn(|_| scale * unit(rng))
}

fn unit_vec3(rng: &mut SampleRng) -> [f64; 3] {
    loop {
        let v = vec3(rng, 1.0);
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 0.1 && n <= 1.0 {
            return v.map(|c| c / n);
        }
    }
}

pub fn point(rng: &mut SampleRng) -> LieEntity {
    LieEntity::Point { p: vec3(rng, 3.0) }
}

/// Center in [-3, 3)³, |radius| in [0.1, 3).
pub fn sphere(rng: &mut SampleRng) -> LieEntity {
    let r = rng.gen_range(0.1..3.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    LieEntity::Sphere {
        center: vec3(rng, 3.0),
        signed_radius: r,
    }
}

pub fn plane(rng: &mut SampleRng) -> LieEntity {
    LieEntity::Plane {
        normal: unit_vec3(rng),
        offset: 3.0 * unit(rng),
    }
}

pub fn unit_normal(rng: &mut SampleRng) -> [f64; 3] {
    unit_vec3(rng)
}

/// A sphere tangent to `s` with matching orientation: centers at distance
/// |r₁ − r₂|.
pub fn tangent_sphere(rng: &mut SampleRng, center: [f64; 3], radius: f64) -> LieEntity {
    loop {
        let r2 = rng.gen_range(0.1..3.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        let d = (radius - r2).abs();
        if d < 0.05 {
            continue;
        }
        let n = unit_vec3(rng);
        return LieEntity::Sphere {
            center: std::array::from_fn(|i| center[i] + d * n[i]),
            signed_radius: r2,
        };
    }
}

/// A random entity of any kind.
pub fn entity(rng: &mut SampleRng) -> LieEntity {
    match rng.gen_range(0..4) {
        0 => point(rng),
        1 => sphere(rng),
        2 => plane(rng),
        _ => LieEntity::Infinity,
    }
}
