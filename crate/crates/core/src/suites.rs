//! Seeded verification suites behind `cmk verify`.
//!
//! Each suite draws from its own generator seeded with the user seed, so a
//! suite reports the same numbers whether it runs alone or inside `all`.
//! Boolean checks (ranks, classifications, component tests) count a failure
//! as a deviation of 1.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{
    check_anti_self_adjoint, check_clifford_relations, check_gamma_from_sigma,
    check_sigma_self_duality, check_x_reality, det_identity_full, max_entry_dev, LinearOp, Mat4,
    Report,
};
use crate::exterior::{
    basis_bivector, herm_inner, hodge_star, hodge_star_bivector_closed_form, is_decomposable,
    monomial_indices, phi, phi_inverse, wedge, KVector,
};
use crate::forms::{q_bilinear, q_form, Vec6, Q_DIAG};
use crate::isotropic::{
    dual_isotropic_plane, four_idempotents, idempotent_pair, linear_image, null_to_spinor_plane,
    partner_null_vector, plane_from_spinor_plane, plane_to_spinor_line, spinor_line_to_plane,
    SpinorLine, SpinorPlane,
};
use crate::liesphere::{
    conformal_inversion, fixed_sphere_probe, inversion_matrix, is_at_infinity, lie_embed,
    lie_extract, oriented_contact, LieEntity,
};
use crate::sampling::{self, SampleRng};
use crate::spin::{covering_matrix, is_so_plus, su22_defect, vector_action, SpinElement};

/// Names accepted by `verify --suite`, in the order `all` runs them.
pub const SUITES: [&str; 7] = [
    "clifford",
    "selfdual",
    "exterior",
    "hodge",
    "spin",
    "isotropic",
    "liesphere",
];

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite_name: String,
    pub checks_run: usize,
    pub max_deviation: f64,
    pub tol: f64,
    pub passed: bool,
    pub errata_notes: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Erratum {
    pub id: String,
    pub suites: Vec<String>,
    pub note: String,
}

/// The discrepancy notes shipped with the crate.
pub fn errata() -> Vec<Erratum> {
    serde_json::from_str(include_str!("../data/errata.json")).expect("bundled errata parse")
}

/// Notes attached to a suite or report name.
pub fn errata_for(name: &str) -> Vec<String> {
    errata()
        .into_iter()
        .filter(|e| e.suites.iter().any(|s| s == name))
        .map(|e| e.note)
        .collect()
}

/// Tolerance a suite uses unless overridden.
pub fn default_tol(suite: &str) -> Option<f64> {
    Some(match suite {
        "clifford" => 0.0,
        "selfdual" | "liesphere" => 1e-9,
        "exterior" | "hodge" => 1e-12,
        "spin" | "isotropic" => 1e-8,
        _ => return None,
    })
}

/// Runs one suite; `None` for an unknown name.
pub fn run_suite(name: &str, seed: u64, count: usize, tol: Option<f64>) -> Option<SuiteResult> {
    let tol = tol.or_else(|| default_tol(name))?;
    let mut rng = sampling::rng(seed);
    let count = count.max(1);
    let report = match name {
        "clifford" => clifford_suite(tol),
        "selfdual" => selfdual_suite(&mut rng, count, tol),
        "exterior" => exterior_suite(&mut rng, count, tol),
        "hodge" => hodge_suite(&mut rng, count, tol),
        "spin" => spin_suite(&mut rng, count, tol),
        "isotropic" => isotropic_suite(&mut rng, count, tol),
        "liesphere" => liesphere_suite(&mut rng, count, tol),
        _ => return None,
    };
    Some(SuiteResult {
        suite_name: name.to_string(),
        checks_run: report.checks_run,
        max_deviation: report.max_deviation,
        tol,
        passed: report.passed,
        errata_notes: errata_for(name),
    })
}

/// Runs `name`, or every suite for `"all"`.
pub fn run(name: &str, seed: u64, count: usize, tol: Option<f64>) -> Option<Vec<SuiteResult>> {
    if name == "all" {
        SUITES
            .iter()
            .map(|s| run_suite(s, seed, count, tol))
            .collect()
    } else {
        run_suite(name, seed, count, tol).map(|r| vec![r])
    }
}

fn flag(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

fn clifford_suite(tol: f64) -> Report {
    let mut r = Report::new("clifford", tol);
    r.merge(&check_clifford_relations(tol));
    r.merge(&check_anti_self_adjoint(tol));
    r.merge(&check_gamma_from_sigma(tol));
    r
}

fn selfdual_suite(rng: &mut SampleRng, count: usize, tol: f64) -> Report {
    let mut r = Report::new("selfdual", tol);
    r.merge(&check_sigma_self_duality(tol));
    for a in 1..=6 {
        let x = Vec6::basis(a).expect("index in range");
        let (re, q2, im) = det_identity_full(&x);
        r.record((re - q2).abs().max(im.abs()), || format!("det on e{a}"));
    }
    for i in 0..count {
        let x = sampling::vec6(rng);
        r.merge(&check_x_reality(&x, tol));
        let (re, q2, im) = det_identity_full(&x);
        let scale = x.norm_sq().powi(2).max(1e-300);
        r.record((re - q2).abs().max(im.abs()) / scale, || {
            format!("det sample {i}")
        });
        let b = phi(&x);
        r.record(hodge_star(&b).max_abs_diff(&b), || {
            format!("phi self-dual {i}")
        });
        let back = phi_inverse(&b).map(|y| y.max_abs_diff(&x)).unwrap_or(1.0);
        r.record(back, || format!("phi round trip {i}"));
    }
    r
}

fn exterior_suite(rng: &mut SampleRng, count: usize, tol: f64) -> Report {
    let mut r = Report::new("exterior", tol);
    // Gram matrix of the E_α against −Q
    for a in 1..=6 {
        for b in 1..=6 {
            let ea = basis_bivector(a).expect("index in range");
            let eb = basis_bivector(b).expect("index in range");
            let expected = if a == b { -Q_DIAG[a - 1] } else { 0.0 };
            let ip = herm_inner(&ea, &eb).expect("same grade");
            r.record((ip - expected).norm(), || format!("(E{a}|E{b})"));
        }
    }
    let e = KVector::volume();
    for i in 0..count {
        let x = sampling::vec6(rng);
        let b = phi(&x);
        let scale = x.norm_sq().max(1e-300);
        let n = herm_inner(&b, &b).expect("same grade");
        r.record((n.re + q_form(&x)).abs().max(n.im.abs()) / scale, || {
            format!("(phi|phi) sample {i}")
        });
        let bb = wedge(&b, &b).expect("grade 4");
        let target = e.scale_real(-q_form(&x));
        r.record(bb.max_abs_diff(&target) / scale, || {
            format!("phi^phi sample {i}")
        });

        // null iff decomposable, both directions
        let null = sampling::null_vec6(rng);
        r.record(flag(is_decomposable(&phi(&null), 1e-9)), || {
            format!("null sample {i} not decomposable")
        });
        let non_null = sampling::non_null_vec6(rng);
        r.record(flag(!is_decomposable(&phi(&non_null), 1e-9)), || {
            format!("non-null sample {i} decomposable")
        });

        // graded commutativity and hermitian symmetry
        let u = sampling::kvector(rng, 1).expect("grade 1");
        let w = sampling::kvector(rng, 2).expect("grade 2");
        let uw = wedge(&u, &w).expect("grade 3");
        let wu = wedge(&w, &u).expect("grade 3");
        r.record(uw.max_abs_diff(&wu) / (u.norm() * w.norm()), || {
            format!("graded commutativity {i}")
        });
        let v = sampling::kvector(rng, 2).expect("grade 2");
        let lhs = herm_inner(&w, &v).expect("same grade");
        let rhs = herm_inner(&v, &w).expect("same grade").conj();
        r.record((lhs - rhs).norm() / (w.norm() * v.norm()), || {
            format!("hermitian symmetry {i}")
        });
    }
    r
}

fn star_sign(k: usize) -> f64 {
    if (k * (4 - k)).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn hodge_suite(rng: &mut SampleRng, count: usize, tol: f64) -> Report {
    let mut r = Report::new("hodge", tol);
    let e = KVector::volume();
    for k in 0..=4 {
        for i in monomial_indices(k) {
            for j in monomial_indices(k) {
                let x = KVector::monomial(&i).expect("valid monomial");
                let y = KVector::monomial(&j).expect("valid monomial");
                let lhs = wedge(&x, &hodge_star(&y)).expect("grade 4");
                let rhs = e.scale(herm_inner(&x, &y).expect("same grade"));
                r.record(lhs.max_abs_diff(&rhs), || {
                    format!("defining relation {i:?} {j:?}")
                });
            }
        }
    }
    for a in 1..=6 {
        let ea = basis_bivector(a).expect("index in range");
        r.record(hodge_star(&ea).max_abs_diff(&ea), || format!("*E{a}"));
    }
    for n in 0..count {
        for k in 0..=4 {
            let y = sampling::kvector(rng, k).expect("valid grade");
            let scale = y.norm().max(1e-300);
            let ss = hodge_star(&hodge_star(&y));
            r.record(ss.max_abs_diff(&y.scale_real(star_sign(k))) / scale, || {
                format!("** grade {k} sample {n}")
            });
            // (x|*y) = ±(y|*x) with x of the complementary grade
            let x = sampling::kvector(rng, 4 - k).expect("valid grade");
            let lhs = herm_inner(&x, &hodge_star(&y)).expect("same grade");
            let rhs = herm_inner(&y, &hodge_star(&x)).expect("same grade") * star_sign(k);
            r.record((lhs - rhs).norm() / (scale * x.norm()), || {
                format!("star symmetry grade {k} sample {n}")
            });
            let lam = Complex64::new(sampling::vec6(rng)[0], sampling::vec6(rng)[1]);
            let anti = hodge_star(&y.scale(lam)).max_abs_diff(&hodge_star(&y).scale(lam.conj()));
            r.record(anti / scale, || {
                format!("antilinearity grade {k} sample {n}")
            });
        }
        let b = sampling::kvector(rng, 2).expect("grade 2");
        let closed = hodge_star_bivector_closed_form(&b).expect("grade 2");
        r.record(closed.max_abs_diff(&hodge_star(&b)) / b.norm(), || {
            format!("closed form sample {n}")
        });
    }
    r
}

fn spin_suite(rng: &mut SampleRng, count: usize, tol: f64) -> Report {
    let mut r = Report::new("spin", tol);
    let id = covering_matrix(&SpinElement::identity()).expect("identity acts");
    let minus = covering_matrix(&-SpinElement::identity()).expect("-I acts");
    let i_id = covering_matrix(&SpinElement::i_identity()).expect("iI acts");
    r.record((minus.l - id.l).amax(), || "L(-I) = I".into());
    r.record((i_id.l + id.l).amax(), || "L(iI) = -I".into());

    let mut prev: Option<SpinElement> = None;
    for i in 0..count {
        let s = match sampling::spin_element(rng, 2) {
            Ok(s) => s,
            Err(_) => {
                r.record(1.0, || format!("generator {i} rejected"));
                continue;
            }
        };
        let (u, d) = su22_defect(s.matrix());
        r.record(u.max(d), || format!("su22 membership {i}"));
        let l = match covering_matrix(&s) {
            Ok(l) => l,
            Err(_) => {
                r.record(1.0, || format!("action leaves span {i}"));
                continue;
            }
        };
        let big = l.l.amax().max(1.0);
        r.record(l.isometry_defect() / (big * big), || {
            format!("isometry {i}")
        });
        r.record((l.det() - 1.0).abs() / big.powi(6), || format!("det {i}"));
        r.record(flag(is_so_plus(&l, f64::INFINITY)), || {
            format!("SO+ component {i}")
        });
        let x = sampling::vec6(rng);
        match vector_action(&s, &x) {
            Ok(y) => r.record(
                (q_form(&y) - q_form(&x)).abs() / (big * big * x.norm_sq()),
                || format!("Q preserved {i}"),
            ),
            Err(_) => r.record(1.0, || format!("vector action {i}")),
        }
        if let Some(p) = prev {
            let lp = covering_matrix(&p).expect("checked on the previous step");
            match covering_matrix(&(p * s)) {
                Ok(lps) => {
                    let scale = (lp.l.amax() * big).max(1.0);
                    r.record((lps.l - lp.l * l.l).amax() / scale, || {
                        format!("homomorphism {i}")
                    });
                }
                Err(_) => r.record(1.0, || format!("product action {i}")),
            }
        }
        prev = Some(s);
    }
    r
}

fn op_dev(a: &LinearOp, b: &Mat4) -> f64 {
    max_entry_dev(&a.m, b)
}

fn isotropic_suite(rng: &mut SampleRng, count: usize, tol: f64) -> Report {
    let mut r = Report::new("isotropic", tol);
    let rank_tol = 1e-9;
    for i in 0..count {
        let x = sampling::null_vec6(rng);
        let plane = match null_to_spinor_plane(&x) {
            Ok(p) => p,
            Err(_) => {
                r.record(1.0, || format!("kernel dimension {i}"));
                continue;
            }
        };
        let y = partner_null_vector(&x).expect("x is null");
        r.record((q_bilinear(&x, &y) - 0.5).abs(), || format!("(x,y) {i}"));
        r.record(q_form(&y).abs() / y.norm_sq(), || {
            format!("partner null {i}")
        });
        let (p, q) = idempotent_pair(&x, &y);
        let ident = Mat4::identity();
        let scale = p.m.camax().max(1.0);
        r.record(op_dev(&(p * p), &p.m) / (scale * scale), || {
            format!("P^2 = P {i}")
        });
        r.record(op_dev(&(p + q), &ident) / scale, || {
            format!("P + Q = I {i}")
        });
        r.record(
            (p.trace() - Complex64::new(2.0, 0.0)).norm() / scale,
            || format!("Tr P {i}"),
        );
        let im = linear_image(&p, rank_tol);
        let same = im.len() == 2
            && SpinorPlane::new(im[0], im[1])
                .map(|ip| ip.same_span(&plane, rank_tol))
                .unwrap_or(false);
        r.record(flag(same), || format!("Im P = Ker X {i}"));
        let back = plane_from_spinor_plane(&plane)
            .map(|c| {
                c.rep()
                    .max_abs_diff(crate::forms::projectivize(&x).expect("null").rep())
            })
            .unwrap_or(1.0);
        r.record(back, || format!("null line round trip {i}"));

        let v = sampling::isotropic_spinor(rng);
        let line = SpinorLine::new(v).expect("isotropic by construction");
        let n = match spinor_line_to_plane(&line) {
            Ok(n) => n,
            Err(_) => {
                r.record(1.0, || format!("N(v) dimension {i}"));
                continue;
            }
        };
        let line_back = plane_to_spinor_line(&n)
            .map(|l| l.same_line(&line, rank_tol))
            .unwrap_or(false);
        r.record(flag(line_back), || format!("line round trip {i}"));
        let plane_back = plane_to_spinor_line(&n)
            .and_then(|l| spinor_line_to_plane(&l))
            .map(|m| m.same_span(&n, rank_tol))
            .unwrap_or(false);
        r.record(flag(plane_back), || format!("plane round trip {i}"));

        let dual = dual_isotropic_plane(&n);
        let rs = four_idempotents(&n, &dual);
        let sum = rs.iter().fold(LinearOp::new(Mat4::zeros()), |a, b| a + *b);
        let scale = rs.iter().fold(1.0f64, |m, op| m.max(op.m.camax()));
        r.record(op_dev(&sum, &ident) / scale, || format!("sum R = I {i}"));
        for (j, op) in rs.iter().enumerate() {
            r.record(op_dev(&(*op * *op), &op.m) / (scale * scale), || {
                format!("R{} idempotent {i}", j + 1)
            });
        }
    }
    r
}

fn sphere_pair_tangent(a: &LieEntity, b: &LieEntity) -> bool {
    match (a, b) {
        (
            LieEntity::Sphere {
                center: c1,
                signed_radius: r1,
            },
            LieEntity::Sphere {
                center: c2,
                signed_radius: r2,
            },
        ) => {
            let d2: f64 = (0..3).map(|i| (c1[i] - c2[i]).powi(2)).sum();
            (d2 - (r1 - r2).powi(2)).abs() <= 1e-9
        }
        _ => false,
    }
}

fn liesphere_suite(rng: &mut SampleRng, count: usize, tol: f64) -> Report {
    let mut r = Report::new("liesphere", tol);
    let kinds: [fn(&mut SampleRng) -> LieEntity; 4] =
        [sampling::point, sampling::sphere, sampling::plane, |_| {
            LieEntity::Infinity
        }];
    let mut classes = Vec::new();
    for i in 0..count {
        for make in kinds {
            let ent = make(rng);
            let class = lie_embed(&ent).expect("sampled entities are valid");
            r.record(q_form(class.rep()).abs(), || format!("nullity {ent:?}"));
            let back = lie_extract(&class)
                .map(|e| e.max_abs_diff(&ent))
                .unwrap_or(1.0);
            r.record(back, || format!("round trip {ent:?} sample {i}"));
            classes.push(class);
        }
    }
    let inv = inversion_matrix();
    r.record(inv.isometry_defect(), || "inversion isometry".into());
    let origin = lie_embed(&LieEntity::Point { p: [0.0; 3] }).expect("valid");
    let inf = lie_embed(&LieEntity::Infinity).expect("valid");
    r.record(
        conformal_inversion(&inf).rep().max_abs_diff(origin.rep()),
        || "inversion of infinity".into(),
    );
    r.record(
        conformal_inversion(&origin).rep().max_abs_diff(inf.rep()),
        || "inversion of origin".into(),
    );
    for (i, c) in classes.iter().enumerate() {
        let twice = conformal_inversion(&conformal_inversion(c));
        r.record(twice.rep().max_abs_diff(c.rep()), || {
            format!("involution {i}")
        });
    }
    let plane = lie_embed(&sampling::plane(rng)).expect("valid");
    r.record(flag(is_at_infinity(&plane, tol.max(1e-12))), || {
        "plane at infinity".into()
    });

    for i in 0..count {
        let a = sampling::sphere(rng);
        let b = if i % 2 == 0 {
            match a {
                LieEntity::Sphere {
                    center,
                    signed_radius,
                } => sampling::tangent_sphere(rng, center, signed_radius),
                _ => unreachable!("sampling::sphere returns spheres"),
            }
        } else {
            sampling::sphere(rng)
        };
        let lie = oriented_contact(&a, &b).expect("valid spheres");
        r.record(flag(lie == sphere_pair_tangent(&a, &b)), || {
            format!("contact agreement {i}")
        });
    }

    let probe = fixed_sphere_probe(count.min(100));
    r.record(probe.fixed_sphere_max_drift, || "fixed sphere drift".into());
    r.record(probe.fixed_sphere_max_null_residual, || {
        "fixed sphere nullity".into()
    });
    r.record(flag(probe.fixed_sphere_at_infinity), || {
        "fixed sphere at infinity".into()
    });
    r.record(flag(probe.missing_confirmed), || {
        "fixed sphere missing".into()
    });
    r
}
