//! Acceptance criteria, one PASS/FAIL line each. Every criterion runs at its
//! stated tolerance; the process exits nonzero if any fails.

use std::process::{Command, ExitCode};

use cmk::clifford::{
    check_anti_self_adjoint, check_clifford_relations, check_sigma_self_duality, check_x_reality,
    det_identity_full, Mat4,
};
use cmk::exterior::{basis_bivector, herm_inner, hodge_star, is_decomposable, phi};
use cmk::forms::{q_form, Vec6, Q_DIAG};
use cmk::isotropic::{
    idempotent_pair, linear_image, null_to_spinor_plane, partner_null_vector, plane_to_spinor_line,
    spinor_line_to_plane, SpinorLine, SpinorPlane,
};
use cmk::liesphere::{
    conformal_inversion, fixed_sphere_probe, lie_embed, oriented_contact, LieEntity,
};
use cmk::sampling::{self, SampleRng};
use cmk::spin::{covering_matrix, is_so_plus, su22_defect, SpinElement};
use num_complex::Complex64;

const SEED: u64 = 20240607;

type Maker = fn(&mut SampleRng) -> LieEntity;
type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn clifford_relations() -> Outcome {
    let r = check_clifford_relations(0.0);
    outcome(
        r.passed && r.checks_run == 36,
        format!(
            "{} anticommutators, max deviation {}",
            r.checks_run, r.max_deviation
        ),
    )
}

fn anti_self_adjoint() -> Outcome {
    let r = check_anti_self_adjoint(0.0);
    outcome(
        r.passed,
        format!(
            "{} operators, max deviation {}",
            r.checks_run, r.max_deviation
        ),
    )
}

fn self_duality_and_reality() -> Outcome {
    let dual = check_sigma_self_duality(0.0);
    let mut rng = sampling::rng(SEED);
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for _ in 0..1000 {
        let r = check_x_reality(&sampling::vec6(&mut rng), 1e-12);
        ok &= r.passed;
        worst = worst.max(r.max_deviation);
    }
    outcome(
        dual.passed && ok,
        format!(
            "self-duality deviation {}, reality over 1000 samples max {worst:e}",
            dual.max_deviation
        ),
    )
}

fn determinant() -> Outcome {
    let mut exact = true;
    for a in 1..=6 {
        let (re, q2, im) = det_identity_full(&Vec6::basis(a).unwrap());
        exact &= re == q2 && im == 0.0;
    }
    let mut rng = sampling::rng(SEED);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let x = sampling::vec6(&mut rng);
        let (re, q2, im) = det_identity_full(&x);
        let rel = (re - q2).abs().max(im.abs()) / q2.abs().max(x.norm_sq().powi(2) * 1e-3);
        worst = worst.max(rel);
    }
    outcome(
        exact && worst <= 1e-9,
        format!("exact on basis: {exact}, max relative deviation {worst:e}"),
    )
}

fn bivectors_and_star() -> Outcome {
    let mut gram: f64 = 0.0;
    let mut star_e: f64 = 0.0;
    for a in 1..=6 {
        let ea = basis_bivector(a).unwrap();
        star_e = star_e.max(hodge_star(&ea).max_abs_diff(&ea));
        for b in 1..=6 {
            let eb = basis_bivector(b).unwrap();
            let q = if a == b { Q_DIAG[a - 1] } else { 0.0 };
            gram = gram.max((herm_inner(&ea, &eb).unwrap() - q).norm());
        }
    }
    let mut rng = sampling::rng(SEED);
    let mut star_star: f64 = 0.0;
    let mut symmetry: f64 = 0.0;
    for _ in 0..200 {
        for k in 0..=4 {
            let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
            let y = sampling::kvector(&mut rng, k).unwrap();
            let x = sampling::kvector(&mut rng, 4 - k).unwrap();
            let ss = hodge_star(&hodge_star(&y));
            star_star = star_star.max(ss.max_abs_diff(&y.scale_real(sign)));
            let lhs = herm_inner(&x, &hodge_star(&y)).unwrap();
            let rhs = herm_inner(&y, &hodge_star(&x)).unwrap() * sign;
            symmetry = symmetry.max((lhs - rhs).norm());
        }
    }
    let tol = 1e-12;
    outcome(
        gram <= tol && star_e <= tol && star_star <= tol && symmetry <= tol,
        format!(
            "(E|E) = Q deviation {gram} (observed Gram matrix is -Q), *E = E {star_e:e}, \
             ** sign {star_star:e}, star symmetry {symmetry:e}"
        ),
    )
}

fn null_iff_decomposable() -> Outcome {
    let mut rng = sampling::rng(SEED);
    let mut wrong = 0;
    for _ in 0..500 {
        let x = sampling::null_vec6(&mut rng);
        wrong += usize::from(!is_decomposable(&phi(&x), 1e-9));
        let y = sampling::non_null_vec6(&mut rng);
        wrong += usize::from(is_decomposable(&phi(&y), 1e-9));
    }
    outcome(
        wrong == 0,
        format!("{wrong} misclassifications over 1000 vectors"),
    )
}

fn mat_dev(a: &Mat4, b: &Mat4) -> f64 {
    a.iter()
        .zip(b.iter())
        .fold(0.0, |m, (p, q)| m.max((p - q).norm()))
}

fn isotropic() -> Outcome {
    let mut rng = sampling::rng(SEED);
    let rank_tol = 1e-9;
    let (mut kernel_bad, mut image_bad, mut line_bad, mut n_bad) = (0, 0, 0, 0);
    let mut idem: f64 = 0.0;
    for _ in 0..200 {
        let x = sampling::null_vec6(&mut rng);
        let Ok(plane) = null_to_spinor_plane(&x) else {
            kernel_bad += 1;
            continue;
        };
        let y = partner_null_vector(&x).unwrap();
        let (p, q) = idempotent_pair(&x, &y);
        idem = idem
            .max(mat_dev(&(p * p).m, &p.m))
            .max(mat_dev(&(p + q).m, &Mat4::identity()))
            .max((p.trace() - Complex64::new(2.0, 0.0)).norm());
        let im = linear_image(&p, rank_tol);
        let same = im.len() == 2
            && SpinorPlane::new(im[0], im[1]).is_ok_and(|ip| ip.same_span(&plane, rank_tol));
        image_bad += usize::from(!same);
    }
    for _ in 0..200 {
        let v = SpinorLine::new(sampling::isotropic_spinor(&mut rng)).unwrap();
        let Ok(n) = spinor_line_to_plane(&v) else {
            n_bad += 1;
            continue;
        };
        let line = plane_to_spinor_line(&n);
        let line_ok = line.as_ref().is_ok_and(|l| l.same_line(&v, rank_tol));
        let plane_ok = line
            .and_then(|l| spinor_line_to_plane(&l))
            .is_ok_and(|m| m.same_span(&n, rank_tol));
        line_bad += usize::from(!(line_ok && plane_ok));
    }
    outcome(
        kernel_bad + image_bad + line_bad + n_bad == 0 && idem <= 1e-8,
        format!(
            "kernel dim failures {kernel_bad}, idempotent deviation {idem:e}, Im P != Ker X {image_bad}, \
             round-trip failures {line_bad}, N(v) dim failures {n_bad}"
        ),
    )
}

fn covering() -> Outcome {
    let mut rng = sampling::rng(SEED);
    let tol = 1e-8;
    let elems: Vec<SpinElement> = (0..200)
        .map(|_| sampling::spin_element(&mut rng, 2).unwrap())
        .collect();
    let mut member: f64 = 0.0;
    let mut hom: f64 = 0.0;
    let mut iso: f64 = 0.0;
    let mut det: f64 = 0.0;
    let mut so_plus = true;
    for (i, s) in elems.iter().enumerate() {
        let (u, d) = su22_defect(s.matrix());
        member = member.max(u).max(d);
        let l = covering_matrix(s).unwrap();
        iso = iso.max(l.isometry_defect());
        det = det.max((l.det() - 1.0).abs());
        so_plus &= is_so_plus(&l, tol);
        let t = elems[(i + 1) % elems.len()];
        let lt = covering_matrix(&t).unwrap();
        let lst = covering_matrix(&(*s * t)).unwrap();
        hom = hom.max((lst.l - l.l * lt.l).amax());
    }
    let id = covering_matrix(&SpinElement::identity()).unwrap().l;
    let minus = covering_matrix(&-SpinElement::identity()).unwrap().l;
    let i_id = covering_matrix(&SpinElement::i_identity()).unwrap().l;
    let centre = minus == id && i_id == -id;
    outcome(
        member <= tol && hom <= tol && iso <= tol && det <= tol && so_plus && centre,
        format!(
            "SU(2,2) defect {member:e}, homomorphism {hom:e}, LQL^t-Q {iso:e}, det-1 {det:e}, \
             SO+ {so_plus}, L(-I)=I and L(iI)=-I exactly: {centre}"
        ),
    )
}

fn lie_nullity() -> Outcome {
    let mut rng = sampling::rng(SEED);
    let kinds: [(&str, Maker); 4] = [
        ("point", sampling::point),
        ("sphere", sampling::sphere),
        ("plane", sampling::plane),
        ("infinity", |_| LieEntity::Infinity),
    ];
    let mut worst: f64 = 0.0;
    for (_, make) in kinds {
        for _ in 0..1000 {
            let class = lie_embed(&make(&mut rng)).unwrap();
            worst = worst.max(q_form(class.rep()).abs());
        }
    }
    outcome(
        worst <= 1e-12,
        format!("max |Q| over 4000 embeddings {worst:e}"),
    )
}

fn myth_report() -> Outcome {
    let report = fixed_sphere_probe(100);
    let origin = lie_embed(&LieEntity::Point { p: [0.0; 3] }).unwrap();
    let inf = lie_embed(&LieEntity::Infinity).unwrap();
    let exchange = conformal_inversion(&inf).approx_eq(&origin, 1e-12);
    let mut rng = sampling::rng(SEED);
    let mut involution: f64 = 0.0;
    for _ in 0..500 {
        let c = lie_embed(&sampling::entity(&mut rng)).unwrap();
        let twice = conformal_inversion(&conformal_inversion(&c));
        involution = involution.max(twice.rep().max_abs_diff(c.rep()));
    }
    outcome(
        report.fixed_sphere_max_drift <= 1e-12
            && report.fixed_sphere_at_infinity
            && report.min_matching_residual >= 0.1
            && exchange
            && involution <= 1e-12,
        format!(
            "drift {:e}, min matching residual {}, inversion(inf) = origin: {exchange}, \
             involution {involution:e}",
            report.fixed_sphere_max_drift, report.min_matching_residual
        ),
    )
}

fn contact() -> Outcome {
    let mut rng = sampling::rng(SEED);
    let mut disagreements = 0;
    let mut tangent = 0;
    for i in 0..2000 {
        let a = sampling::sphere(&mut rng);
        let LieEntity::Sphere {
            center: c1,
            signed_radius: r1,
        } = a
        else {
            unreachable!()
        };
        let b = if i % 2 == 0 {
            sampling::tangent_sphere(&mut rng, c1, r1)
        } else {
            sampling::sphere(&mut rng)
        };
        let LieEntity::Sphere {
            center: c2,
            signed_radius: r2,
        } = b
        else {
            unreachable!()
        };
        let d2: f64 = (0..3).map(|k| (c1[k] - c2[k]).powi(2)).sum();
        let oracle = (d2 - (r1 - r2).powi(2)).abs() <= 1e-9;
        tangent += usize::from(oracle);
        disagreements += usize::from(oriented_contact(&a, &b).unwrap() != oracle);
    }
    outcome(
        disagreements == 0,
        format!("{disagreements} disagreements over 2000 pairs ({tangent} tangent)"),
    )
}

fn cli_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_cmk"))
            .args(["verify", "--suite", "all", "--seed", "42"])
            .env_remove("CMK_TOL")
            .output()
            .expect("cmk runs")
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    let codes = (a.status.code(), b.status.code());
    outcome(
        same && codes == (Some(0), Some(0)),
        format!("identical output: {same}, exit codes {codes:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("clifford relations", clifford_relations),
        ("anti-self-adjointness", anti_self_adjoint),
        ("sigma self-duality and reality", self_duality_and_reality),
        ("determinant identity", determinant),
        ("bivector basis and Hodge star", bivectors_and_star),
        ("null iff decomposable", null_iff_decomposable),
        ("isotropic correspondence", isotropic),
        ("covering homomorphism", covering),
        ("lie sphere nullity", lie_nullity),
        ("myth report", myth_report),
        ("oriented contact oracle", contact),
        ("cli determinism", cli_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!(
            "{} [{:>2}] {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
        failed += usize::from(!o.passed);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
