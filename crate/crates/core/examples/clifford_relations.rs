//! The six antilinear operators Γ_α generate Cl(4,2): prints the
//! anticommutator table and the reality/determinant identities for a vector.

use cmk::clifford::{self, compose, gamma, x_matrix};
use cmk::forms::{q_form, Vec6};

fn main() -> cmk::Result<()> {
    println!("Γ_αΓ_β + Γ_βΓ_α = 2 Q_αβ I; entries are the scalar Q_αβ");
    for a in 1..=6 {
        let row: Vec<String> = (1..=6)
            .map(|b| {
                let (ga, gb) = (gamma(a).unwrap(), gamma(b).unwrap());
                let anti = compose(&ga, &gb) + compose(&gb, &ga);
                format!("{:>3}", anti.m[(0, 0)].re / 2.0)
            })
            .collect();
        println!("  {}", row.join(" "));
    }
    for (name, r) in [
        (
            "clifford relations",
            clifford::check_clifford_relations(0.0),
        ),
        ("anti-self-adjoint", clifford::check_anti_self_adjoint(0.0)),
        (
            "sigma self-duality",
            clifford::check_sigma_self_duality(0.0),
        ),
    ] {
        println!(
            "{name}: {} checks, max deviation {}",
            r.checks_run, r.max_deviation
        );
    }

    let x = Vec6::new([0.5, -1.0, 2.0, 1.5, 0.25, -0.75]);
    let (det, q2) = clifford::det_identity(&x);
    println!("x = {x}, Q(x) = {}", q_form(&x));
    println!("det X(x) = {det}, Q(x)^2 = {q2}");
    let back = clifford::vector_from_op(&x_matrix(&x))?;
    println!("vector read back from X(x): {back}");
    Ok(())
}
