//! SU(2,2) acting on E(4,2) and the double cover onto SO₊(4,2).

use cmk::forms::{q_form, Vec6};
use cmk::sampling;
use cmk::spin::{covering_matrix, is_so_plus, spin_from_vector_pair, vector_action, SpinElement};

fn main() -> cmk::Result<()> {
    let x = Vec6::basis(1)?;
    let y = Vec6::new([0.6, 0.8, 0.0, 0.0, 0.0, 0.0]);
    let s = spin_from_vector_pair(&x, &y)?;
    let l = covering_matrix(&s)?;
    println!("L(e1 y), y = (0.6, 0.8, 0, ...):{}", l.l);
    println!("in SO+(4,2): {}", is_so_plus(&l, 1e-12));

    for (name, u) in [
        ("-I", -SpinElement::identity()),
        ("iI", SpinElement::i_identity()),
    ] {
        let lu = covering_matrix(&u)?;
        println!(
            "L({name}) diagonal: {:?}",
            (0..6).map(|i| lu.l[(i, i)]).collect::<Vec<_>>()
        );
    }

    let mut rng = sampling::rng(7);
    let s1 = sampling::spin_element(&mut rng, 2)?;
    let s2 = sampling::spin_element(&mut rng, 2)?;
    let (l1, l2) = (covering_matrix(&s1)?, covering_matrix(&s2)?);
    let l12 = covering_matrix(&(s1 * s2))?;
    println!(
        "|L(s1 s2) - L(s1) L(s2)| = {:e}",
        (l12.l - l1.l * l2.l).amax()
    );

    let v = Vec6::new([1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
    let w = vector_action(&s1, &v)?;
    println!("Q(v) = {}, Q(s1 . v) = {}", q_form(&v), q_form(&w));
    Ok(())
}
