//! The antilinear Hodge star on Λ(H(2,2)) and the self-dual bivectors E_α.

use cmk::exterior::{
    basis_bivector, herm_inner, hodge_star, is_decomposable, phi, selfdual_split, wedge, KVector,
};
use cmk::forms::{q_form, Spinor, Vec6};
use num_complex::Complex64;

fn main() -> cmk::Result<()> {
    let e = |i| KVector::vector(&Spinor::basis(i));
    let e12 = wedge(&e(1), &e(2))?;
    println!(
        "*(e1^e2) = e3^e4: {}",
        hodge_star(&e12) == wedge(&e(3), &e(4))?
    );

    println!("Gram matrix (E_a|E_b):");
    for a in 1..=6 {
        let row: Vec<String> = (1..=6)
            .map(|b| {
                let ip = herm_inner(&basis_bivector(a).unwrap(), &basis_bivector(b).unwrap());
                format!("{:>3}", ip.unwrap().re)
            })
            .collect();
        println!("  {}", row.join(" "));
    }

    let b = wedge(&e(1), &e(3))?.scale(Complex64::new(0.0, 1.0)) + e12;
    let (plus, minus) = selfdual_split(&b);
    println!(
        "split of i e1^e3 + e1^e2: |b+| = {:.4}, |b-| = {:.4}, *b+ = b+ within {:e}",
        plus.norm(),
        minus.norm(),
        hodge_star(&plus).max_abs_diff(&plus)
    );

    for x in [
        Vec6::new([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]),
        Vec6::new([1.0, 2.0, 0.0, 0.0, 0.0, 0.0]),
    ] {
        let p = phi(&x);
        println!(
            "x = {x}: Q = {}, (phi|phi) = {}, decomposable = {}",
            q_form(&x),
            herm_inner(&p, &p)?.re,
            is_decomposable(&p, 1e-9)
        );
    }
    Ok(())
}
