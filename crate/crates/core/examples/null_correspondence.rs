//! Null lines of E(4,2), maximal isotropic spinor planes, and isotropic
//! spinor lines, mapped back and forth.

use cmk::forms::{projectivize, Spinor, Vec6};
use cmk::isotropic::{
    idempotent_pair, null_to_spinor_plane, partner_null_vector, plane_from_spinor_plane,
    plane_to_spinor_line, spinor_line_to_plane, SpinorLine,
};

fn main() -> cmk::Result<()> {
    let x = Vec6::new([1.0, 0.0, 0.0, 1.0, 0.0, 0.0]);
    let plane = null_to_spinor_plane(&x)?;
    println!("Ker X(x) for x = {x}:");
    for b in plane.basis() {
        println!("  {:?}", b.0.map(|z| (z.re, z.im)));
    }
    println!(
        "back to the null line: {}",
        plane_from_spinor_plane(&plane)?.rep()
    );

    let y = partner_null_vector(&x)?;
    let (p, q) = idempotent_pair(&x, &y);
    println!(
        "partner y = {y}; Tr(xy) = {}, Tr(yx) = {}",
        p.trace(),
        q.trace()
    );

    let v = SpinorLine::new(Spinor::from_real([1.0, 0.0, 0.0, -1.0]))?;
    let n = spinor_line_to_plane(&v)?;
    println!("N(v) for v = (1, 0, 0, -1):");
    for b in n.basis() {
        println!("  {b}");
    }
    println!("contains [1,0,0,1,0,0]: {}", n.contains(&x, 1e-9));
    let back = plane_to_spinor_line(&n)?;
    println!("Im(x1 x2) is the same line: {}", back.same_line(&v, 1e-9));
    println!("canonical class of x: {}", projectivize(&x)?.rep());
    Ok(())
}
