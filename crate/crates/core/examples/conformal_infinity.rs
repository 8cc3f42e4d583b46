//! Conformal inversion and the 2-sphere at infinity that no inverted
//! light-cone point reaches.

use cmk::liesphere::{
    conformal_inversion, fixed_sphere_probe, is_at_infinity, lie_embed, LieEntity,
};

fn main() -> cmk::Result<()> {
    let origin = lie_embed(&LieEntity::Point { p: [0.0; 3] })?;
    let inf = lie_embed(&LieEntity::Infinity)?;
    println!("inversion(infinity) = {}", conformal_inversion(&inf).rep());
    println!("origin              = {}", origin.rep());

    let p = lie_embed(&LieEntity::Point { p: [2.0, 0.0, 0.0] })?;
    let q = conformal_inversion(&p);
    println!(
        "inversion of the point (2,0,0): {:?}",
        cmk::liesphere::lie_extract(&q)?
    );

    let cone = lie_embed(&LieEntity::Sphere {
        center: [0.0, 0.6, 0.8],
        signed_radius: 1.0,
    })?;
    let image = conformal_inversion(&cone);
    println!(
        "light-cone sphere (|c| = r) inverts to {}, at infinity: {}",
        image.rep(),
        is_at_infinity(&image, 1e-12)
    );

    let report = fixed_sphere_probe(100);
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("plain data")
    );
    Ok(())
}
