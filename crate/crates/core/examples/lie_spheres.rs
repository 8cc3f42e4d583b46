//! Lie sphere coordinates of points, spheres and planes, with oriented
//! contact read off the quadratic form.

use cmk::forms::q_form;
use cmk::liesphere::{lie_embed, lie_extract, oriented_contact, LieEntity};

fn main() -> cmk::Result<()> {
    let unit = LieEntity::Sphere {
        center: [0.0; 3],
        signed_radius: 1.0,
    };
    let entities = [
        ("origin", LieEntity::Point { p: [0.0; 3] }),
        ("infinity", LieEntity::Infinity),
        ("unit sphere", unit),
        (
            "plane z = 2",
            LieEntity::Plane {
                normal: [0.0, 0.0, 1.0],
                offset: 2.0,
            },
        ),
    ];
    for (name, e) in &entities {
        let class = lie_embed(e)?;
        println!("{name:>12}: {}  Q = {}", class.rep(), q_form(class.rep()));
        println!("{:>12}  extracted back: {:?}", "", lie_extract(&class)?);
    }

    let others = [
        (
            "(3,0,0), r = -2",
            LieEntity::Sphere {
                center: [3.0, 0.0, 0.0],
                signed_radius: -2.0,
            },
        ),
        (
            "(3,0,0), r = 2",
            LieEntity::Sphere {
                center: [3.0, 0.0, 0.0],
                signed_radius: 2.0,
            },
        ),
        ("point (1,0,0)", LieEntity::Point { p: [1.0, 0.0, 0.0] }),
        (
            "plane x = 1",
            LieEntity::Plane {
                normal: [1.0, 0.0, 0.0],
                offset: 1.0,
            },
        ),
    ];
    for (name, e) in &others {
        println!(
            "unit sphere touches {name}: {}",
            oriented_contact(&unit, e)?
        );
    }
    Ok(())
}
