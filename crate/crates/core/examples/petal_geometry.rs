//! Geometry of the petal `1 + asinh(D)`: extremes over `|z| <= r`, the
//! inscribed disks and the regions it is compared against.

use petal_radius::kernel::ComplexValue;
use petal_radius::petal::{
    bounds, contains, disk_in_petal, inclusion_geometry, inscribed_disk_radius, symmetry_residuals,
};

fn main() -> petal_radius::Result<()> {
    println!("   r    re_min    re_max    im_max");
    for r in [0.25, 0.5, 0.75, 1.0] {
        let b = bounds(r)?;
        println!(
            "{r:4.2}  {:8.6}  {:8.6}  {:8.6}",
            b.re_min, b.re_max, b.im_max
        );
    }

    println!(
        "\ninscribed disk about 1 at r = 1: radius {:.9}",
        inscribed_disk_radius(1.0)?
    );
    for a in [0.5, 1.0, 1.5] {
        let d = disk_in_petal(a)?;
        println!("largest disk centred at {a}: radius {:.9}", d.radius);
    }

    let geo = inclusion_geometry();
    println!(
        "\nRe w > {:.9} and Re w < {:.9} on the petal",
        geo.alpha_max, geo.beta_min
    );
    println!("k-ST is inside for k >= {:.9}", geo.k_min);
    println!("strongly starlike of order {:.9}", geo.gamma_min);
    println!("parabola {:?}", geo.parabola);
    println!("ellipse at k_min {:?}", geo.ellipse_at(geo.k_min)?);

    let s = symmetry_residuals(1024)?;
    println!(
        "\nsymmetry residuals: conjugation {:.1e}, vertical {:.1e}",
        s.conj_residual, s.vertical_residual
    );

    for w in [
        ComplexValue::new(1.0, 1.5),
        ComplexValue::new(1.0, 1.6),
        ComplexValue::new(0.1, 0.0),
    ] {
        println!("contains({w}) = {}", contains(w, 0.0));
    }
    Ok(())
}
