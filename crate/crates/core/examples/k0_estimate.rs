//! The certified convexity radius of the petal extremal against the
//! (uncertified) sampled estimate of the exact one.

use petal_radius::radii::convex_order_radius;
use petal_radius::verify::estimate_k0_radius;

fn main() -> petal_radius::Result<()> {
    let certified = convex_order_radius(0.0)?;
    println!("certified convexity radius: {:.10}", certified.value);
    for samples in [1024, 4096, 16384] {
        let e = estimate_k0_radius(samples)?;
        println!(
            "{samples:>6} angles: estimate {:.10} (experimental: {})",
            e.radius, e.experimental
        );
    }
    Ok(())
}
