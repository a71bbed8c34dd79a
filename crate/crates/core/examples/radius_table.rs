//! Prints every radius constant the library knows, with its method and
//! whether it is sharp.
//!
//! ```text
//! cargo run --example radius_table
//! ```

use petal_radius::radii::{radius, radius_f, ClassId};
use petal_radius::verify::radius_claims;

fn main() -> petal_radius::Result<()> {
    println!("{:<36} {:>14}  {:<16} sharp", "class", "radius", "method");
    for class in radius_claims() {
        let r = match class {
            ClassId::F => radius_f(),
            other => radius(other)?,
        };
        let method = format!("{:?}", r.method);
        println!(
            "{:<36} {:>14.10}  {:<16} {}",
            class.to_string(),
            r.value,
            method,
            r.sharp
        );
    }
    Ok(())
}
