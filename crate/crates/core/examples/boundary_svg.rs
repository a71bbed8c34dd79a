//! Writes the petal and its comparison curves to `petal.svg` (or the path
//! given as the first argument).

use petal_radius::cli::figure_svg;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "petal.svg".into());
    std::fs::write(&path, figure_svg(2048)?)?;
    println!("wrote {path}");
    Ok(())
}
