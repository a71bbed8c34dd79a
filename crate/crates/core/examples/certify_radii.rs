//! Re-derives radius constants with the sampling oracle and prints the
//! comparison, then runs the inclusion checks.

use petal_radius::radii::{radius, radius_f, ClassId, NamedClass, RatioClass};
use petal_radius::verify::{certify, check_inclusion, InclusionRelation};

fn main() -> petal_radius::Result<()> {
    let classes = [
        ClassId::SAlpha { alpha: 0.5 },
        ClassId::KSt { k: 1.0 },
        ClassId::KAlpha { alpha: 0.0 },
        ClassId::Named(NamedClass::Lemniscate),
        ClassId::Named(NamedClass::Booth { alpha: 1.0 }),
        ClassId::JanowskiN {
            n: 1,
            c: 1.0,
            d: -1.0,
        },
        ClassId::Ratio {
            kind: RatioClass::F1,
            n: 2,
        },
    ];
    let mut results: Vec<_> = classes
        .iter()
        .map(|c| radius(*c))
        .collect::<Result<_, _>>()?;
    results.push(radius_f());
    for r in &results {
        let report = certify(r, 1e-6)?;
        println!(
            "{:<32} claimed {:.9} oracle {:.9} ({:?}) passed {}",
            report.claim, report.claimed, report.oracle, report.mode, report.passed
        );
    }
    println!();
    for rel in InclusionRelation::ALL {
        let report = check_inclusion(rel, 4096)?;
        println!(
            "{:<28} {:.12} vs {:.12} passed {}",
            report.claim, report.claimed, report.oracle, report.passed
        );
    }
    Ok(())
}
