//! Character degrees and spectra from the class algebra alone, without
//! building a |G| x |G| matrix.

use reflectra::{GroupParams, MatrixKind, ReflectionGroup, Result};

fn main() -> Result<()> {
    let rg = ReflectionGroup::new(GroupParams::new(6, 2, 2)?)?;
    let data = rg.class_algebra()?;
    let degrees = data.degrees();
    println!("{}: {} classes, degrees {degrees:?}", rg.params(), data.num_classes());
    println!("Σ χ(1)² = {} = |G| = {}", degrees.iter().map(|d| d * d).sum::<u64>(), rg.order());
    for kind in [MatrixKind::Adjacency, MatrixKind::Distance, MatrixKind::Codimension] {
        let f = rg.class_function(kind)?;
        println!("{kind}: {}", data.spectrum(&f, 1e-8)?);
    }
    Ok(())
}
