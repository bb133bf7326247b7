//! Adjacency and distance spectra of the reflection Cayley graphs of the
//! dihedral groups G(r,r,2).

use reflectra::{compute_spectrum, GroupParams, MatrixKind, Method, Result, SpectrumRequest};

fn main() -> Result<()> {
    for r in 3..=8 {
        let params = GroupParams::new(r, r, 2)?;
        let adj = compute_spectrum(params, &SpectrumRequest::new(MatrixKind::Adjacency, Method::Numeric))?;
        let dist = compute_spectrum(params, &SpectrumRequest::new(MatrixKind::Distance, Method::Numeric))?;
        println!("{params}: adjacency {adj}  distance {dist}");
    }
    Ok(())
}
