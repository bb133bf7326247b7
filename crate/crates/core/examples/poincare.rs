//! Factored Poincaré polynomials, ξ and χ(1) for every 3-tuple of partitions
//! of 2.

use reflectra::partition::{
    character_dimension, enumerate_partition_tuples, poincare_star_roots, xi_from_roots, DEFAULT_MAX_TUPLES,
};
use reflectra::Result;

fn main() -> Result<()> {
    let r = 3;
    for lambda in enumerate_partition_tuples(r, 2, DEFAULT_MAX_TUPLES)? {
        let roots = poincare_star_roots(&lambda, r)?;
        println!(
            "{:<8} R* = {:<14} R = {:<16} ξ = {:>3}  χ(1) = {}",
            lambda.to_string(),
            roots.star_factored(),
            roots.reciprocal_factored(),
            xi_from_roots(&roots)?,
            character_dimension(&lambda)?
        );
    }
    Ok(())
}
