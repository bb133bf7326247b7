//! Codimension spectra of G(r,1,n) from Young-diagram contents, well past the
//! sizes where the group could be enumerated.

use reflectra::partition::{codim_spectrum_combinatorial, count_partition_tuples, DEFAULT_MAX_TUPLES};
use reflectra::{GroupParams, Result};

fn main() -> Result<()> {
    for (r, n) in [(2, 2), (3, 3), (4, 4), (5, 6), (8, 5)] {
        let order = GroupParams::new(r, 1, n)?.order().unwrap();
        let s = codim_spectrum_combinatorial(r, n, DEFAULT_MAX_TUPLES)?;
        println!(
            "G({r},1,{n}) |G| = {order}, {} irreducibles: {s}",
            count_partition_tuples(r, n).unwrap()
        );
    }
    Ok(())
}
