//! Export the distance matrix of G(3,3,2) as CSV and as a JSON document.

use reflectra::export::{matrix_csv, to_json, MatrixDocument};
use reflectra::{Connection, GroupParams, MatrixKind, ReflectionGroup, Result};

fn main() -> Result<()> {
    let rg = ReflectionGroup::new(GroupParams::new(3, 3, 2)?)?;
    let m = rg.matrix(MatrixKind::Distance, Connection::AllReflections, 100)?;
    print!("{}", matrix_csv(&m));
    print!("{}", to_json(&MatrixDocument::new(&rg.group, &m)));
    Ok(())
}
