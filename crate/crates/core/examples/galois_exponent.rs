//! For x in G(6,1,2) and d coprime to o(x), find a unit e mod 6 such that the
//! entrywise Galois twist α_e(x) is conjugate to x^d.

use reflectra::group::{find_galois_exponent, galois_apply};
use reflectra::{GroupElement, Result};

fn main() -> Result<()> {
    let x = GroupElement::parse(6, "1,4|2 1")?;
    let o = x.order();
    println!("x = {x}, o(x) = {o}");
    for d in (1..o).filter(|d| reflectra::arith::gcd(*d, o) == 1) {
        let e = find_galois_exponent(&x, d as i64)?;
        let twisted = galois_apply(&x, e)?;
        println!(
            "d = {d:>2}: e = {e}, α_e(x) = {twisted}, same cycle type as x^d: {}",
            twisted.cycle_type() == x.pow(d).cycle_type()
        );
    }
    Ok(())
}
