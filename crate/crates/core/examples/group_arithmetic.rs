//! Multiply, invert and take orders of monomial elements of G(4,2,3).

use reflectra::{GroupElement, GroupParams, Result};

fn main() -> Result<()> {
    let params = GroupParams::new(4, 2, 3)?;
    println!("{params}: order {}", params.order().unwrap());

    let x = GroupElement::parse(4, "1,1,0|2 1 3")?;
    let y = GroupElement::parse(4, "0,3,1|1 3 2")?;
    let xy = x.multiply(&y)?;
    println!("x = {x}, y = {y}");
    println!("xy = {xy}, in group: {}", params.contains(&xy));
    println!("x^-1 = {}, o(x) = {}, o(xy) = {}", x.inverse(), x.order(), xy.order());
    println!("cycle type of xy: {:?}", xy.cycle_type());
    Ok(())
}
