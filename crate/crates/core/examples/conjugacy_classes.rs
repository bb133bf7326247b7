//! Conjugacy classes of G(3,1,2) and how they merge into rational classes.

use reflectra::{Group, GroupParams, Result};

fn main() -> Result<()> {
    let g = Group::new(GroupParams::new(3, 1, 2)?)?;
    let classes = g.conjugacy_classes();
    let rational = classes.rational_classes(&g);
    println!("{} classes, {} rational classes", classes.len(), rational.len());
    for k in 0..rational.len() {
        let members: Vec<String> = rational
            .ordinary_classes(k)
            .iter()
            .map(|&c| format!("{} (size {})", g.element(classes.representative(c)), classes.size(c)))
            .collect();
        println!("  {}", members.join("  ~  "));
    }
    Ok(())
}
