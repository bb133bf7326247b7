//! Reflection length against codimension. They agree in G(4,1,2) but not in
//! G(4,2,2).

use reflectra::{GroupParams, ReflectionGroup, Result};

fn main() -> Result<()> {
    for (r, p, n) in [(4, 1, 2), (4, 2, 2)] {
        let rg = ReflectionGroup::new(GroupParams::new(r, p, n)?)?;
        let t = &rg.lengths;
        let gaps: Vec<String> = (0..rg.order())
            .filter(|&x| t.lengths[x] != t.codims[x])
            .map(|x| format!("{} (ℓ_T {}, codim {})", rg.group.element(x), t.lengths[x], t.codims[x]))
            .collect();
        println!(
            "{}: Σ ℓ_T = {}, Σ codim = {}, {} elements with ℓ_T > codim",
            rg.params(),
            t.sum_lengths(),
            t.sum_codims(),
            gaps.len()
        );
        for line in gaps {
            println!("  {line}");
        }
    }
    Ok(())
}
