//! Enumeration of the desk-scale parameter sets used by the verification
//! harness.

use crate::group::GroupParams;

/// Largest group order in the standard test set.
pub const TEST_SET_MAX_ORDER: u128 = 400;

/// Largest `r` in the standard test set; every `G(r,1,2)` with `2r² ≤ 400`
/// is included.
pub const TEST_SET_MAX_R: u32 = 14;

/// All `G(r,p,n)` with `r ≤ max_r`, `p | r` and order at most `max_order`,
/// sorted by `(order, r, p, n)`.
pub fn groups_up_to(max_order: u128, max_r: u32) -> Vec<GroupParams> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        for p in (1..=r).filter(|p| r % p == 0) {
            for n in 1.. {
                let params = GroupParams { r, p, n };
                match params.order() {
                    Some(o) if o <= max_order => out.push(params),
                    _ => break,
                }
            }
        }
    }
    out.sort_by_key(|g| (g.order(), g.r, g.p, g.n));
    out
}

/// The groups every theorem check runs over.
pub fn test_set() -> Vec<GroupParams> {
    groups_up_to(TEST_SET_MAX_ORDER, TEST_SET_MAX_R)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contains_named_groups() {
        let set = test_set();
        for (r, p, n) in [(4, 2, 2), (3, 3, 3), (4, 4, 3), (6, 2, 2), (6, 3, 2), (14, 1, 2), (2, 1, 4), (1, 1, 5)] {
            assert!(set.contains(&GroupParams { r, p, n }), "G({r},{p},{n})");
        }
        assert!(set.iter().all(|g| g.order().unwrap() <= 400));
        assert!(!set.contains(&GroupParams { r: 1, p: 1, n: 6 }));
    }
}
