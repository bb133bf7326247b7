use std::collections::BTreeMap;

use super::{CycleType, Group};
use crate::arith::gcd;

/// Ordinary conjugacy classes. Classes are listed by increasing
/// representative, and the representative is the lexicographically least
/// member, so class 0 is always `{1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClasses {
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl ConjugacyClasses {
    pub(crate) fn compute(group: &Group) -> Self {
        if group.params().p == 1 {
            Self::by_cycle_type(group)
        } else {
            Self::by_orbit_closure(group)
        }
    }

    /// In `G(r,1,n)` conjugacy is decided by the cycle type alone.
    fn by_cycle_type(group: &Group) -> Self {
        let mut fibers: BTreeMap<CycleType, Vec<usize>> = BTreeMap::new();
        for (i, x) in group.elements().iter().enumerate() {
            fibers.entry(x.cycle_type()).or_default().push(i);
        }
        Self::from_blocks(group.order(), fibers.into_values().collect())
    }

    /// Union-find closure of `x ~ s x s⁻¹` over the standard generators.
    pub(crate) fn by_orbit_closure(group: &Group) -> Self {
        let mut uf = UnionFind::new(group.order());
        for s in group.standard_generators() {
            for x in 0..group.order() {
                uf.union(x, group.conjugate(s, x));
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..group.order() {
            blocks.entry(uf.find(x)).or_default().push(x);
        }
        Self::from_blocks(group.order(), blocks.into_values().collect())
    }

    fn from_blocks(order: usize, mut members: Vec<Vec<usize>>) -> Self {
        for m in &mut members {
            m.sort_unstable();
        }
        members.sort_unstable_by_key(|m| m[0]);
        let mut class_of = vec![0; order];
        for (c, m) in members.iter().enumerate() {
            for &x in m {
                class_of[x] = c;
            }
        }
        Self { class_of, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_assignment(&self) -> &[usize] {
        &self.class_of
    }

    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    pub fn representative(&self, c: usize) -> usize {
        self.members[c][0]
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.members.iter().map(|m| m[0]).collect()
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    /// The class containing the inverses of class `c`.
    pub fn inverse_class(&self, group: &Group, c: usize) -> usize {
        self.class_of[group.inv(self.representative(c))]
    }

    pub fn rational_classes(&self, group: &Group) -> RationalClasses {
        RationalClasses::compute(group, self)
    }
}

/// Ordinary classes merged along `g ~ g^d` for `gcd(d, o(g)) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalClasses {
    rational_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl RationalClasses {
    fn compute(group: &Group, classes: &ConjugacyClasses) -> Self {
        let mut uf = UnionFind::new(classes.len());
        for c in 0..classes.len() {
            let g = classes.representative(c);
            let o = group.element(g).order();
            for d in 2..o {
                if gcd(d, o) == 1 {
                    uf.union(c, classes.class_of(group.pow(g, d)));
                }
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..classes.len() {
            blocks.entry(uf.find(c)).or_default().push(c);
        }
        let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
        out.sort_unstable_by_key(|b| b[0]);
        let mut rational_of = vec![0; classes.len()];
        for (k, b) in out.iter().enumerate() {
            for &c in b {
                rational_of[c] = k;
            }
        }
        Self {
            rational_of,
            classes: out,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Rational class index of ordinary class `c`.
    pub fn rational_of(&self, c: usize) -> usize {
        self.rational_of[c]
    }

    /// Ordinary class indices making up rational class `k`.
    pub fn ordinary_classes(&self, k: usize) -> &[usize] {
        &self.classes[k]
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so roots stay stable for ordering
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupParams;

    fn group(r: u32, p: u32, n: u32) -> Group {
        Group::new(GroupParams::new(r, p, n).unwrap()).unwrap()
    }

    /// Brute-force orbit of every element under conjugation by every element.
    fn brute_classes(g: &Group) -> Vec<Vec<usize>> {
        let mut seen = vec![false; g.order()];
        let mut out = Vec::new();
        for x in 0..g.order() {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..g.order()).map(|h| g.conjugate(h, x)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    fn as_blocks(c: &ConjugacyClasses) -> Vec<Vec<usize>> {
        (0..c.len()).map(|k| c.members(k).to_vec()).collect()
    }

    #[test]
    fn abelian_cyclic() {
        let g = group(3, 1, 1);
        let c = g.conjugacy_classes();
        assert_eq!(c.len(), 3);
        assert!(c.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn symmetric_group_s4() {
        let g = group(1, 1, 4);
        let c = g.conjugacy_classes();
        assert_eq!(c.len(), 5);
        let mut sizes = c.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn g312_has_nine_classes() {
        let g = group(3, 1, 2);
        let c = g.conjugacy_classes();
        assert_eq!(c.len(), 9);
        assert_eq!(as_blocks(&c), brute_classes(&g));
    }

    #[test]
    fn cycle_type_fibers_match_orbits() {
        for (r, n) in [(3, 2), (2, 3), (4, 2), (1, 4)] {
            let g = group(r, 1, n);
            let c = g.conjugacy_classes();
            assert_eq!(as_blocks(&c), brute_classes(&g), "G({r},1,{n})");
            assert_eq!(c, ConjugacyClasses::by_orbit_closure(&g));
        }
    }

    #[test]
    fn split_classes_for_p_above_one() {
        for (r, p, n) in [(4, 2, 2), (3, 3, 3), (6, 3, 2), (2, 2, 4), (4, 4, 2)] {
            let g = group(r, p, n);
            let c = g.conjugacy_classes();
            assert_eq!(as_blocks(&c), brute_classes(&g), "G({r},{p},{n})");
            assert_eq!(c.sizes().iter().sum::<usize>(), g.order());
            assert!(c.sizes().iter().all(|s| g.order() % s == 0));
        }
    }

    #[test]
    fn rational_classes_examples() {
        let g = group(3, 1, 1);
        let rc = g.conjugacy_classes().rational_classes(&g);
        assert_eq!(rc.len(), 2);
        assert_eq!(rc.ordinary_classes(0), &[0]);

        let g = group(1, 1, 4);
        let c = g.conjugacy_classes();
        let rc = c.rational_classes(&g);
        assert_eq!(rc.len(), c.len());
    }

    #[test]
    fn rational_classes_contain_coprime_powers() {
        for (r, p, n) in [(4, 2, 2), (3, 1, 2), (6, 3, 2), (5, 1, 2)] {
            let g = group(r, p, n);
            let c = g.conjugacy_classes();
            let rc = c.rational_classes(&g);
            assert_eq!(rc.ordinary_classes(rc.rational_of(0)), &[0]);
            for x in 0..g.order() {
                let o = g.element(x).order();
                for d in 1..=o {
                    if gcd(d, o) == 1 {
                        let y = g.pow(x, d);
                        assert_eq!(rc.rational_of(c.class_of(x)), rc.rational_of(c.class_of(y)));
                    }
                }
            }
        }
    }
}
