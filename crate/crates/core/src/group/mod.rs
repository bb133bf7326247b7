//! The monomial groups `G(r,p,n)`: enumeration, arithmetic, conjugacy and
//! rational classes, and Galois automorphisms.

mod classes;
mod element;
mod galois;

pub use classes::{ConjugacyClasses, RationalClasses};
pub use element::{CycleType, GroupElement, GroupParams};
pub use galois::{find_galois_exponent, galois_apply};

use crate::error::{Error, Result};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_MAX_ORDER: usize = 20_000;

/// A fully enumerated `G(r,p,n)`.
///
/// Elements are ordered lexicographically on `(perm, exponents)`, so the
/// identity is always index 0. Indices are dense, and the index of any member
/// is computed arithmetically without a lookup table.
#[derive(Debug, Clone)]
pub struct Group {
    params: GroupParams,
    elements: Vec<GroupElement>,
    inverses: Vec<usize>,
    per_perm: usize,
}

impl Group {
    pub fn new(params: GroupParams) -> Result<Self> {
        Self::with_cap(params, DEFAULT_MAX_ORDER)
    }

    pub fn with_cap(params: GroupParams, cap: usize) -> Result<Self> {
        let order = params.order().unwrap_or(u128::MAX);
        if order > cap as u128 {
            return Err(Error::SizeLimit {
                what: "group order",
                size: order,
                cap,
                hint: " (raise it with REFLECTRA_MAX_ORDER)",
            });
        }
        let GroupParams { r, p, n } = params;
        let n = n as usize;
        let per_perm = (r as usize).pow(n as u32) / p as usize;
        let mut elements = Vec::with_capacity(order as usize);
        let mut perm: Vec<u32> = (0..n as u32).collect();
        loop {
            let mut exps = vec![0u32; n];
            loop {
                if exps.iter().map(|&a| a as u64).sum::<u64>() % p as u64 == 0 {
                    elements.push(GroupElement::from_parts_unchecked(r, exps.clone(), perm.clone()));
                }
                if !next_counter(&mut exps, r) {
                    break;
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        debug_assert_eq!(elements.len() as u128, order);
        let mut group = Self {
            params,
            elements,
            inverses: Vec::new(),
            per_perm,
        };
        group.inverses = (0..group.order())
            .map(|i| group.index_unchecked(&group.elements[i].inverse()))
            .collect();
        Ok(group)
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &GroupElement) -> Option<usize> {
        self.params.contains(x).then(|| self.index_unchecked(x))
    }

    fn index_unchecked(&self, x: &GroupElement) -> usize {
        let r = self.params.r as usize;
        let p = self.params.p as usize;
        let exps = x.exponents();
        let n = exps.len();
        let head = exps[..n - 1].iter().fold(0usize, |acc, &a| acc * r + a as usize);
        let exp_rank = head * (r / p) + exps[n - 1] as usize / p;
        permutation_rank(x.perm()) * self.per_perm + exp_rank
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.index_unchecked(&self.elements[i].mul_unchecked(&self.elements[j]))
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn pow(&self, i: usize, k: u64) -> usize {
        self.index_unchecked(&self.elements[i].pow(k))
    }

    /// Standard generating reflections: `diag(ζ^p,1,…)` (when nontrivial), the
    /// twisted transposition `(−1,1,0,…|(12))` (when `p > 1`), and the adjacent
    /// transpositions `(i,i+1)`.
    pub fn standard_generators(&self) -> Vec<usize> {
        let GroupParams { r, p, n } = self.params;
        let n = n as usize;
        let mut gens = Vec::new();
        let mut push = |e: GroupElement| {
            let i = self.index_of(&e).expect("generator lies in the group");
            if i != 0 && !gens.contains(&i) {
                gens.push(i);
            }
        };
        if p < r {
            let mut exps = vec![0; n];
            exps[0] = p;
            push(GroupElement::from_parts_unchecked(r, exps, (0..n as u32).collect()));
        }
        for k in 0..n.saturating_sub(1) {
            let mut perm: Vec<u32> = (0..n as u32).collect();
            perm.swap(k, k + 1);
            if k == 0 && p > 1 {
                let mut exps = vec![0; n];
                exps[0] = r - 1;
                exps[1] = 1;
                push(GroupElement::from_parts_unchecked(r, exps, perm.clone()));
            }
            push(GroupElement::from_parts_unchecked(r, vec![0; n], perm));
        }
        gens
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        ConjugacyClasses::compute(self)
    }
}

/// Lexicographic rank of a 0-based permutation (Lehmer code).
fn permutation_rank(perm: &[u32]) -> usize {
    let n = perm.len();
    let mut rank = 0usize;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&v| v < perm[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

fn next_counter(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_permutation(perm: &mut [u32]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
