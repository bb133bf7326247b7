//! Reflections, fixed-space codimension, reflection length, and the
//! closed-form largest eigenvalues coming from the degrees.

use crate::group::{Group, GroupElement, GroupParams};
use crate::error::{Error, Result};

/// `n` minus the number of cycles whose cycle-sum vanishes mod `r`.
pub fn codim(x: &GroupElement) -> usize {
    let fixed = x.cycle_type().pairs.iter().filter(|&&(_, c)| c == 0).count();
    x.rank() - fixed
}

/// The set `T` of all reflections (elements with a codimension-one fixed space).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionSet {
    members: Vec<usize>,
}

impl ReflectionSet {
    pub fn new(group: &Group) -> Self {
        let members = group
            .elements()
            .iter()
            .enumerate()
            .filter(|(_, x)| codim(x) == 1)
            .map(|(i, _)| i)
            .collect();
        Self { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// Left-multiplication columns `col[c][g] = index(c·g)` for a generating list.
pub(crate) fn left_multiplication(group: &Group, gens: &[usize]) -> Vec<Vec<usize>> {
    gens.iter()
        .map(|&c| (0..group.order()).map(|g| group.mul(c, g)).collect())
        .collect()
}

/// Breadth-first word lengths from the identity over left multiplication by `gens`.
pub fn word_lengths(group: &Group, gens: &[usize]) -> Result<Vec<u32>> {
    let cols = left_multiplication(group, gens);
    let lengths = bfs_from(0, group.order(), &cols);
    let reached = lengths.iter().filter(|&&d| d != u32::MAX).count();
    if reached != group.order() {
        return Err(Error::NotConnected {
            reached,
            order: group.order(),
        });
    }
    Ok(lengths)
}

pub(crate) fn bfs_from(source: usize, order: usize, cols: &[Vec<usize>]) -> Vec<u32> {
    let mut dist = vec![u32::MAX; order];
    let mut frontier = vec![source];
    let mut next = Vec::new();
    dist[source] = 0;
    let mut depth = 0;
    while !frontier.is_empty() {
        depth += 1;
        for &g in &frontier {
            for col in cols {
                let h = col[g];
                if dist[h] == u32::MAX {
                    dist[h] = depth;
                    next.push(h);
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
    dist
}

/// Per-element reflection length `ℓ_T` and codimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthTable {
    pub lengths: Vec<u32>,
    pub codims: Vec<u32>,
}

impl LengthTable {
    pub fn compute(group: &Group, reflections: &ReflectionSet) -> Self {
        let lengths = word_lengths(group, reflections.members())
            .expect("reflections generate G(r,p,n)");
        let codims = group.elements().iter().map(|x| codim(x) as u32).collect();
        Self { lengths, codims }
    }

    pub fn sum_lengths(&self) -> u64 {
        self.lengths.iter().map(|&l| l as u64).sum()
    }

    pub fn sum_codims(&self) -> u64 {
        self.codims.iter().map(|&c| c as u64).sum()
    }
}

pub fn reflection_length_table(group: &Group) -> LengthTable {
    LengthTable::compute(group, &ReflectionSet::new(group))
}

pub fn sum_reflection_lengths(table: &LengthTable) -> u64 {
    table.sum_lengths()
}

/// Degrees of the basic invariants of `G(r,p,n)`: `r, 2r, …, (n−1)r, nr/p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeData {
    pub degrees: Vec<u64>,
}

impl DegreeData {
    pub fn new(params: GroupParams) -> Result<Self> {
        let GroupParams { r, p, n } = params;
        let (r, p, n) = (r as u64, p as u64, n as u64);
        let mut degrees: Vec<u64> = (1..n).map(|k| k * r).collect();
        degrees.push(n * r / p);
        let product = degrees
            .iter()
            .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
            .ok_or(Error::Overflow("product of degrees"))?;
        if Some(product) != params.order() {
            return Err(Error::Consistency(format!(
                "degrees {degrees:?} of {params} multiply to {product}, not the group order"
            )));
        }
        Ok(Self { degrees })
    }

    pub fn exponents(&self) -> Vec<u64> {
        self.degrees.iter().map(|d| d - 1).collect()
    }

    pub fn order(&self) -> u64 {
        self.degrees.iter().product()
    }

    /// `|W| Σ (d_i − 1)/d_i`; each term is an integer because `d_i` divides `|W|`.
    pub fn eta1(&self) -> u64 {
        let w = self.order();
        self.degrees.iter().map(|&d| w / d * (d - 1)).sum()
    }
}

/// `d/dt Π(1 + m_i t)` at `t = 1`, i.e. `Σ_i m_i Π_{j≠i} (1 + m_j)`.
pub fn xi1_closed_form(degrees: &DegreeData) -> u64 {
    let m = degrees.exponents();
    (0..m.len())
        .map(|i| {
            m[i] * m
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &mj)| 1 + mj)
                .product::<u64>()
        })
        .sum()
}

/// True iff every reflection squares to the identity.
pub fn all_reflections_order_two(group: &Group, reflections: &ReflectionSet) -> bool {
    reflections
        .members()
        .iter()
        .all(|&t| group.mul(t, t) == 0)
}
