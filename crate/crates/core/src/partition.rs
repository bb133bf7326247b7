//! Partitions, r-tuples of partitions, and the factored Poincaré polynomials
//! `R*_λ(t) = Π (t + α)` of the irreducible characters of `G(r,1,n)`.
//!
//! Everything here is exact integer arithmetic on root lists; polynomial
//! coefficients are never expanded.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::factorial;
use crate::error::{param, Error, Result};
use crate::spectra::{Eigenpair, Method, Spectrum};

/// Default cap on the number of partition tuples enumerated at once.
pub const DEFAULT_MAX_TUPLES: usize = 1_000_000;

/// A weakly decreasing list of positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    rows: Vec<u32>,
}

impl Partition {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.iter().any(|&x| x == 0) {
            return param(format!("partition rows must be positive, got {rows:?}"));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return param(format!("partition rows must be weakly decreasing, got {rows:?}"));
        }
        Ok(Self { rows })
    }

    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Self {
        let width = self.rows.first().copied().unwrap_or(0);
        let rows = (0..width)
            .map(|j| self.rows.iter().filter(|&&len| len > j).count() as u32)
            .collect();
        Self { rows }
    }

    /// Contents `j − i` of the boxes, row by row.
    pub fn contents(&self) -> Vec<i64> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len as i64).map(move |j| j - i as i64))
            .collect()
    }

    /// Hook lengths of the boxes, row by row.
    pub fn hooks(&self) -> Vec<u64> {
        let cols = self.conjugate();
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| {
                let cols = &cols;
                (0..len).map(move |j| (len - j) as u64 + (cols.rows[j as usize] - i as u32) as u64 - 1)
            })
            .collect()
    }

    /// Number of standard Young tableaux, `|λ|! / Π hooks`.
    pub fn standard_tableaux(&self) -> Result<u128> {
        let total = factorial(self.size() as u64).ok_or(Error::Overflow("factorial"))?;
        Ok(total / self.hooks().iter().map(|&h| h as u128).product::<u128>())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let rows = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition row {x:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows)
    }
}

/// All partitions of `n` in decreasing lexicographic order, `(n)` first.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                rows: current.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// An r-tuple `(λ(0), …, λ(r−1))` of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionTuple {
    parts: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(parts: Vec<Partition>) -> Result<Self> {
        if parts.is_empty() {
            return param("a partition tuple needs at least one slot");
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().map(Partition::size).sum()
    }

    /// `λ(0) = (n)` with all other slots empty.
    pub fn trivial(r: u32, n: u32) -> Self {
        let mut parts = vec![Partition::empty(); r as usize];
        if n > 0 {
            parts[0] = Partition { rows: vec![n] };
        }
        Self { parts }
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PartitionTuple {
    type Err = Error;

    /// `"3,1||2"` is `((3,1), (), (2))`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s.split('|').map(str::parse).collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// The roots `α_i` of `R*_λ(t) = Π (t + α_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootList {
    pub roots: Vec<i64>,
}

fn grouped(roots: &[i64]) -> Vec<(i64, usize)> {
    let mut out: Vec<(i64, usize)> = Vec::new();
    for &a in roots {
        match out.iter_mut().find(|(b, _)| *b == a) {
            Some(entry) => entry.1 += 1,
            None => out.push((a, 1)),
        }
    }
    out
}

fn power(factor: String, k: usize) -> String {
    if k == 1 {
        factor
    } else {
        format!("{factor}^{k}")
    }
}

impl RootList {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `R*(t)` in factored form, e.g. `(t+2)(t+5)`.
    pub fn star_factored(&self) -> String {
        let s: String = grouped(&self.roots)
            .into_iter()
            .map(|(a, k)| {
                let factor = match a {
                    0 => "t".to_string(),
                    a if a > 0 => format!("(t+{a})"),
                    a => format!("(t-{})", -a),
                };
                power(factor, k)
            })
            .collect();
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }

    /// `R(t) = tⁿ R*(1/t) = Π (1 + α t)` in factored form.
    pub fn reciprocal_factored(&self) -> String {
        let s: String = grouped(&self.roots)
            .into_iter()
            .filter(|&(a, _)| a != 0)
            .map(|(a, k)| {
                let factor = match a {
                    1 => "(1+t)".to_string(),
                    -1 => "(1-t)".to_string(),
                    a if a > 0 => format!("(1+{a}t)"),
                    a => format!("(1-{}t)", -a),
                };
                power(factor, k)
            })
            .collect();
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }
}

/// Roots of `R*_λ`: `r−1+r·c` over the contents of `λ(0)` and `−1+r·c` over
/// the contents of the other slots.
pub fn poincare_star_roots(lambda: &PartitionTuple, r: u32) -> Result<RootList> {
    if r == 0 || lambda.r() != r as usize {
        return param(format!(
            "tuple {lambda} has {} slots but r = {r}",
            lambda.r()
        ));
    }
    let r = r as i64;
    let mut roots = Vec::with_capacity(lambda.size() as usize);
    for (k, part) in lambda.parts.iter().enumerate() {
        let shift = if k == 0 { r - 1 } else { -1 };
        roots.extend(part.contents().into_iter().map(|c| shift + r * c));
    }
    Ok(RootList { roots })
}

/// `R′(1) = Σ_i α_i Π_{j≠i} (1 + α_j)`, accumulated with the product rule:
/// `(P, D) ← (P(1+α), D(1+α) + Pα)`.
pub fn xi_from_roots(roots: &RootList) -> Result<i128> {
    let overflow = || Error::Overflow("Poincaré derivative");
    let (mut p, mut d) = (1i128, 0i128);
    for &a in &roots.roots {
        let a = a as i128;
        let next_d = d
            .checked_mul(1 + a)
            .and_then(|x| x.checked_add(p.checked_mul(a)?))
            .ok_or_else(overflow)?;
        p = p.checked_mul(1 + a).ok_or_else(overflow)?;
        d = next_d;
    }
    Ok(d)
}

/// `χ_λ(1) = n! / Π |λ(k)|! · Π f^{λ(k)} = n! / Π hooks`.
pub fn character_dimension(lambda: &PartitionTuple) -> Result<u128> {
    let n = factorial(lambda.size() as u64).ok_or(Error::Overflow("factorial"))?;
    let hooks = lambda
        .parts
        .iter()
        .flat_map(|p| p.hooks())
        .try_fold(1u128, |acc, h| acc.checked_mul(h as u128))
        .ok_or(Error::Overflow("hook product"))?;
    Ok(n / hooks)
}

/// Number of r-tuples of partitions of total size `n`.
pub fn count_partition_tuples(r: u32, n: u32) -> Option<u128> {
    let n = n as usize;
    let p: Vec<u128> = (0..=n).map(|k| partitions_count(k as u32)).collect();
    let mut acc = vec![0u128; n + 1];
    acc[0] = 1;
    for _ in 0..r {
        let mut next = vec![0u128; n + 1];
        for (i, &a) in acc.iter().enumerate() {
            for j in 0..=n - i {
                next[i + j] = next[i + j].checked_add(a.checked_mul(p[j])?)?;
            }
        }
        acc = next;
    }
    Some(acc[n])
}

fn partitions_count(n: u32) -> u128 {
    let n = n as usize;
    let mut ways = vec![0u128; n + 1];
    ways[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            ways[total] += ways[total - part];
        }
    }
    ways[n]
}

/// Compositions of `n` into `r` ordered parts, decreasing lexicographically.
fn compositions(n: u32, r: u32) -> Vec<Vec<u32>> {
    fn go(remaining: u32, slots: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for first in (0..=remaining).rev() {
            current.push(first);
            go(remaining - first, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, r, &mut Vec::new(), &mut out);
    out
}

/// All r-tuples of total size `n`: compositions in decreasing lexicographic
/// order, then partitions per slot in decreasing lexicographic order. The
/// trivial tuple comes first.
pub fn enumerate_partition_tuples(r: u32, n: u32, cap: usize) -> Result<Vec<PartitionTuple>> {
    if r == 0 {
        return param("r must be positive");
    }
    let count = count_partition_tuples(r, n).ok_or(Error::Overflow("number of partition tuples"))?;
    if count > cap as u128 {
        return Err(Error::SizeLimit {
            what: "number of partition tuples",
            size: count,
            cap,
            hint: "",
        });
    }
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions).collect();
    let mut out = Vec::with_capacity(count as usize);
    for comp in compositions(n, r) {
        let choices: Vec<&Vec<Partition>> = comp.iter().map(|&s| &by_size[s as usize]).collect();
        let mut idx = vec![0usize; r as usize];
        'odometer: loop {
            out.push(PartitionTuple {
                parts: idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect(),
            });
            let mut k = r as usize;
            loop {
                if k == 0 {
                    break 'odometer;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
    Ok(out)
}

/// One character's contribution to the codimension spectrum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub eigenvalue: i128,
    pub multiplicity: u128,
    pub tuple: PartitionTuple,
}

/// `(ξ_λ, χ_λ(1)²)` for every r-tuple of total size `n`, in enumeration order.
pub fn codim_spectrum_entries(r: u32, n: u32, cap: usize) -> Result<Vec<SpectrumEntry>> {
    if n == 0 {
        return param("n must be positive");
    }
    enumerate_partition_tuples(r, n, cap)?
        .into_par_iter()
        .map(|tuple| {
            let xi = xi_from_roots(&poincare_star_roots(&tuple, r)?)?;
            let dim = character_dimension(&tuple)?;
            let multiplicity = dim.checked_mul(dim).ok_or(Error::Overflow("χ(1)²"))?;
            Ok(SpectrumEntry {
                eigenvalue: xi,
                multiplicity,
                tuple,
            })
        })
        .collect()
}

/// Codimension spectrum of `Γ(G(r,1,n), T)` from the root lists alone.
pub fn codim_spectrum_combinatorial(r: u32, n: u32, cap: usize) -> Result<Spectrum> {
    let mut map: BTreeMap<i64, usize> = BTreeMap::new();
    for e in codim_spectrum_entries(r, n, cap)? {
        let v = i64::try_from(e.eigenvalue).map_err(|_| Error::Overflow("eigenvalue"))?;
        let m = usize::try_from(e.multiplicity).map_err(|_| Error::Overflow("multiplicity"))?;
        let slot = map.entry(v).or_default();
        *slot = slot.checked_add(m).ok_or(Error::Overflow("multiplicity"))?;
    }
    Ok(Spectrum::from_map(map, Method::Combinatorial, 0.0))
}

/// Closed-form codimension (equivalently distance) spectra of
/// `Γ(G(r,1,2), T)` and `Γ(G(r,1,3), T)`. Entries with multiplicity zero
/// are kept.
pub fn closed_form_reference(r: u32, n: u32) -> Result<Vec<Eigenpair>> {
    if r < 2 {
        return param(format!("closed forms need r ≥ 2, got {r}"));
    }
    let r = r as i64;
    let table: Vec<(i64, i64)> = match n {
        2 => vec![
            (4 * r * r - 3 * r, 1),
            (r, r - 1),
            (0, 2 * r * r - 6 * r + 4),
            (-r, 5 * r - 4),
        ],
        3 => vec![
            (18 * r.pow(3) - 11 * r * r, 1),
            (r * r, 13 * r - 12),
            (0, 6 * r.pow(3) - 33 * r + 27),
            (-r * r, 9 * r - 9),
            (-2 * r * r, 11 * r - 7),
        ],
        _ => return param(format!("closed forms exist for n = 2 and n = 3 only, got {n}")),
    };
    Ok(table
        .into_iter()
        .map(|(eigenvalue, m)| Eigenpair {
            eigenvalue,
            multiplicity: m as usize,
        })
        .collect())
}
