use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{factorial, gcd, lcm};
use crate::error::{param, Error, Result};

/// Parameters `(r, p, n)` of the monomial group `G(r,p,n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupParams {
    pub r: u32,
    pub p: u32,
    pub n: u32,
}

impl GroupParams {
    pub fn new(r: u32, p: u32, n: u32) -> Result<Self> {
        if r == 0 || p == 0 || n == 0 {
            return param(format!("G({r},{p},{n}): r, p and n must be positive"));
        }
        if r % p != 0 {
            return param(format!("G({r},{p},{n}): p = {p} does not divide r = {r}"));
        }
        if n > 20 {
            return param(format!("G({r},{p},{n}): rank above 20 is not supported"));
        }
        Ok(Self { r, p, n })
    }

    /// `r^n n! / p`, or `None` if it does not fit in 128 bits.
    pub fn order(&self) -> Option<u128> {
        let rn = (self.r as u128).checked_pow(self.n)?;
        let nf = factorial(self.n as u64)?;
        Some(rn.checked_mul(nf)? / self.p as u128)
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.r == self.r
            && x.rank() == self.n as usize
            && x.exponent_sum() % self.p as u64 == 0
    }

    /// Real (Coxeter) members of the family: `G(1,1,n)`, `G(2,1,n)`, `G(2,2,n)`,
    /// `G(r,r,2)`, and the rank-one groups of order at most 2.
    pub fn is_real(&self) -> bool {
        self.r <= 2 || (self.p == self.r && self.n == 2) || (self.n == 1 && self.r / self.p <= 2)
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{},{})", self.r, self.p, self.n)
    }
}

/// An element `(a_1,…,a_n | σ)`: exponents of `ζ_r` and a permutation.
///
/// It stands for the monomial matrix whose nonzero entries are `ζ^{a_i}` at
/// position `(i, σ⁻¹(i))`. The permutation is stored 0-based in one-line form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    r: u32,
    exponents: Vec<u32>,
    perm: Vec<u32>,
}

/// Multiset of `(cycle-size, cycle-sum mod r)` pairs, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType {
    pub pairs: Vec<(u32, u32)>,
}

impl CycleType {
    pub fn rank(&self) -> u32 {
        self.pairs.iter().map(|&(k, _)| k).sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (k, c)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({k},{c})")?;
        }
        write!(f, "}}")
    }
}

impl GroupElement {
    /// Builds an element from exponents (reduced mod `r`) and a 0-based permutation.
    pub fn new(r: u32, exponents: Vec<u32>, perm: Vec<u32>) -> Result<Self> {
        if r == 0 {
            return param("modulus r must be positive");
        }
        if exponents.len() != perm.len() || perm.is_empty() {
            return param(format!(
                "exponent vector has length {} but permutation has length {}",
                exponents.len(),
                perm.len()
            ));
        }
        let mut seen = vec![false; perm.len()];
        for &s in &perm {
            let s = s as usize;
            if s >= perm.len() || seen[s] {
                return param(format!("{perm:?} is not a permutation"));
            }
            seen[s] = true;
        }
        let exponents = exponents.into_iter().map(|a| a % r).collect();
        Ok(Self { r, exponents, perm })
    }

    pub(crate) fn from_parts_unchecked(r: u32, exponents: Vec<u32>, perm: Vec<u32>) -> Self {
        Self { r, exponents, perm }
    }

    pub fn identity(r: u32, n: usize) -> Self {
        Self {
            r,
            exponents: vec![0; n],
            perm: (0..n as u32).collect(),
        }
    }

    /// Parses `"a1,a2,...,an|p1 p2 ... pn"` with a 1-based one-line permutation.
    pub fn parse(r: u32, s: &str) -> Result<Self> {
        let (exps, perm) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("element {s:?} has no '|' separator")))?;
        let exponents = exps
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map(|a| a.rem_euclid(r as i64) as u32)
                    .map_err(|_| Error::Parse(format!("bad exponent {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let perm = perm
            .split_whitespace()
            .map(|t| match t.parse::<u32>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::Parse(format!("bad permutation entry {t:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(r, exponents, perm)
    }

    pub fn modulus(&self) -> u32 {
        self.r
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// The permutation in 0-based one-line form: `perm()[i] = σ(i)`.
    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    pub fn exponent_sum(&self) -> u64 {
        self.exponents.iter().map(|&a| a as u64).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(|&a| a == 0)
            && self.perm.iter().enumerate().all(|(i, &s)| s as usize == i)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.rank() != other.rank() {
            return param(format!(
                "cannot combine elements with (r, n) = ({}, {}) and ({}, {})",
                self.r,
                self.rank(),
                other.r,
                other.rank()
            ));
        }
        Ok(())
    }

    /// `(a | σ)(b | τ) = (a_i + b_{σ⁻¹(i)} | στ)`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.rank();
        let mut exponents = self.exponents.clone();
        let mut perm = vec![0u32; n];
        for j in 0..n {
            // i = σ(j), so σ⁻¹(i) = j.
            let i = self.perm[j] as usize;
            exponents[i] = (exponents[i] + other.exponents[j]) % self.r;
            perm[j] = self.perm[other.perm[j] as usize];
        }
        Self {
            r: self.r,
            exponents,
            perm,
        }
    }

    /// `(a | σ)⁻¹ = (c | σ⁻¹)` with `c_i = −a_{σ(i)}`.
    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut perm = vec![0u32; n];
        for (i, &s) in self.perm.iter().enumerate() {
            perm[s as usize] = i as u32;
        }
        let exponents = (0..n)
            .map(|i| (self.r - self.exponents[self.perm[i] as usize]) % self.r)
            .collect();
        Self {
            r: self.r,
            exponents,
            perm,
        }
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut result = Self::identity(self.r, self.rank());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            k >>= 1;
        }
        result
    }

    /// Cycles of the permutation, each listed from its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.perm[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut pairs: Vec<(u32, u32)> = self
            .cycles()
            .iter()
            .map(|c| {
                let sum: u64 = c.iter().map(|&i| self.exponents[i] as u64).sum();
                (c.len() as u32, (sum % self.r as u64) as u32)
            })
            .collect();
        pairs.sort_unstable();
        CycleType { pairs }
    }

    /// Element order: a block of size `k` with cycle-sum `c` has order `k·r/gcd(c, r)`.
    pub fn order(&self) -> u64 {
        let r = self.r as u64;
        self.cycle_type()
            .pairs
            .iter()
            .fold(1, |acc, &(k, c)| lcm(acc, k as u64 * (r / gcd(c as u64, r))))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "|")?;
        for (i, s) in self.perm.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", s + 1)?;
        }
        Ok(())
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Parses the `Display` form `{(k,c),(k,c)}`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("cycle type {s:?} must be braced")))?;
        let mut pairs = Vec::new();
        for chunk in inner.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let body = chunk.trim_start_matches(',').trim().trim_start_matches('(');
            let (k, c) = body
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad pair {chunk:?}")))?;
            let k = k.trim().parse().map_err(|_| Error::Parse(format!("bad size {k:?}")))?;
            let c = c.trim().parse().map_err(|_| Error::Parse(format!("bad sum {c:?}")))?;
            pairs.push((k, c));
        }
        pairs.sort_unstable();
        Ok(CycleType { pairs })
    }
}
