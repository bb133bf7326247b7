use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::jacobi::{jacobi_eigen, JacobiOptions};
use super::{ClassFunction, Method, Spectrum};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, Group};
use crate::reflection::{bfs_from, left_multiplication, word_lengths};

/// Default cap on the dimension of dense group matrices.
pub const DEFAULT_MAX_MATRIX: usize = 1200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Adjacency,
    Distance,
    Codimension,
    Custom,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Distance => "distance",
            MatrixKind::Codimension => "codimension",
            MatrixKind::Custom => "custom",
        })
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" => Ok(Self::Adjacency),
            "distance" => Ok(Self::Distance),
            "codimension" => Ok(Self::Codimension),
            "custom" => Ok(Self::Custom),
            _ => Err(Error::Parse(format!("unknown matrix kind {s:?}"))),
        }
    }
}

/// A symmetric connection set `C = C⁻¹` not containing the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    members: Vec<usize>,
}

impl ConnectionSet {
    pub fn new(group: &Group, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.first() == Some(&0) {
            return Err(Error::Parameter("connection set contains the identity".into()));
        }
        if let Some(&c) = members.iter().find(|&&c| members.binary_search(&group.inv(c)).is_err()) {
            return Err(Error::Parameter(format!(
                "connection set is not closed under inversion: missing the inverse of {}",
                group.element(c)
            )));
        }
        Ok(Self { members })
    }

    /// Standard generators together with their inverses.
    pub fn standard(group: &Group) -> Self {
        let mut members = group.standard_generators();
        let inverses: Vec<usize> = members.iter().map(|&s| group.inv(s)).collect();
        members.extend(inverses);
        Self::new(group, members).expect("standard generators are non-identity")
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

/// Dense integer matrix indexed by group elements in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMatrix {
    pub kind: MatrixKind,
    order: usize,
    entries: Vec<i64>,
}

impl GroupMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> i128 {
        (0..self.order).map(|i| self.get(i, i) as i128).sum()
    }

    pub fn frobenius_sq(&self) -> i128 {
        self.entries.iter().map(|&x| (x as i128).pow(2)).sum()
    }
}

fn check_matrix_cap(group: &Group, cap: usize) -> Result<()> {
    if group.order() > cap {
        return Err(Error::SizeLimit {
            what: "group matrix dimension",
            size: group.order() as u128,
            cap,
            hint: "; use the class-algebra or combinatorial route instead",
        });
    }
    Ok(())
}

/// `M_f = (f(g h⁻¹))_{g,h}`.
pub fn build_matrix(
    group: &Group,
    classes: &ConjugacyClasses,
    f: &ClassFunction,
    kind: MatrixKind,
    cap: usize,
) -> Result<GroupMatrix> {
    check_matrix_cap(group, cap)?;
    let n = group.order();
    let mut entries = vec![0i64; n * n];
    entries.par_chunks_mut(n).enumerate().for_each(|(g, row)| {
        for (h, e) in row.iter_mut().enumerate() {
            *e = f.at(classes, group.mul(g, group.inv(h)));
        }
    });
    Ok(GroupMatrix {
        kind,
        order: n,
        entries,
    })
}

/// Adjacency matrix of `Γ(G, C)`: `A(g,h) = 1` iff `g h⁻¹ ∈ C`.
pub fn adjacency_matrix(group: &Group, c: &ConnectionSet, cap: usize) -> Result<GroupMatrix> {
    check_matrix_cap(group, cap)?;
    let n = group.order();
    let mut entries = vec![0i64; n * n];
    entries.par_chunks_mut(n).enumerate().for_each(|(g, row)| {
        for (h, e) in row.iter_mut().enumerate() {
            *e = c.contains(group.mul(g, group.inv(h))) as i64;
        }
    });
    Ok(GroupMatrix {
        kind: MatrixKind::Adjacency,
        order: n,
        entries,
    })
}

/// All-pairs path lengths in `Γ(G, C)` with edges `{g, c·g}`, one BFS per
/// source vertex. Works for any symmetric generating `C`.
pub fn distance_matrix_bfs(group: &Group, c: &ConnectionSet, cap: usize) -> Result<GroupMatrix> {
    check_matrix_cap(group, cap)?;
    word_lengths(group, c.members())?;
    let n = group.order();
    let cols = left_multiplication(group, c.members());
    let mut entries = vec![0i64; n * n];
    entries.par_chunks_mut(n).enumerate().for_each(|(g, row)| {
        let dist = bfs_from(g, n, &cols);
        for (e, d) in row.iter_mut().zip(dist) {
            *e = d as i64;
        }
    });
    Ok(GroupMatrix {
        kind: MatrixKind::Distance,
        order: n,
        entries,
    })
}

/// Dense symmetric eigensolve followed by clustering and integer rounding.
pub fn spectrum_numeric(m: &GroupMatrix, tolerance: f64) -> Result<Spectrum> {
    if !(tolerance > 0.0) {
        return Err(Error::Parameter(format!("tolerance must be positive, got {tolerance}")));
    }
    if !m.is_symmetric() {
        return Err(Error::Parameter(format!("{} matrix is not symmetric", m.kind)));
    }
    let a: Vec<f64> = m.entries.iter().map(|&x| x as f64).collect();
    let eig = jacobi_eigen(a, m.order, false, &JacobiOptions::default())?;
    let weighted: Vec<(f64, usize)> = eig.values.into_iter().map(|v| (v, 1)).collect();
    Ok(Spectrum::from_weighted(&weighted, Method::Numeric, tolerance))
}
