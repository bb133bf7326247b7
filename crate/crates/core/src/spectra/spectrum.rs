use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Raw eigenvalues closer than this are treated as one cluster before rounding.
pub const CLUSTER_TOLERANCE: f64 = 1e-6;

/// Default distance-to-integer tolerance for calling a spectrum integral.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Numeric,
    ClassAlgebra,
    Combinatorial,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Numeric => "numeric",
            Method::ClassAlgebra => "class-algebra",
            Method::Combinatorial => "combinatorial",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenpair {
    pub eigenvalue: i64,
    pub multiplicity: usize,
}

/// A cluster of raw eigenvalues that did not round to an integer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RawCluster {
    pub eigenvalue: f64,
    pub multiplicity: usize,
}

/// Eigenvalue multiset of a group matrix, sorted by descending eigenvalue.
///
/// When every raw eigenvalue lies within tolerance of an integer the spectrum
/// is integral and `eigenpairs` holds it; otherwise `eigenpairs` is empty and
/// `raw` keeps the clustered floating-point values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenpairs: Vec<Eigenpair>,
    pub method: Method,
    pub max_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub raw: Option<Vec<RawCluster>>,
}

impl Spectrum {
    /// Clusters weighted raw eigenvalues and rounds them when all are within
    /// `tolerance` of an integer.
    pub fn from_weighted(values: &[(f64, usize)], method: Method, tolerance: f64) -> Self {
        let mut sorted: Vec<(f64, usize)> = values.to_vec();
        sorted.sort_by(|a, b| b.0.total_cmp(&a.0));

        let mut clusters: Vec<(f64, usize, f64)> = Vec::new(); // (weighted sum, mult, last value)
        for (v, m) in sorted {
            match clusters.last_mut() {
                Some(c) if (c.2 - v).abs() <= CLUSTER_TOLERANCE => {
                    c.0 += v * m as f64;
                    c.1 += m;
                    c.2 = v;
                }
                _ => clusters.push((v * m as f64, m, v)),
            }
        }

        let max_residual = values
            .iter()
            .map(|&(v, _)| (v - v.round()).abs())
            .fold(0.0, f64::max);

        if max_residual <= tolerance {
            let mut merged: BTreeMap<i64, usize> = BTreeMap::new();
            for (sum, m, _) in clusters {
                *merged.entry((sum / m as f64).round() as i64).or_default() += m;
            }
            Self::from_map(merged, method, max_residual)
        } else {
            let raw = clusters
                .into_iter()
                .map(|(sum, m, _)| RawCluster {
                    eigenvalue: sum / m as f64,
                    multiplicity: m,
                })
                .collect();
            Self {
                eigenpairs: Vec::new(),
                method,
                max_residual,
                raw: Some(raw),
            }
        }
    }

    pub fn from_map(map: BTreeMap<i64, usize>, method: Method, max_residual: f64) -> Self {
        let eigenpairs = map
            .into_iter()
            .rev()
            .filter(|&(_, m)| m > 0)
            .map(|(eigenvalue, multiplicity)| Eigenpair {
                eigenvalue,
                multiplicity,
            })
            .collect();
        Self {
            eigenpairs,
            method,
            max_residual,
            raw: None,
        }
    }

    pub fn from_pairs(pairs: &[(i64, usize)], method: Method) -> Self {
        let mut map = BTreeMap::new();
        for &(v, m) in pairs {
            *map.entry(v).or_default() += m;
        }
        Self::from_map(map, method, 0.0)
    }

    pub fn is_integral(&self) -> bool {
        self.raw.is_none()
    }

    pub fn pairs(&self) -> Vec<(i64, usize)> {
        self.eigenpairs
            .iter()
            .map(|e| (e.eigenvalue, e.multiplicity))
            .collect()
    }

    /// Multiset equality of integral spectra, ignoring method and residual.
    pub fn same_eigenvalues(&self, other: &Spectrum) -> bool {
        self.is_integral() && other.is_integral() && self.eigenpairs == other.eigenpairs
    }

    pub fn total_multiplicity(&self) -> usize {
        match &self.raw {
            None => self.eigenpairs.iter().map(|e| e.multiplicity).sum(),
            Some(raw) => raw.iter().map(|c| c.multiplicity).sum(),
        }
    }

    pub fn trace(&self) -> i128 {
        self.eigenpairs
            .iter()
            .map(|e| e.eigenvalue as i128 * e.multiplicity as i128)
            .sum()
    }

    pub fn sum_of_squares(&self) -> i128 {
        self.eigenpairs
            .iter()
            .map(|e| (e.eigenvalue as i128).pow(2) * e.multiplicity as i128)
            .sum()
    }

    pub fn max_eigenpair(&self) -> Option<Eigenpair> {
        self.eigenpairs.first().copied()
    }

    pub fn symmetric_about_zero(&self) -> bool {
        let map: BTreeMap<i64, usize> = self
            .eigenpairs
            .iter()
            .map(|e| (e.eigenvalue, e.multiplicity))
            .collect();
        self.is_integral() && map.iter().all(|(v, m)| map.get(&-v) == Some(m))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        match &self.raw {
            None => {
                for (i, e) in self.eigenpairs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}^{}", e.eigenvalue, e.multiplicity)?;
                }
            }
            Some(raw) => {
                for (i, c) in raw.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    let v = if c.eigenvalue.abs() < 5e-7 { 0.0 } else { c.eigenvalue };
                    write!(f, "{v:.6}^{}", c.multiplicity)?;
                }
            }
        }
        write!(f, "}}")
    }
}
