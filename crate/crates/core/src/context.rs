//! A group bundled with its classes, reflections and length table, plus the
//! dispatch from (kind, method, connection set) to a spectrum.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{param, Error, Result};
use crate::group::{ConjugacyClasses, Group, GroupParams, DEFAULT_MAX_ORDER};
use crate::partition::{codim_spectrum_combinatorial, DEFAULT_MAX_TUPLES};
use crate::reflection::{reflection_length_table, LengthTable, ReflectionSet};
use crate::spectra::{
    adjacency_matrix, build_matrix, distance_matrix_bfs, spectrum_numeric, ClassAlgebraData,
    ClassFunction, ConnectionSet, GroupMatrix, MatrixKind, Method, Spectrum, DEFAULT_MAX_MATRIX,
    DEFAULT_TOLERANCE,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub enumeration: usize,
    pub matrix: usize,
    pub tuples: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            enumeration: DEFAULT_MAX_ORDER,
            matrix: DEFAULT_MAX_MATRIX,
            tuples: DEFAULT_MAX_TUPLES,
        }
    }
}

/// Which connection set defines the Cayley graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Connection {
    #[default]
    AllReflections,
    Standard,
}

impl fmt::Display for Connection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connection::AllReflections => "all-reflections",
            Connection::Standard => "standard",
        })
    }
}

impl FromStr for Connection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-reflections" => Ok(Self::AllReflections),
            "standard" => Ok(Self::Standard),
            _ => Err(Error::Parse(format!("unknown connection set {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRequest {
    pub kind: MatrixKind,
    pub method: Method,
    pub connection: Connection,
    pub tolerance: f64,
    pub caps: Caps,
}

impl SpectrumRequest {
    pub fn new(kind: MatrixKind, method: Method) -> Self {
        Self {
            kind,
            method,
            connection: Connection::AllReflections,
            tolerance: DEFAULT_TOLERANCE,
            caps: Caps::default(),
        }
    }

    /// Rejects combinations no route can serve.
    pub fn validate(&self, params: GroupParams) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return param(format!("tolerance must be positive, got {}", self.tolerance));
        }
        if self.kind == MatrixKind::Custom {
            return param("the custom kind needs an explicit class function");
        }
        if self.connection == Connection::Standard {
            if self.method != Method::Numeric {
                return param("standard generators give no class function; use --method numeric");
            }
            if self.kind == MatrixKind::Codimension {
                return param("the codimension matrix does not depend on a connection set");
            }
        }
        if self.method == Method::Combinatorial {
            if self.kind != MatrixKind::Codimension {
                return param(format!(
                    "the combinatorial route covers the codimension spectrum only, not {}",
                    self.kind
                ));
            }
            if params.p != 1 {
                return param(format!("the combinatorial route needs p = 1, got {params}"));
            }
        }
        Ok(())
    }
}

/// `G(r,p,n)` with its classes, reflections and `ℓ_T`/codim table.
#[derive(Debug, Clone)]
pub struct ReflectionGroup {
    pub group: Group,
    pub classes: ConjugacyClasses,
    pub reflections: ReflectionSet,
    pub lengths: LengthTable,
}

impl ReflectionGroup {
    pub fn new(params: GroupParams) -> Result<Self> {
        Self::with_cap(params, DEFAULT_MAX_ORDER)
    }

    pub fn with_cap(params: GroupParams, cap: usize) -> Result<Self> {
        let group = Group::with_cap(params, cap)?;
        let classes = group.conjugacy_classes();
        let reflections = ReflectionSet::new(&group);
        let lengths = reflection_length_table(&group);
        Ok(Self {
            group,
            classes,
            reflections,
            lengths,
        })
    }

    pub fn params(&self) -> GroupParams {
        self.group.params()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// `δ_T`, `ℓ_T` or codim as a class function.
    pub fn class_function(&self, kind: MatrixKind) -> Result<ClassFunction> {
        let (name, per): (&str, Vec<i64>) = match kind {
            MatrixKind::Adjacency => (
                "delta_T",
                (0..self.order()).map(|x| self.reflections.contains(x) as i64).collect(),
            ),
            MatrixKind::Distance => ("ell_T", self.lengths.lengths.iter().map(|&l| l as i64).collect()),
            MatrixKind::Codimension => ("codim", self.lengths.codims.iter().map(|&c| c as i64).collect()),
            MatrixKind::Custom => return param("the custom kind has no built-in class function"),
        };
        ClassFunction::from_element_values(name, &self.classes, &per)
    }

    pub fn matrix(&self, kind: MatrixKind, connection: Connection, cap: usize) -> Result<GroupMatrix> {
        match connection {
            Connection::AllReflections => {
                let f = self.class_function(kind)?;
                build_matrix(&self.group, &self.classes, &f, kind, cap)
            }
            Connection::Standard => {
                let s = ConnectionSet::standard(&self.group);
                match kind {
                    MatrixKind::Adjacency => adjacency_matrix(&self.group, &s, cap),
                    MatrixKind::Distance => distance_matrix_bfs(&self.group, &s, cap),
                    _ => param(format!("no {kind} matrix for the standard generating set")),
                }
            }
        }
    }

    pub fn class_algebra(&self) -> Result<ClassAlgebraData> {
        ClassAlgebraData::compute(&self.group, &self.classes)
    }
}

/// Computes the spectrum named by `req`. The combinatorial route never
/// enumerates the group.
pub fn compute_spectrum(params: GroupParams, req: &SpectrumRequest) -> Result<Spectrum> {
    req.validate(params)?;
    if req.method == Method::Combinatorial {
        return codim_spectrum_combinatorial(params.r, params.n, req.caps.tuples);
    }
    let rg = ReflectionGroup::with_cap(params, req.caps.enumeration)?;
    match req.method {
        Method::Numeric => {
            let m = rg.matrix(req.kind, req.connection, req.caps.matrix)?;
            spectrum_numeric(&m, req.tolerance)
        }
        Method::ClassAlgebra => {
            let f = rg.class_function(req.kind)?;
            rg.class_algebra()?.spectrum(&f, req.tolerance)
        }
        Method::Combinatorial => unreachable!("handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(r: u32, p: u32, n: u32) -> GroupParams {
        GroupParams::new(r, p, n).unwrap()
    }

    #[test]
    fn routes_agree_on_g312() {
        let p = params(3, 1, 2);
        let numeric = compute_spectrum(p, &SpectrumRequest::new(MatrixKind::Distance, Method::Numeric)).unwrap();
        assert_eq!(numeric.pairs(), vec![(27, 1), (3, 2), (0, 4), (-3, 11)]);
        for method in [Method::ClassAlgebra, Method::Combinatorial] {
            let s = compute_spectrum(p, &SpectrumRequest::new(MatrixKind::Codimension, method)).unwrap();
            assert!(s.same_eigenvalues(&numeric), "{method}: {s}");
        }
    }

    #[test]
    fn invalid_requests() {
        let p = params(3, 1, 2);
        let bad = [
            SpectrumRequest::new(MatrixKind::Adjacency, Method::Combinatorial),
            SpectrumRequest::new(MatrixKind::Custom, Method::Numeric),
            SpectrumRequest {
                connection: Connection::Standard,
                ..SpectrumRequest::new(MatrixKind::Distance, Method::ClassAlgebra)
            },
            SpectrumRequest {
                tolerance: 0.0,
                ..SpectrumRequest::new(MatrixKind::Distance, Method::Numeric)
            },
        ];
        for req in bad {
            assert!(matches!(compute_spectrum(p, &req), Err(Error::Parameter(_))), "{req:?}");
        }
        let req = SpectrumRequest::new(MatrixKind::Codimension, Method::Combinatorial);
        assert!(compute_spectrum(params(4, 2, 2), &req).is_err());
    }

    #[test]
    fn standard_generators_are_not_integral() {
        let req = SpectrumRequest {
            connection: Connection::Standard,
            ..SpectrumRequest::new(MatrixKind::Distance, Method::Numeric)
        };
        let s = compute_spectrum(params(3, 1, 2), &req).unwrap();
        assert!(!s.is_integral());
        assert_eq!(s.total_multiplicity(), 18);
    }
}
