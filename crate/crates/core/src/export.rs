//! CSV and JSON serialization of matrices and spectra. JSON documents carry
//! a top-level `"schema": 1`.

use serde::Serialize;

use crate::group::{Group, GroupParams};
use crate::spectra::{Eigenpair, GroupMatrix, MatrixKind, Method, RawCluster, Spectrum};

pub const SCHEMA_VERSION: u32 = 1;

/// Rows and columns follow this element order.
pub const ELEMENT_ORDER: &str = "lexicographic on (permutation, exponents)";

/// Integer entries, one row per line, no header.
pub fn matrix_csv(m: &GroupMatrix) -> String {
    let mut out = String::with_capacity(m.order() * m.order() * 3);
    for i in 0..m.order() {
        let row: Vec<String> = m.row(i).iter().map(i64::to_string).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize)]
pub struct ElementOrder {
    pub ordering: &'static str,
    pub elements: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct MatrixDocument<'a> {
    pub schema: u32,
    pub params: GroupParams,
    pub kind: MatrixKind,
    pub order: usize,
    pub element_order_reference: ElementOrder,
    pub entries: Vec<&'a [i64]>,
}

impl<'a> MatrixDocument<'a> {
    pub fn new(group: &Group, m: &'a GroupMatrix) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            params: group.params(),
            kind: m.kind,
            order: m.order(),
            element_order_reference: ElementOrder {
                ordering: ELEMENT_ORDER,
                elements: group.elements().iter().map(ToString::to_string).collect(),
            },
            entries: (0..m.order()).map(|i| m.row(i)).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumDocument<'a> {
    pub schema: u32,
    pub params: GroupParams,
    pub kind: MatrixKind,
    pub method: Method,
    pub integral: bool,
    pub max_residual: f64,
    pub eigenvalues: &'a [Eigenpair],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw_eigenvalues: Option<&'a [RawCluster]>,
}

impl<'a> SpectrumDocument<'a> {
    pub fn new(params: GroupParams, kind: MatrixKind, s: &'a Spectrum) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            params,
            kind,
            method: s.method,
            integral: s.is_integral(),
            max_residual: s.max_residual,
            eigenvalues: &s.eigenpairs,
            raw_eigenvalues: s.raw.as_deref(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
