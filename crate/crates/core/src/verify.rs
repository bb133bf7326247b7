//! Verification harness: named suites of theorem checks run at desk scale.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::gcd;
use crate::catalog::test_set;
use crate::context::ReflectionGroup;
use crate::error::{Error, Result};
use crate::group::{find_galois_exponent, galois_apply, Group, GroupElement, GroupParams};
use crate::partition::{closed_form_reference, codim_spectrum_combinatorial, DEFAULT_MAX_TUPLES};
use crate::reflection::{xi1_closed_form, DegreeData};
use crate::spectra::{
    bipartite_check, spectral_radius_check, spectrum_numeric, ClassAlgebraData, ConnectionSet,
    MatrixKind, Spectrum, DEFAULT_MAX_MATRIX, DEFAULT_TOLERANCE,
};

/// Distance-to-integer tolerance for the integrality sweep.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;

/// Distance from the integers that counts as visibly non-integral.
pub const NON_INTEGRAL_GAP: f64 = 1e-3;

const KINDS: [MatrixKind; 3] = [MatrixKind::Adjacency, MatrixKind::Distance, MatrixKind::Codimension];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Integrality,
    Dihedral,
    Tables,
    LengthCodim,
    RationalLength,
    Radius,
    Bipartite,
    CombinatorialVsNumeric,
    Galois,
    ClassAlgebra,
    StandardGenerators,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const REGISTRY: [Suite; 11] = [
        Suite::Dihedral,
        Suite::Tables,
        Suite::CombinatorialVsNumeric,
        Suite::Integrality,
        Suite::LengthCodim,
        Suite::RationalLength,
        Suite::Galois,
        Suite::Radius,
        Suite::Bipartite,
        Suite::ClassAlgebra,
        Suite::StandardGenerators,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Integrality => "integrality",
            Suite::Dihedral => "dihedral",
            Suite::Tables => "tables",
            Suite::LengthCodim => "length-codim",
            Suite::RationalLength => "rational-length",
            Suite::Radius => "radius",
            Suite::Bipartite => "bipartite",
            Suite::CombinatorialVsNumeric => "combinatorial-vs-numeric",
            Suite::Galois => "galois",
            Suite::ClassAlgebra => "class-algebra",
            Suite::StandardGenerators => "standard-generators",
            Suite::All => "all",
        }
    }

    pub fn names() -> Vec<&'static str> {
        Self::REGISTRY
            .iter()
            .map(|s| s.name())
            .chain(std::iter::once("all"))
            .collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::REGISTRY
            .iter()
            .copied()
            .chain(std::iter::once(Suite::All))
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown suite {s:?}; expected one of {}",
                    Self::names().join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Text report; runtimes are included only on request so that default
    /// output is reproducible.
    pub fn render(&self, timings: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {}/{}: {}", c.suite, c.name, c.detail));
            if let Some(res) = c.max_residual {
                out.push_str(&format!(" [residual {res:.1e}]"));
            }
            if timings {
                out.push_str(&format!(" ({:.3} s)", c.elapsed.as_secs_f64()));
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "{}: {} checks, {} failed\n",
            self.suite,
            self.checks.len(),
            failed
        ));
        out
    }
}

struct GroupData {
    rg: ReflectionGroup,
    /// Numeric adjacency, distance and codimension spectra.
    spectra: Vec<Result<Spectrum>>,
}

/// Runs suites, sharing the numeric spectra of the test set between them.
pub struct Harness {
    progress: bool,
    test_set: OnceLock<Vec<GroupData>>,
}

impl Harness {
    pub fn new(progress: bool) -> Self {
        Self {
            progress,
            test_set: OnceLock::new(),
        }
    }

    fn log(&self, msg: &str) {
        if self.progress {
            let _ = writeln!(std::io::stderr(), "[verify] {msg}");
        }
    }

    fn test_set_data(&self) -> &[GroupData] {
        self.test_set.get_or_init(|| {
            let groups = test_set();
            self.log(&format!(
                "computing numeric spectra of {} groups with |G| <= 400",
                groups.len()
            ));
            groups
                .par_iter()
                .map(|&params| {
                    let rg = ReflectionGroup::new(params).expect("test-set groups are enumerable");
                    let spectra = KINDS
                        .iter()
                        .map(|&kind| {
                            let m = rg.matrix(kind, Default::default(), DEFAULT_MAX_MATRIX)?;
                            spectrum_numeric(&m, INTEGRALITY_TOLERANCE)
                        })
                        .collect();
                    GroupData { rg, spectra }
                })
                .collect()
        })
    }

    pub fn run(&self, suite: Suite) -> VerificationReport {
        let suites: Vec<Suite> = match suite {
            Suite::All => Suite::REGISTRY.to_vec(),
            s => vec![s],
        };
        let mut checks = Vec::new();
        for s in suites {
            self.log(&format!("running {s}"));
            checks.extend(self.run_one(s));
        }
        VerificationReport {
            schema: crate::export::SCHEMA_VERSION,
            suite: suite.name().to_string(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    fn run_one(&self, suite: Suite) -> Vec<Check> {
        let name = suite.name();
        let timed = |label: String, f: &dyn Fn() -> Result<(bool, String, Option<f64>)>| {
            let start = Instant::now();
            let (passed, detail, max_residual) = match f() {
                Ok(v) => v,
                Err(e) => (false, format!("error: {e}"), None),
            };
            Check {
                suite: name,
                name: label,
                passed,
                detail,
                max_residual,
                elapsed: start.elapsed(),
            }
        };
        match suite {
            Suite::Dihedral => (3..=8)
                .map(|r| timed(format!("G({r},{r},2)"), &|| dihedral(r)))
                .collect(),
            Suite::Tables => [(2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3)]
                .into_iter()
                .map(|(r, n)| timed(format!("G({r},1,{n}) distance"), &|| table_row(r, n)))
                .collect(),
            Suite::CombinatorialVsNumeric => {
                let mut out: Vec<Check> = [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]
                    .into_iter()
                    .map(|(r, n)| timed(format!("G({r},1,{n}) numeric"), &|| combinatorial_vs_numeric(r, n)))
                    .collect();
                for n in [2, 3] {
                    for r in 2..=8 {
                        out.push(timed(format!("G({r},1,{n}) closed form"), &|| {
                            combinatorial_vs_closed_form(r, n)
                        }));
                    }
                }
                out
            }
            Suite::Integrality => {
                let data = self.test_set_data();
                data.iter()
                    .map(|d| timed(d.rg.params().to_string(), &|| integrality(d)))
                    .collect()
            }
            Suite::LengthCodim => {
                let mut out: Vec<Check> = self
                    .test_set_data()
                    .iter()
                    .map(|d| timed(d.rg.params().to_string(), &|| length_codim(&d.rg)))
                    .collect();
                out.push(timed("G(4,2,2) diag(i,i)".into(), &g422_witness));
                out
            }
            Suite::RationalLength => self
                .test_set_data()
                .iter()
                .map(|d| timed(d.rg.params().to_string(), &|| rational_constancy(&d.rg)))
                .collect(),
            Suite::Galois => [(4, 1, 2), (6, 1, 2), (4, 2, 2)]
                .into_iter()
                .map(|(r, p, n)| timed(format!("G({r},{p},{n})"), &|| galois_exhaustive(r, p, n)))
                .collect(),
            Suite::Radius => self
                .test_set_data()
                .iter()
                .map(|d| timed(d.rg.params().to_string(), &|| radius(d)))
                .collect(),
            Suite::Bipartite => self
                .test_set_data()
                .iter()
                .map(|d| timed(d.rg.params().to_string(), &|| bipartite(d)))
                .collect(),
            Suite::ClassAlgebra => [(3, 1, 2), (2, 1, 3), (4, 2, 2)]
                .into_iter()
                .map(|(r, p, n)| timed(format!("G({r},{p},{n})"), &|| class_algebra(r, p, n)))
                .collect(),
            Suite::StandardGenerators => [(3, 1, 2), (4, 1, 2)]
                .into_iter()
                .map(|(r, p, n)| timed(format!("G({r},{p},{n}) distance via S"), &|| standard_generators(r, p, n)))
                .collect(),
            Suite::All => unreachable!("expanded by run"),
        }
    }
}

type Outcome = Result<(bool, String, Option<f64>)>;

fn numeric(rg: &ReflectionGroup, kind: MatrixKind, tolerance: f64) -> Result<Spectrum> {
    spectrum_numeric(&rg.matrix(kind, Default::default(), DEFAULT_MAX_MATRIX)?, tolerance)
}

fn compare(got: &Spectrum, want: &[(i64, usize)]) -> (bool, String) {
    let want = Spectrum::from_pairs(want, got.method);
    if got.same_eigenvalues(&want) {
        (true, format!("{got}"))
    } else {
        (false, format!("got {got}, expected {want}"))
    }
}

fn dihedral(r: u32) -> Outcome {
    let rg = ReflectionGroup::new(GroupParams::new(r, r, 2)?)?;
    let ri = r as i64;
    let m = 2 * r as usize - 2;
    let adj = numeric(&rg, MatrixKind::Adjacency, DEFAULT_TOLERANCE)?;
    let dist = numeric(&rg, MatrixKind::Distance, DEFAULT_TOLERANCE)?;
    let (ok_a, da) = compare(&adj, &[(ri, 1), (0, m), (-ri, 1)]);
    let (ok_d, dd) = compare(&dist, &[(3 * ri - 2, 1), (ri - 2, 1), (-2, m)]);
    let residual = adj.max_residual.max(dist.max_residual);
    Ok((ok_a && ok_d, format!("adjacency {da}; distance {dd}"), Some(residual)))
}

fn reference_pairs(r: u32, n: u32) -> Result<Vec<(i64, usize)>> {
    Ok(closed_form_reference(r, n)?
        .into_iter()
        .map(|e| (e.eigenvalue, e.multiplicity))
        .collect())
}

fn table_row(r: u32, n: u32) -> Outcome {
    let rg = ReflectionGroup::new(GroupParams::new(r, 1, n)?)?;
    let s = numeric(&rg, MatrixKind::Distance, DEFAULT_TOLERANCE)?;
    let (ok, detail) = compare(&s, &reference_pairs(r, n)?);
    Ok((ok, detail, Some(s.max_residual)))
}

fn combinatorial_vs_numeric(r: u32, n: u32) -> Outcome {
    let rg = ReflectionGroup::new(GroupParams::new(r, 1, n)?)?;
    let s = numeric(&rg, MatrixKind::Codimension, DEFAULT_TOLERANCE)?;
    let c = codim_spectrum_combinatorial(r, n, DEFAULT_MAX_TUPLES)?;
    let ok = c.same_eigenvalues(&s);
    Ok((ok, format!("combinatorial {c}, numeric {s}"), Some(s.max_residual)))
}

fn combinatorial_vs_closed_form(r: u32, n: u32) -> Outcome {
    let c = codim_spectrum_combinatorial(r, n, DEFAULT_MAX_TUPLES)?;
    let (ok, detail) = compare(&c, &reference_pairs(r, n)?);
    Ok((ok, detail, None))
}

fn integrality(d: &GroupData) -> Outcome {
    let mut residual: f64 = 0.0;
    let mut bad = Vec::new();
    for (kind, s) in KINDS.iter().zip(&d.spectra) {
        let s = s.as_ref().map_err(Clone::clone)?;
        residual = residual.max(s.max_residual);
        if !s.is_integral() {
            bad.push(format!("{kind} {s}"));
        }
    }
    if bad.is_empty() {
        Ok((true, "adjacency, distance and codimension spectra integral".into(), Some(residual)))
    } else {
        Ok((false, format!("non-integral: {}", bad.join("; ")), Some(residual)))
    }
}

/// `ℓ_T = codim` is expected exactly for `G(r,1,n)`, the real groups, and
/// rank one (where `G(r,p,1) = G(r/p,1,1)`).
pub fn length_equals_codim_expected(params: GroupParams) -> bool {
    params.p == 1 || params.n == 1 || params.is_real()
}

fn length_codim(rg: &ReflectionGroup) -> Outcome {
    let table = &rg.lengths;
    let below = (0..rg.order()).find(|&x| table.lengths[x] < table.codims[x]);
    if let Some(x) = below {
        return Ok((false, format!("ℓ_T < codim at {}", rg.group.element(x)), None));
    }
    let differing = (0..rg.order()).filter(|&x| table.lengths[x] != table.codims[x]).count();
    let expected = length_equals_codim_expected(rg.params());
    let ok = (differing == 0) == expected;
    let detail = if differing == 0 {
        "ℓ_T = codim everywhere".to_string()
    } else {
        format!("ℓ_T > codim on {differing} elements")
    };
    Ok((ok, format!("{detail} (equality expected: {expected})"), None))
}

fn g422_witness() -> Outcome {
    let rg = ReflectionGroup::new(GroupParams::new(4, 2, 2)?)?;
    let x = rg
        .group
        .index_of(&GroupElement::parse(4, "1,1|1 2")?)
        .ok_or_else(|| Error::Consistency("(1,1|id) missing from G(4,2,2)".into()))?;
    let (l, c) = (rg.lengths.lengths[x], rg.lengths.codims[x]);
    Ok((l == 3 && c == 2, format!("ℓ_T = {l}, codim = {c}"), None))
}

fn rational_constancy(rg: &ReflectionGroup) -> Outcome {
    let rational = rg.classes.rational_classes(&rg.group);
    for k in 0..rational.len() {
        let members: Vec<usize> = rational
            .ordinary_classes(k)
            .iter()
            .flat_map(|&c| rg.classes.members(c).iter().copied())
            .collect();
        let first = members[0];
        for &x in &members {
            if rg.lengths.lengths[x] != rg.lengths.lengths[first] || rg.lengths.codims[x] != rg.lengths.codims[first] {
                return Ok((
                    false,
                    format!(
                        "{} and {} share a rational class but differ",
                        rg.group.element(first),
                        rg.group.element(x)
                    ),
                    None,
                ));
            }
        }
    }
    Ok((
        true,
        format!(
            "ℓ_T and codim constant on {} rational classes ({} ordinary)",
            rational.len(),
            rg.classes.len()
        ),
        None,
    ))
}

fn galois_exhaustive(r: u32, p: u32, n: u32) -> Outcome {
    let g = Group::new(GroupParams::new(r, p, n)?)?;
    let mut cases = 0usize;
    for x in g.elements() {
        let o = x.order();
        for d in (1..=o).filter(|&d| gcd(d, o) == 1) {
            let e = find_galois_exponent(x, d as i64)?;
            let image = galois_apply(x, e)?;
            if gcd(e.unsigned_abs(), r as u64) != 1 || image.cycle_type() != x.pow(d).cycle_type() {
                return Ok((false, format!("x = {x}, d = {d}: e = {e} fails"), None));
            }
            cases += 1;
        }
    }
    Ok((true, format!("{cases} (x, d) pairs"), None))
}

fn radius(d: &GroupData) -> Outcome {
    let rg = &d.rg;
    let mut notes = Vec::new();
    let mut ok = true;
    for (kind, s) in KINDS.iter().zip(&d.spectra) {
        let s = s.as_ref().map_err(Clone::clone)?;
        let f = rg.class_function(*kind)?;
        let report = spectral_radius_check(&rg.classes, &f, s);
        ok &= report.passed;
        if !report.passed {
            notes.push(report.to_string());
        }
    }
    let degrees = DegreeData::new(rg.params())?;
    let xi1 = xi1_closed_form(&degrees);
    let sum_codim = rg.lengths.sum_codims();
    ok &= xi1 == sum_codim;
    let mut detail = format!("top eigenvalues = Σ f; ξ_1 = {xi1}, Σ codim = {sum_codim}");
    if length_equals_codim_expected(rg.params()) {
        let eta1 = degrees.eta1();
        let sum_len = rg.lengths.sum_lengths();
        ok &= eta1 == sum_len;
        detail.push_str(&format!("; η_1 = {eta1}, Σ ℓ_T = {sum_len}"));
    }
    if !notes.is_empty() {
        detail.push_str(&format!("; {}", notes.join("; ")));
    }
    Ok((ok, detail, None))
}

/// Diagonal reflections `diag(ζ^{kp}, 1, …)` have order dividing `r/p` and
/// the transposition-type reflections are involutions, so `Γ(W,T)` should be
/// bipartite exactly when `r/p ≤ 2`.
pub fn bipartite_expected(params: GroupParams) -> bool {
    params.r / params.p <= 2
}

fn bipartite(d: &GroupData) -> Outcome {
    let adj = d.spectra[0].as_ref().map_err(Clone::clone)?;
    let is_bipartite = bipartite_check(&d.rg.group, &d.rg.reflections, adj)?;
    let expected = bipartite_expected(d.rg.params());
    Ok((
        expected == is_bipartite,
        format!("bipartite = {is_bipartite} (predicted {expected}); 2-coloring, spectral symmetry and involution test agree"),
        None,
    ))
}

fn class_algebra(r: u32, p: u32, n: u32) -> Outcome {
    let rg = ReflectionGroup::new(GroupParams::new(r, p, n)?)?;
    let data = ClassAlgebraData::compute(&rg.group, &rg.classes)?;
    let degrees = data.degrees();
    let square_sum: u64 = degrees.iter().map(|d| d * d).sum();
    let mut ok = square_sum == rg.order() as u64 && degrees.iter().all(|&d| d > 0);
    let mut parts = vec![format!("degrees {degrees:?}, Σ χ(1)² = {square_sum}")];
    let mut residual: f64 = 0.0;
    for kind in KINDS {
        let f = rg.class_function(kind)?;
        let by_algebra = data.spectrum(&f, DEFAULT_TOLERANCE)?;
        let by_matrix = numeric(&rg, kind, DEFAULT_TOLERANCE)?;
        residual = residual.max(by_algebra.max_residual).max(by_matrix.max_residual);
        let same = by_algebra.same_eigenvalues(&by_matrix);
        ok &= same;
        parts.push(if same {
            format!("{kind} {by_algebra}")
        } else {
            format!("{kind} class-algebra {by_algebra} vs numeric {by_matrix}")
        });
    }
    Ok((ok, parts.join("; "), Some(residual)))
}

/// Observational: reports whether the standard-generator distance spectrum
/// has an eigenvalue visibly away from the integers.
fn standard_generators(r: u32, p: u32, n: u32) -> Outcome {
    let g = Group::new(GroupParams::new(r, p, n)?)?;
    let s = ConnectionSet::standard(&g);
    let m = crate::spectra::distance_matrix_bfs(&g, &s, DEFAULT_MAX_MATRIX)?;
    let spectrum = spectrum_numeric(&m, DEFAULT_TOLERANCE)?;
    let gap = spectrum.max_residual;
    let observed = gap > NON_INTEGRAL_GAP;
    let sample = spectrum
        .raw
        .as_ref()
        .and_then(|raw| {
            raw.iter()
                .map(|c| c.eigenvalue)
                .max_by(|a, b| (a - a.round()).abs().total_cmp(&(b - b.round()).abs()))
        })
        .map_or(String::new(), |v| format!(", e.g. {v:.6}"));
    Ok((
        observed,
        format!("observational: farthest eigenvalue is {gap:.4} from an integer{sample}"),
        Some(gap),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for name in Suite::names() {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn quick_suites_pass() {
        let h = Harness::new(false);
        for suite in [Suite::Dihedral, Suite::Galois, Suite::ClassAlgebra, Suite::StandardGenerators] {
            let report = h.run(suite);
            assert!(report.passed, "{}", report.render(false));
        }
    }
}
