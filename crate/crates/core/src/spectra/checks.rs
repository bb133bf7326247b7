use std::collections::VecDeque;
use std::fmt;

use super::{ClassFunction, Spectrum};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, Group};
use crate::reflection::{all_reflections_order_two, ReflectionSet};

/// Outcome of comparing the top eigenvalue against `Σ_g f(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusReport {
    pub passed: bool,
    pub expected: i64,
    pub largest: Option<i64>,
    pub runner_up: Option<i64>,
    pub detail: String,
}

impl fmt::Display for RadiusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "ok" } else { "FAILED" };
        write!(f, "{status}: {}", self.detail)
    }
}

/// Checks that the largest eigenvalue equals `Σ_g f(g)` and is simple and
/// strictly above the rest. A zero function passes when its spectrum is `{0}`.
pub fn spectral_radius_check(classes: &ConjugacyClasses, f: &ClassFunction, s: &Spectrum) -> RadiusReport {
    let expected = f.group_sum(classes);
    let largest = s.eigenpairs.first().map(|e| e.eigenvalue);
    let runner_up = s.eigenpairs.get(1).map(|e| e.eigenvalue);
    let fail = |detail: String| RadiusReport {
        passed: false,
        expected,
        largest,
        runner_up,
        detail,
    };
    if !s.is_integral() {
        return fail(format!("{} spectrum is not integral", f.name));
    }
    if !f.is_nonnegative() {
        return fail(format!("{} takes negative values", f.name));
    }
    if f.is_zero() {
        let passed = s.pairs().len() == 1 && largest == Some(0);
        return RadiusReport {
            passed,
            expected,
            largest,
            runner_up,
            detail: format!("{} is zero; spectrum {s}", f.name),
        };
    }
    if largest != Some(expected) {
        return fail(format!("largest eigenvalue {largest:?} differs from Σ f = {expected}"));
    }
    if s.eigenpairs[0].multiplicity != 1 {
        return fail(format!(
            "largest eigenvalue {expected} has multiplicity {}",
            s.eigenpairs[0].multiplicity
        ));
    }
    let bottom = s.eigenpairs.last().map(|e| e.eigenvalue).unwrap_or(expected);
    RadiusReport {
        passed: true,
        expected,
        largest,
        runner_up,
        detail: format!(
            "{}: largest {expected} = Σ f, next {runner_up:?}, smallest {bottom}",
            f.name
        ),
    }
}

/// Proper 2-coloring of `Γ(G, T)` by breadth-first search.
pub fn two_colorable(group: &Group, reflections: &ReflectionSet) -> bool {
    let n = group.order();
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        queue.push_back(start);
        while let Some(g) = queue.pop_front() {
            for &t in reflections.members() {
                let h = group.mul(t, g);
                if color[h] == u8::MAX {
                    color[h] = 1 - color[g];
                    queue.push_back(h);
                } else if color[h] == color[g] {
                    return false;
                }
            }
        }
    }
    true
}

/// Bipartiteness of `Γ(W, T)`, cross-checked against symmetry of the
/// adjacency spectrum and against all reflections being involutions.
pub fn bipartite_check(group: &Group, reflections: &ReflectionSet, adjacency: &Spectrum) -> Result<bool> {
    let coloring = two_colorable(group, reflections);
    let symmetric = adjacency.symmetric_about_zero();
    let involutions = all_reflections_order_two(group, reflections);
    if coloring != symmetric || coloring != involutions {
        return Err(Error::Consistency(format!(
            "bipartiteness criteria disagree for {}: 2-coloring {coloring}, \
             symmetric spectrum {symmetric}, reflections of order two {involutions}",
            group.params()
        )));
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupParams;
    use crate::spectra::{build_matrix, spectrum_numeric, MatrixKind, Method};

    fn adjacency(r: u32, p: u32, n: u32) -> (Group, ReflectionSet, Spectrum) {
        let g = Group::new(GroupParams::new(r, p, n).unwrap()).unwrap();
        let classes = g.conjugacy_classes();
        let t = ReflectionSet::new(&g);
        let per: Vec<i64> = (0..g.order()).map(|x| t.contains(x) as i64).collect();
        let f = ClassFunction::from_element_values("delta_T", &classes, &per).unwrap();
        let m = build_matrix(&g, &classes, &f, MatrixKind::Adjacency, 1200).unwrap();
        let s = spectrum_numeric(&m, 1e-8).unwrap();
        (g, t, s)
    }

    #[test]
    fn bipartite_examples() {
        let (g, t, s) = adjacency(2, 1, 2);
        assert!(bipartite_check(&g, &t, &s).unwrap());
        let (g, t, s) = adjacency(3, 1, 1);
        assert!(!bipartite_check(&g, &t, &s).unwrap());
        for r in 3..7 {
            let (g, t, s) = adjacency(r, r, 2);
            assert!(bipartite_check(&g, &t, &s).unwrap());
        }
    }

    #[test]
    fn disagreement_is_reported() {
        let (g, t, _) = adjacency(2, 1, 2);
        let fake = Spectrum::from_pairs(&[(4, 1), (0, 7)], Method::Numeric);
        assert!(matches!(bipartite_check(&g, &t, &fake), Err(Error::Consistency(_))));
    }

    #[test]
    fn radius_examples() {
        let (g, t, s) = adjacency(5, 5, 2);
        let classes = g.conjugacy_classes();
        let per: Vec<i64> = (0..g.order()).map(|x| t.contains(x) as i64).collect();
        let f = ClassFunction::from_element_values("delta_T", &classes, &per).unwrap();
        let report = spectral_radius_check(&classes, &f, &s);
        assert!(report.passed, "{report}");
        assert_eq!(report.largest, Some(5));

        let zero = ClassFunction::zero(&classes);
        let s0 = Spectrum::from_pairs(&[(0, g.order())], Method::Numeric);
        assert!(spectral_radius_check(&classes, &zero, &s0).passed);

        let wrong = Spectrum::from_pairs(&[(5, 2), (0, 6), (-5, 2)], Method::Numeric);
        assert!(!spectral_radius_check(&classes, &f, &wrong).passed);
    }
}
