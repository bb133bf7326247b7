use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, Group};

/// An integer-valued function constant on conjugacy classes, stored per class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFunction {
    pub name: String,
    values: Vec<i64>,
}

impl ClassFunction {
    pub fn from_class_values(name: impl Into<String>, values: Vec<i64>) -> Self {
        Self {
            name: name.into(),
            values,
        }
    }

    /// Builds from per-element values, rejecting functions that are not
    /// constant on some class.
    pub fn from_element_values(
        name: impl Into<String>,
        classes: &ConjugacyClasses,
        per_element: &[i64],
    ) -> Result<Self> {
        let name = name.into();
        let mut values = Vec::with_capacity(classes.len());
        for c in 0..classes.len() {
            let members = classes.members(c);
            let v = per_element[members[0]];
            if let Some(&x) = members.iter().find(|&&x| per_element[x] != v) {
                return Err(Error::Parameter(format!(
                    "{name} is not a class function: elements {} and {x} of class {c} differ",
                    members[0]
                )));
            }
            values.push(v);
        }
        Ok(Self { name, values })
    }

    pub fn zero(classes: &ConjugacyClasses) -> Self {
        Self::from_class_values("zero", vec![0; classes.len()])
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, class: usize) -> i64 {
        self.values[class]
    }

    pub fn at(&self, classes: &ConjugacyClasses, x: usize) -> i64 {
        self.values[classes.class_of(x)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|&v| v >= 0)
    }

    /// `f(g) = f(g⁻¹)` for all `g`, which makes the group matrix symmetric.
    pub fn is_inverse_symmetric(&self, group: &Group, classes: &ConjugacyClasses) -> bool {
        (0..classes.len()).all(|c| self.values[c] == self.values[classes.inverse_class(group, c)])
    }

    /// `Σ_g f(g)`.
    pub fn group_sum(&self, classes: &ConjugacyClasses) -> i64 {
        (0..classes.len())
            .map(|c| self.values[c] * classes.size(c) as i64)
            .sum()
    }

    /// `Σ_g |f(g)|`.
    pub fn group_abs_sum(&self, classes: &ConjugacyClasses) -> i64 {
        (0..classes.len())
            .map(|c| self.values[c].abs() * classes.size(c) as i64)
            .sum()
    }
}
