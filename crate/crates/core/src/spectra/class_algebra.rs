//! Eigenvalues of group matrices through the class algebra.
//!
//! The normalized class-sum matrices `N_j = D M_j D⁻¹` with
//! `D = diag(√|C_l|)` satisfy `N_j̄ = N_jᵀ`, so a combination
//! `H = Σ c_j N_j` with `c_j̄ = conj(c_j)` is Hermitian. Its eigenvectors are
//! the vectors `ω_χ(C_l)/√|C_l|`, pairwise orthogonal over the irreducible
//! characters. `H` is diagonalized through the real symmetric embedding
//! `[[A, −B], [B, A]]`, where every eigenvalue of `H` appears twice.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::jacobi::{jacobi_eigen, JacobiOptions};
use super::{ClassFunction, Method, Spectrum};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClasses, Group};

/// Largest number of classes for which the `k³` structure constants are stored.
pub const MAX_CLASSES: usize = 200;

#[derive(Debug, Clone, Copy)]
pub struct ClassAlgebraOptions {
    pub seed: u64,
    pub max_attempts: usize,
}

impl Default for ClassAlgebraOptions {
    fn default() -> Self {
        Self {
            seed: 0x5eed_c1a5,
            max_attempts: 8,
        }
    }
}

/// One irreducible character seen through its central character.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralCharacter {
    /// `ω(C) = |C| χ(g_C) / χ(1)`, indexed by class.
    pub omega: Vec<Complex64>,
    pub degree: u64,
}

#[derive(Debug, Clone)]
pub struct ClassAlgebraData {
    order: usize,
    sizes: Vec<usize>,
    inverse: Vec<usize>,
    /// `a[(j·k + k')·k + l]`: coefficient of `C_l` in `C_j C_k'`.
    structure: Vec<u32>,
    characters: Vec<CentralCharacter>,
    attempts: usize,
}

impl ClassAlgebraData {
    pub fn compute(group: &Group, classes: &ConjugacyClasses) -> Result<Self> {
        Self::compute_with(group, classes, &ClassAlgebraOptions::default())
    }

    pub fn compute_with(
        group: &Group,
        classes: &ConjugacyClasses,
        opts: &ClassAlgebraOptions,
    ) -> Result<Self> {
        let k = classes.len();
        if k > MAX_CLASSES {
            return Err(Error::SizeLimit {
                what: "number of conjugacy classes",
                size: k as u128,
                cap: MAX_CLASSES,
                hint: "; use the numeric or combinatorial route instead",
            });
        }
        let structure = structure_constants(group, classes);
        let mut data = Self {
            order: group.order(),
            sizes: classes.sizes(),
            inverse: (0..k).map(|c| classes.inverse_class(group, c)).collect(),
            structure,
            characters: Vec::new(),
            attempts: 0,
        };

        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut last_failure = String::new();
        for attempt in 1..=opts.max_attempts {
            let c1 = data.random_coefficients(&mut rng);
            let c2 = data.random_coefficients(&mut rng);
            match data.separate(&c1, &c2) {
                Ok(chars) => {
                    data.characters = chars;
                    data.attempts = attempt;
                    return Ok(data);
                }
                Err(why) => last_failure = why,
            }
        }
        Err(Error::Numeric(format!(
            "could not separate the common eigenspaces of the class algebra after {} random \
             combinations (last failure: {last_failure}); retry with a different seed",
            opts.max_attempts
        )))
    }

    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn structure_constant(&self, j: usize, k: usize, l: usize) -> u32 {
        let n = self.num_classes();
        self.structure[(j * n + k) * n + l]
    }

    /// `M_j` with `(M_j)_{l,k} = a_{jkl}`: left multiplication by the class
    /// sum `C_j` in the basis of class sums. Row-major.
    pub fn class_sum_matrix(&self, j: usize) -> Vec<u64> {
        let n = self.num_classes();
        let mut m = vec![0; n * n];
        for k in 0..n {
            for l in 0..n {
                m[l * n + k] = self.structure_constant(j, k, l) as u64;
            }
        }
        m
    }

    pub fn characters(&self) -> &[CentralCharacter] {
        &self.characters
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.characters.iter().map(|c| c.degree).collect()
    }

    /// Number of random combinations tried before separation succeeded.
    pub fn attempts(&self) -> usize {
        self.attempts
    }

    /// `θ_χ = Σ_C f(C) ω_χ(C)` with multiplicity `χ(1)²`.
    pub fn spectrum(&self, f: &ClassFunction, tolerance: f64) -> Result<Spectrum> {
        if f.values().len() != self.num_classes() {
            return Err(Error::Parameter(format!(
                "class function {} has {} values for {} classes",
                f.name,
                f.values().len(),
                self.num_classes()
            )));
        }
        if (0..self.num_classes()).any(|c| f.value(c) != f.value(self.inverse[c])) {
            return Err(Error::Parameter(format!(
                "{} differs on a class and its inverse class, so its group matrix is not symmetric",
                f.name
            )));
        }
        let weighted: Vec<(f64, usize)> = self
            .characters
            .iter()
            .map(|ch| {
                let theta: Complex64 = ch
                    .omega
                    .iter()
                    .zip(f.values())
                    .map(|(w, &v)| w * v as f64)
                    .sum();
                (theta.re, (ch.degree * ch.degree) as usize)
            })
            .collect();
        Ok(Spectrum::from_weighted(&weighted, Method::ClassAlgebra, tolerance))
    }

    fn random_coefficients(&self, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
        let k = self.num_classes();
        let mut c = vec![Complex64::new(0.0, 0.0); k];
        for j in 0..k {
            let jbar = self.inverse[j];
            if jbar == j {
                c[j] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
            } else if j < jbar {
                c[j] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                c[jbar] = c[j].conj();
            }
        }
        c
    }

    /// `H = Σ_j c_j N_j`, row-major.
    fn hermitian(&self, c: &[Complex64]) -> Vec<Complex64> {
        let k = self.num_classes();
        let mut h = vec![Complex64::new(0.0, 0.0); k * k];
        for (j, &cj) in c.iter().enumerate() {
            for kk in 0..k {
                for l in 0..k {
                    let a = self.structure_constant(j, kk, l);
                    if a != 0 {
                        let scale = (self.sizes[l] as f64 / self.sizes[kk] as f64).sqrt();
                        h[l * k + kk] += cj * (a as f64 * scale);
                    }
                }
            }
        }
        h
    }

    fn separate(&self, c1: &[Complex64], c2: &[Complex64]) -> Result<Vec<CentralCharacter>, String> {
        let k = self.num_classes();
        let h = self.hermitian(c1);
        let m = 2 * k;
        let mut s = vec![0.0; m * m];
        for i in 0..k {
            for j in 0..k {
                let z = h[i * k + j];
                s[i * m + j] = z.re;
                s[(i + k) * m + (j + k)] = z.re;
                s[i * m + (j + k)] = -z.im;
                s[(i + k) * m + j] = z.im;
            }
        }
        let scale = s.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
        let eig = jacobi_eigen(s, m, true, &JacobiOptions::default()).map_err(|e| e.to_string())?;

        let mut idx: Vec<usize> = (0..m).collect();
        idx.sort_by(|&a, &b| eig.values[a].total_cmp(&eig.values[b]));
        let same = 1e-9 * scale;
        let apart = 1e-6 * scale;
        let mut vectors = Vec::with_capacity(k);
        for pair in idx.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if (eig.values[a] - eig.values[b]).abs() > same {
                return Err("embedded eigenvalues are not paired".into());
            }
            if let Some(&next) = idx.get(idx.iter().position(|&x| x == b).unwrap() + 1) {
                if eig.values[next] - eig.values[b] < apart {
                    return Err(format!(
                        "eigenvalue collision near {:.6e} (gap {:.3e})",
                        eig.values[b],
                        eig.values[next] - eig.values[b]
                    ));
                }
            }
            let v = eig.vector(a).expect("vectors requested");
            let z: Vec<Complex64> = (0..k).map(|i| Complex64::new(v[i], v[i + k])).collect();
            vectors.push(z);
        }

        let h2 = self.hermitian(c2);
        let scale2 = h2.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1.0);
        let mut chars = Vec::with_capacity(k);
        let mut total: u128 = 0;
        for z in vectors {
            let hz: Vec<Complex64> = (0..k)
                .map(|i| (0..k).map(|j| h2[i * k + j] * z[j]).sum())
                .collect();
            let lambda: Complex64 = z.iter().zip(&hz).map(|(a, b)| a.conj() * b).sum();
            let residual = hz
                .iter()
                .zip(&z)
                .map(|(y, x)| (y - lambda * x).norm_sqr())
                .sum::<f64>()
                .sqrt();
            if residual > 1e-7 * scale2 {
                return Err(format!(
                    "eigenvector is not shared by a second combination (residual {residual:.3e})"
                ));
            }

            let z0 = z[0];
            let d2_raw = self.order as f64 * z0.norm_sqr();
            let d2 = d2_raw.round();
            if (d2 - d2_raw).abs() > 1e-6 * self.order as f64 || d2 < 1.0 {
                return Err(format!("degree recovery gave χ(1)² = {d2_raw:.6}"));
            }
            let d2 = d2 as u64;
            let degree = (d2 as f64).sqrt().round() as u64;
            if degree * degree != d2 || self.order as u64 % degree != 0 {
                return Err(format!("recovered χ(1)² = {d2} is not the square of a divisor of |G|"));
            }
            total += d2 as u128;
            let omega = (0..k)
                .map(|l| z[l] / z0 * (self.sizes[l] as f64).sqrt())
                .collect();
            chars.push(CentralCharacter { omega, degree });
        }
        if total != self.order as u128 {
            return Err(format!("squared degrees sum to {total}, not |G| = {}", self.order));
        }
        chars.sort_by_key(|c| c.degree);
        Ok(chars)
    }
}

/// `a_{jkl} = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}` for class representatives `z_l`,
/// in one pass over the group per class.
fn structure_constants(group: &Group, classes: &ConjugacyClasses) -> Vec<u32> {
    let k = classes.len();
    let mut a = vec![0u32; k * k * k];
    for l in 0..k {
        let z = classes.representative(l);
        for x in 0..group.order() {
            let j = classes.class_of(x);
            let kk = classes.class_of(group.mul(group.inv(x), z));
            a[(j * k + kk) * k + l] += 1;
        }
    }
    a
}

/// Convenience wrapper computing the class algebra and one spectrum.
pub fn spectrum_class_algebra(
    group: &Group,
    classes: &ConjugacyClasses,
    f: &ClassFunction,
    tolerance: f64,
) -> Result<Spectrum> {
    ClassAlgebraData::compute(group, classes)?.spectrum(f, tolerance)
}
