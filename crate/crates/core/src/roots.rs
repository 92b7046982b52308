//! Simultaneous refinement of all roots of a complex polynomial
//! (Aberth–Ehrlich iteration).

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootOptions {
    /// Backward-error threshold per root.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        RootOptions {
            tolerance: 1e-12,
            max_iterations: 200,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifiedRoot {
    pub value: Complex64,
    /// Scaled residual at `value`, see [`backward_error`].
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RefinedRoots {
    pub roots: Vec<CertifiedRoot>,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("root refinement did not reach tolerance {tolerance:e} in {iterations} iterations (worst residual {worst:e})")]
    NoConvergence {
        tolerance: f64,
        iterations: usize,
        worst: f64,
    },
    #[error("polynomial has non-finite coefficients")]
    NonFinite,
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Residual `|p(z)| / sum |a_k| max(1, |z|)^k`. Inside the unit disc this is
/// the absolute residual relative to the coefficient norm, which stays
/// meaningful at roots near zero where the low coefficients vanish.
pub fn backward_error(coeffs: &[Complex64], z: Complex64) -> f64 {
    let (p, _) = horner(coeffs, z);
    let r = z.norm().max(1.0);
    let scale = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * r + c.norm());
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// Order by real part, then imaginary part, treating `-0.0` as `0.0`.
pub fn cmp_complex(a: &Complex64, b: &Complex64) -> Ordering {
    (a.re + 0.0)
        .total_cmp(&(b.re + 0.0))
        .then((a.im + 0.0).total_cmp(&(b.im + 0.0)))
}

/// All roots of `sum coeffs[k] z^k`, sorted by (real, imaginary).
///
/// Starting points are spread on the circle of radius
/// `1 + max |a_k / a_n|` with a fixed angular offset, so the output is fully
/// deterministic.
pub fn all_roots(coeffs: &[Complex64], opts: RootOptions) -> Result<RefinedRoots, RootError> {
    if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(RootError::NonFinite);
    }
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Ok(RefinedRoots {
            roots: Vec::new(),
            iterations: 0,
        });
    }
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();

    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect();

    let converged = |z: &[Complex64]| {
        z.iter()
            .map(|&zi| backward_error(&monic, zi))
            .fold(0.0, f64::max)
    };

    let mut iterations = 0;
    let mut worst = converged(&z);
    while worst >= opts.tolerance {
        if iterations == opts.max_iterations {
            return Err(RootError::NoConvergence {
                tolerance: opts.tolerance,
                iterations,
                worst,
            });
        }
        iterations += 1;
        for i in 0..n {
            if backward_error(&monic, z[i]) < opts.tolerance * 1e-2 {
                continue;
            }
            let (p, dp) = horner(&monic, z[i]);
            let newton = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
            }
        }
        worst = converged(&z);
    }

    let mut roots: Vec<CertifiedRoot> = z
        .into_iter()
        .map(|value| CertifiedRoot {
            value,
            residual: backward_error(&monic, value),
        })
        .collect();
    roots.sort_by(|a, b| cmp_complex(&a.value, &b.value));
    Ok(RefinedRoots { roots, iterations })
}
