//! Branched covers of Riemann surfaces: ramification profiles, the
//! Riemann–Hurwitz count, and the local deformation `z^n - t z` that splits a
//! degenerate critical point into `n - 1` simple ones.

use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

use crate::roots::{all_roots, RootError, RootOptions};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoverError {
    #[error("invalid ramification profile: {}", .0.join("; "))]
    InvalidProfile(Vec<String>),
    #[error("2g = {twice_genus} is odd, so the genus is not an integer")]
    NonIntegerGenus { twice_genus: i64 },
    #[error("the profile gives negative genus {0}")]
    NegativeGenus(i64),
    #[error("local order must be at least 2, got {0}")]
    InvalidOrder(u32),
    #[error("epsilon must lie in (0, 1/2), got {0}")]
    InvalidEpsilon(f64),
    #[error("|t| = {t_abs} is not below the bound n eps^(n-1) = {bound}")]
    BoundViolated { t_abs: f64, bound: f64 },
    #[error("t = 0 leaves the critical point degenerate")]
    ZeroT,
    #[error(transparent)]
    Roots(#[from] RootError),
}

impl CoverError {
    pub fn name(&self) -> &'static str {
        match self {
            CoverError::InvalidProfile(_) => "InvalidProfile",
            CoverError::NonIntegerGenus { .. } => "NonIntegerGenus",
            CoverError::NegativeGenus(_) => "NegativeGenus",
            CoverError::InvalidOrder(_) => "InvalidOrder",
            CoverError::InvalidEpsilon(_) => "InvalidEpsilon",
            CoverError::BoundViolated { .. } => "BoundViolated",
            CoverError::ZeroT => "ZeroT",
            CoverError::Roots(_) => "RootRefinement",
        }
    }
}

/// A degree `d` cover of a genus `base_genus` surface with the ramification
/// indices listed branch point by branch point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationProfile {
    pub degree: u64,
    pub base_genus: u64,
    pub fibers: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProfileDiagnostics {
    pub valid: bool,
    pub errors: Vec<String>,
    /// Indices of fibers made only of ones.
    pub spurious_fibers: Vec<usize>,
}

pub fn validate_profile(profile: &RamificationProfile) -> ProfileDiagnostics {
    let mut diag = ProfileDiagnostics::default();
    if profile.degree == 0 {
        diag.errors.push("degree must be positive".into());
    }
    for (i, fiber) in profile.fibers.iter().enumerate() {
        if fiber.contains(&0) {
            diag.errors.push(format!("fiber {i} has a zero ramification index"));
        }
        let sum: u64 = fiber.iter().sum();
        if sum != profile.degree {
            diag.errors.push(format!(
                "fiber {i} sums to {sum}, expected {}",
                profile.degree
            ));
        }
        if !fiber.is_empty() && fiber.iter().all(|&n| n == 1) {
            diag.spurious_fibers.push(i);
        }
    }
    diag.valid = diag.errors.is_empty();
    diag
}

fn checked(profile: &RamificationProfile) -> Result<(), CoverError> {
    let diag = validate_profile(profile);
    if diag.valid {
        Ok(())
    } else {
        Err(CoverError::InvalidProfile(diag.errors))
    }
}

fn ramification_sum(profile: &RamificationProfile) -> u64 {
    profile.fibers.iter().flatten().map(|n| n - 1).sum()
}

/// Number of simple critical points after splitting every ramification point,
/// `sum (n_p - 1)`.
pub fn total_splitting_count(profile: &RamificationProfile) -> Result<u64, CoverError> {
    checked(profile)?;
    Ok(ramification_sum(profile))
}

/// `e(C) = d e(B) - sum (n_p - 1)`.
pub fn rh_euler(profile: &RamificationProfile) -> Result<i64, CoverError> {
    checked(profile)?;
    let d = profile.degree as i64;
    let base_euler = 2 - 2 * profile.base_genus as i64;
    Ok(d * base_euler - ramification_sum(profile) as i64)
}

/// `g(C) = 1 + d (g(B) - 1) + sum (n_p - 1) / 2`.
pub fn rh_genus(profile: &RamificationProfile) -> Result<i64, CoverError> {
    let euler = rh_euler(profile)?;
    let twice_genus = 2 - euler;
    if twice_genus % 2 != 0 {
        return Err(CoverError::NonIntegerGenus { twice_genus });
    }
    let g = twice_genus / 2;
    if g < 0 {
        return Err(CoverError::NegativeGenus(g));
    }
    Ok(g)
}

/// Projection of a smooth degree `d` plane curve to a line: `d(d-1)` simple
/// branch points over the sphere.
pub fn plane_curve_profile(d: u64) -> RamificationProfile {
    let mut simple = vec![1; d as usize];
    if let Some(first) = simple.first_mut() {
        *first = 2;
        simple.pop();
    }
    RamificationProfile {
        degree: d,
        base_genus: 0,
        fibers: vec![simple; (d * d.saturating_sub(1)) as usize],
    }
}

pub fn plane_curve_via_rh(d: u64) -> Result<i64, CoverError> {
    rh_genus(&plane_curve_profile(d))
}

/// Critical points of `f_t(z) = z^n - t z` near the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationResult {
    pub n: u32,
    pub t: Complex64,
    pub epsilon: f64,
    /// Roots of `n z^(n-1) = t`, sorted by (re, im).
    pub critical_points: Vec<Complex64>,
    /// `|n z^(n-1) - t|` at each critical point.
    pub residuals: Vec<f64>,
    pub min_separation: Option<f64>,
    pub all_nondegenerate: bool,
    pub all_inside_epsilon_disc: bool,
    pub annulus_clear: bool,
}

fn derivative(n: u32, t: Complex64, z: Complex64) -> Complex64 {
    z.powu(n - 1) * n as f64 - t
}

/// Deform `z^n` to `z^n - t z` and locate the `n - 1` critical points.
pub fn split_degenerate(
    n: u32,
    epsilon: f64,
    t: Complex64,
    opts: RootOptions,
) -> Result<PerturbationResult, CoverError> {
    if n < 2 {
        return Err(CoverError::InvalidOrder(n));
    }
    if !(epsilon > 0.0 && epsilon < 0.5) {
        return Err(CoverError::InvalidEpsilon(epsilon));
    }
    if t.norm() == 0.0 {
        return Err(CoverError::ZeroT);
    }
    let bound = n as f64 * epsilon.powi(n as i32 - 1);
    if t.norm() >= bound {
        return Err(CoverError::BoundViolated {
            t_abs: t.norm(),
            bound,
        });
    }
    // refine w^(n-1) = t / |t| and scale back by z = rho w, since the
    // unscaled coefficients n and t can differ by many orders of magnitude
    let rho = (t.norm() / n as f64).powf(1.0 / (n as f64 - 1.0));
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n as usize];
    coeffs[0] = -t / t.norm();
    coeffs[n as usize - 1] = Complex64::new(1.0, 0.0);
    let roots = all_roots(&coeffs, opts)?;
    let critical_points: Vec<Complex64> = roots.roots.iter().map(|r| r.value * rho).collect();
    let residuals = critical_points.iter().map(|&z| derivative(n, t, z).norm()).collect();
    let mut min_separation: Option<f64> = None;
    for (i, a) in critical_points.iter().enumerate() {
        for b in &critical_points[i + 1..] {
            let d = (a - b).norm();
            min_separation = Some(min_separation.map_or(d, |m| m.min(d)));
        }
    }
    let all_nondegenerate = critical_points.iter().all(|&z| {
        let second = z.powi(n as i32 - 2) * (n * (n - 1)) as f64;
        second.norm() > 0.0 && second.norm().is_finite()
    });
    let all_inside_epsilon_disc = critical_points.iter().all(|z| z.norm() < epsilon);
    Ok(PerturbationResult {
        n,
        t,
        epsilon,
        critical_points,
        residuals,
        min_separation,
        all_nondegenerate,
        all_inside_epsilon_disc,
        annulus_clear: annulus_clear(n, t, epsilon).clear,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnulusCheck {
    /// No root of `n z^(n-1) - t` in `epsilon <= |z| <= 1/2`.
    pub clear: bool,
    /// Smallest `|n z^(n-1) - t|` over a polar grid of the annulus.
    pub min_sampled_derivative: f64,
}

const RADIAL_SAMPLES: usize = 32;
const ANGULAR_SAMPLES: usize = 256;

/// All roots of `n z^(n-1) = t` share the modulus `(|t|/n)^(1/(n-1))`, so the
/// annulus is clear iff that modulus lies outside `[epsilon, 1/2]`.
pub fn annulus_clear(n: u32, t: Complex64, epsilon: f64) -> AnnulusCheck {
    let modulus = if n < 2 {
        f64::INFINITY
    } else {
        (t.norm() / n as f64).powf(1.0 / (n as f64 - 1.0))
    };
    let clear = modulus < epsilon || modulus > 0.5;
    let mut min = f64::INFINITY;
    for i in 0..=RADIAL_SAMPLES {
        let r = epsilon + (0.5 - epsilon) * i as f64 / RADIAL_SAMPLES as f64;
        for k in 0..ANGULAR_SAMPLES {
            let z = Complex64::from_polar(r, 2.0 * PI * k as f64 / ANGULAR_SAMPLES as f64);
            min = min.min(derivative(n.max(1), t, z).norm());
        }
    }
    AnnulusCheck {
        clear,
        min_sampled_derivative: min,
    }
}
