//! Plane curves under the pencil of lines through the axis `p = (0:0:1)`.
//!
//! A curve is given by a ternary form `f(x, y, z)`, with the three declared
//! variables playing the roles of `x`, `y`, `z` in order. On the chart `y = 1`
//! the projection from `p` is `(x, z) -> x`, and its critical points on the
//! curve are the common zeros of `F = f(x, 1, z)` and `dF/dz`.

mod elimination;

pub use elimination::{common_zeros, CommonZeros};

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact_poly::{integer, resultant_general, PolyError, Polynomial, Rational, UniPoly};
use crate::roots::{all_roots, CertifiedRoot, RootError, RootOptions};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("curve equation is the zero polynomial")]
    ZeroPolynomial,
    #[error("curve equation is not homogeneous")]
    NotHomogeneous,
    #[error("curve equation has degree 0")]
    ConstantEquation,
    #[error("curve is singular: {0}")]
    NotSmooth(SingularWitness),
    #[error("axis (0:0:1) lies on the curve; try {0}")]
    AxisOnCurve(AxisSuggestion),
    #[error(transparent)]
    Roots(#[from] RootError),
    #[error("internal invariant violated: {0}")]
    InvariantBreach(String),
}

impl CurveError {
    /// Short machine-readable name.
    pub fn name(&self) -> &'static str {
        match self {
            CurveError::Poly(_) => "ParseError",
            CurveError::ZeroPolynomial => "ZeroPolynomial",
            CurveError::NotHomogeneous => "NotHomogeneous",
            CurveError::ConstantEquation => "ConstantEquation",
            CurveError::NotSmooth(_) => "NotSmooth",
            CurveError::AxisOnCurve(_) => "AxisOnCurve",
            CurveError::Roots(_) => "RootRefinement",
            CurveError::InvariantBreach(_) => "InvariantBreach",
        }
    }
}

/// A projective plane curve `V(f)` with `f` homogeneous of positive degree.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousCurve {
    f: Polynomial,
    degree: u32,
}

impl HomogeneousCurve {
    pub fn new(f: Polynomial) -> Result<Self, CurveError> {
        if f.vars().len() != 3 {
            return Err(PolyError::NotTernary(f.vars().len()).into());
        }
        if f.is_zero() {
            return Err(CurveError::ZeroPolynomial);
        }
        let degree = f.homogeneous_degree().ok_or(CurveError::NotHomogeneous)?;
        if degree == 0 {
            return Err(CurveError::ConstantEquation);
        }
        Ok(HomogeneousCurve { f, degree })
    }

    pub fn parse<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Self, CurveError> {
        Self::new(crate::exact_poly::parse(text, vars)?)
    }

    pub fn equation(&self) -> &Polynomial {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn var(&self, i: usize) -> &str {
        &self.f.vars()[i]
    }

    /// Apply the linear substitution `(x, y, z) -> rows * (x, y, z)`.
    pub fn linear_substitution(&self, rows: [[i64; 3]; 3]) -> Result<Self, CurveError> {
        let vars = self.f.vars();
        let forms: Vec<Polynomial> = rows
            .iter()
            .map(|row| {
                Polynomial::from_terms(
                    vars,
                    row.iter().enumerate().map(|(j, &c)| {
                        let mut e = vec![0; 3];
                        e[j] = 1;
                        (e, integer(c))
                    }),
                )
            })
            .collect();
        Self::new(self.f.compose(&forms))
    }
}

/// Affine chart `coordinate = 1` of the projective plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Patch {
    X,
    Y,
    Z,
}

impl fmt::Display for Patch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Patch::X => write!(f, "x = 1"),
            Patch::Y => write!(f, "y = 1"),
            Patch::Z => write!(f, "z = 1"),
        }
    }
}

/// Certificate that the gradient of `f` has a common projective zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularWitness {
    pub patch: Patch,
    /// Eliminant in the first remaining chart coordinate (after a shear by
    /// `shear` times the second). `None` when the gradient components share
    /// a whole curve component on the chart.
    pub eliminant: Option<UniPoly>,
    pub shear: i64,
}

impl fmt::Display for SingularWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.eliminant {
            Some(e) => write!(
                f,
                "gradient vanishes on chart {} over the roots of a degree {} eliminant",
                self.patch,
                e.degree().unwrap_or(0)
            ),
            None => write!(f, "gradient vanishes along a curve on chart {}", self.patch),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmoothnessCheck {
    pub smooth: bool,
    pub witness: Option<SingularWitness>,
}

/// `true` iff `f, df/dx, df/dy, df/dz` have no common projective zero.
///
/// By Euler's relation `d f = x f_x + y f_y + z f_z`, only the gradient needs to
/// be eliminated on each chart.
pub fn check_smooth(curve: &HomogeneousCurve) -> SmoothnessCheck {
    let gradient: Vec<Polynomial> = (0..3)
        .map(|i| curve.f.derivative(curve.var(i)).expect("declared"))
        .collect();
    for (i, patch) in [Patch::Z, Patch::Y, Patch::X].into_iter().enumerate() {
        let chart_var = curve.var(2 - i).to_string();
        let chart: Vec<Polynomial> = gradient
            .iter()
            .map(|g| g.specialize(&chart_var, &Rational::one()).expect("declared"))
            .collect();
        match common_zeros(&chart) {
            CommonZeros::None => continue,
            CommonZeros::Isolated { eliminant, shear } => {
                return SmoothnessCheck {
                    smooth: false,
                    witness: Some(SingularWitness {
                        patch,
                        eliminant: Some(eliminant),
                        shear,
                    }),
                }
            }
            CommonZeros::Infinite => {
                return SmoothnessCheck {
                    smooth: false,
                    witness: Some(SingularWitness {
                        patch,
                        eliminant: None,
                        shear: 0,
                    }),
                }
            }
        }
    }
    SmoothnessCheck {
        smooth: true,
        witness: None,
    }
}

/// `true` iff `f(0, 0, 1) != 0`, i.e. the axis is off the curve.
pub fn check_axis_admissible(curve: &HomogeneousCurve) -> bool {
    !curve
        .f
        .coefficient(&[0, 0, curve.degree])
        .is_zero()
}

/// Linear change `x -> x + a z`, `y -> y + b z` that moves the axis off the
/// curve, since the new `z^d` coefficient is `f(a, b, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxisSuggestion {
    pub x_shift: i64,
    pub y_shift: i64,
}

impl AxisSuggestion {
    pub fn matrix(&self) -> [[i64; 3]; 3] {
        [[1, 0, self.x_shift], [0, 1, self.y_shift], [0, 0, 1]]
    }
}

impl fmt::Display for AxisSuggestion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "substituting x -> x + ({})*z, y -> y + ({})*z",
            self.x_shift, self.y_shift
        )
    }
}

/// Seeded search for an admissible coordinate change.
pub fn suggest_axis_change(curve: &HomogeneousCurve, seed: u64) -> AxisSuggestion {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let admissible = |a: i64, b: i64| {
        !curve
            .f
            .evaluate(&[integer(a), integer(b), Rational::one()])
            .is_zero()
    };
    for _ in 0..64 {
        let (a, b) = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        if admissible(a, b) {
            return AxisSuggestion {
                x_shift: a,
                y_shift: b,
            };
        }
    }
    // f(a, b, 1) is a nonzero polynomial of degree d, so it cannot vanish on
    // the whole grid {0..=d}^2.
    let d = curve.degree as i64;
    for a in 0..=d {
        for b in 0..=d {
            if admissible(a, b) {
                return AxisSuggestion {
                    x_shift: a,
                    y_shift: b,
                };
            }
        }
    }
    unreachable!("nonzero polynomial vanishing on a full grid")
}

/// Critical locus of the projection from the axis.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPointSet {
    /// `Res_z(f, df/dz)`, a binary form in `x, y` of degree `d(d-1)`.
    pub resultant_form: Polynomial,
    /// `R = Res_z(F, dF/dz)` on the chart `y = 1`.
    pub resultant_r: Polynomial,
    /// Number of critical points with multiplicity, the degree of the form.
    pub count_with_multiplicity: u64,
    /// Multiplicity of the critical fibre over `(1:0)`, outside the chart.
    pub at_infinity: u64,
    /// Roots of the squarefree part of `R`, sorted by (re, im).
    pub distinct_x_values: Vec<CertifiedRoot>,
    pub squarefree: bool,
}

impl CriticalPointSet {
    /// `deg_x R`.
    pub fn chart_degree(&self) -> u64 {
        self.resultant_r.total_degree().unwrap_or(0) as u64
    }
}

fn require_admissible(curve: &HomogeneousCurve) -> Result<(), CurveError> {
    let smooth = check_smooth(curve);
    if let Some(w) = smooth.witness {
        return Err(CurveError::NotSmooth(w));
    }
    if !check_axis_admissible(curve) {
        return Err(CurveError::AxisOnCurve(suggest_axis_change(curve, 0)));
    }
    Ok(())
}

fn locus_unchecked(
    curve: &HomogeneousCurve,
    opts: RootOptions,
) -> Result<CriticalPointSet, CurveError> {
    let (xv, yv, zv) = (curve.var(0), curve.var(1), curve.var(2));
    let fz = curve.f.derivative(zv)?;
    let form = resultant_general(&curve.f, &fz, zv)?;
    let d = curve.degree as u64;
    let count = d * (d - 1);
    if form.is_zero() || form.homogeneous_degree() != Some(count as u32) {
        return Err(CurveError::InvariantBreach(format!(
            "discriminant form should be homogeneous of degree {count}, got {form}"
        )));
    }
    let r = form.specialize(yv, &Rational::one())?;
    let index = r.var_index(xv)?;
    let uni = UniPoly::from_polynomial(&r, index)?;
    let chart_degree = uni.degree().unwrap_or(0) as u64;
    let squarefree = uni.is_squarefree();
    let roots = all_roots(&uni.squarefree_part().to_complex(), opts)?;
    Ok(CriticalPointSet {
        resultant_form: form,
        resultant_r: r,
        count_with_multiplicity: count,
        at_infinity: count - chart_degree,
        distinct_x_values: roots.roots,
        squarefree,
    })
}

/// Resultant, Bezout count and numerically refined critical values.
pub fn critical_locus(
    curve: &HomogeneousCurve,
    opts: RootOptions,
) -> Result<CriticalPointSet, CurveError> {
    require_admissible(curve)?;
    locus_unchecked(curve, opts)
}

/// Numerically observed root multiplicities of the fibre `F(x0, .)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberProfile {
    pub x: Complex64,
    /// Cluster sizes in descending order; `None` if refinement failed.
    pub multiplicities: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LefschetzCheck {
    pub lefschetz: bool,
    pub squarefree: bool,
    /// Some fibre on the chart has a root of multiplicity at least three.
    pub triple_point: bool,
    pub at_infinity: u64,
    pub fibers: Vec<FiberProfile>,
    pub warnings: Vec<String>,
}

fn cluster_sizes(roots: &[CertifiedRoot]) -> Vec<usize> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (roots[i].value, roots[j].value);
            if (a - b).norm() < 1e-4 * (1.0 + a.norm().max(b.norm())) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri] = rj;
            }
        }
    }
    let mut sizes = vec![0; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        sizes[r] += 1;
    }
    let mut out: Vec<usize> = sizes.into_iter().filter(|&s| s > 0).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Values of `F`, `F_x`, `F_z`, `F_xz`, `F_zz` at `(x, z)` from the
/// `z`-coefficients of the chart and their `x`-derivatives.
fn jet(coeffs: &[Vec<Complex64>], dcoeffs: &[Vec<Complex64>], x: Complex64, z: Complex64) -> [Complex64; 5] {
    let zero = Complex64::new(0.0, 0.0);
    let horner = |c: &[Complex64]| c.iter().rev().fold(zero, |acc, a| acc * x + a);
    let a: Vec<Complex64> = coeffs.iter().map(|c| horner(c)).collect();
    let b: Vec<Complex64> = dcoeffs.iter().map(|c| horner(c)).collect();
    let mut out = [zero; 5];
    for k in (0..a.len()).rev() {
        let kf = k as f64;
        let zk = z.powu(k as u32);
        let zk1 = if k >= 1 { z.powu(k as u32 - 1) } else { zero };
        let zk2 = if k >= 2 { z.powu(k as u32 - 2) } else { zero };
        out[0] += a[k] * zk;
        out[1] += b[k] * zk;
        out[2] += a[k] * zk1 * kf;
        out[3] += b[k] * zk1 * kf;
        out[4] += a[k] * zk2 * kf * (kf - 1.0);
    }
    out
}

/// Newton on `F = F_z = 0` from `(x, z)`. The system is regular at a
/// nondegenerate critical point, so this recovers full precision even when
/// critical values nearly coincide.
fn polish_critical_point(
    coeffs: &[Vec<Complex64>],
    dcoeffs: &[Vec<Complex64>],
    mut x: Complex64,
    mut z: Complex64,
) -> (Complex64, Complex64) {
    for _ in 0..30 {
        let [f, fx, fz, fxz, fzz] = jet(coeffs, dcoeffs, x, z);
        // Jacobian [[fx, fz], [fxz, fzz]]
        let det = fx * fzz - fz * fxz;
        if det.norm() == 0.0 || !det.re.is_finite() {
            break;
        }
        let dx = (f * fzz - fz * fz) / det;
        let dz = (fx * fz - fxz * f) / det;
        x -= dx;
        z -= dz;
        if dx.norm() + dz.norm() <= 1e-15 * (1.0 + x.norm() + z.norm()) {
            break;
        }
    }
    (x, z)
}

fn closest_pair(roots: &[CertifiedRoot]) -> Option<(usize, usize)> {
    let mut best: Option<(f64, usize, usize)> = None;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let d = (roots[i].value - roots[j].value).norm();
            if best.is_none_or(|(b, _, _)| d < b) {
                best = Some((d, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Root multiplicities of the fibre over a critical value: the critical point
/// is polished jointly in `(x, z)`, the double factor is divided out, and the
/// remaining roots are clustered together with the critical point.
fn fiber_profile(
    coeffs: &[Vec<Complex64>],
    dcoeffs: &[Vec<Complex64>],
    x0: Complex64,
    opts: RootOptions,
) -> Option<(Complex64, Vec<usize>)> {
    let zero = Complex64::new(0.0, 0.0);
    let fiber_at = |x: Complex64| -> Vec<Complex64> {
        coeffs
            .iter()
            .map(|c| c.iter().rev().fold(zero, |acc, a| acc * x + a))
            .collect()
    };
    let first = all_roots(&fiber_at(x0), opts).ok()?;
    let Some((i, j)) = closest_pair(&first.roots) else {
        return Some((x0, cluster_sizes(&first.roots)));
    };
    let mid = (first.roots[i].value + first.roots[j].value) * 0.5;
    let (x, z0) = polish_critical_point(coeffs, dcoeffs, x0, mid);
    let mut fiber = fiber_at(x);
    while fiber.last().is_some_and(|c| c.norm() == 0.0) {
        fiber.pop();
    }
    // synthetic division by (z - z0) twice
    for _ in 0..2 {
        let n = fiber.len() - 1;
        let mut q = vec![zero; n];
        let mut acc = zero;
        for k in (0..n).rev() {
            acc = acc * z0 + fiber[k + 1];
            q[k] = acc;
        }
        fiber = q;
    }
    let rest = all_roots(&fiber, opts).ok()?;
    let mut points = rest.roots;
    points.push(CertifiedRoot {
        value: z0,
        residual: 0.0,
    });
    let mut sizes = cluster_sizes(&points);
    // the polished point stands for two roots
    let z_cluster = points
        .iter()
        .filter(|r| (r.value - z0).norm() < 1e-4 * (1.0 + z0.norm()))
        .count();
    if let Some(s) = sizes.iter_mut().find(|s| **s == z_cluster) {
        *s += 1;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Some((x, sizes))
}

fn lefschetz_from_locus(
    curve: &HomogeneousCurve,
    locus: &CriticalPointSet,
    opts: RootOptions,
) -> Result<LefschetzCheck, CurveError> {
    let (yv, zv) = (curve.var(1), curve.var(2));
    let chart = curve.f.specialize(yv, &Rational::one())?;
    let fz = chart.derivative(zv)?;
    let fzz = fz.derivative(zv)?;
    let triple_point = common_zeros(&[chart.clone(), fz, fzz]).exist();

    let coeffs: Vec<UniPoly> = chart
        .coefficients_in(zv)?
        .iter()
        .map(|c| UniPoly::from_polynomial(c, 0))
        .collect::<Result<_, _>>()?;
    let mut fibers = Vec::new();
    let mut warnings = Vec::new();
    let complex: Vec<Vec<Complex64>> = coeffs.iter().map(UniPoly::to_complex).collect();
    let dcomplex: Vec<Vec<Complex64>> = coeffs.iter().map(|c| c.derivative().to_complex()).collect();
    for root in &locus.distinct_x_values {
        let multiplicities = fiber_profile(&complex, &dcomplex, root.value, opts).map(|(_, m)| m);
        if multiplicities.is_none() {
            warnings.push(format!("fibre over x = {} did not converge", root.value));
        }
        fibers.push(FiberProfile {
            x: root.value,
            multiplicities,
        });
    }

    let lefschetz = locus.squarefree && locus.at_infinity <= 1 && !triple_point;
    if lefschetz {
        for fp in &fibers {
            if let Some(m) = &fp.multiplicities {
                if m.first() != Some(&2) || m.get(1).is_some_and(|&k| k > 1) {
                    warnings.push(format!(
                        "fibre over x = {} looks like {:?} numerically, expected one double root",
                        fp.x, m
                    ));
                }
            }
        }
    }
    Ok(LefschetzCheck {
        lefschetz,
        squarefree: locus.squarefree,
        triple_point,
        at_infinity: locus.at_infinity,
        fibers,
        warnings,
    })
}

/// Full Lefschetz test: squarefree critical values and, fibre by fibre,
/// exactly one double root.
pub fn lefschetz_check(
    curve: &HomogeneousCurve,
    opts: RootOptions,
) -> Result<LefschetzCheck, CurveError> {
    let locus = critical_locus(curve, opts)?;
    lefschetz_from_locus(curve, &locus, opts)
}

pub fn is_lefschetz(curve: &HomogeneousCurve, opts: RootOptions) -> Result<bool, CurveError> {
    Ok(lefschetz_check(curve, opts)?.lefschetz)
}

/// Numbers of index 0, 1 and 2 critical points of `g o pi_p` on the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorseCellCounts {
    pub index0: u64,
    pub index1: u64,
    pub index2: u64,
}

impl MorseCellCounts {
    pub fn euler(&self) -> i64 {
        self.index0 as i64 - self.index1 as i64 + self.index2 as i64
    }
}

impl fmt::Display for MorseCellCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.index0, self.index1, self.index2)
    }
}

fn counts_from_locus(curve: &HomogeneousCurve, locus: &CriticalPointSet) -> MorseCellCounts {
    let d = curve.degree as u64;
    MorseCellCounts {
        index0: d,
        index1: locus.count_with_multiplicity,
        index2: d,
    }
}

pub fn morse_cell_counts(
    curve: &HomogeneousCurve,
    opts: RootOptions,
) -> Result<MorseCellCounts, CurveError> {
    let locus = critical_locus(curve, opts)?;
    Ok(counts_from_locus(curve, &locus))
}

fn genus_and_euler(
    curve: &HomogeneousCurve,
    counts: &MorseCellCounts,
) -> Result<(i64, i64), CurveError> {
    let d = curve.degree as i64;
    let genus = (d - 1) * (d - 2) / 2;
    let euler = 2 - 2 * genus;
    if euler != counts.euler() {
        return Err(CurveError::InvariantBreach(format!(
            "euler {euler} from genus disagrees with alternating cell count {}",
            counts.euler()
        )));
    }
    Ok((genus, euler))
}

pub fn genus(curve: &HomogeneousCurve, opts: RootOptions) -> Result<i64, CurveError> {
    let counts = morse_cell_counts(curve, opts)?;
    Ok(genus_and_euler(curve, &counts)?.0)
}

pub fn euler(curve: &HomogeneousCurve, opts: RootOptions) -> Result<i64, CurveError> {
    let counts = morse_cell_counts(curve, opts)?;
    Ok(genus_and_euler(curve, &counts)?.1)
}

/// Everything the pipeline could establish; fields past the first failed
/// precondition are `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct TopologyReport {
    pub degree: u32,
    pub smooth: bool,
    pub smoothness_witness: Option<SingularWitness>,
    pub axis_admissible: Option<bool>,
    pub lefschetz: Option<LefschetzCheck>,
    pub critical: Option<CriticalPointSet>,
    pub cell_counts: Option<MorseCellCounts>,
    pub genus: Option<i64>,
    pub euler: Option<i64>,
    pub failure: Option<CurveError>,
}

pub fn analyze(curve: &HomogeneousCurve, opts: RootOptions) -> TopologyReport {
    analyze_seeded(curve, opts, 0)
}

/// [`analyze`], with `seed` driving the coordinate change suggested when the
/// axis lies on the curve.
pub fn analyze_seeded(curve: &HomogeneousCurve, opts: RootOptions, seed: u64) -> TopologyReport {
    let mut report = TopologyReport {
        degree: curve.degree,
        smooth: false,
        smoothness_witness: None,
        axis_admissible: None,
        lefschetz: None,
        critical: None,
        cell_counts: None,
        genus: None,
        euler: None,
        failure: None,
    };
    let smooth = check_smooth(curve);
    report.smooth = smooth.smooth;
    if let Some(w) = smooth.witness {
        report.smoothness_witness = Some(w.clone());
        report.failure = Some(CurveError::NotSmooth(w));
        return report;
    }
    let admissible = check_axis_admissible(curve);
    report.axis_admissible = Some(admissible);
    if !admissible {
        report.failure = Some(CurveError::AxisOnCurve(suggest_axis_change(curve, seed)));
        return report;
    }
    let locus = match locus_unchecked(curve, opts) {
        Ok(l) => l,
        Err(e) => {
            report.failure = Some(e);
            return report;
        }
    };
    match lefschetz_from_locus(curve, &locus, opts) {
        Ok(l) => report.lefschetz = Some(l),
        Err(e) => {
            report.failure = Some(e);
            return report;
        }
    }
    let counts = counts_from_locus(curve, &locus);
    report.critical = Some(locus);
    report.cell_counts = Some(counts);
    match genus_and_euler(curve, &counts) {
        Ok((g, e)) => {
            report.genus = Some(g);
            report.euler = Some(e);
        }
        Err(e) => report.failure = Some(e),
    }
    report
}
