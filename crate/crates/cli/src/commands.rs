use std::path::Path;

use morse_pencil::covers_rh::{
    annulus_clear, rh_euler, rh_genus, split_degenerate, total_splitting_count, validate_profile,
    RamificationProfile,
};
use morse_pencil::curve_pencil::{
    analyze_seeded, CurveError, HomogeneousCurve, SingularWitness, TopologyReport,
};
use morse_pencil::hessian_index::{finite_difference_check, pencil_hessian, pencil_index};
use morse_pencil::morse_homology::{
    euler_characteristic, genus_from_cell_counts, homology, ChainComplex, HomologyError,
    IntegerMatrix,
};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::input::{self, ComplexFile, CurveFile, ProfileFile};
use crate::report::{complex, float, ExitCode, Report};

pub struct Outcome {
    pub exit: ExitCode,
    pub report: Report,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome {
            exit: ExitCode::Success,
            report,
        }
    }

    fn failed(mut report: Report, exit: ExitCode, kind: &str, message: impl Into<String>) -> Self {
        report.fail(kind, message);
        Outcome { exit, report }
    }
}

const NO_DIGEST: &str = "unavailable";
const FD_STEP: f64 = 1e-4;

fn load<T: for<'de> serde::Deserialize<'de>>(
    command: &str,
    path: &Path,
) -> Result<(T, Report), Outcome> {
    let loaded = input::load(path).map_err(|e| {
        Outcome::failed(Report::new(command, NO_DIGEST.into()), ExitCode::InputError, "InputError", e)
    })?;
    let report = Report::new(command, loaded.digest);
    match input::parse(&loaded.text) {
        Ok(doc) => Ok((doc, report)),
        Err(e) => Err(Outcome::failed(report, ExitCode::InputError, "InputError", e)),
    }
}

/// Exit code for a failed curve analysis.
pub fn curve_exit(e: &CurveError) -> ExitCode {
    match e {
        CurveError::Poly(_) => ExitCode::InputError,
        CurveError::InvariantBreach(_) => ExitCode::InvariantBreach,
        _ => ExitCode::DomainError,
    }
}

fn witness_json(w: &SingularWitness) -> Value {
    json!({
        "patch": w.patch.to_string(),
        "shear": w.shear,
        "eliminant": w.eliminant.as_ref().map(|e| e.to_polynomial(&["s".to_string()], 0).to_string()),
    })
}

fn topology_json(curve: &HomogeneousCurve, t: &TopologyReport) -> Value {
    let critical = t.critical.as_ref().map(|c| {
        json!({
            "resultant": c.resultant_r.to_string(),
            "count_with_multiplicity": c.count_with_multiplicity,
            "chart_degree": c.chart_degree(),
            "at_infinity": c.at_infinity,
            "squarefree": c.squarefree,
            "distinct_x_values": c.distinct_x_values.iter().map(|r| json!({
                "value": complex(r.value),
                "residual": float(r.residual),
            })).collect::<Vec<_>>(),
        })
    });
    let lefschetz = t.lefschetz.as_ref().map(|l| {
        json!({
            "lefschetz": l.lefschetz,
            "squarefree": l.squarefree,
            "triple_point": l.triple_point,
            "at_infinity": l.at_infinity,
            "fibers": l.fibers.iter().map(|f| json!({
                "x": complex(f.x),
                "multiplicities": f.multiplicities,
            })).collect::<Vec<_>>(),
        })
    });
    let counts = t.cell_counts.map(|c| {
        json!({ "index0": c.index0, "index1": c.index1, "index2": c.index2 })
    });
    json!({
        "polynomial": curve.equation().to_string(),
        "degree": t.degree,
        "smooth": t.smooth,
        "smoothness_witness": t.smoothness_witness.as_ref().map(witness_json),
        "axis_admissible": t.axis_admissible,
        "critical_locus": critical,
        "lefschetz": lefschetz,
        "cell_counts": counts,
        "genus": t.genus,
        "euler": t.euler,
        "genus_from_cell_counts": t.cell_counts.and_then(|c| genus_from_cell_counts(&c).ok()),
    })
}

pub fn curve_analyze(path: &Path, config: &RunConfig) -> Outcome {
    let (doc, mut report) = match load::<CurveFile>("curve analyze", path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let curve = match HomogeneousCurve::parse(&doc.polynomial, &doc.variables) {
        Ok(c) => c,
        Err(e) => {
            let exit = curve_exit(&e);
            return Outcome::failed(report, exit, e.name(), e.to_string());
        }
    };
    let t = analyze_seeded(&curve, config.root_options(), config.seed);
    report.payload = topology_json(&curve, &t);
    if let Some(l) = &t.lefschetz {
        report.warnings.extend(l.warnings.iter().cloned());
        if !l.lefschetz {
            report
                .warnings
                .push("pencil is not Lefschetz; index 1 count is taken with multiplicity".into());
        }
    }
    match &t.failure {
        None => Outcome::ok(report),
        Some(e) => Outcome::failed(report, curve_exit(e), e.name(), e.to_string()),
    }
}

fn homology_exit(e: &HomologyError) -> ExitCode {
    match e {
        HomologyError::NotAComplex { .. } => ExitCode::DomainError,
        _ => ExitCode::InputError,
    }
}

fn homology_kind(e: &HomologyError) -> &'static str {
    match e {
        HomologyError::NotAComplex { .. } => "NotAComplex",
        _ => "InputError",
    }
}

fn build_complex(doc: &ComplexFile) -> Result<ChainComplex, HomologyError> {
    let mut boundaries = Vec::new();
    let top = doc.ranks.len().saturating_sub(1);
    for (key, rows) in &doc.boundary {
        let degree: usize = key.parse().ok().filter(|&k| k >= 1 && k <= top).ok_or(
            HomologyError::BoundaryOutOfRange {
                ranks: doc.ranks.len(),
                degree: key.parse().unwrap_or(0),
            },
        )?;
        let m = if rows.is_empty() {
            IntegerMatrix::zeros(0, doc.ranks[degree])
        } else {
            IntegerMatrix::from_rows(rows)?
        };
        boundaries.push((degree, m));
    }
    let mut dense = Vec::new();
    for degree in 1..=top {
        match boundaries.iter().position(|(k, _)| *k == degree) {
            Some(i) => dense.push(boundaries.swap_remove(i).1),
            None => dense.push(IntegerMatrix::zeros(doc.ranks[degree - 1], doc.ranks[degree])),
        }
    }
    ChainComplex::new(doc.ranks.clone(), dense)
}

pub fn homology_cmd(path: &Path, _config: &RunConfig) -> Outcome {
    let (doc, mut report) = match load::<ComplexFile>("homology", path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let complex = match build_complex(&doc) {
        Ok(c) => c,
        Err(e) => return Outcome::failed(report, homology_exit(&e), homology_kind(&e), e.to_string()),
    };
    let euler = euler_characteristic(&complex);
    report.payload = json!({ "ranks": doc.ranks, "euler_characteristic": euler });
    match homology(&complex) {
        Ok(groups) => {
            report.payload["groups"] = groups
                .iter()
                .map(|g| {
                    json!({
                        "degree": g.degree,
                        "betti": g.betti,
                        "torsion": g.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "group": g.to_string(),
                    })
                })
                .collect();
            report.payload["valid"] = json!(true);
            Outcome::ok(report)
        }
        Err(e) => {
            report.payload["valid"] = json!(false);
            if let HomologyError::NotAComplex { degree } = e {
                report.payload["failing_degree"] = json!(degree);
            }
            Outcome::failed(report, homology_exit(&e), homology_kind(&e), e.to_string())
        }
    }
}

pub fn rh(path: &Path, _config: &RunConfig) -> Outcome {
    let (doc, mut report) = match load::<ProfileFile>("rh", path) {
        Ok(x) => x,
        Err(o) => return o,
    };
    let profile = RamificationProfile {
        degree: doc.degree,
        base_genus: doc.base_genus,
        fibers: doc.fibers,
    };
    let diag = validate_profile(&profile);
    report.payload = json!({
        "degree": profile.degree,
        "base_genus": profile.base_genus,
        "fibers": profile.fibers,
        "valid": diag.valid,
        "diagnostics": diag.errors,
        "spurious_fibers": diag.spurious_fibers,
    });
    for i in &diag.spurious_fibers {
        report.warnings.push(format!("fiber {i} is unramified"));
    }
    let euler = match rh_euler(&profile) {
        Ok(e) => e,
        Err(e) => return Outcome::failed(report, ExitCode::DomainError, e.name(), e.to_string()),
    };
    report.payload["euler"] = json!(euler);
    report.payload["splitting_count"] =
        json!(total_splitting_count(&profile).expect("profile already validated"));
    match rh_genus(&profile) {
        Ok(g) => {
            report.payload["genus"] = json!(g);
            Outcome::ok(report)
        }
        Err(e) => Outcome::failed(report, ExitCode::DomainError, e.name(), e.to_string()),
    }
}

pub fn perturb(n: u32, epsilon: f64, t: Complex64, config: &RunConfig) -> Outcome {
    let canonical = format!(
        "perturb n={n} epsilon={} t={}",
        float(epsilon),
        serde_json::to_string(&complex(t)).expect("serializes")
    );
    let mut report = Report::new("perturb", input::digest(canonical.as_bytes()));
    let bound = n as f64 * epsilon.powi(n as i32 - 1);
    report.payload = json!({
        "n": n,
        "epsilon": float(epsilon),
        "t": complex(t),
        "bound": float(bound),
    });
    match split_degenerate(n, epsilon, t, config.root_options()) {
        Ok(r) => {
            let annulus = annulus_clear(n, t, epsilon);
            report.payload["critical_points"] = r
                .critical_points
                .iter()
                .zip(&r.residuals)
                .map(|(z, res)| json!({ "value": complex(*z), "residual": float(*res) }))
                .collect();
            report.payload["min_separation"] = json!(r.min_separation.map(float));
            report.payload["all_nondegenerate"] = json!(r.all_nondegenerate);
            report.payload["all_inside_epsilon_disc"] = json!(r.all_inside_epsilon_disc);
            report.payload["annulus_clear"] = json!(r.annulus_clear);
            report.payload["annulus_min_sampled_derivative"] = float(annulus.min_sampled_derivative);
            Outcome::ok(report)
        }
        Err(e) => Outcome::failed(report, ExitCode::DomainError, e.name(), e.to_string()),
    }
}

pub fn hessian(a: f64, b: f64, n: usize, _config: &RunConfig) -> Outcome {
    let canonical = format!("hessian a={} b={} n={n}", float(a), float(b));
    let mut report = Report::new("hessian", input::digest(canonical.as_bytes()));
    report.payload = json!({ "a": float(a), "b": float(b), "n": n });
    let (h, index, fd) = match (
        pencil_hessian(a, b, n),
        pencil_index(a, b, n),
        finite_difference_check(a, b, n, FD_STEP),
    ) {
        (Ok(h), Ok(i), Ok(fd)) => (h, i, fd),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
            return Outcome::failed(report, ExitCode::DomainError, e.name(), e.to_string())
        }
    };
    let rows: Vec<Vec<Value>> = h.rows().iter().map(|r| r.iter().map(|v| float(*v)).collect()).collect();
    report.payload["hessian"] = json!(rows);
    report.payload["eigenvalues"] = index.hessian.eigenvalues.iter().map(|v| float(*v)).collect();
    report.payload["index"] = json!(index.hessian.negatives);
    report.payload["negatives"] = json!(index.hessian.negatives);
    report.payload["positives"] = json!(index.hessian.positives);
    report.payload["zeros"] = json!(index.hessian.zeros);
    report.payload["det_hessian"] = float(index.hessian.det);
    report.payload["det_symbol"] = float(index.symbol_det);
    report.payload["finite_difference_deviation"] = float(fd);
    report.payload["finite_difference_step"] = float(FD_STEP);
    Outcome::ok(report)
}
