mod support;

use morse_pencil::covers_rh::plane_curve_via_rh;
use morse_pencil::curve_pencil::{
    analyze, check_axis_admissible, critical_locus, genus, is_lefschetz, morse_cell_counts,
    HomogeneousCurve,
};
use morse_pencil::exact_poly::{integer, Rational};
use morse_pencil::morse_homology::genus_from_cell_counts;
use morse_pencil::roots::{all_roots, RootOptions};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::CORPUS;

fn curve(s: &str) -> HomogeneousCurve {
    HomogeneousCurve::parse(s, &["x", "y", "z"]).unwrap()
}

fn opts() -> RootOptions {
    RootOptions::default()
}

#[test]
fn corpus_bezout_genus_and_euler() {
    for s in CORPUS {
        let c = curve(s);
        let d = c.degree() as i64;
        let report = analyze(&c, opts());
        assert!(report.failure.is_none(), "{s}: {:?}", report.failure);
        let locus = report.critical.as_ref().unwrap();
        assert_eq!(locus.count_with_multiplicity as i64, d * (d - 1), "{s}");
        assert_eq!(locus.chart_degree() as i64, d * (d - 1), "{s}");
        assert_eq!(report.genus, Some((d - 1) * (d - 2) / 2), "{s}");
        assert_eq!(report.euler, Some(d * (3 - d)), "{s}");
        let counts = report.cell_counts.unwrap();
        assert_eq!(counts.euler(), d * (3 - d), "{s}");
        assert_eq!(genus_from_cell_counts(&counts).ok(), report.genus, "{s}");
        assert_eq!(plane_curve_via_rh(d as u64).ok(), report.genus, "{s}");
    }
}

#[test]
fn lefschetz_verdicts() {
    assert!(!is_lefschetz(&curve("x^3 + y^3 + z^3"), opts()).unwrap());
    assert!(is_lefschetz(&curve("x^2 + y^2 + z^2"), opts()).unwrap());
    // y z^2 - x^3 + x y^2 after y -> y + z, which moves (0:0:1) off the curve
    let moved = curve("y*z^2 - x^3 + x*y^2")
        .linear_substitution([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
        .unwrap();
    assert!(is_lefschetz(&moved, opts()).unwrap());
    assert!(is_lefschetz(&curve(CORPUS[10]), opts()).unwrap());
}

fn random_unimodular(rng: &mut ChaCha8Rng) -> [[i64; 3]; 3] {
    let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    for _ in 0..4 {
        let i = rng.gen_range(0..3);
        let j = (i + rng.gen_range(1..3)) % 3;
        let c = if rng.gen_bool(0.5) { 1 } else { -1 };
        for k in 0..3 {
            m[i][k] += c * m[j][k];
        }
    }
    m
}

#[test]
fn genus_is_invariant_under_unimodular_changes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for s in CORPUS.iter().filter(|s| curve(s).degree() <= 4) {
        let c = curve(s);
        let g = genus(&c, opts()).unwrap();
        for _ in 0..4 {
            let moved = c.linear_substitution(random_unimodular(&mut rng)).unwrap();
            if !check_axis_admissible(&moved) {
                continue;
            }
            assert_eq!(genus(&moved, opts()).unwrap(), g, "{s} -> {}", moved.equation());
            checked += 1;
        }
    }
    assert!(checked >= 20, "only {checked} admissible substitutions");
}

#[test]
fn regular_fibres_have_degree_many_points() {
    for s in CORPUS {
        let c = curve(s);
        let d = c.degree() as usize;
        let locus = critical_locus(&c, opts()).unwrap();
        let x0 = (1..)
            .map(|k| Rational::new(k.into(), 7.into()))
            .find(|x| !locus.resultant_r.evaluate(&[x.clone()]).is_zero())
            .unwrap();
        let fibre = c
            .equation()
            .specialize("y", &integer(1))
            .unwrap()
            .specialize("x", &x0)
            .unwrap();
        let coeffs: Vec<Complex64> = (0..=d as u32)
            .map(|k| Complex64::new(fibre.coefficient(&[k]).to_f64().unwrap(), 0.0))
            .collect();
        let roots = all_roots(&coeffs, opts()).unwrap().roots;
        assert_eq!(roots.len(), d, "{s}");
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                assert!((a.value - b.value).norm() > 1e-6, "{s}: fibre over {x0} has a repeated root");
            }
        }
        let counts = morse_cell_counts(&c, opts()).unwrap();
        assert_eq!(counts.index0 as usize, d);
        assert_eq!(counts.index2 as usize, d);
    }
}
