use morse_pencil::exact_poly::{gcd, integer, parse, rational, resultant, Polynomial, Rational, UniPoly};
use morse_pencil::roots::{all_roots, RootOptions};
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

/// Dense univariate arithmetic kept separate from the library.
mod dense {
    use super::*;

    pub fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    pub fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let q = r.last().unwrap() / b.last().unwrap();
            for (j, c) in b.iter().enumerate() {
                r[k + j] -= &q * c;
            }
            r = trim(r);
        }
        r
    }

    /// Resultant by the Euclidean recursion
    /// `Res(a, b) = (-1)^(mn) lc(b)^(m-k) Res(b, a mod b)`.
    pub fn resultant(a: &[Rational], b: &[Rational]) -> Rational {
        let m = a.len() - 1;
        let n = b.len() - 1;
        if n == 0 {
            return num_traits::pow(b[0].clone(), m);
        }
        let r = rem(a, b);
        if r.is_empty() {
            return Rational::zero();
        }
        let k = r.len() - 1;
        let sign = if (m * n) % 2 == 1 { -Rational::one() } else { Rational::one() };
        sign * num_traits::pow(b[n].clone(), m - k) * resultant(b, &r)
    }
}

fn poly_xz(terms: &[(u32, u32, i64)]) -> Polynomial {
    Polynomial::from_terms(&["x", "z"], terms.iter().map(|&(i, j, c)| (vec![i, j], integer(c))))
}

/// Coefficients in z after substituting x = x0, low to high.
fn fiber(p: &Polynomial, x0: &Rational) -> Vec<Rational> {
    let u = p.specialize("x", x0).unwrap();
    dense::trim(UniPoly::from_polynomial(&u, 0).unwrap().coeffs().to_vec())
}

/// Bivariate polynomial in x, z of z-degree `dz` with constant nonzero
/// leading coefficient `lead`.
fn bivariate(dz: u32) -> impl Strategy<Value = Polynomial> {
    (
        prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
        prop::collection::vec(-3i64..=3, (dz as usize) * 3),
    )
        .prop_map(move |(lead, rest)| {
            let mut terms = vec![(0, dz, lead)];
            for (k, c) in rest.into_iter().enumerate() {
                terms.push(((k % 3) as u32, (k / 3) as u32, c));
            }
            poly_xz(&terms)
        })
}

fn pair() -> impl Strategy<Value = (Polynomial, Polynomial)> {
    (1u32..=4, 1u32..=3).prop_flat_map(|(m, n)| (bivariate(m), bivariate(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_matches_euclidean_oracle((p, q) in pair(), num in -5i64..=5, den in 1i64..=4) {
        let r = resultant(&p, &q, "z").unwrap();
        let x0 = rational(num, den);
        let lhs = r.evaluate(&[x0.clone()]);
        let rhs = dense::resultant(&fiber(&p, &x0), &fiber(&q, &x0));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_swap_sign((p, q) in pair()) {
        let m = p.degree_in("z").unwrap().unwrap();
        let n = q.degree_in("z").unwrap().unwrap();
        let pq = resultant(&p, &q, "z").unwrap();
        let qp = resultant(&q, &p, "z").unwrap();
        if (m * n) % 2 == 0 {
            prop_assert_eq!(pq, qp);
        } else {
            prop_assert_eq!(pq, -&qp);
        }
    }

    #[test]
    fn derivative_is_linear(
        (p, q) in pair(),
        (an, ad, bn, bd) in (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3),
    ) {
        let (a, b) = (rational(an, ad), rational(bn, bd));
        for var in ["x", "z"] {
            let combo = &p.scale(&a) + &q.scale(&b);
            let lhs = combo.derivative(var).unwrap();
            let rhs = &p.derivative(var).unwrap().scale(&a) + &q.derivative(var).unwrap().scale(&b);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn dehomogenize_keeps_degree_when_y_is_not_a_factor(
        d in 1u32..=5,
        coeffs in prop::collection::vec(-2i64..=2, 21),
        anchor in 0u32..=5,
    ) {
        // all monomials of degree d, plus one y-free term to keep y out of f
        let mut terms = Vec::new();
        let mut k = 0;
        for i in 0..=d {
            for j in 0..=d - i {
                terms.push((vec![i, j, d - i - j], integer(coeffs[k % coeffs.len()])));
                k += 1;
            }
        }
        let a = anchor.min(d);
        terms.push((vec![a, 0, d - a], integer(7)));
        let f = Polynomial::from_terms(&["x", "y", "z"], terms);
        prop_assume!(!f.specialize("y", &Rational::zero()).unwrap().is_zero());
        prop_assert_eq!(f.dehomogenize().unwrap().total_degree(), Some(d));
    }

    #[test]
    fn squarefree_iff_coprime_to_derivative(
        roots in prop::collection::btree_set(-6i64..=6, 1..5),
        repeat in prop::option::of(0usize..4),
    ) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let mut factors: Vec<i64> = roots.clone();
        let expect_squarefree = match repeat {
            Some(i) if i < roots.len() => {
                factors.push(roots[i]);
                false
            }
            _ => true,
        };
        let mut p = parse("1", &["x"]).unwrap();
        for r in &factors {
            p = &p * &parse(&format!("x - {r}").replace("- -", "+ "), &["x"]).unwrap();
        }
        let g = gcd(&p, &p.derivative("x").unwrap()).unwrap();
        prop_assert_eq!(g.is_constant(), expect_squarefree);
        prop_assert_eq!(UniPoly::from_polynomial(&p, 0).unwrap().is_squarefree(), expect_squarefree);
    }
}

#[test]
fn resultant_matches_product_over_roots_numerically() {
    // Res(p, q) = lc(p)^deg q * prod q(alpha) over the roots alpha of p
    let p = parse("2*z^4 - 3*z^3 + z - 5", &["z"]).unwrap();
    let q = parse("z^3 + 4*z^2 - z + 2", &["z"]).unwrap();
    let zx = ["x", "z"];
    let r = resultant(&p.embed(&zx).unwrap(), &q.embed(&zx).unwrap(), "z").unwrap();
    let exact = r.constant_value().unwrap().to_f64().unwrap();

    let pc: Vec<Complex64> = UniPoly::from_polynomial(&p, 0).unwrap().to_complex();
    let qc: Vec<Complex64> = UniPoly::from_polynomial(&q, 0).unwrap().to_complex();
    let roots = all_roots(&pc, RootOptions::default()).unwrap();
    let mut prod = Complex64::new(2f64.powi(3), 0.0);
    for a in &roots.roots {
        prod *= qc.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * a.value + c);
    }
    assert!((prod.re - exact).abs() < 1e-9 * exact.abs());
    assert!(prod.im.abs() < 1e-9 * exact.abs());
}

#[test]
fn fermat_cubic_discriminant() {
    let xyz = ["x", "y", "z"];
    let f = parse("x^3 + y^3 + z^3", &xyz).unwrap();
    let r = resultant(&f, &f.derivative("z").unwrap(), "z").unwrap();
    let expected = parse("27*x^6 + 54*x^3*y^3 + 27*y^6", &["x", "y"]).unwrap();
    assert!(r == expected || r == -&expected, "got {r}");
}
