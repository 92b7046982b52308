//! Exact decision of whether finitely many bivariate polynomials have a
//! common complex zero.
//!
//! After a shear `u -> u + c v` the first polynomial `P` is monic in `v`.
//! With a fresh variable `w`, `Res_v(P, Q_1 + w Q_2 + w^2 Q_3 + ...)` vanishes
//! identically in `w` at `u = u0` exactly when some root `v0` of `P(u0, .)`
//! is a common root of every `Q_i(u0, .)`. The gcd of its `w`-coefficients is
//! therefore an eliminant whose roots are the `u`-coordinates of the common
//! zeros.

use num_traits::{One, Zero};

use crate::exact_poly::{integer, resultant_general, Polynomial, Rational, UniPoly};

const AUX: &str = "__w";

#[derive(Debug, Clone, PartialEq)]
pub enum CommonZeros {
    None,
    /// Finitely many common zeros; their sheared `u`-coordinates are the
    /// roots of `eliminant`.
    Isolated { eliminant: UniPoly, shear: i64 },
    /// The polynomials share a curve component (or are all zero).
    Infinite,
}

impl CommonZeros {
    pub fn exist(&self) -> bool {
        !matches!(self, CommonZeros::None)
    }
}

fn shear_for(p: &Polynomial) -> i64 {
    let top = p.top_form();
    (0..)
        .find(|&c| !top.evaluate(&[integer(c), Rational::one()]).is_zero())
        .expect("a nonzero form has a non-vanishing point on v = 1")
}

/// Common zeros in `C^2` of polynomials sharing a two-variable list.
pub fn common_zeros(polys: &[Polynomial]) -> CommonZeros {
    let mut ps: Vec<&Polynomial> = polys.iter().filter(|p| !p.is_zero()).collect();
    if ps.is_empty() {
        return CommonZeros::Infinite;
    }
    if ps.iter().any(|p| p.is_constant()) {
        return CommonZeros::None;
    }
    let vars = ps[0].vars().to_vec();
    assert_eq!(vars.len(), 2, "common_zeros expects bivariate polynomials");
    ps.sort_by_key(|p| (p.total_degree(), p.num_terms()));
    if ps.len() == 1 {
        return CommonZeros::Infinite;
    }

    let shear = shear_for(ps[0]);
    let u = Polynomial::variable(&vars, &vars[0]).expect("declared");
    let v = Polynomial::variable(&vars, &vars[1]).expect("declared");
    let sheared_u = &u + &v.scale(&integer(shear));
    let sheared: Vec<Polynomial> = ps.iter().map(|p| p.compose(&[sheared_u.clone(), v.clone()])).collect();

    // Pairwise resultants give a necessary condition that is much cheaper
    // than the combined one and settles the common case of no common zero.
    if sheared.len() > 2 {
        let mut g = UniPoly::zero();
        for q in &sheared[1..] {
            let r = resultant_general(&sheared[0], q, &vars[1]).expect("same variables");
            g = g.gcd(&UniPoly::from_polynomial(&r, 0).expect("univariate in u"));
            if g.degree() == Some(0) {
                return CommonZeros::None;
            }
        }
    }

    let ext = [vars[0].as_str(), vars[1].as_str(), AUX];
    let w = Polynomial::variable(&ext, AUX).expect("declared");
    let lead = sheared[0].embed(&ext).expect("subset");
    let mut combo = Polynomial::zero(&ext);
    let mut wk = Polynomial::constant(&ext, Rational::one());
    for q in &sheared[1..] {
        combo = &combo + &(&q.embed(&ext).expect("subset") * &wk);
        wk = &wk * &w;
    }

    let res = resultant_general(&lead, &combo, &vars[1]).expect("same variables");
    let coeffs = res.coefficients_in(AUX).expect("declared");
    let eliminant = coeffs
        .iter()
        .map(|c| UniPoly::from_polynomial(c, 0).expect("univariate in u"))
        .fold(UniPoly::zero(), |g, c| g.gcd(&c));
    match eliminant.degree() {
        None => CommonZeros::Infinite,
        Some(0) => CommonZeros::None,
        Some(_) => CommonZeros::Isolated { eliminant, shear },
    }
}
