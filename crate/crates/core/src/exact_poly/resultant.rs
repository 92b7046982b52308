//! Sylvester resultants and univariate gcds.

use num_traits::One;

use super::{PolyError, Polynomial, Rational, UniPoly};

/// Determinant by fraction-free (Bareiss) elimination. Entries live in a
/// polynomial ring, so every division below is exact.
fn bareiss_determinant(mut m: Vec<Vec<Polynomial>>, vars: &[String]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::constant(vars, Rational::one());
    }
    let mut negate = false;
    let mut prev = Polynomial::constant(vars, Rational::one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Polynomial::zero(vars);
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            m[i][k] = Polynomial::zero(vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Sylvester resultant with respect to `var`, accepting inputs of degree zero
/// in `var` (`Res(a, q) = a^deg q` for a constant `a`).
pub(crate) fn resultant_general(
    p: &Polynomial,
    q: &Polynomial,
    var: &str,
) -> Result<Polynomial, PolyError> {
    p.check_same_vars(q)?;
    let a = p.coefficients_in(var)?;
    let b = q.coefficients_in(var)?;
    let rest: Vec<String> = p.vars().iter().filter(|v| *v != var).cloned().collect();
    if a.is_empty() || b.is_empty() {
        return Ok(Polynomial::zero(&rest));
    }
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let zero = Polynomial::zero(&rest);
    let mut rows = vec![vec![zero; size]; size];
    for r in 0..n {
        for (k, c) in a.iter().enumerate() {
            rows[r][r + m - k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().enumerate() {
            rows[n + r][r + n - k] = c.clone();
        }
    }
    Ok(bareiss_determinant(rows, &rest))
}

/// Resultant of `p` and `q` with respect to `var`: the determinant of their
/// Sylvester matrix, a polynomial in the remaining variables.
pub fn resultant(p: &Polynomial, q: &Polynomial, var: &str) -> Result<Polynomial, PolyError> {
    p.check_same_vars(q)?;
    for f in [p, q] {
        if f.degree_in(var)?.unwrap_or(0) == 0 {
            return Err(PolyError::ConstantInVariable(var.to_string()));
        }
    }
    resultant_general(p, q, var)
}

/// Monic gcd of two polynomials that are univariate in one common variable.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, PolyError> {
    p.check_same_vars(q)?;
    let mut used = p.occurring_variables();
    used.extend(q.occurring_variables());
    used.sort_unstable();
    used.dedup();
    if used.len() > 1 || p.vars().is_empty() {
        return Err(PolyError::NotUnivariate);
    }
    let index = used.first().copied().unwrap_or(0);
    let a = UniPoly::from_polynomial(p, index)?;
    let b = UniPoly::from_polynomial(q, index)?;
    let g = a.gcd(&b);
    debug_assert!(g.is_zero() || g.leading_coefficient().is_some_and(|c| c.is_one()));
    Ok(g.to_polynomial(p.vars(), index))
}
