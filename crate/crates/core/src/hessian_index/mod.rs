//! Hessian of `g o P` at a pencil critical point.
//!
//! In local coordinates `z_i = x_i + i y_i` the composite is
//! `a sum (x_i^2 - y_i^2) + 2 b sum x_i y_i` up to higher order terms. Its
//! Hessian is `2 [[a I, b I], [b I, -a I]]`; the matrix without the factor 2
//! is called the symbol here.

use nalgebra::{DMatrix, SymmetricEigen};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HessianError {
    #[error("a = b = 0 gives a degenerate critical point")]
    Degenerate,
    #[error("block size must be at least 1")]
    EmptyBlock,
    #[error("parameters must be finite")]
    NonFinite,
}

impl HessianError {
    pub fn name(&self) -> &'static str {
        match self {
            HessianError::Degenerate => "Degenerate",
            HessianError::EmptyBlock => "EmptyBlock",
            HessianError::NonFinite => "NonFinite",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealSymmetricMatrix {
    inner: DMatrix<f64>,
}

impl RealSymmetricMatrix {
    /// Build from the upper triangle, mirrored below the diagonal.
    pub fn from_fn(size: usize, mut upper: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = DMatrix::zeros(size, size);
        for i in 0..size {
            for j in i..size {
                let v = upper(i, j);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        RealSymmetricMatrix { inner: m }
    }

    pub fn size(&self) -> usize {
        self.inner.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner[(i, j)]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.size())
            .map(|i| (0..self.size()).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn scale(&self, s: f64) -> Self {
        RealSymmetricMatrix {
            inner: &self.inner * s,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.inner.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn determinant(&self) -> f64 {
        self.inner.clone().lu().determinant()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.inner.clone())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// `det(x I - M)`.
    pub fn characteristic_value(&self, x: f64) -> f64 {
        let n = self.size();
        (DMatrix::identity(n, n) * x - &self.inner).lu().determinant()
    }
}

/// Inertia of a symmetric matrix. The index is `negatives`.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexCertificate {
    pub negatives: usize,
    pub positives: usize,
    pub zeros: usize,
    pub eigenvalues: Vec<f64>,
    pub det: f64,
}

const ZERO_THRESHOLD: f64 = 1e-9;

pub fn inertia(m: &RealSymmetricMatrix) -> IndexCertificate {
    let eigenvalues = m.eigenvalues();
    let cutoff = ZERO_THRESHOLD * m.max_abs();
    let zeros = eigenvalues.iter().filter(|v| v.abs() < cutoff).count();
    let negatives = eigenvalues.iter().filter(|v| **v <= -cutoff).count();
    IndexCertificate {
        positives: eigenvalues.len() - zeros - negatives,
        negatives,
        zeros,
        det: m.determinant(),
        eigenvalues,
    }
}

fn check(a: f64, b: f64, n: usize) -> Result<(), HessianError> {
    if !a.is_finite() || !b.is_finite() {
        return Err(HessianError::NonFinite);
    }
    if a == 0.0 && b == 0.0 {
        return Err(HessianError::Degenerate);
    }
    if n == 0 {
        return Err(HessianError::EmptyBlock);
    }
    Ok(())
}

/// `[[2a, 2b], [2b, -2a]]`.
pub fn curve_hessian(a: f64, b: f64) -> Result<RealSymmetricMatrix, HessianError> {
    pencil_hessian(a, b, 1)
}

pub fn curve_index(a: f64, b: f64) -> Result<IndexCertificate, HessianError> {
    curve_hessian(a, b).map(|h| inertia(&h))
}

/// `[[a I_n, b I_n], [b I_n, -a I_n]]`.
pub fn pencil_symbol(a: f64, b: f64, n: usize) -> Result<RealSymmetricMatrix, HessianError> {
    check(a, b, n)?;
    Ok(RealSymmetricMatrix::from_fn(2 * n, |i, j| {
        if i == j {
            if i < n {
                a
            } else {
                -a
            }
        } else if j == i + n {
            b
        } else {
            0.0
        }
    }))
}

/// The Hessian `2 [[a I_n, b I_n], [b I_n, -a I_n]]`.
pub fn pencil_hessian(a: f64, b: f64, n: usize) -> Result<RealSymmetricMatrix, HessianError> {
    pencil_symbol(a, b, n).map(|s| s.scale(2.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct PencilIndex {
    /// Inertia of the Hessian; its `det` is the scaled determinant.
    pub hessian: IndexCertificate,
    /// Determinant of the symbol, without the factor 2.
    pub symbol_det: f64,
}

pub fn pencil_index(a: f64, b: f64, n: usize) -> Result<PencilIndex, HessianError> {
    let symbol = pencil_symbol(a, b, n)?;
    Ok(PencilIndex {
        hessian: inertia(&symbol.scale(2.0)),
        symbol_det: symbol.determinant(),
    })
}

/// `a sum (x_i^2 - y_i^2) + 2 b sum x_i y_i` at `v = (x_1..x_n, y_1..y_n)`.
pub fn pencil_model(a: f64, b: f64, v: &[f64]) -> f64 {
    let n = v.len() / 2;
    (0..n)
        .map(|i| {
            let (x, y) = (v[i], v[n + i]);
            a * (x * x - y * y) + 2.0 * b * x * y
        })
        .sum()
}

/// Largest entrywise gap between the central second differences of
/// [`pencil_model`] at the origin and [`pencil_hessian`].
pub fn finite_difference_check(a: f64, b: f64, n: usize, h: f64) -> Result<f64, HessianError> {
    let exact = pencil_hessian(a, b, n)?;
    let size = 2 * n;
    let f = |shifts: &[(usize, f64)]| {
        let mut v = vec![0.0; size];
        for &(k, s) in shifts {
            v[k] += s;
        }
        pencil_model(a, b, &v)
    };
    let mut worst: f64 = 0.0;
    for i in 0..size {
        for j in 0..size {
            let approx = if i == j {
                (f(&[(i, h)]) - 2.0 * f(&[]) + f(&[(i, -h)])) / (h * h)
            } else {
                (f(&[(i, h), (j, h)]) - f(&[(i, h), (j, -h)]) - f(&[(i, -h), (j, h)])
                    + f(&[(i, -h), (j, -h)]))
                    / (4.0 * h * h)
            };
            worst = worst.max((approx - exact.get(i, j)).abs());
        }
    }
    Ok(worst)
}
