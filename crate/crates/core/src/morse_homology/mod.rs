//! Integer chain complexes: Smith normal form, homology with torsion, Euler
//! characteristic, exactness of sequences and the genus of a surface from
//! its cell counts.

mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::curve_pencil::MorseCellCounts;

pub use snf::{smith_normal_form, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("matrix rows have different lengths")]
    RaggedRows,
    #[error("{rows}x{cols} matrix needs {} entries, got {found}", rows * cols)]
    EntryCount { rows: usize, cols: usize, found: usize },
    #[error("boundary {degree} should be {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    DimensionMismatch {
        degree: usize,
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("complex has {ranks} ranks but a boundary in degree {degree}")]
    BoundaryOutOfRange { ranks: usize, degree: usize },
    #[error("boundary composition is nonzero at degree {degree}")]
    NotAComplex { degree: usize },
    #[error("map {index} cannot follow a map into rank {expected}, it has {found} columns")]
    SequenceMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("consecutive maps compose to a nonzero map at node {node}")]
    NonzeroComposition { node: usize },
    #[error("cell counts {0} do not describe a connected closed orientable surface: {1}")]
    NotASurface(MorseCellCounts, String),
}

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, HomologyError> {
        if entries.len() != rows * cols {
            return Err(HomologyError::EntryCount {
                rows,
                cols,
                found: entries.len(),
            });
        }
        Ok(IntegerMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Rows of equal length. An empty slice gives the `0 x 0` matrix.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self, HomologyError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(HomologyError::RaggedRows);
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().cloned().map(Into::into).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// `self * other`, or `None` if the shapes do not chain.
    pub fn mul(&self, other: &IntegerMatrix) -> Option<IntegerMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Some(out)
    }

    pub fn rank(&self) -> usize {
        smith_normal_form(self).rank
    }

    pub fn max_abs(&self) -> BigInt {
        self.entries.iter().map(|e| e.abs()).max().unwrap_or_default()
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// `C_n -> ... -> C_1 -> C_0` with `C_k = Z^{ranks[k]}`.
///
/// `boundaries[k - 1]` is the boundary map out of degree `k`, an
/// `ranks[k-1] x ranks[k]` matrix. Missing trailing boundaries and all
/// boundaries outside `1..=n` are zero maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntegerMatrix>,
}

impl ChainComplex {
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntegerMatrix>) -> Result<Self, HomologyError> {
        if boundaries.len() >= ranks.len().max(1) {
            return Err(HomologyError::BoundaryOutOfRange {
                ranks: ranks.len(),
                degree: boundaries.len(),
            });
        }
        for (k, b) in boundaries.iter().enumerate() {
            let degree = k + 1;
            let (er, ec) = (ranks[degree - 1], ranks[degree]);
            if b.rows() != er || b.cols() != ec {
                return Err(HomologyError::DimensionMismatch {
                    degree,
                    expected_rows: er,
                    expected_cols: ec,
                    rows: b.rows(),
                    cols: b.cols(),
                });
            }
        }
        Ok(ChainComplex { ranks, boundaries })
    }

    /// Zero boundaries throughout.
    pub fn cells(ranks: Vec<usize>) -> Self {
        ChainComplex {
            ranks,
            boundaries: Vec::new(),
        }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, degree: usize) -> usize {
        self.ranks.get(degree).copied().unwrap_or(0)
    }

    /// Top degree, `None` for the empty complex.
    pub fn top_degree(&self) -> Option<usize> {
        self.ranks.len().checked_sub(1)
    }

    /// The boundary out of `degree`, zero where none is stored.
    pub fn boundary(&self, degree: usize) -> IntegerMatrix {
        match degree.checked_sub(1).and_then(|k| self.boundaries.get(k)) {
            Some(b) => b.clone(),
            None => IntegerMatrix::zeros(
                degree.checked_sub(1).map_or(0, |k| self.rank(k)),
                self.rank(degree),
            ),
        }
    }
}

/// `H_degree = Z^betti + sum Z/t` over the torsion coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSummary {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl fmt::Display for GroupSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Check that every composition of consecutive boundaries vanishes. The error
/// names the degree `k` of the first nonzero `d_{k-1} d_k`.
pub fn validate(complex: &ChainComplex) -> Result<(), HomologyError> {
    for degree in 2..complex.ranks.len() {
        let product = complex
            .boundary(degree - 1)
            .mul(&complex.boundary(degree))
            .expect("shapes are checked at construction");
        if !product.is_zero() {
            return Err(HomologyError::NotAComplex { degree });
        }
    }
    Ok(())
}

pub fn homology(complex: &ChainComplex) -> Result<Vec<GroupSummary>, HomologyError> {
    validate(complex)?;
    let forms: Vec<SmithForm> = (0..=complex.ranks.len())
        .map(|k| smith_normal_form(&complex.boundary(k)))
        .collect();
    Ok((0..complex.ranks.len())
        .map(|k| GroupSummary {
            degree: k,
            betti: complex.ranks[k] - forms[k].rank - forms[k + 1].rank,
            torsion: forms[k + 1].torsion(),
        })
        .collect())
}

/// Alternating sum of the ranks.
pub fn euler_characteristic(complex: &ChainComplex) -> i64 {
    complex
        .ranks
        .iter()
        .enumerate()
        .map(|(k, &r)| if k % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exactness {
    pub exact: bool,
    /// First node where the image of the incoming map is not the kernel of
    /// the outgoing one.
    pub first_inexact: Option<usize>,
}

/// Exactness of `0 -> A_0 -> A_1 -> ... -> A_k -> 0` where `maps[i]` is the
/// matrix of `A_i -> A_{i+1}` (rows index the codomain).
///
/// At each node the image must have the rank of the kernel and be saturated
/// in the ambient lattice, which holds iff every invariant factor of the
/// incoming map equals one.
pub fn check_exact(maps: &[IntegerMatrix]) -> Result<Exactness, HomologyError> {
    for i in 1..maps.len() {
        if maps[i].cols() != maps[i - 1].rows() {
            return Err(HomologyError::SequenceMismatch {
                index: i,
                expected: maps[i - 1].rows(),
                found: maps[i].cols(),
            });
        }
        let product = maps[i].mul(&maps[i - 1]).expect("shapes chain");
        if !product.is_zero() {
            return Err(HomologyError::NonzeroComposition { node: i });
        }
    }
    let Some(first) = maps.first() else {
        return Ok(Exactness {
            exact: true,
            first_inexact: None,
        });
    };
    let dims: Vec<usize> = std::iter::once(first.cols())
        .chain(maps.iter().map(IntegerMatrix::rows))
        .collect();
    let forms: Vec<SmithForm> = maps.iter().map(smith_normal_form).collect();
    for (node, &dim) in dims.iter().enumerate() {
        let incoming = node.checked_sub(1).map(|k| &forms[k]);
        let in_rank = incoming.map_or(0, |f| f.rank);
        let out_rank = forms.get(node).map_or(0, |f| f.rank);
        let saturated = incoming.is_none_or(|f| f.factors.iter().all(One::is_one));
        if dim - out_rank != in_rank || !saturated {
            return Ok(Exactness {
                exact: false,
                first_inexact: Some(node),
            });
        }
    }
    Ok(Exactness {
        exact: true,
        first_inexact: None,
    })
}

/// Genus of a connected closed orientable surface with a cell structure of
/// the given counts. With `H_0 = H_2 = Z`, the boundary images have ranks
/// `index0 - 1` and `index2 - 1`, leaving `rank H_1 = index1 - (index0 - 1) -
/// (index2 - 1) = 2g`.
pub fn genus_from_cell_counts(counts: &MorseCellCounts) -> Result<i64, HomologyError> {
    let fail = |why: &str| Err(HomologyError::NotASurface(*counts, why.to_string()));
    if counts.index0 == 0 || counts.index2 == 0 {
        return fail("needs at least one cell in degrees 0 and 2");
    }
    let (c0, c1, c2) = (
        counts.index0.to_i64(),
        counts.index1.to_i64(),
        counts.index2.to_i64(),
    );
    let (Some(c0), Some(c1), Some(c2)) = (c0, c1, c2) else {
        return fail("counts out of range");
    };
    let image1 = c0 - 1;
    let image2 = c2 - 1;
    let h1 = c1 - image1 - image2;
    if h1 < 0 {
        return fail("rank of H_1 would be negative");
    }
    if h1 % 2 != 0 {
        return fail("rank of H_1 is odd");
    }
    Ok(h1 / 2)
}
