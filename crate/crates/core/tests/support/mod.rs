//! Independent oracles and generators shared by property and acceptance
//! tests. Nothing here calls into the library under test.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type Matrix = Vec<Vec<BigInt>>;

pub const CORPUS: &[&str] = &[
    "x + y + z",
    "x - 2*y + 3*z",
    "x^2 + y^2 + z^2",
    "x^2 - 3*x*y + 2*y^2 + z^2 + y*z",
    "x^3 + y^3 + z^3",
    "-x^3 + x*y^2 + 2*x*y*z + x*z^2 + y*z^2 + z^3",
    "x^3 + 2*y^3 + z^3 - x*y*z + x^2*z",
    "x^4 + y^4 + z^4",
    "x^4 + y^4 + z^4 + x*y*z^2 + 3*x^2*y^2 - y^3*z",
    "x^5 + y^5 + z^5",
    "x^5 + y^5 + z^5 + x*y*z^3 - 2*x^3*y^2 + y^4*z",
    "x^6 + y^6 + z^6",
    "x^6 + 2*y^6 + z^6 - x^5*z + x*y^4*z + 3*y^3*z^3",
];

pub fn to_big(m: &[Vec<i64>]) -> Matrix {
    m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

fn cols(m: &Matrix) -> usize {
    m.first().map_or(0, Vec::len)
}

/// Rank over the rationals by Gaussian elimination.
pub fn rational_rank(m: &Matrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let (rows, cols) = (a.len(), cols(m));
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            let f = &a[i][c] / &a[rank][c];
            for j in c..cols {
                let d = &f * &a[rank][j];
                a[i][j] -= d;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &Matrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Matrix = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// gcd of all `k x k` minors.
pub fn determinantal_divisor(m: &Matrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(m.len(), k) {
        for cs in subsets(cols(m), k) {
            let minor: Matrix = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
            g = g.gcd(&det(&minor));
        }
    }
    g
}

/// Invariant factors `d_k / d_{k-1}` up to the rational rank.
pub fn invariant_factors(m: &Matrix) -> Vec<BigInt> {
    let r = rational_rank(m);
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=r {
        let dk = determinantal_divisor(m, k);
        out.push(&dk / &prev);
        prev = dk;
    }
    out
}

/// `(betti, torsion)` per degree, with `boundaries[k-1]` out of degree `k`.
pub fn homology(ranks: &[usize], boundaries: &[Matrix]) -> Vec<(usize, Vec<BigInt>)> {
    let rank_of = |k: usize| -> usize {
        if k == 0 || k > boundaries.len() {
            0
        } else {
            rational_rank(&boundaries[k - 1])
        }
    };
    (0..ranks.len())
        .map(|k| {
            let torsion = match boundaries.get(k) {
                Some(b) => invariant_factors(b).into_iter().filter(|f| *f > BigInt::one()).collect(),
                None => Vec::new(),
            };
            (ranks[k] - rank_of(k) - rank_of(k + 1), torsion)
        })
        .collect()
}

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    (0..a.len())
        .map(|i| {
            (0..cols(b))
                .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn is_zero(m: &Matrix) -> bool {
    m.iter().flatten().all(Zero::is_zero)
}

/// Primitive integer vectors spanning the rational left kernel of `m`.
fn left_kernel(m: &Matrix, rows: usize) -> Vec<Vec<BigInt>> {
    // kernel of the transpose via reduced row echelon form
    let t: Vec<Vec<BigRational>> = (0..cols(m))
        .map(|j| (0..rows).map(|i| BigRational::from_integer(m[i][j].clone())).collect())
        .collect();
    let mut a = t;
    let n = rows;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let lead = a[r][c].clone();
        for v in a[r].iter_mut() {
            *v /= &lead;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..n {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); n];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            let denom = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect();
            let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            ints.into_iter().map(|x| x / &g).collect()
        })
        .collect()
}

/// A random chain complex with ranks at most 5 and entries in `[-3, 3]`.
pub fn random_complex(rng: &mut impl Rng) -> (Vec<usize>, Vec<Matrix>) {
    let len = rng.gen_range(2..=4);
    let ranks: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=5)).collect();
    let mut boundaries: Vec<Matrix> = vec![Vec::new(); len - 1];
    for k in (1..len).rev() {
        let (rows, cs) = (ranks[k - 1], ranks[k]);
        let above = boundaries.get(k).cloned();
        let kernel = match &above {
            Some(b) => left_kernel(b, cs),
            None => (0..cs)
                .map(|i| (0..cs).map(|j| BigInt::from((i == j) as i64)).collect())
                .collect(),
        };
        let density = rng.gen_range(0.2..1.0);
        let mut m = Vec::with_capacity(rows);
        for _ in 0..rows {
            let mut row = vec![BigInt::zero(); cs];
            for _ in 0..8 {
                let mut cand = vec![BigInt::zero(); cs];
                for v in &kernel {
                    if rng.gen_bool(density) {
                        let c = BigInt::from(rng.gen_range(-3i64..=3));
                        for (x, y) in cand.iter_mut().zip(v) {
                            *x += &c * y;
                        }
                    }
                }
                if cand.iter().all(|x| x.abs() <= BigInt::from(3)) {
                    row = cand;
                    break;
                }
            }
            m.push(row);
        }
        boundaries[k - 1] = m;
    }
    for k in 2..len {
        assert!(is_zero(&mul(&boundaries[k - 2], &boundaries[k - 1])));
    }
    (ranks, boundaries)
}

/// Unimodular matrix and its inverse from random elementary operations.
pub fn random_unimodular(n: usize, steps: usize, rng: &mut impl Rng) -> (Matrix, Matrix) {
    let id = |n: usize| -> Matrix {
        (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
    };
    let (mut u, mut inv) = (id(n), id(n));
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            u[0][0] = -BigInt::one();
            inv[0][0] = -BigInt::one();
        }
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
        // u <- E u with E = I + c e_ij ; inv <- inv E^-1
        for k in 0..n {
            let d = &c * &u[j][k];
            u[i][k] += d;
        }
        for k in 0..n {
            let d = &c * &inv[k][i];
            inv[k][j] -= d;
        }
    }
    (u, inv)
}

/// Exact sequence `0 -> A_0 -> ... -> A_k -> 0` built from split pieces: in an
/// adapted basis each map sends the complement of its kernel onto the kernel
/// of the next map, then random unimodular changes of basis hide the split.
pub fn random_exact_sequence(rng: &mut impl Rng) -> Vec<Matrix> {
    let k = rng.gen_range(1..=3);
    let images: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=2)).collect();
    let dims: Vec<usize> = (0..=k)
        .map(|j| if j == 0 { 0 } else { images[j - 1] } + images.get(j).copied().unwrap_or(0))
        .collect();
    let bases: Vec<(Matrix, Matrix)> = dims.iter().map(|&n| random_unimodular(n, 3 * n, rng)).collect();
    (0..k)
        .map(|j| {
            let kernel_dim = if j == 0 { 0 } else { images[j - 1] };
            let mut e: Matrix = vec![vec![BigInt::zero(); dims[j]]; dims[j + 1]];
            for i in 0..images[j] {
                e[i][kernel_dim + i] = BigInt::one();
            }
            mul(&mul(&bases[j + 1].0, &e), &bases[j].1)
        })
        .collect()
}

/// Exactness by ranks and the gcd of maximal minors of each incoming map.
/// `None` when consecutive maps do not compose to zero.
pub fn exact(maps: &[Matrix]) -> Option<bool> {
    for w in maps.windows(2) {
        if !is_zero(&mul(&w[1], &w[0])) {
            return None;
        }
    }
    let dims: Vec<usize> = std::iter::once(cols(&maps[0])).chain(maps.iter().map(Vec::len)).collect();
    for (node, &dim) in dims.iter().enumerate() {
        let incoming = node.checked_sub(1).map(|j| &maps[j]);
        let in_rank = incoming.map_or(0, rational_rank);
        let out_rank = maps.get(node).map_or(0, rational_rank);
        if dim - out_rank != in_rank {
            return Some(false);
        }
        if let Some(m) = incoming {
            if in_rank > 0 && !determinantal_divisor(m, in_rank).is_one() {
                return Some(false);
            }
        }
    }
    Some(true)
}
