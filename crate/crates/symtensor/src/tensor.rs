//! Construction of `σ^⊙k` by two independent routes.
//!
//! The diagonal action route maps each composition `x` to the sorted image
//! `σ(x_1)…σ(x_k)` and reads off a permutation of ranks; it is exact and
//! is the route the oracle trusts. The matrix route evaluates the
//! normalized orbit double sum entry by entry for an arbitrary real input
//! matrix; for permutation inputs the two must agree after snapping.

use num_traits::ToPrimitive;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::compositions::{canonicalize, CompositionIndex};
use crate::perm::Permutation;
use crate::{Error, Result};

/// Snap tolerance for reading a permutation back out of the matrix route.
pub const SNAP_TOLERANCE: f64 = 1e-9;

/// Default cap on the matrix route: refuses when either the output
/// dimension or the total orbit work `n^k` exceeds it.
pub const DEFAULT_MATRIX_CAP: usize = 5000;

/// Dense real square matrix, row major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("matrix must be square".into()));
        }
        Ok(DenseMatrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_permutation(sigma: &Permutation) -> Self {
        let n = sigma.n();
        let mut m = Self::zeros(n);
        for i in 1..=n {
            m.set(i, sigma.apply(i), 1.0);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based accessors.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[(i - 1) * self.n + (j - 1)] = v;
    }
}

/// The k-th symmetric tensor power of an n×n input, indexed by the
/// canonical composition order on both axes.
#[derive(Debug, Clone)]
pub struct SymTensorMatrix {
    n: usize,
    k: usize,
    dim: usize,
    entries: Vec<f64>,
}

impl SymTensorMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 1-based by composition rank.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i - 1) * self.dim + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| self.entries[i * self.dim..(i + 1) * self.dim].to_vec())
            .collect()
    }

    /// Plain-text form: one row per line, entries space separated.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.dim {
            let row: Vec<String> = (1..=self.dim).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

fn image_rank(index: &CompositionIndex, sigma: &Permutation, r: usize) -> usize {
    let mapped: Vec<usize> = index
        .get(r)
        .expect("rank in range")
        .entries()
        .iter()
        .map(|&e| sigma.apply(e))
        .collect();
    let canonical = canonicalize(&mapped, sigma.n()).expect("entries stay in range");
    index.rank(&canonical).expect("orbit representative is enumerated")
}

/// `σ^⊙k` as a permutation of composition ranks, by letting `σ` act
/// diagonally on each composition's entries.
pub fn sym_power_diagonal(sigma: &Permutation, k: usize) -> Result<Permutation> {
    #[cfg(feature = "parallel")]
    {
        let index = check_power_args(sigma, k)?;
        let image: Vec<usize> = (1..=index.len())
            .into_par_iter()
            .map(|r| image_rank(&index, sigma, r))
            .collect();
        Permutation::from_image(image)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sym_power_diagonal_serial(sigma, k)
    }
}

/// Sequential variant of [`sym_power_diagonal`]; same contract. Kept
/// public so benches can compare the two paths.
pub fn sym_power_diagonal_serial(sigma: &Permutation, k: usize) -> Result<Permutation> {
    let index = check_power_args(sigma, k)?;
    let image: Vec<usize> = (1..=index.len())
        .map(|r| image_rank(&index, sigma, r))
        .collect();
    Permutation::from_image(image)
}

fn check_power_args(sigma: &Permutation, k: usize) -> Result<CompositionIndex> {
    if k < 1 {
        return Err(Error::InvalidInput("tensor power requires k >= 1".into()));
    }
    CompositionIndex::new(sigma.n(), k)
}

/// Normalized orbit double sum for one entry pair.
fn orbit_sum_entry(
    a: &DenseMatrix,
    orbit_i: &[Vec<usize>],
    orbit_j: &[Vec<usize>],
    norm: f64,
) -> f64 {
    let mut sum = 0.0;
    for p in orbit_i {
        for q in orbit_j {
            let mut prod = 1.0;
            for (&pl, &ql) in p.iter().zip(q.iter()) {
                prod *= a.get(pl, ql);
                if prod == 0.0 {
                    break;
                }
            }
            sum += prod;
        }
    }
    sum * norm
}

struct OrbitData {
    orbits: Vec<Vec<Vec<usize>>>,
    inv_sqrt_sizes: Vec<f64>,
}

fn prepare_orbits(index: &CompositionIndex) -> OrbitData {
    let mut orbits = Vec::with_capacity(index.len());
    let mut inv_sqrt_sizes = Vec::with_capacity(index.len());
    for c in index.iter() {
        let orbit = c.orbit();
        inv_sqrt_sizes.push(1.0 / (orbit.len() as f64).sqrt());
        orbits.push(orbit);
    }
    OrbitData { orbits, inv_sqrt_sizes }
}

fn check_matrix_args(a: &DenseMatrix, k: usize, cap: usize) -> Result<CompositionIndex> {
    if k < 1 {
        return Err(Error::InvalidInput("tensor power requires k >= 1".into()));
    }
    if a.n() < 1 {
        return Err(Error::InvalidInput("matrix must be at least 1x1".into()));
    }
    let n = a.n();
    let dim = crate::compositions::count(n, k);
    let work = num_bigint::BigUint::from(n).pow(k as u32);
    if dim.to_usize().map_or(true, |d| d > cap) {
        return Err(Error::CapExceeded { required: dim.to_string(), cap: cap as u64 });
    }
    if work.to_usize().map_or(true, |w| w > cap) {
        return Err(Error::CapExceeded { required: work.to_string(), cap: cap as u64 });
    }
    CompositionIndex::new(n, k)
}

fn matrix_row(
    a: &DenseMatrix,
    data: &OrbitData,
    dim: usize,
    i: usize,
) -> Vec<f64> {
    (0..dim)
        .map(|j| {
            let norm = data.inv_sqrt_sizes[i] * data.inv_sqrt_sizes[j];
            orbit_sum_entry(a, &data.orbits[i], &data.orbits[j], norm)
        })
        .collect()
}

/// The k-th symmetric tensor power of an arbitrary real square matrix by
/// explicit orbit enumeration. Deliberately desk scale: refuses when the
/// output dimension or the orbit work `n^k` exceeds the default cap.
pub fn sym_power_matrix(a: &DenseMatrix, k: usize) -> Result<SymTensorMatrix> {
    sym_power_matrix_capped(a, k, DEFAULT_MATRIX_CAP)
}

pub fn sym_power_matrix_capped(a: &DenseMatrix, k: usize, cap: usize) -> Result<SymTensorMatrix> {
    let index = check_matrix_args(a, k, cap)?;
    let dim = index.len();
    let data = prepare_orbits(&index);
    #[cfg(feature = "parallel")]
    let entries: Vec<f64> = (0..dim)
        .into_par_iter()
        .flat_map_iter(|i| matrix_row(a, &data, dim, i))
        .collect();
    #[cfg(not(feature = "parallel"))]
    let entries: Vec<f64> = (0..dim).flat_map(|i| matrix_row(a, &data, dim, i)).collect();
    Ok(SymTensorMatrix { n: a.n(), k, dim, entries })
}

/// Sequential variant of [`sym_power_matrix`]; same contract. Kept public
/// so benches can compare the two paths.
pub fn sym_power_matrix_serial(a: &DenseMatrix, k: usize) -> Result<SymTensorMatrix> {
    let index = check_matrix_args(a, k, DEFAULT_MATRIX_CAP)?;
    let dim = index.len();
    let data = prepare_orbits(&index);
    let entries: Vec<f64> = (0..dim).flat_map(|i| matrix_row(a, &data, dim, i)).collect();
    Ok(SymTensorMatrix { n: a.n(), k, dim, entries })
}

/// Snaps a matrix-route result to {0, 1} and reads off the permutation.
/// Fails loudly when any entry sits farther than `SNAP_TOLERANCE` from
/// both 0 and 1, or the snapped matrix is not a permutation matrix:
/// either the input was not a permutation matrix or the entry formula
/// drifted.
pub fn extract_permutation(m: &SymTensorMatrix) -> Result<Permutation> {
    let dim = m.dim();
    let mut image = vec![0usize; dim];
    for i in 1..=dim {
        let mut hit = None;
        for j in 1..=dim {
            let v = m.get(i, j);
            if (v - 1.0).abs() <= SNAP_TOLERANCE {
                if hit.is_some() {
                    return Err(Error::Precision(format!(
                        "row {i} of the snapped matrix has two unit entries"
                    )));
                }
                hit = Some(j);
            } else if v.abs() > SNAP_TOLERANCE {
                return Err(Error::Precision(format!(
                    "entry ({i}, {j}) = {v} is neither 0 nor 1 within {SNAP_TOLERANCE}"
                )));
            }
        }
        image[i - 1] = hit.ok_or_else(|| {
            Error::Precision(format!("row {i} of the snapped matrix has no unit entry"))
        })?;
    }
    Permutation::from_image(image)
        .map_err(|e| Error::Precision(format!("snapped matrix is not a permutation: {e}")))
}
