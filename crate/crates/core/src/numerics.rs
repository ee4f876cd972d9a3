//! Small dense linear algebra: symmetric eigendecomposition via cyclic
//! Jacobi rotations, matrix exponentials by diagonalization, and direct
//! linear solves with partial pivoting.
//!
//! Everything here targets desk-scale systems (dimensions in the low tens);
//! algorithms are chosen for exactness and determinism, not asymptotics.

use num_complex::Complex64;
use thiserror::Error;

/// Off-symmetry above this is rejected at construction.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Max deviation of `U†U` from identity accepted by [`UnitaryMatrix`].
pub const UNITARITY_TOL: f64 = 1e-10;
/// Elimination pivots at or below this magnitude count as rank deficiency.
pub const PIVOT_TOL: f64 = 1e-12;

const MAX_JACOBI_SWEEPS: usize = 100;

#[derive(Debug, Error)]
pub enum NumericsError {
    #[error("matrix is not symmetric: entries ({i},{j}) and ({j},{i}) differ by {delta:e}")]
    NotHermitian { i: usize, j: usize, delta: f64 },
    #[error("singular matrix: elimination pivot {pivot_index} has magnitude {magnitude:e}")]
    Singular { pivot_index: usize, magnitude: f64 },
    #[error("dimension mismatch: matrix is {dim}x{dim} but vector has length {len}")]
    DimensionMismatch { dim: usize, len: usize },
    #[error("matrix is not unitary: max |U†U - I| entry is {deviation:e}")]
    NotUnitary { deviation: f64 },
    #[error("matrix data has length {len}, expected {dim}x{dim}")]
    BadShape { dim: usize, len: usize },
    #[error("empty matrix")]
    Empty,
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

/// Dense square real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self, NumericsError> {
        if dim == 0 {
            return Err(NumericsError::Empty);
        }
        if data.len() != dim * dim {
            return Err(NumericsError::BadShape {
                dim,
                len: data.len(),
            });
        }
        Ok(Self { dim, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, NumericsError> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(NumericsError::BadShape {
                    dim,
                    len: row.len() * dim,
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(dim, data)
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.dim + j] = value;
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>, NumericsError> {
        if x.len() != self.dim {
            return Err(NumericsError::DimensionMismatch {
                dim: self.dim,
                len: x.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * x[j]).sum())
            .collect())
    }
}

/// Real symmetric matrix (the Hermitian contract collapses to symmetry for
/// real entries, which is all the power-flow pipeline produces).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: RealMatrix,
}

impl HermitianMatrix {
    /// Validates symmetry within [`HERMITICITY_TOL`], naming the worst
    /// offending entry pair on failure.
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self, NumericsError> {
        let inner = RealMatrix::new(dim, data)?;
        let mut worst = (0usize, 0usize, 0.0f64);
        for i in 0..dim {
            for j in (i + 1)..dim {
                let delta = (inner.get(i, j) - inner.get(j, i)).abs();
                if delta > worst.2 {
                    worst = (i, j, delta);
                }
            }
        }
        if worst.2 > HERMITICITY_TOL {
            return Err(NumericsError::NotHermitian {
                i: worst.0,
                j: worst.1,
                delta: worst.2,
            });
        }
        Ok(Self { inner })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, NumericsError> {
        let m = RealMatrix::from_rows(rows)?;
        Self::new(m.dim, m.data)
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner.get(i, j)
    }

    pub fn as_real(&self) -> &RealMatrix {
        &self.inner
    }
}

/// Result of [`eigh`]: eigenvalues ascending, `eigenvectors[j]` the unit
/// eigenvector paired with `eigenvalues[j]`, first nonzero component of each
/// vector made positive so decompositions are reproducible.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
}

impl EigenDecomposition {
    /// Rebuilds the matrix as the eigenvalue-weighted sum of outer products.
    pub fn reconstruct(&self) -> RealMatrix {
        let n = self.eigenvalues.len();
        let mut m = RealMatrix::zeros(n);
        for (lambda, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, m.get(i, j) + lambda * v[i] * v[j]);
                }
            }
        }
        m
    }
}

/// Dense complex matrix validated to be unitary within [`UNITARITY_TOL`].
#[derive(Debug, Clone)]
pub struct UnitaryMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl UnitaryMatrix {
    pub fn new(dim: usize, data: Vec<Complex64>) -> Result<Self, NumericsError> {
        if dim == 0 {
            return Err(NumericsError::Empty);
        }
        if data.len() != dim * dim {
            return Err(NumericsError::BadShape {
                dim,
                len: data.len(),
            });
        }
        let m = Self { dim, data };
        let deviation = m.unitarity_deviation();
        if deviation > UNITARITY_TOL {
            return Err(NumericsError::NotUnitary { deviation });
        }
        Ok(m)
    }

    pub fn identity(dim: usize) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    /// Max absolute entry of `U†U − I`.
    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    acc += self.get(k, i).conj() * self.get(k, j);
                }
                let expected = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((acc - expected).norm());
            }
        }
        worst
    }

    /// Plain matrix product; the result is revalidated.
    pub fn multiply(&self, other: &UnitaryMatrix) -> Result<UnitaryMatrix, NumericsError> {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    acc += self.get(i, k) * other.get(k, j);
                }
                data[i * n + j] = acc;
            }
        }
        UnitaryMatrix::new(n, data)
    }

    pub fn max_abs_diff(&self, other: &UnitaryMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Each sweep annihilates every off-diagonal pair in turn; the accumulated
/// rotations form the eigenvector basis. Converges quadratically for the
/// small matrices this crate handles.
pub fn eigh(m: &HermitianMatrix) -> Result<EigenDecomposition, NumericsError> {
    let n = m.dim();
    let mut a: Vec<f64> = (0..n * n).map(|k| m.get(k / n, k % n)).collect();
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-15 * frob.max(1.0);

    let mut converged = n < 2;
    for _ in 0..MAX_JACOBI_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q].abs())
            .sum();
        if off <= tol {
            converged = true;
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= tol / (n * n) as f64 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[p * n + k] = a[k * n + p];
                    a[k * n + q] = s * akp + c * akq;
                    a[q * n + k] = a[k * n + q];
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        return Err(NumericsError::NoConvergence {
            sweeps: MAX_JACOBI_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].partial_cmp(&a[j * n + j]).unwrap());

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = Vec::with_capacity(n);
    for &col in &order {
        eigenvalues.push(a[col * n + col]);
        let mut vec_j: Vec<f64> = (0..n).map(|k| v[k * n + col]).collect();
        // Deterministic orientation: first nonzero component positive.
        if let Some(first) = vec_j.iter().find(|x| x.abs() > 1e-9) {
            if *first < 0.0 {
                for x in &mut vec_j {
                    *x = -*x;
                }
            }
        }
        eigenvectors.push(vec_j);
    }
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// `exp(i·m·t)` as the eigenphase-weighted sum of eigenvector outer products.
pub fn expm_hermitian(m: &HermitianMatrix, t: f64) -> Result<UnitaryMatrix, NumericsError> {
    let decomp = eigh(m)?;
    let n = m.dim();
    let mut data = vec![Complex64::new(0.0, 0.0); n * n];
    for (lambda, v) in decomp.eigenvalues.iter().zip(&decomp.eigenvectors) {
        let phase = Complex64::from_polar(1.0, lambda * t);
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] += phase * v[i] * v[j];
            }
        }
    }
    UnitaryMatrix::new(n, data)
}

/// Direct solve of `a·x = rhs` by Gaussian elimination with partial pivoting.
pub fn solve_direct(a: &RealMatrix, rhs: &[f64]) -> Result<Vec<f64>, NumericsError> {
    let n = a.dim();
    if rhs.len() != n {
        return Err(NumericsError::DimensionMismatch { dim: n, len: rhs.len() });
    }
    let mut m = a.clone();
    let mut b = rhs.to_vec();

    for k in 0..n {
        let (pivot_row, pivot_mag) = (k..n)
            .map(|r| (r, m.get(r, k).abs()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if pivot_mag <= PIVOT_TOL {
            return Err(NumericsError::Singular {
                pivot_index: k,
                magnitude: pivot_mag,
            });
        }
        if pivot_row != k {
            for j in 0..n {
                let tmp = m.get(k, j);
                m.set(k, j, m.get(pivot_row, j));
                m.set(pivot_row, j, tmp);
            }
            b.swap(k, pivot_row);
        }
        for r in (k + 1)..n {
            let factor = m.get(r, k) / m.get(k, k);
            if factor == 0.0 {
                continue;
            }
            for j in k..n {
                m.set(r, j, m.get(r, j) - factor * m.get(k, j));
            }
            b[r] -= factor * b[k];
        }
    }

    let mut x = vec![0.0f64; n];
    for k in (0..n).rev() {
        let mut acc = b[k];
        for j in (k + 1)..n {
            acc -= m.get(k, j) * x[j];
        }
        x[k] = acc / m.get(k, k);
    }
    Ok(x)
}
