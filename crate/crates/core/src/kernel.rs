//! Kernel evaluation, Gram matrix construction, and the label-weighted
//! matrix `B(i,j) = y_i y_j K(i,j)` that parameterizes the dual problem.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which kernel to use. The RBF width `gamma` must be positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum KernelSpec {
    /// Plain dot product.
    Linear,
    /// `exp(-gamma * ||x - z||^2)`, values in (0, 1].
    Rbf { gamma: f64 },
}

impl KernelSpec {
    pub fn rbf(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "rbf gamma must be a positive finite number, got {gamma}"
            )));
        }
        Ok(KernelSpec::Rbf { gamma })
    }

    /// Evaluate the kernel on a pair of points.
    pub fn eval(&self, x: &[f64], z: &[f64]) -> Result<f64> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch(x.len(), z.len()));
        }
        Ok(self.eval_unchecked(x, z))
    }

    pub(crate) fn eval_unchecked(&self, x: &[f64], z: &[f64]) -> f64 {
        match *self {
            KernelSpec::Linear => x.iter().zip(z).map(|(a, b)| a * b).sum(),
            KernelSpec::Rbf { gamma } => {
                let sq: f64 = x.iter().zip(z).map(|(a, b)| (a - b) * (a - b)).sum();
                (-gamma * sq).exp()
            }
        }
    }
}

/// Dense symmetric kernel matrix. The upper triangle is computed once and
/// mirrored, so `K(i,j) == K(j,i)` holds bit-exactly.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl GramMatrix {
    /// Build the n x n matrix `K(i,j) = kernel(x_i, x_j)`.
    pub fn compute(spec: &KernelSpec, points: &[Vec<f64>]) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::InvalidParameter("empty point set".into()));
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::InvalidParameter("zero-dimensional points".into()));
        }
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch(dim, p.len()));
            }
        }
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = spec.eval_unchecked(&points[i], &points[j]);
                entries[i * n + j] = v;
                entries[j * n + i] = v;
            }
        }
        Ok(GramMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Row slice, length n.
    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Label-weighted kernel matrix `B(i,j) = y_i y_j K(i,j)`.
#[derive(Debug, Clone)]
pub struct BMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl BMatrix {
    pub fn from_gram(gram: &GramMatrix, labels: &[f64]) -> Result<Self> {
        if labels.len() != gram.n() {
            return Err(Error::DimensionMismatch(gram.n(), labels.len()));
        }
        for (i, &y) in labels.iter().enumerate() {
            if y != 1.0 && y != -1.0 {
                return Err(Error::BadLabel(i));
            }
        }
        let n = gram.n();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = labels[i] * labels[j] * gram.get(i, j);
                entries[i * n + j] = v;
                entries[j * n + i] = v;
            }
        }
        Ok(BMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Quadratic form `v' B v`.
    pub fn quad_form(&self, v: &[f64]) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.n {
            let row = &self.entries[i * self.n..(i + 1) * self.n];
            let mut s = 0.0;
            for j in 0..self.n {
                s += row[j] * v[j];
            }
            acc += v[i] * s;
        }
        acc
    }

    /// `B v` into a fresh vector.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| {
                let row = &self.entries[i * self.n..(i + 1) * self.n];
                row.iter().zip(v).map(|(b, x)| b * x).sum()
            })
            .collect()
    }
}
