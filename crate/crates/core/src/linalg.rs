//! Dense quaternionic matrices backed by the complex block embedding.
//!
//! A quaternion `q = α + β j` (with `α, β` in the span of `1, i`) embeds as
//! the 2×2 complex block
//!
//! ```text
//! [ α       β      ]
//! [ -conj β  conj α ]
//! ```
//!
//! which is an algebra homomorphism, sends the conjugate transpose to the
//! Hermitian adjoint, and turns quaternionic solves, ranks, and singular
//! values into ordinary complex ones. All decompositions here go through
//! that embedding; only products and adjoints are done natively.
//!
//! Matrices act on column vectors from the left, so they commute with the
//! right scalar action on vectors.

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use nalgebra::DMatrix;
use num_complex::Complex64;

#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Quaternion::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Quaternion::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<Quaternion>]) -> Result<Self> {
        let rows = columns.first().map(|c| c.len()).unwrap_or(0);
        for c in columns {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    got: c.len(),
                });
            }
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Quaternion> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> QMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Matrix product; entries of `self` multiply from the left.
    pub fn mul_mat(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Quaternion::ZERO;
            for k in 0..self.cols {
                acc += self[(i, k)] * rhs[(k, j)];
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[Quaternion]) -> Vec<Quaternion> {
        assert_eq!(self.cols, v.len(), "inner dimensions must agree");
        (0..self.rows)
            .map(|i| {
                let mut acc = Quaternion::ZERO;
                for k in 0..self.cols {
                    acc += self[(i, k)] * v[k];
                }
                acc
            })
            .collect()
    }

    /// Left multiplication of every entry by the scalar `q` (the matrix of
    /// the map `v ↦ q (M v)`).
    pub fn scale_left(&self, q: Quaternion) -> QMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| q * self[(i, j)])
    }

    pub fn sub(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    /// The 2r×2c complex embedding.
    pub fn complex_embedding(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(2 * self.rows, 2 * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let (a, b) = self[(i, j)].complex_parts();
                m[(2 * i, 2 * j)] = a;
                m[(2 * i, 2 * j + 1)] = b;
                m[(2 * i + 1, 2 * j)] = -b.conj();
                m[(2 * i + 1, 2 * j + 1)] = a.conj();
            }
        }
        m
    }

    /// Reads a quaternionic matrix back off an embedded complex matrix.
    pub fn from_complex_embedding(m: &DMatrix<Complex64>) -> Self {
        assert!(m.nrows() % 2 == 0 && m.ncols() % 2 == 0);
        let (rows, cols) = (m.nrows() / 2, m.ncols() / 2);
        Self::from_fn(rows, cols, |i, j| {
            Quaternion::from_complex_parts(m[(2 * i, 2 * j)], m[(2 * i, 2 * j + 1)])
        })
    }

    pub fn try_inverse(&self) -> Result<QMatrix> {
        let emb = self.complex_embedding();
        let inv = emb.try_inverse().ok_or(Error::SingularGram)?;
        Ok(Self::from_complex_embedding(&inv))
    }

    /// Solves `M x = b` over the quaternions.
    pub fn solve(&self, b: &[Quaternion]) -> Result<Vec<Quaternion>> {
        assert_eq!(self.rows, b.len());
        let emb = self.complex_embedding();
        let mut rhs = DMatrix::zeros(2 * self.rows, 2);
        for (i, q) in b.iter().enumerate() {
            let (a, be) = q.complex_parts();
            rhs[(2 * i, 0)] = a;
            rhs[(2 * i, 1)] = be;
            rhs[(2 * i + 1, 0)] = -be.conj();
            rhs[(2 * i + 1, 1)] = a.conj();
        }
        let lu = emb.lu();
        let sol = lu.solve(&rhs).ok_or(Error::SingularGram)?;
        Ok((0..self.rows)
            .map(|i| Quaternion::from_complex_parts(sol[(2 * i, 0)], sol[(2 * i, 1)]))
            .collect())
    }

    /// Largest and smallest singular values of the complex embedding.
    pub fn singular_extremes(&self) -> (f64, f64) {
        let sv = self.complex_embedding().singular_values();
        let max = sv.iter().cloned().fold(0.0, f64::max);
        let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
        (max, min)
    }

    /// Quaternionic rank with relative singular-value cutoff `eps`.
    pub fn rank(&self, eps: f64) -> usize {
        let sv = self.complex_embedding().singular_values();
        let max = sv.iter().cloned().fold(0.0, f64::max);
        if max == 0.0 {
            return 0;
        }
        let r = sv.iter().filter(|s| **s > eps * max).count();
        // complex rank of the embedding is twice the quaternionic rank
        r / 2
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    fn index(&self, (i, j): (usize, usize)) -> &Quaternion {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Quaternion {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_q(rng: &mut StdRng) -> Quaternion {
        Quaternion::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        )
    }

    #[test]
    fn embedding_is_multiplicative() {
        let mut rng = StdRng::seed_from_u64(7);
        let a = QMatrix::from_fn(3, 4, |_, _| random_q(&mut rng));
        let b = QMatrix::from_fn(4, 2, |_, _| random_q(&mut rng));
        let lhs = a.mul_mat(&b).complex_embedding();
        let rhs = a.complex_embedding() * b.complex_embedding();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn embedding_respects_adjoint() {
        let mut rng = StdRng::seed_from_u64(8);
        let a = QMatrix::from_fn(3, 2, |_, _| random_q(&mut rng));
        let lhs = a.adjoint().complex_embedding();
        let rhs = a.complex_embedding().adjoint();
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn inverse_round_trip() {
        let mut rng = StdRng::seed_from_u64(9);
        let a = QMatrix::from_fn(4, 4, |_, _| random_q(&mut rng));
        let inv = a.try_inverse().unwrap();
        let prod = a.mul_mat(&inv);
        assert!(prod.sub(&QMatrix::identity(4)).frobenius_norm() < 1e-10);
    }

    #[test]
    fn solve_matches_multiplication() {
        let mut rng = StdRng::seed_from_u64(10);
        let a = QMatrix::from_fn(3, 3, |_, _| random_q(&mut rng));
        let x: Vec<Quaternion> = (0..3).map(|_| random_q(&mut rng)).collect();
        let b = a.mul_vec(&x);
        let got = a.solve(&b).unwrap();
        for (g, w) in got.iter().zip(&x) {
            assert!((*g - *w).norm() < 1e-10);
        }
    }

    #[test]
    fn rank_detects_dependent_columns() {
        let mut rng = StdRng::seed_from_u64(11);
        let c0: Vec<Quaternion> = (0..3).map(|_| random_q(&mut rng)).collect();
        let lambda = random_q(&mut rng);
        let c1: Vec<Quaternion> = c0.iter().map(|q| *q * lambda).collect();
        let m = QMatrix::from_columns(&[c0, c1]).unwrap();
        assert_eq!(m.rank(1e-9), 1);
    }
}
