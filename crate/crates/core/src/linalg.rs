//! Small dense matrices over any [`Scalar`]: LU with partial pivoting,
//! determinants, solves and a 1-norm condition estimate.

use crate::scalar::Scalar;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).map(<[T]>::to_vec).collect()
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(T::zero(), |acc, j| acc + self.get(i, j).clone() * x[j].clone())
            })
            .collect()
    }

    /// Maximum absolute column sum.
    pub fn norm_one(&self) -> T::Real {
        (0..self.cols)
            .map(|j| {
                (0..self.rows).fold(T::Real::zero(), |acc, i| acc + self.get(i, j).modulus())
            })
            .fold(T::Real::zero(), num_traits::Float::max)
    }

    /// Product of the column Euclidean norms, an upper bound for `|det|`.
    pub fn hadamard_bound(&self) -> T::Real {
        use num_traits::Float;
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .fold(T::Real::zero(), |acc, i| {
                        let m = self.get(i, j).modulus();
                        acc + m * m
                    })
                    .sqrt()
            })
            .fold(num_traits::One::one(), |a: T::Real, b| a * b)
    }

    /// Maps every entry to another scalar type.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn lu(&self) -> Lu<T> {
        assert_eq!(self.rows, self.cols, "LU needs a square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0usize;
        let mut singular = false;
        for k in 0..n {
            // partial pivoting: largest modulus in column k (any nonzero in exact arithmetic)
            let mut best = k;
            let mut best_mod = a.get(k, k).modulus();
            for i in k + 1..n {
                let m = a.get(i, k).modulus();
                if m > best_mod || (best_mod.is_zero() && !a.get(i, k).is_zero()) {
                    best = i;
                    best_mod = m;
                }
            }
            if a.get(best, k).is_zero() {
                singular = true;
                continue;
            }
            if best != k {
                for j in 0..n {
                    a.data.swap(k * n + j, best * n + j);
                }
                perm.swap(k, best);
                swaps += 1;
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let factor = a.get(i, k).clone() / pivot.clone();
                if factor.is_zero() {
                    continue;
                }
                a.set(i, k, factor.clone());
                for j in k + 1..n {
                    let v = a.get(i, j).clone() - factor.clone() * a.get(k, j).clone();
                    a.set(i, j, v);
                }
            }
        }
        Lu {
            factors: a,
            perm,
            swaps,
            singular,
        }
    }
}

/// `P A = L U` with unit lower-triangular `L` stored below the diagonal.
#[derive(Clone, Debug)]
pub struct Lu<T> {
    factors: Matrix<T>,
    perm: Vec<usize>,
    swaps: usize,
    singular: bool,
}

impl<T: Scalar> Lu<T> {
    /// A pivot was exactly zero.
    pub fn is_singular(&self) -> bool {
        self.singular
    }

    pub fn det(&self) -> T {
        if self.singular {
            return T::zero();
        }
        let n = self.factors.rows;
        let prod = (0..n).fold(T::one(), |acc, i| acc * self.factors.get(i, i).clone());
        if self.swaps % 2 == 1 {
            -prod
        } else {
            prod
        }
    }

    /// `None` when singular.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        if self.singular {
            return None;
        }
        let n = self.factors.rows;
        let mut y: Vec<T> = self.perm.iter().map(|&p| b[p].clone()).collect();
        for i in 0..n {
            for j in 0..i {
                y[i] = y[i].clone() - self.factors.get(i, j).clone() * y[j].clone();
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                y[i] = y[i].clone() - self.factors.get(i, j).clone() * y[j].clone();
            }
            y[i] = y[i].clone() / self.factors.get(i, i).clone();
        }
        Some(y)
    }

    pub fn inverse(&self) -> Option<Matrix<T>> {
        let n = self.factors.rows;
        let mut inv = Matrix::zeros(n, n);
        for j in 0..n {
            let mut e = vec![T::zero(); n];
            e[j] = T::one();
            let col = self.solve(&e)?;
            for (i, v) in col.into_iter().enumerate() {
                inv.set(i, j, v);
            }
        }
        Some(inv)
    }
}

/// `1 / (||A||_1 ||A^{-1}||_1)`, zero for singular matrices.
pub fn rcond<T: Scalar>(a: &Matrix<T>, lu: &Lu<T>) -> T::Real {
    match lu.inverse() {
        Some(inv) => {
            let prod = a.norm_one() * inv.norm_one();
            if prod.is_zero() || !num_traits::Float::is_finite(prod) {
                T::Real::zero()
            } else {
                <T::Real as num_traits::One>::one() / prod
            }
        }
        None => T::Real::zero(),
    }
}
