use super::Polynomial;
use crate::error::{Error, Result};
use num_traits::Num;
use std::fmt;
use std::ops::{Index, IndexMut};

/// Dense square matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Num + Clone> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Matrix { n, data: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::NotSquare { rows: n, row, len: r.len() });
        }
        Ok(Matrix { n, data: rows.into_iter().flatten().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Num + Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Matrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                }
            }
        }
        out
    }

    /// Rows and columns `idx`, in the given order.
    pub fn principal_submatrix(&self, idx: &[usize]) -> Result<Self> {
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let k = idx.len();
        let mut out = Self::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// `det(xI - self)` by the division-free Berkowitz algorithm.
    pub fn char_poly(&self) -> Polynomial<T> {
        // Coefficients of the characteristic polynomial of the leading
        // k x k block, highest degree first.
        let mut p = vec![T::one()];
        for k in 0..self.n {
            // Column of the Toeplitz factor: 1, -a_kk, -R S, -R A S, ...
            // where R is row k and S column k restricted to indices < k.
            let mut col = Vec::with_capacity(k + 2);
            col.push(T::one());
            col.push(T::zero() - self[(k, k)].clone());
            let mut v: Vec<T> = (0..k).map(|i| self[(i, k)].clone()).collect();
            for step in 0..k {
                let rs = (0..k).fold(T::zero(), |acc, j| acc + self[(k, j)].clone() * v[j].clone());
                col.push(T::zero() - rs);
                if step + 1 < k {
                    v = (0..k)
                        .map(|i| (0..k).fold(T::zero(), |acc, j| acc + self[(i, j)].clone() * v[j].clone()))
                        .collect();
                }
            }
            let mut next = vec![T::zero(); k + 2];
            for (i, c) in col.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, q) in p.iter().enumerate() {
                    if i + j < k + 2 {
                        next[i + j] = next[i + j].clone() + c.clone() * q.clone();
                    }
                }
            }
            p = next;
        }
        p.reverse();
        Polynomial::new(p)
    }

    /// Determinant by fraction-free Bareiss elimination with row pivoting.
    /// Exact over any integral domain where the intermediate divisions are
    /// exact, in particular the integers.
    pub fn det(&self) -> T {
        let n = self.n;
        if n == 0 {
            return T::one();
        }
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return T::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, r * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let aik = a[i * n + k].clone();
                for j in k + 1..n {
                    let v = pivot.clone() * a[i * n + j].clone() - aik.clone() * a[k * n + j].clone();
                    a[i * n + j] = v / prev.clone();
                }
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        if negate {
            T::zero() - d
        } else {
            d
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.n && j < self.n, "index out of range");
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.n && j < self.n, "index out of range");
        &mut self.data[i * self.n + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.data[i * self.n..(i + 1) * self.n].iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.n.max(1)).collect();
        write!(f, "Matrix{rows:?}")
    }
}
