//! Dense linear algebra over prime fields.
//!
//! Every basis, splitting and solution in the crate comes out of [`Matrix::rref`],
//! so results are reproducible bit for bit.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("modulus {0} is not a prime in 2..=97")]
    BadModulus(u32),
    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {got}")]
    BadLength {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("columns are linearly dependent")]
    Dependent,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    p: u32,
}

impl TryFrom<u32> for PrimeField {
    type Error = LinalgError;
    fn try_from(p: u32) -> Result<Self, Self::Error> {
        PrimeField::new(p)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.p
    }
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, LinalgError> {
        let prime = (2..=97).contains(&p) && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if prime {
            Ok(PrimeField { p })
        } else {
            Err(LinalgError::BadModulus(p))
        }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        let mut base = a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<F{}>{}x{}[", self.field.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::BadLength {
                rows,
                cols,
                expected: rows * cols,
                got: data.len(),
            });
        }
        let data = data.into_iter().map(|x| x % field.p).collect();
        Ok(Matrix { field, rows, cols, data })
    }

    /// Builds a matrix from signed rows; entries are reduced mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.iter().flatten().map(|&x| field.from_i64(x)).collect();
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn column_vector(field: PrimeField, v: &[u32]) -> Self {
        Matrix::from_vec(field, v.len(), 1, v.to_vec()).expect("length matches")
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn into_data(self) -> Vec<u32> {
        self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn scale(&self, k: u32) -> Matrix {
        let f = self.field;
        Matrix {
            data: self.data.iter().map(|&x| f.mul(x, k % f.p)).collect(),
            ..self.clone()
        }
    }

    /// Columns `cols` of the matrix, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn submatrix(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, nr, nc);
        for r in 0..nr {
            for c in 0..nc {
                m.data[r * nc + c] = self.get(r0 + r, c0 + c);
            }
        }
        m
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Concatenates matrices with equal row counts side by side.
    pub fn hcat(field: PrimeField, rows: usize, parts: &[Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hcat row mismatch");
            out.set_block(0, c0, m);
            c0 += m.cols;
        }
        out
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    /// Kronecker product. With row-major vectorisation, `vec(A·X·B) = kron(A, Bᵀ)·vec(X)`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Matrix::zeros(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.data[(i * other.rows + k) * c + j * other.cols + l] = f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let p = f.p;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| m.data[r * cols + col] != 0) else {
                continue;
            };
            if piv != row {
                for c in 0..cols {
                    m.data.swap(piv * cols + c, row * cols + c);
                }
            }
            let inv = f.inv(m.data[row * cols + col]);
            for c in col..cols {
                let x = &mut m.data[row * cols + c];
                *x = (*x * inv) % p;
            }
            let (head, tail) = m.data.split_at_mut(row * cols);
            let (prow, rest) = tail.split_at_mut(cols);
            for chunk in head.chunks_mut(cols).chain(rest.chunks_mut(cols)) {
                let factor = chunk[col];
                if factor == 0 {
                    continue;
                }
                let nf = p - factor;
                for c in col..cols {
                    chunk[c] = (chunk[c] + nf * prow[c]) % p;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Canonical kernel basis as columns, one per free column in ascending order.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, f.neg(r.get(i, fc)));
            }
        }
        k
    }

    /// Solution of `self · x = b` with every free variable set to zero.
    pub fn solve_canonical(&self, b: &Matrix) -> Result<Matrix, LinalgError> {
        if b.rows != self.rows || b.cols != 1 {
            return Err(LinalgError::Shape(format!(
                "rhs {}x{} for a {}x{} system",
                b.rows, b.cols, self.rows, self.cols
            )));
        }
        let (r, pivots) = self.hstack(b).rref();
        if pivots.last() == Some(&self.cols) {
            return Err(LinalgError::NoSolution);
        }
        let mut x = Matrix::zeros(self.field, self.cols, 1);
        for (i, &pc) in pivots.iter().enumerate() {
            x.set(pc, 0, r.get(i, self.cols));
        }
        Ok(x)
    }

    /// Basis of the column space: the columns at the RREF pivot positions.
    pub fn column_space_basis(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Shape(format!("{}x{} is not square", self.rows, self.cols)));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(self.field, n)).rref();
        if n > 0 && pivots.get(n - 1) != Some(&(n - 1)) {
            return Err(LinalgError::NotInvertible);
        }
        Ok(r.submatrix(0, n, n, n))
    }

    /// Standard basis vectors, chosen greedily by index, completing `sub`'s columns to a basis.
    pub fn complement_basis(sub: &Matrix, ambient_dim: usize) -> Result<Matrix, LinalgError> {
        let f = sub.field;
        if sub.rows != ambient_dim {
            return Err(LinalgError::Shape(format!(
                "{} rows in a {}-dimensional ambient space",
                sub.rows, ambient_dim
            )));
        }
        if sub.rank() != sub.cols {
            return Err(LinalgError::Dependent);
        }
        let mut current = sub.clone();
        let mut picked = Vec::new();
        for i in 0..ambient_dim {
            if current.cols == ambient_dim {
                break;
            }
            let mut e = Matrix::zeros(f, ambient_dim, 1);
            e.set(i, 0, 1);
            let trial = current.hstack(&e);
            if trial.rank() == trial.cols {
                current = trial;
                picked.push(i);
            }
        }
        let mut out = Matrix::zeros(f, ambient_dim, picked.len());
        for (j, &i) in picked.iter().enumerate() {
            out.set(i, j, 1);
        }
        Ok(out)
    }
}

/// Canonical representatives of vectors modulo a fixed subspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetReducer {
    basis_rows: Matrix,
    pivots: Vec<usize>,
}

impl CosetReducer {
    /// `image_basis` columns span the subspace; dependent columns are fine.
    pub fn new(image_basis: &Matrix) -> Self {
        let (r, pivots) = image_basis.transpose().rref();
        let basis_rows = r.submatrix(0, pivots.len(), 0, r.cols());
        CosetReducer { basis_rows, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis_rows.cols()
    }

    pub fn subspace_dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not eliminated by reduction, ascending.
    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.ambient_dim()).filter(|c| !self.pivots.contains(c)).collect()
    }

    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = self.basis_rows.field();
        assert_eq!(v.len(), self.ambient_dim(), "coset_reduce length mismatch");
        let mut out = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let k = v[pc];
            if k == 0 {
                continue;
            }
            for (c, x) in out.iter_mut().enumerate() {
                *x = f.sub(*x, f.mul(k, self.basis_rows.get(i, c)));
            }
        }
        out
    }
}

/// Canonical representative of `v` modulo the column space of `image_basis`.
pub fn coset_reduce(v: &Matrix, image_basis: &Matrix) -> Matrix {
    let reduced = CosetReducer::new(image_basis).reduce(v.data());
    Matrix::column_vector(v.field(), &reduced)
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "add shape mismatch");
        let f = self.field;
        Matrix {
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect(),
            ..self.clone()
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "sub shape mismatch");
        let f = self.field;
        Matrix {
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect(),
            ..self.clone()
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        let f = self.field;
        Matrix {
            data: self.data.iter().map(|&a| f.neg(a)).collect(),
            ..self.clone()
        }
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &'a Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch {:?} * {:?}", self.shape(), rhs.shape());
        let p = self.field.p;
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rhs.row(k)) {
                    *o = (*o + a * b) % p;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn m(p: u32, rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(f(p), rows)
    }

    #[test]
    fn rejects_composite_and_out_of_range_moduli() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(101).is_err());
        assert!(PrimeField::new(97).is_ok());
    }

    #[test]
    fn rref_examples() {
        let (r, piv) = m(2, &[vec![1, 1], vec![1, 1]]).rref();
        assert_eq!(r, m(2, &[vec![1, 1], vec![0, 0]]));
        assert_eq!(piv, vec![0]);

        let id = Matrix::identity(f(3), 3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));

        let (r, piv) = m(3, &[vec![2, 1], vec![1, 2]]).rref();
        assert_eq!(r, m(3, &[vec![1, 2], vec![0, 0]]));
        assert_eq!(piv, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zeros(f(2), 2, 2).kernel_basis(), Matrix::identity(f(2), 2));
        assert_eq!(Matrix::identity(f(5), 3).kernel_basis().cols(), 0);
        assert_eq!(m(2, &[vec![1, 1]]).kernel_basis(), m(2, &[vec![1], vec![1]]));
    }

    #[test]
    fn solve_examples() {
        let b = m(7, &[vec![3], vec![5]]);
        assert_eq!(Matrix::identity(f(7), 2).solve_canonical(&b).unwrap(), b);
        assert_eq!(
            m(2, &[vec![1, 1]]).solve_canonical(&m(2, &[vec![1]])).unwrap(),
            m(2, &[vec![1], vec![0]])
        );
        assert_eq!(
            m(2, &[vec![1, 0], vec![0, 0]]).solve_canonical(&m(2, &[vec![0], vec![1]])),
            Err(LinalgError::NoSolution)
        );
    }

    #[test]
    fn coset_examples() {
        let img = m(2, &[vec![1], vec![0]]);
        assert_eq!(coset_reduce(&m(2, &[vec![1], vec![1]]), &img), m(2, &[vec![0], vec![1]]));
        assert!(coset_reduce(&m(2, &[vec![1], vec![0]]), &img).is_zero());
        let v = m(3, &[vec![2], vec![1]]);
        assert_eq!(coset_reduce(&v, &Matrix::zeros(f(3), 2, 0)), v);
    }

    #[test]
    fn invert_examples() {
        let id = Matrix::identity(f(3), 3);
        assert_eq!(id.invert().unwrap(), id);
        let swap = m(2, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.invert().unwrap(), swap);
        let u = m(2, &[vec![1, 1], vec![0, 1]]);
        assert_eq!(u.invert().unwrap(), u);
        assert_eq!(m(2, &[vec![1, 1], vec![1, 1]]).invert(), Err(LinalgError::NotInvertible));
        assert_eq!(Matrix::zeros(f(2), 0, 0).invert().unwrap().shape(), (0, 0));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            Matrix::complement_basis(&Matrix::zeros(f(2), 2, 0), 2).unwrap(),
            Matrix::identity(f(2), 2)
        );
        assert_eq!(Matrix::complement_basis(&Matrix::identity(f(2), 2), 2).unwrap().cols(), 0);
        assert_eq!(
            Matrix::complement_basis(&m(2, &[vec![1], vec![1]]), 2).unwrap(),
            m(2, &[vec![1], vec![0]])
        );
        assert_eq!(
            Matrix::complement_basis(&m(2, &[vec![1, 1], vec![1, 1]]), 2),
            Err(LinalgError::Dependent)
        );
    }

    #[test]
    fn kron_matches_vectorised_product() {
        let a = m(5, &[vec![1, 2], vec![3, 4], vec![0, 1]]);
        let x = m(5, &[vec![2, 0, 1], vec![4, 1, 3]]);
        let b = m(5, &[vec![1, 1], vec![0, 2], vec![3, 0]]);
        let lhs = &(&a * &x) * &b;
        let rhs = &a.kron(&b.transpose()) * &Matrix::column_vector(f(5), x.data());
        assert_eq!(lhs.data(), rhs.data());
    }
}
