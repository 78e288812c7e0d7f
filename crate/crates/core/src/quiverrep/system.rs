//! Linear systems whose unknowns are the vertex maps of a morphism.
//!
//! Unknown `F_v` occupies a contiguous row-major slice of the unknown vector.
//! An equation block `Σ L·F_v·R = 0` contributes `kron(L, Rᵀ)` at the
//! columns of `F_v`.

use crate::exactlin::{Matrix, PrimeField};

use super::Rep;

pub(crate) struct MapSystem {
    field: PrimeField,
    src: Vec<usize>,
    dst: Vec<usize>,
    offsets: Vec<usize>,
    unknowns: usize,
    blocks: Vec<Matrix>,
}

pub(crate) type Term<'a> = (usize, &'a Matrix, &'a Matrix);

impl MapSystem {
    pub fn new(field: PrimeField, src: &[usize], dst: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(src.len());
        let mut acc = 0;
        for (s, d) in src.iter().zip(dst) {
            offsets.push(acc);
            acc += s * d;
        }
        MapSystem {
            field,
            src: src.to_vec(),
            dst: dst.to_vec(),
            offsets,
            unknowns: acc,
            blocks: Vec::new(),
        }
    }

    /// Adds the block equation `Σ left·F_v·right = 0`.
    pub fn equation(&mut self, terms: &[Term<'_>]) {
        let Some(&(_, l0, r0)) = terms.first() else {
            return;
        };
        let (r, c) = (l0.rows(), r0.cols());
        if r * c == 0 {
            return;
        }
        let mut block = Matrix::zeros(self.field, r * c, self.unknowns);
        for &(v, left, right) in terms {
            assert_eq!((left.rows(), right.cols()), (r, c), "equation terms disagree in shape");
            assert_eq!((left.cols(), right.rows()), (self.dst[v], self.src[v]), "term shape at vertex {v}");
            if self.dst[v] * self.src[v] == 0 {
                continue;
            }
            let k = left.kron(&right.transpose());
            let off = self.offsets[v];
            for i in 0..k.rows() {
                for j in 0..k.cols() {
                    let x = k.get(i, j);
                    if x != 0 {
                        let cur = block.get(i, off + j);
                        block.set(i, off + j, self.field.add(cur, x));
                    }
                }
            }
        }
        self.blocks.push(block);
    }

    /// Commuting squares `n_α·F_s − F_t·m_α = 0` for a morphism m -> n.
    pub fn commuting(&mut self, m: &Rep, n: &Rep) {
        let f = self.field;
        for (a, &(s, t)) in m.quiver().arrows().iter().enumerate() {
            let id_s = Matrix::identity(f, m.dim(s));
            let neg_id_t = -&Matrix::identity(f, n.dim(t));
            self.equation(&[(s, n.map(a), &id_s), (t, &neg_id_t, m.map(a))]);
        }
    }

    pub fn matrix(&self) -> Matrix {
        let rows: usize = self.blocks.iter().map(Matrix::rows).sum();
        let mut m = Matrix::zeros(self.field, rows, self.unknowns);
        let mut r0 = 0;
        for b in &self.blocks {
            m.set_block(r0, 0, b);
            r0 += b.rows();
        }
        m
    }

    /// Canonical basis of the homogeneous solution space.
    pub fn kernel(&self) -> Vec<Vec<Matrix>> {
        let k = self.matrix().kernel_basis();
        (0..k.cols()).map(|j| self.unpack(&k.column(j))).collect()
    }

    pub fn unpack(&self, v: &[u32]) -> Vec<Matrix> {
        unpack(self.field, &self.src, &self.dst, v)
    }
}

pub(crate) fn unpack(field: PrimeField, src: &[usize], dst: &[usize], v: &[u32]) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(src.len());
    let mut off = 0;
    for (&s, &d) in src.iter().zip(dst) {
        out.push(Matrix::from_vec(field, d, s, v[off..off + s * d].to_vec()).expect("slice length"));
        off += s * d;
    }
    assert_eq!(off, v.len(), "vector length does not match the vertex maps");
    out
}

/// Solves `Σ c_i·columns[i] = rhs` canonically.
pub(crate) fn solve_in_span(field: PrimeField, columns: &[Vec<u32>], rhs: &[u32]) -> Option<Vec<u32>> {
    let rows = rhs.len();
    let mut m = Matrix::zeros(field, rows, columns.len());
    for (j, c) in columns.iter().enumerate() {
        assert_eq!(c.len(), rows, "column length");
        for (i, &x) in c.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m.solve_canonical(&Matrix::column_vector(field, rhs))
        .ok()
        .map(Matrix::into_data)
}

/// Kernel of `c ↦ Σ c_i·columns[i]` as coefficient vectors.
pub(crate) fn span_kernel(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut m = Matrix::zeros(field, rows, columns.len());
    for (j, c) in columns.iter().enumerate() {
        for (i, &x) in c.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    let k = m.kernel_basis();
    (0..k.cols()).map(|j| k.column(j)).collect()
}
