//! Sparse matrices stored by column.
//!
//! Column `j` is the image of the `j`-th source basis vector, which is how
//! every operator in the workspace is naturally produced.

use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::scalar::Scalar;

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Sorts, merges duplicate indices and drops zeros.
pub fn normalize(mut v: Vec<(usize, Scalar)>) -> SparseVec {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d = &*d + &c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

pub fn scale_vec(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

/// `a + c * b` for sorted sparse vectors.
pub fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix { rows: n, cols: n, data: (0..n).map(|i| vec![(i, Scalar::ONE)]).collect() }
    }

    /// Builds from columns, normalizing each.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, Scalar)>>) -> Self {
        let cols = columns.len();
        let data: Vec<SparseVec> = columns.into_iter().map(normalize).collect();
        debug_assert!(data.iter().all(|c| c.iter().all(|e| e.0 < rows)));
        Matrix { rows, cols, data }
    }

    /// Builds from already-normalized columns.
    pub fn from_sorted_columns(rows: usize, data: Vec<SparseVec>) -> Self {
        debug_assert!(data.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0)));
        Matrix { rows, cols: data.len(), data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize) -> Vec<(usize, Scalar)>) -> Self {
        Self::from_columns(rows, (0..cols).map(&mut f).collect())
    }

    pub fn from_triplets(rows: usize, cols: usize, t: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, s) in t {
            assert!(r < rows && c < cols, "triplet ({r},{c}) out of range {rows}x{cols}");
            columns[c].push((r, s));
        }
        Self::from_columns(rows, columns)
    }

    /// From a dense row-major array.
    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_triplets(
            r,
            c,
            rows.iter().enumerate().flat_map(|(i, row)| row.iter().enumerate().map(move |(j, s)| (i, j, s.clone()))),
        )
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect();
        Self::from_dense(&dense)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.data[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.data[c].binary_search_by_key(&r, |e| e.0) {
            Ok(k) => self.data[c][k].1.clone(),
            Err(_) => Scalar::ZERO,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.data.iter().enumerate().all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    /// `self * v`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(self.rows);
        for (k, b) in v {
            for (i, a) in &self.data[*k] {
                acc.add(*i, &(a * b));
            }
        }
        acc.drain()
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product: {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        let mut acc = Accumulator::new(self.rows);
        let mut data = Vec::with_capacity(other.cols);
        for col in &other.data {
            for (k, b) in col {
                for (i, a) in &self.data[*k] {
                    acc.add(*i, &(a * b));
                }
            }
            data.push(acc.drain());
        }
        Matrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.axpy(&Scalar::ONE, other)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.axpy(&Scalar::int(-1), other)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch in sum");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| axpy(a, c, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| scale_vec(v, c)).collect() }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&Scalar::int(-1))
    }

    pub fn transpose(&self) -> Matrix {
        let mut columns: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (j, col) in self.data.iter().enumerate() {
            for (i, s) in col {
                columns[*i].push((j, s.clone()));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data: columns }
    }

    /// Kronecker product; the left factor is the more significant index.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut data = Vec::with_capacity(self.cols * other.cols);
        for ca in &self.data {
            for cb in &other.data {
                let mut col = Vec::with_capacity(ca.len() * cb.len());
                for (i, a) in ca {
                    for (k, b) in cb {
                        col.push((i * other.rows + k, a * b));
                    }
                }
                data.push(col);
            }
        }
        Matrix { rows: self.rows * other.rows, cols: self.cols * other.cols, data }
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = self.mul(&acc);
        }
        acc
    }

    /// Columns placed side by side.
    pub fn hstack(parts: &[&Matrix]) -> Matrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        let mut data = Vec::new();
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            data.extend(m.data.iter().cloned());
        }
        Matrix { rows, cols: data.len(), data }
    }

    /// Assembles a block matrix from `(block_row, block_col, matrix)` triples.
    /// Blocks sharing a position are summed.
    pub fn from_blocks(row_sizes: &[usize], col_sizes: &[usize], blocks: &[(usize, usize, &Matrix)]) -> Matrix {
        let offsets = |sizes: &[usize]| {
            let mut o = vec![0];
            for s in sizes {
                o.push(o.last().unwrap() + s);
            }
            o
        };
        let (ro, co) = (offsets(row_sizes), offsets(col_sizes));
        let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); *co.last().unwrap()];
        for (bi, bj, m) in blocks {
            assert_eq!((m.rows, m.cols), (row_sizes[*bi], col_sizes[*bj]), "block ({bi},{bj}) has wrong shape");
            for (j, col) in m.data.iter().enumerate() {
                let dst = &mut columns[co[*bj] + j];
                dst.extend(col.iter().map(|(i, s)| (ro[*bi] + i, s.clone())));
            }
        }
        Matrix::from_columns(*ro.last().unwrap(), columns)
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix { rows: self.rows, cols: idx.len(), data: idx.iter().map(|&j| self.data[j].clone()).collect() }
    }

    /// Keeps the listed rows (in that order), renumbering them `0..keep.len()`.
    pub fn select_rows(&self, keep: &[usize]) -> Matrix {
        let mut map = vec![usize::MAX; self.rows];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let data = self
            .data
            .iter()
            .map(|c| {
                let mut v: SparseVec = c.iter().filter(|(i, _)| map[*i] != usize::MAX).map(|(i, s)| (map[*i], s.clone())).collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect();
        Matrix { rows: keep.len(), cols: self.cols, data }
    }

    /// Entries in row-major order, the canonical order for output.
    pub fn entries_row_major(&self) -> Vec<(usize, usize, Scalar)> {
        let mut e: Vec<(usize, usize, Scalar)> = self
            .data
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, s)| (*i, j, s.clone())))
            .collect();
        e.sort_by_key(|x| (x.0, x.1));
        e
    }

    /// First column at which the two matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<usize> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "comparing matrices of different shapes");
        (0..self.cols).find(|&j| self.data[j] != other.data[j])
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![Scalar::ZERO; self.cols]; self.rows];
        for (j, c) in self.data.iter().enumerate() {
            for (i, s) in c {
                d[*i][j] = s.clone();
            }
        }
        d
    }

    /// Largest cyclotomic order among the entries, if any.
    pub fn cyclotomic_order(&self) -> Option<u32> {
        self.data.iter().flatten().filter_map(|(_, s)| s.order()).max()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        if self.rows <= 16 && self.cols <= 16 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
                writeln!(f, "  {}", cells.join(" "))?;
            }
        } else {
            writeln!(f, "  {} nonzeros", self.nnz())?;
        }
        write!(f, "]")
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Matrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &self.entries_row_major())?;
        st.end()
    }
}

/// Dense scratch space for accumulating one sparse column at a time.
pub struct Accumulator {
    values: Vec<Scalar>,
    marked: Vec<bool>,
    touched: Vec<usize>,
}

impl Accumulator {
    pub fn new(len: usize) -> Self {
        Accumulator { values: vec![Scalar::ZERO; len], marked: vec![false; len], touched: Vec::new() }
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        if !self.marked[i] {
            self.marked[i] = true;
            self.touched.push(i);
            self.values[i] = c.clone();
        } else {
            self.values[i] = &self.values[i] + c;
        }
    }

    /// Returns the accumulated vector and resets the scratch space.
    pub fn drain(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.marked[i] = false;
            let v = std::mem::take(&mut self.values[i]);
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_kron() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[0, 1]]);
        let b = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_int_rows(&[&[2, 1], &[1, 0]]));
        let k = a.kron(&Matrix::identity(2));
        assert_eq!(k.get(0, 2), Scalar::int(2));
        assert_eq!(k.get(1, 3), Scalar::int(2));
        assert_eq!(k.get(3, 3), Scalar::ONE);
        assert_eq!(k.nnz(), 6);
    }

    #[test]
    fn blocks_and_selection() {
        let i2 = Matrix::identity(2);
        let m = Matrix::from_blocks(&[2, 2], &[2], &[(0, 0, &i2), (1, 0, &i2.scale(&Scalar::int(3)))]);
        assert_eq!(m.rows(), 4);
        assert_eq!(m.get(3, 1), Scalar::int(3));
        let r = m.select_rows(&[3, 0]);
        assert_eq!(r.to_dense(), vec![vec![Scalar::ZERO, Scalar::int(3)], vec![Scalar::ONE, Scalar::ZERO]]);
    }

    #[test]
    fn row_major_entries() {
        let m = Matrix::from_int_rows(&[&[0, 5], &[7, 0]]);
        let e: Vec<(usize, usize)> = m.entries_row_major().iter().map(|x| (x.0, x.1)).collect();
        assert_eq!(e, vec![(0, 1), (1, 0)]);
    }
}
