//! Tensor products of finite-dimensional spaces.
//!
//! A [`TensorSpace`] is an ordered list of factors; flat indices are
//! mixed-radix with the leftmost factor most significant. A [`TensorMap`]
//! is a matrix together with its typed source and target, so compositions
//! and embeddings are checked factor by factor.

use std::fmt;
use std::sync::Arc;

use smashcyc_exact::{Matrix, Scalar, SparseVec};

/// One tensor factor: a named space with labelled basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Factor {
    pub name: Arc<str>,
    pub labels: Arc<Vec<String>>,
}

impl Factor {
    pub fn new(name: &str, labels: Vec<String>) -> Self {
        Factor { name: Arc::from(name), labels: Arc::new(labels) }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

impl fmt::Debug for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, self.dim())
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorSpace {
    factors: Vec<Factor>,
}

impl TensorSpace {
    pub fn new(factors: Vec<Factor>) -> Self {
        TensorSpace { factors }
    }

    /// The ground field, the empty tensor product.
    pub fn ground() -> Self {
        TensorSpace::default()
    }

    pub fn single(f: &Factor) -> Self {
        TensorSpace { factors: vec![f.clone()] }
    }

    pub fn power(f: &Factor, n: usize) -> Self {
        TensorSpace { factors: vec![f.clone(); n] }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).product()
    }

    pub fn concat(&self, other: &TensorSpace) -> TensorSpace {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        TensorSpace { factors: f }
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> TensorSpace {
        TensorSpace { factors: self.factors[range].to_vec() }
    }

    pub fn decode(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.factors.len()];
        for (k, f) in self.factors.iter().enumerate().rev() {
            idx[k] = flat % f.dim();
            flat /= f.dim();
        }
        idx
    }

    pub fn encode(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.factors).fold(0, |acc, (i, f)| acc * f.dim() + i)
    }

    /// Basis labels of the flat basis vector.
    pub fn labels(&self, flat: usize) -> Vec<String> {
        self.decode(flat).iter().zip(&self.factors).map(|(i, f)| f.labels[*i].clone()).collect()
    }

    /// Replaces factors `pos..pos+width` with `with`.
    pub fn splice(&self, pos: usize, width: usize, with: &TensorSpace) -> TensorSpace {
        let mut f = self.factors[..pos].to_vec();
        f.extend(with.factors.iter().cloned());
        f.extend(self.factors[pos + width..].iter().cloned());
        TensorSpace { factors: f }
    }
}

impl fmt::Debug for TensorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "k");
        }
        let names: Vec<&str> = self.factors.iter().map(|x| &*x.name).collect();
        write!(f, "{}", names.join("⊗"))
    }
}

/// A linear map between tensor spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorMap {
    pub src: TensorSpace,
    pub dst: TensorSpace,
    pub mat: Matrix,
}

impl fmt::Debug for TensorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorMap {:?} -> {:?} ({} nonzeros)", self.src, self.dst, self.mat.nnz())
    }
}

impl TensorMap {
    pub fn new(src: TensorSpace, dst: TensorSpace, mat: Matrix) -> Self {
        assert_eq!((mat.rows(), mat.cols()), (dst.dim(), src.dim()), "matrix shape does not match {src:?} -> {dst:?}");
        TensorMap { src, dst, mat }
    }

    pub fn identity(space: &TensorSpace) -> Self {
        TensorMap { src: space.clone(), dst: space.clone(), mat: Matrix::identity(space.dim()) }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &TensorMap) -> TensorMap {
        assert!(first.dst == self.src, "cannot compose: {:?} -> {:?} then {:?} -> {:?}", first.src, first.dst, self.src, self.dst);
        TensorMap { src: first.src.clone(), dst: self.dst.clone(), mat: self.mat.mul(&first.mat) }
    }

    pub fn add(&self, other: &TensorMap) -> TensorMap {
        assert!(self.src == other.src && self.dst == other.dst, "adding maps of different types");
        TensorMap { src: self.src.clone(), dst: self.dst.clone(), mat: self.mat.add(&other.mat) }
    }

    pub fn scale(&self, c: &Scalar) -> TensorMap {
        TensorMap { src: self.src.clone(), dst: self.dst.clone(), mat: self.mat.scale(c) }
    }

    /// `id_left ⊗ self ⊗ id_right`.
    pub fn embed(&self, left: &TensorSpace, right: &TensorSpace) -> TensorMap {
        let mat = embed_matrix(&self.mat, left.dim(), right.dim());
        TensorMap { src: left.concat(&self.src).concat(right), dst: left.concat(&self.dst).concat(right), mat }
    }

    /// Acts on factors `pos..pos+self.src.len()` of `space`.
    pub fn at(&self, space: &TensorSpace, pos: usize) -> TensorMap {
        let w = self.src.len();
        assert!(pos + w <= space.len(), "operator does not fit at position {pos} of {space:?}");
        assert!(space.slice(pos..pos + w) == self.src, "operator on {:?} applied to {:?} at {pos}", self.src, space);
        self.embed(&space.slice(0..pos), &space.slice(pos + w..space.len()))
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &TensorMap) -> TensorMap {
        TensorMap { src: self.src.concat(&other.src), dst: self.dst.concat(&other.dst), mat: self.mat.kron(&other.mat) }
    }

    /// `X ⊗ Y -> Y ⊗ X`.
    pub fn flip(x: &TensorSpace, y: &TensorSpace) -> TensorMap {
        let (m, n) = (x.dim(), y.dim());
        let mat = Matrix::from_sorted_columns(
            n * m,
            (0..m * n).map(|c| vec![((c % n) * m + c / n, Scalar::ONE)]).collect(),
        );
        TensorMap { src: x.concat(y), dst: y.concat(x), mat }
    }

    /// Permutes factors: factor `k` of the result is factor `perm[k]` of `space`.
    pub fn permutation(space: &TensorSpace, perm: &[usize]) -> TensorMap {
        assert_eq!(perm.len(), space.len());
        let dst = TensorSpace::new(perm.iter().map(|&p| space.factors[p].clone()).collect());
        let mut out = vec![0; perm.len()];
        let cols = (0..space.dim())
            .map(|c| {
                let idx = space.decode(c);
                for (k, &p) in perm.iter().enumerate() {
                    out[k] = idx[p];
                }
                vec![(dst.encode(&out), Scalar::ONE)]
            })
            .collect();
        TensorMap { mat: Matrix::from_sorted_columns(dst.dim(), cols), src: space.clone(), dst }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.mat.apply(v)
    }
}

/// `I_left ⊗ m ⊗ I_right` by index arithmetic.
pub fn embed_matrix(m: &Matrix, left: usize, right: usize) -> Matrix {
    if left == 1 && right == 1 {
        return m.clone();
    }
    let (r, c) = (m.rows(), m.cols());
    let mut cols = Vec::with_capacity(left * c * right);
    for l in 0..left {
        for j in 0..c {
            let col = m.column(j);
            for k in 0..right {
                cols.push(col.iter().map(|(i, s)| ((l * r + i) * right + k, s.clone())).collect());
            }
        }
    }
    Matrix::from_sorted_columns(left * r * right, cols)
}

/// Builds a composite map step by step from a starting space.
pub struct Pipeline {
    map: TensorMap,
}

impl Pipeline {
    pub fn new(space: &TensorSpace) -> Self {
        Pipeline { map: TensorMap::identity(space) }
    }

    pub fn current(&self) -> &TensorSpace {
        &self.map.dst
    }

    /// Applies `op` to the factors starting at `pos`.
    pub fn apply_at(mut self, op: &TensorMap, pos: usize) -> Self {
        self.map = op.at(&self.map.dst, pos).after(&self.map);
        self
    }

    pub fn permute(mut self, perm: &[usize]) -> Self {
        self.map = TensorMap::permutation(&self.map.dst, perm).after(&self.map);
        self
    }

    pub fn finish(self) -> TensorMap {
        self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor(name: &str, n: usize) -> Factor {
        Factor::new(name, (0..n).map(|i| format!("{name}{i}")).collect())
    }

    #[test]
    fn flip_matches_permutation() {
        let x = TensorSpace::new(vec![factor("A", 2), factor("B", 3)]);
        let y = TensorSpace::single(&factor("C", 2));
        let f = TensorMap::flip(&x, &y);
        let p = TensorMap::permutation(&x.concat(&y), &[2, 0, 1]);
        assert_eq!(f, p);
    }

    #[test]
    fn embed_matches_kron() {
        let a = factor("A", 2);
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let op = TensorMap::new(TensorSpace::single(&a), TensorSpace::single(&a), m.clone());
        let space = TensorSpace::power(&a, 3);
        let e = op.at(&space, 1);
        assert_eq!(e.mat, Matrix::identity(2).kron(&m).kron(&Matrix::identity(2)));
    }

    #[test]
    fn decode_encode_round_trip() {
        let s = TensorSpace::new(vec![factor("A", 2), factor("B", 3), factor("C", 4)]);
        for i in 0..s.dim() {
            assert_eq!(s.encode(&s.decode(i)), i);
        }
        assert_eq!(s.decode(5), vec![0, 1, 1]);
        assert_eq!(s.labels(5), vec!["A0", "B1", "C1"]);
    }

    #[test]
    #[should_panic(expected = "cannot compose")]
    fn composition_is_type_checked() {
        let a = TensorSpace::single(&factor("A", 2));
        let b = TensorSpace::single(&factor("B", 2));
        let _ = TensorMap::identity(&a).after(&TensorMap::identity(&b));
    }
}
