//! Deterministic exact elimination.
//!
//! Vectors are inserted one at a time (column-major scan). Each is reduced
//! against the existing pivots, always eliminating its lowest-index nonzero
//! entry first; if that entry sits on a row without a pivot the vector
//! becomes a new pivot at that row. Pivots are normalized to 1 at their
//! pivot row and have no entries above it, so a vector lies in the span
//! exactly when this reduction reaches zero.

use std::collections::BTreeMap;

use crate::matrix::{Matrix, SparseVec};
use crate::scalar::Scalar;
use crate::LinAlgError;

const NONE: usize = usize::MAX;

struct Pivot {
    vec: SparseVec,
    combo: SparseVec,
}

/// Result of inserting a vector into a [`Reducer`].
pub enum Insertion {
    /// The vector was independent and became pivot number `0`.
    Pivot(usize),
    /// The vector is a combination of earlier generators; with tracking on,
    /// `combo` lists coefficients (over generator ids, including this one)
    /// of a vanishing combination.
    Dependent(SparseVec),
}

/// Incremental echelon basis of a span of sparse vectors.
pub struct Reducer {
    dim: usize,
    track: bool,
    pivot_at: Vec<usize>,
    pivots: Vec<Pivot>,
    pivot_generators: Vec<usize>,
    generators: usize,
}

impl Reducer {
    /// `track` records, for every pivot, its expression in the inserted
    /// generators; needed for kernels and coordinates.
    pub fn new(dim: usize, track: bool) -> Self {
        Reducer { dim, track, pivot_at: vec![NONE; dim], pivots: Vec::new(), pivot_generators: Vec::new(), generators: 0 }
    }

    pub fn from_columns(m: &Matrix, track: bool) -> Self {
        let mut r = Reducer::new(m.rows(), track);
        for c in m.columns() {
            r.insert(c);
        }
        r
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Generator ids (insertion order) that produced pivots.
    pub fn pivot_generators(&self) -> &[usize] {
        &self.pivot_generators
    }

    fn reduce(&self, v: &SparseVec, gen: Option<usize>) -> (BTreeMap<usize, Scalar>, BTreeMap<usize, Scalar>) {
        let mut w: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut combo: BTreeMap<usize, Scalar> = BTreeMap::new();
        if let (true, Some(g)) = (self.track, gen) {
            combo.insert(g, Scalar::ONE);
        }
        while let Some((&r, c)) = w.iter().next() {
            let k = self.pivot_at[r];
            if k == NONE {
                break;
            }
            let c = c.clone();
            for (i, x) in &self.pivots[k].vec {
                sub_scaled(&mut w, *i, &c, x);
            }
            if self.track {
                for (g, y) in &self.pivots[k].combo {
                    sub_scaled(&mut combo, *g, &c, y);
                }
            }
        }
        (w, combo)
    }

    pub fn insert(&mut self, v: &SparseVec) -> Insertion {
        assert!(v.last().map_or(true, |e| e.0 < self.dim), "vector longer than ambient dimension");
        let gen = self.generators;
        self.generators += 1;
        let (w, combo) = self.reduce(v, Some(gen));
        match w.iter().next() {
            None => Insertion::Dependent(combo.into_iter().collect()),
            Some((&r, c)) => {
                let inv = c.inv().expect("nonzero pivot");
                let vec: SparseVec = w.into_iter().map(|(i, x)| (i, &x * &inv)).collect();
                let combo: SparseVec = combo.into_iter().map(|(g, x)| (g, &x * &inv)).collect();
                let k = self.pivots.len();
                self.pivot_at[r] = k;
                self.pivots.push(Pivot { vec, combo });
                self.pivot_generators.push(gen);
                Insertion::Pivot(k)
            }
        }
    }

    /// The current pivot vectors, a basis of the span.
    pub fn basis(&self) -> Vec<SparseVec> {
        self.pivots.iter().map(|p| p.vec.clone()).collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v, None).0.is_empty()
    }

    /// Coefficients (over generator ids) expressing `v`, if it is in the span.
    /// Only generators that produced pivots appear.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.track, "express needs a tracking reducer");
        let (w, combo) = self.reduce(v, None);
        if !w.is_empty() {
            return None;
        }
        // v - sum c_k P_k = 0 was accumulated with negated signs.
        Some(combo.into_iter().map(|(g, x)| (g, -&x)).collect())
    }
}

fn sub_scaled(w: &mut BTreeMap<usize, Scalar>, i: usize, c: &Scalar, x: &Scalar) {
    let t = c * x;
    match w.get_mut(&i) {
        Some(old) => {
            let n = &*old - &t;
            if n.is_zero() {
                w.remove(&i);
            } else {
                *old = n;
            }
        }
        None => {
            w.insert(i, -&t);
        }
    }
}

pub fn rank(m: &Matrix) -> usize {
    // Insert along the shorter side.
    if m.rows() < m.cols() {
        Reducer::from_columns(&m.transpose(), false).rank()
    } else {
        Reducer::from_columns(m, false).rank()
    }
}

/// Rank of the span of the given vectors in `dim`-space.
pub fn rank_of(dim: usize, vectors: &[SparseVec]) -> usize {
    let mut r = Reducer::new(dim, false);
    for v in vectors {
        r.insert(v);
    }
    r.rank()
}

/// Basis of the kernel, as columns of a `cols x k` matrix.
pub fn kernel(m: &Matrix) -> Matrix {
    let mut r = Reducer::new(m.rows(), true);
    let mut basis = Vec::new();
    for c in m.columns() {
        if let Insertion::Dependent(combo) = r.insert(c) {
            basis.push(combo);
        }
    }
    Matrix::from_sorted_columns(m.cols(), basis)
}

/// The columns of `m` that are independent of the columns before them.
pub fn image_basis(m: &Matrix) -> Matrix {
    let r = Reducer::from_columns(m, false);
    m.select_columns(r.pivot_generators())
}

/// Some `x` with `m x = v`.
pub fn solve(m: &Matrix, v: &SparseVec) -> Option<SparseVec> {
    Reducer::from_columns(m, true).express(v)
}

pub fn inverse(m: &Matrix) -> Result<Matrix, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::DimensionMismatch(format!("inverse of a {}x{} matrix", m.rows(), m.cols())));
    }
    let r = Reducer::from_columns(m, true);
    if r.rank() < m.rows() {
        return Err(LinAlgError::Singular);
    }
    let cols = (0..m.rows()).map(|i| r.express(&vec![(i, Scalar::ONE)]).expect("full rank")).collect();
    Ok(Matrix::from_sorted_columns(m.cols(), cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_kernel_image() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&m), 2);
        let k = kernel(&m);
        assert_eq!(k.cols(), 1);
        assert!(m.mul(&k).is_zero());
        let im = image_basis(&m);
        assert_eq!(im.cols(), 2);
        assert_eq!(rank(&im), 2);
    }

    #[test]
    fn inverse_and_solve() {
        let m = Matrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
        let x = solve(&m, &vec![(0, Scalar::int(3)), (1, Scalar::int(2))]).unwrap();
        assert_eq!(m.apply(&x), vec![(0, Scalar::int(3)), (1, Scalar::int(2))]);
        let sing = Matrix::from_int_rows(&[&[1, 1], &[1, 1]]);
        assert!(matches!(inverse(&sing), Err(LinAlgError::Singular)));
    }

    #[test]
    fn pivot_rule_is_lowest_row() {
        let m = Matrix::from_int_rows(&[&[0, 1], &[3, 1], &[1, 0]]);
        let r = Reducer::from_columns(&m, false);
        // column 0 pivots on row 1, column 1 on row 0
        assert_eq!(r.pivot_at[1], 0);
        assert_eq!(r.pivot_at[0], 1);
    }
}
