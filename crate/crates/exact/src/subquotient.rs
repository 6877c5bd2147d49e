//! Subquotients `Z/B` of a coordinate space and maps induced on them.

use crate::echelon::{Insertion, Reducer};
use crate::matrix::{Matrix, SparseVec};
use crate::LinAlgError;

/// `Z/B` with `B ⊆ Z ⊆ k^n`, together with a fixed section: the columns of
/// `Z` independent modulo `B` (in generator order) represent a basis.
pub struct Subquotient {
    ambient: usize,
    reps: Matrix,
    full: Reducer,
    quot: Reducer,
    rep_slot: Vec<usize>,
}

impl Subquotient {
    /// `sub` and `quot` are given by spanning columns.
    pub fn new(sub: &Matrix, quot: &Matrix) -> Result<Self, LinAlgError> {
        let n = sub.rows();
        if quot.rows() != n {
            return Err(LinAlgError::DimensionMismatch(format!("subquotient ambient {} vs {}", n, quot.rows())));
        }
        let zred = Reducer::from_columns(sub, false);
        if let Some(j) = (0..quot.cols()).find(|&j| !zred.contains(quot.column(j))) {
            return Err(LinAlgError::NotContained { column: j });
        }
        let quot_red = Reducer::from_columns(quot, false);
        let mut full = Reducer::new(n, true);
        for c in quot.columns() {
            full.insert(c);
        }
        let mut rep_slot = vec![usize::MAX; quot.cols() + sub.cols()];
        let mut reps = Vec::new();
        for (j, c) in sub.columns().iter().enumerate() {
            if let Insertion::Pivot(_) = full.insert(c) {
                rep_slot[quot.cols() + j] = reps.len();
                reps.push(c.clone());
            }
        }
        Ok(Subquotient { ambient: n, reps: Matrix::from_sorted_columns(n, reps), full, quot: quot_red, rep_slot })
    }

    /// `k^n / B`.
    pub fn quotient_of(n: usize, quot: &Matrix) -> Result<Self, LinAlgError> {
        Self::new(&Matrix::identity(n), quot)
    }

    /// `k^n` itself.
    pub fn whole(n: usize) -> Self {
        Self::new(&Matrix::identity(n), &Matrix::zeros(n, 0)).expect("trivial subquotient")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    /// Representatives of the chosen basis, as columns.
    pub fn reps(&self) -> &Matrix {
        &self.reps
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.full.contains(v)
    }

    /// Whether `v` lies in the subspace being divided out.
    pub fn is_trivial(&self, v: &SparseVec) -> bool {
        self.quot.contains(v)
    }

    /// Coordinates of the class of `v` in the chosen basis.
    pub fn coords(&self, v: &SparseVec) -> Result<SparseVec, LinAlgError> {
        let combo = self.full.express(v).ok_or(LinAlgError::NotInSubspace)?;
        let mut out: SparseVec =
            combo.into_iter().filter_map(|(g, c)| (self.rep_slot[g] != usize::MAX).then(|| (self.rep_slot[g], c))).collect();
        out.sort_by_key(|e| e.0);
        Ok(out)
    }
}

/// The map `src -> tgt` induced by `m`, in the chosen bases.
///
/// Fails with `NotWellDefined` if `m` does not carry `Z_src` into `Z_tgt`
/// or `B_src` into `B_tgt`.
pub fn induced_map(m: &Matrix, src: &Subquotient, tgt: &Subquotient) -> Result<Matrix, LinAlgError> {
    if m.cols() != src.ambient || m.rows() != tgt.ambient {
        return Err(LinAlgError::DimensionMismatch(format!(
            "map {}x{} between ambients {} -> {}",
            m.rows(),
            m.cols(),
            src.ambient,
            tgt.ambient
        )));
    }
    for g in src.quot_basis() {
        if !tgt.is_trivial(&m.apply(&g)) {
            return Err(LinAlgError::NotWellDefined("boundary not mapped to boundary".into()));
        }
    }
    let mut cols = Vec::with_capacity(src.dim());
    for r in src.reps.columns() {
        let img = m.apply(r);
        cols.push(tgt.coords(&img).map_err(|_| LinAlgError::NotWellDefined("cycle not mapped to cycle".into()))?);
    }
    Ok(Matrix::from_sorted_columns(tgt.dim(), cols))
}

/// Whether two maps induce the same map `src -> tgt`.
pub fn agree_on(m1: &Matrix, m2: &Matrix, src: &Subquotient, tgt: &Subquotient) -> bool {
    let d = m1.sub(m2);
    src.reps.columns().iter().all(|r| tgt.is_trivial(&d.apply(r)))
}

impl Subquotient {
    /// A basis of `B` (echelon pivots).
    pub fn quot_basis(&self) -> Vec<SparseVec> {
        self.quot.basis()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn unit(i: usize) -> SparseVec {
        vec![(i, Scalar::ONE)]
    }

    #[test]
    fn quotient_coordinates() {
        // Z = span(e0, e1), B = span(e0 + e1) in k^3.
        let z = Matrix::from_int_rows(&[&[1, 0], &[0, 1], &[0, 0]]);
        let b = Matrix::from_int_rows(&[&[1], &[1], &[0]]);
        let sq = Subquotient::new(&z, &b).unwrap();
        assert_eq!(sq.dim(), 1);
        let c0 = sq.coords(&unit(0)).unwrap();
        let c1 = sq.coords(&unit(1)).unwrap();
        assert_eq!(c0.len(), 1);
        assert_eq!(c0[0].1, -&c1[0].1);
        assert!(sq.coords(&unit(2)).is_err());
    }

    #[test]
    fn containment_is_checked() {
        let z = Matrix::from_int_rows(&[&[1], &[0]]);
        let b = Matrix::from_int_rows(&[&[0], &[1]]);
        assert!(matches!(Subquotient::new(&z, &b), Err(LinAlgError::NotContained { .. })));
    }

    #[test]
    fn induced_maps() {
        // Swap on k^2 / span(e0 - e1) is the identity.
        let b = Matrix::from_int_rows(&[&[1], &[-1]]);
        let sq = Subquotient::quotient_of(2, &b).unwrap();
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        let ind = induced_map(&swap, &sq, &sq).unwrap();
        assert!(ind.is_identity());
        assert!(agree_on(&swap, &Matrix::identity(2), &sq, &sq));
        // Projection onto e0 does not preserve B.
        let proj = Matrix::from_int_rows(&[&[1, 0], &[0, 0]]);
        assert!(matches!(induced_map(&proj, &sq, &sq), Err(LinAlgError::NotWellDefined(_))));
    }
}
