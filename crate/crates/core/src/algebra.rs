//! Finite-dimensional unital associative algebras given by structure
//! constants.

use smashcyc_exact::{inverse, Matrix, Scalar, SparseVec};

use crate::check::{compare_maps, compare_on, CheckOutcome, CheckReport};
use crate::error::{Error, Result};
use crate::tensor::{Factor, TensorMap, TensorSpace};

/// An algebra with basis `e_0..e_{d-1}`. `mult` is the `d x d²` matrix of
/// `m: A⊗A -> A`; column `i*d + j` holds `e_i e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct FinDimAlgebra {
    factor: Factor,
    unit: SparseVec,
    mult: Matrix,
}

impl FinDimAlgebra {
    /// Builds an algebra without checking the axioms.
    pub fn new_unchecked(name: &str, labels: Vec<String>, unit: SparseVec, mult: Matrix) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::InvalidStructure(format!("{name}: algebra of dimension 0")));
        }
        if mult.rows() != d || mult.cols() != d * d {
            return Err(Error::InvalidStructure(format!(
                "{name}: multiplication is {}x{}, expected {d}x{}",
                mult.rows(),
                mult.cols(),
                d * d
            )));
        }
        if unit.last().is_some_and(|e| e.0 >= d) {
            return Err(Error::InvalidStructure(format!("{name}: unit vector longer than the basis")));
        }
        Ok(FinDimAlgebra { factor: Factor::new(name, labels), unit, mult })
    }

    /// Builds an algebra and rejects it unless it is associative and unital.
    pub fn new(name: &str, labels: Vec<String>, unit: SparseVec, mult: Matrix) -> Result<Self> {
        let a = Self::new_unchecked(name, labels, unit, mult)?;
        a.validate()?;
        Ok(a)
    }

    /// From a product rule on basis indices returning `e_i e_j`.
    pub fn from_rule(
        name: &str,
        labels: Vec<String>,
        unit: SparseVec,
        rule: impl Fn(usize, usize) -> Vec<(usize, Scalar)>,
    ) -> Result<Self> {
        let d = labels.len();
        let mult = Matrix::from_fn(d, d * d, |c| rule(c / d, c % d));
        Self::new(name, labels, unit, mult)
    }

    pub fn validate(&self) -> Result<()> {
        let report = self.check();
        match report.first_failure() {
            None => Ok(()),
            Some(f) => Err(Error::InvalidStructure(format!(
                "{}: {} fails at {:?}",
                self.name(),
                f.name,
                f.witness.as_ref().map(|w| &w.input)
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.factor.name
    }

    pub fn dim(&self) -> usize {
        self.factor.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.factor.labels
    }

    pub fn factor(&self) -> &Factor {
        &self.factor
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    /// `A^{⊗n}`.
    pub fn power(&self, n: usize) -> TensorSpace {
        TensorSpace::power(&self.factor, n)
    }

    pub fn space(&self) -> TensorSpace {
        TensorSpace::single(&self.factor)
    }

    pub fn mult_map(&self) -> TensorMap {
        TensorMap::new(self.power(2), self.space(), self.mult.clone())
    }

    /// `η: k -> A`.
    pub fn unit_map(&self) -> TensorMap {
        TensorMap::new(TensorSpace::ground(), self.space(), Matrix::from_sorted_columns(self.dim(), vec![self.unit.clone()]))
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        self.mult.column(i * self.dim() + j)
    }

    /// Index of the unit if it is a basis vector.
    pub fn unit_index(&self) -> Option<usize> {
        match self.unit.as_slice() {
            [(i, c)] if c.is_one() => Some(*i),
            _ => None,
        }
    }

    pub fn multiply(&self, u: &SparseVec, v: &SparseVec) -> Result<SparseVec> {
        let d = self.dim();
        if u.last().is_some_and(|e| e.0 >= d) || v.last().is_some_and(|e| e.0 >= d) {
            return Err(Error::InvalidStructure(format!("{}: vector longer than dimension {d}", self.name())));
        }
        let mut t = Vec::with_capacity(u.len() * v.len());
        for (i, a) in u {
            for (j, b) in v {
                t.push((i * d + j, a * b));
            }
        }
        t.sort_by_key(|e| e.0);
        Ok(self.mult.apply(&t))
    }

    /// Associativity and unitality as matrix identities.
    pub fn check(&self) -> CheckReport {
        let m = self.mult_map();
        let a = self.space();
        let id = TensorMap::identity(&a);
        let mut r = CheckReport::new();
        r.push(compare_maps(
            format!("{}: associativity", self.name()),
            &m.after(&m.tensor(&id)),
            &m.after(&id.tensor(&m)),
        ));
        let eta = self.unit_map();
        r.push(compare_maps(format!("{}: left unit", self.name()), &m.after(&eta.tensor(&id)), &id));
        r.push(compare_maps(format!("{}: right unit", self.name()), &m.after(&id.tensor(&eta)), &id));
        r
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Same space with product `a·b := ba`.
    pub fn opposite(&self, name: &str) -> FinDimAlgebra {
        let flip = TensorMap::flip(&self.space(), &self.space());
        FinDimAlgebra { factor: Factor::new(name, self.labels().to_vec()), unit: self.unit.clone(), mult: self.mult.mul(&flip.mat) }
    }

    /// Relabels the algebra without changing its structure.
    pub fn renamed(&self, name: &str) -> FinDimAlgebra {
        FinDimAlgebra { factor: Factor::new(name, self.labels().to_vec()), ..self.clone() }
    }

    /// The tensor product algebra `A⊗B` on the basis `e_i⊗f_j` with labels
    /// `a|b`.
    pub fn tensor_product(&self, other: &FinDimAlgebra, name: &str) -> FinDimAlgebra {
        let flip = TensorMap::flip(&other.space(), &self.space());
        let mid = flip.embed(&self.space(), &other.space());
        let mult = self.mult.kron(&other.mult).mul(&mid.mat);
        let labels = product_labels(self.labels(), other.labels());
        let unit = kron_vec(&self.unit, &other.unit, other.dim());
        FinDimAlgebra { factor: Factor::new(name, labels), unit, mult }
    }

    /// Checks that `f: self -> other` is a unital algebra map, and a bijection
    /// when `iso` is set.
    pub fn check_algebra_map(&self, other: &FinDimAlgebra, f: &Matrix, iso: bool) -> CheckReport {
        let mut r = CheckReport::new();
        let name = format!("{} -> {}", self.name(), other.name());
        let lhs = f.mul(&self.mult);
        let rhs = other.mult.mul(&f.kron(f));
        r.push(compare_on(format!("{name}: multiplicative"), &self.power(2), &other.space(), &lhs, &rhs));
        let unit_ok = f.apply(&self.unit) == other.unit;
        r.push(CheckOutcome::from_bool(format!("{name}: unital"), unit_ok));
        if iso {
            r.push(CheckOutcome::from_bool(format!("{name}: bijective"), f.is_square() && inverse(f).is_ok()));
        }
        r
    }
}

pub fn product_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}|{y}"))).collect()
}

/// `u ⊗ v` where `v` has length `n`.
pub fn kron_vec(u: &SparseVec, v: &SparseVec, n: usize) -> SparseVec {
    u.iter().flat_map(|(i, a)| v.iter().map(move |(j, b)| (i * n + j, a * b))).collect()
}

/// A sparse vector with one entry.
pub fn basis_vec(i: usize) -> SparseVec {
    vec![(i, Scalar::ONE)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dual_numbers() -> FinDimAlgebra {
        FinDimAlgebra::from_rule("D", vec!["1".into(), "s".into()], basis_vec(0), |i, j| {
            if i + j < 2 {
                basis_vec(i + j)
            } else {
                vec![]
            }
        })
        .unwrap()
    }

    #[test]
    fn dual_numbers_product() {
        let d = dual_numbers();
        assert_eq!(d.multiply(&basis_vec(1), &basis_vec(1)).unwrap(), vec![]);
        assert_eq!(d.multiply(&basis_vec(0), &basis_vec(1)).unwrap(), basis_vec(1));
        assert!(d.is_commutative());
        assert!(d.multiply(&basis_vec(2), &basis_vec(0)).is_err());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // e1 e1 = e0 + e1 with e0 the unit is fine; break it by making e1 e1 depend on order
        let bad = FinDimAlgebra::from_rule("X", vec!["1".into(), "a".into(), "b".into()], basis_vec(0), |i, j| match (i, j) {
            (0, k) | (k, 0) => basis_vec(k),
            (1, 1) => basis_vec(2),
            (1, 2) => basis_vec(1),
            _ => vec![],
        });
        assert!(matches!(bad, Err(Error::InvalidStructure(_))));
    }

    #[test]
    fn tensor_product_is_an_algebra() {
        let d = dual_numbers();
        let dd = d.tensor_product(&d, "DD");
        assert_eq!(dd.dim(), 4);
        assert!(dd.check().passed());
        assert_eq!(dd.labels()[3], "s|s");
    }

    #[test]
    fn identity_is_an_algebra_isomorphism() {
        let d = dual_numbers();
        assert!(d.check_algebra_map(&d, &Matrix::identity(2), true).passed());
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert!(!d.check_algebra_map(&d, &swap, true).passed());
    }
}
