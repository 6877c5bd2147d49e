//! Finite-dimensional Hopf algebras.

use smashcyc_exact::{inverse, Matrix, Scalar, SparseVec};

use crate::algebra::{basis_vec, FinDimAlgebra};
use crate::check::{compare_maps, CheckReport};
use crate::error::{Error, Result};
use crate::tensor::{Pipeline, TensorMap, TensorSpace};

#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra {
    alg: FinDimAlgebra,
    delta: Matrix,
    eps: Matrix,
    antipode: Matrix,
    antipode_inv: Matrix,
}

impl HopfAlgebra {
    /// Builds the structure; only requires the antipode to be invertible.
    pub fn new_unchecked(alg: FinDimAlgebra, delta: Matrix, eps: Matrix, antipode: Matrix) -> Result<Self> {
        let d = alg.dim();
        let shapes = [(delta.rows(), delta.cols(), d * d, d), (eps.rows(), eps.cols(), 1, d), (antipode.rows(), antipode.cols(), d, d)];
        if shapes.iter().any(|&(r, c, er, ec)| (r, c) != (er, ec)) {
            return Err(Error::InvalidStructure(format!("{}: coproduct, counit or antipode has the wrong shape", alg.name())));
        }
        let antipode_inv = inverse(&antipode).map_err(|_| Error::NotInvertible(format!("antipode of {}", alg.name())))?;
        Ok(HopfAlgebra { alg, delta, eps, antipode, antipode_inv })
    }

    pub fn new(alg: FinDimAlgebra, delta: Matrix, eps: Matrix, antipode: Matrix) -> Result<Self> {
        let h = Self::new_unchecked(alg, delta, eps, antipode)?;
        if let Some(f) = h.check().first_failure() {
            return Err(Error::InvalidStructure(format!(
                "{}: {} fails at {:?}",
                h.name(),
                f.name,
                f.witness.as_ref().map(|w| &w.input)
            )));
        }
        Ok(h)
    }

    /// The group algebra of a finite group given by its multiplication table
    /// on element indices; element 0 is the identity.
    pub fn group_algebra(name: &str, labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        let alg = FinDimAlgebra::from_rule(name, labels, basis_vec(0), |i, j| basis_vec(mul(i, j)))?;
        let inv: Vec<usize> = (0..n)
            .map(|g| (0..n).find(|&h| mul(g, h) == 0).ok_or_else(|| Error::InvalidStructure(format!("{name}: element {g} has no inverse"))))
            .collect::<Result<_>>()?;
        let delta = Matrix::from_fn(n * n, n, |g| basis_vec(g * n + g));
        let eps = Matrix::from_fn(1, n, |_| basis_vec(0));
        let antipode = Matrix::from_fn(n, n, |g| basis_vec(inv[g]));
        Self::new(alg, delta, eps, antipode)
    }

    /// `k[ℤ/n]` with generator label `gen`; basis `1, gen, gen2, ...`.
    pub fn cyclic_group(name: &str, gen: &str, n: usize) -> Result<Self> {
        Self::group_algebra(name, power_labels(gen, n), |i, j| (i + j) % n)
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.alg
    }

    pub fn name(&self) -> &str {
        self.alg.name()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn delta(&self) -> &Matrix {
        &self.delta
    }

    pub fn eps(&self) -> &Matrix {
        &self.eps
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn delta_map(&self) -> TensorMap {
        TensorMap::new(self.alg.space(), self.alg.power(2), self.delta.clone())
    }

    pub fn eps_map(&self) -> TensorMap {
        TensorMap::new(self.alg.space(), TensorSpace::ground(), self.eps.clone())
    }

    pub fn antipode_map(&self) -> TensorMap {
        TensorMap::new(self.alg.space(), self.alg.space(), self.antipode.clone())
    }

    pub fn antipode_inv_map(&self) -> TensorMap {
        TensorMap::new(self.alg.space(), self.alg.space(), self.antipode_inv.clone())
    }

    /// Replaces the cached inverse antipode, for building corrupted variants.
    pub fn with_antipode_inv_unchecked(&self, s_inv: Matrix) -> HopfAlgebra {
        HopfAlgebra { antipode_inv: s_inv, ..self.clone() }
    }

    /// `Δ^{(2)}: H -> H⊗H⊗H`.
    pub fn delta2_map(&self) -> TensorMap {
        Pipeline::new(&self.alg.space()).apply_at(&self.delta_map(), 0).apply_at(&self.delta_map(), 1).finish()
    }

    /// Coalgebra, bialgebra and antipode axioms.
    pub fn check(&self) -> CheckReport {
        let n = self.name().to_string();
        let h = self.alg.space();
        let id = TensorMap::identity(&h);
        let delta = self.delta_map();
        let eps = self.eps_map();
        let m = self.alg.mult_map();
        let eta = self.alg.unit_map();
        let mut r = CheckReport::new();
        r.push(compare_maps(format!("{n}: coassociativity"), &delta.tensor(&id).after(&delta), &id.tensor(&delta).after(&delta)));
        r.push(compare_maps(format!("{n}: left counit"), &eps.tensor(&id).after(&delta), &id));
        r.push(compare_maps(format!("{n}: right counit"), &id.tensor(&eps).after(&delta), &id));
        // Δ(xy) = Δ(x)Δ(y)
        let middle = TensorMap::flip(&h, &h).embed(&h, &h);
        let rhs = m.tensor(&m).after(&middle).after(&delta.tensor(&delta));
        r.push(compare_maps(format!("{n}: coproduct multiplicative"), &delta.after(&m), &rhs));
        r.push(compare_maps(format!("{n}: coproduct unital"), &delta.after(&eta), &eta.tensor(&eta)));
        r.push(compare_maps(format!("{n}: counit multiplicative"), &eps.after(&m), &eps.tensor(&eps)));
        r.push(compare_maps(format!("{n}: counit unital"), &eps.after(&eta), &TensorMap::identity(&TensorSpace::ground())));
        let s = self.antipode_map();
        let ee = eta.after(&eps);
        r.push(compare_maps(format!("{n}: antipode left"), &m.after(&s.tensor(&id)).after(&delta), &ee));
        r.push(compare_maps(format!("{n}: antipode right"), &m.after(&id.tensor(&s)).after(&delta), &ee));
        r.push(compare_maps(format!("{n}: antipode inverse"), &s.after(&self.antipode_inv_map()), &id));
        r
    }

    /// The dual Hopf algebra with the opposite coproduct, on the dual basis.
    pub fn dual_cop(&self, name: &str) -> Result<HopfAlgebra> {
        let d = self.dim();
        let labels = self.alg.labels().iter().map(|l| format!("{l}*")).collect();
        let unit: SparseVec = self.eps.transpose().into_columns().remove(0);
        let alg = FinDimAlgebra::new(name, labels, unit, self.delta.transpose())?;
        let space = alg.space();
        let delta = TensorMap::flip(&space, &space).mat.mul(&self.alg.mult().transpose());
        let eps = Matrix::from_sorted_columns(1, (0..d).map(|k| self.alg.unit().iter().filter(|e| e.0 == k).map(|e| (0, e.1.clone())).collect()).collect());
        Self::new(alg, delta, eps, self.antipode_inv.transpose())
    }
}

/// `1, g, g2, ...` for `n` powers of `g`.
pub fn power_labels(g: &str, n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => g.to_string(),
            _ => format!("{g}{i}"),
        })
        .collect()
}

/// A scalar multiple of a basis vector, or nothing.
pub fn term(i: usize, c: Scalar) -> SparseVec {
    if c.is_zero() {
        vec![]
    } else {
        vec![(i, c)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebra_axioms() {
        let g = HopfAlgebra::cyclic_group("K3", "g", 3).unwrap();
        assert!(g.check().passed());
        assert_eq!(g.antipode().column(1), &basis_vec(2));
    }

    #[test]
    fn dual_of_group_algebra_is_function_algebra() {
        let g = HopfAlgebra::cyclic_group("K2", "g", 2).unwrap();
        let f = g.dual_cop("K2*").unwrap();
        // pointwise product: f^i f^j = δ_ij f^i, unit = f^0 + f^1
        assert_eq!(f.algebra().basis_product(0, 0), &basis_vec(0));
        assert_eq!(f.algebra().basis_product(0, 1), &vec![]);
        assert_eq!(f.algebra().unit(), &vec![(0, Scalar::ONE), (1, Scalar::ONE)]);
        // counit is evaluation at the unit element
        assert_eq!(f.eps().column(0), &basis_vec(0));
        assert_eq!(f.eps().column(1), &vec![]);
        let ff = f.dual_cop("K2**").unwrap();
        assert_eq!(ff.dim(), 2);
        assert!(ff.check().passed());
    }

    #[test]
    fn corrupted_antipode_is_rejected() {
        let g = HopfAlgebra::cyclic_group("K3", "g", 3).unwrap();
        let bad = HopfAlgebra::new(g.algebra().clone(), g.delta().clone(), g.eps().clone(), Matrix::identity(3));
        assert!(matches!(bad, Err(Error::InvalidStructure(_))));
    }
}
