//! Matched pairs of Hopf algebras and their double crossproducts.
//!
//! Identities written in Sweedler notation are evaluated as pipelines of
//! coproducts, antipodes, permutations and the two actions.

use smashcyc_exact::Matrix;

use crate::algebra::FinDimAlgebra;
use crate::check::{compare_maps, CheckReport};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::smash::{RMap, SmashAlgebra};
use crate::tensor::{Pipeline, TensorMap, TensorSpace};

/// `(B, H)` with `▷: H⊗B -> B` and `◁: H⊗B -> H`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchedPair {
    b: HopfAlgebra,
    h: HopfAlgebra,
    left: TensorMap,
    right: TensorMap,
}

impl MatchedPair {
    pub fn new(b: HopfAlgebra, h: HopfAlgebra, left: Matrix, right: Matrix) -> Result<Self> {
        let hb = TensorSpace::new(vec![h.algebra().factor().clone(), b.algebra().factor().clone()]);
        if (left.rows(), left.cols()) != (b.dim(), hb.dim()) || (right.rows(), right.cols()) != (h.dim(), hb.dim()) {
            return Err(Error::InvalidStructure("matched pair actions have the wrong shape".into()));
        }
        let left = TensorMap::new(hb.clone(), b.algebra().space(), left);
        let right = TensorMap::new(hb, h.algebra().space(), right);
        Ok(MatchedPair { b, h, left, right })
    }

    /// `h▷b = ε(h)b`, `h◁b = ε(b)h`.
    pub fn trivial(b: HopfAlgebra, h: HopfAlgebra) -> Result<Self> {
        let hb = [h.algebra().space(), b.algebra().space()];
        let left = h.eps_map().tensor(&TensorMap::identity(&hb[1])).mat;
        let right = TensorMap::identity(&hb[0]).tensor(&b.eps_map()).mat;
        Self::new(b, h, left, right)
    }

    pub fn b(&self) -> &HopfAlgebra {
        &self.b
    }

    pub fn h(&self) -> &HopfAlgebra {
        &self.h
    }

    pub fn left(&self) -> &TensorMap {
        &self.left
    }

    pub fn right(&self) -> &TensorMap {
        &self.right
    }

    /// Replaces the right action, for building corrupted variants.
    pub fn with_right(&self, right: Matrix) -> Result<Self> {
        Self::new(self.b.clone(), self.h.clone(), self.left.mat.clone(), right)
    }

    /// Replaces the inverse antipode of `B` without touching anything else.
    pub fn with_b_antipode_inv(&self, s_inv: Matrix) -> Self {
        let mut p = self.clone();
        p.b = p.b.with_antipode_inv_unchecked(s_inv);
        p
    }

    fn sp(&self, pattern: &str) -> TensorSpace {
        TensorSpace::new(
            pattern
                .chars()
                .map(|c| if c == 'H' { self.h.algebra().factor().clone() } else { self.b.algebra().factor().clone() })
                .collect(),
        )
    }

    /// `h⊗b ↦ h1⊗b1⊗h2⊗b2`.
    fn spread(&self) -> TensorMap {
        Pipeline::new(&self.sp("HB"))
            .apply_at(&self.h.delta_map(), 0)
            .apply_at(&self.b.delta_map(), 2)
            .permute(&[0, 2, 1, 3])
            .finish()
    }

    /// `R(h⊗b) = h1▷b1 ⊗ h2◁b2`.
    pub fn r_forward(&self) -> TensorMap {
        let rest = Pipeline::new(&self.sp("HBHB")).apply_at(&self.left, 0).apply_at(&self.right, 1).finish();
        rest.after(&self.spread())
    }

    /// `r(b⊗h) = h3◁(S⁻¹(h2)▷S⁻¹(b3)) ⊗ (S⁻¹(h1)◁S⁻¹(b2))▷b1`.
    pub fn r_inverse_formula(&self) -> TensorMap {
        let (b, h) = (&self.b, &self.h);
        Pipeline::new(&self.sp("BH"))
            .apply_at(&b.delta2_map(), 0)
            .apply_at(&h.delta2_map(), 3)
            .apply_at(&b.antipode_inv_map(), 1)
            .apply_at(&b.antipode_inv_map(), 2)
            .apply_at(&h.antipode_inv_map(), 3)
            .apply_at(&h.antipode_inv_map(), 4)
            // b1 b2 b3 h1 h2 h3 -> h3 h2 b3 h1 b2 b1
            .permute(&[5, 4, 2, 3, 1, 0])
            .apply_at(&self.left, 1)
            .apply_at(&self.right, 0)
            .apply_at(&self.right, 1)
            .apply_at(&self.left, 1)
            .finish()
    }

    /// Module, module-coalgebra and matching identities.
    pub fn check(&self) -> CheckReport {
        let (b, h) = (&self.b, &self.h);
        let (lt, rt) = (&self.left, &self.right);
        let idb = TensorMap::identity(&b.algebra().space());
        let idh = TensorMap::identity(&h.algebra().space());
        let mut r = CheckReport::new();
        r.push(compare_maps("▷ is a module action", &lt.after(&h.algebra().mult_map().tensor(&idb)), &lt.after(&idh.tensor(lt))));
        r.push(compare_maps("▷ is unital", &lt.after(&h.algebra().unit_map().tensor(&idb)), &idb));
        r.push(compare_maps("◁ is a module action", &rt.after(&idh.tensor(&b.algebra().mult_map())), &rt.after(&rt.tensor(&idb))));
        r.push(compare_maps("◁ is unital", &rt.after(&idh.tensor(&b.algebra().unit_map())), &idh));
        r.push(compare_maps("▷ respects Δ", &b.delta_map().after(lt), &lt.tensor(lt).after(&self.spread())));
        r.push(compare_maps("▷ respects ε", &b.eps_map().after(lt), &h.eps_map().tensor(&b.eps_map())));
        r.push(compare_maps("◁ respects Δ", &h.delta_map().after(rt), &rt.tensor(rt).after(&self.spread())));
        r.push(compare_maps("◁ respects ε", &h.eps_map().after(rt), &h.eps_map().tensor(&b.eps_map())));
        let rr = self.r_forward();
        r.push(compare_maps("m1: h▷1 = ε(h)1", &lt.after(&idh.tensor(&b.algebra().unit_map())), &b.algebra().unit_map().after(&h.eps_map())));
        let rhs = Pipeline::new(&self.sp("HBB")).apply_at(&rr, 0).apply_at(lt, 1).apply_at(&b.algebra().mult_map(), 0).finish();
        r.push(compare_maps("m1: h▷(bc)", &lt.after(&idh.tensor(&b.algebra().mult_map())), &rhs));
        r.push(compare_maps("m2: 1◁b = ε(b)1", &rt.after(&h.algebra().unit_map().tensor(&idb)), &h.algebra().unit_map().after(&b.eps_map())));
        let rhs = Pipeline::new(&self.sp("HHB")).apply_at(&rr, 1).apply_at(rt, 0).apply_at(&h.algebra().mult_map(), 0).finish();
        r.push(compare_maps("m2: (hg)◁b", &rt.after(&h.algebra().mult_map().tensor(&idb)), &rhs));
        let both = rt.tensor(lt);
        let swap = TensorMap::flip(&self.sp("HB"), &self.sp("HB"));
        r.push(compare_maps("m3", &both.after(&self.spread()), &both.after(&swap).after(&self.spread())));
        r
    }

    /// The identities relating the actions with inverse antipodes.
    pub fn check_inverse_antipodes(&self) -> CheckReport {
        let (b, h) = (&self.b, &self.h);
        let (lt, rt) = (&self.left, &self.right);
        let mut r = CheckReport::new();
        // S_B⁻¹(h▷b) = (h◁b2)▷S_B⁻¹(b1)
        let rhs = Pipeline::new(&self.sp("HB"))
            .apply_at(&b.delta_map(), 1)
            .apply_at(&b.antipode_inv_map(), 1)
            .permute(&[0, 2, 1])
            .apply_at(rt, 0)
            .apply_at(lt, 0)
            .finish();
        r.push(compare_maps("m4", &b.antipode_inv_map().after(lt), &rhs));
        // S_H⁻¹(h◁b) = S_H⁻¹(h2)◁(h1▷b)
        let rhs = Pipeline::new(&self.sp("HB"))
            .apply_at(&h.delta_map(), 0)
            .permute(&[1, 0, 2])
            .apply_at(&h.antipode_inv_map(), 0)
            .apply_at(lt, 1)
            .apply_at(rt, 0)
            .finish();
        r.push(compare_maps("m5", &h.antipode_inv_map().after(rt), &rhs));
        r
    }
}

/// `B⋈H` as a Hopf algebra together with its R-map.
#[derive(Clone, Debug)]
pub struct DoubleCrossproduct {
    pair: MatchedPair,
    smash: SmashAlgebra,
    hopf: HopfAlgebra,
    r_formula: TensorMap,
}

impl DoubleCrossproduct {
    pub fn build(pair: MatchedPair) -> Result<Self> {
        if let Some(f) = pair.check().first_failure() {
            return Err(Error::NotMatched(format!("{} (witness {:?})", f.name, f.witness.as_ref().map(|w| &w.input))));
        }
        let (b, h) = (pair.b.algebra(), pair.h.algebra());
        let rmap = RMap::new(b, h, pair.r_forward().mat)?;
        let smash = SmashAlgebra::build(rmap)?;
        let alg = smash.algebra().renamed(&format!("{}⋈{}", b.name(), h.name()));
        let bh = pair.sp("BH");
        let delta = Pipeline::new(&bh)
            .apply_at(&pair.b.delta_map(), 0)
            .apply_at(&pair.h.delta_map(), 2)
            .permute(&[0, 2, 1, 3])
            .finish();
        let eps = pair.b.eps_map().tensor(&pair.h.eps_map());
        // S(b⊗h) = (1⊗S_H h)(S_B b⊗1)
        let x = b.unit_map().tensor(&pair.h.antipode_map());
        let y = pair.b.antipode_map().tensor(&h.unit_map());
        let s = smash
            .algebra()
            .mult()
            .mul(&x.tensor(&y).mat)
            .mul(&TensorMap::flip(&b.space(), &h.space()).mat);
        let hopf = HopfAlgebra::new(alg, delta.mat, eps.mat, s)?;
        let r_formula = pair.r_inverse_formula();
        Ok(DoubleCrossproduct { pair, smash, hopf, r_formula })
    }

    pub fn pair(&self) -> &MatchedPair {
        &self.pair
    }

    pub fn smash(&self) -> &SmashAlgebra {
        &self.smash
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        self.hopf.algebra()
    }

    /// The explicit inverse formula.
    pub fn r_formula(&self) -> &TensorMap {
        &self.r_formula
    }

    /// The explicit formula agrees with the eliminated inverse, and both
    /// compositions with `R` are identities.
    pub fn check_inverse_formula(&self) -> Result<CheckReport> {
        let r = self.smash.rmap();
        let inv = r.inverse()?;
        let f = &self.r_formula;
        let mut rep = CheckReport::new();
        rep.push(compare_maps("r∘R = id", &f.after(r.forward()), &TensorMap::identity(&r.forward().src)));
        rep.push(compare_maps("R∘r = id", &r.forward().after(f), &TensorMap::identity(&f.src)));
        rep.push(compare_maps("r equals the inverse matrix of R", f, inv));
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_pair_gives_tensor_product() {
        let b = HopfAlgebra::cyclic_group("G", "g", 3).unwrap();
        let h = HopfAlgebra::cyclic_group("K", "k", 2).unwrap();
        let p = MatchedPair::trivial(b.clone(), h.clone()).unwrap();
        assert!(p.check().passed());
        assert!(p.check_inverse_antipodes().passed());
        let d = DoubleCrossproduct::build(p).unwrap();
        assert_eq!(d.smash().rmap().forward().mat, RMap::flip(b.algebra(), h.algebra()).forward().mat);
        assert!(d.check_inverse_formula().unwrap().passed());
        assert!(d.hopf().check().passed());
    }

    #[test]
    fn corrupted_right_action_fails() {
        let b = HopfAlgebra::cyclic_group("G", "g", 2).unwrap();
        let h = HopfAlgebra::cyclic_group("K", "k", 2).unwrap();
        let p = MatchedPair::trivial(b, h).unwrap();
        let bad = p.with_right(p.right().mat.scale(&smashcyc_exact::Scalar::int(-1))).unwrap();
        let rep = bad.check();
        assert!(!rep.passed());
        assert!(matches!(DoubleCrossproduct::build(bad), Err(Error::NotMatched(_))));
    }
}
