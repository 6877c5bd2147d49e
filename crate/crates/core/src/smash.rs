//! R-maps `R: B⊗A -> A⊗B` and the smash product algebras they define.
//!
//! The product on `A⊗B` is `(a⊗b)(a'⊗b') = a R(b⊗a') b'`, that is
//! `(m_A⊗m_B)∘(id⊗R⊗id)`.

use smashcyc_exact::{inverse, Matrix};

use crate::algebra::{product_labels, FinDimAlgebra};
use crate::check::{compare_maps, CheckOutcome, CheckReport};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::tensor::{Factor, Pipeline, TensorMap, TensorSpace};

#[derive(Clone, Debug, PartialEq)]
pub struct RMap {
    a: FinDimAlgebra,
    b: FinDimAlgebra,
    forward: TensorMap,
    inverse: Option<TensorMap>,
}

/// `U⊗V -> V⊗U` on single factors.
pub fn swap(u: &Factor, v: &Factor) -> TensorMap {
    TensorMap::flip(&TensorSpace::single(u), &TensorSpace::single(v))
}

impl RMap {
    /// `mat` is the matrix of `R: B⊗A -> A⊗B`. The inverse is computed by
    /// elimination and cached; a singular `R` is accepted here and reported
    /// by [`RMap::check`].
    pub fn new(a: &FinDimAlgebra, b: &FinDimAlgebra, mat: Matrix) -> Result<Self> {
        let src = TensorSpace::new(vec![b.factor().clone(), a.factor().clone()]);
        let dst = TensorSpace::new(vec![a.factor().clone(), b.factor().clone()]);
        if (mat.rows(), mat.cols()) != (dst.dim(), src.dim()) {
            return Err(Error::InvalidStructure(format!("R has shape {}x{}, expected {}x{}", mat.rows(), mat.cols(), dst.dim(), src.dim())));
        }
        let inverse = inverse(&mat).ok().map(|m| TensorMap::new(dst.clone(), src.clone(), m));
        Ok(RMap { a: a.clone(), b: b.clone(), forward: TensorMap::new(src, dst, mat), inverse })
    }

    /// Uses a separately computed inverse, which must be a two-sided inverse.
    pub fn with_inverse(a: &FinDimAlgebra, b: &FinDimAlgebra, forward: TensorMap, inv: TensorMap) -> Result<Self> {
        let ok = forward.src == inv.dst && forward.dst == inv.src;
        if !ok || !forward.after(&inv).mat.is_identity() || !inv.after(&forward).mat.is_identity() {
            return Err(Error::NotInvertible("supplied inverse of R is not a two-sided inverse".into()));
        }
        Ok(RMap { a: a.clone(), b: b.clone(), forward, inverse: Some(inv) })
    }

    /// The flip `b⊗a -> a⊗b`; its smash product is the tensor product algebra.
    pub fn flip(a: &FinDimAlgebra, b: &FinDimAlgebra) -> Self {
        let f = swap(b.factor(), a.factor());
        let g = swap(a.factor(), b.factor());
        RMap { a: a.clone(), b: b.clone(), forward: f, inverse: Some(g) }
    }

    pub fn a(&self) -> &FinDimAlgebra {
        &self.a
    }

    pub fn b(&self) -> &FinDimAlgebra {
        &self.b
    }

    pub fn forward(&self) -> &TensorMap {
        &self.forward
    }

    pub fn inverse(&self) -> Result<&TensorMap> {
        self.inverse.as_ref().ok_or_else(|| Error::NotInvertible(format!("R: {}⊗{} -> {}⊗{}", self.b.name(), self.a.name(), self.a.name(), self.b.name())))
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse.is_some()
    }

    /// The same map with the matrix replaced, for building corrupted variants.
    pub fn with_matrix(&self, mat: Matrix) -> Result<Self> {
        Self::new(&self.a, &self.b, mat)
    }

    /// `R⁻¹: A⊗B -> B⊗A` as an R-map for the swapped pair.
    pub fn invert(&self) -> Result<RMap> {
        let inv = self.inverse()?.clone();
        Ok(RMap { a: self.b.clone(), b: self.a.clone(), forward: inv, inverse: Some(self.forward.clone()) })
    }

    fn label(&self) -> String {
        format!("R[{}⊗{}]", self.b.name(), self.a.name())
    }

    /// Quasitriangularity, normality and invertibility.
    pub fn check(&self) -> CheckReport {
        let (a, b) = (&self.a, &self.b);
        let r = &self.forward;
        let l = self.label();
        let mut rep = CheckReport::new();
        let ida = TensorMap::identity(&a.space());
        let idb = TensorMap::identity(&b.space());
        // R(m_B⊗id) = (id⊗m_B) R12 R23 on B⊗B⊗A
        let bba = TensorSpace::new(vec![b.factor().clone(), b.factor().clone(), a.factor().clone()]);
        let rhs = Pipeline::new(&bba).apply_at(r, 1).apply_at(r, 0).apply_at(&b.mult_map(), 1).finish();
        rep.push(compare_maps(format!("{l}: compatible with m_B"), &r.after(&b.mult_map().tensor(&ida)), &rhs));
        // R(id⊗m_A) = (m_A⊗id) R23 R12 on B⊗A⊗A
        let baa = TensorSpace::new(vec![b.factor().clone(), a.factor().clone(), a.factor().clone()]);
        let rhs = Pipeline::new(&baa).apply_at(r, 0).apply_at(r, 1).apply_at(&a.mult_map(), 0).finish();
        rep.push(compare_maps(format!("{l}: compatible with m_A"), &r.after(&idb.tensor(&a.mult_map())), &rhs));
        rep.push(compare_maps(format!("{l}: normal in B"), &r.after(&b.unit_map().tensor(&ida)), &ida.tensor(&b.unit_map())));
        rep.push(compare_maps(format!("{l}: normal in A"), &r.after(&idb.tensor(&a.unit_map())), &a.unit_map().tensor(&idb)));
        rep.push(CheckOutcome::from_bool(format!("{l}: invertible"), self.inverse.is_some()));
        rep
    }

    /// The flip/braid relations mixing one R^{±1} with flips, against a third
    /// factor taken from each of `A` and `B`.
    pub fn check_flip_braid(&self) -> CheckReport {
        let mut rep = CheckReport::new();
        let mut ops = vec![("R", self.forward.clone())];
        if let Some(inv) = &self.inverse {
            ops.push(("R^-1", inv.clone()));
            // R R⁻¹ = id and R⁻¹ R = id
            rep.push(compare_maps(format!("{}: R∘R^-1 = id", self.label()), &self.forward.after(inv), &TensorMap::identity(&inv.src)));
            rep.push(compare_maps(format!("{}: R^-1∘R = id", self.label()), &inv.after(&self.forward), &TensorMap::identity(&self.forward.src)));
        }
        for (name, op) in &ops {
            let (u, v) = (&op.src.factors()[0], &op.src.factors()[1]);
            for x in [self.a.factor(), self.b.factor()] {
                let l = format!("{}: {name} with third factor {}", self.label(), x.name);
                let sp = TensorSpace::new(vec![u.clone(), v.clone(), x.clone()]);
                let lhs = Pipeline::new(&sp).apply_at(op, 0).apply_at(&swap(u, x), 1).apply_at(&swap(v, x), 0).finish();
                let rhs = Pipeline::new(&sp).apply_at(&swap(v, x), 1).apply_at(&swap(u, x), 0).apply_at(op, 1).finish();
                rep.push(compare_maps(format!("{l}: f12 f23 R12 = R23 f12 f23"), &lhs, &rhs));
                let sp = TensorSpace::new(vec![u.clone(), x.clone(), v.clone()]);
                let lhs = Pipeline::new(&sp).apply_at(&swap(u, x), 0).apply_at(op, 1).apply_at(&swap(x, v), 0).finish();
                let rhs = Pipeline::new(&sp).apply_at(&swap(x, v), 1).apply_at(op, 0).apply_at(&swap(u, x), 1).finish();
                rep.push(compare_maps(format!("{l}: f12 R23 f12 = f23 R12 f23"), &lhs, &rhs));
                let sp = TensorSpace::new(vec![x.clone(), u.clone(), v.clone()]);
                let lhs = Pipeline::new(&sp).apply_at(&swap(x, u), 0).apply_at(&swap(x, v), 1).apply_at(op, 0).finish();
                let rhs = Pipeline::new(&sp).apply_at(op, 1).apply_at(&swap(x, v), 0).apply_at(&swap(x, u), 1).finish();
                rep.push(compare_maps(format!("{l}: R12 f23 f12 = f23 f12 R23"), &lhs, &rhs));
            }
        }
        rep
    }
}

/// `A#_R B`.
#[derive(Clone, Debug, PartialEq)]
pub struct SmashAlgebra {
    rmap: RMap,
    algebra: FinDimAlgebra,
}

impl SmashAlgebra {
    /// Requires every R-map axiom to hold.
    pub fn build(rmap: RMap) -> Result<Self> {
        let rep = rmap.check();
        if let Some(f) = rep.first_failure() {
            return Err(Error::AxiomViolation(format!("{} (witness {:?})", f.name, f.witness.as_ref().map(|w| &w.input))));
        }
        let s = Self::build_unchecked(rmap)?;
        s.algebra.validate()?;
        Ok(s)
    }

    /// Skips the R-map checks; the product may then fail to be associative.
    pub fn build_unchecked(rmap: RMap) -> Result<Self> {
        let (a, b) = (&rmap.a, &rmap.b);
        let mid = rmap.forward.embed(&a.space(), &b.space());
        let mult = a.mult().kron(b.mult()).mul(&mid.mat);
        let unit = crate::algebra::kron_vec(a.unit(), b.unit(), b.dim());
        let name = format!("{}#{}", a.name(), b.name());
        let algebra = FinDimAlgebra::new_unchecked(&name, product_labels(a.labels(), b.labels()), unit, mult)?;
        Ok(SmashAlgebra { rmap, algebra })
    }

    pub fn rmap(&self) -> &RMap {
        &self.rmap
    }

    pub fn a(&self) -> &FinDimAlgebra {
        &self.rmap.a
    }

    pub fn b(&self) -> &FinDimAlgebra {
        &self.rmap.b
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.algebra
    }

    pub fn name(&self) -> &str {
        self.algebra.name()
    }

    /// `a ↦ a⊗1` and `b ↦ 1⊗b` are algebra maps.
    pub fn check_embeddings(&self) -> CheckReport {
        let (a, b) = (self.a(), self.b());
        let ia = TensorMap::identity(&a.space()).tensor(&b.unit_map()).mat;
        let ib = a.unit_map().tensor(&TensorMap::identity(&b.space())).mat;
        let mut r = a.check_algebra_map(&self.algebra, &ia, false);
        r.extend(b.check_algebra_map(&self.algebra, &ib, false));
        r
    }
}

/// Module-algebra axioms for `act: H⊗A -> A`.
pub fn check_module_algebra(h: &HopfAlgebra, a: &FinDimAlgebra, act: &TensorMap) -> CheckReport {
    let ha = h.algebra();
    let mut r = CheckReport::new();
    let n = format!("{} acting on {}", ha.name(), a.name());
    let ida = TensorMap::identity(&a.space());
    let idh = TensorMap::identity(&ha.space());
    r.push(compare_maps(format!("{n}: (hg).a = h.(g.a)"), &act.after(&ha.mult_map().tensor(&ida)), &act.after(&idh.tensor(act))));
    r.push(compare_maps(format!("{n}: 1.a = a"), &act.after(&ha.unit_map().tensor(&ida)), &ida));
    let haa = TensorSpace::new(vec![ha.factor().clone(), a.factor().clone(), a.factor().clone()]);
    let rhs = Pipeline::new(&haa)
        .apply_at(&h.delta_map(), 0)
        .permute(&[0, 2, 1, 3])
        .apply_at(act, 0)
        .apply_at(act, 1)
        .apply_at(&a.mult_map(), 0)
        .finish();
    r.push(compare_maps(format!("{n}: h.(aa') = (h1.a)(h2.a')"), &act.after(&idh.tensor(&a.mult_map())), &rhs));
    r.push(compare_maps(format!("{n}: h.1 = ε(h)1"), &act.after(&idh.tensor(&a.unit_map())), &a.unit_map().after(&h.eps_map())));
    r
}

/// The R-map of the crossed product `A⋊H`: `R(h⊗a) = h1.a ⊗ h2`, with the
/// inverse `a⊗h ↦ h2 ⊗ S⁻¹(h1).a` built independently and cross-checked.
pub fn crossed_product_rmap(h: &HopfAlgebra, a: &FinDimAlgebra, act: &Matrix) -> Result<RMap> {
    let ha = h.algebra();
    let src = TensorSpace::new(vec![ha.factor().clone(), a.factor().clone()]);
    if (act.rows(), act.cols()) != (a.dim(), src.dim()) {
        return Err(Error::InvalidStructure(format!("action has shape {}x{}, expected {}x{}", act.rows(), act.cols(), a.dim(), src.dim())));
    }
    let act = TensorMap::new(src.clone(), a.space(), act.clone());
    let rep = check_module_algebra(h, a, &act);
    if let Some(f) = rep.first_failure() {
        return Err(Error::NotModuleAlgebra(format!("{} (witness {:?})", f.name, f.witness.as_ref().map(|w| &w.input))));
    }
    let fwd = Pipeline::new(&src).apply_at(&h.delta_map(), 0).permute(&[0, 2, 1]).apply_at(&act, 0).finish();
    let ah = TensorSpace::new(vec![a.factor().clone(), ha.factor().clone()]);
    let inv = Pipeline::new(&ah)
        .apply_at(&h.delta_map(), 1)
        .apply_at(&h.antipode_inv_map(), 1)
        .permute(&[2, 1, 0])
        .apply_at(&act, 1)
        .finish();
    RMap::with_inverse(a, ha, fwd, inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis_vec;
    use smashcyc_exact::Scalar;

    fn dual_numbers() -> FinDimAlgebra {
        FinDimAlgebra::from_rule("D", vec!["1".into(), "s".into()], basis_vec(0), |i, j| if i + j < 2 { basis_vec(i + j) } else { vec![] }).unwrap()
    }

    fn sign_r(a: &FinDimAlgebra, t: &FinDimAlgebra, c: i64) -> RMap {
        // R(t^r⊗s^e) = c^{re} s^e⊗t^r
        let m = Matrix::from_fn(4, 4, |col| {
            let (r, e) = (col / 2, col % 2);
            vec![(e * 2 + r, if r * e == 1 { Scalar::int(c) } else { Scalar::ONE })]
        });
        RMap::new(a, t, m).unwrap()
    }

    #[test]
    fn flip_is_a_valid_rmap() {
        let d = dual_numbers();
        let r = RMap::flip(&d, &d);
        assert!(r.check().passed());
        assert!(r.check_flip_braid().passed());
        assert_eq!(r.invert().unwrap().forward(), r.forward());
    }

    #[test]
    fn sign_rmap_and_its_corruption() {
        let d = dual_numbers();
        let t = HopfAlgebra::cyclic_group("T", "t", 2).unwrap();
        let r = sign_r(&d, t.algebra(), -1);
        assert!(r.check().passed());
        assert!(r.invert().unwrap().check().passed());
        let s = SmashAlgebra::build(r).unwrap();
        // (s#t)(s#1) = s R(t⊗s) = -s²⊗t = 0
        assert_eq!(s.algebra().basis_product(3, 2), &vec![]);
        assert!(s.check_embeddings().passed());
        let bad = sign_r(&d, t.algebra(), -2);
        let rep = bad.check();
        let f = rep.first_failure().unwrap();
        assert_eq!(f.witness.as_ref().unwrap().input, vec!["t", "t", "s"]);
        assert!(SmashAlgebra::build(bad).is_err());
    }

    #[test]
    fn trivial_action_gives_flip() {
        let d = dual_numbers();
        let h = HopfAlgebra::cyclic_group("T", "t", 2).unwrap();
        // h.a = ε(h) a
        let act = Matrix::from_fn(2, 4, |c| basis_vec(c % 2));
        let r = crossed_product_rmap(&h, &d, &act).unwrap();
        assert_eq!(r.forward().mat, RMap::flip(&d, h.algebra()).forward().mat);
    }

    #[test]
    fn non_module_algebra_action_is_rejected() {
        let d = dual_numbers();
        let h = HopfAlgebra::cyclic_group("T", "t", 2).unwrap();
        // t.s = 2s is not an action of an involution
        let act = Matrix::from_fn(2, 4, |c| if c == 3 { vec![(1, Scalar::int(2))] } else { basis_vec(c % 2) });
        assert!(matches!(crossed_product_rmap(&h, &d, &act), Err(Error::NotModuleAlgebra(_))));
    }
}
