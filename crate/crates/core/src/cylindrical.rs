//! The cylindrical module `A♮B(p,q) = B^{⊗(p+1)} ⊗ A^{⊗(q+1)}` of a strong
//! smash product, its diagonal, the comparison with `C(A#B)` and the total
//! mixed complex.
//!
//! Unbarred operators act on the `B` side, barred ones on the `A` side:
//! `t = flip(B^p A^{q+1}, B) ∘ (id ⊗ Θ_q)` moves `b_p` through the `a`'s to
//! the front, `t̄ = (Γ_p ⊗ id) ∘ flip(B^{p+1} A^q, A)` moves `a_q` to the
//! front of the `a`'s through the `b`'s.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use smashcyc_exact::{Matrix, Scalar};

use crate::algebra::FinDimAlgebra;
use crate::check::{compare_on, CheckOutcome, CheckReport};
use crate::cyclic::{algebra_cyclic_module, alternating_sum, connes_b, insert_unit, Family, Level, MixedComplex, ParacyclicModule};
use crate::error::{Error, Result};
use crate::homology::{cyclic_homology, CoefficientW, HomologyTable};
use crate::smash::{RMap, SmashAlgebra};
use crate::tensor::{Pipeline, TensorMap, TensorSpace};

struct Cell {
    t: Matrix,
    tbar: Matrix,
}

pub struct CylindricalModule {
    smash: SmashAlgebra,
    r: TensorMap,
    r_inv: TensorMap,
    cells: Mutex<HashMap<(usize, usize), Arc<Cell>>>,
}

impl CylindricalModule {
    pub fn new(smash: &SmashAlgebra) -> Result<Self> {
        let rmap: &RMap = smash.rmap();
        Ok(CylindricalModule {
            smash: smash.clone(),
            r: rmap.forward().clone(),
            r_inv: rmap.inverse()?.clone(),
            cells: Mutex::new(HashMap::new()),
        })
    }

    pub fn smash(&self) -> &SmashAlgebra {
        &self.smash
    }

    fn a(&self) -> &FinDimAlgebra {
        self.smash.a()
    }

    fn b(&self) -> &FinDimAlgebra {
        self.smash.b()
    }

    /// `B^{⊗(p+1)} ⊗ A^{⊗(q+1)}`.
    pub fn space(&self, p: usize, q: usize) -> TensorSpace {
        self.b().power(p + 1).concat(&self.a().power(q + 1))
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.b().dim().pow(p as u32 + 1) * self.a().dim().pow(q as u32 + 1)
    }

    /// `Θ_q: B ⊗ A^{⊗(q+1)} -> A^{⊗(q+1)} ⊗ B`.
    pub fn theta(&self, q: usize) -> TensorMap {
        let src = self.b().space().concat(&self.a().power(q + 1));
        (0..=q).fold(Pipeline::new(&src), |pl, k| pl.apply_at(&self.r, k)).finish()
    }

    /// `Γ_p: A ⊗ B^{⊗(p+1)} -> B^{⊗(p+1)} ⊗ A`.
    pub fn gamma(&self, p: usize) -> TensorMap {
        let src = self.a().space().concat(&self.b().power(p + 1));
        (0..=p).fold(Pipeline::new(&src), |pl, k| pl.apply_at(&self.r_inv, k)).finish()
    }

    fn cell(&self, p: usize, q: usize) -> Arc<Cell> {
        if let Some(c) = self.cells.lock().expect("cell cache").get(&(p, q)) {
            return c.clone();
        }
        let (a, b) = (self.a(), self.b());
        let space = self.space(p, q);
        let moved = self.theta(q).embed(&b.power(p), &TensorSpace::ground());
        let t = TensorMap::flip(&b.power(p).concat(&a.power(q + 1)), &b.space()).after(&moved);
        let front = TensorMap::flip(&b.power(p + 1).concat(&a.power(q)), &a.space());
        let tbar = self.gamma(p).embed(&TensorSpace::ground(), &a.power(q)).after(&front);
        debug_assert_eq!(t.src, space);
        let c = Arc::new(Cell { t: t.mat, tbar: tbar.mat });
        self.cells.lock().expect("cell cache").insert((p, q), c.clone());
        c
    }

    pub fn t(&self, p: usize, q: usize) -> Matrix {
        self.cell(p, q).t.clone()
    }

    pub fn tbar(&self, p: usize, q: usize) -> Matrix {
        self.cell(p, q).tbar.clone()
    }

    /// `d_i: (p,q) -> (p-1,q)`, with `d_p = d_0 t`.
    pub fn d(&self, p: usize, q: usize, i: usize) -> Matrix {
        assert!(p >= 1 && i <= p);
        if i == p {
            return self.d(p, q, 0).mul(&self.cell(p, q).t);
        }
        self.b().mult_map().at(&self.space(p, q), i).mat
    }

    /// `d̄_j: (p,q) -> (p,q-1)`, with `d̄_q = d̄_0 t̄`.
    pub fn dbar(&self, p: usize, q: usize, j: usize) -> Matrix {
        assert!(q >= 1 && j <= q);
        if j == q {
            return self.dbar(p, q, 0).mul(&self.cell(p, q).tbar);
        }
        self.a().mult_map().at(&self.space(p, q), p + 1 + j).mat
    }

    /// `s_i: (p,q) -> (p+1,q)` inserts `1_B` after `b_i`.
    pub fn s(&self, p: usize, q: usize, i: usize) -> Matrix {
        let (a, b) = (self.a(), self.b());
        insert_unit(b, b.factor(), p + 1, i + 1).kron(&Matrix::identity(a.dim().pow(q as u32 + 1)))
    }

    /// `s̄_j: (p,q) -> (p,q+1)` inserts `1_A` after `a_j`.
    pub fn sbar(&self, p: usize, q: usize, j: usize) -> Matrix {
        let (a, b) = (self.a(), self.b());
        Matrix::identity(b.dim().pow(p as u32 + 1)).kron(&insert_unit(a, a.factor(), q + 1, j + 1))
    }

    fn cmp(&self, name: String, src: (usize, usize), dst: (usize, usize), lhs: &Matrix, rhs: &Matrix) -> CheckOutcome {
        compare_on(name, &self.space(src.0, src.1), &self.space(dst.0, dst.1), lhs, rhs)
    }

    /// The row `q` fixed: a paracyclic module in `p = 0..=top`.
    pub fn row(&self, q: usize, top: usize) -> ParacyclicModule {
        let levels = (0..=top)
            .map(|p| {
                let faces = if p == 0 { vec![] } else { (0..=p).map(|i| self.d(p, q, i)).collect() };
                let degens = Some((0..=p).map(|i| self.s(p, q, i)).collect());
                Level::new(self.dim(p, q), Some(self.space(p, q)), faces, degens, self.t(p, q))
            })
            .collect();
        ParacyclicModule::from_direct(&format!("row q={q}"), levels).expect("row levels are well formed")
    }

    /// The column `p` fixed: a paracyclic module in `q = 0..=top`.
    pub fn column(&self, p: usize, top: usize) -> ParacyclicModule {
        let levels = (0..=top)
            .map(|q| {
                let faces = if q == 0 { vec![] } else { (0..=q).map(|j| self.dbar(p, q, j)).collect() };
                let degens = Some((0..=q).map(|j| self.sbar(p, q, j)).collect());
                Level::new(self.dim(p, q), Some(self.space(p, q)), faces, degens, self.tbar(p, q))
            })
            .collect();
        ParacyclicModule::from_direct(&format!("column p={p}"), levels).expect("column levels are well formed")
    }

    /// Barred/unbarred commutations and `t^{p+1} t̄^{q+1} = id` at every
    /// `(p,q) ≤ (bound,bound)`; identities leaving the grid are skipped.
    pub fn check_commutations(&self, bound: usize) -> CheckReport {
        let mut r = CheckReport::new();
        for p in 0..=bound {
            for q in 0..=bound {
                r.extend(self.check_cell(p, q, bound));
            }
        }
        r
    }

    fn check_cell(&self, p: usize, q: usize, bound: usize) -> CheckReport {
        let mut r = CheckReport::new();
        let at = format!("(p,q)=({p},{q})");
        let t = self.t(p, q);
        let tb = self.tbar(p, q);
        let id = Matrix::identity(self.dim(p, q));
        r.push(self.cmp(format!("t^(p+1) t̄^(q+1) = id at {at}"), (p, q), (p, q), &t.pow(p + 1).mul(&tb.pow(q + 1)), &id));
        r.push(self.cmp(format!("t t̄ = t̄ t at {at}"), (p, q), (p, q), &t.mul(&tb), &tb.mul(&t)));

        let mut fam = Family::new(format!("d_i d̄_j = d̄_j d_i at {at}"));
        if p >= 1 && q >= 1 {
            for i in 0..=p {
                for j in 0..=q {
                    fam.add(|| self.cmp(format!("i={i} j={j}"), (p, q), (p - 1, q - 1), &self.d(p, q - 1, i).mul(&self.dbar(p, q, j)), &self.dbar(p - 1, q, j).mul(&self.d(p, q, i))));
                }
            }
        }
        r.push(fam.finish());

        let mut fam = Family::new(format!("d_i s̄_j = s̄_j d_i at {at}"));
        if p >= 1 && q < bound {
            for i in 0..=p {
                for j in 0..=q {
                    fam.add(|| self.cmp(format!("i={i} j={j}"), (p, q), (p - 1, q + 1), &self.d(p, q + 1, i).mul(&self.sbar(p, q, j)), &self.sbar(p - 1, q, j).mul(&self.d(p, q, i))));
                }
            }
        }
        r.push(fam.finish());

        let mut fam = Family::new(format!("s_i d̄_j = d̄_j s_i at {at}"));
        if q >= 1 && p < bound {
            for i in 0..=p {
                for j in 0..=q {
                    fam.add(|| self.cmp(format!("i={i} j={j}"), (p, q), (p + 1, q - 1), &self.s(p, q - 1, i).mul(&self.dbar(p, q, j)), &self.dbar(p + 1, q, j).mul(&self.s(p, q, i))));
                }
            }
        }
        r.push(fam.finish());

        let mut fam = Family::new(format!("s_i s̄_j = s̄_j s_i at {at}"));
        for i in 0..=p {
            for j in 0..=q {
                fam.add(|| self.cmp(format!("i={i} j={j}"), (p, q), (p + 1, q + 1), &self.s(p, q + 1, i).mul(&self.sbar(p, q, j)), &self.sbar(p + 1, q, j).mul(&self.s(p, q, i))));
            }
        }
        r.push(fam.finish());

        let mut fam = Family::new(format!("t commutes with d̄_j, s̄_j at {at}"));
        if q >= 1 {
            let tl = self.t(p, q - 1);
            for j in 0..=q {
                fam.add(|| self.cmp(format!("d̄_{j}"), (p, q), (p, q - 1), &self.dbar(p, q, j).mul(&t), &tl.mul(&self.dbar(p, q, j))));
            }
        }
        if q < bound {
            let tu = self.t(p, q + 1);
            for j in 0..=q {
                fam.add(|| self.cmp(format!("s̄_{j}"), (p, q), (p, q + 1), &self.sbar(p, q, j).mul(&t), &tu.mul(&self.sbar(p, q, j))));
            }
        }
        r.push(fam.finish());

        let mut fam = Family::new(format!("t̄ commutes with d_i, s_i at {at}"));
        if p >= 1 {
            let tl = self.tbar(p - 1, q);
            for i in 0..=p {
                fam.add(|| self.cmp(format!("d_{i}"), (p, q), (p - 1, q), &self.d(p, q, i).mul(&tb), &tl.mul(&self.d(p, q, i))));
            }
        }
        if p < bound {
            let tu = self.tbar(p + 1, q);
            for i in 0..=p {
                fam.add(|| self.cmp(format!("s_{i}"), (p, q), (p + 1, q), &self.s(p, q, i).mul(&tb), &tu.mul(&self.s(p, q, i))));
            }
        }
        r.push(fam.finish());
        r
    }

    /// Full certification on the grid `(p,q) ≤ (bound,bound)`: every row and
    /// column paracyclic, all commutations and the cylindrical condition.
    pub fn certify(&self, bound: usize) -> CheckReport {
        let mut r = CheckReport::new();
        for k in 0..=bound {
            r.extend(self.row(k, bound).check_paracyclic());
            r.extend(self.column(k, bound).check_paracyclic());
        }
        r.extend(self.check_commutations(bound));
        r
    }

    /// `Δ_n = A♮B(n,n)` with `d_i = d̄_i d_i`, `s_j = s̄_j s_j`, `t = t t̄`,
    /// on levels `0..=top`.
    pub fn diagonal(&self, top: usize) -> ParacyclicModule {
        let levels = (0..=top)
            .map(|n| {
                let faces = if n == 0 { vec![] } else { (0..=n).map(|i| self.dbar(n - 1, n, i).mul(&self.d(n, n, i))).collect() };
                let degens = Some((0..=n).map(|j| self.sbar(n + 1, n, j).mul(&self.s(n, n, j))).collect());
                Level::new(self.dim(n, n), Some(self.space(n, n)), faces, degens, self.t(n, n).mul(&self.tbar(n, n)))
            })
            .collect();
        ParacyclicModule::from_direct(&format!("Δ({})", self.smash.name()), levels).expect("diagonal levels are well formed")
    }

    /// `Φ_n: Δ_n -> C_n(A#B)`, interleaving `(b_0..b_n|a_0..a_n)` into
    /// `(a_0 b_0, .., a_n b_n)` with `R`.
    pub fn phi(&self, n: usize) -> TensorMap {
        let mut pl = Pipeline::new(&self.space(n, n));
        for j in 0..=n {
            for pos in (2 * j + 1..=n + 1 + j).rev() {
                pl = pl.apply_at(&self.r, pos - 1);
            }
        }
        pl.finish()
    }

    /// `Ψ_n: C_n(A#B) -> Δ_n`, built from `R⁻¹` independently of `Φ_n`.
    pub fn psi(&self, n: usize) -> TensorMap {
        let src = (0..=n).fold(TensorSpace::ground(), |s, _| s.concat(&self.a().space()).concat(&self.b().space()));
        let mut pl = Pipeline::new(&src);
        for k in 0..=n {
            for m in 0..=n - k {
                pl = pl.apply_at(&self.r_inv, k + 2 * m);
            }
        }
        pl.finish()
    }

    /// `ΦΨ = id`, `ΨΦ = id` and `Φ` intertwining faces, degeneracies and
    /// `t` of `Δ` with those of `C(A#B)`, for `n ≤ top`.
    pub fn check_comparison(&self, top: usize) -> CheckReport {
        let mut r = CheckReport::new();
        let delta = self.diagonal(top + 1);
        let c = algebra_cyclic_module(self.smash.algebra(), top + 1);
        let phis: Vec<Matrix> = (0..=top + 1).map(|n| self.phi(n).mat).collect();
        for n in 0..=top {
            let (phi, psi) = (self.phi(n), self.psi(n));
            let id = Matrix::identity(self.dim(n, n));
            r.push(compare_on(format!("ΨΦ = id, n={n}"), &phi.src, &phi.src, &psi.mat.mul(&phi.mat), &id));
            r.push(compare_on(format!("ΦΨ = id, n={n}"), &psi.src, &psi.src, &phi.mat.mul(&psi.mat), &id));
            let sp = self.space(n, n);
            let cs = c.level(n).space.clone().expect("tensor levels");
            r.push(compare_on(format!("Φt = tΦ, n={n}"), &sp, &cs, &phis[n].mul(delta.t(n)), &c.t(n).mul(&phis[n])));
            let mut fam = Family::new(format!("Φ d_i = d_i Φ, n={n}"));
            for i in 0..delta.level(n).faces.len() {
                fam.add(|| compare_on(format!("i={i}"), &sp, &c.level(n - 1).space.clone().unwrap(), &phis[n - 1].mul(delta.face(n, i)), &c.face(n, i).mul(&phis[n])));
            }
            r.push(fam.finish());
            let mut fam = Family::new(format!("Φ s_j = s_j Φ, n={n}"));
            for j in 0..=n {
                fam.add(|| {
                    compare_on(format!("j={j}"), &sp, &c.level(n + 1).space.clone().unwrap(), &phis[n + 1].mul(delta.degen(n, j).unwrap()), &c.degen(n, j).unwrap().mul(&phis[n]))
                });
            }
            r.push(fam.finish());
        }
        r
    }

    /// `B` of row `q` at `(p,q) -> (p+1,q)`.
    pub fn row_big_b(&self, p: usize, q: usize) -> Matrix {
        connes_b(&self.t(p, q), &self.s(p, q, p), &self.t(p + 1, q), p)
    }

    /// `B̄` of column `p` at `(p,q) -> (p,q+1)`.
    pub fn column_big_b(&self, p: usize, q: usize) -> Matrix {
        connes_b(&self.tbar(p, q), &self.sbar(p, q, q), &self.tbar(p, q + 1), q)
    }

    pub fn row_b(&self, p: usize, q: usize) -> Matrix {
        if p == 0 {
            return Matrix::zeros(0, self.dim(0, q));
        }
        alternating_sum(self.dim(p - 1, q), self.dim(p, q), &(0..=p).map(|i| self.d(p, q, i)).collect::<Vec<_>>())
    }

    pub fn column_b(&self, p: usize, q: usize) -> Matrix {
        if q == 0 {
            return Matrix::zeros(0, self.dim(p, 0));
        }
        alternating_sum(self.dim(p, q - 1), self.dim(p, q), &(0..=q).map(|j| self.dbar(p, q, j)).collect::<Vec<_>>())
    }

    /// `b̄B = Bb̄` and `B̄b = bB̄` as unsigned operators; with the sign
    /// `(-1)^p` on `b̄` these become the anticommutations of the total complex.
    pub fn check_cross_relations(&self, bound: usize) -> CheckReport {
        let mut r = CheckReport::new();
        for p in 0..bound {
            for q in 1..=bound {
                let lhs = self.column_b(p + 1, q).mul(&self.row_big_b(p, q));
                let rhs = self.row_big_b(p, q - 1).mul(&self.column_b(p, q));
                r.push(self.cmp(format!("b̄B = Bb̄ at ({p},{q})"), (p, q), (p + 1, q - 1), &lhs, &rhs));
            }
        }
        for p in 1..=bound {
            for q in 0..bound {
                let lhs = self.row_b(p, q + 1).mul(&self.column_big_b(p, q));
                let rhs = self.column_big_b(p - 1, q).mul(&self.row_b(p, q));
                r.push(self.cmp(format!("bB̄ = B̄b at ({p},{q})"), (p, q), (p - 1, q + 1), &lhs, &rhs));
            }
        }
        r
    }

    /// `Tot_n = ⊕_{p+q=n} A♮B(p,q)` (blocks ordered by `p`) with
    /// `𝕓 = b + (-1)^p b̄` and `𝔹 = B + (-1)^p T B̄`, `T = t^{p+1}` on
    /// `(p,q+1)`, on degrees `0..=top`.
    pub fn total_mixed(&self, top: usize) -> MixedComplex {
        let sizes = |n: usize| (0..=n).map(|p| self.dim(p, n - p)).collect::<Vec<_>>();
        let dims = (0..=top).map(|n| sizes(n).iter().sum()).collect();
        let mut b = vec![Matrix::zeros(0, self.dim(0, 0))];
        for n in 1..=top {
            let mut blocks = Vec::new();
            for p in 0..=n {
                let q = n - p;
                if p >= 1 {
                    blocks.push((p - 1, p, self.row_b(p, q)));
                }
                if q >= 1 {
                    blocks.push((p, p, self.column_b(p, q).scale(&Scalar::sign(p))));
                }
            }
            let refs: Vec<_> = blocks.iter().map(|(i, j, m)| (*i, *j, m)).collect();
            b.push(Matrix::from_blocks(&sizes(n - 1), &sizes(n), &refs));
        }
        let mut big_b = Vec::new();
        for n in 0..top {
            let mut blocks = Vec::new();
            for p in 0..=n {
                let q = n - p;
                blocks.push((p + 1, p, self.row_big_b(p, q)));
                let tt = self.t(p, q + 1).pow(p + 1);
                blocks.push((p, p, tt.mul(&self.column_big_b(p, q)).scale(&Scalar::sign(p))));
            }
            let refs: Vec<_> = blocks.iter().map(|(i, j, m)| (*i, *j, m)).collect();
            big_b.push(Matrix::from_blocks(&sizes(n + 1), &sizes(n), &refs));
        }
        MixedComplex { name: format!("Tot({})", self.smash.name()), dims, b, big_b }
    }
}

impl CylindricalModule {
    /// Degenerate elements of `(p,q)`: images of `s_i` (`i < p`) and `s̄_j` (`j < q`).
    pub fn degenerate_subspace(&self, p: usize, q: usize) -> Matrix {
        let mut parts: Vec<Matrix> = (0..p).map(|i| self.s(p - 1, q, i)).collect();
        parts.extend((0..q).map(|j| self.sbar(p, q - 1, j)));
        if parts.is_empty() {
            return Matrix::zeros(self.dim(p, q), 0);
        }
        Matrix::hstack(&parts.iter().collect::<Vec<_>>())
    }

    /// The total complex on chains normalized in both directions. Upstairs
    /// `𝔹²` only vanishes modulo degenerate elements.
    pub fn total_mixed_normalized(&self, top: usize) -> Result<MixedComplex> {
        let tot = self.total_mixed(top);
        let degenerate: Vec<Matrix> = (0..=top)
            .map(|n| {
                let parts: Vec<Matrix> = (0..=n).map(|p| self.degenerate_subspace(p, n - p)).collect();
                let rows: Vec<usize> = (0..=n).map(|p| self.dim(p, n - p)).collect();
                let cols: Vec<usize> = parts.iter().map(|m| m.cols()).collect();
                let blocks: Vec<_> = parts.iter().enumerate().map(|(p, m)| (p, p, m)).collect();
                Matrix::from_blocks(&rows, &cols, &blocks)
            })
            .collect();
        tot.normalized(&degenerate)
    }
}

/// Builds the cylindrical module and certifies it on the grid.
pub fn build_cylindrical(smash: &SmashAlgebra, bound: usize) -> Result<CylindricalModule> {
    let cyl = CylindricalModule::new(smash)?;
    let rep = cyl.certify(bound);
    if let Some(f) = rep.first_failure() {
        return Err(Error::AxiomViolation(format!("{}: {} {:?}", smash.name(), f.name, f.witness)));
    }
    Ok(cyl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use smashcyc_exact::Scalar;

    fn p1() -> CylindricalModule {
        CylindricalModule::new(&presets::pareigis_surrogate(1).unwrap()).unwrap()
    }

    #[test]
    fn theta_moves_b_through_with_signs() {
        let c = p1();
        // D = span{1, s}, K2 = span{1, t}
        let th = c.theta(1);
        let tss = th.src.encode(&[1, 1, 1]);
        assert_eq!(th.apply(&vec![(tss, Scalar::ONE)]), vec![(th.dst.encode(&[1, 1, 1]), Scalar::ONE)]);
        let ts = c.theta(0).src.encode(&[1, 1]);
        assert_eq!(c.theta(0).apply(&vec![(ts, Scalar::ONE)]), vec![(c.theta(0).dst.encode(&[1, 1]), Scalar::int(-1))]);
    }

    #[test]
    fn low_levels_are_trivial() {
        let c = p1();
        assert!(c.t(0, 0).mul(&c.tbar(0, 0)).is_identity());
        let x = c.t(1, 1).mul(&c.tbar(1, 1));
        assert!(x.mul(&x).is_identity());
        assert_eq!(c.phi(0).mat, c.smash().rmap().forward().mat);
    }

    #[test]
    fn tbar_at_origin_is_r_inverse() {
        let c = p1();
        let inv = c.smash().rmap().inverse().unwrap();
        let flip = TensorMap::flip(&c.b().space(), &c.a().space());
        assert_eq!(c.tbar(0, 0), inv.after(&flip).mat);
    }

    #[test]
    fn certifies_small_grid() {
        let c = p1();
        let rep = c.certify(2);
        assert!(rep.passed(), "{:?}", rep.first_failure());
        assert!(c.check_cross_relations(2).passed());
        let row = c.row(0, 2);
        assert!(!row.is_cyclic());
        assert!(row.check_connes_relations().passed());
    }

    #[test]
    fn diagonal_matches_smash_cyclic_module() {
        let c = p1();
        assert!(c.diagonal(2).check_cyclic().passed());
        let rep = c.check_comparison(1);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn total_complex_is_mixed() {
        let c = p1();
        let tot = c.total_mixed(3);
        assert_eq!(tot.dims[0], 4);
        let rep = tot.check_anticommutation();
        assert!(rep.passed(), "{:?}", rep.first_failure());
        assert!(!tot.check().passed());
        let norm = c.total_mixed_normalized(3).unwrap();
        let rep = norm.check();
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }
}

/// `HH` or `HC` of `A#_R B` computed three ways: from the algebra itself,
/// from the diagonal of `A♮B`, and from the normalized total complex.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Routes {
    pub direct: HomologyTable,
    pub diagonal: HomologyTable,
    pub total: HomologyTable,
}

impl Routes {
    pub fn agree(&self) -> bool {
        self.direct.agrees_with(&self.diagonal) && self.direct.agrees_with(&self.total)
    }

    pub fn outcome(&self, name: &str) -> CheckOutcome {
        CheckOutcome::from_bool(name, self.agree()).with_note(format!(
            "direct {:?}, diagonal {:?}, total {:?}",
            self.direct.unflagged(),
            self.diagonal.unflagged(),
            self.total.unflagged()
        ))
    }
}

/// Levels `0..=top`; degree `top` is flagged in each table.
pub fn homology_routes(cyl: &CylindricalModule, w: CoefficientW, top: usize, workers: usize) -> Result<Routes> {
    let direct = algebra_cyclic_module(cyl.smash().algebra(), top).mixed_complex();
    let diag = cyl.diagonal(top).mixed_complex();
    let tot = cyl.total_mixed_normalized(top)?;
    Ok(Routes {
        direct: cyclic_homology(&direct, w, workers)?,
        diagonal: cyclic_homology(&diag, w, workers)?,
        total: cyclic_homology(&tot, w, workers)?,
    })
}

#[cfg(test)]
mod route_tests {
    use super::*;
    use crate::presets;

    pub(super) fn routes(smash: &SmashAlgebra, top: usize) {
        let c = CylindricalModule::new(smash).unwrap();
        for w in [CoefficientW::Hochschild, CoefficientW::Cyclic] {
            let r = homology_routes(&c, w, top, 1).unwrap();
            assert!(r.agree(), "{:?}", r.outcome("routes").note);
        }
    }

    #[test]
    fn three_routes_agree_for_surrogate() {
        routes(&presets::pareigis_surrogate(1).unwrap(), 3);
    }
}

#[cfg(test)]
mod route_tests_big {
    #[test]
    fn three_routes_agree_for_module_algebra() {
        super::route_tests::routes(&crate::presets::taft_module_algebra(2).unwrap(), 3);
    }
}
