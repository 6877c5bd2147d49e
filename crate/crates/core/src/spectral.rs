//! Bimodules on the first column and bottom row of `A♮B`, Hochschild
//! homology with coefficients, coinvariant and induced cyclic modules, the
//! re-coordinatization of the rows, and the spectral sequences of the row and
//! column filtrations of `Tot(A♮B) ⊠ W`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use smashcyc_exact::{induced_map, kernel, rank, Matrix, Scalar, Subquotient};

use crate::algebra::FinDimAlgebra;
use crate::check::{compare_maps, compare_plain, CheckOutcome, CheckReport};
use crate::cyclic::{Level, ParacyclicModule};
use crate::cylindrical::CylindricalModule;
use crate::error::{Error, Result};
use crate::homology::{box_blocks, box_complex, cyclic_homology, ChainComplex, CoefficientW, HomologyTable};
use crate::tensor::{Factor, Pipeline, TensorMap, TensorSpace};

/// An `A`-bimodule `M` given by its two action matrices.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub alg: FinDimAlgebra,
    pub factor: Factor,
    /// `A ⊗ M -> M`.
    pub left: Matrix,
    /// `M ⊗ A -> M`.
    pub right: Matrix,
}

impl Bimodule {
    pub fn new(alg: &FinDimAlgebra, factor: Factor, left: Matrix, right: Matrix) -> Result<Self> {
        let (a, m) = (alg.dim(), factor.dim());
        if (left.rows(), left.cols()) != (m, a * m) || (right.rows(), right.cols()) != (m, m * a) {
            return Err(Error::InvalidStructure(format!("{}: action matrices have the wrong shape", factor.name)));
        }
        Ok(Bimodule { alg: alg.clone(), factor, left, right })
    }

    /// `A` over itself.
    pub fn regular(alg: &FinDimAlgebra) -> Self {
        Bimodule { alg: alg.clone(), factor: alg.factor().clone(), left: alg.mult().clone(), right: alg.mult().clone() }
    }

    pub fn dim(&self) -> usize {
        self.factor.dim()
    }

    fn left_map(&self) -> TensorMap {
        TensorMap::new(self.alg.space().concat(&self.space()), self.space(), self.left.clone())
    }

    fn right_map(&self) -> TensorMap {
        TensorMap::new(self.space().concat(&self.alg.space()), self.space(), self.right.clone())
    }

    fn space(&self) -> TensorSpace {
        TensorSpace::single(&self.factor)
    }

    /// Both actions associative and unital, and commuting.
    pub fn check(&self) -> CheckReport {
        let n = &self.factor.name;
        let (a, m) = (self.alg.space(), self.space());
        let (l, r) = (self.left_map(), self.right_map());
        let (ida, idm) = (TensorMap::identity(&a), TensorMap::identity(&m));
        let mult = self.alg.mult_map();
        let eta = self.alg.unit_map();
        let mut rep = CheckReport::new();
        rep.push(compare_maps(format!("{n}: left action associative"), &l.after(&ida.tensor(&l)), &l.after(&mult.tensor(&idm))));
        rep.push(compare_maps(format!("{n}: left action unital"), &l.after(&eta.tensor(&idm)), &idm));
        rep.push(compare_maps(format!("{n}: right action associative"), &r.after(&r.tensor(&ida)), &r.after(&idm.tensor(&mult))));
        rep.push(compare_maps(format!("{n}: right action unital"), &r.after(&idm.tensor(&eta)), &idm));
        rep.push(compare_maps(format!("{n}: actions commute"), &r.after(&l.tensor(&ida)), &l.after(&ida.tensor(&r))));
        rep
    }

    /// Spanning columns `a.x - x.a` of the commutator subspace.
    pub fn commutators(&self) -> Matrix {
        let swap = TensorMap::flip(&self.alg.space(), &self.space());
        self.left.sub(&self.right.mul(&swap.mat))
    }

    /// `C_q(A, M) = M ⊗ A^{⊗q}` with
    /// `d(m|a_1..a_q) = (m.a_1|..) + Σ (-1)^i (m|..a_i a_{i+1}..) + (-1)^q (a_q.m|a_1..)`.
    pub fn hochschild_complex(&self, top: usize) -> ChainComplex {
        let sp = |q: usize| self.space().concat(&self.alg.power(q));
        let mut d = vec![Matrix::zeros(0, self.dim())];
        for q in 1..=top {
            let src = sp(q);
            let mut m = self.right_map().at(&src, 0).mat;
            for i in 1..q {
                m = m.axpy(&Scalar::sign(i), &self.alg.mult_map().at(&src, i).mat);
            }
            let front = TensorMap::flip(&sp(q - 1), &self.alg.space());
            let last = self.left_map().embed(&TensorSpace::ground(), &self.alg.power(q - 1)).after(&front);
            m = m.axpy(&Scalar::sign(q), &last.mat);
            d.push(m);
        }
        ChainComplex::new((0..=top).map(|q| sp(q).dim()).collect(), d).expect("shapes match")
    }

    /// `H_q(A, M)` for `q ≤ q_max`, built on levels `0..=q_max + 1`.
    pub fn hochschild_with_coefficients(&self, q_max: usize, workers: usize) -> Result<HomologyTable> {
        if let Some(f) = self.check().first_failure() {
            return Err(Error::NotBimodule(format!("{}: {}", self.factor.name, f.name)));
        }
        self.hochschild_complex(q_max + 1).homology(&format!("H(A, {})", self.factor.name), workers)
    }
}

fn space_factor(name: String, space: &TensorSpace) -> Factor {
    Factor::new(&name, (0..space.dim()).map(|i| space.labels(i).join("⊗")).collect())
}

/// `C_p(♮B) = B^{⊗(p+1)} ⊗ A`: left `A`-action through `Γ_p`, right action on
/// the last factor.
pub fn column_bimodule(cyl: &CylindricalModule, p: usize) -> Bimodule {
    let (a, b) = (cyl.smash().a(), cyl.smash().b());
    let sp = cyl.space(p, 0);
    let twice = b.power(p + 1).concat(&a.power(2));
    let right = a.mult_map().at(&twice, p + 1).mat;
    let left = Pipeline::new(&a.space().concat(&sp)).apply_at(&cyl.gamma(p), 0).apply_at(&a.mult_map(), p + 1).finish().mat;
    Bimodule { alg: a.clone(), factor: space_factor(format!("C{p}(♮B)"), &sp), left, right }
}

/// `Θ_q⁻¹: A^{⊗(q+1)} ⊗ B -> B ⊗ A^{⊗(q+1)}`, from `R⁻¹`.
pub fn theta_inverse(cyl: &CylindricalModule, q: usize) -> TensorMap {
    let (a, b) = (cyl.smash().a(), cyl.smash().b());
    let r_inv = cyl.smash().rmap().inverse().expect("strong smash product").clone();
    let src = a.power(q + 1).concat(&b.space());
    (0..=q).rev().fold(Pipeline::new(&src), |pl, k| pl.apply_at(&r_inv, k)).finish()
}

/// `C_q(A_B♮) = B ⊗ A^{⊗(q+1)}`: left `B`-action on the first factor, right
/// action through `Θ_q⁻¹`.
pub fn row_bimodule(cyl: &CylindricalModule, q: usize) -> Bimodule {
    let b = cyl.smash().b();
    let sp = cyl.space(0, q);
    let left = b.mult_map().at(&b.space().concat(&sp), 0).mat;
    let right = Pipeline::new(&sp.concat(&b.space())).apply_at(&theta_inverse(cyl, q), 1).apply_at(&b.mult_map(), 0).finish().mat;
    Bimodule { alg: b.clone(), factor: space_factor(format!("C{q}(A_B♮)"), &sp), left, right }
}

/// `φ_{p,q}: B ⊗ A^{⊗(q+1)} ⊗ B^{⊗p} -> A♮B(p,q)` and its inverse `ψ_{p,q}`,
/// each built from its own chain of `Θ_q^{∓1}`.
pub fn row_recoordinatize(cyl: &CylindricalModule, p: usize, q: usize) -> (TensorMap, TensorMap) {
    let (a, b) = (cyl.smash().a(), cyl.smash().b());
    let y = b.space().concat(&a.power(q + 1)).concat(&b.power(p));
    let ti = theta_inverse(cyl, q);
    let phi = (1..=p).fold(Pipeline::new(&y), |pl, k| pl.apply_at(&ti, k)).finish();
    let th = cyl.theta(q);
    let psi = (1..=p).rev().fold(Pipeline::new(&cyl.space(p, q)), |pl, k| pl.apply_at(&th, k)).finish();
    (phi, psi)
}

/// `φψ = ψφ = id`, and `ψ b φ = δ` with `δ` the Hochschild differential of
/// `B` with coefficients in the row bimodule, for `(p,q) ≤ (bound,bound)`.
pub fn check_recoordinatization(cyl: &CylindricalModule, bound: usize) -> CheckReport {
    let mut r = CheckReport::new();
    for q in 0..=bound {
        let delta = row_bimodule(cyl, q).hochschild_complex(bound);
        for p in 0..=bound {
            let (phi, psi) = row_recoordinatize(cyl, p, q);
            let at = format!("(p,q)=({p},{q})");
            r.push(compare_maps(format!("φψ = id at {at}"), &phi.after(&psi), &TensorMap::identity(&psi.src)));
            r.push(compare_maps(format!("ψφ = id at {at}"), &psi.after(&phi), &TensorMap::identity(&phi.src)));
            if p >= 1 {
                let (_, psi_low) = row_recoordinatize(cyl, p - 1, q);
                let lhs = psi_low.mat.mul(&cyl.row_b(p, q)).mul(&phi.mat);
                r.push(compare_plain(format!("ψ b φ = δ at {at}"), &lhs, &delta.d[p]));
            }
        }
    }
    r
}

/// Which side's coinvariants or homology carries the induced cyclic structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Levels `C_p(♮B)`, homology of `A` in the column direction, unbarred operators.
    A,
    /// Levels `C_q(A_B♮)`, homology of `B` in the row direction, barred operators.
    B,
}

/// The grid point at level `k` and homology degree `h`.
fn cell(side: Side, k: usize, h: usize) -> (usize, usize) {
    match side {
        Side::A => (k, h),
        Side::B => (h, k),
    }
}

struct Ops<'a> {
    cyl: &'a CylindricalModule,
    side: Side,
    h: usize,
}

impl Ops<'_> {
    fn face(&self, k: usize, i: usize) -> Matrix {
        let (p, q) = cell(self.side, k, self.h);
        match self.side {
            Side::A => self.cyl.d(p, q, i),
            Side::B => self.cyl.dbar(p, q, i),
        }
    }

    fn degen(&self, k: usize, i: usize) -> Matrix {
        let (p, q) = cell(self.side, k, self.h);
        match self.side {
            Side::A => self.cyl.s(p, q, i),
            Side::B => self.cyl.sbar(p, q, i),
        }
    }

    fn t(&self, k: usize) -> Matrix {
        let (p, q) = cell(self.side, k, self.h);
        match self.side {
            Side::A => self.cyl.t(p, q),
            Side::B => self.cyl.tbar(p, q),
        }
    }

    /// The differential of the other direction, out of level `k` at degree `h`.
    fn cross_b(&self, k: usize, h: usize) -> Matrix {
        let (p, q) = cell(self.side, k, h);
        match self.side {
            Side::A => self.cyl.column_b(p, q),
            Side::B => self.cyl.row_b(p, q),
        }
    }

    /// Levels `0..=top` on the given subquotients; degeneracies below the top.
    fn induce(&self, name: String, sq: &[Subquotient]) -> Result<ParacyclicModule> {
        let top = sq.len() - 1;
        let ind = |m: &Matrix, s: &Subquotient, t: &Subquotient, what: String| induced_map(m, s, t).map_err(|_| Error::NotWellDefined(format!("{name}: {what}")));
        let mut levels = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let faces = if k == 0 { vec![] } else { (0..=k).map(|i| ind(&self.face(k, i), &sq[k], &sq[k - 1], format!("d_{i} at level {k}"))).collect::<Result<_>>()? };
            let degens = if k < top { Some((0..=k).map(|i| ind(&self.degen(k, i), &sq[k], &sq[k + 1], format!("s_{i} at level {k}"))).collect::<Result<_>>()?) } else { None };
            let t = ind(&self.t(k), &sq[k], &sq[k], format!("t at level {k}"))?;
            levels.push(Level::new(sq[k].dim(), None, faces, degens, t));
        }
        ParacyclicModule::from_direct(&name, levels)
    }
}

/// The bimodule on level `k` of the given side.
pub fn side_bimodule(cyl: &CylindricalModule, side: Side, k: usize) -> Bimodule {
    match side {
        Side::A => column_bimodule(cyl, k),
        Side::B => row_bimodule(cyl, k),
    }
}

/// Coinvariants `C_k / span{x.y - y.x}` with the induced cyclic structure, on
/// levels `0..=top`. Fails if an operator does not preserve the commutators.
pub fn coinvariant_cyclic(cyl: &CylindricalModule, side: Side, top: usize) -> Result<ParacyclicModule> {
    let sq = (0..=top)
        .map(|k| {
            let m = side_bimodule(cyl, side, k);
            Subquotient::quotient_of(m.dim(), &m.commutators()).map_err(Error::from)
        })
        .collect::<Result<Vec<_>>>()?;
    let label = match side {
        Side::A => "C^A(♮B)",
        Side::B => "C^B(A_B♮)",
    };
    Ops { cyl, side, h: 0 }.induce(label.into(), &sq)
}

/// `H_h` of the other direction at each level `0..=top`, with the induced
/// cyclic structure.
pub fn induced_cyclic_on_homology(cyl: &CylindricalModule, side: Side, h: usize, top: usize) -> Result<ParacyclicModule> {
    let ops = Ops { cyl, side, h };
    let sq = (0..=top)
        .map(|k| {
            let z = if h == 0 { Matrix::identity(cyl.dim(cell(side, k, 0).0, cell(side, k, 0).1)) } else { kernel(&ops.cross_b(k, h)) };
            Subquotient::new(&z, &ops.cross_b(k, h + 1)).map_err(Error::from)
        })
        .collect::<Result<Vec<_>>>()?;
    ops.induce(format!("H{h} {side:?}-side"), &sq)
}

/// `H_q(M)` for a bimodule over the dual numbers through the 2-periodic
/// resolution: `.. -> M -ν̄-> M -μ̄-> M -> 0` with `μ̄(m) = ms - sm`,
/// `ν̄(m) = ms + sm`.
pub fn dual_numbers_resolution_homology(m: &Bimodule, q_max: usize, workers: usize) -> Result<HomologyTable> {
    let s = dual_numbers_generator(&m.alg).ok_or_else(|| Error::WrongAlgebra(format!("{} is not k[s]/s²", m.alg.name())))?;
    let n = m.dim();
    let right_s = Matrix::from_fn(n, n, |i| m.right.column(i * m.alg.dim() + s).clone());
    let left_s = Matrix::from_fn(n, n, |i| m.left.column(s * n + i).clone());
    let mu = right_s.sub(&left_s);
    let nu = right_s.add(&left_s);
    let d = (0..=q_max + 1).map(|q| if q == 0 { Matrix::zeros(0, n) } else if q % 2 == 1 { mu.clone() } else { nu.clone() }).collect();
    ChainComplex::new(vec![n; q_max + 2], d)?.homology(&format!("H(D, {}) by resolution", m.factor.name), workers)
}

/// The index of `s` if `alg` is `k[s]/s²` on the basis `1, s`.
fn dual_numbers_generator(alg: &FinDimAlgebra) -> Option<usize> {
    if alg.dim() != 2 {
        return None;
    }
    let u = alg.unit_index()?;
    let s = 1 - u;
    (alg.unit() == &vec![(u, Scalar::ONE)] && alg.basis_product(s, s).is_empty()).then_some(s)
}

/// Whether the basis of `alg` is a finite group under its product.
pub fn is_group_algebra(alg: &FinDimAlgebra) -> bool {
    let n = alg.dim();
    let Some(u) = alg.unit_index() else { return false };
    if alg.unit() != &vec![(u, Scalar::ONE)] {
        return false;
    }
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            match alg.basis_product(i, j).as_slice() {
                [(k, c)] if c.is_one() => table[i][j] = *k,
                _ => return false,
            }
        }
    }
    (0..n).all(|i| {
        let mut row = table[i].clone();
        row.sort_unstable();
        row == (0..n).collect::<Vec<_>>()
    })
}

/// Row filtration `f = p + 2e` or column filtration `f = q + 2e` on the block
/// `u^{-e} A♮B(p,q)` of `Tot ⊠ W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Filtration {
    Rows,
    Columns,
}

impl Filtration {
    fn side(self) -> Side {
        match self {
            Filtration::Rows => Side::A,
            Filtration::Columns => Side::B,
        }
    }
}

/// A filtered complex: `filt[n][k]` is the filtration degree of basis vector `k`.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    pub cc: ChainComplex,
    pub filt: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageEntry {
    pub p: usize,
    pub q: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankEntry {
    pub p: usize,
    pub q: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralPage {
    pub page: usize,
    pub entries: Vec<PageEntry>,
    /// Ranks of `d^r: E^r_{p,q} -> E^r_{p-r,q+r-1}`.
    pub differential_ranks: Vec<RankEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralSequence {
    pub filtration: Filtration,
    pub w: CoefficientW,
    pub n_max: usize,
    pub pages: Vec<SpectralPage>,
    /// First page from which each bidegree is stable.
    pub stable_from: Vec<RankEntry>,
    pub infinity: Vec<PageEntry>,
    /// `dim H_n` of the filtered complex.
    pub homology: Vec<usize>,
}

impl SpectralSequence {
    pub fn page(&self, r: usize) -> Option<&SpectralPage> {
        self.pages.iter().find(|p| p.page == r)
    }

    pub fn dim(&self, r: usize, p: usize, q: usize) -> usize {
        self.page(r).and_then(|pg| pg.entries.iter().find(|e| e.p == p && e.q == q)).map_or(0, |e| e.dim)
    }

    /// `Σ_{p+q=n} dim E^∞_{p,q}`.
    pub fn infinity_total(&self, n: usize) -> usize {
        self.infinity.iter().filter(|e| e.p + e.q == n).map(|e| e.dim).sum()
    }
}

struct Pages<'a> {
    fc: &'a FilteredComplex,
    z: HashMap<(isize, isize, usize), Matrix>,
    den: HashMap<(isize, isize, usize), Matrix>,
}

impl<'a> Pages<'a> {
    fn new(fc: &'a FilteredComplex) -> Self {
        Pages { fc, z: HashMap::new(), den: HashMap::new() }
    }

    fn upto(&self, n: usize, p: isize) -> Vec<usize> {
        (0..self.fc.cc.dims[n]).filter(|&k| self.fc.filt[n][k] as isize <= p).collect()
    }

    fn lift(idx: &[usize], m: &Matrix, dim: usize) -> Matrix {
        Matrix::from_fn(dim, m.cols(), |j| m.column(j).iter().map(|(i, c)| (idx[*i], c.clone())).collect())
    }

    /// `Z^r_p = {x ∈ F_p : Dx ∈ F_{p-r}}`, with `Z^{-1}_p = F_p`.
    fn z(&mut self, r: isize, p: isize, n: usize) -> Matrix {
        if let Some(m) = self.z.get(&(r, p, n)) {
            return m.clone();
        }
        let dim = self.fc.cc.dims[n];
        let cols = self.upto(n, p);
        let m = if r < 0 || n == 0 {
            Self::lift(&cols, &Matrix::identity(cols.len()), dim)
        } else {
            let d = &self.fc.cc.d[n];
            let high: Vec<usize> = (0..self.fc.cc.dims[n - 1]).filter(|&k| self.fc.filt[n - 1][k] as isize > p - r).collect();
            let restricted = d.select_columns(&cols).select_rows(&high);
            Self::lift(&cols, &kernel(&restricted), dim)
        };
        self.z.insert((r, p, n), m.clone());
        m
    }

    /// `Z^{r-1}_{p-1} + D Z^{r-1}_{p+r-1}`.
    fn den(&mut self, r: isize, p: isize, n: usize) -> Matrix {
        if let Some(m) = self.den.get(&(r, p, n)) {
            return m.clone();
        }
        let lower = self.z(r - 1, p - 1, n);
        let upper = self.z(r - 1, p + r - 1, n + 1);
        let m = Matrix::hstack(&[&lower, &self.fc.cc.d[n + 1].mul(&upper)]);
        self.den.insert((r, p, n), m.clone());
        m
    }

    fn dim_e(&mut self, r: isize, p: isize, n: usize) -> usize {
        rank(&self.z(r, p, n)) - rank(&self.den(r, p, n))
    }

    /// Rank of `d^r` out of `E^r_{p}` in degree `n`.
    fn rank_d(&mut self, r: isize, p: isize, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        let img = self.fc.cc.d[n].mul(&self.z(r, p, n));
        let den = self.den(r, p - r, n - 1);
        rank(&Matrix::hstack(&[&img, &den])) - rank(&den)
    }
}

impl FilteredComplex {
    /// `D` preserves the filtration.
    pub fn check(&self) -> Result<()> {
        for n in 1..=self.cc.top() {
            for (k, col) in self.cc.d[n].columns().iter().enumerate() {
                if col.iter().any(|(i, _)| self.filt[n - 1][*i] > self.filt[n][k]) {
                    return Err(Error::InvalidStructure(format!("differential raises the filtration in degree {n}")));
                }
            }
        }
        Ok(())
    }

    /// Pages `0..=n_max+2` on degrees `0..=n_max`; requires `n_max < top`.
    /// Every page is checked against the homology of the previous one.
    pub fn spectral_sequence(&self, filtration: Filtration, w: CoefficientW, n_max: usize) -> Result<SpectralSequence> {
        if n_max >= self.cc.top() {
            return Err(Error::TruncationTooSmall(format!("degree {n_max} needs the complex up to degree {}", n_max + 1)));
        }
        self.cc.check()?;
        self.check()?;
        let mut pg = Pages::new(self);
        let last = n_max as isize + 2;
        let mut pages = Vec::new();
        let mut dims: HashMap<(isize, isize, usize), usize> = HashMap::new();
        let mut ranks: HashMap<(isize, isize, usize), usize> = HashMap::new();
        for r in 0..=last {
            let mut entries = Vec::new();
            let mut differential_ranks = Vec::new();
            for n in 0..=n_max + 1 {
                for p in 0..=n as isize {
                    if n <= n_max {
                        let d = pg.dim_e(r, p, n);
                        dims.insert((r, p, n), d);
                        entries.push(PageEntry { p: p as usize, q: n - p as usize, dim: d });
                    }
                    let k = pg.rank_d(r, p, n);
                    ranks.insert((r, p, n), k);
                    if n <= n_max {
                        differential_ranks.push(RankEntry { p: p as usize, q: n - p as usize, rank: k });
                    }
                }
            }
            pages.push(SpectralPage { page: r as usize, entries, differential_ranks });
        }
        let rk = |r: isize, p: isize, n: usize| ranks.get(&(r, p, n)).copied().unwrap_or(0);
        let mut stable_from = Vec::new();
        let mut infinity = Vec::new();
        for n in 0..=n_max {
            for p in 0..=n as isize {
                for r in 0..last {
                    let expect = dims[&(r, p, n)] - rk(r, p, n) - rk(r, p + r, n + 1);
                    if dims[&(r + 1, p, n)] != expect {
                        return Err(Error::NotWellDefined(format!("page {} at ({p},{}) is not the homology of page {r}", r + 1, n as isize - p)));
                    }
                }
                if rk(last, p, n) != 0 || rk(last, p + last, n + 1) != 0 {
                    return Err(Error::TruncationTooSmall(format!("({p},{}) not stable by page {last}", n as isize - p)));
                }
                let from = (0..=last).rev().take_while(|&r| r == last || (rk(r, p, n) == 0 && rk(r, p + r, n + 1) == 0)).last().unwrap_or(last);
                let q = n - p as usize;
                stable_from.push(RankEntry { p: p as usize, q, rank: from as usize });
                infinity.push(PageEntry { p: p as usize, q, dim: dims[&(last, p, n)] });
            }
        }
        let r = self.cc.ranks(1);
        let homology = (0..=n_max).map(|n| self.cc.dims[n] - r[n] - r[n + 1]).collect();
        Ok(SpectralSequence { filtration, w, n_max, pages, stable_from, infinity, homology })
    }
}

/// `Tot(A♮B) ⊠ W` on degrees `0..=n_max+1` with the chosen filtration.
///
/// Unnormalized chains are used so that `E¹` is Hochschild homology with
/// coefficients in `C_p(♮B)` itself; `(b+uB)² = 0` is checked and fails with
/// `NotMixed` in degrees where the `u²𝔹²` term is nonzero.
pub fn filtered_total(cyl: &CylindricalModule, filtration: Filtration, w: CoefficientW, n_max: usize) -> Result<FilteredComplex> {
    let top = n_max + 1;
    let tot = cyl.total_mixed(top);
    let cc = box_complex(&tot, w)?;
    cc.check().map_err(|_| Error::NotMixed("(𝕓+u𝔹)² != 0 on unnormalized chains; lower n_max".into()))?;
    let filt = (0..=top)
        .map(|n| {
            let mut f = Vec::with_capacity(cc.dims[n]);
            for (e, _) in box_blocks(&tot.dims, n, w) {
                let m = n - 2 * e;
                for p in 0..=m {
                    let deg = match filtration {
                        Filtration::Rows => p,
                        Filtration::Columns => m - p,
                    } + 2 * e;
                    f.extend(std::iter::repeat_n(deg, cyl.dim(p, m - p)));
                }
            }
            f
        })
        .collect();
    Ok(FilteredComplex { cc, filt })
}

pub fn spectral_sequence(cyl: &CylindricalModule, filtration: Filtration, w: CoefficientW, n_max: usize) -> Result<SpectralSequence> {
    filtered_total(cyl, filtration, w, n_max)?.spectral_sequence(filtration, w, n_max)
}

fn e_indices(w: CoefficientW, f: usize) -> std::ops::RangeInclusive<usize> {
    0..=if w == CoefficientW::Cyclic { f / 2 } else { 0 }
}

/// `E¹_{f,h} = ⊕_e H_h(side bimodule at level f - 2e)`, computed from the
/// Hochschild complexes with coefficients.
pub fn expected_e1(cyl: &CylindricalModule, filtration: Filtration, w: CoefficientW, n_max: usize, workers: usize) -> Result<Vec<PageEntry>> {
    let side = filtration.side();
    let tables: Vec<HomologyTable> = (0..=n_max)
        .map(|k| {
            let m = side_bimodule(cyl, side, k);
            m.hochschild_with_coefficients(n_max - k, workers)
        })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for n in 0..=n_max {
        for f in 0..=n {
            let h = n - f;
            let dim = e_indices(w, f).map(|e| tables[f - 2 * e].dim(h).expect("degree in range")).sum();
            out.push(PageEntry { p: f, q: h, dim });
        }
    }
    Ok(out)
}

/// `E²_{f,h} = HC_f(H_h; W)` of the induced cyclic modules.
pub fn expected_e2(cyl: &CylindricalModule, filtration: Filtration, w: CoefficientW, n_max: usize, workers: usize) -> Result<Vec<PageEntry>> {
    let side = filtration.side();
    let mut out = Vec::new();
    for h in 0..=n_max {
        let top = n_max - h + 1;
        let m = induced_cyclic_on_homology(cyl, side, h, top)?;
        let table = cyclic_homology(&m.mixed_complex(), w, workers)?;
        for f in 0..=n_max - h {
            out.push(PageEntry { p: f, q: h, dim: table.dim(f).expect("degree in range") });
        }
    }
    out.sort_by_key(|e| (e.p + e.q, e.p));
    Ok(out)
}

/// Compares page `r` of `ss` with expected entries.
pub fn compare_page(name: &str, ss: &SpectralSequence, r: usize, expected: &[PageEntry]) -> CheckOutcome {
    let bad: Vec<String> = expected
        .iter()
        .filter(|e| ss.dim(r, e.p, e.q) != e.dim)
        .map(|e| format!("({},{}): page {} vs expected {}", e.p, e.q, ss.dim(r, e.p, e.q), e.dim))
        .collect();
    if bad.is_empty() {
        CheckOutcome::pass(name)
    } else {
        CheckOutcome::fail(name, bad.join("; "))
    }
}

/// Collapse for a separable side: `E²_{p,q} = 0` for `q > 0`, `E² = E^∞`,
/// and `HC(A#B; W)` equals `HC` of the coinvariant cyclic module.
pub fn separable_collapse_check(cyl: &CylindricalModule, side: Side, w: CoefficientW, n_max: usize, workers: usize) -> Result<CheckReport> {
    let alg = match side {
        Side::A => cyl.smash().a(),
        Side::B => cyl.smash().b(),
    };
    if !is_group_algebra(alg) {
        return Err(Error::Unsupported(format!("{} is not certified separable (not a group algebra)", alg.name())));
    }
    let filtration = match side {
        Side::A => Filtration::Rows,
        Side::B => Filtration::Columns,
    };
    let ss = spectral_sequence(cyl, filtration, w, n_max)?;
    let mut r = CheckReport::new();
    let e2 = ss.page(2).expect("page 2");
    let nonzero: Vec<String> = e2.entries.iter().filter(|e| e.q > 0 && e.dim > 0).map(|e| format!("({},{})", e.p, e.q)).collect();
    r.push(if nonzero.is_empty() { CheckOutcome::pass(format!("{side:?}-side: E²_(p,q) = 0 for q > 0")) } else { CheckOutcome::fail(format!("{side:?}-side: E²_(p,q) = 0 for q > 0"), nonzero.join(" ")) });
    r.push(compare_page(&format!("{side:?}-side: E² = E^∞"), &ss, 2, &ss.infinity));
    let direct = cyclic_homology(&crate::cyclic::algebra_cyclic_module(cyl.smash().algebra(), n_max + 1).mixed_complex(), w, workers)?;
    let coinv = cyclic_homology(&coinvariant_cyclic(cyl, side, n_max + 1)?.mixed_complex(), w, workers)?;
    r.push(CheckOutcome::from_bool(format!("{side:?}-side: HC(A#B) = HC(coinvariants)"), direct.unflagged() == coinv.unflagged()).with_note(format!("{:?} vs {:?}", direct.unflagged(), coinv.unflagged())));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    fn p1() -> CylindricalModule {
        CylindricalModule::new(&presets::pareigis_surrogate(1).unwrap()).unwrap()
    }

    #[test]
    fn column_bimodule_complex_is_column_b() {
        let c = p1();
        for p in 0..=2 {
            let m = column_bimodule(&c, p);
            assert!(m.check().passed());
            let hc = m.hochschild_complex(2);
            for q in 1..=2 {
                assert_eq!(hc.d[q], c.column_b(p, q));
            }
        }
    }

    #[test]
    fn theta_inverse_inverts_theta() {
        let c = p1();
        for q in 0..=2 {
            assert!(theta_inverse(&c, q).mat.mul(&c.theta(q).mat).is_identity());
        }
    }

    #[test]
    fn recoordinatization() {
        let c = p1();
        let (phi, psi) = row_recoordinatize(&c, 0, 1);
        assert!(phi.mat.is_identity() && psi.mat.is_identity());
        let rep = check_recoordinatization(&c, 2);
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn resolution_oracle_on_dual_numbers() {
        let d = presets::dual_numbers();
        let reg = Bimodule::regular(&d);
        let res = dual_numbers_resolution_homology(&reg, 3, 1).unwrap();
        assert_eq!(res.unflagged(), vec![2, 1, 1, 1]);
        let bar = reg.hochschild_with_coefficients(3, 1).unwrap();
        assert_eq!(bar.unflagged(), vec![2, 1, 1, 1]);
        let c = p1();
        let m = column_bimodule(&c, 0);
        assert_eq!(dual_numbers_resolution_homology(&m, 2, 1).unwrap().unflagged(), m.hochschild_with_coefficients(2, 1).unwrap().unflagged());
        let k2 = presets::cyclic_group(2).unwrap().algebra().clone();
        assert!(matches!(dual_numbers_resolution_homology(&Bimodule::regular(&k2), 1, 1), Err(Error::WrongAlgebra(_))));
    }

    #[test]
    fn coinvariants_are_cyclic() {
        let c = p1();
        let co = coinvariant_cyclic(&c, Side::A, 3).unwrap();
        assert!(co.check_cyclic().passed());
        assert!(!c.row(0, 3).is_cyclic());
        let h0 = induced_cyclic_on_homology(&c, Side::A, 0, 3).unwrap();
        assert!(h0.compare_operators(&co, 3).passed());
        let h1 = induced_cyclic_on_homology(&c, Side::A, 1, 2).unwrap();
        assert!(h1.check_cyclic().passed());
        let cb = coinvariant_cyclic(&c, Side::B, 2).unwrap();
        assert!(cb.check_cyclic().passed());
    }

    #[test]
    fn group_algebra_detection() {
        assert!(is_group_algebra(presets::cyclic_group(3).unwrap().algebra()));
        assert!(!is_group_algebra(&presets::dual_numbers()));
    }

    #[test]
    fn spectral_sequence_surrogate_rows() {
        let c = p1();
        for w in [CoefficientW::Hochschild, CoefficientW::Cyclic] {
            for filt in [Filtration::Rows, Filtration::Columns] {
                let ss = spectral_sequence(&c, filt, w, 2).unwrap();
                let e1 = expected_e1(&c, filt, w, 2, 1).unwrap();
                assert!(compare_page("E1", &ss, 1, &e1).passed, "{filt:?} {w:?} {:?}", compare_page("E1", &ss, 1, &e1).note);
                let e2 = expected_e2(&c, filt, w, 2, 1).unwrap();
                assert!(compare_page("E2", &ss, 2, &e2).passed, "{filt:?} {w:?} {:?}", compare_page("E2", &ss, 2, &e2).note);
            }
        }
    }

    fn three_checks(c: &CylindricalModule, n_max: usize) {
        let direct = cyclic_homology(&crate::cyclic::algebra_cyclic_module(c.smash().algebra(), n_max + 1).mixed_complex(), CoefficientW::Cyclic, 1).unwrap();
        let mut totals = Vec::new();
        for filt in [Filtration::Rows, Filtration::Columns] {
            let w = CoefficientW::Cyclic;
            let ss = spectral_sequence(c, filt, w, n_max).unwrap();
            let e1 = compare_page("E1", &ss, 1, &expected_e1(c, filt, w, n_max, 1).unwrap());
            assert!(e1.passed, "{filt:?} {:?}", e1.note);
            let e2 = compare_page("E2", &ss, 2, &expected_e2(c, filt, w, n_max, 1).unwrap());
            assert!(e2.passed, "{filt:?} {:?}", e2.note);
            let t: Vec<usize> = (0..=n_max).map(|n| ss.infinity_total(n)).collect();
            assert_eq!(t, direct.unflagged()[..=n_max].to_vec(), "{filt:?}");
            totals.push(t);
        }
        assert_eq!(totals[0], totals[1]);
    }

    #[test]
    fn spectral_sequences_converge() {
        three_checks(&p1(), 2);
        three_checks(&CylindricalModule::new(&presets::taft_module_algebra(2).unwrap()).unwrap(), 2);
        let k2 = presets::cyclic_group(2).unwrap().algebra().clone();
        three_checks(&CylindricalModule::new(&presets::tensor_flip(&k2, &k2).unwrap()).unwrap(), 2);
    }

    #[test]
    fn separable_collapse() {
        let c = CylindricalModule::new(&presets::taft_module_algebra(2).unwrap()).unwrap();
        let rep = separable_collapse_check(&c, Side::A, CoefficientW::Cyclic, 2, 1).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_failure());
        assert!(matches!(separable_collapse_check(&c, Side::B, CoefficientW::Cyclic, 2, 1), Err(Error::Unsupported(_))));
        let k2 = presets::cyclic_group(2).unwrap().algebra().clone();
        let flip = CylindricalModule::new(&presets::tensor_flip(&k2, &k2).unwrap()).unwrap();
        for side in [Side::A, Side::B] {
            assert!(separable_collapse_check(&flip, side, CoefficientW::Cyclic, 2, 1).unwrap().passed());
        }
    }

    #[test]
    fn flip_coinvariants_and_resolution_values() {
        let k2 = presets::cyclic_group(2).unwrap().algebra().clone();
        let flip = CylindricalModule::new(&presets::tensor_flip(&k2, &k2).unwrap()).unwrap();
        let h = column_bimodule(&flip, 0).hochschild_with_coefficients(2, 1).unwrap();
        assert_eq!(h.unflagged(), vec![4, 0, 0]);
        let co = coinvariant_cyclic(&flip, Side::A, 2).unwrap();
        assert_eq!((0..=2).map(|n| co.dim(n)).collect::<Vec<_>>(), vec![4, 8, 16]);
    }
}
