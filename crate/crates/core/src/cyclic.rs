//! Paracyclic and cyclic modules, their derived operators and mixed
//! complexes.
//!
//! A module is stored level by level as explicit matrices. It can be given
//! directly (all faces, degeneracies and the cyclic operator) or generated
//! from the last faces and extra degeneracies:
//! `t_n = d_{n+1} s_{-1}`, `d_i = t^{-(n-i)} d_n t^{n-i}`,
//! `s_i = t^{i+1} s_{-1} t^{-(i+1)}`.

use std::sync::OnceLock;

use smashcyc_exact::{induced_map, inverse, Matrix, Scalar, Subquotient};

use crate::check::{compare_matrices, CheckOutcome, CheckReport};
use crate::error::{Error, Result};
use crate::tensor::{Factor, TensorMap, TensorSpace};

/// One level `C_n`.
#[derive(Clone, Debug)]
pub struct Level {
    pub dim: usize,
    /// Tensor structure of `C_n`, used only to label witnesses.
    pub space: Option<TensorSpace>,
    /// `d_0..d_n`; empty at level 0.
    pub faces: Vec<Matrix>,
    /// `s_0..s_n: C_n -> C_{n+1}`, when available.
    pub degens: Option<Vec<Matrix>>,
    pub t: Matrix,
    t_inv: OnceLock<Option<Matrix>>,
}

impl Level {
    pub fn new(dim: usize, space: Option<TensorSpace>, faces: Vec<Matrix>, degens: Option<Vec<Matrix>>, t: Matrix) -> Self {
        Level { dim, space, faces, degens, t, t_inv: OnceLock::new() }
    }

    fn labels(&self) -> Box<dyn Fn(usize) -> Vec<String> + '_> {
        match &self.space {
            Some(s) => Box::new(move |i| s.labels(i)),
            None => Box::new(|i| vec![format!("v{i}")]),
        }
    }

    /// `t⁻¹`, using `tⁿ` when `t^{n+1} = id`.
    pub fn t_inv(&self, n: usize) -> Option<&Matrix> {
        self.t_inv
            .get_or_init(|| {
                let tn = self.t.pow(n);
                if self.t.mul(&tn).is_identity() {
                    Some(tn)
                } else {
                    inverse(&self.t).ok()
                }
            })
            .as_ref()
    }
}

#[derive(Clone, Debug)]
pub struct ParacyclicModule {
    name: String,
    levels: Vec<Level>,
}

/// `Σ c_k M_k`.
pub fn linear_combination(dim_rows: usize, dim_cols: usize, terms: impl IntoIterator<Item = (Scalar, Matrix)>) -> Matrix {
    terms.into_iter().fold(Matrix::zeros(dim_rows, dim_cols), |acc, (c, m)| acc.axpy(&c, &m))
}

impl ParacyclicModule {
    /// All operators supplied.
    pub fn from_direct(name: &str, levels: Vec<Level>) -> Result<Self> {
        for (n, l) in levels.iter().enumerate() {
            let expect_faces = if n == 0 { 0 } else { n + 1 };
            if l.faces.len() != expect_faces || (l.t.rows(), l.t.cols()) != (l.dim, l.dim) {
                return Err(Error::InvalidStructure(format!("{name}: level {n} has the wrong number or shape of operators")));
            }
            if let Some(d) = &l.degens {
                if d.len() != n + 1 {
                    return Err(Error::InvalidStructure(format!("{name}: level {n} needs {} degeneracies", n + 1)));
                }
            }
        }
        Ok(ParacyclicModule { name: name.to_string(), levels })
    }

    /// Generated from `last_faces[n] = d_n` on `C_n` (`n = 1..=L`, entry 0
    /// ignored) and `extra[n] = s_{-1}` on `C_n` (`n = 0..L`). The result has
    /// levels `0..L`; degeneracies exist below the top level.
    pub fn from_generators(name: &str, spaces: Vec<(usize, Option<TensorSpace>)>, last_faces: &[Matrix], extra: &[Matrix]) -> Result<Self> {
        let top = spaces.len().checked_sub(2).ok_or_else(|| Error::InvalidStructure(format!("{name}: need at least two levels")))?;
        let mut ts = Vec::with_capacity(top + 1);
        let mut tinv = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let t = last_faces[n + 1].mul(&extra[n]);
            let ti = inverse(&t).map_err(|_| Error::NotInvertible(format!("{name}: t_{n}")))?;
            ts.push(t);
            tinv.push(ti);
        }
        let pow = |n: usize, k: i64| if k >= 0 { ts[n].pow(k as usize) } else { tinv[n].pow((-k) as usize) };
        let mut levels = Vec::with_capacity(top + 1);
        for (n, (dim, space)) in spaces.into_iter().take(top + 1).enumerate() {
            let faces = if n == 0 {
                vec![]
            } else {
                (0..=n).map(|i| pow(n - 1, -((n - i) as i64)).mul(&last_faces[n]).mul(&pow(n, (n - i) as i64))).collect()
            };
            let degens = (n < top).then(|| (0..=n).map(|i| pow(n + 1, i as i64 + 1).mul(&extra[n]).mul(&pow(n, -(i as i64 + 1)))).collect());
            let l = Level::new(dim, space, faces, degens, ts[n].clone());
            let _ = l.t_inv.set(Some(tinv[n].clone()));
            levels.push(l);
        }
        Ok(ParacyclicModule { name: name.to_string(), levels })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Highest constructed level.
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &Level {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn dim(&self, n: usize) -> usize {
        self.levels[n].dim
    }

    pub fn face(&self, n: usize, i: usize) -> &Matrix {
        &self.levels[n].faces[i]
    }

    pub fn degen(&self, n: usize, i: usize) -> Option<&Matrix> {
        self.levels[n].degens.as_ref().map(|d| &d[i])
    }

    pub fn t(&self, n: usize) -> &Matrix {
        &self.levels[n].t
    }

    pub fn t_inv(&self, n: usize) -> Result<&Matrix> {
        self.levels[n].t_inv(n).ok_or_else(|| Error::NotInvertible(format!("{}: t_{n}", self.name)))
    }

    /// Truncated to levels `0..=top`.
    pub fn truncated(&self, top: usize) -> ParacyclicModule {
        ParacyclicModule { name: self.name.clone(), levels: self.levels[..=top.min(self.top())].to_vec() }
    }

    /// `s_{-1} = t_{n+1} s_n`.
    pub fn extra_degeneracy(&self, n: usize) -> Option<Matrix> {
        (n < self.top()).then(|| self.degen(n, n).map(|s| self.t(n + 1).mul(s))).flatten()
    }

    /// `b = Σ (-1)^i d_i: C_n -> C_{n-1}`; the zero map out of `C_0`.
    pub fn b(&self, n: usize) -> Matrix {
        if n == 0 {
            return Matrix::zeros(0, self.dim(0));
        }
        alternating_sum(self.dim(n - 1), self.dim(n), &self.levels[n].faces)
    }

    /// `T = t^{n+1}`.
    pub fn big_t(&self, n: usize) -> Matrix {
        self.t(n).pow(n + 1)
    }

    /// `N = Σ_{i=0}^n (-1)^{in} t^i`.
    pub fn norm(&self, n: usize) -> Matrix {
        cyclic_norm(self.t(n), n)
    }

    /// `B = (1 + (-1)ⁿ t) s_{-1} N: C_n -> C_{n+1}`, defined below the top.
    pub fn big_b(&self, n: usize) -> Option<Matrix> {
        if n >= self.top() {
            return None;
        }
        Some(connes_b(self.t(n), self.degen(n, n)?, self.t(n + 1), n))
    }

    fn cmp(&self, n: usize, m: usize, name: String, lhs: &Matrix, rhs: &Matrix) -> CheckOutcome {
        let src = self.levels[n].labels();
        let dst: Box<dyn Fn(usize) -> Vec<String>> = if m < self.levels.len() { self.levels[m].labels() } else { Box::new(|i| vec![format!("v{i}")]) };
        compare_matrices(name, lhs, rhs, &*src, &*dst)
    }

    /// Simplicial identities at every level where all operators exist.
    pub fn check_simplicial(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let nm = &self.name;
        for n in 0..=self.top() {
            let mut fam = Family::new(format!("{nm}: d_i d_j = d_(j-1) d_i, level {n}"));
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        fam.add(|| self.cmp(n, n - 2, format!("i={i} j={j}"), &self.face(n - 1, i).mul(self.face(n, j)), &self.face(n - 1, j - 1).mul(self.face(n, i))));
                    }
                }
            }
            r.push(fam.finish());
            let Some(degs) = &self.levels[n].degens else { continue };
            if n < self.top() {
                if let Some(up) = &self.levels[n + 1].degens {
                    let mut fam = Family::new(format!("{nm}: s_i s_j = s_(j+1) s_i, level {n}"));
                    for j in 0..=n {
                        for i in 0..=j {
                            fam.add(|| self.cmp(n, n + 2, format!("i={i} j={j}"), &up[i].mul(&degs[j]), &up[j + 1].mul(&degs[i])));
                        }
                    }
                    r.push(fam.finish());
                }
                let mut fam = Family::new(format!("{nm}: d_i s_j, level {n}"));
                let id = Matrix::identity(self.dim(n));
                for j in 0..=n {
                    for i in 0..=n + 1 {
                        let lhs = self.face(n + 1, i).mul(&degs[j]);
                        let rhs = if i < j {
                            self.degen(n - 1, j - 1).expect("lower degeneracies").mul(self.face(n, i))
                        } else if i == j || i == j + 1 {
                            id.clone()
                        } else {
                            self.degen(n - 1, j).expect("lower degeneracies").mul(self.face(n, i - 1))
                        };
                        fam.add(|| self.cmp(n, n, format!("i={i} j={j}"), &lhs, &rhs));
                    }
                }
                r.push(fam.finish());
            }
        }
        r
    }

    /// Paracyclic identities: `t` invertible, `d_i t = t d_{i-1}`,
    /// `d_0 t = d_n`, `s_i t = t s_{i-1}`, `s_0 t = t² s_n`, plus the
    /// simplicial identities.
    pub fn check_paracyclic(&self) -> CheckReport {
        let mut r = self.check_simplicial();
        let nm = &self.name;
        for n in 0..=self.top() {
            let t = self.t(n);
            r.push(CheckOutcome::from_bool(format!("{nm}: t invertible, level {n}"), self.t_inv(n).is_ok()));
            if n >= 1 {
                let mut fam = Family::new(format!("{nm}: d_i t = t d_(i-1), d_0 t = d_n, level {n}"));
                let tl = self.t(n - 1);
                for i in 1..=n {
                    fam.add(|| self.cmp(n, n - 1, format!("i={i}"), &self.face(n, i).mul(t), &tl.mul(self.face(n, i - 1))));
                }
                fam.add(|| self.cmp(n, n - 1, "d_0 t = d_n".into(), &self.face(n, 0).mul(t), self.face(n, n)));
                r.push(fam.finish());
            }
            if let (Some(degs), true) = (&self.levels[n].degens, n < self.top()) {
                let tu = self.t(n + 1);
                let mut fam = Family::new(format!("{nm}: s_i t = t s_(i-1), s_0 t = t² s_n, level {n}"));
                for i in 1..=n {
                    fam.add(|| self.cmp(n, n + 1, format!("i={i}"), &degs[i].mul(t), &tu.mul(&degs[i - 1])));
                }
                fam.add(|| self.cmp(n, n + 1, "s_0 t = t² s_n".into(), &degs[0].mul(t), &tu.mul(tu).mul(&degs[n])));
                r.push(fam.finish());
            }
        }
        r
    }

    /// The paracyclic identities together with `t^{n+1} = id`.
    pub fn check_cyclic(&self) -> CheckReport {
        let mut r = self.check_paracyclic();
        r.extend(self.check_cyclicity());
        r
    }

    /// `t^{n+1} = id` at every level.
    pub fn check_cyclicity(&self) -> CheckReport {
        let mut r = CheckReport::new();
        for n in 0..=self.top() {
            r.push(self.cmp(n, n, format!("{}: t^(n+1) = id, level {n}", self.name), &self.big_t(n), &Matrix::identity(self.dim(n))));
        }
        r
    }

    pub fn is_cyclic(&self) -> bool {
        (0..=self.top()).all(|n| self.big_t(n).is_identity())
    }

    /// `bT = Tb` and `bB + Bb = 1 - T` at every level where `B` is defined.
    pub fn check_connes_relations(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let nm = &self.name;
        let bs: Vec<Option<Matrix>> = (0..=self.top()).map(|n| self.big_b(n)).collect();
        for n in 0..=self.top() {
            let tn = self.big_t(n);
            if n >= 1 {
                r.push(self.cmp(n, n - 1, format!("{nm}: bT = Tb, level {n}"), &self.b(n).mul(&tn), &self.big_t(n - 1).mul(&self.b(n))));
            }
            let Some(bn) = &bs[n] else { continue };
            let mut lhs = self.b(n + 1).mul(bn);
            if n >= 1 {
                let Some(bprev) = &bs[n - 1] else { continue };
                lhs = lhs.add(&bprev.mul(&self.b(n)));
            }
            let rhs = Matrix::identity(self.dim(n)).sub(&tn);
            r.push(self.cmp(n, n, format!("{nm}: bB + Bb = 1 - T, level {n}"), &lhs, &rhs));
        }
        r
    }

    /// Compares operators with another module level by level.
    pub fn compare_operators(&self, other: &ParacyclicModule, top: usize) -> CheckReport {
        let mut r = CheckReport::new();
        for n in 0..=top.min(self.top()).min(other.top()) {
            let l = format!("{} vs {}, level {n}", self.name, other.name);
            r.push(self.cmp(n, n, format!("{l}: t"), self.t(n), other.t(n)));
            for i in 0..self.levels[n].faces.len() {
                r.push(self.cmp(n, n.saturating_sub(1), format!("{l}: d_{i}"), self.face(n, i), other.face(n, i)));
            }
            if let (Some(a), Some(b)) = (&self.levels[n].degens, &other.levels[n].degens) {
                for i in 0..a.len() {
                    r.push(self.cmp(n, n + 1, format!("{l}: s_{i}"), &a[i], &b[i]));
                }
            }
        }
        r
    }

    /// Span of `s_0..s_{n-1}` images in `C_n`.
    pub fn degenerate_subspace(&self, n: usize) -> Matrix {
        if n == 0 {
            return Matrix::zeros(self.dim(0), 0);
        }
        let degs = self.levels[n - 1].degens.as_ref().expect("degeneracies below the top");
        Matrix::hstack(&degs[..n].iter().collect::<Vec<_>>())
    }

    /// The mixed complex `(C, b, B)`; `B` is defined below the top level.
    pub fn mixed_complex(&self) -> MixedComplex {
        MixedComplex {
            name: self.name.clone(),
            dims: self.levels.iter().map(|l| l.dim).collect(),
            b: (0..=self.top()).map(|n| self.b(n)).collect(),
            big_b: (0..self.top()).map(|n| self.big_b(n).expect("degeneracies below the top")).collect(),
        }
    }
}

/// `Σ (-1)^i d_i`.
pub fn alternating_sum(rows: usize, cols: usize, faces: &[Matrix]) -> Matrix {
    linear_combination(rows, cols, faces.iter().enumerate().map(|(i, d)| (Scalar::sign(i), d.clone())))
}

/// `N = Σ_{i=0}^n (-1)^{in} t^i` on level `n`.
pub fn cyclic_norm(t: &Matrix, n: usize) -> Matrix {
    let mut acc = Matrix::zeros(t.rows(), t.cols());
    let mut p = Matrix::identity(t.rows());
    for i in 0..=n {
        acc = acc.axpy(&Scalar::sign(i * n), &p);
        p = t.mul(&p);
    }
    acc
}

/// `B = (1 + (-1)ⁿ t_{n+1}) s_{-1} N` with `s_{-1} = t_{n+1} s_n`.
pub fn connes_b(t: &Matrix, s_last: &Matrix, t_up: &Matrix, n: usize) -> Matrix {
    let left = Matrix::identity(t_up.rows()).axpy(&Scalar::sign(n), t_up);
    left.mul(t_up).mul(s_last).mul(&cyclic_norm(t, n))
}

/// Collects instances of one identity family; reports the first failure.
pub(crate) struct Family {
    name: String,
    failure: Option<CheckOutcome>,
    count: usize,
}

impl Family {
    pub(crate) fn new(name: String) -> Self {
        Family { name, failure: None, count: 0 }
    }

    pub(crate) fn add(&mut self, f: impl FnOnce() -> CheckOutcome) {
        if self.failure.is_none() {
            self.count += 1;
            let o = f();
            if !o.passed {
                self.failure = Some(o);
            }
        }
    }

    pub(crate) fn finish(self) -> CheckOutcome {
        match self.failure {
            None => CheckOutcome::pass(self.name).with_note(format!("{} instances", self.count)),
            Some(o) => CheckOutcome { name: self.name, passed: false, witness: o.witness, note: Some(format!("fails at {}", o.name)) },
        }
    }
}

/// `(M, b, B)` truncated at a top degree; `B` is defined below the top.
#[derive(Clone, Debug)]
pub struct MixedComplex {
    pub name: String,
    pub dims: Vec<usize>,
    /// `b[n]: M_n -> M_{n-1}` (zero-row matrix at `n = 0`).
    pub b: Vec<Matrix>,
    /// `big_b[n]: M_n -> M_{n+1}` for `n < top`.
    pub big_b: Vec<Matrix>,
}

impl MixedComplex {
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// `b² = 0`, `B² = 0`, `bB + Bb = 0` within the bound.
    pub fn check(&self) -> CheckReport {
        let mut r = self.check_anticommutation();
        for n in 0..self.big_b.len().saturating_sub(1) {
            r.push(CheckOutcome::from_bool(format!("{}: B² = 0, degree {n}", self.name), self.big_b[n + 1].mul(&self.big_b[n]).is_zero()));
        }
        r
    }

    /// `b² = 0` and `bB + Bb = 0` only.
    pub fn check_anticommutation(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let nm = &self.name;
        for n in 2..=self.top() {
            r.push(CheckOutcome::from_bool(format!("{nm}: b² = 0, degree {n}"), self.b[n - 1].mul(&self.b[n]).is_zero()));
        }
        for n in 0..self.big_b.len() {
            let mut s = self.b[n + 1].mul(&self.big_b[n]);
            if n >= 1 {
                s = s.add(&self.big_b[n - 1].mul(&self.b[n]));
            }
            r.push(CheckOutcome::from_bool(format!("{nm}: bB + Bb = 0, degree {n}"), s.is_zero()));
        }
        r
    }
}

impl MixedComplex {
    /// The quotient by `degenerate[n] ⊆ M_n` (spanning columns), in the
    /// basis chosen by elimination. Fails if `b` or `B` does not preserve it.
    pub fn normalized(&self, degenerate: &[Matrix]) -> Result<MixedComplex> {
        let sq: Vec<Subquotient> = (0..=self.top()).map(|n| Subquotient::quotient_of(self.dims[n], &degenerate[n])).collect::<std::result::Result<_, _>>()?;
        let wd = |what: &str, n: usize| Error::NotWellDefined(format!("{}: {what} on degenerate elements, degree {n}", self.name));
        let mut b = vec![Matrix::zeros(0, sq[0].dim())];
        for n in 1..=self.top() {
            b.push(induced_map(&self.b[n], &sq[n], &sq[n - 1]).map_err(|_| wd("b", n))?);
        }
        let big_b = (0..self.big_b.len()).map(|n| induced_map(&self.big_b[n], &sq[n], &sq[n + 1]).map_err(|_| wd("B", n))).collect::<Result<_>>()?;
        Ok(MixedComplex { name: format!("{} normalized", self.name), dims: sq.iter().map(|q| q.dim()).collect(), b, big_b })
    }
}

/// The cyclic module `C_n(A) = A^{⊗(n+1)}` with `d_i` multiplying `x_i x_{i+1}`,
/// `d_n(x) = (x_n x_0, x_1, ..)`, `s_j` inserting `1` after `x_j` and
/// `t(x_0..x_n) = (x_n, x_0, .., x_{n-1})`, on levels `0..=top`.
pub fn algebra_cyclic_module(alg: &crate::algebra::FinDimAlgebra, top: usize) -> ParacyclicModule {
    let f = alg.factor();
    let a = alg.space();
    let levels = (0..=top)
        .map(|n| {
            let sp = alg.power(n + 1);
            let t = TensorMap::flip(&alg.power(n), &a).mat;
            let mut faces: Vec<Matrix> = (0..n).map(|i| alg.mult_map().at(&sp, i).mat).collect();
            if n >= 1 {
                faces.push(faces[0].mul(&t));
            }
            let degens = (0..=n).map(|j| insert_unit(alg, f, n + 1, j + 1)).collect();
            Level::new(sp.dim(), Some(sp), faces, Some(degens), t)
        })
        .collect();
    ParacyclicModule { name: format!("C({})", alg.name()), levels }
}

/// Inserts the unit of `alg` at position `pos` of `A^{⊗len}`.
pub fn insert_unit(alg: &crate::algebra::FinDimAlgebra, f: &Factor, len: usize, pos: usize) -> Matrix {
    let left = TensorSpace::power(f, pos);
    let right = TensorSpace::power(f, len - pos);
    alg.unit_map().embed(&left, &right).mat
}

/// The same cyclic module generated from `d_n` and `s_{-1}(x) = (1, x)`.
pub fn algebra_cyclic_module_generated(alg: &crate::algebra::FinDimAlgebra, top: usize) -> Result<ParacyclicModule> {
    let a = alg.space();
    let spaces: Vec<(usize, Option<TensorSpace>)> = (0..=top + 1).map(|n| (alg.power(n + 1).dim(), Some(alg.power(n + 1)))).collect();
    let mut last = vec![Matrix::zeros(0, 0)];
    for n in 1..=top + 1 {
        let t = TensorMap::flip(&alg.power(n), &a).mat;
        last.push(alg.mult_map().at(&alg.power(n + 1), 0).mat.mul(&t));
    }
    let extra: Vec<Matrix> = (0..=top).map(|n| insert_unit(alg, alg.factor(), n + 1, 0)).collect();
    ParacyclicModule::from_generators(&format!("C({}) generated", alg.name()), spaces, &last, &extra)
}
