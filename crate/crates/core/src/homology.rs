//! Homology of chain complexes and mixed complexes.
//!
//! A complex built on levels `0..=top` yields homology in degrees `0..=top`;
//! the top degree lacks the incoming differential and is flagged.

use serde::{Deserialize, Serialize};
use smashcyc_exact::{rank, Matrix, Subquotient};

use crate::check::{CheckOutcome, CheckReport};
use crate::cyclic::{MixedComplex, ParacyclicModule};
use crate::error::{Error, Result};
use crate::parallel::par_map;

#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub dims: Vec<usize>,
    /// `d[n]: degree n -> n-1`; `d[0]` has no rows.
    pub d: Vec<Matrix>,
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, d: Vec<Matrix>) -> Result<Self> {
        if dims.is_empty() || d.len() != dims.len() {
            return Err(Error::InvalidStructure("one differential per degree required".into()));
        }
        for (n, m) in d.iter().enumerate() {
            let rows = if n == 0 { 0 } else { dims[n - 1] };
            if (m.rows(), m.cols()) != (rows, dims[n]) {
                return Err(Error::InvalidStructure(format!("differential at degree {n} has shape {}x{}", m.rows(), m.cols())));
            }
        }
        Ok(ChainComplex { dims, d })
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// `d∘d = 0`, reporting the first failing degree.
    pub fn check(&self) -> Result<()> {
        match (2..=self.top()).find(|&n| !self.d[n - 1].mul(&self.d[n]).is_zero()) {
            Some(degree) => Err(Error::NotAComplex { degree }),
            None => Ok(()),
        }
    }

    /// Ranks of `d_1..d_top` (index 0 is zero).
    pub fn ranks(&self, workers: usize) -> Vec<usize> {
        par_map(workers, (0..=self.top()).collect(), |n| if n == 0 { 0 } else { rank(&self.d[n]) })
    }

    /// `dim H_n = dim ker d_n - rank d_{n+1}`, the top degree flagged.
    pub fn homology(&self, label: &str, workers: usize) -> Result<HomologyTable> {
        self.check()?;
        let r = self.ranks(workers);
        let top = self.top();
        let rows = (0..=top)
            .map(|n| HomologyRow { n, dim: self.dims[n] - r[n] - if n < top { r[n + 1] } else { 0 }, flagged: n == top })
            .collect();
        Ok(HomologyTable { label: label.to_string(), rows })
    }

    /// The homology subquotient `ker d_n / im d_{n+1}` for `n < top`.
    pub fn homology_subquotient(&self, n: usize) -> Result<Subquotient> {
        let z = smashcyc_exact::kernel(&self.d[n]);
        let z = if n == 0 { Matrix::identity(self.dims[0]) } else { z };
        Ok(Subquotient::new(&z, &self.d[n + 1])?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRow {
    pub n: usize,
    pub dim: usize,
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyTable {
    pub label: String,
    pub rows: Vec<HomologyRow>,
}

impl HomologyTable {
    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.dim).collect()
    }

    /// Dimensions of the degrees not affected by truncation.
    pub fn unflagged(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.flagged).map(|r| r.dim).collect()
    }

    pub fn dim(&self, n: usize) -> Option<usize> {
        self.rows.get(n).map(|r| r.dim)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,dim,flagged\n");
        for r in &self.rows {
            s.push_str(&format!("{},{},{}\n", r.n, r.dim, r.flagged));
        }
        s
    }

    /// Whether the unflagged parts of two tables agree on their common range.
    pub fn agrees_with(&self, other: &HomologyTable) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.flagged || b.flagged || a.dim == b.dim)
    }
}

/// Coefficients `W` for `HC(M; W)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientW {
    /// `k[u]/u k[u]`: Hochschild homology.
    Hochschild,
    /// `k[u,u⁻¹]/u k[u]`: cyclic homology.
    Cyclic,
    /// `k[u]`: negative cyclic homology.
    Negative,
    /// `k[u,u⁻¹]`: periodic cyclic homology.
    Periodic,
}

impl CoefficientW {
    fn ensure_supported(self) -> Result<()> {
        match self {
            CoefficientW::Hochschild | CoefficientW::Cyclic => Ok(()),
            _ => Err(Error::Unsupported(format!("{self:?} coefficients: each degree of M⊠W is infinite-dimensional"))),
        }
    }
}

/// Offsets of the `u^{-e}` blocks `M_{n-2e}` inside degree `n` of `M⊠W`.
pub fn box_blocks(dims: &[usize], n: usize, w: CoefficientW) -> Vec<(usize, usize)> {
    let es = if w == CoefficientW::Cyclic { n / 2 } else { 0 };
    (0..=es).map(|e| (e, dims[n - 2 * e])).collect()
}

/// `M⊠W` with differential `b + uB`; degree `n` is `⊕_e u^{-e} M_{n-2e}`,
/// blocks ordered by `e`.
pub fn box_complex(mc: &MixedComplex, w: CoefficientW) -> Result<ChainComplex> {
    w.ensure_supported()?;
    let top = mc.top();
    if mc.big_b.len() < top {
        return Err(Error::NotMixed(format!("{}: B needed up to degree {}", mc.name, top.saturating_sub(1))));
    }
    let sizes = |n: usize| box_blocks(&mc.dims, n, w).iter().map(|b| b.1).collect::<Vec<_>>();
    let dims = (0..=top).map(|n| sizes(n).iter().sum()).collect();
    let mut d = vec![Matrix::zeros(0, mc.dims[0])];
    for n in 1..=top {
        let mut blocks = Vec::new();
        for (e, _) in box_blocks(&mc.dims, n, w) {
            let m = n - 2 * e;
            if m >= 1 {
                blocks.push((e, e, &mc.b[m]));
            }
            if e >= 1 {
                blocks.push((e - 1, e, &mc.big_b[m]));
            }
        }
        d.push(Matrix::from_blocks(&sizes(n - 1), &sizes(n), &blocks));
    }
    ChainComplex::new(dims, d)
}

/// `HC(M; W)` for the two finite coefficient choices.
pub fn cyclic_homology(mc: &MixedComplex, w: CoefficientW, workers: usize) -> Result<HomologyTable> {
    let cc = box_complex(mc, w)?;
    let label = match w {
        CoefficientW::Hochschild => format!("HH({})", mc.name),
        _ => format!("HC({})", mc.name),
    };
    cc.homology(&label, workers).map_err(|e| match e {
        Error::NotAComplex { degree } => Error::NotMixed(format!("{}: (b+uB)² != 0 at degree {degree}", mc.name)),
        e => e,
    })
}

/// The `b`-complex of a paracyclic module.
pub fn hochschild_complex(m: &ParacyclicModule) -> ChainComplex {
    ChainComplex::new((0..=m.top()).map(|n| m.dim(n)).collect(), (0..=m.top()).map(|n| m.b(n)).collect()).expect("b has the right shape")
}

/// Connes' complex `C_n / im(1 - (-1)ⁿ t)` with the induced `b`.
pub fn connes_complex(m: &ParacyclicModule) -> Result<ChainComplex> {
    if !m.is_cyclic() {
        return Err(Error::NotCyclic(format!("{}: t^(n+1) != id", m.name())));
    }
    let sq: Vec<Subquotient> = (0..=m.top())
        .map(|n| {
            let rel = Matrix::identity(m.dim(n)).axpy(&smashcyc_exact::Scalar::sign(n + 1), m.t(n));
            Subquotient::quotient_of(m.dim(n), &rel)
        })
        .collect::<std::result::Result<_, _>>()?;
    let mut d = vec![Matrix::zeros(0, sq[0].dim())];
    for n in 1..=m.top() {
        d.push(smashcyc_exact::induced_map(&m.b(n), &sq[n], &sq[n - 1])?);
    }
    ChainComplex::new(sq.iter().map(|q| q.dim()).collect(), d)
}

pub fn connes_lambda_dims(m: &ParacyclicModule, workers: usize) -> Result<HomologyTable> {
    connes_complex(m)?.homology(&format!("HC^λ({})", m.name()), workers)
}

/// Dimension-level consistency of `HH` and `HC` with the long exact sequence
/// `.. -> HH_n -> HC_n -> HC_{n-2} -> HH_{n-1} -> ..` on unflagged degrees:
/// `HC_0 = HH_0` and each middle term is bounded by its neighbours.
pub fn sbi_consistency(hh: &HomologyTable, hc: &HomologyTable) -> CheckReport {
    let mut r = CheckReport::new();
    let top = hh.rows.iter().zip(&hc.rows).take_while(|(a, b)| !a.flagged && !b.flagged).count();
    let get = |t: &HomologyTable, n: isize| if n < 0 { 0 } else { t.rows[n as usize].dim };
    if top == 0 {
        return r;
    }
    r.push(CheckOutcome::from_bool("SBI: HC_0 = HH_0", get(hh, 0) == get(hc, 0)));
    for n in 1..top as isize {
        let at = |s: &str| format!("SBI: {s}, n={n}");
        r.push(CheckOutcome::from_bool(at("HH_n <= HC_(n-1) + HC_n"), get(hh, n) <= get(hc, n - 1) + get(hc, n)));
        r.push(CheckOutcome::from_bool(at("HC_n <= HH_n + HC_(n-2)"), get(hc, n) <= get(hh, n) + get(hc, n - 2)));
        r.push(CheckOutcome::from_bool(at("HC_(n-2) <= HC_n + HH_(n-1)"), get(hc, n - 2) <= get(hc, n) + get(hh, n - 1)));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::algebra_cyclic_module;
    use crate::presets;

    #[test]
    fn zero_differentials() {
        let cc = ChainComplex::new(vec![2, 3], vec![Matrix::zeros(0, 2), Matrix::zeros(2, 3)]).unwrap();
        assert_eq!(cc.homology("z", 1).unwrap().dims(), vec![2, 3]);
    }

    #[test]
    fn not_a_complex_is_rejected() {
        let one = Matrix::identity(1);
        let cc = ChainComplex::new(vec![1, 1, 1], vec![Matrix::zeros(0, 1), one.clone(), one]).unwrap();
        assert_eq!(cc.check(), Err(Error::NotAComplex { degree: 2 }));
    }

    #[test]
    fn group_algebra_values() {
        let k2 = presets::cyclic_group(2).unwrap().algebra().clone();
        let c = algebra_cyclic_module(&k2, 3);
        let mc = c.mixed_complex();
        let hh = cyclic_homology(&mc, CoefficientW::Hochschild, 1).unwrap();
        assert_eq!(hh.unflagged(), vec![2, 0, 0]);
        let hc = cyclic_homology(&mc, CoefficientW::Cyclic, 1).unwrap();
        assert_eq!(hc.unflagged(), vec![2, 0, 2]);
        assert!(connes_lambda_dims(&c, 1).unwrap().agrees_with(&hc));
        assert!(sbi_consistency(&hh, &hc).passed());
    }

    #[test]
    fn dual_numbers_values() {
        let c = algebra_cyclic_module(&presets::dual_numbers(), 4);
        let hh = cyclic_homology(&c.mixed_complex(), CoefficientW::Hochschild, 1).unwrap();
        assert_eq!(hh.unflagged(), vec![2, 1, 1, 1]);
        let hc = cyclic_homology(&c.mixed_complex(), CoefficientW::Cyclic, 1).unwrap();
        let lam = connes_lambda_dims(&c, 1).unwrap();
        assert_eq!(hc.dim(0), Some(2));
        assert!(lam.agrees_with(&hc));
    }

    #[test]
    fn infinite_coefficients_are_unsupported() {
        let c = algebra_cyclic_module(&presets::dual_numbers(), 1);
        for w in [CoefficientW::Negative, CoefficientW::Periodic] {
            assert!(matches!(cyclic_homology(&c.mixed_complex(), w, 1), Err(Error::Unsupported(_))));
        }
    }
}
