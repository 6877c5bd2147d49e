//! JSON descriptors for algebras, Hopf algebras, smash products and matched
//! pairs, and the axiom suite run on a loaded input.
//!
//! Loading never checks axioms: a malformed structure is reported by
//! [`Input::axioms`] with witnesses rather than rejected at parse time.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use smashcyc_exact::{Field, Matrix, Scalar};

use crate::algebra::FinDimAlgebra;
use crate::check::{CheckOutcome, CheckReport};
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::matched::{DoubleCrossproduct, MatchedPair};
use crate::presets::{self, Preset};
use crate::smash::{check_module_algebra, crossed_product_rmap, RMap, SmashAlgebra};
use crate::tensor::{TensorMap, TensorSpace};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDescriptor {
    pub k: usize,
    pub c: Scalar,
}

/// `e_i e_j = Σ c e_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductDescriptor {
    pub i: usize,
    pub j: usize,
    pub out: Vec<TermDescriptor>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDescriptor {
    pub row: usize,
    pub col: usize,
    pub c: Scalar,
}

/// A sparse matrix; duplicate entries are summed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDescriptor {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<EntryDescriptor>,
}

impl MatrixDescriptor {
    pub fn from_matrix(m: &Matrix) -> Self {
        let entries = m.entries_row_major().into_iter().map(|(row, col, c)| EntryDescriptor { row, col, c }).collect();
        MatrixDescriptor { rows: m.rows(), cols: m.cols(), entries }
    }

    pub fn to_matrix(&self, what: &str) -> Result<Matrix> {
        if let Some(e) = self.entries.iter().find(|e| e.row >= self.rows || e.col >= self.cols) {
            return Err(Error::InvalidStructure(format!("{what}: entry ({}, {}) outside {}x{}", e.row, e.col, self.rows, self.cols)));
        }
        Ok(Matrix::from_triplets(self.rows, self.cols, self.entries.iter().map(|e| (e.row, e.col, e.c.clone()))))
    }

    fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.entries.iter().map(|e| &e.c)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDescriptor {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Scalar>,
    pub mult: Vec<ProductDescriptor>,
}

impl AlgebraDescriptor {
    pub fn from_algebra(a: &FinDimAlgebra) -> Self {
        let d = a.dim();
        let mut unit = vec![Scalar::ZERO; d];
        for (k, c) in a.unit() {
            unit[*k] = c.clone();
        }
        let mult = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .filter(|&(i, j)| !a.basis_product(i, j).is_empty())
            .map(|(i, j)| ProductDescriptor { i, j, out: a.basis_product(i, j).iter().map(|(k, c)| TermDescriptor { k: *k, c: c.clone() }).collect() })
            .collect();
        AlgebraDescriptor { name: a.name().to_string(), dim: d, basis: a.labels().to_vec(), unit, mult }
    }

    pub fn build(&self) -> Result<FinDimAlgebra> {
        let d = self.dim;
        let field = |f: &str, msg: String| Error::InvalidStructure(format!("{}: field `{f}`: {msg}", self.name));
        if self.basis.len() != d {
            return Err(field("basis", format!("{} labels for dim {d}", self.basis.len())));
        }
        if self.unit.len() != d {
            return Err(field("unit", format!("{} scalars for dim {d}", self.unit.len())));
        }
        let mut trip = Vec::new();
        for p in &self.mult {
            if p.i >= d || p.j >= d || p.out.iter().any(|t| t.k >= d) {
                return Err(field("mult", format!("index out of range in product ({}, {})", p.i, p.j)));
            }
            trip.extend(p.out.iter().map(|t| (t.k, p.i * d + p.j, t.c.clone())));
        }
        let unit = self.unit.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
        FinDimAlgebra::new_unchecked(&self.name, self.basis.clone(), unit, Matrix::from_triplets(d, d * d, trip))
    }

    fn scalars(&self) -> Vec<&Scalar> {
        self.unit.iter().chain(self.mult.iter().flat_map(|p| p.out.iter().map(|t| &t.c))).collect()
    }
}

/// An algebra descriptor with coproduct, counit and antipode matrices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDescriptor {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Scalar>,
    pub mult: Vec<ProductDescriptor>,
    pub coproduct: MatrixDescriptor,
    pub counit: MatrixDescriptor,
    pub antipode: MatrixDescriptor,
}

impl HopfDescriptor {
    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        let a = AlgebraDescriptor::from_algebra(h.algebra());
        HopfDescriptor {
            name: a.name,
            dim: a.dim,
            basis: a.basis,
            unit: a.unit,
            mult: a.mult,
            coproduct: MatrixDescriptor::from_matrix(h.delta()),
            counit: MatrixDescriptor::from_matrix(h.eps()),
            antipode: MatrixDescriptor::from_matrix(h.antipode()),
        }
    }

    fn algebra(&self) -> AlgebraDescriptor {
        AlgebraDescriptor { name: self.name.clone(), dim: self.dim, basis: self.basis.clone(), unit: self.unit.clone(), mult: self.mult.clone() }
    }

    pub fn build(&self) -> Result<HopfAlgebra> {
        let alg = self.algebra().build()?;
        HopfAlgebra::new_unchecked(alg, self.coproduct.to_matrix("coproduct")?, self.counit.to_matrix("counit")?, self.antipode.to_matrix("antipode")?)
    }

    fn scalars(&self) -> Vec<&Scalar> {
        let mut v: Vec<&Scalar> = self.unit.iter().chain(self.mult.iter().flat_map(|p| p.out.iter().map(|t| &t.c))).collect();
        v.extend(self.coproduct.scalars().chain(self.counit.scalars()).chain(self.antipode.scalars()));
        v
    }
}

/// A preset name or an inline descriptor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Preset(String),
    Inline(AlgebraDescriptor),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfRef {
    Preset(String),
    Inline(HopfDescriptor),
}

impl AlgebraRef {
    fn resolve(&self) -> Result<FinDimAlgebra> {
        match self {
            AlgebraRef::Preset(name) => presets::named_algebra(name).or_else(|_| Ok(presets::preset(name)?.algebra().clone())),
            AlgebraRef::Inline(d) => d.build(),
        }
    }

    fn scalars(&self) -> Vec<&Scalar> {
        match self {
            AlgebraRef::Preset(_) => vec![],
            AlgebraRef::Inline(d) => d.scalars(),
        }
    }
}

impl HopfRef {
    fn resolve(&self) -> Result<HopfAlgebra> {
        match self {
            HopfRef::Preset(name) => match presets::preset(name)? {
                Preset::Hopf(h) => Ok(h),
                Preset::Matched(d) => Ok(d.hopf().clone()),
                other => Err(Error::InvalidStructure(format!("preset {name} is a {}, not a Hopf algebra", other.kind()))),
            },
            HopfRef::Inline(d) => d.build(),
        }
    }

    fn scalars(&self) -> Vec<&Scalar> {
        match self {
            HopfRef::Preset(_) => vec![],
            HopfRef::Inline(d) => d.scalars(),
        }
    }
}

/// `R: B⊗A -> A⊗B` given as a matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmashDescriptor {
    #[serde(rename = "A")]
    pub a: AlgebraRef,
    #[serde(rename = "B")]
    pub b: AlgebraRef,
    #[serde(rename = "R")]
    pub r: MatrixDescriptor,
}

/// A left `H`-module algebra `A`, giving the crossed product `A⋊H`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfActionDescriptor {
    #[serde(rename = "H")]
    pub h: HopfRef,
    #[serde(rename = "A")]
    pub a: AlgebraRef,
    /// `H⊗A -> A`.
    pub action: MatrixDescriptor,
}

/// Actions `▷: H⊗B -> B` and `◁: H⊗B -> H`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatchedPairDescriptor {
    #[serde(rename = "B")]
    pub b: HopfRef,
    #[serde(rename = "H")]
    pub h: HopfRef,
    pub left: MatrixDescriptor,
    pub right: MatrixDescriptor,
}

/// A preset with some entries of its R-map replaced.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatchDescriptor {
    pub preset: String,
    pub r_patch: Vec<EntryDescriptor>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HopfActionWrapper {
    hopf_action: HopfActionDescriptor,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatchedPairWrapper {
    matched_pair: MatchedPairDescriptor,
}

/// Any accepted input document.
#[derive(Clone, Debug, PartialEq)]
pub enum Descriptor {
    Algebra(AlgebraDescriptor),
    Hopf(HopfDescriptor),
    Smash(SmashDescriptor),
    HopfAction(HopfActionDescriptor),
    MatchedPair(MatchedPairDescriptor),
    Patch(PatchDescriptor),
}

impl Descriptor {
    /// Dispatches on the distinguishing key so that errors name the
    /// offending field of the intended shape.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::InvalidStructure(format!("JSON: {e}")))?;
        let obj = v.as_object().ok_or_else(|| Error::InvalidStructure("JSON: top level must be an object".into()))?;
        fn parse(kind: &'static str) -> impl Fn(serde_json::Error) -> Error {
            move |e| Error::InvalidStructure(format!("{kind} descriptor: {e}"))
        }
        if obj.contains_key("matched_pair") {
            let w: MatchedPairWrapper = serde_json::from_value(v).map_err(parse("matched_pair"))?;
            Ok(Descriptor::MatchedPair(w.matched_pair))
        } else if obj.contains_key("hopf_action") {
            let w: HopfActionWrapper = serde_json::from_value(v).map_err(parse("hopf_action"))?;
            Ok(Descriptor::HopfAction(w.hopf_action))
        } else if obj.contains_key("r_patch") {
            Ok(Descriptor::Patch(serde_json::from_value(v).map_err(parse("patch"))?))
        } else if obj.contains_key("R") {
            Ok(Descriptor::Smash(serde_json::from_value(v).map_err(parse("smash"))?))
        } else if obj.contains_key("coproduct") {
            Ok(Descriptor::Hopf(serde_json::from_value(v).map_err(parse("hopf"))?))
        } else {
            Ok(Descriptor::Algebra(serde_json::from_value(v).map_err(parse("algebra"))?))
        }
    }

    pub fn to_json(&self) -> String {
        let v = match self {
            Descriptor::Algebra(d) => serde_json::to_value(d),
            Descriptor::Hopf(d) => serde_json::to_value(d),
            Descriptor::Smash(d) => serde_json::to_value(d),
            Descriptor::HopfAction(d) => serde_json::to_value(HopfActionWrapper { hopf_action: d.clone() }),
            Descriptor::MatchedPair(d) => serde_json::to_value(MatchedPairWrapper { matched_pair: d.clone() }),
            Descriptor::Patch(d) => serde_json::to_value(d),
        };
        serde_json::to_string_pretty(&v.expect("descriptors serialize")).expect("values serialize")
    }

    /// Every scalar written inline in the document.
    pub fn scalars(&self) -> Vec<&Scalar> {
        match self {
            Descriptor::Algebra(d) => d.scalars(),
            Descriptor::Hopf(d) => d.scalars(),
            Descriptor::Smash(d) => [d.a.scalars(), d.b.scalars(), d.r.scalars().collect()].concat(),
            Descriptor::HopfAction(d) => [d.h.scalars(), d.a.scalars(), d.action.scalars().collect()].concat(),
            Descriptor::MatchedPair(d) => [d.b.scalars(), d.h.scalars(), d.left.scalars().collect(), d.right.scalars().collect()].concat(),
            Descriptor::Patch(d) => d.r_patch.iter().map(|e| &e.c).collect(),
        }
    }

    pub fn build(&self) -> Result<Input> {
        match self {
            Descriptor::Algebra(d) => Ok(Input::Algebra(d.build()?)),
            Descriptor::Hopf(d) => Ok(Input::Hopf(d.build()?)),
            Descriptor::Smash(d) => {
                let (a, b) = (d.a.resolve()?, d.b.resolve()?);
                Ok(Input::Smash(SmashAlgebra::build_unchecked(RMap::new(&a, &b, d.r.to_matrix("R")?)?)?))
            }
            Descriptor::HopfAction(d) => {
                let (h, a) = (d.h.resolve()?, d.a.resolve()?);
                let act = d.action.to_matrix("action")?;
                let src = TensorSpace::new(vec![h.algebra().factor().clone(), a.factor().clone()]);
                if (act.rows(), act.cols()) != (a.dim(), src.dim()) {
                    return Err(Error::InvalidStructure(format!("action: shape {}x{}, expected {}x{}", act.rows(), act.cols(), a.dim(), src.dim())));
                }
                let action = TensorMap::new(src, a.space(), act);
                Ok(Input::HopfAction { h, a, action })
            }
            Descriptor::MatchedPair(d) => {
                let pair = MatchedPair::new(d.b.resolve()?, d.h.resolve()?, d.left.to_matrix("left")?, d.right.to_matrix("right")?)?;
                Ok(Input::Matched(Box::new(pair)))
            }
            Descriptor::Patch(d) => {
                let s = presets::preset(&d.preset)?.smash()?;
                let r = s.rmap().forward().mat.clone();
                let mut trip: Vec<(usize, usize, Scalar)> = r.entries_row_major().into_iter().filter(|(i, j, _)| !d.r_patch.iter().any(|e| e.row == *i && e.col == *j)).collect();
                if let Some(e) = d.r_patch.iter().find(|e| e.row >= r.rows() || e.col >= r.cols()) {
                    return Err(Error::InvalidStructure(format!("r_patch: entry ({}, {}) outside {}x{}", e.row, e.col, r.rows(), r.cols())));
                }
                trip.extend(d.r_patch.iter().map(|e| (e.row, e.col, e.c.clone())));
                let mat = Matrix::from_triplets(r.rows(), r.cols(), trip);
                Ok(Input::Smash(SmashAlgebra::build_unchecked(RMap::new(s.a(), s.b(), mat)?)?))
            }
        }
    }
}

/// A loaded input whose axioms have not been checked.
#[derive(Clone, Debug)]
pub enum Input {
    Algebra(FinDimAlgebra),
    Hopf(HopfAlgebra),
    Smash(SmashAlgebra),
    HopfAction { h: HopfAlgebra, a: FinDimAlgebra, action: TensorMap },
    Matched(Box<MatchedPair>),
    /// A validated preset double crossproduct.
    Double(Box<DoubleCrossproduct>),
}

impl Input {
    pub fn from_preset(p: Preset) -> Self {
        match p {
            Preset::Algebra(a) => Input::Algebra(a),
            Preset::Hopf(h) => Input::Hopf(h),
            Preset::Smash(s) => Input::Smash(s),
            Preset::Matched(d) => Input::Double(d),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Input::Algebra(_) => "algebra",
            Input::Hopf(_) => "hopf",
            Input::Smash(_) => "smash",
            Input::HopfAction { .. } => "hopf_action",
            Input::Matched(_) => "matched_pair",
            Input::Double(_) => "double_crossproduct",
        }
    }

    pub fn name(&self) -> String {
        match self {
            Input::Algebra(a) => a.name().into(),
            Input::Hopf(h) => h.name().into(),
            Input::Smash(s) => s.name().into(),
            Input::HopfAction { h, a, .. } => format!("{}⋊{}", a.name(), h.algebra().name()),
            Input::Matched(m) => format!("{}⋈{}", m.b().name(), m.h().name()),
            Input::Double(d) => d.algebra().name().into(),
        }
    }

    /// Every structural identity applicable to this input.
    pub fn axioms(&self) -> CheckReport {
        let mut r = CheckReport::new();
        match self {
            Input::Algebra(a) => r.extend(a.check()),
            Input::Hopf(h) => {
                r.extend(h.algebra().check());
                r.extend(h.check());
            }
            Input::Smash(s) => r.extend(smash_axioms(s)),
            Input::HopfAction { h, a, action } => {
                r.extend(h.algebra().check());
                r.extend(h.check());
                r.extend(a.check());
                let m = check_module_algebra(h, a, action);
                let ok = m.passed();
                r.extend(m);
                if ok {
                    match crossed_product_rmap(h, a, &action.mat).and_then(SmashAlgebra::build_unchecked) {
                        Ok(s) => r.extend(smash_axioms(&s)),
                        Err(e) => r.push(CheckOutcome::fail("crossed product", e.to_string())),
                    }
                }
            }
            Input::Matched(p) => r.extend(matched_axioms(p)),
            Input::Double(d) => {
                r.extend(matched_axioms(d.pair()));
                r.extend(d.hopf().check());
            }
        }
        r
    }

    /// A validated smash product; plain algebras become `A # k`.
    pub fn smash(&self) -> Result<SmashAlgebra> {
        let first = |rep: CheckReport| match rep.first_failure() {
            Some(f) => Err(Error::AxiomViolation(format!("{} (witness {:?})", f.name, f.witness.as_ref().map(|w| &w.input)))),
            None => Ok(()),
        };
        match self {
            Input::Algebra(a) => {
                first(a.check())?;
                presets::with_ground(a)
            }
            Input::Hopf(h) => {
                first(h.algebra().check())?;
                presets::with_ground(h.algebra())
            }
            Input::Smash(s) => SmashAlgebra::build(s.rmap().clone()),
            Input::HopfAction { h, a, action } => {
                first(a.check())?;
                SmashAlgebra::build(crossed_product_rmap(h, a, &action.mat)?)
            }
            Input::Matched(p) => Ok(DoubleCrossproduct::build((**p).clone())?.smash().clone()),
            Input::Double(d) => Ok(d.smash().clone()),
        }
    }

    pub fn double(&self) -> Result<DoubleCrossproduct> {
        match self {
            Input::Matched(p) => DoubleCrossproduct::build((**p).clone()),
            Input::Double(d) => Ok((**d).clone()),
            other => Err(Error::InvalidStructure(format!("input is a {}, not a matched pair", other.kind()))),
        }
    }
}

/// R-map axioms, the inverse round trip, flip/braid relations, embeddings
/// and the product axioms of `A#_R B`.
pub fn smash_axioms(s: &SmashAlgebra) -> CheckReport {
    let mut r = CheckReport::new();
    r.extend(s.a().check());
    r.extend(s.b().check());
    let rm = s.rmap().check();
    let ok = rm.passed();
    r.extend(rm);
    r.extend(s.rmap().check_flip_braid());
    match s.rmap().invert() {
        Ok(inv) => {
            let back = inv.check();
            r.push(CheckOutcome::from_bool("R^-1 passes the R-map axioms iff R does", back.passed() == ok));
            r.extend(back);
        }
        Err(e) => r.push(CheckOutcome::fail("R^-1 passes the R-map axioms iff R does", e.to_string())),
    }
    r.extend(s.algebra().check());
    r.extend(s.check_embeddings());
    r
}

/// Matched-pair identities, the inverse-antipode identities and, when those
/// pass, the double crossproduct's inverse formula and Hopf axioms.
pub fn matched_axioms(p: &MatchedPair) -> CheckReport {
    let mut r = CheckReport::new();
    r.extend(p.b().check());
    r.extend(p.h().check());
    let m = p.check();
    let ok = m.passed();
    r.extend(m);
    r.extend(p.check_inverse_antipodes());
    if ok {
        match DoubleCrossproduct::build(p.clone()) {
            Ok(d) => {
                r.extend(smash_axioms(d.smash()));
                match d.check_inverse_formula() {
                    Ok(f) => r.extend(f),
                    Err(e) => r.push(CheckOutcome::fail("explicit inverse of R", e.to_string())),
                }
                r.extend(d.hopf().check());
            }
            Err(e) => r.push(CheckOutcome::fail("double crossproduct", e.to_string())),
        }
    }
    r
}

/// A preset expression, or a path to a JSON descriptor.
pub fn load_input(source: &str) -> Result<Input> {
    let path = Path::new(source);
    if source.ends_with(".json") || path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidStructure(format!("input: cannot read {source}: {e}")))?;
        return Descriptor::from_json(&text)?.build();
    }
    Ok(Input::from_preset(presets::preset(source)?))
}

/// Fails unless every inline scalar of the descriptor lies in `field`.
pub fn check_field(d: &Descriptor, field: &Field) -> Result<()> {
    match d.scalars().into_iter().find(|c| !field.contains(c)) {
        Some(c) => Err(Error::InvalidStructure(format!("scalar {c} is not in the field {field:?}"))),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_round_trip() {
        let h = presets::sweedler();
        let d = Descriptor::Hopf(HopfDescriptor::from_hopf(&h));
        let back = Descriptor::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        let Input::Hopf(h2) = back.build().unwrap() else { panic!() };
        assert_eq!(h2.algebra().mult(), h.algebra().mult());
        assert_eq!(h2.delta(), h.delta());
        assert!(Input::Hopf(h2).axioms().passed());
    }

    #[test]
    fn smash_from_json() {
        let s = presets::pareigis_surrogate(1).unwrap();
        let d = Descriptor::Smash(SmashDescriptor {
            a: AlgebraRef::Inline(AlgebraDescriptor::from_algebra(s.a())),
            b: AlgebraRef::Inline(AlgebraDescriptor::from_algebra(s.b())),
            r: MatrixDescriptor::from_matrix(&s.rmap().forward().mat),
        });
        let input = Descriptor::from_json(&d.to_json()).unwrap().build().unwrap();
        assert!(input.axioms().passed());
        assert_eq!(input.smash().unwrap().algebra().mult(), s.algebra().mult());
    }

    #[test]
    fn patched_r_fails_with_witness() {
        let text = r#"{"preset": "pareigis_surrogate(1)", "r_patch": [{"row": 3, "col": 3, "c": "-2"}]}"#;
        let input = Descriptor::from_json(text).unwrap().build().unwrap();
        let rep = input.axioms();
        assert!(!rep.passed());
        assert!(rep.failures().any(|f| f.witness.is_some()));
        assert!(matches!(input.smash(), Err(Error::AxiomViolation(_))));
    }

    #[test]
    fn malformed_input_names_field() {
        let err = Descriptor::from_json(r#"{"name": "x", "dim": 1, "basis": ["1"], "unit": ["1"]}"#).unwrap_err();
        assert!(err.to_string().contains("mult"), "{err}");
        let err = Descriptor::from_json(r#"{"name": "x", "dim": 2, "basis": ["1"], "unit": ["1"], "mult": []}"#).unwrap().build().unwrap_err();
        assert!(err.to_string().contains("basis"), "{err}");
    }

    #[test]
    fn hopf_action_input() {
        let text = r#"{"hopf_action": {"H": "cyclic_group(2)", "A": "cyclic_group(2)",
            "action": {"rows": 2, "cols": 4, "entries": [
                {"row": 0, "col": 0, "c": 1}, {"row": 1, "col": 1, "c": 1},
                {"row": 0, "col": 2, "c": 1}, {"row": 1, "col": 3, "c": -1}]}}}"#;
        let input = load_from_str(text);
        assert!(input.axioms().passed(), "{:?}", input.axioms().first_failure());
        assert_eq!(input.smash().unwrap().algebra().dim(), 4);
    }

    fn load_from_str(text: &str) -> Input {
        Descriptor::from_json(text).unwrap().build().unwrap()
    }

    #[test]
    fn matched_pair_presets_pass() {
        let input = load_input("drinfeld_double_sweedler").unwrap();
        assert!(input.axioms().passed());
        assert!(matches!(load_input("nope"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn field_membership() {
        let d = Descriptor::from_json(r#"{"name": "x", "dim": 1, "basis": ["1"], "unit": [{"order": 3, "coeffs": ["0", "1"]}], "mult": []}"#).unwrap();
        assert!(check_field(&d, &Field::Rational).is_err());
        assert!(check_field(&d, &Field::Cyclotomic(3)).is_ok());
    }
}
