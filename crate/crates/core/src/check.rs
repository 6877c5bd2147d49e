//! Pass/fail records for identity checks, with witnesses on failure.

use serde::Serialize;
use smashcyc_exact::{Matrix, Scalar, SparseVec};

use crate::tensor::{TensorMap, TensorSpace};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Term {
    pub basis: Vec<String>,
    pub coeff: Scalar,
}

/// A basis input on which two sides of an identity differ.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub input: Vec<String>,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOutcome {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), passed: true, witness: None, note: None }
    }

    pub fn fail(name: impl Into<String>, note: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), passed: false, witness: None, note: Some(note.into()) }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool) -> Self {
        CheckOutcome { name: name.into(), passed: ok, witness: None, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckReport {
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn push(&mut self, o: CheckOutcome) {
        self.outcomes.push(o);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.outcomes.extend(other.outcomes);
    }

    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.failures().next()
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }
}

fn terms(v: &SparseVec, labels: &dyn Fn(usize) -> Vec<String>) -> Vec<Term> {
    v.iter().map(|(i, c)| Term { basis: labels(*i), coeff: c.clone() }).collect()
}

/// Compares two matrices column by column, labelling basis vectors with the
/// given functions.
pub fn compare_matrices(
    name: impl Into<String>,
    lhs: &Matrix,
    rhs: &Matrix,
    src: &dyn Fn(usize) -> Vec<String>,
    dst: &dyn Fn(usize) -> Vec<String>,
) -> CheckOutcome {
    let name = name.into();
    if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
        return CheckOutcome::fail(
            name,
            format!("shape mismatch {}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()),
        );
    }
    match lhs.first_difference(rhs) {
        None => CheckOutcome::pass(name),
        Some(j) => CheckOutcome {
            name,
            passed: false,
            witness: Some(Witness { input: src(j), lhs: terms(lhs.column(j), dst), rhs: terms(rhs.column(j), dst) }),
            note: None,
        },
    }
}

/// Compares matrices on plain coordinate spaces (basis labelled `v<i>`).
pub fn compare_plain(name: impl Into<String>, lhs: &Matrix, rhs: &Matrix) -> CheckOutcome {
    let lab = |i: usize| vec![format!("v{i}")];
    compare_matrices(name, lhs, rhs, &lab, &lab)
}

pub fn compare_maps(name: impl Into<String>, lhs: &TensorMap, rhs: &TensorMap) -> CheckOutcome {
    let name = name.into();
    if lhs.src != rhs.src || lhs.dst != rhs.dst {
        return CheckOutcome::fail(
            name,
            format!("type mismatch {:?}->{:?} vs {:?}->{:?}", lhs.src, lhs.dst, rhs.src, rhs.dst),
        );
    }
    compare_on(name, &lhs.src, &lhs.dst, &lhs.mat, &rhs.mat)
}

/// Compares matrices between the given tensor spaces.
pub fn compare_on(name: impl Into<String>, src: &TensorSpace, dst: &TensorSpace, lhs: &Matrix, rhs: &Matrix) -> CheckOutcome {
    let s = |i: usize| src.labels(i);
    let d = |i: usize| dst.labels(i);
    compare_matrices(name, lhs, rhs, &s, &d)
}
