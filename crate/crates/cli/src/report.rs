//! The versioned report and its JSON, CSV and text renderings.
//!
//! CSV layout: one section per kind of content, each with its own header.
//! Checks: `check,passed,witness,note`. Tables: `table,n,dim,flagged`.
//! Spectral pages: `page,p,q,dim,rank`.

use std::collections::BTreeMap;
use std::fmt::Write;

use clap::ValueEnum;
use serde::Serialize;
use smashcyc::homology::HomologyTable;
use smashcyc::spectral::SpectralSequence;
use smashcyc::{CheckOutcome, CheckReport, Error};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub computation: String,
    pub input: String,
    pub input_kind: String,
    pub name: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckOutcome>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tables: Vec<HomologyTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral: Option<SpectralSequence>,
}

impl Report {
    pub fn new(computation: &str, input: &str, kind: &str, name: &str) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            computation: computation.into(),
            input: input.into(),
            input_kind: kind.into(),
            name: name.into(),
            parameters: BTreeMap::new(),
            passed: true,
            error: None,
            checks: Vec::new(),
            tables: Vec::new(),
            spectral: None,
        }
    }

    pub fn param(&mut self, key: &str, v: impl Serialize) {
        self.parameters.insert(key.into(), serde_json::to_value(v).expect("parameters serialize"));
    }

    pub fn checks(&mut self, r: CheckReport) {
        self.passed &= r.passed();
        self.checks.extend(r.outcomes);
    }

    pub fn table(&mut self, t: HomologyTable) {
        self.tables.push(t);
    }

    pub fn spectral(&mut self, ss: SpectralSequence) {
        self.spectral = Some(ss);
    }

    pub fn error(&mut self, e: &Error) {
        self.passed = false;
        self.error = Some(e.to_string());
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Json => serde_json::to_string_pretty(self).expect("reports serialize") + "\n",
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn csv(&self) -> String {
        let mut s = String::new();
        if !self.checks.is_empty() || self.error.is_some() {
            s.push_str("check,passed,witness,note\n");
            for c in &self.checks {
                let w = c.witness.as_ref().map(|w| w.input.join("⊗")).unwrap_or_default();
                let _ = writeln!(s, "{},{},{},{}", quote(&c.name), c.passed, quote(&w), quote(c.note.as_deref().unwrap_or("")));
            }
            if let Some(e) = &self.error {
                let _ = writeln!(s, "error,false,,{}", quote(e));
            }
        }
        if !self.tables.is_empty() {
            s.push_str("table,n,dim,flagged\n");
            for t in &self.tables {
                for r in &t.rows {
                    let _ = writeln!(s, "{},{},{},{}", quote(&t.label), r.n, r.dim, r.flagged);
                }
            }
        }
        if let Some(ss) = &self.spectral {
            s.push_str("page,p,q,dim,rank\n");
            for pg in &ss.pages {
                for (e, d) in pg.entries.iter().zip(&pg.differential_ranks) {
                    let _ = writeln!(s, "{},{},{},{},{}", pg.page, e.p, e.q, e.dim, d.rank);
                }
            }
        }
        s
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} on {} ({}): {}", self.computation, self.name, self.input_kind, if self.passed { "PASS" } else { "FAIL" });
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error: {e}");
        }
        for c in &self.checks {
            let _ = write!(s, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
            if let Some(w) = &c.witness {
                let _ = write!(s, " at {}", w.input.join("⊗"));
            }
            if let Some(n) = &c.note {
                let _ = write!(s, " ({n})");
            }
            s.push('\n');
        }
        for t in &self.tables {
            let dims: Vec<String> = t.rows.iter().map(|r| format!("{}{}", r.dim, if r.flagged { "*" } else { "" })).collect();
            let _ = writeln!(s, "  {}: {}", t.label, dims.join(" "));
        }
        if let Some(ss) = &self.spectral {
            for pg in &ss.pages {
                let cells: Vec<String> = pg.entries.iter().filter(|e| e.dim > 0).map(|e| format!("({},{})={}", e.p, e.q, e.dim)).collect();
                let _ = writeln!(s, "  E{}: {}", pg.page, cells.join(" "));
            }
        }
        s
    }
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
