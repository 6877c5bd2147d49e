//! Acceptance suite: one line per criterion, each with its runtime budget.
//!
//! Run with `cargo test --release -p smashcyc --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use smashcyc::cyclic::algebra_cyclic_module;
use smashcyc::cylindrical::homology_routes;
use smashcyc::descriptor::{load_input, matched_axioms};
use smashcyc::homology::{connes_lambda_dims, cyclic_homology, CoefficientW};
use smashcyc::presets;
use smashcyc::spectral::{self, compare_page, expected_e1, expected_e2, Bimodule, Filtration, Side};
use smashcyc::{CheckReport, CylindricalModule, DoubleCrossproduct, ParacyclicModule, SmashAlgebra};

const PRESETS: &[&str] = &[
    "dual_numbers",
    "cyclic_group(2)",
    "cyclic_group(3)",
    "sweedler",
    "taft(3)",
    "module_algebra_5_2(2)",
    "pareigis_surrogate(1)",
    "pareigis_surrogate(2)",
    "bismash(z2,z2)",
    "bismash(z3,z2,inv)",
    "drinfeld_double_sweedler",
    "tensor_flip(K2,K2)",
];

/// Smash presets of dimension at most 8, with their Φ/Ψ and row/column bounds.
fn small_smash() -> Vec<(&'static str, SmashAlgebra, usize)> {
    ["pareigis_surrogate(1)", "tensor_flip(K2,K2)", "bismash(z2,z2)", "module_algebra_5_2(2)", "pareigis_surrogate(2)"]
        .into_iter()
        .map(|e| {
            let s = presets::preset(e).unwrap().smash().unwrap();
            let bound = if s.algebra().dim() <= 4 { 3 } else { 2 };
            (e, s, bound)
        })
        .collect()
}

fn cyl(e: &str) -> CylindricalModule {
    CylindricalModule::new(&presets::preset(e).unwrap().smash().unwrap()).unwrap()
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_report(r: &CheckReport) -> Outcome {
    match r.first_failure() {
        None => Outcome { ok: true, detail: format!("{} identities", r.len()) },
        Some(f) => Outcome { ok: false, detail: format!("{} failed; witness {:?}; {:?}", f.name, f.witness.as_ref().map(|w| &w.input), f.note) },
    }
}

fn criterion_1() -> Outcome {
    let mut r = CheckReport::new();
    for e in PRESETS {
        r.extend(load_input(e).unwrap().axioms());
    }
    let p1 = presets::pareigis_surrogate(1).unwrap();
    r.extend(p1.algebra().check_algebra_map(presets::sweedler().algebra(), &presets::surrogate_to_sweedler(), true));
    from_report(&r)
}

fn criterion_2() -> Outcome {
    let mut r = CheckReport::new();
    for (_, s, bound) in small_smash() {
        r.extend(algebra_cyclic_module(s.algebra(), 4).check_connes_relations());
        let c = CylindricalModule::new(&s).unwrap();
        for k in 0..=bound {
            r.extend(c.row(k, bound).check_connes_relations());
            r.extend(c.column(k, bound).check_connes_relations());
        }
    }
    from_report(&r)
}

fn criterion_3() -> Outcome {
    let mut r = CheckReport::new();
    for (e, bound) in [("pareigis_surrogate(1)", 3), ("module_algebra_5_2(2)", 3), ("tensor_flip(K2,K2)", 3), ("drinfeld_double_sweedler", 1)] {
        r.extend(cyl(e).certify(bound));
    }
    from_report(&r)
}

fn criterion_4() -> Outcome {
    let mut r = CheckReport::new();
    for (_, s, bound) in small_smash() {
        r.extend(CylindricalModule::new(&s).unwrap().check_comparison(bound));
    }
    from_report(&r)
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for e in ["dual_numbers", "cyclic_group(2)", "pareigis_surrogate(1)", "tensor_flip(K2,K2)", "bismash(z2,z2)", "module_algebra_5_2(2)", "pareigis_surrogate(2)"] {
        let c = cyl(e);
        for w in [CoefficientW::Hochschild, CoefficientW::Cyclic] {
            let routes = homology_routes(&c, w, 3, 1).unwrap();
            count += 1;
            if !routes.agree() {
                bad.push(format!("{e} {w:?}: {:?}", routes.outcome("").note));
            }
        }
    }
    Outcome { ok: bad.is_empty(), detail: if bad.is_empty() { format!("{count} route triples agree") } else { bad.join("; ") } }
}

fn lambda_agrees(m: &ParacyclicModule) -> bool {
    let mc = m.mixed_complex();
    let hc = cyclic_homology(&mc, CoefficientW::Cyclic, 1).unwrap();
    connes_lambda_dims(m, 1).unwrap().agrees_with(&hc)
}

fn criterion_6() -> Outcome {
    let mut modules: Vec<ParacyclicModule> = Vec::new();
    for e in PRESETS.iter().filter(|e| **e != "drinfeld_double_sweedler") {
        modules.push(algebra_cyclic_module(presets::preset(e).unwrap().algebra(), 3));
    }
    for (e, _, _) in small_smash() {
        let c = cyl(e);
        modules.push(c.diagonal(3));
        modules.push(spectral::coinvariant_cyclic(&c, Side::A, 3).unwrap());
        modules.push(spectral::coinvariant_cyclic(&c, Side::B, 3).unwrap());
    }
    let lambda_bad: Vec<String> = modules.iter().filter(|m| !lambda_agrees(m)).map(|m| m.name().to_string()).collect();
    let d = Bimodule::regular(&presets::dual_numbers());
    let bar = d.hochschild_with_coefficients(3, 1).unwrap().unflagged();
    let res = spectral::dual_numbers_resolution_homology(&d, 3, 1).unwrap().unflagged();
    let col = spectral::column_bimodule(&cyl("pareigis_surrogate(1)"), 0);
    let col_ok = col.hochschild_with_coefficients(2, 1).unwrap().unflagged() == spectral::dual_numbers_resolution_homology(&col, 2, 1).unwrap().unflagged();
    let ok = lambda_bad.is_empty() && bar == vec![2, 1, 1, 1] && res == bar && col_ok;
    Outcome { ok, detail: format!("{} cyclic modules; bar {bar:?}, resolution {res:?}; failing λ: {lambda_bad:?}", modules.len()) }
}

fn criterion_7() -> Outcome {
    let k2 = presets::cyclic_group(2).unwrap().algebra().clone();
    let run = || {
        let mc = algebra_cyclic_module(&k2, 4).mixed_complex();
        let hh = cyclic_homology(&mc, CoefficientW::Hochschild, 1).unwrap();
        let mc3 = algebra_cyclic_module(&k2, 3).mixed_complex();
        let hc = cyclic_homology(&mc3, CoefficientW::Cyclic, 1).unwrap();
        (hh, hc)
    };
    let (hh, hc) = run();
    let (hh2, hc2) = run();
    let stable = serde_json::to_string(&(&hh, &hc)).unwrap() == serde_json::to_string(&(&hh2, &hc2)).unwrap();
    let ok = hh.unflagged() == vec![2, 0, 0, 0] && hc.unflagged() == vec![2, 0, 2] && stable;
    Outcome { ok, detail: format!("HH {:?}, HC {:?}, byte-identical reruns: {stable}", hh.unflagged(), hc.unflagged()) }
}

fn criterion_8() -> Outcome {
    let mut r = CheckReport::new();
    for e in ["tensor_flip(K2,K2)", "module_algebra_5_2(2)"] {
        let c = cyl(e);
        let direct = cyclic_homology(&algebra_cyclic_module(c.smash().algebra(), 3).mixed_complex(), CoefficientW::Cyclic, 1).unwrap();
        for filt in [Filtration::Rows, Filtration::Columns] {
            let w = CoefficientW::Cyclic;
            let ss = spectral::spectral_sequence(&c, filt, w, 2).unwrap();
            r.push(compare_page(&format!("{e} {filt:?} E¹"), &ss, 1, &expected_e1(&c, filt, w, 2, 1).unwrap()));
            r.push(compare_page(&format!("{e} {filt:?} E²"), &ss, 2, &expected_e2(&c, filt, w, 2, 1).unwrap()));
            let totals: Vec<usize> = (0..=2).map(|n| ss.infinity_total(n)).collect();
            r.push(smashcyc::CheckOutcome::from_bool(format!("{e} {filt:?} convergence"), totals == direct.unflagged()[..=2]).with_note(format!("{totals:?}")));
        }
    }
    from_report(&r)
}

fn criterion_9() -> Outcome {
    from_report(&spectral::separable_collapse_check(&cyl("module_algebra_5_2(2)"), Side::A, CoefficientW::Cyclic, 2, 1).unwrap())
}

fn criterion_10() -> Outcome {
    let pair = presets::sweedler_matched_pair().unwrap();
    let mut r = pair.check_inverse_antipodes();
    let d = DoubleCrossproduct::build(pair.clone()).unwrap();
    r.extend(d.check_inverse_formula().unwrap());
    r.extend(d.hopf().check());
    r.extend(matched_axioms(&pair));
    from_report(&r)
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("1 axiom certification of every preset", criterion_1, Duration::from_secs(5)),
        ("2 bB+Bb = 1-T and bT = Tb", criterion_2, Duration::from_secs(30)),
        ("3 cylindrical condition and commutations", criterion_3, Duration::from_secs(300)),
        ("4 Φ/Ψ comparison with C(A#B)", criterion_4, Duration::from_secs(120)),
        ("5 direct, diagonal and total routes agree", criterion_5, Duration::from_secs(600)),
        ("6 λ-quotient and resolution oracles", criterion_6, Duration::from_secs(60)),
        ("7 HH(K2) and HC(K2)", criterion_7, Duration::from_secs(60)),
        ("8 row and column spectral sequences", criterion_8, Duration::from_secs(600)),
        ("9 separable collapse", criterion_9, Duration::from_secs(300)),
        ("10 explicit inverse of R for the Sweedler pair", criterion_10, Duration::from_secs(60)),
    ];
    let mut failed = Vec::new();
    for (name, f, budget) in criteria {
        let start = Instant::now();
        let o = f();
        let took = start.elapsed();
        let ok = o.ok && took <= budget;
        println!("[{}] {name} ({:.2?} of {:?}): {}", if ok { "PASS" } else { "FAIL" }, took, budget, o.detail);
        if !ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
