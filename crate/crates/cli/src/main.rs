use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use smashcyc::cylindrical::homology_routes;
use smashcyc::descriptor::{check_field, load_input, matched_axioms, Descriptor, Input};
use smashcyc::homology::{cyclic_homology, connes_lambda_dims, sbi_consistency, CoefficientW, HomologyTable};
use smashcyc::spectral::{self, compare_page, expected_e1, expected_e2, Filtration, Side};
use smashcyc::{CheckOutcome, CheckReport, CylindricalModule, Error};
use smashcyc_exact::Field;

mod report;

use report::{Format, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Computation {
    Axioms,
    CylindricalCert,
    EzCheck,
    Hh,
    Hc,
    Coinvariants,
    SpectralRows,
    SpectralCols,
    SeparableCollapse,
    MatchedPairCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WArg {
    Hochschild,
    Cyclic,
}

/// Certification and homology computations for strong smash product algebras.
#[derive(Parser, Debug)]
#[command(name = "smashcyc", version)]
struct Args {
    /// Preset expression (e.g. `pareigis_surrogate(1)`) or path to a JSON descriptor.
    #[arg(long)]
    input: String,
    #[arg(long, value_enum)]
    computation: Computation,
    /// Highest reported degree; also the grid bound of cylindrical-cert.
    #[arg(long, default_value_t = 2)]
    n_max: usize,
    /// Grid bound in the p direction for cylindrical-cert (defaults to --n-max).
    #[arg(long)]
    p_max: Option<usize>,
    /// Grid bound in the q direction for cylindrical-cert (defaults to --n-max).
    #[arg(long)]
    q_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// `rational` or `cyclotomic:N`.
    #[arg(long, default_value = "rational")]
    field: String,
    /// Coinvariant side for coinvariants and separable-collapse.
    #[arg(long, value_enum, default_value_t = SideArg::A)]
    side: SideArg,
    /// Coefficients for the spectral sequences.
    #[arg(long, value_enum, default_value_t = WArg::Cyclic)]
    w: WArg,
}

/// An input problem: exit 2.
struct InputError(String);

fn input_error(field: &str, e: impl std::fmt::Display) -> InputError {
    InputError(format!("{field}: {e}"))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(report) => {
            let text = report.render(args.format);
            let written = match &args.out {
                Some(p) => std::fs::write(p, &text).map_err(|e| e.to_string()),
                None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: --out: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn stage(msg: &str) {
    eprintln!("[smashcyc] {msg}");
}

fn load(args: &Args) -> Result<Input, InputError> {
    let field = Field::parse(&args.field).map_err(|e| input_error("--field", e))?;
    if args.input.ends_with(".json") || std::path::Path::new(&args.input).is_file() {
        let text = std::fs::read_to_string(&args.input).map_err(|e| input_error("--input", e))?;
        let d = Descriptor::from_json(&text).map_err(|e| input_error("--input", e))?;
        check_field(&d, &field).map_err(|e| input_error("--field", e))?;
        return d.build().map_err(|e| input_error("--input", e));
    }
    let input = load_input(&args.input).map_err(|e| input_error("--input", e))?;
    let alien = input_scalars(&input).into_iter().find(|c| !field.contains(c));
    if let Some(c) = alien {
        return Err(input_error("--field", format!("{} has the scalar {c}, outside {field:?}", args.input)));
    }
    Ok(input)
}

fn input_scalars(input: &Input) -> Vec<smashcyc_exact::Scalar> {
    let m = match input {
        Input::Algebra(a) => a.mult().clone(),
        Input::Hopf(h) => h.delta().clone(),
        Input::Smash(s) => s.rmap().forward().mat.clone(),
        Input::HopfAction { action, .. } => action.mat.clone(),
        Input::Matched(p) => p.left().mat.clone(),
        Input::Double(d) => d.algebra().mult().clone(),
    };
    let mut out: Vec<_> = m.entries_row_major().into_iter().map(|e| e.2).collect();
    if let Input::Hopf(h) = input {
        out.extend(h.algebra().mult().entries_row_major().into_iter().map(|e| e.2));
    }
    out
}

fn run(args: &Args) -> Result<Report, InputError> {
    if args.n_max == 0 {
        return Err(InputError("--n-max: must be positive".into()));
    }
    for (flag, v) in [("--p-max", args.p_max), ("--q-max", args.q_max)] {
        if v == Some(0) {
            return Err(InputError(format!("{flag}: must be positive")));
        }
    }
    if args.workers == 0 {
        return Err(InputError("--workers: must be positive".into()));
    }
    stage(&format!("loading {}", args.input));
    let input = load(args)?;
    let mut report = Report::new(computation_name(args.computation), &args.input, input.kind(), &input.name());
    report.param("n_max", args.n_max);
    stage(&format!("running {}", computation_name(args.computation)));
    let result = match args.computation {
        Computation::Axioms => {
            report.checks(input.axioms());
            Ok(())
        }
        Computation::MatchedPairCheck => {
            let pair = match &input {
                Input::Matched(p) => (**p).clone(),
                Input::Double(d) => d.pair().clone(),
                other => return Err(InputError(format!("--input: {} is a {}, not a matched pair", args.input, other.kind()))),
            };
            report.checks(matched_axioms(&pair));
            Ok(())
        }
        other => smash_computation(args, other, &input, &mut report),
    };
    if let Err(e) = result {
        report.error(&e);
    }
    Ok(report)
}

fn computation_name(c: Computation) -> &'static str {
    match c {
        Computation::Axioms => "axioms",
        Computation::CylindricalCert => "cylindrical-cert",
        Computation::EzCheck => "ez-check",
        Computation::Hh => "hh",
        Computation::Hc => "hc",
        Computation::Coinvariants => "coinvariants",
        Computation::SpectralRows => "spectral-rows",
        Computation::SpectralCols => "spectral-cols",
        Computation::SeparableCollapse => "separable-collapse",
        Computation::MatchedPairCheck => "matched-pair-check",
    }
}

fn side(args: &Args) -> Side {
    match args.side {
        SideArg::A => Side::A,
        SideArg::B => Side::B,
    }
}

fn coefficients(args: &Args) -> CoefficientW {
    match args.w {
        WArg::Hochschild => CoefficientW::Hochschild,
        WArg::Cyclic => CoefficientW::Cyclic,
    }
}

fn truncated(mut t: HomologyTable, n_max: usize) -> HomologyTable {
    t.rows.retain(|r| r.n <= n_max);
    t
}

fn smash_computation(args: &Args, c: Computation, input: &Input, report: &mut Report) -> Result<(), Error> {
    let smash = input.smash()?;
    let cyl = CylindricalModule::new(&smash)?;
    let (n, workers) = (args.n_max, args.workers);
    match c {
        Computation::CylindricalCert => {
            let (pb, qb) = (args.p_max.unwrap_or(n), args.q_max.unwrap_or(n));
            report.param("p_max", pb);
            report.param("q_max", qb);
            let mut r = CheckReport::new();
            for q in 0..=qb {
                let row = cyl.row(q, pb);
                r.extend(row.check_paracyclic());
                r.extend(row.check_connes_relations());
            }
            for p in 0..=pb {
                let col = cyl.column(p, qb);
                r.extend(col.check_paracyclic());
                r.extend(col.check_connes_relations());
            }
            r.extend(cyl.check_commutations(pb.max(qb)));
            r.extend(cyl.check_cross_relations(pb.max(qb)));
            report.checks(r);
        }
        Computation::EzCheck => {
            let mut r = cyl.check_comparison(n);
            r.extend(cyl.diagonal(n).check_cyclic());
            for w in [CoefficientW::Hochschild, CoefficientW::Cyclic] {
                stage(&format!("routes for {w:?}"));
                let routes = homology_routes(&cyl, w, n + 1, workers)?;
                r.push(routes.outcome(&format!("{w:?} routes agree")));
                report.table(truncated(routes.direct, n));
            }
            report.checks(r);
        }
        Computation::Hh | Computation::Hc => {
            let m = smashcyc::cyclic::algebra_cyclic_module(smash.algebra(), n + 1);
            let mc = m.mixed_complex();
            let hh = cyclic_homology(&mc, CoefficientW::Hochschild, workers)?;
            if c == Computation::Hh {
                report.table(truncated(hh, n));
            } else {
                let hc = cyclic_homology(&mc, CoefficientW::Cyclic, workers)?;
                let lambda = connes_lambda_dims(&m, workers)?;
                let mut r = CheckReport::new();
                r.push(CheckOutcome::from_bool("λ-quotient agrees with the ⊠-complex", hc.agrees_with(&lambda)));
                r.extend(sbi_consistency(&hh, &hc));
                report.checks(r);
                report.table(truncated(hc, n));
            }
        }
        Computation::Coinvariants => {
            let co = spectral::coinvariant_cyclic(&cyl, side(args), n + 1)?;
            report.param("side", format!("{:?}", side(args)));
            report.checks(co.check_cyclic());
            let hc = cyclic_homology(&co.mixed_complex(), CoefficientW::Cyclic, workers)?;
            report.table(truncated(hc, n));
        }
        Computation::SpectralRows | Computation::SpectralCols => {
            let filt = if c == Computation::SpectralRows { Filtration::Rows } else { Filtration::Columns };
            let w = coefficients(args);
            let ss = spectral::spectral_sequence(&cyl, filt, w, n)?;
            stage("independent E¹, E² and convergence checks");
            let mut r = CheckReport::new();
            r.push(compare_page("E¹ = Hochschild homology with coefficients", &ss, 1, &expected_e1(&cyl, filt, w, n, workers)?));
            r.push(compare_page("E² = cyclic homology of the induced modules", &ss, 2, &expected_e2(&cyl, filt, w, n, workers)?));
            let direct = cyclic_homology(&smashcyc::cyclic::algebra_cyclic_module(smash.algebra(), n + 1).mixed_complex(), w, workers)?;
            let totals: Vec<usize> = (0..=n).map(|k| ss.infinity_total(k)).collect();
            let want: Vec<usize> = (0..=n).map(|k| direct.dim(k).unwrap_or(0)).collect();
            r.push(CheckOutcome::from_bool("Σ E^∞ = HC(A#B)", totals == want).with_note(format!("{totals:?} vs {want:?}")));
            report.checks(r);
            report.spectral(ss);
        }
        Computation::SeparableCollapse => {
            report.param("side", format!("{:?}", side(args)));
            report.checks(spectral::separable_collapse_check(&cyl, side(args), coefficients(args), n, workers)?);
        }
        Computation::Axioms | Computation::MatchedPairCheck => unreachable!("handled without a smash product"),
    }
    Ok(())
}
