//! Command-line front end: bracket queries, Lie-axiom suites,
//! classification tables, representation checks, constraint reports,
//! and the acceptance battery.
//!
//! Exit codes: 0 = all checks passed, 1 = defects found, 2 = usage or
//! configuration error. With a fixed seed the emitted reports are
//! byte-identical across runs.

use clap::{Args, Parser, Subcommand};
use corner_algebras::affine;
use corner_algebras::nonabelian::{self as na, ConstraintDescriptor, ConstraintVariant};
use corner_algebras::surface::{self, SpectralData};
use corner_algebras::torus;
use corner_exact::{GaussianRational, Monomial, Polynomial, Rational, VarFamily, VarLabel};
use corner_fock::constraint::{constraint_apply, vacuum_constraint_report};
use corner_fock::rep::defect_sweep;
use corner_fock::wakimoto::{wakimoto_op, WakimotoContext};
use corner_fock::{op_apply, rep_op, EvalConfig, Polarization, RepContext};
use corner_forge::{parse_algebra, parse_generator, thread_budget, ChargesFile};
use corner_lie::{bracket, verify, AlgebraElement, AlgebraKind, GeneratorLabel};
use serde::Serialize;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "corner-forge",
    about = "Exact symbolic computation for the corner algebras of 4d BF theory",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Bracket of two generators
    Bracket(BracketArgs),
    /// Antisymmetry + Jacobi + randomized bilinearity suite
    Jacobi(JacobiArgs),
    /// Emit the classification map onto the oscillator form
    Classify(ClassifyArgs),
    /// Representation checks
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Constraint descriptors and their module action
    Constraint {
        #[command(subcommand)]
        command: ConstraintCommand,
    },
    /// Free-field realization checks
    Wakimoto {
        #[command(subcommand)]
        command: WakimotoCommand,
    },
    /// Run the full acceptance battery
    Suite(SuiteArgs),
}

#[derive(Args)]
struct BracketArgs {
    #[arg(long)]
    algebra: String,
    #[arg(long, default_value = "0")]
    lambda: String,
    #[arg(long)]
    spectral_data: Option<PathBuf>,
    /// First generator, e.g. "J,1,1,0"
    #[arg(long)]
    x: String,
    /// Second generator, e.g. "K,1,-1,0"
    #[arg(long)]
    y: String,
}

#[derive(Args)]
struct JacobiArgs {
    #[arg(long)]
    algebra: String,
    #[arg(long, default_value = "0")]
    lambda: String,
    #[arg(long, default_value_t = 2)]
    window: i64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long)]
    spectral_data: Option<PathBuf>,
    /// Random-element rounds on top of the exhaustive sweep
    #[arg(long, default_value_t = 200)]
    rounds: usize,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    algebra: String,
    #[arg(long, default_value = "0")]
    lambda: String,
    #[arg(long)]
    spectral_data: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    window: i64,
}

#[derive(Subcommand)]
enum RepCommand {
    /// Sweep commutator defects for one representation table
    Check(RepCheckArgs),
}

#[derive(Args)]
struct RepCheckArgs {
    /// abelian | lambda0 | lambda0-repolarized | lambda | lambda-modified
    #[arg(long)]
    table: String,
    #[arg(long, default_value_t = 2)]
    window: i64,
    #[arg(long, default_value_t = 2)]
    max_degree: u32,
    /// Variable window for the test monomials
    #[arg(long, default_value_t = 1)]
    var_window: i64,
    #[arg(long)]
    charges: Option<PathBuf>,
    #[arg(long, default_value = "0")]
    lambda: String,
    /// Index cutoff for divergent families (modified table)
    #[arg(long)]
    cutoff: Option<i64>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Subcommand)]
enum ConstraintCommand {
    /// Print a descriptor's linear part and quadratic family rule
    Show(ConstraintShowArgs),
    /// Sweep the constraints over the vacuum sector
    Check(ConstraintCheckArgs),
}

#[derive(Args)]
struct ConstraintShowArgs {
    /// plus | minus | z
    #[arg(long)]
    variant: String,
    /// Modes r,s
    #[arg(long)]
    modes: String,
    #[arg(long, default_value = "0")]
    lambda: String,
}

#[derive(Args)]
struct ConstraintCheckArgs {
    /// standard | repolarized
    #[arg(long, default_value = "repolarized")]
    polarization: String,
    #[arg(long)]
    charges: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    window: i64,
    #[arg(long, default_value = "0")]
    lambda: String,
}

#[derive(Subcommand)]
enum WakimotoCommand {
    /// Verify the affine sl(2) relations for one (μ, ν)
    Check(WakimotoCheckArgs),
}

#[derive(Args)]
struct WakimotoCheckArgs {
    #[arg(long, default_value = "0")]
    mu: String,
    #[arg(long, default_value = "0")]
    nu: String,
    #[arg(long, default_value_t = 3)]
    window: i64,
    #[arg(long, default_value_t = 2)]
    max_degree: u32,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Serialize)]
struct Report<T: Serialize> {
    schema_version: u32,
    command: String,
    #[serde(flatten)]
    body: T,
}

fn emit<T: Serialize>(cli_output: &Option<PathBuf>, command: &str, body: T) -> Result<(), String> {
    let report = Report {
        schema_version: 1,
        command: command.to_string(),
        body,
    };
    let text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    match cli_output {
        Some(path) => std::fs::write(path, text.as_bytes()).map_err(|e| e.to_string())?,
        None => println!("{text}"),
    }
    Ok(())
}

fn parse_lambda(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| format!("bad Λ `{s}`: {e}"))
}

fn load_spectral(path: &Option<PathBuf>) -> Result<Option<SpectralData>, String> {
    match path {
        None => Ok(None),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            let sd: SpectralData =
                serde_json::from_str(&text).map_err(|e| format!("{}: {e}", p.display()))?;
            Ok(Some(sd))
        }
    }
}

fn load_charges(
    path: &Option<PathBuf>,
    lambda: &Rational,
) -> Result<torus::ChargeAssignment, String> {
    match path {
        None => Ok(torus::ChargeAssignment::new(lambda)),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            let file: ChargesFile =
                serde_json::from_str(&text).map_err(|e| format!("{}: {e}", p.display()))?;
            file.into_assignment(lambda)
        }
    }
}

fn table_for(
    algebra: AlgebraKind,
    lambda: &Rational,
    sd: &Option<SpectralData>,
) -> Result<corner_lie::BracketTable, String> {
    Ok(match algebra {
        AlgebraKind::AbelianTorus => torus::bracket_table(lambda),
        AlgebraKind::AbelianSurface => {
            let sd = sd.as_ref().ok_or("abelian-surface needs --spectral-data")?;
            surface::bracket_table(sd, lambda)
        }
        AlgebraKind::NonAbelian => na::bracket_table(lambda),
        AlgebraKind::NonAbelianLadder => na::ladder_table(lambda),
        AlgebraKind::AffineSl2 => affine::bracket_table(),
        AlgebraKind::OscillatorForm => torus::oscillator_table(lambda),
    })
}

fn window_generators_for(
    algebra: AlgebraKind,
    window: i64,
    sd: &Option<SpectralData>,
) -> Result<Vec<GeneratorLabel>, String> {
    Ok(match algebra {
        AlgebraKind::AbelianTorus => torus::window_generators(window),
        AlgebraKind::AbelianSurface => {
            let sd = sd.as_ref().ok_or("abelian-surface needs --spectral-data")?;
            surface::window_generators(sd)
        }
        AlgebraKind::NonAbelian => na::window_generators(window),
        AlgebraKind::NonAbelianLadder => na::ladder_window_generators(window),
        AlgebraKind::AffineSl2 => affine::window_generators(window),
        AlgebraKind::OscillatorForm => return Err("use the field bases here".into()),
    })
}

fn run_bracket(args: &BracketArgs, out: &Option<PathBuf>) -> Result<bool, String> {
    let algebra = parse_algebra(&args.algebra)?;
    let lambda = parse_lambda(&args.lambda)?;
    let sd = load_spectral(&args.spectral_data)?;
    let table = table_for(algebra, &lambda, &sd)?;
    let x = parse_generator(algebra, &args.x)?;
    let y = parse_generator(algebra, &args.y)?;
    let b = bracket(
        &AlgebraElement::generator(x),
        &AlgebraElement::generator(y),
        &table,
    )
    .map_err(|e| e.to_string())?;
    let result: Vec<(String, String)> = b
        .terms()
        .map(|(l, c)| (l.to_string(), c.to_string()))
        .collect();
    emit(out, "bracket", json!({ "result": result }))?;
    Ok(true)
}

fn run_jacobi(args: &JacobiArgs, out: &Option<PathBuf>) -> Result<bool, String> {
    let algebra = parse_algebra(&args.algebra)?;
    let lambda = parse_lambda(&args.lambda)?;
    let sd = load_spectral(&args.spectral_data)?;
    let table = table_for(algebra, &lambda, &sd)?;
    let gens = window_generators_for(algebra, args.window, &sd)?;
    let anti = verify::check_antisymmetry(&table, &gens).map_err(|e| e.to_string())?;
    let jac = verify::check_jacobi(&table, &gens).map_err(|e| e.to_string())?;
    let mut state = args.seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let rand = verify::check_random_elements(&table, &gens, args.rounds, &mut next)
        .map_err(|e| e.to_string())?;
    let witnesses: Vec<String> = anti
        .iter()
        .chain(jac.iter())
        .chain(rand.iter())
        .take(10)
        .map(|w| w.description.clone())
        .collect();
    let passed = witnesses.is_empty();
    emit(
        out,
        "jacobi",
        json!({
            "algebra": algebra.name(),
            "lambda": lambda.to_string(),
            "window": args.window,
            "generators": gens.len(),
            "random_rounds": args.rounds,
            "defects_found": anti.len() + jac.len() + rand.len(),
            "witnesses": witnesses,
        }),
    )?;
    Ok(passed)
}

fn run_classify(args: &ClassifyArgs, out: &Option<PathBuf>) -> Result<bool, String> {
    let algebra = parse_algebra(&args.algebra)?;
    let lambda = parse_lambda(&args.lambda)?;
    let sd = load_spectral(&args.spectral_data)?;
    let mut entries: Vec<(String, AlgebraElement)> = Vec::new();
    match algebra {
        AlgebraKind::AbelianTorus => {
            for g in torus::window_generators(args.window) {
                let img = torus::to_oscillator_label(&g, &lambda).map_err(|e| e.to_string())?;
                entries.push((g.to_string(), img));
            }
        }
        AlgebraKind::AbelianSurface => {
            let sd = sd.as_ref().ok_or("abelian-surface needs --spectral-data")?;
            let darboux = if lambda.is_zero() || sd.h1_dim() == 0 {
                None
            } else {
                Some(surface::darboux_normalize(sd).map_err(|e| e.to_string())?)
            };
            for g in surface::window_generators(sd) {
                let img = surface::to_oscillator_label(&g, sd, &lambda, darboux.as_ref())
                    .map_err(|e| e.to_string())?;
                entries.push((g.to_string(), img));
            }
        }
        AlgebraKind::NonAbelian => {
            for g in na::window_generators(args.window) {
                let img = na::to_ladder_label(&g).map_err(|e| e.to_string())?;
                entries.push((g.to_string(), img));
            }
        }
        _ => return Err("classify supports abelian-torus, abelian-surface, nonabelian".into()),
    }
    emit(
        out,
        "classify",
        json!({
            "algebra": algebra.name(),
            "lambda": lambda.to_string(),
            "images": entries,
        }),
    )?;
    Ok(true)
}

fn monomials_for(fams: &[VarFamily], var_window: i64, max_degree: u32) -> Vec<Polynomial> {
    let mut vars = Vec::new();
    for fam in fams {
        for m in -var_window..=var_window {
            for n in -var_window..=var_window {
                if let Some(v) = VarLabel::two_indexed(*fam, m, n) {
                    vars.push(v);
                }
            }
        }
    }
    let mut out = vec![Polynomial::one()];
    if max_degree >= 1 {
        for v in &vars {
            out.push(Polynomial::var(*v));
        }
    }
    if max_degree >= 2 {
        for (i, a) in vars.iter().enumerate() {
            for b in vars.iter().skip(i) {
                out.push(Polynomial::from_monomial(
                    Monomial::from_pairs([(*a, 1), (*b, 1)]),
                    GaussianRational::one(),
                ));
            }
        }
    }
    out
}

fn run_rep_check(args: &RepCheckArgs, out: &Option<PathBuf>) -> Result<bool, String> {
    let lambda = parse_lambda(&args.lambda)?;
    let (ctx, fams): (RepContext, Vec<VarFamily>) = match args.table.as_str() {
        "abelian" => {
            let ch = load_charges(&args.charges, &lambda)?;
            let fam = if lambda.is_zero() {
                VarFamily::V
            } else {
                VarFamily::X
            };
            (
                RepContext::abelian(lambda.clone(), ch).map_err(|e| e.to_string())?,
                vec![fam],
            )
        }
        "lambda0" => {
            let ch = load_charges(&args.charges, &Rational::zero())?;
            (
                RepContext::nonabelian_lambda0(ch, Polarization::Standard)
                    .map_err(|e| e.to_string())?,
                vec![VarFamily::J, VarFamily::K, VarFamily::P, VarFamily::V],
            )
        }
        "lambda0-repolarized" => {
            let ch = load_charges(&args.charges, &Rational::zero())?;
            (
                RepContext::nonabelian_lambda0(ch, Polarization::Repolarized)
                    .map_err(|e| e.to_string())?,
                vec![VarFamily::J, VarFamily::K, VarFamily::P, VarFamily::V],
            )
        }
        "lambda" => (
            RepContext::nonabelian_lambda(lambda.clone(), Polarization::Standard)
                .map_err(|e| e.to_string())?,
            vec![VarFamily::J, VarFamily::K, VarFamily::P, VarFamily::X],
        ),
        "lambda-modified" => (
            RepContext::nonabelian_lambda(lambda.clone(), Polarization::ModifiedLambda)
                .map_err(|e| e.to_string())?,
            vec![VarFamily::J, VarFamily::K, VarFamily::P, VarFamily::X],
        ),
        other => return Err(format!("unknown table `{other}`")),
    };
    let (pair_gens, lookup) = match ctx.algebra {
        corner_fock::RepAlgebra::AbelianOscillator => (
            torus::osc_window_generators(args.window, &ctx.lambda),
            torus::osc_window_generators(2 * args.window, &ctx.lambda),
        ),
        corner_fock::RepAlgebra::NonAbelian => (
            na::ladder_window_generators(args.window),
            na::ladder_window_generators(2 * args.window),
        ),
    };
    let monomials = monomials_for(&fams, args.var_window, args.max_degree);
    let cfg = match args.cutoff {
        Some(m) => EvalConfig::truncated(m),
        None => EvalConfig::exact(),
    };
    let sweep = defect_sweep(
        &ctx,
        &pair_gens,
        &lookup,
        &monomials,
        &cfg,
        thread_budget(),
        10,
    )
    .map_err(|e| e.to_string())?;

    // spanning evidence: positive-grade monomials annihilated by every
    // window plus-operator would signal an invariant subspace
    let mut singular_candidates = 0usize;
    let mut spanning_checked = 0usize;
    if ctx.algebra == corner_fock::RepAlgebra::NonAbelian
        && ctx.polarization == Polarization::Standard
    {
        let plus_ops: Vec<_> = na::ladder_window_generators(args.window)
            .into_iter()
            .filter(|g| {
                matches!(
                    g.symbol,
                    corner_lie::Symbol::JPlus
                        | corner_lie::Symbol::KPlus
                        | corner_lie::Symbol::PPlus
                )
            })
            .map(|g| rep_op(&g, &ctx).unwrap())
            .collect();
        for p in monomials.iter().filter(|p| {
            p.max_degree_in(VarFamily::J)
                + p.max_degree_in(VarFamily::K)
                + p.max_degree_in(VarFamily::P)
                > 0
        }) {
            spanning_checked += 1;
            let killed = plus_ops
                .iter()
                .all(|op| op_apply(op, p, &cfg).map(|q| q.is_zero()).unwrap_or(false));
            if killed {
                singular_candidates += 1;
            }
        }
    }

    let passed = sweep.defects_found == 0;
    emit(
        out,
        "rep check",
        json!({
            "table": args.table,
            "lambda": lambda.to_string(),
            "window": args.window,
            "max_degree": args.max_degree,
            "pairs_checked": sweep.pairs_checked,
            "defects_found": sweep.defects_found,
            "witnesses": sweep.witnesses,
            "delta_sign": RepContext::delta_sign_note(),
            "spanning_evidence": {
                "positive_grade_states_checked": spanning_checked,
                "annihilated_by_all_window_plus_ops": singular_candidates,
            },
        }),
    )?;
    Ok(passed)
}

fn run_constraint_show(args: &ConstraintShowArgs, out: &Option<PathBuf>) -> Result<bool, String> {
    let lambda = parse_lambda(&args.lambda)?;
    let variant = match args.variant.as_str() {
        "plus" => ConstraintVariant::Plus,
        "minus" => ConstraintVariant::Minus,
        "z" => ConstraintVariant::Z,
        other => return Err(format!("unknown variant `{other}`")),
    };
    let modes: Vec<i64> = args
        .modes
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let [r, s] = modes[..] else {
        return Err("--modes needs `r,s`".into());
    };
    let d = ConstraintDescriptor::new(variant, r, s, lambda.clone());
    emit(
        out,
        "constraint show",
        json!({
            "variant": variant.name(),
            "modes": [r, s],
            "lambda": lambda.to_string(),
            "linear_part": d.linear_part().to_string(),
            "description": d.describe(),
        }),
    )?;
    Ok(true)
}

fn run_constraint_check(args: &ConstraintCheckArgs, out: &Option<PathBuf>) -> Result<bool, String> {
    let lambda = parse_lambda(&args.lambda)?;
    if !lambda.is_zero() {
        return Err("the vacuum constraint report is a Λ = 0 check".into());
    }
    let ch = load_charges(&args.charges, &lambda)?;
    match args.polarization.as_str() {
        "repolarized" => {
            let ctx = RepContext::nonabelian_lambda0(ch, Polarization::Repolarized)
                .map_err(|e| e.to_string())?;
            let report = vacuum_constraint_report(&ctx, args.window).map_err(|e| e.to_string())?;
            let verdict = format!(
                "{}, {}",
                if report.z_satisfied {
                    "z-satisfied"
                } else {
                    "z-violated"
                },
                if report.minus_witness.is_some() {
                    "minus-obstructed"
                } else {
                    "minus-clean"
                }
            );
            let passed = report.z_satisfied;
            emit(
                out,
                "constraint check",
                json!({
                    "polarization": "repolarized",
                    "window": args.window,
                    "verdict": verdict,
                    "report": report,
                }),
            )?;
            Ok(passed)
        }
        "standard" => {
            let ctx = RepContext::nonabelian_lambda0(ch, Polarization::Standard)
                .map_err(|e| e.to_string())?;
            let d = ConstraintDescriptor::new(ConstraintVariant::Minus, 0, 0, lambda);
            let res = constraint_apply(&d, &Polynomial::one(), &ctx, &EvalConfig::exact());
            let diverged = matches!(res, Err(corner_fock::FockError::DivergentAction { .. }));
            emit(
                out,
                "constraint check",
                json!({
                    "polarization": "standard",
                    "minus_divergent": diverged,
                    "note": "the minus family is divergent in this polarization",
                }),
            )?;
            Ok(diverged)
        }
        other => Err(format!("unknown polarization `{other}`")),
    }
}

fn run_wakimoto_check(args: &WakimotoCheckArgs, out: &Option<PathBuf>) -> Result<bool, String> {
    let mu =
        GaussianRational::from_rational(args.mu.parse::<Rational>().map_err(|e| e.to_string())?);
    let nu =
        GaussianRational::from_rational(args.nu.parse::<Rational>().map_err(|e| e.to_string())?);
    let wc = WakimotoContext::new(mu, nu);
    let cfg = EvalConfig::exact();
    let table = affine::bracket_table();
    let gens = affine::window_generators(args.window);
    let mut vars: Vec<VarLabel> = (-args.window..=args.window).map(VarLabel::wx).collect();
    if !wc.nu.is_zero() {
        vars.extend((1..=args.window).filter_map(VarLabel::wy));
    }
    let mut states = vec![Polynomial::one()];
    if args.max_degree >= 1 {
        for v in &vars {
            states.push(Polynomial::var(*v));
        }
    }
    if args.max_degree >= 2 {
        for (i, a) in vars.iter().enumerate() {
            for b in vars.iter().skip(i) {
                states.push(Polynomial::from_monomial(
                    Monomial::from_pairs([(*a, 1), (*b, 1)]),
                    GaussianRational::one(),
                ));
            }
        }
    }
    let mut checked = 0usize;
    let mut witnesses: Vec<String> = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        let ox = wakimoto_op(x, &wc).map_err(|e| e.to_string())?;
        for y in gens.iter().skip(i + 1) {
            let oy = wakimoto_op(y, &wc).map_err(|e| e.to_string())?;
            let b = bracket(
                &AlgebraElement::generator(*x),
                &AlgebraElement::generator(*y),
                &table,
            )
            .map_err(|e| e.to_string())?;
            for p in &states {
                let mut d = op_apply(&ox, &op_apply(&oy, p, &cfg).unwrap(), &cfg).unwrap();
                d = d.sub(&op_apply(&oy, &op_apply(&ox, p, &cfg).unwrap(), &cfg).unwrap());
                for (g, c) in b.terms() {
                    let og = wakimoto_op(g, &wc).map_err(|e| e.to_string())?;
                    d = d.sub(&op_apply(&og, p, &cfg).unwrap().scale(c));
                }
                checked += 1;
                if !d.is_zero() && witnesses.len() < 10 {
                    witnesses.push(format!("({x}, {y}) on {p}: {d}"));
                }
            }
        }
    }
    let passed = witnesses.is_empty();
    emit(
        out,
        "wakimoto check",
        json!({
            "mu": args.mu,
            "nu": args.nu,
            "window": args.window,
            "level": wc.level().to_string(),
            "pairs_checked": checked,
            "defects_found": witnesses.len(),
            "witnesses": witnesses,
        }),
    )?;
    Ok(passed)
}

fn run_suite(args: &SuiteArgs, out: &Option<PathBuf>) -> Result<bool, String> {
    let cfg = corner_forge::criteria::SuiteConfig {
        threads: thread_budget(),
        seed: args.seed,
    };
    let results = corner_forge::criteria::run_all(&cfg);
    for r in &results {
        eprintln!(
            "criterion {:>2}: {} — {} ({} checks, {:.1}s)",
            r.id,
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.checks,
            r.seconds
        );
    }
    let passed = results.iter().all(|r| r.passed);
    emit(out, "suite", json!({ "seed": args.seed, "criteria": results }))?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Bracket(args) => run_bracket(args, &cli.output),
        Command::Jacobi(args) => run_jacobi(args, &cli.output),
        Command::Classify(args) => run_classify(args, &cli.output),
        Command::Rep {
            command: RepCommand::Check(args),
        } => run_rep_check(args, &cli.output),
        Command::Constraint {
            command: ConstraintCommand::Show(args),
        } => run_constraint_show(args, &cli.output),
        Command::Constraint {
            command: ConstraintCommand::Check(args),
        } => run_constraint_check(args, &cli.output),
        Command::Wakimoto {
            command: WakimotoCommand::Check(args),
        } => run_wakimoto_check(args, &cli.output),
        Command::Suite(args) => run_suite(args, &cli.output),
    };
    match outcome {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
