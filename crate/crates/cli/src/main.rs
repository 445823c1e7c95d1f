//! Command-line surface for the three-food division game: solving balanced
//! strategies, inverting first moves, mapping availability regions, running
//! seeded simulations and auditing the deterministic choice functions.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain/degenerate input, 3 I/O.

mod emit;
mod report;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use trifood::classical::{
    cat2_classical_feasible, cat2_diet, cat2_solution_line, optimal_first_move,
    pure_choice_function_audit,
};
use trifood::quantum::{cat2_quantum_feasible, strategy_from_sphere};
use trifood::regions::{montecarlo_map, ClassFilter, Model, RegionQuery};
use trifood::{classify_preferences, FoodIndex, Owner, ResponseStrategy, SimplexPoint};

#[derive(Parser)]
#[command(name = "trifood", version, about = "Three-food 'I cut, you choose' game analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the balanced first move for Cat 2 parameters l
    Solve(SolveArgs),
    /// Invert a first move: balanced strategies (classical line / sphere points)
    Invert(InvertArgs),
    /// Sample the availability regions and emit CSV, JSON or SVG
    Region(RegionArgs),
    /// Run the seeded game simulation and report empirical frequencies
    Simulate(SimulateArgs),
    /// Evaluate all eight deterministic Cat 1 choice functions
    AuditPure(AuditArgs),
}

fn parse_triple(s: &str) -> Result<Triple, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got {s:?}"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse::<f64>()
            .map_err(|e| format!("bad number {part:?}: {e}"))?;
    }
    Ok(Triple(out))
}

#[derive(Clone, Copy, Debug)]
struct Triple([f64; 3]);

#[derive(Args)]
struct SolveArgs {
    /// Cat 2 strategy parameters l0,l1,l2 in [-1,1]
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    l: Triple,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Classical,
    Quantum,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Classical => Model::Classical,
            ModelArg::Quantum => Model::Quantum,
        }
    }
}

#[derive(Args)]
struct InvertArgs {
    /// First-move frequencies P0,P1,P2 on the simplex
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    p: Triple,
    #[arg(long, value_enum)]
    model: ModelArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Any,
    Transitive,
    Intransitive,
}

impl From<ClassArg> for ClassFilter {
    fn from(c: ClassArg) -> ClassFilter {
        match c {
            ClassArg::Any => ClassFilter::Any,
            ClassArg::Transitive => ClassFilter::Transitive,
            ClassArg::Intransitive => ClassFilter::Intransitive,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Svg,
}

#[derive(Args)]
struct RegionArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long = "class", value_enum, default_value = "any")]
    class_filter: ClassArg,
    #[arg(long)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// First-move frequencies P0,P1,P2
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    p: Triple,
    /// Cat 1 mixed-strategy parameters L0,L1,L2
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true, group = "cat1")]
    cat1_l: Option<Triple>,
    /// Cat 1 one-qubit strategy as sphere coordinates x1,x2,x3
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true, group = "cat1")]
    cat1_x: Option<Triple>,
    /// Cat 1 deterministic choice function index in 0..=7
    #[arg(long, group = "cat1")]
    cat1_pure: Option<u8>,
    /// Cat 2 mixed-strategy parameters l0,l1,l2
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true, group = "cat2")]
    cat2_l: Option<Triple>,
    /// Cat 2 one-qubit strategy as sphere coordinates x1,x2,x3
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true, group = "cat2")]
    cat2_x: Option<Triple>,
    #[arg(long, default_value_t = 1_000_000)]
    iters: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct AuditArgs {
    /// First-move frequencies P0,P1,P2
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    p: Triple,
    /// Cat 2 strategy parameters l0,l1,l2
    #[arg(long, value_parser = parse_triple, allow_hyphen_values = true)]
    l: Triple,
}

/// Command failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    fn domain(err: trifood::Error) -> Self {
        Failure { code: 2, message: err.to_string() }
    }

    fn io(err: std::io::Error) -> Self {
        Failure { code: 3, message: err.to_string() }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(1);
        }
    };

    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Invert(args) => cmd_invert(args),
        Command::Region(args) => cmd_region(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::AuditPure(args) => cmd_audit_pure(args),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn check_params(name: &str, t: Triple) -> Result<[f64; 3], Failure> {
    for v in t.0 {
        if !v.is_finite() || v.abs() > 1.0 {
            return Err(Failure::usage(format!(
                "{name} components must lie in [-1, 1], got {v}"
            )));
        }
    }
    Ok(t.0)
}

fn simplex_from(t: Triple) -> Result<SimplexPoint, Failure> {
    SimplexPoint::new(t.0)
        .map_err(|e| Failure::usage(format!("--p must be a simplex point: {e}")))
}

fn fmt_triple(t: [f64; 3]) -> String {
    format!("({}, {}, {})", t[0], t[1], t[2])
}

fn cmd_solve(args: SolveArgs) -> CmdResult {
    let l = check_params("--l", args.l)?;
    let s2 = ResponseStrategy::new(Owner::Cat2, l).map_err(Failure::domain)?;
    let p = optimal_first_move(l).map_err(Failure::domain)?;
    let residual = cat2_diet(&p, &s2).map_err(Failure::domain)?.balance_residual();
    println!("l = {}", fmt_triple(l));
    println!("class = {}", classify_preferences(&s2));
    println!("P = {}", fmt_triple(p.components()));
    println!("residual = {residual}");
    Ok(())
}

/// Which strategy classes exist on the feasible part of the solution line.
fn classical_availability(
    anchor: [f64; 3],
    direction: [f64; 3],
    segment: (f64, f64),
) -> (bool, bool, bool) {
    let (lo, hi) = segment;
    let crossings: [f64; 3] = std::array::from_fn(|i| -anchor[i] / direction[i]);
    let cmin = crossings.iter().cloned().fold(f64::INFINITY, f64::min);
    let cmax = crossings.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    // All-positive (cycle A) and all-negative (cycle B) stretches.
    let cycle_a = cmax <= hi + 1e-12;
    let cycle_b = cmin >= lo - 1e-12;
    // Any open stretch strictly between the first and last sign crossing has
    // mixed signs, i.e. a transitive strategy.
    let transitive = lo.max(cmin) + 1e-12 < hi.min(cmax);
    (transitive, cycle_a, cycle_b)
}

fn cmd_invert(args: InvertArgs) -> CmdResult {
    let p = simplex_from(args.p)?;
    println!("P = {}", fmt_triple(p.components()));
    match args.model {
        ModelArg::Classical => {
            let line = cat2_solution_line(&p).map_err(Failure::domain)?;
            println!("model = classical");
            println!("anchor = {}", fmt_triple(line.anchor()));
            println!("direction = {}", fmt_triple(line.direction()));
            match cat2_classical_feasible(&p).map_err(Failure::domain)? {
                Some((lo, hi)) => {
                    println!("feasible = yes");
                    println!("segment = [{lo}, {hi}]");
                    let (transitive, cycle_a, cycle_b) =
                        classical_availability(line.anchor(), line.direction(), (lo, hi));
                    println!(
                        "available = any:yes transitive:{} cycle_a:{} cycle_b:{}",
                        yesno(transitive),
                        yesno(cycle_a),
                        yesno(cycle_b)
                    );
                }
                None => {
                    println!("feasible = no");
                    println!("available = any:no transitive:no cycle_a:no cycle_b:no");
                }
            }
        }
        ModelArg::Quantum => {
            let points = cat2_quantum_feasible(&p).map_err(Failure::domain)?;
            println!("model = quantum");
            println!("points = {}", points.len());
            for x in &points {
                let class = classify_preferences(&strategy_from_sphere(x, Owner::Cat2));
                println!("x = {} class = {class}", fmt_triple(x.components()));
            }
        }
    }
    Ok(())
}

fn cmd_region(args: RegionArgs) -> CmdResult {
    if args.samples == 0 {
        return Err(Failure::usage("--samples must be at least 1"));
    }
    let query = RegionQuery {
        model: args.model.into(),
        class_filter: args.class_filter.into(),
    };
    let points = montecarlo_map(&query, args.samples, args.seed);
    let body = match args.format {
        FormatArg::Csv => emit::csv(&points),
        FormatArg::Json => emit::json(&points),
        FormatArg::Svg => emit::svg(&points),
    };
    match args.out {
        Some(path) => std::fs::write(&path, body).map_err(Failure::io)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn cmd_simulate(args: SimulateArgs) -> CmdResult {
    use trifood::classical::PureChoiceFunction;
    use trifood::sim::PlayerStrategy;
    use trifood::SpherePoint;

    let p = simplex_from(args.p)?;

    let cat1 = if let Some(t) = args.cat1_l {
        let params = check_params("--cat1-l", t)?;
        PlayerStrategy::Mixed(
            ResponseStrategy::new(Owner::Cat1, params).map_err(Failure::domain)?,
        )
    } else if let Some(t) = args.cat1_x {
        PlayerStrategy::Qubit(SpherePoint::new(t.0).map_err(Failure::domain)?)
    } else if let Some(k) = args.cat1_pure {
        PlayerStrategy::Pure(PureChoiceFunction::new(k).map_err(Failure::domain)?)
    } else {
        return Err(Failure::usage(
            "one of --cat1-l, --cat1-x or --cat1-pure is required",
        ));
    };

    let cat2 = if let Some(t) = args.cat2_l {
        let params = check_params("--cat2-l", t)?;
        PlayerStrategy::Mixed(
            ResponseStrategy::new(Owner::Cat2, params).map_err(Failure::domain)?,
        )
    } else if let Some(t) = args.cat2_x {
        PlayerStrategy::Qubit(SpherePoint::new(t.0).map_err(Failure::domain)?)
    } else {
        return Err(Failure::usage("one of --cat2-l or --cat2-x is required"));
    };

    let report = report::simulate(p, cat1, cat2, args.iters, args.seed).map_err(Failure::domain)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(())
}

fn cmd_audit_pure(args: AuditArgs) -> CmdResult {
    let p = simplex_from(args.p)?;
    let l = check_params("--l", args.l)?;
    let entries = pure_choice_function_audit(&p, l).map_err(Failure::domain)?;
    println!("k  f(0,1)  f(0,2)  f(1,2)  lambda0  lambda1  lambda2  balanced");
    let mut balanced = Vec::new();
    for entry in &entries {
        let f = entry.function;
        let choices: Vec<String> = [2u8, 1, 0]
            .iter()
            .map(|&m| f.choose(FoodIndex::new(m).unwrap()).to_string())
            .collect();
        let lam = entry.lambda.components();
        println!(
            "{}  {}       {}       {}       {}  {}  {}  {}",
            f.index(),
            choices[0],
            choices[1],
            choices[2],
            lam[0],
            lam[1],
            lam[2],
            yesno(entry.balanced)
        );
        if entry.balanced {
            balanced.push(f.index());
        }
    }
    if balanced.is_empty() {
        println!("balanced functions: none");
    } else {
        let list: Vec<String> = balanced.iter().map(u8::to_string).collect();
        println!("balanced functions: {}", list.join(", "));
    }
    Ok(())
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
