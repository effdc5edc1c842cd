mod config;
mod output;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use besselsum::asympt::{
    largek_check_neg, largek_check_pos, remainder_bound_profile, AsymptoticCheck, RemainderEnvelope,
};
use besselsum::sweep::{run_bench, run_sweep, SweepSpec};
use besselsum::{compare, evaluate, Error, Execution, MethodChoice, SumKind, SumParams, TruncationPolicy};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use output::{to_json, ErrorJson, ResultJson};

const DEFAULT_MAX_TERMS: usize = 10_000_000;

#[derive(Parser)]
#[command(name = "besselsum", version, about = "Damped Bessel lattice sums: direct summation and small-a expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one sum.
    Eval(EvalArgs),
    /// Run direct summation and the expansion and compare them.
    Compare(PointArgs),
    /// Evaluate a parameter grid.
    Sweep(SweepArgs),
    /// Term counts and timings along a decreasing schedule of a.
    Bench(BenchArgs),
    /// Check the large-degree estimates of the hypergeometric polynomials.
    VerifyAsymptotics(AsymptArgs),
}

#[derive(Args, Clone)]
struct PolicyArgs {
    /// Relative tolerance.
    #[arg(long, env = "BESSELSUM_TOL", default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    max_terms: usize,
}

impl PolicyArgs {
    fn policy(&self) -> Result<TruncationPolicy, Error> {
        TruncationPolicy::new(self.tol, self.max_terms)
    }
}

#[derive(Args)]
struct PointArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: SumKind,
    #[arg(long, allow_hyphen_values = true)]
    nu: f64,
    #[arg(long)]
    p: f64,
    #[arg(long)]
    a: f64,
    #[arg(long)]
    x: f64,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    #[command(flatten)]
    policy: PolicyArgs,
}

impl PointArgs {
    fn params(&self) -> SumParams {
        SumParams { nu: self.nu, p: self.p, a: self.a, x: self.x, mu: self.mu, kind: self.kind }
    }
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    point: PointArgs,
    #[arg(long, value_parser = parse_method, default_value = "auto")]
    method: MethodChoice,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepMethod {
    Direct,
    Expansion,
    Auto,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct SweepArgs {
    /// Configuration file; flags given on the command line replace its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', value_parser = parse_kind)]
    kind: Vec<SumKind>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    nu: Vec<f64>,
    #[arg(long, value_delimiter = ',')]
    p: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    a: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    x: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    mu: Vec<f64>,
    #[arg(long, value_enum)]
    method: Option<SweepMethod>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long, env = "BESSELSUM_TOL")]
    tol: Option<f64>,
    #[arg(long)]
    max_terms: Option<usize>,
    /// Evaluate grid points one after another.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_parser = parse_kind, default_value = "S")]
    kind: SumKind,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    nu: f64,
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    #[arg(long, default_value_t = 1.0)]
    x: f64,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    /// Schedule of a; defaults to 1e-1, 1e-2, ... down to --a-min.
    #[arg(long, value_delimiter = ',')]
    a: Vec<f64>,
    #[arg(long, default_value_t = 1e-4)]
    a_min: f64,
    #[command(flatten)]
    policy: PolicyArgs,
    #[arg(long)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum AsymptMode {
    /// `₂F₁(-k, -k-1/2; 1+ν; -x²)`.
    Neg,
    /// `₂F₁(-k, -k-1/2; 1+ν; x²)`, `0 < x < 1`.
    Pos,
    /// Complex-parameter continuation against its envelope.
    Remainder,
}

#[derive(Clone, Copy, ValueEnum)]
enum Envelope {
    Single,
    Symmetric,
}

#[derive(Args)]
struct AsymptArgs {
    #[arg(long, allow_hyphen_values = true)]
    nu: f64,
    #[arg(long)]
    x: f64,
    #[arg(long, value_delimiter = ',', default_value = "20,40,80,160")]
    k_list: Vec<usize>,
    #[arg(long, value_enum, default_value = "neg")]
    mode: AsymptMode,
    /// Degree for the remainder mode.
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Upper end of the t grid for the remainder mode; compared with half of it.
    #[arg(long, default_value_t = 40.0)]
    t_max: f64,
    #[arg(long, default_value_t = 81)]
    t_points: usize,
    #[arg(long, value_enum, default_value = "single")]
    envelope: Envelope,
}

fn parse_kind(s: &str) -> Result<SumKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> Result<MethodChoice, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Library(Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    writeln!(out, "{}", to_json(value))?;
    Ok(())
}

fn cmd_eval(args: &EvalArgs) -> Result<(), Failure> {
    let policy = args.point.policy.policy()?;
    let r = evaluate(&args.point.params(), args.method, &policy)?;
    print_json(&ResultJson::from(&r))
}

#[derive(Serialize)]
struct CompareJson {
    direct: ResultJson,
    expansion: ResultJson,
    abs_diff: f64,
    within_tolerance: bool,
}

fn cmd_compare(args: &PointArgs) -> Result<(), Failure> {
    let c = compare(&args.params(), &args.policy()?)?;
    print_json(&CompareJson {
        direct: ResultJson::from(&c.direct),
        expansion: ResultJson::from(&c.expansion),
        abs_diff: c.abs_diff,
        within_tolerance: c.within_tolerance,
    })
}

impl PointArgs {
    fn policy(&self) -> Result<TruncationPolicy, Error> {
        self.policy.policy()
    }
}

fn pick<T: Clone>(flag: &[T], from_config: Vec<T>) -> Vec<T> {
    if flag.is_empty() {
        from_config
    } else {
        flag.to_vec()
    }
}

fn sweep_spec(args: &SweepArgs) -> Result<(SweepSpec, Format), Failure> {
    let cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Internal(format!("cannot read config {}: {e}", path.display())))?;
            config::parse(&text)?
        }
        None => config::Config::new(),
    };
    let first = |key: &str| cfg.get(key).and_then(|v| v.last()).cloned();
    let cfg_kinds = cfg
        .get("kind")
        .map(|v| v.iter().map(|s| s.parse()).collect::<Result<Vec<SumKind>, Error>>())
        .transpose()?
        .unwrap_or_default();
    let method = match (args.method, first("method")) {
        (Some(m), _) => m,
        (None, Some(s)) => SweepMethod::from_str(&s, true).map_err(|_| Error::Domain(format!("unknown method '{s}'")))?,
        (None, None) => SweepMethod::Both,
    };
    let format = match (args.format, first("format")) {
        (Some(f), _) => f,
        (None, Some(s)) => Format::from_str(&s, true).map_err(|_| Error::Domain(format!("unknown format '{s}'")))?,
        (None, None) => Format::Csv,
    };
    let tol = match (args.tol, first("tol")) {
        (Some(t), _) => t,
        (None, Some(s)) => s.parse().map_err(|_| Error::Domain(format!("tol '{s}' is not a number")))?,
        (None, None) => 1e-12,
    };
    let max_terms = match (args.max_terms, first("max_terms")) {
        (Some(m), _) => m,
        (None, Some(s)) => s.parse().map_err(|_| Error::Domain(format!("max_terms '{s}' is not an integer")))?,
        (None, None) => DEFAULT_MAX_TERMS,
    };
    let methods = match method {
        SweepMethod::Direct => vec![MethodChoice::Direct],
        SweepMethod::Expansion => vec![MethodChoice::Expansion],
        SweepMethod::Auto => vec![MethodChoice::Auto],
        SweepMethod::Both => vec![MethodChoice::Direct, MethodChoice::Expansion],
    };
    let kinds = pick(&args.kind, cfg_kinds);
    let spec = SweepSpec {
        kinds: if kinds.is_empty() { vec![SumKind::S] } else { kinds },
        nu: pick(&args.nu, config::reals(&cfg, "nu")?),
        p: pick(&args.p, config::reals(&cfg, "p")?),
        a: pick(&args.a, config::reals(&cfg, "a")?),
        x: pick(&args.x, config::reals(&cfg, "x")?),
        mu: pick(&args.mu, config::reals(&cfg, "mu")?),
        methods,
        policy: TruncationPolicy::new(tol, max_terms)?,
    };
    Ok((spec, format))
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), Failure> {
    let (spec, format) = sweep_spec(args)?;
    let exec = if args.sequential { Execution::Sequential } else { Execution::Parallel };
    let rows = run_sweep(&spec, exec)?;
    let out = io::stdout().lock();
    match format {
        Format::Csv => output::write_csv(out, &rows)?,
        Format::Json => output::write_json_lines(out, &rows)?,
    }
    Ok(())
}

fn cmd_bench(args: &BenchArgs) -> Result<(), Failure> {
    let schedule = if args.a.is_empty() {
        if !(args.a_min > 0.0 && args.a_min <= 0.1) {
            return Err(Error::Domain(format!("a-min = {} must lie in (0, 0.1]", args.a_min)).into());
        }
        let mut s = Vec::new();
        let mut a = 0.1;
        while a >= args.a_min * (1.0 - 1e-9) {
            s.push(a);
            a /= 10.0;
        }
        s
    } else {
        args.a.clone()
    };
    let template = SumParams { nu: args.nu, p: args.p, a: schedule[0], x: args.x, mu: args.mu, kind: args.kind };
    let exec = if args.sequential { Execution::Sequential } else { Execution::Parallel };
    let report = run_bench(template, &schedule, &args.policy.policy()?, exec)?;
    print_json(&report)
}

/// Checks away from oscillatory nodes, in increasing `k`.
fn usable(checks: &[AsymptoticCheck]) -> Vec<&AsymptoticCheck> {
    let mut v: Vec<&AsymptoticCheck> = checks.iter().filter(|c| !c.near_node).collect();
    v.sort_by_key(|c| c.k);
    v
}

#[derive(Serialize)]
struct AsymptReport {
    mode: AsymptMode,
    nu: f64,
    x: f64,
    checks: Vec<AsymptoticCheck>,
    /// Largest exact/estimate ratio (remainder mode) on the full and on the half grid.
    constant: Option<f64>,
    constant_half_grid: Option<f64>,
    pass: bool,
    rule: String,
}

fn cmd_verify_asymptotics(args: &AsymptArgs) -> Result<(), Failure> {
    let report = match args.mode {
        AsymptMode::Neg | AsymptMode::Pos => {
            let checks = args
                .k_list
                .iter()
                .map(|&k| match args.mode {
                    AsymptMode::Neg => largek_check_neg(k, args.nu, args.x),
                    _ => largek_check_pos(k, args.nu, args.x),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let (pass, rule) = if args.nu == -0.5 && matches!(args.mode, AsymptMode::Neg) {
                let ok = checks.iter().all(|c| (c.ratio - 1.0).abs() <= 1e-12);
                (ok, "ratio = 1 to 1e-12 at every k".to_string())
            } else {
                let u = usable(&checks);
                let devs: Vec<f64> = u.iter().map(|c| (c.ratio - 1.0).abs()).collect();
                let monotone = devs.windows(2).all(|w| w[1] <= w[0]);
                let rate = u.iter().filter(|c| c.k >= 100).all(|c| (c.ratio - 1.0).abs() <= 5.0 / c.k as f64);
                (monotone && rate, "|ratio-1| non-increasing in k (nodes excluded) and <= 5/k for k >= 100".into())
            };
            AsymptReport { mode: args.mode, nu: args.nu, x: args.x, checks, constant: None, constant_half_grid: None, pass, rule }
        }
        AsymptMode::Remainder => {
            if args.t_points < 2 || !(args.t_max > 0.0) {
                return Err(Error::Domain("remainder grid needs t-max > 0 and at least 2 points".into()).into());
            }
            let envelope = match args.envelope {
                Envelope::Single => RemainderEnvelope::SingleSaddle,
                Envelope::Symmetric => RemainderEnvelope::Symmetric,
            };
            let grid = |t_max: f64| -> Vec<f64> {
                (0..args.t_points).map(|i| t_max * i as f64 / (args.t_points - 1) as f64).collect()
            };
            let half = remainder_bound_profile(args.n, args.nu, args.x, &grid(args.t_max / 2.0), envelope)?;
            let full = remainder_bound_profile(args.n, args.nu, args.x, &grid(args.t_max), envelope)?;
            let pass = full.constant.is_finite() && (full.constant / half.constant - 1.0).abs() <= 0.2;
            AsymptReport {
                mode: args.mode,
                nu: args.nu,
                x: args.x,
                checks: full.checks,
                constant: Some(full.constant),
                constant_half_grid: Some(half.constant),
                pass,
                rule: "grid maximum of exact/estimate changes by at most 20% when the t range doubles".into(),
            }
        }
    };
    print_json(&report)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Bench(a) => cmd_bench(a),
        Command::VerifyAsymptotics(a) => cmd_verify_asymptotics(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Library(e)) => {
            println!("{}", to_json(&ErrorJson::from(&e)));
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            if msg.contains("Broken pipe") {
                return ExitCode::SUCCESS;
            }
            eprintln!("besselsum: {msg}");
            ExitCode::from(1)
        }
    }
}
