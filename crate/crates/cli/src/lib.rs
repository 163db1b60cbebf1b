//! Command-line front end: function tables, singular quadrature, relation reports,
//! integral-equation and contact solutions, rule export. CSV or JSON on stdout.

use cauchy_semiaxis::contact::{contact_solve, ContactConfig, ContactProblem};
use cauchy_semiaxis::gfun::{g_normalized, v_eval, Basis};
use cauchy_semiaxis::pv::{pv_semiaxis, PvConfig};
use cauchy_semiaxis::quad::{singular_quad, write_rule_csv, GaussLaguerreRule, QnEvaluator};
use cauchy_semiaxis::relations::{check_relation, list_relations, RelationId, RelationParams};
use cauchy_semiaxis::sie::{solve_characteristic, SieConfig, SolutionClass};
use cauchy_semiaxis::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

pub const THREADS_ENV: &str = "CAUCHY_SEMIAXIS_THREADS";

/// Evenly spaced (or geometric with `--log`) abscissae written `start:stop:count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid must be start:stop:count, got `{s}`"));
        }
        let num = |p: &str| p.trim().parse::<f64>().map_err(|_| format!("`{p}` is not a number"));
        let start = num(parts[0])?;
        let stop = num(parts[1])?;
        let count = parts[2].trim().parse::<usize>().map_err(|_| format!("`{}` is not a count", parts[2]))?;
        if count < 2 || !start.is_finite() || !stop.is_finite() || !(start < stop) {
            return Err(format!("grid `{s}` needs finite start < stop and at least 2 points"));
        }
        Ok(Grid { start, stop, count })
    }
}

impl Grid {
    pub fn points(&self, log: bool) -> Result<Vec<f64>, String> {
        let last = (self.count - 1) as f64;
        if log {
            if !(self.start > 0.0 && self.stop > 0.0) {
                return Err("a logarithmic grid needs positive endpoints".into());
            }
            let (a, b) = (self.start.ln(), self.stop.ln());
            let mut v: Vec<f64> = (0..self.count).map(|i| (a + (b - a) * i as f64 / last).exp()).collect();
            v[0] = self.start;
            v[self.count - 1] = self.stop;
            Ok(v)
        } else {
            Ok((0..self.count).map(|i| self.start + (self.stop - self.start) * i as f64 / last).collect())
        }
    }
}

impl std::fmt::Display for Grid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.count)
    }
}

/// Inclusive index range `a..b`, or a single index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let idx = |p: &str| p.trim().parse::<usize>().map_err(|_| format!("`{p}` is not an index"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (idx(a)?, idx(b.trim_start_matches('='))?),
            None => {
                let k = idx(s)?;
                (k, k)
            }
        };
        if lo > hi {
            return Err(format!("empty index range `{s}`"));
        }
        Ok(IndexRange { lo, hi })
    }
}

#[derive(Parser, Debug)]
#[command(name = "cauchy-semiaxis", version, about = "Semi-axis Hilbert transforms and Cauchy singular integrals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate G_m^{(1)}, G_m^{(2)} (argument ξ) or V_n (argument x)
    Gfun(GfunArgs),
    /// Tabulate Q_n^α
    Qn(QnArgs),
    /// Singular Gauss–Laguerre quadrature of a catalog density against the PV oracle
    Quad(QuadArgs),
    /// Check one identity of the relation catalog and print a JSON report
    RelationCheck(RelationArgs),
    /// Solve the characteristic singular integral equation
    SieSolve(SieArgs),
    /// Contact-problem density for a semi-infinite stamp with profile slope e^{-x}
    Contact(ContactArgs),
    /// Export a Gauss–Laguerre rule with its singular weights
    Rule(RuleArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    G1,
    G2,
    V,
}

#[derive(Args, Debug)]
struct GridArgs {
    /// start:stop:count
    #[arg(long, allow_hyphen_values = true)]
    grid: Grid,
    /// Geometric spacing
    #[arg(long)]
    log: bool,
}

#[derive(Args, Debug)]
struct GfunArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Index or inclusive range, e.g. 0..4
    #[arg(long)]
    m: IndexRange,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Args, Debug)]
struct QnArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Density {
    /// √t
    Sqrt,
    /// e^{-t/2}
    ExpHalf,
    /// t√t
    XSqrt,
    /// √t/(1+t)
    #[value(name = "sqrt_over_1px")]
    SqrtOver1px,
}

impl Density {
    fn eval(self, t: f64) -> f64 {
        match self {
            Density::Sqrt => t.sqrt(),
            Density::ExpHalf => (-t / 2.0).exp(),
            Density::XSqrt => t * t.sqrt(),
            Density::SqrtOver1px => t.sqrt() / (1.0 + t),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Density::Sqrt => "sqrt",
            Density::ExpHalf => "exp_half",
            Density::XSqrt => "x_sqrt",
            Density::SqrtOver1px => "sqrt_over_1px",
        }
    }
}

#[derive(Args, Debug)]
struct QuadArgs {
    #[arg(long, value_enum)]
    f: Density,
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[command(flatten)]
    grid: GridArgs,
}

#[derive(Args, Debug)]
struct RelationArgs {
    #[arg(long, required_unless_present = "list")]
    id: Option<RelationId>,
    /// Print the catalog instead of checking a relation
    #[arg(long)]
    list: bool,
    /// Degree m or n
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1.0 / 3.0)]
    alpha: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    mu: f64,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    /// Fixed variable of the kernel expansions
    #[arg(long, default_value_t = 4.0)]
    t: f64,
    /// Number of terms of the kernel expansions
    #[arg(long, default_value_t = 10)]
    truncation: usize,
    /// start:stop:count; defaults to the relation's own grid
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<Grid>,
    #[arg(long)]
    log: bool,
    /// Absolute tolerance
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Relative tolerance; defaults to --tol
    #[arg(long)]
    tol_rel: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum SieRhs {
    /// √x e^{-x/2}
    SqrtExpHalf,
    /// 1 on (0, 1), 0 beyond
    Indicator,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    Unbounded,
    Bounded,
}

impl ClassArg {
    fn name(self) -> &'static str {
        match self {
            ClassArg::Unbounded => "unbounded",
            ClassArg::Bounded => "bounded",
        }
    }
}

#[derive(Args, Debug)]
struct SieArgs {
    #[arg(long, value_enum, default_value = "sqrt_exp_half")]
    f: SieRhs,
    #[arg(long, value_enum, default_value = "unbounded")]
    class: ClassArg,
    /// Truncation N
    #[arg(long, default_value_t = 16)]
    n: usize,
    #[arg(long, allow_hyphen_values = true, default_value = "0.05:10:200")]
    grid: Grid,
    #[arg(long)]
    log: bool,
    /// Print the coefficient dump instead of the solution table
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ContactArgs {
    /// Poisson ratio
    #[arg(long, default_value_t = 0.3)]
    nu: f64,
    #[arg(long, default_value_t = 1.0)]
    shear_modulus: f64,
    #[arg(long, allow_hyphen_values = true, default_value = "0.01:10:60")]
    grid: Grid,
    #[arg(long)]
    log: bool,
    /// Print the run metadata instead of the table
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct RuleArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
}

enum Failure {
    Usage(String),
    Numerical(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ParamSchema(_) | Error::UnknownRelation(_) => Failure::Usage(e.to_string()),
            e => Failure::Numerical(e),
        }
    }
}

fn num(v: f64) -> String {
    // no signed zeros in tables
    format!("{:.16e}", if v == 0.0 { 0.0 } else { v })
}

/// Bad construction parameters are the caller's fault, not a numerical failure.
fn usage_on_domain(e: Error) -> Failure {
    match e {
        Error::Domain(_) | Error::AlphaNearInteger { .. } => Failure::Usage(e.to_string()),
        e => e.into(),
    }
}

fn grid_points(g: &Grid, log: bool) -> Result<Vec<f64>, Failure> {
    g.points(log).map_err(Failure::Usage)
}

fn table(fmt: Format, meta: &[String], header: &[String], rows: &[Vec<f64>]) -> Result<String, Failure> {
    if fmt == Format::Json {
        let v = serde_json::json!({ "metadata": meta, "columns": header, "rows": rows });
        return serde_json::to_string_pretty(&v).map_err(|e| Failure::Numerical(e.into()));
    }
    let mut s = String::new();
    for m in meta {
        let _ = writeln!(s, "# {m}");
    }
    let _ = writeln!(s, "{}", header.join(","));
    for r in rows {
        let cells: Vec<String> = r.iter().map(|&v| num(v)).collect();
        let _ = writeln!(s, "{}", cells.join(","));
    }
    Ok(s)
}

fn gfun(a: &GfunArgs, fmt: Format) -> Result<String, Failure> {
    let xs = grid_points(&a.grid.grid, a.grid.log)?;
    let idx: Vec<usize> = (a.m.lo..=a.m.hi).collect();
    let (name, var) = match a.family {
        Family::G1 => ("G1", "xi"),
        Family::G2 => ("G2", "xi"),
        Family::V => ("V", "x"),
    };
    let mut rows = Vec::with_capacity(xs.len());
    for &x in &xs {
        let mut row = vec![x];
        for &m in &idx {
            row.push(match a.family {
                Family::G1 => g_normalized(Basis::First, m, x)?,
                Family::G2 => g_normalized(Basis::Second, m, x)?,
                Family::V => v_eval(m, x)?,
            });
        }
        rows.push(row);
    }
    let mut header = vec![var.to_string()];
    header.extend(idx.iter().map(|m| format!("{name}_{m}")));
    let meta = vec![format!(
        "gfun family={} m={}..{} grid={} log={}",
        name, a.m.lo, a.m.hi, a.grid.grid, a.grid.log
    )];
    table(fmt, &meta, &header, &rows)
}

fn qn(a: &QnArgs, fmt: Format) -> Result<String, Failure> {
    let xs = grid_points(&a.grid.grid, a.grid.log)?;
    let q = QnEvaluator::new(a.n, a.alpha).map_err(usage_on_domain)?;
    let rows = xs.iter().map(|&x| Ok(vec![x, q.eval(x)?])).collect::<Result<Vec<_>, Error>>()?;
    let zeros: Vec<String> = q.zeros.iter().map(|z| num(*z)).collect();
    let meta = vec![
        format!("qn n={} alpha={} grid={} log={}", a.n, a.alpha, a.grid.grid, a.grid.log),
        format!("zeros={} [{}]", q.zeros.len(), zeros.join(" ")),
    ];
    table(fmt, &meta, &["x".into(), "Q".into()], &rows)
}

fn quad(a: &QuadArgs, fmt: Format) -> Result<String, Failure> {
    let xs = grid_points(&a.grid.grid, a.grid.log)?;
    let rule = GaussLaguerreRule::new(a.n, a.alpha).map_err(usage_on_domain)?;
    let q = QnEvaluator::new(a.n, a.alpha).map_err(usage_on_domain)?;
    let f = a.f;
    let alpha = a.alpha;
    let pv = PvConfig::default().with_tol(1e-11);
    let mut rows = Vec::with_capacity(xs.len());
    for &x in &xs {
        let approx = singular_quad(&rule, &q, |t| f.eval(t), x)?;
        let oracle: f64 = pv_semiaxis(|t: f64| t.powf(alpha) * (-t).exp() * f.eval(t), x, &pv)?;
        rows.push(vec![x, approx, oracle, (approx - oracle).abs()]);
    }
    let meta = vec![format!(
        "quad f={} n={} alpha={} grid={} log={}",
        f.name(),
        a.n,
        a.alpha,
        a.grid.grid,
        a.grid.log
    )];
    table(fmt, &meta, &["x".into(), "quadrature".into(), "oracle".into(), "deviation".into()], &rows)
}

fn relation_check(a: &RelationArgs) -> Result<String, Failure> {
    if a.list {
        return serde_json::to_string_pretty(&list_relations()).map_err(|e| Failure::Numerical(e.into()));
    }
    let id = a.id.ok_or_else(|| Failure::Usage("--id is required".into()))?;
    let params = RelationParams { n: a.n, alpha: a.alpha, mu: a.mu, lambda: a.lambda, t: a.t, truncation: a.truncation };
    let grid = match &a.grid {
        Some(g) => grid_points(g, a.log)?,
        None => id.default_grid(&params),
    };
    let report = check_relation(id, &params, &grid, a.tol, a.tol_rel.unwrap_or(a.tol))?;
    Ok(report.to_json()?)
}

fn sie_solve(a: &SieArgs, fmt: Format) -> Result<String, Failure> {
    if a.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let xs = grid_points(&a.grid, a.log)?;
    let class = match a.class {
        ClassArg::Unbounded => SolutionClass::UnboundedAtZero,
        ClassArg::Bounded => SolutionClass::BoundedAtZero,
    };
    let (name, sol) = match a.f {
        SieRhs::SqrtExpHalf => {
            let cfg = SieConfig::default();
            ("sqrt_exp_half", solve_characteristic(|x: f64| x.sqrt() * (-x / 2.0).exp(), class, a.n, &cfg)?)
        }
        SieRhs::Indicator => {
            let cfg = SieConfig { breakpoints: vec![1.0], ..SieConfig::default() };
            ("indicator", solve_characteristic(|x: f64| if x < 1.0 { 1.0 } else { 0.0 }, class, a.n, &cfg)?)
        }
    };
    if a.json || fmt == Format::Json {
        return Ok(sol.to_json()?);
    }
    let mut buf = Vec::new();
    writeln!(buf, "# sie-solve f={} class={} N={} grid={} log={}", name, a.class.name(), a.n, a.grid, a.log)
        .map_err(|e| Failure::Numerical(e.into()))?;
    sol.write_csv(&xs, &mut buf)?;
    Ok(String::from_utf8_lossy(&buf).into_owned())
}

fn contact(a: &ContactArgs, fmt: Format) -> Result<String, Failure> {
    let xs = grid_points(&a.grid, a.log)?;
    if xs.iter().any(|&x| !(x > 0.0)) {
        return Err(Failure::Usage("contact grid must be positive".into()));
    }
    let p = ContactProblem::new(a.nu, a.shear_modulus, |x: f64| (-x).exp()).map_err(|e| Failure::Usage(e.to_string()))?;
    let sol = contact_solve(&p, &xs, &ContactConfig::default())?;
    if a.json || fmt == Format::Json {
        return Ok(sol.metadata_json()?);
    }
    let mut buf = Vec::new();
    writeln!(buf, "# contact profile=exp(-x) shear_modulus={} grid={} log={}", a.shear_modulus, a.grid, a.log)
        .map_err(|e| Failure::Numerical(e.into()))?;
    sol.write_csv(&mut buf)?;
    Ok(String::from_utf8_lossy(&buf).into_owned())
}

fn rule(a: &RuleArgs, fmt: Format) -> Result<String, Failure> {
    let rule = GaussLaguerreRule::new(a.n, a.alpha).map_err(usage_on_domain)?;
    if fmt == Format::Json {
        let v = serde_json::json!({
            "n": rule.n, "alpha": rule.alpha, "nodes": rule.nodes, "weights": rule.weights, "gammas": rule.gammas,
        });
        return serde_json::to_string_pretty(&v).map_err(|e| Failure::Numerical(e.into()));
    }
    let mut buf = Vec::new();
    write_rule_csv(&rule, &mut buf)?;
    Ok(String::from_utf8_lossy(&buf).into_owned())
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("{THREADS_ENV} must be a nonnegative integer, got `{v}`"))?;
    if n > 0 {
        // a pool may already exist when called repeatedly in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

/// Runs one command; output goes to `out`, diagnostics to `err`. Returns the exit code.
pub fn run_with<O: Write, E: Write>(argv: Vec<String>, out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    if let Err(msg) = configure_threads() {
        let _ = writeln!(err, "error: {msg}");
        return 1;
    }
    let result = match &cli.command {
        Command::Gfun(a) => gfun(a, cli.format),
        Command::Qn(a) => qn(a, cli.format),
        Command::Quad(a) => quad(a, cli.format),
        Command::RelationCheck(a) => relation_check(a),
        Command::SieSolve(a) => sie_solve(a, cli.format),
        Command::Contact(a) => contact(a, cli.format),
        Command::Rule(a) => rule(a, cli.format),
    };
    match result {
        Ok(mut text) => {
            if !text.ends_with('\n') {
                text.push('\n');
            }
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, text) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    return 1;
                }
            } else {
                let _ = write!(out, "{text}");
            }
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            1
        }
        Err(Failure::Numerical(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn run(argv: Vec<String>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
