//! The `u2conic` command line.
//!
//! Every subcommand prints one JSON document (or a plain-text table with
//! `--format table`). Errors go to stderr as
//! `{"error":{"code":..,"message":..}}`.
//!
//! Exit codes: 0 on success; 1 when a verified property fails, when a
//! reduction is asked for along a degenerate ray, or when `--strict` is set
//! and a verdict is critical; 2 for malformed input or input outside the
//! domain of the requested operation.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::dh_classifier::{
    betti_conic_reduction, betti_product_p1, classify, isotopy_endpoints, quotient_weights_uniform,
    BettiTable,
};
use crate::error::Error;
use crate::orbit_geometry::{
    critical_rays, moment_polytope, phi_transverse, psi_transverse, wedges, RayDir, Verdict,
};
use crate::rep_model::RepDescriptor;
use crate::verifier::{run_suite, SampleConfig};

#[derive(Debug, Parser)]
#[command(
    name = "u2conic",
    version,
    about = "Transversality and conic reduction for U(2) representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Treat critical verdicts as failures (exit 1).
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
struct RepArg {
    /// Descriptor file: {"summands":[{"l":..,"k":..},..]}
    rep: PathBuf,
}

#[derive(Debug, Args)]
struct NuArg {
    /// Ray direction as X,Y.
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural predicates of a representation.
    Analyze(RepArg),
    /// Vertices of the torus moment polytope.
    Polytope(RepArg),
    /// Critical rays with their witnesses, and the wedges between them.
    Rays(RepArg),
    /// Transversality verdicts for the torus and full moment maps.
    Transversal {
        #[command(flatten)]
        rep: RepArg,
        #[command(flatten)]
        nu: NuArg,
    },
    /// Classify the conic reduction along a ray.
    Reduce {
        #[command(flatten)]
        rep: RepArg,
        #[command(flatten)]
        nu: NuArg,
    },
    /// Betti tables of the conic reduction and of the product with P^1.
    Betti {
        /// Base Betti numbers b0,b1,...
        #[arg(long)]
        base: String,
    },
    /// Run the seeded numeric property suite.
    Verify {
        #[command(flatten)]
        rep: RepArg,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-12)]
        tol_alg: f64,
        #[arg(long, default_value_t = 1e-9)]
        tol_eig: f64,
        #[arg(long, default_value_t = 1e-4)]
        fd_step: f64,
    },
}

/// A failure on its way to stderr.
#[derive(Debug)]
struct Failure {
    code: &'static str,
    message: String,
    exit: i32,
}

impl Failure {
    fn malformed(code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
            exit: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::CriticalRay(_)
            | Error::EmptySide
            | Error::OutsideImage
            | Error::OnBoundary
            | Error::DiagonalRay => 1,
            _ => 2,
        };
        Failure {
            code: e.code(),
            message: e.to_string(),
            exit,
        }
    }
}

/// Successful output plus the exit code it implies.
struct Outcome {
    value: Value,
    exit: i32,
}

impl From<Value> for Outcome {
    fn from(value: Value) -> Self {
        Outcome { value, exit: 0 }
    }
}

fn read_rep(path: &Path) -> Result<RepDescriptor, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::malformed("io_error", format!("{}: {e}", path.display())))?;
    Ok(RepDescriptor::from_json(&text)?)
}

fn parse_ints<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(|p| p.trim().parse::<T>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::malformed("malformed_input", format!("{what}: cannot parse {s:?}")))
}

fn parse_nu(s: &str) -> Result<(i64, i64, RayDir), Failure> {
    match parse_ints::<i64>(s, "--nu")?.as_slice() {
        &[x, y] => Ok((x, y, RayDir::new(x, y)?)),
        _ => Err(Failure::malformed(
            "malformed_input",
            format!("--nu expects X,Y, got {s:?}"),
        )),
    }
}

fn nu_json(x: i64, y: i64, nu: &RayDir) -> Value {
    json!({ "raw": [x, y], "primitive": nu })
}

fn verdict_json(v: &Result<Verdict, Error>) -> Value {
    match v {
        Ok(v) => json!(v.label()),
        Err(e) => json!(e.code()),
    }
}

fn analyze(rep: &RepDescriptor) -> Value {
    json!({
        "generic": rep.is_generic(),
        "uniform": rep.is_uniform(),
        "moment_never_zero": rep.moment_never_zero(),
        "dim": rep.dim(),
        "index_count": rep.index_set().len(),
    })
}

fn transversal(rep: &RepDescriptor, nu_s: &str, strict: bool) -> Result<Outcome, Failure> {
    let (x, y, nu) = parse_nu(nu_s)?;
    let psi = psi_transverse(rep, &nu)?;
    let phi = phi_transverse(rep, &nu);
    let mut out = Map::new();
    out.insert("psi".into(), json!(psi.label()));
    out.insert("phi".into(), verdict_json(&phi));
    if let Verdict::Critical(w) = &psi {
        out.insert("witnesses".into(), json!(w));
    }
    out.insert("nu".into(), nu_json(x, y, &nu));
    let degenerate = matches!(psi, Verdict::Critical(_)) || phi.is_err();
    Ok(Outcome {
        value: Value::Object(out),
        exit: if strict && degenerate { 1 } else { 0 },
    })
}

fn reduce(rep: &RepDescriptor, nu_s: &str) -> Result<Value, Failure> {
    let (x, y, nu) = parse_nu(nu_s)?;
    let variety = classify(rep, &nu)?;
    let Value::Object(mut out) = serde_json::to_value(&variety).expect("variety serializes") else {
        unreachable!("variety is a JSON object")
    };
    out.insert("complex_dim".into(), json!(variety.complex_dim()));
    out.insert("betti".into(), json!(variety.betti()));
    out.insert("nu".into(), nu_json(x, y, &nu));
    if rep.is_uniform() {
        let weights = quotient_weights_uniform(rep)?;
        let list: Vec<Value> = weights
            .iter()
            .map(|(idx, w)| json!({ "index": idx, "weight": w }))
            .collect();
        out.insert("quotient_weights".into(), Value::Array(list));
    }
    if let [s] = rep.summands() {
        if let Ok(iso) = isotopy_endpoints(s.k, &nu) {
            out.insert("isotopy".into(), json!(iso));
        }
    }
    Ok(Value::Object(out))
}

fn betti(base: &str) -> Result<Value, Failure> {
    let base = BettiTable(parse_ints::<u64>(base, "--base")?);
    Ok(json!({
        "base": base,
        "conic_reduction": betti_conic_reduction(&base),
        "product_p1": betti_product_p1(&base),
    }))
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    Ok(match &cli.command {
        Command::Analyze(r) => analyze(&read_rep(&r.rep)?).into(),
        Command::Polytope(r) => {
            let rep = read_rep(&r.rep)?;
            json!({ "vertices": moment_polytope(&rep)?.vertices() }).into()
        }
        Command::Rays(r) => {
            let rep = read_rep(&r.rep)?;
            json!({ "rays": critical_rays(&rep)?, "wedges": wedges(&rep)? }).into()
        }
        Command::Transversal { rep, nu } => transversal(&read_rep(&rep.rep)?, &nu.nu, cli.strict)?,
        Command::Reduce { rep, nu } => reduce(&read_rep(&rep.rep)?, &nu.nu)?.into(),
        Command::Betti { base } => betti(base)?.into(),
        Command::Verify {
            rep,
            nu,
            samples,
            seed,
            tol_alg,
            tol_eig,
            fd_step,
        } => {
            let rep = read_rep(&rep.rep)?;
            let nu = nu.as_deref().map(parse_nu).transpose()?;
            let cfg = SampleConfig {
                samples: *samples,
                seed: *seed,
                tol_alg: *tol_alg,
                tol_eig: *tol_eig,
                fd_step: *fd_step,
                ..SampleConfig::default()
            };
            let reports = run_suite(&rep, nu.map(|n| n.2), &cfg)?;
            let failed = reports.iter().any(|r| r.is_failure());
            let critical = reports
                .iter()
                .any(|r| r.skipped.as_ref().is_some_and(|s| s.code == "critical_ray"));
            let mut out = Map::new();
            if let Some((x, y, n)) = nu {
                out.insert("nu".into(), nu_json(x, y, &n));
            }
            out.insert("config".into(), json!(cfg));
            out.insert("pass".into(), json!(!failed));
            out.insert("reports".into(), json!(reports));
            let exit = if failed || (cli.strict && critical) {
                1
            } else {
                0
            };
            Outcome {
                value: Value::Object(out),
                exit,
            }
        }
    })
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Plain-text rendering: arrays of objects become column tables, objects
/// become `key  value` lines.
fn render_table(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
            for (k, v) in map {
                match v {
                    Value::Array(rows) if rows.first().is_some_and(Value::is_object) => {
                        out.push_str(&format!("{k}:\n"));
                        out.push_str(&render_rows(rows));
                    }
                    _ => out.push_str(&format!("{k:width$}  {}\n", cell(v))),
                }
            }
        }
        Value::Array(rows) => out.push_str(&render_rows(rows)),
        other => out.push_str(&format!("{}\n", cell(other))),
    }
    out
}

fn render_rows(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else {
        return String::new();
    };
    let cols: Vec<&String> = first.keys().collect();
    let grid: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            cols.iter()
                .map(|c| r.get(c.as_str()).map(cell).unwrap_or_default())
                .collect()
        })
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| {
            grid.iter()
                .map(|r| r[i].len())
                .chain([c.len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: Vec<&str>| {
        let s: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:w$}"))
            .collect();
        format!("  {}\n", s.join("  ").trim_end())
    };
    let mut out = line(cols.iter().map(|c| c.as_str()).collect());
    for r in &grid {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

fn emit_error(err: &mut dyn Write, code: &str, message: &str) {
    let doc = json!({ "error": { "code": code, "message": message } });
    let _ = writeln!(err, "{doc}");
}

/// Parse `argv` (including the program name), run, and return the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            emit_error(
                err,
                "invalid_arguments",
                msg.lines().next().unwrap_or_default(),
            );
            return 2;
        }
    };
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(f) => {
            emit_error(err, f.code, &f.message);
            return f.exit;
        }
    };
    let text = match cli.format {
        Format::Json => format!("{}\n", outcome.value),
        Format::Table => render_table(&outcome.value),
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        emit_error(err, "io_error", &msg);
        return 2;
    }
    outcome.exit
}

/// [`run_with`] on the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        argv,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
