use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use octo_e6::dirac::{dirac_residual, lepton_spectrum};
use octo_e6::group::{build_transform, GeneratorFamily};
use octo_e6::harness::io::{parse_matrix, serialize_matrix};
use octo_e6::harness::{run, Suite, VerificationConfig, TOLERANCES};
use octo_e6::jordan::{spectral_decompose, SpectralDecomposition};
use octo_e6::lie::{naive_span, subgroup_dimensions, triality_check, TangentCache};
use octo_e6::{Error, StructureTable, Unit};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MALFORMED: u8 = 3;
const EXIT_UNKNOWN_FAMILY: u8 = 4;
const EXIT_NOT_HERMITIAN: u8 = 5;

const AFTER_HELP: &str = "\
Exit codes:
  0  success / all checks passed
  1  a verification check failed
  2  usage or I/O error
  3  malformed matrix JSON
  4  unknown generator family id
  5  input matrix is not Hermitian

Matrix files:
  {\"diag\":[d1,d2,d3],\"o12\":[8],\"o13\":[8],\"o23\":[8]}
  or {\"entries\":[[e11,e12,e13],[e21,e22,e23],[e31,e32,e33]]} with 8-arrays.
  Octonion coefficients are in the order 1, i, j, k, kl, jl, il, l.

Family ids:
  rot:xy:<u>                 type-I rotation diag(e^{-uθ/2}, e^{uθ/2}, 1)
  rot:yz:<T>:<u>             rotation into SO(9), block type T = I | II | III
  rot:zx:<T>
  boost:tz:<T>  boost:tx:<T>  boost:ty:<T>:<u>
  phase:<u>  or  phase:<T>:<u>
  g2:c1:<u>  g2:c2:<u>       (u ≠ l)
  g2:c3:a  g2:c3:b
  where <u> is one of i j k kl jl il l. A block token may be added to
  rot:xy and phase; type I is the default.";

#[derive(Parser)]
#[command(name = "octo-e6", version, about = "Octonions, H3(O) and E6 = SL(3,O)", after_help = AFTER_HELP)]
struct Cli {
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the randomized verification suites.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Base number of random trials per property.
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Override a tolerance, e.g. --tol det=1e-8. Repeatable.
        #[arg(long = "tol", value_name = "NAME=VALUE")]
        tolerances: Vec<String>,
        /// Run only these suites. Repeatable.
        #[arg(long = "suite", value_name = "NAME")]
        suites: Vec<String>,
    },
    /// Ranks of the generator tangent spaces.
    Dims,
    /// Apply a generator family to a matrix file.
    Apply {
        /// Family id, see below.
        #[arg(long)]
        family: String,
        /// Angle or rapidity.
        #[arg(long, allow_hyphen_values = true)]
        param: f64,
        /// Matrix file, or - for standard input.
        input: PathBuf,
    },
    /// Jordan eigenvalues and idempotents of a matrix file.
    Decompose {
        /// Matrix file, or - for standard input.
        input: PathBuf,
    },
    /// Print the signed multiplication table of the imaginary units.
    Table,
    /// Print the lepton states with their residuals.
    States,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Malformed(_) => EXIT_MALFORMED,
            Error::UnknownFamily(_) => EXIT_UNKNOWN_FAMILY,
            Error::NotHermitian { .. } => EXIT_NOT_HERMITIAN,
            _ => EXIT_FAIL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("reading {}: {e}", path.display())))
    }
}

fn emit(target: Option<&Path>, text: &str) -> Result<(), Failure> {
    match target {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(|e| Failure::usage(format!("writing {}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            writeln!(out, "{text}").map_err(|e| Failure::usage(format!("writing output: {e}")))
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn verify(
    json: Option<&Path>,
    seed: u64,
    trials: usize,
    tolerances: &[String],
    suites: &[String],
) -> Result<u8, Failure> {
    let mut config = VerificationConfig {
        seed,
        trials,
        ..VerificationConfig::default()
    };
    for t in tolerances {
        config.set_tolerance(t).map_err(|e| {
            let names: Vec<_> = TOLERANCES.iter().map(|(n, _)| *n).collect();
            Failure::usage(format!("{e} (known: {})", names.join(", ")))
        })?;
    }
    if !suites.is_empty() {
        config.suites = suites
            .iter()
            .map(|s| s.parse::<Suite>())
            .collect::<Result<_, _>>()
            .map_err(Failure::usage)?;
    }
    let start = Instant::now();
    let report = run(&config);
    let elapsed = start.elapsed();
    for s in &report.suites {
        eprintln!("{:<20} {}", s.name, if s.passed { "pass" } else { "FAIL" });
        for c in s.checks.iter().filter(|c| !c.passed) {
            eprintln!(
                "    {} failed: max {:e}, min {:e}, tolerance {:e}{}",
                c.name,
                c.max,
                c.min,
                c.tolerance,
                c.witness.as_deref().map(|w| format!(" ({w})")).unwrap_or_default()
            );
        }
    }
    eprintln!(
        "{} in {:.2}s",
        if report.passed { "all suites passed" } else { "verification failed" },
        elapsed.as_secs_f64()
    );
    emit(json, &report.to_json())?;
    Ok(if report.passed { 0 } else { EXIT_FAIL })
}

fn dims(json: Option<&Path>) -> Result<u8, Failure> {
    let cache = TangentCache::<f64>::build()?;
    let mut checks = subgroup_dimensions(&cache)?;
    checks.push(triality_check(&cache)?);
    checks.push(naive_span(&cache)?);
    let mut out = Map::new();
    let mut ok = true;
    for c in &checks {
        let r = &c.report;
        ok &= c.passed();
        eprintln!(
            "{:<9} rank {:>3} expected {:>3} gap {:.2e}{}",
            r.name,
            r.rank,
            c.expected,
            r.gap,
            if c.passed() { "" } else { "  MISMATCH" }
        );
        out.insert(
            r.name.clone(),
            json!({"rank": r.rank, "gap": r.gap, "expected": c.expected, "conclusive": r.conclusive}),
        );
    }
    emit(json, &pretty(&Value::Object(out)))?;
    Ok(if ok { 0 } else { EXIT_FAIL })
}

fn apply(json: Option<&Path>, family: &str, param: f64, input: &Path) -> Result<u8, Failure> {
    let f: GeneratorFamily = family.parse()?;
    let x = parse_matrix(&read_input(input)?)?;
    let y = build_transform(&f, param).apply(&x)?;
    eprintln!("det {:e} -> {:e}, trace {} -> {}", x.det(), y.det(), x.trace(), y.trace());
    emit(json, &serialize_matrix(&y))?;
    Ok(0)
}

fn decomposition_json(d: &SpectralDecomposition<f64>, residual: f64) -> Value {
    let pairs: Vec<Value> = d
        .pairs
        .iter()
        .map(|p| {
            let m: Value = serde_json::from_str(&serialize_matrix(&p.idempotent)).expect("own output parses");
            json!({"eigenvalue": p.eigenvalue, "idempotent": m})
        })
        .collect();
    json!({
        "eigenvalues": d.eigenvalues(),
        "path": d.path,
        "pairs": pairs,
        "max_residual": residual,
    })
}

fn decompose(json: Option<&Path>, input: &Path) -> Result<u8, Failure> {
    let a = parse_matrix(&read_input(input)?)?;
    let d = spectral_decompose(&a)?;
    let r = d.residuals(&a);
    eprintln!("eigenvalues {:?} ({:?}), max residual {:e}", d.eigenvalues(), d.path, r.max());
    emit(json, &pretty(&decomposition_json(&d, r.max())))?;
    Ok(0)
}

fn table(json: Option<&Path>) -> Result<u8, Failure> {
    let t = StructureTable::get();
    match json {
        Some(path) => {
            let rows: Vec<Vec<String>> = Unit::ALL
                .iter()
                .map(|&u| {
                    Unit::ALL
                        .iter()
                        .map(|&v| {
                            let (sign, w) = t.units(u, v);
                            format!("{}{}", if sign < 0 { "-" } else { "" }, w.map_or("1", Unit::name))
                        })
                        .collect()
                })
                .collect();
            let units: Vec<_> = Unit::ALL.iter().map(|u| u.name()).collect();
            emit(Some(path), &pretty(&json!({"units": units, "products": rows})))?;
        }
        None => print!("{t}"),
    }
    Ok(0)
}

fn states(json: Option<&Path>) -> Result<u8, Failure> {
    let mut out = Vec::new();
    let mut ok = true;
    for s in lepton_spectrum::<f64>() {
        let b = s.block();
        let (res, det) = dirac_residual(&b.p, &b.psi);
        let star = b.star_blocks().max_abs();
        ok &= res <= 1e-12 && det.abs() <= 1e-12 && star <= 1e-12;
        out.push(json!({
            "label": s.label,
            "generation": s.generation,
            "theta": s.theta,
            "xi": s.xi,
            "p": b.p,
            "psi": b.psi,
            "n": b.n,
            "residuals": {"dirac": res, "det_p": det, "star": star},
        }));
    }
    emit(json, &pretty(&Value::Array(out)))?;
    Ok(if ok { 0 } else { EXIT_FAIL })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let json = cli.json.as_deref();
    let result = match &cli.command {
        Command::Verify {
            seed,
            trials,
            tolerances,
            suites,
        } => verify(json, *seed, *trials, tolerances, suites),
        Command::Dims => dims(json),
        Command::Apply { family, param, input } => apply(json, family, *param, input),
        Command::Decompose { input } => decompose(json, input),
        Command::Table => table(json),
        Command::States => states(json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
