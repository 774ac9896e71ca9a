//! Command-line front end.
//!
//! Exit codes: 0 success, 2 bad input, 3 zero pivot (numeric/exact modes),
//! 4 singular matrix.

use crate::error::Error;
use crate::factor::{
    band_matvec, factorize, factorize_tol, solve_knpenta, solve_knpenta_tol, Mode,
};
use crate::json::{parse_system, write_system, JsonScalar, SystemDoc};
use crate::matrix::{gen_laplacian, gen_random, NearlyPentaMatrix};
use crate::oracle;
use crate::scalar::{Rational, Scalar};
use crate::symbolic::{determinant_symbolic, solve_ksnpenta_traced};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(
    name = "nearpenta",
    version,
    about = "Solve nearly pentadiagonal linear systems"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve the system in a JSON file and print the solution as JSON.
    Solve {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = SolveMode::Auto)]
        mode: SolveMode,
        /// Also print pivots and, for symbolic solves, the solution before x = 0.
        #[arg(long)]
        verbose: bool,
        /// Pivots with |c_i| <= tol count as zero (numeric mode).
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
    },
    /// Print the determinant of the matrix in a JSON file.
    Det {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = SolveMode::Auto)]
        mode: SolveMode,
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
    },
    /// Generate a test system with right-hand side A * [1, 2, ..., n].
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (standard output if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dense exact reference solve, for fixture generation.
    #[command(name = "oracle-solve", hide = true)]
    OracleSolve { path: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SolveMode {
    /// Exact arithmetic, falling back to the symbolic rescue on a zero pivot.
    Auto,
    /// Double precision.
    Numeric,
    /// Exact rational arithmetic; fails on a zero pivot.
    Exact,
    /// Always run the symbolic rescue.
    Symbolic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    Laplacian,
    Random,
}

/// A failure with its process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ZeroPivot(_) => 3,
            Error::SingularMatrix => 4,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

#[derive(Serialize)]
struct SolveOutput {
    x: Vec<Value>,
    det: Value,
    mode: Mode,
    zero_pivots: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual_norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pivots: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    symbolic_x: Option<Vec<String>>,
}

fn exact_value(v: &Rational) -> Value {
    Value::String(v.to_string())
}

fn read_system<T: JsonScalar>(path: &Path) -> Result<SystemDoc<T>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    Ok(parse_system(&text)?)
}

fn require_y<T>(doc: SystemDoc<T>) -> Result<(NearlyPentaMatrix<T>, Vec<T>), CliError> {
    match doc.y {
        Some(y) => Ok((doc.matrix, y)),
        None => Err(CliError {
            code: 2,
            message: "system file has no right-hand side \"y\"".into(),
        }),
    }
}

fn cmd_solve(path: &Path, mode: SolveMode, verbose: bool, tol: f64) -> Result<String, CliError> {
    let out = match mode {
        SolveMode::Numeric => {
            let (m, y) = require_y(read_system::<f64>(path)?)?;
            let rep = solve_knpenta_tol(&m, &y, tol)?;
            let pivots = if verbose {
                Some(
                    factorize_tol(&m, tol)?
                        .pivots()
                        .iter()
                        .map(f64::to_string)
                        .collect(),
                )
            } else {
                None
            };
            SolveOutput {
                x: rep.x.iter().map(JsonScalar::to_json).collect(),
                det: rep.det.to_json(),
                mode: rep.mode,
                zero_pivots: rep.zero_pivots,
                residual_norm: rep.residual_norm,
                pivots,
                symbolic_x: None,
            }
        }
        SolveMode::Exact | SolveMode::Auto | SolveMode::Symbolic => {
            let (m, y) = require_y(read_system::<Rational>(path)?)?;
            if mode == SolveMode::Symbolic {
                symbolic_output(&m, &y, verbose)?
            } else {
                match solve_knpenta(&m, &y) {
                    Ok(rep) => SolveOutput {
                        x: rep.x.iter().map(exact_value).collect(),
                        det: exact_value(&rep.det),
                        mode: rep.mode,
                        zero_pivots: rep.zero_pivots,
                        residual_norm: None,
                        pivots: verbose
                            .then(|| {
                                factorize(&m)
                                    .map(|lu| lu.pivots().iter().map(Rational::to_string).collect())
                            })
                            .transpose()?,
                        symbolic_x: None,
                    },
                    Err(Error::ZeroPivot(_)) if mode == SolveMode::Auto => {
                        symbolic_output(&m, &y, verbose)?
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
    };
    Ok(serde_json::to_string(&out).expect("output serializes"))
}

fn symbolic_output(
    m: &NearlyPentaMatrix<Rational>,
    y: &[Rational],
    verbose: bool,
) -> Result<SolveOutput, CliError> {
    let (rep, trace) = solve_ksnpenta_traced(m, y)?;
    let pivots = trace.factorization.pivots();
    Ok(SolveOutput {
        x: rep.x.iter().map(exact_value).collect(),
        det: exact_value(&rep.det),
        mode: rep.mode,
        zero_pivots: rep.zero_pivots,
        residual_norm: None,
        pivots: verbose.then(|| pivots.iter().map(ToString::to_string).collect()),
        symbolic_x: verbose.then(|| trace.x.iter().map(ToString::to_string).collect()),
    })
}

fn cmd_det(path: &Path, mode: SolveMode, tol: f64) -> Result<String, CliError> {
    let value = match mode {
        SolveMode::Numeric => {
            let doc = read_system::<f64>(path)?;
            factorize_tol(&doc.matrix, tol)?.determinant().to_json()
        }
        SolveMode::Exact => {
            let doc = read_system::<Rational>(path)?;
            exact_value(&factorize(&doc.matrix)?.determinant())
        }
        SolveMode::Auto | SolveMode::Symbolic => {
            let doc = read_system::<Rational>(path)?;
            let det = match factorize(&doc.matrix) {
                Ok(lu) if mode == SolveMode::Auto => lu.determinant(),
                Ok(_) | Err(Error::ZeroPivot(_)) => {
                    determinant_symbolic(&doc.matrix)
                        .map_err(|_| Error::SingularMatrix)?
                        .0
                }
                Err(e) => return Err(e.into()),
            };
            if det.is_zero() {
                return Err(Error::SingularMatrix.into());
            }
            exact_value(&det)
        }
    };
    Ok(value.to_string())
}

fn cmd_gen(kind: GenKind, n: usize, seed: u64) -> Result<String, CliError> {
    let m = match kind {
        GenKind::Laplacian => gen_laplacian::<Rational>(n)?,
        GenKind::Random => gen_random(n, seed, true)?,
    };
    let ramp: Vec<Rational> = (1..=n as i64).map(Rational::from).collect();
    let y = band_matvec(&m, &ramp)?;
    Ok(write_system(&m, Some(&y)))
}

fn cmd_oracle_solve(path: &Path) -> Result<String, CliError> {
    let (m, y) = require_y(read_system::<Rational>(path)?)?;
    let dense = m.to_dense();
    let x = oracle::dense_solve(&dense, &y)?;
    let det = oracle::dense_det(&dense);
    let out = serde_json::json!({
        "x": x.iter().map(exact_value).collect::<Vec<_>>(),
        "det": exact_value(&det),
    });
    Ok(out.to_string())
}

/// Executes a parsed command, writing its output to `stdout`.
pub fn run(cli: Cli, stdout: &mut impl Write) -> Result<(), CliError> {
    let text = match cli.command {
        Command::Solve {
            path,
            mode,
            verbose,
            tol,
        } => cmd_solve(&path, mode, verbose, tol)?,
        Command::Det { path, mode, tol } => cmd_det(&path, mode, tol)?,
        Command::Gen { kind, n, seed, out } => {
            let text = cmd_gen(kind, n, seed)?;
            if let Some(out) = out {
                std::fs::write(&out, format!("{text}\n")).map_err(|e| io_error(&out, e))?;
                return Ok(());
            }
            text
        }
        Command::OracleSolve { path } => cmd_oracle_solve(&path)?,
    };
    writeln!(stdout, "{text}").map_err(|e| CliError {
        code: 2,
        message: e.to_string(),
    })
}
