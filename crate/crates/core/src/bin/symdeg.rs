//! Command-line front end. All rationals are `p/q` strings.
//!
//! Exit codes: 0 success, 1 check failed (or internal error), 2 bad
//! arguments or input files, 3 enumeration budget exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use symdeg::andor::{degree_chain, substitute};
use symdeg::degreelp::{approx_degree, sweep, sweep_csv};
use symdeg::format::PolyFile;
use symdeg::oracle::{verify_approximation, Approximant};
use symdeg::properties::CustomProperty;
use symdeg::rangexfer::{extend, restrict};
use symdeg::symmetrize::symmetrize;
use symdeg::{rational, Budget, Error, Property, Rational};

#[derive(Parser)]
#[command(name = "symdeg", version, about = "Exact approximate degrees of symmetric properties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PropertyArgs {
    /// Built-in property: ed, collision, modified-ed, always-one
    #[arg(long, conflicts_with = "property_file")]
    property: Option<String>,
    /// JSON file with labelled partitions
    #[arg(long)]
    property_file: Option<PathBuf>,
}

impl PropertyArgs {
    fn load(&self) -> symdeg::Result<Property> {
        match (&self.property, &self.property_file) {
            (Some(name), None) => name.parse(),
            (None, Some(path)) => {
                let custom: CustomProperty = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                Ok(Property::Custom(custom))
            }
            _ => Err(Error::InvalidArgument(
                "exactly one of --property or --property-file is required".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Minimum approximating degree with per-degree optimal errors
    Degree {
        #[command(flatten)]
        property: PropertyArgs,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "1/3")]
        eps: String,
        /// Emit the certificate as JSON (the default)
        #[arg(long)]
        json: bool,
        /// Print a plain table instead of JSON
        #[arg(long, conflicts_with = "json")]
        human: bool,
    },
    /// Approximate degree for each range size in an inclusive range
    Sweep {
        #[command(flatten)]
        property: PropertyArgs,
        #[arg(long)]
        n: u32,
        /// Inclusive range such as 3..6, or a single value
        #[arg(long)]
        m: String,
        #[arg(long, default_value = "1/3")]
        eps: String,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Fail with exit code 1 if the degree varies across the range
        #[arg(long)]
        assert_flat: bool,
        /// Emit JSON certificates instead of CSV
        #[arg(long)]
        json: bool,
    },
    /// Indicator polynomial file -> symmetric frequency polynomial file
    Symmetrize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Reinterpret a symmetric polynomial over more variables
    Extend {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Set trailing variables of a symmetric polynomial to zero
    Restrict {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Substitute an AND-OR polynomial into element-distinctness variables
    AndorReduce {
        #[arg(long)]
        input: PathBuf,
        /// Must match the file's n when given
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// AND-OR degree lower bound implied by element distinctness at (n, n)
    AndorChain {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "1/3")]
        eps: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a polynomial file against a property
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        property: PropertyArgs,
        /// Domain size; required for z files, checked for y files
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value = "1/3")]
        eps: String,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Check(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::Inconsistent(_) => 1,
        _ => 2,
    }
}

fn emit(output: Option<&Path>, text: &str) -> symdeg::Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(v: &T) -> symdeg::Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn parse_range(s: &str) -> symdeg::Result<(u32, u32)> {
    let bad = || Error::InvalidArgument(format!("bad range {s:?}; expected a..b"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok((v, v))
        }
    }
}

fn read_z(path: &Path) -> symdeg::Result<symdeg::SymPolynomial> {
    match PolyFile::read(path)? {
        PolyFile::Z(q) => Ok(q),
        other => Err(Error::InvalidArgument(format!(
            "expected a z polynomial, got namespace {}",
            other.namespace()
        ))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budget = Budget::from_env()?;
    match cli.command {
        Command::Degree {
            property,
            n,
            m,
            eps,
            human,
            ..
        } => {
            let prop = property.load()?;
            let eps = rational::parse(&eps)?;
            let cert = approx_degree(&prop, n, m, &eps)?;
            if human {
                let mut out = format!(
                    "{} n={} m={} eps={}\n degree  eps_min\n",
                    cert.property,
                    n,
                    m,
                    rational::to_text(&eps)
                );
                for r in &cert.records {
                    out.push_str(&format!(" {:>6}  {}\n", r.degree, rational::to_text(&r.eps_min)));
                }
                out.push_str(&format!(
                    "d* = {}, query lower bound = {}\n",
                    cert.degree,
                    cert.query_lower_bound()
                ));
                emit(None, &out)?;
            } else {
                emit(None, &to_json(&cert)?)?;
            }
        }
        Command::Sweep {
            property,
            n,
            m,
            eps,
            output,
            assert_flat,
            json,
        } => {
            let prop = property.load()?;
            let eps = rational::parse(&eps)?;
            let (lo, hi) = parse_range(&m)?;
            let certs = sweep(&prop, n, lo..=hi, &eps)?;
            let text = if json { to_json(&certs)? } else { sweep_csv(&certs)? };
            emit(output.as_deref(), &text)?;
            if assert_flat && certs.iter().any(|c| c.degree != certs[0].degree) {
                let degrees: Vec<String> = certs.iter().map(|c| format!("m={}:{}", c.m, c.degree)).collect();
                return Err(Failure::Check(format!("degree varies across range: {}", degrees.join(" "))));
            }
        }
        Command::Symmetrize { input, output, .. } => {
            let p = match PolyFile::read(&input)? {
                PolyFile::Y(p) => p,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "expected a y polynomial, got namespace {}",
                        other.namespace()
                    ))
                    .into())
                }
            };
            emit(output.as_deref(), &PolyFile::Z(symmetrize(&p)?).to_json()?)?;
        }
        Command::Extend { input, m, output, .. } => {
            let q = extend(&read_z(&input)?, m)?;
            emit(output.as_deref(), &PolyFile::Z(q).to_json()?)?;
        }
        Command::Restrict { input, m, output, .. } => {
            let q = restrict(&read_z(&input)?, m)?;
            emit(output.as_deref(), &PolyFile::Z(q).to_json()?)?;
        }
        Command::AndorReduce { input, n, output, .. } => {
            let p = match PolyFile::read(&input)? {
                PolyFile::X(p) => p,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "expected an x polynomial, got namespace {}",
                        other.namespace()
                    ))
                    .into())
                }
            };
            if let Some(n) = n {
                if n != p.n() {
                    return Err(Error::InvalidArgument(format!("--n {n} but file has n={}", p.n())).into());
                }
            }
            emit(output.as_deref(), &PolyFile::Y(substitute(&p)?).to_json()?)?;
        }
        Command::AndorChain { n, eps, .. } => {
            let chain = degree_chain(n, &rational::parse(&eps)?)?;
            emit(None, &to_json(&chain)?)?;
        }
        Command::Verify {
            input,
            property,
            n,
            eps,
            ..
        } => {
            let prop = property.load()?;
            let eps: Rational = rational::parse(&eps)?;
            let file = PolyFile::read(&input)?;
            let report = match &file {
                PolyFile::Y(p) => {
                    let (pn, pm) = p.dims();
                    if n.is_some_and(|n| n != pn) {
                        return Err(Error::InvalidArgument(format!("--n does not match file n={pn}")).into());
                    }
                    verify_approximation(Approximant::Y(p), &prop, pn, pm, &eps, budget)?
                }
                PolyFile::Z(q) => {
                    let n = n.ok_or_else(|| Error::InvalidArgument("--n is required for z polynomials".into()))?;
                    verify_approximation(Approximant::Sym(q), &prop, n, q.m(), &eps, budget)?
                }
                PolyFile::X(_) => {
                    return Err(Error::InvalidArgument("x polynomials cannot be verified against a property".into()).into())
                }
            };
            emit(None, &to_json(&report)?)?;
            if !report.pass {
                return Err(Failure::Check(format!("{} violations", report.violations.len())));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("symdeg: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("symdeg: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
