//! Subcommands, reports and exit codes.
//!
//! Exit codes: 2 for unreadable or malformed input, 3 for a violated
//! precondition, otherwise a verdict code per subcommand (see [`Command`]).

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use halfplane_core::combstruct::{
    check_delta_matroid, has_internal_zeros, is_jump_system, is_matroid_bases, Matroid, Verdict,
};
use halfplane_core::constructors::{self, ConstructionTag};
use halfplane_core::number::int;
use halfplane_core::obstruction::{hpp_obstruction, ObstructionStatus};
use halfplane_core::stability::{self, Budget, Domain, StabilityVerdict};
use halfplane_core::{Polynomial, Rational};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::formats::{self, FormatError};
use crate::report;

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;
pub const EXIT_NOT_HPP: i32 = 10;

#[derive(Parser, Debug)]
#[command(name = "halfplane", version, about = "Exact stability checks for multivariate polynomials")]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random samples per falsifier run.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub samples: usize,
    /// Coordinate-descent rounds after sampling.
    #[arg(long, global = true, default_value_t = 50)]
    pub descent_iters: usize,
    /// Skip the fixed evaluation grid.
    #[arg(long, global = true)]
    pub no_grid: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl Options {
    pub fn budget(&self) -> Budget {
        Budget { grid: !self.no_grid, samples: self.samples, descent_iters: self.descent_iters }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stability of a polynomial. Exit 0 certified, 1 refuted, 4 unknown.
    CheckStability { input: PathBuf },
    /// Rayleigh differences of a matroid's basis polynomial. Exit 1 if one is refuted.
    Rayleigh {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = DomainArg::AllReals)]
        domain: DomainArg,
    },
    /// Whether the support of a polynomial is a jump system. Exit 1 if not.
    CheckSupport { input: PathBuf },
    /// Axiom checks on a support set or basis family. Exit 1 on violation.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        input: PathBuf,
    },
    /// Build a polynomial that is stable by construction.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        input: PathBuf,
        /// Root vertex for spanning-tree (1-based).
        #[arg(long, default_value_t = 1)]
        root: usize,
    },
    /// Polarization of a polynomial.
    Polarize { input: PathBuf },
    /// Try to rule out a rank-3 matroid as the support of a stable polynomial. Exit 10 when ruled out.
    Obstruct { input: PathBuf },
    /// A real polynomial `h + αg` with the same support as `h + ig`.
    Realify {
        input: PathBuf,
        /// Values of α to try, in order; defaults to 1, 2, … up to one more than the term count.
        #[arg(long = "alpha", allow_hyphen_values = true)]
        alphas: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainArg {
    AllReals,
    PositiveOrthant,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyKind {
    Jump,
    Delta,
    Matroid,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructKind {
    DetPencil,
    PrincipalMinors,
    Matching,
    Forest,
    SpanningTree,
    Degree,
    Representable,
    Basis,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error: {0}")]
    Parse(#[from] FormatError),
    #[error("precondition violated: {0}")]
    Precondition(#[from] halfplane_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) => EXIT_PARSE,
            CliError::Precondition(_) => EXIT_PRECONDITION,
        }
    }
}

/// A finished command: verdict-specific fields plus the exit code.
pub struct Outcome {
    pub code: i32,
    pub body: Value,
}

fn outcome(code: i32, body: Value) -> Result<Outcome, CliError> {
    Ok(Outcome { code, body })
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn matroid(text: &str) -> Result<Matroid, CliError> {
    let (n, bases) = formats::parse_set_family(text)?;
    Ok(Matroid::new(n, bases)?)
}

fn name(command: &Command) -> String {
    match command {
        Command::CheckStability { .. } => "check-stability".into(),
        Command::Rayleigh { .. } => "rayleigh".into(),
        Command::CheckSupport { .. } => "check-support".into(),
        Command::Verify { kind, .. } => format!("verify {}", kind.to_possible_value().unwrap().get_name()),
        Command::Construct { kind, .. } => {
            format!("construct {}", kind.to_possible_value().unwrap().get_name())
        }
        Command::Polarize { .. } => "polarize".into(),
        Command::Obstruct { .. } => "obstruct".into(),
        Command::Realify { .. } => "realify".into(),
    }
}

fn input_path(command: &Command) -> &Path {
    match command {
        Command::CheckStability { input }
        | Command::Rayleigh { input, .. }
        | Command::CheckSupport { input }
        | Command::Verify { input, .. }
        | Command::Construct { input, .. }
        | Command::Polarize { input }
        | Command::Obstruct { input }
        | Command::Realify { input, .. } => input,
    }
}

fn verdict_code<W>(v: &Verdict<W>) -> i32 {
    if v.holds() {
        0
    } else {
        1
    }
}

fn construction(kind: ConstructKind, text: &str, root: usize) -> Result<(Polynomial, ConstructionTag), CliError> {
    use constructors as c;
    Ok(match kind {
        ConstructKind::DetPencil => {
            let (pencil, constant) = formats::parse_pencil(text)?;
            c::det_pencil(&pencil, &constant)?
        }
        ConstructKind::PrincipalMinors => c::principal_minors_poly(&formats::parse_matrix(text)?)?,
        ConstructKind::Representable => c::representable_matroid_poly(&formats::parse_matrix(text)?)?,
        ConstructKind::Matching => c::matching_polynomial(&formats::parse_graph(text)?)?,
        ConstructKind::Forest => c::forest_polynomial(&formats::parse_graph(text)?)?,
        ConstructKind::Degree => c::degree_poly(&formats::parse_graph(text)?)?,
        ConstructKind::SpanningTree => {
            let g = formats::parse_graph(text)?;
            if root == 0 {
                return Err(FormatError("vertices are numbered from 1".into()).into());
            }
            c::spanning_tree_polynomial(&g, root - 1)?
        }
        ConstructKind::Basis => {
            let m = matroid(text)?;
            (c::basis_generating_poly(&m)?, c::basis_generating_tag(&m))
        }
    })
}

/// Runs one command on already-read input text.
pub fn execute(command: &Command, text: &str, options: &Options) -> Result<Outcome, CliError> {
    let budget = options.budget();
    let seed = options.seed;
    match command {
        Command::CheckStability { .. } => {
            let f = formats::parse_polynomial(text)?;
            let verdict = stability::check_stability(&f, &budget, seed)?;
            if let StabilityVerdict::Refuted(w) = &verdict {
                assert!(w.revalidate(&f), "witness failed exact re-validation");
            }
            let code = match verdict {
                StabilityVerdict::CertifiedStable(_) => 0,
                StabilityVerdict::Refuted(_) => 1,
                StabilityVerdict::Unknown(_) => EXIT_UNKNOWN,
            };
            outcome(code, report::verdict_json(&verdict))
        }
        Command::Rayleigh { domain, .. } => {
            let m = matroid(text)?;
            let domain = match domain {
                DomainArg::AllReals => Domain::AllReals,
                DomainArg::PositiveOrthant => Domain::PositiveOrthant,
            };
            let r = stability::matroid_rayleigh_check(&m, domain, &budget, seed)?;
            outcome(i32::from(r.is_refuted()), report::rayleigh_json(&r))
        }
        Command::CheckSupport { .. } => {
            let f = formats::parse_polynomial(text)?;
            if f.is_zero() {
                return Err(halfplane_core::Error::ZeroPolynomial.into());
            }
            let support = f.support();
            let jump = is_jump_system(&support)?;
            let zero = has_internal_zeros(&support);
            outcome(
                verdict_code(&jump),
                json!({
                    "jump_system": jump.holds(),
                    "violation": jump.witness().map(report::jump_violation_json),
                    "internal_zero": zero,
                    "support_size": support.len(),
                }),
            )
        }
        Command::Verify { kind: VerifyKind::Jump, .. } => {
            let v = is_jump_system(&formats::parse_support(text)?)?;
            outcome(
                verdict_code(&v),
                json!({ "holds": v.holds(), "violation": v.witness().map(report::jump_violation_json) }),
            )
        }
        Command::Verify { kind: VerifyKind::Delta, .. } => {
            let check = check_delta_matroid(&formats::parse_support(text)?)?;
            let holds = check.is_delta_matroid();
            outcome(
                i32::from(!holds),
                json!({
                    "holds": holds,
                    "exchange": check.exchange.holds(),
                    "violation": check.exchange.witness().map(report::delta_violation_json),
                    "unused": formats::one_based(&check.unused),
                }),
            )
        }
        Command::Verify { kind: VerifyKind::Matroid, .. } => {
            let (n, family) = formats::parse_set_family(text)?;
            let v = is_matroid_bases(&family, n)?;
            outcome(
                verdict_code(&v),
                json!({ "holds": v.holds(), "violation": v.witness().map(report::matroid_violation_json) }),
            )
        }
        Command::Construct { kind, root, .. } => {
            let (f, tag) = construction(*kind, text, *root)?;
            outcome(0, json!({ "polynomial": formats::polynomial_json(&f), "tag": report::tag_json(&tag) }))
        }
        Command::Polarize { .. } => {
            let f = formats::parse_polynomial(text)?;
            let p = f.polarize()?;
            assert_eq!(p.collapse(), f, "collapse of the polarization differs from the input");
            outcome(
                0,
                json!({
                    "degrees": p.degrees(),
                    "polynomial": formats::polynomial_json(p.base()),
                    "group_symmetric": p.is_group_symmetric(),
                }),
            )
        }
        Command::Obstruct { .. } => {
            let m = matroid(text)?;
            let r = hpp_obstruction(&m, &budget, seed)?;
            let code = match r.status {
                ObstructionStatus::NotHpp => EXIT_NOT_HPP,
                ObstructionStatus::Inconclusive => 0,
            };
            outcome(code, report::obstruction_json(&r))
        }
        Command::Realify { alphas, .. } => {
            let f = formats::parse_polynomial(text)?;
            let alphas: Vec<Rational> = if alphas.is_empty() {
                (1..=f.len() as i64 + 1).map(int).collect()
            } else {
                alphas
                    .iter()
                    .map(|a| {
                        halfplane_core::number::parse_rational(a)
                            .ok_or_else(|| FormatError(format!("not a rational: {a:?}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            let real = stability::realify(&f, &alphas)?;
            outcome(0, json!({ "polynomial": formats::polynomial_json(&real) }))
        }
    }
}

/// Wraps a command result with the run metadata.
pub fn envelope(command: &str, input: &[u8], options: &Options, body: Value, elapsed_ms: u128) -> Value {
    json!({
        "tool": "halfplane",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "seed": options.seed,
        "budget": report::budget_json(&options.budget()),
        "input_sha256": format!("{:x}", Sha256::digest(input)),
        "elapsed_ms": elapsed_ms,
        "result": body,
    })
}

/// Full run: read, execute, emit. Returns the process exit code.
pub fn main_with(cli: Cli) -> i32 {
    let start = Instant::now();
    let path = input_path(&cli.command);
    let text = match read(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("halfplane: {e}");
            return e.exit_code();
        }
    };
    let result = execute(&cli.command, &text, &cli.options);
    let (code, body) = match result {
        Ok(o) => (o.code, o.body),
        Err(e) => {
            eprintln!("halfplane: {e}");
            let kind = if e.exit_code() == EXIT_PARSE { "parse" } else { "precondition" };
            (e.exit_code(), json!({ "error": kind, "message": e.to_string() }))
        }
    };
    let doc = envelope(&name(&cli.command), text.as_bytes(), &cli.options, body, start.elapsed().as_millis());
    let rendered = serde_json::to_string_pretty(&doc).expect("reports always serialize") + "\n";
    match &cli.options.out {
        Some(out) => {
            if let Err(e) = std::fs::write(out, rendered) {
                eprintln!("halfplane: cannot write {}: {e}", out.display());
                return EXIT_PARSE;
            }
        }
        None => print!("{rendered}"),
    }
    code
}
