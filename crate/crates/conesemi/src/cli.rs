//! The `conesemi` command line. [`run`] does all the work and returns the
//! text to print, so the binary is a thin wrapper and tests can drive it
//! in-process.

use std::fs;
use std::io::Read;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use conesemi_core::forest::construct_primary;
use conesemi_core::irreducible::{ei_report, enumerate_irreducible};
use conesemi_core::oracle::{compare_forest, oracle_primary_with_beta, MAX_CAP};
use conesemi_core::{Cone, Error, IrreducibleKind, TermOrder, Vector};
use serde::Serialize;

use crate::document::{ForestDoc, InputDoc, SemigroupDoc};
use crate::{dot, interval_cap, parallel, parse, report, CliError, ExitCode};

#[derive(Debug, Parser)]
#[command(name = "conesemi", version, about = "C-semigroups and their primary positioned forests")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of the semigroup described by a JSON input document
    Analyze(AnalyzeArgs),
    /// Symmetric or pseudo-symmetric semigroups with Frobenius element k
    Irreducible(IrreducibleArgs),
    /// Roots of the forest for k
    Ei(EiArgs),
    /// Every primary positioned semigroup for k, as a forest
    Forest(ForestArgs),
    /// Primary positioned semigroups for k by exhaustive search
    Oracle(OracleArgs),
    /// Compare the forest with the exhaustive search
    Verify(VerifyArgs),
    /// One primary positioned semigroup for k
    Construct(ConstructArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Symmetric,
    PseudoSymmetric,
}

#[derive(Debug, Args)]
pub struct Target {
    /// Generators as "a,b;c,d", or N1, N2, N3 for the orthant
    #[arg(long, default_value = "N2")]
    pub cone: String,
    /// The element k, e.g. "11,5"
    #[arg(long)]
    pub k: String,
}

#[derive(Debug, Args)]
pub struct OrderArg {
    /// lex, grlex, grevlex or weighted:w1,w2,...:tie
    #[arg(long, default_value = "grlex")]
    pub order: String,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Input document, or "-" for standard input
    pub input: String,
    /// Overrides the order named in the document
    #[arg(long)]
    pub order: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Report the Frobenius element of N^d itself as (-1,...,-1)
    #[arg(long)]
    pub gns_conventions: bool,
}

#[derive(Debug, Args)]
pub struct IrreducibleArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long, value_enum, default_value_t = Kind::Symmetric)]
    pub kind: Kind,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EiArgs {
    #[command(flatten)]
    pub target: Target,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ForestArgs {
    #[command(flatten)]
    pub target: Target,
    #[command(flatten)]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub target: Target,
    #[command(flatten)]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub target: Target,
    #[command(flatten)]
    pub order: OrderArg,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub target: Target,
    #[command(flatten)]
    pub order: OrderArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// What a command printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: ExitCode,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: ExitCode::Success }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: ExitCode::Input }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(&cli.command) {
        Ok(o) => o,
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() },
    }
}

pub fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Analyze(a) => analyze(a),
        Command::Irreducible(a) => irreducible(a),
        Command::Ei(a) => ei(a),
        Command::Forest(a) => forest(a),
        Command::Oracle(a) => oracle(a),
        Command::Verify(a) => verify(a),
        Command::Construct(a) => construct(a),
    }
}

fn target(t: &Target) -> Result<(Arc<Cone>, Vector), CliError> {
    let cone = parse::cone(&t.cone)?;
    let k = parse::vector(&t.k)?;
    if k.dim() != cone.dim() {
        return Err(Error::DimensionMismatch { expected: cone.dim(), found: k.dim() }.into());
    }
    Ok((cone, k))
}

fn no_dot(f: Format) -> Result<(), CliError> {
    if f == Format::Dot {
        return Err(CliError::Input("dot output is only available for forests".into()));
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn read_input(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.to_owned(), source };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

fn analyze(a: &AnalyzeArgs) -> Result<Outcome, CliError> {
    no_dot(a.format)?;
    let input = InputDoc::from_json(&read_input(&a.input)?)?.resolve()?;
    let order = match &a.order {
        Some(o) => parse::order(o)?,
        None => input.order.unwrap_or(TermOrder::grlex()),
    };
    let analysis = report::analyze(&input.semigroup, &input.ks, &order, a.gns_conventions)?;
    Ok(Outcome::ok(match a.format {
        Format::Json => json(&analysis)?,
        _ => analysis.to_text(),
    }))
}

fn irreducible(a: &IrreducibleArgs) -> Result<Outcome, CliError> {
    no_dot(a.format)?;
    let (cone, k) = target(&a.target)?;
    let kind = match a.kind {
        Kind::Symmetric => IrreducibleKind::Symmetric,
        Kind::PseudoSymmetric => IrreducibleKind::PseudoSymmetric,
    };
    let found: Vec<_> = enumerate_irreducible(&cone, &k, kind)?.into_iter().map(|s| (s, None)).collect();
    Ok(Outcome::ok(match a.format {
        Format::Json => json(&report::semigroups_docs(&found))?,
        _ => report::semigroups_text(&format!("{:?} semigroups with Frobenius element {k}", a.kind), &found),
    }))
}

#[derive(Serialize)]
struct EiDoc {
    accepted: Vec<SemigroupDoc>,
    rejected: Vec<SemigroupDoc>,
}

fn ei(a: &EiArgs) -> Result<Outcome, CliError> {
    no_dot(a.format)?;
    let (cone, k) = target(&a.target)?;
    let r = ei_report(&cone, &k)?;
    let accepted: Vec<_> = r.accepted.into_iter().map(|s| (s, None)).collect();
    let rejected: Vec<_> = r.rejected.into_iter().map(|s| (s, None)).collect();
    Ok(Outcome::ok(match a.format {
        Format::Json => {
            json(&EiDoc { accepted: report::semigroups_docs(&accepted), rejected: report::semigroups_docs(&rejected) })?
        }
        _ => {
            report::semigroups_text(&format!("EI({k})"), &accepted)
                + &report::semigroups_text("extensions that are not primary positioned", &rejected)
        }
    }))
}

fn forest(a: &ForestArgs) -> Result<Outcome, CliError> {
    let (cone, k) = target(&a.target)?;
    let order = parse::order(&a.order.order)?;
    let f = parallel::forest(&cone, &k, &order, a.jobs)?;
    let empty = format!("P(k) is empty for k = {k}\n");
    let stdout = match a.format {
        Format::Text if f.is_empty() => return Ok(Outcome::ok(empty)),
        Format::Text => report::forest_text(&f)?,
        Format::Json => ForestDoc::from_forest(&f)?.to_json()?,
        Format::Dot => dot::render(&f),
    };
    let stderr = if f.is_empty() { empty } else { String::new() };
    Ok(Outcome { stdout, stderr, code: ExitCode::Success })
}

fn capped(cone: &Cone, k: &Vector) -> Result<usize, CliError> {
    let cap = interval_cap()?.min(MAX_CAP);
    let size = cone.interval(k)?.len();
    if size > cap {
        return Err(Error::CapExceeded { size, cap }.into());
    }
    Ok(cap)
}

fn oracle(a: &OracleArgs) -> Result<Outcome, CliError> {
    no_dot(a.format)?;
    let (cone, k) = target(&a.target)?;
    let order = parse::order(&a.order.order)?;
    let cap = capped(&cone, &k)?;
    let found = oracle_primary_with_beta(&cone, &k, &order, cap)?;
    Ok(Outcome::ok(match a.format {
        Format::Json => json(&report::semigroups_docs(&found))?,
        _ => report::semigroups_text(&format!("P({k}) by exhaustive search"), &found),
    }))
}

fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let (cone, k) = target(&a.target)?;
    let order = parse::order(&a.order.order)?;
    let cap = capped(&cone, &k)?;
    let f = parallel::forest(&cone, &k, &order, a.jobs)?;
    let diff = compare_forest(&f, cap)?;
    let mut out = format!("k = {k}, order {order}: forest has {} semigroups\n", f.node_count());
    if diff.is_empty() {
        out.push_str("agrees with exhaustive search\n");
        return Ok(Outcome::ok(out));
    }
    for g in &diff.missing {
        out.push_str(&format!("missing from forest: gaps {}\n", report::list(g)));
    }
    for g in &diff.extra {
        out.push_str(&format!("not primary positioned: gaps {}\n", report::list(g)));
    }
    let show = |b: &Option<Vector>| b.map_or("none".to_owned(), |b| b.to_string());
    for m in &diff.beta_mismatches {
        out.push_str(&format!(
            "beta differs: gaps {}, forest {}, search {}\n",
            report::list(&m.gaps),
            show(&m.forest),
            show(&m.oracle)
        ));
    }
    Ok(Outcome { stdout: out, stderr: String::new(), code: ExitCode::Mismatch })
}

#[derive(Serialize)]
struct ConstructDoc {
    k: Vec<u32>,
    order: String,
    semigroup: SemigroupDoc,
    class: String,
}

fn construct(a: &ConstructArgs) -> Result<Outcome, CliError> {
    no_dot(a.format)?;
    let (cone, k) = target(&a.target)?;
    let order = parse::order(&a.order.order)?;
    let s = construct_primary(&cone, &k, &order)?;
    let class = s.classify(&k)?;
    Ok(Outcome::ok(match a.format {
        Format::Json => json(&ConstructDoc {
            k: k.coords().to_vec(),
            order: order.to_string(),
            semigroup: SemigroupDoc::new(&s, None),
            class: class.as_str().to_owned(),
        })?,
        _ => {
            format!("primary positioned for k = {k} ({class}), genus {}: gaps {}\n", s.genus(), report::list(s.gaps()))
        }
    }))
}
