//! The `snakefrac` command line.
//!
//! ```text
//! snakefrac <verb> <cf> [--method M] [--format F] [--limit K] [--base minimal|index:i]
//! ```
//!
//! Exit status: 0 on success, 1 on bad input, 2 when the enumeration limit
//! would be exceeded, 3 when the methods disagree.

pub mod dot;
pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, ValueEnum};
use snakefrac::check::{self, CheckError};
use snakefrac::fpoly::{self, FpolyError};
use snakefrac::matchings::{self, MatchingError, DEFAULT_LIMIT};
use snakefrac::snakegraph::SnakeError;
use snakefrac::{CfError, ContinuedFraction, Format, PerfectMatching, SnakeGraph};

pub use dot::export_poset_dot;
pub use render::{render_ascii, render_svg};

pub const LIMIT_ENV: &str = "SNAKEFRAC_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Value,
    N,
    Build,
    Matchings,
    Fpoly,
    Check,
    Poset,
    Render,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Graft,
    Matchings,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
    Latex,
    Dot,
    Svg,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseSelector {
    Minimal,
    Index(usize),
}

impl std::str::FromStr for BaseSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "minimal" {
            return Ok(BaseSelector::Minimal);
        }
        s.strip_prefix("index:")
            .and_then(|k| k.parse().ok())
            .map(BaseSelector::Index)
            .ok_or_else(|| format!("expected `minimal` or `index:<k>`, got {s:?}"))
    }
}

/// Compute F-polynomials of snake graphs from positive continued fractions.
#[derive(Debug, Parser)]
#[command(name = "snakefrac", version)]
struct Args {
    verb: Verb,
    /// Continued fraction entries, e.g. `2,3,4`.
    #[arg(allow_hyphen_values = true)]
    cf: String,
    #[arg(long)]
    method: Option<Method>,
    #[arg(long)]
    format: Option<OutFormat>,
    /// Maximum number of perfect matchings to enumerate.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    base: Option<BaseSelector>,
}

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Limit(String),
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Limit(_) => 2,
            CliError::Inconsistent(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Limit(m) | CliError::Inconsistent(m) => m,
        }
    }
}

impl From<CfError> for CliError {
    fn from(e: CfError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<SnakeError> for CliError {
    fn from(e: SnakeError) -> Self {
        match e {
            SnakeError::NotPerfect => CliError::Inconsistent(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<MatchingError> for CliError {
    fn from(e: MatchingError) -> Self {
        match e {
            MatchingError::LimitExceeded { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<FpolyError> for CliError {
    fn from(e: FpolyError) -> Self {
        match e {
            FpolyError::Cf(e) => e.into(),
            FpolyError::TooLarge { .. } => CliError::Limit(e.to_string()),
            FpolyError::NegativeExponent(_) => CliError::Inconsistent(e.to_string()),
        }
    }
}

impl From<CheckError> for CliError {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::Snake(e) => e.into(),
            CheckError::Matching(e) => e.into(),
            CheckError::Fpoly(e) => e.into(),
            CheckError::Mismatch { .. } => CliError::Inconsistent(e.to_string()),
        }
    }
}

/// `--limit` wins over `SNAKEFRAC_LIMIT`, which wins over the default.
pub fn resolve_limit(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    match (flag, env) {
        (Some(k), _) => Ok(k),
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("{LIMIT_ENV}={v:?} is not a count"))),
        (None, None) => Ok(DEFAULT_LIMIT),
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(args) => args,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    let env = std::env::var(LIMIT_ENV).ok();
    match execute(&args, env.as_deref()) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn reject(what: &str, verb: Verb) -> CliError {
    CliError::Invalid(format!("{what} is not valid for `{}`", verb_name(verb)))
}

fn verb_name(verb: Verb) -> String {
    verb.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn pick_format(args: &Args, allowed: &[OutFormat]) -> Result<OutFormat, CliError> {
    match args.format {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(reject(&format!("--format {f:?}").to_lowercase(), args.verb)),
    }
}

fn select_base(g: &SnakeGraph, selector: Option<BaseSelector>, limit: usize) -> Result<PerfectMatching, CliError> {
    match selector.unwrap_or(BaseSelector::Minimal) {
        BaseSelector::Minimal => Ok(g.minimal_matching()),
        BaseSelector::Index(k) => {
            let all = matchings::enumerate(g, limit)?;
            let count = all.len();
            all.into_iter()
                .nth(k)
                .ok_or_else(|| CliError::Invalid(format!("--base index:{k} out of range, {count} matchings")))
        }
    }
}

fn execute(args: &Args, env_limit: Option<&str>) -> Result<String, CliError> {
    use OutFormat as F;
    let verb = args.verb;
    if args.method.is_some() && verb != Verb::Fpoly {
        return Err(reject("--method", verb));
    }
    let enumerates = matches!(verb, Verb::Matchings | Verb::Fpoly | Verb::Check | Verb::Poset | Verb::Render);
    if args.limit.is_some() && !enumerates {
        return Err(reject("--limit", verb));
    }
    let takes_base = match verb {
        Verb::Matchings | Verb::Render => true,
        Verb::Fpoly => args.method == Some(Method::Matchings),
        _ => false,
    };
    if args.base.is_some() && !takes_base {
        return Err(reject("--base", verb));
    }
    let limit = resolve_limit(args.limit, env_limit)?;
    let cf = ContinuedFraction::parse(&args.cf)?;

    let text = match verb {
        Verb::Value => {
            pick_format(args, &[F::Text])?;
            format!("{}\n", cf.value()?)
        }
        Verb::N => {
            pick_format(args, &[F::Text])?;
            format!("{}\n", cf.numerator())
        }
        Verb::Build => {
            let g = SnakeGraph::build(&cf)?;
            match pick_format(args, &[F::Json, F::Ascii, F::Svg])? {
                F::Ascii => render_ascii(&g, None),
                F::Svg => render_svg(&g, None),
                _ => format!("{}\n", g.to_json()),
            }
        }
        Verb::Matchings => {
            let format = pick_format(args, &[F::Text, F::Json])?;
            let g = SnakeGraph::build(&cf)?;
            let base = select_base(&g, args.base, limit)?;
            let all = matchings::enumerate(&g, limit)?;
            if format == F::Json {
                format!("{}\n", matchings::to_json(&g, &all, &base)?)
            } else {
                let mut s = String::new();
                for p in &all {
                    s.push_str(&format!("{}\t{p}\n", matchings::height(&g, p, &base)?));
                }
                s
            }
        }
        Verb::Fpoly => {
            let format = match pick_format(args, &[F::Text, F::Json, F::Latex])? {
                F::Json => Format::Json,
                F::Latex => Format::Latex,
                _ => Format::Text,
            };
            let f = match args.method.unwrap_or(Method::Formula) {
                Method::Formula => fpoly::formula(&cf)?,
                Method::Graft => fpoly::graft(&cf)?,
                Method::Matchings => {
                    let g = SnakeGraph::build(&cf)?;
                    let base = select_base(&g, args.base, limit)?;
                    matchings::f_polynomial(&g, Some(&base), limit)?
                }
            };
            format!("{}\n", f.to_canonical_string(format))
        }
        Verb::Check => {
            pick_format(args, &[F::Text])?;
            let report = check::check(&cf, limit)?;
            format!("OK: 3 methods agree, {} terms, N={}\n", report.terms, report.numerator)
        }
        Verb::Poset => {
            pick_format(args, &[F::Dot])?;
            let g = SnakeGraph::build(&cf)?;
            export_poset_dot(&matchings::build_poset(&g, limit)?)
        }
        Verb::Render => {
            let format = pick_format(args, &[F::Ascii, F::Svg])?;
            let g = SnakeGraph::build(&cf)?;
            let base = select_base(&g, args.base, limit)?;
            match format {
                F::Svg => render_svg(&g, Some(&base)),
                _ => render_ascii(&g, Some(&base)),
            }
        }
    };
    Ok(text)
}
