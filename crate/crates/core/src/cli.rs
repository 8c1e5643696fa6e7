//! Command-line front end: argument parsing, report assembly and rendering.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::admissibility::{decide, Attempt, Verdict, DEFAULT_SEARCH_BOUND};
use crate::aomoto::{aomoto_dims, AomotoResult};
use crate::arrangement::{Arrangement, ProjPoint};
use crate::classify::{classify, CkClassification};
use crate::corpus;
use crate::error::AdmissibilityError;
use crate::format::{parse_arrangement, parse_local_system};
use crate::local_system::{standard_lift, LocalSystem};

#[derive(Parser, Debug)]
#[command(name = "admissible", version, about = "Line arrangements and admissible rank-one local systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Intersection points, multiple points and C_k class.
    Analyze {
        /// Arrangement JSON file, or `corpus:NAME`.
        arrangement: String,
        #[arg(long)]
        json: bool,
    },
    /// C_k class and all minimal covers.
    Classify {
        arrangement: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide admissibility of one or more local systems.
    Admissible {
        arrangement: String,
        #[arg(required = true)]
        local_systems: Vec<String>,
        /// Bound on the entries of the integer shifts tried by the search.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: u32,
        #[arg(long)]
        json: bool,
    },
    /// Dimensions of the Aomoto complex cohomology.
    Aomoto {
        arrangement: String,
        local_system: String,
        /// Line sent to infinity; defaults to `z = 0` if present, else line 0.
        #[arg(long)]
        base: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: u32,
        #[arg(long)]
        json: bool,
    },
    /// Built-in examples.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CorpusAction {
    List,
    /// Print an entry in the arrangement JSON format.
    Get { name: String },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<AdmissibilityError> for CliError {
    fn from(e: AdmissibilityError) -> Self {
        match e {
            AdmissibilityError::Invariant(msg) => CliError::Internal(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSummary {
    pub point: ProjPoint,
    pub incident: Vec<usize>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementSummary {
    pub num_lines: usize,
    pub lines: Vec<String>,
    pub points: Vec<PointSummary>,
    pub multiple_points: Vec<PointSummary>,
}

impl ArrangementSummary {
    pub fn new(arr: &Arrangement) -> Self {
        let summarize = |p: &crate::arrangement::IntersectionPoint| PointSummary {
            point: p.point.clone(),
            incident: p.incident.clone(),
            multiplicity: p.multiplicity(),
        };
        ArrangementSummary {
            num_lines: arr.num_lines(),
            lines: arr.lines().iter().map(|l| l.to_string()).collect(),
            points: arr.points().iter().map(summarize).collect(),
            multiple_points: arr
                .points()
                .iter()
                .filter(|p| p.multiplicity() >= 3)
                .map(summarize)
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemVerdict {
    pub source: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AomotoReport {
    pub base: usize,
    pub dims: AomotoResult,
    /// The twisted cohomology equals these numbers only for an admissible lift.
    pub admissible: bool,
    pub caveat: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub arrangement: ArrangementSummary,
    pub classification: CkClassification,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<SystemVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aomoto: Option<AomotoReport>,
}

fn read_source(spec: &str) -> Result<String, CliError> {
    std::fs::read_to_string(PathBuf::from(spec))
        .map_err(|e| CliError::Input(format!("cannot read `{spec}`: {e}")))
}

/// Loads an arrangement from a file, or from the corpus via `corpus:NAME`.
pub fn load_arrangement(spec: &str) -> Result<Arrangement, CliError> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        return corpus::arrangement(name).map_err(|e| CliError::Input(e.to_string()));
    }
    let text = read_source(spec)?;
    parse_arrangement(&text).map_err(|e| CliError::Input(format!("{spec}: {e}")))
}

/// Loads a local system from a file, or `corpus:ENTRY/SYSTEM`.
pub fn load_local_system(spec: &str) -> Result<LocalSystem, CliError> {
    if let Some(rest) = spec.strip_prefix("corpus:") {
        let (entry, system) = rest
            .split_once('/')
            .ok_or_else(|| CliError::Input(format!("expected corpus:ENTRY/SYSTEM, got `{spec}`")))?;
        let e = corpus::get(entry).map_err(|e| CliError::Input(e.to_string()))?;
        return e
            .system(system)
            .ok_or_else(|| CliError::Input(format!("corpus entry `{entry}` has no system `{system}`")));
    }
    let text = read_source(spec)?;
    parse_local_system(&text).map_err(|e| CliError::Input(format!("{spec}: {e}")))
}

fn check_system(arr: &Arrangement, ls: &LocalSystem, source: &str) -> Result<(), CliError> {
    if ls.len() != arr.num_lines() {
        return Err(CliError::Input(format!(
            "{source}: local system has {} classes, arrangement has {} lines",
            ls.len(),
            arr.num_lines()
        )));
    }
    Ok(())
}

pub fn analyze_report(arr: &Arrangement) -> Report {
    Report {
        arrangement: ArrangementSummary::new(arr),
        classification: classify(arr),
        verdicts: Vec::new(),
        aomoto: None,
    }
}

pub fn admissible_report(
    arr: &Arrangement,
    systems: &[(String, LocalSystem)],
    bound: u32,
) -> Result<Report, CliError> {
    let mut report = analyze_report(arr);
    for (source, ls) in systems {
        check_system(arr, ls, source)?;
        report.verdicts.push(SystemVerdict {
            source: source.clone(),
            verdict: decide(arr, ls, bound)?,
        });
    }
    Ok(report)
}

pub fn aomoto_report(
    arr: &Arrangement,
    source: &str,
    ls: &LocalSystem,
    base: Option<usize>,
    bound: u32,
) -> Result<Report, CliError> {
    check_system(arr, ls, source)?;
    let base = base.or_else(|| arr.infinity_index()).unwrap_or(0);
    arr.check_index(base)
        .map_err(|e| CliError::Input(format!("--base: {e}")))?;
    let mut report = admissible_report(arr, &[(source.to_string(), ls.clone())], bound)?;
    let verdict = &report.verdicts[0].verdict;
    let (alpha, admissible) = match verdict.certificate() {
        Some(c) => (c.alpha.clone(), true),
        None => (
            standard_lift(ls, base).map_err(|e| CliError::Input(e.to_string()))?,
            false,
        ),
    };
    let dims = aomoto_dims(arr, &alpha, base).map_err(|e| CliError::Input(e.to_string()))?;
    report.aomoto = Some(AomotoReport {
        base,
        dims,
        admissible,
        caveat: (!admissible).then(|| {
            "no admissible lift found: these numbers need not equal dim H^i(M, L)".to_string()
        }),
    });
    Ok(report)
}

fn render_classification(out: &mut String, c: &CkClassification) {
    let kind = match c.k {
        0 => " (nodal)",
        _ => "",
    };
    let _ = writeln!(out, "class: C_{}{}", c.k, kind);
    let covers: Vec<String> = c.minimal_covers.iter().map(|s| format!("{s:?}")).collect();
    let _ = writeln!(out, "minimal covers: {}", covers.join(" "));
    if c.k == 3 {
        let _ = writeln!(out, "concurrent minimal cover: {}", c.concurrent_flag);
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let a = &report.arrangement;
    let _ = writeln!(out, "lines: {}", a.num_lines);
    for (j, l) in a.lines.iter().enumerate() {
        let _ = writeln!(out, "  L{j}: {l}");
    }
    let _ = writeln!(out, "intersection points: {}", a.points.len());
    let _ = writeln!(out, "points of multiplicity >= 3: {}", a.multiple_points.len());
    for p in &a.multiple_points {
        let inc: Vec<String> = p.incident.iter().map(|j| format!("L{j}")).collect();
        let _ = writeln!(out, "  {} mult {} on {}", p.point, p.multiplicity, inc.join(", "));
    }
    render_classification(&mut out, &report.classification);

    for v in &report.verdicts {
        let _ = writeln!(out, "system {}:", v.source);
        match &v.verdict {
            Verdict::Admissible { certificate } => {
                let _ = writeln!(out, "  ADMISSIBLE via {} cover {:?}", certificate.method, certificate.cover_used);
                let res: Vec<String> = certificate.alpha.entries().iter().map(|z| z.to_string()).collect();
                let _ = writeln!(out, "  residues: [{}]", res.join(", "));
                for pr in &certificate.point_residues {
                    let _ = writeln!(out, "  a{} = {}", pr.point.point, pr.a_p);
                }
            }
            Verdict::Unknown { diagnostics } => {
                let _ = writeln!(out, "  UNKNOWN");
                for att in &diagnostics.attempts {
                    match att {
                        Attempt::ConcurrentFailed { cover, m1, m2, failures } => {
                            let qs: Vec<String> = failures
                                .iter()
                                .map(|f| format!("{} ({:?})", f.q, f.reason))
                                .collect();
                            let _ = writeln!(
                                out,
                                "  C3_PROP cover {cover:?} m1={m1} m2={m2}: condition fails at {}",
                                qs.join(", ")
                            );
                        }
                        Attempt::Skipped { method, reason } => {
                            let _ = writeln!(out, "  {method} skipped: {reason}");
                        }
                        Attempt::SearchExhausted { bound, tried } => {
                            let _ = writeln!(out, "  SEARCH bound {bound}: no certificate among {tried} shifts");
                        }
                    }
                }
            }
        }
    }

    if let Some(ao) = &report.aomoto {
        let d = &ao.dims;
        let _ = writeln!(out, "aomoto (base L{}): h0={} h1={} h2={}", ao.base, d.h0, d.h1, d.h2);
        let _ = writeln!(out, "  betti: b1={} b2={}", d.b1, d.b2);
        if let Some(c) = &ao.caveat {
            let _ = writeln!(out, "  caveat: {c}");
        }
    }
    out
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| CliError::Internal(e.to_string()))
}

fn emit(report: &Report, json: bool) -> Result<String, CliError> {
    if json {
        to_json(report)
    } else {
        Ok(render_text(report))
    }
}

/// Runs a parsed command and returns what should go to stdout.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Analyze { arrangement, json } => {
            let arr = load_arrangement(&arrangement)?;
            emit(&analyze_report(&arr), json)
        }
        Command::Classify { arrangement, json } => {
            let class = classify(&load_arrangement(&arrangement)?);
            if json {
                to_json(&class)
            } else {
                let mut out = String::new();
                render_classification(&mut out, &class);
                Ok(out)
            }
        }
        Command::Admissible {
            arrangement,
            local_systems,
            bound,
            json,
        } => {
            let arr = load_arrangement(&arrangement)?;
            let systems = local_systems
                .iter()
                .map(|s| Ok((s.clone(), load_local_system(s)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            emit(&admissible_report(&arr, &systems, bound)?, json)
        }
        Command::Aomoto {
            arrangement,
            local_system,
            base,
            bound,
            json,
        } => {
            let arr = load_arrangement(&arrangement)?;
            let ls = load_local_system(&local_system)?;
            emit(&aomoto_report(&arr, &local_system, &ls, base, bound)?, json)
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => Ok(corpus::list().join("\n") + "\n"),
            CorpusAction::Get { name } => {
                // also a valid arrangement file: the extra fields are ignored
                to_json(&corpus::get(&name).map_err(|e| CliError::Input(e.to_string()))?)
            }
        },
    }
}
