//! Command-line front end.
//!
//! Text output mirrors the nested-list notation `{{2, 2, 2, 2}, {2, 4, 4, 4, 4, 2}}`
//! followed by a verdict line; `--format json` emits a [`Report`].
//!
//! Exit status: 0 success, 1 I/O or other failure, 2 parse error, 3 zero
//! state, 4 parametric state under a non-generic rank policy.

use std::fmt;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::Parser;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::classify::verdict;
use crate::error::Error;
use crate::flatten::flatten;
use crate::profile::{
    format_level, format_nested, multirank_profile, profile_level, MultirankProfile, ProfileEntry,
    DEFAULT_SEED,
};
use crate::rank::RankPolicy;
use crate::state::{parse_state, StateTensor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelSelector {
    All,
    Single(usize),
}

impl FromStr for LevelSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(LevelSelector::All),
            _ => s
                .parse::<usize>()
                .map(LevelSelector::Single)
                .map_err(|_| format!("expected `all` or a level number, got `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" | "structured" | "json-like-structured" => Ok(OutputFormat::Json),
            _ => Err(format!("unknown format `{s}` (text|json)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
        })
    }
}

/// Compute the l-multirank profile of a pure multipartite state.
#[derive(Debug, Clone, Parser)]
#[command(name = "multirank", version)]
pub struct RunConfig {
    /// State file, or `-` for standard input.
    pub input: PathBuf,

    /// `all`, or a single level ℓ.
    #[arg(long, default_value = "all")]
    pub levels: LevelSelector,

    /// `exact`, `fast`, `mod:<p>`, or `generic:<trials>,<p>`.
    #[arg(long = "rank", default_value = "fast")]
    pub policy: RankPolicy,

    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// `text` or `json`.
    #[arg(long, default_value = "text")]
    pub format: OutputFormat,

    /// Report each complementary pair at ℓ = n/2 once.
    #[arg(long)]
    pub dedupe: bool,

    /// Print every flattening as dense rows of exact entries.
    #[arg(long)]
    pub dump_matrices: bool,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        RunConfig {
            input: input.into(),
            levels: LevelSelector::All,
            policy: RankPolicy::default(),
            seed: DEFAULT_SEED,
            format: OutputFormat::Text,
            dedupe: false,
            dump_matrices: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub dims: Vec<usize>,
    pub policy: String,
    pub seed: u64,
    pub generic: bool,
    pub deduplicated: bool,
    pub levels: Vec<ReportLevel>,
    pub verdict: Option<ReportVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<ReportMatrix>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportLevel {
    pub ell: usize,
    pub ranks: Vec<usize>,
    pub entries: Vec<ReportEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub label: String,
    /// 1-based parties on the row side.
    pub part: Vec<usize>,
    pub complement: Vec<usize>,
    pub rank: usize,
    pub mode: String,
    pub certainty: String,
    /// Set when `--dedupe` merged this entry with its complement.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paired_with: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportVerdict {
    pub gme: bool,
    pub fully_product: bool,
    pub product_cuts: Vec<String>,
    /// `exact` or `generic`.
    pub qualifier: String,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportMatrix {
    pub label: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Syntax { .. }
        | Error::InvalidDims(_)
        | Error::IndexOutOfRange { .. }
        | Error::IndexArity { .. }
        | Error::IncompatibleMerge { .. }
        | Error::InvalidParameter(_) => 2,
        Error::ZeroState => 3,
        Error::ParametricUnderExact => 4,
        _ => 1,
    }
}

fn read_input(config: &RunConfig) -> io::Result<String> {
    if config.input.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(&config.input)
    }
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match read_input(config) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", config.input.display());
            return 1;
        }
    };
    match run_text(config, &text) {
        Ok((report, warnings)) => {
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let rendered = match config.format {
                OutputFormat::Text => render_text(&report),
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
                }
            };
            match out.write_all(rendered.as_bytes()) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Builds the report for a state document without touching the filesystem.
pub fn run_text(config: &RunConfig, text: &str) -> Result<(Report, Vec<String>), Error> {
    let state: StateTensor<BigInt> = parse_state(text)?;
    let mut warnings = Vec::new();
    if config.policy.is_generic() && !state.is_parametric() {
        warnings.push("generic rank policy used on a state without parameters".to_string());
    }
    if state.is_parametric() && !config.policy.is_generic() {
        return Err(Error::ParametricUnderExact);
    }
    let report = match config.levels {
        LevelSelector::All => {
            let profile = multirank_profile(&state, &config.policy, config.seed)?;
            build_report(config, &state, &profile)?
        }
        LevelSelector::Single(ell) => {
            let entries = profile_level(&state, ell, &config.policy, config.seed)?;
            let n = state.dims().parties();
            let level = report_level(ell, entries.iter(), config.dedupe && 2 * ell == n);
            Report {
                dims: state.dims().as_slice().to_vec(),
                policy: config.policy.to_string(),
                seed: config.seed,
                generic: entries.iter().any(|e| e.rank.is_generic()),
                deduplicated: config.dedupe,
                levels: vec![level],
                verdict: None,
                matrices: dump(config, &state, entries.iter())?,
            }
        }
    };
    Ok((report, warnings))
}

fn report_level<'a>(
    ell: usize,
    entries: impl Iterator<Item = &'a ProfileEntry>,
    deduped: bool,
) -> ReportLevel {
    let entries: Vec<ReportEntry> = entries
        .filter(|e| !deduped || e.bipartition.contains(0))
        .map(|e| ReportEntry {
            label: e.bipartition.label(),
            part: e.bipartition.part_labels(),
            complement: e.bipartition.complement_labels(),
            rank: e.rank.value,
            mode: e.rank.mode.to_string(),
            certainty: e.rank.certainty.to_string(),
            paired_with: deduped.then(|| e.bipartition.complement_labels()),
        })
        .collect();
    ReportLevel {
        ell,
        ranks: entries.iter().map(|e| e.rank).collect(),
        entries,
    }
}

fn build_report(
    config: &RunConfig,
    state: &StateTensor<BigInt>,
    profile: &MultirankProfile,
) -> Result<Report, Error> {
    let n = profile.dims().parties();
    let levels = profile
        .levels()
        .iter()
        .enumerate()
        .map(|(k, l)| report_level(k + 1, l.iter(), config.dedupe && 2 * (k + 1) == n))
        .collect();
    let v = verdict(profile);
    Ok(Report {
        dims: profile.dims().as_slice().to_vec(),
        policy: config.policy.to_string(),
        seed: config.seed,
        generic: v.generic,
        deduplicated: config.dedupe,
        levels,
        verdict: Some(ReportVerdict {
            gme: v.gme,
            fully_product: v.fully_product,
            product_cuts: v.product_cuts.iter().map(|b| b.label()).collect(),
            qualifier: if v.generic { "generic" } else { "exact" }.to_string(),
            summary: v.summary(),
        }),
        matrices: dump(config, state, profile.entries())?,
    })
}

fn dump<'a>(
    config: &RunConfig,
    state: &StateTensor<BigInt>,
    entries: impl Iterator<Item = &'a ProfileEntry>,
) -> Result<Option<Vec<ReportMatrix>>, Error> {
    if !config.dump_matrices {
        return Ok(None);
    }
    entries
        .map(|e| {
            let m = flatten(state, &e.bipartition)?;
            Ok(ReportMatrix {
                label: e.bipartition.label(),
                rows: m.rows(),
                cols: m.cols(),
                entries: m.to_dense_strings(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()
        .map(Some)
}

pub fn render_text(report: &Report) -> String {
    let ranks: Vec<Vec<usize>> = report.levels.iter().map(|l| l.ranks.clone()).collect();
    let mut s = match (report.verdict.as_ref(), ranks.as_slice()) {
        (None, [single]) => format_level(single),
        _ => format_nested(&ranks),
    };
    s.push('\n');
    for level in &report.levels {
        if level.entries.iter().any(|e| e.paired_with.is_some()) {
            s.push_str(&format!(
                "# level {}: each entry stands for I and its complement\n",
                level.ell
            ));
        }
    }
    if let Some(v) = &report.verdict {
        s.push_str(&format!("verdict: {}\n", v.summary));
    }
    for m in report.matrices.iter().flatten() {
        s.push_str(&format!("M {} ({}x{}):\n", m.label, m.rows, m.cols));
        for row in &m.entries {
            s.push_str(&format!("  [{}]\n", row.join(", ")));
        }
    }
    s
}

/// Parses a text report's profile line back into ranks.
pub fn parse_nested(line: &str) -> Option<Vec<Vec<usize>>> {
    let inner = line.trim().strip_prefix('{')?.strip_suffix('}')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    let mut levels = Vec::new();
    let mut rest = inner.trim();
    while !rest.is_empty() {
        let body_end = rest.find('}')?;
        let body = rest.strip_prefix('{')?.get(..body_end - 1)?;
        let level = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(|t| t.trim().parse().ok())
                .collect::<Option<Vec<usize>>>()?
        };
        levels.push(level);
        rest = rest[body_end + 1..].trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Some(levels)
}
