//! Library side of the `msverify` binary: input loading, the single-graph
//! commands, and the exit-code contract.

use std::fmt;
use std::io::Read;
use std::path::Path;

use thiserror::Error;

use crate::delta::{delta_sets, DeltaValue, SignPrediction};
use crate::error::{ParseError, SigmaError};
use crate::format::parse_graph_input;
use crate::graph::{Graph, VertexSet};
use crate::parity::{classify, Classification, PathBudget};
use crate::sigma::{sigma, sigma_naive, Count, MemoCache};
use crate::verify::{Config, Report, SweepError};

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    /// Every asserted property holds.
    Pass = 0,
    /// Violations found; witnesses are in the output.
    Violations = 1,
    /// Bad usage or unparsable input.
    Usage = 2,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex set {set:?} has vertices outside 0..{n}")]
    VertexOutOfRange { set: VertexSet, n: usize },
    #[error(transparent)]
    Sigma(#[from] SigmaError),
    #[error("engine and oracle disagree: sigma = {fast}, naive = {naive}")]
    OracleMismatch { fast: Count, naive: Count },
    #[error(transparent)]
    Sweep(#[from] SweepError),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::OracleMismatch { .. } => Exit::Violations,
            _ => Exit::Usage,
        }
    }
}

/// Resolves a graph argument: `-` reads stdin, an existing path is read as a
/// file, anything else is taken as a literal graph6 string. Files may hold
/// graph6 or the edge-list format.
pub fn load_graph(arg: &str) -> Result<Graph, CliError> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
        buf
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|source| CliError::Io {
            path: arg.into(),
            source,
        })?
    } else {
        arg.to_string()
    };
    Ok(parse_graph_input(&text)?)
}

/// σ(G); with `oracle`, also runs the naive count and fails on disagreement.
pub fn cmd_sigma(g: &Graph, oracle: bool) -> Result<Count, CliError> {
    let fast = sigma(g, &mut MemoCache::new());
    if oracle {
        let naive = sigma_naive(g)?;
        if naive != fast {
            return Err(CliError::OracleMismatch { fast, naive });
        }
    }
    Ok(fast)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    Disagree,
    /// Mixed or inconclusive parity: nothing predicted.
    NoClaim,
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Agreement::Agree => "AGREE",
            Agreement::Disagree => "DISAGREE",
            Agreement::NoClaim => "NOCLAIM",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaOutcome {
    pub delta: DeltaValue,
    pub class: Classification,
    pub prediction: SignPrediction,
    pub agreement: Agreement,
}

impl fmt::Display for DeltaOutcome {
    /// `+1, Odd, Positive, AGREE`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let class = match self.class {
            Ok(c) => c.to_string(),
            Err(_) => "Inconclusive".to_string(),
        };
        write!(
            f,
            "{}, {}, {}, {}",
            self.delta, class, self.prediction, self.agreement
        )
    }
}

impl DeltaOutcome {
    pub fn exit(&self) -> Exit {
        match self.agreement {
            Agreement::Disagree => Exit::Violations,
            _ => Exit::Pass,
        }
    }
}

/// Δ(G, A, B) together with the parity class and the sign it predicts.
pub fn cmd_delta(
    g: &Graph,
    a: VertexSet,
    b: VertexSet,
    budget: PathBudget,
) -> Result<DeltaOutcome, CliError> {
    for set in [a, b] {
        if !set.is_valid_for(g) {
            return Err(CliError::VertexOutOfRange { set, n: g.n() });
        }
    }
    let delta = delta_sets(g, a, b, &mut MemoCache::new());
    let class = classify(g, a, b, budget);
    let prediction = class.map_or(SignPrediction::NoClaim, SignPrediction::from_class);
    let agreement = match prediction.agrees(delta.sign()) {
        Some(true) => Agreement::Agree,
        Some(false) => Agreement::Disagree,
        None => Agreement::NoClaim,
    };
    Ok(DeltaOutcome {
        delta,
        class,
        prediction,
        agreement,
    })
}

/// Writes a rendered report to `config.out`, or stdout when unset, and maps
/// its verdict to an exit code.
pub fn emit_report<R: Report>(report: &R, config: &Config) -> Result<Exit, CliError> {
    let text = report.render(config.format);
    match &config.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => print!("{text}"),
    }
    Ok(if report.passed() {
        Exit::Pass
    } else {
        Exit::Violations
    })
}
