//! Job files, result documents, and the failure/exit-code model.
//!
//! A job is a single JSON document describing one arrangement and one
//! computation. The result document echoes the effective job (command
//! resolved, options merged from the command line) so that a result is
//! self-describing, and carries a provenance block with the tool version
//! and the seed that was in effect. Identical jobs with identical seeds
//! produce byte-identical output.

use std::fs;
use std::io;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use hyperpv::Rat;

/// A single computation request, as read from the `--input` file.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    /// Dimension of the ambient space the hyperplanes live in.
    pub ambient_dim: usize,
    /// Integer normal vectors, one per hyperplane.
    pub hyperplanes: Vec<Vec<i64>>,
    /// Rational exponents, one per hyperplane, as strings like `1/2` or `-3`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<String>>,
    /// Positive integer multiplicities, one per hyperplane.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicities: Option<Vec<i64>>,
    /// Optional command name; must agree with the subcommand when both are given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
    /// Tuning knobs; command-line flags override these.
    #[serde(default, skip_serializing_if = "JobOptions::is_empty")]
    pub options: JobOptions,
}

/// Optional knobs a job may carry. Command-line flags take precedence.
#[derive(Serialize, Deserialize, Clone, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct JobOptions {
    /// Series truncation length.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    /// Number of random exponent draws for sampled checks (default 10).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    /// Seed for all randomized steps (default 0).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Coordinate bound for the multiplicity witness search (default 3).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
}

impl JobOptions {
    pub fn is_empty(&self) -> bool {
        self.truncation.is_none()
            && self.samples.is_none()
            && self.seed.is_none()
            && self.bound.is_none()
    }
}

/// Envelope written on success: the effective job, the command's payload,
/// and provenance (tool version plus the seed that was in effect).
#[derive(Serialize)]
pub struct ResultDoc<'a> {
    pub job: &'a JobSpec,
    pub payload: Value,
    pub provenance: Provenance,
}

#[derive(Serialize)]
pub struct Provenance {
    pub version: &'static str,
    pub seed: u64,
}

/// A failed run: carries the exit code and the structured error document.
#[derive(Debug)]
pub struct Failure {
    pub exit: u8,
    pub kind: &'static str,
    pub message: String,
    pub edge_basis: Option<String>,
}

impl Failure {
    pub fn validation(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            exit: 2,
            kind,
            message: message.into(),
            edge_basis: None,
        }
    }

    pub fn computation(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            exit: 3,
            kind,
            message: message.into(),
            edge_basis: None,
        }
    }

    /// Map a library error onto the exit-code contract: errors about the
    /// shape or values of the job data are validation failures (exit 2),
    /// everything discovered mid-computation is a computation failure
    /// (exit 3). A logarithmic pole carries the offending edge along.
    pub fn from_core(e: hyperpv::Error) -> Self {
        use hyperpv::Error as E;
        let kind = match &e {
            E::ZeroNormal { .. } => "zero-normal",
            E::DuplicateHyperplane { .. } => "duplicate-hyperplane",
            E::DimensionMismatch(_) => "dimension-mismatch",
            E::NotNested(_) => "not-nested",
            E::NonDivisible(_) => "non-divisible",
            E::NotAChain(_) => "not-a-chain",
            E::NotIntersectionClosed(_) => "not-intersection-closed",
            E::LogarithmicPole { .. } => "logarithmic-pole",
            E::DegreeCondition { .. } => "degree-condition",
            E::NegativeExponentDetected { .. } => "negative-exponent",
            E::InvalidExponent { .. } => "invalid-exponent",
            E::InvalidMultiplicity { .. } => "invalid-multiplicity",
            E::NotEssential => "not-essential",
            E::Decomposable => "decomposable",
            E::WitnessSearchFailed(_) => "witness-search-failed",
            E::IntegerDirection(_) => "integer-direction",
            E::Unsupported(_) => "unsupported",
        };
        let exit = match &e {
            E::ZeroNormal { .. }
            | E::DuplicateHyperplane { .. }
            | E::DimensionMismatch(_)
            | E::DegreeCondition { .. }
            | E::InvalidExponent { .. }
            | E::InvalidMultiplicity { .. } => 2,
            _ => 3,
        };
        let edge_basis = match &e {
            hyperpv::Error::LogarithmicPole { edge_basis } => Some(edge_basis.clone()),
            _ => None,
        };
        Failure {
            exit,
            kind,
            message: e.to_string(),
            edge_basis,
        }
    }

    pub fn doc(&self) -> Value {
        let mut inner = serde_json::Map::new();
        inner.insert("kind".into(), json!(self.kind));
        inner.insert("message".into(), json!(self.message));
        if let Some(basis) = &self.edge_basis {
            inner.insert("edge_basis".into(), json!(basis));
        }
        json!({ "error": Value::Object(inner) })
    }
}

/// Parse an exact rational from a string: an optional sign (ASCII `-` or
/// the minus sign `−`), an integer, and an optional `/` followed by a
/// nonzero integer. The result is fully reduced.
pub fn parse_rational(s: &str) -> Result<Rat, Failure> {
    let cleaned: String = s.trim().replace('\u{2212}', "-");
    let malformed = || Failure::validation("parse-error", format!("malformed rational `{s}`"));
    let (num_s, den_s) = match cleaned.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (cleaned.as_str(), None),
    };
    let num: BigInt = num_s.parse().map_err(|_| malformed())?;
    let den: BigInt = match den_s {
        Some(d) => d.parse().map_err(|_| malformed())?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(Failure::validation(
            "parse-error",
            format!("zero denominator in rational `{s}`"),
        ));
    }
    Ok(Rat::new(num, den))
}

/// Write `content` to `path` atomically: the data lands under a temporary
/// name in the same directory and is moved into place with a rename, so a
/// reader never observes a partial document.
pub fn write_atomic(path: &Path, content: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let stem = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".into());
    let tmp = dir.join(format!(".{stem}.tmp-{}", std::process::id()));
    fs::write(&tmp, content)?;
    match fs::rename(&tmp, path) {
        Ok(()) => Ok(()),
        Err(e) => {
            let _ = fs::remove_file(&tmp);
            Err(e)
        }
    }
}
