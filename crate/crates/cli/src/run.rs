//! Command-line surface: flag parsing, job validation, command dispatch,
//! and payload serialization.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use hyperpv::classes::affine_complement_points_mod_p;
use hyperpv::ratmat::rref;
use hyperpv::{
    affine_complement_class, delta_chain_count, edge_lattice, euler_characteristic,
    exponent_draws, formal_is_zero, formal_pv, generic_closed_form, genericity_witness_search,
    is_dense_edge, is_essential, is_indecomposable, is_pole, nd_pole_check, parse_arrangement,
    projective_complement_class, pv_integral, pv_lift_series, residue_exponents, resolution_class,
    series_constant_term, specialize, try_reduce_to_polynomial, Arrangement, EdgeLattice, Error,
    ExponentVector, LPoly, MultiplicityVector, PuiseuxRational, Rat, ZPoly,
};

use crate::job::{
    parse_rational, write_atomic, Failure, JobSpec, Provenance, ResultDoc,
};

/// Exact principal-value integrals for central hyperplane arrangements.
///
/// Every command reads a single JSON job file (`--input`), runs one exact
/// computation, and writes a single-line JSON result document to standard
/// output or, atomically, to `--output`. Identical job files and seeds
/// produce byte-identical results.
#[derive(Parser)]
#[command(name = "hyperpv", version, about, long_about = None)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CommandKind,

    /// Path to the JSON job file.
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Write the result document to this file (atomically) instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    /// Series truncation length; overrides the job's `options.truncation`.
    #[arg(long, global = true, value_name = "LEN")]
    pub truncation: Option<usize>,

    /// Number of random draws for sampled checks; overrides `options.samples`.
    #[arg(long, global = true, value_name = "COUNT")]
    pub samples: Option<usize>,

    /// Seed for every randomized step; overrides `options.seed`.
    #[arg(long, global = true, value_name = "SEED")]
    pub seed: Option<u64>,

    /// Coordinate bound for the witness search; overrides `options.bound`.
    #[arg(long, global = true, value_name = "BOUND")]
    pub bound: Option<i64>,
}

#[derive(Subcommand, Clone, Copy, Debug)]
pub enum CommandKind {
    /// List the edges of the arrangement with their combinatorial data.
    Edges,
    /// Complement and log-resolution classes as polynomials in L.
    Classes,
    /// The principal-value integral for the given exponent vector.
    Pv,
    /// Constant term of the series lift, checked against the chain count.
    Delta,
    /// Closed form of the integral, valid for generic arrangements.
    #[command(name = "generic-closed-form")]
    GenericClosedForm,
    /// The integral with formal exponents, as an exact symbolic fraction.
    Formal,
    /// Pole status of each candidate edge of the symbolic integral.
    Poles,
    /// Pole test and residue for the given multiplicity vector.
    #[command(name = "ndpole")]
    NdPole,
    /// Search for multiplicity vectors with generic residue exponents.
    #[command(name = "witness-search")]
    WitnessSearch,
    /// Run the built-in consistency checks on the arrangement.
    Check,
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::Edges => "edges",
            CommandKind::Classes => "classes",
            CommandKind::Pv => "pv",
            CommandKind::Delta => "delta",
            CommandKind::GenericClosedForm => "generic-closed-form",
            CommandKind::Formal => "formal",
            CommandKind::Poles => "poles",
            CommandKind::NdPole => "ndpole",
            CommandKind::WitnessSearch => "witness-search",
            CommandKind::Check => "check",
        }
    }
}

/// Options after merging command-line flags over the job file, with
/// defaults applied where a command needs a concrete value.
struct Effective {
    truncation: Option<usize>,
    samples: usize,
    seed: u64,
    bound: i64,
}

pub fn execute(cli: Cli) -> ExitCode {
    match run(&cli) {
        Ok((text, all_passed)) => match emit(&cli, &text) {
            Ok(()) => {
                if all_passed {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(3)
                }
            }
            Err(f) => fail(&f),
        },
        Err(f) => fail(&f),
    }
}

fn fail(f: &Failure) -> ExitCode {
    let doc = serde_json::to_string(&f.doc()).expect("an error document always serializes");
    println!("{doc}");
    ExitCode::from(f.exit)
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => write_atomic(path, &format!("{text}\n")).map_err(|e| {
            Failure::computation("io-error", format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Load, validate, and run the job. Returns the serialized result document
/// and whether every applicable consistency check passed (always true for
/// commands other than `check`).
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let input = cli
        .input
        .as_ref()
        .ok_or_else(|| Failure::validation("missing-input", "no --input job file was given"))?;
    let raw = fs::read_to_string(input).map_err(|e| {
        Failure::validation("io-error", format!("cannot read {}: {e}", input.display()))
    })?;
    let mut job: JobSpec = serde_json::from_str(&raw)
        .map_err(|e| Failure::validation("parse-error", format!("invalid job file: {e}")))?;

    let name = cli.command.name();
    if let Some(cmd) = &job.command {
        if cmd != name {
            return Err(Failure::validation(
                "command-mismatch",
                format!("job file requests command `{cmd}` but the `{name}` subcommand was invoked"),
            ));
        }
    }
    job.command = Some(name.to_string());

    if cli.truncation.is_some() {
        job.options.truncation = cli.truncation;
    }
    if cli.samples.is_some() {
        job.options.samples = cli.samples;
    }
    if cli.seed.is_some() {
        job.options.seed = cli.seed;
    }
    if cli.bound.is_some() {
        job.options.bound = cli.bound;
    }
    let eff = Effective {
        truncation: job.options.truncation,
        samples: job.options.samples.unwrap_or(10),
        seed: job.options.seed.unwrap_or(0),
        bound: job.options.bound.unwrap_or(3),
    };

    if job.hyperplanes.is_empty() {
        return Err(Failure::validation(
            "empty-arrangement",
            "at least one hyperplane is required",
        ));
    }
    let arr = parse_arrangement(job.ambient_dim, &job.hyperplanes).map_err(Failure::from_core)?;
    let lat = edge_lattice(&arr);

    let (payload, all_passed) = match cli.command {
        CommandKind::Edges => (edges_payload(&lat), true),
        CommandKind::Classes => (classes_payload(&lat), true),
        CommandKind::Pv => (pv_payload(&lat, &job, &eff)?, true),
        CommandKind::Delta => (delta_payload(&lat, &job, &eff)?, true),
        CommandKind::GenericClosedForm => (closed_form_payload(&lat, &job)?, true),
        CommandKind::Formal => (formal_payload(&lat)?, true),
        CommandKind::Poles => (poles_payload(&lat)?, true),
        CommandKind::NdPole => (ndpole_payload(&lat, &job)?, true),
        CommandKind::WitnessSearch => (witness_payload(&lat, &eff)?, true),
        CommandKind::Check => check_payload(&lat, &eff)?,
    };

    let doc = ResultDoc {
        job: &job,
        payload,
        provenance: Provenance {
            version: env!("CARGO_PKG_VERSION"),
            seed: eff.seed,
        },
    };
    let text = serde_json::to_string(&doc)
        .map_err(|e| Failure::computation("serialize-error", format!("cannot serialize result: {e}")))?;
    Ok((text, all_passed))
}

// ---------------------------------------------------------------------------
// Shared serialization helpers
// ---------------------------------------------------------------------------

/// Ascending `(exponent, coefficient)` pairs of a polynomial in `t`,
/// zero coefficients omitted. Exponents are in units of `1/q`.
fn zpoly_pairs(p: &ZPoly) -> Value {
    let pairs: Vec<Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| json!([k, c.to_string()]))
        .collect();
    Value::Array(pairs)
}

/// A rational function in `t = L^(1/q)`: root order, numerator and
/// denominator coefficient pairs, and a rendered form.
fn puiseux_doc(x: &PuiseuxRational) -> Value {
    let (num, den) = x.as_num_den();
    json!({
        "q": x.q(),
        "is_zero": x.is_zero(),
        "numerator": zpoly_pairs(&num),
        "denominator": zpoly_pairs(&den),
        "display": x.to_string(),
    })
}

/// A polynomial in `L`: ascending coefficient pairs and a rendered form.
fn lpoly_doc(p: &LPoly) -> Value {
    let pairs: Vec<Value> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| json!([k, c.to_string()]))
        .collect();
    json!({ "coefficients": pairs, "display": p.to_string(), "variable": "L" })
}

fn rat_rows(rows: &[Vec<Rat>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| Value::Array(row.iter().map(|x| json!(x.to_string())).collect()))
            .collect(),
    )
}

fn exponents_of(job: &JobSpec, d: usize) -> Result<ExponentVector, Failure> {
    let strings = job.exponents.as_ref().ok_or_else(|| {
        Failure::validation(
            "missing-exponents",
            "this command needs an `exponents` list in the job file",
        )
    })?;
    if strings.len() != d {
        return Err(Failure::validation(
            "dimension-mismatch",
            format!(
                "expected {d} exponents (one per hyperplane), got {}",
                strings.len()
            ),
        ));
    }
    let values = strings
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExponentVector::new(values))
}

fn multiplicities_of(job: &JobSpec, d: usize) -> Result<MultiplicityVector, Failure> {
    let raw = job.multiplicities.as_ref().ok_or_else(|| {
        Failure::validation(
            "missing-multiplicities",
            "this command needs a `multiplicities` list in the job file",
        )
    })?;
    if raw.len() != d {
        return Err(Failure::validation(
            "dimension-mismatch",
            format!(
                "expected {d} multiplicities (one per hyperplane), got {}",
                raw.len()
            ),
        ));
    }
    MultiplicityVector::new(raw.clone()).map_err(Failure::from_core)
}

// ---------------------------------------------------------------------------
// Command payloads
// ---------------------------------------------------------------------------

fn edges_payload(lat: &EdgeLattice) -> Value {
    let arr = lat.arrangement();
    let ambient = arr.ambient_dim();
    let chain_support: BTreeSet<usize> = lat.s_indices().into_iter().collect();
    let edges: Vec<Value> = lat
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            json!({
                "index": i,
                "codim": e.codim,
                "dim": ambient - e.codim,
                "containing": e.containing,
                "basis": rat_rows(&e.basis),
                "equations": rat_rows(&e.eq),
                "dense": is_dense_edge(lat, i),
                "common_intersection": !chain_support.contains(&i),
            })
        })
        .collect();
    json!({
        "ambient_dim": ambient,
        "hyperplane_count": arr.count(),
        "projective_dim": arr.projective_dim(),
        "essential": is_essential(arr),
        "indecomposable": is_indecomposable(arr),
        "edge_count": edges.len(),
        "edges": edges,
    })
}

fn classes_payload(lat: &EdgeLattice) -> Value {
    let arr = lat.arrangement();
    let affine = affine_complement_class(arr);
    let projective = projective_complement_class(arr);
    let resolution = resolution_class(arr);
    let mut doc = json!({
        "affine_complement": lpoly_doc(&affine),
        "projective_complement": lpoly_doc(&projective),
        "resolution": lpoly_doc(&resolution),
        "euler_characteristic_projective_complement":
            euler_characteristic(&projective).to_string(),
    });
    // Cross-check the affine class by honest point counting over a small
    // prime field, kept to low dimension where the count is cheap.
    if arr.ambient_dim() <= 3 {
        let p = 101u64;
        let counted = affine_complement_points_mod_p(arr, p);
        let predicted = affine.eval_at(&BigInt::from(p));
        doc["point_count_mod_p"] = json!({
            "prime": p,
            "counted": counted.to_string(),
            "predicted": predicted.to_string(),
            "agrees": predicted == BigInt::from(counted),
        });
    }
    doc
}

fn pv_payload(lat: &EdgeLattice, job: &JobSpec, eff: &Effective) -> Result<Value, Failure> {
    let arr = lat.arrangement();
    let a = exponents_of(job, arr.count())?;
    let pv = pv_integral(lat, &a).map_err(Failure::from_core)?;
    let n = arr.projective_dim() as i64;
    let normalized = pv.mul_tpow(pv.q() * n);
    let mut doc = json!({
        "q": pv.q(),
        "exponents": a.exponents().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "is_zero": pv.is_zero(),
        "integral": puiseux_doc(&pv),
        "normalized": puiseux_doc(&normalized),
        "normalization": "L^n * integral, n the projective dimension",
    });
    if let Some(len) = eff.truncation {
        let series = pv_lift_series(lat, &a, len).map_err(Failure::from_core)?;
        doc["lift_series"] =
            Value::Array(series.iter().map(|c| json!(c.to_string())).collect());
    }
    Ok(doc)
}

fn delta_payload(lat: &EdgeLattice, job: &JobSpec, eff: &Effective) -> Result<Value, Failure> {
    let arr = lat.arrangement();
    let a = exponents_of(job, arr.count())?;
    let constant = series_constant_term(lat, &a, eff.truncation).map_err(Failure::from_core)?;
    let chains = delta_chain_count(lat, &a).map_err(Failure::from_core)?;
    Ok(json!({
        "constant_term": constant.to_string(),
        "chain_count": chains.to_string(),
        "agrees": constant == chains,
        "truncation": eff.truncation,
    }))
}

fn closed_form_payload(lat: &EdgeLattice, job: &JobSpec) -> Result<Value, Failure> {
    let arr = lat.arrangement();
    let a = exponents_of(job, arr.count())?;
    let n = arr.projective_dim();
    let value = generic_closed_form(n, &a).map_err(Failure::from_core)?;
    Ok(json!({
        "q": value.q(),
        "projective_dim": n,
        "hyperplane_count": arr.count(),
        "is_zero": value.is_zero(),
        "value": puiseux_doc(&value),
    }))
}

fn formal_payload(lat: &EdgeLattice) -> Result<Value, Failure> {
    let f = formal_pv(lat).map_err(Failure::from_core)?;
    let terms: Vec<Value> = f
        .numerator()
        .terms()
        .iter()
        .map(|(e, c)| json!({ "exponents": e, "coefficient": c.to_string() }))
        .collect();
    let denominators: Vec<Value> = f
        .denominators()
        .iter()
        .map(|m| json!(m.to_string()))
        .collect();
    let polynomial_form = try_reduce_to_polynomial(&f).map(|p| lpoly_doc(&p));
    Ok(json!({
        "is_zero": formal_is_zero(&f),
        "projective_dim": f.projective_dim(),
        "hyperplane_count": f.hyperplane_count(),
        "edge_labels": f.edge_labels(),
        "denominators": denominators,
        "numerator_terms": terms,
        "polynomial_form": polynomial_form,
    }))
}

fn poles_payload(lat: &EdgeLattice) -> Result<Value, Failure> {
    let f = formal_pv(lat).map_err(Failure::from_core)?;
    let support = lat.s_indices();
    let labels = f.edge_labels();
    let denominators = f.denominators();
    let mut rows = Vec::with_capacity(support.len());
    for (k, &w) in support.iter().enumerate() {
        let status = match is_pole(&f, lat.edge(w)) {
            Ok(true) => "pole",
            Ok(false) => "no-pole",
            Err(Error::IntegerDirection(_)) => "integer-direction",
            Err(e) => return Err(Failure::from_core(e)),
        };
        rows.push(json!({
            "edge_index": w,
            "label": labels
                .get(k)
                .cloned()
                .unwrap_or_else(|| lat.edge(w).basis_string()),
            "denominator": denominators.get(k).map(|m| m.to_string()),
            "status": status,
        }));
    }
    Ok(json!({ "is_zero": formal_is_zero(&f), "poles": rows }))
}

fn ndpole_payload(lat: &EdgeLattice, job: &JobSpec) -> Result<Value, Failure> {
    let arr = lat.arrangement();
    let m = multiplicities_of(job, arr.count())?;
    let check = nd_pole_check(lat, &m).map_err(Failure::from_core)?;
    let exps = residue_exponents(lat, &m).map_err(Failure::from_core)?;
    Ok(json!({
        "multiplicities": m.multiplicities(),
        "generic": check.generic,
        "alphas": exps.alphas().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "origin_alpha": exps.origin().to_string(),
        "is_pole": check.is_pole,
        "residue": check.residue.as_ref().map(puiseux_doc),
    }))
}

fn witness_payload(lat: &EdgeLattice, eff: &Effective) -> Result<Value, Failure> {
    let report = genericity_witness_search(lat, eff.bound, eff.seed).map_err(Failure::from_core)?;
    Ok(json!({
        "bound": eff.bound,
        "witnesses": report
            .witnesses
            .iter()
            .map(|m| m.multiplicities().to_vec())
            .collect::<Vec<_>>(),
        "examined": report.examined,
        "non_generic": report.non_generic,
        "exhaustive": report.exhaustive,
    }))
}

/// The `check` command: run every built-in consistency check that applies
/// to the arrangement, sampling admissible exponents deterministically.
/// Returns the payload and whether all applicable checks passed.
fn check_payload(lat: &EdgeLattice, eff: &Effective) -> Result<(Value, bool), Failure> {
    let arr = lat.arrangement();
    let n = arr.projective_dim() as i64;
    let samples = eff.samples;
    let mut checks: Vec<Value> = Vec::new();
    let mut all_ok = true;

    let f = formal_pv(lat).map_err(Failure::from_core)?;

    // Vanishing: a decomposable or non-essential arrangement must have an
    // identically zero integral, symbolically and for every exponent draw.
    if is_essential(arr) && is_indecomposable(arr) {
        checks.push(json!({ "name": "vanishing", "applicable": false, "passed": null }));
    } else {
        let mut ok = formal_is_zero(&f);
        let draws = exponent_draws(lat, samples, eff.seed, false).map_err(Failure::from_core)?;
        for a in &draws {
            ok = ok && pv_integral(lat, a).map_err(Failure::from_core)?.is_zero();
        }
        all_ok &= ok;
        checks.push(json!({
            "name": "vanishing", "applicable": true, "passed": ok, "samples": samples,
        }));
    }

    // Generic equivalence: on a generic arrangement the integral agrees
    // with the closed form, for draws avoiding integer exponent values.
    match is_generic_arrangement(arr) {
        Some(true) => {
            let draws = exponent_draws(lat, samples, eff.seed.wrapping_add(1), true)
                .map_err(Failure::from_core)?;
            let mut ok = true;
            for a in &draws {
                let pv = pv_integral(lat, a).map_err(Failure::from_core)?;
                let closed = generic_closed_form(arr.projective_dim(), a)
                    .map_err(Failure::from_core)?;
                ok = ok && pv.eq_value(&closed);
            }
            all_ok &= ok;
            checks.push(json!({
                "name": "generic-equivalence", "applicable": true, "passed": ok,
                "samples": samples,
            }));
        }
        Some(false) => {
            checks.push(json!({
                "name": "generic-equivalence", "applicable": false, "passed": null,
            }));
        }
        None => {
            checks.push(json!({
                "name": "generic-equivalence", "applicable": false, "passed": null,
                "detail": "too many normal subsets to decide genericity exhaustively",
            }));
        }
    }

    // Constant term: the series lift's constant term equals the signed
    // count of exponent-compatible chains.
    {
        let draws = exponent_draws(lat, samples, eff.seed.wrapping_add(2), false)
            .map_err(Failure::from_core)?;
        let mut ok = true;
        for a in &draws {
            let constant =
                series_constant_term(lat, a, eff.truncation).map_err(Failure::from_core)?;
            let chains = delta_chain_count(lat, a).map_err(Failure::from_core)?;
            ok = ok && constant == chains;
        }
        all_ok &= ok;
        checks.push(json!({
            "name": "constant-term", "applicable": true, "passed": ok, "samples": samples,
        }));
    }

    // Specialization: substituting a drawn exponent vector into the formal
    // fraction reproduces the integral (up to the fixed normalization).
    {
        let draws = exponent_draws(lat, samples, eff.seed.wrapping_add(3), false)
            .map_err(Failure::from_core)?;
        let mut ok = true;
        for a in &draws {
            let pv = pv_integral(lat, a).map_err(Failure::from_core)?;
            let specialized = specialize(&f, a).map_err(Failure::from_core)?;
            ok = ok && specialized.eq_value(&pv.mul_tpow(pv.q() * n));
        }
        all_ok &= ok;
        checks.push(json!({
            "name": "specialization", "applicable": true, "passed": ok, "samples": samples,
        }));
    }

    Ok((
        json!({ "samples": samples, "checks": checks, "all_passed": all_ok }),
        all_ok,
    ))
}

/// Whether every subset of at most `ambient_dim` normals is linearly
/// independent. Returns `None` when the arrangement is too large to decide
/// by exhaustive subset enumeration.
fn is_generic_arrangement(arr: &Arrangement) -> Option<bool> {
    let ambient = arr.ambient_dim();
    let d = arr.count();
    let m = ambient.min(d);
    if m == 0 {
        return Some(true);
    }
    let mut subset_count: u128 = 1;
    for k in 0..m {
        subset_count = subset_count.saturating_mul((d - k) as u128) / (k as u128 + 1);
        if subset_count > 200_000 {
            return None;
        }
    }
    let rows: Vec<Vec<Rat>> = arr
        .normals()
        .iter()
        .map(|row| row.iter().map(|x| Rat::from(x.clone())).collect())
        .collect();
    Some(all_size_m_subsets_independent(&rows, m))
}

/// Checking subsets of size exactly `m = min(ambient_dim, count)` suffices:
/// a deficient smaller subset stays deficient inside any superset of size `m`.
fn all_size_m_subsets_independent(rows: &[Vec<Rat>], m: usize) -> bool {
    fn walk(rows: &[Vec<Rat>], chosen: &mut Vec<usize>, start: usize, m: usize) -> bool {
        if chosen.len() == m {
            let selected: Vec<Vec<Rat>> = chosen.iter().map(|&i| rows[i].clone()).collect();
            return rref(&selected).len() == m;
        }
        let need = m - chosen.len();
        for i in start..=(rows.len() - need) {
            chosen.push(i);
            let ok = walk(rows, chosen, i + 1, m);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    walk(rows, &mut Vec::new(), 0, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(dim: usize, rows: &[Vec<i64>]) -> Arrangement {
        parse_arrangement(dim, rows).unwrap()
    }

    #[test]
    fn genericity_detects_dependent_triples() {
        let generic = arr(3, &[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 1],
        ]);
        assert_eq!(is_generic_arrangement(&generic), Some(true));
        let degenerate = arr(3, &[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
        ]);
        assert_eq!(is_generic_arrangement(&degenerate), Some(false));
        let pencil = arr(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(is_generic_arrangement(&pencil), Some(true));
    }

    #[test]
    fn command_names_are_stable() {
        let names: Vec<&str> = [
            CommandKind::Edges,
            CommandKind::Classes,
            CommandKind::Pv,
            CommandKind::Delta,
            CommandKind::GenericClosedForm,
            CommandKind::Formal,
            CommandKind::Poles,
            CommandKind::NdPole,
            CommandKind::WitnessSearch,
            CommandKind::Check,
        ]
        .iter()
        .map(|c| c.name())
        .collect();
        assert_eq!(
            names,
            [
                "edges",
                "classes",
                "pv",
                "delta",
                "generic-closed-form",
                "formal",
                "poles",
                "ndpole",
                "witness-search",
                "check"
            ]
        );
    }

    #[test]
    fn polynomial_pairs_skip_zero_coefficients() {
        let p = ZPoly::from_coeffs(vec![
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(-2),
        ]);
        assert_eq!(zpoly_pairs(&p), json!([[0, "1"], [2, "-2"]]));
    }
}
