//! Residue certification for the candidate pole coming from the origin
//! blowup.
//!
//! For a product `g = f_1^{m_1} ... f_d^{m_d}` of the hyperplane equations
//! with positive integer multiplicities, the blowup of the origin produces
//! the candidate pole `-N / N_0` with `N_0 = sum m_i`. Whether the
//! candidate is an actual pole of the associated zeta function is decided by
//! a residue: each candidate center `W` carries the exponent
//! `alpha_W = codim W - (N / N_0) * N_W`, where `N_W` sums the
//! multiplicities of the hyperplanes through `W`. When every `alpha_W` is
//! nonzero the residue equals the principal value integral with exponents
//! `a_i = alpha_{V_i}`, and the candidate is a pole exactly when that
//! integral does not vanish.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{is_essential, is_indecomposable, EdgeLattice};
use crate::error::{Error, Result};
use crate::puiseux::PuiseuxRational;
use crate::pv::{pv_integral, ExponentVector};
use crate::ratmat::{rat, Rat};

/// Positive integer multiplicities, one per hyperplane (in input order).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiplicityVector {
    m: Vec<i64>,
}

impl MultiplicityVector {
    pub fn new(m: Vec<i64>) -> Result<Self> {
        for (index, &value) in m.iter().enumerate() {
            if value < 1 {
                return Err(Error::InvalidMultiplicity { index, value });
            }
        }
        Ok(MultiplicityVector { m })
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.m
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    /// The total `N_0 = sum m_i`, the multiplicity of the exceptional
    /// divisor of the origin blowup.
    pub fn total(&self) -> i64 {
        self.m.iter().sum()
    }
}

/// The residue exponents attached to a multiplicity vector: one rational
/// `alpha_W` per candidate center, plus the origin's own entry (which the
/// defining formula makes identically zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueExponents {
    alphas: Vec<Rat>,
    origin: Rat,
}

impl ResidueExponents {
    /// `alpha_W` for each candidate center, parallel to the lattice's
    /// center list.
    pub fn alphas(&self) -> &[Rat] {
        &self.alphas
    }

    /// The origin's entry `N - (N / N_0) * N_0 = 0`.
    pub fn origin(&self) -> &Rat {
        &self.origin
    }

    /// Whether every candidate center has a nonzero exponent, so that the
    /// residue integral is defined.
    pub fn is_generic(&self) -> bool {
        self.alphas.iter().all(|x| !x.is_zero())
    }
}

/// Computes `alpha_W = codim W - (N / N_0) * N_W` for every candidate
/// center `W`, with `N_W` the sum of the multiplicities of the hyperplanes
/// containing `W`.
pub fn residue_exponents(lat: &EdgeLattice, m: &MultiplicityVector) -> Result<ResidueExponents> {
    let arr = lat.arrangement();
    if m.len() != arr.count() {
        return Err(Error::DimensionMismatch(format!(
            "expected {} multiplicities, got {}",
            arr.count(),
            m.len()
        )));
    }
    let ratio = rat(arr.ambient_dim() as i64, m.total());
    let alphas = lat
        .s_indices()
        .into_iter()
        .map(|i| {
            let edge = lat.edge(i);
            let weight: i64 = edge.containing.iter().map(|&h| m.multiplicities()[h]).sum();
            rat(edge.codim as i64, 1) - &ratio * rat(weight, 1)
        })
        .collect();
    Ok(ResidueExponents {
        alphas,
        origin: rat(0, 1),
    })
}

/// Outcome of certifying the origin-blowup candidate pole `-N / N_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NdPoleCheck {
    /// Whether every candidate center has a nonzero residue exponent.
    pub generic: bool,
    /// The residue integral, present exactly when `generic`.
    pub residue: Option<PuiseuxRational>,
    /// `Some(residue != 0)` when generic — a definite verdict on the
    /// candidate pole — and `None` (indeterminate) otherwise.
    pub is_pole: Option<bool>,
}

/// Certifies the candidate pole `-N / N_0` for an essential indecomposable
/// arrangement: computes the residue exponents, and when they are all
/// nonzero evaluates the residue as the principal value integral with
/// exponents `a_i = alpha_{V_i} = 1 - (N / N_0) * m_i`.
///
/// The degree condition holds automatically: the `a_i` sum to
/// `d - (N / N_0) * N_0 = d - n - 1`.
pub fn nd_pole_check(lat: &EdgeLattice, m: &MultiplicityVector) -> Result<NdPoleCheck> {
    validate_hypotheses(lat)?;
    nd_pole_check_unchecked(lat, m)
}

fn validate_hypotheses(lat: &EdgeLattice) -> Result<()> {
    let arr = lat.arrangement();
    if !is_essential(arr) {
        return Err(Error::NotEssential);
    }
    if !is_indecomposable(arr) {
        return Err(Error::Decomposable);
    }
    Ok(())
}

fn nd_pole_check_unchecked(lat: &EdgeLattice, m: &MultiplicityVector) -> Result<NdPoleCheck> {
    let exps = residue_exponents(lat, m)?;
    if !exps.is_generic() {
        return Ok(NdPoleCheck {
            generic: false,
            residue: None,
            is_pole: None,
        });
    }
    let arr = lat.arrangement();
    let ratio = rat(arr.ambient_dim() as i64, m.total());
    let a = ExponentVector::new(
        m.multiplicities()
            .iter()
            .map(|&mi| rat(1, 1) - &ratio * rat(mi, 1))
            .collect(),
    );
    let residue = pv_integral(lat, &a)?;
    let is_pole = !residue.is_zero();
    Ok(NdPoleCheck {
        generic: true,
        residue: Some(residue),
        is_pole: Some(is_pole),
    })
}

/// Result of scanning multiplicity vectors for certified poles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSearchReport {
    /// Multiplicity vectors whose residue is nonzero, in lexicographic
    /// order.
    pub witnesses: Vec<MultiplicityVector>,
    /// Number of distinct vectors examined.
    pub examined: usize,
    /// How many examined vectors failed genericity (some `alpha_W = 0`).
    pub non_generic: usize,
    /// Whether the whole grid `{1..bound}^d` was scanned; when it is too
    /// large, a seeded random sample is drawn instead.
    pub exhaustive: bool,
}

/// Grids up to this size are scanned exhaustively.
const EXHAUSTIVE_LIMIT: u64 = 2000;
/// Number of random draws when the grid is too large to scan.
const SAMPLE_SIZE: usize = 200;

/// Scans multiplicity vectors `m` in `{1..bound}^d` (exhaustively for small
/// grids, otherwise a deterministic seeded sample) and reports those whose
/// candidate pole `-N / (sum m_i)` is certified by a nonzero residue.
pub fn genericity_witness_search(
    lat: &EdgeLattice,
    bound: i64,
    seed: u64,
) -> Result<WitnessSearchReport> {
    validate_hypotheses(lat)?;
    if bound < 1 {
        return Err(Error::Unsupported(format!(
            "witness search bound {bound} must be positive"
        )));
    }
    let d = lat.arrangement().count();
    let grid_size = (bound as u64).checked_pow(d as u32);
    let exhaustive = grid_size.is_some_and(|g| g <= EXHAUSTIVE_LIMIT);

    let candidates: BTreeSet<Vec<i64>> = if exhaustive {
        let mut out = BTreeSet::new();
        let mut current = vec![1i64; d];
        'scan: loop {
            out.insert(current.clone());
            // Odometer increment in lexicographic order.
            for slot in (0..d).rev() {
                if current[slot] < bound {
                    current[slot] += 1;
                    for later in current.iter_mut().skip(slot + 1) {
                        *later = 1;
                    }
                    continue 'scan;
                }
            }
            break;
        }
        out
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = BTreeSet::new();
        for _ in 0..SAMPLE_SIZE {
            let m: Vec<i64> = (0..d).map(|_| rng.gen_range(1..=bound)).collect();
            out.insert(m);
        }
        out
    };
    finish_scan(lat, candidates, exhaustive)
}

fn finish_scan(
    lat: &EdgeLattice,
    candidates: BTreeSet<Vec<i64>>,
    exhaustive: bool,
) -> Result<WitnessSearchReport> {
    let examined = candidates.len();
    let mut witnesses = Vec::new();
    let mut non_generic = 0usize;
    for m in candidates {
        let m = MultiplicityVector::new(m)?;
        let check = nd_pole_check_unchecked(lat, &m)?;
        if !check.generic {
            non_generic += 1;
        } else if check.is_pole == Some(true) {
            witnesses.push(m);
        }
    }
    Ok(WitnessSearchReport {
        witnesses,
        examined,
        non_generic,
        exhaustive,
    })
}
