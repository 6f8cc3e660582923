//! Seeded random draws of admissible exponent vectors: the degree condition
//! holds exactly, every edge exponent `b_W` is nonzero (so the integral is
//! defined), and optionally no coordinate touches the excluded values 0, 1.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{b_coefficient, EdgeLattice};
use crate::error::{Error, Result};
use crate::pv::ExponentVector;
use crate::ratmat::{rat, rat_int, Rat};

const MAX_ATTEMPTS: usize = 10_000;

/// Draws one admissible exponent vector for the arrangement underlying
/// `lat`. Denominators stay small (a single `q` in `2..=6` per draw) and
/// numerators are bounded, so downstream polynomial degrees stay moderate.
///
/// All but the last coordinate are drawn freely; the last is solved from
/// the degree condition. Draws violating a constraint are rejected and
/// retried; after [`MAX_ATTEMPTS`] rejections the search reports failure.
pub fn sample_exponents(
    lat: &EdgeLattice,
    rng: &mut impl Rng,
    avoid_unit_values: bool,
) -> Result<ExponentVector> {
    let arr = lat.arrangement();
    let d = arr.count();
    let n = arr.projective_dim();
    let target = rat_int(d as i64 - n as i64 - 1);

    'attempt: for _ in 0..MAX_ATTEMPTS {
        let q = rng.gen_range(2..=6i64);
        let mut values: Vec<Rat> = Vec::with_capacity(d);
        let mut partial = rat_int(0);
        for _ in 0..d.saturating_sub(1) {
            let numer = rng.gen_range(-3 * q..=3 * q);
            let value = rat(numer, q);
            partial += &value;
            values.push(value);
        }
        values.push(target.clone() - partial);

        if avoid_unit_values
            && values
                .iter()
                .any(|v| v.is_zero() || *v == rat_int(1))
        {
            continue 'attempt;
        }
        for w in lat.s_indices() {
            if b_coefficient(lat, w, &values).is_zero() {
                continue 'attempt;
            }
        }
        return Ok(ExponentVector::new(values));
    }
    Err(Error::WitnessSearchFailed(format!(
        "no admissible exponent vector found in {MAX_ATTEMPTS} draws"
    )))
}

/// Deterministic batch of admissible exponent vectors: a fixed seed yields
/// the same draws on every platform and run.
pub fn exponent_draws(
    lat: &EdgeLattice,
    count: usize,
    seed: u64,
    avoid_unit_values: bool,
) -> Result<Vec<ExponentVector>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| sample_exponents(lat, &mut rng, avoid_unit_values))
        .collect()
}
