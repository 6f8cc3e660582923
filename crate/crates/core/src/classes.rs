//! Classes of complements and strata in the polynomial ring `Z[L]`.
//!
//! All the varieties this crate touches — complements of central
//! arrangements, the strata of iterated blowups along chains of edges, and
//! unions of linear subspaces — have classes that are polynomials in the
//! class `L` of the affine line. This module computes them exactly:
//!
//! * [`affine_complement_class`]: the complement of the arrangement in
//!   `C^N`, via Möbius inversion over the intersection poset;
//! * [`projective_complement_class`]: the same divided by `L - 1`, the class
//!   of the projectivized complement;
//! * [`chain_stratum_class`]: open or closed stratum attached to a strictly
//!   increasing chain of blowup centers, computed as a product of interval
//!   quotients;
//! * [`resolution_class`]: the full boundary-free class of the wonderful
//!   compactification of the projective complement, i.e. the sum of all open
//!   chain strata;
//! * [`union_class`]: the class of a union of projectivized subspaces,
//!   via inclusion–exclusion over chains.
//!
//! Complement and resolution classes are memoized globally (keyed by the
//! canonical normal set), because the same small quotient arrangements recur
//! across every stratum and integral computation.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arrangement::{
    edge_lattice, quotient_arrangement, Arrangement, EdgeLattice, Flat,
};
use crate::error::{Error, Result};
use crate::ratmat::{in_rowspace, rref, subspace_intersection, Rat};

/// A polynomial in `L` with integer coefficients, stored densely
/// (`coeffs[k]` is the coefficient of `L^k`, trailing zeros trimmed).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LPoly {
    coeffs: Vec<BigInt>,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LPoly::monomial(0)
    }

    /// The monomial `L^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        LPoly { coeffs }
    }

    /// Builds a polynomial from a dense coefficient list (index = exponent).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = LPoly { coeffs };
        p.trim();
        p
    }

    /// `1 + L + ... + L^(k-1)`, the class of projective space of dimension
    /// `k - 1` (zero when `k = 0`).
    pub fn projective_space(k: usize) -> Self {
        LPoly {
            coeffs: vec![BigInt::one(); k],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `L^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Dense coefficients, lowest exponent first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add_assign_scaled(&mut self, other: &LPoly, scale: &BigInt) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a += b * scale;
        }
        self.trim();
    }

    pub fn add(&self, other: &LPoly) -> LPoly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &BigInt::one());
        out
    }

    pub fn sub(&self, other: &LPoly) -> LPoly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &BigInt::from(-1));
        out
    }

    pub fn mul(&self, other: &LPoly) -> LPoly {
        if self.is_zero() || other.is_zero() {
            return LPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, k: &BigInt) -> LPoly {
        LPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Evaluates at an integer value of `L`.
    pub fn eval_at(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division by `L - 1`; errors if the remainder is nonzero.
    pub fn div_exact_l_minus_1(&self) -> Result<LPoly> {
        if self.is_zero() {
            return Ok(LPoly::zero());
        }
        // Synthetic division at the root L = 1.
        let n = self.coeffs.len();
        let mut quotient = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (1..n).rev() {
            carry += &self.coeffs[i];
            quotient[i - 1] = carry.clone();
        }
        let remainder = carry + &self.coeffs[0];
        if !remainder.is_zero() {
            return Err(Error::NonDivisible(format!(
                "remainder {remainder} when dividing {self} by L - 1"
            )));
        }
        Ok(LPoly::from_coeffs(quotient))
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "L")?,
                (1, false) => write!(f, "{mag}*L")?,
                (_, true) => write!(f, "L^{k}")?,
                (_, false) => write!(f, "{mag}*L^{k}")?,
            }
        }
        Ok(())
    }
}

/// Euler characteristic of a class: evaluation at `L = 1`.
pub fn euler_characteristic(class: &LPoly) -> BigInt {
    class.eval_at(&BigInt::one())
}

type CacheKey = (usize, Vec<Vec<BigInt>>);

fn affine_cache() -> &'static Mutex<HashMap<CacheKey, LPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, LPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn resolution_cache() -> &'static Mutex<HashMap<CacheKey, LPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, LPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Class of the affine complement `C^N \ union of hyperplanes`, by Möbius
/// inversion over the intersection poset (ambient space included).
pub fn affine_complement_class(arr: &Arrangement) -> LPoly {
    let key = arr.canonical_key();
    if let Some(hit) = affine_cache().lock().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let n = arr.ambient_dim();
    let result = if arr.count() == 0 {
        LPoly::monomial(n)
    } else {
        let lat = edge_lattice(arr);
        affine_complement_class_on(&lat)
    };
    affine_cache()
        .lock()
        .expect("cache lock")
        .insert(key, result.clone());
    result
}

/// Same as [`affine_complement_class`], reusing an existing lattice.
pub fn affine_complement_class_on(lat: &EdgeLattice) -> LPoly {
    let n = lat.arrangement().ambient_dim();
    // mu[i] for each edge; the ambient space has mu = 1. Edges are ordered
    // by increasing codimension, so everything strictly above an edge comes
    // earlier.
    let edges = lat.edges();
    let mut mu: Vec<BigInt> = Vec::with_capacity(edges.len());
    for i in 0..edges.len() {
        let mut m = -BigInt::one(); // contribution of the ambient space
        for (j, mu_j) in mu.iter().enumerate() {
            if lat.strictly_below(i, j) {
                m -= mu_j;
            }
        }
        mu.push(m);
    }
    let mut class = LPoly::monomial(n);
    for (i, edge) in edges.iter().enumerate() {
        class.add_assign_scaled(&LPoly::monomial(n - edge.codim), &mu[i]);
    }
    class
}

/// Class of the projectivized complement `P(V) \ P(arrangement)`: the affine
/// complement class divided exactly by `L - 1`.
///
/// The empty arrangement is allowed (its projective complement is all of
/// `P^(N-1)`); it arises naturally as a quotient between nested edges.
pub fn projective_complement_class(arr: &Arrangement) -> LPoly {
    if arr.count() == 0 {
        return LPoly::projective_space(arr.ambient_dim());
    }
    affine_complement_class(arr)
        .div_exact_l_minus_1()
        .expect("the affine complement class of a central arrangement is divisible by L - 1")
}

/// Open or closed stratum class for a strictly increasing chain of
/// non-origin edges.
///
/// The stratum attached to a chain `W_1 ⊂ … ⊂ W_r` factors as a product
/// over the consecutive intervals `(0, W_1), (W_1, W_2), …, (W_r, V)`: the
/// open stratum multiplies the projectivized complement classes of the
/// interval quotient arrangements, the closed one multiplies their full
/// resolution classes. The empty chain yields the projectivized complement
/// itself (open) or the resolution class (closed).
pub fn chain_stratum_class(lat: &EdgeLattice, chain: &[usize], closed: bool) -> Result<LPoly> {
    lat.validate_chain(chain)?;
    let mut flats: Vec<Flat> = Vec::with_capacity(chain.len() + 2);
    flats.push(Flat::Origin);
    flats.extend(chain.iter().map(|&i| Flat::Edge(i)));
    flats.push(Flat::Ambient);
    let mut class = LPoly::one();
    for pair in flats.windows(2) {
        let quotient = quotient_arrangement(lat, pair[0], pair[1])?;
        let factor = if closed {
            resolution_class(&quotient)
        } else {
            projective_complement_class(&quotient)
        };
        class = class.mul(&factor);
    }
    Ok(class)
}

/// Class of the canonical compactification of the projectivized complement:
/// the sum of the open chain strata over all chains (the empty chain
/// included).
///
/// The result is always congruent to 1 modulo `L` (the compactification is
/// connected and proper).
pub fn resolution_class(arr: &Arrangement) -> LPoly {
    if arr.count() == 0 {
        return LPoly::projective_space(arr.ambient_dim());
    }
    let key = arr.canonical_key();
    if let Some(hit) = resolution_cache().lock().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let lat = edge_lattice(arr);
    let mut total = projective_complement_class(arr);
    for chain in lat.chains() {
        let stratum = chain_stratum_class(&lat, &chain, false)
            .expect("enumerated chains are valid");
        total = total.add(&stratum);
    }
    resolution_cache()
        .lock()
        .expect("cache lock")
        .insert(key, total.clone());
    total
}

/// Class of a union of projectivized subspaces of `C^N`.
///
/// `members` are spanning sets (rows) of nonzero subspaces. The family must
/// be closed under pairwise intersection, except that intersections equal to
/// the origin are allowed to be absent (they are projectively empty). The
/// class is computed by inclusion–exclusion over chains:
/// `sum over chains C_0 ⊂ … ⊂ C_r of (-1)^r [P(C_0)]`.
pub fn union_class(ambient_dim: usize, members: &[Vec<Vec<Rat>>]) -> Result<LPoly> {
    // Canonicalize and deduplicate.
    let mut canon: Vec<Vec<Vec<Rat>>> = Vec::new();
    for m in members {
        for row in m {
            if row.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "subspace row has length {}, expected {}",
                    row.len(),
                    ambient_dim
                )));
            }
        }
        let r = rref(m);
        if r.is_empty() {
            return Err(Error::DimensionMismatch(
                "union members must be nonzero subspaces".into(),
            ));
        }
        if !canon.contains(&r) {
            canon.push(r);
        }
    }
    canon.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    // Intersection-closure check.
    for i in 0..canon.len() {
        for j in (i + 1)..canon.len() {
            let meet = subspace_intersection(&canon[i], &canon[j], ambient_dim);
            if !meet.is_empty() && !canon.contains(&meet) {
                return Err(Error::NotIntersectionClosed(format!(
                    "members {i} and {j} meet in a subspace of dimension {} outside the family",
                    meet.len()
                )));
            }
        }
    }

    // Strict containment: dimension increases and rows are contained.
    let contained = |a: &Vec<Vec<Rat>>, b: &Vec<Vec<Rat>>| -> bool {
        a.len() < b.len() && a.iter().all(|row| in_rowspace(b, row))
    };
    let m = canon.len();
    let mut below = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i != j && contained(&canon[i], &canon[j]) {
                below[i][j] = true;
            }
        }
    }

    // Sum (-1)^r [P(C_0)] over chains C_0 ⊂ … ⊂ C_r; only the minimal
    // element and the parity of the length matter, so count chain
    // extensions upward from each start.
    let mut total = LPoly::zero();
    for (start, member) in canon.iter().enumerate().take(m) {
        let signed_chains = count_signed_chains_upward(&below, start);
        total.add_assign_scaled(&LPoly::projective_space(member.len()), &signed_chains);
    }
    Ok(total)
}

/// Sum of `(-1)^(length-1)` over all chains starting at `start` and going
/// strictly upward, including the singleton chain. Each extension of a chain
/// flips its sign, giving the recursion `f(at) = 1 - sum of f(next)` over
/// the elements strictly above `at`.
fn count_signed_chains_upward(below: &[Vec<bool>], start: usize) -> BigInt {
    fn go(below: &[Vec<bool>], at: usize) -> BigInt {
        let mut total = BigInt::one();
        for next in 0..below.len() {
            if below[at][next] {
                total -= go(below, next);
            }
        }
        total
    }
    go(below, start)
}

/// Counts the points of the affine complement over the field with `p`
/// elements by direct enumeration. Independent of the Möbius computation;
/// used to validate complement classes, since the class evaluated at
/// `L = p` must equal this count.
pub fn affine_complement_points_mod_p(arr: &Arrangement, p: u64) -> u64 {
    let n = arr.ambient_dim();
    let normals: Vec<Vec<i64>> = arr
        .normals()
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let r = x % BigInt::from(p);
                    let r: BigInt = if r.is_negative() { r + BigInt::from(p) } else { r };
                    i64::try_from(r).expect("residue fits in i64")
                })
                .collect()
        })
        .collect();
    let mut point = vec![0u64; n];
    let mut count = 0u64;
    loop {
        let outside_all = normals.iter().all(|eta| {
            let dot: u64 = eta
                .iter()
                .zip(point.iter())
                .map(|(&e, &x)| (e as u64 * x) % p)
                .sum::<u64>()
                % p;
            dot != 0
        });
        if outside_all {
            count += 1;
        }
        // Odometer increment.
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            point[k] += 1;
            if point[k] < p {
                break;
            }
            point[k] = 0;
            k += 1;
        }
    }
}
