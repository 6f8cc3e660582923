//! The symbolic integral with indeterminate exponents.
//!
//! Attach to each hyperplane `V_i` a symbol `s_i`, subject to the single
//! relation `n + 1 + s_1 + ... + s_d = 0` (the symbolic form of the degree
//! condition). Every candidate center `W` then carries the exponent class
//!
//! ```text
//! c_W = codim W + sum of s_i over the hyperplanes containing W,
//! ```
//!
//! and the symbolic integral is
//!
//! ```text
//! F = sum over chains I of [open stratum of I] * prod_{W in I} (L - 1)/(L^{c_W} - 1).
//! ```
//!
//! The fraction is stored with denominators cleared: `F = G / prod_W
//! (L^{c_W} - 1)`, where the numerator `G` is a Laurent polynomial in
//! `u = L` and `v_i = L^{s_i}` (the last symbol is eliminated by the
//! relation, so there are `d` variables in total). Substituting
//! `s_i = a_i - 1` for a concrete exponent vector `a` turns each `c_W` into
//! the edge coefficient `b_W(a)` and recovers `L^n` times the principal
//! value integral.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arrangement::{Edge, EdgeLattice};
use crate::classes::{chain_stratum_class, LPoly};
use crate::error::{Error, Result};
use crate::puiseux::{PuiseuxRational, ZPoly};
use crate::pv::{check_degree_condition, ExponentVector};
use crate::ratmat::Rat;

/// An integer exponent class `l0 + l1*s_1 + ... + l_d*s_d`, canonicalized by
/// eliminating the last symbol through the relation `n + 1 + sum s_i = 0`.
///
/// Canonical coefficients are `[l0, l1, ..., l_{d-1}]`: the constant slot
/// followed by one slot per surviving symbol. Two classes are equal exactly
/// when their canonical coefficients agree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MElem {
    coeffs: Vec<i64>,
}

impl MElem {
    /// Canonicalizes raw coefficients `[l0, l1, ..., l_d]` (constant first,
    /// then one slot per hyperplane) for an arrangement with projective
    /// dimension `n`: the last slot is eliminated via
    /// `s_d = -(n + 1) - s_1 - ... - s_{d-1}`.
    pub fn new(n: usize, raw: &[i64]) -> MElem {
        assert!(
            raw.len() >= 2,
            "an exponent class needs a constant slot and at least one symbol"
        );
        let d = raw.len() - 1;
        let last = raw[d];
        let mut coeffs = vec![0i64; d];
        coeffs[0] = raw[0] - last * (n as i64 + 1);
        for i in 1..d {
            coeffs[i] = raw[i] - last;
        }
        MElem { coeffs }
    }

    /// Number of coefficient slots, equal to the hyperplane count `d`.
    pub fn slots(&self) -> usize {
        self.coeffs.len()
    }

    /// The constant part of the canonical form.
    pub fn constant(&self) -> i64 {
        self.coeffs[0]
    }

    /// Canonical coefficients, constant first.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Whether the class lies in the integers (every symbol coefficient is
    /// zero after elimination).
    pub fn is_integer(&self) -> bool {
        self.coeffs[1..].iter().all(|&x| x == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0)
    }

    pub fn neg(&self) -> MElem {
        MElem {
            coeffs: self.coeffs.iter().map(|&x| -x).collect(),
        }
    }
}

impl fmt::Display for MElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if self.coeffs[0] != 0 {
            write!(f, "{}", self.coeffs[0])?;
            wrote = true;
        }
        for (i, &l) in self.coeffs.iter().enumerate().skip(1) {
            if l == 0 {
                continue;
            }
            if wrote {
                write!(f, " {} ", if l > 0 { "+" } else { "-" })?;
            } else if l < 0 {
                write!(f, "-")?;
            }
            if l.unsigned_abs() != 1 {
                write!(f, "{} ", l.unsigned_abs())?;
            }
            write!(f, "s{i}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Whether two exponent classes are linearly independent over the integers
/// (equivalently over the rationals, since there are only two of them).
pub fn linearly_independent(a: &MElem, b: &MElem) -> bool {
    if a.is_zero() || b.is_zero() {
        return false;
    }
    let (x, y) = (a.coeffs(), b.coeffs());
    for i in 0..x.len() {
        for j in (i + 1)..x.len() {
            if (x[i] as i128) * (y[j] as i128) != (x[j] as i128) * (y[i] as i128) {
                return true;
            }
        }
    }
    false
}

/// The exponent class attached to an edge: its codimension plus the symbols
/// of the hyperplanes containing it.
pub fn melem_for_edge(lat: &EdgeLattice, edge_idx: usize) -> MElem {
    melem_from_edge_data(
        lat.arrangement().projective_dim(),
        lat.arrangement().count(),
        lat.edge(edge_idx),
    )
}

fn melem_from_edge_data(n: usize, d: usize, edge: &Edge) -> MElem {
    let mut raw = vec![0i64; d + 1];
    raw[0] = edge.codim as i64;
    for &i in &edge.containing {
        raw[i + 1] = 1;
    }
    MElem::new(n, &raw)
}

/// A Laurent polynomial with arbitrary-precision integer coefficients in the
/// variable `u` (slot 0, standing for `L`) and the symbol variables
/// `v_1, ..., v_{d-1}` (slots `1..d`, standing for `L^{s_i}`).
///
/// Terms are kept in a sorted map from exponent vectors to nonzero
/// coefficients, so iteration order — and hence every downstream
/// serialization — is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMulti {
    slots: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentMulti {
    pub fn zero(slots: usize) -> Self {
        LaurentMulti {
            slots,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(slots: usize) -> Self {
        Self::monomial(vec![0; slots], BigInt::one())
    }

    /// A single term `coeff * x^exponents`.
    pub fn monomial(exponents: Vec<i64>, coeff: BigInt) -> Self {
        let slots = exponents.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        LaurentMulti { slots, terms }
    }

    /// Embeds a polynomial in `L` alone (all symbol exponents zero).
    pub fn from_univariate(p: &LPoly, slots: usize) -> Self {
        let mut out = LaurentMulti::zero(slots);
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0i64; slots];
                e[0] = k as i64;
                out.terms.insert(e, c.clone());
            }
        }
        out
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The terms, sorted by exponent vector.
    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.terms
    }

    fn insert_add(&mut self, e: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.slots, other.slots, "variable counts must match");
        for (e, c) in &other.terms {
            self.insert_add(e.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn neg(&self) -> Self {
        LaurentMulti {
            slots: self.slots,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.slots, other.slots, "variable counts must match");
        let mut out = LaurentMulti::zero(self.slots);
        for (e, a) in &self.terms {
            for (g, b) in &other.terms {
                let sum: Vec<i64> = e.iter().zip(g).map(|(x, y)| x + y).collect();
                out.insert_add(sum, a * b);
            }
        }
        out
    }

    /// Multiplies by a polynomial in `L` alone.
    pub fn mul_univariate(&self, p: &LPoly) -> Self {
        let mut out = LaurentMulti::zero(self.slots);
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (e, a) in &self.terms {
                let mut shifted = e.clone();
                shifted[0] += k as i64;
                out.insert_add(shifted, a * c);
            }
        }
        out
    }

    /// Multiplies by the binomial `x^c - 1`.
    pub fn mul_binomial(&self, c: &[i64]) -> Self {
        assert_eq!(c.len(), self.slots, "variable counts must match");
        let mut out = self.neg();
        for (e, a) in &self.terms {
            let shifted: Vec<i64> = e.iter().zip(c).map(|(x, y)| x + y).collect();
            out.insert_add(shifted, a.clone());
        }
        out
    }

    /// Exact division by the binomial `x^c - 1` for a nonzero integer
    /// exponent vector `c`; `None` when the division leaves a remainder.
    ///
    /// Terms are grouped into residue classes of their exponent vectors
    /// modulo the direction `c` (the class representative takes the pivot
    /// coordinate into `[0, |c_pivot|)`), and each class is divided as a
    /// univariate polynomial in `y = x^c` by `y - 1` via synthetic division.
    pub fn divide_by_binomial(&self, c: &[i64]) -> Option<Self> {
        assert_eq!(c.len(), self.slots, "variable counts must match");
        let pivot = c
            .iter()
            .position(|&x| x != 0)
            .expect("cannot divide by the zero binomial");
        let mut classes: BTreeMap<Vec<i64>, BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (e, a) in &self.terms {
            let j = e[pivot].div_euclid(c[pivot]);
            let mut key = e.clone();
            for (k, &ck) in key.iter_mut().zip(c) {
                *k -= j * ck;
            }
            classes.entry(key).or_default().insert(j, a.clone());
        }
        let mut out = LaurentMulti::zero(self.slots);
        for (key, column) in classes {
            // Dividing sum a_j y^j by (y - 1): the quotient coefficient at
            // step j is minus the running prefix sum, held constant across
            // gaps; exactness means the full sum telescopes to zero.
            let mut running = BigInt::zero();
            let mut iter = column.into_iter().peekable();
            while let Some((j, a)) = iter.next() {
                running += a;
                if running.is_zero() {
                    continue;
                }
                let &(next, _) = iter.peek()?;
                for step in j..next {
                    let mut e = key.clone();
                    for (k, &ck) in e.iter_mut().zip(c) {
                        *k += step * ck;
                    }
                    out.insert_add(e, -running.clone());
                }
            }
        }
        Some(out)
    }

    /// Evaluates the substitution `x^c = 1`: every exponent vector is
    /// reduced to its canonical representative modulo the direction `c` and
    /// coefficients within a class are summed.
    ///
    /// The result is zero exactly when the polynomial is divisible by
    /// `x^c - 1`, which gives an independent cross-check of
    /// [`Self::divide_by_binomial`].
    pub fn substitute_binomial_one(&self, c: &[i64]) -> Self {
        assert_eq!(c.len(), self.slots, "variable counts must match");
        let pivot = c
            .iter()
            .position(|&x| x != 0)
            .expect("cannot substitute along the zero direction");
        let mut out = LaurentMulti::zero(self.slots);
        for (e, a) in &self.terms {
            let j = e[pivot].div_euclid(c[pivot]);
            let mut key = e.clone();
            for (k, &ck) in key.iter_mut().zip(c) {
                *k -= j * ck;
            }
            out.insert_add(key, a.clone());
        }
        out
    }
}

/// The symbolic integral `G / prod_W (L^{c_W} - 1)`, with the product over
/// all candidate centers of the arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalFraction {
    ambient_dim: usize,
    numerator: LaurentMulti,
    denominators: Vec<MElem>,
    edge_labels: Vec<String>,
}

impl FormalFraction {
    /// The cleared numerator `G`.
    pub fn numerator(&self) -> &LaurentMulti {
        &self.numerator
    }

    /// The exponent classes `c_W` of the denominator binomials, in lattice
    /// order of the candidate centers.
    pub fn denominators(&self) -> &[MElem] {
        &self.denominators
    }

    /// Rendered bases of the candidate centers, parallel to
    /// [`Self::denominators`]; used in diagnostics.
    pub fn edge_labels(&self) -> &[String] {
        &self.edge_labels
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn projective_dim(&self) -> usize {
        self.ambient_dim - 1
    }

    /// Number of hyperplanes `d` (also the number of exponent slots).
    pub fn hyperplane_count(&self) -> usize {
        self.numerator.slots()
    }
}

/// Computes the symbolic integral of an arrangement with denominators
/// cleared over the common product of all center binomials.
///
/// Each chain `I` contributes `[open stratum] * (L - 1)^{|I|} *
/// prod_{W not in I} (L^{c_W} - 1)`; the complement product is obtained by
/// exact division of the common product, which keeps the work per chain
/// proportional to the chain length.
pub fn formal_pv(lat: &EdgeLattice) -> Result<FormalFraction> {
    let arr = lat.arrangement();
    let d = arr.count();
    let s = lat.s_indices();
    let denominators: Vec<MElem> = s.iter().map(|&i| melem_for_edge(lat, i)).collect();
    let edge_labels: Vec<String> = s.iter().map(|&i| lat.edge(i).basis_string()).collect();

    let mut common = LaurentMulti::one(d);
    for c in &denominators {
        debug_assert!(!c.is_zero(), "a candidate center never has a zero class");
        common = common.mul_binomial(c.coeffs());
    }
    let mut l_minus_1 = vec![0i64; d];
    l_minus_1[0] = 1;

    let mut numerator = LaurentMulti::zero(d);
    for chain in std::iter::once(Vec::new()).chain(lat.chains()) {
        let class = chain_stratum_class(lat, &chain, false)?;
        if class.is_zero() {
            continue;
        }
        let mut term = common.clone();
        for &w in &chain {
            let p = s
                .binary_search(&w)
                .expect("chains consist of candidate centers");
            term = term
                .divide_by_binomial(denominators[p].coeffs())
                .expect("the common product contains every chain factor");
            term = term.mul_binomial(&l_minus_1);
        }
        numerator.add_assign(&term.mul_univariate(&class));
    }

    Ok(FormalFraction {
        ambient_dim: arr.ambient_dim(),
        numerator,
        denominators,
        edge_labels,
    })
}

/// Whether the symbolic integral is identically zero (its cleared numerator
/// vanishes).
pub fn formal_is_zero(f: &FormalFraction) -> bool {
    f.numerator.is_zero()
}

/// Whether the edge `W` is a pole of the symbolic integral: with
/// `kappa = #{W' : c_{W'} = ±c_W}` counted over the denominator multiset,
/// the numerator must fail to be divisible by `(L^{c_W} - 1)^kappa`.
///
/// Errors with [`Error::IntegerDirection`] when `c_W` is an integer (which
/// happens exactly for the common intersection of all hyperplanes when it is
/// positive-dimensional); that direction cannot be separated from `L` itself
/// and is handled by direct univariate divisibility elsewhere.
pub fn is_pole(f: &FormalFraction, edge: &Edge) -> Result<bool> {
    let d = f.hyperplane_count();
    if edge.containing.iter().any(|&i| i >= d) {
        return Err(Error::DimensionMismatch(format!(
            "edge references hyperplane {} of an arrangement with {} hyperplanes",
            edge.containing.iter().max().unwrap(),
            d
        )));
    }
    let c = melem_from_edge_data(f.projective_dim(), d, edge);
    if c.is_integer() {
        return Err(Error::IntegerDirection(c.to_string()));
    }
    let neg = c.neg();
    let kappa = f
        .denominators
        .iter()
        .filter(|x| **x == c || **x == neg)
        .count();
    let mut g = f.numerator.clone();
    for _ in 0..kappa {
        match g.divide_by_binomial(c.coeffs()) {
            Some(quotient) => g = quotient,
            None => return Ok(true),
        }
    }
    Ok(false)
}

/// Divides the numerator by every denominator binomial in turn; on full
/// success returns the quotient, which is then required to involve no
/// symbol variable and no negative power of `L`.
///
/// When no candidate center is a pole the divisions always succeed and the
/// value of the symbolic integral is a genuine polynomial in `L`.
pub fn try_reduce_to_polynomial(f: &FormalFraction) -> Option<LPoly> {
    let mut g = f.numerator.clone();
    for c in &f.denominators {
        g = g.divide_by_binomial(c.coeffs())?;
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (e, a) in g.terms() {
        if e[0] < 0 || e[1..].iter().any(|&x| x != 0) {
            return None;
        }
        let k = e[0] as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] = a.clone();
    }
    Some(LPoly::from_coeffs(coeffs))
}

/// Substitutes concrete exponents into the symbolic integral: with
/// `s_i = u_i - 1`, every `c_W` becomes the edge coefficient `b_W(u)` and
/// the value equals `L^n` times the principal value integral at `u`.
///
/// Requires the degree condition `sum u_i = d - n - 1` (which realizes the
/// symbol relation) and `b_W(u) != 0` for every candidate center.
pub fn specialize(f: &FormalFraction, u: &ExponentVector) -> Result<PuiseuxRational> {
    let d = f.hyperplane_count();
    let n = f.projective_dim();
    check_degree_condition(d, n, u)?;
    let q = u.root_order()?;

    let scaled: Vec<i64> = u
        .exponents()
        .iter()
        .map(|x| {
            let v = x * Rat::from_integer(BigInt::from(q));
            debug_assert!(v.is_integer());
            i64::try_from(v.numer())
                .map_err(|_| Error::Unsupported(format!("scaled exponent {v} exceeds machine range")))
        })
        .collect::<Result<_>>()?;
    // In units of t = L^(1/q): slot 0 contributes q per power of L, symbol
    // slot i contributes q*(u_i - 1).
    let mut weights = vec![0i64; d];
    weights[0] = q;
    for i in 1..d {
        weights[i] = scaled[i - 1] - q;
    }

    let weigh = |e: &[i64]| -> Result<i64> {
        let mut acc: i128 = 0;
        for (x, w) in e.iter().zip(&weights) {
            acc += (*x as i128) * (*w as i128);
        }
        i64::try_from(acc)
            .map_err(|_| Error::Unsupported("substituted exponent exceeds machine range".into()))
    };

    let mut binoms = Vec::with_capacity(f.denominators.len());
    for (c, label) in f.denominators.iter().zip(&f.edge_labels) {
        let k = weigh(c.coeffs())?;
        if k == 0 {
            return Err(Error::LogarithmicPole {
                edge_basis: label.clone(),
            });
        }
        binoms.push(k);
    }

    if f.numerator.is_zero() {
        return Ok(PuiseuxRational::zero());
    }
    let mut series: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (e, a) in f.numerator.terms() {
        let k = weigh(e)?;
        let slot = series.entry(k).or_default();
        *slot += a;
        if slot.is_zero() {
            series.remove(&k);
        }
    }
    if series.is_empty() {
        return Ok(PuiseuxRational::zero());
    }
    let shift = *series.keys().next().unwrap();
    let top = *series.keys().next_back().unwrap();
    let mut coeffs = vec![BigInt::zero(); (top - shift + 1) as usize];
    for (k, a) in series {
        coeffs[(k - shift) as usize] = a;
    }
    Ok(PuiseuxRational::from_fraction(
        q,
        shift,
        ZPoly::from_coeffs(coeffs),
        &binoms,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{edge_lattice, parse_arrangement, Arrangement};
    use crate::pv::pv_integral;
    use crate::ratmat::rat;

    fn pencil3() -> Arrangement {
        parse_arrangement(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    fn boolean2() -> Arrangement {
        parse_arrangement(2, &[vec![1, 0], vec![0, 1]]).unwrap()
    }

    fn exponents(pairs: &[(i64, i64)]) -> ExponentVector {
        ExponentVector::from_pairs(pairs)
    }

    #[test]
    fn exponent_classes_canonicalize() {
        // Three lines in the plane: on V_1 the class is 1 + s1 and the last
        // symbol never appears.
        let lat = edge_lattice(&pencil3());
        let s = lat.s_indices();
        assert_eq!(melem_for_edge(&lat, s[0]).coeffs(), &[1, 1, 0]);
        // Two coordinate lines: the second class rewrites to -1 - s1.
        let lat2 = edge_lattice(&boolean2());
        let s2 = lat2.s_indices();
        let c1 = melem_for_edge(&lat2, s2[0]);
        let c2 = melem_for_edge(&lat2, s2[1]);
        assert_eq!(c2.coeffs(), &[-1, -1]);
        assert_eq!(c2, c1.neg());
        assert_eq!(c2.to_string(), "-1 - s1");
        assert!(!c2.is_integer());
        // A single hyperplane in C^2: the class collapses to the integer
        // minus the dimension of the common intersection.
        let single = parse_arrangement(2, &[vec![1, 0]]).unwrap();
        let lat1 = edge_lattice(&single);
        let c = melem_for_edge(&lat1, lat1.s_indices()[0]);
        assert!(c.is_integer());
        assert_eq!(c.coeffs(), &[-1]);
    }

    #[test]
    fn nested_edges_have_independent_classes() {
        for arr in [
            pencil3(),
            parse_arrangement(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap(),
        ] {
            let lat = edge_lattice(&arr);
            let s = lat.s_indices();
            for &i in &s {
                for &j in &s {
                    if lat.strictly_below(i, j) {
                        assert!(linearly_independent(
                            &melem_for_edge(&lat, i),
                            &melem_for_edge(&lat, j)
                        ));
                    }
                }
            }
        }
    }

    #[test]
    fn binomial_division_roundtrips() {
        // (x0^2 x1^2 - 1) / (x0 x1 - 1) = x0 x1 + 1.
        let big = LaurentMulti::one(2).mul_binomial(&[2, 2]);
        let quotient = big.divide_by_binomial(&[1, 1]).unwrap();
        let mut expected = LaurentMulti::monomial(vec![1, 1], BigInt::one());
        expected.add_assign(&LaurentMulti::one(2));
        assert_eq!(quotient, expected);

        // A product of mixed binomials divides back out in any order.
        let dirs: Vec<Vec<i64>> = vec![vec![1, 0], vec![-1, 2], vec![3, -1], vec![1, 0]];
        let mut p = LaurentMulti::from_univariate(&LPoly::projective_space(3), 2);
        for c in &dirs {
            p = p.mul_binomial(c);
        }
        for c in [&dirs[2], &dirs[0], &dirs[3], &dirs[1]] {
            assert!(p.substitute_binomial_one(c).is_zero());
            p = p.divide_by_binomial(c).unwrap();
        }
        assert_eq!(p, LaurentMulti::from_univariate(&LPoly::projective_space(3), 2));

        // Inexact division is reported, matching the substitution test.
        let off = LaurentMulti::one(2).mul_binomial(&[1, 1]).add(&LaurentMulti::one(2));
        assert!(off.divide_by_binomial(&[1, 1]).is_none());
        assert!(!off.substitute_binomial_one(&[1, 1]).is_zero());
    }

    #[test]
    fn symbolic_integral_of_three_concurrent_lines() {
        let lat = edge_lattice(&pencil3());
        let f = formal_pv(&lat).unwrap();
        assert!(!formal_is_zero(&f));
        assert_eq!(f.denominators().len(), 3);

        // Assemble the same numerator directly:
        // (L - 2) * prod (L^{c_i} - 1) + (L - 1) * sum_i prod_{j != i}.
        let cs = f.denominators();
        let l_minus_2 = LPoly::from_coeffs(vec![BigInt::from(-2), BigInt::one()]);
        let l_minus_1 = LPoly::from_coeffs(vec![BigInt::from(-1), BigInt::one()]);
        let mut expected = LaurentMulti::one(3);
        for c in cs {
            expected = expected.mul_binomial(c.coeffs());
        }
        expected = expected.mul_univariate(&l_minus_2);
        for i in 0..3 {
            let mut part = LaurentMulti::one(3);
            for (j, c) in cs.iter().enumerate() {
                if j != i {
                    part = part.mul_binomial(c.coeffs());
                }
            }
            expected.add_assign(&part.mul_univariate(&l_minus_1));
        }
        assert_eq!(*f.numerator(), expected);

        // Setting L^{c_1} = 1 leaves (L - 1) * (L^{c_2} - 1) * (L^{c_3} - 1).
        let at_root = f.numerator().substitute_binomial_one(cs[0].coeffs());
        let mut survivor = LaurentMulti::one(3)
            .mul_binomial(cs[1].coeffs())
            .mul_binomial(cs[2].coeffs())
            .mul_univariate(&l_minus_1);
        survivor = survivor.substitute_binomial_one(cs[0].coeffs());
        assert_eq!(at_root, survivor);
        assert!(!at_root.is_zero());
    }

    #[test]
    fn product_and_degenerate_integrals_vanish() {
        // Two coordinate lines: the two classes are opposite and the
        // telescoping sum collapses.
        let lat = edge_lattice(&boolean2());
        let f = formal_pv(&lat).unwrap();
        assert!(formal_is_zero(&f));
        assert_eq!(try_reduce_to_polynomial(&f), Some(LPoly::zero()));

        // A single hyperplane in C^2 (common intersection is a line).
        let single = parse_arrangement(2, &[vec![1, 0]]).unwrap();
        let lat1 = edge_lattice(&single);
        let f1 = formal_pv(&lat1).unwrap();
        assert!(formal_is_zero(&f1));
    }

    #[test]
    fn pole_detection() {
        let lat = edge_lattice(&pencil3());
        let f = formal_pv(&lat).unwrap();
        for &i in &lat.s_indices() {
            assert!(is_pole(&f, lat.edge(i)).unwrap());
        }

        // Zero numerator is divisible by everything.
        let lat2 = edge_lattice(&boolean2());
        let f2 = formal_pv(&lat2).unwrap();
        for &i in &lat2.s_indices() {
            assert!(!is_pole(&f2, lat2.edge(i)).unwrap());
        }

        // Integer directions are refused.
        let single = parse_arrangement(2, &[vec![1, 0]]).unwrap();
        let lat1 = edge_lattice(&single);
        let f1 = formal_pv(&lat1).unwrap();
        assert!(matches!(
            is_pole(&f1, lat1.edge(lat1.s_indices()[0])),
            Err(Error::IntegerDirection(_))
        ));
    }

    #[test]
    fn substitution_matches_principal_value() {
        let lat = edge_lattice(&pencil3());
        let f = formal_pv(&lat).unwrap();
        let u = exponents(&[(1, 2), (1, 4), (1, 4)]);

        // Known value: (t^2 + t + 1)^2 at q = 4.
        let value = specialize(&f, &u).unwrap();
        let expected = PuiseuxRational::from_fraction(
            4,
            0,
            ZPoly::from_coeffs(
                [1, 2, 3, 2, 1].into_iter().map(BigInt::from).collect(),
            ),
            &[],
        );
        assert!(value.eq_value(&expected));

        // And it equals L^n times the principal value integral.
        let pv = pv_integral(&lat, &u).unwrap();
        let n = lat.arrangement().projective_dim() as i64;
        assert!(value.eq_value(&pv.mul_tpow(pv.q() * n)));

        // Unequal-denominator draw.
        let u2 = exponents(&[(5, 6), (-1, 3), (1, 2)]);
        let value2 = specialize(&f, &u2).unwrap();
        let pv2 = pv_integral(&lat, &u2).unwrap();
        assert!(value2.eq_value(&pv2.mul_tpow(pv2.q() * n)));
    }

    #[test]
    fn substitution_of_vanishing_integrals() {
        let lat = edge_lattice(&boolean2());
        let f = formal_pv(&lat).unwrap();
        let u = exponents(&[(1, 2), (-1, 2)]);
        assert!(specialize(&f, &u).unwrap().is_zero());

        let single = parse_arrangement(2, &[vec![1, 0]]).unwrap();
        let lat1 = edge_lattice(&single);
        let f1 = formal_pv(&lat1).unwrap();
        let u1 = ExponentVector::new(vec![rat(-1, 1)]);
        assert!(specialize(&f1, &u1).unwrap().is_zero());
    }

    #[test]
    fn substitution_guards() {
        let lat = edge_lattice(&pencil3());
        let f = formal_pv(&lat).unwrap();
        // b = 0 on the second line.
        assert!(matches!(
            specialize(&f, &exponents(&[(1, 1), (0, 1), (0, 1)])),
            Err(Error::LogarithmicPole { .. })
        ));
        // Exponent sum must be d - n - 1 = 1.
        assert!(matches!(
            specialize(&f, &exponents(&[(1, 2), (1, 4), (1, 2)])),
            Err(Error::DegreeCondition { .. })
        ));
        // Arity mismatch.
        assert!(matches!(
            specialize(&f, &exponents(&[(1, 2), (1, 2)])),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
