//! Exact arithmetic in `Q(t)` with `t = L^(1/q)`.
//!
//! Principal-value integrals are rational functions of a root `t` of the
//! Lefschetz class, with a very particular shape: every denominator that can
//! ever arise is a product of binomials `t^k - 1` and powers of `t`. This
//! module exploits that shape:
//!
//! * [`ZPoly`] is a dense integer polynomial in `t` with exact division
//!   helpers (synthetic division by `t^k - 1`, long division by monic
//!   divisors, exponent folding modulo `t^k - 1`).
//! * [`cyclotomic`] produces the cyclotomic polynomials `Phi_k`, memoized;
//!   since `t^k - 1 = prod over j | k of Phi_j` and each `Phi_j` is
//!   irreducible, cancelling cyclotomic factors one at a time fully reduces
//!   any fraction whose denominator is a product of such binomials.
//! * [`PuiseuxRational`] stores `t^shift * num / prod Phi_j^mult` with the
//!   numerator coprime to the denominator — an exactly reduced element of
//!   `Q(t)` whose denominator is monic. Equality is decided by exact
//!   cross-multiplication, with the root order aligned first, so values are
//!   invariant under refining `q`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial in `t` (index = exponent, trailing zeros
/// trimmed).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZPoly {
    c: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly {
            c: vec![BigInt::one()],
        }
    }

    /// `coeff * t^k`.
    pub fn monomial(k: usize, coeff: BigInt) -> Self {
        if coeff.is_zero() {
            return ZPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = coeff;
        ZPoly { c }
    }

    /// `t^k - 1` for `k >= 1`.
    pub fn binomial(k: usize) -> Self {
        assert!(k >= 1);
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] = -BigInt::one();
        c[k] = BigInt::one();
        ZPoly { c }
    }

    pub fn from_coeffs(c: Vec<BigInt>) -> Self {
        let mut p = ZPoly { c };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(Zero::is_zero) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Smallest exponent with nonzero coefficient (`None` for 0).
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.c.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.c.last()
    }

    /// `self + scale * t^offset * other`.
    pub fn add_assign_scaled_shifted(&mut self, other: &ZPoly, scale: &BigInt, offset: usize) {
        if other.is_zero() || scale.is_zero() {
            return;
        }
        let needed = other.c.len() + offset;
        if self.c.len() < needed {
            self.c.resize(needed, BigInt::zero());
        }
        for (i, b) in other.c.iter().enumerate() {
            self.c[i + offset] += b * scale;
        }
        self.trim();
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out.add_assign_scaled_shifted(other, &BigInt::one(), 0);
        out
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out.add_assign_scaled_shifted(other, &BigInt::from(-1), 0);
        out
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly::from_coeffs(self.c.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, k: &BigInt) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly::from_coeffs(self.c.iter().map(|x| x * k).collect())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        ZPoly::from_coeffs(c)
    }

    /// Multiplication by `t^k - 1`, in place-friendly O(deg) form.
    pub fn mul_binomial(&self, k: usize) -> ZPoly {
        let mut out = ZPoly::zero();
        out.add_assign_scaled_shifted(self, &BigInt::one(), k);
        out.add_assign_scaled_shifted(self, &BigInt::from(-1), 0);
        out
    }

    /// Exponent folding: the remainder modulo `t^k - 1` (degree < k).
    pub fn fold_mod_binomial(&self, k: usize) -> ZPoly {
        let mut c = vec![BigInt::zero(); k];
        for (i, a) in self.c.iter().enumerate() {
            if !a.is_zero() {
                c[i % k] += a;
            }
        }
        ZPoly::from_coeffs(c)
    }

    /// Exact division by `t^k - 1`; `None` if not divisible. O(deg).
    pub fn try_div_binomial(&self, k: usize) -> Option<ZPoly> {
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let n = self.c.len();
        if n <= k {
            return None;
        }
        // self = Q * (t^k - 1): coefficients satisfy
        // self[j + k] = Q[j] - Q[j + k], so Q[j] = self[j + k] + Q[j + k]
        // descending from the top; the low part must then match -Q[0..k].
        let mut q = vec![BigInt::zero(); n - k];
        for j in (0..n - k).rev() {
            let upper = q.get(j + k).cloned().unwrap_or_else(BigInt::zero);
            q[j] = &self.c[j + k] + upper;
        }
        for i in 0..k {
            let expect = -q.get(i).cloned().unwrap_or_else(BigInt::zero);
            if self.c[i] != expect {
                return None;
            }
        }
        Some(ZPoly::from_coeffs(q))
    }

    /// Exact division by a monic (or `-1`-leading) divisor; `None` if a
    /// nonzero remainder appears.
    pub fn try_div_exact(&self, divisor: &ZPoly) -> Option<ZPoly> {
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let dd = divisor.degree().expect("divisor must be nonzero");
        let lead = divisor.leading().unwrap();
        assert!(
            lead.is_one() || (-lead).is_one(),
            "divisor must have unit leading coefficient"
        );
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let mut rem = self.c.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for j in (0..=nd - dd).rev() {
            let factor = if lead.is_one() {
                rem[j + dd].clone()
            } else {
                -rem[j + dd].clone()
            };
            if factor.is_zero() {
                continue;
            }
            quot[j] = factor.clone();
            for (i, dcoeff) in divisor.c.iter().enumerate() {
                if !dcoeff.is_zero() {
                    rem[j + i] -= &factor * dcoeff;
                }
            }
        }
        if rem.iter().all(Zero::is_zero) {
            Some(ZPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Substitution `t -> t^c`.
    pub fn scale_exponents(&self, c: usize) -> ZPoly {
        assert!(c >= 1);
        if c == 1 || self.is_zero() {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); (self.c.len() - 1) * c + 1];
        for (i, a) in self.c.iter().enumerate() {
            if !a.is_zero() {
                out[i * c] = a.clone();
            }
        }
        ZPoly::from_coeffs(out)
    }

    /// Drops a factor `t^v`, returning the shifted polynomial (requires
    /// valuation >= v).
    pub fn shr(&self, v: usize) -> ZPoly {
        if v == 0 || self.is_zero() {
            return self.clone();
        }
        debug_assert!(self.valuation().unwrap() >= v);
        ZPoly::from_coeffs(self.c[v..].to_vec())
    }

    pub fn eval_at(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.c.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate().rev() {
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
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{mag}*t^{k}")?,
            }
        }
        Ok(())
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Finds `count` pairs `(p, zeta)` with `p` prime, `p = 1 (mod j)`, and
/// `zeta` of multiplicative order exactly `j` modulo `p`.
fn primes_with_primitive_root(j: u64, count: usize) -> Vec<(u64, u64)> {
    let factors = prime_factors(j);
    let mut found = Vec::new();
    let mut m = 1u64;
    while found.len() < count {
        let p = m
            .checked_mul(j)
            .and_then(|x| x.checked_add(1))
            .expect("prime search overflow");
        m += 1;
        if !is_prime_u64(p) {
            continue;
        }
        let mut zeta = None;
        for g in 2..p {
            let z = powmod(g, (p - 1) / j, p);
            if z == 1 && j > 1 {
                continue;
            }
            if factors.iter().all(|&f| powmod(z, j / f, p) != 1) {
                zeta = Some(z);
                break;
            }
        }
        if let Some(z) = zeta {
            found.push((p, z));
        }
    }
    found
}

fn eval_mod(poly: &ZPoly, p: u64, x: u64) -> u64 {
    let pp = BigInt::from(p);
    let mut acc = 0u64;
    for c in poly.coeffs().iter().rev() {
        let c_mod = ((c % &pp) + &pp) % &pp;
        let c_u64 = u64::try_from(&c_mod).expect("residue fits in u64");
        acc = (mulmod(acc, x, p) + c_u64) % p;
    }
    acc
}

/// Exact test for `Phi_j | poly`.
///
/// For large `j`, evaluating at roots of `Phi_j` in a couple of prime fields
/// cheaply certifies the (typical) non-divisible case — if `Phi_j` divides
/// `poly` over the integers, every such evaluation is zero. Only when all
/// evaluations vanish is the answer confirmed by exact division.
fn divisible_by_cyclotomic(poly: &ZPoly, j: i64) -> bool {
    if poly.is_zero() {
        return true;
    }
    if j > 64 {
        for (p, zeta) in primes_with_primitive_root(j as u64, 2) {
            if eval_mod(poly, p, zeta) != 0 {
                return false;
            }
        }
        poly.try_div_exact(&cyclotomic(j)).is_some()
    } else {
        let folded = poly.fold_mod_binomial(j as usize);
        folded.is_zero() || folded.try_div_exact(&cyclotomic(j)).is_some()
    }
}

/// The `k`-th cyclotomic polynomial, memoized. Computed by the recursion
/// `Phi_k = (t^k - 1) / prod over proper divisors j of Phi_j`.
pub fn cyclotomic(k: i64) -> ZPoly {
    assert!(k >= 1);
    static CACHE: OnceLock<Mutex<HashMap<i64, ZPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("cyclotomic cache").get(&k) {
        return hit.clone();
    }
    let mut value = ZPoly::binomial(k as usize);
    for j in 1..=(k / 2) {
        if k % j == 0 {
            let phi = cyclotomic(j);
            value = value
                .try_div_exact(&phi)
                .expect("Phi_j divides t^k - 1 for j | k");
        }
    }
    cache.lock().expect("cyclotomic cache").insert(k, value.clone());
    value
}

/// A reduced element of `Q(t)`, `t = L^(1/q)`:
/// `t^shift * num / prod over (j, m) in den of Phi_j^m`, where `num` is an
/// integer polynomial with nonzero constant term (unless zero) sharing no
/// cyclotomic factor with the denominator.
///
/// Everything this crate constructs has a denominator dividing a product of
/// binomials `t^k - 1` and a power of `t`, so this factored form is fully
/// general here, and keeping the factors explicit makes reduction exact and
/// cheap. Use [`PuiseuxRational::den_expanded`] for the monic denominator
/// polynomial.
#[derive(Clone, Debug)]
pub struct PuiseuxRational {
    q: i64,
    shift: i64,
    num: ZPoly,
    den: BTreeMap<i64, u32>,
}

impl PuiseuxRational {
    pub fn zero() -> Self {
        PuiseuxRational {
            q: 1,
            shift: 0,
            num: ZPoly::zero(),
            den: BTreeMap::new(),
        }
    }

    pub fn from_integer(v: i64) -> Self {
        PuiseuxRational {
            q: 1,
            shift: 0,
            num: ZPoly::from_coeffs(vec![BigInt::from(v)]),
            den: BTreeMap::new(),
        }
    }

    /// Builds and fully reduces `t^shift * num / prod (t^k - 1)` over the
    /// multiset of binomial exponents `binoms`.
    ///
    /// Negative exponents are legal: `t^(-m) - 1 = -t^(-m) (t^m - 1)`, so
    /// each negative entry flips the sign of the numerator and raises the
    /// shift by `m`.
    pub fn from_fraction(q: i64, shift: i64, num: ZPoly, binoms: &[i64]) -> Self {
        assert!(q >= 1);
        let mut shift = shift;
        let mut num = num;
        let mut counts: BTreeMap<i64, u32> = BTreeMap::new();
        for &k in binoms {
            assert!(k != 0, "binomial exponent must be nonzero");
            if k < 0 {
                num = num.neg();
                shift += -k;
            }
            *counts.entry(k.abs()).or_insert(0) += 1;
        }
        if num.is_zero() {
            return PuiseuxRational::zero_with_q(q);
        }

        // Phase 1: cancel whole binomials (cheap synthetic divisions).
        for (&k, mult) in counts.iter_mut() {
            while *mult > 0 {
                match num.try_div_binomial(k as usize) {
                    Some(quotient) => {
                        num = quotient;
                        *mult -= 1;
                    }
                    None => break,
                }
            }
        }

        // Phase 2: split remaining binomials into cyclotomic factors and
        // cancel those individually (each is irreducible, so this reaches
        // the fully reduced form).
        let mut cyclo: BTreeMap<i64, u32> = BTreeMap::new();
        for (&k, &mult) in &counts {
            if mult == 0 {
                continue;
            }
            for j in 1..=k {
                if k % j == 0 {
                    *cyclo.entry(j).or_insert(0) += mult;
                }
            }
        }
        Self::new_reduced(q, shift, num, cyclo)
    }

    fn zero_with_q(q: i64) -> Self {
        PuiseuxRational {
            q,
            shift: 0,
            num: ZPoly::zero(),
            den: BTreeMap::new(),
        }
    }

    /// Reduces `t^shift * num / prod Phi_j^mult` to canonical form.
    fn new_reduced(q: i64, mut shift: i64, mut num: ZPoly, cyclo: BTreeMap<i64, u32>) -> Self {
        if num.is_zero() {
            return PuiseuxRational::zero_with_q(q);
        }
        let v = num.valuation().unwrap();
        shift += v as i64;
        num = num.shr(v);

        let mut den: BTreeMap<i64, u32> = BTreeMap::new();
        // Larger indices first: their cyclotomics have higher degree, so a
        // successful division shrinks the numerator fastest.
        for (&j, &mult) in cyclo.iter().rev() {
            if mult == 0 {
                continue;
            }
            let mut remaining = mult;
            while remaining > 0 && divisible_by_cyclotomic(&num, j) {
                num = num
                    .try_div_exact(&cyclotomic(j))
                    .expect("divisibility was just certified");
                remaining -= 1;
            }
            if remaining > 0 {
                den.insert(j, remaining);
            }
        }
        PuiseuxRational {
            q,
            shift,
            num,
            den,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Root order: the value is a rational function of `t = L^(1/q)`.
    pub fn q(&self) -> i64 {
        self.q
    }

    /// Power of `t` multiplying `num / den` (may be negative).
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    /// Cyclotomic factorization of the denominator: index -> multiplicity.
    pub fn den_factors(&self) -> &BTreeMap<i64, u32> {
        &self.den
    }

    /// The denominator as a monic polynomial (without the `t` power).
    pub fn den_expanded(&self) -> ZPoly {
        let mut d = ZPoly::one();
        for (&j, &mult) in &self.den {
            let phi = cyclotomic(j);
            for _ in 0..mult {
                d = d.mul(&phi);
            }
        }
        d
    }

    /// Numerator and monic denominator with the `t` power folded in, both
    /// plain polynomials: `(num * t^max(shift,0), den * t^max(-shift,0))`.
    pub fn as_num_den(&self) -> (ZPoly, ZPoly) {
        let den = self.den_expanded();
        if self.shift >= 0 {
            let mut shifted = ZPoly::zero();
            shifted.add_assign_scaled_shifted(&self.num, &BigInt::one(), self.shift as usize);
            (shifted, den)
        } else {
            let mut shifted = ZPoly::zero();
            shifted.add_assign_scaled_shifted(&den, &BigInt::one(), (-self.shift) as usize);
            (self.num.clone(), shifted)
        }
    }

    /// Scales the root order to a multiple: the same value expressed with
    /// `t' = L^(1/q')`, `q' = q * c`.
    pub fn refine_q(&self, c: i64) -> PuiseuxRational {
        assert!(c >= 1);
        if c == 1 {
            return self.clone();
        }
        if self.is_zero() {
            return PuiseuxRational::zero_with_q(self.q * c);
        }
        // Denominator factors do not rescale factor-by-factor, so refactor
        // each one: Phi_j(t^c) divides t^(jc) - 1, hence is a squarefree
        // product of cyclotomics with indices dividing j*c — recover them by
        // trial division.
        let mut cyclo: BTreeMap<i64, u32> = BTreeMap::new();
        for (&j, &mult) in &self.den {
            let mut rem = cyclotomic(j).scale_exponents(c as usize);
            for d in 1..=(j * c) {
                if (j * c) % d != 0 {
                    continue;
                }
                if let Some(qt) = rem.try_div_exact(&cyclotomic(d)) {
                    *cyclo.entry(d).or_insert(0) += mult;
                    rem = qt;
                }
                if rem.degree() == Some(0) {
                    break;
                }
            }
            assert_eq!(
                rem.degree(),
                Some(0),
                "rescaled cyclotomic must factor completely"
            );
            assert!(rem.coeff(0).is_one(), "rescaled cyclotomic is monic");
        }
        PuiseuxRational::new_reduced(
            self.q * c,
            self.shift * c,
            self.num.scale_exponents(c as usize),
            cyclo,
        )
    }

    /// Exact equality of values, aligning root orders first.
    pub fn eq_value(&self, other: &PuiseuxRational) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        let g = num_integer::lcm(self.q, other.q);
        let (c1, c2) = ((g / self.q) as usize, (g / other.q) as usize);
        let n1 = self.num.scale_exponents(c1);
        let d1 = self.den_expanded().scale_exponents(c1);
        let n2 = other.num.scale_exponents(c2);
        let d2 = other.den_expanded().scale_exponents(c2);
        let s1 = self.shift * c1 as i64;
        let s2 = other.shift * c2 as i64;
        // Compare t^s1 n1/d1 with t^s2 n2/d2 by cross-multiplication.
        let left = n1.mul(&d2);
        let right = n2.mul(&d1);
        let base = s1.min(s2);
        let mut left_sh = ZPoly::zero();
        left_sh.add_assign_scaled_shifted(&left, &BigInt::one(), (s1 - base) as usize);
        let mut right_sh = ZPoly::zero();
        right_sh.add_assign_scaled_shifted(&right, &BigInt::one(), (s2 - base) as usize);
        left_sh == right_sh
    }

    /// Sum of two values (root orders are aligned; the result is reduced).
    pub fn add(&self, other: &PuiseuxRational) -> PuiseuxRational {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let g = num_integer::lcm(self.q, other.q);
        let a = self.refine_q(g / self.q);
        let b = other.refine_q(g / other.q);
        // Common denominator: factor-wise max multiplicity.
        let mut common: BTreeMap<i64, u32> = a.den.clone();
        for (&j, &m) in &b.den {
            let e = common.entry(j).or_insert(0);
            *e = (*e).max(m);
        }
        let complement = |own: &BTreeMap<i64, u32>| -> ZPoly {
            let mut extra = ZPoly::one();
            for (&j, &m) in &common {
                let have = own.get(&j).copied().unwrap_or(0);
                for _ in 0..(m - have) {
                    extra = extra.mul(&cyclotomic(j));
                }
            }
            extra
        };
        let na = a.num.mul(&complement(&a.den));
        let nb = b.num.mul(&complement(&b.den));
        let base = a.shift.min(b.shift);
        let mut num = ZPoly::zero();
        num.add_assign_scaled_shifted(&na, &BigInt::one(), (a.shift - base) as usize);
        num.add_assign_scaled_shifted(&nb, &BigInt::one(), (b.shift - base) as usize);
        PuiseuxRational::new_reduced(g, base, num, common)
    }

    pub fn neg(&self) -> PuiseuxRational {
        PuiseuxRational {
            q: self.q,
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &PuiseuxRational) -> PuiseuxRational {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PuiseuxRational) -> PuiseuxRational {
        if self.is_zero() || other.is_zero() {
            return PuiseuxRational::zero_with_q(num_integer::lcm(self.q, other.q));
        }
        let g = num_integer::lcm(self.q, other.q);
        let a = self.refine_q(g / self.q);
        let b = other.refine_q(g / other.q);
        let mut den = a.den.clone();
        for (&j, &m) in &b.den {
            *den.entry(j).or_insert(0) += m;
        }
        PuiseuxRational::new_reduced(g, a.shift + b.shift, a.num.mul(&b.num), den)
    }

    /// Multiplies by `t^k`.
    pub fn mul_tpow(&self, k: i64) -> PuiseuxRational {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.shift += k;
        out
    }

    /// Coefficients of `t^0 .. t^(len-1)` of the Laurent expansion.
    ///
    /// Errors with [`Error::NegativeExponentDetected`] if the valuation is
    /// negative (the expansion would not lie in `Z[[t]]`).
    pub fn series_prefix(&self, len: usize) -> Result<Vec<BigInt>> {
        if self.is_zero() {
            return Ok(vec![BigInt::zero(); len]);
        }
        if self.shift < 0 {
            return Err(Error::NegativeExponentDetected {
                valuation: self.shift,
            });
        }
        let den = self.den_expanded();
        let d0 = den.coeff(0);
        assert!(
            d0.is_one() || (-&d0).is_one(),
            "denominator constant term is a unit"
        );
        let mut series = vec![BigInt::zero(); len];
        let shift = self.shift as usize;
        for i in 0..len.saturating_sub(shift) {
            let mut acc = self.num.coeff(i);
            for j in 1..=i.min(den.degree().unwrap_or(0)) {
                let dj = den.coeff(j);
                if !dj.is_zero() {
                    acc -= dj * &series[shift + i - j];
                }
            }
            // d0 is ±1, so this stays in Z.
            series[shift + i] = if d0.is_one() { acc } else { -acc };
        }
        Ok(series)
    }
}

impl PartialEq for PuiseuxRational {
    fn eq(&self, other: &Self) -> bool {
        self.eq_value(other)
    }
}
impl Eq for PuiseuxRational {}

impl fmt::Display for PuiseuxRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (num, den) = self.as_num_den();
        if den == ZPoly::one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num}) / ({den})")
        }
    }
}
