//! Exact linear algebra over the rationals.
//!
//! Subspaces of the ambient space are represented throughout the crate by
//! their *canonical reduced row echelon* spanning sets: pivots equal to 1,
//! pivot columns cleared, zero rows dropped, rows sorted by pivot column.
//! Two subspaces are equal iff their canonical matrices are equal, which
//! gives cheap hashing, ordering, and deduplication.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact scalar used for all subspace computations.
pub type Rat = BigRational;

/// Convenience constructor for small integer rationals.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Convenience constructor for a small fraction `n / d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical reduced row echelon form.
///
/// Returns the nonzero rows, each scaled so its leading entry is 1, with all
/// pivot columns cleared and rows ordered by pivot column.
pub fn rref(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut work: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = work.first().map_or(0, Vec::len);
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut row_cursor = 0usize;
    for col in 0..ncols {
        // Find a row with a nonzero entry in `col` at or below the cursor.
        let Some(found) = (row_cursor..work.len()).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(row_cursor, found);
        let inv = work[row_cursor][col].clone();
        for entry in work[row_cursor].iter_mut() {
            *entry = &*entry / &inv;
        }
        for r in 0..work.len() {
            if r != row_cursor && !work[r][col].is_zero() {
                let factor = work[r][col].clone();
                let pivot_row = work[row_cursor].clone();
                for (entry, pivot_entry) in work[r].iter_mut().zip(&pivot_row) {
                    let delta = &factor * pivot_entry;
                    *entry = &*entry - delta;
                }
            }
        }
        pivot_rows.push(row_cursor);
        row_cursor += 1;
    }
    work.truncate(row_cursor);
    work
}

/// Reduces `v` against an RREF basis, returning the residual vector.
///
/// The residual is zero iff `v` lies in the row space.
pub fn reduce_against(basis: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    let mut res = v.to_vec();
    for row in basis {
        let pivot = row
            .iter()
            .position(|x| !x.is_zero())
            .expect("RREF basis rows are nonzero");
        if !res[pivot].is_zero() {
            let factor = res[pivot].clone();
            for (r, b) in res.iter_mut().zip(row.iter()) {
                let delta = &factor * b;
                *r = &*r - delta;
            }
        }
    }
    res
}

/// Whether `v` lies in the span of an RREF basis.
pub fn in_rowspace(basis: &[Vec<Rat>], v: &[Rat]) -> bool {
    reduce_against(basis, v).iter().all(Zero::is_zero)
}

/// Canonical basis (RREF) of the solution space of `rows · x = 0`.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let reduced = rref(rows);
    let mut pivots = vec![None::<usize>; ncols];
    let mut pivot_cols: Vec<usize> = Vec::new();
    for (i, row) in reduced.iter().enumerate() {
        let p = row.iter().position(|x| !x.is_zero()).unwrap();
        pivots[p] = Some(i);
        pivot_cols.push(p);
    }
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for free in 0..ncols {
        if pivots[free].is_some() {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (&p, row_idx) in pivot_cols.iter().zip(0..) {
            let row: &Vec<Rat> = &reduced[row_idx];
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    rref(&basis)
}

/// Extends the RREF basis `inner` to a basis of the row space of `outer`,
/// returning only the added vectors (taken from the rows of `outer`).
///
/// Requires span(inner) ⊆ span(outer); the added vectors then satisfy
/// span(inner ∪ added) = span(outer).
pub fn complement_in(inner: &[Vec<Rat>], outer: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut accumulated: Vec<Vec<Rat>> = inner.to_vec();
    let mut added: Vec<Vec<Rat>> = Vec::new();
    for row in outer {
        let mut candidate = accumulated.clone();
        candidate.push(row.clone());
        let candidate = rref(&candidate);
        if candidate.len() > accumulated.len() {
            accumulated = candidate;
            added.push(row.clone());
        }
    }
    added
}

/// Intersection of two subspaces given by RREF spanning sets, as an RREF
/// spanning set. Both live in a space of dimension `ncols`.
pub fn subspace_intersection(a: &[Vec<Rat>], b: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    // Convert each span to constraint form (its orthogonal complement with
    // respect to the standard bilinear form), concatenate the constraints,
    // and solve.
    let mut constraints = nullspace(a, ncols);
    constraints.extend(nullspace(b, ncols));
    nullspace(&constraints, ncols)
}

/// Scales a rational vector to a primitive integer vector (content 1) whose
/// first nonzero entry is positive. Returns `None` for the zero vector.
pub fn primitive_integer(v: &[Rat]) -> Option<Vec<BigInt>> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let mut denom_lcm = BigInt::one();
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    let sign_fix = ints.iter().find(|x| !x.is_zero()).unwrap().is_negative();
    let scale = if sign_fix { -content } else { content };
    Some(ints.iter().map(|x| x / &scale).collect())
}

/// Dot product of an integer vector with a rational vector.
pub fn dot_int_rat(a: &[BigInt], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .sum()
}

/// Inverse of a square rational matrix via Gauss–Jordan elimination;
/// `None` if singular.
pub fn invert_square(rows: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            assert_eq!(r.len(), n, "matrix must be square");
            let mut row = r.clone();
            for j in 0..n {
                row.push(if i == j { rat_int(1) } else { Rat::zero() });
            }
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            let lead = m[col].clone();
            for (x, l) in m[r].iter_mut().zip(lead.iter()) {
                *x = &*x - &(&factor * l);
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| rat_int(v)).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let a = rref(&[rv(&[2, 4, 0]), rv(&[1, 2, 1])]);
        let b = rref(&[rv(&[1, 2, 1]), rv(&[3, 6, 1])]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        assert_eq!(a[0], rv(&[1, 2, 0]));
        assert_eq!(a[1], rv(&[0, 0, 1]));
    }

    #[test]
    fn nullspace_solves() {
        let rows = vec![rv(&[1, 1, 1])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: Rat = v.iter().zip(rows[0].iter()).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn membership_and_complement() {
        let basis = rref(&[rv(&[1, 0, 1])]);
        assert!(in_rowspace(&basis, &rv(&[2, 0, 2])));
        assert!(!in_rowspace(&basis, &rv(&[1, 1, 0])));
        let outer = rref(&[rv(&[1, 0, 1]), rv(&[0, 1, 0])]);
        let added = complement_in(&basis, &outer);
        assert_eq!(added.len(), 1);
    }

    #[test]
    fn intersection_of_planes() {
        let a = rref(&[rv(&[1, 0, 0]), rv(&[0, 1, 0])]);
        let b = rref(&[rv(&[0, 1, 0]), rv(&[0, 0, 1])]);
        let i = subspace_intersection(&a, &b, 3);
        assert_eq!(i, rref(&[rv(&[0, 1, 0])]));
    }

    #[test]
    fn primitive_scaling() {
        // Content is divided out and the first nonzero entry is made
        // positive, so both sign variants land on the same normal.
        let v = vec![rat(-2, 3), rat(4, 3)];
        let v2 = vec![rat(2, 3), rat(-4, 3)];
        let expect = Some(vec![BigInt::from(1), BigInt::from(-2)]);
        assert_eq!(primitive_integer(&v), expect);
        assert_eq!(primitive_integer(&v2), expect);
        assert_eq!(primitive_integer(&[Rat::zero()]), None);
    }
}
