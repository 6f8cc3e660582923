//! Central hyperplane arrangements, their edge lattices, and quotients.
//!
//! An arrangement is a finite set of hyperplanes through the origin of
//! `C^N`, each recorded by a primitive integer normal vector (content 1,
//! first nonzero entry positive). The *edges* are the intersections of
//! nonempty subsets of hyperplanes; ordered by inclusion they form the
//! intersection lattice that drives every class and integral computation in
//! this crate.
//!
//! Edges are represented canonically in two dual ways: `basis` is the
//! reduced row echelon spanning set of the edge itself, and `eq` is the
//! reduced row echelon basis of the span of the normals vanishing on it.
//! The set `containing` of hyperplane indices through an edge determines the
//! edge uniquely, so poset queries reduce to subset tests.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratmat::{
    dot_int_rat, in_rowspace, nullspace, primitive_integer, rref, Rat,
};

/// A central arrangement of `d >= 1` distinct hyperplanes in `C^N`.
///
/// Normals keep their input order; exponent vectors and multiplicity vectors
/// elsewhere in the crate index hyperplanes by that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    ambient_dim: usize,
    normals: Vec<Vec<BigInt>>,
}

/// Validates raw integer normals and builds an [`Arrangement`].
///
/// Each normal is scaled to content 1 with positive leading entry; zero
/// normals, length mismatches, and duplicate hyperplanes (after
/// canonicalization) are rejected.
pub fn parse_arrangement(ambient_dim: usize, raw_normals: &[Vec<i64>]) -> Result<Arrangement> {
    let rows: Vec<Vec<BigInt>> = raw_normals
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    Arrangement::from_integer_rows(ambient_dim, rows)
}

impl Arrangement {
    /// Validating constructor from arbitrary-precision integer rows.
    pub fn from_integer_rows(ambient_dim: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::DimensionMismatch(
                "ambient dimension must be at least 1".into(),
            ));
        }
        if rows.is_empty() {
            return Err(Error::DimensionMismatch(
                "an arrangement needs at least one hyperplane".into(),
            ));
        }
        let mut normals: Vec<Vec<BigInt>> = Vec::with_capacity(rows.len());
        for (index, row) in rows.into_iter().enumerate() {
            if row.len() != ambient_dim {
                return Err(Error::DimensionMismatch(format!(
                    "normal {} has length {}, expected {}",
                    index,
                    row.len(),
                    ambient_dim
                )));
            }
            let rational: Vec<Rat> = row.iter().map(|x| Rat::from_integer(x.clone())).collect();
            let Some(canon) = primitive_integer(&rational) else {
                return Err(Error::ZeroNormal { index });
            };
            if let Some(first) = normals.iter().position(|existing| *existing == canon) {
                return Err(Error::DuplicateHyperplane {
                    first,
                    second: index,
                });
            }
            normals.push(canon);
        }
        Ok(Arrangement {
            ambient_dim,
            normals,
        })
    }

    /// Internal constructor for already-canonical normals; permits the empty
    /// arrangement (`d = 0`), which arises as a quotient and has the full
    /// ambient space as its complement.
    pub(crate) fn from_canonical_parts(ambient_dim: usize, normals: Vec<Vec<BigInt>>) -> Self {
        debug_assert!(ambient_dim >= 1);
        Arrangement {
            ambient_dim,
            normals,
        }
    }

    /// Dimension `N` of the ambient space `C^N`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of hyperplanes `d`.
    pub fn count(&self) -> usize {
        self.normals.len()
    }

    /// `n = N - 1`, the dimension of the ambient projective space.
    pub fn projective_dim(&self) -> usize {
        self.ambient_dim - 1
    }

    /// The canonical primitive normals, in input order.
    pub fn normals(&self) -> &[Vec<BigInt>] {
        &self.normals
    }

    /// Rank of the normal matrix; the arrangement is essential iff this
    /// equals the ambient dimension.
    pub fn rank(&self) -> usize {
        rref(&self.normal_rows_rational()).len()
    }

    /// Normals as rational rows.
    pub(crate) fn normal_rows_rational(&self) -> Vec<Vec<Rat>> {
        self.normals
            .iter()
            .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect()
    }

    /// Order-insensitive identity used as a memoization key.
    pub(crate) fn canonical_key(&self) -> (usize, Vec<Vec<BigInt>>) {
        let mut sorted = self.normals.clone();
        sorted.sort();
        (self.ambient_dim, sorted)
    }
}

/// Whether the common intersection of all hyperplanes is the origin alone.
pub fn is_essential(arr: &Arrangement) -> bool {
    arr.rank() == arr.ambient_dim()
}

/// An edge of the lattice: a subspace obtained as an intersection of
/// hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    /// Codimension in the ambient space.
    pub codim: usize,
    /// Canonical (RREF) spanning rows of the edge subspace.
    pub basis: Vec<Vec<Rat>>,
    /// Canonical (RREF) basis of the span of normals vanishing on the edge.
    pub eq: Vec<Vec<Rat>>,
    /// Sorted indices of the hyperplanes containing the edge.
    pub containing: Vec<usize>,
}

impl Edge {
    /// Dimension of the edge subspace.
    pub fn dim(&self, ambient_dim: usize) -> usize {
        ambient_dim - self.codim
    }

    /// Compact rendering of the basis for error messages.
    pub fn basis_string(&self) -> String {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|row| {
                let entries: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                format!("({})", entries.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// A point of the extended intersection poset: the origin, a lattice edge,
/// or the full ambient space.
///
/// The origin and ambient space act as bottom and top markers even when they
/// are not intersections themselves (the origin is an edge only for
/// essential arrangements; the ambient space never is).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flat {
    Origin,
    Edge(usize),
    Ambient,
}

/// The intersection lattice of an arrangement.
///
/// Edges are stored in a deterministic order: by increasing codimension
/// (hyperplanes first, the deepest edge last), then lexicographically by
/// canonical basis.
#[derive(Clone, Debug)]
pub struct EdgeLattice {
    arrangement: Arrangement,
    edges: Vec<Edge>,
    origin_idx: Option<usize>,
    strictly_below: Vec<Vec<bool>>,
}

/// Enumerates all edges of the arrangement and assembles the lattice.
pub fn edge_lattice(arr: &Arrangement) -> EdgeLattice {
    EdgeLattice::new(arr)
}

impl EdgeLattice {
    /// Builds the lattice by iterated closure: starting from single
    /// hyperplanes, keep intersecting with hyperplanes until no new
    /// subspace appears.
    pub fn new(arr: &Arrangement) -> Self {
        let ncols = arr.ambient_dim();
        let normal_rows = arr.normal_rows_rational();
        let mut seen: HashSet<Vec<Vec<Rat>>> = HashSet::new();
        let mut queue: Vec<Vec<Vec<Rat>>> = Vec::new();
        for row in &normal_rows {
            let eq = rref(std::slice::from_ref(row));
            if seen.insert(eq.clone()) {
                queue.push(eq);
            }
        }
        let mut cursor = 0;
        while cursor < queue.len() {
            let eq = queue[cursor].clone();
            cursor += 1;
            for row in &normal_rows {
                if in_rowspace(&eq, row) {
                    continue;
                }
                let mut extended = eq.clone();
                extended.push(row.clone());
                let extended = rref(&extended);
                if seen.insert(extended.clone()) {
                    queue.push(extended);
                }
            }
        }

        let mut edges: Vec<Edge> = queue
            .into_iter()
            .map(|eq| {
                let containing: Vec<usize> = (0..arr.count())
                    .filter(|&i| in_rowspace(&eq, &normal_rows[i]))
                    .collect();
                let codim = eq.len();
                let basis = nullspace(&eq, ncols);
                Edge {
                    codim,
                    basis,
                    eq,
                    containing,
                }
            })
            .collect();
        edges.sort_by(|a, b| {
            a.codim
                .cmp(&b.codim)
                .then_with(|| a.basis.cmp(&b.basis))
        });

        let origin_idx = edges.iter().position(|e| e.codim == ncols);
        let m = edges.len();
        let mut strictly_below = vec![vec![false; m]; m];
        for i in 0..m {
            for j in 0..m {
                if i != j && is_strict_subset(&edges[j].containing, &edges[i].containing) {
                    // containing(i) strictly contains containing(j)
                    // iff edge i is strictly inside edge j.
                    strictly_below[i][j] = true;
                }
            }
        }

        EdgeLattice {
            arrangement: arr.clone(),
            edges,
            origin_idx,
            strictly_below,
        }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    /// All edges, including the origin when the arrangement is essential.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> &Edge {
        &self.edges[idx]
    }

    /// Index of the origin edge, when present.
    pub fn origin_idx(&self) -> Option<usize> {
        self.origin_idx
    }

    /// Indices of the candidate blowup centers: every edge except the
    /// origin. (The ambient space is represented by [`Flat::Ambient`], not
    /// by an edge, so it is excluded automatically.)
    pub fn s_indices(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| Some(i) != self.origin_idx)
            .collect()
    }

    /// Strict inclusion of edge subspaces.
    pub fn strictly_below(&self, i: usize, j: usize) -> bool {
        self.strictly_below[i][j]
    }

    /// Canonical spanning rows for any flat.
    pub fn flat_basis(&self, f: Flat) -> Vec<Vec<Rat>> {
        match f {
            Flat::Origin => Vec::new(),
            Flat::Edge(i) => self.edges[i].basis.clone(),
            Flat::Ambient => identity_rows(self.arrangement.ambient_dim()),
        }
    }

    /// Dimension of a flat.
    pub fn flat_dim(&self, f: Flat) -> usize {
        match f {
            Flat::Origin => 0,
            Flat::Edge(i) => self.arrangement.ambient_dim() - self.edges[i].codim,
            Flat::Ambient => self.arrangement.ambient_dim(),
        }
    }

    /// Checks that `chain` is a strictly increasing sequence of non-origin
    /// edges (the shape required of blowup-center chains).
    pub fn validate_chain(&self, chain: &[usize]) -> Result<()> {
        for &i in chain {
            if i >= self.edges.len() {
                return Err(Error::NotAChain(format!("edge index {i} out of range")));
            }
            if Some(i) == self.origin_idx {
                return Err(Error::NotAChain(
                    "chains must not contain the origin".into(),
                ));
            }
        }
        for pair in chain.windows(2) {
            if !self.strictly_below[pair[0]][pair[1]] {
                return Err(Error::NotAChain(format!(
                    "edge {} is not strictly contained in edge {}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(())
    }

    /// All nonempty strictly increasing chains of non-origin edges, in
    /// depth-first order (each chain listed before its extensions).
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let s = self.s_indices();
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<usize> = Vec::new();
        fn extend(
            lat: &EdgeLattice,
            s: &[usize],
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let last = *current.last().unwrap();
            for &j in s {
                if lat.strictly_below[last][j] {
                    current.push(j);
                    out.push(current.clone());
                    extend(lat, s, current, out);
                    current.pop();
                }
            }
        }
        for &i in &s {
            current.push(i);
            out.push(current.clone());
            extend(self, &s, &mut current, &mut out);
            current.pop();
        }
        out
    }
}

fn identity_rows(n: usize) -> Vec<Vec<Rat>> {
    use num_traits::One;
    (0..n)
        .map(|i| {
            let mut row = vec![Rat::zero(); n];
            row[i] = Rat::one();
            row
        })
        .collect()
}

/// Whether sorted slice `a` is a strict subset of sorted slice `b`.
fn is_strict_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

/// The induced arrangement on the quotient `W_high / W_low`.
///
/// Its hyperplanes are the images `(V_i ∩ W_high) / W_low` of the
/// hyperplanes containing `W_low` but not `W_high`, after deduplication.
/// Coordinates on the quotient come from a complement of `W_low` inside
/// `W_high`, and each image normal is scaled back to a primitive integer
/// vector, so the result is again a canonical [`Arrangement`] (possibly with
/// zero hyperplanes).
pub fn quotient_arrangement(lat: &EdgeLattice, low: Flat, high: Flat) -> Result<Arrangement> {
    let dim_low = lat.flat_dim(low);
    let dim_high = lat.flat_dim(high);
    if dim_low >= dim_high {
        return Err(Error::NotNested(format!(
            "lower flat has dimension {dim_low}, upper flat has dimension {dim_high}"
        )));
    }
    let basis_low = lat.flat_basis(low);
    let basis_high = lat.flat_basis(high);
    for row in &basis_low {
        if !in_rowspace(&basis_high, row) {
            return Err(Error::NotNested(
                "lower flat is not contained in the upper flat".into(),
            ));
        }
    }
    let complement = crate::ratmat::complement_in(&basis_low, &basis_high);
    debug_assert_eq!(complement.len(), dim_high - dim_low);

    let mut images: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for normal in lat.arrangement().normals() {
        let vanishes_on_low = basis_low
            .iter()
            .all(|row| dot_int_rat(normal, row).is_zero());
        if !vanishes_on_low {
            continue;
        }
        let image: Vec<Rat> = complement.iter().map(|u| dot_int_rat(normal, u)).collect();
        if let Some(canon) = primitive_integer(&image) {
            images.insert(canon);
        }
    }
    Ok(Arrangement::from_canonical_parts(
        dim_high - dim_low,
        images.into_iter().collect(),
    ))
}

/// Whether the projective complement of the arrangement has nonzero Euler
/// characteristic; equivalently, whether the defining polynomial does not
/// split into factors in disjoint sets of coordinates.
pub fn is_indecomposable(arr: &Arrangement) -> bool {
    use num_traits::One;
    let class = crate::classes::projective_complement_class(arr);
    !class.eval_at(&BigInt::one()).is_zero()
}

/// Whether an edge is *dense*: the arrangement of hyperplanes through it,
/// viewed in the quotient of the ambient space by the edge, is
/// indecomposable. Dense edges are exactly the centers blown up by the
/// canonical log resolution.
pub fn is_dense_edge(lat: &EdgeLattice, edge_idx: usize) -> bool {
    let localized = quotient_arrangement(lat, Flat::Edge(edge_idx), Flat::Ambient)
        .expect("an edge is always strictly inside the ambient space");
    is_indecomposable(&localized)
}

/// The coefficient `b_W = codim(W) + Σ_{W ⊆ V_i} (a_i - 1)` attached to an
/// edge by an exponent vector `a`.
pub fn b_coefficient(lat: &EdgeLattice, edge_idx: usize, a: &[Rat]) -> Rat {
    let edge = &lat.edges[edge_idx];
    let mut b = Rat::from_integer(BigInt::from(edge.codim as i64));
    for &i in &edge.containing {
        b += &a[i] - Rat::from_integer(BigInt::from(1));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::rat;

    fn pencil3() -> Arrangement {
        // x, y, x + y: three concurrent lines in C^2.
        parse_arrangement(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn parsing_canonicalizes_and_validates() {
        let arr = parse_arrangement(2, &[vec![-2, 0], vec![0, 3]]).unwrap();
        assert_eq!(arr.normals()[0], vec![BigInt::from(1), BigInt::from(0)]);
        assert_eq!(arr.normals()[1], vec![BigInt::from(0), BigInt::from(1)]);

        assert_eq!(
            parse_arrangement(2, &[vec![0, 0]]),
            Err(Error::ZeroNormal { index: 0 })
        );
        assert_eq!(
            parse_arrangement(2, &[vec![1, 1], vec![-3, -3]]),
            Err(Error::DuplicateHyperplane { first: 0, second: 1 })
        );
        assert!(matches!(
            parse_arrangement(2, &[vec![1, 0, 0]]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            parse_arrangement(2, &[]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn pencil_lattice() {
        let lat = edge_lattice(&pencil3());
        // Three lines and the origin.
        assert_eq!(lat.edges().len(), 4);
        assert_eq!(lat.s_indices().len(), 3);
        let origin = lat.origin_idx().unwrap();
        assert_eq!(lat.edge(origin).codim, 2);
        assert_eq!(lat.edge(origin).containing, vec![0, 1, 2]);
        // Every line strictly contains the origin.
        for &i in &lat.s_indices() {
            assert!(lat.strictly_below(origin, i));
            assert!(!lat.strictly_below(i, origin));
        }
    }

    #[test]
    fn boolean_lattice_in_c3() {
        let arr = parse_arrangement(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let lat = edge_lattice(&arr);
        // 3 planes, 3 axes, origin.
        assert_eq!(lat.edges().len(), 7);
        assert_eq!(lat.s_indices().len(), 6);
        // Chains: 6 singletons, axis-in-plane pairs (each axis lies in 2
        // planes): 6 pairs; no longer chains within S.
        assert_eq!(lat.chains().len(), 12);
    }

    #[test]
    fn generic_lines_have_no_origin_chains() {
        // Two generic lines in C^2 meet only at the origin, which is not a
        // candidate center.
        let arr = parse_arrangement(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let lat = edge_lattice(&arr);
        assert_eq!(lat.edges().len(), 3);
        // Lattice order puts the two codimension-1 lines first, so the only
        // chains are the two singletons.
        assert_eq!(lat.chains(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn quotients_restrict_and_localize() {
        let lat = edge_lattice(&pencil3());
        // Restriction to the whole space returns the arrangement itself.
        let whole = quotient_arrangement(&lat, Flat::Origin, Flat::Ambient).unwrap();
        assert_eq!(whole.count(), 3);
        assert_eq!(whole.ambient_dim(), 2);

        // Quotient by a line: the other two lines collapse to one point of
        // the 1-dimensional quotient... they map to nonzero normals which
        // may or may not coincide.
        let line = lat.s_indices()[0];
        let loc = quotient_arrangement(&lat, Flat::Edge(line), Flat::Ambient).unwrap();
        assert_eq!(loc.ambient_dim(), 1);
        assert_eq!(loc.count(), 1);

        // Restriction to a line: the two other lines cut the origin.
        let res = quotient_arrangement(&lat, Flat::Origin, Flat::Edge(line)).unwrap();
        assert_eq!(res.ambient_dim(), 1);
        assert_eq!(res.count(), 1);

        // Non-nested flats are rejected.
        let l2 = lat.s_indices()[1];
        assert!(matches!(
            quotient_arrangement(&lat, Flat::Edge(line), Flat::Edge(l2)),
            Err(Error::NotNested(_))
        ));
        assert!(matches!(
            quotient_arrangement(&lat, Flat::Ambient, Flat::Origin),
            Err(Error::NotNested(_))
        ));
    }

    #[test]
    fn essentiality() {
        assert!(is_essential(&pencil3()));
        let non_essential = parse_arrangement(3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert!(!is_essential(&non_essential));
    }

    #[test]
    fn b_coefficients_on_the_pencil() {
        let lat = edge_lattice(&pencil3());
        let a = vec![rat(1, 2), rat(1, 4), rat(1, 4)];
        // On a line V_i, b = a_i.
        for &i in &lat.s_indices() {
            let edge = lat.edge(i);
            assert_eq!(edge.codim, 1);
            let b = b_coefficient(&lat, i, &a);
            assert_eq!(b, a[edge.containing[0]].clone());
        }
        // At the origin, b = 2 + (a_1 + a_2 + a_3 - 3) = 0 under the degree
        // condition sum(a) = d - n - 1 = 1.
        let origin = lat.origin_idx().unwrap();
        assert!(b_coefficient(&lat, origin, &a).is_zero());
    }
}
