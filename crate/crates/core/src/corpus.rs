//! A gallery of named arrangements exercising every structural regime:
//! products (decomposable), degenerate centers (non-essential), and
//! essential indecomposable examples. The rosters drive the integration and
//! acceptance suites and double as ready-made demo inputs.

use crate::arrangement::{parse_arrangement, Arrangement};

/// The coordinate arrangement `x_1, ..., x_n` in `C^n`.
pub fn boolean(n: usize) -> Arrangement {
    let normals: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut row = vec![0i64; n];
            row[i] = 1;
            row
        })
        .collect();
    parse_arrangement(n, &normals).expect("coordinate normals are valid")
}

/// `d >= 2` distinct lines through the origin of the plane:
/// `x, y, x + y, x + 2y, ...`.
pub fn pencil(d: usize) -> Arrangement {
    assert!(d >= 2, "a pencil needs at least two lines");
    let mut normals = vec![vec![1, 0], vec![0, 1]];
    for k in 1..=(d - 2) as i64 {
        normals.push(vec![1, k]);
    }
    parse_arrangement(2, &normals).expect("pencil normals are distinct")
}

/// `d` hyperplanes in general position in `C^(n+1)`: the normal of the
/// `i`-th is the power row `(1, i, i^2, ..., i^n)`, so any `n + 1` of them
/// form an invertible Vandermonde matrix.
pub fn generic(n: usize, d: usize) -> Arrangement {
    let normals: Vec<Vec<i64>> = (0..d as i64)
        .map(|i| (0..=n as u32).map(|p| i.pow(p)).collect())
        .collect();
    parse_arrangement(n + 1, &normals).expect("power rows are pairwise distinct")
}

/// The product arrangement: both factors placed block-diagonally in the
/// direct sum of their ambient spaces.
pub fn product(a: &Arrangement, b: &Arrangement) -> Arrangement {
    let total = a.ambient_dim() + b.ambient_dim();
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(a.count() + b.count());
    for normal in a.normals() {
        let mut row: Vec<i64> = normal.iter().map(int64).collect();
        row.resize(total, 0);
        rows.push(row);
    }
    for normal in b.normals() {
        let mut row = vec![0i64; a.ambient_dim()];
        row.extend(normal.iter().map(int64));
        rows.push(row);
    }
    parse_arrangement(total, &rows).expect("block-diagonal normals stay distinct")
}

/// The same hyperplanes viewed in a larger ambient space (extra trailing
/// coordinates on which nothing depends); non-essential once `extra > 0`.
pub fn embed(a: &Arrangement, extra: usize) -> Arrangement {
    let total = a.ambient_dim() + extra;
    let rows: Vec<Vec<i64>> = a
        .normals()
        .iter()
        .map(|normal| {
            let mut row: Vec<i64> = normal.iter().map(int64).collect();
            row.resize(total, 0);
            row
        })
        .collect();
    parse_arrangement(total, &rows).expect("padded normals stay distinct")
}

fn int64(x: &num_bigint::BigInt) -> i64 {
    i64::try_from(x).expect("corpus normals fit machine integers")
}

/// `x, y, z, w, x+y, y+z, z+w` in `C^4`: essential and indecomposable, with
/// a deep nest of edges; its multiplicity grid at bound 3 exceeds the
/// exhaustive witness-scan limit, so it exercises the sampling path.
pub fn chain7() -> Arrangement {
    parse_arrangement(
        4,
        &[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
        ],
    )
    .expect("chain normals are distinct")
}

/// Ten essential product arrangements (their integrals vanish identically).
pub fn decomposable_corpus() -> Vec<(String, Arrangement)> {
    let line = boolean(1);
    let pencil3_b = parse_arrangement(2, &[vec![1, 0], vec![0, 1], vec![1, 2]])
        .expect("pencil normals are distinct");
    let pencil3_c = parse_arrangement(2, &[vec![1, 0], vec![0, 1], vec![2, 3]])
        .expect("pencil normals are distinct");
    vec![
        ("boolean2".into(), boolean(2)),
        ("boolean3".into(), boolean(3)),
        ("boolean4".into(), boolean(4)),
        ("pencil3 x line".into(), product(&pencil(3), &line)),
        ("pencil3b x line".into(), product(&pencil3_b, &line)),
        ("pencil3c x line".into(), product(&pencil3_c, &line)),
        ("pencil4 x line".into(), product(&pencil(4), &line)),
        ("pencil5 x line".into(), product(&pencil(5), &line)),
        ("pencil6 x line".into(), product(&pencil(6), &line)),
        ("pencil3 x boolean2".into(), product(&pencil(3), &boolean(2))),
    ]
}

/// Six arrangements whose hyperplanes share a positive-dimensional
/// subspace (their integrals vanish identically).
pub fn non_essential_corpus() -> Vec<(String, Arrangement)> {
    vec![
        ("line in the plane".into(), embed(&boolean(1), 1)),
        ("plane in space".into(), embed(&boolean(1), 2)),
        ("pencil3 planes".into(), embed(&pencil(3), 1)),
        ("pencil4 planes".into(), embed(&pencil(4), 1)),
        ("boolean2 in space".into(), embed(&boolean(2), 1)),
        ("generic pair in dim 4".into(), generic(3, 2)),
    ]
}

/// Five essential indecomposable arrangements (nonvanishing regime).
pub fn essential_indecomposable_corpus() -> Vec<(String, Arrangement)> {
    vec![
        ("pencil3".into(), pencil(3)),
        ("pencil4".into(), pencil(4)),
        ("pencil5".into(), pencil(5)),
        (
            "coordinates plus diagonal".into(),
            parse_arrangement(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]])
                .expect("normals are distinct"),
        ),
        (
            "coordinates plus two sums".into(),
            parse_arrangement(
                3,
                &[
                    vec![1, 0, 0],
                    vec![0, 1, 0],
                    vec![0, 0, 1],
                    vec![1, 1, 0],
                    vec![1, 0, 1],
                ],
            )
            .expect("normals are distinct"),
        ),
    ]
}

/// Every corpus arrangement with its label, across all three rosters.
pub fn full_corpus() -> Vec<(String, Arrangement)> {
    let mut out = decomposable_corpus();
    out.extend(non_essential_corpus());
    out.extend(essential_indecomposable_corpus());
    out
}
