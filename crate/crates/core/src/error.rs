//! Shared error type.
//!
//! Every fallible operation in this crate returns [`Error`]. Variants are
//! grouped by the stage that raises them; messages carry enough context
//! (offending edge basis, expected vs. actual sums) to be serialized by a
//! front-end without further lookups.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A normal vector is identically zero.
    #[error("normal vector at position {index} is zero")]
    ZeroNormal { index: usize },

    /// Two normals define the same hyperplane (after sign/content
    /// canonicalization).
    #[error("hyperplanes {first} and {second} coincide after canonicalization")]
    DuplicateHyperplane { first: usize, second: usize },

    /// A vector has the wrong length, or an empty/invalid shape was supplied.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Interval endpoints passed to a quotient are not strictly nested.
    #[error("subspaces are not strictly nested: {0}")]
    NotNested(String),

    /// Exact division by (L - 1) left a remainder. This signals an upstream
    /// lattice bug and should never fire on a central arrangement.
    #[error("class is not divisible by L - 1: {0}")]
    NonDivisible(String),

    /// The given edges do not form a strictly increasing chain.
    #[error("not a chain: {0}")]
    NotAChain(String),

    /// A union-of-subspaces family is missing one of its pairwise
    /// intersections.
    #[error("family is not closed under intersection: {0}")]
    NotIntersectionClosed(String),

    /// Some edge has b = 0, i.e. the multivalued form has a logarithmic pole
    /// along the corresponding divisor and the principal value is undefined.
    #[error("logarithmic pole: b = 0 on the edge with basis {edge_basis}")]
    LogarithmicPole { edge_basis: String },

    /// The exponent vector does not satisfy the degree condition
    /// sum(a_i) = d - n - 1.
    #[error("degree condition violated: exponent sum is {got}, expected {expected}")]
    DegreeCondition { got: String, expected: String },

    /// A series that must lie in Z[[t]] produced a negative exponent.
    #[error("series has a negative t-exponent (valuation {valuation})")]
    NegativeExponentDetected { valuation: i64 },

    /// An exponent hit a forbidden value (0 or 1) for the generic closed form.
    #[error("exponent a_{index} = {value} must avoid 0 and 1")]
    InvalidExponent { index: usize, value: String },

    /// A multiplicity must be a positive integer.
    #[error("multiplicity m_{index} = {value} must be positive")]
    InvalidMultiplicity { index: usize, value: i64 },

    /// The arrangement's hyperplanes do not intersect in the origin alone.
    #[error("arrangement is not essential")]
    NotEssential,

    /// The arrangement splits into factors in disjoint coordinates
    /// (operationally: the projective complement has Euler characteristic 0).
    #[error("arrangement is decomposable")]
    Decomposable,

    /// The positive-exponent search exhausted its shrinking schedule.
    #[error("witness search exhausted its schedule: {0}")]
    WitnessSearchFailed(String),

    /// A symbolic exponent direction lies in Z, so it cannot be completed to
    /// a lattice basis together with 1.
    #[error("exponent direction is an integer: {0}")]
    IntegerDirection(String),

    /// The computation exceeds a hard implementation limit (e.g. the common
    /// root order does not fit in a machine integer).
    #[error("unsupported input scale: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
