//! Exact motivic principal-value integrals for central hyperplane
//! arrangements.
//!
//! Everything in this crate is computed symbolically over the integers and
//! rationals — no floating point anywhere. The main entry points, layer by
//! layer:
//!
//! * [`arrangement`]: central arrangements, edge lattices, quotients, and
//!   the combinatorial predicates (essential, indecomposable, dense edges).
//! * [`classes`]: classes of complements and blowup strata in `Z[L]`, where
//!   `L` is the class of the affine line.
//! * [`puiseux`]: exact rational functions in a root `t = L^(1/q)`, the
//!   value ring for principal-value integrals.
//! * [`pv`]: the principal-value integral of a multivalued form attached to
//!   an exponent vector, its closed-stratum cross-check, power-series
//!   expansion, combinatorial chain count, the closed form for generic
//!   arrangements, and the search for positive exponent vectors.
//! * [`formal`]: the same integral with symbolic exponents, as a Laurent
//!   fraction over the group ring of the exponent lattice; vanishing and
//!   pole certificates live here.
//! * [`zeta`]: residue computations for the motivic zeta function of an
//!   arrangement polynomial with multiplicities, and genericity checks.
//! * [`corpus`]: named example arrangements used by tests and benchmarks.
//! * [`sampling`]: deterministic random draws of admissible exponents.

pub mod arrangement;
pub mod classes;
pub mod corpus;
pub mod error;
pub mod formal;
pub mod puiseux;
pub mod pv;
pub mod ratmat;
pub mod sampling;
pub mod zeta;

pub use arrangement::{
    b_coefficient, edge_lattice, is_dense_edge, is_essential, is_indecomposable,
    parse_arrangement, quotient_arrangement, Arrangement, Edge, EdgeLattice, Flat,
};
pub use classes::{
    affine_complement_class, chain_stratum_class, euler_characteristic,
    projective_complement_class, resolution_class, union_class, LPoly,
};
pub use corpus::{
    boolean, chain7, decomposable_corpus, embed, essential_indecomposable_corpus, full_corpus,
    generic, non_essential_corpus, pencil, product,
};
pub use error::{Error, Result};
pub use formal::{
    formal_is_zero, formal_pv, is_pole, linearly_independent, melem_for_edge, specialize,
    try_reduce_to_polynomial, FormalFraction, LaurentMulti, MElem,
};
pub use puiseux::{cyclotomic, PuiseuxRational, ZPoly};
pub use pv::{
    binom_int, construct_positive_a, delta_chain_count, f_inner_sum, g_identity,
    generic_closed_form, pv_integral, pv_integral_closed_form_check, pv_lift_series,
    series_constant_term, ExponentVector,
};
pub use ratmat::Rat;
pub use sampling::{exponent_draws, sample_exponents};
pub use zeta::{
    genericity_witness_search, nd_pole_check, residue_exponents, MultiplicityVector, NdPoleCheck,
    ResidueExponents, WitnessSearchReport,
};
