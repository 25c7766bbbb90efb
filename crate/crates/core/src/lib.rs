//! Exact multigraded local cohomology `H^i_B(R)` and `Ext^i_R(R/B, R)` for
//! monomial ideals `B` in a polynomial ring `R = k[X_1, …, X_n]`, computed
//! through reduced cohomology of simplicial complexes, with a Taylor
//! resolution oracle for cross-checking.

pub mod combinat;
pub mod engine;
pub mod error;
pub mod field;
pub mod homology;
pub mod localcoh;
pub mod matrix;
pub mod random;
pub mod structure;
pub mod taylor;
pub mod verify;

pub use combinat::{
    default_names, delta_alpha, stanley_reisner_complex, t_complex, ComplexKind, Monomial,
    MonomialIdeal, MultiDegree, SimplicialComplex, VarSet, MAX_VARS,
};
pub use engine::Engine;
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
pub use homology::{CochainComplex, CohomologyBasis};
pub use localcoh::{BettiTable, GradedModule, GradedPiece, HilbertTerm};
pub use matrix::Matrix;
pub use random::IdealSampler;
pub use structure::{
    BettiDiagram, BettiInequalityReport, BettiInequalityRow, FiltrationReport, PrimeIdealSet,
};
pub use taylor::{
    build_taylor, ext_via_taylor, tor_via_taylor, StabilizationReport, TaylorComplex,
};
pub use verify::{verify_ideal, CheckOutcome, VerifyOptions, VerifyReport};
