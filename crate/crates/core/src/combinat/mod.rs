//! Variable sets, multidegrees, monomial ideals and the simplicial complexes
//! built from them.

mod complex;
mod ideal;
mod monomial;
mod varset;

pub use complex::{
    delta_alpha, stanley_reisner_complex, t_complex, ComplexKind, SimplicialComplex,
};
pub use ideal::{minimalize, MonomialIdeal};
pub use monomial::{default_names, Monomial, MultiDegree};
pub use varset::{maximal_elements, minimal_elements, VarSet, MAX_VARS};
