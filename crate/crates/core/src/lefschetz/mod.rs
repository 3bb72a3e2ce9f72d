//! Polarized Lefschetz and Hodge theory on a finite bigraded algebra.
//!
//! [`Lefschetz`] fixes a class `ω` in the Kähler cone and caches the powers
//! of `L`. Everything else (primitive decomposition, `Λ`, `Q`, `T`) goes
//! through it; the free functions are one-shot wrappers.

mod algebra;
mod frobenius;
mod hodge;
mod polarization;
mod sl2;
mod validate;

pub use algebra::{BasisElement, BigradedAlgebra, Terms};
pub use frobenius::{frobenius_check, DegreeVerdict, FrobeniusReport};
pub use hodge::{
    conj_subspace, hodge_filtration, hodge_signature, hodge_signature_formula,
    middle_intersection_gram, serre_pairing_check, HodgeFiltration, HodgeSignature,
};
pub use polarization::{hodge_inner_product, polarization_form, weil_operator};
pub use sl2::{
    counting_operator, dual_lefschetz, kahler_cone_membership, lefschetz_operator,
    primitive_decompose, primitive_subspace, ConeMode, Lefschetz, SL2Triple,
};
pub use validate::{is_product_model, validate_algebra, validate_product_algebra};
