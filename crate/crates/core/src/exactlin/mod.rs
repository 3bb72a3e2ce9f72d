//! Exact linear algebra over the Gaussian rationals Q(i).
//!
//! Everything downstream is built on these primitives. Bases are always kept
//! in reduced row echelon form so derived objects are deterministic.

mod forms;
mod matrix;
mod scalar;
mod subspace;

pub use forms::{
    hermitian_definiteness, is_positive_definite, leading_minors, symmetric_signature,
    Definiteness, Inertia,
};
pub use matrix::{
    add_vectors, axpy, conj_vector, is_zero_vector, rref, scale_vector, solve, sub_vectors,
    unit_vector, zero_vector, Matrix, Vector,
};
pub use scalar::Scalar;
pub use subspace::{image, kernel, kernel_image, quotient_cohomology, Subspace};
