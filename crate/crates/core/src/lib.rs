//! Exact Kähler–Lefschetz toolkit for finite-dimensional models of reduced
//! leafwise cohomology.
//!
//! * [`exactlin`]: linear algebra over Q(i).
//! * [`lefschetz`]: bigraded algebras, Lefschetz decomposition, sl2 triples,
//!   polarizations, signature and Hodge filtration.
//! * [`llgen`]: the Lie algebra generated by all `L_ω`, `Λ_ω`.
//! * [`gkcoh`]: relative Lie algebra cohomology with its (p,q) bigrading.
//! * [`assembler`]: Hodge diamonds from a finite mock spectrum.
//! * [`catalog`] and [`io`]: built-in models and the JSON file formats.

pub mod assembler;
pub mod catalog;
pub mod error;
pub mod exactlin;
pub mod gkcoh;
pub mod io;
pub mod lefschetz;
pub mod llgen;
pub mod report;

pub use error::{Error, Result};
