//! Exact arithmetic for divided-difference operators and the polynomial bases
//! they generate.
//!
//! The crate covers the classical operators `s_i`, `∂_i`, `π_i`, `θ_i`, their
//! quasisymmetric counterparts built on Hivert's action `s̃_i`, seven basis
//! families (key, Demazure atom, Schubert, Schur, fundamental slide,
//! fundamental atom, Gessel fundamental), change of basis into the slide and
//! fundamental atom bases, and three combinatorial product rules. Every
//! identity can be checked against plain monomial arithmetic through
//! [`verify`].

pub mod basis;
pub mod cli;
pub mod composition;
pub mod error;
pub mod expansion;
pub mod operator;
pub mod permutation;
pub mod polynomial;
pub mod product;
pub mod verify;

pub use basis::BasisFamily;
pub use composition::Composition;
pub use error::{Error, Result};
pub use expansion::BasisExpansion;
pub use operator::OperatorKind;
pub use permutation::{Action, Permutation, ReducedWord};
pub use polynomial::Polynomial;
