//! Exact-arithmetic Loday cohomology and deformations of Leibniz
//! superalgebras over the rationals.
//!
//! The crate represents finite-dimensional ℤ₂-graded Leibniz algebras by
//! structure constants, computes their cohomology (cocycles, coboundaries,
//! dimensions and bases) through the graded coboundary operator, and
//! constructs and validates the infinitesimal and linearly integrable
//! deformations of the null-filiform algebras `NF^n` and `NF^{n,m}`.
//!
//! Everything is computed over `ℚ` with arbitrary-precision rationals; there
//! is no floating point and every result is exact and deterministic.
//!
//! The main entry points:
//!
//! - [`catalog::nf_algebra`] / [`catalog::nf_superalgebra`]: the
//!   null-filiform catalog.
//! - [`SuperAlgebra`]: structure constants, the graded Leibniz identity
//!   checker, central series and generator certificates.
//! - [`bimodule::adjoint_module`] and [`bimodule::check_module_axioms`]:
//!   coefficient bimodules.
//! - [`cohomology::cohomology`], [`cohomology::derivations`],
//!   [`cochain::differential`]: the cochain complex.
//! - [`deformations`]: integrability checking, the deformation families and
//!   canonical forms of single-generated algebras.
//! - [`document`] and [`commands`]: the JSON interchange format and the
//!   operations behind the `leibniz` binary.
//!
//! The `examples/` directory of this crate demonstrates each capability as a
//! small runnable program.

pub mod bimodule;
pub mod catalog;
pub mod cochain;
pub mod cohomology;
pub mod commands;
pub mod deformations;
pub mod document;
pub mod error;
pub mod linalg;
pub mod rational;
pub mod standard_cocycles;
pub mod superalgebra;

pub use bimodule::{adjoint_module, check_module_axioms, Bimodule};
pub use catalog::{nf_algebra, nf_superalgebra};
pub use cochain::{differential, Cochain, CochainSpace};
pub use cohomology::{
    cohomology, derivations, differential_matrix, inner_derivation, CohomologySpaces,
};
pub use error::{AlgebraError, ParseError};
pub use linalg::{Matrix, RowReducer, VectorSpaceBasis};
pub use rational::{frac, parse_rational, rat, Rational};
pub use superalgebra::{CentralSeriesReport, IdentityViolation, Parity, SuperAlgebra};
