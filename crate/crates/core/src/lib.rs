//! Commuting graphs of finite non-abelian groups, their exact adjacency,
//! Laplacian and signless Laplacian spectra, and the three graph energies
//! built from them.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: finite fields and small matrices over them.
//! * [`groups`]: multiplication-table groups and constructors for every
//!   family handled by the toolkit.
//! * [`commgraph`]: the commuting graph on `G \ Z(G)` and its matrices.
//! * [`spectra`]: exact characteristic polynomials, integer eigenvalues,
//!   certified isolation of irrational eigenvalues, and a floating-point
//!   Jacobi oracle.
//! * [`energies`]: energy, Laplacian energy and signless Laplacian energy.
//! * [`formulas`]: a registry of published closed forms, evaluable exactly.
//! * [`verify`]: adjudication of the registry against direct computation.

pub mod algebra;
pub mod commgraph;
pub mod energies;
mod error;
pub mod formulas;
pub mod groups;
pub mod rational;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
