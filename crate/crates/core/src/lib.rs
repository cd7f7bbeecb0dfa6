//! Exact Dirac group algebra and the calculations built on it.
//!
//! The crate is organised by topic:
//!
//! - [`algebra`]: the 32-blade algebra over C ⊗ H ⊗ H, its 64-element group,
//!   a 4×4 complex matrix oracle, the gamma pentads and the dualling generator.
//! - [`nilpotent`]: (E, p, m) state vectors, spinors, CPT sandwiches, boson,
//!   baryon and vacuum products, electroweak vertex sums.
//! - [`spectra`]: Laurent-polynomial coefficient matching for spherically
//!   symmetric potentials, level formulas, flux-tube geometry.
//! - [`charges`]: fermion charge structures, the A/B/C/L tables, zero counts,
//!   the SU(5) generator grid and the charge Dirac equation.
//! - [`unification`]: one-loop running couplings and the unification solve.
//! - [`masses`]: zero-charge multiplet masses and the boson/fermion mass rules.
//! - [`verify`]: a fixed identity suite over the algebra and nilpotent products.

pub mod algebra;
pub mod charges;
pub mod error;
pub mod masses;
pub mod nilpotent;
pub mod rational;
pub mod spectra;
pub mod unification;
pub mod verify;

pub use error::{Error, Result};
