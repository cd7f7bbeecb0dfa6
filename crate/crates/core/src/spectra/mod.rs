//! Radial nilpotent solutions for spherically symmetric potentials, plus the
//! flux-tube geometry and the confinement radius.

pub mod geometry;
pub mod laurent;
pub mod levels;
pub mod scalar;
pub mod solver;

pub use geometry::{infrared_radius, lmin};
pub use laurent::Laurent;
pub use levels::{coulomb_levels, lennard_jones_solution, oscillator_levels, LevelFamily, LevelSeries};
pub use scalar::Num;
pub use solver::{
    classify, match_coefficients, residual_polynomial, residual_verify, AnsatzSolution, BranchReport, Family,
    Matching, PotentialSpec, QuantumNumbers, Relation, ResidualReport,
};
