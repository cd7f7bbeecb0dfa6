//! Fermion charge structures, the A/B/C/L tables, zero-charge counts,
//! composite weak charges, the SU(5) generator grid and the charge equation.

pub mod dirac;
pub mod grid;
pub mod spec;
pub mod tables;
pub mod zeros;

pub use dirac::{charge_dirac, charge_units, ChargeDirac};
pub use grid::{su5_grid, Generator, GridLabel, SU5Grid};
pub use spec::{
    expression, fermion_spec, Axis, Colour, FermionChargeSpec, FermionState, Flavour, Particle, Representation,
    Violation,
};
pub use tables::{
    build_tables, build_tables_from, generate_rows, generate_table, printed_tables, tables_from_csv, tables_to_csv, Cell, CellValue,
    ChargeRow, ChargeTable, ChargeType, Discrepancy, TableSet, Unit,
};
pub use zeros::{composite_weak_charge, count_zeros, Composite, CompositeKind, StateZeros, WeakStructure, ZeroCount};
