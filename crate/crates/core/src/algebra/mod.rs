//! The 32-blade algebra C ⊗ H ⊗ H and its group of order 64.

pub mod blade;
pub mod dual;
pub mod group;
pub mod multivector;
pub mod oracle;
pub mod pentad;

pub use blade::{blade_mul, BasisBlade, Quat};
pub use dual::{dual_generate, DualAlgebra, DualElement, Step};
pub use group::{center, closure, generate_group, order_census, GroupElement};
pub use multivector::{mv_mul, Multivector};
pub use oracle::{matrix_rep, Mat4};
pub use pentad::{check_pentad, gamma_pentad, GammaPentad, Mapping};
