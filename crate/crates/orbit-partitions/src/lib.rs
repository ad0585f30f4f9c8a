//! Partition calculus for nilpotent orbits of quasisplit classical groups.
//!
//! The building blocks are integer partitions under the dominance order and
//! the parity constraints that single out symplectic and orthogonal
//! partitions. On top of those sit the parity/special collapses and
//! expansions, the Lusztig-Spaltenstein and Barbasch-Vogan duality maps, and
//! Arthur parameters with the Fourier coefficient bound attached to them.
//! Everything that has a fast implementation also has a brute-force
//! enumeration oracle, wired together in [`collapse::run_oracle_suite`].

pub mod arthur;
pub mod collapse;
pub mod duality;
pub mod error;
pub mod group;
pub mod partition;

pub use arthur::{
    case_i_eta, case_iii_eta, check_bound, fourier_bound, is_generic, nonsingular_bound,
    nonsingular_partition, parse_factors, partition_of, simple_type_eta, ArthurParameter,
    BoundComparison, BoundOrder, SimpleFactor, TauSymmetry, Violation,
};
pub use collapse::{
    brute_extrema, brute_extremum, metaplectic_expansion, parity_collapse, run_oracle_suite,
    special_collapse, special_expansion, Direction, ExtremumPredicate, OracleReport,
};
pub use duality::{bv_dual, bv_dual_traced, ls_dual, run_duality_suite, RecipeTrace};
pub use error::{Error, Result};
pub use group::{
    is_metaplectic_special, is_special, is_valid, principal_partition, GroupKind, GroupType,
    Parity,
};
pub use partition::{enumerate_partitions, Partition, DEFAULT_ENUMERATION_CAP};
