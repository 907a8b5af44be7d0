//! Minimum-distance machinery: the generic low-weight codeword search, the
//! one-variable equation scans that replace it for specific zero sets,
//! exact enumeration for tiny codes, and the `A_3(n, d)` upper bound used to
//! certify optimality.

mod bound;
mod exact;
mod oracle;
mod reduced;

pub use bound::{optimality_bound, BoundReport, BoundVerdict};
pub use exact::{exact_min_distance, DEFAULT_ENUMERATION_BUDGET};
pub use oracle::{find_low_weight, find_low_weight_with, PowerTables, WeightWitness, WEIGHT4_MAX_M};
pub use reduced::{
    weight3_reduced, weight3_reduced_1e, weight3_reduced_1es, weight3_reduced_2e,
    weight3_reduced_c01e, ReducedEquation, ReducedOutcome, Shape,
};
