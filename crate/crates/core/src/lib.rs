//! Exact combinatorics of root systems at a fixed odd level `l`.
//!
//! The library builds irreducible root systems in integer coordinates and
//! computes, entirely in exact arithmetic:
//!
//! - linkage classes of the dot action of the affine Weyl group, the
//!   singular subsystem `R_lambda` of a weight, and its Weyl-conjugate
//!   parabolic copy with the resulting orbit-closure support data
//!   ([`linkage`]);
//! - graded Weyl dimensions as integer polynomials, their vanishing order
//!   at primitive l-th roots of unity, and the `l^a` divisibility of the
//!   dimension ([`dimension`]);
//! - type-A weight cells through dominant admissible sign types, their
//!   partitions, the dual-partition orbit map, and canonical cell
//!   representative weights ([`cells`]);
//! - partition and nilpotent-orbit numerology for `sl_m` ([`partitions`]).
//!
//! [`verify`] packages the cross-checks between these routes as batched
//! suites with one outcome row per case; [`batch`] shards them over rayon
//! when the `parallel` feature (default) is enabled and runs them
//! sequentially otherwise.

pub mod batch;
pub mod cells;
pub mod dimension;
pub mod error;
pub mod linkage;
pub mod partitions;
pub mod poly;
pub mod root_system;
pub mod verify;

pub use error::Error;
pub use partitions::Partition;
pub use poly::IntPolynomial;
pub use root_system::{build_root_system, CartanDatum, CartanFamily, RootSystem, Weight};
