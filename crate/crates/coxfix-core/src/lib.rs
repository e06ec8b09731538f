//! Exact Coxeter-group combinatorics with machine-checkable order
//! topology.
//!
//! The crate covers: the word problem and length arithmetic for arbitrary
//! Coxeter matrices (including infinite bonds), Bruhat and weak orders
//! with finite poset machinery, order complexes and simplicial homology
//! over GF(2), twisted involutions with the (length + twisted absolute
//! length)/2 rank function, fixed-point sphere verification, and diagram
//! folding onto fixed subgroups. The [`suites`] module packages these as
//! named verification sweeps used by the `coxfix` CLI.
//!
//! Sweeps are data-parallel with rayon by default; build with
//! `--no-default-features` for the sequential fallback.

pub mod catalog;
pub mod error;
mod exec;
pub mod folding;
pub mod matrix;
pub mod orders;
pub mod perm;
pub mod suites;
pub mod system;
pub mod topology;
pub mod twisted;
pub mod word;

pub use error::{CoxError, Result};
pub use matrix::{Bond, CoxeterMatrix};
pub use system::{Ball, CoxeterSystem, Element, Side};

/// Sweep helpers re-exported for the bench suite, which compares the
/// parallel and sequential paths in one build.
pub mod bench_support {
    pub use crate::exec::map_collect_seq;

    #[cfg(feature = "parallel")]
    pub use crate::exec::map_collect;
}
