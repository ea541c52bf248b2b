//! Exact, deterministic permutation-group computations for analysing
//! prime-power covering subgroups.
//!
//! The toolkit builds permutation groups from generators (stabilizer chains),
//! computes conjugacy class fusion under an overgroup, verifies covering
//! configurations `(A, G, U)`, searches for prime-power derangements, and
//! constructs the standard example families (affine, extraspecial normaliser,
//! wreath product with a diagonal subgroup).
//!
//! Everything is desk-scale and exact: no floating point, no randomness in any
//! default code path, and identical inputs always produce identical outputs.

pub mod classes;
pub mod config;
pub mod constructions;
pub mod covering;
pub mod error;
pub mod group;
pub mod io;
pub mod perm;
pub mod structure;

pub use config::Config;
pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
