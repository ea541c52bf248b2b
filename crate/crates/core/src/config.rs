//! Resource caps and run configuration.

use serde::{Deserialize, Serialize};

/// Caps and knobs shared by all operations. Identical configs and inputs
/// always produce identical outputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Maximum group order for full element enumeration (class tables,
    /// covering verification in generic mode, intersections by filtering).
    pub enumeration_cap: u64,
    /// Maximum permutation degree, including induced coset actions.
    pub degree_cap: usize,
    /// Maximum group order for subgroup lattice enumeration.
    pub lattice_order_cap: u128,
    /// Maximum number of subgroups the lattice search may collect.
    pub lattice_count_budget: usize,
    /// Node budget for the direct conjugacy re-check of reported witnesses.
    pub conjugacy_budget: u64,
    /// Worker count. Modules may parallelise internally as long as outputs
    /// stay identical to the sequential order; the current implementation is
    /// sequential throughout.
    pub workers: usize,
    /// Seed reserved for randomized fallback paths. No default code path
    /// consumes randomness.
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enumeration_cap: 1 << 20,
            degree_cap: 10_000,
            lattice_order_cap: 1_000,
            lattice_count_budget: 20_000,
            conjugacy_budget: 1 << 20,
            workers: 1,
            seed: 0,
        }
    }
}

impl Config {
    /// Returns an error if `order` exceeds the enumeration cap.
    pub fn check_enumeration(&self, order: u128) -> crate::Result<()> {
        if order > self.enumeration_cap as u128 {
            return Err(crate::Error::EnumerationCapExceeded {
                order,
                cap: self.enumeration_cap,
            });
        }
        Ok(())
    }

    /// Returns an error if `degree` exceeds the degree cap.
    pub fn check_degree(&self, degree: usize) -> crate::Result<()> {
        if degree > self.degree_cap {
            return Err(crate::Error::DegreeCapExceeded {
                degree,
                cap: self.degree_cap,
            });
        }
        Ok(())
    }
}
