//! Crate-wide error type.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation images: {0}")]
    InvalidImages(String),

    #[error("parse error at position {pos}: {reason}")]
    Parse { pos: usize, reason: String },

    #[error("enumeration cap exceeded: group order {order} > cap {cap}")]
    EnumerationCapExceeded { order: u128, cap: u64 },

    #[error("degree cap exceeded: degree {degree} > cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("lattice cap exceeded: group order {order} > cap {cap}")]
    LatticeCapExceeded { order: u128, cap: u128 },

    #[error("budget exhausted while {0}")]
    BudgetExhausted(String),

    #[error("group order exceeds the supported 128-bit range")]
    OrderOverflow,

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("operation requires a transitive group")]
    NotTransitive,

    #[error("element is not a member of the group")]
    NotAMember,

    #[error("class graph is undefined for abelian socle configurations")]
    AbelianSocle,

    #[error(
        "no prime-power derangement exists in a transitive group of degree >= 2; \
         this contradicts the Fein-Kantor-Schacher theorem and indicates a bug"
    )]
    TheoremViolation,

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// True for errors caused by a configured resource cap rather than by
    /// invalid input. The CLI maps these to a dedicated exit code.
    pub fn is_cap_exhaustion(&self) -> bool {
        matches!(
            self,
            Error::EnumerationCapExceeded { .. }
                | Error::DegreeCapExceeded { .. }
                | Error::LatticeCapExceeded { .. }
                | Error::BudgetExhausted(_)
                | Error::OrderOverflow
        )
    }
}
