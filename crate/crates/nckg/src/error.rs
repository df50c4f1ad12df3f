use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A requested ⟨r^-k⟩ moment does not converge for the given state.
    #[error("divergent moment: {0}")]
    DivergentMoment(String),

    /// An adaptive integral grew without bound under refinement.
    #[error("divergent integral: {0}")]
    DivergentIntegral(String),

    /// No real k root makes the square-root argument a perfect square.
    #[error("no polynomial solution: {0}")]
    NoPolynomialSolution(String),

    /// No branch satisfies the selection rule (negative τ' and root ≥ 0).
    #[error("no admissible branch")]
    NoAdmissibleBranch,

    /// More than one branch satisfies the selection rule.
    #[error("ambiguous branch selection: {0} branches qualify")]
    AmbiguousBranch(usize),

    /// A first-order θ bound was requested for a state with m_l = 0.
    #[error("no first-order sensitivity: first-order shift vanishes for m_l = 0")]
    NoFirstOrderSensitivity,

    /// Eigenvalue root-finding failed to bracket or converge.
    #[error("root-finding failure: {0}")]
    RootFinding(String),
}

pub type Result<T> = std::result::Result<T, Error>;
