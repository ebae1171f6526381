use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported root system type {series}{rank}")]
    UnsupportedType { series: String, rank: usize },

    #[error("parabolic datum is not Γ-invariant: {}", format_witnesses(.violations))]
    DatumInvalid { violations: Vec<(usize, usize, usize)> },

    #[error("Γ is not closed under composition: {0}")]
    NotAGroup(String),

    #[error("{0} is not a relative root")]
    NotARelativeRoot(String),

    #[error("no catalog type matches component {0}")]
    ClassificationFailure(usize),

    #[error("separability enumeration over {lines} root lines exceeds the budget of {budget}; use the projection strategy")]
    BudgetExceeded { lines: usize, budget: usize },

    #[error("exhaustive enumeration is capped at {cap} roots; this system has {roots}")]
    ExhaustiveCap { roots: usize, cap: usize },

    #[error("Borel family is incomplete: {0}")]
    IncompleteBorelFamily(String),

    #[error("Borel subset {0} carries no projection origin")]
    MissingOrigin(usize),

    #[error("{alpha} and {beta} are opposite multiples ({m}·α = -{k}·β)")]
    OppositeMultiples { alpha: String, beta: String, m: i64, k: i64 },

    #[error("commutator support scan with bound {bound} is not provably complete (needs {needed})")]
    SupportIncomplete { bound: u32, needed: u32 },

    #[error("{target} is not decomposable: {reason}")]
    NotDecomposable { target: String, reason: String },

    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    #[error("G2 caveat violated: β-γ = {0} is a relative root")]
    G2Caveat(String),

    #[error("relative root system is not regular; witness {0}")]
    NotRegular(String),

    #[error("certification failed for Borel subset {borel}, γ = {gamma}, k = {k}: generator {generator} ({reason})")]
    CertificationFailure {
        borel: usize,
        gamma: String,
        k: u32,
        generator: String,
        reason: String,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

fn format_witnesses(v: &[(usize, usize, usize)]) -> String {
    v.iter()
        .map(|(s, a, b)| format!("σ{s}(α{}) = α{} ∉ J", a + 1, b + 1))
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
