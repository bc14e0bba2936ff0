use thiserror::Error;

/// Errors surfaced by every layer of the library.
///
/// Computation paths are exact, so there are no tolerance failures; every
/// variant is either a caller mistake (bad input) or an internal consistency
/// check that must never fire on correct code.
#[derive(Debug, Error)]
pub enum Error {
    // ---- polynomial arithmetic ----
    #[error("operands have different variable counts ({0} vs {1})")]
    VariableMismatch(usize, usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    // ---- root systems ----
    #[error("unsupported factor type `{0}`")]
    UnsupportedFactor(String),
    #[error("invalid rank {rank} for type {label}: {reason}")]
    InvalidRank {
        label: String,
        rank: usize,
        reason: &'static str,
    },
    #[error("weight has {got} coordinates, ambient dimension is {want}")]
    WeightLength { got: usize, want: usize },
    #[error("weight is not dominant (negative pairing with simple root #{0})")]
    NonDominant(usize),
    #[error("Weyl orbit exceeds the configured bound of {0} points")]
    OrbitBound(usize),
    #[error("Weyl group enumeration exceeds the configured bound of {0} elements")]
    WeylBound(usize),
    #[error("singular linear system while solving for fundamental weights (construction bug)")]
    SingularSystem,

    // ---- degree engine ----
    #[error("the zero weight has no discriminant")]
    ZeroWeight,
    #[error("weight is not integral: pairing with simple root #{index} is {value}")]
    NonIntegralWeight { index: usize, value: String },
    #[error("could not find a generic point after {0} draws (pathological; indicates a bug)")]
    PointRejection(usize),
    #[error("independent generic points disagree: {0} vs {1} (internal inconsistency)")]
    PointDisagreement(String, String),
    #[error("degree came out as the non-integer {0} (internal inconsistency)")]
    NonIntegerDegree(String),
    #[error("degree came out negative: {0} (internal inconsistency)")]
    NegativeDegree(String),
    #[error("computed class is not a multiple of the expected invariant linear form")]
    NotInvariantForm,
    #[error("F-polynomial is only defined for semisimple systems; remove the GL factors")]
    GlFactorsRejected,
    #[error("computed polynomial has a non-integer coefficient {0} (internal inconsistency)")]
    NonIntegerCoefficient(String),
    #[error("top-degree terms failed to cancel: expected total degree {expected}, got {got}")]
    DegreeCancellation { expected: usize, got: usize },

    // ---- GL(n) symmetric-function paths ----
    #[error("symmetric-function path capped at n = {cap}, got n = {n}")]
    RankCap { n: usize, cap: usize },
    #[error("weight coordinate sum is zero; this path needs |λ| ≠ 0")]
    ZeroWeightSum,

    // ---- closed forms ----
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("degree {0} does not fit in u64")]
    DegreeOverflow(String),

    // ---- cross-method verification ----
    #[error("methods disagree: {left_name} = {left} but {right_name} = {right}")]
    MethodDisagreement {
        left_name: &'static str,
        left: String,
        right_name: &'static str,
        right: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
