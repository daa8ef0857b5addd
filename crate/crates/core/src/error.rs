//! Error type shared across the library.

/// Everything that can go wrong while deriving coefficients, evaluating
/// closed forms, or running the finite-difference oracles.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoreError {
    #[error("invalid parameter: {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("effective frequency is not positive: omega_eff = {omega_eff}")]
    NonPositiveFrequency { omega_eff: f64 },

    #[error("deformation coefficients must stay positive: rho1 = {rho1}, rho2 = {rho2}")]
    InvalidDeformation { rho1: f64, rho2: f64 },

    #[error("hypergeometric denominator parameter hits a pole: c = {c} at term {term}")]
    DenominatorPole { c: f64, term: u32 },

    #[error("beta = {beta} is outside the admissible range [0, {beta0}) for m = {m}")]
    BetaOutOfRange { beta: f64, beta0: f64, m: i32 },

    #[error("angular index m = {m} is not admissible here (need |m| >= {min})")]
    InvalidM { m: i32, min: i32 },

    #[error("beta must be positive for this operation")]
    ZeroBeta,

    #[error("grid too coarse: {len} points, need at least {min}")]
    GridTooCoarse { len: usize, min: usize },

    #[error("momentum cutoff too small: Gaussian tail {tail:e} is not below {limit:e}")]
    CutoffTooSmall { tail: f64, limit: f64 },

    #[error("quadrature tail too heavy: last-decade share {share:e} exceeds {limit:e}")]
    TailTooHeavy { share: f64, limit: f64 },

    #[error("spinor denominator vanishes: branch energy + m0 c^2 = {denominator}")]
    DenominatorZero { denominator: f64 },

    #[error("operator has no rows")]
    EmptyOperator,

    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: &'static str },
}

pub type Result<T> = std::result::Result<T, CoreError>;
