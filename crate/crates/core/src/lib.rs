//! Spectra and momentum-space wavefunctions of the planar Dirac oscillator in
//! a uniform magnetic field, deformed by noncommutative phase-space
//! parameters (θ̃, θ̄) and a minimal length (β).
//!
//! Layout:
//!
//! - [`params`] — inputs and every derived coefficient (ϱ₁, ϱ₂, λ, ω̃, k, u, ζ±)
//! - [`specfun`] — polynomial hypergeometric evaluators
//! - [`spectrum`] — closed-form energies, bounds, expansion, large-n asymptote
//! - [`wavefun`] — radial wavefunctions, transforms, normalization, spinors
//! - [`oracle`] — finite-difference eigenvalue oracles and residual checks
//!
//! Every closed-form result is paired with an independent numerical check in
//! [`oracle`]; nothing is asserted that a discretized operator cannot
//! reproduce.

pub mod error;
pub mod numerics;
pub mod oracle;
pub mod params;
pub mod specfun;
pub mod spectrum;
pub mod wavefun;

pub use error::{CoreError, Result};
pub use params::{
    derive_coefficients, DeformationParams, DeformedCoefficients, PhysicalParams, QuantumNumbers,
    UnitsMode,
};
pub use spectrum::{
    beta_bound, energy_ml, energy_ml_channel, energy_ml_expansion, energy_nc, large_n_frequency,
    BetaBound, Branch, EnergyLevel,
};
pub use wavefun::{
    apply_ladder_plus, assemble_spinor, normalize, overlap, q_of_p, radial_ml, radial_nc,
    z_of_p, RadialTable, SpinorPair, WeightKind,
};
