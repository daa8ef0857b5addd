//! Closed-form energy spectra, bounds, expansions, and asymptotics.
//!
//! The dimensionally restored forms are the canonical internal formulas:
//!
//! ```text
//! E_n  = ±√(m0²c⁴ + 4c²ϱ₁λn)                      (no minimal length)
//! ε_n  = ±√(m0²c⁴ + 4c²ϱ₁λn + 4c²βλ²n²)           (minimal length)
//! ```
//!
//! In natural units these reduce to ±m0c²√(1 + 4ϱ₁ϱ₂n) and
//! ±√(1 + 4ϱ₁ϱ₂n + 4βϱ₂²n²); the magnetic field is already folded into the
//! coefficients through ω̃. The spectrum is independent of the angular index m;
//! the m-channel route through (ζ₁, ζ₂) is provided separately so the
//! cancellation can be cross-checked rather than assumed.

use crate::error::{CoreError, Result};
use crate::params::DeformedCoefficients;

/// Sign of the energy branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// One energy level: |value| ≥ m0c², with value(n=0) = ±m0c².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub n: u32,
    pub branch: Branch,
    pub value: f64,
}

/// Admissibility bound on β for a given m channel, and the matching bound on
/// the minimal length Δx_min = ħ√β.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaBound {
    pub beta0: f64,
    pub dx_min_bound: f64,
}

fn e2_nc(coeffs: &DeformedCoefficients, n: u32) -> f64 {
    let mc2 = coeffs.rest_energy();
    let c2 = coeffs.c * coeffs.c;
    mc2 * mc2 + 4.0 * c2 * coeffs.rho1 * coeffs.lambda * n as f64
}

/// Noncommutative spectrum E_n = ±√(m0²c⁴ + 4c²ϱ₁λn).
pub fn energy_nc(coeffs: &DeformedCoefficients, n: u32, branch: Branch) -> EnergyLevel {
    EnergyLevel {
        n,
        branch,
        value: branch.sign() * e2_nc(coeffs, n).sqrt(),
    }
}

/// Minimal-length spectrum ε_n = ±√(m0²c⁴ + 4c²ϱ₁λn + 4c²βλ²n²).
///
/// Reduces exactly to [`energy_nc`] at β = 0 and is independent of m. β is
/// validated against the loosest admissible channel (m = 1, where β₀ is
/// largest); per-channel enforcement happens wherever an m is actually chosen.
pub fn energy_ml(
    coeffs: &DeformedCoefficients,
    beta: f64,
    n: u32,
    branch: Branch,
) -> Result<EnergyLevel> {
    check_beta(coeffs, beta, 1)?;
    let c2 = coeffs.c * coeffs.c;
    let nf = n as f64;
    let e2 = e2_nc(coeffs, n) + 4.0 * c2 * beta * coeffs.lambda * coeffs.lambda * nf * nf;
    Ok(EnergyLevel {
        n,
        branch,
        value: branch.sign() * e2.sqrt(),
    })
}

/// Minimal-length spectrum computed through the m-channel quantization route:
/// ξ̄² = u²(ζ₁ + ζ₂ + 2n)², ξ² = ξ̄² − ϱ₁²/β, ε = ±√(m0²c⁴ + c²ξ²).
///
/// Algebraically identical to [`energy_ml`] for every admissible m — the
/// ζ₁ + ζ₂ cancellation — and kept as a genuinely independent code path so
/// that identity can be tested instead of assumed.
pub fn energy_ml_channel(
    coeffs: &DeformedCoefficients,
    beta: f64,
    n: u32,
    m: i32,
    branch: Branch,
) -> Result<EnergyLevel> {
    if m.abs() < 1 {
        return Err(CoreError::InvalidM { m, min: 1 });
    }
    check_beta(coeffs, beta, m.abs())?;
    let (zeta1, zeta2) = coeffs.zeta_pair(beta, m)?;
    let u = coeffs.lambda * beta.sqrt();
    let xibar = u * (zeta1 + zeta2 + 2.0 * n as f64);
    let xi2 = xibar * xibar - coeffs.rho1 * coeffs.rho1 / beta;
    let mc2 = coeffs.rest_energy();
    let value = branch.sign() * (mc2 * mc2 + coeffs.c * coeffs.c * xi2).sqrt();
    Ok(EnergyLevel { n, branch, value })
}

/// β admissibility for one m channel:
/// β₀ = [1/(m + 3/2)] ϱ₁/(ϱ₂ ħ ω̃ m0), equivalently ζ₂ > 1, together with the
/// minimal-length bound Δx_min < ħ√β₀ = √(ϱ₁/((m+3/2)ϱ₂)) · √(ħ/(m0 ω̃)).
pub fn beta_bound(coeffs: &DeformedCoefficients, m: i32) -> Result<BetaBound> {
    if m < 1 {
        return Err(CoreError::InvalidM { m, min: 1 });
    }
    let beta0 = coeffs.rho1
        / ((m as f64 + 1.5) * coeffs.rho2 * coeffs.hbar * coeffs.omega_eff * coeffs.m0);
    Ok(BetaBound {
        beta0,
        dx_min_bound: coeffs.hbar * beta0.sqrt(),
    })
}

fn check_beta(coeffs: &DeformedCoefficients, beta: f64, m: i32) -> Result<()> {
    if !beta.is_finite() || beta < 0.0 {
        return Err(CoreError::InvalidParameter {
            name: "beta",
            value: beta,
        });
    }
    if beta == 0.0 {
        return Ok(());
    }
    let bound = beta_bound(coeffs, m)?;
    if beta >= bound.beta0 {
        return Err(CoreError::BetaOutOfRange {
            beta,
            beta0: bound.beta0,
            m,
        });
    }
    Ok(())
}

/// First order in β: ε_n ≈ E⁰_n (1 + 2βc²λ²n²/(E⁰_n)²) with E⁰_n the
/// noncommutative level. The neglected remainder is O(β²), so halving β
/// quarters the gap to the exact value.
pub fn energy_ml_expansion(
    coeffs: &DeformedCoefficients,
    beta: f64,
    n: u32,
    branch: Branch,
) -> Result<EnergyLevel> {
    check_beta(coeffs, beta, 1)?;
    let base = energy_nc(coeffs, n, branch);
    let e2 = base.value * base.value;
    let c2 = coeffs.c * coeffs.c;
    let nf = n as f64;
    let correction = 2.0 * c2 * coeffs.lambda * coeffs.lambda * nf * nf / e2;
    Ok(EnergyLevel {
        n,
        branch,
        value: base.value * (1.0 + beta * correction),
    })
}

/// Hard-confinement frequency ω̄ = 2c√β·λ/ħ: for large n the spectrum grows
/// like ε_n ≈ ħω̄n, a nonrelativistic oscillator ladder.
pub fn large_n_frequency(coeffs: &DeformedCoefficients, beta: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(CoreError::ZeroBeta);
    }
    Ok(2.0 * coeffs.c * beta.sqrt() * coeffs.lambda / coeffs.hbar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{derive_coefficients, DeformationParams, PhysicalParams, UnitsMode};
    use proptest::prelude::*;

    fn coeffs(theta_tilde: f64, theta_bar: f64, beta: f64) -> DeformedCoefficients {
        derive_coefficients(
            &PhysicalParams::natural(),
            &DeformationParams {
                theta_tilde,
                theta_bar,
                beta,
            },
            UnitsMode::Natural,
            false,
        )
        .unwrap()
    }

    #[test]
    fn ground_state_is_rest_energy() {
        let co = coeffs(0.7, 0.3, 0.0);
        assert_eq!(energy_nc(&co, 0, Branch::Plus).value, 1.0);
        assert_eq!(energy_ml(&co, 0.05, 0, Branch::Plus).unwrap().value, 1.0);
    }

    #[test]
    fn nc_level_values() {
        let co = coeffs(0.0, 0.0, 0.0);
        let e1 = energy_nc(&co, 1, Branch::Plus).value;
        assert!((e1 - 5.0f64.sqrt()).abs() < 1e-15, "e1 = {e1}");

        let co = coeffs(1.0, 1.0, 0.0);
        let e1 = energy_nc(&co, 1, Branch::Plus).value;
        assert!((e1 - 10.0f64.sqrt()).abs() < 1e-14, "e1 = {e1}");
    }

    #[test]
    fn ml_level_example() {
        let co = coeffs(0.0, 0.0, 0.1);
        let e1 = energy_ml(&co, 0.1, 1, Branch::Plus).unwrap().value;
        assert!((e1 - 5.4f64.sqrt()).abs() < 1e-14, "e1 = {e1}");
    }

    #[test]
    fn ml_at_zero_beta_is_bitwise_nc() {
        let co = coeffs(0.4, 0.8, 0.0);
        for n in 0..20 {
            let a = energy_ml(&co, 0.0, n, Branch::Plus).unwrap().value;
            let b = energy_nc(&co, n, Branch::Plus).value;
            assert_eq!(a.to_bits(), b.to_bits(), "n = {n}");
        }
    }

    #[test]
    fn channel_route_matches_direct_route() {
        let co = coeffs(0.0, 0.0, 0.04);
        for m in 1..=5 {
            for n in 0..=10 {
                let direct = energy_ml(&co, 0.04, n, Branch::Plus).unwrap().value;
                let channel = energy_ml_channel(&co, 0.04, n, m, Branch::Plus)
                    .unwrap()
                    .value;
                assert!(
                    (direct - channel).abs() <= 1e-12 * direct,
                    "n={n} m={m}: {direct} vs {channel}"
                );
            }
        }
    }

    #[test]
    fn beta_bound_examples() {
        let co = coeffs(0.0, 0.0, 0.0);
        let b = beta_bound(&co, 1).unwrap();
        assert!((b.beta0 - 0.4).abs() < 1e-15);
        assert!((b.dx_min_bound - 0.4f64.sqrt()).abs() < 1e-15);

        // θ̃ = 1 ⇒ ϱ₁ = 1.5, θ̄ = 0 ⇒ ϱ₂ = 1 ⇒ β₀ = 1.5/2.5 = 0.6
        let co = coeffs(1.0, 0.0, 0.0);
        let b = beta_bound(&co, 1).unwrap();
        assert!((b.beta0 - 0.6).abs() < 1e-15, "beta0 = {}", b.beta0);
    }

    #[test]
    fn dx_bound_equals_explicit_form() {
        // dual route: ħ√β₀ against √(ϱ₁/((m+3/2)ϱ₂))·√(ħ/(m0ω̃))
        let co = coeffs(0.6, 0.2, 0.0);
        for m in 1..=4 {
            let b = beta_bound(&co, m).unwrap();
            let explicit = (co.rho1 / ((m as f64 + 1.5) * co.rho2)).sqrt()
                * (co.hbar / (co.m0 * co.omega_eff)).sqrt();
            assert!(
                (b.dx_min_bound - explicit).abs() <= 1e-14 * explicit,
                "m={m}: {} vs {explicit}",
                b.dx_min_bound
            );
        }
    }

    #[test]
    fn beta_out_of_range_is_rejected() {
        let co = coeffs(0.0, 0.0, 0.5);
        let err = energy_ml(&co, 0.5, 1, Branch::Plus).unwrap_err();
        assert!(matches!(err, CoreError::BetaOutOfRange { m: 1, .. }));
        // per-channel: 0.1 is fine for m = 1 (β₀ = 0.4) but not for m = 3 (β₀ = 2/9)
        let err = energy_ml_channel(&co, 0.23, 1, 3, Branch::Plus).unwrap_err();
        assert!(matches!(err, CoreError::BetaOutOfRange { m: 3, .. }));
        assert!(energy_ml_channel(&co, 0.23, 1, 1, Branch::Plus).is_ok());
    }

    #[test]
    fn expansion_example_and_order() {
        let co = coeffs(0.0, 0.0, 1e-3);
        let approx = energy_ml_expansion(&co, 1e-3, 2, Branch::Plus).unwrap().value;
        assert!((approx - 3.0 * (1.0 + 1e-3 * 8.0 / 9.0)).abs() < 1e-14);
        let exact = energy_ml(&co, 1e-3, 2, Branch::Plus).unwrap().value;
        assert!((exact - 9.016f64.sqrt()).abs() < 1e-14);

        // Richardson-style: halving β quarters the gap
        let gap = |beta: f64| -> f64 {
            let a = energy_ml(&co, beta, 2, Branch::Plus).unwrap().value;
            let b = energy_ml_expansion(&co, beta, 2, Branch::Plus).unwrap().value;
            (a - b).abs()
        };
        let r1 = gap(1e-3) / gap(5e-4);
        let r2 = gap(5e-4) / gap(2.5e-4);
        assert!((3.5..=4.5).contains(&r1), "ratio {r1}");
        assert!((3.5..=4.5).contains(&r2), "ratio {r2}");
    }

    #[test]
    fn expansion_at_zero_beta_is_exact_nc() {
        let co = coeffs(0.2, 0.1, 0.0);
        for n in 0..8 {
            let a = energy_ml_expansion(&co, 0.0, n, Branch::Plus).unwrap().value;
            let b = energy_nc(&co, n, Branch::Plus).value;
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn large_n_frequency_value_and_zero_beta() {
        let co = coeffs(0.0, 0.0, 0.01);
        let w = large_n_frequency(&co, 0.01).unwrap();
        assert!((w - 0.2).abs() < 1e-15, "w = {w}");
        assert_eq!(large_n_frequency(&co, 0.0).unwrap_err(), CoreError::ZeroBeta);
    }

    #[test]
    fn hard_confinement_signature() {
        // energy_ml(n)²/n² → 4c²βλ² for large n
        let co = coeffs(0.0, 0.0, 0.01);
        let n = 1_000_000u32;
        let e = energy_ml(&co, 0.01, n, Branch::Plus).unwrap().value;
        let ratio = e * e / ((n as f64) * (n as f64)) / (4.0 * 0.01);
        assert!((ratio - 1.0).abs() < 2e-4, "ratio {ratio}");
    }

    proptest! {
        #[test]
        fn branch_symmetry(n in 0u32..50, tt in 0.0f64..2.0, tb in 0.0f64..2.0) {
            let co = coeffs(tt, tb, 0.0);
            let plus = energy_nc(&co, n, Branch::Plus).value;
            let minus = energy_nc(&co, n, Branch::Minus).value;
            prop_assert_eq!(plus.to_bits(), (-minus).to_bits());
        }

        #[test]
        fn plus_branch_increases_in_n(tt in 0.0f64..2.0, tb in 0.0f64..2.0, frac in 0.0f64..0.9) {
            let co = coeffs(tt, tb, 0.0);
            let beta = frac * beta_bound(&co, 1).unwrap().beta0;
            let mut prev = energy_ml(&co, beta, 0, Branch::Plus).unwrap().value;
            for n in 1..25 {
                let cur = energy_ml(&co, beta, n, Branch::Plus).unwrap().value;
                prop_assert!(cur > prev, "n={n}: {cur} <= {prev}");
                prev = cur;
            }
        }

        #[test]
        fn energy_increases_in_beta(n in 1u32..20, beta in 1e-4f64..0.2) {
            let co = coeffs(0.0, 0.0, beta);
            let lo = energy_ml(&co, beta, n, Branch::Plus).unwrap().value;
            let hi = energy_ml(&co, beta * 1.5, n, Branch::Plus).unwrap().value;
            prop_assert!(hi > lo);
        }

        #[test]
        fn value_dominates_rest_energy(n in 0u32..40, beta in 0.0f64..0.3) {
            let co = coeffs(0.0, 0.0, beta);
            let e = energy_ml(&co, beta, n, Branch::Plus).unwrap().value;
            prop_assert!(e >= co.rest_energy() - 1e-15);
        }
    }
}
