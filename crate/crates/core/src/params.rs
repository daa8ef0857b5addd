//! Physical inputs and the derived deformation coefficients.
//!
//! Everything downstream (spectra, wavefunctions, oracles) consumes a single
//! [`DeformedCoefficients`] value. A uniform magnetic field enters only
//! through the reduced frequency ω̃ = ω − ωc/2 with ωc = |e|B/(m0 c); the rest
//! of the dynamics is unchanged, so there is one code path for both cases.

use crate::error::{CoreError, Result};

/// Mass, oscillator frequency, fundamental constants, and the field strength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Rest mass m0.
    pub m0: f64,
    /// Oscillator angular frequency ω.
    pub omega: f64,
    /// Speed of light c.
    pub c: f64,
    /// Reduced Planck constant ħ.
    pub hbar: f64,
    /// Magnetic field magnitude B ≥ 0.
    pub b_field: f64,
    /// Elementary charge magnitude |e|.
    pub e_abs: f64,
}

impl PhysicalParams {
    /// Unit constants, no field: the configuration in which the closed-form
    /// spectra take their textbook shape.
    pub fn natural() -> Self {
        Self {
            m0: 1.0,
            omega: 1.0,
            c: 1.0,
            hbar: 1.0,
            b_field: 0.0,
            e_abs: 1.0,
        }
    }

    fn validate(&self) -> Result<()> {
        let checks = [
            ("m0", self.m0, true),
            ("omega", self.omega, true),
            ("c", self.c, true),
            ("hbar", self.hbar, true),
            ("e_abs", self.e_abs, true),
            ("b_field", self.b_field, false),
        ];
        for (name, value, strict) in checks {
            let ok = value.is_finite() && if strict { value > 0.0 } else { value >= 0.0 };
            if !ok {
                return Err(CoreError::InvalidParameter { name, value });
            }
        }
        Ok(())
    }
}

impl Default for PhysicalParams {
    fn default() -> Self {
        Self::natural()
    }
}

/// The three deformation parameters: position noncommutativity θ̃ (length²),
/// momentum noncommutativity θ̄ (momentum²), and the minimal-length
/// parameter β (1/momentum²).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DeformationParams {
    pub theta_tilde: f64,
    pub theta_bar: f64,
    pub beta: f64,
}

impl DeformationParams {
    pub fn commutative() -> Self {
        Self::default()
    }

    fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("theta_tilde", self.theta_tilde),
            ("theta_bar", self.theta_bar),
            ("beta", self.beta),
        ] {
            if !value.is_finite() {
                return Err(CoreError::InvalidParameter { name, value });
            }
        }
        if self.beta < 0.0 {
            return Err(CoreError::InvalidParameter {
                name: "beta",
                value: self.beta,
            });
        }
        Ok(())
    }
}

/// Unit convention.
///
/// `Natural` forces m0 = ω = c = ħ = 1 internally (the convention under which
/// the closed-form spectra are dimensionally consistent); `General` keeps the
/// user-supplied constants and restores the dimensional factors everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnitsMode {
    #[default]
    Natural,
    General,
}

/// Radial and angular quantum numbers. Wavefunction formulas use |m|.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantumNumbers {
    pub n: u32,
    pub m: i32,
}

/// Every derived symbol consumed by the spectra, wavefunctions, and oracles.
///
/// With w̃ the effective frequency (ω, or ω − ωc/2 with a field):
///
/// ```text
/// ϱ₁ = 1 + m0 ω̃ θ̃ / (2ħ)        ϱ₂ = 1 + θ̄ / (2 m0 ω̃ ħ)
/// λ  = ϱ₂ m0 ħ ω̃  (momentum²)    k  = ϱ₁/λ  (Gaussian width, 1/momentum²)
/// u  = λ√β        (momentum)
/// ```
///
/// The resolved unit constants (all 1.0 in natural mode) ride along because
/// the energy formulas need m0 c² and ħ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformedCoefficients {
    pub rho1: f64,
    pub rho2: f64,
    pub lambda: f64,
    pub omega_eff: f64,
    pub k: f64,
    pub u: f64,
    pub m0: f64,
    pub c: f64,
    pub hbar: f64,
}

impl DeformedCoefficients {
    /// Rest energy m0 c².
    pub fn rest_energy(&self) -> f64 {
        self.m0 * self.c * self.c
    }

    /// Pöschl-Teller shape parameters for the |m| channel:
    /// ζ₁ = |m| + 1/2 and ζ₂ = 1/2 − (|m| + 1 − ϱ₁/(βλ)).
    ///
    /// ζ₁ + ζ₂ = ϱ₁/(βλ) independently of m; the pair only exists for β > 0.
    pub fn zeta_pair(&self, beta: f64, m: i32) -> Result<(f64, f64)> {
        if !(beta > 0.0) {
            return Err(CoreError::ZeroBeta);
        }
        let ma = m.unsigned_abs() as f64;
        let zeta1 = ma + 0.5;
        let zeta2 = 0.5 - (ma + 1.0 - self.rho1 / (beta * self.lambda));
        Ok((zeta1, zeta2))
    }
}

/// Derive all coefficients from the physical and deformation inputs.
///
/// With `with_field` set, ω is replaced by ω̃ = ω − ωc/2 throughout; the flag
/// with B = 0 is bit-identical to no flag at all. Fails with
/// [`CoreError::NonPositiveFrequency`] when the field pushes ω̃ ≤ 0 (the
/// reduced-frequency mapping stops there) and with
/// [`CoreError::InvalidDeformation`] when θ̃ or θ̄ drive ϱ₁ or ϱ₂ nonpositive.
pub fn derive_coefficients(
    phys: &PhysicalParams,
    def: &DeformationParams,
    units: UnitsMode,
    with_field: bool,
) -> Result<DeformedCoefficients> {
    phys.validate()?;
    def.validate()?;

    let (m0, omega, c, hbar) = match units {
        UnitsMode::Natural => (1.0, 1.0, 1.0, 1.0),
        UnitsMode::General => (phys.m0, phys.omega, phys.c, phys.hbar),
    };

    let omega_c = if with_field {
        phys.e_abs * phys.b_field / (m0 * c)
    } else {
        0.0
    };
    let omega_eff = omega - omega_c / 2.0;
    if !(omega_eff > 0.0) {
        return Err(CoreError::NonPositiveFrequency { omega_eff });
    }

    let rho1 = 1.0 + m0 * omega_eff * def.theta_tilde / (2.0 * hbar);
    let rho2 = 1.0 + def.theta_bar / (2.0 * m0 * omega_eff * hbar);
    if !(rho1 > 0.0) || !(rho2 > 0.0) {
        return Err(CoreError::InvalidDeformation { rho1, rho2 });
    }

    let lambda = rho2 * m0 * hbar * omega_eff;
    Ok(DeformedCoefficients {
        rho1,
        rho2,
        lambda,
        omega_eff,
        k: rho1 / lambda,
        u: lambda * def.beta.sqrt(),
        m0,
        c,
        hbar,
    })
}
