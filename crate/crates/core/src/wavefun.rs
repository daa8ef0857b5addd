//! Momentum-space radial wavefunctions, coordinate transforms, quadrature
//! normalization, and the ladder-built lower spinor component.
//!
//! Closed forms (unnormalized; |m| throughout, so negative m reuses the |m|
//! radial profile):
//!
//! ```text
//! f(p) = p^|m| e^{-k p²/2} ₁F₁(-n; |m|+1; k p²)                 k = ϱ₁/λ
//! h(p) = p^{-1/2} z^{ζ₁/2} (1-z)^{ζ₂/2} ₂F₁(-n, ζ₁+ζ₂+n; |m|+1; z)
//! z    = β p² / (1 + β p²)         q = arctan(√β p)/(λ√β)
//! ```
//!
//! The minimal-length form is evaluated through the equivalent regular
//! factorization β^{ζ₁/2} p^|m| (1+βp²)^{-(ζ₁+ζ₂)/2} ₂F₁(…), which avoids the
//! 0·∞ at p = 0. Normalization uses 2π ∫ |f|² w(p) dp = 1 with w = p for the
//! plain polar measure and w = p/(1+βp²) for the deformed one (the q-measure
//! pulled back through χ = −1/(2p)).

use crate::error::{CoreError, Result};
use crate::numerics::{derivative, simpson, uniform_step};
use crate::params::DeformedCoefficients;
use crate::specfun::{hyp1f1_poly, hyp2f1_poly};
use crate::spectrum::{beta_bound, energy_ml, energy_nc, Branch, EnergyLevel};

const TAIL_SHARE_LIMIT: f64 = 1e-10;

/// Which radial measure the table is normalized against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// w(p) = p (plain polar measure, β = 0 problems).
    PlainPolar,
    /// w(p) = p/(1 + βp²) (minimal-length problems).
    Deformed,
}

/// A radial function sampled on a strictly increasing momentum grid.
///
/// `norm` is the current squared norm under the table's measure: 0 until a
/// quadrature has been run, 1 after [`normalize`].
#[derive(Debug, Clone, PartialEq)]
pub struct RadialTable {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub weight: WeightKind,
    pub norm: f64,
}

/// Upper and lower radial spinor components on a shared grid.
///
/// `upper.norm + lower.norm = 1` after assembly; the split records how much
/// probability lives in each component.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorPair {
    pub upper: RadialTable,
    pub lower: RadialTable,
    pub m: i32,
    pub energy: EnergyLevel,
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(CoreError::InvalidGrid {
            reason: "grid is empty",
        });
    }
    if grid[0] < 0.0 || !grid[0].is_finite() {
        return Err(CoreError::InvalidGrid {
            reason: "momenta must be finite and nonnegative",
        });
    }
    for w in grid.windows(2) {
        if !(w[1] > w[0]) || !w[1].is_finite() {
            return Err(CoreError::InvalidGrid {
                reason: "grid must be strictly increasing",
            });
        }
    }
    Ok(())
}

/// Sample the noncommutative radial function f(p) on `grid` (unnormalized).
pub fn radial_nc(
    coeffs: &DeformedCoefficients,
    n: u32,
    m: i32,
    grid: &[f64],
) -> Result<RadialTable> {
    check_grid(grid)?;
    let k = coeffs.k;
    let ma = m.unsigned_abs();
    let c = ma as f64 + 1.0;
    let mut values = Vec::with_capacity(grid.len());
    for &p in grid {
        let t = k * p * p;
        let v = p.powi(ma as i32) * (-0.5 * t).exp() * hyp1f1_poly(n, c, t)?;
        values.push(v);
    }
    Ok(RadialTable {
        grid: grid.to_vec(),
        values,
        weight: WeightKind::PlainPolar,
        norm: 0.0,
    })
}

/// z = βp²/(1 + βp²) ∈ [0, 1); the compactified Pöschl-Teller variable.
pub fn z_of_p(beta: f64, p: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(CoreError::ZeroBeta);
    }
    let bp2 = beta * p * p;
    Ok(bp2 / (1.0 + bp2))
}

/// q = arctan(√β p)/(λ√β); the flat coordinate of the transformed problem.
pub fn q_of_p(coeffs: &DeformedCoefficients, beta: f64, p: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(CoreError::ZeroBeta);
    }
    let sb = beta.sqrt();
    Ok((sb * p).atan() / (coeffs.lambda * sb))
}

/// Inverse of [`q_of_p`]: p = tan(qλ√β)/√β.
pub fn p_of_q(coeffs: &DeformedCoefficients, beta: f64, q: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(CoreError::ZeroBeta);
    }
    let sb = beta.sqrt();
    Ok((q * coeffs.lambda * sb).tan() / sb)
}

/// Inverse of [`z_of_p`]: p = √(z/(β(1−z))).
pub fn p_of_z(beta: f64, z: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(CoreError::ZeroBeta);
    }
    if !(0.0..1.0).contains(&z) {
        return Err(CoreError::InvalidParameter { name: "z", value: z });
    }
    Ok((z / (beta * (1.0 - z))).sqrt())
}

/// Sample the minimal-length radial function h(p) on `grid` (unnormalized).
///
/// Needs ζ₁ > 1 (|m| ≥ 1) and ζ₂ > 1 (β below the m-channel bound); outside
/// that range the bound-state construction does not exist.
pub fn radial_ml(
    coeffs: &DeformedCoefficients,
    beta: f64,
    n: u32,
    m: i32,
    grid: &[f64],
) -> Result<RadialTable> {
    check_grid(grid)?;
    if m.abs() < 1 {
        return Err(CoreError::InvalidM { m, min: 1 });
    }
    if !(beta > 0.0) {
        return Err(CoreError::ZeroBeta);
    }
    let bound = beta_bound(coeffs, m.abs())?;
    if beta >= bound.beta0 {
        return Err(CoreError::BetaOutOfRange {
            beta,
            beta0: bound.beta0,
            m: m.abs(),
        });
    }
    let (zeta1, zeta2) = coeffs.zeta_pair(beta, m)?;
    let b = zeta1 + zeta2 + n as f64;
    let cpar = m.unsigned_abs() as f64 + 1.0;
    let prefactor = beta.powf(0.5 * zeta1);
    let mut values = Vec::with_capacity(grid.len());
    for &p in grid {
        let w = 1.0 + beta * p * p;
        let z = beta * p * p / w;
        let v = prefactor
            * p.powi(m.abs())
            * w.powf(-0.5 * (zeta1 + zeta2))
            * hyp2f1_poly(n, b, cpar, z)?;
        values.push(v);
    }
    Ok(RadialTable {
        grid: grid.to_vec(),
        values,
        weight: WeightKind::Deformed,
        norm: 0.0,
    })
}

fn weight_at(weight: WeightKind, beta: f64, p: f64) -> Result<f64> {
    match weight {
        WeightKind::PlainPolar => Ok(p),
        WeightKind::Deformed => {
            if !(beta > 0.0) {
                return Err(CoreError::ZeroBeta);
            }
            Ok(p / (1.0 + beta * p * p))
        }
    }
}

fn squared_norm(table: &RadialTable, beta: f64) -> Result<(f64, f64)> {
    let h = uniform_step(&table.grid)?;
    let mut integrand = Vec::with_capacity(table.values.len());
    for (i, &v) in table.values.iter().enumerate() {
        integrand.push(v * v * weight_at(table.weight, beta, table.grid[i])?);
    }
    let total = 2.0 * std::f64::consts::PI * simpson(&integrand, h);
    // last 10% of the momentum range
    let span = table.grid[table.grid.len() - 1] - table.grid[0];
    let cut = table.grid[0] + 0.9 * span;
    let start = table.grid.partition_point(|&p| p < cut);
    let tail = if start + 1 < integrand.len() {
        2.0 * std::f64::consts::PI * simpson(&integrand[start..], h)
    } else {
        0.0
    };
    Ok((total, tail))
}

/// Rescale so that 2π ∫ |f(p)|² w(p) dp = 1 by composite Simpson quadrature.
///
/// Fails with [`CoreError::TailTooHeavy`] when the last 10% of the momentum
/// range still carries more than 1e-10 of the integral — the grid does not
/// span enough decay for the quadrature to be trusted.
pub fn normalize(table: &RadialTable, beta: f64) -> Result<RadialTable> {
    let (total, tail) = squared_norm(table, beta)?;
    if !(total > 0.0) || !total.is_finite() {
        return Err(CoreError::InvalidParameter {
            name: "norm",
            value: total,
        });
    }
    let share = tail / total;
    if share > TAIL_SHARE_LIMIT {
        return Err(CoreError::TailTooHeavy {
            share,
            limit: TAIL_SHARE_LIMIT,
        });
    }
    let scale = 1.0 / total.sqrt();
    Ok(RadialTable {
        grid: table.grid.clone(),
        values: table.values.iter().map(|v| v * scale).collect(),
        weight: table.weight,
        norm: 1.0,
    })
}

/// 2π ∫ a(p) b(p) w(p) dp for two tables on the same grid and measure.
pub fn overlap(a: &RadialTable, b: &RadialTable, beta: f64) -> Result<f64> {
    if a.grid != b.grid || a.weight != b.weight {
        return Err(CoreError::InvalidGrid {
            reason: "overlap needs matching grids and measures",
        });
    }
    let h = uniform_step(&a.grid)?;
    let mut integrand = Vec::with_capacity(a.values.len());
    for i in 0..a.values.len() {
        integrand.push(a.values[i] * b.values[i] * weight_at(a.weight, beta, a.grid[i])?);
    }
    Ok(2.0 * std::f64::consts::PI * simpson(&integrand, h))
}

/// Radial part of P₊ acting on f·e^{imθ}:
/// ϱ₁ p f + λ(1+βp²)(f′ − m f/p), with f′ by 4th-order finite differences.
///
/// The output lives in the (m+1) angular channel and shares the input grid.
pub fn apply_ladder_plus(
    coeffs: &DeformedCoefficients,
    beta: f64,
    table: &RadialTable,
    m: i32,
) -> Result<RadialTable> {
    if table.grid.len() < 5 {
        return Err(CoreError::GridTooCoarse {
            len: table.grid.len(),
            min: 5,
        });
    }
    let h = uniform_step(&table.grid)?;
    if m != 0 && table.grid[0] <= 0.0 {
        return Err(CoreError::InvalidGrid {
            reason: "ladder with m != 0 needs strictly positive momenta",
        });
    }
    let fp = derivative(&table.values, h)?;
    let mf = m as f64;
    let mut values = Vec::with_capacity(table.grid.len());
    for i in 0..table.grid.len() {
        let p = table.grid[i];
        let f = table.values[i];
        let w = 1.0 + beta * p * p;
        let angular = if m == 0 { 0.0 } else { mf * f / p };
        values.push(coeffs.rho1 * p * f + coeffs.lambda * w * (fp[i] - angular));
    }
    Ok(RadialTable {
        grid: table.grid.clone(),
        values,
        weight: table.weight,
        norm: 0.0,
    })
}

/// Build the full two-component radial spinor for one (n, m, branch):
/// upper = the normalized radial function, lower = c·(P₊ upper)/(ε + m0c²),
/// then both rescaled so the summed squared norm is 1.
pub fn assemble_spinor(
    coeffs: &DeformedCoefficients,
    beta: f64,
    n: u32,
    m: i32,
    branch: Branch,
    grid: &[f64],
) -> Result<SpinorPair> {
    let raw = if beta > 0.0 {
        radial_ml(coeffs, beta, n, m, grid)?
    } else {
        radial_nc(coeffs, n, m, grid)?
    };
    let upper = normalize(&raw, beta)?;

    let energy = if beta > 0.0 {
        energy_ml(coeffs, beta, n, branch)?
    } else {
        energy_nc(coeffs, n, branch)
    };
    let rest = coeffs.rest_energy();
    let denominator = energy.value + rest;
    if denominator.abs() < 1e-12 * rest {
        return Err(CoreError::DenominatorZero { denominator });
    }

    let ladder = apply_ladder_plus(coeffs, beta, &upper, m)?;
    let lower_values: Vec<f64> = ladder
        .values
        .iter()
        .map(|g| coeffs.c * g / denominator)
        .collect();
    let lower = RadialTable {
        grid: upper.grid.clone(),
        values: lower_values,
        weight: upper.weight,
        norm: 0.0,
    };

    let (lower_norm2, _) = squared_norm(&lower, beta)?;
    let total = 1.0 + lower_norm2;
    let scale = 1.0 / total.sqrt();
    let rescale = |t: &RadialTable, share: f64| RadialTable {
        grid: t.grid.clone(),
        values: t.values.iter().map(|v| v * scale).collect(),
        weight: t.weight,
        norm: share,
    };
    Ok(SpinorPair {
        upper: rescale(&upper, 1.0 / total),
        lower: rescale(&lower, lower_norm2 / total),
        m,
        energy,
    })
}
