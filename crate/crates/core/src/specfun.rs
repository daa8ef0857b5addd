//! Polynomial hypergeometric evaluators.
//!
//! Quantization always truncates the series (first parameter a = −n), so only
//! finite sums arise. Terms are accumulated through the ratio
//! term_{j+1}/term_j, never through raw factorials, which stays finite for
//! degrees up to a few hundred.

use crate::error::{CoreError, Result};

/// Degree and denominator parameter of a truncated hypergeometric series.
///
/// The denominator parameter must avoid non-positive integers within the
/// truncation range: c + j ≠ 0 for 0 ≤ j < degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolySpec {
    pub degree: u32,
    pub denominator: f64,
}

impl PolySpec {
    pub fn check_denominator(&self) -> Result<()> {
        for j in 0..self.degree {
            if self.denominator + j as f64 == 0.0 {
                return Err(CoreError::DenominatorPole {
                    c: self.denominator,
                    term: j,
                });
            }
        }
        Ok(())
    }
}

/// Pochhammer symbol (x)_j = x(x+1)···(x+j−1), with (x)_0 = 1.
pub fn pochhammer(x: f64, j: u32) -> f64 {
    let mut acc = 1.0;
    for i in 0..j {
        acc *= x + i as f64;
    }
    acc
}

/// ₁F₁(−n; c; x) as the exact finite sum Σ_{j=0}^{n} (−n)_j x^j / ((c)_j j!).
pub fn hyp1f1_poly(n: u32, c: f64, x: f64) -> Result<f64> {
    PolySpec {
        degree: n,
        denominator: c,
    }
    .check_denominator()?;
    let nf = n as f64;
    let mut sum = 1.0;
    let mut term = 1.0;
    for j in 0..n {
        let jf = j as f64;
        term *= (-nf + jf) / ((c + jf) * (jf + 1.0)) * x;
        sum += term;
    }
    Ok(sum)
}

/// ₂F₁(−n, b; c; z) as the exact finite sum Σ_{j=0}^{n} (−n)_j (b)_j z^j / ((c)_j j!).
pub fn hyp2f1_poly(n: u32, b: f64, c: f64, z: f64) -> Result<f64> {
    PolySpec {
        degree: n,
        denominator: c,
    }
    .check_denominator()?;
    let nf = n as f64;
    let mut sum = 1.0;
    let mut term = 1.0;
    for j in 0..n {
        let jf = j as f64;
        term *= (-nf + jf) * (b + jf) / ((c + jf) * (jf + 1.0)) * z;
        sum += term;
    }
    Ok(sum)
}
