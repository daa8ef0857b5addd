//! Shared grid utilities: finite-difference stencils and Simpson quadrature.
//!
//! Interior stencils are 4th-order centered; the two points at each edge use
//! one-sided 4th-order formulas so outputs keep the input grid.

use crate::error::{CoreError, Result};

/// Relative slack allowed when checking grid uniformity.
const UNIFORMITY_TOL: f64 = 1e-9;

/// Verify the grid is strictly increasing and uniform; return the step.
pub fn uniform_step(grid: &[f64]) -> Result<f64> {
    if grid.len() < 2 {
        return Err(CoreError::GridTooCoarse {
            len: grid.len(),
            min: 2,
        });
    }
    let h = grid[1] - grid[0];
    if !(h > 0.0) {
        return Err(CoreError::InvalidGrid {
            reason: "grid must be strictly increasing",
        });
    }
    for w in grid.windows(2) {
        let d = w[1] - w[0];
        if !(d > 0.0) {
            return Err(CoreError::InvalidGrid {
                reason: "grid must be strictly increasing",
            });
        }
        if (d - h).abs() > UNIFORMITY_TOL * h.abs() {
            return Err(CoreError::InvalidGrid {
                reason: "grid must be uniform",
            });
        }
    }
    Ok(h)
}

/// First derivative on a uniform grid, 4th order.
pub fn derivative(values: &[f64], h: f64) -> Result<Vec<f64>> {
    let n = values.len();
    if n < 6 {
        return Err(CoreError::GridTooCoarse { len: n, min: 6 });
    }
    let f = values;
    let mut out = vec![0.0; n];
    for i in 2..n - 2 {
        out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
    }
    // one-sided 4th-order at the edges
    let fwd = |j: usize| {
        (-25.0 * f[j] + 48.0 * f[j + 1] - 36.0 * f[j + 2] + 16.0 * f[j + 3] - 3.0 * f[j + 4])
            / (12.0 * h)
    };
    let bwd = |j: usize| {
        (25.0 * f[j] - 48.0 * f[j - 1] + 36.0 * f[j - 2] - 16.0 * f[j - 3] + 3.0 * f[j - 4])
            / (12.0 * h)
    };
    out[0] = fwd(0);
    out[1] = fwd(1);
    out[n - 2] = bwd(n - 2);
    out[n - 1] = bwd(n - 1);
    Ok(out)
}

/// Second derivative on a uniform grid, 4th order, interior points only.
///
/// The first and last two entries are left as NaN; callers that need the
/// full grid must restrict themselves to the interior.
pub fn second_derivative_interior(values: &[f64], h: f64) -> Result<Vec<f64>> {
    let n = values.len();
    if n < 6 {
        return Err(CoreError::GridTooCoarse { len: n, min: 6 });
    }
    let f = values;
    let mut out = vec![f64::NAN; n];
    let h2 = h * h;
    for i in 2..n - 2 {
        out[i] =
            (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h2);
    }
    Ok(out)
}

/// Composite Simpson rule on a uniform grid.
///
/// Even interval counts use the plain 1/3 rule; odd counts close the last
/// three intervals with the 3/8 rule, keeping O(h^4) overall.
pub fn simpson(values: &[f64], h: f64) -> f64 {
    let n = values.len();
    if n < 2 {
        return 0.0;
    }
    let intervals = n - 1;
    if intervals == 1 {
        return 0.5 * h * (values[0] + values[1]);
    }
    let (simpson_part, tail38) = if intervals % 2 == 0 {
        (&values[..], 0.0)
    } else {
        let head = &values[..n - 3];
        let t = &values[n - 4..];
        let tail = 3.0 * h / 8.0 * (t[0] + 3.0 * t[1] + 3.0 * t[2] + t[3]);
        (head, tail)
    };
    let m = simpson_part.len();
    let mut odd = 0.0;
    let mut even = 0.0;
    for (i, &v) in simpson_part.iter().enumerate().take(m - 1).skip(1) {
        if i % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    let core = h / 3.0 * (simpson_part[0] + simpson_part[m - 1] + 4.0 * odd + 2.0 * even);
    core + tail38
}
