//! Deterministic row serialization: frozen CSV column order, 9-significant-
//! digit lowercase scientific notation, `\n` line endings; JSON mirrors the
//! CSV semantics as an array of row objects with identical field names.

use serde::Serialize;

use crate::config::OutputFormat;

/// Frozen numeric format for CSV cells.
pub fn fmt_sci(x: f64) -> String {
    format!("{x:.8e}")
}

#[derive(Serialize)]
pub struct SpectrumRow {
    pub n: u32,
    pub m: i32,
    pub branch: &'static str,
    pub energy: f64,
    pub energy_expansion: f64,
    pub beta0: f64,
    pub dxmin_bound: f64,
}

#[derive(Serialize)]
pub struct SweepRow {
    pub param: f64,
    pub n: u32,
    pub m: i32,
    pub branch: &'static str,
    pub energy: f64,
    pub energy_expansion: f64,
    pub beta0: f64,
    pub dxmin_bound: f64,
}

#[derive(Serialize)]
pub struct WavefunctionRow {
    pub p: f64,
    pub psi1: f64,
    pub psi2: f64,
}

#[derive(Serialize)]
pub struct VerifyRow {
    pub mode: String,
    pub n: u32,
    pub computed: f64,
    pub target: f64,
    pub rel_err: f64,
    pub pass: bool,
}

pub trait CsvRow {
    fn header(param_name: &str) -> String;
    fn to_csv(&self) -> String;
}

impl CsvRow for SpectrumRow {
    fn header(_: &str) -> String {
        "n,m,branch,energy,energy_expansion,beta0,dxmin_bound".into()
    }
    fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.branch,
            fmt_sci(self.energy),
            fmt_sci(self.energy_expansion),
            fmt_sci(self.beta0),
            fmt_sci(self.dxmin_bound)
        )
    }
}

impl CsvRow for SweepRow {
    fn header(param_name: &str) -> String {
        format!("{param_name},n,m,branch,energy,energy_expansion,beta0,dxmin_bound")
    }
    fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            fmt_sci(self.param),
            self.n,
            self.m,
            self.branch,
            fmt_sci(self.energy),
            fmt_sci(self.energy_expansion),
            fmt_sci(self.beta0),
            fmt_sci(self.dxmin_bound)
        )
    }
}

impl CsvRow for WavefunctionRow {
    fn header(_: &str) -> String {
        "p,psi1,psi2".into()
    }
    fn to_csv(&self) -> String {
        format!(
            "{},{},{}",
            fmt_sci(self.p),
            fmt_sci(self.psi1),
            fmt_sci(self.psi2)
        )
    }
}

impl CsvRow for VerifyRow {
    fn header(_: &str) -> String {
        "mode,n,computed,target,rel_err,pass".into()
    }
    fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.mode,
            self.n,
            fmt_sci(self.computed),
            fmt_sci(self.target),
            fmt_sci(self.rel_err),
            self.pass
        )
    }
}

/// Render rows in the requested format; the output always ends in `\n`.
pub fn render<R: CsvRow + Serialize>(
    rows: &[R],
    format: OutputFormat,
    param_name: &str,
) -> Result<String, String> {
    match format {
        OutputFormat::Csv => {
            let mut out = String::new();
            out.push_str(&R::header(param_name));
            out.push('\n');
            for row in rows {
                out.push_str(&row.to_csv());
                out.push('\n');
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let mut out = serde_json::to_string_pretty(rows)
                .map_err(|e| format!("json serialization failed: {e}"))?;
            out.push('\n');
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sci_format_is_nine_significant_digits() {
        assert_eq!(fmt_sci(1.0), "1.00000000e0");
        assert_eq!(fmt_sci(5.0f64.sqrt()), "2.23606798e0");
        assert_eq!(fmt_sci(-0.000123456789), "-1.23456789e-4");
        assert_eq!(fmt_sci(0.0), "0.00000000e0");
    }

    #[test]
    fn csv_rows_have_frozen_shape() {
        let row = SpectrumRow {
            n: 1,
            m: 1,
            branch: "+",
            energy: 5.0f64.sqrt(),
            energy_expansion: 5.0f64.sqrt(),
            beta0: 0.4,
            dxmin_bound: 0.4f64.sqrt(),
        };
        assert_eq!(
            row.to_csv(),
            "1,1,+,2.23606798e0,2.23606798e0,4.00000000e-1,6.32455532e-1"
        );
    }
}
