//! Flag and config-file ingestion with the precedence
//! flags > config file > defaults, resolved into one validated [`RunConfig`].

use std::collections::HashMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dosc_core::{DeformationParams, PhysicalParams, UnitsMode};

#[derive(Parser, Debug)]
#[command(
    name = "dosc",
    version,
    about = "Planar Dirac oscillator under magnetic field, noncommutative phase space, and minimal length: spectra, wavefunctions, and oracle verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Energy levels (columns: n,m,branch,energy,energy_expansion,beta0,dxmin_bound)
    Spectrum(CommonArgs),
    /// Radial spinor samples for one (n, m, branch) (columns: p,psi1,psi2)
    Wavefunction(CommonArgs),
    /// Finite-difference oracle suite (columns: mode,n,computed,target,rel_err,pass)
    Verify(CommonArgs),
    /// Spectrum repeated over a beta or B range, with a leading parameter column
    Sweep(CommonArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitsArg {
    Natural,
    General,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchSel {
    Plus,
    Minus,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Kummer,
    Pt,
    Operators,
    Residual,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepParam {
    Beta,
    BField,
}

#[derive(Args, Debug, Default, Clone)]
pub struct CommonArgs {
    /// Rest mass m0 (general units only)
    #[arg(long)]
    pub m0: Option<f64>,
    /// Oscillator angular frequency (general units only)
    #[arg(long)]
    pub omega: Option<f64>,
    /// Speed of light (general units only)
    #[arg(long)]
    pub c: Option<f64>,
    /// Reduced Planck constant (general units only)
    #[arg(long)]
    pub hbar: Option<f64>,
    /// Magnetic field magnitude B
    #[arg(long)]
    pub b_field: Option<f64>,
    /// Position noncommutativity theta-tilde
    #[arg(long)]
    pub theta: Option<f64>,
    /// Momentum noncommutativity theta-bar
    #[arg(long)]
    pub thetabar: Option<f64>,
    /// Minimal-length parameter beta (verify defaults to 0.04 when unset)
    #[arg(long)]
    pub beta: Option<f64>,
    /// Elementary charge magnitude
    #[arg(long)]
    pub e_abs: Option<f64>,
    /// Unit convention
    #[arg(long, value_enum)]
    pub units: Option<UnitsArg>,
    /// Largest radial quantum number for spectrum/sweep tables
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Radial quantum number for wavefunction output
    #[arg(long)]
    pub n_quantum: Option<u32>,
    /// Angular quantum number m
    #[arg(long)]
    pub m_quantum: Option<i32>,
    /// Energy branch
    #[arg(long, value_enum)]
    pub branch: Option<BranchSel>,
    /// Grid size (wavefunction sampling; overrides the oracle grids in verify)
    #[arg(long)]
    pub grid_n: Option<usize>,
    /// Momentum cutoff p_max
    #[arg(long)]
    pub p_max: Option<f64>,
    /// Output format
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Output path (standard output when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Relative tolerance for verify eigenvalue rows
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// Verify sub-suite
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// Swept parameter (sweep command)
    #[arg(long, value_enum)]
    pub sweep_param: Option<SweepParam>,
    /// First swept value
    #[arg(long)]
    pub sweep_start: Option<f64>,
    /// Last swept value
    #[arg(long)]
    pub sweep_stop: Option<f64>,
    /// Number of swept values (inclusive endpoints)
    #[arg(long)]
    pub sweep_steps: Option<usize>,
    /// Flat key=value config file; flags override its entries
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Spectrum,
    Wavefunction,
    Verify,
    Sweep,
}

/// Fully resolved, validated run description.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub phys: PhysicalParams,
    pub def: DeformationParams,
    pub units: UnitsMode,
    pub beta_explicit: bool,
    pub n_max: u32,
    pub n_quantum: u32,
    pub m_quantum: i32,
    pub branch: BranchSel,
    pub grid_n: usize,
    pub grid_n_explicit: bool,
    pub p_max: f64,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub tolerance: f64,
    pub suite: Suite,
    pub sweep_param: SweepParam,
    pub sweep_start: f64,
    pub sweep_stop: f64,
    pub sweep_steps: usize,
}

const CONFIG_KEYS: &[&str] = &[
    "m0",
    "omega",
    "c",
    "hbar",
    "b-field",
    "theta",
    "thetabar",
    "beta",
    "e-abs",
    "units",
    "n-max",
    "n-quantum",
    "m-quantum",
    "branch",
    "grid-n",
    "p-max",
    "format",
    "out",
    "tolerance",
    "suite",
    "sweep-param",
    "sweep-start",
    "sweep-stop",
    "sweep-steps",
];

fn load_config_file(path: &PathBuf) -> Result<HashMap<String, String>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
    let mut map = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("config line {} is not key=value: {raw:?}", lineno + 1))?;
        let key = key.trim().to_string();
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(format!("unknown config key {key:?} on line {}", lineno + 1));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

struct Source {
    file: HashMap<String, String>,
}

impl Source {
    fn value<T: std::str::FromStr>(
        &self,
        flag: Option<T>,
        key: &str,
        default: T,
    ) -> Result<T, String> {
        Ok(self.opt_value(flag, key)?.unwrap_or(default))
    }

    fn opt_value<T: std::str::FromStr>(
        &self,
        flag: Option<T>,
        key: &str,
    ) -> Result<Option<T>, String> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.file.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| format!("config key {key:?} has non-numeric or invalid value {raw:?}")),
        }
    }

    fn enum_value<T: ValueEnum + Copy>(
        &self,
        flag: Option<T>,
        key: &str,
        default: T,
    ) -> Result<T, String> {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.file.get(key) {
            None => Ok(default),
            Some(raw) => T::from_str(raw, true)
                .map_err(|_| format!("config key {key:?} has invalid value {raw:?}")),
        }
    }
}

/// Merge flags over config-file keys over defaults and validate the result.
pub fn resolve(kind: CommandKind, args: &CommonArgs) -> Result<RunConfig, String> {
    let file = match &args.config {
        Some(path) => load_config_file(path)?,
        None => HashMap::new(),
    };
    let src = Source { file };

    let units = match src.enum_value(args.units, "units", UnitsArg::Natural)? {
        UnitsArg::Natural => UnitsMode::Natural,
        UnitsArg::General => UnitsMode::General,
    };

    let phys = PhysicalParams {
        m0: src.value(args.m0, "m0", 1.0)?,
        omega: src.value(args.omega, "omega", 1.0)?,
        c: src.value(args.c, "c", 1.0)?,
        hbar: src.value(args.hbar, "hbar", 1.0)?,
        b_field: src.value(args.b_field, "b-field", 0.0)?,
        e_abs: src.value(args.e_abs, "e-abs", 1.0)?,
    };

    let beta_opt = src.opt_value(args.beta, "beta")?;
    let beta_explicit = beta_opt.is_some();
    let beta = beta_opt.unwrap_or(if kind == CommandKind::Verify { 0.04 } else { 0.0 });
    let def = DeformationParams {
        theta_tilde: src.value(args.theta, "theta", 0.0)?,
        theta_bar: src.value(args.thetabar, "thetabar", 0.0)?,
        beta,
    };

    let grid_n_opt = src.opt_value(args.grid_n, "grid-n")?;
    let grid_n_explicit = grid_n_opt.is_some();

    let config = RunConfig {
        command: kind,
        phys,
        def,
        units,
        beta_explicit,
        n_max: src.value(args.n_max, "n-max", 10)?,
        n_quantum: src.value(args.n_quantum, "n-quantum", 0)?,
        m_quantum: src.value(args.m_quantum, "m-quantum", 1)?,
        branch: src.enum_value(args.branch, "branch", BranchSel::Both)?,
        grid_n: grid_n_opt.unwrap_or(4000),
        grid_n_explicit,
        p_max: src.value(args.p_max, "p-max", 12.0)?,
        format: src.enum_value(args.format, "format", OutputFormat::Csv)?,
        out: args
            .out
            .clone()
            .or_else(|| src.file.get("out").map(PathBuf::from)),
        tolerance: src.value(args.tolerance, "tolerance", 1e-4)?,
        suite: src.enum_value(args.suite, "suite", Suite::All)?,
        sweep_param: src.enum_value(args.sweep_param, "sweep-param", SweepParam::Beta)?,
        sweep_start: src.value(args.sweep_start, "sweep-start", 0.0)?,
        sweep_stop: src.value(args.sweep_stop, "sweep-stop", 0.1)?,
        sweep_steps: src.value(args.sweep_steps, "sweep-steps", 5)?,
    };
    validate(&config)?;
    Ok(config)
}

fn validate(cfg: &RunConfig) -> Result<(), String> {
    if !(cfg.tolerance > 0.0) {
        return Err(format!("tolerance must be positive, got {}", cfg.tolerance));
    }
    if cfg.def.beta < 0.0 {
        return Err(format!("beta must be nonnegative, got {}", cfg.def.beta));
    }
    if cfg.grid_n < 16 {
        return Err(format!("grid-n too small: {}", cfg.grid_n));
    }
    if !(cfg.p_max > 0.0) {
        return Err(format!("p-max must be positive, got {}", cfg.p_max));
    }
    if cfg.command == CommandKind::Sweep {
        if cfg.sweep_steps == 0 {
            return Err("sweep-steps must be at least 1".into());
        }
        if !(cfg.sweep_stop >= cfg.sweep_start) {
            return Err(format!(
                "sweep range is empty: start {} stop {}",
                cfg.sweep_start, cfg.sweep_stop
            ));
        }
    }
    if cfg.command == CommandKind::Wavefunction && cfg.branch == BranchSel::Both {
        return Err("wavefunction needs a single branch: pass --branch plus or --branch minus".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_resolve() {
        let cfg = resolve(CommandKind::Spectrum, &CommonArgs::default()).unwrap();
        assert_eq!(cfg.n_max, 10);
        assert_eq!(cfg.m_quantum, 1);
        assert_eq!(cfg.def.beta, 0.0);
        assert_eq!(cfg.grid_n, 4000);
        assert_eq!(cfg.p_max, 12.0);
        assert_eq!(cfg.tolerance, 1e-4);
        assert_eq!(cfg.units, UnitsMode::Natural);
        assert!(!cfg.beta_explicit);
    }

    #[test]
    fn verify_defaults_beta_to_criterion_value() {
        let cfg = resolve(CommandKind::Verify, &CommonArgs::default()).unwrap();
        assert_eq!(cfg.def.beta, 0.04);
        assert!(!cfg.beta_explicit);
        let cfg = resolve(
            CommandKind::Verify,
            &CommonArgs {
                beta: Some(0.02),
                ..CommonArgs::default()
            },
        )
        .unwrap();
        assert_eq!(cfg.def.beta, 0.02);
        assert!(cfg.beta_explicit);
    }

    #[test]
    fn flags_beat_config_file() {
        let dir = std::env::temp_dir().join("dosc-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("precedence.cfg");
        std::fs::write(&path, "# comment\nbeta=0.05\nn-max=3\n").unwrap();
        let cfg = resolve(
            CommandKind::Spectrum,
            &CommonArgs {
                beta: Some(0.1),
                config: Some(path.clone()),
                ..CommonArgs::default()
            },
        )
        .unwrap();
        assert_eq!(cfg.def.beta, 0.1);
        assert_eq!(cfg.n_max, 3);
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn unknown_config_key_is_rejected() {
        let dir = std::env::temp_dir().join("dosc-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("unknown.cfg");
        std::fs::write(&path, "betta=0.05\n").unwrap();
        let err = resolve(
            CommandKind::Spectrum,
            &CommonArgs {
                config: Some(path.clone()),
                ..CommonArgs::default()
            },
        )
        .unwrap_err();
        assert!(err.contains("betta"), "{err}");
        std::fs::remove_file(path).ok();
    }

    #[test]
    fn invariant_violations_are_rejected() {
        let err = resolve(
            CommandKind::Spectrum,
            &CommonArgs {
                beta: Some(-1.0),
                ..CommonArgs::default()
            },
        )
        .unwrap_err();
        assert!(err.contains("beta"), "{err}");

        let err = resolve(
            CommandKind::Wavefunction,
            &CommonArgs {
                branch: Some(BranchSel::Both),
                ..CommonArgs::default()
            },
        )
        .unwrap_err();
        assert!(err.contains("branch"), "{err}");
    }
}
