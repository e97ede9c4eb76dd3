//! Command-line surface: clap definitions plus the angle/grid parsers.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coincidence_core::rates::GridSpec;
use coincidence_core::OmegaSu3F64;

#[derive(Parser, Debug)]
#[command(
    name = "coincidence",
    version,
    about = "Multi-photon coincidence rates and landscapes for passive linear interferometers",
    subcommand_required = true,
    arg_required_else_help = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Three-photon coincidence rate at one pair of relative delays
    Rate(RateArgs),
    /// Three-photon coincidence rate over a (delta1, delta2) grid
    Landscape(LandscapeArgs),
    /// Two-channel Hong-Ou-Mandel coincidence curve over a delay grid
    Hom(HomArgs),
    /// Permanent, determinant, and the six mixed immanants of R(omega)
    Immanants(ImmanantsArgs),
    /// Group functions (symmetric, antisymmetric, and mixed) for an octuple
    Dfunctions(DfunctionsArgs),
    /// Run the seeded cross-path numerical check suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SliceKind {
    /// Equal delays (delta, delta)
    Diag,
    /// Opposed delays (delta, -delta)
    Antidiag,
}

/// Angles in radians; a trailing `pi` scales by pi (`0.5pi`, `-pi`).
#[derive(Args, Debug)]
pub struct OmegaArgs {
    /// Eight comma-separated angles a1,b1,a2,b2,a3,b3,g1,g2 in radians;
    /// a trailing `pi` scales by pi (0.5pi, -pi)
    #[arg(
        long,
        value_name = "ANGLES",
        allow_hyphen_values = true,
        conflicts_with = "preset"
    )]
    pub omega: Option<String>,

    /// Named interferometer preset (available: fig2)
    #[arg(long, value_name = "NAME")]
    pub preset: Option<String>,
}

impl OmegaArgs {
    pub fn resolve(&self) -> Result<OmegaSu3F64, String> {
        let angles = match (&self.omega, &self.preset) {
            (Some(spec), None) => parse_angle_list::<8>(spec, "--omega")?,
            (None, Some(name)) => preset_octuple(name)
                .ok_or_else(|| format!("--preset: unknown preset `{name}` (available: fig2)"))?,
            (None, None) => return Err("one of --omega or --preset is required".into()),
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        };
        OmegaSu3F64::new(angles).map_err(|e| format!("--omega: {e}"))
    }
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write to this path instead of standard output
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct RateArgs {
    #[command(flatten)]
    pub omega: OmegaArgs,

    /// Spectral half-width (inverse time units)
    #[arg(long, value_name = "SIGMA", allow_hyphen_values = true)]
    pub sigma: f64,

    /// Relative delays delta1,delta2 (time units)
    #[arg(long, value_name = "D1,D2", allow_hyphen_values = true)]
    pub delta: String,

    /// Also print the magnitudes of the immanant set
    #[arg(long)]
    pub verbose: bool,

    /// Carrier frequency; cancels out of every rate and is only echoed in
    /// JSON output for provenance
    #[arg(long, value_name = "OMEGA0", allow_hyphen_values = true)]
    pub carrier_freq: Option<f64>,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct LandscapeArgs {
    #[command(flatten)]
    pub omega: OmegaArgs,

    /// Spectral half-width (inverse time units)
    #[arg(long, value_name = "SIGMA", allow_hyphen_values = true)]
    pub sigma: f64,

    /// Delay grid min:max:steps, applied to both axes
    #[arg(long, value_name = "MIN:MAX:STEPS", allow_hyphen_values = true)]
    pub grid: String,

    /// Emit a single locus instead of the full grid
    #[arg(long, value_enum, value_name = "KIND")]
    pub slice: Option<SliceKind>,

    /// Carrier frequency; cancels out of every rate and is only echoed in
    /// JSON output for provenance
    #[arg(long, value_name = "OMEGA0", allow_hyphen_values = true)]
    pub carrier_freq: Option<f64>,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct HomArgs {
    /// Three comma-separated beam-splitter angles alpha,beta,gamma in
    /// radians; a trailing `pi` scales by pi (0.5pi, -pi)
    #[arg(long, value_name = "ANGLES", allow_hyphen_values = true)]
    pub omega2: String,

    /// Spectral half-width (inverse time units)
    #[arg(long, value_name = "SIGMA", allow_hyphen_values = true)]
    pub sigma: f64,

    /// Delay grid min:max:steps
    #[arg(
        long,
        value_name = "MIN:MAX:STEPS",
        allow_hyphen_values = true,
        default_value = "-5:5:101"
    )]
    pub grid: String,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ImmanantsArgs {
    #[command(flatten)]
    pub omega: OmegaArgs,

    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct DfunctionsArgs {
    #[command(flatten)]
    pub omega: OmegaArgs,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write to this path instead of standard output
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Random draws per check
    #[arg(long, default_value_t = 100)]
    pub trials: usize,

    /// Seed for the check-suite generator
    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Emit the report as JSON instead of text
    #[arg(long, value_enum)]
    pub format: Option<Format>,

    /// Write the report to this path instead of standard output
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

/// The built-in named octuples.
pub fn preset_octuple(name: &str) -> Option<[f64; 8]> {
    match name {
        "fig2" => Some([
            FRAC_PI_3,
            0.0,
            PI / 5.0,
            FRAC_PI_2,
            FRAC_PI_3,
            FRAC_PI_4,
            0.0,
            0.0,
        ]),
        _ => None,
    }
}

/// Parses one angle: plain radians, or a value with a `pi` suffix that
/// scales by pi. `pi` and `-pi` alone mean +-pi.
pub fn parse_angle(raw: &str) -> Result<f64, String> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Err("empty angle".into());
    }
    let value = match trimmed.strip_suffix("pi") {
        Some("") | Some("+") => PI,
        Some("-") => -PI,
        Some(body) => {
            let v: f64 = body
                .parse()
                .map_err(|_| format!("cannot parse angle `{trimmed}`"))?;
            v * PI
        }
        None => trimmed
            .parse()
            .map_err(|_| format!("cannot parse angle `{trimmed}`"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("angle `{trimmed}` is not finite"))
    }
}

/// Parses exactly `N` comma-separated angles.
pub fn parse_angle_list<const N: usize>(raw: &str, flag: &str) -> Result<[f64; N], String> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != N {
        return Err(format!(
            "{flag}: expected {N} comma-separated angles, got {}",
            parts.len()
        ));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(parts.iter()) {
        *slot = parse_angle(part).map_err(|e| format!("{flag}: {e}"))?;
    }
    Ok(out)
}

/// Parses `d1,d2` as two plain finite floats.
pub fn parse_delta_pair(raw: &str, flag: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 2 {
        return Err(format!(
            "{flag}: expected two comma-separated delays, got {}",
            parts.len()
        ));
    }
    let parse = |s: &str| -> Result<f64, String> {
        let v: f64 = s
            .trim()
            .parse()
            .map_err(|_| format!("{flag}: cannot parse delay `{s}`"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("{flag}: delay `{s}` is not finite"))
        }
    };
    Ok((parse(parts[0])?, parse(parts[1])?))
}

/// Parses `min:max:steps` into a validated [`GridSpec`].
pub fn parse_grid(raw: &str, flag: &str) -> Result<GridSpec<f64>, String> {
    let parts: Vec<&str> = raw.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("{flag}: expected min:max:steps, got `{raw}`"));
    }
    let min: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| format!("{flag}: cannot parse grid min `{}`", parts[0]))?;
    let max: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| format!("{flag}: cannot parse grid max `{}`", parts[1]))?;
    let steps: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| format!("{flag}: cannot parse grid steps `{}`", parts[2]))?;
    GridSpec::new(min, max, steps).map_err(|e| format!("{flag}: {e}"))
}

/// Validates a spectral width from the command line.
pub fn check_sigma(sigma: f64) -> Result<f64, String> {
    if sigma.is_finite() && sigma > 0.0 {
        Ok(sigma)
    } else {
        Err(format!("--sigma must be positive and finite, got {sigma}"))
    }
}
