//! Output records and their CSV/JSON encodings.
//!
//! CSV cells are printed with 17 significant digits (`{:.16e}`) so dumps
//! round-trip exactly; lines end with LF on every platform. JSON documents
//! carry `schema_version: 1` and serialize f64 with the shortest
//! round-tripping representation.

use coincidence_core::verify::CheckOutcome;
use coincidence_core::{ImmanantSetF64, Perm3, C64};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

/// 17 significant digits; enough to reconstruct the exact f64.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Serialize)]
pub struct ComplexOut {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for ComplexOut {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
pub struct ImmanantsOut {
    pub permanent: ComplexOut,
    pub determinant: ComplexOut,
    pub mixed_123: ComplexOut,
    pub mixed_132: ComplexOut,
    pub mixed_213: ComplexOut,
    pub mixed_231: ComplexOut,
    pub mixed_312: ComplexOut,
    pub mixed_321: ComplexOut,
}

impl From<&ImmanantSetF64> for ImmanantsOut {
    fn from(set: &ImmanantSetF64) -> Self {
        Self {
            permanent: set.permanent.into(),
            determinant: set.determinant.into(),
            mixed_123: set.mixed(Perm3::P123).into(),
            mixed_132: set.mixed(Perm3::P132).into(),
            mixed_213: set.mixed(Perm3::P213).into(),
            mixed_231: set.mixed(Perm3::P231).into(),
            mixed_312: set.mixed(Perm3::P312).into(),
            mixed_321: set.mixed(Perm3::P321).into(),
        }
    }
}

/// Immanant magnitudes in the fixed label order used everywhere.
pub fn immanant_magnitudes(set: &ImmanantSetF64) -> Vec<(&'static str, f64)> {
    vec![
        ("permanent", set.permanent.norm()),
        ("determinant", set.determinant.norm()),
        ("mixed_123", set.mixed(Perm3::P123).norm()),
        ("mixed_132", set.mixed(Perm3::P132).norm()),
        ("mixed_213", set.mixed(Perm3::P213).norm()),
        ("mixed_231", set.mixed(Perm3::P231).norm()),
        ("mixed_312", set.mixed(Perm3::P312).norm()),
        ("mixed_321", set.mixed(Perm3::P321).norm()),
    ]
}

#[derive(Serialize)]
pub struct MagnitudesOut {
    pub permanent: f64,
    pub determinant: f64,
    pub mixed_123: f64,
    pub mixed_132: f64,
    pub mixed_213: f64,
    pub mixed_231: f64,
    pub mixed_312: f64,
    pub mixed_321: f64,
}

impl From<&ImmanantSetF64> for MagnitudesOut {
    fn from(set: &ImmanantSetF64) -> Self {
        Self {
            permanent: set.permanent.norm(),
            determinant: set.determinant.norm(),
            mixed_123: set.mixed(Perm3::P123).norm(),
            mixed_132: set.mixed(Perm3::P132).norm(),
            mixed_213: set.mixed(Perm3::P213).norm(),
            mixed_231: set.mixed(Perm3::P231).norm(),
            mixed_312: set.mixed(Perm3::P312).norm(),
            mixed_321: set.mixed(Perm3::P321).norm(),
        }
    }
}

#[derive(Serialize)]
pub struct RateJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub omega: [f64; 8],
    pub sigma: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub rate: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub carrier_freq: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub immanant_magnitudes: Option<MagnitudesOut>,
}

#[derive(Serialize)]
pub struct LandscapeJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub omega: [f64; 8],
    pub sigma: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub carrier_freq: Option<f64>,
    pub delta1: Vec<f64>,
    pub delta2: Vec<f64>,
    /// Row-major: `rates[i][j]` at `(delta1[i], delta2[j])`.
    pub rates: Vec<Vec<f64>>,
}

#[derive(Serialize)]
pub struct SliceJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub slice: &'static str,
    pub omega: [f64; 8],
    pub sigma: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub carrier_freq: Option<f64>,
    pub delta: Vec<f64>,
    pub rate: Vec<f64>,
}

#[derive(Serialize)]
pub struct HomJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub omega2: [f64; 3],
    pub sigma: f64,
    pub delta: Vec<f64>,
    pub rate: Vec<f64>,
}

#[derive(Serialize)]
pub struct ImmanantsJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub omega: [f64; 8],
    #[serde(flatten)]
    pub immanants: ImmanantsOut,
}

#[derive(Serialize)]
pub struct D11Json {
    #[serde(rename = "11")]
    pub j1i1: ComplexOut,
    #[serde(rename = "00")]
    pub j0i0: ComplexOut,
    #[serde(rename = "10")]
    pub j1i0: ComplexOut,
    #[serde(rename = "01")]
    pub j0i1: ComplexOut,
}

#[derive(Serialize)]
pub struct DFunctionsJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub omega: [f64; 8],
    pub d30: ComplexOut,
    pub d00: ComplexOut,
    pub d11: D11Json,
}

#[derive(Serialize)]
pub struct CheckJson {
    pub name: &'static str,
    pub tolerance: f64,
    pub observed: f64,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct VerifyJson {
    pub schema_version: u32,
    pub command: &'static str,
    pub trials: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

/// Plain-text verify report: one line per check, failures called out with
/// their observed deviations, then a summary line.
pub fn verify_text_report(outcomes: &[CheckOutcome], trials: usize, seed: u64) -> String {
    let mut text = String::new();
    let width = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut failed = 0usize;
    for o in outcomes {
        let status = if o.passed() {
            "ok  "
        } else {
            failed += 1;
            "FAIL"
        };
        text.push_str(&format!(
            "{status} {:width$}  observed {:9.3e}  tol {:.1e}\n",
            o.name, o.observed, o.tolerance
        ));
    }
    text.push_str(&format!(
        "verify: {} checks, {} passed, {failed} failed (trials={trials}, seed={seed})\n",
        outcomes.len(),
        outcomes.len() - failed,
    ));
    text
}

pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable output record");
    text.push('\n');
    text
}
