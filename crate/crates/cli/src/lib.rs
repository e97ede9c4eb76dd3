//! Command dispatch for the `coincidence` binary.
//!
//! Exit codes: 0 on success, 1 on usage or I/O errors, 2 when `verify`
//! finds a failing check. Output is byte-deterministic for a fixed command
//! line, including `verify` runs with a fixed seed.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub mod args;
pub mod output;

use args::{
    check_sigma, parse_angle_list, parse_delta_pair, parse_grid, Cli, Cmd, DfunctionsArgs, Format,
    HomArgs, ImmanantsArgs, LandscapeArgs, RateArgs, SliceKind, VerifyArgs,
};
use coincidence_core::dfunctions::dfunction_set;
use coincidence_core::immanants::immanant_set;
use coincidence_core::rates::{clamp_rate, coincidence_rate, landscape};
use coincidence_core::su2::{hom_rate, EulerSu2, HomRateParams};
use coincidence_core::su3::su3_matrix;
use coincidence_core::verify::{run_suite, VerifyConfig};
use coincidence_core::{DelaySpecF64, Perm3};
use output::{
    fmt17, immanant_magnitudes, to_json_line, verify_text_report, CheckJson, D11Json,
    DFunctionsJson, HomJson, ImmanantsJson, LandscapeJson, RateJson, SliceJson, VerifyJson,
    SCHEMA_VERSION,
};

struct CmdOutput {
    text: String,
    exit: i32,
}

impl CmdOutput {
    fn ok(text: String) -> Self {
        Self { text, exit: 0 }
    }
}

/// Parses `argv`, runs the selected command, and writes its output. Returns
/// the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    1
                }
            };
        }
    };

    let (result, destination) = match &cli.command {
        Cmd::Rate(a) => (cmd_rate(a), a.out.output.clone()),
        Cmd::Landscape(a) => (cmd_landscape(a), a.out.output.clone()),
        Cmd::Hom(a) => (cmd_hom(a), a.out.output.clone()),
        Cmd::Immanants(a) => (cmd_immanants(a), a.out.output.clone()),
        Cmd::Dfunctions(a) => (cmd_dfunctions(a), a.output.clone()),
        Cmd::Verify(a) => (cmd_verify(a), a.output.clone()),
    };

    let out = match result {
        Ok(out) => out,
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            return 1;
        }
    };

    let write_result = match &destination {
        Some(path) => std::fs::write(path, out.text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout
            .write_all(out.text.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    if let Err(message) = write_result {
        let _ = writeln!(stderr, "error: {message}");
        return 1;
    }
    out.exit
}

fn cmd_rate(a: &RateArgs) -> Result<CmdOutput, String> {
    let omega = a.omega.resolve()?;
    let sigma = check_sigma(a.sigma)?;
    let (d1, d2) = parse_delta_pair(&a.delta, "--delta")?;
    let spec = DelaySpecF64::from_deltas(d1, d2, sigma).map_err(|e| format!("--delta: {e}"))?;
    let rate = clamp_rate(coincidence_rate(&omega, &spec)).map_err(|e| e.to_string())?;
    let set = a.verbose.then(|| immanant_set(&su3_matrix(&omega)));

    let text = match a.out.format {
        Format::Csv => {
            let mut text = String::from("delta1,delta2,rate\n");
            text.push_str(&format!("{},{},{}\n", fmt17(d1), fmt17(d2), fmt17(rate)));
            if let Some(set) = &set {
                text.push_str("\nquantity,magnitude\n");
                for (label, magnitude) in immanant_magnitudes(set) {
                    text.push_str(&format!("{label},{}\n", fmt17(magnitude)));
                }
            }
            text
        }
        Format::Json => to_json_line(&RateJson {
            schema_version: SCHEMA_VERSION,
            command: "rate",
            omega: omega.angles(),
            sigma,
            delta1: d1,
            delta2: d2,
            rate,
            carrier_freq: a.carrier_freq,
            immanant_magnitudes: set.as_ref().map(Into::into),
        }),
    };
    Ok(CmdOutput::ok(text))
}

fn cmd_landscape(a: &LandscapeArgs) -> Result<CmdOutput, String> {
    let omega = a.omega.resolve()?;
    let sigma = check_sigma(a.sigma)?;
    let grid = parse_grid(&a.grid, "--grid")?;
    let ls = landscape(&omega, sigma, &grid, &grid).map_err(|e| e.to_string())?;

    let text = match a.slice {
        Some(kind) => {
            let (label, series) = match kind {
                SliceKind::Diag => ("diag", ls.diagonal_slice()),
                SliceKind::Antidiag => ("antidiag", ls.antidiagonal_slice()),
            };
            let series = series.map_err(|e| e.to_string())?;
            match a.out.format {
                Format::Csv => {
                    let mut text = String::from("delta,rate\n");
                    for (d, r) in &series {
                        text.push_str(&format!("{},{}\n", fmt17(*d), fmt17(*r)));
                    }
                    text
                }
                Format::Json => to_json_line(&SliceJson {
                    schema_version: SCHEMA_VERSION,
                    command: "landscape",
                    slice: label,
                    omega: omega.angles(),
                    sigma,
                    carrier_freq: a.carrier_freq,
                    delta: series.iter().map(|(d, _)| *d).collect(),
                    rate: series.iter().map(|(_, r)| *r).collect(),
                }),
            }
        }
        None => match a.out.format {
            Format::Csv => {
                let mut text = String::from("delta1,delta2,rate\n");
                for (i, d1) in ls.delta1().iter().enumerate() {
                    for (j, d2) in ls.delta2().iter().enumerate() {
                        text.push_str(&format!(
                            "{},{},{}\n",
                            fmt17(*d1),
                            fmt17(*d2),
                            fmt17(ls.rates()[i][j])
                        ));
                    }
                }
                text
            }
            Format::Json => to_json_line(&LandscapeJson {
                schema_version: SCHEMA_VERSION,
                command: "landscape",
                omega: omega.angles(),
                sigma,
                carrier_freq: a.carrier_freq,
                delta1: ls.delta1().to_vec(),
                delta2: ls.delta2().to_vec(),
                rates: ls.rates().to_vec(),
            }),
        },
    };
    Ok(CmdOutput::ok(text))
}

fn cmd_hom(a: &HomArgs) -> Result<CmdOutput, String> {
    let angles = parse_angle_list::<3>(&a.omega2, "--omega2")?;
    let omega =
        EulerSu2::new(angles[0], angles[1], angles[2]).map_err(|e| format!("--omega2: {e}"))?;
    let sigma = check_sigma(a.sigma)?;
    let grid = parse_grid(&a.grid, "--grid")?;
    let deltas = grid.values();
    let rates: Vec<f64> = deltas
        .iter()
        .map(|&d| {
            hom_rate(&HomRateParams::new(d, sigma, omega).expect("grid values and sigma validated"))
        })
        .collect();

    let text = match a.out.format {
        Format::Csv => {
            let mut text = String::from("delta,rate\n");
            for (d, r) in deltas.iter().zip(rates.iter()) {
                text.push_str(&format!("{},{}\n", fmt17(*d), fmt17(*r)));
            }
            text
        }
        Format::Json => to_json_line(&HomJson {
            schema_version: SCHEMA_VERSION,
            command: "hom",
            omega2: angles,
            sigma,
            delta: deltas,
            rate: rates,
        }),
    };
    Ok(CmdOutput::ok(text))
}

fn cmd_immanants(a: &ImmanantsArgs) -> Result<CmdOutput, String> {
    let omega = a.omega.resolve()?;
    let set = immanant_set(&su3_matrix(&omega));

    let text = match a.out.format {
        Format::Csv => {
            let mut text = String::from("quantity,re,im\n");
            let mut push = |label: &str, z: coincidence_core::C64| {
                text.push_str(&format!("{label},{},{}\n", fmt17(z.re), fmt17(z.im)));
            };
            push("permanent", set.permanent);
            push("determinant", set.determinant);
            for p in Perm3::ALL {
                push(&format!("mixed_{p}"), set.mixed(p));
            }
            text
        }
        Format::Json => to_json_line(&ImmanantsJson {
            schema_version: SCHEMA_VERSION,
            command: "immanants",
            omega: omega.angles(),
            immanants: (&set).into(),
        }),
    };
    Ok(CmdOutput::ok(text))
}

fn cmd_dfunctions(a: &DfunctionsArgs) -> Result<CmdOutput, String> {
    let omega = a.omega.resolve()?;
    let d = dfunction_set(&omega);

    let text = match a.format {
        Format::Json => to_json_line(&DFunctionsJson {
            schema_version: SCHEMA_VERSION,
            command: "dfunctions",
            omega: omega.angles(),
            d30: d.d30.into(),
            d00: d.d00.into(),
            d11: D11Json {
                j1i1: d.d11[1][1].into(),
                j0i0: d.d11[0][0].into(),
                j1i0: d.d11[1][0].into(),
                j0i1: d.d11[0][1].into(),
            },
        }),
        Format::Csv => {
            let mut text = String::from("quantity,re,im\n");
            let mut push = |label: &str, z: coincidence_core::C64| {
                text.push_str(&format!("{label},{},{}\n", fmt17(z.re), fmt17(z.im)));
            };
            push("d30", d.d30);
            push("d00", d.d00);
            push("d11_11", d.d11[1][1]);
            push("d11_00", d.d11[0][0]);
            push("d11_10", d.d11[1][0]);
            push("d11_01", d.d11[0][1]);
            text
        }
    };
    Ok(CmdOutput::ok(text))
}

fn cmd_verify(a: &VerifyArgs) -> Result<CmdOutput, String> {
    if a.trials == 0 {
        return Err("--trials must be at least 1".into());
    }
    let outcomes = run_suite(&VerifyConfig {
        trials: a.trials,
        seed: a.seed,
    });
    let all_passed = outcomes.iter().all(|o| o.passed());

    let text = match a.format {
        Some(Format::Json) => to_json_line(&VerifyJson {
            schema_version: SCHEMA_VERSION,
            command: "verify",
            trials: a.trials,
            seed: a.seed,
            passed: all_passed,
            checks: outcomes
                .iter()
                .map(|o| CheckJson {
                    name: o.name,
                    tolerance: o.tolerance,
                    observed: o.observed,
                    passed: o.passed(),
                })
                .collect(),
        }),
        Some(Format::Csv) | None => verify_text_report(&outcomes, a.trials, a.seed),
    };
    Ok(CmdOutput {
        text,
        exit: if all_passed { 0 } else { 2 },
    })
}
