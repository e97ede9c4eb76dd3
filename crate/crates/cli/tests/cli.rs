//! End-to-end command tests through the library entry point (and the
//! binary, where exit-code plumbing matters).

use serde_json::Value;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let full: Vec<String> = std::iter::once("coincidence".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let code = coincidence_cli::run(full, &mut stdout, &mut stderr);
    (
        code,
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

#[test]
fn rate_of_identity_interferometer() {
    let (code, out, err) = run_cli(&[
        "rate",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--sigma",
        "1",
        "--delta",
        "0,0",
    ]);
    assert_eq!(code, 0, "stderr: {err}");
    assert_eq!(
        out,
        "delta1,delta2,rate\n0.0000000000000000e0,0.0000000000000000e0,1.0000000000000000e0\n"
    );
}

#[test]
fn rate_at_preset_dip_clamps_to_zero() {
    // this interferometer has a vanishing permanent, so the simultaneous
    // rate is exactly the clamped zero rather than rounding residue
    let (code, out, _) = run_cli(&[
        "rate", "--preset", "fig2", "--sigma", "0.1", "--delta", "0,0",
    ]);
    assert_eq!(code, 0);
    assert!(out.ends_with(",0.0000000000000000e0\n"), "output: {out}");
}

#[test]
fn rate_rejects_bad_sigma() {
    let (code, _, err) = run_cli(&[
        "rate",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--sigma",
        "-1",
        "--delta",
        "0,0",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("--sigma"), "stderr: {err}");
}

#[test]
fn rate_rejects_wrong_omega_arity() {
    let (code, _, err) = run_cli(&["rate", "--omega", "0,0,0", "--sigma", "1", "--delta", "0,0"]);
    assert_eq!(code, 1);
    assert!(err.contains("--omega"), "stderr: {err}");
}

#[test]
fn rate_requires_omega_or_preset() {
    let (code, _, err) = run_cli(&["rate", "--sigma", "1", "--delta", "0,0"]);
    assert_eq!(code, 1);
    assert!(
        err.contains("--omega") || err.contains("--preset"),
        "stderr: {err}"
    );
}

#[test]
fn omega_and_preset_conflict() {
    let (code, _, err) = run_cli(&[
        "rate",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--preset",
        "fig2",
        "--sigma",
        "1",
        "--delta",
        "0,0",
    ]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn rate_verbose_appends_magnitudes() {
    let (code, out, _) = run_cli(&[
        "rate",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--sigma",
        "1",
        "--delta",
        "0,0",
        "--verbose",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("quantity,magnitude"));
    assert!(out.contains("permanent,1.0000000000000000e0"));
    assert!(out.contains("mixed_123,2.0000000000000000e0"));
}

#[test]
fn rate_json_schema() {
    let (code, out, _) = run_cli(&[
        "rate",
        "--preset",
        "fig2",
        "--sigma",
        "0.1",
        "--delta",
        "1.5,-2",
        "--format",
        "json",
        "--carrier-freq",
        "3.2",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "rate");
    assert_eq!(v["delta1"], 1.5);
    assert_eq!(v["delta2"], -2.0);
    assert_eq!(v["carrier_freq"], 3.2);
    assert!(v["rate"].as_f64().unwrap() >= 0.0);
}

#[test]
fn landscape_identity_grid() {
    let (code, out, _) = run_cli(&[
        "landscape",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--sigma",
        "1",
        "--grid",
        "-5:5:3",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "delta1,delta2,rate");
    assert_eq!(lines.len(), 10, "header plus nine data rows");
    for line in &lines[1..] {
        assert!(line.ends_with(",1.0000000000000000e0"), "line {line}");
    }
}

#[test]
fn landscape_rejects_degenerate_grid() {
    let (code, _, err) = run_cli(&[
        "landscape",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--sigma",
        "1",
        "--grid",
        "-5:5:1",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("--grid"), "stderr: {err}");
}

#[test]
fn landscape_slices() {
    let (code, out, _) = run_cli(&[
        "landscape",
        "--preset",
        "fig2",
        "--sigma",
        "0.1",
        "--grid",
        "-50:50:11",
        "--slice",
        "diag",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "delta,rate");
    assert_eq!(lines.len(), 12);
    // center of the diagonal slice sits on the landscape zero
    let center: Vec<&str> = lines[6].split(',').collect();
    assert_eq!(center[0], "0.0000000000000000e0");
    let rate: f64 = center[1].parse().unwrap();
    assert!(rate.abs() < 1e-10);
}

#[test]
fn landscape_json_shape() {
    let (code, out, _) = run_cli(&[
        "landscape",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--sigma",
        "1",
        "--grid",
        "-1:1:3",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["delta1"].as_array().unwrap().len(), 3);
    assert_eq!(v["rates"].as_array().unwrap().len(), 3);
    assert_eq!(v["rates"][0].as_array().unwrap().len(), 3);
}

#[test]
fn hom_balanced_splitter_curve() {
    let (code, out, _) = run_cli(&[
        "hom",
        "--omega2",
        "0,0.5pi,0",
        "--sigma",
        "1",
        "--grid",
        "-2:2:5",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "delta,rate");
    assert_eq!(lines.len(), 6);
    let center: Vec<&str> = lines[3].split(',').collect();
    let rate: f64 = center[1].parse().unwrap();
    assert!(rate.abs() < 1e-12, "dip at zero delay, got {rate}");
    let edge: Vec<&str> = lines[1].split(',').collect();
    let edge_rate: f64 = edge[1].parse().unwrap();
    assert!(
        edge_rate > 0.4,
        "background away from the dip, got {edge_rate}"
    );
}

#[test]
fn hom_uses_default_grid() {
    let (code, out, _) = run_cli(&["hom", "--omega2", "0,pi,0", "--sigma", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 102, "default grid is 101 points");
    // beta = pi: permanent is cos(pi) = -1, so the zero-delay rate is 1
    let center: Vec<&str> = out.lines().nth(51).unwrap().split(',').collect();
    assert_eq!(center[0], "0.0000000000000000e0");
    let rate: f64 = center[1].parse().unwrap();
    assert!((rate - 1.0).abs() < 1e-12);
}

#[test]
fn immanants_identity_json() {
    let (code, out, _) = run_cli(&[
        "immanants",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["permanent"]["re"], 1.0);
    assert_eq!(v["determinant"]["re"], 1.0);
    assert_eq!(v["mixed_123"]["re"], 2.0);
    assert_eq!(v["mixed_213"]["re"], 0.0);
}

#[test]
fn dfunctions_default_json() {
    let (code, out, _) = run_cli(&["dfunctions", "--preset", "fig2"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema_version"], 1);
    for key in ["11", "00", "10", "01"] {
        let im = v["d11"][key]["im"].as_f64().unwrap();
        assert!(im.abs() < 1e-10, "d11[{key}] imaginary part {im}");
    }
}

#[test]
fn verify_small_run_passes() {
    let (code, out, _) = run_cli(&["verify", "--trials", "20", "--seed", "7"]);
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("29 checks, 29 passed, 0 failed"));
    assert!(out.contains("trials=20, seed=7"));
}

#[test]
fn verify_hundred_trials_seed_seven() {
    let (code, out, _) = run_cli(&["verify", "--trials", "100", "--seed", "7"]);
    assert_eq!(code, 0, "output: {out}");
    assert!(out.contains("0 failed"));
}

#[test]
fn verify_rejects_zero_trials() {
    let (code, _, err) = run_cli(&["verify", "--trials", "0"]);
    assert_eq!(code, 1);
    assert!(err.contains("--trials"), "stderr: {err}");
}

#[test]
fn verify_json_report() {
    let (code, out, _) = run_cli(&[
        "verify", "--trials", "10", "--seed", "3", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 25);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "landscape",
        "--preset",
        "fig2",
        "--sigma",
        "0.1",
        "--grid",
        "-20:20:7",
        "--format",
        "json",
    ];
    let (_, first, _) = run_cli(&args);
    let (_, second, _) = run_cli(&args);
    assert_eq!(first, second);

    let v = ["verify", "--trials", "15", "--seed", "99"];
    let (_, first, _) = run_cli(&v);
    let (_, second, _) = run_cli(&v);
    assert_eq!(first, second);
}

#[test]
fn preset_matches_explicit_octuple() {
    // shortest round-trip decimals of pi/3, pi/5, pi/2, pi/4
    let explicit = [
        "rate",
        "--omega",
        "1.0471975511965979,0,0.6283185307179586,1.5707963267948966,1.0471975511965979,0.7853981633974483,0,0",
        "--sigma",
        "0.1",
        "--delta",
        "3,-4",
    ];
    let preset = [
        "rate", "--preset", "fig2", "--sigma", "0.1", "--delta", "3,-4",
    ];
    let (_, out_a, _) = run_cli(&explicit);
    let (_, out_b, _) = run_cli(&preset);
    assert_eq!(out_a, out_b);
}

#[test]
fn output_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("coincidence-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rates.csv");
    let path_str = path.to_str().unwrap();
    let (code, out, _) = run_cli(&[
        "rate",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--sigma",
        "1",
        "--delta",
        "0,0",
        "--output",
        path_str,
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty(), "file output should not echo to stdout");
    let written = std::fs::read_to_string(&path).unwrap();
    let (_, direct, _) = run_cli(&[
        "rate",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--sigma",
        "1",
        "--delta",
        "0,0",
    ]);
    assert_eq!(written, direct);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unwritable_output_path_fails() {
    let (code, _, err) = run_cli(&[
        "rate",
        "--omega",
        "0,0,0,0,0,0,0,0",
        "--sigma",
        "1",
        "--delta",
        "0,0",
        "--output",
        "/nonexistent-dir/definitely/nope.csv",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("cannot write"), "stderr: {err}");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run_cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("rate"));
    assert!(out.contains("landscape"));
    assert!(out.contains("verify"));
}

#[test]
fn unknown_flag_exits_one() {
    let (code, _, err) = run_cli(&["rate", "--bogus"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn binary_exit_codes_match() {
    let exe = env!("CARGO_BIN_EXE_coincidence");
    let ok = std::process::Command::new(exe)
        .args([
            "rate",
            "--omega",
            "0,0,0,0,0,0,0,0",
            "--sigma",
            "1",
            "--delta",
            "0,0",
        ])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("1.0000000000000000e0"));

    let usage = std::process::Command::new(exe)
        .args(["rate", "--sigma", "1"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(1));
}
