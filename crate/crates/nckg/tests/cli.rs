//! Black-box tests of the `nckg` binary: exit-code contract, determinism,
//! and the documented behavior of each subcommand.

use std::process::{Command, Output};

fn nckg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nckg"))
        .args(args)
        .env_remove("NCKG_CONFIG")
        .output()
        .expect("failed to launch nckg")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "exit {:?}; stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is not valid JSON")
}

#[test]
fn spectrum_theta_zero_total_equals_e0() {
    let out = nckg(&["spectrum", "--model", "rel", "--n", "0..2", "--l", "0..3", "--theta", "0"]);
    let v = stdout_json(&out);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    for row in rows {
        assert_eq!(row["total"], row["e0"], "row {row}");
    }
}

#[test]
fn spectrum_is_deterministic() {
    let args = ["spectrum", "--model", "rel", "--n", "0..2", "--l", "0..2", "--theta", "1e-25"];
    let a = nckg(&args);
    let b = nckg(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = nckg(&["--format", "csv", "spectrum", "--model", "rel", "--n", "0..2", "--l", "0..2", "--theta", "1e-25"]);
    let d = nckg(&["--format", "csv", "spectrum", "--model", "rel", "--n", "0..2", "--l", "0..2", "--theta", "1e-25"]);
    assert_eq!(c.stdout, d.stdout);
    let text = String::from_utf8(c.stdout).unwrap();
    assert!(text.starts_with("n,l,m_l,e0,"), "csv header missing: {text}");
}

#[test]
fn spectrum_nr_ml_all_equidistant() {
    let out = nckg(&["spectrum", "--model", "nr", "--n", "3", "--l", "2", "--ml", "all", "--theta", "1e-25"]);
    let v = stdout_json(&out);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let shifts: Vec<f64> = rows
        .iter()
        .map(|r| r["shift_theta1"].as_f64().unwrap())
        .collect();
    let spacing = shifts[0] - shifts[1];
    assert!(spacing != 0.0);
    for i in 1..4 {
        let s = shifts[i] - shifts[i + 1];
        assert!(((s - spacing) / spacing).abs() < 1e-10, "spacing {s} vs {spacing}");
    }
}

#[test]
fn spectrum_divergent_state_nulls_and_warns() {
    let out = nckg(&["spectrum", "--model", "rel", "--n", "0", "--l", "0", "--theta", "1e-25"]);
    let v = stdout_json(&out);
    let row = &v["results"]["rows"][0];
    assert!(row["e0"].is_f64());
    assert!(row["shift_theta2_f5"].is_null());
    assert!(row["shift_theta2_f6"].is_null());
    assert!(row["total"].is_null());
    assert_eq!(row["converged"], serde_json::Value::Bool(false));
    assert!(!v["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn moments_nr_2p_standard_value() {
    let out = nckg(&["moments", "--model", "nr", "--n", "2", "--l", "1", "--k", "4"]);
    let v = stdout_json(&out);
    let row = &v["results"]["rows"][0];
    let a_b = 1.0 / nckg::core::ALPHA_CODATA;
    let expect = 1.0 / (24.0 * a_b.powi(4));
    let closed = row["closed_form"].as_f64().unwrap();
    assert!(((closed - expect) / expect).abs() < 1e-12, "{closed} vs {expect}");
    assert!(row["rel_discrepancy"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn moments_printed_f6_warns() {
    let out = nckg(&["moments", "--model", "rel", "--n", "0", "--l", "2", "--k", "6"]);
    let v = stdout_json(&out);
    let row = &v["results"]["rows"][0];
    let paper = row["paper_fidelity"].as_f64().unwrap();
    let closed = row["closed_form"].as_f64().unwrap();
    assert!(((paper - closed) / closed).abs() > 1e-3);
    assert!(!v["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn moments_divergent_row() {
    let out = nckg(&["moments", "--model", "nr", "--n", "1", "--l", "0", "--k", "5"]);
    let v = stdout_json(&out);
    let row = &v["results"]["rows"][0];
    assert!(row["closed_form"].is_null());
    assert!(row["error"].is_string());
}

#[test]
fn nu_rootfind_matches_closed_form() {
    let out = nckg(&["nu", "--n", "0", "--l", "1"]);
    let v = stdout_json(&out);
    assert!(v["results"]["rel_difference"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn nu_alpha_zero_free_limit() {
    let out = nckg(&["nu", "--n", "0", "--l", "0", "--alpha", "0"]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["energy_closed_form"].as_f64().unwrap(), 1.0);
    assert_eq!(v["results"]["energy_rootfind"].as_f64().unwrap(), 1.0);
}

#[test]
fn nu_unique_admissible_branch() {
    let out = nckg(&["nu", "--n", "2", "--l", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["results"]["admissible_count"].as_i64().unwrap(), 1);
    assert_eq!(
        v["results"]["selected"]["origin_regularity_tie_break"],
        serde_json::Value::Bool(false)
    );
}

#[test]
fn potential_theta_zero_is_coulomb() {
    let out = nckg(&["potential", "--theta", "0", "--rmin", "0.1", "--rmax", "10", "--points", "5"]);
    let v = stdout_json(&out);
    let rows = v["results"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    let e = nckg::core::ALPHA_CODATA.sqrt();
    for row in rows {
        let r = row["r"].as_f64().unwrap();
        let a0 = row["a0"].as_f64().unwrap();
        let expect = -e / r;
        assert!(((a0 - expect) / expect).abs() < 1e-14);
        assert_eq!(row["ai_x"].as_f64().unwrap(), 0.0);
        assert_eq!(row["ai_y"].as_f64().unwrap(), 0.0);
    }
}

#[test]
fn bound_round_trip_passes() {
    let out = nckg(&["bound", "--state", "2,1,1", "--model", "nr", "--accuracy-hz", "14e3", "--order", "first"]);
    let v = stdout_json(&out);
    let res = &v["results"];
    assert!(res["round_trip_residual"].as_f64().unwrap() <= 1e-10);
    assert!(res["theta_max_ev2"].as_f64().unwrap() > 0.0);
    assert!(res["lambda_gev"].as_f64().unwrap() > 0.0);
    let reference = res["paper_reference_value_gev2"].as_f64().unwrap();
    assert!(((reference - 2.5e-7) / 2.5e-7).abs() < 1e-12);
    assert!(res["ratio_to_paper"].as_f64().unwrap() > 0.0);
}

#[test]
fn usage_error_exits_2() {
    let out = nckg(&["spectrum", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = nckg(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_error_exits_3_with_json_stderr() {
    // nr model with n_p = 0 leaves no valid states.
    let out = nckg(&["spectrum", "--model", "nr", "--n", "0", "--l", "0"]);
    assert_eq!(out.status.code(), Some(3));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).expect("stderr not JSON");
    assert!(err["error"]["kind"].is_string());
    assert!(err["error"]["message"].is_string());

    let out = nckg(&["bound", "--state", "2,1,0", "--model", "nr", "--accuracy-hz", "14e3", "--order", "first"]);
    assert_eq!(out.status.code(), Some(3));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "no_first_order_sensitivity");
}

#[test]
fn verify_exits_zero() {
    let out = nckg(&["verify"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stdout: {}",
        String::from_utf8_lossy(&out.stdout)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["all_passed"], serde_json::Value::Bool(true));
    assert_eq!(v["results"]["rows"].as_array().unwrap().len(), 9);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("nckg-out-{}.json", std::process::id()));
    let out = nckg(&["--out", path.to_str().unwrap(), "nu", "--n", "0", "--l", "1"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["command"], "nu");
    std::fs::remove_file(&path).ok();
}

#[test]
fn config_file_and_env_fallback() {
    let path = std::env::temp_dir().join(format!("nckg-cfg-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"alpha": 0.2}"#).unwrap();

    let flagged = nckg(&["--config", path.to_str().unwrap(), "spectrum", "--n", "0", "--l", "0", "--theta", "0"]);
    let v = stdout_json(&flagged);
    let e0 = v["results"]["rows"][0]["e0"].as_f64().unwrap();
    // alpha = 0.2 binds much deeper than the CODATA default.
    assert!(e0 < 0.999);

    let via_env = Command::new(env!("CARGO_BIN_EXE_nckg"))
        .args(["spectrum", "--n", "0", "--l", "0", "--theta", "0"])
        .env("NCKG_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(flagged.stdout, via_env.stdout);
    std::fs::remove_file(&path).ok();
}
