use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boundstate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_reports_double_degeneracy() {
    let out = run(&["classify", "--beta", "2", "--g2", "0.3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["degeneracy"], "double");
    assert_eq!(v["allowed_parities"], serde_json::json!(["even", "odd"]));
}

#[test]
fn classify_intermediate_is_odd_only() {
    let out = run(&["classify", "--beta", "1.5"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["allowed_parities"], serde_json::json!(["odd"]));
}

#[test]
fn supercritical_exits_two() {
    let out = run(&["classify", "--beta", "2", "--g2", "-0.2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("alpha_c"));
    assert_eq!(run(&["spectrum", "--g1", "-10", "--g2", "-0.125"]).status.code(), Some(2));
}

#[test]
fn spectrum_table_and_empty_verdict() {
    let out = run(&["spectrum", "--g1", "-10", "--g2", "0", "--nmax", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,energy,s,kappa"));
    let energies: Vec<f64> = lines.map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(energies, vec![-50.0, -12.5, -100.0 / 18.0]);

    let empty = stdout(&run(&["spectrum", "--g1", "0", "--g2", "0.3"]));
    assert!(empty.contains("no bound states"));
}

#[test]
fn json_round_trips_bit_exactly() {
    let out = run(&["spectrum", "--g1", "-7.3", "--g2", "0.41", "--nmax", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let states = boundstate::spectra::kratzer_spectrum(-7.3, 0.41, 6).unwrap();
    for (row, st) in v["states"].as_array().unwrap().iter().zip(&states) {
        assert_eq!(row["energy"].as_f64().unwrap().to_bits(), st.energy.to_bits());
        assert_eq!(row["kappa"].as_f64().unwrap().to_bits(), st.kappa.to_bits());
    }
}

#[test]
fn csv_output_is_deterministic() {
    let args = ["wavefunction", "--g1", "-10", "--g2", "0.1", "--n", "2", "--samples", "50"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn io_failure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "").unwrap();
    let target = blocker.join("out.csv");
    let out = run(&["spectrum", "--g1", "-10", "-o", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn oracle_agrees_at_default_grid() {
    let out = run(&["oracle", "--g1", "-10", "--g2", "0.3"]);
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        let err: f64 = line.split(',').nth(3).unwrap().parse().unwrap();
        assert!(err < 5e-3, "{line}");
    }
}
