//! End-to-end checks of the command-line interface, the shipped preset
//! configs, and the output contracts.

use std::path::{Path, PathBuf};
use std::process::Command;

use zenowave::config::parse_config;
use zenowave::evolve::ideal_zeno_population;

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_zenowave")
}

fn configs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

fn csv_column(text: &str, col: usize) -> Vec<f64> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').nth(col).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn shipped_presets_all_parse() {
    for entry in std::fs::read_dir(configs_dir()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        parse_config(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    }
}

#[test]
fn pump_preset_matches_the_frozen_scenario_parameters() {
    let text = std::fs::read_to_string(configs_dir().join("ze_tbs.toml")).unwrap();
    let cfg = parse_config(&text).unwrap();
    assert_eq!(cfg.lattice.sites, 9);
    assert_eq!(cfg.lattice.phi_unit, "radians");
    assert_eq!(cfg.ramp.phi0, 0.25);
    assert_eq!(cfg.ramp.dphi, -0.5);
    assert_eq!(cfg.ramp.length, 1.0);
    assert_eq!(cfg.measurement.site, 1);
    assert_eq!(cfg.measurement.dbeta, 6.0 * cfg.lattice.kappa0);
    // round-trip through the canonical form
    let cfg2 = parse_config(&cfg.canonical_toml()).unwrap();
    assert_eq!(cfg, cfg2);
}

#[test]
fn rabi_run_produces_the_documented_trace_schema() {
    let dir = tempfile::tempdir().unwrap();
    let status = Command::new(binary())
        .args(["rabi", "--config"])
        .arg(configs_dir().join("rabi.toml"))
        .arg("--out")
        .arg(dir.path())
        .status()
        .unwrap();
    assert!(status.success());

    let trace = read(dir.path(), "trace.csv");
    let header = trace.lines().next().unwrap();
    assert_eq!(header, "z,pop_1,pop_2,norm");
    for norm in csv_column(&trace, 3) {
        assert!((norm - 1.0).abs() < 1e-9);
    }
    // transfer completes within the run
    let pop2 = csv_column(&trace, 2);
    assert!(pop2.iter().cloned().fold(0.0, f64::max) > 0.999);

    let manifest: serde_json::Value =
        serde_json::from_str(&read(dir.path(), "manifest.json")).unwrap();
    assert_eq!(manifest["command"], "rabi");
    assert_eq!(manifest["outputs"][0]["file"], "trace.csv");
    assert_eq!(
        manifest["outputs"][0]["rows"].as_u64().unwrap() as usize,
        trace.lines().count() - 1
    );
    assert_eq!(manifest["outputs"][0]["cols"], 4);
    assert_eq!(manifest["config"]["lattice"]["kappa0"], 10.3);
}

#[test]
fn projective_run_reports_the_survival_law() {
    let dir = tempfile::tempdir().unwrap();
    let status = Command::new(binary())
        .args(["zeno-two-level", "--config"])
        .arg(configs_dir().join("zeno_projective.toml"))
        .arg("--out")
        .arg(dir.path())
        .status()
        .unwrap();
    assert!(status.success());
    let trace = read(dir.path(), "trace.csv");
    assert_eq!(trace.lines().next().unwrap(), "z,pop_1,pop_2,norm,survival");
    let survival = csv_column(&trace, 4);
    let expected = ideal_zeno_population(10).unwrap();
    assert!((survival.last().unwrap() - expected).abs() < 1e-6);
}

#[test]
fn identical_configs_give_byte_identical_outputs() {
    let config = configs_dir().join("bands.toml");
    let mut bytes = Vec::new();
    for _ in 0..2 {
        let dir = tempfile::tempdir().unwrap();
        let status = Command::new(binary())
            .args(["bands", "--config"])
            .arg(&config)
            .arg("--out")
            .arg(dir.path())
            .status()
            .unwrap();
        assert!(status.success());
        bytes.push(std::fs::read(dir.path().join("bands.csv")).unwrap());
    }
    assert!(!bytes[0].is_empty());
    assert_eq!(bytes[0], bytes[1]);
}

#[test]
fn parallel_sweep_equals_serial_sweep() {
    let mut outputs = Vec::new();
    for threads in ["1", "4"] {
        let dir = tempfile::tempdir().unwrap();
        let status = Command::new(binary())
            .args(["metric-map", "--config"])
            .arg(configs_dir().join("metric_map.toml"))
            .arg("--out")
            .arg(dir.path())
            .args(["--threads", threads])
            .status()
            .unwrap();
        assert!(status.success());
        outputs.push(std::fs::read(dir.path().join("metric.csv")).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn invalid_configs_fail_with_the_key_in_the_message() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[lattice]\nkappa0 = -1.0\n").unwrap();
    let output = Command::new(binary())
        .args(["rabi", "--config"])
        .arg(&bad)
        .arg("--out")
        .arg(dir.path().join("out"))
        .output()
        .unwrap();
    assert!(!output.status.success());
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("kappa0"), "stderr: {stderr}");

    std::fs::write(&bad, "[lattice]\nno_such_key = 3\n").unwrap();
    let output = Command::new(binary())
        .args(["rabi", "--config"])
        .arg(&bad)
        .arg("--out")
        .arg(dir.path().join("out"))
        .output()
        .unwrap();
    assert!(!output.status.success());
    assert!(String::from_utf8_lossy(&output.stderr).contains("no_such_key"));
}

#[test]
fn phase_diagram_schema_and_manifest_cover_all_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("pd.toml");
    // small grid on a scaled-down lattice to keep the sweep quick
    std::fs::write(
        &cfg,
        "[lattice]\nkappa0 = 10.0\nkappa_m = 5.9\n\
         [measurement]\nsite = 2\n\
         [sweep]\nphi0_min = 0.25\nphi0_max = -0.6\nphi0_count = 2\n\
         dphi_min = -0.5\ndphi_max = 0.4\ndphi_count = 2\n\
         dbeta_min = 0.0\ndbeta_max = 12.0\ndbeta_count = 2\n\
         [numerics]\npath_steps = 80\n",
    )
    .unwrap();
    let out = dir.path().join("out");
    let status = Command::new(binary())
        .args(["phase-diagram", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());

    let phase = read(&out, "phase.csv");
    assert_eq!(phase.lines().next().unwrap(), "phi0,dphi,dbeta,chi,label");
    assert_eq!(phase.lines().count(), 1 + 8);
    // the zero-measurement cells are neutral with chi = 0
    for line in phase.lines().skip(1).step_by(2) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[4], "neutral");
        assert_eq!(fields[3], "0.00000000000e0");
    }

    // every file in the directory is referenced by exactly one manifest entry
    let manifest: serde_json::Value = serde_json::from_str(&read(&out, "manifest.json")).unwrap();
    let listed: Vec<String> = manifest["outputs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["file"].as_str().unwrap().to_string())
        .collect();
    let mut present: Vec<String> = std::fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n != "manifest.json")
        .collect();
    present.sort();
    let mut listed_sorted = listed.clone();
    listed_sorted.sort();
    assert_eq!(listed_sorted, present);
}

#[test]
fn decompose_run_emits_complete_weights() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("d.toml");
    std::fs::write(
        &cfg,
        "[lattice]\nkappa0 = 10.0\nkappa_m = 5.9\n[ramp]\nlength = 0.2\n",
    )
    .unwrap();
    let out = dir.path().join("out");
    let status = Command::new(binary())
        .args(["decompose", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(&out)
        .args(["--steps", "400"])
        .status()
        .unwrap();
    assert!(status.success());
    let decomp = read(&out, "decomp.csv");
    let header = decomp.lines().next().unwrap();
    assert_eq!(
        header,
        "z,weight_1,weight_2,weight_3,weight_4,weight_5,weight_6,weight_7,weight_8,weight_9"
    );
    assert_eq!(decomp.lines().count(), 1 + 401);
    for line in decomp.lines().skip(1) {
        let total: f64 = line
            .split(',')
            .skip(1)
            .map(|v| v.parse::<f64>().unwrap())
            .sum();
        assert!((total - 1.0).abs() < 1e-9, "weights not complete: {total}");
    }
}

#[test]
fn pump_trace_includes_localization_column() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    // scaled-down lattice keeps the run quick; physics is scale-free
    let cfg = dir.path().join("z.toml");
    std::fs::write(
        &cfg,
        "[lattice]\nkappa0 = 10.0\nkappa_m = 5.9\n[measurement]\nprofile = \"none\"\n",
    )
    .unwrap();
    let status = Command::new(binary())
        .args(["ze-tbs", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let trace = read(&out, "trace.csv");
    let header = trace.lines().next().unwrap();
    assert!(header.ends_with(",norm,zeta"), "header: {header}");
    let zeta = csv_column(&trace, header.split(',').count() - 1);
    assert!(zeta[0] < -0.8, "pump must start right-localized");
}
