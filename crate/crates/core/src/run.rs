//! Scenario execution: turns a parsed config into output files plus a
//! manifest.

use std::path::Path;
use std::time::Instant;

use crate::analysis::{decompose, phase_diagram, PhaseDiagramParams};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::evolve::{default_steps, propagate, projective_chain, EvolutionTrace, StateVector};
use crate::model::{LatticeKind, LatticeSpec, MeasurementProgram, PumpRamp};
use crate::output::{
    config_sha256, write_bands, write_decomp, write_manifest, write_metric, write_phase,
    write_trace, OutputFile, RunManifest,
};
use crate::spectral::{band_structure, eigenframe, metric_map, zeta_from_populations};

/// The CLI subcommands; one per figure workflow plus utilities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    Rabi,
    ZenoTwoLevel,
    Bands,
    MetricMap,
    ZeTbs,
    AzeTbs,
    PhaseDiagram,
    RampTunnel,
    Decompose,
}

impl Scenario {
    pub fn name(&self) -> &'static str {
        match self {
            Scenario::Rabi => "rabi",
            Scenario::ZenoTwoLevel => "zeno-two-level",
            Scenario::Bands => "bands",
            Scenario::MetricMap => "metric-map",
            Scenario::ZeTbs => "ze-tbs",
            Scenario::AzeTbs => "aze-tbs",
            Scenario::PhaseDiagram => "phase-diagram",
            Scenario::RampTunnel => "ramp-tunnel",
            Scenario::Decompose => "decompose",
        }
    }
}

/// Execute a scenario and write its outputs plus manifest.json into
/// `out_dir`. With `threads` given, sweep parallelism is confined to a pool
/// of that size; outputs are identical regardless.
pub fn run(
    scenario: Scenario,
    config: &RunConfig,
    out_dir: &Path,
    threads: Option<usize>,
) -> Result<RunManifest> {
    config.validate()?;
    std::fs::create_dir_all(out_dir)?;
    let started = Instant::now();
    let outputs = match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
            pool.install(|| execute(scenario, config, out_dir))?
        }
        None => execute(scenario, config, out_dir)?,
    };
    let manifest = RunManifest {
        command: scenario.name().into(),
        version: env!("CARGO_PKG_VERSION").into(),
        config_sha256: config_sha256(config),
        outputs,
        duration_seconds: started.elapsed().as_secs_f64(),
        config: config.clone(),
    };
    write_manifest(out_dir, &manifest)?;
    Ok(manifest)
}

fn execute(scenario: Scenario, config: &RunConfig, dir: &Path) -> Result<Vec<OutputFile>> {
    match scenario {
        Scenario::Rabi => run_rabi(config, dir),
        Scenario::ZenoTwoLevel => run_zeno_two_level(config, dir),
        Scenario::Bands => run_bands(config, dir),
        Scenario::MetricMap => run_metric_map(config, dir),
        Scenario::ZeTbs | Scenario::AzeTbs | Scenario::RampTunnel => run_pump(config, dir),
        Scenario::PhaseDiagram => run_phase_diagram(config, dir),
        Scenario::Decompose => run_decompose(config, dir),
    }
}

fn require_two_level(spec: &LatticeSpec, scenario: &str) -> Result<()> {
    if spec.kind != LatticeKind::TwoLevel {
        return Err(Error::InvalidArgument(format!(
            "{scenario} requires [lattice] kind = \"two_level\""
        )));
    }
    Ok(())
}

fn propagate_with_config(
    config: &RunConfig,
    spec: &LatticeSpec,
    ramp: &PumpRamp,
    program: &MeasurementProgram,
    psi0: &StateVector,
) -> Result<EvolutionTrace> {
    let steps = config
        .steps_override()
        .unwrap_or_else(|| default_steps(spec, ramp, program));
    propagate(spec, ramp, program, psi0, steps)
}

fn run_rabi(config: &RunConfig, dir: &Path) -> Result<Vec<OutputFile>> {
    let spec = config.lattice_spec()?;
    require_two_level(&spec, "rabi")?;
    let ramp = config.pump_ramp()?;
    let psi0 = StateVector::basis(2, 1)?;
    let trace = propagate_with_config(config, &spec, &ramp, &MeasurementProgram::empty(), &psi0)?;
    Ok(vec![write_trace(dir, &trace, None, false)?])
}

fn run_zeno_two_level(config: &RunConfig, dir: &Path) -> Result<Vec<OutputFile>> {
    let spec = config.lattice_spec()?;
    require_two_level(&spec, "zeno-two-level")?;
    let ramp = config.pump_ramp()?;
    let psi0 = StateVector::basis(2, 1)?;
    let trace = if config.is_projective() {
        if config.measurement.pulses == 0 {
            return Err(Error::config(
                "measurement.pulses",
                "projective mode needs pulses >= 1",
            ));
        }
        projective_chain(&spec, &psi0, config.measurement.pulses, ramp.length)?
    } else {
        let program = config.measurement_program()?;
        propagate_with_config(config, &spec, &ramp, &program, &psi0)?
    };
    Ok(vec![write_trace(dir, &trace, None, true)?])
}

fn run_bands(config: &RunConfig, dir: &Path) -> Result<Vec<OutputFile>> {
    let spec = config.lattice_spec()?;
    let phis = config.phi_grid();
    let dbetas = config.dbeta_grid();
    let path: Vec<(f64, f64)> = if dbetas.len() == 1 {
        phis.iter().map(|&p| (p, dbetas[0])).collect()
    } else if phis.len() == 1 {
        dbetas.iter().map(|&d| (phis[0], d)).collect()
    } else if phis.len() == dbetas.len() {
        phis.iter().copied().zip(dbetas.iter().copied()).collect()
    } else {
        return Err(Error::config(
            "sweep.phi_count",
            "bands needs matching phi/dbeta counts, or one of them equal to 1",
        ));
    };
    let frames = band_structure(&spec, &path, config.measurement.site)?;
    Ok(vec![write_bands(dir, &frames)?])
}

fn run_metric_map(config: &RunConfig, dir: &Path) -> Result<Vec<OutputFile>> {
    let spec = config.lattice_spec()?;
    let frame0 = eigenframe(&spec, config.ramp.phi0, 1, 0.0, None)?;
    let band = config.band_select().resolve(&frame0)?;
    let map = metric_map(
        &spec,
        band,
        &config.phi_grid(),
        &config.dbeta_grid(),
        config.measurement.site,
        Some(config.metric_deltas(&spec)),
    )?;
    Ok(vec![write_metric(dir, &map)?])
}

fn run_pump(config: &RunConfig, dir: &Path) -> Result<Vec<OutputFile>> {
    let spec = config.lattice_spec()?;
    let ramp = config.pump_ramp()?;
    let program = config.measurement_program()?;
    let frame0 = eigenframe(&spec, ramp.phi0, 1, 0.0, None)?;
    let band = config.band_select().resolve(&frame0)?;
    let psi0 = frame0.state(band)?;
    let trace = propagate_with_config(config, &spec, &ramp, &program, &psi0)?;
    let cell = crate::spectral::default_cell(spec.sites);
    let zeta: Vec<f64> = trace
        .populations
        .iter()
        .map(|row| zeta_from_populations(row, cell))
        .collect::<Result<_>>()?;
    Ok(vec![write_trace(dir, &trace, Some(&zeta), false)?])
}

fn run_phase_diagram(config: &RunConfig, dir: &Path) -> Result<Vec<OutputFile>> {
    let spec = config.lattice_spec()?;
    let params = PhaseDiagramParams {
        band: config.band_select(),
        site: config.measurement.site,
        length: config.ramp.length,
        z_eval: config.z_eval(),
        chi_threshold: config.sweep.chi_threshold,
        path_steps: config.numerics.path_steps,
    };
    let pd = phase_diagram(
        &spec,
        &config.phi0_grid(),
        &config.dphi_grid(),
        &config.dbeta_grid(),
        &params,
    )?;
    Ok(vec![write_phase(dir, &pd)?])
}

fn run_decompose(config: &RunConfig, dir: &Path) -> Result<Vec<OutputFile>> {
    let spec = config.lattice_spec()?;
    let ramp = config.pump_ramp()?;
    let program = config.measurement_program()?;
    let frame0 = eigenframe(&spec, ramp.phi0, 1, 0.0, None)?;
    let band = config.band_select().resolve(&frame0)?;
    let psi0 = frame0.state(band)?;
    let trace = propagate_with_config(config, &spec, &ramp, &program, &psi0)?;
    let weights: Vec<Vec<f64>> = trace
        .states
        .iter()
        .zip(&trace.z)
        .map(|(state, &z)| {
            decompose(state, z, &frame0)
                .map(|w| w.weights.iter().map(|c| c.norm_sqr()).collect())
        })
        .collect::<Result<_>>()?;
    Ok(vec![write_decomp(dir, &trace.z, &weights)?])
}
