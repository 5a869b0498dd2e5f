//! Deterministic CSV serialization and the JSON run manifest.
//!
//! Every number is written in scientific notation with 12 significant
//! digits, so identical runs produce byte-identical files.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use crate::analysis::PhaseDiagram;
use crate::config::RunConfig;
use crate::error::Result;
use crate::evolve::EvolutionTrace;
use crate::spectral::{MetricMap, SpectralFrame};

/// Fixed-precision scientific formatting; negative zero is normalized.
pub fn fmt_sci(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputFile {
    pub file: String,
    pub rows: usize,
    pub cols: usize,
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub config_sha256: String,
    pub outputs: Vec<OutputFile>,
    pub duration_seconds: f64,
    pub config: RunConfig,
}

pub fn config_sha256(config: &RunConfig) -> String {
    use sha2::{Digest, Sha256};
    let digest = Sha256::digest(config.canonical_toml().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn open(dir: &Path, name: &str) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(dir.join(name))?))
}

/// trace.csv: z, pop_1..pop_M, norm, then optional zeta and survival columns.
pub fn write_trace(
    dir: &Path,
    trace: &EvolutionTrace,
    zeta: Option<&[f64]>,
    survival: bool,
) -> Result<OutputFile> {
    let sites = trace.states[0].dim();
    let mut w = open(dir, "trace.csv")?;
    let mut header = String::from("z");
    for m in 1..=sites {
        header.push_str(&format!(",pop_{m}"));
    }
    header.push_str(",norm");
    if zeta.is_some() {
        header.push_str(",zeta");
    }
    if survival {
        header.push_str(",survival");
    }
    writeln!(w, "{header}")?;
    let cols = header.split(',').count();
    for (k, z) in trace.z.iter().enumerate() {
        let mut line = fmt_sci(*z);
        for p in &trace.populations[k] {
            line.push(',');
            line.push_str(&fmt_sci(*p));
        }
        line.push(',');
        line.push_str(&fmt_sci(trace.states[k].norm()));
        if let Some(zs) = zeta {
            line.push(',');
            line.push_str(&fmt_sci(zs[k]));
        }
        if survival {
            line.push(',');
            line.push_str(&fmt_sci(trace.survival[k]));
        }
        writeln!(w, "{line}")?;
    }
    w.flush()?;
    Ok(OutputFile {
        file: "trace.csv".into(),
        rows: trace.z.len(),
        cols,
    })
}

/// bands.csv: phi, dbeta, band, eigenvalue, zeta — one row per band per
/// path point, in path order.
pub fn write_bands(dir: &Path, frames: &[SpectralFrame]) -> Result<OutputFile> {
    let mut w = open(dir, "bands.csv")?;
    writeln!(w, "phi,dbeta,band,eigenvalue,zeta")?;
    let mut rows = 0;
    for frame in frames {
        for band in 0..frame.sites() {
            writeln!(
                w,
                "{},{},{},{},{}",
                fmt_sci(frame.phi),
                fmt_sci(frame.dbeta),
                band,
                fmt_sci(frame.eigenvalues[band]),
                fmt_sci(frame.zeta[band]),
            )?;
            rows += 1;
        }
    }
    w.flush()?;
    Ok(OutputFile {
        file: "bands.csv".into(),
        rows,
        cols: 5,
    })
}

/// metric.csv: phi, dbeta, g_pp, g_pd, g_dd, det_g; missing points keep
/// their grid row with empty tensor cells.
pub fn write_metric(dir: &Path, map: &MetricMap) -> Result<OutputFile> {
    let mut w = open(dir, "metric.csv")?;
    writeln!(w, "phi,dbeta,g_pp,g_pd,g_dd,det_g")?;
    let mut rows = 0;
    for (i, phi) in map.phi_grid.iter().enumerate() {
        for (j, dbeta) in map.dbeta_grid.iter().enumerate() {
            match map.at(i, j) {
                Some(g) => writeln!(
                    w,
                    "{},{},{},{},{},{}",
                    fmt_sci(*phi),
                    fmt_sci(*dbeta),
                    fmt_sci(g.g_pp),
                    fmt_sci(g.g_pd),
                    fmt_sci(g.g_dd),
                    fmt_sci(g.det()),
                )?,
                None => writeln!(w, "{},{},,,,", fmt_sci(*phi), fmt_sci(*dbeta))?,
            }
            rows += 1;
        }
    }
    w.flush()?;
    Ok(OutputFile {
        file: "metric.csv".into(),
        rows,
        cols: 6,
    })
}

/// phase.csv: phi0, dphi, dbeta, chi, label; missing cells carry an empty
/// chi and the label "missing".
pub fn write_phase(dir: &Path, pd: &PhaseDiagram) -> Result<OutputFile> {
    let mut w = open(dir, "phase.csv")?;
    writeln!(w, "phi0,dphi,dbeta,chi,label")?;
    let mut rows = 0;
    for (i, phi0) in pd.phi0_grid.iter().enumerate() {
        for (j, dphi) in pd.dphi_grid.iter().enumerate() {
            for (k, dbeta) in pd.dbeta_grid.iter().enumerate() {
                let chi = pd
                    .chi_at(i, j, k)
                    .map(fmt_sci)
                    .unwrap_or_default();
                writeln!(
                    w,
                    "{},{},{},{},{}",
                    fmt_sci(*phi0),
                    fmt_sci(*dphi),
                    fmt_sci(*dbeta),
                    chi,
                    pd.label_at(i, j, k).as_str(),
                )?;
                rows += 1;
            }
        }
    }
    w.flush()?;
    Ok(OutputFile {
        file: "phase.csv".into(),
        rows,
        cols: 5,
    })
}

/// decomp.csv: z, weight_1..weight_M (squared magnitudes per band of the
/// initial free Hamiltonian).
pub fn write_decomp(dir: &Path, z: &[f64], weights: &[Vec<f64>]) -> Result<OutputFile> {
    let bands = weights.first().map(Vec::len).unwrap_or(0);
    let mut w = open(dir, "decomp.csv")?;
    let mut header = String::from("z");
    for b in 1..=bands {
        header.push_str(&format!(",weight_{b}"));
    }
    writeln!(w, "{header}")?;
    for (k, zk) in z.iter().enumerate() {
        let mut line = fmt_sci(*zk);
        for v in &weights[k] {
            line.push(',');
            line.push_str(&fmt_sci(*v));
        }
        writeln!(w, "{line}")?;
    }
    w.flush()?;
    Ok(OutputFile {
        file: "decomp.csv".into(),
        rows: z.len(),
        cols: bands + 1,
    })
}

pub fn write_manifest(dir: &Path, manifest: &RunManifest) -> Result<()> {
    let mut w = open(dir, "manifest.json")?;
    let text = serde_json::to_string_pretty(manifest).expect("manifest serializes");
    writeln!(w, "{text}")?;
    w.flush()?;
    Ok(())
}
