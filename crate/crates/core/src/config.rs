//! Run configuration: flat TOML sections, strict key checking, defaults
//! echoed back into the parsed structure.

use serde::{Deserialize, Serialize};

use crate::analysis::{self, BandSelect};
use crate::error::{Error, Result};
use crate::model::{
    LatticeSpec, MeasurementProfile, MeasurementProgram, PhiUnit, ProgramEntry, PumpRamp,
};
use crate::spectral::MetricDeltas;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LatticeSection {
    /// "aah" or "two_level".
    pub kind: String,
    pub sites: usize,
    pub beta: f64,
    pub kappa0: f64,
    pub kappa_m: f64,
    pub ell: f64,
    /// "radians" or "turns".
    pub phi_unit: String,
}

impl Default for LatticeSection {
    fn default() -> Self {
        LatticeSection {
            kind: "aah".into(),
            sites: crate::model::DEFAULT_SITES,
            beta: crate::model::DEFAULT_BETA,
            kappa0: crate::model::DEFAULT_KAPPA0,
            kappa_m: crate::model::DEFAULT_KAPPA_M,
            ell: crate::model::DEFAULT_ELL,
            phi_unit: "radians".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RampSection {
    pub phi0: f64,
    pub dphi: f64,
    pub length: f64,
}

impl Default for RampSection {
    fn default() -> Self {
        RampSection {
            phi0: analysis::ZE_PHI0,
            dphi: analysis::ZE_DPHI,
            length: analysis::ADIABATIC_LENGTH,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasurementSection {
    /// 1-based measured site.
    pub site: usize,
    /// "none", "constant", "linear", "pulse", "sampled" or "projective".
    pub profile: String,
    pub dbeta: f64,
    pub dbeta_start: f64,
    pub dbeta_end: f64,
    pub z_start: f64,
    pub z_end: f64,
    pub pulses: usize,
    pub pulse_len: f64,
    /// Pulse-train span; 0 means the full ramp length.
    pub span: f64,
    pub z_grid: Vec<f64>,
    pub values: Vec<f64>,
}

impl Default for MeasurementSection {
    fn default() -> Self {
        MeasurementSection {
            site: 1,
            profile: "none".into(),
            dbeta: 0.0,
            dbeta_start: 0.0,
            dbeta_end: 0.0,
            z_start: 0.0,
            z_end: 0.0,
            pulses: 0,
            pulse_len: 0.0,
            span: 0.0,
            z_grid: Vec::new(),
            values: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSection {
    /// Band index for spectral sweeps; -1 picks the most right-localized
    /// band at the ramp start.
    pub band: i64,
    pub phi_min: f64,
    pub phi_max: f64,
    pub phi_count: usize,
    pub dbeta_min: f64,
    pub dbeta_max: f64,
    pub dbeta_count: usize,
    pub phi0_min: f64,
    pub phi0_max: f64,
    pub phi0_count: usize,
    pub dphi_min: f64,
    pub dphi_max: f64,
    pub dphi_count: usize,
    pub chi_threshold: f64,
    /// Distance at which chi is evaluated; 0 means the ramp length.
    pub z_eval: f64,
}

impl Default for SweepSection {
    fn default() -> Self {
        SweepSection {
            band: -1,
            phi_min: -0.3,
            phi_max: 0.3,
            phi_count: 61,
            dbeta_min: 0.0,
            dbeta_max: analysis::AZE_MEASUREMENT_FACTOR * crate::model::DEFAULT_KAPPA0,
            dbeta_count: 25,
            phi0_min: -0.7,
            phi0_max: 0.3,
            phi0_count: 11,
            dphi_min: -0.6,
            dphi_max: 0.6,
            dphi_count: 11,
            chi_threshold: analysis::DEFAULT_CHI_THRESHOLD,
            z_eval: 0.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericsSection {
    /// Propagation steps; 0 selects the default step count.
    pub steps: usize,
    /// Band-tracking steps for decay-rate evaluations.
    pub path_steps: usize,
    /// Metric stencil deltas; 0 selects the defaults.
    pub metric_dphi: f64,
    pub metric_ddbeta: f64,
}

impl Default for NumericsSection {
    fn default() -> Self {
        NumericsSection {
            steps: 0,
            path_steps: analysis::DEFAULT_PATH_STEPS,
            metric_dphi: 0.0,
            metric_ddbeta: 0.0,
        }
    }
}

/// The full, defaults-filled run configuration.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RunConfig {
    pub lattice: LatticeSection,
    pub ramp: RampSection,
    pub measurement: MeasurementSection,
    pub sweep: SweepSection,
    pub numerics: NumericsSection,
}

// Raw mirror with every key optional; unknown keys are rejected here.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    lattice: Option<RawLattice>,
    ramp: Option<RawRamp>,
    measurement: Option<RawMeasurement>,
    sweep: Option<RawSweep>,
    numerics: Option<RawNumerics>,
}

macro_rules! fill {
    ($dst:expr, $src:expr, $($field:ident),+ $(,)?) => {
        $(if let Some(v) = $src.$field { $dst.$field = v; })+
    };
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLattice {
    kind: Option<String>,
    sites: Option<usize>,
    beta: Option<f64>,
    kappa0: Option<f64>,
    kappa_m: Option<f64>,
    ell: Option<f64>,
    phi_unit: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRamp {
    phi0: Option<f64>,
    dphi: Option<f64>,
    length: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMeasurement {
    site: Option<usize>,
    profile: Option<String>,
    dbeta: Option<f64>,
    dbeta_start: Option<f64>,
    dbeta_end: Option<f64>,
    z_start: Option<f64>,
    z_end: Option<f64>,
    pulses: Option<usize>,
    pulse_len: Option<f64>,
    span: Option<f64>,
    z_grid: Option<Vec<f64>>,
    values: Option<Vec<f64>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    band: Option<i64>,
    phi_min: Option<f64>,
    phi_max: Option<f64>,
    phi_count: Option<usize>,
    dbeta_min: Option<f64>,
    dbeta_max: Option<f64>,
    dbeta_count: Option<usize>,
    phi0_min: Option<f64>,
    phi0_max: Option<f64>,
    phi0_count: Option<usize>,
    dphi_min: Option<f64>,
    dphi_max: Option<f64>,
    dphi_count: Option<usize>,
    chi_threshold: Option<f64>,
    z_eval: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNumerics {
    steps: Option<usize>,
    path_steps: Option<usize>,
    metric_dphi: Option<f64>,
    metric_ddbeta: Option<f64>,
}

/// Parse a config file, fill defaults, and validate every constraint.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let raw: RawConfig =
        toml::from_str(text).map_err(|e| Error::config("<config>", e.to_string()))?;
    let mut config = RunConfig::default();
    if let Some(s) = raw.lattice {
        fill!(config.lattice, s, kind, sites, beta, kappa0, kappa_m, ell, phi_unit);
    }
    if let Some(s) = raw.ramp {
        fill!(config.ramp, s, phi0, dphi, length);
    }
    if let Some(s) = raw.measurement {
        fill!(
            config.measurement, s, site, profile, dbeta, dbeta_start, dbeta_end, z_start, z_end,
            pulses, pulse_len, span, z_grid, values
        );
    }
    if let Some(s) = raw.sweep {
        fill!(
            config.sweep, s, band, phi_min, phi_max, phi_count, dbeta_min, dbeta_max, dbeta_count,
            phi0_min, phi0_max, phi0_count, dphi_min, dphi_max, dphi_count, chi_threshold, z_eval
        );
    }
    if let Some(s) = raw.numerics {
        fill!(config.numerics, s, steps, path_steps, metric_dphi, metric_ddbeta);
    }
    config.validate()?;
    Ok(config)
}

fn linspace(min: f64, max: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![min];
    }
    (0..count)
        .map(|k| min + (max - min) * k as f64 / (count - 1) as f64)
        .collect()
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let spec = self.lattice_spec().map_err(|e| match e {
            Error::Config { .. } => e,
            other => Error::config("lattice", other.to_string()),
        })?;
        self.pump_ramp()
            .map_err(|e| Error::config("ramp.length", e.to_string()))?;
        if self.measurement.site == 0 || self.measurement.site > spec.sites {
            return Err(Error::config(
                "measurement.site",
                format!(
                    "site {} out of range 1..={}",
                    self.measurement.site, spec.sites
                ),
            ));
        }
        self.measurement_program()?
            .validate(spec.sites)
            .map_err(|e| Error::config("measurement", e.to_string()))?;
        for (name, count) in [
            ("sweep.phi_count", self.sweep.phi_count),
            ("sweep.dbeta_count", self.sweep.dbeta_count),
            ("sweep.phi0_count", self.sweep.phi0_count),
            ("sweep.dphi_count", self.sweep.dphi_count),
        ] {
            if count == 0 {
                return Err(Error::config(name, "grid count must be >= 1"));
            }
        }
        if self.sweep.band < -1 || self.sweep.band >= spec.sites as i64 {
            return Err(Error::config(
                "sweep.band",
                format!("band must be -1 (auto) or 0..{}", spec.sites - 1),
            ));
        }
        if self.numerics.path_steps == 0 {
            return Err(Error::config("numerics.path_steps", "must be >= 1"));
        }
        let z_eval = self.z_eval();
        if z_eval < 0.0 || z_eval > self.ramp.length {
            return Err(Error::config(
                "sweep.z_eval",
                format!("must lie in [0, {}]", self.ramp.length),
            ));
        }
        Ok(())
    }

    pub fn lattice_spec(&self) -> Result<LatticeSpec> {
        let phi_unit = match self.lattice.phi_unit.as_str() {
            "radians" => PhiUnit::Radians,
            "turns" => PhiUnit::Turns,
            other => {
                return Err(Error::config(
                    "lattice.phi_unit",
                    format!("expected \"radians\" or \"turns\", got \"{other}\""),
                ))
            }
        };
        match self.lattice.kind.as_str() {
            "two_level" => LatticeSpec::two_level(self.lattice.beta, self.lattice.kappa0),
            "aah" => LatticeSpec::aah(
                self.lattice.sites,
                self.lattice.beta,
                self.lattice.kappa0,
                self.lattice.kappa_m,
                self.lattice.ell,
                phi_unit,
            ),
            other => Err(Error::config(
                "lattice.kind",
                format!("expected \"aah\" or \"two_level\", got \"{other}\""),
            )),
        }
    }

    pub fn pump_ramp(&self) -> Result<PumpRamp> {
        PumpRamp::new(self.ramp.phi0, self.ramp.dphi, self.ramp.length)
    }

    /// The Hamiltonian measurement program. A "projective" profile carries no
    /// Hamiltonian term; its pulse count drives the projective chain instead.
    pub fn measurement_program(&self) -> Result<MeasurementProgram> {
        let m = &self.measurement;
        let span = if m.span > 0.0 { m.span } else { self.ramp.length };
        let profile = match m.profile.as_str() {
            "none" | "projective" => return Ok(MeasurementProgram::empty()),
            "constant" => MeasurementProfile::Constant { dbeta: m.dbeta },
            "linear" => MeasurementProfile::LinearRamp {
                dbeta_start: m.dbeta_start,
                dbeta_end: m.dbeta_end,
                z_start: m.z_start,
                z_end: if m.z_end > m.z_start {
                    m.z_end
                } else {
                    self.ramp.length
                },
            },
            "pulse" => MeasurementProfile::PulseTrain {
                pulses: m.pulses,
                pulse_len: m.pulse_len,
                dbeta: m.dbeta,
                span,
            },
            "sampled" => MeasurementProfile::Sampled {
                z_grid: m.z_grid.clone(),
                values: m.values.clone(),
            },
            other => {
                return Err(Error::config(
                    "measurement.profile",
                    format!("unknown profile \"{other}\""),
                ))
            }
        };
        profile
            .validate()
            .map_err(|e| Error::config("measurement", e.to_string()))?;
        Ok(MeasurementProgram {
            entries: vec![ProgramEntry {
                site: m.site,
                profile,
            }],
        })
    }

    pub fn is_projective(&self) -> bool {
        self.measurement.profile == "projective"
    }

    pub fn band_select(&self) -> BandSelect {
        if self.sweep.band < 0 {
            BandSelect::RightBoundary
        } else {
            BandSelect::Fixed(self.sweep.band as usize)
        }
    }

    pub fn steps_override(&self) -> Option<usize> {
        (self.numerics.steps > 0).then_some(self.numerics.steps)
    }

    pub fn metric_deltas(&self, spec: &LatticeSpec) -> MetricDeltas {
        let default = MetricDeltas::default_for(spec);
        MetricDeltas {
            dphi: if self.numerics.metric_dphi > 0.0 {
                self.numerics.metric_dphi
            } else {
                default.dphi
            },
            ddbeta: if self.numerics.metric_ddbeta > 0.0 {
                self.numerics.metric_ddbeta
            } else {
                default.ddbeta
            },
        }
    }

    pub fn z_eval(&self) -> f64 {
        if self.sweep.z_eval > 0.0 {
            self.sweep.z_eval
        } else {
            self.ramp.length
        }
    }

    pub fn phi_grid(&self) -> Vec<f64> {
        linspace(self.sweep.phi_min, self.sweep.phi_max, self.sweep.phi_count)
    }

    pub fn dbeta_grid(&self) -> Vec<f64> {
        linspace(self.sweep.dbeta_min, self.sweep.dbeta_max, self.sweep.dbeta_count)
    }

    pub fn phi0_grid(&self) -> Vec<f64> {
        linspace(self.sweep.phi0_min, self.sweep.phi0_max, self.sweep.phi0_count)
    }

    pub fn dphi_grid(&self) -> Vec<f64> {
        linspace(self.sweep.dphi_min, self.sweep.dphi_max, self.sweep.dphi_count)
    }

    /// Canonical serialized form; the manifest hash is computed over this.
    pub fn canonical_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::LatticeKind;

    #[test]
    fn empty_config_uses_documented_defaults() {
        let cfg = parse_config("").unwrap();
        assert_eq!(cfg.lattice.kind, "aah");
        assert_eq!(cfg.lattice.sites, 9);
        assert_eq!(cfg.lattice.kappa0, crate::model::DEFAULT_KAPPA0);
        assert_eq!(cfg.ramp.phi0, 0.25);
        assert_eq!(cfg.measurement.profile, "none");
        assert_eq!(cfg.numerics.steps, 0);
        cfg.lattice_spec().unwrap();
    }

    #[test]
    fn minimal_two_level_config() {
        let cfg = parse_config(
            "[lattice]\nkind = \"two_level\"\nsites = 2\nkappa0 = 10.3\nkappa_m = 0.0\n",
        )
        .unwrap();
        let spec = cfg.lattice_spec().unwrap();
        assert_eq!(spec.kind, LatticeKind::TwoLevel);
        assert_eq!(spec.kappa0, 10.3);
        assert_eq!(spec.beta, 35.0);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = parse_config("[lattice]\nbogus_key = 1\n").unwrap_err();
        assert!(err.to_string().contains("bogus_key"), "{err}");
        let err = parse_config("[nonsense]\nx = 1\n").unwrap_err();
        assert!(err.to_string().contains("nonsense"), "{err}");
    }

    #[test]
    fn constraint_errors_name_the_key() {
        let err = parse_config("[lattice]\nkappa0 = -1.0\n").unwrap_err();
        assert!(err.to_string().contains("kappa0"), "{err}");
        let err = parse_config("[ramp]\nlength = 0.0\n").unwrap_err();
        assert!(err.to_string().contains("length"), "{err}");
        let err = parse_config("[measurement]\nsite = 12\n").unwrap_err();
        assert!(err.to_string().contains("site"), "{err}");
        let err = parse_config("[sweep]\nphi_count = 0\n").unwrap_err();
        assert!(err.to_string().contains("phi_count"), "{err}");
    }

    #[test]
    fn type_mismatch_is_reported() {
        let err = parse_config("[lattice]\nbeta = \"abc\"\n").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("beta") || msg.contains("string"), "{msg}");
    }

    #[test]
    fn config_round_trips_losslessly() {
        let text = r#"
[lattice]
kind = "aah"
kappa0 = 123.5
kappa_m = 60.0
[ramp]
phi0 = -0.6
dphi = 0.4
[measurement]
site = 2
profile = "constant"
dbeta = 148.2
[sweep]
band = 3
[numerics]
path_steps = 99
"#;
        let cfg = parse_config(text).unwrap();
        let echoed = cfg.canonical_toml();
        let cfg2 = parse_config(&echoed).unwrap();
        assert_eq!(cfg, cfg2);
        assert_eq!(cfg2.measurement.dbeta, 148.2);
        assert_eq!(cfg2.numerics.path_steps, 99);
    }

    #[test]
    fn profile_construction() {
        let cfg = parse_config(
            "[measurement]\nprofile = \"pulse\"\npulses = 5\npulse_len = 0.02\ndbeta = 4.0\n",
        )
        .unwrap();
        let program = cfg.measurement_program().unwrap();
        assert_eq!(program.entries.len(), 1);
        // span defaults to the ramp length
        assert!(matches!(
            program.entries[0].profile,
            MeasurementProfile::PulseTrain { span, .. } if span == 1.0
        ));

        let err = parse_config("[measurement]\nprofile = \"warble\"\n").unwrap_err();
        assert!(err.to_string().contains("warble"));

        let cfg = parse_config("[measurement]\nprofile = \"projective\"\npulses = 10\n").unwrap();
        assert!(cfg.is_projective());
        assert!(cfg.measurement_program().unwrap().is_empty());
    }

    #[test]
    fn grids_and_band_selection() {
        let cfg = parse_config("[sweep]\nphi_min = 0.0\nphi_max = 1.0\nphi_count = 3\n").unwrap();
        assert_eq!(cfg.phi_grid(), vec![0.0, 0.5, 1.0]);
        assert!(matches!(cfg.band_select(), BandSelect::RightBoundary));
        let cfg = parse_config("[sweep]\nband = 2\n").unwrap();
        assert!(matches!(cfg.band_select(), BandSelect::Fixed(2)));
    }
}
