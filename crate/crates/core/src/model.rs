//! System and schedule types: lattice descriptions, pump ramps, measurement
//! programs, and the instantaneous Hamiltonian H(z) = H0(phi(z)) + M(dbeta(z)).

use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Interpretation of all phase inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiUnit {
    /// Fractions of a full 2*pi period.
    Turns,
    Radians,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeKind {
    TwoLevel,
    Aah,
}

/// Static description of a tight-binding system: a pair of coupled guides or
/// an M-site chain with cosine-modulated hopping.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeSpec {
    pub kind: LatticeKind,
    /// Site count M.
    pub sites: usize,
    /// Uniform propagation constant (1/m); enters as the diagonal.
    pub beta: f64,
    /// Static coupling (1/m).
    pub kappa0: f64,
    /// Hopping modulation strength (1/m); zero for two-level systems.
    pub kappa_m: f64,
    /// Spatial modulation frequency, e.g. 1/3.
    pub ell: f64,
    pub phi_unit: PhiUnit,
}

/// Defaults for the M = 9 modulated chain. kappa0/kappa_m are repo presets
/// chosen so that both gaps host boundary states of either polarity and a
/// 1 m pump crosses the gap-closing region adiabatically; the modulation
/// ratio also places the measurement-driven level crossing inside the pump
/// windows. beta matches the two-guide reference system and only contributes
/// a global phase.
pub const DEFAULT_SITES: usize = 9;
pub const DEFAULT_BETA: f64 = 35.0;
pub const DEFAULT_KAPPA0: f64 = 400.0;
pub const DEFAULT_KAPPA_M: f64 = 236.0;
pub const DEFAULT_ELL: f64 = 1.0 / 3.0;

impl LatticeSpec {
    /// Two coupled guides with coupling `kappa0`.
    pub fn two_level(beta: f64, kappa0: f64) -> Result<Self> {
        let spec = LatticeSpec {
            kind: LatticeKind::TwoLevel,
            sites: 2,
            beta,
            kappa0,
            kappa_m: 0.0,
            ell: 0.0,
            phi_unit: PhiUnit::Turns,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Modulated chain with explicit parameters.
    pub fn aah(
        sites: usize,
        beta: f64,
        kappa0: f64,
        kappa_m: f64,
        ell: f64,
        phi_unit: PhiUnit,
    ) -> Result<Self> {
        let spec = LatticeSpec {
            kind: LatticeKind::Aah,
            sites,
            beta,
            kappa0,
            kappa_m,
            ell,
            phi_unit,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Preset constructor: additionally requires kappa0 - kappa_m > 0 so that
    /// every hopping stays positive for all phases.
    pub fn aah_preset(sites: usize, beta: f64, kappa0: f64, kappa_m: f64) -> Result<Self> {
        if kappa0 - kappa_m <= 0.0 {
            return Err(Error::InvalidLattice(format!(
                "preset requires kappa0 - kappa_m > 0 (got {} - {})",
                kappa0, kappa_m
            )));
        }
        Self::aah(sites, beta, kappa0, kappa_m, DEFAULT_ELL, PhiUnit::Radians)
    }

    /// The default M = 9 chain.
    pub fn aah_default() -> Self {
        Self::aah_preset(DEFAULT_SITES, DEFAULT_BETA, DEFAULT_KAPPA0, DEFAULT_KAPPA_M)
            .expect("default preset is valid")
    }

    pub fn validate(&self) -> Result<()> {
        if self.sites < 2 {
            return Err(Error::InvalidLattice(format!(
                "need at least 2 sites, got {}",
                self.sites
            )));
        }
        if !(self.kappa0 > 0.0) {
            return Err(Error::InvalidLattice(format!(
                "kappa0 must be > 0, got {}",
                self.kappa0
            )));
        }
        if !(self.kappa_m >= 0.0) {
            return Err(Error::InvalidLattice(format!(
                "kappa_m must be >= 0, got {}",
                self.kappa_m
            )));
        }
        if !self.beta.is_finite() || !self.ell.is_finite() {
            return Err(Error::InvalidLattice("beta and ell must be finite".into()));
        }
        if self.kind == LatticeKind::TwoLevel && (self.sites != 2 || self.kappa_m != 0.0) {
            return Err(Error::InvalidLattice(
                "two-level systems require sites = 2 and kappa_m = 0".into(),
            ));
        }
        Ok(())
    }

    /// Convert a phase given in the spec's unit to radians.
    pub fn phi_to_radians(&self, phi: f64) -> f64 {
        match self.phi_unit {
            PhiUnit::Turns => phi * TAU,
            PhiUnit::Radians => phi,
        }
    }

    /// Express a phase given in turns in the spec's unit.
    pub fn turns_to_unit(&self, turns: f64) -> f64 {
        match self.phi_unit {
            PhiUnit::Turns => turns,
            PhiUnit::Radians => turns * TAU,
        }
    }

    /// Coupling on the bond between sites `bond` and `bond + 1` (1-based):
    /// kappa0 + kappa_m * cos(2*pi*ell*bond + phi).
    pub fn hopping(&self, bond: usize, phi: f64) -> Result<f64> {
        if bond == 0 || bond > self.sites - 1 {
            return Err(Error::SiteOutOfRange {
                site: bond,
                max: self.sites - 1,
            });
        }
        let arg = TAU * self.ell * bond as f64 + self.phi_to_radians(phi);
        Ok(self.kappa0 + self.kappa_m * arg.cos())
    }

    /// The free Hamiltonian H0(phi): real symmetric tridiagonal, diagonal
    /// `beta`, off-diagonals from [`Self::hopping`].
    pub fn build_h0(&self, phi: f64) -> Result<DMatrix<f64>> {
        self.validate()?;
        let n = self.sites;
        let mut h = DMatrix::zeros(n, n);
        for i in 0..n {
            h[(i, i)] = self.beta;
        }
        for bond in 1..n {
            let k = self.hopping(bond, phi)?;
            h[(bond - 1, bond)] = k;
            h[(bond, bond - 1)] = k;
        }
        Ok(h)
    }
}

/// Linear pump profile phi(z) = phi0 + dphi * z / length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PumpRamp {
    /// Start phase, in the lattice's phi unit.
    pub phi0: f64,
    /// Total phase increment over the full length.
    pub dphi: f64,
    /// Evolution length (m).
    pub length: f64,
}

impl PumpRamp {
    pub fn new(phi0: f64, dphi: f64, length: f64) -> Result<Self> {
        if !(length > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "ramp length must be > 0, got {length}"
            )));
        }
        Ok(PumpRamp { phi0, dphi, length })
    }

    /// Constant phase (dphi = 0) over `length`.
    pub fn constant(phi0: f64, length: f64) -> Result<Self> {
        Self::new(phi0, 0.0, length)
    }

    pub fn phi_at(&self, z: f64) -> f64 {
        self.phi0 + self.dphi * z / self.length
    }
}

/// One site's measurement-strength profile along z.
#[derive(Debug, Clone, PartialEq)]
pub enum MeasurementProfile {
    Constant {
        dbeta: f64,
    },
    LinearRamp {
        dbeta_start: f64,
        dbeta_end: f64,
        z_start: f64,
        z_end: f64,
    },
    /// `pulses` evenly spaced on-segments of length `pulse_len` inside
    /// `span`: the span divides into `pulses` equal slots and each slot ends
    /// with an on-segment, mimicking evolve-then-measure cycles.
    PulseTrain {
        pulses: usize,
        pulse_len: f64,
        dbeta: f64,
        span: f64,
    },
    /// Piecewise-constant mask: `values[i]` holds on [z_grid[i], z_grid[i+1]).
    Sampled {
        z_grid: Vec<f64>,
        values: Vec<f64>,
    },
}

impl MeasurementProfile {
    pub fn validate(&self) -> Result<()> {
        match self {
            MeasurementProfile::Constant { dbeta } => {
                if !dbeta.is_finite() {
                    return Err(Error::InvalidProgram("dbeta must be finite".into()));
                }
            }
            MeasurementProfile::LinearRamp {
                z_start,
                z_end,
                dbeta_start,
                dbeta_end,
            } => {
                if !(z_end > z_start) {
                    return Err(Error::InvalidProgram(format!(
                        "linear ramp needs z_end > z_start (got {z_start}..{z_end})"
                    )));
                }
                if !dbeta_start.is_finite() || !dbeta_end.is_finite() {
                    return Err(Error::InvalidProgram("ramp endpoints must be finite".into()));
                }
            }
            MeasurementProfile::PulseTrain {
                pulses,
                pulse_len,
                span,
                dbeta,
            } => {
                if *pulses == 0 {
                    return Err(Error::InvalidProgram("pulse train needs pulses >= 1".into()));
                }
                if !(*pulse_len > 0.0) || !(*span > 0.0) {
                    return Err(Error::InvalidProgram(
                        "pulse train needs pulse_len > 0 and span > 0".into(),
                    ));
                }
                if !dbeta.is_finite() {
                    return Err(Error::InvalidProgram("dbeta must be finite".into()));
                }
                let alpha = *pulses as f64 * *pulse_len / *span;
                if alpha > 1.0 + 1e-9 {
                    return Err(Error::InvalidProgram(format!(
                        "pulse coverage alpha = {alpha} exceeds 1; pulses would overlap"
                    )));
                }
            }
            MeasurementProfile::Sampled { z_grid, values } => {
                if z_grid.len() < 2 || values.len() != z_grid.len() {
                    return Err(Error::InvalidProgram(
                        "sampled profile needs >= 2 grid points and matching value count".into(),
                    ));
                }
                if z_grid.windows(2).any(|w| !(w[1] > w[0])) {
                    return Err(Error::InvalidProgram(
                        "sampled z grid must be strictly increasing".into(),
                    ));
                }
                if values.iter().any(|v| !v.is_finite()) {
                    return Err(Error::InvalidProgram("sampled values must be finite".into()));
                }
            }
        }
        Ok(())
    }

    /// Measurement strength at z. Errors when z falls outside a profile that
    /// has a bounded span (pulse trains, sampled masks).
    pub fn value(&self, z: f64) -> Result<f64> {
        match self {
            MeasurementProfile::Constant { dbeta } => Ok(*dbeta),
            MeasurementProfile::LinearRamp {
                dbeta_start,
                dbeta_end,
                z_start,
                z_end,
            } => {
                if z <= *z_start {
                    Ok(*dbeta_start)
                } else if z >= *z_end {
                    Ok(*dbeta_end)
                } else {
                    let t = (z - z_start) / (z_end - z_start);
                    Ok(dbeta_start + t * (dbeta_end - dbeta_start))
                }
            }
            MeasurementProfile::PulseTrain {
                pulses,
                pulse_len,
                dbeta,
                span,
            } => {
                let tol = span * 1e-12;
                if z < -tol || z > span + tol {
                    return Err(Error::ZOutOfSpan { z, span: *span });
                }
                let slot = span / *pulses as f64;
                let k = ((z / slot).floor() as usize).min(pulses - 1);
                let local = z - k as f64 * slot;
                if local >= slot - pulse_len {
                    Ok(*dbeta)
                } else {
                    Ok(0.0)
                }
            }
            MeasurementProfile::Sampled { z_grid, values } => {
                let lo = z_grid[0];
                let hi = *z_grid.last().unwrap();
                let tol = (hi - lo) * 1e-12;
                if z < lo - tol || z > hi + tol {
                    return Err(Error::ZOutOfSpan { z, span: hi });
                }
                // last interval is closed on the right
                let idx = match z_grid.binary_search_by(|g| g.total_cmp(&z)) {
                    Ok(i) => i,
                    Err(i) => i.saturating_sub(1),
                };
                Ok(values[idx.min(values.len() - 2)])
            }
        }
    }

    /// Largest |dbeta| the profile can produce; used for norm bounds.
    pub fn max_abs(&self) -> f64 {
        match self {
            MeasurementProfile::Constant { dbeta } => dbeta.abs(),
            MeasurementProfile::LinearRamp {
                dbeta_start,
                dbeta_end,
                ..
            } => dbeta_start.abs().max(dbeta_end.abs()),
            MeasurementProfile::PulseTrain { dbeta, .. } => dbeta.abs(),
            MeasurementProfile::Sampled { values, .. } => {
                values.iter().fold(0.0, |m, v| m.max(v.abs()))
            }
        }
    }

    /// z positions where the profile jumps or kinks; the propagator snaps its
    /// step grid to these.
    pub fn breakpoints(&self, out: &mut Vec<f64>) {
        match self {
            MeasurementProfile::Constant { .. } => {}
            MeasurementProfile::LinearRamp { z_start, z_end, .. } => {
                out.push(*z_start);
                out.push(*z_end);
            }
            MeasurementProfile::PulseTrain {
                pulses,
                pulse_len,
                span,
                ..
            } => {
                let slot = span / *pulses as f64;
                for k in 0..*pulses {
                    out.push((k + 1) as f64 * slot - pulse_len);
                    out.push((k + 1) as f64 * slot);
                }
            }
            MeasurementProfile::Sampled { z_grid, .. } => out.extend_from_slice(z_grid),
        }
    }
}

/// A measured site together with its strength profile.
#[derive(Debug, Clone, PartialEq)]
pub struct ProgramEntry {
    /// 1-based site index.
    pub site: usize,
    pub profile: MeasurementProfile,
}

/// The full measurement program: any number of (site, profile) entries.
/// Entries addressing the same site add up.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MeasurementProgram {
    pub entries: Vec<ProgramEntry>,
}

impl MeasurementProgram {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn constant(site: usize, dbeta: f64) -> Self {
        MeasurementProgram {
            entries: vec![ProgramEntry {
                site,
                profile: MeasurementProfile::Constant { dbeta },
            }],
        }
    }

    pub fn linear_ramp(site: usize, dbeta_start: f64, dbeta_end: f64, z_start: f64, z_end: f64) -> Self {
        MeasurementProgram {
            entries: vec![ProgramEntry {
                site,
                profile: MeasurementProfile::LinearRamp {
                    dbeta_start,
                    dbeta_end,
                    z_start,
                    z_end,
                },
            }],
        }
    }

    pub fn pulse_train(site: usize, pulses: usize, pulse_len: f64, dbeta: f64, span: f64) -> Self {
        MeasurementProgram {
            entries: vec![ProgramEntry {
                site,
                profile: MeasurementProfile::PulseTrain {
                    pulses,
                    pulse_len,
                    dbeta,
                    span,
                },
            }],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn validate(&self, sites: usize) -> Result<()> {
        for entry in &self.entries {
            if entry.site == 0 || entry.site > sites {
                return Err(Error::SiteOutOfRange {
                    site: entry.site,
                    max: sites,
                });
            }
            entry.profile.validate()?;
        }
        Ok(())
    }

    /// Per-site measurement strengths at z, as a length-M vector.
    pub fn diagonal(&self, z: f64, sites: usize) -> Result<DVector<f64>> {
        let mut d = DVector::zeros(sites);
        for entry in &self.entries {
            if entry.site == 0 || entry.site > sites {
                return Err(Error::SiteOutOfRange {
                    site: entry.site,
                    max: sites,
                });
            }
            d[entry.site - 1] += entry.profile.value(z)?;
        }
        Ok(d)
    }

    /// The measurement operator M(z) as a diagonal matrix.
    pub fn build_measurement(&self, z: f64, sites: usize) -> Result<DMatrix<f64>> {
        Ok(DMatrix::from_diagonal(&self.diagonal(z, sites)?))
    }

    /// Union of all entry breakpoints, sorted and deduplicated.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut pts = Vec::new();
        for entry in &self.entries {
            entry.profile.breakpoints(&mut pts);
        }
        pts.sort_by(|a, b| a.total_cmp(b));
        pts.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
        pts
    }

    /// Upper bound on the largest diagonal entry magnitude over all z.
    pub fn max_abs_diagonal(&self, sites: usize) -> f64 {
        let mut per_site = vec![0.0f64; sites];
        for entry in &self.entries {
            if entry.site >= 1 && entry.site <= sites {
                per_site[entry.site - 1] += entry.profile.max_abs();
            }
        }
        per_site.into_iter().fold(0.0, f64::max)
    }
}

/// Optional affine calibration from a physical perturbation width (mm) to a
/// measurement strength (1/m).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WToDbetaMap {
    pub slope: f64,
    pub offset: f64,
}

impl WToDbetaMap {
    pub fn new(slope: f64, offset: f64) -> Result<Self> {
        if !(slope > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "w-to-dbeta slope must be > 0, got {slope}"
            )));
        }
        Ok(WToDbetaMap { slope, offset })
    }

    pub fn dbeta_for_width(&self, w_mm: f64) -> f64 {
        self.slope * w_mm + self.offset
    }
}

/// Total Hamiltonian H(phi(z), dbeta(z)) = H0(phi(z)) + M(dbeta(z)).
pub fn hamiltonian_at(
    spec: &LatticeSpec,
    ramp: &PumpRamp,
    program: &MeasurementProgram,
    z: f64,
) -> Result<DMatrix<f64>> {
    let tol = ramp.length * 1e-12;
    if z < -tol || z > ramp.length + tol {
        return Err(Error::ZOutOfSpan {
            z,
            span: ramp.length,
        });
    }
    let mut h = spec.build_h0(ramp.phi_at(z))?;
    let d = program.diagonal(z, spec.sites)?;
    for i in 0..spec.sites {
        h[(i, i)] += d[i];
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn hopping_modulation_off_gives_kappa0() {
        let spec = LatticeSpec::aah(5, 35.0, 10.0, 0.0, DEFAULT_ELL, PhiUnit::Turns).unwrap();
        for bond in 1..5 {
            for phi in [0.0, 0.25, -0.6, 10.0] {
                assert_eq!(spec.hopping(bond, phi).unwrap(), 10.0);
            }
        }
    }

    #[test]
    fn hopping_cosine_maximum() {
        // phi chosen so 2*pi*ell*m + phi = 0
        let spec = LatticeSpec::aah(5, 35.0, 10.0, 5.0, DEFAULT_ELL, PhiUnit::Radians).unwrap();
        let k = spec.hopping(1, -TAU / 3.0).unwrap();
        assert!((k - 15.0).abs() < 1e-12);
    }

    #[test]
    fn hopping_matches_scalar_evaluation() {
        // independent scalar route: 10 + 5*cos(2*pi/3) = 7.5
        let expected = 10.0 + 5.0 * (2.0 * PI / 3.0).cos();
        assert!((expected - 7.5).abs() < 1e-12);
        let spec = LatticeSpec::aah(9, 35.0, 10.0, 5.0, DEFAULT_ELL, PhiUnit::Turns).unwrap();
        let k = spec.hopping(1, 0.0).unwrap();
        assert!((k - 7.5).abs() < 1e-12);
    }

    #[test]
    fn hopping_bond_out_of_range() {
        let spec = LatticeSpec::aah_default();
        assert!(matches!(
            spec.hopping(0, 0.0),
            Err(Error::SiteOutOfRange { .. })
        ));
        assert!(matches!(
            spec.hopping(9, 0.0),
            Err(Error::SiteOutOfRange { .. })
        ));
    }

    #[test]
    fn hopping_periodic_in_phi_and_site() {
        let spec = LatticeSpec::aah_default();
        let turn = spec.turns_to_unit(1.0);
        for bond in 1..=5 {
            for phi in [-0.37, 0.0, 0.11, 0.25] {
                let a = spec.hopping(bond, phi).unwrap();
                let b = spec.hopping(bond, phi + turn).unwrap();
                assert!((a - b).abs() < 1e-9 * spec.kappa0, "phi periodicity violated");
                // ell = 1/3: period 3 in the bond index
                let c = spec.hopping(bond + 3, phi).unwrap();
                assert!((a - c).abs() < 1e-9 * spec.kappa0, "site periodicity violated");
            }
        }
    }

    #[test]
    fn build_h0_two_level_matches_reference() {
        let spec = LatticeSpec::two_level(35.0, 10.3).unwrap();
        let h = spec.build_h0(0.0).unwrap();
        assert_eq!(h[(0, 0)], 35.0);
        assert_eq!(h[(1, 1)], 35.0);
        assert_eq!(h[(0, 1)], 10.3);
        assert_eq!(h[(1, 0)], 10.3);
    }

    #[test]
    fn build_h0_uniform_chain_when_unmodulated() {
        let spec = LatticeSpec::aah(6, 1.0, 2.5, 0.0, DEFAULT_ELL, PhiUnit::Turns).unwrap();
        let h = spec.build_h0(0.4).unwrap();
        for bond in 1..6 {
            assert_eq!(h[(bond - 1, bond)], 2.5);
        }
    }

    #[test]
    fn build_h0_elements_match_hopping() {
        let spec = LatticeSpec::aah_default();
        let phi = 0.25;
        let h = spec.build_h0(phi).unwrap();
        for bond in 1..9 {
            let k = spec.hopping(bond, phi).unwrap();
            assert_eq!(h[(bond - 1, bond)], k);
            assert_eq!(h[(bond, bond - 1)], k);
        }
        for i in 0..9 {
            assert_eq!(h[(i, i)], 35.0);
        }
    }

    #[test]
    fn build_h0_symmetric_and_beta_shift_exact() {
        let spec = LatticeSpec::aah_default();
        let h = spec.build_h0(0.13).unwrap();
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(h[(i, j)], h[(j, i)]);
            }
        }
        let mut shifted = spec.clone();
        shifted.beta += 1.0;
        let h2 = shifted.build_h0(0.13).unwrap();
        let diff = &h2 - &h;
        for i in 0..9 {
            for j in 0..9 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert_eq!(diff[(i, j)], want);
            }
        }
    }

    #[test]
    fn measurement_empty_program_is_zero() {
        let m = MeasurementProgram::empty().build_measurement(0.3, 4).unwrap();
        assert!(m.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn measurement_constant_site2_of_2() {
        let m = MeasurementProgram::constant(2, 7.0)
            .build_measurement(0.0, 2)
            .unwrap();
        assert_eq!(m[(0, 0)], 0.0);
        assert_eq!(m[(1, 1)], 7.0);
        assert_eq!(m[(0, 1)], 0.0);
    }

    #[test]
    fn pulse_train_segment_arithmetic() {
        // n = 5 pulses of length 0.02 L over span L = 1; slots end with pulses
        let span = 1.0;
        let lm = 0.02;
        let prog = MeasurementProgram::pulse_train(1, 5, lm, 4.0, span);
        // inside the first on-segment [0.18, 0.2)
        assert_eq!(prog.diagonal(0.19, 3).unwrap()[0], 4.0);
        // midpoint between pulse 1 and pulse 2 is off
        assert_eq!(prog.diagonal(0.29, 3).unwrap()[0], 0.0);
        // right at the span end belongs to the last pulse
        assert_eq!(prog.diagonal(1.0, 3).unwrap()[0], 4.0);
        // outside the span is an error
        assert!(matches!(
            prog.diagonal(1.5, 3),
            Err(Error::ZOutOfSpan { .. })
        ));
    }

    #[test]
    fn pulse_train_full_coverage_is_always_on() {
        let prog = MeasurementProgram::pulse_train(2, 8, 0.125, 3.0, 1.0);
        for z in [0.0, 0.01, 0.124, 0.125, 0.5, 0.875, 0.999, 1.0] {
            assert_eq!(prog.diagonal(z, 2).unwrap()[1], 3.0, "z = {z}");
        }
    }

    #[test]
    fn pulse_train_overlap_rejected() {
        let prog = MeasurementProgram::pulse_train(1, 10, 0.2, 1.0, 1.0);
        assert!(matches!(prog.validate(3), Err(Error::InvalidProgram(_))));
    }

    #[test]
    fn sampled_profile_steps() {
        let profile = MeasurementProfile::Sampled {
            z_grid: vec![0.0, 0.5, 1.0],
            values: vec![1.0, 2.0, 2.0],
        };
        profile.validate().unwrap();
        assert_eq!(profile.value(0.0).unwrap(), 1.0);
        assert_eq!(profile.value(0.49).unwrap(), 1.0);
        assert_eq!(profile.value(0.5).unwrap(), 2.0);
        assert_eq!(profile.value(1.0).unwrap(), 2.0);
        assert!(profile.value(1.2).is_err());
    }

    #[test]
    fn linear_ramp_clamps_outside_window() {
        let profile = MeasurementProfile::LinearRamp {
            dbeta_start: 0.0,
            dbeta_end: 60.0,
            z_start: 0.0,
            z_end: 0.7,
        };
        assert_eq!(profile.value(0.0).unwrap(), 0.0);
        assert!((profile.value(0.35).unwrap() - 30.0).abs() < 1e-12);
        assert_eq!(profile.value(0.7).unwrap(), 60.0);
        assert_eq!(profile.value(0.9).unwrap(), 60.0);
    }

    #[test]
    fn program_site_out_of_range() {
        let prog = MeasurementProgram::constant(5, 1.0);
        assert!(matches!(
            prog.validate(4),
            Err(Error::SiteOutOfRange { .. })
        ));
    }

    #[test]
    fn hamiltonian_at_endpoints_and_midpoint() {
        let spec = LatticeSpec::aah_default();
        let ramp = PumpRamp::new(0.25, -0.5, 1.0).unwrap();

        // z = 0, empty program: plain H0 at phi0
        let h = hamiltonian_at(&spec, &ramp, &MeasurementProgram::empty(), 0.0).unwrap();
        assert_eq!(h, spec.build_h0(0.25).unwrap());

        // ramp midpoint sits at phi = 0 turns
        let h_mid = hamiltonian_at(&spec, &ramp, &MeasurementProgram::constant(1, 2.0), 0.5).unwrap();
        let mut want = spec.build_h0(0.0).unwrap();
        want[(0, 0)] += 2.0;
        assert_eq!(h_mid, want);

        assert!(hamiltonian_at(&spec, &ramp, &MeasurementProgram::empty(), 1.5).is_err());
    }

    #[test]
    fn hamiltonian_z_independent_without_ramp() {
        let spec = LatticeSpec::aah_default();
        let ramp = PumpRamp::constant(0.1, 2.0).unwrap();
        let prog = MeasurementProgram::constant(3, 5.0);
        let a = hamiltonian_at(&spec, &ramp, &prog, 0.2).unwrap();
        let b = hamiltonian_at(&spec, &ramp, &prog, 1.7).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn spec_validation_errors() {
        assert!(LatticeSpec::aah(1, 1.0, 1.0, 0.0, DEFAULT_ELL, PhiUnit::Turns).is_err());
        assert!(LatticeSpec::aah(5, 1.0, 0.0, 0.0, DEFAULT_ELL, PhiUnit::Turns).is_err());
        assert!(LatticeSpec::aah(5, 1.0, 1.0, -0.1, DEFAULT_ELL, PhiUnit::Turns).is_err());
        assert!(LatticeSpec::aah_preset(9, 35.0, 5.0, 5.0).is_err());
        assert!(LatticeSpec::two_level(35.0, -1.0).is_err());
    }

    #[test]
    fn w_map_is_monotone() {
        let map = WToDbetaMap::new(17.0, 0.5).unwrap();
        assert!(map.dbeta_for_width(3.5) > map.dbeta_for_width(1.0));
        assert!(WToDbetaMap::new(-1.0, 0.0).is_err());
    }

    #[test]
    fn radian_unit_interpretation() {
        let spec = LatticeSpec::aah(9, 35.0, 10.0, 5.0, DEFAULT_ELL, PhiUnit::Radians).unwrap();
        let k_rad = spec.hopping(1, PI).unwrap();
        let spec_turns = LatticeSpec::aah(9, 35.0, 10.0, 5.0, DEFAULT_ELL, PhiUnit::Turns).unwrap();
        let k_turn = spec_turns.hopping(1, 0.5).unwrap();
        assert!((k_rad - k_turn).abs() < 1e-12);
    }
}
