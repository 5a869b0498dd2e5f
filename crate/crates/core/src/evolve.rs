//! z-propagation of -i d/dz |psi> = H(z) |psi> and the ideal
//! projective-measurement chain.
//!
//! The integrator applies exp(i H(z_mid) h) per step (midpoint-sampled
//! second-order Magnus); the exponential comes from an eigendecomposition of
//! the real symmetric H, so every step is unitary to machine precision.

use std::f64::consts::PI;

use nalgebra::DVector;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{apply_expi, eig_sym_sorted, gershgorin_bound};
use crate::model::{hamiltonian_at, LatticeKind, LatticeSpec, MeasurementProgram, PumpRamp};

pub const NORM_TOLERANCE: f64 = 1e-9;

/// Complex amplitudes over the lattice sites, normalized to unit total
/// intensity.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amp: DVector<Complex64>,
}

impl StateVector {
    /// Wrap amplitudes that are already normalized (within 1e-9).
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let amp = DVector::from_vec(amplitudes);
        let dev = (amp.norm_squared() - 1.0).abs();
        if dev > NORM_TOLERANCE {
            return Err(Error::NotNormalized { deviation: dev });
        }
        Ok(StateVector { amp })
    }

    /// Normalize and wrap; errors on an (almost) zero vector.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let mut amp = DVector::from_vec(amplitudes);
        let norm = amp.norm();
        if norm < 1e-300 {
            return Err(Error::InvalidArgument("cannot normalize a zero vector".into()));
        }
        amp /= Complex64::new(norm, 0.0);
        Ok(StateVector { amp })
    }

    /// Basis state on a 1-based site.
    pub fn basis(sites: usize, site: usize) -> Result<Self> {
        if site == 0 || site > sites {
            return Err(Error::SiteOutOfRange { site, max: sites });
        }
        let mut amp = DVector::from_element(sites, Complex64::new(0.0, 0.0));
        amp[site - 1] = Complex64::new(1.0, 0.0);
        Ok(StateVector { amp })
    }

    /// Promote a real (eigen)vector; re-normalizes defensively.
    pub fn from_real(v: nalgebra::DVectorView<'_, f64>) -> Result<Self> {
        Self::normalized(v.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub(crate) fn from_amplitudes_unchecked(amp: DVector<Complex64>) -> Self {
        StateVector { amp }
    }

    pub fn dim(&self) -> usize {
        self.amp.len()
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amp
    }

    pub fn norm(&self) -> f64 {
        self.amp.norm()
    }

    /// |a_m|^2 per site.
    pub fn populations(&self) -> Vec<f64> {
        self.amp.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn population(&self, site: usize) -> f64 {
        self.amp[site - 1].norm_sqr()
    }

    /// <self|other>.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amp.dotc(&other.amp)
    }

    /// |<self|other>|^2.
    pub fn overlap2(&self, other: &StateVector) -> f64 {
        self.inner(other).norm_sqr()
    }
}

/// Sampled evolution: states and per-site populations on a strictly
/// increasing z grid, plus the running survival probability (identically 1
/// except in projective mode).
#[derive(Debug, Clone)]
pub struct EvolutionTrace {
    pub z: Vec<f64>,
    pub states: Vec<StateVector>,
    pub populations: Vec<Vec<f64>>,
    pub survival: Vec<f64>,
}

impl EvolutionTrace {
    pub fn sample_count(&self) -> usize {
        self.z.len()
    }

    pub fn final_state(&self) -> &StateVector {
        self.states.last().expect("trace has at least one sample")
    }

    pub fn final_survival(&self) -> f64 {
        *self.survival.last().expect("trace has at least one sample")
    }

    /// Check the container invariants: monotone grid, unit row sums.
    pub fn validate(&self) -> Result<()> {
        if self.z.is_empty() {
            return Err(Error::InvalidArgument("empty trace".into()));
        }
        if self.z.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidArgument("z grid not strictly increasing".into()));
        }
        for row in &self.populations {
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > NORM_TOLERANCE {
                return Err(Error::NotNormalized {
                    deviation: (sum - 1.0).abs(),
                });
            }
        }
        Ok(())
    }
}

struct TraceBuilder {
    z: Vec<f64>,
    states: Vec<StateVector>,
    populations: Vec<Vec<f64>>,
    survival: Vec<f64>,
}

impl TraceBuilder {
    fn new() -> Self {
        TraceBuilder {
            z: Vec::new(),
            states: Vec::new(),
            populations: Vec::new(),
            survival: Vec::new(),
        }
    }

    fn push(&mut self, z: f64, state: StateVector, survival: f64) {
        self.z.push(z);
        self.populations.push(state.populations());
        self.states.push(state);
        self.survival.push(survival);
    }

    fn finish(self) -> EvolutionTrace {
        EvolutionTrace {
            z: self.z,
            states: self.states,
            populations: self.populations,
            survival: self.survival,
        }
    }
}

/// Uniform step boundaries over [0, length] snapped to include every
/// schedule breakpoint, so no step straddles a discontinuity.
pub fn step_grid(length: f64, steps: usize, breakpoints: &[f64]) -> Vec<f64> {
    let mut grid: Vec<f64> = (0..=steps).map(|k| length * k as f64 / steps as f64).collect();
    let tol = length * 1e-12;
    for &b in breakpoints {
        if b > tol && b < length - tol {
            grid.push(b);
        }
    }
    grid.sort_by(|a, b| a.total_cmp(b));
    grid.dedup_by(|a, b| (*a - *b).abs() <= tol);
    grid
}

/// Step count giving ||H|| * h <= 0.05 for the worst-case H along the
/// schedule (Gershgorin bound).
pub fn default_steps(spec: &LatticeSpec, ramp: &PumpRamp, program: &MeasurementProgram) -> usize {
    let bound = spec.beta.abs()
        + 2.0 * (spec.kappa0.abs() + spec.kappa_m.abs())
        + program.max_abs_diagonal(spec.sites);
    ((20.0 * bound * ramp.length).ceil() as usize).max(1)
}

/// Integrate the state through the full schedule, sampling at every step
/// boundary. Refuses steps so coarse that ||H|| * h > 0.5.
pub fn propagate(
    spec: &LatticeSpec,
    ramp: &PumpRamp,
    program: &MeasurementProgram,
    psi0: &StateVector,
    steps: usize,
) -> Result<EvolutionTrace> {
    spec.validate()?;
    program.validate(spec.sites)?;
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be >= 1".into()));
    }
    if psi0.dim() != spec.sites {
        return Err(Error::InvalidArgument(format!(
            "initial state has {} amplitudes for {} sites",
            psi0.dim(),
            spec.sites
        )));
    }
    let dev = (psi0.norm() - 1.0).abs();
    if dev > NORM_TOLERANCE {
        return Err(Error::NotNormalized { deviation: dev });
    }

    let grid = step_grid(ramp.length, steps, &program.breakpoints());
    let mut builder = TraceBuilder::new();
    let mut psi = psi0.amp.clone();
    builder.push(0.0, StateVector::from_amplitudes_unchecked(psi.clone()), 1.0);

    for pair in grid.windows(2) {
        let (z0, z1) = (pair[0], pair[1]);
        let h_step = z1 - z0;
        let h_mid = hamiltonian_at(spec, ramp, program, 0.5 * (z0 + z1))?;
        let hnorm = gershgorin_bound(&h_mid) * h_step;
        if hnorm > 0.5 {
            return Err(Error::StepTooCoarse { hnorm });
        }
        let (vals, vecs) = eig_sym_sorted(&h_mid);
        psi = apply_expi(&vals, &vecs, h_step, &psi);
        builder.push(z1, StateVector::from_amplitudes_unchecked(psi.clone()), 1.0);
    }
    Ok(builder.finish())
}

/// Survival probability after n evenly spaced ideal measurements over half a
/// Rabi period: cos^(2n)(pi / 2n).
pub fn ideal_zeno_population(n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("measurement count must be >= 1".into()));
    }
    Ok((PI / (2.0 * n as f64)).cos().powi(2 * n as i32))
}

/// Free evolution of a two-level basis state interleaved with n projective
/// measurements onto that basis state, evenly spaced over `span`.
///
/// The survival probability is tracked deterministically (expectation over
/// outcomes): each projection multiplies it by the measured population and
/// resets the state.
pub fn projective_chain(
    spec: &LatticeSpec,
    psi0: &StateVector,
    n: usize,
    span: f64,
) -> Result<EvolutionTrace> {
    spec.validate()?;
    if spec.kind != LatticeKind::TwoLevel {
        return Err(Error::NotTwoLevel { m: spec.sites });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("measurement count must be >= 1".into()));
    }
    if !(span > 0.0) {
        return Err(Error::InvalidArgument(format!("span must be > 0, got {span}")));
    }
    if psi0.dim() != spec.sites {
        return Err(Error::InvalidArgument("state dimension mismatch".into()));
    }
    let pops = psi0.populations();
    let (site_idx, &pmax) = pops
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .unwrap();
    if (pmax - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::InvalidArgument(
            "projective chain requires a basis state as input".into(),
        ));
    }

    let h0 = spec.build_h0(0.0)?;
    let (vals, vecs) = eig_sym_sorted(&h0);
    let bound = gershgorin_bound(&h0);
    let segment = span / n as f64;
    // free evolution is exact per substep; substeps only densify the trace
    let substeps = ((20.0 * bound * segment).ceil() as usize).clamp(1, 64);

    let basis = StateVector::basis(spec.sites, site_idx + 1)?;
    let mut builder = TraceBuilder::new();
    let mut survival = 1.0;
    builder.push(0.0, basis.clone(), survival);

    for seg in 0..n {
        let z0 = seg as f64 * segment;
        let mut psi = basis.amp.clone();
        for sub in 1..substeps {
            let dz = segment * sub as f64 / substeps as f64;
            let state = apply_expi(&vals, &vecs, dz, &psi);
            builder.push(z0 + dz, StateVector::from_amplitudes_unchecked(state), survival);
        }
        psi = apply_expi(&vals, &vecs, segment, &psi);
        // project onto the measured basis state and renormalize
        survival *= psi[site_idx].norm_sqr();
        builder.push(z0 + segment, basis.clone(), survival);
    }
    Ok(builder.finish())
}

/// Map a two-level trace onto Bloch-sphere coordinates
/// (x, y, z) = (2 Re a1* a2, 2 Im a1* a2, |a1|^2 - |a2|^2).
pub fn bloch_trajectory(trace: &EvolutionTrace) -> Result<Vec<[f64; 3]>> {
    let m = trace
        .states
        .first()
        .map(|s| s.dim())
        .ok_or_else(|| Error::InvalidArgument("empty trace".into()))?;
    if m != 2 {
        return Err(Error::NotTwoLevel { m });
    }
    Ok(trace
        .states
        .iter()
        .map(|s| {
            let a = s.amplitudes();
            let cross = a[0].conj() * a[1];
            [
                2.0 * cross.re,
                2.0 * cross.im,
                a[0].norm_sqr() - a[1].norm_sqr(),
            ]
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::MeasurementProfile;
    use std::f64::consts::PI;

    fn two_level_ref() -> LatticeSpec {
        LatticeSpec::two_level(35.0, 10.3).unwrap()
    }

    #[test]
    fn decoupled_sites_keep_their_population() {
        // vanishing coupling: H is effectively diagonal
        let spec = LatticeSpec::two_level(35.0, 1e-12).unwrap();
        let ramp = PumpRamp::constant(0.0, 0.2).unwrap();
        let psi0 = StateVector::basis(2, 1).unwrap();
        let trace = propagate(&spec, &ramp, &MeasurementProgram::empty(), &psi0, 50).unwrap();
        for row in &trace.populations {
            assert!((row[0] - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn rabi_oscillation_follows_cos_squared() {
        let spec = two_level_ref();
        let kappa = 10.3;
        let length = PI / (2.0 * kappa);
        let ramp = PumpRamp::constant(0.0, length).unwrap();
        let psi0 = StateVector::basis(2, 1).unwrap();
        let trace = propagate(&spec, &ramp, &MeasurementProgram::empty(), &psi0, 200).unwrap();
        for (z, row) in trace.z.iter().zip(&trace.populations) {
            let expect = (kappa * z).cos().powi(2);
            assert!((row[0] - expect).abs() < 1e-9, "z = {z}");
        }
        // full transfer at the end of the half period
        assert!(trace.populations.last().unwrap()[0] < 1e-9);
    }

    #[test]
    fn detuned_transfer_matches_closed_form() {
        // constant measurement on site 2 detunes the pair; peak transfer is
        // kappa^2 / (kappa^2 + (dbeta/2)^2)
        let kappa = 10.3;
        let spec = two_level_ref();
        for ratio in [1.0, 2.0, 4.0] {
            let dbeta = ratio * kappa;
            let length = PI / (2.0 * kappa);
            let ramp = PumpRamp::constant(0.0, length).unwrap();
            let program = MeasurementProgram::constant(2, dbeta);
            let psi0 = StateVector::basis(2, 1).unwrap();
            let steps = default_steps(&spec, &ramp, &program);
            let trace = propagate(&spec, &ramp, &program, &psi0, steps).unwrap();
            let max_p2 = trace
                .populations
                .iter()
                .map(|row| row[1])
                .fold(0.0, f64::max);
            let oracle = kappa * kappa / (kappa * kappa + (dbeta / 2.0) * (dbeta / 2.0));
            assert!(
                (max_p2 - oracle).abs() < 1e-3,
                "ratio {ratio}: got {max_p2}, oracle {oracle}"
            );
        }
    }

    fn small_lattice() -> LatticeSpec {
        LatticeSpec::aah(9, 35.0, 10.0, 5.9, 1.0 / 3.0, crate::model::PhiUnit::Radians).unwrap()
    }

    #[test]
    fn unitarity_along_random_schedules() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let spec = small_lattice();
            let ramp = PumpRamp::new(
                rng.random_range(-0.5..0.5),
                rng.random_range(-0.7..0.7),
                rng.random_range(0.05..0.3),
            )
            .unwrap();
            let site = rng.random_range(1..=9);
            let profile = match rng.random_range(0..3) {
                0 => MeasurementProfile::Constant {
                    dbeta: rng.random_range(-30.0..30.0),
                },
                1 => MeasurementProfile::LinearRamp {
                    dbeta_start: 0.0,
                    dbeta_end: rng.random_range(0.0..60.0),
                    z_start: 0.0,
                    z_end: ramp.length,
                },
                _ => MeasurementProfile::PulseTrain {
                    pulses: rng.random_range(3..20),
                    pulse_len: 0.02 * ramp.length,
                    dbeta: rng.random_range(0.0..60.0),
                    span: ramp.length,
                },
            };
            let program = MeasurementProgram {
                entries: vec![crate::model::ProgramEntry { site, profile }],
            };
            let psi0 = StateVector::basis(9, rng.random_range(1..=9)).unwrap();
            let steps = default_steps(&spec, &ramp, &program);
            let trace = propagate(&spec, &ramp, &program, &psi0, steps).unwrap();
            trace.validate().unwrap();
            for s in &trace.states {
                assert!((s.norm() - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn beta_shift_leaves_populations_unchanged() {
        let spec_a = small_lattice();
        let mut spec_b = spec_a.clone();
        spec_b.beta += 13.0;
        let ramp = PumpRamp::new(0.25, -0.5, 0.2).unwrap();
        let program = MeasurementProgram::constant(1, 10.0);
        let psi0 = StateVector::basis(9, 9).unwrap();
        let steps = default_steps(&spec_b, &ramp, &program);
        let ta = propagate(&spec_a, &ramp, &program, &psi0, steps).unwrap();
        let tb = propagate(&spec_b, &ramp, &program, &psi0, steps).unwrap();
        for (ra, rb) in ta.populations.iter().zip(&tb.populations) {
            for (a, b) in ra.iter().zip(rb) {
                assert!((a - b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn step_halving_converges_second_order() {
        // smooth pump schedule, short length so the error is well above
        // roundoff
        let spec = small_lattice();
        let ramp = PumpRamp::new(0.25, -0.5, 0.08).unwrap();
        let psi0 = {
            let h = spec.build_h0(0.25).unwrap();
            let (_, vecs) = crate::linalg::eig_sym_sorted(&h);
            StateVector::from_real(vecs.column(6)).unwrap()
        };
        let run = |steps: usize| {
            propagate(&spec, &ramp, &MeasurementProgram::empty(), &psi0, steps)
                .unwrap()
                .populations
                .last()
                .unwrap()
                .clone()
        };
        let reference = run(10240);
        let err = |steps: usize| {
            run(steps)
                .iter()
                .zip(&reference)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        };
        let e1 = err(160);
        let e2 = err(320);
        let ratio = e1 / e2;
        assert!(
            (3.5..=4.5).contains(&ratio),
            "convergence ratio {ratio} outside [3.5, 4.5] (e1 = {e1:.3e}, e2 = {e2:.3e})"
        );
    }

    #[test]
    fn pulse_train_with_full_coverage_equals_constant() {
        let spec = two_level_ref();
        let kappa = 10.3;
        let length = PI / (2.0 * kappa);
        let ramp = PumpRamp::constant(0.0, length).unwrap();
        let psi0 = StateVector::basis(2, 1).unwrap();
        let dbeta = 40.0;

        let constant = MeasurementProgram::constant(2, dbeta);
        let steps = default_steps(&spec, &ramp, &constant);
        let base = propagate(&spec, &ramp, &constant, &psi0, steps).unwrap();
        let p_const = base.populations.last().unwrap().clone();

        let mut prev_gap = f64::INFINITY;
        for n in [10usize, 50, 200] {
            let train = MeasurementProgram::pulse_train(2, n, length / n as f64, dbeta, length);
            let trace = propagate(&spec, &ramp, &train, &psi0, steps).unwrap();
            let p = trace.populations.last().unwrap();
            let gap = p
                .iter()
                .zip(&p_const)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            assert!(gap <= prev_gap + 1e-12, "gap should not grow with n");
            prev_gap = gap;
        }
        assert!(prev_gap < 1e-3, "n = 200 gap {prev_gap} too large");
    }

    #[test]
    fn coarse_steps_are_refused() {
        let spec = two_level_ref();
        let ramp = PumpRamp::constant(0.0, 1.0).unwrap();
        let psi0 = StateVector::basis(2, 1).unwrap();
        let result = propagate(&spec, &ramp, &MeasurementProgram::empty(), &psi0, 1);
        assert!(matches!(result, Err(Error::StepTooCoarse { .. })));
    }

    #[test]
    fn step_grid_contains_pulse_edges() {
        let program = MeasurementProgram::pulse_train(1, 3, 0.05, 1.0, 1.0);
        let grid = step_grid(1.0, 10, &program.breakpoints());
        for edge in program.breakpoints() {
            assert!(
                grid.iter().any(|&g| (g - edge).abs() < 1e-12),
                "missing edge {edge}"
            );
        }
        assert!(grid.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn ideal_zeno_values() {
        assert!(ideal_zeno_population(0).is_err());
        assert!(ideal_zeno_population(1).unwrap().abs() < 1e-30);
        // cos^4(pi/4) = 1/4
        assert!((ideal_zeno_population(2).unwrap() - 0.25).abs() < 1e-15);
        // n = 10 against an independent evaluation and the exponential law
        let independent = (PI / 20.0).cos().powi(20);
        let p10 = ideal_zeno_population(10).unwrap();
        assert!((p10 - independent).abs() < 1e-15);
        assert!((p10 - 0.7805460698).abs() < 1e-9);
        assert!((p10 - (-PI * PI / 40.0).exp()).abs() < 1e-3);
    }

    #[test]
    fn projective_chain_matches_closed_form() {
        let spec = two_level_ref();
        let span = PI / (2.0 * spec.kappa0);
        let psi0 = StateVector::basis(2, 1).unwrap();
        for n in 1..=64 {
            let trace = projective_chain(&spec, &psi0, n, span).unwrap();
            trace.validate().unwrap();
            let expect = ideal_zeno_population(n).unwrap();
            assert!(
                (trace.final_survival() - expect).abs() < 1e-6,
                "n = {n}: survival {} vs {}",
                trace.final_survival(),
                expect
            );
        }
        // large-n freezing
        let trace = projective_chain(&spec, &psi0, 400, span).unwrap();
        assert!(trace.final_survival() > 0.99);
    }

    #[test]
    fn projective_chain_rejects_bad_inputs() {
        let spec = two_level_ref();
        let psi0 = StateVector::basis(2, 1).unwrap();
        assert!(projective_chain(&spec, &psi0, 0, 1.0).is_err());
        let aah = LatticeSpec::aah_default();
        let psi9 = StateVector::basis(9, 1).unwrap();
        assert!(matches!(
            projective_chain(&aah, &psi9, 4, 1.0),
            Err(Error::NotTwoLevel { .. })
        ));
        let superposed = StateVector::normalized(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(projective_chain(&spec, &superposed, 4, 1.0).is_err());
    }

    #[test]
    fn bloch_coordinates_of_reference_states() {
        let north = StateVector::basis(2, 1).unwrap();
        let trace = EvolutionTrace {
            z: vec![0.0],
            populations: vec![north.populations()],
            states: vec![north],
            survival: vec![1.0],
        };
        assert_eq!(bloch_trajectory(&trace).unwrap()[0], [0.0, 0.0, 1.0]);

        let y_state = StateVector::normalized(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
        ])
        .unwrap();
        let trace = EvolutionTrace {
            z: vec![0.0],
            populations: vec![y_state.populations()],
            states: vec![y_state],
            survival: vec![1.0],
        };
        let b = bloch_trajectory(&trace).unwrap()[0];
        assert!((b[0]).abs() < 1e-12 && (b[1] - 1.0).abs() < 1e-12 && b[2].abs() < 1e-12);
    }

    #[test]
    fn resonant_rabi_traces_a_great_circle() {
        let spec = two_level_ref();
        let ramp = PumpRamp::constant(0.0, PI / spec.kappa0).unwrap();
        let psi0 = StateVector::basis(2, 1).unwrap();
        let steps = default_steps(&spec, &ramp, &MeasurementProgram::empty());
        let trace = propagate(&spec, &ramp, &MeasurementProgram::empty(), &psi0, steps).unwrap();
        for point in bloch_trajectory(&trace).unwrap() {
            let norm = (point[0].powi(2) + point[1].powi(2) + point[2].powi(2)).sqrt();
            assert!((norm - 1.0).abs() < 1e-9);
            assert!(point[0].abs() < 1e-9, "trajectory left the (y,z) plane");
        }

        let aah = LatticeSpec::aah_default();
        let ramp9 = PumpRamp::constant(0.0, 0.01).unwrap();
        let psi9 = StateVector::basis(9, 1).unwrap();
        let t9 = propagate(&aah, &ramp9, &MeasurementProgram::empty(), &psi9, 30).unwrap();
        assert!(matches!(
            bloch_trajectory(&t9),
            Err(Error::NotTwoLevel { .. })
        ));
    }

    #[test]
    fn state_vector_constructors() {
        assert!(StateVector::new(vec![Complex64::new(0.9, 0.0), Complex64::new(0.0, 0.0)]).is_err());
        assert!(StateVector::normalized(vec![Complex64::new(0.0, 0.0)]).is_err());
        let s = StateVector::normalized(vec![Complex64::new(3.0, 0.0), Complex64::new(4.0, 0.0)])
            .unwrap();
        assert!((s.population(1) - 0.36).abs() < 1e-12);
        assert!(StateVector::basis(3, 0).is_err());
        assert!(StateVector::basis(3, 4).is_err());
    }
}
