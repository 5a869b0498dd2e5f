// scratch probe #12: spectrum details, LZ windows, decomposition target
use std::f64::consts::PI;
use zenowave::analysis::*;
use zenowave::evolve::*;
use zenowave::model::*;
use zenowave::spectral::*;

fn defaults() -> LatticeSpec {
    LatticeSpec::aah(9, 35.0, 400.0, 236.0, 1.0 / 3.0, PhiUnit::Radians).unwrap()
}

fn main() {
    let spec = defaults();

    println!("== spectrum at phi = 0.25 rad ==");
    let f = eigenframe(&spec, 0.25, 1, 0.0, None).unwrap();
    for j in 0..9 {
        println!("band {j}: lam {:9.3} zeta {:+.3}", f.eigenvalues[j], f.zeta[j]);
    }

    println!("\n== LZ with scaled windows ==");
    let kappa = 1.0;
    for p_target in [0.12f64, 0.3, 0.5, 0.7, 0.9] {
        let q = PI * kappa * kappa / (-f64::ln(p_target));
        let w = 35.0 * ((1.0 - p_target) / p_target).sqrt() + 40.0;
        let zc = w * kappa / q;
        let length = 2.0 * zc;
        let spec2 = LatticeSpec::two_level(0.0, kappa).unwrap();
        let ramp = PumpRamp::constant(0.0, length).unwrap();
        let program = MeasurementProgram {
            entries: vec![
                ProgramEntry {
                    site: 1,
                    profile: MeasurementProfile::LinearRamp {
                        dbeta_start: -q * zc,
                        dbeta_end: q * zc,
                        z_start: 0.0,
                        z_end: length,
                    },
                },
                ProgramEntry {
                    site: 2,
                    profile: MeasurementProfile::LinearRamp {
                        dbeta_start: q * zc,
                        dbeta_end: -q * zc,
                        z_start: 0.0,
                        z_end: length,
                    },
                },
            ],
        };
        let psi0 = StateVector::basis(2, 1).unwrap();
        let steps = default_steps(&spec2, &ramp, &program);
        let trace = propagate(&spec2, &ramp, &program, &psi0, steps).unwrap();
        let p_sim = trace.populations.last().unwrap()[0];
        let p_formula = landau_zener_probability(2.0 * kappa, 2.0 * q).unwrap();
        println!(
            "P {p_target:.2} W {w:5.1} steps {steps:6}: sim {p_sim:.4} formula {p_formula:.4} rel {:+.2}%",
            100.0 * (p_sim - p_formula) / p_formula
        );
    }

    println!("\n== gap-extraction helper on the simulated sweep ==");
    {
        let q = 2.0;
        let zc = 10.0;
        let length = 2.0 * zc;
        let n = 100;
        let spec2 = LatticeSpec::two_level(0.0, 1.0).unwrap();
        let mut frames = Vec::new();
        let mut sgrid = Vec::new();
        for k in 0..=n {
            let z = length * k as f64 / n as f64;
            let d = q * (z - zc);
            let mut h = spec2.build_h0(0.0).unwrap();
            h[(0, 0)] += d;
            h[(1, 1)] -= d;
            let prev = frames.last();
            frames.push(eigenframe_of_matrix(&h, z, d, prev).unwrap());
            sgrid.push(z);
        }
        let gaps = gap_series(&frames, 0);
        let est = lz_from_gap_samples(&sgrid, &gaps).unwrap();
        println!(
            "delta_min {:.6} (want 2), v {:.6} (want {}), s* {:.4} (want {zc})",
            est.delta_min,
            est.sweep_rate,
            2.0 * q,
            est.s_star
        );
    }

    println!("\n== decomposition of the adiabatic ZE final state in the initial frame ==");
    let run = ze_tbs(&spec, 0.0, 1, 1.0, None).unwrap();
    let f0 = &run.initial_frame;
    let weights = decompose(run.trace.final_state(), 1.0, f0).unwrap();
    for j in 0..9 {
        println!(
            "band {j}: |w|^2 {:.4} (zeta0 {:+.2})",
            weights.weights[j].norm_sqr(),
            f0.zeta[j]
        );
    }
    println!("total {:.12}", weights.total_weight());

    println!("\n== detuned two-level suppression, all spec ratios ==");
    let kappa = 10.3;
    let spec2 = LatticeSpec::two_level(35.0, kappa).unwrap();
    for ratio in [0.0, 1.0, 2.0, 4.0, 6.0, 10.0] {
        let dbeta = ratio * kappa;
        let length = PI / (2.0 * kappa);
        let ramp = PumpRamp::constant(0.0, length).unwrap();
        let program = MeasurementProgram::constant(2, dbeta);
        let psi0 = StateVector::basis(2, 1).unwrap();
        let steps = default_steps(&spec2, &ramp, &program);
        let trace = propagate(&spec2, &ramp, &program, &psi0, steps).unwrap();
        let max_p2 = trace.populations.iter().map(|r| r[1]).fold(0.0, f64::max);
        let oracle = kappa * kappa / (kappa * kappa + (dbeta / 2.0) * (dbeta / 2.0));
        println!(
            "dbeta/kappa {ratio:4.1}: sim {max_p2:.6} oracle {oracle:.6} diff {:.2e}",
            (max_p2 - oracle).abs()
        );
    }
}
