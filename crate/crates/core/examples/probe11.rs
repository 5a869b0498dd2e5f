// scratch probe #11: full validation at the frozen repo defaults
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
    let k0 = spec.kappa0;

    println!("== scenarios ==");
    let ze_f = ze_tbs(&spec, 0.0, 1, 1.0, None).unwrap();
    let ze_m = ze_tbs(&spec, 6.0 * k0, 1, 1.0, None).unwrap();
    let az_f = aze_tbs(&spec, 0.0, 2, 1.0, None).unwrap();
    let az_m = aze_tbs(&spec, 1.2 * k0, 2, 1.0, None).unwrap();
    let rmp = ramp_tunnel(&spec, 6.0 * k0, 2, 0.7, -0.2, None).unwrap();
    println!("zeF  {:+.4} fidL {:.4} fidR {:.4}", ze_f.final_zeta(), ze_f.fidelity_left, ze_f.fidelity_right);
    println!("zeM  {:+.4} fidL {:.4} fidR {:.4}", ze_m.final_zeta(), ze_m.fidelity_left, ze_m.fidelity_right);
    println!("azF  {:+.4} fidL {:.4} fidR {:.4}", az_f.final_zeta(), az_f.fidelity_left, az_f.fidelity_right);
    println!("azM  {:+.4} fidL {:.4} fidR {:.4}", az_m.final_zeta(), az_m.fidelity_left, az_m.fidelity_right);
    println!("rmp  {:+.4} fidL {:.4} fidR {:.4}", rmp.final_zeta(), rmp.fidelity_left, rmp.fidelity_right);

    // scenario-consistency: zeta sign vs fidelity argmax
    for (name, r) in [("zeF", &ze_f), ("zeM", &ze_m), ("azF", &az_f), ("azM", &az_m), ("rmp", &rmp)] {
        let sign_ok = (r.final_zeta() > 0.0) == (r.fidelity_left > r.fidelity_right);
        println!("consistency {name}: {sign_ok}");
    }

    println!("\n== chi values (defaults scale) ==");
    let chi = |phi0: f64, dphi: f64, dbeta: f64, site: usize| {
        let ramp = PumpRamp::new(phi0, dphi, 1.0).unwrap();
        let program = MeasurementProgram::constant(site, dbeta);
        relative_decay_rate(&spec, &ramp, &program, BandSelect::RightBoundary, 1.0, 200)
    };
    println!("chi ZE m2 @1.2k0  = {:+.4}", chi(0.25, -0.5, 1.2 * k0, 2).unwrap());
    println!("chi ZE m1 @6k0    = {:+.4}", chi(0.25, -0.5, 6.0 * k0, 1).unwrap());
    println!("chi AZE m2 @1.2k0 = {:+.4}", chi(-0.6, 0.4, 1.2 * k0, 2).unwrap());
    println!("chi AZE m2 @0     = {:+.4}", chi(-0.6, 0.4, 0.0, 2).unwrap());
    println!("chi ramp-pt m2 @1.2k0 (dphi=0) = {:+.4}", chi(-0.2, 0.0, 1.2 * k0, 2).unwrap());

    println!("\n== in-gap invariant at phi0 = 0.25 ==");
    let f = eigenframe(&spec, 0.25, 1, 0.0, None).unwrap();
    let loc: Vec<(usize, f64)> = (0..9)
        .filter(|&j| f.zeta[j].abs() > 0.8)
        .map(|j| (j, f.zeta[j]))
        .collect();
    println!("strongly localized: {loc:?}");

    println!("\n== criterion 9 at defaults ==");
    let z = &ze_f.trace.z;
    let zeta = &ze_f.zeta_series;
    let mut best = (0.0, f64::MIN);
    for i in 1..z.len() {
        let d = (zeta[i] - zeta[i - 1]).abs() / (z[i] - z[i - 1]);
        if d > best.1 {
            best = (0.5 * (z[i] + z[i - 1]), d);
        }
    }
    let (_, rb) = f.boundary_bands();
    let mut bestg = (0.0, f64::MIN);
    for k in 0..=400 {
        let phi = 0.25 - 0.5 * k as f64 / 400.0;
        if let Ok(g) = quantum_metric(&spec, rb, phi, 0.0, 1, None) {
            if g.g_pp > bestg.1 {
                bestg = (phi, g.g_pp);
            }
        }
    }
    let z_metric = (bestg.0 - 0.25) / (-0.5);
    println!("peak |dzeta/dz| z = {:.4}; g_pp peak z = {:.4}; diff {:.4}", best.0, z_metric, (best.0 - z_metric).abs());

    println!("\n== metric ridge monotonicity (site 2) ==");
    let mut prev = f64::MIN;
    let mut monotone = true;
    for i in 0..5 {
        let dbeta = 0.2 * k0 * i as f64;
        let mut bestp = (0.0, f64::MIN);
        for k in 0..=120 {
            let phi = 0.3 - 0.6 * k as f64 / 120.0;
            if let Ok(g) = quantum_metric(&spec, rb, phi, dbeta, 2, None) {
                if g.g_pp > bestp.1 {
                    bestp = (phi, g.g_pp);
                }
            }
        }
        println!("dbeta {dbeta:5.0}: ridge phi {:+.4}", bestp.0);
        if bestp.0 <= prev {
            monotone = false;
        }
        prev = bestp.0;
    }
    println!("monotone: {monotone}");

    println!("\n== det g ridge along both tunneling paths ==");
    let path_vals = |pts: Vec<(f64, f64)>| -> Vec<f64> {
        pts.iter()
            .map(|&(p, d)| quantum_metric(&spec, rb, p, d, 2, None).map(|g| g.det().abs()).unwrap_or(f64::NAN))
            .collect()
    };
    let horiz: Vec<(f64, f64)> = (0..=40).map(|k| (0.25 - 0.5 * k as f64 / 40.0, 0.0)).collect();
    let vert: Vec<(f64, f64)> = (0..=40).map(|k| (-0.2, 1.2 * k0 * k as f64 / 40.0)).collect();
    let h = path_vals(horiz);
    let v = path_vals(vert);
    let interior_max = |vals: &[f64]| vals[2..vals.len() - 2].iter().cloned().fold(f64::MIN, f64::max);
    let ends_max = |vals: &[f64]| vals[0].max(*vals.last().unwrap());
    println!("horizontal: interior max {:.3e} vs ends {:.3e}", interior_max(&h), ends_max(&h));
    println!("vertical:   interior max {:.3e} vs ends {:.3e}", interior_max(&v), ends_max(&v));

    println!("\n== phase diagram mini-slab ==");
    let params = PhaseDiagramParams {
        band: BandSelect::RightBoundary,
        site: 2,
        length: 1.0,
        z_eval: 1.0,
        chi_threshold: 0.1,
        path_steps: 160,
    };
    let pd = phase_diagram(
        &spec,
        &[0.25, -0.6, -0.2],
        &[-0.5, 0.4, 0.0],
        &[0.0, 1.2 * k0],
        &params,
    )
    .unwrap();
    println!("missing {}", pd.missing);
    println!("ZE point label  {:?} chi {:?}", pd.label_at(0, 0, 1).as_str(), pd.chi_at(0, 0, 1));
    println!("AZE point label {:?} chi {:?}", pd.label_at(1, 1, 1).as_str(), pd.chi_at(1, 1, 1));
    println!("dphi=0 at -0.2 label {:?} chi {:?}", pd.label_at(2, 2, 1).as_str(), pd.chi_at(2, 2, 1));
    let mut zero_cells = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            zero_cells.push(pd.label_at(i, j, 0).as_str());
        }
    }
    println!("all dbeta=0 cells: {zero_cells:?}");

    println!("\n== LZ benchmark with wider window ==");
    let kappa = 1.0;
    for p_target in [0.06f64, 0.2, 0.4, 0.6, 0.8, 0.94] {
        let q = PI * kappa * kappa / (-f64::ln(p_target));
        let zc = 30.0 * kappa / q;
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
            "P {p_target:.2}: sim {p_sim:.4} formula {p_formula:.4} rel {:+.2}%",
            100.0 * (p_sim - p_formula) / p_formula
        );
    }

    println!("\n== step-halving on a pump schedule (small lattice scale) ==");
    let small = LatticeSpec::aah(9, 35.0, 10.0, 5.9, 1.0 / 3.0, PhiUnit::Radians).unwrap();
    let ramp = PumpRamp::new(0.25, -0.5, 0.08).unwrap();
    let psi0 = right_boundary_state(&small, 0.25).unwrap();
    let run = |steps: usize| {
        propagate(&small, &ramp, &MeasurementProgram::empty(), &psi0, steps)
            .unwrap()
            .populations
            .last()
            .unwrap()
            .clone()
    };
    let reference = run(40960);
    let err = |steps: usize| -> f64 {
        run(steps)
            .iter()
            .zip(&reference)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    };
    for steps in [160usize, 320, 640, 1280, 2560] {
        println!("steps {steps:5}: err {:.3e}", err(steps));
    }
}
