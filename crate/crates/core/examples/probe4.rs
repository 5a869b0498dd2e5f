// scratch probe #4: radian interpretation of the pump anchors
use zenowave::analysis::*;
use zenowave::model::*;
use zenowave::spectral::*;

fn spec_rad(kappa0: f64, ratio: f64) -> LatticeSpec {
    LatticeSpec::aah(9, 35.0, kappa0, ratio * kappa0, 1.0 / 3.0, PhiUnit::Radians).unwrap()
}

fn main() {
    for ratio in [0.5, 0.6, 0.7, 0.8] {
        println!("\n================ ratio {ratio} ================");
        let probe = spec_rad(10.0, ratio);

        // structure at the radian anchors
        for phi in [0.25f64, -0.25, -0.6, -0.2, 0.0] {
            let f = eigenframe(&probe, phi, 1, 0.0, None).unwrap();
            let (l, r) = f.boundary_bands();
            println!(
                "phi {phi:+.2} rad: L band {l} zeta {:+.3} lam {:+.2} | R band {r} zeta {:+.3} lam {:+.2} | zetas {:?}",
                f.zeta[l], f.eigenvalues[l], f.zeta[r], f.eigenvalues[r],
                f.zeta.iter().map(|z| (z * 100.0).round() / 100.0).collect::<Vec<_>>()
            );
        }

        // chi at the anchors (scale-free)
        let strong = 60.0;
        let chi = |phi0: f64, dphi: f64, dbeta: f64, site: usize| {
            let ramp = PumpRamp::new(phi0, dphi, 1.0).unwrap();
            let program = MeasurementProgram::constant(site, dbeta);
            relative_decay_rate(&probe, &ramp, &program, BandSelect::RightBoundary, 1.0, 200)
        };
        for (label, phi0, dphi, site) in [
            ("ZE m2", 0.25, -0.5, 2),
            ("ZE m1", 0.25, -0.5, 1),
            ("AZE m2", -0.6, 0.4, 2),
            ("AZE m1", -0.6, 0.4, 1),
            ("ramp m1", -0.2, 0.0, 1),
        ] {
            match chi(phi0, dphi, strong, site) {
                Ok(c) => print!("chi {label} {c:+.3} | "),
                Err(e) => print!("chi {label} ERR {e} | "),
            }
        }
        println!();

        // scenario outcomes vs coupling scale, L = 1
        for kappa0 in [10.0, 20.0, 40.0, 80.0] {
            let spec = spec_rad(kappa0, ratio);
            let strong = 6.0 * kappa0;
            let ze_f = ze_tbs(&spec, 0.0, 1, 1.0, None).unwrap();
            let ze_m = ze_tbs(&spec, strong, 1, 1.0, None).unwrap();
            let az_f = aze_tbs(&spec, 0.0, 2, 1.0, None).unwrap();
            let az_m = aze_tbs(&spec, strong, 2, 1.0, None).unwrap();
            let rmp = ramp_tunnel(&spec, strong, 1, 0.7, -0.2 / std::f64::consts::TAU, None).unwrap();
            println!(
                "k0 {kappa0:4.0} | zeF {:+.3}/{:.2} zeM {:+.3}/{:.2} | azF {:+.3} azM {:+.3}/{:.2} | rmp {:+.3}/{:.2}",
                ze_f.final_zeta(),
                ze_f.fidelity_left,
                ze_m.final_zeta(),
                ze_m.fidelity_right,
                az_f.final_zeta(),
                az_m.final_zeta(),
                az_m.fidelity_left,
                rmp.final_zeta(),
                rmp.fidelity_left,
            );
        }
    }
}
