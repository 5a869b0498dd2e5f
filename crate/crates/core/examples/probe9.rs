// scratch probe #9: joint margin optimization over (ratio, kappa0)
use zenowave::analysis::*;
use zenowave::model::*;

fn spec_rad(kappa0: f64, ratio: f64) -> LatticeSpec {
    LatticeSpec::aah(9, 35.0, kappa0, ratio * kappa0, 1.0 / 3.0, PhiUnit::Radians).unwrap()
}

fn main() {
    println!("cols: zeF z/fl | zeM z | azF z | azM(1.0) z | azM(1.2) z | rmp2 z");
    for ratio in [0.60, 0.62, 0.64, 0.66, 0.68] {
        for kappa0 in [320.0, 400.0, 480.0] {
            let spec = spec_rad(kappa0, ratio);
            let strong = 6.0 * kappa0;
            let ze_f = ze_tbs(&spec, 0.0, 1, 1.0, None).unwrap();
            let ze_m = ze_tbs(&spec, strong, 1, 1.0, None).unwrap();
            let az_f = aze_tbs(&spec, 0.0, 2, 1.0, None).unwrap();
            let az_m10 = aze_tbs(&spec, 1.0 * kappa0, 2, 1.0, None).unwrap();
            let az_m12 = aze_tbs(&spec, 1.2 * kappa0, 2, 1.0, None).unwrap();
            let rmp = ramp_tunnel(&spec, strong, 2, 0.7, -0.2, None).unwrap();
            let worst = [
                ze_f.final_zeta() - 0.8,
                ze_f.fidelity_left - 0.8,
                -0.8 - ze_m.final_zeta(),
                -0.5 - az_f.final_zeta(),
                az_m10.final_zeta().max(az_m12.final_zeta()) - 0.8,
                rmp.final_zeta() - 0.8,
            ]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
            println!(
                "r {ratio:.2} k0 {kappa0:3.0} | {:+.3}/{:.2} | {:+.3} | {:+.3} | {:+.3} | {:+.3} | {:+.3} || worst margin {worst:+.3}",
                ze_f.final_zeta(),
                ze_f.fidelity_left,
                ze_m.final_zeta(),
                az_f.final_zeta(),
                az_m10.final_zeta(),
                az_m12.final_zeta(),
                rmp.final_zeta(),
            );
        }
    }

    println!("\nchi windows per ratio (kappa0 = 10 scale):");
    for ratio in [0.60, 0.62, 0.64, 0.66, 0.68] {
        let spec = spec_rad(10.0, ratio);
        let chi = |phi0: f64, dphi: f64, dbeta: f64, site: usize| {
            let ramp = PumpRamp::new(phi0, dphi, 1.0).unwrap();
            let program = MeasurementProgram::constant(site, dbeta);
            relative_decay_rate(&spec, &ramp, &program, BandSelect::RightBoundary, 1.0, 200)
                .map(|c| format!("{c:+.2}"))
                .unwrap_or_else(|_| "ERR".into())
        };
        println!(
            "r {ratio:.2}: ZE2@10 {} ZE2@12 {} ZE1@60 {} | AZE2@10 {} AZE2@12 {}",
            chi(0.25, -0.5, 10.0, 2),
            chi(0.25, -0.5, 12.0, 2),
            chi(0.25, -0.5, 60.0, 1),
            chi(-0.6, 0.4, 10.0, 2),
            chi(-0.6, 0.4, 12.0, 2),
        );
    }
}
