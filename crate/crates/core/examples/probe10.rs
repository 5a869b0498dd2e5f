// scratch probe #10: fine scan near (0.60, 400) + step-stability check
use zenowave::analysis::*;
use zenowave::model::*;

fn spec_rad(kappa0: f64, ratio: f64) -> LatticeSpec {
    LatticeSpec::aah(9, 35.0, kappa0, ratio * kappa0, 1.0 / 3.0, PhiUnit::Radians).unwrap()
}

fn main() {
    println!("cols: zeF z/fl | zeM z | azF z | azM(1.2) z/fl | rmp2 z || worst");
    for ratio in [0.59, 0.60, 0.61] {
        for kappa0 in [360.0, 380.0, 400.0, 420.0, 440.0] {
            let spec = spec_rad(kappa0, ratio);
            let strong = 6.0 * kappa0;
            let ze_f = ze_tbs(&spec, 0.0, 1, 1.0, None).unwrap();
            let ze_m = ze_tbs(&spec, strong, 1, 1.0, None).unwrap();
            let az_f = aze_tbs(&spec, 0.0, 2, 1.0, None).unwrap();
            let az_m = aze_tbs(&spec, 1.2 * kappa0, 2, 1.0, None).unwrap();
            let rmp = ramp_tunnel(&spec, strong, 2, 0.7, -0.2, None).unwrap();
            let worst = [
                ze_f.final_zeta() - 0.8,
                ze_f.fidelity_left - 0.8,
                -0.8 - ze_m.final_zeta(),
                -0.5 - az_f.final_zeta(),
                az_m.final_zeta() - 0.8,
                rmp.final_zeta() - 0.8,
            ]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
            println!(
                "r {ratio:.2} k0 {kappa0:3.0} | {:+.3}/{:.2} | {:+.3} | {:+.3} | {:+.3}/{:.2} | {:+.3} || {worst:+.3}",
                ze_f.final_zeta(),
                ze_f.fidelity_left,
                ze_m.final_zeta(),
                az_f.final_zeta(),
                az_m.final_zeta(),
                az_m.fidelity_left,
                rmp.final_zeta(),
            );
        }
    }

    // step-count stability at the leading candidate
    for (ratio, kappa0) in [(0.60, 400.0), (0.60, 420.0), (0.61, 400.0)] {
        let spec = spec_rad(kappa0, ratio);
        let strong = 6.0 * kappa0;
        print!("stability r {ratio} k0 {kappa0}: rmp2 zeta at (0.5x, 1x, 2x, 3x default steps):");
        let ramp = PumpRamp::constant(-0.2, 0.7).unwrap();
        let program = MeasurementProgram::linear_ramp(2, 0.0, strong, 0.0, 0.7);
        let base = zenowave::evolve::default_steps(&spec, &ramp, &program);
        for mult in [0.5, 1.0, 2.0, 3.0] {
            let steps = ((base as f64) * mult) as usize;
            let r = ramp_tunnel(&spec, strong, 2, 0.7, -0.2, Some(steps)).unwrap();
            print!(" {:+.4}", r.final_zeta());
        }
        println!();
        print!("stability r {ratio} k0 {kappa0}: azM zeta at (0.5x, 1x, 2x, 3x):");
        let prog2 = MeasurementProgram::constant(2, 1.2 * kappa0);
        let ramp2 = PumpRamp::new(-0.6, 0.4, 1.0).unwrap();
        let base2 = zenowave::evolve::default_steps(&spec, &ramp2, &prog2);
        for mult in [0.5, 1.0, 2.0, 3.0] {
            let steps = ((base2 as f64) * mult) as usize;
            let r = aze_tbs(&spec, 1.2 * kappa0, 2, 1.0, Some(steps)).unwrap();
            print!(" {:+.4}", r.final_zeta());
        }
        println!();
    }
}
