// scratch probe #6: ramp-crossing gap, AZE plateau, final parameter pick
use zenowave::analysis::*;
use zenowave::model::*;
use zenowave::spectral::*;

fn spec_rad(kappa0: f64, ratio: f64) -> LatticeSpec {
    LatticeSpec::aah(9, 35.0, kappa0, ratio * kappa0, 1.0 / 3.0, PhiUnit::Radians).unwrap()
}

fn main() {
    println!("== relative lower-gap min spacing a(r) at phi = -0.2, dbeta scan on site 1 ==");
    for ratio in [0.45, 0.5, 0.55, 0.6, 0.65, 0.7] {
        let spec = spec_rad(10.0, ratio);
        let mut min_gap = f64::INFINITY;
        let mut at_db = 0.0;
        for k in 0..=2000 {
            let db = 60.0 * k as f64 / 2000.0;
            let f = eigenframe(&spec, -0.2, 1, db, None).unwrap();
            let mut evs = f.eigenvalues.clone();
            evs.sort_by(f64::total_cmp);
            for w in evs.windows(2) {
                if w[0] > 20.0 && w[1] < 36.0 && w[1] - w[0] < min_gap {
                    min_gap = w[1] - w[0];
                    at_db = db;
                }
            }
        }
        println!("r {ratio}: min spacing/kappa0 = {:.4} at dbeta/kappa0 = {:.2}", min_gap / 10.0, at_db / 10.0);
    }

    println!("\n== ramp_tunnel simulated vs kappa0 (phi = -0.2 rad, site 1, 0 -> 6 kappa0 over 0.7) ==");
    for ratio in [0.55, 0.6, 0.65] {
        print!("r {ratio}: ");
        for kappa0 in [160.0, 320.0, 640.0, 1280.0] {
            let spec = spec_rad(kappa0, ratio);
            let r = ramp_tunnel(&spec, 6.0 * kappa0, 1, 0.7, -0.2, None).unwrap();
            print!("k0 {kappa0:4.0}: {:+.3}/{:.2}  ", r.final_zeta(), r.fidelity_left);
        }
        println!();
    }

    println!("\n== azM plateau scan: aze_tbs zeta_f (site 2, L = 1) ==");
    for ratio in [0.6, 0.65, 0.7] {
        for factor in [1.0, 1.2, 1.5, 2.0] {
            print!("r {ratio} db {factor}k0: ");
            for kappa0 in [60.0, 80.0, 120.0, 160.0, 240.0] {
                let spec = spec_rad(kappa0, ratio);
                let r = aze_tbs(&spec, factor * kappa0, 2, 1.0, None).unwrap();
                print!("{:+.2} ", r.final_zeta());
            }
            println!();
        }
    }

    println!("\n== chi checkpoints (kappa0 = 10, scale-free) ==");
    for ratio in [0.6, 0.65, 0.7] {
        let spec = spec_rad(10.0, ratio);
        let chi = |phi0: f64, dphi: f64, dbeta: f64, site: usize| {
            let ramp = PumpRamp::new(phi0, dphi, 1.0).unwrap();
            let program = MeasurementProgram::constant(site, dbeta);
            relative_decay_rate(&spec, &ramp, &program, BandSelect::RightBoundary, 1.0, 200)
                .map(|c| format!("{c:+.3}"))
                .unwrap_or_else(|e| format!("ERR {e}"))
        };
        println!(
            "r {ratio}: ZE m2 @1.5k0 {} | ZE m2 @6k0 {} | AZE m2 @1.5k0 {} | AZE m2 @6k0 {}",
            chi(0.25, -0.5, 15.0, 2),
            chi(0.25, -0.5, 60.0, 2),
            chi(-0.6, 0.4, 15.0, 2),
            chi(-0.6, 0.4, 60.0, 2),
        );
    }

    println!("\n== full scenario table at candidate defaults ==");
    for (ratio, kappa0) in [(0.6, 160.0), (0.65, 120.0), (0.65, 160.0), (0.65, 240.0), (0.7, 160.0)] {
        let spec = spec_rad(kappa0, ratio);
        let strong = 6.0 * kappa0;
        let aze_db = 1.5 * kappa0;
        let ze_f = ze_tbs(&spec, 0.0, 1, 1.0, None).unwrap();
        let ze_m = ze_tbs(&spec, strong, 1, 1.0, None).unwrap();
        let az_f = aze_tbs(&spec, 0.0, 2, 1.0, None).unwrap();
        let az_m = aze_tbs(&spec, aze_db, 2, 1.0, None).unwrap();
        let rmp = ramp_tunnel(&spec, strong, 1, 0.7, -0.2, None).unwrap();
        println!(
            "r {ratio} k0 {kappa0:4.0} | zeF {:+.3}/{:.2} zeM {:+.3} | azF {:+.3} azM {:+.3}/{:.2} | rmp {:+.3}/{:.2}",
            ze_f.final_zeta(),
            ze_f.fidelity_left,
            ze_m.final_zeta(),
            az_f.final_zeta(),
            az_m.final_zeta(),
            az_m.fidelity_left,
            rmp.final_zeta(),
            rmp.fidelity_left,
        );
    }
}
