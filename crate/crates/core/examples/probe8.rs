// scratch probe #8: ramp via site 2, final default confirmation
use zenowave::analysis::*;
use zenowave::model::*;
use zenowave::spectral::*;

fn spec_rad(kappa0: f64, ratio: f64) -> LatticeSpec {
    LatticeSpec::aah(9, 35.0, kappa0, ratio * kappa0, 1.0 / 3.0, PhiUnit::Radians).unwrap()
}

fn main() {
    println!("== adiabatic landscape for the site-2 ramp (r = 0.7, kappa0 = 10, phi = -0.2) ==");
    let spec = spec_rad(10.0, 0.7);
    for db in [0.0, 3.0, 6.0, 12.0, 20.0, 40.0, 60.0] {
        let f = eigenframe(&spec, -0.2, 2, db, None).unwrap();
        let lam_zeta: Vec<String> = (0..9)
            .map(|j| format!("{:.1}/{:+.2}", f.eigenvalues[j], f.zeta[j]))
            .collect();
        println!("db {db:4.0}: {}", lam_zeta.join(" "));
    }
    let f = eigenframe(&spec, -0.2, 2, 60.0, None).unwrap();
    for band in [2usize, 3, 4] {
        let v = f.eigenvectors.column(band);
        let pops: Vec<String> = (0..9).map(|i| format!("{:.3}", v[i] * v[i])).collect();
        println!("band{band} lam {:.2} zeta {:+.3} pops {}", f.eigenvalues[band], f.zeta[band], pops.join(" "));
    }

    println!("\n== ramp via site 2: zeta_f vs kappa0, r in 0.6/0.7 ==");
    for ratio in [0.6, 0.7] {
        print!("r {ratio}: ");
        for kappa0 in [80.0, 160.0, 240.0, 320.0, 640.0] {
            let spec = spec_rad(kappa0, ratio);
            let r = ramp_tunnel(&spec, 6.0 * kappa0, 2, 0.7, -0.2, None).unwrap();
            print!("k0 {kappa0:4.0}: {:+.3}/{:.2}  ", r.final_zeta(), r.fidelity_left);
        }
        println!();
    }

    println!("\n== candidate default sweep: r = 0.7, kappa0 in 200..320 ==");
    println!("cols: zeF z/fl | zeM z/fr | azF z | azM(1.0k0) z/fl | rmp2 z/fl");
    for kappa0 in [200.0, 220.0, 240.0, 260.0, 280.0, 320.0] {
        let spec = spec_rad(kappa0, 0.7);
        let strong = 6.0 * kappa0;
        let ze_f = ze_tbs(&spec, 0.0, 1, 1.0, None).unwrap();
        let ze_m = ze_tbs(&spec, strong, 1, 1.0, None).unwrap();
        let az_f = aze_tbs(&spec, 0.0, 2, 1.0, None).unwrap();
        let az_m = aze_tbs(&spec, 1.0 * kappa0, 2, 1.0, None).unwrap();
        let rmp = ramp_tunnel(&spec, strong, 2, 0.7, -0.2, None).unwrap();
        println!(
            "k0 {kappa0:4.0} | {:+.3}/{:.2} | {:+.3}/{:.2} | {:+.3} | {:+.3}/{:.2} | {:+.3}/{:.2}",
            ze_f.final_zeta(), ze_f.fidelity_left,
            ze_m.final_zeta(), ze_m.fidelity_right,
            az_f.final_zeta(),
            az_m.final_zeta(), az_m.fidelity_left,
            rmp.final_zeta(), rmp.fidelity_left,
        );
    }

    println!("\n== chi checkpoints at r = 0.7 (scale-free) ==");
    let spec = spec_rad(10.0, 0.7);
    let chi = |phi0: f64, dphi: f64, dbeta: f64, site: usize| {
        let ramp = PumpRamp::new(phi0, dphi, 1.0).unwrap();
        let program = MeasurementProgram::constant(site, dbeta);
        relative_decay_rate(&spec, &ramp, &program, BandSelect::RightBoundary, 1.0, 200)
            .map(|c| format!("{c:+.3}"))
            .unwrap_or_else(|e| format!("ERR {e}"))
    };
    println!(
        "ZE m2@1.0k0 {} | ZE m1@6k0 {} | AZE m2@1.0k0 {} | AZE m2@0 {}",
        chi(0.25, -0.5, 10.0, 2),
        chi(0.25, -0.5, 60.0, 1),
        chi(-0.6, 0.4, 10.0, 2),
        chi(-0.6, 0.4, 0.0, 2),
    );

    println!("\n== in-gap invariant at phi0 = 0.25 (r = 0.7) ==");
    let f = eigenframe(&spec, 0.25, 1, 0.0, None).unwrap();
    println!("zetas {:?}", f.zeta.iter().map(|z| (z * 1000.0).round() / 1000.0).collect::<Vec<_>>());

    println!("\n== metric ridge shift with dbeta (site 2, band = right TBS at 0.25) ==");
    let (_, rb) = f.boundary_bands();
    println!("right band {rb}");
    for dbeta in [0.0, 2.0, 4.0, 6.0, 8.0] {
        let mut best = (0.0, f64::MIN);
        for k in 0..=80 {
            let phi = 0.3 - 0.6 * k as f64 / 80.0;
            if let Ok(g) = quantum_metric(&spec, rb, phi, dbeta, 2, None) {
                if g.g_pp > best.1 {
                    best = (phi, g.g_pp);
                }
            }
        }
        println!("dbeta {dbeta:4.1}: ridge at phi {:+.4} (g_pp {:.3})", best.0, best.1);
    }

    println!("\n== criterion 9 alignment probe (r = 0.7, kappa0 = 240) ==");
    let spec = spec_rad(240.0, 0.7);
    let run = ze_tbs(&spec, 0.0, 1, 1.0, None).unwrap();
    let z = &run.trace.z;
    let zeta = &run.zeta_series;
    let mut best = (0.0, f64::MIN);
    for i in 1..z.len() {
        let d = (zeta[i] - zeta[i - 1]).abs() / (z[i] - z[i - 1]);
        if d > best.1 {
            best = (0.5 * (z[i] + z[i - 1]), d);
        }
    }
    println!("peak |dzeta/dz| at z = {:.4}", best.0);
    let f0 = eigenframe(&spec, 0.25, 1, 0.0, None).unwrap();
    let (_, rb) = f0.boundary_bands();
    let mut bestg = (0.0, f64::MIN);
    for k in 0..=400 {
        let phi = 0.25 - 0.5 * k as f64 / 400.0;
        if let Ok(g) = quantum_metric(&spec, rb, phi, 0.0, 1, None) {
            if g.g_pp > bestg.1 {
                bestg = (phi, g.g_pp);
            }
        }
    }
    let z_metric = (bestg.0 - 0.25) / (-0.5) * 1.0;
    println!("g_pp max at phi {:+.4} -> z = {:.4}", bestg.0, z_metric);
}
