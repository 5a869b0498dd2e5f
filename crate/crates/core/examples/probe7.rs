// scratch probe #7: ramp-tunnel asymptotics and final parameter confirmation
use zenowave::analysis::*;
use zenowave::model::*;
use zenowave::spectral::*;

fn spec_rad(kappa0: f64, ratio: f64) -> LatticeSpec {
    LatticeSpec::aah(9, 35.0, kappa0, ratio * kappa0, 1.0 / 3.0, PhiUnit::Radians).unwrap()
}

fn main() {
    println!("== adiabatic landscape along the ramp (r = 0.6, kappa0 = 10, phi = -0.2) ==");
    let spec = spec_rad(10.0, 0.6);
    for db in [0.0, 3.0, 6.0, 9.0, 12.0, 20.0, 30.0, 45.0, 60.0] {
        let f = eigenframe(&spec, -0.2, 1, db, None).unwrap();
        let lam_zeta: Vec<String> = (0..9)
            .map(|j| format!("{:.1}/{:+.2}", f.eigenvalues[j], f.zeta[j]))
            .collect();
        println!("db {db:4.0}: {}", lam_zeta.join(" "));
    }

    println!("\n== population profile of sorted band 3 at db = 60 (r = 0.6) ==");
    let f = eigenframe(&spec, -0.2, 1, 60.0, None).unwrap();
    let v = f.eigenvectors.column(3);
    let pops: Vec<String> = (0..9).map(|i| format!("{:.3}", v[i] * v[i])).collect();
    println!("band3 lam {:.2} zeta {:+.3} pops {}", f.eigenvalues[3], f.zeta[3], pops.join(" "));

    println!("\n== ramp asymptote vs kappa0 (r = 0.55, 0.6, 0.65) ==");
    for ratio in [0.55, 0.6, 0.65] {
        print!("r {ratio}: ");
        for kappa0 in [640.0, 1280.0, 2560.0, 5120.0] {
            let spec = spec_rad(kappa0, ratio);
            let r = ramp_tunnel(&spec, 6.0 * kappa0, 1, 0.7, -0.2, None).unwrap();
            print!("k0 {kappa0:4.0}: {:+.3}  ", r.final_zeta());
        }
        println!();
    }

    println!("\n== fine grid around candidate (r = 0.7): aze factor x kappa0 ==");
    for factor in [0.9, 1.0, 1.1, 1.2, 1.5] {
        print!("db {factor:.1}k0: ");
        for kappa0 in [140.0, 160.0, 180.0, 200.0, 240.0] {
            let spec = spec_rad(kappa0, 0.7);
            let r = aze_tbs(&spec, factor * kappa0, 2, 1.0, None).unwrap();
            print!("{:+.2} ", r.final_zeta());
        }
        println!();
    }

    println!("\n== ze/zem margins vs kappa0 at r = 0.7 ==");
    for kappa0 in [160.0, 200.0, 240.0, 320.0] {
        let spec = spec_rad(kappa0, 0.7);
        let strong = 6.0 * kappa0;
        let ze_f = ze_tbs(&spec, 0.0, 1, 1.0, None).unwrap();
        let ze_m = ze_tbs(&spec, strong, 1, 1.0, None).unwrap();
        let az_f = aze_tbs(&spec, 0.0, 2, 1.0, None).unwrap();
        println!(
            "k0 {kappa0:4.0}: zeF {:+.3}/{:.3} zeM {:+.3}/{:.3} azF {:+.3}",
            ze_f.final_zeta(),
            ze_f.fidelity_left,
            ze_m.final_zeta(),
            ze_m.fidelity_right,
            az_f.final_zeta()
        );
    }

    println!("\n== ramp at r = 0.7 vs kappa0 ==");
    for kappa0 in [160.0, 320.0, 640.0, 1280.0, 2560.0] {
        let spec = spec_rad(kappa0, 0.7);
        let r = ramp_tunnel(&spec, 6.0 * kappa0, 1, 0.7, -0.2, None).unwrap();
        println!("k0 {kappa0:5.0}: zeta {:+.3} fidL {:.2}", r.final_zeta(), r.fidelity_left);
    }
}
