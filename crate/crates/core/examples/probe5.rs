// scratch probe #5: radian-anchored scenario dynamics and crossing mechanics
use zenowave::analysis::*;
use zenowave::evolve::*;
use zenowave::model::*;
use zenowave::spectral::*;

fn spec_rad(kappa0: f64, ratio: f64) -> LatticeSpec {
    LatticeSpec::aah(9, 35.0, kappa0, ratio * kappa0, 1.0 / 3.0, PhiUnit::Radians).unwrap()
}

fn scenario(
    spec: &LatticeSpec,
    phi0: f64,
    dphi: f64,
    length: f64,
    program: MeasurementProgram,
) -> (f64, f64, f64) {
    let ramp = PumpRamp::new(phi0, dphi, length).unwrap();
    let f0 = eigenframe(spec, phi0, 1, 0.0, None).unwrap();
    let (_, rb) = f0.boundary_bands();
    let psi0 = f0.state(rb).unwrap();
    let steps = default_steps(spec, &ramp, &program);
    let trace = propagate(spec, &ramp, &program, &psi0, steps).unwrap();
    let fl = eigenframe(spec, ramp.phi_at(length), 1, 0.0, None).unwrap();
    let (lb, rb2) = fl.boundary_bands();
    let zeta_f = zeta_from_populations(trace.populations.last().unwrap(), 3).unwrap();
    let fid_l = transfer_fidelity(&trace, &fl.state(lb).unwrap());
    let fid_r = transfer_fidelity(&trace, &fl.state(rb2).unwrap());
    (zeta_f, fid_l, fid_r)
}

fn main() {
    // mechanism windows: where does the lifted left level cross the right level?
    println!("== level positions at the AZE anchors (kappa0 = 10, per ratio) ==");
    for ratio in [0.5, 0.6, 0.7] {
        let spec = spec_rad(10.0, ratio);
        for phi in [-0.6f64, -0.2] {
            let f = eigenframe(&spec, phi, 1, 0.0, None).unwrap();
            let (l, r) = f.boundary_bands();
            let vl = f.eigenvectors.column(l);
            println!(
                "r {ratio} phi {phi:+.1}: lamL {:.2} lamR {:.2} | left-TBS w1 {:.3} w2 {:.3}",
                f.eigenvalues[l], f.eigenvalues[r], vl[0] * vl[0], vl[1] * vl[1]
            );
        }
    }

    println!("\n== chi(AZE m2) vs dbeta ratio (kappa0 = 10, scale-free) ==");
    for ratio in [0.5, 0.6, 0.7] {
        let spec = spec_rad(10.0, ratio);
        let ramp = PumpRamp::new(-0.6, 0.4, 1.0).unwrap();
        print!("r {ratio}: ");
        for db in [3.0, 6.0, 10.0, 15.0, 20.0, 30.0, 60.0] {
            let program = MeasurementProgram::constant(2, db);
            match relative_decay_rate(&spec, &ramp, &program, BandSelect::RightBoundary, 1.0, 200) {
                Ok(c) => print!("db{db:.0} {c:+.2}  "),
                Err(_) => print!("db{db:.0} ERR  "),
            }
        }
        println!();
    }

    println!("\n== ramp-crossing gap at phi = -0.2 rad, site 1 (kappa0 = 10) ==");
    for ratio in [0.4, 0.5, 0.6] {
        let spec = spec_rad(10.0, ratio);
        let f0 = eigenframe(&spec, -0.2, 1, 0.0, None).unwrap();
        let (_, rb) = f0.boundary_bands();
        println!("r {ratio}: argmin band {rb} lam {:.2}", f0.eigenvalues[rb]);
        let mut min_gap = f64::INFINITY;
        let mut at_db = 0.0;
        for k in 0..=600 {
            let db = 60.0 * k as f64 / 600.0;
            let f = eigenframe(&spec, -0.2, 1, db, None).unwrap();
            let mut evs = f.eigenvalues.clone();
            evs.sort_by(f64::total_cmp);
            for w in evs.windows(2) {
                // only look in the lower-gap region
                if w[0] > 20.0 && w[1] < 35.0 && w[1] - w[0] < min_gap {
                    min_gap = w[1] - w[0];
                    at_db = db;
                }
            }
        }
        println!("   min lower-gap spacing {min_gap:.4} at dbeta {at_db:.1}");
    }

    println!("\n== simulated scenarios, radian anchors, L = 1 (ZE/AZE) and 0.7 (ramp) ==");
    println!("cols: zeF zeta/fidL | zeM zeta/fidR | azF zeta | azM(db) zeta/fidL | rmp zeta/fidL");
    for ratio in [0.5, 0.6, 0.7] {
        for kappa0 in [20.0, 40.0, 80.0, 160.0] {
            let spec = spec_rad(kappa0, ratio);
            let strong = 6.0 * kappa0;
            let (z1, f1, _) = scenario(&spec, 0.25, -0.5, 1.0, MeasurementProgram::empty());
            let (z2, _, f2r) = scenario(&spec, 0.25, -0.5, 1.0, MeasurementProgram::constant(1, strong));
            let (z3, _, _) = scenario(&spec, -0.6, 0.4, 1.0, MeasurementProgram::empty());
            let (z4a, f4a, _) = scenario(&spec, -0.6, 0.4, 1.0, MeasurementProgram::constant(2, strong));
            let (z4b, f4b, _) = scenario(&spec, -0.6, 0.4, 1.0, MeasurementProgram::constant(2, 1.2 * kappa0));
            let (z5, f5, _) = scenario(
                &spec,
                -0.2,
                0.0,
                0.7,
                MeasurementProgram::linear_ramp(1, 0.0, strong, 0.0, 0.7),
            );
            println!(
                "r {ratio} k0 {kappa0:4.0} | zeF {z1:+.3}/{f1:.2} zeM {z2:+.3}/{f2r:.2} | azF {z3:+.3} | azM(6k) {z4a:+.3}/{f4a:.2} azM(1.2k) {z4b:+.3}/{f4b:.2} | rmp {z5:+.3}/{f5:.2}"
            );
        }
    }
}
