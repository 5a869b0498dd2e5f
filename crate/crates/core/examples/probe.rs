// scratch probe for pinning down scenario numbers; not part of the artifact
use zenowave::analysis::*;
use zenowave::evolve::*;
use zenowave::model::*;
use zenowave::spectral::*;

fn main() {
    let spec = LatticeSpec::aah_default();

    println!("== eigenframe at phi = 0.25 turns, dbeta = 0 ==");
    let f = eigenframe(&spec, 0.25, 1, 0.0, None).unwrap();
    for j in 0..9 {
        println!(
            "band {j}: lambda = {:+9.4}  zeta = {:+7.4}",
            f.eigenvalues[j], f.zeta[j]
        );
    }

    println!("\n== zeta of in-gap bands vs phi (dbeta = 0) ==");
    for k in 0..=20 {
        let phi = -0.5 + k as f64 * 0.05;
        let f = eigenframe(&spec, phi, 1, 0.0, None).unwrap();
        let (l, r) = f.boundary_bands();
        println!(
            "phi {phi:+.2}: left band {l} (zeta {:+.3}, lam {:+.3}) right band {r} (zeta {:+.3}, lam {:+.3})",
            f.zeta[l], f.eigenvalues[l], f.zeta[r], f.eigenvalues[r]
        );
    }

    println!("\n== ZE path tracked band (0.25 -> -0.25 turns) ==");
    let n = 60;
    let path: Vec<(f64, f64)> = (0..=n)
        .map(|k| (0.25 - 0.5 * k as f64 / n as f64, 0.0))
        .collect();
    let frames = band_structure(&spec, &path, 1).unwrap();
    let (_, right0) = frames[0].boundary_bands();
    println!("initial right band index {right0}");
    for (i, fr) in frames.iter().enumerate() {
        if i % 6 == 0 || i == n {
            println!(
                "phi {:+.3}: zeta {:+.3} lam {:+.3} min_ov {:.3} gap {:.4}",
                fr.phi,
                fr.zeta[right0],
                fr.eigenvalues[right0],
                fr.min_ref_overlap,
                fr.gap_around(right0)
            );
        }
    }
    let gaps = gap_series(&frames, right0);
    let min_gap = gaps.iter().cloned().fold(f64::INFINITY, f64::min);
    println!("min tracked gap along path: {min_gap:.4}");
    let s: Vec<f64> = (0..=n).map(|k| k as f64 / n as f64).collect();
    if let Ok(lz) = lz_from_gap_samples(&s, &gaps) {
        println!(
            "LZ fit: delta_min {:.4} v {:.4} s* {:.3} -> P_diab(L=1) {:.4}",
            lz.delta_min,
            lz.sweep_rate,
            lz.s_star,
            landau_zener_probability(lz.delta_min, lz.sweep_rate).unwrap()
        );
    }

    println!("\n== ze_tbs scenarios (L = 1) ==");
    for (dbeta, site) in [(0.0, 1), (60.0, 1), (60.0, 2)] {
        let r = ze_tbs(&spec, dbeta, site, 1.0, None).unwrap();
        println!(
            "dbeta {dbeta:5.1} site {site}: zeta_f {:+.4} fid_L {:.4} fid_R {:.4}",
            r.final_zeta(),
            r.fidelity_left,
            r.fidelity_right
        );
    }

    println!("\n== aze_tbs scenarios (L = 1) ==");
    for (dbeta, site) in [(0.0, 2), (60.0, 2), (60.0, 1), (30.0, 2)] {
        let r = aze_tbs(&spec, dbeta, site, 1.0, None).unwrap();
        println!(
            "dbeta {dbeta:5.1} site {site}: zeta_f {:+.4} fid_L {:.4} fid_R {:.4}",
            r.final_zeta(),
            r.fidelity_left,
            r.fidelity_right
        );
    }

    println!("\n== ramp_tunnel (phi = -0.2 turns, span 0.7, ramp 0 -> dbeta_max) ==");
    for (dbeta_max, site) in [(60.0, 1), (60.0, 2), (30.0, 1), (90.0, 1)] {
        let r = ramp_tunnel(&spec, dbeta_max, site, 0.7, -0.2, None).unwrap();
        println!(
            "dbeta_max {dbeta_max:5.1} site {site}: zeta_f {:+.4} fid_L {:.4} fid_R {:.4}",
            r.final_zeta(),
            r.fidelity_left,
            r.fidelity_right
        );
    }

    println!("\n== ramp_tunnel band picture: gap vs dbeta at phi = -0.2 ==");
    let f0 = eigenframe(&spec, -0.2, 1, 0.0, None).unwrap();
    let (_, right) = f0.boundary_bands();
    println!("right band index {right} zeta {:+.3}", f0.zeta[right]);
    let m = 80;
    let mut frames = vec![f0];
    for k in 1..=m {
        let db = 60.0 * k as f64 / m as f64;
        let prev = frames.last().unwrap();
        frames.push(eigenframe(&spec, -0.2, 1, db, Some(prev)).unwrap());
    }
    let gaps = gap_series(&frames, right);
    for (k, g) in gaps.iter().enumerate().step_by(8) {
        println!(
            "dbeta {:5.1}: gap {:.4} zeta {:+.3}",
            60.0 * k as f64 / m as f64,
            g,
            frames[k].zeta[right]
        );
    }
    let s: Vec<f64> = (0..=m).map(|k| 60.0 * k as f64 / m as f64 * (0.7 / 60.0)).collect();
    if let Ok(lz) = lz_from_gap_samples(&s, &gaps) {
        println!(
            "LZ fit vs z: delta_min {:.4} v {:.4} z* {:.3} -> P_diab {:.4}",
            lz.delta_min,
            lz.sweep_rate,
            lz.s_star,
            landau_zener_probability(lz.delta_min, lz.sweep_rate).unwrap()
        );
    }

    println!("\n== chi at the preset points (m = 2, z = L = 1) ==");
    for (phi0, dphi, dbeta, site) in [
        (0.25, -0.5, 60.0, 2),
        (0.25, -0.5, 60.0, 1),
        (-0.6, 0.4, 60.0, 2),
        (-0.6, 0.4, 60.0, 1),
        (0.25, -0.5, 0.0, 2),
        (-0.2, 0.0, 60.0, 1),
    ] {
        let ramp = PumpRamp::new(phi0, dphi, 1.0).unwrap();
        let program = MeasurementProgram::constant(site, dbeta);
        match relative_decay_rate(&spec, &ramp, &program, BandSelect::RightBoundary, 1.0, 160) {
            Ok(chi) => println!("phi0 {phi0:+.2} dphi {dphi:+.2} dbeta {dbeta:4.1} m{site}: chi = {chi:+.4}"),
            Err(e) => println!("phi0 {phi0:+.2} dphi {dphi:+.2} dbeta {dbeta:4.1} m{site}: ERR {e}"),
        }
    }

    println!("\n== overlap magnitudes entering chi at ZE point ==");
    let ramp = PumpRamp::new(0.25, -0.5, 1.0).unwrap();
    let f0 = eigenframe(&spec, 0.25, 1, 0.0, None).unwrap();
    let (_, rb) = f0.boundary_bands();
    let path: Vec<(f64, f64)> = (0..=160)
        .map(|k| (ramp.phi_at(k as f64 / 160.0), 0.0))
        .collect();
    let frames = band_structure(&spec, &path, 2).unwrap();
    let v0 = f0.eigenvectors.column(rb);
    let vl = frames.last().unwrap().eigenvectors.column(rb);
    println!("|<psi0|psi_free(L)>|^2 = {:.3e}", v0.dot(&vl).powi(2));

    println!("\n== g_phiphi along the ZE path at dbeta = 0 (band = tracked right) ==");
    let nphi = 24;
    for k in 0..=nphi {
        let phi = 0.25 - 0.5 * k as f64 / nphi as f64;
        match quantum_metric(&spec, rb, phi, 0.0, 1, None) {
            Ok(g) => println!("phi {phi:+.3}: g_pp {:10.4} g_dd {:8.5} det {:9.5}", g.g_pp, g.g_dd, g.det()),
            Err(e) => println!("phi {phi:+.3}: ERR {e}"),
        }
    }

    println!("\n== ridge shift with dbeta (argmax_phi g_pp, site 1) ==");
    for dbeta in [0.0, 5.0, 10.0, 15.0, 20.0] {
        let mut best = (0.0, f64::MIN);
        for k in 0..=60 {
            let phi = 0.25 - 0.5 * k as f64 / 60.0;
            if let Ok(g) = quantum_metric(&spec, rb, phi, dbeta, 1, None) {
                if g.g_pp > best.1 {
                    best = (phi, g.g_pp);
                }
            }
        }
        println!("dbeta {dbeta:5.1}: ridge at phi {:+.4} (g_pp {:.3})", best.0, best.1);
    }

    println!("\n== LZ benchmark (two-level linear sweep) ==");
    let kappa = 1.0;
    for p_target in [0.08, 0.2, 0.4, 0.6, 0.8, 0.93] {
        let q = std::f64::consts::PI * kappa * kappa / (-f64::ln(p_target));
        let zc = (15.0 * kappa / q).max(1.5 / q);
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
            "P_target {p_target:.2}: q {q:7.3} P_sim {p_sim:.4} P_formula {p_formula:.4} rel_err {:+.3}%",
            100.0 * (p_sim - p_formula) / p_formula
        );
    }

    println!("\n== step-halving probe (linear sweep) ==");
    let spec2 = LatticeSpec::two_level(0.0, 1.0).unwrap();
    let length = 8.0;
    let ramp = PumpRamp::constant(0.0, length).unwrap();
    let program = MeasurementProgram {
        entries: vec![
            ProgramEntry {
                site: 1,
                profile: MeasurementProfile::LinearRamp {
                    dbeta_start: -8.0,
                    dbeta_end: 8.0,
                    z_start: 0.0,
                    z_end: length,
                },
            },
            ProgramEntry {
                site: 2,
                profile: MeasurementProfile::LinearRamp {
                    dbeta_start: 8.0,
                    dbeta_end: -8.0,
                    z_start: 0.0,
                    z_end: length,
                },
            },
        ],
    };
    let psi0 = StateVector::basis(2, 1).unwrap();
    let run = |steps: usize| {
        propagate(&spec2, &ramp, &program, &psi0, steps)
            .unwrap()
            .populations
            .last()
            .unwrap()
            .clone()
    };
    let reference = run(16384);
    for steps in [256, 512, 1024, 2048] {
        let err: f64 = run(steps)
            .iter()
            .zip(&reference)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        println!("steps {steps:5}: err {err:.3e}");
    }

    println!("\n== ideal zeno n = 10 exact ==");
    println!("{:.10}", ideal_zeno_population(10).unwrap());
}
