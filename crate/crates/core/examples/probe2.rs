// scratch probe #2: coupling-ratio / length scan for the lattice scenarios
use zenowave::analysis::*;
use zenowave::evolve::*;
use zenowave::model::*;
use zenowave::spectral::*;

fn spec_with(kappa0: f64, ratio: f64) -> LatticeSpec {
    LatticeSpec::aah_preset(9, 35.0, kappa0, ratio * kappa0).unwrap()
}

fn main() {
    println!("=== ratio scan at kappa0 = 10 (chi and structure are scale-free) ===");
    for ratio in [0.5, 0.6, 0.7, 0.8, 0.9] {
        let spec = spec_with(10.0, ratio);
        let f = |phi: f64| eigenframe(&spec, phi, 1, 0.0, None).unwrap();

        let f025 = f(0.25);
        let f040 = f(0.40);
        let fm02 = f(-0.2);
        let fm025 = f(-0.25);
        let (l025, r025) = f025.boundary_bands();
        let (_, r040) = f040.boundary_bands();
        let (lm02, rm02) = fm02.boundary_bands();
        let (lm025, _) = fm025.boundary_bands();

        println!("\n-- ratio {ratio} --");
        println!(
            "zeta: R(0.25) {:+.3} L(0.25) {:+.3} | R(0.40) {:+.3} | R(-0.20) {:+.3} L(-0.20) {:+.3} | L(-0.25) {:+.3}",
            f025.zeta[r025], f025.zeta[l025], f040.zeta[r040],
            fm02.zeta[rm02], fm02.zeta[lm02], fm025.zeta[lm025]
        );
        // left-TBS site weights at the ZE endpoint
        let v = fm025.eigenvectors.column(lm025);
        println!(
            "left TBS @ -0.25 site pops: {:.3} {:.3} {:.3} {:.3}",
            v[0] * v[0], v[1] * v[1], v[2] * v[2], v[3] * v[3]
        );

        // ZE crossing gap at phi = 0 for the tracked right band
        let n = 160;
        let path: Vec<(f64, f64)> = (0..=n)
            .map(|k| (0.25 - 0.5 * k as f64 / n as f64, 0.0))
            .collect();
        let frames = band_structure(&spec, &path, 1).unwrap();
        let gaps = gap_series(&frames, r025);
        let s: Vec<f64> = (0..=n).map(|k| k as f64 / n as f64).collect();
        match lz_from_gap_samples(&s, &gaps) {
            Ok(lz) => println!(
                "ZE crossing: delta0 {:.4} v0(L=1) {:.3} -> eta0(L=1) {:.4}",
                lz.delta_min,
                lz.sweep_rate,
                2.0 * std::f64::consts::PI * (lz.delta_min / 2.0).powi(2) / lz.sweep_rate
            ),
            Err(e) => println!("ZE crossing: fit failed ({e})"),
        }

        // AZE path: track from right band at 0.40 across the 0.5 point
        let path5: Vec<(f64, f64)> = (0..=n)
            .map(|k| (0.40 + 0.4 * k as f64 / n as f64, 0.0))
            .collect();
        let frames5 = band_structure(&spec, &path5, 1).unwrap();
        let gaps5 = gap_series(&frames5, r040);
        let s5: Vec<f64> = (0..=n).map(|k| k as f64 / n as f64).collect();
        match lz_from_gap_samples(&s5, &gaps5) {
            Ok(lz) => println!(
                "AZE crossing: delta5 {:.5} v5(L=1) {:.3} -> eta5(L=1) {:.5}, zeta end {:+.3}",
                lz.delta_min,
                lz.sweep_rate,
                2.0 * std::f64::consts::PI * (lz.delta_min / 2.0).powi(2) / lz.sweep_rate,
                frames5.last().unwrap().zeta[r040]
            ),
            Err(e) => println!("AZE crossing: fit failed ({e})"),
        }

        // chi at the anchor points (independent of L and overall scale)
        let chi = |phi0: f64, dphi: f64, dbeta: f64, site: usize| {
            let ramp = PumpRamp::new(phi0, dphi, 1.0).unwrap();
            let program = MeasurementProgram::constant(site, dbeta);
            relative_decay_rate(&spec, &ramp, &program, BandSelect::RightBoundary, 1.0, 200)
        };
        let strong = 6.0 * spec.kappa0;
        print!("chi: ");
        for (label, phi0, dphi, site) in [
            ("ZE m2", 0.25, -0.5, 2),
            ("ZE m1", 0.25, -0.5, 1),
            ("AZE m2", -0.6, 0.4, 2),
            ("ramp-pt m1", -0.2, 0.0, 1),
        ] {
            match chi(phi0, dphi, strong, site) {
                Ok(c) => print!("{label} {c:+.3}  "),
                Err(e) => print!("{label} ERR({e})  "),
            }
        }
        println!();

        // ramp-tunnel band picture: right band at phi = -0.2 vs dbeta at m=1
        let fm02_frame = eigenframe(&spec, -0.2, 1, 0.0, None).unwrap();
        let (_, rb) = fm02_frame.boundary_bands();
        let m = 240;
        let mut frames_r = vec![fm02_frame];
        for k in 1..=m {
            let db = strong * k as f64 / m as f64;
            let prev = frames_r.last().unwrap();
            frames_r.push(eigenframe(&spec, -0.2, 1, db, Some(prev)).unwrap());
        }
        let gaps_r = gap_series(&frames_r, rb);
        let sz: Vec<f64> = (0..=m)
            .map(|k| 0.7 * k as f64 / m as f64)
            .collect();
        match lz_from_gap_samples(&sz, &gaps_r) {
            Ok(lz) => println!(
                "ramp crossing: delta {:.4} v(span .7) {:.3} -> eta {:.4}; zeta(rb) end {:+.3}",
                lz.delta_min,
                lz.sweep_rate,
                2.0 * std::f64::consts::PI * (lz.delta_min / 2.0).powi(2) / lz.sweep_rate,
                frames_r.last().unwrap().zeta[rb]
            ),
            Err(e) => println!("ramp crossing: no interior min ({e}); gap0 {:.3} gapEnd {:.3}, zeta end {:+.3}",
                gaps_r[0], gaps_r[m], frames_r.last().unwrap().zeta[rb]),
        }
    }
}
