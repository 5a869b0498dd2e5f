// scratch probe #3: direct scenario outcomes over coupling ratio/scale/length
use zenowave::analysis::*;
use zenowave::model::*;

fn main() {
    println!("columns: zeF = ze free zeta_f / fidL | zeM = frozen (6k0@1) zeta_f | azF = aze free zeta_f | azM = aze 6k0@2 zeta_f / fidL | rmp = ramp zeta_f / fidL");
    for ratio in [0.5, 0.6, 0.7, 0.8] {
        for kappa0 in [10.0, 50.0, 100.0, 200.0, 400.0] {
            let spec = LatticeSpec::aah_preset(9, 35.0, kappa0, ratio * kappa0).unwrap();
            let strong = 6.0 * kappa0;
            let ze_f = ze_tbs(&spec, 0.0, 1, 1.0, None).unwrap();
            let ze_m = ze_tbs(&spec, strong, 1, 1.0, None).unwrap();
            let az_f = aze_tbs(&spec, 0.0, 2, 1.0, None).unwrap();
            let az_m = aze_tbs(&spec, strong, 2, 1.0, None).unwrap();
            let rmp = ramp_tunnel(&spec, strong, 1, 0.7, -0.2, None).unwrap();
            println!(
                "r {ratio} k0 {kappa0:5.0} | zeF {:+.3}/{:.2} zeM {:+.3} | azF {:+.3} azM {:+.3}/{:.2} | rmp {:+.3}/{:.2}",
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
        // shorter AZE lengths at a mid scale
        for (kappa0, laze) in [(100.0, 0.3), (100.0, 0.1), (100.0, 0.03), (400.0, 0.1)] {
            let spec = LatticeSpec::aah_preset(9, 35.0, kappa0, ratio * kappa0).unwrap();
            let strong = 6.0 * kappa0;
            let az_f = aze_tbs(&spec, 0.0, 2, laze, None).unwrap();
            let az_m = aze_tbs(&spec, strong, 2, laze, None).unwrap();
            println!(
                "   aze-short r {ratio} k0 {kappa0:5.0} L {laze:4.2} | azF {:+.3} azM {:+.3}/{:.2}",
                az_f.final_zeta(),
                az_m.final_zeta(),
                az_m.fidelity_left
            );
        }
    }
}
