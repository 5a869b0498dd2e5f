use zenowave::model::*;
use zenowave::spectral::*;

fn main() {
    for beta in [35.0f64, 0.0] {
        let spec = LatticeSpec::aah(9, beta, 10.0, 5.9, 1.0 / 3.0, PhiUnit::Radians).unwrap();
        let f = eigenframe(&spec, -0.6, 1, 0.0, None).unwrap();
        println!("beta {beta}:");
        for j in 0..9 {
            println!("  band {j}: lam {:20.15} zeta {:20.16}", f.eigenvalues[j], f.zeta[j]);
        }
        let (l, r) = f.boundary_bands();
        println!("  boundary_bands -> left {l} right {r}");
    }
}
