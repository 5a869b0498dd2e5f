//! Small dense-matrix helpers shared by the propagator and the eigensolvers.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Full eigendecomposition of a real symmetric matrix, eigenvalues ascending,
/// eigenvectors as orthonormal columns in matching order.
pub(crate) fn eig_sym_sorted(h: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = h.nrows();
    let eig = nalgebra::linalg::SymmetricEigen::new(h.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let mut vals = DVector::zeros(n);
    let mut vecs = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vals[dst] = eig.eigenvalues[src];
        vecs.set_column(dst, &eig.eigenvectors.column(src));
    }
    (vals, vecs)
}

/// Apply exp(i * H * dz) to `psi`, with H given by its eigendecomposition.
/// Exactly unitary up to the accuracy of the decomposition.
pub(crate) fn apply_expi(
    evals: &DVector<f64>,
    evecs: &DMatrix<f64>,
    dz: f64,
    psi: &DVector<Complex64>,
) -> DVector<Complex64> {
    let n = evals.len();
    let mut coeff = DVector::from_element(n, Complex64::new(0.0, 0.0));
    for j in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            acc += evecs[(i, j)] * psi[i];
        }
        coeff[j] = acc * Complex64::from_polar(1.0, evals[j] * dz);
    }
    let mut out = DVector::from_element(n, Complex64::new(0.0, 0.0));
    for i in 0..n {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..n {
            acc += evecs[(i, j)] * coeff[j];
        }
        out[i] = acc;
    }
    out
}

/// Gershgorin upper bound on the spectral norm of a real symmetric matrix.
pub(crate) fn gershgorin_bound(h: &DMatrix<f64>) -> f64 {
    let n = h.nrows();
    let mut bound: f64 = 0.0;
    for i in 0..n {
        let mut row = 0.0;
        for j in 0..n {
            row += h[(i, j)].abs();
        }
        bound = bound.max(row);
    }
    bound
}

/// Promote a real vector view to a complex vector.
pub(crate) fn to_complex(v: nalgebra::DVectorView<'_, f64>) -> DVector<Complex64> {
    DVector::from_iterator(v.len(), v.iter().map(|&x| Complex64::new(x, 0.0)))
}
