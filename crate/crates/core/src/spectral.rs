//! Eigenanalysis of H(phi, dbeta): gauge-fixed band tracking, the
//! localization indicator zeta, and the quantum metric tensor.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::evolve::StateVector;
use crate::linalg::{eig_sym_sorted, to_complex};
use crate::model::LatticeSpec;

/// Adjacent-eigenvalue spacing below which a frame is flagged degenerate.
pub const DEGENERACY_FLAG_TOL: f64 = 1e-10;
/// Relative gap tolerance for refusing a metric evaluation.
pub const METRIC_DEGENERACY_REL_TOL: f64 = 1e-8;
/// Minimum |overlap| for accepting a tracked step without refinement.
pub const TRACK_OVERLAP_MIN: f64 = 0.9;

const MAX_REFINE_DEPTH: u32 = 14;

/// Eigendecomposition at one parameter point. Without a gauge reference the
/// bands are ordered by eigenvalue; with one, they are matched to the
/// reference by maximal |overlap| and sign-fixed against it.
#[derive(Debug, Clone)]
pub struct SpectralFrame {
    pub phi: f64,
    pub dbeta: f64,
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors as columns, in band order.
    pub eigenvectors: DMatrix<f64>,
    /// Localization indicator per band.
    pub zeta: Vec<f64>,
    /// Some pair of eigenvalues closer than [`DEGENERACY_FLAG_TOL`].
    pub degenerate: bool,
    /// Smallest matched |overlap| against the gauge reference (1 if none).
    pub min_ref_overlap: f64,
}

impl SpectralFrame {
    pub fn sites(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn state(&self, band: usize) -> Result<StateVector> {
        if band >= self.sites() {
            return Err(Error::InvalidArgument(format!(
                "band {band} out of range for {} sites",
                self.sites()
            )));
        }
        StateVector::from_real(self.eigenvectors.column(band))
    }

    /// Band indices of the most left- and most right-localized eigenstates.
    /// The chain is bipartite, so without measurement each boundary state has
    /// an exactly tied chiral partner in the other gap; ties resolve to the
    /// lower band deterministically.
    pub fn boundary_bands(&self) -> (usize, usize) {
        let tol = 1e-9;
        let mut left = 0;
        let mut right = 0;
        for (i, &z) in self.zeta.iter().enumerate() {
            if z > self.zeta[left] + tol {
                left = i;
            }
            if z < self.zeta[right] - tol {
                right = i;
            }
        }
        (left, right)
    }

    /// Distance from band `band` to the nearest other eigenvalue.
    pub fn gap_around(&self, band: usize) -> f64 {
        let lam = self.eigenvalues[band];
        self.eigenvalues
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != band)
            .map(|(_, &l)| (l - lam).abs())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Default aggregation cell for zeta: one modulation cell (3 sites) where it
/// fits, shrinking for small lattices.
pub fn default_cell(sites: usize) -> usize {
    (sites / 2).min(3).max(1)
}

/// Normalized intensity difference between the leftmost and rightmost `cell`
/// sites: (+1 fully left, -1 fully right, 0 balanced or fully bulk).
pub fn zeta_from_populations(populations: &[f64], cell: usize) -> Result<f64> {
    let m = populations.len();
    if cell == 0 || 2 * cell > m {
        return Err(Error::InvalidArgument(format!(
            "cell must satisfy 1 <= cell <= M/2 (cell = {cell}, M = {m})"
        )));
    }
    let left: f64 = populations[..cell].iter().sum();
    let right: f64 = populations[m - cell..].iter().sum();
    if left < 1e-12 && right < 1e-12 {
        return Ok(0.0);
    }
    Ok((left - right) / (left + right))
}

pub fn zeta(state: &StateVector, cell: usize) -> Result<f64> {
    zeta_from_populations(&state.populations(), cell)
}

fn canonical_sign(col: &mut DVector<f64>) {
    let mut idx = 0;
    let mut best = 0.0;
    for (i, &x) in col.iter().enumerate() {
        if x.abs() > best {
            best = x.abs();
            idx = i;
        }
    }
    if col[idx] < 0.0 {
        *col = -&*col;
    }
}

fn frame_from_matrix(
    h: &DMatrix<f64>,
    phi: f64,
    dbeta: f64,
    gauge_ref: Option<&SpectralFrame>,
) -> SpectralFrame {
    let n = h.nrows();
    let (vals, vecs) = eig_sym_sorted(h);
    let mut min_gap = f64::INFINITY;
    for i in 1..n {
        min_gap = min_gap.min(vals[i] - vals[i - 1]);
    }

    let (eigenvalues, eigenvectors, min_ref_overlap) = match gauge_ref {
        None => {
            let mut vecs = vecs;
            for j in 0..n {
                let mut col = vecs.column(j).clone_owned();
                canonical_sign(&mut col);
                vecs.set_column(j, &col);
            }
            (vals.iter().copied().collect::<Vec<_>>(), vecs, 1.0)
        }
        Some(reference) => {
            // overlap[j][k] = <ref_j | v_k>
            let overlap = reference.eigenvectors.transpose() * &vecs;
            let mut pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|j| (0..n).map(move |k| (j, k)))
                .collect();
            pairs.sort_by(|a, b| {
                overlap[(b.0, b.1)]
                    .abs()
                    .total_cmp(&overlap[(a.0, a.1)].abs())
                    .then(a.cmp(b))
            });
            let mut ref_taken = vec![false; n];
            let mut new_taken = vec![false; n];
            let mut assignment = vec![0usize; n];
            for (j, k) in pairs {
                if !ref_taken[j] && !new_taken[k] {
                    ref_taken[j] = true;
                    new_taken[k] = true;
                    assignment[j] = k;
                }
            }
            let mut out_vals = vec![0.0; n];
            let mut out_vecs = DMatrix::zeros(n, n);
            let mut min_ov = f64::INFINITY;
            for j in 0..n {
                let k = assignment[j];
                out_vals[j] = vals[k];
                let ov = overlap[(j, k)];
                min_ov = min_ov.min(ov.abs());
                let col = if ov < 0.0 {
                    -vecs.column(k).clone_owned()
                } else {
                    vecs.column(k).clone_owned()
                };
                out_vecs.set_column(j, &col);
            }
            (out_vals, out_vecs, min_ov)
        }
    };

    let cell = default_cell(n);
    let zeta = (0..n)
        .map(|j| {
            let pops: Vec<f64> = eigenvectors.column(j).iter().map(|x| x * x).collect();
            zeta_from_populations(&pops, cell).expect("cell within range")
        })
        .collect();

    SpectralFrame {
        phi,
        dbeta,
        eigenvalues,
        eigenvectors,
        zeta,
        degenerate: min_gap < DEGENERACY_FLAG_TOL,
        min_ref_overlap,
    }
}

/// Eigendecomposition of H0(phi) + dbeta at `site` (1-based).
pub fn eigenframe(
    spec: &LatticeSpec,
    phi: f64,
    site: usize,
    dbeta: f64,
    gauge_ref: Option<&SpectralFrame>,
) -> Result<SpectralFrame> {
    if site == 0 || site > spec.sites {
        return Err(Error::SiteOutOfRange {
            site,
            max: spec.sites,
        });
    }
    let mut h = spec.build_h0(phi)?;
    h[(site - 1, site - 1)] += dbeta;
    Ok(frame_from_matrix(&h, phi, dbeta, gauge_ref))
}

/// Frame of an arbitrary symmetric matrix, labeled with caller-chosen
/// parameter values. Used for families that are not of the H0 + dbeta form.
pub fn eigenframe_of_matrix(
    h: &DMatrix<f64>,
    phi_label: f64,
    dbeta_label: f64,
    gauge_ref: Option<&SpectralFrame>,
) -> Result<SpectralFrame> {
    if h.nrows() != h.ncols() || h.nrows() < 2 {
        return Err(Error::InvalidArgument("matrix must be square, n >= 2".into()));
    }
    let asym = (h - h.transpose()).abs().max();
    if asym > 1e-12 {
        return Err(Error::InvalidArgument(format!(
            "matrix not symmetric (max asymmetry {asym:.3e})"
        )));
    }
    Ok(frame_from_matrix(h, phi_label, dbeta_label, gauge_ref))
}

fn advance_frame(
    spec: &LatticeSpec,
    site: usize,
    from: &SpectralFrame,
    to: (f64, f64),
    depth: u32,
) -> Result<SpectralFrame> {
    let frame = eigenframe(spec, to.0, site, to.1, Some(from))?;
    if frame.min_ref_overlap >= TRACK_OVERLAP_MIN || depth >= MAX_REFINE_DEPTH {
        return Ok(frame);
    }
    // walk the gauge through an intermediate point to resolve the crossing
    let mid = (0.5 * (from.phi + to.0), 0.5 * (from.dbeta + to.1));
    let half = advance_frame(spec, site, from, mid, depth + 1)?;
    advance_frame(spec, site, &half, to, depth + 1)
}

/// Frames along a parameter path with the gauge reference chained from one
/// frame to the next (band tracking through avoided crossings). Steps whose
/// matched overlap drops below [`TRACK_OVERLAP_MIN`] are refined internally
/// by bisection.
pub fn band_structure(
    spec: &LatticeSpec,
    path: &[(f64, f64)],
    site: usize,
) -> Result<Vec<SpectralFrame>> {
    if path.is_empty() {
        return Err(Error::InvalidArgument("band structure path is empty".into()));
    }
    let mut frames = Vec::with_capacity(path.len());
    frames.push(eigenframe(spec, path[0].0, site, path[0].1, None)?);
    for &point in &path[1..] {
        let next = advance_frame(spec, site, frames.last().unwrap(), point, 0)?;
        frames.push(next);
    }
    Ok(frames)
}

/// Symmetric 2x2 quantum metric in the (phi, dbeta) plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricTensor {
    pub g_pp: f64,
    pub g_pd: f64,
    pub g_dd: f64,
}

impl MetricTensor {
    pub fn det(&self) -> f64 {
        self.g_pp * self.g_dd - self.g_pd * self.g_pd
    }
}

/// Central-difference step sizes for the metric stencil.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricDeltas {
    pub dphi: f64,
    pub ddbeta: f64,
}

impl MetricDeltas {
    /// 1e-3 turn in the spec's phase unit and 1e-3 * max(kappa0, 1).
    pub fn default_for(spec: &LatticeSpec) -> Self {
        MetricDeltas {
            dphi: spec.turns_to_unit(1e-3),
            ddbeta: 1e-3 * spec.kappa0.max(1.0),
        }
    }
}

/// Rotate `v` by a unit phase so that <center|v> becomes real positive.
pub fn align_phase(center: &DVector<Complex64>, v: &DVector<Complex64>) -> DVector<Complex64> {
    let ov = center.dotc(v);
    let mag = ov.norm();
    if mag < 1e-300 {
        return v.clone();
    }
    v * (ov.conj() / mag)
}

/// Metric of a one-parameter family from a 3-point stencil. Neighbor phases
/// are aligned to the center first. Returns (difference form, projector form).
pub fn metric_from_stencil_1d(
    center: &DVector<Complex64>,
    plus: &DVector<Complex64>,
    minus: &DVector<Complex64>,
    delta: f64,
) -> (f64, f64) {
    let plus = align_phase(center, plus);
    let minus = align_phase(center, minus);
    let d = (&plus - &minus) / Complex64::new(2.0 * delta, 0.0);
    let a = center.dotc(&d);
    let g_diff = d.dotc(&d).re - a.norm_sqr();
    let w = &d - center * a;
    let g_proj = w.dotc(&w).re;
    (g_diff, g_proj)
}

/// Full 2x2 metric from a 5-point stencil in the (phi, dbeta) plane.
/// Returns (difference form, projector form).
pub fn metric_from_stencil_2d(
    center: &DVector<Complex64>,
    phi_plus: &DVector<Complex64>,
    phi_minus: &DVector<Complex64>,
    db_plus: &DVector<Complex64>,
    db_minus: &DVector<Complex64>,
    deltas: MetricDeltas,
) -> (MetricTensor, MetricTensor) {
    let pp = align_phase(center, phi_plus);
    let pm = align_phase(center, phi_minus);
    let dp = align_phase(center, db_plus);
    let dm = align_phase(center, db_minus);
    let dphi = (&pp - &pm) / Complex64::new(2.0 * deltas.dphi, 0.0);
    let ddb = (&dp - &dm) / Complex64::new(2.0 * deltas.ddbeta, 0.0);
    let a = center.dotc(&dphi);
    let b = center.dotc(&ddb);

    let diff = MetricTensor {
        g_pp: dphi.dotc(&dphi).re - a.norm_sqr(),
        g_pd: (dphi.dotc(&ddb) - a.conj() * b).re,
        g_dd: ddb.dotc(&ddb).re - b.norm_sqr(),
    };
    let wp = &dphi - center * a;
    let wd = &ddb - center * b;
    let proj = MetricTensor {
        g_pp: wp.dotc(&wp).re,
        g_pd: wp.dotc(&wd).re,
        g_dd: wd.dotc(&wd).re,
    };
    (diff, proj)
}

fn stencil_column(
    spec: &LatticeSpec,
    center: &SpectralFrame,
    band: usize,
    phi: f64,
    site: usize,
    dbeta: f64,
    tol: f64,
) -> Result<DVector<Complex64>> {
    let frame = eigenframe(spec, phi, site, dbeta, Some(center))?;
    let gap = frame.gap_around(band);
    if gap < tol {
        return Err(Error::Degeneracy {
            band,
            phi,
            dbeta,
            gap,
        });
    }
    Ok(to_complex(frame.eigenvectors.column(band)))
}

/// Quantum metric of band `band` at (phi, dbeta) by gauge-aligned central
/// differences. Errors when the band is degenerate at the point or anywhere
/// on the stencil.
pub fn quantum_metric(
    spec: &LatticeSpec,
    band: usize,
    phi: f64,
    dbeta: f64,
    site: usize,
    deltas: Option<MetricDeltas>,
) -> Result<MetricTensor> {
    let deltas = deltas.unwrap_or_else(|| MetricDeltas::default_for(spec));
    if !(deltas.dphi > 0.0) || !(deltas.ddbeta > 0.0) {
        return Err(Error::InvalidArgument("metric deltas must be > 0".into()));
    }
    let center = eigenframe(spec, phi, site, dbeta, None)?;
    if band >= center.sites() {
        return Err(Error::InvalidArgument(format!(
            "band {band} out of range for {} sites",
            center.sites()
        )));
    }
    let scale = center
        .eigenvalues
        .iter()
        .fold(0.0f64, |m, &l| m.max(l.abs()))
        .max(1e-12);
    let tol = METRIC_DEGENERACY_REL_TOL * scale;
    let gap = center.gap_around(band);
    if gap < tol {
        return Err(Error::Degeneracy {
            band,
            phi,
            dbeta,
            gap,
        });
    }

    let c = to_complex(center.eigenvectors.column(band));
    let pp = stencil_column(spec, &center, band, phi + deltas.dphi, site, dbeta, tol)?;
    let pm = stencil_column(spec, &center, band, phi - deltas.dphi, site, dbeta, tol)?;
    let dp = stencil_column(spec, &center, band, phi, site, dbeta + deltas.ddbeta, tol)?;
    let dm = stencil_column(spec, &center, band, phi, site, dbeta - deltas.ddbeta, tol)?;

    let (diff, proj) = metric_from_stencil_2d(&c, &pp, &pm, &dp, &dm, deltas);
    debug_assert!(
        (diff.g_pp - proj.g_pp).abs() < 1e-6
            && (diff.g_pd - proj.g_pd).abs() < 1e-6
            && (diff.g_dd - proj.g_dd).abs() < 1e-6
    );
    Ok(proj)
}

/// Gridded metric over (phi, dbeta) for one band. Points where the band is
/// degenerate are recorded as missing rather than fabricated.
#[derive(Debug, Clone)]
pub struct MetricMap {
    pub phi_grid: Vec<f64>,
    pub dbeta_grid: Vec<f64>,
    pub band: usize,
    pub site: usize,
    /// Row-major over (phi index, dbeta index).
    pub tensors: Vec<Option<MetricTensor>>,
    pub missing: usize,
}

impl MetricMap {
    pub fn at(&self, phi_idx: usize, dbeta_idx: usize) -> &Option<MetricTensor> {
        &self.tensors[phi_idx * self.dbeta_grid.len() + dbeta_idx]
    }
}

pub fn metric_map(
    spec: &LatticeSpec,
    band: usize,
    phi_grid: &[f64],
    dbeta_grid: &[f64],
    site: usize,
    deltas: Option<MetricDeltas>,
) -> Result<MetricMap> {
    if phi_grid.is_empty() || dbeta_grid.is_empty() {
        return Err(Error::InvalidArgument("metric map grids must be nonempty".into()));
    }
    if band >= spec.sites {
        return Err(Error::InvalidArgument(format!(
            "band {band} out of range for {} sites",
            spec.sites
        )));
    }
    if site == 0 || site > spec.sites {
        return Err(Error::SiteOutOfRange {
            site,
            max: spec.sites,
        });
    }
    let points: Vec<(f64, f64)> = phi_grid
        .iter()
        .flat_map(|&p| dbeta_grid.iter().map(move |&d| (p, d)))
        .collect();
    let tensors: Vec<Option<MetricTensor>> = points
        .par_iter()
        .map(|&(p, d)| match quantum_metric(spec, band, p, d, site, deltas) {
            Ok(t) => Some(t),
            Err(Error::Degeneracy { .. }) => None,
            // grids are validated above; any other failure is a degenerate
            // stencil in disguise, record it as missing as well
            Err(_) => None,
        })
        .collect();
    let missing = tensors.iter().filter(|t| t.is_none()).count();
    Ok(MetricMap {
        phi_grid: phi_grid.to_vec(),
        dbeta_grid: dbeta_grid.to_vec(),
        band,
        site,
        tensors,
        missing,
    })
}
