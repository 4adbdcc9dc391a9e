//! Floating-point joint eigenspaces of a commuting family, by successive splitting.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::exactring::ScalarMatrix;

use super::algebra::GeneratorSet;

#[derive(Clone, Debug, Serialize)]
pub struct JointSpace {
    /// Orthonormal basis vectors (columns) of the joint eigenspace.
    pub basis: Vec<Vec<f64>>,
    /// Eigenvalue of each generator on this space.
    pub character: Vec<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct JointSpectrum {
    pub spaces: Vec<JointSpace>,
    /// Some joint eigenspace is more than one-dimensional at the requested tolerance.
    pub degenerate: bool,
}

impl JointSpectrum {
    /// Number of one-dimensional joint eigenspaces.
    pub fn eigenline_count(&self) -> usize {
        self.spaces.iter().filter(|s| s.basis.len() == 1).count()
    }
}

pub fn to_dmatrix(m: &ScalarMatrix) -> DMatrix<f64> {
    DMatrix::from_row_slice(m.rows(), m.cols(), &m.to_f64())
}

fn cluster(values: &mut [f64], tol: f64) -> Vec<(f64, usize)> {
    values.sort_by(|a, b| a.total_cmp(b));
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &v in values.iter() {
        match out.last_mut() {
            Some((_, count, last)) if (v - *last).abs() <= tol => {
                *count += 1;
                *last = v;
            }
            _ => out.push((v, 1, v)),
        }
    }
    // representative value: the cluster mean
    let mut res = Vec::new();
    let mut i = 0;
    for (_, count, _) in out {
        let mean = values[i..i + count].iter().sum::<f64>() / count as f64;
        res.push((mean, count));
        i += count;
    }
    res
}

/// Splits the ambient space by each generator in turn; eigenvalues within `tol` (relative to the
/// operator scale) are merged.
pub fn joint_spectrum_numeric(g: &GeneratorSet, tol: f64) -> JointSpectrum {
    let dim = g.dim();
    let gens: Vec<DMatrix<f64>> = g.matrices().map(to_dmatrix).collect();
    let mut spaces: Vec<DMatrix<f64>> = vec![DMatrix::identity(dim, dim)];
    for a in &gens {
        let mut next = Vec::new();
        for q in spaces {
            let k = q.ncols();
            if k == 1 {
                next.push(q);
                continue;
            }
            let restricted = q.transpose() * a * &q;
            let scale = restricted.norm().max(1.0);
            let mut evs: Vec<f64> = restricted.complex_eigenvalues().iter().map(|z| z.re).collect();
            let clusters = cluster(&mut evs, tol * scale);
            if clusters.len() == 1 {
                next.push(q);
                continue;
            }
            for (lambda, mult) in clusters {
                let shifted = &restricted - DMatrix::identity(k, k) * lambda;
                let svd = shifted.svd(false, true);
                let v_t = svd.v_t.expect("right singular vectors requested");
                let mut order: Vec<usize> = (0..k).collect();
                order.sort_by(|&i, &j| svd.singular_values[i].total_cmp(&svd.singular_values[j]));
                let cols: Vec<_> = order[..mult].iter().map(|&i| v_t.row(i).transpose()).collect();
                let v = DMatrix::from_columns(&cols);
                next.push(&q * v);
            }
        }
        spaces = next;
    }
    let mut degenerate = false;
    let out = spaces
        .into_iter()
        .map(|q| {
            if q.ncols() > 1 {
                degenerate = true;
            }
            let character = gens
                .iter()
                .map(|a| {
                    let r = q.transpose() * a * &q;
                    r.trace() / q.ncols() as f64
                })
                .collect();
            let basis = (0..q.ncols()).map(|j| q.column(j).iter().copied().collect()).collect();
            JointSpace { basis, character }
        })
        .collect();
    JointSpectrum { spaces: out, degenerate }
}
