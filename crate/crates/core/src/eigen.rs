//! Brute-force ground truth: a dense cyclic Jacobi eigensolver and the
//! energies built on it.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{randic_matrix, Graph};
use crate::math;
use crate::matrix::SymmetricMatrix;

/// Jacobi stops once the off-diagonal Frobenius norm drops below this.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
/// Eigenvalues closer than this are merged when grouping multiplicities.
pub const CLUSTER_RADIUS: f64 = 1e-8;
/// Default tolerance when comparing spectra or energies from different routes.
pub const COMPARISON_TOLERANCE: f64 = 1e-9;

/// Multiset of real eigenvalues, kept in non-increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    /// Sum of absolute values.
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    /// Multiset union.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        Spectrum::from_values(values)
    }

    /// `(value, multiplicity)` pairs. Consecutive eigenvalues within `radius`
    /// of each other fall in the same group; the reported value is the mean
    /// of the group.
    pub fn grouped_with(&self, radius: f64) -> Vec<(f64, usize)> {
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut sum = 0.0;
        let mut prev: Option<f64> = None;
        for &x in &self.values {
            match (prev, groups.last_mut()) {
                (Some(p), Some(last)) if p - x <= radius => {
                    sum += x;
                    last.1 += 1;
                    last.0 = sum / last.1 as f64;
                }
                _ => {
                    sum = x;
                    groups.push((x, 1));
                }
            }
            prev = Some(x);
        }
        groups
    }

    pub fn grouped(&self) -> Vec<(f64, usize)> {
        self.grouped_with(CLUSTER_RADIUS)
    }

    /// Multiplicity of the group containing `value`, or 0.
    pub fn multiplicity_of(&self, value: f64) -> usize {
        self.grouped()
            .into_iter()
            .find(|(v, _)| (v - value).abs() <= CLUSTER_RADIUS)
            .map_or(0, |(_, m)| m)
    }

    /// Largest elementwise difference between two sorted spectra of equal size.
    pub fn max_abs_diff(&self, other: &Spectrum) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        Some(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max),
        )
    }
}

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
pub fn symmetric_eigenvalues(m: &SymmetricMatrix) -> Result<Spectrum> {
    let n = m.dim();
    let mut a = m.as_slice().to_vec();

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a, n) < OFF_DIAGONAL_TOLERANCE {
            return Ok(Spectrum::from_values((0..n).map(|i| a[i * n + i]).collect()));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }

    let off = off_diagonal_norm(&a, n);
    if off < OFF_DIAGONAL_TOLERANCE {
        Ok(Spectrum::from_values((0..n).map(|i| a[i * n + i]).collect()))
    } else {
        Err(Error::NoConvergence { sweeps: MAX_SWEEPS, off_diagonal: off })
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[i * n + j] * a[i * n + j];
        }
    }
    math::sqrt(2.0 * s)
}

/// Annihilates `a[p][q]` with a plane rotation, updating both triangles.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + math::sqrt(theta * theta + 1.0));
        if theta < 0.0 { -t } else { t }
    };
    let c = 1.0 / math::sqrt(t * t + 1.0);
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

/// Randić spectrum computed directly from the Randić matrix.
pub fn randic_spectrum(g: &Graph) -> Result<Spectrum> {
    symmetric_eigenvalues(&randic_matrix(g))
}

/// `RE(G) = Σ |ρ_i|` from the dense eigensolver.
pub fn randic_energy(g: &Graph) -> Result<f64> {
    Ok(randic_spectrum(g)?.energy())
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    symmetric_eigenvalues(&g.adjacency_matrix())
}

/// Ordinary energy `E(G) = Σ |λ_i|` of the adjacency matrix.
pub fn adjacency_energy(g: &Graph) -> Result<f64> {
    Ok(adjacency_spectrum(g)?.energy())
}

/// Adjacency eigenvalues of the path, `2cos(kπ/(n+1))` for `k = 1..n`.
pub fn path_adjacency_spectrum(n: usize) -> Spectrum {
    let step = core::f64::consts::PI / (n + 1) as f64;
    Spectrum::from_values((1..=n).map(|k| 2.0 * math::cos(k as f64 * step)).collect())
}
