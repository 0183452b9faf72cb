//! Laplacian spectra of small dense graphs.
//!
//! Neighborhood graphs have order equal to a node's degree, so a dense
//! cyclic Jacobi solver is both fast enough and accurate to round-off.
//! Connectivity decisions are never taken from the spectrum: the traversal
//! in [`connected_components`] is authoritative.

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};

/// Eigenvalues with magnitude below this are treated as zero.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-9;

/// Off-diagonal Frobenius norm, relative to `max(1, max |a_ij|)`, at which
/// the Jacobi iteration stops.
pub const JACOBI_TOL: f64 = 1e-12;

pub const JACOBI_MAX_SWEEPS: usize = 200;

/// Square symmetric matrix in row-major storage. Every setter writes both
/// mirrored entries, so symmetry holds exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSymmetricMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl DenseSymmetricMatrix {
    pub fn zeros(order: usize) -> Self {
        DenseSymmetricMatrix {
            order,
            entries: vec![0.0; order * order],
        }
    }

    /// Builds the matrix from the upper triangle (`i <= j`) of `f`.
    pub fn from_upper<F: FnMut(usize, usize) -> f64>(order: usize, mut f: F) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            for j in i..order {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Accepts rows only if they form an exactly symmetric square matrix.
    #[allow(clippy::needless_range_loop)]
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("matrix is not square"));
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::invalid(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self::from_upper(n, |i, j| rows[i][j]))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.order {
            for j in i + 1..self.order {
                let x = self.get(i, j);
                sum += 2.0 * x * x;
            }
        }
        sum.sqrt()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }
}

/// Ascending eigenvalues of a symmetric matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Number of eigenvalues with `|λ| < tol`.
    pub fn zero_count(&self, tol: f64) -> usize {
        self.eigenvalues.iter().filter(|x| x.abs() < tol).count()
    }
}

/// `L = D - A`.
pub fn laplacian(g: &Graph) -> DenseSymmetricMatrix {
    let n = g.node_count();
    let mut m = DenseSymmetricMatrix::zeros(n);
    for u in 0..n {
        let nbrs = g.neighbors(u);
        m.set(u, u, nbrs.len() as f64);
        for &v in nbrs.iter().filter(|&&v| v > u) {
            m.set(u, v, -1.0);
        }
    }
    m
}

/// Full spectrum by cyclic Jacobi rotations.
///
/// Pivots are visited row by row (`p < q` in lexicographic order) on every
/// sweep, so the same input always yields bit-identical output.
pub fn eigenvalues(m: &DenseSymmetricMatrix) -> Result<Spectrum> {
    let n = m.order();
    let mut a = m.clone();
    let tol = JACOBI_TOL * m.max_abs().max(1.0);
    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal_norm();
        if off < tol {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off,
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a.get(i, i)).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum { eigenvalues })
}

/// Annihilates `a[p][q]` with a plane rotation `J^T A J`.
fn rotate(a: &mut DenseSymmetricMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    if apq == 0.0 {
        return;
    }
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let theta = (aqq - app) / (2.0 * apq);
    // smaller root of t^2 + 2 t theta - 1 = 0 keeps |angle| <= pi/4
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    for r in 0..a.order() {
        if r == p || r == q {
            continue;
        }
        let arp = a.get(r, p);
        let arq = a.get(r, q);
        a.set(r, p, c * arp - s * arq);
        a.set(r, q, s * arp + c * arq);
    }
    a.set(p, p, app - t * apq);
    a.set(q, q, aqq + t * apq);
    a.set(p, q, 0.0);
}

/// Second-smallest Laplacian eigenvalue; exactly 0 for disconnected graphs.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::invalid(format!(
            "algebraic connectivity needs at least 2 nodes, got {n}"
        )));
    }
    if connected_components(g).component_count != 1 {
        return Ok(0.0);
    }
    let spectrum = eigenvalues(&laplacian(g))?;
    let lambda2 = spectrum.eigenvalues()[1];
    Ok(if lambda2 < ZERO_EIGENVALUE_TOL {
        0.0
    } else {
        lambda2
    })
}

/// Algebraic connectivity divided by node count, clamped to `[0, 1]`.
pub fn acr(g: &Graph) -> Result<f64> {
    let lambda2 = algebraic_connectivity(g)?;
    Ok((lambda2 / g.node_count() as f64).clamp(0.0, 1.0))
}
