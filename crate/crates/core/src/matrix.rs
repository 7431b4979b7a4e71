//! Dense symmetric matrices and the cyclic Jacobi eigenvalue solver.

use crate::error::{Error, Result};

/// Default off-diagonal tolerance for [`eigenvalues`].
pub const DEFAULT_TOL: f64 = 1e-12;

/// Sweep cap for [`eigenvalues`].
pub const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix, row-major. Symmetry is maintained by
/// construction: every write goes to both `(i, j)` and `(j, i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(order: usize) -> Self {
        SymMatrix {
            order,
            entries: vec![0.0; order * order],
        }
    }

    /// Builds a matrix from rows, rejecting non-square or non-symmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let mut m = SymMatrix::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidGraph(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                if rows[j][i] != x {
                    return Err(Error::InvalidGraph(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
                m.entries[i * order + j] = x;
            }
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.order + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, x: f64) {
        self.entries[i * self.order + j] = x;
        self.entries[j * self.order + i] = x;
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn entry_sum(&self) -> f64 {
        self.entries.iter().sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum()
    }

    /// `sqrt(sum_{i != j} a_ij^2)`.
    pub fn off_diagonal_norm(&self) -> f64 {
        let n = self.order;
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                let x = self.get(i, j);
                s += x * x;
            }
        }
        (2.0 * s).sqrt()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.order.max(1))
            .take(self.order)
            .map(<[f64]>::to_vec)
            .collect()
    }
}

/// Real eigenvalues, sorted non-increasing, repeated by multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.last().copied()
    }

    /// Sum of absolute values, summed as computed (no clamping).
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// `max_i |ρ_i + ρ_{n+1-i}|`; zero for a spectrum symmetric about 0.
    pub fn symmetry_error(&self) -> f64 {
        self.values
            .iter()
            .zip(self.values.iter().rev())
            .map(|(a, b)| (a + b).abs())
            .fold(0.0, f64::max)
    }
}

/// All eigenvalues of a symmetric matrix by cyclic-by-row Jacobi rotations.
///
/// Stops once the off-diagonal Frobenius norm drops below `tol`, or fails
/// with [`Error::Convergence`] after [`MAX_SWEEPS`] sweeps.
pub fn eigenvalues(mat: &SymMatrix, tol: f64) -> Result<Spectrum> {
    eigenvalues_with_cap(mat, tol, MAX_SWEEPS)
}

pub fn eigenvalues_with_cap(mat: &SymMatrix, tol: f64, max_sweeps: usize) -> Result<Spectrum> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let n = mat.order;
    let mut a = mat.entries.clone();
    let idx = |i: usize, j: usize| i * n + j;

    let off = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += a[idx(i, j)] * a[idx(i, j)];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut residual = off(&a);
    let mut sweeps = 0;
    while residual >= tol {
        if sweeps == max_sweeps {
            return Err(Error::Convergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[idx(k, p)] = new_kp;
                    a[idx(p, k)] = new_kp;
                    a[idx(k, q)] = new_kq;
                    a[idx(q, k)] = new_kq;
                }
                a[idx(p, p)] -= t * apq;
                a[idx(q, q)] += t * apq;
                a[idx(p, q)] = 0.0;
                a[idx(q, p)] = 0.0;
            }
        }
        sweeps += 1;
        residual = off(&a);
    }
    Ok(Spectrum::from_values((0..n).map(|i| a[idx(i, i)]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn exchange_matrix() {
        let m = SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let s = eigenvalues(&m, DEFAULT_TOL).unwrap();
        assert!((s.values()[0] - 1.0).abs() < 1e-15);
        assert!((s.values()[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn diagonal_input_needs_no_sweep() {
        let m = SymMatrix::from_rows(&[vec![3.0, 0.0], vec![0.0, -2.0]]).unwrap();
        assert_eq!(eigenvalues(&m, DEFAULT_TOL).unwrap().values(), &[3.0, -2.0]);
        assert!(eigenvalues(&SymMatrix::zeros(0), DEFAULT_TOL).unwrap().is_empty());
    }

    #[test]
    fn rejects_asymmetric_rows() {
        assert!(SymMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(SymMatrix::from_rows(&[vec![0.0, 1.0]]).is_err());
    }

    #[test]
    fn bad_tolerance() {
        let m = SymMatrix::zeros(2);
        assert!(eigenvalues(&m, 0.0).is_err());
        assert!(eigenvalues(&m, f64::NAN).is_err());
    }

    #[test]
    fn sweep_cap_reports_residual() {
        let mut m = SymMatrix::zeros(3);
        m.set(0, 1, 1.0);
        m.set(1, 2, 1.0);
        match eigenvalues_with_cap(&m, 1e-12, 0) {
            Err(Error::Convergence { sweeps, residual }) => {
                assert_eq!(sweeps, 0);
                assert!((residual - 2.0).abs() < 1e-12);
            }
            other => panic!("expected convergence error, got {other:?}"),
        }
    }

    #[test]
    fn known_tridiagonal() {
        // Eigenvalues of the path adjacency matrix P_4 are 2cos(kπ/5).
        let mut m = SymMatrix::zeros(4);
        for i in 0..3 {
            m.set(i, i + 1, 1.0);
        }
        let s = eigenvalues(&m, DEFAULT_TOL).unwrap();
        for (k, x) in s.values().iter().enumerate() {
            let expected = 2.0 * ((k + 1) as f64 * std::f64::consts::PI / 5.0).cos();
            assert!((x - expected).abs() < 1e-13, "{x} vs {expected}");
        }
    }

    fn sym_matrix() -> impl Strategy<Value = SymMatrix> {
        (1usize..9).prop_flat_map(|n| {
            prop::collection::vec(-3.0f64..3.0, n * (n + 1) / 2).prop_map(move |vals| {
                let mut m = SymMatrix::zeros(n);
                let mut it = vals.into_iter();
                for i in 0..n {
                    for j in i..n {
                        m.set(i, j, it.next().unwrap());
                    }
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn preserves_trace_and_frobenius(m in sym_matrix()) {
            let s = eigenvalues(&m, DEFAULT_TOL).unwrap();
            prop_assert_eq!(s.len(), m.order());
            prop_assert!((s.sum() - m.trace()).abs() < 1e-9);
            prop_assert!((s.sum_squares() - m.frobenius_sq()).abs() < 1e-9);
            prop_assert!(s.values().windows(2).all(|w| w[0] >= w[1]));
        }

        #[test]
        fn shift_moves_every_eigenvalue(m in sym_matrix(), shift in -2.0f64..2.0) {
            let mut shifted = m.clone();
            for i in 0..m.order() {
                shifted.set(i, i, m.get(i, i) + shift);
            }
            let a = eigenvalues(&m, DEFAULT_TOL).unwrap();
            let b = eigenvalues(&shifted, DEFAULT_TOL).unwrap();
            for (x, y) in a.values().iter().zip(b.values()) {
                prop_assert!((x + shift - y).abs() < 1e-9);
            }
        }
    }
}
