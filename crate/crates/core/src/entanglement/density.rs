//! Density matrices over a tensor product of finite subsystems, partial
//! traces, partial transposes and negativity.
//!
//! Subsystem `0` is the most significant factor of the row/column index, the
//! same big-endian layout as the Fock basis.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::StateVector;

/// Entrywise tolerance for hermiticity checks.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues of the partial transpose within this distance of zero count as
/// zero.
pub const EIGEN_ZERO_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: DMatrix<Complex64>,
    dims: Vec<usize>,
}

/// Mixed-radix digits of `index`, most significant first.
fn split_index(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        digits[k] = index % dims[k];
        index /= dims[k];
    }
    digits
}

fn join_index(digits: impl IntoIterator<Item = usize>, dims: &[usize]) -> usize {
    digits
        .into_iter()
        .zip(dims)
        .fold(0, |acc, (d, &n)| acc * n + d)
}

impl DensityMatrix {
    /// Wraps a square matrix; `dims` must multiply to its size.
    pub fn new(matrix: DMatrix<Complex64>, dims: Vec<usize>) -> Result<Self> {
        let d = matrix.nrows();
        if matrix.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: matrix.ncols(),
            });
        }
        let prod: usize = dims.iter().product();
        if prod != d || dims.contains(&0) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: prod,
            });
        }
        Ok(Self { matrix, dims })
    }

    /// `|ψ⟩⟨ψ|` on `dims`.
    pub fn from_pure(psi: &[Complex64], dims: Vec<usize>) -> Result<Self> {
        let v = nalgebra::DVector::from_column_slice(psi);
        Self::new(&v * v.adjoint(), dims)
    }

    /// `|ψ⟩⟨ψ|` on a register of `psi.n_modes()` qubits.
    pub fn from_state(psi: &StateVector) -> Self {
        let dims = vec![2; psi.n_modes()];
        Self::from_pure(psi.amplitudes(), dims).expect("state length is 2^n")
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// `max |ρ − ρ†|` entrywise.
    pub fn hermiticity_residual(&self) -> f64 {
        hermiticity_residual(&self.matrix)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().into_iter().fold(f64::INFINITY, f64::min)
    }

    /// Hermitian within `HERMITIAN_TOL`, unit trace within `1e-12`, and no
    /// eigenvalue below `-1e-10`.
    pub fn validate(&self) -> Result<()> {
        let h = self.hermiticity_residual();
        if h > HERMITIAN_TOL {
            return Err(Error::NotHermitian(h));
        }
        let t = self.trace();
        if (t - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::Internal(format!("trace {t} is not 1")));
        }
        let m = self.min_eigenvalue();
        if m < -1e-10 {
            return Err(Error::Internal(format!("negative eigenvalue {m}")));
        }
        Ok(())
    }

    fn check_subsystem(&self, k: usize) -> Result<()> {
        if k >= self.dims.len() {
            return Err(Error::InvalidSubsystem {
                index: k,
                count: self.dims.len(),
            });
        }
        Ok(())
    }

    /// Traces out the listed subsystems; the rest keep their relative order.
    pub fn partial_trace(&self, traced: &[usize]) -> Result<Self> {
        for &k in traced {
            self.check_subsystem(k)?;
        }
        let kept: Vec<usize> = (0..self.dims.len()).filter(|k| !traced.contains(k)).collect();
        let kept_dims: Vec<usize> = kept.iter().map(|&k| self.dims[k]).collect();
        let out_dim: usize = kept_dims.iter().product();
        let mut out = DMatrix::from_element(out_dim, out_dim, ZERO);
        let n = self.dim();
        for i in 0..n {
            let di = split_index(i, &self.dims);
            for j in 0..n {
                let dj = split_index(j, &self.dims);
                if traced.iter().any(|&k| di[k] != dj[k]) {
                    continue;
                }
                let oi = join_index(kept.iter().map(|&k| di[k]), &kept_dims);
                let oj = join_index(kept.iter().map(|&k| dj[k]), &kept_dims);
                out[(oi, oj)] += self.matrix[(i, j)];
            }
        }
        Self::new(out, kept_dims)
    }

    /// Reorders tensor factors: subsystem `order[k]` of `self` becomes
    /// subsystem `k` of the result.
    pub fn permute_subsystems(&self, order: &[usize]) -> Result<Self> {
        let n = self.dims.len();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: order.len(),
            });
        }
        for &k in order {
            self.check_subsystem(k)?;
            if std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidParameter(format!("subsystem {k} repeated")));
            }
        }
        let new_dims: Vec<usize> = order.iter().map(|&k| self.dims[k]).collect();
        let d = self.dim();
        let map: Vec<usize> = (0..d)
            .map(|i| {
                let di = split_index(i, &self.dims);
                join_index(order.iter().map(|&k| di[k]), &new_dims)
            })
            .collect();
        let mut out = DMatrix::from_element(d, d, ZERO);
        for i in 0..d {
            for j in 0..d {
                out[(map[i], map[j])] = self.matrix[(i, j)];
            }
        }
        Self::new(out, new_dims)
    }

    /// Merges subsystems `[0, split)` and `[split, n)` into two factors.
    pub fn bipartition(&self, split: usize) -> Result<Self> {
        if split > self.dims.len() {
            return Err(Error::InvalidSubsystem {
                index: split,
                count: self.dims.len(),
            });
        }
        let left: usize = self.dims[..split].iter().product();
        let right: usize = self.dims[split..].iter().product();
        Self::new(self.matrix.clone(), vec![left, right])
    }

    /// Transposes the indices of one tensor factor.
    pub fn partial_transpose(&self, subsystem: usize) -> Result<DMatrix<Complex64>> {
        self.check_subsystem(subsystem)?;
        let d = self.dim();
        let mut out = DMatrix::from_element(d, d, ZERO);
        for i in 0..d {
            let mut di = split_index(i, &self.dims);
            for j in 0..d {
                let mut dj = split_index(j, &self.dims);
                std::mem::swap(&mut di[subsystem], &mut dj[subsystem]);
                let ni = join_index(di.iter().copied(), &self.dims);
                let nj = join_index(dj.iter().copied(), &self.dims);
                std::mem::swap(&mut di[subsystem], &mut dj[subsystem]);
                out[(ni, nj)] = self.matrix[(i, j)];
            }
        }
        Ok(out)
    }
}

pub fn hermiticity_residual(m: &DMatrix<Complex64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

/// Ascending eigenvalues of a hermitian matrix.
pub fn hermitian_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    let h = (m + m.adjoint()).scale(0.5);
    let mut ev: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Spectrum of the partial transpose on the left party of the cut
/// `[0, split) | [split, n)`, ascending.
pub fn partial_transpose_spectrum(rho: &DensityMatrix, split: usize) -> Result<Vec<f64>> {
    let h = rho.hermiticity_residual();
    if h > HERMITIAN_TOL {
        return Err(Error::NotHermitian(h));
    }
    let pt = rho.bipartition(split)?.partial_transpose(0)?;
    Ok(hermitian_eigenvalues(&pt))
}

/// `N = (‖ρ^{T_L}‖₁ − 1)/2`, the summed magnitude of the negative eigenvalues
/// of the partial transpose over the left party of the cut. A Bell pair has
/// `N = 1/2`.
pub fn negativity(rho: &DensityMatrix, split: usize) -> Result<f64> {
    let spectrum = partial_transpose_spectrum(rho, split)?;
    Ok(negativity_from_spectrum(&spectrum))
}

pub fn negativity_from_spectrum(spectrum: &[f64]) -> f64 {
    let n: f64 = spectrum
        .iter()
        .filter(|&&l| l < -EIGEN_ZERO_TOL)
        .map(|l| -l)
        .sum();
    if n < EIGEN_ZERO_TOL {
        0.0
    } else {
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell() -> DensityMatrix {
        let s = 0.5_f64.sqrt();
        DensityMatrix::from_pure(&[c(s), c(0.0), c(0.0), c(s)], vec![2, 2]).unwrap()
    }

    fn maximally_mixed(d: usize, dims: Vec<usize>) -> DensityMatrix {
        DensityMatrix::new(DMatrix::identity(d, d).scale(1.0 / d as f64).map(c), dims).unwrap()
    }

    #[test]
    fn new_checks_dims() {
        assert!(DensityMatrix::new(DMatrix::identity(4, 4).map(c), vec![2, 3]).is_err());
        assert!(DensityMatrix::new(DMatrix::from_element(2, 3, c(0.0)), vec![2]).is_err());
    }

    #[test]
    fn partial_trace_examples() {
        let b = bell();
        let none = b.partial_trace(&[]).unwrap();
        assert_eq!(none, b);
        let all = b.partial_trace(&[0, 1]).unwrap();
        assert_eq!(all.dim(), 1);
        assert!((all.trace() - c(1.0)).norm() < 1e-15);
        let half = b.partial_trace(&[1]).unwrap();
        assert!((half.matrix() - DMatrix::identity(2, 2).map(|x: f64| c(x / 2.0))).norm() < 1e-15);
        assert!(b.partial_trace(&[2]).is_err());
    }

    #[test]
    fn partial_trace_keeps_order() {
        // |0⟩|1⟩|+⟩ ; trace the middle qubit.
        let s = 0.5_f64.sqrt();
        let mut amps = vec![c(0.0); 8];
        amps[0b010] = c(s);
        amps[0b011] = c(s);
        let rho = DensityMatrix::from_pure(&amps, vec![2, 2, 2]).unwrap();
        let red = rho.partial_trace(&[1]).unwrap();
        assert_eq!(red.dims(), &[2, 2]);
        // |0⟩⟨0| ⊗ |+⟩⟨+|
        for (i, j) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert!((red.matrix()[(i, j)] - c(0.5)).norm() < 1e-15);
        }
    }

    #[test]
    fn permute_subsystems_swaps_factors() {
        let mut amps = vec![c(0.0); 8];
        amps[0b100] = c(1.0);
        let rho = DensityMatrix::from_pure(&amps, vec![2, 2, 2]).unwrap();
        let p = rho.permute_subsystems(&[1, 2, 0]).unwrap();
        assert_eq!(p.matrix()[(0b001, 0b001)], c(1.0));
        assert!(rho.permute_subsystems(&[0, 0, 1]).is_err());
    }

    #[test]
    fn transpose_of_identity_is_identity() {
        let rho = maximally_mixed(8, vec![2, 4]);
        assert_eq!(rho.partial_transpose(0).unwrap(), *rho.matrix());
        assert_eq!(rho.partial_transpose(1).unwrap(), *rho.matrix());
        assert!(rho.partial_transpose(2).is_err());
    }

    #[test]
    fn bell_partial_transpose_spectrum() {
        let b = bell();
        for side in 0..2 {
            let pt = b.partial_transpose(side).unwrap();
            let ev = hermitian_eigenvalues(&pt);
            let expected = [-0.5, 0.5, 0.5, 0.5];
            for (a, e) in ev.iter().zip(expected) {
                assert!((a - e).abs() < 1e-14);
            }
        }
        assert!((negativity(&b, 1).unwrap() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn product_state_is_ppt() {
        let a = [c(0.6), Complex64::new(0.0, 0.8)];
        let b = [c(0.0), c(0.5), c(0.5), Complex64::new(0.5, 0.5)];
        let amps: Vec<Complex64> = a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect();
        let rho = DensityMatrix::from_pure(&amps, vec![2, 4]).unwrap();
        let pt = rho.partial_transpose(0).unwrap();
        assert!(hermitian_eigenvalues(&pt)[0] > -1e-14);
        assert_eq!(negativity(&rho, 1).unwrap(), 0.0);
    }

    #[test]
    fn negativity_rejects_non_hermitian() {
        let mut m = DMatrix::identity(4, 4).map(|x: f64| c(x / 4.0));
        m[(0, 1)] = c(0.1);
        let rho = DensityMatrix::new(m, vec![2, 2]).unwrap();
        assert!(matches!(negativity(&rho, 1), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn validate_catches_bad_trace() {
        let rho = DensityMatrix::new(DMatrix::identity(2, 2).map(c), vec![2]).unwrap();
        assert!(rho.validate().is_err());
        assert!(bell().validate().is_ok());
    }
}
