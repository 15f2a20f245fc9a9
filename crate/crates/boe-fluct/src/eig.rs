//! Thin eigensolver wrappers over the system LAPACK.
//!
//! Everything downstream consumes eigenvalues only (statistics of spectra),
//! so these return plain sorted vectors and keep the array machinery out of
//! the samplers.

use std::sync::Once;

use anyhow::{Context, Result};
use ndarray::Array2;
use ndarray_linalg::{Eig, Eigh, UPLO};
use num_complex::Complex64;

extern "C" {
    fn openblas_set_num_threads(num_threads: i32);
}

static PIN_BLAS: Once = Once::new();

/// Force OpenBLAS into single-threaded mode. Sampling parallelizes across
/// draws with rayon, so threaded BLAS underneath would oversubscribe the
/// machine (and make timings erratic).
pub fn pin_blas_single_threaded() {
    PIN_BLAS.call_once(|| unsafe {
        openblas_set_num_threads(1);
    });
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(a: Array2<Complex64>) -> Result<Vec<f64>> {
    let (values, _) = a.eigh(UPLO::Lower).context("hermitian eigensolve failed")?;
    Ok(values.to_vec())
}

/// Eigenvalue angles of a unitary matrix, ascending in `[−π, π]`.
pub fn unitary_eigenangles(a: Array2<Complex64>) -> Result<Vec<f64>> {
    let (values, _) = a.eig().context("general eigensolve failed")?;
    let mut angles: Vec<f64> = values.iter().map(|z| z.arg()).collect();
    angles.sort_by(|a, b| a.partial_cmp(b).expect("angles are finite"));
    Ok(angles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn hermitian_two_by_two() {
        let a = array![
            [Complex64::new(0.0, 0.0), Complex64::new(0.0, -1.0)],
            [Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0)]
        ];
        let vals = hermitian_eigenvalues(a).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unitary_rotation_angles() {
        // A rotation by α in a 2D real subspace has eigenangles ±α.
        let alpha = 0.7f64;
        let (c, s) = (alpha.cos(), alpha.sin());
        let a = array![
            [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
            [Complex64::new(s, 0.0), Complex64::new(c, 0.0)]
        ];
        let angles = unitary_eigenangles(a).unwrap();
        assert!((angles[0] + alpha).abs() < 1e-12);
        assert!((angles[1] - alpha).abs() < 1e-12);
    }
}
