//! Toeplitz determinants and the strong limit theorem, numerically.
//!
//! For a self-adjoint Laurent polynomial `f` and coupling `λ`, the `N × N`
//! Toeplitz determinant `D_N` of the positive symbol `h = e^{λf}` obeys
//!
//! `ln D_N = λ N f̂_0 + (λ²/2)·Σ_n |n| f̂_n² + o(1)`,
//!
//! the fluctuation constant being half the squared `H^{1/2}` seminorm — the
//! same quantity that caps the circular-ensemble variance. This module
//! computes `ln D_N` directly (Fourier modes of `h` by trapezoid quadrature,
//! then a symmetric Toeplitz Cholesky factorization) so the limit can be
//! checked against the closed form, and provides the `N → ∞` cumulants of
//! circular-ensemble statistics through the checkpoint-maximum functional.

use alloc::vec;
use alloc::vec::Vec;

use crate::cumulants::g_weighted_tuple_sum;
use crate::laurent::LaurentPoly;
use crate::scalar::Coeff;
use crate::{mathx, Error, Result};

/// Fourier modes `ĥ_0, …, ĥ_{count−1}` of `h = e^{λf}` by an `modes`-point
/// trapezoid rule (`f` self-adjoint, so `h` is real even and the modes are
/// real cosine integrals). Spectrally accurate once `modes` clears the
/// requested mode count plus the support of `f`.
pub fn exp_symbol_modes(
    f: &LaurentPoly<f64>,
    lambda: f64,
    count: usize,
    modes: usize,
) -> Result<Vec<f64>> {
    if !f.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint);
    }
    if count == 0 {
        return Err(Error::Invalid("need at least one mode"));
    }
    let w = f.support_radius() as usize;
    if modes < 4 * (count + w) {
        return Err(Error::Invalid("quadrature must resolve at least 4(count + w) modes"));
    }
    // Real cosine form of the exponent.
    let radius = f.support_radius();
    let g = |theta: f64| -> f64 {
        let mut acc = f.coeff(0);
        for k in 1..=radius {
            acc += 2.0 * f.coeff(k) * mathx::cos(k as f64 * theta);
        }
        lambda * acc
    };
    let h: Vec<f64> = (0..modes)
        .map(|j| mathx::exp(g(2.0 * mathx::PI * j as f64 / modes as f64)))
        .collect();
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let mut acc = 0.0;
        for (j, hv) in h.iter().enumerate() {
            acc += hv * mathx::cos(k as f64 * 2.0 * mathx::PI * j as f64 / modes as f64);
        }
        out.push(acc / modes as f64);
    }
    Ok(out)
}

/// `ln det T_N(e^{λf})` for self-adjoint `f`: the symmetric Toeplitz matrix
/// of the exponential symbol is positive definite, so the log-determinant is
/// twice the log-trace of its Cholesky factor. A non-positive pivot can only
/// mean the quadrature was pushed past what the arithmetic supports.
pub fn toeplitz_log_det(
    f: &LaurentPoly<f64>,
    lambda: f64,
    n: usize,
    modes: usize,
) -> Result<f64> {
    if n == 0 {
        return Err(Error::Invalid("determinant dimension must be positive"));
    }
    let modes_vec = exp_symbol_modes(f, lambda, n, modes)?;
    // Dense symmetric Toeplitz Cholesky, T_{ab} = ĥ_{|a−b|}.
    let mut l = vec![0.0f64; n * n];
    let mut log_det = 0.0;
    for a in 0..n {
        for b in 0..=a {
            let mut sum = modes_vec[a - b];
            for k in 0..b {
                sum -= l[a * n + k] * l[b * n + k];
            }
            if a == b {
                if sum <= 0.0 {
                    return Err(Error::NonPositivePivot);
                }
                let pivot = mathx::sqrt(sum);
                l[a * n + a] = pivot;
                log_det += 2.0 * mathx::ln(pivot);
            } else {
                l[a * n + b] = sum / l[b * n + b];
            }
        }
    }
    Ok(log_det)
}

/// One strong-limit comparison: the measured `ln D_N`, its predicted mean
/// and fluctuation terms, and the leftover deviation.
#[derive(Debug, Clone, PartialEq)]
pub struct SzegoReport {
    pub dim: usize,
    pub lambda: f64,
    pub log_det: f64,
    /// `λ N f̂_0`.
    pub mean_term: f64,
    /// `(λ²/2) Σ_n |n| f̂_n²`.
    pub fluctuation_term: f64,
    /// `|ln D_N − mean − fluctuation|`.
    pub deviation: f64,
}

/// Measure `ln D_N(e^{λf})` and compare with the two-term limit formula.
pub fn szego_limit_check(
    f: &LaurentPoly<f64>,
    lambda: f64,
    n: usize,
    modes: usize,
) -> Result<SzegoReport> {
    let log_det = toeplitz_log_det(f, lambda, n, modes)?;
    let mean_term = lambda * n as f64 * f.coeff(0);
    let fluctuation_term = 0.5 * lambda * lambda * crate::laurent::h12_norm(f);
    let deviation = mathx::abs(log_det - mean_term - fluctuation_term);
    Ok(SzegoReport { dim: n, lambda, log_det, mean_term, fluctuation_term, deviation })
}

/// Modified Bessel function `I_k(x) = Σ_m (x/2)^{2m+k} / (m!(m+k)!)` by its
/// everywhere-convergent series — the independent oracle for the Fourier
/// modes of `e^{2λ cos θ}`, which are exactly `I_k(2λ)`.
pub fn bessel_i(k: u32, x: f64) -> f64 {
    let half = x / 2.0;
    // First term: (x/2)^k / k!.
    let mut term = 1.0;
    for j in 1..=k {
        term *= half / j as f64;
    }
    let mut acc = term;
    for m in 1..60u32 {
        term *= half * half / (m as f64 * (m + k) as f64);
        acc += term;
        if term < 1e-18 * mathx::abs(acc) {
            break;
        }
    }
    acc
}

/// Large-`N` limit of the `n`-th cumulant of a circular-ensemble linear
/// statistic with self-adjoint symbol `f`: the zero-sum frequency sum
/// weighted by the checkpoint-maximum functional. Gaussianity of the limit
/// is the statement that every order `n ≥ 3` returns zero.
pub fn cue_cumulant_limit<T: Coeff>(f: &LaurentPoly<T>, n: usize) -> T {
    g_weighted_tuple_sum(f, n)
}
