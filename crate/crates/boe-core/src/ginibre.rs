//! Recurrence data for products of independent Ginibre matrices.
//!
//! Squared singular values of a product of `m` complex Ginibre factors with
//! dimension offsets `η_1, …, η_m` (base dimension `N`, factor `l` of size
//! `(N+η_l) × (N+η_{l−1})`) are a biorthogonal ensemble whose recurrence
//! matrix is banded with one superdiagonal and `m` subdiagonals:
//!
//! `J_{n,n−k} = N^k · α_{n,−k} / ∏_{l=1}^m (N+η_l)`,   `k ∈ {−1, 0, …, m}`,
//!
//! with integer coefficients `α_{n,−k}` given by finite differences of the
//! rising product `∏_{l=0}^m (n + η_l − i + 1)` (`η_0 = 0`). Centered at
//! `n = N` the diagonals converge — some exactly, the rest at rate `1/N` —
//! to the elementary symmetric values `e_{k+1}(θ_0, …, θ_m)`, the symbol of
//! the right-limit Laurent matrix. The limiting variance of a polynomial
//! statistic follows from the symbol by the Fourier formula.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::band::{BandMatrix, Extent};
use crate::combinatorics::{binomial, factorial};
use crate::laurent::{variance_fourier, LaurentPoly};
use crate::poly::RealPoly;
use crate::scalar::Coeff;
use crate::{mathx, Error, Result};

fn check_offsets(eta: &[i64]) -> Result<()> {
    if eta.is_empty() {
        return Err(Error::Invalid("need offsets eta_0..eta_m (eta_0 = 0)"));
    }
    if eta[0] != 0 {
        return Err(Error::Invalid("eta_0 must be 0"));
    }
    if eta.iter().any(|&e| e < 0) {
        return Err(Error::Invalid("offsets must be nonnegative"));
    }
    Ok(())
}

/// The integer recurrence coefficient `α_{n,−k}`: the `(k+1)`-st finite
/// difference (at step one, divided by `(k+1)!`) of
/// `i ↦ ∏_{l=0}^m (n + η_l − i + 1)` evaluated at `i = 0`. Vanishes for
/// `k > m`; `k = −1` gives the bare product.
pub fn alpha(n: i64, k: i64, eta: &[i64]) -> Result<BigRational> {
    check_offsets(eta)?;
    if k < -1 {
        return Err(Error::Invalid("diagonal index starts at -1"));
    }
    let order = (k + 1) as u64;
    let mut sum = BigInt::zero();
    for i in 0..=order {
        let mut prod = BigInt::one();
        for &e in eta {
            prod *= BigInt::from(n + e - i as i64 + 1);
        }
        let mut term = binomial(order, i) * prod;
        if i % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    Ok(BigRational::new(sum, factorial(order)))
}

/// Exact matrix entry `J_{n,n−k}` of the dimension-`N` recurrence matrix.
pub fn exact_entry(big_n: i64, n: i64, k: i64, eta: &[i64]) -> Result<BigRational> {
    check_offsets(eta)?;
    if big_n < 1 {
        return Err(Error::Invalid("dimension must be positive"));
    }
    let m = (eta.len() - 1) as i64;
    if !(-1..=m).contains(&k) || n - k < 0 {
        return Ok(BigRational::zero());
    }
    let mut mass = BigRational::one();
    for &e in &eta[1..] {
        mass *= BigRational::from(BigInt::from(big_n + e));
    }
    let n_big = BigRational::from(BigInt::from(big_n));
    let scale = if k >= 0 {
        let mut p = BigRational::one();
        for _ in 0..k {
            p *= n_big.clone();
        }
        p
    } else {
        BigRational::one() / n_big
    };
    Ok(scale * alpha(n, k, eta)? / mass)
}

/// The full recurrence matrix at dimension `N` as a semi-infinite band
/// matrix over exact rationals (`bandwidth m + 1`; one superdiagonal).
pub fn recurrence_matrix(big_n: i64, eta: &[i64]) -> Result<BandMatrix<BigRational>> {
    check_offsets(eta)?;
    if big_n < 1 {
        return Err(Error::Invalid("dimension must be positive"));
    }
    let eta = eta.to_vec();
    let bandwidth = eta.len();
    Ok(BandMatrix::from_fn(
        Extent::SemiInfinite,
        bandwidth,
        "ginibre product recurrence",
        move |i, j| exact_entry(big_n, i, i - j, &eta).expect("validated parameters"),
    ))
}

/// Floating-point copy of [`recurrence_matrix`] for the numeric pipeline.
pub fn recurrence_matrix_f64(big_n: i64, eta: &[i64]) -> Result<BandMatrix<f64>> {
    check_offsets(eta)?;
    if big_n < 1 {
        return Err(Error::Invalid("dimension must be positive"));
    }
    let eta = eta.to_vec();
    let bandwidth = eta.len();
    Ok(BandMatrix::from_fn(
        Extent::SemiInfinite,
        bandwidth,
        "ginibre product recurrence",
        move |i, j| {
            exact_entry(big_n, i, i - j, &eta).expect("validated parameters").to_f64()
        },
    ))
}

/// The right-limit symbol `ŝ_k = e_{k+1}(θ_0, …, θ_m)`, `k ∈ {−1, …, m}`,
/// from the limiting dimension ratios `θ_l` (`θ_0 = 1`; equal dimensions up
/// to bounded offsets give `θ = (1, …, 1)` and binomial coefficients).
pub fn limit_symbol(theta: &[BigRational]) -> Result<LaurentPoly<BigRational>> {
    if theta.is_empty() {
        return Err(Error::Invalid("need ratios theta_0..theta_m"));
    }
    if !theta[0].is_one() {
        return Err(Error::Invalid("theta_0 must be 1"));
    }
    if theta.iter().any(|t| !t.is_positive()) {
        return Err(Error::Invalid("ratios must be positive"));
    }
    // Coefficients of ∏_l (1 + θ_l x): elem[j] = e_j(θ).
    let mut elem = vec![BigRational::one()];
    for t in theta {
        let mut next = vec![BigRational::zero(); elem.len() + 1];
        for (j, c) in elem.iter().enumerate() {
            next[j] += c.clone();
            next[j + 1] += c * t;
        }
        elem = next;
    }
    Ok(LaurentPoly::from_pairs(
        elem.into_iter().enumerate().map(|(j, e)| (j as i64 - 1, e)),
    ))
}

/// Limiting variance of the statistic `F` over the product ensemble with
/// ratios `θ`: the Fourier formula on the right-limit symbol.
pub fn mop_variance(f: &RealPoly<BigRational>, theta: &[BigRational]) -> Result<BigRational> {
    Ok(variance_fourier(f, &limit_symbol(theta)?))
}

/// Deviation history of one diagonal of the centered recurrence entries from
/// its limit.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalRate {
    pub k: i64,
    /// `|J^{(N)}_{N,N−k} − e_{k+1}(1,…,1)|` per dimension, exact before
    /// rounding.
    pub deviations: Vec<f64>,
    /// Fitted decay exponent `p` in `deviation ~ N^{−p}`; `None` when the
    /// diagonal is exact at every sampled dimension.
    pub exponent: Option<f64>,
}

/// Per-diagonal convergence rates toward the right limit.
#[derive(Debug, Clone, PartialEq)]
pub struct RateReport {
    pub dims: Vec<i64>,
    pub diagonals: Vec<DiagonalRate>,
}

/// Measure, exactly, how fast each centered diagonal approaches its limit as
/// the dimension runs through `dims` (ascending). Bounded offsets mean
/// `θ = 1`: limits are binomial coefficients, deviating diagonals decay like
/// `1/N`.
pub fn convergence_rates(eta: &[i64], dims: &[i64]) -> Result<RateReport> {
    check_offsets(eta)?;
    if dims.len() < 2 {
        return Err(Error::TooFewSamples);
    }
    if dims.windows(2).any(|w| w[0] >= w[1]) || dims[0] < 1 {
        return Err(Error::Invalid("dimensions must be positive and strictly increasing"));
    }
    let m = (eta.len() - 1) as i64;
    let mut diagonals = Vec::new();
    for k in -1..=m {
        let limit = BigRational::from(binomial(m as u64 + 1, (k + 1) as u64));
        let exact: Vec<BigRational> = dims
            .iter()
            .map(|&n| {
                let e = exact_entry(n, n, k, eta)?;
                Ok(Signed::abs(&(e - &limit)))
            })
            .collect::<Result<_>>()?;
        let deviations: Vec<f64> = exact.iter().map(|d| d.to_f64()).collect();
        let mut fits = Vec::new();
        for i in 0..exact.len() - 1 {
            if exact[i].is_positive() && exact[i + 1].is_positive() {
                let ratio = deviations[i] / deviations[i + 1];
                let growth = dims[i + 1] as f64 / dims[i] as f64;
                fits.push(mathx::ln(ratio) / mathx::ln(growth));
            }
        }
        let exponent = if fits.is_empty() {
            None
        } else {
            Some(fits.iter().sum::<f64>() / fits.len() as f64)
        };
        diagonals.push(DiagonalRate { k, deviations, exponent });
    }
    Ok(RateReport { dims: dims.to_vec(), diagonals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn ones(count: usize) -> Vec<BigRational> {
        vec![rat(1, 1); count]
    }

    #[test]
    fn single_factor_coefficients_in_closed_form() {
        // m = 1, equal dimensions: α(0) = 2n+1, α(1) = 1, α(−1) = (n+1)².
        let eta = [0, 0];
        for n in 0..8i64 {
            assert_eq!(alpha(n, 0, &eta).unwrap(), rat(2 * n + 1, 1));
            assert_eq!(alpha(n, 1, &eta).unwrap(), rat(1, 1));
            assert_eq!(alpha(n, -1, &eta).unwrap(), rat((n + 1) * (n + 1), 1));
            assert_eq!(alpha(n, 2, &eta).unwrap(), rat(0, 1));
        }
    }

    #[test]
    fn two_factor_coefficients_in_closed_form() {
        // m = 2: α(0) = 3n²+3n+1, α(1) = 3n, α(2) = 1.
        let eta = [0, 0, 0];
        for n in 0..8i64 {
            assert_eq!(alpha(n, 0, &eta).unwrap(), rat(3 * n * n + 3 * n + 1, 1));
            assert_eq!(alpha(n, 1, &eta).unwrap(), rat(3 * n, 1));
            assert_eq!(alpha(n, 2, &eta).unwrap(), rat(1, 1));
        }
    }

    #[test]
    fn single_factor_entries_and_deviations() {
        let eta = [0, 0];
        // J_{n,n} = (2n+1)/N, J_{n,n−1} = 1, J_{n,n+1} = (n+1)²/N².
        assert_eq!(exact_entry(5, 5, 0, &eta).unwrap(), rat(11, 5));
        assert_eq!(exact_entry(5, 5, 1, &eta).unwrap(), rat(1, 1));
        assert_eq!(exact_entry(5, 5, -1, &eta).unwrap(), rat(36, 25));
        // Centered deviations: exactly 1/N on the diagonal, (2N+1)/N² above.
        let n = 12i64;
        let d0 = exact_entry(n, n, 0, &eta).unwrap() - rat(2, 1);
        assert_eq!(d0, rat(1, n));
        let d_up = exact_entry(n, n, -1, &eta).unwrap() - rat(1, 1);
        assert_eq!(d_up, rat(2 * n + 1, n * n));
    }

    #[test]
    fn two_factor_exact_diagonals() {
        let eta = [0, 0, 0];
        for n in [10i64, 25, 60] {
            // k = 1 and k = 2 sit at their limits 3 and 1 already.
            assert_eq!(exact_entry(n, n, 1, &eta).unwrap(), rat(3, 1));
            assert_eq!(exact_entry(n, n, 2, &eta).unwrap(), rat(1, 1));
        }
    }

    #[test]
    fn matrix_shape_and_band() {
        let j = recurrence_matrix(20, &[0, 0, 0]).unwrap();
        assert_eq!(j.bandwidth(), 3);
        assert_eq!(j.entry(4, 6), rat(0, 1)); // second superdiagonal is empty
        assert_eq!(j.entry(6, 4), rat(1, 1)); // N²·α(2)/N² with α(2) = 1
        assert_eq!(j.entry(5, 4), rat(3, 4)); // N·α(1)/N² = 3n/N at n = 5
        assert_eq!(j.entry(0, 1), rat(1, 8000)); // (n+1)³/N³ at n = 0
    }

    #[test]
    fn limit_symbols_are_elementary_symmetric_values() {
        let s = limit_symbol(&ones(2)).unwrap();
        assert_eq!(s.coeff(-1), rat(1, 1));
        assert_eq!(s.coeff(0), rat(2, 1));
        assert_eq!(s.coeff(1), rat(1, 1));
        let s3 = limit_symbol(&ones(3)).unwrap();
        assert_eq!(s3.coeff(-1), rat(1, 1));
        assert_eq!(s3.coeff(0), rat(3, 1));
        assert_eq!(s3.coeff(1), rat(3, 1));
        assert_eq!(s3.coeff(2), rat(1, 1));
        let skew = limit_symbol(&[rat(1, 1), rat(1, 2)]).unwrap();
        assert_eq!(skew.coeff(-1), rat(1, 1));
        assert_eq!(skew.coeff(0), rat(3, 2));
        assert_eq!(skew.coeff(1), rat(1, 2));
        assert!(limit_symbol(&[rat(2, 1)]).is_err());
    }

    #[test]
    fn product_variances() {
        assert_eq!(mop_variance(&RealPoly::x(), &ones(2)).unwrap(), rat(1, 1));
        assert_eq!(mop_variance(&RealPoly::x(), &ones(3)).unwrap(), rat(3, 1));
        let xsq: RealPoly<BigRational> = RealPoly::monomial(2);
        assert_eq!(mop_variance(&xsq, &ones(2)).unwrap(), rat(18, 1));
    }

    #[test]
    fn rates_halve_per_doubling_where_not_exact() {
        let report = convergence_rates(&[0, 0], &[50, 100, 200]).unwrap();
        let by_k = |k: i64| report.diagonals.iter().find(|d| d.k == k).unwrap();
        // Subdiagonal is exact: no exponent to fit.
        assert_eq!(by_k(1).exponent, None);
        assert!(by_k(1).deviations.iter().all(|&d| d == 0.0));
        // Main diagonal deviates by exactly 1/N: exponent exactly 1.
        let p0 = by_k(0).exponent.unwrap();
        assert!((p0 - 1.0).abs() < 1e-12, "main diagonal exponent {p0}");
        // Superdiagonal ~ 2/N: exponent within 20% of 1.
        let p_up = by_k(-1).exponent.unwrap();
        assert!((p_up - 1.0).abs() < 0.2, "superdiagonal exponent {p_up}");

        let two = convergence_rates(&[0, 0, 0], &[50, 100, 200]).unwrap();
        let by_k2 = |k: i64| two.diagonals.iter().find(|d| d.k == k).unwrap();
        assert_eq!(by_k2(1).exponent, None);
        assert_eq!(by_k2(2).exponent, None);
        assert!((by_k2(0).exponent.unwrap() - 1.0).abs() < 0.2);
        assert!((by_k2(-1).exponent.unwrap() - 1.0).abs() < 0.2);
    }

    #[test]
    fn recurrence_family_detects_its_limit_symbol() {
        let family = |n: i64| recurrence_matrix_f64(n, &[0, 0]).unwrap();
        let report = crate::right_limit::detect_right_limit(
            family,
            &[100, 200, 400],
            2,
            5e-2,
        )
        .unwrap();
        match report.outcome {
            crate::right_limit::DetectOutcome::LaurentLimit(ref s) => {
                assert!((s.coeff(0) - 2.0).abs() < 5e-2);
                assert!((s.coeff(1) - 1.0).abs() < 5e-2);
                assert!((s.coeff(-1) - 1.0).abs() < 5e-2);
            }
            ref other => panic!("expected the binomial symbol, got {other:?}"),
        }
        let p = report.rate_exponent.unwrap();
        assert!((p - 1.0).abs() < 0.3, "window decay exponent {p}");
    }

    #[test]
    fn parameter_validation() {
        assert!(alpha(3, 0, &[1, 0]).is_err());
        assert!(alpha(3, 0, &[]).is_err());
        assert!(alpha(3, -2, &[0]).is_err());
        assert!(recurrence_matrix(0, &[0, 0]).is_err());
        assert!(convergence_rates(&[0, 0], &[100]).is_err());
        assert!(convergence_rates(&[0, 0], &[100, 50]).is_err());
    }
}
