//! Seeded Monte Carlo samplers and empirical cumulants.
//!
//! Three ensembles are sampled: GUE eigenvalues (density `∝ e^{−N Tr M²/2}`,
//! semicircle support `[−2, 2]`, recurrence symbol `z + 1/z`), CUE
//! eigenangles (Haar unitary via QR with phase correction), and rescaled
//! squared singular values of Ginibre products (`W*W/M(N)` with
//! `M(N) = ∏_{l≥1}(N+η_l)`). Reproducibility contract: a sample is fully
//! determined by `(seed, index)` through independent ChaCha streams, so runs
//! are deterministic under any parallel schedule.
//!
//! Empirical cumulants use k-statistics (the unbiased estimators) with
//! delete-one jackknife standard errors; power sums make the jackknife O(n).

use anyhow::{bail, ensure, Context, Result};
use ndarray::Array2;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use boe_core::ginibre::{limit_symbol, mop_variance};
use boe_core::laurent::{h12_norm, variance_fourier, LaurentPoly};
use boe_core::poly::RealPoly;
use boe_core::scalar::{rat, Coeff};

use crate::eig;

/// One realization of the point process `Ξ_N = Σ δ_{ξ_k}`.
#[derive(Debug, Clone)]
pub struct EnsembleSample {
    /// Sorted, finite points (eigenvalues, angles, or rescaled squared
    /// singular values).
    pub points: Vec<f64>,
    pub size: usize,
    pub ensemble: String,
    pub seed: u64,
}

/// Independent generator for sample `index` of a run keyed by `seed`
/// (ChaCha streams: same key, disjoint streams).
fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Standard complex Gaussian with `E|g|² = 1` (real and imaginary parts of
/// variance 1/2 each).
fn complex_unit_gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re * core::f64::consts::FRAC_1_SQRT_2, im * core::f64::consts::FRAC_1_SQRT_2)
}

/// GUE draw: Hermitian with diagonal `N(0, 1/N)` and off-diagonal
/// real/imaginary parts `N(0, 1/(2N))`, eigenvalues ascending.
pub fn sample_gue_indexed(n: usize, seed: u64, index: u64) -> Result<EnsembleSample> {
    ensure!(n >= 1, "matrix size must be positive");
    eig::pin_blas_single_threaded();
    let mut rng = stream_rng(seed, index);
    let diag_sd = (1.0 / n as f64).sqrt();
    let off_sd = (1.0 / (2.0 * n as f64)).sqrt();
    let mut a = Array2::<Complex64>::zeros((n, n));
    for i in 0..n {
        let g: f64 = rng.sample(StandardNormal);
        a[[i, i]] = Complex64::new(diag_sd * g, 0.0);
        for j in (i + 1)..n {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            let z = Complex64::new(off_sd * re, off_sd * im);
            a[[i, j]] = z;
            a[[j, i]] = z.conj();
        }
    }
    let points = eig::hermitian_eigenvalues(a)?;
    Ok(EnsembleSample { points, size: n, ensemble: "gue".into(), seed })
}

pub fn sample_gue(n: usize, seed: u64) -> Result<EnsembleSample> {
    sample_gue_indexed(n, seed, 0)
}

/// CUE draw: Haar unitary by QR of a complex Gaussian with the diagonal
/// phase correction, eigenangles ascending in `[−π, π]`.
pub fn sample_cue_indexed(n: usize, seed: u64, index: u64) -> Result<EnsembleSample> {
    ensure!(n >= 1, "matrix size must be positive");
    eig::pin_blas_single_threaded();
    let mut rng = stream_rng(seed, index);
    let z = Array2::from_shape_fn((n, n), |_| complex_unit_gaussian(&mut rng));
    let (mut q, r) = ndarray_linalg::QR::qr(&z).context("QR factorization failed")?;
    // Multiply column k by r_kk/|r_kk|: makes the factor Haar-distributed
    // rather than merely uniform-up-to-phases.
    for k in 0..n {
        let d = r[[k, k]];
        let norm = d.norm();
        ensure!(norm > 0.0, "degenerate QR diagonal");
        let phase = d / norm;
        for i in 0..n {
            q[[i, k]] *= phase;
        }
    }
    let points = eig::unitary_eigenangles(q)?;
    Ok(EnsembleSample { points, size: n, ensemble: "cue".into(), seed })
}

pub fn sample_cue(n: usize, seed: u64) -> Result<EnsembleSample> {
    sample_cue_indexed(n, seed, 0)
}

/// Ginibre-product draw: `X_j` is `(n+η_j) × (n+η_{j−1})` with unit-variance
/// complex Gaussian entries, `W = X_m ⋯ X_1`, and the points are the
/// eigenvalues of `W*W / ∏_{l≥1}(n+η_l)`. `eta` lists `η_0 = 0, η_1, …, η_m`.
pub fn sample_ginibre_product_indexed(
    n: usize,
    eta: &[i64],
    seed: u64,
    index: u64,
) -> Result<EnsembleSample> {
    ensure!(n >= 1, "matrix size must be positive");
    ensure!(
        eta.len() >= 2 && eta[0] == 0 && eta.iter().all(|&e| e >= 0),
        "offsets must be 0 = η_0, η_1 ≥ 0, …"
    );
    eig::pin_blas_single_threaded();
    let mut rng = stream_rng(seed, index);
    let dims: Vec<usize> = eta.iter().map(|&e| n + e as usize).collect();

    // W = X_m ⋯ X_1 built left-to-right: start from X_1 and multiply each
    // next factor on the left.
    let mut w = Array2::from_shape_fn((dims[1], dims[0]), |_| complex_unit_gaussian(&mut rng));
    for l in 2..dims.len() {
        let x = Array2::from_shape_fn((dims[l], dims[l - 1]), |_| complex_unit_gaussian(&mut rng));
        w = x.dot(&w);
    }

    let mass: f64 = dims[1..].iter().map(|&d| d as f64).product();
    let mut gram = Array2::<Complex64>::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..w.nrows() {
                acc += w[[k, i]].conj() * w[[k, j]];
            }
            gram[[i, j]] = acc / mass;
        }
    }
    let points = eig::hermitian_eigenvalues(gram)?;
    Ok(EnsembleSample { points, size: n, ensemble: "ginibre".into(), seed })
}

pub fn sample_ginibre_product(n: usize, eta: &[i64], seed: u64) -> Result<EnsembleSample> {
    sample_ginibre_product_indexed(n, eta, seed, 0)
}

/// `Ξ(F) = Σ_k F(ξ_k)` for a real polynomial statistic.
pub fn polynomial_statistic(points: &[f64], f: &RealPoly<f64>) -> f64 {
    points.iter().map(|x| f.eval(x)).sum()
}

/// `Ξ(f) = Σ_k f(e^{iθ_k})` for a self-adjoint Laurent symbol on angles
/// (the imaginary parts cancel pairwise; the real part is the statistic).
pub fn symbol_statistic(angles: &[f64], f: &LaurentPoly<f64>) -> f64 {
    angles.iter().map(|&t| f.eval_circle(t).0).sum()
}

/// Which ensemble a CLT experiment draws from.
#[derive(Debug, Clone)]
pub enum EnsembleKind {
    /// `rescaled` divides eigenvalues by 2, moving the support to `[−1, 1]`
    /// (symbol `(z+1/z)/2` instead of `z+1/z`).
    Gue { rescaled: bool },
    Cue,
    /// `eta` lists `η_0 = 0, …, η_m`; `theta` are the limit ratios
    /// `θ_0 = 1, …, θ_m` used for the theory overlay (all ones when absent).
    GinibreProduct { eta: Vec<i64>, theta: Option<Vec<BigRational>> },
}

/// The linear statistic: a polynomial in the points, or a Laurent symbol in
/// the angles (CUE only). Held exactly so theory overlays stay rational.
#[derive(Debug, Clone)]
pub enum Statistic {
    Polynomial(RealPoly<BigRational>),
    Symbol(LaurentPoly<BigRational>),
}

#[derive(Debug, Clone)]
pub struct CltConfig {
    pub kind: EnsembleKind,
    pub size: usize,
    pub samples: usize,
    pub seed: u64,
    pub statistic: Statistic,
}

pub fn poly_to_f64(f: &RealPoly<BigRational>) -> RealPoly<f64> {
    RealPoly::new(f.coeffs().iter().map(Coeff::to_f64).collect())
}

pub fn symbol_to_f64(s: &LaurentPoly<BigRational>) -> LaurentPoly<f64> {
    LaurentPoly::from_pairs(s.support().map(|(k, c)| (k, c.to_f64())))
}

/// The limiting variance the theory modules predict for this configuration,
/// when one applies (`None` for mismatched statistic kinds).
pub fn theory_variance(kind: &EnsembleKind, statistic: &Statistic) -> Option<f64> {
    match (kind, statistic) {
        (EnsembleKind::Gue { rescaled }, Statistic::Polynomial(f)) => {
            let half = if *rescaled { rat(1, 2) } else { rat(1, 1) };
            let s: LaurentPoly<BigRational> =
                LaurentPoly::from_pairs([(-1, half.clone()), (1, half)]);
            Some(variance_fourier(f, &s).to_f64())
        }
        (EnsembleKind::Cue, Statistic::Symbol(f)) => Some(h12_norm(f).to_f64()),
        (EnsembleKind::GinibreProduct { eta, theta }, Statistic::Polynomial(f)) => {
            let ratios = theta
                .clone()
                .unwrap_or_else(|| vec![rat(1, 1); eta.len()]);
            mop_variance(f, &ratios).ok().map(|v| v.to_f64())
        }
        _ => None,
    }
}

/// The limit symbol whose band matrix the ensemble's recurrence converges
/// to, for report annotation (`None` for CUE, whose statistic lives on the
/// circle directly).
pub fn theory_symbol(kind: &EnsembleKind) -> Option<LaurentPoly<f64>> {
    match kind {
        EnsembleKind::Gue { rescaled } => {
            let half = if *rescaled { 0.5 } else { 1.0 };
            Some(LaurentPoly::from_pairs([(-1, half), (1, half)]))
        }
        EnsembleKind::Cue => None,
        EnsembleKind::GinibreProduct { eta, theta } => {
            let ratios = theta
                .clone()
                .unwrap_or_else(|| vec![rat(1, 1); eta.len()]);
            limit_symbol(&ratios).ok().map(|s| symbol_to_f64(&s))
        }
    }
}

/// Draw every sample of the experiment (in parallel; order and values are
/// deterministic in `(seed, index)`) and evaluate the statistic.
pub fn statistic_values(config: &CltConfig) -> Result<Vec<f64>> {
    let CltConfig { kind, size, samples, seed, statistic } = config;
    ensure!(*samples >= 1, "need at least one sample");
    match (kind, statistic) {
        (EnsembleKind::Cue, Statistic::Polynomial(_)) => {
            bail!("CUE statistics are Laurent symbols in the eigenangle")
        }
        (k, Statistic::Symbol(_)) if !matches!(k, EnsembleKind::Cue) => {
            bail!("symbol statistics apply to CUE only; use a polynomial")
        }
        _ => {}
    }
    let values: Result<Vec<f64>> = (0..*samples as u64)
        .into_par_iter()
        .map(|index| {
            let value = match (kind, statistic) {
                (EnsembleKind::Gue { rescaled }, Statistic::Polynomial(f)) => {
                    let mut sample = sample_gue_indexed(*size, *seed, index)?;
                    if *rescaled {
                        for p in &mut sample.points {
                            *p *= 0.5;
                        }
                    }
                    polynomial_statistic(&sample.points, &poly_to_f64(f))
                }
                (EnsembleKind::Cue, Statistic::Symbol(f)) => {
                    let sample = sample_cue_indexed(*size, *seed, index)?;
                    symbol_statistic(&sample.points, &symbol_to_f64(f))
                }
                (EnsembleKind::GinibreProduct { eta, .. }, Statistic::Polynomial(f)) => {
                    let sample = sample_ginibre_product_indexed(*size, eta, *seed, index)?;
                    polynomial_statistic(&sample.points, &poly_to_f64(f))
                }
                _ => unreachable!("rejected above"),
            };
            Ok(value)
        })
        .collect();
    values
}

/// A point estimate with its jackknife standard error.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct CumulantEstimate {
    pub value: f64,
    pub standard_error: f64,
}

#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ZScores {
    /// `(k₂ − theory)/SE` when a theory variance is available.
    pub variance: Option<f64>,
    pub skewness: f64,
    pub excess_kurtosis: f64,
}

/// Empirical cumulants of a batch of statistic values.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SimSummary {
    pub sample_count: usize,
    pub mean: CumulantEstimate,
    pub variance: CumulantEstimate,
    pub skewness: CumulantEstimate,
    pub excess_kurtosis: CumulantEstimate,
    pub theory_variance: Option<f64>,
    pub z_scores: ZScores,
}

/// k-statistics `(k₁, k₂, k₃, k₄)` from the count and power sums
/// `S_r = Σ xᵢʳ` of (already centered) data. Orders whose unbiasing factors
/// need more data than provided come back as 0.
fn k_statistics(n: f64, s: [f64; 4]) -> [f64; 4] {
    let m1 = s[0] / n;
    let m2 = s[1] / n;
    let m3 = s[2] / n;
    let m4 = s[3] / n;
    // Central moments about the batch mean.
    let c2 = m2 - m1 * m1;
    let c3 = m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1;
    let c4 = m4 - 4.0 * m1 * m3 + 6.0 * m1 * m1 * m2 - 3.0 * m1 * m1 * m1 * m1;
    let k1 = m1;
    let k2 = if n >= 2.0 { c2 * n / (n - 1.0) } else { 0.0 };
    let k3 = if n >= 3.0 { c3 * n * n / ((n - 1.0) * (n - 2.0)) } else { 0.0 };
    let k4 = if n >= 4.0 {
        n * n * ((n + 1.0) * c4 - 3.0 * (n - 1.0) * c2 * c2)
            / ((n - 1.0) * (n - 2.0) * (n - 3.0))
    } else {
        0.0
    };
    [k1, k2, k3, k4]
}

/// Normalized shape statistics: `(g₁, g₂) = (k₃/k₂^{3/2}, k₄/k₂²)`
/// (0 for degenerate batches with no spread).
fn shape_statistics(k: [f64; 4]) -> (f64, f64) {
    if k[1] <= 0.0 {
        return (0.0, 0.0);
    }
    (k[2] / k[1].powf(1.5), k[3] / (k[1] * k[1]))
}

/// k-statistics of the sample with jackknife standard errors.
///
/// Data is centered by the batch mean before accumulating power sums (the
/// higher k-statistics are translation invariant, so this only helps
/// conditioning), and each delete-one replicate reuses the power sums, so
/// the whole summary is O(n).
pub fn empirical_cumulants(values: &[f64], theory_variance: Option<f64>) -> Result<SimSummary> {
    let n = values.len();
    ensure!(n >= 2, "need at least two samples for cumulant estimates");
    let nf = n as f64;
    let mean: f64 = values.iter().sum::<f64>() / nf;
    let centered: Vec<f64> = values.iter().map(|v| v - mean).collect();
    let mut s = [0.0f64; 4];
    for &y in &centered {
        let y2 = y * y;
        s[0] += y;
        s[1] += y2;
        s[2] += y2 * y;
        s[3] += y2 * y2;
    }
    let k_full = k_statistics(nf, s);
    let (g1_full, g2_full) = shape_statistics(k_full);

    // Delete-one replicates of (k₁..k₄, g₁, g₂).
    let mut replicates: Vec<[f64; 6]> = Vec::with_capacity(n);
    for &y in &centered {
        let y2 = y * y;
        let s_del = [s[0] - y, s[1] - y2, s[2] - y2 * y, s[3] - y2 * y2];
        let k = k_statistics(nf - 1.0, s_del);
        let (g1, g2) = shape_statistics(k);
        replicates.push([k[0], k[1], k[2], k[3], g1, g2]);
    }
    let jackknife_se = |col: usize| -> f64 {
        let avg: f64 = replicates.iter().map(|r| r[col]).sum::<f64>() / nf;
        let ss: f64 = replicates.iter().map(|r| (r[col] - avg).powi(2)).sum();
        ((nf - 1.0) / nf * ss).sqrt()
    };

    let variance = CumulantEstimate { value: k_full[1], standard_error: jackknife_se(1) };
    let skewness = CumulantEstimate { value: g1_full, standard_error: jackknife_se(4) };
    let excess_kurtosis = CumulantEstimate { value: g2_full, standard_error: jackknife_se(5) };
    let z = |est: &CumulantEstimate, target: f64| {
        if est.standard_error > 0.0 {
            (est.value - target) / est.standard_error
        } else {
            0.0
        }
    };
    let z_scores = ZScores {
        variance: theory_variance.map(|t| z(&variance, t)),
        skewness: z(&skewness, 0.0),
        excess_kurtosis: z(&excess_kurtosis, 0.0),
    };
    Ok(SimSummary {
        sample_count: n,
        // SE of the mean has the exact closed form √(k₂/n).
        mean: CumulantEstimate {
            value: mean,
            standard_error: (variance.value.max(0.0) / nf).sqrt(),
        },
        variance,
        skewness,
        excess_kurtosis,
        theory_variance,
        z_scores,
    })
}

/// Run the full experiment: draw, evaluate, summarize against theory.
pub fn clt_experiment(config: &CltConfig) -> Result<(Vec<f64>, SimSummary)> {
    let values = statistic_values(config)?;
    let theory = theory_variance(&config.kind, &config.statistic);
    let summary = empirical_cumulants(&values, theory)?;
    Ok((values, summary))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_deterministic_per_seed_and_index() {
        let a = sample_gue_indexed(8, 42, 3).unwrap();
        let b = sample_gue_indexed(8, 42, 3).unwrap();
        assert_eq!(a.points, b.points);
        let c = sample_gue_indexed(8, 42, 4).unwrap();
        assert_ne!(a.points, c.points);
        let d = sample_cue_indexed(8, 42, 3).unwrap();
        let e = sample_cue_indexed(8, 42, 3).unwrap();
        assert_eq!(d.points, e.points);
    }

    #[test]
    fn gue_points_are_sorted_and_bounded_in_probability() {
        let s = sample_gue(60, 7).unwrap();
        assert_eq!(s.points.len(), 60);
        assert!(s.points.windows(2).all(|w| w[0] <= w[1]));
        // Semicircle support is [−2, 2]; edge excursions at N=60 are tiny.
        assert!(s.points.iter().all(|x| x.abs() < 3.0));
    }

    #[test]
    fn cue_counting_statistic_is_exact() {
        let s = sample_cue(25, 11).unwrap();
        assert_eq!(s.points.len(), 25);
        assert!(s.points.iter().all(|t| (-core::f64::consts::PI..=core::f64::consts::PI).contains(t)));
        // Ξ(1) = N exactly: the constant symbol counts points.
        let one: LaurentPoly<f64> = LaurentPoly::constant(1.0);
        assert!((symbol_statistic(&s.points, &one) - 25.0).abs() < 1e-9);
    }

    #[test]
    fn ginibre_points_are_positive() {
        let s = sample_ginibre_product(30, &[0, 0, 0], 5).unwrap();
        assert_eq!(s.points.len(), 30);
        assert!(s.points.iter().all(|&x| x > 0.0));
        // Mean of Ξ(x) = Tr W*W/M(N): E = N for square factors.
        let trace: f64 = s.points.iter().sum();
        assert!((trace - 30.0).abs() < 30.0, "trace {trace} wildly off its mean");
    }

    #[test]
    fn ginibre_rectangular_factor_dimensions() {
        let s = sample_ginibre_product(10, &[0, 2, 5], 9).unwrap();
        assert_eq!(s.points.len(), 10);
        assert!(s.points.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn theory_overlays_match_hand_values() {
        let x: RealPoly<BigRational> = RealPoly::x();
        let xsq: RealPoly<BigRational> = RealPoly::monomial(2);
        let gue = EnsembleKind::Gue { rescaled: false };
        assert_eq!(theory_variance(&gue, &Statistic::Polynomial(x.clone())), Some(1.0));
        assert_eq!(theory_variance(&gue, &Statistic::Polynomial(xsq)), Some(2.0));
        let cue_f: LaurentPoly<BigRational> = LaurentPoly::from_pairs([(-1, rat(1, 1)), (1, rat(1, 1))]);
        assert_eq!(theory_variance(&EnsembleKind::Cue, &Statistic::Symbol(cue_f)), Some(2.0));
        let gin1 = EnsembleKind::GinibreProduct { eta: vec![0, 0], theta: None };
        assert_eq!(theory_variance(&gin1, &Statistic::Polynomial(x.clone())), Some(1.0));
        let gin2 = EnsembleKind::GinibreProduct { eta: vec![0, 0, 0], theta: None };
        assert_eq!(theory_variance(&gin2, &Statistic::Polynomial(x)), Some(3.0));
    }

    #[test]
    fn k_statistics_on_synthetic_normal_batch() {
        // Deterministic synthetic draw: 20000 standard normals.
        let mut rng = stream_rng(123, 0);
        let values: Vec<f64> = (0..20_000).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let summary = empirical_cumulants(&values, Some(1.0)).unwrap();
        assert!(summary.mean.value.abs() < 4.0 * summary.mean.standard_error);
        assert!(summary.z_scores.variance.unwrap().abs() < 4.0);
        assert!(summary.z_scores.skewness.abs() < 4.0);
        assert!(summary.z_scores.excess_kurtosis.abs() < 4.0);
        assert!(summary.variance.standard_error > 0.0);
    }

    #[test]
    fn cumulants_above_first_are_shift_invariant() {
        let base: Vec<f64> = vec![0.3, -1.2, 2.5, 0.0, 1.1, -0.7, 0.9, 1.8];
        let shifted: Vec<f64> = base.iter().map(|v| v + 100.0).collect();
        let a = empirical_cumulants(&base, None).unwrap();
        let b = empirical_cumulants(&shifted, None).unwrap();
        assert!((a.variance.value - b.variance.value).abs() < 1e-9);
        assert!((a.skewness.value - b.skewness.value).abs() < 1e-9);
        assert!((a.excess_kurtosis.value - b.excess_kurtosis.value).abs() < 1e-9);
        assert!((b.mean.value - a.mean.value - 100.0).abs() < 1e-9);
    }

    #[test]
    fn degenerate_batches_are_rejected_or_flat() {
        assert!(empirical_cumulants(&[1.0], None).is_err());
        let flat = empirical_cumulants(&[2.0; 10], None).unwrap();
        assert_eq!(flat.variance.value, 0.0);
        assert_eq!(flat.skewness.value, 0.0);
    }

    #[test]
    fn experiment_is_reproducible() {
        let config = CltConfig {
            kind: EnsembleKind::Gue { rescaled: false },
            size: 10,
            samples: 16,
            seed: 77,
            statistic: Statistic::Polynomial(RealPoly::x()),
        };
        let (va, sa) = clt_experiment(&config).unwrap();
        let (vb, sb) = clt_experiment(&config).unwrap();
        assert_eq!(va, vb);
        assert_eq!(sa.variance.value, sb.variance.value);
        assert_eq!(sa.theory_variance, Some(1.0));
    }

    #[test]
    fn statistic_kind_mismatches_are_rejected() {
        let config = CltConfig {
            kind: EnsembleKind::Cue,
            size: 5,
            samples: 2,
            seed: 1,
            statistic: Statistic::Polynomial(RealPoly::x()),
        };
        assert!(statistic_values(&config).is_err());
        let config2 = CltConfig {
            kind: EnsembleKind::Gue { rescaled: false },
            size: 5,
            samples: 2,
            seed: 1,
            statistic: Statistic::Symbol(LaurentPoly::arcsine()),
        };
        assert!(statistic_values(&config2).is_err());
    }
}
