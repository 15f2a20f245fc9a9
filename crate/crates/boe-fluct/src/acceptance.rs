//! The release gate: ten end-to-end checks covering every route the
//! workspace computes, from exact combinatorics to Monte Carlo laws.
//!
//! Each criterion is a standalone function returning a [`CriterionResult`];
//! the CLI `acceptance` subcommand and the integration test target both call
//! [`run_all`] and render one pass/fail line per criterion. Randomized
//! criteria use fixed seeds so the suite is reproducible.

use std::time::Instant;

use anyhow::{ensure, Context, Result};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use boe_core::band::{BandMatrix, Extent};
use boe_core::chebyshev::basis_report;
use boe_core::combinatorics::{
    binomial_identity_check, dhk_both_sides, mcl_symmetrized, mobius_identity, rs_both_sides,
    spitzer_check,
};
use boe_core::cumulants::{path_cumulant, trace_cumulant, varpi};
use boe_core::ginibre::convergence_rates;
use boe_core::laurent::{sigma_chebyshev, variance_fourier, variance_report, LaurentPoly};
use boe_core::poly::{chebyshev_t, RealPoly};
use boe_core::right_limit::{free_jacobi, period_two_jacobi};
use boe_core::scalar::{rat, Coeff};
use boe_core::szego::{cue_cumulant_limit, szego_limit_check};

use crate::ensemble::{
    empirical_cumulants, polynomial_statistic, sample_cue_indexed, sample_ginibre_product_indexed,
    sample_gue_indexed, symbol_statistic, SimSummary,
};

/// Outcome of one acceptance criterion.
#[derive(Serialize, Clone, Debug)]
pub struct CriterionResult {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

fn run(
    id: &'static str,
    name: &'static str,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = match body() {
        Ok(pair) => pair,
        Err(e) => (false, format!("error: {e:#}")),
    };
    CriterionResult { id, name, passed, detail, seconds: start.elapsed().as_secs_f64() }
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    rat(rng.random_range(-9i64..=9), rng.random_range(1i64..=4))
}

fn zero_sum_rationals(rng: &mut ChaCha8Rng, len: usize) -> Vec<BigRational> {
    let mut x: Vec<BigRational> = (0..len - 1).map(|_| random_rational(rng)).collect();
    let sum = x.iter().fold(BigRational::zero(), |a, v| a + v.clone());
    x.push(-sum);
    x
}

/// All four z-scores the Monte Carlo criteria gate on: variance against its
/// target, skewness and excess kurtosis against zero.
fn within_four_se(summary: &SimSummary) -> (bool, String) {
    let zv = summary.z_scores.variance.unwrap_or(f64::INFINITY);
    let zs = summary.z_scores.skewness;
    let zk = summary.z_scores.excess_kurtosis;
    let ok = zv.abs() <= 4.0 && zs.abs() <= 4.0 && zk.abs() <= 4.0;
    let text = format!(
        "var {:.4} (z={:+.2}), skew {:+.4} (z={:+.2}), ex-kurt {:+.4} (z={:+.2})",
        summary.variance.value, zv, summary.skewness.value, zs, summary.excess_kurtosis.value, zk,
    );
    (ok, text)
}

/// Variance-only gate for criteria that do not constrain the shape.
fn variance_within_four_se(summary: &SimSummary) -> (bool, String) {
    let zv = summary.z_scores.variance.unwrap_or(f64::INFINITY);
    (zv.abs() <= 4.0, format!("var {:.4} (z={:+.2})", summary.variance.value, zv))
}

/// Path-resolved and trace-resolved cumulants agree on random band matrices.
pub fn criterion_1() -> CriterionResult {
    run("AC1", "path and trace cumulant routes agree on random band matrices", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xAC01);
        let statistics = [
            RealPoly::<f64>::x(),
            RealPoly::monomial(2),
            RealPoly::monomial(3).sub(&RealPoly::x()),
        ];
        let mut comparisons = 0usize;
        let mut max_gap = 0.0f64;
        for _ in 0..100 {
            let bandwidth = rng.random_range(2usize..=3);
            let dim = rng.random_range(3i64..=10);
            let matrix =
                BandMatrix::<f64>::random_uniform(Extent::SemiInfinite, bandwidth, rng.random());
            for f in &statistics {
                for order in 2..=5 {
                    let via_paths = path_cumulant(&matrix, f, order, dim)?;
                    let via_traces = trace_cumulant(&matrix, f, order, dim)?;
                    let gap = (via_paths - via_traces).abs();
                    let tol = 1e-9 * (1.0 + via_traces.abs());
                    ensure!(
                        gap <= tol,
                        "routes disagree: W={bandwidth} N={dim} order={order} gap={gap:.3e}"
                    );
                    max_gap = max_gap.max(gap);
                    comparisons += 1;
                }
            }
        }
        Ok((true, format!("{comparisons} comparisons, max gap {max_gap:.3e}")))
    })
}

/// The symmetrized prefix sum collapses to |x_1| at order 2 and to zero above.
pub fn criterion_2() -> CriterionResult {
    run("AC2", "symmetrized prefix cancellation on random zero-sum integer vectors", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xAC02);
        let mut checks = 0usize;
        for n in 2usize..=5 {
            for _ in 0..50 {
                let mut x: Vec<BigRational> =
                    (0..n - 1).map(|_| rat(rng.random_range(-9i64..=9), 1)).collect();
                let sum = x.iter().fold(BigRational::zero(), |a, v| a + v.clone());
                x.push(-sum);
                let value = mcl_symmetrized(&x)?;
                let expected =
                    if n == 2 { Signed::abs(&x[0]) } else { BigRational::zero() };
                ensure!(value == expected, "mismatch at n={n}, x={x:?}");
                checks += 1;
            }
        }
        Ok((true, format!("{checks} exact checks")))
    })
}

/// The five closed-form identities hold exactly on random rational inputs.
pub fn criterion_3() -> CriterionResult {
    run("AC3", "permutation, prefix, fluctuation, partition, and difference identities", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xAC03);
        let mut checks = 0usize;
        for trial in 0..50usize {
            let n = trial % 6 + 1;

            let x: Vec<BigRational> = (0..n).map(|_| random_rational(&mut rng)).collect();
            let (lhs, rhs) = dhk_both_sides(&x)?;
            ensure!(lhs == rhs, "ordered/permuted sums differ at x={x:?}");

            if n >= 2 {
                let z = zero_sum_rationals(&mut rng, n);
                let (lhs, rhs) = rs_both_sides(&z)?;
                ensure!(lhs == rhs, "fluctuation moment sums differ at x={z:?}");
            }

            let outcomes = rng.random_range(2usize..=3);
            let weights: Vec<i64> = (0..outcomes).map(|_| rng.random_range(1i64..=5)).collect();
            let total: i64 = weights.iter().sum();
            let distribution: Vec<(BigRational, BigRational)> = weights
                .iter()
                .map(|w| (random_rational(&mut rng), rat(*w, total)))
                .collect();
            let (lhs, rhs) = spitzer_check(&distribution, n)?;
            ensure!(lhs == rhs, "cyclic-maximum identity fails at {distribution:?}");

            let expected = if n == 1 { rat(1, 1) } else { BigRational::zero() };
            ensure!(mobius_identity(n) == expected, "partition-lattice sum wrong at n={n}");

            let degree = rng.random_range(0usize..=n);
            let r = RealPoly::new((0..=degree).map(|_| random_rational(&mut rng)).collect());
            let (lhs, rhs) = binomial_identity_check(&r, n)?;
            ensure!(lhs == rhs, "finite-difference identity fails at n={n}, r={r:?}");

            checks += 5;
        }
        Ok((true, format!("{checks} exact certificates")))
    })
}

/// The free Jacobi matrix has variance 1/4 at every threshold and no higher
/// cumulants.
pub fn criterion_4() -> CriterionResult {
    run("AC4", "free Jacobi cumulants: variance 1/4, higher orders vanish", || {
        let matrix = free_jacobi::<BigRational>();
        let f = RealPoly::<BigRational>::x();
        let quarter = rat(1, 4);
        for dim in 1..=30i64 {
            let c2 = path_cumulant(&matrix, &f, 2, dim)?;
            ensure!(c2 == quarter, "variance at threshold {dim} is {c2}, not 1/4");
        }
        for order in 3..=4usize {
            for dim in 3..=30i64 {
                let c = path_cumulant(&matrix, &f, order, dim)?;
                ensure!(c.is_zero(), "order-{order} cumulant at threshold {dim} is {c}");
            }
        }
        Ok((true, "30 thresholds at order 2, 28 each at orders 3 and 4".into()))
    })
}

/// All four variance routes agree on low-degree polynomials against the
/// arcsine symbol.
pub fn criterion_5() -> CriterionResult {
    run("AC5", "four variance routes agree for Chebyshev and monomial statistics", || {
        let mut polys: Vec<(String, RealPoly<BigRational>)> =
            (1..=5).map(|j| (format!("T{j}"), chebyshev_t(j))).collect();
        polys.push(("x".into(), RealPoly::x()));
        polys.push(("x^2".into(), RealPoly::monomial(2)));
        let arcsine = LaurentPoly::<BigRational>::arcsine();
        let mut max_dev = 0.0f64;
        let mut max_h12 = 0.0f64;
        for (label, f) in &polys {
            let exact = variance_fourier(f, &arcsine);
            ensure!(
                sigma_chebyshev(f) == exact,
                "coefficient route disagrees with Fourier route for {label}"
            );
            let f64_poly = crate::ensemble::poly_to_f64(f);
            let report =
                variance_report(&f64_poly, &LaurentPoly::arcsine(), 512, 256)?;
            let exact_f = Coeff::to_f64(&exact);
            let dev_gap = (report.devinatz_value.context("self-adjoint symbol")? - exact_f).abs();
            let h12_gap = (report.h12_value.context("arcsine symbol")? - exact_f).abs();
            ensure!(dev_gap <= 1e-6, "contour route off by {dev_gap:.3e} for {label}");
            ensure!(h12_gap <= 1e-4, "quadrature route off by {h12_gap:.3e} for {label}");
            max_dev = max_dev.max(dev_gap);
            max_h12 = max_h12.max(h12_gap);
        }
        for j in 1..=5usize {
            let tj: RealPoly<BigRational> = chebyshev_t(j);
            ensure!(
                variance_fourier(&tj, &arcsine) == rat(j as i64, 4),
                "T{j} variance is not {j}/4"
            );
        }
        Ok((
            true,
            format!("7 statistics; contour gap ≤ {max_dev:.2e}, quadrature gap ≤ {max_h12:.2e}"),
        ))
    })
}

/// GUE linear statistics are asymptotically Gaussian with the predicted
/// variances.
pub fn criterion_6() -> CriterionResult {
    run("AC6", "GUE polynomial statistics match the Gaussian limit law", || {
        let (dim, samples, seed) = (150usize, 3000usize, 0xAC06u64);
        let f1 = RealPoly::<f64>::x();
        let f2 = RealPoly::<f64>::monomial(2);
        let pairs: Vec<(f64, f64)> = (0..samples as u64)
            .into_par_iter()
            .map(|index| {
                let sample = sample_gue_indexed(dim, seed, index)?;
                Ok((
                    polynomial_statistic(&sample.points, &f1),
                    polynomial_statistic(&sample.points, &f2),
                ))
            })
            .collect::<Result<_>>()?;
        let (linear, quadratic): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();
        let s1 = empirical_cumulants(&linear, Some(1.0))?;
        let s2 = empirical_cumulants(&quadratic, Some(2.0))?;
        let (ok1, t1) = within_four_se(&s1);
        let (ok2, t2) = within_four_se(&s2);
        Ok((ok1 && ok2, format!("x: {t1}; x^2: {t2}")))
    })
}

/// The Toeplitz limit formula, the unitary-group simulation, and the vanishing
/// of higher circular cumulants all agree.
pub fn criterion_7() -> CriterionResult {
    run("AC7", "strong Toeplitz limit, unitary simulation, higher cumulants vanish", || {
        let two_cos = LaurentPoly::<f64>::from_pairs([(-1, 1.0), (1, 1.0)]);
        let report = szego_limit_check(&two_cos, 0.3, 40, 1024)?;
        ensure!(
            (report.fluctuation_term - 0.09).abs() < 1e-12,
            "fluctuation term is {}, expected 0.09",
            report.fluctuation_term
        );
        ensure!(
            report.deviation <= 1e-4,
            "determinant deviates from the limit by {:.3e}",
            report.deviation
        );

        let (dim, samples, seed) = (100usize, 3000usize, 0xAC07u64);
        let values: Vec<f64> = (0..samples as u64)
            .into_par_iter()
            .map(|index| {
                let sample = sample_cue_indexed(dim, seed, index)?;
                Ok(symbol_statistic(&sample.points, &two_cos))
            })
            .collect::<Result<_>>()?;
        let summary = empirical_cumulants(&values, Some(2.0))?;
        let (mc_ok, mc_text) = variance_within_four_se(&summary);

        let exact = LaurentPoly::<BigRational>::from_pairs([(-1, rat(1, 1)), (1, rat(1, 1))]);
        ensure!(cue_cumulant_limit(&exact, 3).is_zero(), "third circular cumulant nonzero");
        ensure!(cue_cumulant_limit(&exact, 4).is_zero(), "fourth circular cumulant nonzero");

        Ok((mc_ok, format!("log-det dev {:.2e}; {mc_text}; orders 3,4 vanish", report.deviation)))
    })
}

/// Product-ensemble recurrence data converge at rate 1/N and the linear
/// statistics match their limit variances.
pub fn criterion_8() -> CriterionResult {
    run("AC8", "product-ensemble recurrence rates and limit laws", || {
        let dims = [200i64, 400, 800];
        let mut rate_text = Vec::new();
        for eta in [vec![0i64, 0], vec![0i64, 0, 0]] {
            let report = convergence_rates(&eta, &dims)?;
            for diag in &report.diagonals {
                if diag.exponent.is_none() {
                    continue; // exact at every sampled dimension
                }
                for pair in diag.deviations.windows(2) {
                    ensure!(
                        pair[1] > 0.0,
                        "deviation vanished without the diagonal being exact (k={})",
                        diag.k
                    );
                    let ratio = pair[0] / pair[1];
                    ensure!(
                        (1.6..=2.4).contains(&ratio),
                        "diagonal k={} halves at ratio {ratio:.3}, outside [1.6, 2.4]",
                        diag.k
                    );
                }
            }
            let fitted: Vec<String> = report
                .diagonals
                .iter()
                .filter_map(|d| d.exponent.map(|p| format!("k={}: {p:.2}", d.k)))
                .collect();
            rate_text.push(format!("m={}: {}", eta.len() - 1, fitted.join(", ")));
        }

        let f = RealPoly::<f64>::x();
        let square: Vec<f64> = (0..3000u64)
            .into_par_iter()
            .map(|index| {
                let sample = sample_ginibre_product_indexed(100, &[0, 0], 0xAC08, index)?;
                Ok(polynomial_statistic(&sample.points, &f))
            })
            .collect::<Result<_>>()?;
        let s1 = empirical_cumulants(&square, Some(1.0))?;
        let (ok1, t1) = variance_within_four_se(&s1);

        let product: Vec<f64> = (0..2000u64)
            .into_par_iter()
            .map(|index| {
                let sample = sample_ginibre_product_indexed(60, &[0, 0, 0], 0xAC08, index)?;
                Ok(polynomial_statistic(&sample.points, &f))
            })
            .collect::<Result<_>>()?;
        let s2 = empirical_cumulants(&product, Some(3.0))?;
        let (ok2v, t2) = variance_within_four_se(&s2);
        let z_skew = s2.z_scores.skewness;
        let ok2s = z_skew.abs() <= 4.0;

        Ok((
            ok1 && ok2v && ok2s,
            format!(
                "{}; m=1: {t1}; m=2: {t2}, skew z={z_skew:+.2}",
                rate_text.join("; ")
            ),
        ))
    })
}

/// The rescaled Chebyshev basis diagonalizes the covariance exactly.
pub fn criterion_9() -> CriterionResult {
    run("AC9", "Chebyshev basis identities hold exactly through order 8", || {
        let report = basis_report(8)?;
        Ok((
            report.all_hold(),
            format!(
                "basis {}, monomial {}, covariance {}, gram {}, conjugation {}",
                report.basis_is_doubled_chebyshev,
                report.monomial_identity,
                report.covariance_matches_polarization,
                report.gram_is_doubled_identity,
                report.conjugation_recovers_diagonal
            ),
        ))
    })
}

/// A period-two Jacobi matrix has a nonzero order-4 functional that finite
/// thresholds reproduce exactly.
pub fn criterion_10() -> CriterionResult {
    run("AC10", "period-two limit functional is non-Gaussian and stabilizes", || {
        let even = rat(1, 2);
        let odd = rat(1, 4);
        let bi = period_two_jacobi(Extent::BiInfinite, even.clone(), odd.clone());
        let semi = period_two_jacobi(Extent::SemiInfinite, even, odd);
        let f = RealPoly::<BigRational>::x();

        // Odd orders vanish identically for a bipartite matrix, so the first
        // non-Gaussian signal sits at order 4.
        ensure!(varpi(&bi, &f, 3)?.is_zero(), "order-3 functional should vanish");
        let v4 = varpi(&bi, &f, 4)?;
        ensure!(!v4.is_zero(), "order-4 functional vanished");
        ensure!(v4 == rat(3, 128), "order-4 functional is {v4}, expected 3/128");

        let c6 = path_cumulant(&semi, &f, 4, 6)?;
        let c8 = path_cumulant(&semi, &f, 4, 8)?;
        ensure!(c6 == v4 && c8 == v4, "finite thresholds 6, 8 do not reproduce the limit");
        Ok((true, "order 4 equals 3/128 in the limit and at thresholds 6 and 8".into()))
    })
}

/// Run the whole gate in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ]
}

/// `"AC4  free Jacobi cumulants…: PASS (0.1s) — …"`.
pub fn render_line(r: &CriterionResult) -> String {
    format!(
        "{:<5} {}: {} ({:.1}s) — {}",
        r.id,
        r.name,
        if r.passed { "PASS" } else { "FAIL" },
        r.seconds,
        r.detail
    )
}
