//! Recurrence matrices, their windows at a moving center, and right-limit
//! detection.
//!
//! The fluctuation theory is local: what the cumulants of a linear statistic
//! see, as the dimension `N` grows, is the block of the recurrence matrix
//! around index `N`. A family `J^{(N)}` has a *right limit* along a
//! subsequence when those centered blocks converge entrywise to a fixed
//! bi-infinite matrix. Constant-diagonal limits are Laurent matrices `L(s)`
//! and hand the variance to the symbol calculus; structured limits (e.g.
//! periodic) keep their profile and are handled by the path engine directly.

use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Signed;
use num_traits::Zero;

use crate::band::{BandMatrix, Extent};
use crate::laurent::LaurentPoly;
use crate::scalar::Coeff;
use crate::{mathx, Error, Result};

/// Symmetric tridiagonal matrix from a diagonal sequence `b_i` and an
/// off-diagonal sequence `a_i` (`a_i` couples `i` and `i+1`).
pub fn jacobi_matrix<T: Coeff>(
    extent: Extent,
    label: impl Into<String>,
    diag: impl Fn(i64) -> T + Send + Sync + 'static,
    off: impl Fn(i64) -> T + Send + Sync + 'static,
) -> BandMatrix<T> {
    BandMatrix::from_fn(extent, 2, label, move |i, j| {
        if i == j {
            diag(i)
        } else if (i - j).abs() == 1 {
            off(i.min(j))
        } else {
            T::zero()
        }
    })
}

/// The free Jacobi matrix: `b = 0`, `a = 1/2` — the recurrence matrix of the
/// Chebyshev weight on `[−1, 1]`, and the prototypical right limit of
/// one-cut ensembles supported there.
pub fn free_jacobi<T: Coeff>() -> BandMatrix<T> {
    jacobi_matrix(Extent::SemiInfinite, "free jacobi", |_| T::zero(), |_| T::ratio(1, 2))
}

/// Period-two Jacobi matrix: zero diagonal, off-diagonal alternating between
/// `even` (at even lower index) and `odd`. Its centered windows converge
/// along each dimension parity, but to different — and non-Laurent — limits.
pub fn period_two_jacobi<T: Coeff>(extent: Extent, even: T, odd: T) -> BandMatrix<T> {
    jacobi_matrix(extent, "period-2 jacobi", |_| T::zero(), move |i| {
        if i.rem_euclid(2) == 0 {
            even.clone()
        } else {
            odd.clone()
        }
    })
}

/// Recurrence matrix of the Hermite weight `e^{−N x²/2}`: `b = 0`,
/// `a_k = √((k+1)/N)`. Around index `N` the off-diagonals flatten to `1`, so
/// the right limit is the Laurent matrix of `z + 1/z` — the two-sided free
/// matrix on support `[−2, 2]`.
pub fn hermite_jacobi(scale: i64) -> BandMatrix<f64> {
    assert!(scale >= 1, "scale must be positive");
    let n = scale as f64;
    jacobi_matrix(Extent::SemiInfinite, "hermite jacobi", |_| 0.0, move |k| {
        mathx::sqrt((k + 1) as f64 / n)
    })
}

/// Dense snapshot of a band matrix around `center`: all entries
/// `M_{center+di, center+dj}` for `|di|, |dj| ≤ radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct RightLimitWindow<T> {
    center: i64,
    radius: i64,
    /// Row-major `(2r+1) × (2r+1)` block.
    entries: Vec<T>,
}

impl<T: Coeff> RightLimitWindow<T> {
    pub fn center(&self) -> i64 {
        self.center
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    /// Entry at offsets `(di, dj)` from the center.
    pub fn at(&self, di: i64, dj: i64) -> &T {
        assert!(di.abs() <= self.radius && dj.abs() <= self.radius, "offset outside window");
        let side = (2 * self.radius + 1) as usize;
        let r = (di + self.radius) as usize;
        let c = (dj + self.radius) as usize;
        &self.entries[r * side + c]
    }

    /// The `k`-th diagonal (`i − j = k`) as seen in this window, ordered by
    /// row.
    pub fn diagonal(&self, k: i64) -> Vec<T> {
        let mut out = Vec::new();
        for di in -self.radius..=self.radius {
            let dj = di - k;
            if dj.abs() <= self.radius {
                out.push(self.at(di, dj).clone());
            }
        }
        out
    }

    /// Largest entrywise gap to another window of the same radius, compared
    /// offset by offset.
    pub fn distance(&self, other: &Self) -> f64 {
        assert_eq!(self.radius, other.radius, "windows must share a radius");
        let mut worst = 0.0f64;
        for (a, b) in self.entries.iter().zip(&other.entries) {
            let d = mathx::abs((a.clone() - b.clone()).to_f64());
            if d > worst {
                worst = d;
            }
        }
        worst
    }

    /// If every diagonal is constant to within `tol`, the Laurent symbol
    /// read off from the entries nearest the center; `tol = 0` demands exact
    /// constancy.
    pub fn constant_diagonal_symbol(&self, tol: f64) -> Option<LaurentPoly<T>> {
        let mut pairs = Vec::new();
        for k in -2 * self.radius..=2 * self.radius {
            let diag = self.diagonal(k);
            let Some(first) = diag.first() else { continue };
            for v in &diag {
                if mathx::abs((v.clone() - first.clone()).to_f64()) > tol {
                    return None;
                }
            }
            // Representative: the entry in the row nearest the center.
            let mid = diag.len() / 2;
            let rep = diag[mid].clone();
            if !rep.is_zero() {
                pairs.push((k, rep));
            }
        }
        Some(LaurentPoly::from_pairs(pairs))
    }
}

/// Snapshot the centered window. For a semi-infinite matrix the window must
/// not reach below row zero.
pub fn extract_window<T: Coeff>(
    matrix: &BandMatrix<T>,
    center: i64,
    radius: i64,
) -> Result<RightLimitWindow<T>> {
    if radius < 0 {
        return Err(Error::Invalid("radius must be nonnegative"));
    }
    if matrix.extent() == Extent::SemiInfinite && center - radius < 0 {
        return Err(Error::WindowUnderflow);
    }
    let side = (2 * radius + 1) as usize;
    let mut entries = Vec::with_capacity(side * side);
    for di in -radius..=radius {
        for dj in -radius..=radius {
            entries.push(matrix.checked_entry(center + di, center + dj)?);
        }
    }
    Ok(RightLimitWindow { center, radius, entries })
}

/// What the centered windows of a matrix family do along a dimension
/// sequence.
#[derive(Debug, Clone, PartialEq)]
pub enum DetectOutcome {
    /// Windows settled and the limit has constant diagonals: a Laurent
    /// matrix with this symbol.
    LaurentLimit(LaurentPoly<f64>),
    /// Windows settled on a limit whose diagonals are not constant
    /// (periodic profiles land here).
    StructuredLimit,
    /// Window gaps still exceed the tolerance at the last step.
    NotConverged,
}

/// Detection report: successive window gaps, the fitted decay exponent
/// (`gap ~ center^{−p}`, when measurable), and the verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct DetectReport {
    pub centers: Vec<i64>,
    pub radius: i64,
    pub deltas: Vec<f64>,
    pub rate_exponent: Option<f64>,
    pub outcome: DetectOutcome,
}

/// Track the centered windows of `family(N)` at each dimension in
/// `centers` (ascending, at least two) and classify the limit. The fixed
/// tolerance governs both convergence and diagonal constancy.
pub fn detect_right_limit(
    family: impl Fn(i64) -> BandMatrix<f64>,
    centers: &[i64],
    radius: i64,
    tol: f64,
) -> Result<DetectReport> {
    if centers.len() < 2 {
        return Err(Error::TooFewSamples);
    }
    if !(tol >= 0.0) {
        return Err(Error::Invalid("tolerance must be nonnegative"));
    }
    if centers.windows(2).any(|w| w[0] >= w[1]) || centers[0] < 1 {
        return Err(Error::Invalid("centers must be positive and strictly increasing"));
    }
    let windows: Vec<RightLimitWindow<f64>> = centers
        .iter()
        .map(|&c| extract_window(&family(c), c, radius))
        .collect::<Result<_>>()?;
    let deltas: Vec<f64> =
        windows.windows(2).map(|pair| pair[0].distance(&pair[1])).collect();
    let mut fits = Vec::new();
    for i in 0..deltas.len() - 1 {
        if deltas[i] > 0.0 && deltas[i + 1] > 0.0 {
            let ratio = deltas[i] / deltas[i + 1];
            let growth = centers[i + 1] as f64 / centers[i] as f64;
            fits.push(mathx::ln(ratio) / mathx::ln(growth));
        }
    }
    let rate_exponent = if fits.is_empty() {
        None
    } else {
        Some(fits.iter().sum::<f64>() / fits.len() as f64)
    };
    let outcome = if *deltas.last().expect("at least one gap") > tol {
        DetectOutcome::NotConverged
    } else {
        match windows.last().expect("nonempty").constant_diagonal_symbol(tol) {
            Some(s) => DetectOutcome::LaurentLimit(s),
            None => DetectOutcome::StructuredLimit,
        }
    };
    Ok(DetectReport { centers: centers.to_vec(), radius, deltas, rate_exponent, outcome })
}

/// Monic three-term recurrence `π_{k+1} = (x − α_k)π_k − β_k π_{k−1}`
/// recovered from moments; `betas[0]` carries the total mass `μ_0`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonicRecurrence {
    pub alphas: Vec<BigRational>,
    pub betas: Vec<BigRational>,
}

impl MonicRecurrence {
    /// The symmetrized Jacobi matrix: `b_k = α_k`, `a_k = √β_{k+1}`.
    pub fn jacobi(&self) -> BandMatrix<f64> {
        let diag: Vec<f64> = self.alphas.iter().map(|a| a.to_f64()).collect();
        let off: Vec<f64> = self.betas[1..].iter().map(|b| mathx::sqrt(b.to_f64())).collect();
        jacobi_matrix(
            Extent::SemiInfinite,
            "recovered jacobi",
            move |i| diag.get(i as usize).copied().unwrap_or(0.0),
            move |i| off.get(i as usize).copied().unwrap_or(0.0),
        )
    }
}

/// Recurrence coefficients from the moments `μ_0, …, μ_{2K}` of a positive
/// measure, by the exact moment-table recursion
/// `σ_{k,l} = σ_{k−1,l+1} − α_{k−1} σ_{k−1,l} − β_{k−1} σ_{k−2,l}`
/// (`σ_{0,l} = μ_l`), which produces `α_0..α_{K−1}` and `β_0..β_{K−1}`.
/// A non-positive pivot `σ_{k,k}` means the moments belong to no positive
/// measure with that many orthogonal polynomials.
pub fn recurrence_from_moments(moments: &[BigRational]) -> Result<MonicRecurrence> {
    if moments.is_empty() || moments.len() % 2 == 0 {
        return Err(Error::Invalid("need moments mu_0..mu_2K (an odd count)"));
    }
    let steps = moments.len() / 2;
    if !moments[0].is_positive() {
        return Err(Error::IndefiniteMeasure);
    }
    let mut alphas = Vec::with_capacity(steps);
    let mut betas = Vec::with_capacity(steps);
    if steps == 0 {
        return Ok(MonicRecurrence { alphas, betas });
    }
    alphas.push(&moments[1] / &moments[0]);
    betas.push(moments[0].clone());
    // Row k of the moment table holds σ_{k,l} for l = k..2K−k at offset
    // l − k; row 0 is the moments themselves, row −1 is zero.
    let mut prev: Vec<BigRational> = Vec::new();
    let mut curr: Vec<BigRational> = moments.to_vec();
    for k in 1..steps {
        let alpha = &alphas[k - 1];
        let beta = &betas[k - 1];
        let len = curr.len() - 2;
        let mut next: Vec<BigRational> = Vec::with_capacity(len);
        for offset in 0..len {
            // l = k + offset; in row k−1 the same l sits one offset later.
            let mut v = curr[offset + 2].clone() - alpha * &curr[offset + 1];
            if k >= 2 {
                v -= beta * &prev[offset + 2];
            }
            next.push(v);
        }
        let s_kk = &next[0];
        let s_prev = &curr[0];
        if !s_kk.is_positive() {
            return Err(Error::IndefiniteMeasure);
        }
        let alpha_k = &next[1] / s_kk - &curr[1] / s_prev;
        let beta_k = s_kk / s_prev;
        alphas.push(alpha_k);
        betas.push(beta_k);
        prev = curr;
        curr = next;
    }
    Ok(MonicRecurrence { alphas, betas })
}

/// Exact arcsine moments `μ_{2p} = C(2p, p)/4^p` (odd moments zero) for the
/// probability measure `dx/(π√(1−x²))` on `[−1, 1]` — `2K+1` of them.
pub fn arcsine_moments(k: usize) -> Vec<BigRational> {
    use crate::combinatorics::binomial;
    use num_bigint::BigInt;
    let mut out = Vec::with_capacity(2 * k + 1);
    for j in 0..=2 * k {
        if j % 2 == 1 {
            out.push(BigRational::zero());
        } else {
            let p = (j / 2) as u64;
            out.push(BigRational::new(binomial(2 * p, p), BigInt::from(4u64).pow(p as u32)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn free_jacobi_is_the_arcsine_laurent_matrix_on_the_half_line() {
        let j = free_jacobi::<BigRational>();
        assert_eq!(j.extent(), Extent::SemiInfinite);
        assert_eq!(j.entry(4, 5), rat(1, 2));
        assert_eq!(j.entry(5, 4), rat(1, 2));
        assert_eq!(j.entry(5, 5), rat(0, 1));
        assert_eq!(j.entry(2, 4), rat(0, 1));
    }

    #[test]
    fn hermite_offdiagonals_flatten_near_the_center() {
        let j = hermite_jacobi(400);
        assert!((j.entry(0, 1) - mathx::sqrt(1.0 / 400.0)).abs() < 1e-15);
        let near = j.entry(400, 401);
        assert!((near - 1.0).abs() < 3e-3, "a_N = {near}");
    }

    #[test]
    fn window_extraction_and_bounds() {
        let j = free_jacobi::<BigRational>();
        let w = extract_window(&j, 5, 2).unwrap();
        assert_eq!(*w.at(0, 1), rat(1, 2));
        assert_eq!(*w.at(-1, -2), rat(1, 2));
        assert_eq!(*w.at(0, 0), rat(0, 1));
        assert_eq!(extract_window(&j, 1, 2).unwrap_err(), Error::WindowUnderflow);
        let d = w.diagonal(1);
        assert_eq!(d.len(), 4);
        assert!(d.iter().all(|v| *v == rat(1, 2)));
    }

    #[test]
    fn constant_diagonals_read_back_the_symbol() {
        let j = free_jacobi::<BigRational>();
        let w = extract_window(&j, 6, 2).unwrap();
        let s = w.constant_diagonal_symbol(0.0).expect("free matrix has constant diagonals");
        assert_eq!(s, LaurentPoly::arcsine());
        let p2 = period_two_jacobi(Extent::SemiInfinite, rat(1, 2), rat(1, 4));
        let w2 = extract_window(&p2, 6, 2).unwrap();
        assert!(w2.constant_diagonal_symbol(1e-9).is_none());
    }

    #[test]
    fn window_distance_is_the_worst_offset_gap() {
        let j = hermite_jacobi(100);
        let a = extract_window(&j, 50, 1).unwrap();
        let b = extract_window(&j, 60, 1).unwrap();
        let d = a.distance(&b);
        // Off-diagonal gaps are √(60/100) − √(50/100) at the lower offset and
        // √(61/100) − √(51/100) at the upper one; concavity of √ makes the
        // lower pair the worst.
        let expected = mathx::sqrt(60.0 / 100.0) - mathx::sqrt(50.0 / 100.0);
        assert!((d - expected).abs() < 1e-12);
        assert_eq!(a.distance(&a), 0.0);
    }

    #[test]
    fn hermite_family_detects_the_two_sided_free_limit() {
        let report =
            detect_right_limit(hermite_jacobi, &[100, 200, 400], 2, 1e-2).unwrap();
        assert_eq!(report.deltas.len(), 2);
        assert!(report.deltas[1] < report.deltas[0]);
        let p = report.rate_exponent.expect("two usable gaps");
        assert!((p - 1.0).abs() < 0.3, "decay exponent {p}");
        match report.outcome {
            DetectOutcome::LaurentLimit(ref s) => {
                assert!((s.coeff(1) - 1.0).abs() < 2e-2);
                assert!((s.coeff(-1) - 1.0).abs() < 2e-2);
                assert!(s.coeff(0).abs() < 1e-12);
            }
            ref other => panic!("expected a Laurent limit, got {other:?}"),
        }
    }

    #[test]
    fn period_two_parity_window_is_exact_but_structured() {
        let family = |_: i64| period_two_jacobi(Extent::SemiInfinite, 0.5, 0.25);
        let report = detect_right_limit(family, &[4, 8, 16], 2, 1e-9).unwrap();
        assert!(report.deltas.iter().all(|&d| d == 0.0));
        assert_eq!(report.rate_exponent, None);
        assert_eq!(report.outcome, DetectOutcome::StructuredLimit);
        // Mixed parities do not converge at all.
        let mixed = detect_right_limit(family, &[4, 9, 16], 2, 1e-9).unwrap();
        assert_eq!(mixed.outcome, DetectOutcome::NotConverged);
    }

    #[test]
    fn random_matrices_do_not_converge() {
        let family = |_: i64| BandMatrix::<f64>::random_uniform(Extent::SemiInfinite, 2, 7);
        let report = detect_right_limit(family, &[10, 20, 40], 2, 1e-3).unwrap();
        assert_eq!(report.outcome, DetectOutcome::NotConverged);
    }

    #[test]
    fn arcsine_moments_recover_the_free_coefficients() {
        let rec = recurrence_from_moments(&arcsine_moments(5)).unwrap();
        assert_eq!(rec.alphas.len(), 5);
        assert!(rec.alphas.iter().all(|a| *a == rat(0, 1)));
        assert_eq!(rec.betas[0], rat(1, 1));
        assert_eq!(rec.betas[1], rat(1, 2));
        for k in 2..5 {
            assert_eq!(rec.betas[k], rat(1, 4), "beta_{k}");
        }
        let j = rec.jacobi();
        assert!((j.entry(0, 1) - mathx::sqrt(0.5)).abs() < 1e-15);
        assert!((j.entry(1, 2) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn semicircle_moments_give_unit_coefficients() {
        // Catalan moments of the semicircle on [−2, 2]: 1, 1, 2, 5, 14 at
        // even orders.
        let catalan = [1i64, 1, 2, 5, 14];
        let mut moments = Vec::new();
        for j in 0..=8usize {
            if j % 2 == 0 {
                moments.push(rat(catalan[j / 2], 1));
            } else {
                moments.push(rat(0, 1));
            }
        }
        let rec = recurrence_from_moments(&moments).unwrap();
        assert!(rec.alphas.iter().all(|a| *a == rat(0, 1)));
        for k in 1..4 {
            assert_eq!(rec.betas[k], rat(1, 1), "beta_{k}");
        }
    }

    #[test]
    fn indefinite_moments_are_rejected() {
        let bad = [rat(1, 1), rat(0, 1), rat(-1, 1), rat(0, 1), rat(1, 1)];
        assert_eq!(recurrence_from_moments(&bad).unwrap_err(), Error::IndefiniteMeasure);
        let wrong_count = [rat(1, 1), rat(0, 1)];
        assert!(recurrence_from_moments(&wrong_count).is_err());
    }
}
