//! Cumulants of polynomial linear statistics by weighted lattice-path
//! counting.
//!
//! For a band matrix `J` and a polynomial test function `F`, write
//! `M = F(J)` and let `𝒫_N` project onto indices `< N`. The `n`-th cumulant
//! of the linear statistic attached to the principal `N × N` block admits two
//! independent expressions:
//!
//! * a **path sum** — over checkpoint sets `S = {n_1 < … < n_ℓ} ⊂ {1,…,n−1}`
//!   with weight `Ω(S)`, of the total weight of closed length-`n` paths
//!   `π(0) = π(n) < N` on the entry graph of `M` whose height at some
//!   checkpoint reaches `N`;
//! * a **trace sum** — the alternating composition expansion
//!   `Σ_ℓ ((−1)^{ℓ+1}/ℓ) Σ_{k_1+…+k_ℓ=n} (n!/∏k_i!) ·
//!   Tr[𝒫_N M^{k_1} 𝒫_N ⋯ 𝒫_N M^{k_ℓ} 𝒫_N]`.
//!
//! The two routes share no code below the matrix layer, which is what makes
//! their agreement a meaningful cross-check. A third expression, for
//! bi-infinite matrices with constant diagonals, goes through the
//! checkpoint-maximum functional `G_n` on Fourier frequencies; it is the
//! `N → ∞` limit of both.
//!
//! Only the threshold crossing matters, not the matrix dimension: the path
//! sum for threshold `N` touches entries within `n·(W_M − 1)` of `N`, so the
//! same engine computes the stable local quantity `ϖ_n` of a bi-infinite
//! matrix by placing the threshold at the origin.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::band::{BandMatrix, Dense, Extent, GrowthProfile};
use crate::combinatorics::{factorial, mho_hit_table, Composition};
use crate::laurent::{compose, LaurentPoly};
use crate::poly::RealPoly;
use crate::scalar::Coeff;
use crate::{mathx, Error, Result};

/// Highest cumulant order the path engine accepts (the checkpoint-mask
/// table has `2^{n−1}` entries).
pub const MAX_PATH_ORDER: usize = 12;

/// Highest order the trace route accepts (compositions are enumerated as
/// bitmasks of `{1, …, n−1}`).
pub const MAX_TRACE_ORDER: usize = 20;

struct PathEngine<'a, T> {
    data: &'a [T],
    origin: i64,
    size: usize,
    /// Largest step `W_M − 1` of the entry graph of `M = F(J)`.
    step: i64,
    order: usize,
    threshold: i64,
    semi_infinite: bool,
    /// Path-weight totals per interior hit mask.
    acc: Vec<T>,
}

impl<T: Coeff> PathEngine<'_, T> {
    #[inline]
    fn entry(&self, i: i64, j: i64) -> &T {
        let r = (i - self.origin) as usize;
        let c = (j - self.origin) as usize;
        &self.data[r * self.size + c]
    }

    /// Extend a path sitting at `position` after `time` steps, with `weight`
    /// the product of entries so far and `mask` the interior indices at or
    /// above the threshold.
    fn walk(&mut self, time: usize, position: i64, start: i64, weight: T, mask: u32) {
        if time == self.order {
            // Return feasibility forced position == start here.
            self.acc[mask as usize] += weight;
            return;
        }
        // A path whose interior never reaches the threshold meets no
        // checkpoint set: its mask weight is zero, so stop as soon as the
        // threshold is out of reach.
        if mask == 0 && position + (self.order - 1 - time) as i64 * self.step < self.threshold {
            return;
        }
        let remaining = (self.order - time - 1) as i64;
        let interior = time + 1 < self.order;
        for q in position - self.step..=position + self.step {
            if self.semi_infinite && q < 0 {
                continue;
            }
            if (q - start).abs() > remaining * self.step {
                continue; // cannot close up in the steps left
            }
            let e = self.entry(q, position);
            if e.is_zero() {
                continue;
            }
            let next_mask =
                if interior && q >= self.threshold { mask | (1 << time) } else { mask };
            let w = weight.clone() * e.clone();
            self.walk(time + 1, q, start, w, next_mask);
        }
    }
}

/// The `n`-th cumulant by the checkpoint path sum, with the threshold at
/// `threshold` (`= N` for a semi-infinite matrix; any anchor, conventionally
/// `0`, for a bi-infinite one). Exact over exact coefficients.
pub fn path_cumulant<T: Coeff>(
    matrix: &BandMatrix<T>,
    f: &RealPoly<T>,
    n: usize,
    threshold: i64,
) -> Result<T> {
    if n == 0 {
        return Err(Error::Invalid("cumulant order must be positive"));
    }
    let semi_infinite = matrix.extent() == Extent::SemiInfinite;
    if semi_infinite && threshold < 1 {
        return Err(Error::Invalid("threshold must be positive for a semi-infinite matrix"));
    }
    if n == 1 {
        // Mean: the diagonal sum of F(J) over indices below the threshold.
        if !semi_infinite {
            return Err(Error::Invalid("the first cumulant diverges for bi-infinite matrices"));
        }
        let m = matrix.apply_polynomial(f, 0..threshold)?;
        let mut acc = T::zero();
        for i in 0..threshold {
            acc += m.entry(i, i);
        }
        return Ok(acc);
    }
    if n > MAX_PATH_ORDER {
        return Err(Error::OrderOutOfRange);
    }
    let step = (f.degree() * (matrix.bandwidth() - 1)) as i64;
    let lo_raw = threshold - n as i64 * step - 1;
    let lo = if semi_infinite { lo_raw.max(0) } else { lo_raw };
    let hi = threshold + n as i64 * step + 1;
    let m = matrix.apply_polynomial(f, lo..hi)?;
    let (origin, size, data) = m.window_view().expect("polynomial image is window-backed");

    let table = mho_hit_table(n);
    let mut engine = PathEngine {
        data,
        origin,
        size,
        step,
        order: n,
        threshold,
        semi_infinite,
        acc: vec![T::zero(); 1 << (n - 1)],
    };
    // A closed path of length n climbs at most ⌊n/2⌋ steps above its anchor,
    // so anchors further below the threshold contribute nothing.
    let mut anchor_lo = threshold - (n as i64 / 2) * step;
    if semi_infinite {
        anchor_lo = anchor_lo.max(0);
    }
    for start in anchor_lo..threshold {
        engine.walk(0, start, start, T::one(), 0);
    }
    let mut total = T::zero();
    for (mask, weight) in engine.acc.iter().enumerate() {
        if mask != 0 && !weight.is_zero() {
            total += weight.clone() * T::from_rational(&table[mask]);
        }
    }
    Ok(total)
}

/// Every closed path `π(0) = π(n)` with anchor in `starts`, stepping within
/// the band of `matrix` through nonzero entries, together with its weight
/// `∏ M_{π(i) π(i−1)}`. Diagnostic enumeration backing the direct
/// checkpoint-by-checkpoint sum in tests; exponential in `n`.
pub fn closed_paths<T: Coeff>(
    matrix: &BandMatrix<T>,
    n: usize,
    starts: core::ops::Range<i64>,
) -> Vec<(Vec<i64>, T)> {
    let step = matrix.bandwidth() as i64 - 1;
    let semi_infinite = matrix.extent() == Extent::SemiInfinite;
    let mut out = Vec::new();
    fn rec<T: Coeff>(
        matrix: &BandMatrix<T>,
        step: i64,
        semi_infinite: bool,
        n: usize,
        path: &mut Vec<i64>,
        weight: T,
        out: &mut Vec<(Vec<i64>, T)>,
    ) {
        let position = *path.last().expect("anchored path");
        if path.len() == n + 1 {
            if position == path[0] {
                out.push((path.clone(), weight));
            }
            return;
        }
        for q in position - step..=position + step {
            if semi_infinite && q < 0 {
                continue;
            }
            let e = matrix.entry(q, position);
            if e.is_zero() {
                continue;
            }
            path.push(q);
            rec(matrix, step, semi_infinite, n, path, weight.clone() * e, out);
            path.pop();
        }
    }
    for start in starts {
        if semi_infinite && start < 0 {
            continue;
        }
        let mut path = vec![start];
        rec(matrix, step, semi_infinite, n, &mut path, T::one(), &mut out);
    }
    out
}

/// The `n`-th cumulant by the alternating trace expansion over compositions
/// of `n` — the independent oracle for [`path_cumulant`] on semi-infinite
/// matrices. Works on a padded `P × P` truncation with
/// `P = dim + n·(W_M − 1)`, which reproduces every sandwiched product
/// exactly on the `dim × dim` corner.
pub fn trace_cumulant<T: Coeff>(
    matrix: &BandMatrix<T>,
    f: &RealPoly<T>,
    n: usize,
    dim: i64,
) -> Result<T> {
    if matrix.extent() != Extent::SemiInfinite {
        return Err(Error::Unanchored);
    }
    if n == 0 || dim < 1 {
        return Err(Error::Invalid("order and dimension must be positive"));
    }
    if n > MAX_TRACE_ORDER {
        return Err(Error::OrderOutOfRange);
    }
    let step = (f.degree() * (matrix.bandwidth() - 1)) as i64;
    let padded = (dim + n as i64 * step) as usize;
    let dim = dim as usize;
    let m = matrix.apply_polynomial(f, 0..padded as i64)?;
    let block = m.principal_block(padded)?;

    // Corners of the powers M, M², …, Mⁿ.
    let mut corners: Vec<Dense<T>> = Vec::with_capacity(n);
    let mut power = block.clone();
    corners.push(power.corner(dim));
    for _ in 1..n {
        power = power.mul(&block);
        corners.push(power.corner(dim));
    }

    let n_fact = factorial(n as u64);
    let mut total = T::zero();
    for mask in 0u32..(1 << (n - 1)) {
        let checkpoints: Vec<usize> = (1..n).filter(|&c| mask & (1 << (c - 1)) != 0).collect();
        let parts =
            Composition::from_checkpoints(n, checkpoints).expect("valid by construction");
        let parts = parts.parts();
        let l = parts.len();
        let mut product = corners[parts[0] - 1].clone();
        for &k in &parts[1..] {
            product = product.mul(&corners[k - 1]);
        }
        let mut den = BigInt::from(l as u64);
        for &k in parts {
            den *= factorial(k as u64);
        }
        let mut coeff = BigRational::new(n_fact.clone(), den);
        if l % 2 == 0 {
            coeff = -coeff;
        }
        total += T::from_rational(&coeff) * product.trace();
    }
    Ok(total)
}

/// The stable local cumulant `ϖ_n` of a bi-infinite matrix: the path sum
/// anchored at the origin. For a right-limit of recurrence matrices this is
/// the `N → ∞` limit of the finite-`N` cumulants along the converging
/// subsequence.
pub fn varpi<T: Coeff>(matrix: &BandMatrix<T>, f: &RealPoly<T>, n: usize) -> Result<T> {
    if matrix.extent() != Extent::BiInfinite {
        return Err(Error::Invalid("stable cumulants are defined for bi-infinite matrices"));
    }
    if n < 2 {
        return Err(Error::Invalid("stable cumulants start at order 2"));
    }
    path_cumulant(matrix, f, n, 0)
}

/// A priori envelope `n! · exp(n·(ln(2·d·C·A·W²) + α·W^d))` for the `n`-th
/// cumulant of a degree-`d ≥ 1` statistic on a bandwidth-`W` matrix whose
/// entries obey the growth profile `(C, α)`; `A` is the largest `|coefficient|`
/// of `F`. Uniform in the dimension — this is what makes tightness of the
/// fluctuations a finite check.
pub fn cumulant_bound(
    f: &RealPoly<f64>,
    bandwidth: usize,
    profile: &GrowthProfile,
    n: usize,
) -> Result<f64> {
    let d = f.degree();
    if d == 0 {
        return Err(Error::Invalid("the envelope requires a nonconstant polynomial"));
    }
    if n == 0 || bandwidth == 0 {
        return Err(Error::Invalid("order and bandwidth must be positive"));
    }
    let w = bandwidth as f64;
    let a = f.max_abs_coeff();
    let rate = mathx::ln(2.0 * d as f64 * profile.c * a * w * w)
        + profile.alpha * mathx::powi(w, d as u32);
    let mut n_fact = 1.0;
    for k in 2..=n {
        n_fact *= k as f64;
    }
    Ok(n_fact * mathx::exp(n as f64 * rate))
}

/// `ϖ_n` of the Laurent matrix of `s` through the checkpoint-maximum
/// functional on Fourier frequencies:
/// `Σ_{k_1+…+k_n=0} p̂_{k_1}⋯p̂_{k_n} · G_n(k_1, …, k_n)` with `p = F(s)`.
/// Third route to the same number as [`varpi`] on `L(s)` — no paths, no
/// matrices.
pub fn laurent_varpi_via_g<T: Coeff>(
    s: &LaurentPoly<T>,
    f: &RealPoly<T>,
    n: usize,
) -> T {
    g_weighted_tuple_sum(&compose(f, s), n)
}

/// `Σ_{k_1+…+k_n=0} p̂_{k_1}⋯p̂_{k_n} G_n(k)` over the support of `p`, the
/// last frequency forced by the zero-sum constraint. Zero for `n < 2`
/// (`G_n` vanishes there). Shared by the bi-infinite-matrix route above and
/// the circular-ensemble limit, which feed it different symbols.
pub fn g_weighted_tuple_sum<T: Coeff>(p: &LaurentPoly<T>, n: usize) -> T {
    if n < 2 {
        return T::zero();
    }
    let support: Vec<(i64, T)> = p.support().map(|(k, c)| (k, c.clone())).collect();
    if support.is_empty() {
        return T::zero();
    }
    let mut tuple = vec![0i64; n];
    let mut total = T::zero();
    fn rec<T: Coeff>(
        p: &LaurentPoly<T>,
        support: &[(i64, T)],
        tuple: &mut Vec<i64>,
        slot: usize,
        partial: i64,
        weight: T,
        total: &mut T,
    ) {
        let n = tuple.len();
        if slot == n - 1 {
            let last = -partial;
            let c = p.coeff(last);
            if c.is_zero() {
                return;
            }
            tuple[slot] = last;
            let g = crate::combinatorics::g_n_int(tuple);
            if !g.is_zero() {
                *total += weight * c * T::from_rational(&g);
            }
            return;
        }
        for (k, c) in support {
            tuple[slot] = *k;
            rec(p, support, tuple, slot + 1, partial + k, weight.clone() * c.clone(), total);
        }
    }
    rec(p, &support, &mut tuple, 0, 0, T::one(), &mut total);
    total
}

/// Both cumulant routes (and the a priori envelope when a growth profile is
/// supplied) for one statistic, in floating point.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulantReport {
    pub order: usize,
    pub threshold: i64,
    pub path_value: f64,
    /// Trace route; absent for bi-infinite matrices, where only the path
    /// anchor makes sense.
    pub trace_value: Option<f64>,
    pub gap: Option<f64>,
    /// Envelope from the growth profile; absent for constant statistics.
    pub bound: Option<f64>,
}

/// Run every route that applies to `(J, F, n, threshold)`.
pub fn cumulant_report(
    matrix: &BandMatrix<f64>,
    f: &RealPoly<f64>,
    n: usize,
    threshold: i64,
    profile: Option<&GrowthProfile>,
) -> Result<CumulantReport> {
    let path_value = path_cumulant(matrix, f, n, threshold)?;
    let trace_value = match matrix.extent() {
        Extent::SemiInfinite => Some(trace_cumulant(matrix, f, n, threshold)?),
        Extent::BiInfinite => None,
    };
    let gap = trace_value.map(|t| mathx::abs(path_value - t));
    let bound = match profile {
        Some(p) if f.degree() >= 1 => Some(cumulant_bound(f, matrix.bandwidth(), p, n)?),
        _ => None,
    };
    Ok(CumulantReport { order: n, threshold, path_value, trace_value, gap, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{lambda_n, mho};
    use crate::right_limit::free_jacobi;
    use crate::scalar::rat;

    /// Bi-infinite free Jacobi matrix — the Laurent matrix of the arcsine
    /// symbol.
    fn free_jacobi_bi<T: Coeff>() -> BandMatrix<T> {
        LaurentPoly::arcsine().laurent_matrix()
    }

    /// Bi-infinite Jacobi matrix with zero diagonal and alternating
    /// off-diagonal `a_i` (`a_i` couples `i` and `i+1`): `even` at even `i`.
    fn alternating_jacobi(even: BigRational, odd: BigRational) -> BandMatrix<BigRational> {
        BandMatrix::from_fn(Extent::BiInfinite, 2, "period-2 jacobi", move |i, j| {
            if (i - j).abs() == 1 {
                let lower = i.min(j);
                if lower.rem_euclid(2) == 0 {
                    even.clone()
                } else {
                    odd.clone()
                }
            } else {
                rat(0, 1)
            }
        })
    }

    /// Semi-infinite counterpart, same coefficient sequence on `i ≥ 0`.
    fn alternating_jacobi_semi(
        even: BigRational,
        odd: BigRational,
    ) -> BandMatrix<BigRational> {
        BandMatrix::from_fn(Extent::SemiInfinite, 2, "period-2 jacobi", move |i, j| {
            if (i - j).abs() == 1 {
                let lower = i.min(j);
                if lower.rem_euclid(2) == 0 {
                    even.clone()
                } else {
                    odd.clone()
                }
            } else {
                rat(0, 1)
            }
        })
    }

    /// Deterministic non-symmetric band matrix with exact rational entries.
    fn scrambled_band(extent: Extent, bandwidth: usize) -> BandMatrix<BigRational> {
        BandMatrix::from_fn(extent, bandwidth, "scrambled", move |i, j| {
            let num = (3 * i + 5 * j).rem_euclid(7) - 3;
            let den = 1 + (i + 2 * j).rem_euclid(3);
            rat(num, den)
        })
    }

    #[test]
    fn free_jacobi_second_cumulant_is_a_quarter() {
        let j = free_jacobi::<BigRational>();
        for dim in 1..=8 {
            assert_eq!(path_cumulant(&j, &RealPoly::x(), 2, dim).unwrap(), rat(1, 4));
        }
    }

    #[test]
    fn free_jacobi_higher_cumulants_vanish() {
        let j = free_jacobi::<BigRational>();
        for dim in 3..=6 {
            assert_eq!(path_cumulant(&j, &RealPoly::x(), 3, dim).unwrap(), rat(0, 1));
            assert_eq!(path_cumulant(&j, &RealPoly::x(), 4, dim).unwrap(), rat(0, 1));
        }
    }

    #[test]
    fn first_cumulant_is_the_projected_diagonal_sum() {
        let j = free_jacobi::<BigRational>();
        assert_eq!(path_cumulant(&j, &RealPoly::x(), 1, 5).unwrap(), rat(0, 1));
        // J² has diagonal 1/4, 1/2, 1/2, … on the half line.
        let xsq: RealPoly<BigRational> = RealPoly::monomial(2);
        assert_eq!(path_cumulant(&j, &xsq, 1, 3).unwrap(), rat(5, 4));
        assert_eq!(trace_cumulant(&j, &xsq, 1, 3).unwrap(), rat(5, 4));
        let bi = free_jacobi_bi::<BigRational>();
        assert!(path_cumulant(&bi, &RealPoly::x(), 1, 5).is_err());
    }

    #[test]
    fn trace_route_reproduces_the_free_jacobi_values() {
        let j = free_jacobi::<BigRational>();
        assert_eq!(trace_cumulant(&j, &RealPoly::x(), 2, 3).unwrap(), rat(1, 4));
        for dim in 1..=6 {
            assert_eq!(trace_cumulant(&j, &RealPoly::x(), 2, dim).unwrap(), rat(1, 4));
        }
        assert_eq!(trace_cumulant(&j, &RealPoly::x(), 3, 4).unwrap(), rat(0, 1));
    }

    #[test]
    fn path_and_trace_routes_agree_exactly_off_symmetry() {
        // Non-symmetric entries, several polynomials and orders — equality
        // in ℚ, not up to tolerance.
        let j = scrambled_band(Extent::SemiInfinite, 2);
        let f = RealPoly::new(alloc::vec![rat(0, 1), rat(1, 1), rat(-1, 2)]);
        for n in 2..=4 {
            for dim in 2..=5 {
                let by_paths = path_cumulant(&j, &f, n, dim).unwrap();
                let by_traces = trace_cumulant(&j, &f, n, dim).unwrap();
                assert_eq!(by_paths, by_traces, "order {n}, dim {dim}");
            }
        }
        let wide = scrambled_band(Extent::SemiInfinite, 3);
        let by_paths = path_cumulant(&wide, &RealPoly::x(), 3, 4).unwrap();
        let by_traces = trace_cumulant(&wide, &RealPoly::x(), 3, 4).unwrap();
        assert_eq!(by_paths, by_traces);
    }

    #[test]
    fn direct_checkpoint_sum_agrees_with_the_mask_engine() {
        // Re-derive the cumulant S by S: enumerate closed paths, test
        // Γ-membership per checkpoint set, weight by Ω — no hit table, no
        // reach pruning — and compare with the engine.
        let threshold = 4i64;
        let n = 4usize;
        let j = scrambled_band(Extent::SemiInfinite, 2);
        let f = RealPoly::x();
        let m = j.apply_polynomial(&f, 0..(threshold + n as i64 + 1)).unwrap();
        let paths = closed_paths(&m, n, 0..threshold);
        let mut direct = rat(0, 1);
        for c in lambda_n(n) {
            let weight = mho(&c);
            for (path, w) in &paths {
                let hit = c
                    .checkpoints()
                    .iter()
                    .any(|&cp| path[cp] >= threshold);
                if hit {
                    direct += weight.clone() * w.clone();
                }
            }
        }
        let engine = path_cumulant(&j, &f, n, threshold).unwrap();
        assert_eq!(direct, engine);
    }

    #[test]
    fn stable_cumulants_of_the_free_jacobi_matrix() {
        let j = free_jacobi_bi::<BigRational>();
        assert_eq!(varpi(&j, &RealPoly::x(), 2).unwrap(), rat(1, 4));
        assert_eq!(varpi(&j, &RealPoly::x(), 3).unwrap(), rat(0, 1));
        assert_eq!(varpi(&j, &RealPoly::x(), 4).unwrap(), rat(0, 1));
        // Finite-dimension values have already converged.
        let semi = free_jacobi::<BigRational>();
        assert_eq!(
            path_cumulant(&semi, &RealPoly::x(), 2, 9).unwrap(),
            varpi(&j, &RealPoly::x(), 2).unwrap()
        );
    }

    #[test]
    fn stable_cumulants_require_a_bi_infinite_matrix() {
        let semi = free_jacobi::<BigRational>();
        assert!(varpi(&semi, &RealPoly::x(), 2).is_err());
        let bi = free_jacobi_bi::<BigRational>();
        assert!(varpi(&bi, &RealPoly::x(), 1).is_err());
    }

    #[test]
    fn period_two_jacobi_stable_cumulants() {
        // Zero diagonal makes the walk bipartite: closed odd-length paths do
        // not exist, so every odd stable cumulant vanishes identically.
        let even_anchored = alternating_jacobi(rat(1, 2), rat(1, 4));
        assert_eq!(varpi(&even_anchored, &RealPoly::x(), 3).unwrap(), rat(0, 1));
        // Order 4 sees the period: the two anchorings differ.
        assert_eq!(varpi(&even_anchored, &RealPoly::x(), 4).unwrap(), rat(3, 128));
        let odd_anchored = alternating_jacobi(rat(1, 4), rat(1, 2));
        assert_eq!(varpi(&odd_anchored, &RealPoly::x(), 3).unwrap(), rat(0, 1));
        assert_eq!(varpi(&odd_anchored, &RealPoly::x(), 4).unwrap(), rat(-3, 32));
    }

    #[test]
    fn period_two_threshold_parity_selects_the_anchoring() {
        // Semi-infinite alternating matrix: an even threshold reproduces the
        // even-anchored stable value, an odd threshold the odd-anchored one.
        let semi = alternating_jacobi_semi(rat(1, 2), rat(1, 4));
        assert_eq!(path_cumulant(&semi, &RealPoly::x(), 4, 6).unwrap(), rat(3, 128));
        assert_eq!(path_cumulant(&semi, &RealPoly::x(), 4, 8).unwrap(), rat(3, 128));
        assert_eq!(path_cumulant(&semi, &RealPoly::x(), 4, 5).unwrap(), rat(-3, 32));
        assert_eq!(path_cumulant(&semi, &RealPoly::x(), 4, 7).unwrap(), rat(-3, 32));
    }

    #[test]
    fn frequency_route_matches_the_path_route() {
        let arcsine: LaurentPoly<BigRational> = LaurentPoly::arcsine();
        let bi = free_jacobi_bi::<BigRational>();
        for n in 2..=4 {
            assert_eq!(
                laurent_varpi_via_g(&arcsine, &RealPoly::x(), n),
                varpi(&bi, &RealPoly::x(), n).unwrap(),
                "order {n}"
            );
        }
        let t2 = crate::poly::chebyshev_t::<BigRational>(2);
        assert_eq!(
            laurent_varpi_via_g(&arcsine, &t2, 2),
            varpi(&bi, &t2, 2).unwrap()
        );
    }

    #[test]
    fn frequency_route_order_two_is_the_fourier_variance() {
        let symbols = [
            LaurentPoly::from_pairs([
                (-1, rat(1, 1)),
                (0, rat(2, 1)),
                (1, rat(1, 1)),
            ]),
            LaurentPoly::from_pairs([
                (-1, rat(1, 1)),
                (0, rat(3, 1)),
                (1, rat(3, 1)),
                (2, rat(1, 1)),
            ]),
            LaurentPoly::from_pairs([(-2, rat(1, 3)), (1, rat(-5, 2)), (3, rat(7, 1))]),
        ];
        for s in &symbols {
            let f: RealPoly<BigRational> = RealPoly::x();
            assert_eq!(
                laurent_varpi_via_g(s, &f, 2),
                crate::laurent::variance_fourier(&f, s)
            );
        }
        // The m = 1 product symbol: variance 1.
        assert_eq!(
            laurent_varpi_via_g(&symbols[0], &RealPoly::x(), 2),
            rat(1, 1)
        );
    }

    #[test]
    fn envelope_value_and_preconditions() {
        let profile = GrowthProfile::new(1.0, 0.0).unwrap();
        let b = cumulant_bound(&RealPoly::x(), 2, &profile, 2).unwrap();
        assert!((b - 128.0).abs() < 1e-9);
        let constant = RealPoly::constant(3.0);
        assert!(cumulant_bound(&constant, 2, &profile, 2).is_err());
        // The envelope dominates the exact value it bounds.
        let j = free_jacobi::<f64>();
        let v = path_cumulant(&j, &RealPoly::x(), 2, 5).unwrap();
        assert!(v.abs() <= b);
    }

    #[test]
    fn report_collects_both_routes() {
        let j = free_jacobi::<f64>();
        let profile = GrowthProfile::new(1.0, 0.0).unwrap();
        let r = cumulant_report(&j, &RealPoly::x(), 2, 5, Some(&profile)).unwrap();
        assert_eq!(r.path_value, 0.25);
        assert_eq!(r.trace_value, Some(0.25));
        assert!(r.gap.unwrap() < 1e-12);
        assert!(r.bound.unwrap() > 0.0);
        let bi = free_jacobi_bi::<f64>();
        let rb = cumulant_report(&bi, &RealPoly::x(), 2, 0, None).unwrap();
        assert_eq!(rb.trace_value, None);
        assert_eq!(rb.path_value, 0.25);
    }

    #[test]
    fn degenerate_statistics_have_zero_cumulants() {
        let j = free_jacobi::<BigRational>();
        let c = RealPoly::constant(rat(7, 2));
        assert_eq!(path_cumulant(&j, &c, 2, 5).unwrap(), rat(0, 1));
        assert_eq!(trace_cumulant(&j, &c, 2, 5).unwrap(), rat(0, 1));
        assert_eq!(path_cumulant(&j, &c, 1, 3).unwrap(), rat(21, 2));
        let zero = RealPoly::zero();
        assert_eq!(path_cumulant(&j, &zero, 3, 4).unwrap(), rat(0, 1));
    }
}
