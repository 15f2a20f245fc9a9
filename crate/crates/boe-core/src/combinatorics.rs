//! Exact composition calculus and the rearrangement identities behind it.
//!
//! A *checkpoint set* for order `n` is a nonempty strictly increasing
//! sequence `n_1 < … < n_ℓ < n` of positive integers; the family of all of
//! them is `Λ_n`, of size `2^{n−1} − 1`. Checkpoint sets are in bijection
//! with compositions `k = (k_1, …, k_{ℓ+1})` of `n` via partial sums
//! (`n_j = k_1 + … + k_j`). Each carries the signed multinomial weight
//!
//! `Ω = (−1)^{ℓ+1}/(ℓ+1) · n!/(k_1!⋯k_{ℓ+1}!)`,
//!
//! and the checkpoint-maximum functional is
//! `G_n(x) = Σ_{Λ_n} Ω · max{0, S_{n_1}, …, S_{n_ℓ}}` with `S_j` the prefix
//! sums of `x`. The weights drive the lattice-path cumulant expansion in
//! [`crate::cumulants`]; `G_n` gives cumulants of Laurent matrices in closed
//! form.
//!
//! The module also verifies, in exact rational arithmetic, the classical
//! identities this calculus rests on: the symmetrization lemma for `G_n`
//! (nonzero only at `n = 2`), the Dyson–Hunt–Kac and Rudnick–Sarnak
//! rearrangement formulas for maxima of partial sums, the Bohnenblust–Spitzer
//! expectation identity for random walks, an alternating composition sum that
//! telescopes to `1_{n=1}`, and the finite-difference binomial lemma. All of
//! them are theorems, so the verifiers return both sides and equality is
//! asserted exactly — any discrepancy is an implementation bug, never
//! roundoff.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::RealPoly;
use crate::scalar::Coeff;
use crate::{Error, Result};

/// Largest order accepted by the `n!`-term symmetrized sums (8! = 40320
/// permutations is still instant; growth beyond that is pointless for tests).
pub const MAX_PERMUTATION_ORDER: usize = 8;

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)` (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// A checkpoint set paired with its composition.
///
/// `checkpoints` is the strictly increasing sequence `n_1 < … < n_ℓ` (all
/// `< order`); `parts` is the composition of `order` recovered from it by
/// consecutive differences. The empty checkpoint set (one part, the whole of
/// `order`) is representable but excluded from [`lambda_n`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    order: usize,
    checkpoints: Vec<usize>,
    parts: Vec<usize>,
}

impl Composition {
    /// From checkpoints (the `Ψ⁻¹` direction).
    pub fn from_checkpoints(order: usize, checkpoints: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Invalid("order must be positive"));
        }
        let mut prev = 0usize;
        for &c in &checkpoints {
            if c <= prev || c >= order {
                return Err(Error::Invalid(
                    "checkpoints must satisfy 1 <= n_1 < ... < n_l < order",
                ));
            }
            prev = c;
        }
        let mut parts = Vec::with_capacity(checkpoints.len() + 1);
        let mut last = 0usize;
        for &c in &checkpoints {
            parts.push(c - last);
            last = c;
        }
        parts.push(order - last);
        Ok(Composition { order, checkpoints, parts })
    }

    /// From a composition (the `Ψ` direction: checkpoints are the proper
    /// prefix sums of the parts).
    pub fn from_parts(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&k| k == 0) {
            return Err(Error::Invalid("parts must be positive and nonempty"));
        }
        let order: usize = parts.iter().sum();
        let mut checkpoints = Vec::with_capacity(parts.len() - 1);
        let mut acc = 0usize;
        for &k in &parts[..parts.len() - 1] {
            acc += k;
            checkpoints.push(acc);
        }
        Ok(Composition { order, checkpoints, parts })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The checkpoints `n_1 < … < n_ℓ`.
    pub fn checkpoints(&self) -> &[usize] {
        &self.checkpoints
    }

    /// The parts `k_1, …, k_{ℓ+1}` (consecutive checkpoint differences).
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of checkpoints `ℓ`.
    pub fn len(&self) -> usize {
        self.checkpoints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checkpoints.is_empty()
    }

    /// Bitmask with bit `c − 1` set for each checkpoint `c` (fits: orders are
    /// capped far below 33).
    pub fn mask(&self) -> u32 {
        self.checkpoints.iter().fold(0u32, |m, &c| m | 1 << (c - 1))
    }
}

/// All `2^{n−1} − 1` nonempty checkpoint sets of order `n`, in mask order.
/// Empty for `n < 2`.
pub fn lambda_n(n: usize) -> Vec<Composition> {
    if n < 2 {
        return Vec::new();
    }
    assert!(n <= 20, "checkpoint enumeration is capped at order 20");
    let mut out = Vec::with_capacity((1usize << (n - 1)) - 1);
    for mask in 1u32..(1 << (n - 1)) {
        let checkpoints = (1..n).filter(|&c| mask & (1 << (c - 1)) != 0).collect();
        out.push(Composition::from_checkpoints(n, checkpoints).expect("valid by construction"));
    }
    out
}

/// The signed multinomial weight `Ω = (−1)^{ℓ+1}/(ℓ+1) · n!/(k_1!⋯k_{ℓ+1}!)`.
pub fn mho(c: &Composition) -> BigRational {
    let l = c.len();
    let mut num = factorial(c.order() as u64);
    if l % 2 == 0 {
        num = -num;
    }
    let mut den = BigInt::from(l as u64 + 1);
    for &k in c.parts() {
        den *= factorial(k as u64);
    }
    BigRational::new(num, den)
}

/// For each subset `A ⊆ {1, …, n−1}` (as a bitmask), the total weight of the
/// checkpoint sets meeting `A`: `table[A] = Σ_{S ∈ Λ_n, S∩A ≠ ∅} Ω(S)`.
///
/// This is the kernel of the path engine: a closed path contributes its
/// weight times `table[A]` where `A` is the set of steps at which it sits at
/// or above the root — summing over paths once instead of once per
/// checkpoint set.
pub fn mho_hit_table(n: usize) -> Vec<BigRational> {
    assert!((1..=12).contains(&n), "hit table is capped at order 12");
    let size = 1usize << (n - 1);
    let sets: Vec<(u32, BigRational)> =
        lambda_n(n).iter().map(|c| (c.mask(), mho(c))).collect();
    let mut table = vec![BigRational::zero(); size];
    for (a, slot) in table.iter_mut().enumerate() {
        for (mask, weight) in &sets {
            if mask & (a as u32) != 0 {
                *slot += weight;
            }
        }
    }
    table
}

/// The checkpoint-maximum functional
/// `G_n(x) = Σ_{Λ_n} Ω · max{0, S_{n_1}, …, S_{n_ℓ}}` (zero for `n < 2`).
pub fn g_n(x: &[BigRational]) -> BigRational {
    let n = x.len();
    if n < 2 {
        return BigRational::zero();
    }
    let mut prefix = Vec::with_capacity(n);
    let mut acc = BigRational::zero();
    for v in x {
        acc += v.clone();
        prefix.push(acc.clone());
    }
    let mut total = BigRational::zero();
    for c in lambda_n(n) {
        let mut m = BigRational::zero();
        for &cp in c.checkpoints() {
            let s = &prefix[cp - 1];
            if *s > m {
                m = s.clone();
            }
        }
        total += mho(&c) * m;
    }
    total
}

/// [`g_n`] on integer tuples (the frequency tuples of Laurent symbols).
pub fn g_n_int(x: &[i64]) -> BigRational {
    let values: Vec<BigRational> = x.iter().map(|&v| BigRational::from(BigInt::from(v))).collect();
    g_n(&values)
}

/// Largest prefix sum `max{S_1, …, S_n}` (the empty maximum is not taken:
/// callers choose whether 0 participates).
pub fn max_prefix(x: &[BigRational]) -> BigRational {
    let mut best: Option<BigRational> = None;
    let mut acc = BigRational::zero();
    for v in x {
        acc += v.clone();
        match &best {
            Some(b) if *b >= acc => {}
            _ => best = Some(acc.clone()),
        }
    }
    best.expect("nonempty input")
}

/// `max{0, S_1, …, S_n}`.
pub fn max_prefix_with_zero(x: &[BigRational]) -> BigRational {
    let m = max_prefix(x);
    if m.is_negative() {
        BigRational::zero()
    } else {
        m
    }
}

/// Visit all `n!` orderings of `items` (repeated orderings included when
/// items repeat — the identities below sum over the symmetric group itself).
fn for_each_permutation<T: Clone>(items: &[T], visit: &mut impl FnMut(&[T])) {
    fn rec<T: Clone>(arr: &mut [T], k: usize, visit: &mut impl FnMut(&[T])) {
        if k == arr.len() {
            visit(arr);
            return;
        }
        for i in k..arr.len() {
            arr.swap(k, i);
            rec(arr, k + 1, visit);
            arr.swap(k, i);
        }
    }
    let mut scratch = items.to_vec();
    rec(&mut scratch, 0, visit);
}

fn check_permutation_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_PERMUTATION_ORDER {
        return Err(Error::OrderOutOfRange);
    }
    Ok(())
}

/// `Σ_{σ ∈ S_n} G_n(x_σ)` for a zero-sum vector: equals `|x_1|` when
/// `n = 2` and vanishes identically for `n ≥ 3` — the cancellation that
/// makes all cumulants beyond the variance of a Laurent matrix vanish.
pub fn mcl_symmetrized(x: &[BigRational]) -> Result<BigRational> {
    check_permutation_order(x.len())?;
    if !x.iter().fold(BigRational::zero(), |a, v| a + v.clone()).is_zero() {
        return Err(Error::ZeroSumRequired);
    }
    let mut total = BigRational::zero();
    for_each_permutation(x, &mut |perm| total += g_n(perm));
    Ok(total)
}

/// Both sides of the Dyson–Hunt–Kac identity:
/// `Σ_σ max{0, S_1(x_σ), …, S_n(x_σ)} = Σ_{k=1}^n (1/k) Σ_σ (S_k(x_σ))⁺`.
pub fn dhk_both_sides(x: &[BigRational]) -> Result<(BigRational, BigRational)> {
    check_permutation_order(x.len())?;
    let n = x.len();
    let mut lhs = BigRational::zero();
    let mut positive_parts = vec![BigRational::zero(); n];
    for_each_permutation(x, &mut |perm| {
        lhs += max_prefix_with_zero(perm);
        let mut acc = BigRational::zero();
        for (k, v) in perm.iter().enumerate() {
            acc += v.clone();
            if acc.is_positive() {
                positive_parts[k] += acc.clone();
            }
        }
    });
    let mut rhs = BigRational::zero();
    for (k, p) in positive_parts.into_iter().enumerate() {
        rhs += p * BigRational::ratio(1, k as i64 + 1);
    }
    Ok((lhs, rhs))
}

/// Both sides of the Rudnick–Sarnak rearrangement identity for zero-sum `x`:
/// `Σ_σ max_j S_j(x_σ) = (n/4) Σ_F (|F|−1)!(n−|F|−1)! |Σ_{k∈F} x_k|`
/// over nonempty proper subsets `F` of the index set.
pub fn rs_both_sides(x: &[BigRational]) -> Result<(BigRational, BigRational)> {
    check_permutation_order(x.len())?;
    if !x.iter().fold(BigRational::zero(), |a, v| a + v.clone()).is_zero() {
        return Err(Error::ZeroSumRequired);
    }
    let n = x.len();
    let mut lhs = BigRational::zero();
    for_each_permutation(x, &mut |perm| lhs += max_prefix(perm));

    let mut rhs = BigRational::zero();
    for f in 1u32..(1 << n) - 1 {
        let size = f.count_ones() as u64;
        let mut block = BigRational::zero();
        for (k, v) in x.iter().enumerate() {
            if f & (1 << k) != 0 {
                block += v.clone();
            }
        }
        let coeff = factorial(size - 1) * factorial(n as u64 - size - 1);
        rhs += BigRational::from(coeff) * Signed::abs(&block);
    }
    rhs *= BigRational::ratio(n as i64, 4);
    Ok((lhs, rhs))
}

/// Both sides of the Bohnenblust–Spitzer expectation identity for an i.i.d.
/// walk with the given finite step distribution:
/// `E[max{S_0, …, S_n}] = Σ_{k=1}^n E[S_k⁺]/k`.
pub fn spitzer_check(
    distribution: &[(BigRational, BigRational)],
    n: usize,
) -> Result<(BigRational, BigRational)> {
    let mass: BigRational = distribution.iter().fold(BigRational::zero(), |a, (_, p)| a + p.clone());
    if !mass.is_one() {
        return Err(Error::ProbabilityNotOne);
    }
    if distribution.len().pow(n as u32) > 2_000_000 {
        return Err(Error::OrderOutOfRange);
    }

    // Left side: exhaustive expectation over the n-fold product measure,
    // walking the outcome tree with running (sum, max, probability).
    fn walk(
        dist: &[(BigRational, BigRational)],
        remaining: usize,
        sum: &BigRational,
        max: &BigRational,
        prob: &BigRational,
        acc: &mut BigRational,
    ) {
        if remaining == 0 {
            *acc += prob.clone() * max.clone();
            return;
        }
        for (v, p) in dist {
            let sum2 = sum.clone() + v.clone();
            let max2 = if sum2 > *max { sum2.clone() } else { max.clone() };
            let prob2 = prob.clone() * p.clone();
            walk(dist, remaining - 1, &sum2, &max2, &prob2, acc);
        }
    }
    let mut lhs = BigRational::zero();
    walk(
        distribution,
        n,
        &BigRational::zero(),
        &BigRational::zero(),
        &BigRational::one(),
        &mut lhs,
    );

    // Right side: convolve the step distribution to get each S_k exactly.
    let mut rhs = BigRational::zero();
    let mut current: BTreeMap<BigRational, BigRational> = BTreeMap::new();
    current.insert(BigRational::zero(), BigRational::one());
    for k in 1..=n {
        let mut next: BTreeMap<BigRational, BigRational> = BTreeMap::new();
        for (s, p) in &current {
            for (v, q) in distribution {
                let entry = next.entry(s.clone() + v.clone()).or_insert_with(BigRational::zero);
                *entry += p.clone() * q.clone();
            }
        }
        current = next;
        let mut positive_part = BigRational::zero();
        for (s, p) in &current {
            if s.is_positive() {
                positive_part += s.clone() * p.clone();
            }
        }
        rhs += positive_part * BigRational::ratio(1, k as i64);
    }
    Ok((lhs, rhs))
}

/// The alternating composition sum
/// `Σ_{ℓ=1}^n ((−1)^{ℓ+1}/ℓ) Σ_{k_1+…+k_ℓ=n} n!/(k_1!⋯k_ℓ!)`,
/// which telescopes to `1` for `n = 1` and `0` for every `n ≥ 2`
/// (expand `log(1 + (e^t − 1)) = t` and compare `t^n` coefficients).
pub fn mobius_identity(n: usize) -> BigRational {
    assert!((1..=20).contains(&n), "composition enumeration is capped at order 20");
    let n_fact = factorial(n as u64);
    let mut total = BigRational::zero();
    // Compositions of n into ℓ parts ↔ subsets of {1..n−1} of size ℓ−1.
    for mask in 0u32..(1 << (n - 1)) {
        let checkpoints: Vec<usize> = (1..n).filter(|&c| mask & (1 << (c - 1)) != 0).collect();
        let c = Composition::from_checkpoints(n, checkpoints).expect("valid by construction");
        let l = c.parts().len();
        let mut den = BigInt::from(l as u64);
        for &k in c.parts() {
            den *= factorial(k as u64);
        }
        let mut term = BigRational::new(n_fact.clone(), den);
        if l % 2 == 0 {
            term = -term;
        }
        total += term;
    }
    total
}

/// Both sides of the finite-difference binomial lemma for a polynomial of
/// degree at most `n`: `Σ_{k=0}^n (−1)^{n−k} C(n,k) R(k) = n!·[x^n] R`
/// (the n-th forward difference recovers the scaled leading coefficient).
pub fn binomial_identity_check(
    r: &RealPoly<BigRational>,
    n: usize,
) -> Result<(BigRational, BigRational)> {
    if !r.is_zero() && r.degree() > n {
        return Err(Error::DegreeExceedsOrder);
    }
    let mut lhs = BigRational::zero();
    for k in 0..=n {
        let mut term = BigRational::from(binomial(n as u64, k as u64))
            * r.eval(&BigRational::from(BigInt::from(k)));
        if (n - k) % 2 == 1 {
            term = -term;
        }
        lhs += term;
    }
    let rhs = BigRational::from(factorial(n as u64)) * r.coeff(n);
    Ok((lhs, rhs))
}
