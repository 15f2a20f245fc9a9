//! Laurent polynomial symbols and the limiting-variance formulas.
//!
//! A Laurent polynomial `s(z) = Σ_k ŝ_k z^k` (finitely many nonzero real
//! coefficients, `k ∈ ℤ`) doubles as the symbol of the bi-infinite matrix
//! `L(s)_{ij} = ŝ_{i−j}`, constant along diagonals. The limiting variance of
//! a polynomial linear statistic with test function `F` on an ensemble whose
//! recurrence matrix has right-limit `L(s)` is
//!
//! `Σ_{k ≥ 1} k · F̂(s)_k · F̂(s)_{−k}`,
//!
//! the Fourier-side formula. For the self-adjoint arcsine symbol
//! `s = (z + 1/z)/2` (test functions on `[−1, 1]`) the same number has three
//! more representations — a double contour integral of a difference quotient,
//! `(1/4) Σ k c_k²` over the Chebyshev coefficients of `F`, and a weighted
//! double integral over the square — implemented here as independent
//! cross-checking routes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::band::{BandMatrix, Extent};
use crate::poly::{chebyshev_t, RealPoly};
use crate::scalar::Coeff;
use crate::{mathx, Error, Result};

/// A finitely supported map `degree → coefficient`; zero coefficients are
/// never stored, so support queries are exact.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<T> {
    coeffs: BTreeMap<i64, T>,
}

impl<T: Coeff> Default for LaurentPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coeff> LaurentPoly<T> {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::from_pairs([(0, c)])
    }

    /// The monomial `z^k`.
    pub fn monomial(k: i64) -> Self {
        Self::from_pairs([(k, T::one())])
    }

    /// The arcsine symbol `(z + 1/z)/2`, right-limit of Jacobi matrices of
    /// measures on `[−1, 1]` in the one-cut regime.
    pub fn arcsine() -> Self {
        let half = T::ratio(1, 2);
        Self::from_pairs([(-1, half.clone()), (1, half)])
    }

    /// Build from `(degree, coefficient)` pairs; zeros are dropped, repeated
    /// degrees accumulate.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut coeffs: BTreeMap<i64, T> = BTreeMap::new();
        for (k, c) in pairs {
            let slot = coeffs.entry(k).or_insert_with(T::zero);
            *slot += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient `ŝ_k` (zero off the support).
    pub fn coeff(&self, k: i64) -> T {
        self.coeffs.get(&k).cloned().unwrap_or_else(T::zero)
    }

    /// The stored (nonzero) support, ascending.
    pub fn support(&self) -> impl Iterator<Item = (i64, &T)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_degree(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> i64 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    /// Largest `|k|` on the support.
    pub fn support_radius(&self) -> i64 {
        self.coeffs.keys().map(|k| k.abs()).max().unwrap_or(0)
    }

    /// `ŝ_k = ŝ_{−k}` for every `k` (exact comparison — symbols are built
    /// from exact constructors, not measured data).
    pub fn is_self_adjoint(&self) -> bool {
        self.coeffs.iter().all(|(&k, c)| self.coeff(-k) == *c)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_pairs(
            self.coeffs
                .iter()
                .map(|(&k, c)| (k, c.clone()))
                .chain(other.coeffs.iter().map(|(&k, c)| (k, c.clone()))),
        )
    }

    pub fn neg(&self) -> Self {
        Self::from_pairs(self.coeffs.iter().map(|(&k, c)| (k, -c.clone())))
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_pairs(self.coeffs.iter().map(|(&k, v)| (k, v.clone() * c.clone())))
    }

    /// Convolution product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut pairs = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                pairs.push((i + j, a.clone() * b.clone()));
            }
        }
        Self::from_pairs(pairs)
    }

    /// Convolution power `s^n` (`s^0 = 1`).
    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::constant(T::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The bi-infinite matrix `L(s)_{ij} = ŝ_{i−j}`, constant along
    /// diagonals, with the tightest band containing the support.
    pub fn laurent_matrix(&self) -> BandMatrix<T> {
        let bandwidth = (self.support_radius() + 1).max(1) as usize;
        let coeffs = self.coeffs.clone();
        BandMatrix::from_fn(Extent::BiInfinite, bandwidth, "laurent", move |i, j| {
            coeffs.get(&(i - j)).cloned().unwrap_or_else(T::zero)
        })
    }

    /// Value at `e^{iθ}` as `(real, imaginary)`.
    pub fn eval_circle(&self, theta: f64) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (&k, c) in &self.coeffs {
            let c = c.to_f64();
            re += c * mathx::cos(k as f64 * theta);
            im += c * mathx::sin(k as f64 * theta);
        }
        (re, im)
    }
}

/// Exact composition `F(s)` in the Laurent algebra (Horner).
pub fn compose<T: Coeff>(f: &RealPoly<T>, s: &LaurentPoly<T>) -> LaurentPoly<T> {
    let mut acc = LaurentPoly::zero();
    for k in (0..=f.degree()).rev() {
        acc = acc.mul(s);
        let c = f.coeff(k);
        if !c.is_zero() {
            acc = acc.add(&LaurentPoly::constant(c));
        }
    }
    acc
}

/// Coefficient extraction `F̂(s)_k`; see
/// [`fourier_coeff_quadrature`] for the contour-integral cross-check.
pub fn fourier_coeff<T: Coeff>(p: &LaurentPoly<T>, k: i64) -> T {
    p.coeff(k)
}

/// The same coefficient by an `m`-point trapezoid rule on the unit circle,
/// exact (to roundoff) once `m` exceeds the support width.
pub fn fourier_coeff_quadrature(p: &LaurentPoly<f64>, k: i64, m: usize) -> f64 {
    let mut acc = 0.0;
    for j in 0..m {
        let theta = 2.0 * mathx::PI * j as f64 / m as f64;
        let (re, im) = p.eval_circle(theta);
        // Re[p(e^{iθ}) e^{−ikθ}]
        acc += re * mathx::cos(k as f64 * theta) + im * mathx::sin(k as f64 * theta);
    }
    acc / m as f64
}

/// The Fourier-side limiting variance `Σ_{k≥1} k·F̂(s)_k·F̂(s)_{−k}`.
pub fn variance_fourier<T: Coeff>(f: &RealPoly<T>, s: &LaurentPoly<T>) -> T {
    let p = compose(f, s);
    let mut acc = T::zero();
    for k in 1..=p.max_degree().max(0) {
        acc += T::ratio(k, 1) * p.coeff(k) * p.coeff(-k);
    }
    acc
}

/// The same variance as a double contour integral of the squared difference
/// quotient,
/// `(1/8π²) ∬ |(F(s(e^{iθ})) − F(s(e^{iφ})))/(e^{iθ} − e^{iφ})|² dθ dφ`,
/// by an `grid × grid` trapezoid rule with the diagonal supplied by the
/// derivative limit. Restricted to self-adjoint symbols, where `F(s)` is
/// real on the circle.
pub fn variance_devinatz(
    f: &RealPoly<f64>,
    s: &LaurentPoly<f64>,
    grid: usize,
) -> Result<f64> {
    if !s.is_self_adjoint() {
        return Err(Error::NotSelfAdjoint);
    }
    if grid < 2 {
        return Err(Error::Invalid("grid must have at least 2 points"));
    }
    let p = compose(f, s);
    let m = grid;
    // Self-adjoint symbol: p(e^{iθ}) = c_0 + 2 Σ_{k>0} c_k cos kθ, real.
    let value = |theta: f64| -> f64 {
        let mut acc = p.coeff(0);
        for k in 1..=p.max_degree().max(0) {
            acc += 2.0 * p.coeff(k) * mathx::cos(k as f64 * theta);
        }
        acc
    };
    let derivative = |theta: f64| -> f64 {
        let mut acc = 0.0;
        for k in 1..=p.max_degree().max(0) {
            acc -= 2.0 * k as f64 * p.coeff(k) * mathx::sin(k as f64 * theta);
        }
        acc
    };
    let thetas: Vec<f64> = (0..m).map(|a| 2.0 * mathx::PI * a as f64 / m as f64).collect();
    let values: Vec<f64> = thetas.iter().map(|&t| value(t)).collect();
    let mut total = 0.0;
    for a in 0..m {
        for b in 0..m {
            let q_sq = if a == b {
                let d = derivative(thetas[a]);
                d * d
            } else {
                let num = values[a] - values[b];
                let half = 0.5 * (thetas[a] - thetas[b]);
                let denom = 2.0 * mathx::sin(half);
                (num * num) / (denom * denom)
            };
            total += q_sq;
        }
    }
    Ok(total / (2.0 * (m * m) as f64))
}

/// Exact Chebyshev expansion of `F = Σ_k c_k T_k` by downward elimination of
/// the leading coefficient (`T_k` has leading coefficient `2^{k−1}`), then
/// `(1/4) Σ_{k≥1} k c_k²` — the arcsine-symbol variance in the orthogonal
/// basis, exact in rational mode.
pub fn sigma_chebyshev<T: Coeff>(f: &RealPoly<T>) -> T {
    let mut rest = f.clone();
    let mut acc = T::zero();
    while !rest.is_zero() && rest.degree() >= 1 {
        let k = rest.degree();
        assert!(k < 63, "degree cap for exact 2^{{k-1}} scaling");
        let c_k = rest.coeff(k) * T::ratio(1, 1i64 << (k - 1));
        acc += T::ratio(k as i64, 4) * c_k.clone() * c_k.clone();
        rest = rest.sub(&chebyshev_t::<T>(k).scale(&c_k));
    }
    acc
}

/// The same variance as a weighted double integral over `[−1, 1]²`,
/// `(1/4π²) ∬ ((F(x)−F(y))/(x−y))² (1−xy)/(√(1−x²)√(1−y²)) dx dy`,
/// by the Gauss–Chebyshev rule whose weights absorb the endpoint
/// singularities (exact once `grid` exceeds `deg F`).
pub fn variance_h12(f: &RealPoly<f64>, grid: usize) -> Result<f64> {
    if grid == 0 {
        return Err(Error::Invalid("grid must be positive"));
    }
    let m = grid;
    let nodes: Vec<f64> =
        (0..m).map(|a| mathx::cos((2 * a + 1) as f64 * mathx::PI / (2 * m) as f64)).collect();
    let values: Vec<f64> = nodes.iter().map(|x| f.eval(x)).collect();
    let df = f.derivative();
    let mut total = 0.0;
    for a in 0..m {
        for b in 0..m {
            let q = if a == b {
                let d = df.eval(&nodes[a]);
                d * d
            } else {
                let r = (values[a] - values[b]) / (nodes[a] - nodes[b]);
                r * r
            };
            total += q * (1.0 - nodes[a] * nodes[b]);
        }
    }
    Ok(total / (4.0 * (m * m) as f64))
}

/// `s^n` computed by summing weighted length-`n` paths on the graph of
/// `L(s)`: a step from `u` to `v` carries weight `ŝ_{v−u}`, and the total
/// weight of all paths `0 → j` is the coefficient of `z^j`. Agreement with
/// the convolution power is the band/symbol dictionary in its simplest form.
pub fn symbol_power_via_paths<T: Coeff>(s: &LaurentPoly<T>, n: usize) -> LaurentPoly<T> {
    assert!(n >= 1, "power must be at least 1");
    let steps: Vec<(i64, T)> = s.support().map(|(k, c)| (k, c.clone())).collect();
    let mut acc: Vec<(i64, T)> = Vec::new();
    fn dfs<T: Coeff>(
        steps: &[(i64, T)],
        position: i64,
        weight: T,
        remaining: usize,
        acc: &mut Vec<(i64, T)>,
    ) {
        if remaining == 0 {
            acc.push((position, weight));
            return;
        }
        for (delta, c) in steps {
            dfs(steps, position + delta, weight.clone() * c.clone(), remaining - 1, acc);
        }
    }
    dfs(&steps, 0, T::one(), n, &mut acc);
    LaurentPoly::from_pairs(acc)
}

/// The `H^{1/2}` seminorm squared, `Σ_n |n| f̂_n²` — the limiting variance of
/// linear statistics of circular-ensemble eigenangles.
pub fn h12_norm<T: Coeff>(f: &LaurentPoly<T>) -> T {
    let mut acc = T::zero();
    for (k, c) in f.support() {
        acc += T::ratio(k.abs(), 1) * c.clone() * c.clone();
    }
    acc
}

/// All available variance routes for one test function, with the largest
/// pairwise gap between the values that were computed.
#[derive(Debug, Clone, PartialEq)]
pub struct VarianceReport {
    pub fourier_value: f64,
    /// Contour-integral route; absent for non-self-adjoint symbols.
    pub devinatz_value: Option<f64>,
    /// Chebyshev-coefficient route; only meaningful against the arcsine
    /// symbol, absent otherwise.
    pub chebyshev_value: Option<f64>,
    /// Weighted-square quadrature route; arcsine symbol only.
    pub h12_value: Option<f64>,
    pub max_pairwise_gap: f64,
}

/// Compute every route that applies to `(F, s)`.
pub fn variance_report(
    f: &RealPoly<f64>,
    s: &LaurentPoly<f64>,
    devinatz_grid: usize,
    h12_grid: usize,
) -> Result<VarianceReport> {
    let fourier_value = variance_fourier(f, s);
    let devinatz_value = if s.is_self_adjoint() {
        Some(variance_devinatz(f, s, devinatz_grid)?)
    } else {
        None
    };
    let on_arcsine = *s == LaurentPoly::arcsine();
    let chebyshev_value = on_arcsine.then(|| sigma_chebyshev(f));
    let h12_value = if on_arcsine { Some(variance_h12(f, h12_grid)?) } else { None };
    let mut values: Vec<f64> = [Some(fourier_value), devinatz_value, chebyshev_value, h12_value]
        .into_iter()
        .flatten()
        .collect();
    values.sort_by(|a, b| a.partial_cmp(b).expect("finite variance values"));
    let max_pairwise_gap = values.last().unwrap() - values.first().unwrap();
    Ok(VarianceReport {
        fourier_value,
        devinatz_value,
        chebyshev_value,
        h12_value,
        max_pairwise_gap,
    })
}
