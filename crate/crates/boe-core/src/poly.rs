//! Dense univariate polynomials over the shared coefficient ring.
//!
//! Coefficients are stored in ascending degree order with trailing zeros
//! trimmed, so `degree` is the length minus one and the zero polynomial is
//! the empty vector (reported as degree 0 for band-arithmetic purposes).

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::Coeff;

/// A real polynomial `c_0 + c_1 x + … + c_d x^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> RealPoly<T> {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = T::one();
        RealPoly { coeffs }
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1)
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| T::ratio(k as i64, 1) * c.clone())
            .collect();
        Self::new(coeffs)
    }

    /// Largest absolute coefficient, as `f64` (growth-bound ingredient).
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64())
            .fold(0.0, f64::max)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }
}

/// Chebyshev polynomial of the first kind, `T_k`, by the three-term
/// recurrence `T_{k+1} = 2x T_k − T_{k−1}` (exact in rational mode).
pub fn chebyshev_t<T: Coeff>(k: usize) -> RealPoly<T> {
    let mut prev: RealPoly<T> = RealPoly::constant(T::one());
    if k == 0 {
        return prev;
    }
    let mut cur: RealPoly<T> = RealPoly::x();
    let two_x: RealPoly<T> = RealPoly::x().scale(&T::ratio(2, 1));
    for _ in 1..k {
        let next = two_x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use num_rational::BigRational;

    #[test]
    fn chebyshev_small_table() {
        // T_2 = 2x² − 1, T_3 = 4x³ − 3x.
        let t2: RealPoly<BigRational> = chebyshev_t(2);
        assert_eq!(t2.coeff(0), rat(-1, 1));
        assert_eq!(t2.coeff(2), rat(2, 1));
        let t3: RealPoly<BigRational> = chebyshev_t(3);
        assert_eq!(t3.coeff(1), rat(-3, 1));
        assert_eq!(t3.coeff(3), rat(4, 1));
    }

    #[test]
    fn chebyshev_satisfies_cosine_identity() {
        // T_5(cos θ) = cos 5θ at a few angles.
        let t5: RealPoly<f64> = chebyshev_t(5);
        for &theta in &[0.3, 1.1, 2.9] {
            let lhs = t5.eval(&libm::cos(theta));
            assert!((lhs - libm::cos(5.0 * theta)).abs() < 1e-12);
        }
    }

    #[test]
    fn derivative_and_eval() {
        // d/dx (x³ − x) = 3x² − 1 at x = 2 → 11.
        let p: RealPoly<BigRational> =
            RealPoly::new(vec![rat(0, 1), rat(-1, 1), rat(0, 1), rat(1, 1)]);
        assert_eq!(p.derivative().eval(&rat(2, 1)), rat(11, 1));
    }
}
