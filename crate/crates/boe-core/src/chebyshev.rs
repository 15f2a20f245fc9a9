//! The doubled-Chebyshev basis that diagonalizes the limiting covariance.
//!
//! On the arcsine right-limit, the covariance of monomial statistics is
//! `Cov(x^n, x^m) = Σ_{k≥1} k α^n_k α^m_k` with
//! `α^n_k = 2^{−n} C(n, (n−k)/2)` (same-parity `k` only) — in matrix form
//! `A Δ Aᵀ` with `Δ = diag(0, 1, …)`. The basis `Y_k` that pulls the
//! covariance back to `Δ` is `Y_0 = 0`, `Y_k = 2T_k`: centered statistics of
//! `Y_k` are asymptotically independent Gaussians with variance `k`.
//!
//! Everything here is exact rational arithmetic, and every identity is
//! rebuilt from scratch rather than assumed: the basis is recovered by
//! triangular elimination from the monomials, the covariance by polarization
//! of the Fourier variance formula, the Gram matrix from closed-form
//! moments. Agreement across those routes is the content of the appendix
//! this module operationalizes.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::binomial;
use crate::laurent::{variance_fourier, LaurentPoly};
use crate::poly::{chebyshev_t, RealPoly};
use crate::right_limit::arcsine_moments;
use crate::scalar::rat;
use crate::{Error, Result};

type Mat = Vec<Vec<BigRational>>;

/// Monomial-to-basis coefficient `α^n_k = 2^{−n} C(n, (n−k)/2)` for
/// `0 ≤ k ≤ n` of the same parity; zero otherwise.
pub fn alpha_nk(n: usize, k: usize) -> BigRational {
    if k > n || (n - k) % 2 != 0 {
        return BigRational::zero();
    }
    let scale = BigRational::new(1.into(), num_bigint::BigInt::from(2u64).pow(n as u32));
    scale * BigRational::from(binomial(n as u64, ((n - k) / 2) as u64))
}

/// The lower-triangular change-of-basis matrix `A[n][k] = α^n_k`,
/// `0 ≤ n, k ≤ n_max`.
pub fn coefficient_matrix(n_max: usize) -> Mat {
    (0..=n_max).map(|n| (0..=n_max).map(|k| alpha_nk(n, k)).collect()).collect()
}

/// The basis produced by eliminating monomials against `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevBasis {
    n_max: usize,
    a: Mat,
    /// `Y_0, …, Y_{n_max}` solved from `x^n = Σ_{k≥1} α^n_k Y_k + α^n_0`.
    y: Vec<RealPoly<BigRational>>,
    /// Centering constants `c_n = α^n_0`.
    c: Vec<BigRational>,
}

/// Solve the triangular system for the basis: knowing `Y_0, …, Y_{n−1}`,
/// `Y_n = 2^n (x^n − c_n − Σ_{k<n} α^n_k Y_k)`. This never references the
/// Chebyshev polynomials — that `Y_n` comes out equal to `2T_n` is a
/// checkable theorem, not an input.
pub fn build_basis(n_max: usize) -> ChebyshevBasis {
    let a = coefficient_matrix(n_max);
    let c: Vec<BigRational> = (0..=n_max).map(|n| alpha_nk(n, 0)).collect();
    let mut y: Vec<RealPoly<BigRational>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut rhs: RealPoly<BigRational> =
            RealPoly::monomial(n).sub(&RealPoly::constant(c[n].clone()));
        for (k, yk) in y.iter().enumerate().skip(1) {
            rhs = rhs.sub(&yk.scale(&a[n][k]));
        }
        assert!(n <= 62, "basis order capped well below exactness limits");
        let two_pow = rat(1i64 << n, 1);
        y.push(rhs.scale(&two_pow));
    }
    ChebyshevBasis { n_max, a, y, c }
}

impl ChebyshevBasis {
    pub fn order(&self) -> usize {
        self.n_max
    }

    pub fn matrix(&self) -> &Mat {
        &self.a
    }

    pub fn basis_polynomial(&self, k: usize) -> &RealPoly<BigRational> {
        &self.y[k]
    }

    pub fn centering(&self, n: usize) -> &BigRational {
        &self.c[n]
    }

    /// Does the solved basis coincide with the doubled Chebyshev
    /// polynomials (`Y_0 = 0`, `Y_k = 2T_k`)?
    pub fn matches_doubled_chebyshev(&self) -> bool {
        if !self.y[0].is_zero() {
            return false;
        }
        (1..=self.n_max).all(|k| {
            let doubled = chebyshev_t::<BigRational>(k).scale(&rat(2, 1));
            self.y[k] == doubled
        })
    }

    /// `x^n == Σ_{k≥1} α^n_k Y_k + c_n` for every `n` — the expansion the
    /// solve inverted, re-checked forwards.
    pub fn monomial_identity_holds(&self) -> bool {
        (0..=self.n_max).all(|n| {
            let mut acc = RealPoly::constant(self.c[n].clone());
            for k in 1..=self.n_max {
                acc = acc.add(&self.y[k].scale(&self.a[n][k]));
            }
            acc == RealPoly::monomial(n)
        })
    }

    /// The covariance matrix `A Δ Aᵀ`, `Δ = diag(0, 1, …, n_max)`.
    pub fn covariance(&self) -> Mat {
        let size = self.n_max + 1;
        let mut out = vec![vec![BigRational::zero(); size]; size];
        for n in 0..size {
            for m in 0..size {
                let mut acc = BigRational::zero();
                for k in 1..size {
                    acc += rat(k as i64, 1) * &self.a[n][k] * &self.a[m][k];
                }
                out[n][m] = acc;
            }
        }
        out
    }

    /// Gram matrix `∫ Y_n Y_m dμ` over the arcsine probability measure,
    /// evaluated through closed-form moments. Equals `2·I` away from the
    /// zero row and column.
    pub fn gram(&self) -> Mat {
        let moments = arcsine_moments(self.n_max);
        let size = self.n_max + 1;
        let mut out = vec![vec![BigRational::zero(); size]; size];
        for n in 0..size {
            for m in 0..=n {
                let product = self.y[n].mul(&self.y[m]);
                let mut acc = BigRational::zero();
                for (j, coeff) in product.coeffs().iter().enumerate() {
                    if !coeff.is_zero() {
                        acc += coeff * &moments[j];
                    }
                }
                out[n][m] = acc.clone();
                out[m][n] = acc;
            }
        }
        out
    }

    /// Inverse of the triangular coefficient matrix, by forward
    /// substitution.
    pub fn matrix_inverse(&self) -> Mat {
        let size = self.n_max + 1;
        let mut inv = vec![vec![BigRational::zero(); size]; size];
        for col in 0..size {
            for row in 0..size {
                let mut v = if row == col { BigRational::one() } else { BigRational::zero() };
                for k in 0..row {
                    v -= &self.a[row][k] * &inv[k][col];
                }
                inv[row][col] = v / &self.a[row][row];
            }
        }
        inv
    }

    /// `A^{−1} (A Δ Aᵀ) A^{−ᵀ}` — recovering the diagonal is the
    /// diagonalization statement run backwards.
    pub fn conjugated_covariance(&self) -> Mat {
        let inv = self.matrix_inverse();
        let cov = self.covariance();
        let tmp = mat_mul(&inv, &cov);
        let inv_t = mat_transpose(&inv);
        mat_mul(&tmp, &inv_t)
    }
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let rows = a.len();
    let inner = b.len();
    let cols = b[0].len();
    let mut out = vec![vec![BigRational::zero(); cols]; rows];
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    let add = &a[i][k] * &b[k][j];
                    out[i][j] += add;
                }
            }
        }
    }
    out
}

fn mat_transpose(a: &Mat) -> Mat {
    let rows = a.len();
    let cols = a[0].len();
    (0..cols).map(|j| (0..rows).map(|i| a[i][j].clone()).collect()).collect()
}

/// Covariance of `(x^n, x^m)` by polarization of the Fourier variance
/// formula on the arcsine symbol — the route through the symbol calculus,
/// sharing nothing with the matrix `A`.
pub fn polarized_covariance(n: usize, m: usize) -> BigRational {
    let s: LaurentPoly<BigRational> = LaurentPoly::arcsine();
    let xn: RealPoly<BigRational> = RealPoly::monomial(n);
    let xm: RealPoly<BigRational> = RealPoly::monomial(m);
    let sum = xn.add(&xm);
    let half = rat(1, 2);
    (variance_fourier(&sum, &s) - variance_fourier(&xn, &s) - variance_fourier(&xm, &s))
        * half
}

/// Outcome of running every identity in the appendix at one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisReport {
    pub n_max: usize,
    pub basis_is_doubled_chebyshev: bool,
    pub monomial_identity: bool,
    pub covariance_matches_polarization: bool,
    pub gram_is_doubled_identity: bool,
    pub conjugation_recovers_diagonal: bool,
}

impl BasisReport {
    pub fn all_hold(&self) -> bool {
        self.basis_is_doubled_chebyshev
            && self.monomial_identity
            && self.covariance_matches_polarization
            && self.gram_is_doubled_identity
            && self.conjugation_recovers_diagonal
    }
}

/// Check the full identity suite exactly at order `n_max`.
pub fn basis_report(n_max: usize) -> Result<BasisReport> {
    if n_max == 0 || n_max > 32 {
        return Err(Error::OrderOutOfRange);
    }
    let basis = build_basis(n_max);
    let size = n_max + 1;
    let cov = basis.covariance();
    let covariance_matches_polarization = (0..size)
        .all(|n| (0..size).all(|m| cov[n][m] == polarized_covariance(n, m)));
    let gram = basis.gram();
    let gram_is_doubled_identity = (0..size).all(|n| {
        (0..size).all(|m| {
            let expect = if n == m && n >= 1 { rat(2, 1) } else { BigRational::zero() };
            gram[n][m] == expect
        })
    });
    let conj = basis.conjugated_covariance();
    let conjugation_recovers_diagonal = (0..size).all(|n| {
        (0..size).all(|m| {
            let expect = if n == m { rat(n as i64, 1) } else { BigRational::zero() };
            conj[n][m] == expect
        })
    });
    Ok(BasisReport {
        n_max,
        basis_is_doubled_chebyshev: basis.matches_doubled_chebyshev(),
        monomial_identity: basis.monomial_identity_holds(),
        covariance_matches_polarization,
        gram_is_doubled_identity,
        conjugation_recovers_diagonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_values() {
        assert_eq!(alpha_nk(0, 0), rat(1, 1));
        assert_eq!(alpha_nk(1, 1), rat(1, 2));
        assert_eq!(alpha_nk(2, 0), rat(1, 2));
        assert_eq!(alpha_nk(2, 2), rat(1, 4));
        assert_eq!(alpha_nk(3, 1), rat(3, 8));
        assert_eq!(alpha_nk(3, 3), rat(1, 8));
        assert_eq!(alpha_nk(4, 0), rat(3, 8));
        // Parity and range gates.
        assert_eq!(alpha_nk(3, 2), rat(0, 1));
        assert_eq!(alpha_nk(2, 3), rat(0, 1));
        for n in 0..10 {
            assert_eq!(alpha_nk(n, n), BigRational::new(1.into(), (1i64 << n).into()));
        }
    }

    #[test]
    fn centering_constants() {
        let basis = build_basis(6);
        assert_eq!(*basis.centering(0), rat(1, 1));
        assert_eq!(*basis.centering(2), rat(1, 2));
        assert_eq!(*basis.centering(4), rat(3, 8));
        assert_eq!(*basis.centering(1), rat(0, 1));
        assert_eq!(*basis.centering(3), rat(0, 1));
    }

    #[test]
    fn elimination_lands_on_doubled_chebyshev() {
        let basis = build_basis(8);
        assert!(basis.basis_polynomial(0).is_zero());
        assert!(basis.matches_doubled_chebyshev());
        assert!(basis.monomial_identity_holds());
        // Spot check: Y_2 = 2(2x² − 1) = 4x² − 2.
        let y2 = basis.basis_polynomial(2);
        assert_eq!(y2.coeff(2), rat(4, 1));
        assert_eq!(y2.coeff(0), rat(-2, 1));
    }

    #[test]
    fn covariance_entries_and_polarization() {
        let basis = build_basis(5);
        let cov = basis.covariance();
        assert_eq!(cov[1][1], rat(1, 4));
        assert_eq!(cov[2][2], rat(1, 8));
        assert_eq!(cov[1][2], rat(0, 1));
        assert_eq!(cov[0][3], rat(0, 1));
        for n in 0..=5 {
            for m in 0..=5 {
                assert_eq!(cov[n][m], polarized_covariance(n, m), "({n},{m})");
            }
        }
    }

    #[test]
    fn gram_matrix_is_twice_the_identity_off_zero() {
        let basis = build_basis(6);
        let gram = basis.gram();
        for n in 0..=6 {
            for m in 0..=6 {
                let expect = if n == m && n >= 1 { rat(2, 1) } else { rat(0, 1) };
                assert_eq!(gram[n][m], expect, "({n},{m})");
            }
        }
    }

    #[test]
    fn conjugation_recovers_the_diagonal() {
        let basis = build_basis(6);
        let conj = basis.conjugated_covariance();
        for n in 0..=6 {
            for m in 0..=6 {
                let expect = if n == m { rat(n as i64, 1) } else { rat(0, 1) };
                assert_eq!(conj[n][m], expect, "({n},{m})");
            }
        }
    }

    #[test]
    fn full_report_holds_through_order_eight() {
        let report = basis_report(8).unwrap();
        assert!(report.all_hold(), "{report:?}");
        assert!(basis_report(0).is_err());
        assert!(basis_report(64).is_err());
    }
}
