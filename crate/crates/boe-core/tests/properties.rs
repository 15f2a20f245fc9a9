//! Randomized invariants of the exact calculus.
//!
//! Each property here is a structural fact the library's correctness leans
//! on — weight normalization, permutation-sum cancellations, bandwidth
//! bookkeeping, agreement between independent evaluation routes — exercised
//! on randomly drawn inputs rather than the hand-picked fixtures of the unit
//! suites.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::collection::vec;
use proptest::prelude::*;

use boe_core::band::{BandMatrix, Extent};
use boe_core::combinatorics::{
    binomial_identity_check, dhk_both_sides, factorial, lambda_n, mcl_symmetrized, mho,
    mho_hit_table, mobius_identity, rs_both_sides, spitzer_check, Composition,
};
use boe_core::cumulants::path_cumulant;
use boe_core::laurent::{
    fourier_coeff, fourier_coeff_quadrature, symbol_power_via_paths, LaurentPoly,
};
use boe_core::poly::RealPoly;
use boe_core::right_limit::extract_window;
use boe_core::scalar::rat;

/// A small exact rational: numerator in ±6, denominator in 1..=4.
fn small_rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// A zero-sum rational tuple of the given length (last entry forced).
fn zero_sum_tuple(len: usize) -> impl Strategy<Value = Vec<BigRational>> {
    vec(small_rational(), len - 1).prop_map(|mut head| {
        let sum = head.iter().fold(BigRational::zero(), |a, v| a + v);
        head.push(-sum);
        head
    })
}

proptest! {
    /// Checkpoint sets and compositions are the same data: `Ψ` and `Ψ⁻¹`
    /// invert each other, and the bitmask encoding survives the round trip.
    #[test]
    fn composition_roundtrip(
        (order, mask) in (2usize..=12).prop_flat_map(|n| (Just(n), 0u32..(1 << (n - 1))))
    ) {
        let checkpoints: Vec<usize> =
            (1..order).filter(|&c| mask & (1 << (c - 1)) != 0).collect();
        let c = Composition::from_checkpoints(order, checkpoints.clone()).unwrap();
        prop_assert_eq!(c.parts().iter().sum::<usize>(), order);
        prop_assert_eq!(c.mask(), mask);
        // Prefix sums of the parts recover the checkpoints…
        let mut acc = 0usize;
        let prefixes: Vec<usize> = c.parts()[..c.parts().len() - 1]
            .iter()
            .map(|&k| {
                acc += k;
                acc
            })
            .collect();
        prop_assert_eq!(&prefixes[..], &checkpoints[..]);
        // …and the composition-side constructor lands on the same value.
        let back = Composition::from_parts(c.parts().to_vec()).unwrap();
        prop_assert_eq!(back, c);
    }

    /// The checkpoint weights are a signed partition of unity, and the
    /// hit-table entry for the full index set agrees.
    #[test]
    fn checkpoint_weights_sum_to_one(n in 2usize..=10) {
        let total: BigRational = lambda_n(n)
            .iter()
            .map(mho)
            .fold(BigRational::zero(), |a, w| a + w);
        prop_assert_eq!(&total, &rat(1, 1));
        let table = mho_hit_table(n);
        prop_assert_eq!(&table[(1usize << (n - 1)) - 1], &total);
        prop_assert!(table[0].is_zero());
    }

    /// The symmetrized prefix functional on zero-sum data collapses to
    /// `|x_1|` at order two and cancels outright from order three on.
    #[test]
    fn symmetrized_prefix_cancellation(
        x in (2usize..=5).prop_flat_map(zero_sum_tuple)
    ) {
        let value = mcl_symmetrized(&x).unwrap();
        if x.len() == 2 {
            prop_assert_eq!(value, Signed::abs(&x[0]));
        } else {
            prop_assert!(value.is_zero(), "order {}: {}", x.len(), value);
        }
    }

    /// Dyson–Hunt–Kac: the symmetrized running maximum equals the weighted
    /// positive parts, for arbitrary (not necessarily zero-sum) data.
    #[test]
    fn dyson_hunt_kac_identity(
        x in (1usize..=5).prop_flat_map(|n| vec(small_rational(), n))
    ) {
        let (lhs, rhs) = dhk_both_sides(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Rudnick–Sarnak: the symmetrized maximum of a zero-sum vector equals
    /// the subset-sum expansion.
    #[test]
    fn rudnick_sarnak_identity(
        x in (2usize..=5).prop_flat_map(zero_sum_tuple)
    ) {
        let (lhs, rhs) = rs_both_sides(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Spitzer: expectation of the walk maximum equals the harmonically
    /// weighted positive parts, for a random finitely supported step law.
    #[test]
    fn spitzer_identity(
        values in vec(small_rational(), 2..=3),
        weights in vec(1i64..=5, 2..=3),
        n in 1usize..=4,
    ) {
        let k = values.len().min(weights.len());
        let mass: i64 = weights[..k].iter().sum();
        let distribution: Vec<(BigRational, BigRational)> = values[..k]
            .iter()
            .cloned()
            .zip(weights[..k].iter().map(|&w| rat(w, mass)))
            .collect();
        let (lhs, rhs) = spitzer_check(&distribution, n).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// The alternating composition sum telescopes away above order one.
    #[test]
    fn alternating_composition_sum_vanishes(n in 2usize..=12) {
        prop_assert!(mobius_identity(n).is_zero());
    }

    /// Finite differences: the n-th difference of a polynomial of degree at
    /// most n is `n!` times its leading coefficient.
    #[test]
    fn finite_difference_identity(
        (n, coeffs) in (0usize..=6).prop_flat_map(|n| {
            (Just(n), vec(small_rational(), 1..=n + 1))
        })
    ) {
        let r = RealPoly::new(coeffs);
        let (lhs, rhs) = binomial_identity_check(&r, n).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, BigRational::from(factorial(n as u64)) * r.coeff(n));
    }

    /// Powers of a Laurent symbol by closed-path counting agree with
    /// coefficient convolution.
    #[test]
    fn symbol_powers_by_paths(
        coeffs in vec(small_rational(), 7),
        n in 1usize..=4,
    ) {
        let s: LaurentPoly<BigRational> =
            LaurentPoly::from_pairs(coeffs.into_iter().enumerate().map(|(i, c)| (i as i64 - 3, c)));
        prop_assert_eq!(symbol_power_via_paths(&s, n), s.pow(n));
    }

    /// Trapezoid quadrature on the circle reproduces exact Fourier
    /// coefficients of a trigonometric polynomial once the grid resolves it.
    #[test]
    fn quadrature_recovers_fourier_modes(
        coeffs in vec(-2.0f64..2.0, 7),
        k in -5i64..=5,
    ) {
        let p: LaurentPoly<f64> =
            LaurentPoly::from_pairs(coeffs.into_iter().enumerate().map(|(i, c)| (i as i64 - 3, c)));
        let exact = fourier_coeff(&p, k);
        let quad = fourier_coeff_quadrature(&p, k, 32);
        prop_assert!((exact - quad).abs() < 1e-9 * (1.0 + exact.abs()));
    }

    /// `F(J)` of a degree-`d` polynomial on a bandwidth-`W` matrix is a band
    /// matrix of bandwidth `d(W−1)+1` whose window entries match the dense
    /// power computed on a sufficiently padded principal block — padding
    /// beyond that changes nothing.
    #[test]
    fn polynomial_bandwidth_and_padding(
        seed in any::<u64>(),
        w in 1usize..=3,
        d in 1usize..=3,
        extra in 0usize..=3,
    ) {
        let j = BandMatrix::<f64>::random_uniform(Extent::SemiInfinite, w, seed);
        let f: RealPoly<f64> = RealPoly::monomial(d);
        let window = 8i64;
        let b = j.apply_polynomial(&f, 0..window).unwrap();
        prop_assert_eq!(b.bandwidth(), d * (w - 1) + 1);

        let pad = window as usize + d * (w - 1) + extra;
        let block = j.principal_block(pad).unwrap();
        let mut dense = block.clone();
        for _ in 1..d {
            dense = dense.mul(&block);
        }
        for i in 0..window {
            for jj in 0..window {
                let direct = *dense.get(i as usize, jj as usize);
                prop_assert!(
                    (b.entry(i, jj) - direct).abs() < 1e-9,
                    "({i},{jj}): {} vs {direct}",
                    b.entry(i, jj)
                );
            }
        }
    }

    /// Flipping the sign of the statistic flips cumulants by `(−1)^n`.
    #[test]
    fn cumulant_sign_reversal(
        seed in 0u64..=1_000_000,
        w in 2usize..=3,
        n in 2usize..=3,
        threshold in 2i64..=5,
        coeffs in vec(small_rational(), 3),
    ) {
        let j = BandMatrix::from_fn(Extent::SemiInfinite, w, "hashed band", move |i, jj| {
            let h = seed
                .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                .wrapping_add((i as u64).wrapping_mul(31).wrapping_add(jj as u64));
            rat((h % 13) as i64 - 6, 1 + (h % 3) as i64)
        });
        let f = RealPoly::new(coeffs);
        prop_assume!(!f.is_zero());
        let plus = path_cumulant(&j, &f, n, threshold).unwrap();
        let minus = path_cumulant(&j, &f.neg(), n, threshold).unwrap();
        let expect = if n % 2 == 0 { plus } else { -plus };
        prop_assert_eq!(minus, expect);
    }

    /// A Laurent symbol survives the trip through its band matrix: windows
    /// have constant diagonals and read the symbol back exactly.
    #[test]
    fn symbol_roundtrip_through_band_matrix(
        coeffs in vec(small_rational(), 7),
        center in -4i64..=4,
    ) {
        let s: LaurentPoly<BigRational> =
            LaurentPoly::from_pairs(coeffs.into_iter().enumerate().map(|(i, c)| (i as i64 - 3, c)));
        let m = s.laurent_matrix();
        let radius = s.support_radius().max(1);
        let window = extract_window(&m, center, radius).unwrap();
        let back = window.constant_diagonal_symbol(0.0).expect("diagonals are constant");
        prop_assert_eq!(back, s);
    }
}
