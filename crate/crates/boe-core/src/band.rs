//! Band matrices: semi-infinite recurrence matrices `J`, their polynomial
//! images `F(J)`, and bi-infinite limit matrices, all behind one entry
//! interface.
//!
//! A matrix of bandwidth `W` has `entry(i, j) = 0` whenever `|i − j| ≥ W`.
//! Entries come either from a closed-form generator (a pure function of the
//! index pair) or from a stored dense window with a declared origin;
//! re-querying a stored entry is bit-identical by construction.
//!
//! Polynomial functional calculus is exact on any requested window: the
//! window is enlarged by `deg F · (W − 1)` on each side (clamped at row 0 for
//! semi-infinite matrices, where the enlargement is not needed for
//! exactness), the polynomial is evaluated by dense Horner multiplication on
//! the enlargement, and the requested window is cut back out. Band locality
//! makes the result equal to the true semi-/bi-infinite product.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::poly::RealPoly;
use crate::scalar::Coeff;
use crate::{mathx, Error, Result};

/// Index extent of a band matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extent {
    /// Rows and columns indexed by 0, 1, 2, …
    SemiInfinite,
    /// Rows and columns indexed by all of ℤ.
    BiInfinite,
}

/// Entry growth envelope `|M(N+i, N+j)| ≤ C · exp(α · max{0, i, j})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthProfile {
    pub c: f64,
    pub alpha: f64,
}

impl GrowthProfile {
    /// `C > 0`, `α ≥ 0`.
    pub fn new(c: f64, alpha: f64) -> Result<Self> {
        if !(c > 0.0) {
            return Err(Error::Invalid("growth constant C must be positive"));
        }
        if !(alpha >= 0.0) {
            return Err(Error::Invalid("growth rate alpha must be nonnegative"));
        }
        Ok(GrowthProfile { c, alpha })
    }
}

type Generator<T> = Arc<dyn Fn(i64, i64) -> T + Send + Sync>;

enum Source<T> {
    Generator(Generator<T>),
    Window {
        /// First row/column index of the stored square block.
        origin: i64,
        /// Side length of the stored block.
        size: usize,
        /// Row-major entries.
        data: Vec<T>,
    },
}

/// A band matrix over the coefficient ring `T`.
pub struct BandMatrix<T> {
    extent: Extent,
    bandwidth: usize,
    source: Source<T>,
    label: String,
}

impl<T: Coeff> BandMatrix<T> {
    /// Matrix defined by a closed-form entry generator. The generator is
    /// masked by the band: indices with `|i − j| ≥ W` return zero without
    /// consulting it.
    pub fn from_fn(
        extent: Extent,
        bandwidth: usize,
        label: impl Into<String>,
        entries: impl Fn(i64, i64) -> T + Send + Sync + 'static,
    ) -> Self {
        assert!(bandwidth >= 1, "bandwidth must be at least 1");
        BandMatrix {
            extent,
            bandwidth,
            source: Source::Generator(Arc::new(entries)),
            label: label.into(),
        }
    }

    /// Matrix backed by a stored dense square window starting at `origin`.
    pub fn from_window(
        extent: Extent,
        bandwidth: usize,
        origin: i64,
        rows: Vec<Vec<T>>,
    ) -> Self {
        assert!(bandwidth >= 1, "bandwidth must be at least 1");
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "window must be square");
        if extent == Extent::SemiInfinite {
            assert!(origin >= 0, "semi-infinite window cannot start below row 0");
        }
        let data = rows.into_iter().flatten().collect();
        BandMatrix {
            extent,
            bandwidth,
            source: Source::Window { origin, size, data },
            label: String::from("window"),
        }
    }

    /// Random band matrix with all in-band entries i.i.d. uniform on
    /// [−1, 1], generated by a counter-based hash of `(seed, i, j)` so the
    /// matrix is infinite, deterministic, and storage-free.
    pub fn random_uniform(extent: Extent, bandwidth: usize, seed: u64) -> BandMatrix<f64> {
        BandMatrix::from_fn(extent, bandwidth, format!("random(w={bandwidth})"), move |i, j| {
            let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
            for word in [i as u64, j as u64] {
                h ^= word.wrapping_mul(0xbf58_476d_1ce4_e5b9);
                h = splitmix64(h);
            }
            // 53 uniform bits → [0,1) → [−1,1).
            ((h >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        })
    }

    pub fn extent(&self) -> Extent {
        self.extent
    }

    /// Declared bandwidth `W`: entries vanish when `|i − j| ≥ W`.
    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Entry `(i, j)`.
    ///
    /// Panics on a negative index of a semi-infinite matrix and on reads
    /// outside a stored window; use [`BandMatrix::checked_entry`] to probe.
    pub fn entry(&self, i: i64, j: i64) -> T {
        match self.checked_entry(i, j) {
            Ok(v) => v,
            Err(Error::WindowUnderflow) => {
                panic!("negative index ({i}, {j}) on semi-infinite matrix '{}'", self.label)
            }
            Err(_) => panic!(
                "entry ({i}, {j}) outside the stored window of matrix '{}'",
                self.label
            ),
        }
    }

    /// Entry `(i, j)` or the reason it is unavailable.
    pub fn checked_entry(&self, i: i64, j: i64) -> Result<T> {
        if self.extent == Extent::SemiInfinite && (i < 0 || j < 0) {
            return Err(Error::WindowUnderflow);
        }
        if (i - j).unsigned_abs() >= self.bandwidth as u64 {
            return Ok(T::zero());
        }
        match &self.source {
            Source::Generator(f) => Ok(f(i, j)),
            Source::Window { origin, size, data } => {
                let (lo, hi) = (*origin, *origin + *size as i64);
                if i < lo || i >= hi || j < lo || j >= hi {
                    return Err(Error::OutsideWindow);
                }
                let (r, c) = ((i - lo) as usize, (j - lo) as usize);
                Ok(data[r * size + c].clone())
            }
        }
    }

    /// The stored window `(origin, size, row-major data)` if this matrix is
    /// window-backed.
    pub fn window_view(&self) -> Option<(i64, usize, &[T])> {
        match &self.source {
            Source::Window { origin, size, data } => Some((*origin, *size, data)),
            Source::Generator(_) => None,
        }
    }

    /// The dense principal `N×N` block (rows and columns `0..N`), realizing
    /// the finite-rank projection the cumulant formulas truncate by.
    ///
    /// Bi-infinite matrices are accepted only when window-backed (the window
    /// origin anchors the index grid); a bi-infinite generator view has no
    /// distinguished row 0 for this purpose and errors as unanchored.
    pub fn principal_block(&self, n: usize) -> Result<Dense<T>> {
        assert!(n >= 1, "principal block needs N ≥ 1");
        if self.extent == Extent::BiInfinite && matches!(self.source, Source::Generator(_)) {
            return Err(Error::Unanchored);
        }
        let mut out = Dense::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.checked_entry(i as i64, j as i64)?);
            }
        }
        Ok(out)
    }

    /// Exact `F(J)` on the requested window, as a window-backed band matrix
    /// of bandwidth `deg F · (W − 1) + 1`.
    ///
    /// The computation enlarges the window by `deg F · (W − 1)` on each side
    /// (clamped at 0 for semi-infinite input, which is exact because row 0
    /// really is the boundary), evaluates the polynomial by dense Horner
    /// steps, and extracts the inner window.
    pub fn apply_polynomial(&self, f: &RealPoly<T>, window: core::ops::Range<i64>) -> Result<BandMatrix<T>> {
        if window.is_empty() {
            return Err(Error::Invalid("empty window"));
        }
        if self.extent == Extent::SemiInfinite && window.start < 0 {
            return Err(Error::WindowUnderflow);
        }
        let d = f.degree() as i64;
        let pad = d * (self.bandwidth as i64 - 1);
        let mut lo = window.start - pad;
        let hi = window.end + pad;
        if self.extent == Extent::SemiInfinite {
            lo = lo.max(0);
        }
        let size = (hi - lo) as usize;

        // Dense copy of J on the enlarged window.
        let mut j_dense = Dense::zeros(size);
        for r in 0..size {
            for c in 0..size {
                let (i, j) = (lo + r as i64, lo + c as i64);
                if (i - j).unsigned_abs() < self.bandwidth as u64 {
                    j_dense.set(r, c, self.checked_entry(i, j)?);
                }
            }
        }

        // Horner: acc ← acc·J + c_k·I, from the top coefficient down.
        let mut acc = Dense::zeros(size);
        let deg = f.degree();
        if !f.is_zero() {
            for r in 0..size {
                acc.set(r, r, f.coeff(deg));
            }
            for k in (0..deg).rev() {
                acc = acc.mul(&j_dense);
                let c = f.coeff(k);
                for r in 0..size {
                    let v = acc.get(r, r).clone() + c.clone();
                    acc.set(r, r, v);
                }
            }
        }

        // Cut the requested window back out.
        let out_size = (window.end - window.start) as usize;
        let off = (window.start - lo) as usize;
        let mut rows = Vec::with_capacity(out_size);
        for r in 0..out_size {
            let mut row = Vec::with_capacity(out_size);
            for c in 0..out_size {
                row.push(acc.get(r + off, c + off).clone());
            }
            rows.push(row);
        }
        let out_bandwidth = (d as usize) * (self.bandwidth - 1) + 1;
        Ok(BandMatrix::from_window(self.extent, out_bandwidth.max(1), window.start, rows)
            .with_label(format!("poly(deg {}) of {}", f.degree(), self.label)))
    }

    /// Check `|M(N+i, N+j)| ≤ C · exp(α · max{0, i, j})` for all `(i, j)` in
    /// `window²` (indices below row 0 of a semi-infinite matrix are skipped —
    /// there is nothing there to bound).
    pub fn verify_growth(
        &self,
        g: &GrowthProfile,
        n: i64,
        window: core::ops::Range<i64>,
    ) -> Result<bool> {
        for i in window.clone() {
            for j in window.clone() {
                let (r, c) = (n + i, n + j);
                if self.extent == Extent::SemiInfinite && (r < 0 || c < 0) {
                    continue;
                }
                let v = self.checked_entry(r, c)?.abs().to_f64();
                let bound = g.c * mathx::exp(g.alpha * (i.max(j).max(0) as f64));
                if v > bound {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A dense square matrix over `T` (internal workhorse for windowed products,
/// principal blocks, and the trace formulas; rationals rule out off-the-shelf
/// float containers).
#[derive(Debug, Clone, PartialEq)]
pub struct Dense<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Coeff> Dense<T> {
    pub fn zeros(n: usize) -> Self {
        Dense { n, data: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.n {
            acc += self.get(i, i).clone();
        }
        acc
    }

    /// Top-left `k×k` corner.
    pub fn corner(&self, k: usize) -> Self {
        assert!(k <= self.n);
        let mut out = Self::zeros(k);
        for i in 0..k {
            for j in 0..k {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        out
    }

    /// Rows as vectors (report serialization).
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::right_limit::free_jacobi;
    use crate::scalar::rat;
    use num_rational::BigRational;

    #[test]
    fn free_jacobi_principal_block() {
        // N=2 block of the free Jacobi matrix: [[0, 1/2], [1/2, 0]].
        let j = free_jacobi::<BigRational>();
        let b = j.principal_block(2).unwrap();
        assert_eq!(*b.get(0, 0), rat(0, 1));
        assert_eq!(*b.get(0, 1), rat(1, 2));
        assert_eq!(*b.get(1, 0), rat(1, 2));
        let b1 = j.principal_block(1).unwrap();
        assert_eq!(*b1.get(0, 0), rat(0, 1));
    }

    #[test]
    fn square_of_free_jacobi_entries() {
        // (J²)_{ii} = 1/2 for i ≥ 1, (J²)_{00} = 1/4: the two-step path count.
        let j = free_jacobi::<BigRational>();
        let f = RealPoly::monomial(2);
        let m = j.apply_polynomial(&f, 0..6).unwrap();
        assert_eq!(m.entry(0, 0), rat(1, 4));
        for i in 1..6 {
            assert_eq!(m.entry(i, i), rat(1, 2));
        }
        assert_eq!(m.entry(0, 2), rat(1, 4));
        assert_eq!(m.bandwidth(), 3);
    }

    #[test]
    fn identity_polynomial_is_identity_on_windows() {
        let j = free_jacobi::<BigRational>();
        let m = j.apply_polynomial(&RealPoly::x(), 2..7).unwrap();
        for i in 2..7 {
            for k in 2..7 {
                assert_eq!(m.entry(i, k), j.entry(i, k));
            }
        }
    }

    #[test]
    fn padding_independence() {
        // Computing F(J) on a window directly or cutting it from a larger
        // window gives bit-identical entries.
        let j = BandMatrix::<f64>::random_uniform(Extent::SemiInfinite, 3, 99);
        let f = RealPoly::new(vec![0.0, -1.0, 0.0, 1.0]);
        let small = j.apply_polynomial(&f, 4..9).unwrap();
        let large = j.apply_polynomial(&f, 0..14).unwrap();
        for i in 4..9 {
            for k in 4..9 {
                assert_eq!(small.entry(i, k), large.entry(i, k));
            }
        }
    }

    #[test]
    fn laurent_input_constant_diagonals() {
        use crate::laurent::LaurentPoly;
        // F(L(s)) is again Laurent: constant along diagonals in the interior.
        let s = LaurentPoly::from_pairs(vec![(-1, 0.5_f64), (1, 0.5)]);
        let l = s.laurent_matrix();
        let f = RealPoly::new(vec![0.0, 0.0, 1.0]);
        let m = l.apply_polynomial(&f, -5..6).unwrap();
        for off in -2..=2i64 {
            let mut vals = Vec::new();
            for i in -3..3i64 {
                let j_idx = i - off;
                if (-5..6).contains(&i) && (-5..6).contains(&j_idx) {
                    vals.push(m.entry(i, j_idx));
                }
            }
            for w in vals.windows(2) {
                assert!((w[0] - w[1]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn growth_profile_checks() {
        let j = free_jacobi::<f64>();
        let ok = GrowthProfile::new(1.0, 0.0).unwrap();
        assert!(j.verify_growth(&ok, 10, -5..6).unwrap());
        let tight = GrowthProfile::new(0.1, 0.0).unwrap();
        assert!(!j.verify_growth(&tight, 10, -5..6).unwrap());
        assert!(GrowthProfile::new(0.0, 1.0).is_err());
    }

    #[test]
    fn bandwidth_is_enforced_over_generators() {
        // The generator is masked outside the band.
        let m = BandMatrix::from_fn(Extent::BiInfinite, 2, "ones", |_, _| 1.0_f64);
        assert_eq!(m.entry(3, 3), 1.0);
        assert_eq!(m.entry(3, 5), 0.0);
    }

    #[test]
    fn unanchored_bi_infinite_block_errors() {
        let m = BandMatrix::from_fn(Extent::BiInfinite, 2, "g", |_, _| 1.0_f64);
        assert_eq!(m.principal_block(3).unwrap_err(), Error::Unanchored);
    }

    #[test]
    fn stored_window_is_bit_identical() {
        let j = BandMatrix::<f64>::random_uniform(Extent::SemiInfinite, 2, 5);
        let w = j.apply_polynomial(&RealPoly::x(), 0..8).unwrap();
        for i in 0..8 {
            assert_eq!(w.entry(i, i), j.entry(i, i));
            assert_eq!(w.entry(i, i), w.entry(i, i));
        }
        assert!(w.checked_entry(9, 9).is_err());
    }
}
