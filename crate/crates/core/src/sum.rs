//! Compensated accumulation.
//!
//! [`CompensatedSum`] keeps a running sum as an unevaluated pair `hi + lo`
//! (Neumaier's variant of Kahan summation, applied per component), which is
//! the double-double addition of a double-precision term into a double-double
//! accumulator. Rounding errors of the additions are recovered exactly; the
//! result is accurate to about `ε · Σ|term|² / |Σ term|` rather than
//! `n · ε · Σ|term|`.

use num_complex::Complex64;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[derive(Debug, Clone, Copy, Default)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    #[inline]
    fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.hi, x);
        let lo = self.lo + e;
        let (hi, lo) = two_sum(s, lo);
        self.hi = hi;
        self.lo = lo;
    }
}

/// Complex accumulator with double-double components.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    re: Dd,
    im: Dd,
    abs_sum: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: Complex64) {
        self.re.add(x.re);
        self.im.add(x.im);
        self.abs_sum += x.norm();
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.hi + self.re.lo, self.im.hi + self.im.lo)
    }

    /// Σ|term|, the scale against which cancellation is judged.
    pub fn magnitude_sum(&self) -> f64 {
        self.abs_sum
    }
}

impl Extend<Complex64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = Complex64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl FromIterator<Complex64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = Complex64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        acc.extend(iter);
        acc
    }
}

/// Compensated sum of a sequence of complex terms.
pub fn compensated_sum<I: IntoIterator<Item = Complex64>>(terms: I) -> Complex64 {
    terms.into_iter().collect::<CompensatedSum>().value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_terms_lost_by_naive_summation() {
        let terms = [1e16, 1.0, -1e16, 1.0].map(|x| Complex64::new(x, -x));
        let naive: Complex64 = terms.iter().sum();
        let comp = compensated_sum(terms);
        assert_eq!(comp, Complex64::new(2.0, -2.0));
        assert_ne!(naive, comp);
    }

    #[test]
    fn harmonic_partial_sum() {
        // H_100000
        let h = 12.090_146_129_863_428;
        let fwd = compensated_sum((1..=100_000).map(|k| Complex64::new(1.0 / k as f64, 0.0)));
        assert!((fwd.re - h).abs() < 2e-15 * h);
    }
}
