//! Evaluation of the Lerch transcendent
//!
//! ```text
//! Φ(z, s, a) = Σ_{n≥0} zⁿ / (a + n)ˢ
//! ```
//!
//! across the whole complex `z`-plane. Besides the classical engines (the
//! defining series, the expansion about the branch point `z = 1`) the crate
//! carries a family of large-`z` engines built on the split of Φ into a
//! branch-point contribution `B(z, s, a)` and a convergent residue series in
//! powers of `1/z`:
//!
//! * a closed form for integer `s`, where the logarithmic series terminates;
//! * the pole-subtracted, optimally truncated approximation with error
//!   `O(z^{-N-1})` ([`engines::eval_main_theorem`]);
//! * the slowly convergent symmetric incomplete-gamma expansion of `B`;
//! * the Ferreira–López two-series expansion, kept for comparison;
//! * a convergent factorial-type series for `B` ([`factorial`]).
//!
//! An independent [`oracle`] (quadrature of the real-axis integral
//! representation plus compensated series summation) supplies reference
//! values for tests and diagnostics.
//!
//! Branch conventions: `ln(-z)` is taken with `arg(-z) ∈ (-π, π)`; on the cut
//! `z ∈ [1, ∞)` the side is selected by [`CutSide`], default
//! [`CutSide::Above`] (the limit `z + i0`, `arg(-z) = -π`). Powers are
//! `(-z)^a := exp(a ln(-z))`.

pub mod coeffs;
pub mod engines;
mod error;
pub mod factorial;
pub mod kernel;
pub mod oracle;
pub mod quad;
pub mod sum;

pub use engines::{CutSide, EngineKind, EngineReport, LerchPoint};
pub use error::{LerchError, Result};
pub use num_complex::Complex64;

/// Shorthand for building a complex number.
#[inline]
pub fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
