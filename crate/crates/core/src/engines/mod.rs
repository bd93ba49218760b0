//! Evaluation strategies for Φ(z, s, a).
//!
//! | engine | region |
//! |---|---|
//! | [`eval_series_direct`] | `|z| < 1` |
//! | [`eval_near_one`] | `|ln z| < 2π`, `s ∉ {1, 2, …}` |
//! | [`eval_integer_s_large_z`] | `|z| > 1`, integer `s` |
//! | [`eval_main_theorem`] | `|z| > 1`, non-integer `s` |
//! | [`eval_symmetric_igamma`] | `|z| > 1`, any `s` with finite Γ(s) |
//! | [`eval_fl_expansion`] | `|z| > 1`, comparison only |
//! | [`eval_auto`] | everywhere, picks one of the above |
//!
//! Every large-`z` engine works with `L = ln(−z)` from
//! [`log_neg_z`](crate::kernel::log_neg_z). When `Im L > 0` it evaluates the
//! conjugate problem `(z̄, s̄, ā)` on the flipped cut side and conjugates the
//! result, so the formulas only ever see `Im L ≤ 0`. There
//! `e^{−πis} (n − a)^{−s}` and `L^s` carry compatible branches.
//!
//! `abs_err_estimate` is always an order estimate with implied constant 1,
//! never a bound.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::kernel::log_neg_z;
use crate::{LerchError, Result};

mod auto;
mod cache;
mod fl;
mod large_z;
mod series;
mod symmetric;

pub use crate::kernel::CutSide;
pub use auto::{eval_auto, eval_engine};
pub use cache::cached_shifted_coeffs;
pub use fl::{eval_fl_expansion, fl_log_term_magnitudes};
pub use large_z::{
    choose_optimal_m, eval_integer_s_large_z, eval_main_theorem, integer_s_tail_len,
    m_series_partial_sums, remainder_estimate, unsubtracted_term_magnitudes,
};
pub(crate) use large_z::residue_tail;
pub use series::{eval_near_one, eval_series_direct};
pub use symmetric::{eval_symmetric_igamma, symmetric_b_part};

/// Parameters `(z, s, a)` plus the side of the cut used for real `z > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LerchPoint {
    pub z: Complex64,
    pub s: Complex64,
    pub a: Complex64,
    #[serde(default)]
    pub cut_side: CutSide,
}

impl LerchPoint {
    pub fn new(z: Complex64, s: Complex64, a: Complex64) -> Result<Self> {
        Self::with_side(z, s, a, CutSide::default())
    }

    pub fn with_side(z: Complex64, s: Complex64, a: Complex64, cut_side: CutSide) -> Result<Self> {
        for (name, v) in [("z", z), ("s", s), ("a", a)] {
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(LerchError::domain("LerchPoint", format!("{name} is not finite")));
            }
        }
        Ok(Self { z, s, a, cut_side })
    }

    /// `(z̄, s̄, ā)` on the other side of the cut.
    pub fn conj(&self) -> Self {
        Self {
            z: self.z.conj(),
            s: self.s.conj(),
            a: self.a.conj(),
            cut_side: self.cut_side.flip(),
        }
    }

    /// Same point with `a` replaced.
    pub fn with_a(&self, a: Complex64) -> Self {
        Self { a, ..*self }
    }

    /// True when `z` is real and greater than one.
    pub fn on_cut(&self) -> bool {
        self.z.im == 0.0 && self.z.re > 1.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EngineKind {
    Direct,
    NearOne,
    IntegerS,
    MainTheorem,
    SymmetricIgamma,
    FlExpansion,
    Factorial,
    Oracle,
}

impl EngineKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EngineKind::Direct => "direct",
            EngineKind::NearOne => "near_one",
            EngineKind::IntegerS => "integer_s",
            EngineKind::MainTheorem => "main_theorem",
            EngineKind::SymmetricIgamma => "symmetric_igamma",
            EngineKind::FlExpansion => "fl_expansion",
            EngineKind::Factorial => "factorial",
            EngineKind::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WarningTag {
    /// An iteration or term cap stopped a loop before its tolerance was met.
    IterationCap,
    /// A term under- or overflowed and was dropped.
    Underflow,
    /// A stopping rule or estimate is heuristic.
    Heuristic,
    /// The dispatcher tried another engine.
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Warning {
    pub tag: WarningTag,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EngineReport {
    pub value: Complex64,
    pub abs_err_estimate: f64,
    pub n_terms: usize,
    pub m_terms: usize,
    pub engine: EngineKind,
    pub warnings: Vec<Warning>,
}

impl EngineReport {
    pub(crate) fn new(engine: EngineKind, value: Complex64, abs_err_estimate: f64) -> Self {
        Self {
            value,
            abs_err_estimate: if abs_err_estimate.is_finite() {
                abs_err_estimate.abs()
            } else {
                f64::MAX
            },
            n_terms: 0,
            m_terms: 0,
            engine,
            warnings: Vec::new(),
        }
    }

    pub(crate) fn warn(&mut self, tag: WarningTag, message: impl Into<String>) {
        self.warnings.push(Warning {
            tag,
            message: message.into(),
        });
    }

    pub fn hit_cap(&self) -> bool {
        self.warnings.iter().any(|w| w.tag == WarningTag::IterationCap)
    }

    pub(crate) fn conj(mut self) -> Self {
        self.value = self.value.conj();
        self
    }
}

/// Large-`z` working frame: the point with `Im ln(−z) ≤ 0`, its logarithm,
/// and whether the caller's point was conjugated to get there.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Frame {
    pub p: LerchPoint,
    pub l: Complex64,
    pub conjugated: bool,
}

impl Frame {
    pub fn new(p: &LerchPoint) -> Result<Self> {
        let l = log_neg_z(p.z, p.cut_side)?.value;
        if l.im > 0.0 {
            let q = p.conj();
            Ok(Self {
                p: q,
                l: l.conj(),
                conjugated: true,
            })
        } else {
            Ok(Self {
                p: *p,
                l,
                conjugated: false,
            })
        }
    }

    pub fn finish(&self, r: EngineReport) -> EngineReport {
        if self.conjugated {
            r.conj()
        } else {
            r
        }
    }
}

pub(crate) fn require_large_z(p: &LerchPoint, op: &'static str) -> Result<()> {
    if p.z.norm() <= 1.0 {
        return Err(LerchError::domain(op, "requires |z| > 1"));
    }
    if p.a.re <= 0.0 {
        return Err(LerchError::domain(op, "requires Re a > 0"));
    }
    if crate::kernel::nearest_integer(p.a, 0.0).is_some() {
        return Err(LerchError::domain(op, "a is an integer"));
    }
    Ok(())
}
