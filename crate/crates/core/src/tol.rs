//! Tolerance policy.
//!
//! The geometry itself fixes no thresholds, so every comparison in the crate
//! routes through this module. Comparisons of invariants use
//! `max(abs, rel · scale)`; isotropy and orthogonality tests are relative to
//! the scale of the lifts involved.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default absolute tolerance for invariant comparisons.
pub const DEFAULT_ABS_TOL: f64 = 1e-9;
/// Default relative tolerance for invariant comparisons.
pub const DEFAULT_REL_TOL: f64 = 1e-7;
/// Default relative threshold below which `⟨v,v⟩/‖v‖²` counts as isotropic.
pub const DEFAULT_EPS_ISOTROPY: f64 = 1e-9;
/// Default relative threshold below which a Hermitian product counts as zero.
pub const DEFAULT_EPS_ORTHOGONAL: f64 = 1e-9;
/// Default relative singular-value cutoff for rank and regularity tests.
pub const DEFAULT_EPS_RANK: f64 = 1e-9;
/// Inverse-trig arguments may exceed their domain by at most this much before
/// the excursion is treated as a bug instead of roundoff.
pub const TRIG_CLAMP: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub abs: f64,
    pub rel: f64,
    pub eps_isotropy: f64,
    pub eps_orthogonal: f64,
    pub eps_rank: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            abs: DEFAULT_ABS_TOL,
            rel: DEFAULT_REL_TOL,
            eps_isotropy: DEFAULT_EPS_ISOTROPY,
            eps_orthogonal: DEFAULT_EPS_ORTHOGONAL,
            eps_rank: DEFAULT_EPS_RANK,
        }
    }
}

impl Tolerances {
    /// `|a - b| ≤ max(abs, rel · max(|a|, |b|))`.
    pub fn close(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.abs.max(self.rel * a.abs().max(b.abs()))
    }

    /// Allowed deviation at the given scale.
    pub fn at_scale(&self, scale: f64) -> f64 {
        self.abs.max(self.rel * scale.abs())
    }
}

/// `acos` with boundary clamping: arguments within [`TRIG_CLAMP`] of ±1 are
/// clamped, larger excursions are reported as errors.
pub fn checked_acos(x: f64) -> Result<f64> {
    if x.abs() <= 1.0 {
        Ok(x.acos())
    } else if x.abs() <= 1.0 + TRIG_CLAMP {
        Ok(x.clamp(-1.0, 1.0).acos())
    } else {
        Err(Error::TrigDomain { arg: x })
    }
}

/// `acosh` with the same clamp policy at the lower boundary 1.
pub fn checked_acosh(x: f64) -> Result<f64> {
    if x >= 1.0 {
        Ok(x.acosh())
    } else if x >= 1.0 - TRIG_CLAMP {
        Ok(0.0)
    } else {
        Err(Error::TrigDomain { arg: x })
    }
}
