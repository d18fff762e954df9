//! Principal branch of the Lambert W function on the real line.

use crate::{Error, Result};
use std::f64::consts::E;

/// The omega constant `W(1)`, the root of `w e^w = 1`.
pub const OMEGA: f64 = 0.567_143_290_409_783_8;

const MAX_ITER: usize = 50;
const STEP_TOL: f64 = 1e-15;

/// Principal-branch Lambert W: the `w ≥ -1` solving `w e^w = t`.
///
/// Uses Halley iteration on `w e^w - t` for `t ≤ e`; above that the iteration
/// runs on the better-conditioned `w + ln w = ln t` (see [`lambert_w_of_exp`]).
pub fn lambert_w(t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("lambert_w of non-finite argument {t}")));
    }
    let branch_point = -1.0 / E;
    if t < branch_point {
        // Allow a couple of ulps of slack so that -1/e computed elsewhere lands on -1.
        if t >= branch_point * (1.0 + 4.0 * f64::EPSILON) {
            return Ok(-1.0);
        }
        return Err(Error::Domain(format!("lambert_w({t}) below the branch point -1/e")));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    if t > E {
        return Ok(lambert_w_of_exp(t.ln()));
    }

    let mut w = if t < 0.0 {
        // Expansion about the branch point.
        let p = (2.0 * (E * t + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if t <= 1.0 {
        t * (1.0 - t)
    } else {
        OMEGA + (t - 1.0) * (1.0 - OMEGA) / (E - 1.0)
    };
    for _ in 0..MAX_ITER {
        let ew = w.exp();
        let f = w * ew - t;
        if f == 0.0 {
            break;
        }
        let wp1 = w + 1.0;
        if wp1 == 0.0 {
            break;
        }
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() <= STEP_TOL * w.abs() {
            break;
        }
    }
    Ok(w)
}

/// `W(e^l)` for any real `l`, without forming `e^l`.
///
/// For `l > 1` this solves `w + ln w = l` by Halley iteration seeded with the
/// large-argument expansion `L - ln L + ln L / L`, so arguments such as
/// `l = 10^4` (where `e^l` overflows) are handled at full precision.
pub fn lambert_w_of_exp(l: f64) -> f64 {
    if l <= 1.0 {
        // e^l ≤ e, no overflow; underflow to 0 gives W = 0 correctly.
        return lambert_w(l.exp()).unwrap_or(0.0);
    }
    let ll = l.ln();
    let mut w = if l > 3.0 { l - ll + ll / l } else { 1.0 + 0.5 * (l - 1.0) };
    for _ in 0..MAX_ITER {
        let g = w + w.ln() - l;
        if g == 0.0 {
            break;
        }
        let g1 = 1.0 + 1.0 / w;
        let g2 = -1.0 / (w * w);
        let step = g / (g1 - 0.5 * g * g2 / g1);
        w -= step;
        if step.abs() <= STEP_TOL * w.abs() {
            break;
        }
    }
    w
}
