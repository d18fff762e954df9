use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Marker for the branch used by every multivalued function in the crate:
/// `arg a ∈ (-π, π]` and `a^b := exp(b (ln|a| + i arg a))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BranchConvention;

impl BranchConvention {
    pub const ARG_MIN_EXCLUSIVE: f64 = -PI;
    pub const ARG_MAX_INCLUSIVE: f64 = PI;
}

/// Argument in `(-π, π]`. Unlike `atan2`, a negative real with `-0.0`
/// imaginary part maps to `+π`.
pub fn principal_arg(z: Complex64) -> f64 {
    let a = z.im.atan2(z.re);
    if a == -PI {
        PI
    } else {
        a
    }
}

pub fn principal_ln(z: Complex64) -> Complex64 {
    Complex64::new(z.norm().ln(), principal_arg(z))
}

/// Principal-branch complex power `base^exponent`.
pub fn complex_pow(base: Complex64, exponent: Complex64) -> Result<Complex64> {
    if base == Complex64::new(0.0, 0.0) {
        if exponent.re > 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        return Err(Error::Domain(format!("0 raised to {exponent}")));
    }
    Ok((exponent * principal_ln(base)).exp())
}
