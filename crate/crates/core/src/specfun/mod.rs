//! Special functions for the closed-form Lambert-barrier solution.
//!
//! Everything here is a pure function of its inputs. Complex powers and
//! logarithms use the principal branch, `arg ∈ (-π, π]`; see [`complex_pow`].

mod dd;
mod gamma;
mod hypergeometric;
mod lambert;
mod power;

pub use gamma::{digamma, log_gamma};
pub use hypergeometric::{
    kummer_m, kummer_m_with_error, tricomi_u, tricomi_u_with_error, Evaluation, Method,
};
pub use lambert::{lambert_w, lambert_w_of_exp, OMEGA};
pub use power::{complex_pow, principal_arg, principal_ln, BranchConvention};

/// Distance below which a parameter is treated as sitting on an integer
/// singularity of the Kummer/Tricomi representations.
pub const INTEGER_GUARD: f64 = 1e-8;

/// Distance from `b` to the nearest integer when `b` lies on the real axis
/// (within [`INTEGER_GUARD`]), `None` otherwise.
pub(crate) fn near_integer(b: crate::Complex64) -> Option<(f64, f64)> {
    if b.im.abs() >= INTEGER_GUARD {
        return None;
    }
    let nearest = b.re.round();
    let dist = (b.re - nearest).hypot(b.im);
    (dist < INTEGER_GUARD).then_some((nearest, dist))
}
