//! Local decomposition of a solution into right- and left-moving waves.
//!
//! Where `k(x) = sqrt(c(E - V(x)))` varies slowly, the two independent
//! solutions have logarithmic derivatives obtained from the Riccati equation
//! `y' + y² + k² = 0` expanded to second order:
//!
//! `L± = ±i(k + Q/(2k)) + l1`, `l1 = -k'/(2k)`, `Q = l1' + l1²`.
//!
//! Projecting `(ψ, ψ')` on the pair gives the local amplitude of each wave.
//! The residual bias falls off like the cube of the tail decay, which is what
//! makes matching on the Coulomb-like Lambert tail practical.

use crate::{Complex64, Error, Result};

/// Logarithmic derivatives `(L+, L-)` of the right- and left-moving waves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavePair {
    pub plus: Complex64,
    pub minus: Complex64,
}

impl WavePair {
    /// Plane waves `e^{±ikx}` with a fixed wave number.
    pub fn plane(k: f64) -> Self {
        let ik = Complex64::new(0.0, k);
        WavePair { plus: ik, minus: -ik }
    }

    /// Second-order WKB waves at a point with potential jet `[V, V', V'']`.
    /// `scale` is `2m/ħ²`.
    pub fn wkb(energy: f64, jet: [f64; 3], scale: f64) -> Result<Self> {
        let [v, v1, v2] = jet;
        let k2 = scale * (energy - v);
        if !(k2 > 0.0) {
            return Err(Error::Domain(format!(
                "no propagating wave: E = {energy} is not above V = {v}"
            )));
        }
        let k = k2.sqrt();
        let kp = -scale * v1 / (2.0 * k);
        let kpp = (-scale * v2 / 2.0 - kp * kp) / k;
        let l1 = -kp / (2.0 * k);
        let l1p = -(kpp * k - kp * kp) / (2.0 * k * k);
        let q = l1p + l1 * l1;
        let phase = Complex64::new(0.0, k + q / (2.0 * k));
        Ok(WavePair { plus: phase + l1, minus: -phase + l1 })
    }

    /// Split `(ψ, ψ')` into `(right-moving, left-moving)` components at the
    /// same point.
    pub fn project(&self, psi: Complex64, dpsi: Complex64) -> Result<(Complex64, Complex64)> {
        let gap = self.plus - self.minus;
        let scale = self.plus.norm().max(self.minus.norm());
        if !(gap.norm() > 1e-12 * scale) {
            return Err(Error::Matching(format!(
                "wave pair is degenerate (L+ = {}, L- = {})",
                self.plus, self.minus
            )));
        }
        let right = (dpsi - self.minus * psi) / gap;
        Ok((right, psi - right))
    }
}
