//! Bi-confluent Heun machinery behind the Lambert barrier.
//!
//! The canonical equation is
//! `u'' + (γ/z + δ + εz)u' + (αz - q)/z · u = 0`, and
//! `w = z^γ e^{δz + εz²/2} u'` obeys an equation with an extra apparent
//! singularity at `z0 = q/α`. Matching that equation with the Schrödinger
//! equation under `z = W(e^{-(x-x0)/σ})` (`z0 = -1`) gives the
//! conditionally solvable barrier
//! `V0 + V1/(1+z) + V2/(1+z)² + V3/(1+z)³` with `V2 = -V3 + cσ²V3²`.
//! For it `ε = 0`, so `u = e^{λz} M(A; γ; κz)` and
//! `ψ = z^{γ/2} e^{δz/2} u'`.
//!
//! The `_h` suffix keeps these parameters apart from the `δ` of
//! [`analytic`](crate::analytic).

use crate::potentials::{rho, GeneralizedBarrier, InversePowerCoefficients};
use crate::specfun::{kummer_m, near_integer};
use crate::{Complex64, Error, PhysicsConfig, Result};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Parameters of the canonical bi-confluent Heun equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BiconfluentParams {
    pub gamma_h: Complex64,
    pub delta_h: Complex64,
    pub eps_h: Complex64,
    pub alpha_h: Complex64,
    pub q_h: Complex64,
}

/// `γ, δ, α` of the solution for a [`GeneralizedBarrier`]; `ε = 0`, `q = -α`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedSolutionParams {
    pub gamma_h: Complex64,
    pub delta_h: Complex64,
    pub alpha_h: Complex64,
}

impl GeneralizedSolutionParams {
    pub fn biconfluent(&self) -> BiconfluentParams {
        BiconfluentParams {
            gamma_h: self.gamma_h,
            delta_h: self.delta_h,
            eps_h: c(0.0, 0.0),
            alpha_h: self.alpha_h,
            q_h: -self.alpha_h,
        }
    }
}

/// `γ = 2σ√(c(-E + V0 + V1 + cσ²V3²))` (principal root), `δ = γ + 2cσ²V3`,
/// `α = cσ²(V1 + δV3)`, with `c = 2m/ħ²`.
pub fn map_params(
    energy: f64,
    barrier: &GeneralizedBarrier,
    physics: &PhysicsConfig,
) -> GeneralizedSolutionParams {
    let cs = physics.scale();
    let sigma = barrier.sigma;
    let inner = cs * (-energy + barrier.v0 + barrier.v1 + cs * sigma * sigma * barrier.v3 * barrier.v3);
    let gamma_h = 2.0 * sigma * c(inner, 0.0).sqrt();
    let delta_h = gamma_h + 2.0 * cs * sigma * sigma * barrier.v3;
    let alpha_h = cs * sigma * sigma * (barrier.v1 + delta_h * barrier.v3);
    GeneralizedSolutionParams { gamma_h, delta_h, alpha_h }
}

/// Partial sum of the regular solution at `z = 0` (`u(0) = 1`) and its
/// first two derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeunSeries {
    pub u: Complex64,
    pub du: Complex64,
    pub ddu: Complex64,
    /// `|last term| / |sum|`.
    pub truncation: f64,
}

/// Frobenius series `Σ cₙ zⁿ` with
/// `(n+1)(n+γ)c_{n+1} = (q - δn)cₙ - (α + ε(n-1))c_{n-1}`, `c0 = 1`.
pub fn biconfluent_series(p: &BiconfluentParams, z: Complex64, terms: usize) -> Result<HeunSeries> {
    if let Some((n, dist)) = near_integer(p.gamma_h) {
        if n <= 0.0 && dist < 1e-8 {
            return Err(Error::IllConditioned(format!(
                "γ = {} is a non-positive integer; the exponent-0 solution does not exist",
                p.gamma_h
            )));
        }
    }
    let zero = c(0.0, 0.0);
    if z == zero {
        // term-wise derivatives at the origin
        let c1 = p.q_h / p.gamma_h;
        let c2 = ((p.q_h - p.delta_h) * c1 - p.alpha_h) / (2.0 * (1.0 + p.gamma_h));
        return Ok(HeunSeries { u: c(1.0, 0.0), du: c1, ddu: 2.0 * c2, truncation: 0.0 });
    }
    let (mut prev, mut cur) = (zero, c(1.0, 0.0));
    let (mut u, mut du, mut ddu) = (zero, zero, zero);
    let mut zn = c(1.0, 0.0);
    let mut last = 0.0;
    for n in 0..terms.max(1) {
        let nf = n as f64;
        u += cur * zn;
        if n >= 1 {
            du += nf * cur * zn / z;
        }
        if n >= 2 {
            ddu += nf * (nf - 1.0) * cur * zn / (z * z);
        }
        last = (cur * zn).norm();
        let next = ((p.q_h - p.delta_h * nf) * cur - (p.alpha_h + p.eps_h * (nf - 1.0)) * prev)
            / ((nf + 1.0) * (nf + p.gamma_h));
        prev = cur;
        cur = next;
        zn *= z;
    }
    let truncation = if u.norm() > 0.0 { last / u.norm() } else { f64::INFINITY };
    Ok(HeunSeries { u, du, ddu, truncation })
}

/// Scaled residual of the canonical equation for a jet `(u, u', u'')`.
pub fn biconfluent_residual(p: &BiconfluentParams, z: Complex64, s: &HeunSeries) -> f64 {
    let terms = [s.ddu, (p.gamma_h / z + p.delta_h + p.eps_h * z) * s.du, (p.alpha_h - p.q_h / z) * s.u];
    scaled_sum(&terms)
}

fn scaled_sum(terms: &[Complex64]) -> f64 {
    let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    terms.iter().sum::<Complex64>().norm() / scale
}

/// `P = z^γ e^{δz + εz²/2}`.
fn prefactor(p: &BiconfluentParams, z: Complex64) -> Complex64 {
    (p.gamma_h * z.ln() + p.delta_h * z + p.eps_h * z * z / 2.0).exp()
}

/// `w = P u'` and `w' = -P(α - q/z)u`, the second from the equation for `u`.
pub fn w_transform(
    p: &BiconfluentParams,
    z: Complex64,
    u: Complex64,
    du: Complex64,
) -> Result<(Complex64, Complex64)> {
    if z == c(0.0, 0.0) {
        return Err(Error::Domain("w_transform at z = 0".into()));
    }
    let pz = prefactor(p, z);
    Ok((pz * du, -pz * (p.alpha_h - p.q_h / z) * u))
}

/// Scaled residual of
/// `w'' - ((γ-1)/z + δ + εz + 1/(z-z0))w' + α(z-z0)/z · w = 0`, `z0 = q/α`.
/// `w''` is assembled analytically from `(u, u')`.
pub fn w_equation_residual(p: &BiconfluentParams, z: Complex64, u: Complex64, du: Complex64) -> Result<f64> {
    let (w, dw) = w_transform(p, z, u, du)?;
    let pz = prefactor(p, z);
    let log_p = p.gamma_h / z + p.delta_h + p.eps_h * z;
    let k = p.alpha_h - p.q_h / z;
    let ddw = -pz * (log_p * k * u + p.q_h / (z * z) * u + k * du);
    let mut f = (p.gamma_h - 1.0) / z + p.delta_h + p.eps_h * z;
    let g = if p.alpha_h == c(0.0, 0.0) {
        -p.q_h / z
    } else {
        let z0 = p.q_h / p.alpha_h;
        f += 1.0 / (z - z0);
        p.alpha_h * (z - z0) / z
    };
    Ok(scaled_sum(&[ddw, -f * dw, g * w]))
}

/// Both sides of the invariant identity and their scaled gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantMatch {
    pub lhs: Complex64,
    pub rhs: f64,
    pub gap: f64,
}

/// Invariant `g - f'/2 - f²/4` of the `w` equation against
/// `-(r_z)/2 - r²/4 + c(E - V)/ρ²`, `r = ρ_z/ρ`, on the Lambert coordinate.
pub fn invariant_match(
    p: &BiconfluentParams,
    z: f64,
    barrier: &GeneralizedBarrier,
    energy: f64,
    physics: &PhysicsConfig,
) -> Result<InvariantMatch> {
    invariant_match_coeffs(p, z, barrier.sigma, &barrier.coefficients(physics), energy, physics)
}

/// [`invariant_match`] for arbitrary `(V0, V1, V2, V3)`, including ones that
/// violate the solvability constraint.
pub fn invariant_match_coeffs(
    p: &BiconfluentParams,
    z: f64,
    sigma: f64,
    coeffs: &InversePowerCoefficients,
    energy: f64,
    physics: &PhysicsConfig,
) -> Result<InvariantMatch> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!("z must be positive, got {z}")));
    }
    let zc = c(z, 0.0);
    let mut f = -((p.gamma_h - 1.0) / zc + p.delta_h + p.eps_h * zc);
    let mut df = (p.gamma_h - 1.0) / (zc * zc) - p.eps_h;
    let g = if p.alpha_h == c(0.0, 0.0) {
        -p.q_h / zc
    } else {
        let z0 = p.q_h / p.alpha_h;
        f -= 1.0 / (zc - z0);
        df += 1.0 / ((zc - z0) * (zc - z0));
        p.alpha_h * (zc - z0) / zc
    };
    let lhs = g - df / 2.0 - f * f / 4.0;
    // ρ = -(z/σ)/(1+z): r = 1/z - 1/(1+z)
    let r = 1.0 / z - 1.0 / (1.0 + z);
    let dr = -1.0 / (z * z) + 1.0 / ((1.0 + z) * (1.0 + z));
    let rh = rho(z, sigma);
    let rhs = -dr / 2.0 - r * r / 4.0 + physics.scale() * (energy - coeffs.value_at_z(z)) / (rh * rh);
    let gap = (lhs - rhs).norm() / lhs.norm().max(rhs.abs());
    Ok(InvariantMatch { lhs, rhs, gap })
}

/// `u(z) = e^{λz} M(a; b; κz)` for the `ε = 0` equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricReduction {
    pub lambda: Complex64,
    pub kappa: Complex64,
    pub a: Complex64,
    pub b: Complex64,
}

impl HypergeometricReduction {
    pub fn u(&self, z: Complex64) -> Result<Complex64> {
        Ok((self.lambda * z).exp() * kummer_m(self.a, self.b, self.kappa * z)?)
    }

    /// `(u, u')`, with `M'` from the contiguous relation.
    pub fn jet(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        let e = (self.lambda * z).exp();
        let m = kummer_m(self.a, self.b, self.kappa * z)?;
        let m1 = self.a / self.b * kummer_m(self.a + 1.0, self.b + 1.0, self.kappa * z)?;
        Ok((e * m, e * (self.lambda * m + self.kappa * m1)))
    }
}

/// `κ = √(δ² - 4α)`, `λ = -(κ + δ)/2`, `a = -(γλ - q)/κ`, `b = γ`.
pub fn reduce_to_hypergeometric(p: &BiconfluentParams) -> Result<HypergeometricReduction> {
    if p.eps_h != c(0.0, 0.0) {
        return Err(Error::Unsupported("reduction to Kummer functions needs ε = 0".into()));
    }
    let kappa = (p.delta_h * p.delta_h - 4.0 * p.alpha_h).sqrt();
    if kappa == c(0.0, 0.0) {
        return Err(Error::Unsupported("δ² = 4α: the reduced equation is not of Kummer type".into()));
    }
    let lambda = -(kappa + p.delta_h) / 2.0;
    let a = -(p.gamma_h * lambda - p.q_h) / kappa;
    Ok(HypergeometricReduction { lambda, kappa, a, b: p.gamma_h })
}

/// `(ψ, dψ/dx)` with `ψ = z^{γ/2} e^{δz/2} u'` and the Kummer form of `u`.
pub fn heun_wavefunction(
    x: f64,
    energy: f64,
    barrier: &GeneralizedBarrier,
    physics: &PhysicsConfig,
) -> Result<(Complex64, Complex64)> {
    let p = map_params(energy, barrier, physics).biconfluent();
    let red = reduce_to_hypergeometric(&p)?;
    let z = barrier.z(x);
    if !(z > 0.0) {
        return Err(Error::Domain(format!("z(x) underflowed to zero at x = {x}")));
    }
    let zc = c(z, 0.0);
    let (u, du) = red.jet(zc)?;
    let ddu = -(p.gamma_h / zc + p.delta_h) * du - (p.alpha_h - p.q_h / zc) * u;
    let pre = (p.gamma_h / 2.0 * z.ln() + p.delta_h * zc / 2.0).exp();
    let psi = pre * du;
    let dpsi_dz = psi * (p.gamma_h / (2.0 * zc) + p.delta_h / 2.0) + pre * ddu;
    Ok((psi, rho(z, barrier.sigma) * dpsi_dz))
}
