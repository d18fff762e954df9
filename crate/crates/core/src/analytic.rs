//! Closed-form scattering on the Lambert barrier.
//!
//! With `z = W(e^{-(x-x0)/σ})` the Schrödinger equation becomes
//! `u'' + (iδ/z - is)u' + (as/z)u = 0` for
//! `ψ = z^{iδ/2} e^{-isz/2} (u' - i(δ+s)/2 · u)`, where `s = 2σk1`,
//! `δ = 2σk2` and `a = (s+δ)²/(4s)`. The basis is
//!
//! - member 1: `(isz)^{1-iδ} M(1+i(a-δ); 2-iδ; isz)`, a pure transmitted
//!   wave `e^{ik2x}` on the right;
//! - member 2: `U(ia; iδ; isz)`, a single wave `e^{ik1x}` on the left.
//!   Its complex conjugate is the state incident from the right.
//!
//! Reflection coefficients are evaluated as logarithms so that very wide
//! barriers (`R ~ 1e-47` at `σ = 12`) keep full relative accuracy.

use crate::potentials::{rho, LambertBarrier, StepBarrier, TanhBarrier};
use crate::specfun::{complex_pow, kummer_m, tricomi_u};
use crate::waves::WavePair;
use crate::{Complex64, Error, PhysicsConfig, Result};
use std::collections::BTreeMap;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Asymptotic wave numbers. `k2` is imaginary below threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveNumbers {
    pub k1: f64,
    pub k2: Complex64,
}

impl WaveNumbers {
    pub fn new(energy: f64, v0: f64, physics: &PhysicsConfig) -> Result<Self> {
        if !(energy > 0.0) {
            return Err(Error::Domain(format!("energy must be positive, got {energy}")));
        }
        let scale = physics.scale();
        let k1 = (scale * energy).sqrt();
        let k2 = c(scale * (energy - v0), 0.0).sqrt();
        Ok(WaveNumbers { k1, k2 })
    }

    /// Real `k2`, or an error below threshold.
    pub fn real_k2(&self) -> Result<f64> {
        if self.k2.im != 0.0 {
            return Err(Error::Unsupported(format!(
                "below-threshold scattering (k2 = {}) is not handled",
                self.k2
            )));
        }
        Ok(self.k2.re)
    }
}

/// Which expression is used for the parameter `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ATermForm {
    /// `a = δ(δ+s)/(2s) + cσ²V0/s = (s+δ)²/(4s)`.
    #[default]
    Consistent,
    /// `a = δ(δ+s)/(2s) + σ√(mV0)/√(2Eħ)`, the typeset variant. Kept only
    /// as a negative control; it coincides with the consistent form when
    /// `V0 = 1`, `m = 1/2`, `ħ = 1`.
    Printed,
}

/// Dimensionless parameters of the hypergeometric equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatterParams {
    pub a: Complex64,
    pub delta: Complex64,
    pub s: f64,
    /// Relative gap between the two algebraic forms of `a`.
    pub a_form_gap: f64,
}

impl ScatterParams {
    /// `(a, δ, s)` as reals; fails below threshold.
    pub fn real(&self) -> Result<(f64, f64, f64)> {
        if self.delta.im != 0.0 || self.a.im != 0.0 {
            return Err(Error::Unsupported(format!(
                "below-threshold parameters (δ = {}) are not handled",
                self.delta
            )));
        }
        Ok((self.a.re, self.delta.re, self.s))
    }
}

pub fn scatter_params(
    energy: f64,
    barrier: &LambertBarrier,
    physics: &PhysicsConfig,
) -> Result<ScatterParams> {
    scatter_params_with(energy, barrier, physics, ATermForm::Consistent)
}

pub fn scatter_params_with(
    energy: f64,
    barrier: &LambertBarrier,
    physics: &PhysicsConfig,
    form: ATermForm,
) -> Result<ScatterParams> {
    let k = WaveNumbers::new(energy, barrier.v0, physics)?;
    let sigma = barrier.sigma;
    let s = 2.0 * sigma * k.k1;
    let delta = 2.0 * sigma * k.k2;
    let first = delta * (delta + s) / (2.0 * s);
    let split = first + physics.scale() * sigma * sigma * barrier.v0 / s;
    let square = (s + delta) * (s + delta) / (4.0 * s);
    let a_form_gap = (split - square).norm() / square.norm();
    let a = match form {
        ATermForm::Consistent => square,
        ATermForm::Printed => {
            let m = physics.mass;
            first + sigma * (m * barrier.v0.abs()).sqrt() / (2.0 * energy * physics.hbar).sqrt()
        }
    };
    Ok(ScatterParams { a, delta, s, a_form_gap })
}

/// Weights of the two basis members in `u = c1·u1 + c2·u2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisCoefficients {
    pub c1: Complex64,
    pub c2: Complex64,
}

impl BasisCoefficients {
    pub fn new(c1: Complex64, c2: Complex64) -> Result<Self> {
        if c1 == c(0.0, 0.0) && c2 == c(0.0, 0.0) {
            return Err(Error::InvalidParameter("basis coefficients are both zero".into()));
        }
        Ok(BasisCoefficients { c1, c2 })
    }

    /// Transmitted wave only: incidence from the left.
    pub fn left_incidence() -> Self {
        BasisCoefficients { c1: c(1.0, 0.0), c2: c(0.0, 0.0) }
    }

    /// Tricomi member only: a single wave on the left.
    pub fn tricomi_only() -> Self {
        BasisCoefficients { c1: c(0.0, 0.0), c2: c(1.0, 0.0) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflectionMethod {
    ClosedForm,
    WavenumberForm,
    Oracle,
    Step,
    Tanh,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReflectionResult {
    pub r: f64,
    pub t: f64,
    pub method: ReflectionMethod,
    pub diagnostics: BTreeMap<String, f64>,
}

impl ReflectionResult {
    pub fn new(r: f64, method: ReflectionMethod) -> Self {
        ReflectionResult { r, t: 1.0 - r, method, diagnostics: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, value: f64) -> Self {
        self.diagnostics.insert(key.to_string(), value);
        self
    }
}

/// `ln sinh x` for `x > 0` without overflow.
pub fn ln_sinh(x: f64) -> f64 {
    if x > 20.0 {
        x + (-(-2.0 * x).exp_m1() / 2.0).ln()
    } else {
        x.sinh().ln()
    }
}

fn from_log(ln_r: f64, method: ReflectionMethod) -> ReflectionResult {
    ReflectionResult::new(ln_r.exp(), method).with("ln_r", ln_r)
}

/// `R = a e^{-πδ}/(a-δ) · (s-δ)²/(s+δ)² · sinh(π(a-δ))/sinh(πa)`.
pub fn reflection_closed_form(params: &ScatterParams) -> Result<ReflectionResult> {
    let (a, delta, s) = params.real()?;
    if s == delta {
        return Ok(ReflectionResult::new(0.0, ReflectionMethod::ClosedForm));
    }
    if a == delta {
        return Err(Error::Domain("degenerate parameters a = δ".into()));
    }
    if !(a > 0.0 && delta >= 0.0 && s > 0.0) {
        return Err(Error::Domain(format!("need a, s > 0 and δ ≥ 0, got a = {a}, δ = {delta}, s = {s}")));
    }
    // sinh(πx)/x is even, so the ratio is taken with |a - δ|.
    let gap = (a - delta).abs();
    let ln_r = a.ln() - gap.ln() - PI * delta + 2.0 * ((s - delta).abs().ln() - (s + delta).ln())
        + ln_sinh(PI * gap)
        - ln_sinh(PI * a);
    Ok(from_log(ln_r, ReflectionMethod::ClosedForm)
        .with("a", a)
        .with("delta", delta)
        .with("s", s))
}

/// `R = e^{-2πσk2} sinh(πσ(k1-k2)²/(2k1)) / sinh(πσ(k1+k2)²/(2k1))`.
pub fn reflection_wavenumbers(k: &WaveNumbers, sigma: f64) -> Result<ReflectionResult> {
    let k2 = k.real_k2()?;
    let k1 = k.k1;
    if !(sigma > 0.0) {
        return Err(Error::InvalidParameter(format!("sigma must be positive, got {sigma}")));
    }
    if k1 == k2 {
        return Ok(ReflectionResult::new(0.0, ReflectionMethod::WavenumberForm));
    }
    let lo = PI * sigma * (k1 - k2).powi(2) / (2.0 * k1);
    let hi = PI * sigma * (k1 + k2).powi(2) / (2.0 * k1);
    let ln_r = -2.0 * PI * sigma * k2 + ln_sinh(lo) - ln_sinh(hi);
    Ok(from_log(ln_r, ReflectionMethod::WavenumberForm))
}

/// Abrupt step: `((k1-k2)/(k1+k2))²`.
pub fn reflection_step(k: &WaveNumbers) -> Result<ReflectionResult> {
    let k2 = k.real_k2()?;
    let r = ((k.k1 - k2) / (k.k1 + k2)).powi(2);
    Ok(ReflectionResult::new(r, ReflectionMethod::Step))
}

/// Smooth step `V0/(1+e^{-x/d})`: `sinh²(πd(k1-k2)) / sinh²(πd(k1+k2))`.
pub fn reflection_tanh(k: &WaveNumbers, d: f64) -> Result<ReflectionResult> {
    let k2 = k.real_k2()?;
    if !(d > 0.0) {
        return Err(Error::InvalidParameter(format!("d must be positive, got {d}")));
    }
    if k.k1 == k2 {
        return Ok(ReflectionResult::new(0.0, ReflectionMethod::Tanh));
    }
    let ln_r = 2.0 * (ln_sinh(PI * d * (k.k1 - k2).abs()) - ln_sinh(PI * d * (k.k1 + k2)));
    Ok(from_log(ln_r, ReflectionMethod::Tanh))
}

/// First-order small-width behaviour `R_step · (1 - 2πσk2)`.
pub fn small_sigma_expansion(k: &WaveNumbers, sigma: f64) -> Result<f64> {
    let k2 = k.real_k2()?;
    Ok(reflection_step(k)?.r * (1.0 - 2.0 * PI * sigma * k2))
}

/// Closed-form reflection for a Lambert barrier at energy `E`.
pub fn reflection(
    energy: f64,
    barrier: &LambertBarrier,
    physics: &PhysicsConfig,
) -> Result<ReflectionResult> {
    reflection_closed_form(&scatter_params(energy, barrier, physics)?)
}

/// Reflection of the comparison barriers, for symmetry with [`reflection`].
pub fn reflection_of_step(energy: f64, step: &StepBarrier, physics: &PhysicsConfig) -> Result<ReflectionResult> {
    reflection_step(&WaveNumbers::new(energy, step.v0, physics)?)
}

pub fn reflection_of_tanh(energy: f64, tanh: &TanhBarrier, physics: &PhysicsConfig) -> Result<ReflectionResult> {
    reflection_tanh(&WaveNumbers::new(energy, tanh.v0, physics)?, tanh.d)
}

/// Basis member selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Member {
    /// `(isz)^{1-iδ} M(1+i(a-δ); 2-iδ; isz)`
    Kummer,
    /// `U(ia; iδ; isz)`
    Tricomi,
}

/// `(u, du/dz, d²u/dz²)` of a basis member, all from contiguous relations.
pub fn basis_jet(member: Member, p: &ScatterParams, z: f64) -> Result<[Complex64; 3]> {
    let [u, du] = basis_pair(member, p, z)?;
    let w = c(0.0, p.s * z);
    let uww = match member {
        Member::Kummer => {
            let (aa, bb, pw) = kummer_member(p);
            let m0 = kummer_m(aa, bb, w)?;
            let m1 = aa / bb * kummer_m(aa + 1.0, bb + 1.0, w)?;
            let m2 = aa * (aa + 1.0) / (bb * (bb + 1.0)) * kummer_m(aa + 2.0, bb + 2.0, w)?;
            let wp = complex_pow(w, pw - 2.0)?;
            wp * (pw * (pw - 1.0) * m0 + 2.0 * pw * w * m1 + w * w * m2)
        }
        Member::Tricomi => {
            let (aa, bb) = (I * p.a, I * p.delta);
            aa * (aa + 1.0) * tricomi_u(aa + 2.0, bb + 2.0, w)?
        }
    };
    Ok([u, du, -p.s * p.s * uww])
}

fn kummer_member(p: &ScatterParams) -> (Complex64, Complex64, Complex64) {
    (1.0 + I * (p.a - p.delta), 2.0 - I * p.delta, 1.0 - I * p.delta)
}

/// `(u, du/dz)` of a basis member.
fn basis_pair(member: Member, p: &ScatterParams, z: f64) -> Result<[Complex64; 2]> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!("z must be positive, got {z}")));
    }
    let w = c(0.0, p.s * z);
    let is = c(0.0, p.s);
    Ok(match member {
        Member::Kummer => {
            let (aa, bb, pw) = kummer_member(p);
            let m0 = kummer_m(aa, bb, w)?;
            let m1 = aa / bb * kummer_m(aa + 1.0, bb + 1.0, w)?;
            let wp = complex_pow(w, pw - 1.0)?;
            [wp * w * m0, is * wp * (pw * m0 + w * m1)]
        }
        Member::Tricomi => {
            let (aa, bb) = (I * p.a, I * p.delta);
            let u = tricomi_u(aa, bb, w)?;
            let du = -aa * tricomi_u(aa + 1.0, bb + 1.0, w)?;
            [u, is * du]
        }
    })
}

/// Scaled residual `|u'' + (iδ/z - is)u' + (as/z)u| / max-term` of a jet
/// produced by `u_fn`. Returns 0 for `u ≡ 0`.
pub fn hypergeom_ode_residual<F>(u_fn: F, p: &ScatterParams, z: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<[Complex64; 3]>,
{
    let [u, du, ddu] = u_fn(z)?;
    let terms = [ddu, (I * p.delta / z - I * p.s) * du, p.a * p.s / z * u];
    let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok((terms[0] + terms[1] + terms[2]).norm() / scale)
}

/// `(ψ, dψ/dx)` of the exact solution selected by `coeffs`.
pub fn wavefunction(
    x: f64,
    energy: f64,
    barrier: &LambertBarrier,
    coeffs: &BasisCoefficients,
    physics: &PhysicsConfig,
) -> Result<(Complex64, Complex64)> {
    let p = scatter_params(energy, barrier, physics)?;
    wavefunction_with(x, &p, barrier, coeffs)
}

/// [`wavefunction`] with precomputed parameters.
pub fn wavefunction_with(
    x: f64,
    p: &ScatterParams,
    barrier: &LambertBarrier,
    coeffs: &BasisCoefficients,
) -> Result<(Complex64, Complex64)> {
    let z = barrier.z(x);
    if !(z > 0.0) {
        return Err(Error::Domain(format!("z(x) underflowed to zero at x = {x}")));
    }
    let mut u = c(0.0, 0.0);
    let mut du = c(0.0, 0.0);
    for (weight, member) in [(coeffs.c1, Member::Kummer), (coeffs.c2, Member::Tricomi)] {
        if weight != c(0.0, 0.0) {
            let [v, dv] = basis_pair(member, p, z)?;
            u += weight * v;
            du += weight * dv;
        }
    }
    // u'' from the equation itself
    let ddu = -(I * p.delta / z - I * p.s) * du - p.a * p.s / z * u;
    let kappa = (p.delta + p.s) / 2.0;
    let pref = (I * p.delta / 2.0 * z.ln() - I * p.s * z / 2.0).exp();
    let dpref = pref * (I * p.delta / (2.0 * z) - I * p.s / 2.0);
    let inner = du - I * kappa * u;
    let psi = pref * inner;
    let dpsi_dz = dpref * inner + pref * (ddu - I * kappa * du);
    Ok((psi, rho(z, barrier.sigma) * dpsi_dz))
}

fn project_at(
    x: f64,
    energy: f64,
    barrier: &LambertBarrier,
    coeffs: &BasisCoefficients,
    physics: &PhysicsConfig,
) -> Result<(Complex64, Complex64)> {
    let jet = barrier.derivatives(x);
    let pair = WavePair::wkb(energy, jet, physics.scale()).map_err(|_| {
        Error::Domain(format!("classically forbidden at x = {x}: E = {energy} < V = {}", jet[0]))
    })?;
    let (psi, dpsi) = wavefunction(x, energy, barrier, coeffs, physics)?;
    pair.project(psi, dpsi)
}

/// Components of `ψ` at a far-left point: `(incident, reflected)`.
pub fn asymptotic_left(
    x: f64,
    energy: f64,
    barrier: &LambertBarrier,
    coeffs: &BasisCoefficients,
    physics: &PhysicsConfig,
) -> Result<(Complex64, Complex64)> {
    project_at(x, energy, barrier, coeffs, physics)
}

/// Components of `ψ` at a far-right point: `(outgoing, incoming)`.
pub fn asymptotic_right(
    x: f64,
    energy: f64,
    barrier: &LambertBarrier,
    coeffs: &BasisCoefficients,
    physics: &PhysicsConfig,
) -> Result<(Complex64, Complex64)> {
    project_at(x, energy, barrier, coeffs, physics)
}
