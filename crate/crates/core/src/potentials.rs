//! Potential shapes and the Lambert coordinate map.
//!
//! The Lambert barrier `V0 / (1 + z)` with `z = W(e^{-(x-x0)/σ})` rises from
//! 0 at `x → -∞` to `V0` at `x → +∞`. The left tail is Coulomb-like,
//! `V ≈ σV0/|x|`, and the right approach is exponential, `V0 - V ~ e^{-x/σ}`.

use crate::specfun::{lambert_w, lambert_w_of_exp};
use crate::{Error, Result};

/// Beyond this value of `-(x - x0)/σ` the map switches to the overflow-free
/// `w + ln w = L` form.
pub const ASYMPTOTIC_SWITCH: f64 = 30.0;

/// Particle mass and reduced Planck constant. Only the combination
/// `2m/ħ²` enters the Schrödinger equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicsConfig {
    pub mass: f64,
    pub hbar: f64,
}

impl Default for PhysicsConfig {
    /// `m = 1/2`, `ħ = 1`, so that `2m/ħ² = 1`.
    fn default() -> Self {
        PhysicsConfig { mass: 0.5, hbar: 1.0 }
    }
}

impl PhysicsConfig {
    pub fn new(mass: f64, hbar: f64) -> Result<Self> {
        if !(mass > 0.0 && hbar > 0.0 && mass.is_finite() && hbar.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "mass and hbar must be positive, got m = {mass}, hbar = {hbar}"
            )));
        }
        Ok(PhysicsConfig { mass, hbar })
    }

    /// `2m/ħ²`, converting energies to squared wave numbers.
    pub fn scale(&self) -> f64 {
        2.0 * self.mass / (self.hbar * self.hbar)
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be positive and finite, got {v}")))
    }
}

/// `V0 / (1 + W(e^{-(x-x0)/σ}))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambertBarrier {
    pub v0: f64,
    pub sigma: f64,
    pub x0: f64,
}

impl LambertBarrier {
    pub fn new(v0: f64, sigma: f64) -> Result<Self> {
        Self::with_offset(v0, sigma, 0.0)
    }

    pub fn with_offset(v0: f64, sigma: f64, x0: f64) -> Result<Self> {
        positive("sigma", sigma)?;
        Ok(LambertBarrier { v0, sigma, x0 })
    }

    pub fn z(&self, x: f64) -> f64 {
        z_of_x(x, self.sigma, self.x0)
    }

    pub fn value(&self, x: f64) -> f64 {
        self.v0 / (1.0 + self.z(x))
    }

    /// `(V, dV/dx, d²V/dx²)`.
    pub fn derivatives(&self, x: f64) -> [f64; 3] {
        let z = self.z(x);
        let y = 1.0 + z;
        let vz = -self.v0 / (y * y);
        let vzz = 2.0 * self.v0 / (y * y * y);
        chain(self.v0 / y, vz, vzz, z, self.sigma)
    }
}

/// Derivatives in `x` from derivatives in `z` along `z = W(e^{-x/σ})`.
fn chain(v: f64, vz: f64, vzz: f64, z: f64, sigma: f64) -> [f64; 3] {
    let r = rho(z, sigma);
    // dρ/dz = -1/(σ (1+z)^2)
    let rz = -1.0 / (sigma * (1.0 + z) * (1.0 + z));
    [v, vz * r, (vzz * r + vz * rz) * r]
}

/// Abrupt step: 0 for `x < 0`, `V0` for `x ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepBarrier {
    pub v0: f64,
}

/// Fermi-type smooth step `V0 / (1 + e^{-x/d})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TanhBarrier {
    pub v0: f64,
    pub d: f64,
}

impl TanhBarrier {
    pub fn new(v0: f64, d: f64) -> Result<Self> {
        positive("d", d)?;
        Ok(TanhBarrier { v0, d })
    }

    fn logistic(&self, x: f64) -> f64 {
        1.0 / (1.0 + (-x / self.d).exp())
    }

    pub fn value(&self, x: f64) -> f64 {
        self.v0 * self.logistic(x)
    }

    pub fn derivatives(&self, x: f64) -> [f64; 3] {
        let p = self.logistic(x);
        let d1 = p * (1.0 - p) / self.d;
        [self.v0 * p, self.v0 * d1, self.v0 * d1 * (1.0 - 2.0 * p) / self.d]
    }
}

/// The five-parameter barrier
/// `V0 + V1/(1+z) + V2/(1+z)² + V3/(1+z)³` on the Lambert coordinate, with
/// `V2 = -V3 + (2m/ħ²) σ² V3²` always derived, never free. That constraint is
/// what makes it solvable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedBarrier {
    pub v0: f64,
    pub v1: f64,
    pub v3: f64,
    pub sigma: f64,
    pub x0: f64,
}

/// Coefficients of `V0 + V1/y + V2/y² + V3/y³`, `y = 1 + z`. Unlike
/// [`GeneralizedBarrier`], `v2` is free here.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InversePowerCoefficients {
    pub v0: f64,
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
}

impl InversePowerCoefficients {
    pub fn value_at_z(&self, z: f64) -> f64 {
        let y = 1.0 + z;
        self.v0 + self.v1 / y + self.v2 / (y * y) + self.v3 / (y * y * y)
    }
}

impl GeneralizedBarrier {
    pub fn new(v0: f64, v1: f64, v3: f64, sigma: f64) -> Result<Self> {
        positive("sigma", sigma)?;
        Ok(GeneralizedBarrier { v0, v1, v3, sigma, x0: 0.0 })
    }

    /// The derived `(1+z)^{-2}` coefficient.
    pub fn v2(&self, physics: &PhysicsConfig) -> f64 {
        -self.v3 + physics.scale() * self.sigma * self.sigma * self.v3 * self.v3
    }

    pub fn coefficients(&self, physics: &PhysicsConfig) -> InversePowerCoefficients {
        InversePowerCoefficients { v0: self.v0, v1: self.v1, v2: self.v2(physics), v3: self.v3 }
    }

    pub fn z(&self, x: f64) -> f64 {
        z_of_x(x, self.sigma, self.x0)
    }

    pub fn value_at_z(&self, z: f64, physics: &PhysicsConfig) -> f64 {
        self.coefficients(physics).value_at_z(z)
    }

    pub fn value(&self, x: f64, physics: &PhysicsConfig) -> f64 {
        self.value_at_z(self.z(x), physics)
    }

    pub fn derivatives(&self, x: f64, physics: &PhysicsConfig) -> [f64; 3] {
        let k = self.coefficients(physics);
        let z = self.z(x);
        let y = 1.0 + z;
        let (y2, y3, y4, y5) = (y * y, y * y * y, y * y * y * y, y * y * y * y * y);
        let vz = -k.v1 / y2 - 2.0 * k.v2 / y3 - 3.0 * k.v3 / y4;
        let vzz = 2.0 * k.v1 / y3 + 6.0 * k.v2 / y4 + 12.0 * k.v3 / y5;
        chain(k.value_at_z(z), vz, vzz, z, self.sigma)
    }
}

/// `V0 + V1 / (√x (√x + z0))`, defined for `x > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqrtRatioBarrier {
    pub v0: f64,
    pub v1: f64,
    pub z0: f64,
}

impl SqrtRatioBarrier {
    pub fn new(v0: f64, v1: f64, z0: f64) -> Result<Self> {
        positive("z0", z0)?;
        Ok(SqrtRatioBarrier { v0, v1, z0 })
    }

    pub fn value(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("square-root ratio barrier needs x > 0, got {x}")));
        }
        let r = x.sqrt();
        Ok(self.v0 + self.v1 / (r * (r + self.z0)))
    }
}

/// Every potential shape handled by the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Barrier {
    Lambert(LambertBarrier),
    Step(StepBarrier),
    Tanh(TanhBarrier),
    Generalized(GeneralizedBarrier),
    SqrtRatio(SqrtRatioBarrier),
}

impl Barrier {
    /// Bind the physics constants, giving a plain function of `x`.
    pub fn with_physics(self, physics: PhysicsConfig) -> BarrierFn {
        BarrierFn { barrier: self, physics }
    }
}

/// Potential `V(x)` of the given barrier.
pub fn evaluate(barrier: &Barrier, x: f64, physics: &PhysicsConfig) -> Result<f64> {
    Ok(match barrier {
        Barrier::Lambert(b) => b.value(x),
        Barrier::Step(b) => {
            if x < 0.0 {
                0.0
            } else {
                b.v0
            }
        }
        Barrier::Tanh(b) => b.value(x),
        Barrier::Generalized(b) => b.value(x, physics),
        Barrier::SqrtRatio(b) => b.value(x)?,
    })
}

/// A real potential on the line, as consumed by the numerical integrator.
pub trait Potential {
    fn value(&self, x: f64) -> f64;

    /// `(V, V', V'')`, by default from central differences.
    fn derivatives(&self, x: f64) -> [f64; 3] {
        let h = 1e-3 * (1.0 + x.abs());
        let (vm, v0, vp) = (self.value(x - h), self.value(x), self.value(x + h));
        [v0, (vp - vm) / (2.0 * h), (vp - 2.0 * v0 + vm) / (h * h)]
    }

    /// Value used on a uniform grid; a jump sitting exactly on a node is
    /// represented by the mean of its one-sided limits.
    fn grid_value(&self, x: f64) -> f64 {
        self.value(x)
    }
}

/// A closure used as a [`Potential`].
pub struct FnPotential<F>(pub F);

impl<F: Fn(f64) -> f64> Potential for FnPotential<F> {
    fn value(&self, x: f64) -> f64 {
        (self.0)(x)
    }
}

/// A [`Barrier`] bound to physics constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarrierFn {
    pub barrier: Barrier,
    pub physics: PhysicsConfig,
}

impl Potential for BarrierFn {
    fn value(&self, x: f64) -> f64 {
        evaluate(&self.barrier, x, &self.physics).unwrap_or(f64::NAN)
    }

    fn derivatives(&self, x: f64) -> [f64; 3] {
        match &self.barrier {
            Barrier::Lambert(b) => b.derivatives(x),
            Barrier::Tanh(b) => b.derivatives(x),
            Barrier::Generalized(b) => b.derivatives(x, &self.physics),
            Barrier::Step(b) => [if x < 0.0 { 0.0 } else { b.v0 }, 0.0, 0.0],
            Barrier::SqrtRatio(_) => {
                let h = 1e-4 * x.abs().max(1e-6);
                let f = |t: f64| self.value(t);
                let (vm, v0, vp) = (f(x - h), f(x), f(x + h));
                [v0, (vp - vm) / (2.0 * h), (vp - 2.0 * v0 + vm) / (h * h)]
            }
        }
    }

    fn grid_value(&self, x: f64) -> f64 {
        match &self.barrier {
            Barrier::Step(b) if x == 0.0 => 0.5 * b.v0,
            _ => self.value(x),
        }
    }
}

/// The Lambert coordinate `z = W(e^{-(x-x0)/σ})`, positive and strictly
/// decreasing in `x`.
///
/// For `-(x - x0)/σ > 30` the exponential is never formed; the root of
/// `z + ln z = -(x - x0)/σ` is found directly, starting from the
/// large-argument expansion `L - ln L + ln L / L`.
pub fn z_of_x(x: f64, sigma: f64, x0: f64) -> f64 {
    let l = -(x - x0) / sigma;
    if l > ASYMPTOTIC_SWITCH {
        lambert_w_of_exp(l)
    } else {
        // e^l ≤ e^30, well inside range; underflow gives z = 0 at x → +∞.
        lambert_w(l.exp()).unwrap_or(0.0)
    }
}

/// `dz/dx = -(z/σ)/(1 + z)`, always negative for `z > 0`.
pub fn rho(z: f64, sigma: f64) -> f64 {
    -(z / sigma) / (1.0 + z)
}
