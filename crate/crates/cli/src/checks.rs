//! The acceptance checks, shared by `verify` and the acceptance test target.
//! Each criterion yields one or more [`Check`]s with the measured value and
//! the bound it is held to.

use crate::args::{Comparison, Level, ReflectArgs};
use crate::commands::reflect_table;
use lambert_step::analytic::{
    basis_jet, hypergeom_ode_residual, reflection, reflection_closed_form, reflection_step,
    reflection_tanh, reflection_wavenumbers, scatter_params, scatter_params_with, wavefunction,
    ATermForm, BasisCoefficients, Member, WaveNumbers,
};
use lambert_step::heun::{
    w_equation_residual, biconfluent_series, heun_wavefunction, invariant_match, invariant_match_coeffs,
    map_params,
};
use lambert_step::oracle::{reflection_oracle, schrodinger_residual, Grid, OracleConfig};
use lambert_step::potentials::{
    Barrier, GeneralizedBarrier, LambertBarrier, StepBarrier, TanhBarrier,
};
use lambert_step::specfun::{kummer_m, lambert_w, log_gamma, tricomi_u};
use lambert_step::{Complex64, PhysicsConfig};
use serde::Serialize;
use std::f64::consts::PI;
use std::time::Instant;

pub const CRITERIA: std::ops::RangeInclusive<u8> = 1..=10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// How `measured` is compared with `tolerance`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Bound {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "<")]
    Below,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = ">")]
    Above,
}

impl Bound {
    fn holds(self, measured: f64, tolerance: f64) -> bool {
        match self {
            Bound::AtMost => measured <= tolerance,
            Bound::Below => measured < tolerance,
            Bound::AtLeast => measured >= tolerance,
            Bound::Above => measured > tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub status: Status,
    pub measured: f64,
    pub tolerance: f64,
    pub bound: Bound,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    /// NaN measurements and evaluation errors both fail.
    fn new(criterion: u8, name: &str, measured: f64, bound: Bound, tolerance: f64) -> Self {
        let ok = !measured.is_nan() && bound.holds(measured, tolerance);
        Check {
            criterion,
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            measured,
            tolerance,
            bound,
            detail: String::new(),
        }
    }

    fn from_result(
        criterion: u8,
        name: &str,
        measured: lambert_step::Result<f64>,
        bound: Bound,
        tolerance: f64,
    ) -> Self {
        match measured {
            Ok(m) => Check::new(criterion, name, m, bound, tolerance),
            Err(e) => Check::new(criterion, name, f64::NAN, bound, tolerance).detail(e.to_string()),
        }
    }

    /// Appends to the detail, keeping any evaluation error already there.
    fn detail(mut self, text: impl Into<String>) -> Self {
        let text = text.into();
        self.detail = if self.detail.is_empty() { text } else { format!("{}; {text}", self.detail) };
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// `PASS [3] name: measured <= tolerance`, plus the detail if any.
    pub fn line(&self) -> String {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        let op = match self.bound {
            Bound::AtMost => "<=",
            Bound::Below => "<",
            Bound::AtLeast => ">=",
            Bound::Above => ">",
        };
        let mut s = format!(
            "{tag} [{}] {}: measured {:.6e} {op} {:.3e}",
            self.criterion, self.name, self.measured, self.tolerance
        );
        if !self.detail.is_empty() {
            s.push_str(" (");
            s.push_str(&self.detail);
            s.push(')');
        }
        s
    }
}

fn unit() -> PhysicsConfig {
    PhysicsConfig::default()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn max_of(values: impl IntoIterator<Item = lambert_step::Result<f64>>) -> lambert_step::Result<f64> {
    let mut worst = 0.0_f64;
    let mut nan = false;
    for v in values {
        let v = v?;
        // f64::max would swallow NaN
        nan |= v.is_nan();
        worst = worst.max(v);
    }
    Ok(if nan { f64::NAN } else { worst })
}

pub fn run(criterion: u8, level: Level) -> Vec<Check> {
    match criterion {
        1 => formula_identity(),
        2 => oracle_cross_validation(level),
        3 => oracle_calibration(level),
        4 => limits(level),
        5 => fixed_point(),
        6 => width_ordering(),
        7 => analytic_residuals(level),
        8 => heun_machinery(level),
        9 => special_functions(level),
        10 => figure_regeneration(),
        _ => Vec::new(),
    }
}

pub fn run_all(level: Level) -> Vec<Check> {
    CRITERIA.flat_map(|n| run(n, level)).collect()
}

/// 10 × 10 grid, E/V0 ∈ [1.01, 10] and σ ∈ [0.05, 5], both log-spaced.
fn energy_width_grid() -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(100);
    for i in 0..10 {
        let ratio = 1.01 * (10.0f64 / 1.01).powf(i as f64 / 9.0);
        for j in 0..10 {
            out.push((ratio, 0.05 * 100f64.powf(j as f64 / 9.0)));
        }
    }
    out
}

/// Largest relative gap between the two closed forms on the grid, with the
/// chosen algebraic form of `a` and barrier height `v0`.
fn forms_gap(v0: f64, form: ATermForm) -> lambert_step::Result<f64> {
    max_of(energy_width_grid().into_iter().map(|(ratio, sigma)| {
        let e = ratio * v0;
        let b = LambertBarrier::new(v0, sigma)?;
        let r_params = reflection_closed_form(&scatter_params_with(e, &b, &unit(), form)?)?.r;
        let r_k = reflection_wavenumbers(&WaveNumbers::new(e, v0, &unit())?, sigma)?.r;
        Ok((r_params - r_k).abs() / r_k)
    }))
}

fn formula_identity() -> Vec<Check> {
    let start = Instant::now();
    let gap = forms_gap(1.0, ATermForm::Consistent);
    let secs = start.elapsed().as_secs_f64();
    // negative control: the typeset a-term only differs from the consistent
    // one when V0 ≠ 1, so it is exercised at V0 = 2
    let tampered = forms_gap(2.0, ATermForm::Printed);
    vec![
        Check::from_result(1, "reflection_forms_max_gap", gap, Bound::AtMost, 1e-12),
        Check::new(1, "reflection_forms_runtime_s", secs, Bound::Below, 1.0),
        Check::from_result(1, "printed_a_term_control_gap", tampered, Bound::Above, 1e-12)
            .detail("control must fail the identity; V0 = 2"),
    ]
}

fn lambert_oracle(e: f64, sigma: f64) -> lambert_step::Result<(f64, f64)> {
    let b = LambertBarrier::new(1.0, sigma)?;
    let cfg = OracleConfig::for_lambert(e, &b, &unit())?;
    let ro = reflection_oracle(&Barrier::Lambert(b).with_physics(unit()), e, &cfg, &unit())?;
    let rc = reflection(e, &b, &unit())?.r;
    Ok(((ro.r - rc).abs() / rc, ro.diagnostics["flux_gap"]))
}

fn oracle_cross_validation(level: Level) -> Vec<Check> {
    let energies: &[f64] = match level {
        Level::Quick => &[1.5, 3.0],
        Level::Full => &[1.1, 1.5, 2.0, 3.0, 5.0],
    };
    let start = Instant::now();
    let mut points = Vec::new();
    for &sigma in &[0.15, 0.5, 1.0] {
        for &e in energies {
            points.push(lambert_oracle(e, sigma));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let rel = max_of(points.iter().map(|p| p.clone().map(|v| v.0)));
    let flux = max_of(points.iter().map(|p| p.clone().map(|v| v.1)));
    vec![
        Check::from_result(2, "oracle_vs_closed_max_rel", rel, Bound::AtMost, 1e-3)
            .detail(format!("{} points", points.len())),
        Check::from_result(2, "oracle_flux_gap", flux, Bound::AtMost, 1e-6),
        Check::new(2, "oracle_runtime_s", secs, Bound::Below, 60.0),
    ]
}

fn oracle_calibration(level: Level) -> Vec<Check> {
    let energies: &[f64] = match level {
        Level::Quick => &[1.5, 3.0],
        Level::Full => &[1.5, 2.0, 3.0],
    };
    let phys = unit();
    let step = max_of(energies.iter().map(|&e| {
        let pot = Barrier::Step(StepBarrier { v0: 1.0 }).with_physics(phys);
        let cfg = OracleConfig::for_step(e, 1.0, &phys)?;
        let ro = reflection_oracle(&pot, e, &cfg, &phys)?.r;
        let rc = reflection_step(&WaveNumbers::new(e, 1.0, &phys)?)?.r;
        Ok((ro - rc).abs() / rc)
    }));
    let tanh = max_of(energies.iter().flat_map(|&e| [0.5, 1.0].map(|d| (e, d))).map(|(e, d)| {
        let t = TanhBarrier::new(1.0, d)?;
        let cfg = OracleConfig::for_tanh(e, &t, &phys)?;
        let ro = reflection_oracle(&Barrier::Tanh(t).with_physics(phys), e, &cfg, &phys)?.r;
        let rc = reflection_tanh(&WaveNumbers::new(e, 1.0, &phys)?, d)?.r;
        Ok((ro - rc).abs() / rc)
    }));
    vec![
        Check::from_result(3, "oracle_step_max_rel", step, Bound::AtMost, 1e-4)
            .detail("jump on a grid node"),
        Check::from_result(3, "oracle_tanh_max_rel", tanh, Bound::AtMost, 1e-4),
    ]
}

/// Least-squares line through `(σ, (R_step - R)/(σ R_step))`, evaluated at
/// `σ = 0`, relative to `2πk2`. Returns `(intercept gap, gap at smallest σ)`.
pub fn small_width_slope(e: f64) -> lambert_step::Result<(f64, f64)> {
    let k = WaveNumbers::new(e, 1.0, &unit())?;
    let rs = reflection_step(&k)?.r;
    let want = 2.0 * PI * k.real_k2()?;
    let sigmas = [1e-2, 1e-3, 1e-4];
    let mut slopes = Vec::with_capacity(3);
    for &sigma in &sigmas {
        let r = reflection_wavenumbers(&k, sigma)?.r;
        slopes.push((rs - r) / (sigma * rs));
    }
    let n = sigmas.len() as f64;
    let mx = sigmas.iter().sum::<f64>() / n;
    let my = slopes.iter().sum::<f64>() / n;
    let sxy: f64 = sigmas.iter().zip(&slopes).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = sigmas.iter().map(|x| (x - mx) * (x - mx)).sum();
    let intercept = my - sxy / sxx * mx;
    Ok(((intercept / want - 1.0).abs(), (slopes[2] / want - 1.0).abs()))
}

fn limits(level: Level) -> Vec<Check> {
    let phys = unit();
    let threshold = (|| {
        let mut lowest = f64::INFINITY;
        for &sigma in &[0.15, 0.5] {
            lowest = lowest.min(reflection(1.0 + 1e-8, &LambertBarrier::new(1.0, sigma)?, &phys)?.r);
        }
        Ok(lowest)
    })();
    let free_closed = max_of([0.5, 2.0, 5.0].iter().map(|&e| Ok(reflection(e, &LambertBarrier::new(0.0, 1.0)?, &phys)?.r)));
    let free_energies: &[f64] = match level {
        Level::Quick => &[2.0],
        Level::Full => &[0.5, 2.0, 5.0],
    };
    let free_oracle = max_of(free_energies.iter().map(|&e| {
        // box sized as for a unit barrier; the potential itself is zero
        let cfg = OracleConfig::for_lambert(e, &LambertBarrier::new(e / 2.0, 1.0)?, &phys)?;
        let pot = Barrier::Lambert(LambertBarrier::new(0.0, 1.0)?).with_physics(phys);
        Ok(reflection_oracle(&pot, e, &cfg, &phys)?.r)
    }));
    let slope = small_width_slope(2.0);
    vec![
        Check::from_result(4, "threshold_min_reflection", threshold, Bound::AtLeast, 0.999)
            .detail("E = V0(1 + 1e-8), sigma in {0.15, 0.5}"),
        Check::from_result(4, "free_particle_closed_form", free_closed, Bound::AtMost, 1e-10),
        Check::from_result(4, "free_particle_oracle", free_oracle, Bound::AtMost, 1e-10),
        Check::from_result(4, "small_width_slope_intercept_rel", slope.clone().map(|s| s.0), Bound::AtMost, 0.02)
            .detail("linear fit over sigma in {1e-2, 1e-3, 1e-4} at E = 2"),
        Check::from_result(4, "small_width_slope_at_1e-4_rel", slope.map(|s| s.1), Bound::AtMost, 0.02),
    ]
}

/// Root of `w e^w = 1` by bisection, independent of the Halley solver.
pub fn omega_by_bisection() -> f64 {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid * mid.exp() < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn fixed_point() -> Vec<Check> {
    let b = LambertBarrier::new(1.0, 1.0).expect("unit barrier");
    let v = b.value(0.0);
    let rounded = (v * 1000.0).round() / 1000.0;
    vec![
        Check::new(5, "fixed_point_three_decimals", (rounded - 0.638).abs(), Bound::AtMost, 0.0)
            .detail(format!("V(x0)/V0 = {v:.12}")),
        Check::new(5, "fixed_point_vs_bisection", (v - 1.0 / (1.0 + omega_by_bisection())).abs(), Bound::AtMost, 1e-9),
    ]
}

fn width_ordering() -> Vec<Check> {
    let ratio = (|| {
        let k = WaveNumbers::new(1.5, 1.0, &unit())?;
        max_of([0.5, 1.0, 2.0, 4.0, 8.0, 12.0].iter().map(|&sigma| {
            Ok(reflection_wavenumbers(&k, sigma)?.r / reflection_tanh(&k, sigma)?.r)
        }))
    })();
    vec![Check::from_result(6, "lambert_over_tanh_max_ratio", ratio, Bound::Below, 1.0)
        .detail("E = 1.5, d = sigma in {0.5, 1, 2, 4, 8, 12}")]
}

const RESIDUAL_SETS: [(f64, f64, f64); 3] = [(2.0, 1.0, 1.0), (1.5, 1.0, 0.5), (3.0, 1.0, 2.0)];

fn analytic_residuals(level: Level) -> Vec<Check> {
    let phys = unit();
    let n = match level {
        Level::Quick => 1001,
        Level::Full => 3001,
    };
    let members = [BasisCoefficients::left_incidence(), BasisCoefficients::tricomi_only()];
    let schrodinger = max_of(RESIDUAL_SETS.iter().flat_map(|&(e, v0, sigma)| {
        members.iter().map(move |coeffs| {
            let b = LambertBarrier::new(v0, sigma)?;
            let pot = Barrier::Lambert(b).with_physics(phys);
            let psi = |x: f64| wavefunction(x, e, &b, coeffs, &phys).map(|p| p.0);
            schrodinger_residual(psi, &pot, e, &Grid::new(-15.0, 15.0, n)?, &phys)
        })
    }));
    let zs: Vec<f64> = (0..=18).map(|j| 10f64.powf(-3.0 + 0.25 * j as f64)).collect();
    let ode = |member: Member| {
        max_of(RESIDUAL_SETS.iter().flat_map(|&(e, v0, sigma)| {
            zs.iter().map(move |&z| {
                let p = scatter_params(e, &LambertBarrier::new(v0, sigma)?, &phys)?;
                hypergeom_ode_residual(|z| basis_jet(member, &p, z), &p, z)
            })
        }))
    };
    vec![
        Check::from_result(7, "schrodinger_residual_max", schrodinger, Bound::AtMost, 1e-6)
            .detail(format!("x in [-15, 15], {n} points, both members, three parameter sets")),
        Check::from_result(7, "hypergeometric_residual_kummer", ode(Member::Kummer), Bound::AtMost, 1e-9),
        Check::from_result(7, "hypergeometric_residual_tricomi", ode(Member::Tricomi), Bound::AtMost, 1e-9),
    ]
}

fn heun_machinery(level: Level) -> Vec<Check> {
    let phys = unit();
    let sets = [(2.0, 0.0, 1.0, 0.0, 1.0), (3.0, 0.0, 1.0, 0.2, 1.0), (1.7, 0.4, 0.8, -0.3, 0.6)];
    let w_eq = max_of(sets.iter().flat_map(|&(e, v0, v1, v3, sigma)| {
        (0..10).map(move |j| {
            let b = GeneralizedBarrier::new(v0, v1, v3, sigma)?;
            let p = map_params(e, &b, &phys).biconfluent();
            let z = c(0.1 + 0.25 * j as f64, 0.05 * j as f64 - 0.2);
            let s = biconfluent_series(&p, z, 120)?;
            w_equation_residual(&p, z, s.u, s.du)
        })
    }));
    let conforming = max_of(
        [(2.0, 0.0, 1.0, 0.0, 1.0), (2.5, 0.3, 1.0, 0.4, 0.8), (3.0, 0.0, 1.0, 2.0, 1.0)]
            .iter()
            .flat_map(|&(e, v0, v1, v3, sigma)| {
                [0.2, 1.0, 3.0, 9.0].map(move |z| {
                    let b = GeneralizedBarrier::new(v0, v1, v3, sigma)?;
                    let p = map_params(e, &b, &phys).biconfluent();
                    Ok(invariant_match(&p, z, &b, e, &phys)?.gap)
                })
            }),
    );
    let control = (|| {
        let b = GeneralizedBarrier::new(0.0, 1.0, 2.0, 1.0)?;
        let p = map_params(3.0, &b, &phys).biconfluent();
        let mut coeffs = b.coefficients(&phys);
        coeffs.v2 *= 1.01;
        Ok(invariant_match_coeffs(&p, 1.0, b.sigma, &coeffs, 3.0, &phys)?.gap)
    })();
    let n = match level {
        Level::Quick => 1001,
        Level::Full => 2001,
    };
    let heun = (|| {
        let b = GeneralizedBarrier::new(0.0, 1.0, 0.2, 1.0)?;
        let pot = Barrier::Generalized(b).with_physics(phys);
        let psi = |x: f64| heun_wavefunction(x, 3.0, &b, &phys).map(|p| p.0);
        schrodinger_residual(psi, &pot, 3.0, &Grid::new(-10.0, 10.0, n)?, &phys)
    })();
    vec![
        Check::from_result(8, "transformed_equation_residual", w_eq, Bound::AtMost, 1e-8),
        Check::from_result(8, "invariant_gap_conforming", conforming, Bound::AtMost, 1e-9),
        Check::from_result(8, "invariant_gap_perturbed_control", control, Bound::Above, 1e-3)
            .detail("V2 scaled by 1.01"),
        Check::from_result(8, "heun_schrodinger_residual", heun, Bound::AtMost, 1e-6)
            .detail("V1 = 1, V3 = 0.2, sigma = 1, E = 3"),
        Check::from_result(8, "reduction_wronskian", reduction_wronskian(), Bound::AtMost, 1e-8),
    ]
}

/// Normalized Wronskian between the Heun-built solution for `V3 = 0` and the
/// combination of exact basis members it should equal.
fn reduction_wronskian() -> lambert_step::Result<f64> {
    let phys = unit();
    let (e, v, sigma) = (2.0, 1.0, 1.0);
    let gen = GeneralizedBarrier::new(0.0, v, 0.0, sigma)?;
    let lam = LambertBarrier::new(v, sigma)?;
    let sp = scatter_params(e, &lam, &phys)?;
    let (aa, bb) = (c(0.0, sp.a.re), c(0.0, sp.delta.re));
    // M(ia; iδ; isz) in the (transmitted, Tricomi) basis
    let c2 = (log_gamma(aa - bb + 1.0)? - log_gamma(1.0 - bb)?).exp();
    let c1 = -(log_gamma(aa - bb + 1.0)? + log_gamma(bb - 1.0)? - log_gamma(1.0 - bb)? - log_gamma(aa)?).exp();
    let mix = BasisCoefficients::new(c1, c2)?;
    max_of((0..=20).map(|j| {
        let x = -5.0 + 0.5 * j as f64;
        let (h, dh) = heun_wavefunction(x, e, &gen, &phys)?;
        let (m, dm) = wavefunction(x, e, &lam, &mix, &phys)?;
        Ok((h * dm - dh * m).norm() / ((h * dm).norm() + (dh * m).norm()))
    }))
}

fn kummer_residual(a: Complex64, b: Complex64, w: Complex64) -> lambert_step::Result<f64> {
    let m = kummer_m(a, b, w)?;
    let m1 = a / b * kummer_m(a + 1.0, b + 1.0, w)?;
    let m2 = a * (a + 1.0) / (b * (b + 1.0)) * kummer_m(a + 2.0, b + 2.0, w)?;
    Ok(scaled(&[w * m2, (b - w) * m1, -a * m]))
}

fn tricomi_residual(a: Complex64, b: Complex64, w: Complex64) -> lambert_step::Result<f64> {
    let u = tricomi_u(a, b, w)?;
    let u1 = -a * tricomi_u(a + 1.0, b + 1.0, w)?;
    let u2 = a * (a + 1.0) * tricomi_u(a + 2.0, b + 2.0, w)?;
    Ok(scaled(&[w * u2, (b - w) * u1, -a * u]))
}

fn scaled(terms: &[Complex64]) -> f64 {
    let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    terms.iter().sum::<Complex64>().norm() / scale
}

fn special_functions(level: Level) -> Vec<Check> {
    let w_points = match level {
        Level::Quick => 241,
        Level::Full => 1201,
    };
    let w_identity = max_of((0..w_points).map(|i| {
        let t = 10f64.powf(-6.0 + 12.0 * i as f64 / (w_points - 1) as f64);
        let w = lambert_w(t)?;
        Ok((w * w.exp() - t).abs() / t)
    }));
    let gamma = max_of([0.1, 0.5, 1.0, 2.0, 5.0, 10.0].iter().map(|&y| {
        let modsq = (2.0 * log_gamma(c(1.0, y))?.re).exp();
        let want = PI * y / (PI * y).sinh();
        Ok((modsq - want).abs() / want)
    }));
    // operating range: s = 2σk1, δ = 2σk2, E/V0 ∈ [1.01, 10], σ ∈ [0.05, 2]
    let (sigmas, energies, zs): (&[f64], &[f64], &[f64]) = match level {
        Level::Quick => (&[0.05, 1.0], &[1.01, 5.0], &[0.01, 3.0, 12.0]),
        Level::Full => (&[0.05, 0.3, 1.0, 2.0], &[1.01, 2.0, 5.0, 10.0], &[0.01, 0.5, 3.0, 12.0]),
    };
    let mut params = Vec::new();
    for &sigma in sigmas {
        for &e in energies {
            let (s, d) = (2.0 * sigma * f64::sqrt(e), 2.0 * sigma * f64::sqrt(e - 1.0));
            let a = (s + d).powi(2) / (4.0 * s);
            for &z in zs {
                params.push((a, d, c(0.0, s * z)));
            }
        }
    }
    let kummer = max_of(params.iter().flat_map(|&(a, d, w)| {
        [kummer_residual(c(1.0, a - d), c(2.0, -d), w), kummer_residual(c(0.0, a), c(0.0, d), w)]
    }));
    let tricomi = max_of(params.iter().map(|&(a, d, w)| tricomi_residual(c(0.0, a), c(0.0, d), w)));
    vec![
        Check::from_result(9, "lambert_w_identity", w_identity, Bound::AtMost, 1e-13)
            .detail("t in [1e-6, 1e6]"),
        Check::from_result(9, "gamma_modulus_identity", gamma, Bound::AtMost, 1e-12),
        Check::from_result(9, "kummer_ode_residual", kummer, Bound::AtMost, 1e-10),
        Check::from_result(9, "tricomi_ode_residual", tricomi, Bound::AtMost, 1e-10),
    ]
}

/// Reflection sweep of the step/tanh comparison figure: V0 = 1, σ = 0.15,
/// d = 0.5, E ∈ [1.01, 4], 200 points.
pub fn comparison_figure_args() -> ReflectArgs {
    ReflectArgs {
        v0: 1.0,
        sigma: 0.15,
        emin: 1.01,
        emax: 4.0,
        n: 200,
        compare: vec![Comparison::Step, Comparison::Tanh],
        d: Some(0.5),
        ..Default::default()
    }
}

fn figure_regeneration() -> Vec<Check> {
    let table = match reflect_table(&comparison_figure_args(), &unit(), 1) {
        Ok(t) => t,
        Err(e) => {
            return ["figure_curves_monotone", "figure_lambert_below_step", "figure_lambert_below_tanh"]
                .iter()
                .map(|name| Check::new(10, name, f64::NAN, Bound::AtMost, 0.0).detail(e.to_string()))
                .collect();
        }
    };
    let col = |name| table.column(name).expect("column present");
    let (rl, rs, rt) = (col("R_lambert"), col("R_step"), col("R_tanh"));
    let rises = [&rl, &rs, &rt]
        .iter()
        .map(|curve| curve.windows(2).filter(|w| !(w[1] < w[0])).count())
        .sum::<usize>();
    let max_ratio = |other: &[f64]| rl.iter().zip(other).map(|(a, b)| a / b).fold(0.0, f64::max);
    let observed = if rl.iter().zip(&rs).zip(&rt).all(|((l, s), t)| s > l && l > t) {
        "observed at every energy: R_step > R_lambert > R_tanh"
    } else {
        "mixed ordering across the sweep"
    };
    vec![
        Check::new(10, "figure_curves_monotone", rises as f64, Bound::AtMost, 0.0)
            .detail("non-decreasing steps over the three curves"),
        Check::new(10, "figure_lambert_below_step", max_ratio(&rs), Bound::Below, 1.0)
            .detail("max R_lambert / R_step"),
        Check::new(10, "figure_lambert_below_tanh", max_ratio(&rt), Bound::Below, 1.0)
            .detail(format!("max R_lambert / R_tanh; {observed}")),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_compare_as_named() {
        assert!(Bound::AtMost.holds(1.0, 1.0));
        assert!(!Bound::Below.holds(1.0, 1.0));
        assert!(Bound::AtLeast.holds(1.0, 1.0));
        assert!(!Bound::Above.holds(1.0, 1.0));
    }

    #[test]
    fn nan_and_errors_fail() {
        assert!(!Check::new(1, "x", f64::NAN, Bound::AtMost, 1.0).passed());
        let err = Err(lambert_step::Error::Domain("boom".into()));
        let chk = Check::from_result(1, "x", err, Bound::AtMost, 1.0);
        assert!(!chk.passed());
        assert!(chk.line().contains("boom"));
    }

    #[test]
    fn max_of_keeps_nan() {
        assert!(max_of([Ok(1.0), Ok(f64::NAN), Ok(0.5)]).unwrap().is_nan());
    }

    #[test]
    fn omega_bisection_is_the_omega_constant() {
        assert!((omega_by_bisection() - lambert_step::specfun::OMEGA).abs() < 1e-15);
    }
}
