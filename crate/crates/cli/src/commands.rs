//! Table builders behind the `potential`, `reflect` and `wavefunction`
//! subcommands. They are pure; writing happens in [`crate::run`].

use crate::args::{
    Comparison, PotentialArgs, PotentialKind, ReflectArgs, ReflectMethod, Sweep, WavefunctionArgs,
};
use crate::error::{CliError, CliResult};
use crate::table::{format_number, linspace, Table};
use lambert_step::analytic::{
    reflection, reflection_of_step, reflection_of_tanh, wavefunction_with, scatter_params,
    BasisCoefficients,
};
use lambert_step::oracle::{reflection_oracle, OracleConfig};
use lambert_step::potentials::{
    evaluate, Barrier, GeneralizedBarrier, LambertBarrier, StepBarrier, TanhBarrier,
};
use lambert_step::{Complex64, PhysicsConfig};
use rayon::prelude::*;
use std::path::{Path, PathBuf};

/// Maps `f` over `items` on `jobs` threads; results keep input order.
pub fn par_map<T, R, F>(jobs: usize, items: &[T], f: F) -> CliResult<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> CliResult<R> + Sync + Send,
{
    if jobs <= 1 {
        return items.iter().map(&f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Io(e.into()))?;
    pool.install(|| items.par_iter().map(&f).collect())
}

fn check_grid(xmin: f64, xmax: f64, n: usize) -> CliResult<()> {
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    if !(xmin < xmax) || !xmin.is_finite() || !xmax.is_finite() {
        return Err(CliError::Usage(format!("need finite xmin < xmax, got [{xmin}, {xmax}]")));
    }
    Ok(())
}

/// A CSV destined for `path`, or stdout when `None`.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub path: Option<PathBuf>,
    pub table: Table,
}

/// `out.csv` → `out_sigma2.csv`.
fn tagged_path(out: &Path, param: &str, value: f64) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match out.extension() {
        Some(ext) => format!("{stem}_{param}{value}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{param}{value}"),
    };
    out.with_file_name(name)
}

pub fn potential(args: &PotentialArgs, physics: &PhysicsConfig, jobs: usize) -> CliResult<Vec<Output>> {
    check_grid(args.xmin, args.xmax, args.n)?;
    let (param, widths): (&str, Vec<f64>) = match args.kind {
        PotentialKind::Lambert | PotentialKind::Generalized => ("sigma", args.sigma.clone()),
        PotentialKind::Tanh => ("d", args.d.clone()),
        PotentialKind::Step => ("", vec![f64::NAN]),
    };
    if widths.len() > 1 && args.out.is_none() {
        return Err(CliError::Usage(format!("several values of --{param} need --out")));
    }
    let xs = linspace(args.xmin, args.xmax, args.n);
    let mut outputs = Vec::with_capacity(widths.len());
    for &w in &widths {
        let table = potential_table(args, w, &xs, physics, jobs)?;
        let path = match &args.out {
            Some(out) if widths.len() > 1 => Some(tagged_path(out, param, w)),
            other => other.clone(),
        };
        outputs.push(Output { path, table });
    }
    Ok(outputs)
}

fn potential_table(
    args: &PotentialArgs,
    width: f64,
    xs: &[f64],
    physics: &PhysicsConfig,
    jobs: usize,
) -> CliResult<Table> {
    let x0 = args.x0;
    let (barrier, with_z) = match args.kind {
        PotentialKind::Lambert => (Barrier::Lambert(LambertBarrier::with_offset(args.v0, width, x0)?), true),
        PotentialKind::Generalized => {
            let mut g = GeneralizedBarrier::new(args.v0, args.v1, args.v3, width)?;
            g.x0 = x0;
            (Barrier::Generalized(g), true)
        }
        PotentialKind::Tanh => (Barrier::Tanh(TanhBarrier::new(args.v0, width)?), false),
        PotentialKind::Step => (Barrier::Step(StepBarrier { v0: args.v0 }), false),
    };
    let row = |&x: &f64| -> CliResult<Vec<f64>> {
        Ok(match barrier {
            Barrier::Lambert(b) => vec![x, b.value(x), b.z(x)],
            Barrier::Generalized(g) => vec![x, g.value(x, physics), g.z(x)],
            // the comparison barriers carry no offset of their own
            _ => vec![x, evaluate(&barrier, x - x0, physics)?],
        })
    };
    let mut table = Table::new(if with_z { vec!["x", "V", "z"] } else { vec!["x", "V"] });
    table.rows = par_map(jobs, xs, row)?;
    Ok(table)
}

pub fn reflect(args: &ReflectArgs, physics: &PhysicsConfig, jobs: usize) -> CliResult<Output> {
    Ok(Output { path: args.out.clone(), table: reflect_table(args, physics, jobs)? })
}

/// Rows `E,R_lambert[,R_oracle][,R_step][,R_tanh][,rel_gap]` (first column
/// `sigma` for a σ sweep). With `--method oracle` the closed-form column is
/// left out.
pub fn reflect_table(args: &ReflectArgs, physics: &PhysicsConfig, jobs: usize) -> CliResult<Table> {
    if args.n < 1 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    // (E, σ) per row
    let points: Vec<(f64, f64)> = match args.sweep {
        Sweep::Energy => {
            if !(args.emin <= args.emax) {
                return Err(CliError::Usage(format!("need emin ≤ emax, got {} > {}", args.emin, args.emax)));
            }
            if !(args.emin > args.v0) {
                return Err(CliError::Regime(format!(
                    "emin = {} must lie above the barrier height v0 = {}",
                    args.emin, args.v0
                )));
            }
            linspace(args.emin, args.emax, args.n).into_iter().map(|e| (e, args.sigma)).collect()
        }
        Sweep::Sigma => {
            if !(0.0 < args.sigma_min && args.sigma_min <= args.sigma_max) {
                return Err(CliError::Usage(format!(
                    "need 0 < sigma-min ≤ sigma-max, got [{}, {}]",
                    args.sigma_min, args.sigma_max
                )));
            }
            if !(args.energy > args.v0) {
                return Err(CliError::Regime(format!(
                    "energy = {} must lie above the barrier height v0 = {}",
                    args.energy, args.v0
                )));
            }
            linspace(args.sigma_min, args.sigma_max, args.n).into_iter().map(|s| (args.energy, s)).collect()
        }
    };
    let closed = args.method != ReflectMethod::Oracle;
    let oracle = args.method != ReflectMethod::Closed;
    let step = args.compare.contains(&Comparison::Step);
    let tanh = args.compare.contains(&Comparison::Tanh);

    let mut header = vec![match args.sweep {
        Sweep::Energy => "E",
        Sweep::Sigma => "sigma",
    }];
    if closed {
        header.push("R_lambert");
    }
    if oracle {
        header.push("R_oracle");
    }
    if step {
        header.push("R_step");
    }
    if tanh {
        header.push("R_tanh");
    }
    if closed && oracle {
        header.push("rel_gap");
    }

    let row = |&(e, sigma): &(f64, f64)| -> CliResult<Vec<f64>> {
        let b = LambertBarrier::new(args.v0, sigma)?;
        let mut out = vec![match args.sweep {
            Sweep::Energy => e,
            Sweep::Sigma => sigma,
        }];
        let rc = if closed { Some(reflection(e, &b, physics)?.r) } else { None };
        let ro = if oracle {
            let cfg = OracleConfig::for_lambert(e, &b, physics)?;
            Some(reflection_oracle(&Barrier::Lambert(b).with_physics(*physics), e, &cfg, physics)?.r)
        } else {
            None
        };
        out.extend(rc);
        out.extend(ro);
        if step {
            out.push(reflection_of_step(e, &StepBarrier { v0: args.v0 }, physics)?.r);
        }
        if tanh {
            let t = TanhBarrier::new(args.v0, args.d.unwrap_or(sigma))?;
            out.push(reflection_of_tanh(e, &t, physics)?.r);
        }
        if let (Some(rc), Some(ro)) = (rc, ro) {
            out.push((ro - rc).abs() / rc);
        }
        Ok(out)
    };
    let mut table = Table::new(header);
    table.rows = par_map(jobs, &points, row)?;
    Ok(table)
}

pub fn wavefunction(args: &WavefunctionArgs, physics: &PhysicsConfig, jobs: usize) -> CliResult<Output> {
    Ok(Output { path: args.out.clone(), table: wavefunction_table(args, physics, jobs)? })
}

pub fn wavefunction_table(args: &WavefunctionArgs, physics: &PhysicsConfig, jobs: usize) -> CliResult<Table> {
    check_grid(args.xmin, args.xmax, args.n)?;
    let coeffs = BasisCoefficients::new(
        Complex64::new(args.c1_re, args.c1_im),
        Complex64::new(args.c2_re, args.c2_im),
    )?;
    if !(args.e > args.v0) {
        return Err(CliError::Regime(format!(
            "e = {} must lie above the barrier height v0 = {}",
            args.e, args.v0
        )));
    }
    let b = LambertBarrier::new(args.v0, args.sigma)?;
    let p = scatter_params(args.e, &b, physics)?;
    let xs = linspace(args.xmin, args.xmax, args.n);
    let row = |&x: &f64| -> CliResult<Vec<f64>> {
        let (psi, _) = wavefunction_with(x, &p, &b, &coeffs)?;
        Ok(vec![x, psi.re, psi.im, psi.norm_sqr()])
    };
    let mut table = Table::new(["x", "re_psi", "im_psi", "density"]);
    table.rows = par_map(jobs, &xs, row)?;
    if let Some(bad) = table.rows.iter().find(|r| r.iter().any(|v| !v.is_finite())) {
        return Err(CliError::Regime(format!(
            "non-finite wavefunction at x = {}",
            format_number(bad[0])
        )));
    }
    Ok(table)
}
