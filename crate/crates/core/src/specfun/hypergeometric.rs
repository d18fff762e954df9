//! Kummer `M(a; b; z) = 1F1(a; b; z)` and Tricomi `U(a; b; z)` for complex
//! parameters and argument.
//!
//! `M` is summed as a power series in double-double arithmetic for
//! `|z| ≤ SERIES_RADIUS`. Beyond that the large-argument representation is
//! used, with Kummer's transformation `M(a;b;z) = e^z M(b-a;b;-z)` first
//! when `Re z < 0`; if its truncation error is poor (large parameters) the
//! double-double series is tried as well and the better estimate wins.
//!
//! `U` comes from the two-`M` connection formula unless the argument is
//! large enough for its asymptotic series, or the two `M` terms cancel by
//! more than [`MAX_CANCELLATION`].

use super::dd::CDd;
use super::gamma::{digamma, is_pole, ln_rgamma, log_gamma};
use super::near_integer;
use super::power::principal_ln;
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// `|z|` up to which the Kummer power series is the primary method.
pub const SERIES_RADIUS: f64 = 30.0;
/// Largest `|z|` at which the double-double series is still attempted.
const SERIES_LIMIT: f64 = 80.0;
/// Connection-formula cancellation (ratio of largest term to result) above
/// which the asymptotic series is preferred for `U`: six digits.
pub const MAX_CANCELLATION: f64 = 1e6;
/// Target relative error for accepting a large-argument expansion outright.
const ASYMPTOTIC_ACCEPT: f64 = 1e-14;
const MAX_TERMS: usize = 4000;

/// Which representation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    Series,
    Asymptotic,
    KummerTransform,
    Connection,
    LogarithmicSeries,
}

/// A function value together with its estimated relative error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub rel_error: f64,
    pub method: Method,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn check_b(b: Complex64) -> Result<()> {
    if let Some((n, dist)) = near_integer(b) {
        if n <= 0.0 {
            return Err(Error::IllConditioned(format!(
                "Kummer M with b = {b} within {dist:.1e} of the non-positive integer {n}"
            )));
        }
    }
    Ok(())
}

fn finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Confluent hypergeometric function `M(a; b; z) = 1F1(a; b; z)`.
pub fn kummer_m(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    kummer_m_with_error(a, b, z).map(|e| e.value)
}

/// [`kummer_m`] with an error estimate and the method used.
pub fn kummer_m_with_error(a: Complex64, b: Complex64, z: Complex64) -> Result<Evaluation> {
    if !(finite(a) && finite(b) && finite(z)) {
        return Err(Error::Domain("kummer_m with non-finite input".into()));
    }
    check_b(b)?;
    if z == c(0.0, 0.0) || a == c(0.0, 0.0) {
        return Ok(Evaluation { value: c(1.0, 0.0), rel_error: 0.0, method: Method::Exact });
    }
    if a == b {
        return Ok(Evaluation { value: z.exp(), rel_error: f64::EPSILON, method: Method::Exact });
    }
    let r = z.norm();
    if r <= SERIES_RADIUS {
        return series_dd(a, b, z);
    }
    let large = if z.re < 0.0 {
        let mut e = m_asymptotic(b - a, b, -z)?;
        e.value *= z.exp();
        e.method = Method::KummerTransform;
        e
    } else {
        m_asymptotic(a, b, z)?
    };
    if large.rel_error <= ASYMPTOTIC_ACCEPT || r > SERIES_LIMIT {
        return Ok(large);
    }
    let series = series_dd(a, b, z)?;
    Ok(if series.rel_error < large.rel_error { series } else { large })
}

/// Power series of `M` in double-double arithmetic.
fn series_dd(a: Complex64, b: Complex64, z: Complex64) -> Result<Evaluation> {
    let zd = CDd::from(z);
    let mut term = CDd::ONE;
    let mut sum = CDd::ONE;
    let mut largest = 1.0_f64;
    let r = z.norm();
    let mut n = 0usize;
    loop {
        let nf = n as f64;
        let num = CDd::from(a + nf) * zd;
        let den = CDd::from(b + nf) * CDd::from(c(nf + 1.0, 0.0));
        term = term * num / den;
        sum = sum + term;
        n += 1;
        let tn = term.norm();
        largest = largest.max(tn);
        if tn == 0.0 {
            break;
        }
        if nf > r && tn <= 1e-33 * sum.norm() {
            break;
        }
        if n >= MAX_TERMS {
            return Err(Error::IllConditioned(format!(
                "Kummer series for a = {a}, b = {b}, z = {z} did not converge"
            )));
        }
    }
    let value = sum.to_c64();
    let mag = value.norm();
    // Double-double relative rounding is ~1e-32 per operation.
    let rel_error = if mag > 0.0 {
        (1e-31 * (n as f64).sqrt() * largest / mag).max(f64::EPSILON / 2.0)
    } else {
        f64::INFINITY
    };
    Ok(Evaluation { value, rel_error, method: Method::Series })
}

/// Asymptotic series `Σ_s (p)_s (q)_s / s! · x^{-s}` truncated at its
/// smallest term. Returns the sum and the magnitude of the first omitted term
/// relative to the sum.
fn asymptotic_sum(p: Complex64, q: Complex64, x: Complex64) -> (Complex64, f64) {
    let inv = 1.0 / x;
    let mut term = c(1.0, 0.0);
    let mut sum = c(1.0, 0.0);
    let mut prev = 1.0_f64;
    for s in 0..MAX_TERMS {
        let sf = s as f64;
        let next = term * (p + sf) * (q + sf) * inv / (sf + 1.0);
        let nn = next.norm();
        if nn == 0.0 {
            return (sum, 0.0);
        }
        if nn > prev {
            return (sum, nn / sum.norm());
        }
        sum += next;
        term = next;
        prev = nn;
        if nn <= 0.25 * f64::EPSILON * sum.norm() {
            return (sum, f64::EPSILON);
        }
    }
    (sum, prev / sum.norm())
}

/// Large-`|z|` form of `M` built from two Tricomi asymptotic series.
///
/// `M(a,b,z)/Γ(b) = e^{±iπa}/Γ(b-a) U(a,b,z) + e^{±iπ(b-a)}/Γ(a) e^z U(b-a,b,e^{±iπ}z)`
/// with the upper sign for `Im z ≥ 0`.
fn m_asymptotic(a: Complex64, b: Complex64, z: Complex64) -> Result<Evaluation> {
    let sign = if z.im >= 0.0 { 1.0 } else { -1.0 };
    let i = Complex64::i();
    let ln_z = principal_ln(z);
    let ln_gb = log_gamma(b)?;

    let mut value = c(0.0, 0.0);
    let mut abs_err = 0.0;
    // U(a, b, z) ~ z^{-a} Σ (a)_s (a-b+1)_s / s! (-z)^{-s}
    if let Some(lr) = ln_rgamma(b - a) {
        let (s1, e1) = asymptotic_sum(a, a - b + 1.0, -z);
        let pref = (ln_gb + lr + sign * i * PI * a - a * ln_z).exp();
        let t = pref * s1;
        value += t;
        abs_err += t.norm() * e1;
    }
    // U(b-a, b, ζ), ζ = e^{±iπ} z, so (-ζ)^{-s} = z^{-s}
    if let Some(lr) = ln_rgamma(a) {
        let (s2, e2) = asymptotic_sum(b - a, 1.0 - a, z);
        let ln_zeta = ln_z + sign * i * PI;
        let pref = (ln_gb + lr + sign * i * PI * (b - a) + z - (b - a) * ln_zeta).exp();
        let t = pref * s2;
        value += t;
        abs_err += t.norm() * e2;
    }
    let mag = value.norm();
    let rel_error = if mag > 0.0 { (abs_err / mag).max(f64::EPSILON) } else { f64::INFINITY };
    Ok(Evaluation { value, rel_error, method: Method::Asymptotic })
}

/// `U(a, b, z) ~ z^{-a} Σ (a)_s (a-b+1)_s / s! (-z)^{-s}`, principal `z^{-a}`.
fn u_asymptotic(a: Complex64, b: Complex64, z: Complex64) -> Evaluation {
    let (s, err) = asymptotic_sum(a, a - b + 1.0, -z);
    let value = (-a * principal_ln(z)).exp() * s;
    Evaluation { value, rel_error: err.max(f64::EPSILON), method: Method::Asymptotic }
}

/// Tricomi confluent hypergeometric function `U(a; b; z)` (principal branch).
pub fn tricomi_u(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    tricomi_u_with_error(a, b, z).map(|e| e.value)
}

/// [`tricomi_u`] with an error estimate and the method used.
pub fn tricomi_u_with_error(a: Complex64, b: Complex64, z: Complex64) -> Result<Evaluation> {
    if !(finite(a) && finite(b) && finite(z)) {
        return Err(Error::Domain("tricomi_u with non-finite input".into()));
    }
    if z == c(0.0, 0.0) {
        return Err(Error::Domain("tricomi_u at z = 0".into()));
    }
    if a == c(0.0, 0.0) {
        return Ok(Evaluation { value: c(1.0, 0.0), rel_error: 0.0, method: Method::Exact });
    }
    // U(a, a+1, z) = z^{-a}
    if b == a + 1.0 {
        let value = (-a * principal_ln(z)).exp();
        return Ok(Evaluation { value, rel_error: f64::EPSILON, method: Method::Exact });
    }
    let large = (z.norm() > SERIES_RADIUS).then(|| u_asymptotic(a, b, z));
    if let Some(e) = large {
        if e.rel_error <= ASYMPTOTIC_ACCEPT {
            return Ok(e);
        }
    }

    if let Some((n, dist)) = near_integer(b) {
        if dist != 0.0 {
            return Err(Error::IllConditioned(format!(
                "Tricomi U with b = {b} within {dist:.1e} of the integer {n}"
            )));
        }
        let e = u_integer_b(a, n, z)?;
        return Ok(pick(e, large));
    }

    let (conn, cancellation) = u_connection(a, b, z)?;
    if cancellation > MAX_CANCELLATION {
        let asym = large.unwrap_or_else(|| u_asymptotic(a, b, z));
        return Ok(pick(conn, Some(asym)));
    }
    Ok(conn)
}

fn pick(primary: Evaluation, alt: Option<Evaluation>) -> Evaluation {
    match alt {
        Some(a) if a.rel_error < primary.rel_error => a,
        _ => primary,
    }
}

/// `U = Γ(1-b)/Γ(a-b+1) M(a,b,z) + Γ(b-1)/Γ(a) z^{1-b} M(a-b+1,2-b,z)`.
///
/// Also returns the cancellation ratio `max |term| / |U|`.
fn u_connection(a: Complex64, b: Complex64, z: Complex64) -> Result<(Evaluation, f64)> {
    let ln_z = principal_ln(z);
    let mut terms = [c(0.0, 0.0); 2];
    let mut errs = [0.0; 2];
    if let Some(lr) = ln_rgamma(a - b + 1.0) {
        let m = kummer_m_with_error(a, b, z)?;
        terms[0] = (log_gamma(1.0 - b)? + lr).exp() * m.value;
        errs[0] = m.rel_error;
    }
    if let Some(lr) = ln_rgamma(a) {
        let m = kummer_m_with_error(a - b + 1.0, 2.0 - b, z)?;
        terms[1] = (log_gamma(b - 1.0)? + lr + (1.0 - b) * ln_z).exp() * m.value;
        errs[1] = m.rel_error;
    }
    let value = terms[0] + terms[1];
    let mag = value.norm();
    let abs_err = terms[0].norm() * (errs[0] + 4.0 * f64::EPSILON)
        + terms[1].norm() * (errs[1] + 4.0 * f64::EPSILON);
    let rel_error = if mag > 0.0 { abs_err / mag } else { f64::INFINITY };
    let cancellation = terms[0].norm().max(terms[1].norm()) / mag;
    Ok((Evaluation { value, rel_error, method: Method::Connection }, cancellation))
}

/// `U(a, b, z)` for integer `b` via the logarithmic series (DLMF 13.2.9),
/// reducing `b ≤ 0` with `U(a,b,z) = z^{1-b} U(a-b+1, 2-b, z)`.
fn u_integer_b(a: Complex64, b_int: f64, z: Complex64) -> Result<Evaluation> {
    if b_int <= 0.0 {
        let b = c(b_int, 0.0);
        let mut e = u_integer_b(a - b + 1.0, 2.0 - b_int, z)?;
        e.value *= ((1.0 - b) * principal_ln(z)).exp();
        return Ok(e);
    }
    let n = (b_int - 1.0) as usize;
    let nf = n as f64;
    if is_pole(a) || is_pole(a - nf) {
        return Err(Error::Unsupported(format!(
            "Tricomi U with integer b = {b_int} and integer a = {a}"
        )));
    }
    let ln_z = principal_ln(z);
    // (-1)^{n+1} / (n! Γ(a-n))
    let ln_nfact = log_gamma(c(nf + 1.0, 0.0))?;
    let sign = if (n + 1) % 2 == 0 { 1.0 } else { -1.0 };
    let pref = sign * (-(ln_nfact + log_gamma(a - nf)?)).exp();

    let euler = 0.577_215_664_901_532_9;
    let mut psi_a = digamma(a)?;
    let mut h_k = 0.0; // harmonic number H_k
    let mut h_nk: f64 = (1..=n).map(|j| 1.0 / j as f64).sum(); // H_{n+k}
    let mut term = c(1.0, 0.0); // (a)_k / ((n+1)_k k!) z^k
    let mut sum = c(0.0, 0.0);
    let mut largest = 0.0_f64;
    let r = z.norm();
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        // ψ(1+k) = -γ + H_k, ψ(n+k+1) = -γ + H_{n+k}
        let bracket = ln_z + psi_a - (-euler + h_k) - (-euler + h_nk);
        let t = term * bracket;
        sum += t;
        largest = largest.max(t.norm());
        if kf > r && t.norm() <= 1e-17 * sum.norm() {
            break;
        }
        psi_a += 1.0 / (a + kf);
        h_k += 1.0 / (kf + 1.0);
        h_nk += 1.0 / (nf + kf + 1.0);
        term *= (a + kf) * z / ((nf + 1.0 + kf) * (kf + 1.0));
    }
    let mut value = pref * sum;
    let mut abs_err = (pref * largest).norm() * 8.0 * f64::EPSILON;
    if n > 0 {
        let ln_ra = ln_rgamma(a);
        if let Some(lr) = ln_ra {
            let mut finite_sum = c(0.0, 0.0);
            for k in 1..=n {
                // (k-1)! (1-a+k)_{n-k} / (n-k)! z^{-k}
                let mut poch = c(1.0, 0.0);
                for j in 0..(n - k) {
                    poch *= 1.0 - a + k as f64 + j as f64;
                }
                let fact_km1: f64 = (1..k).map(|j| j as f64).product();
                let fact_nmk: f64 = (1..=(n - k)).map(|j| j as f64).product();
                finite_sum += fact_km1 * poch / fact_nmk * z.powi(-(k as i32));
            }
            let t = lr.exp() * finite_sum;
            abs_err += t.norm() * 4.0 * f64::EPSILON;
            value += t;
        }
    }
    let mag = value.norm();
    let rel_error = if mag > 0.0 { abs_err / mag } else { f64::INFINITY };
    Ok(Evaluation { value, rel_error, method: Method::LogarithmicSeries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn m_trivial_cases() {
        let a = c(0.3, -1.2);
        assert_eq!(kummer_m(a, c(2.5, 0.7), c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        let z = c(-1.7, 4.0);
        assert!(rel(kummer_m(a, a, z).unwrap(), z.exp()) < 1e-15);
    }

    #[test]
    fn m_one_two() {
        // M(1; 2; z) = (e^z - 1)/z; cross-check with a 200-term direct sum
        let direct: f64 = (0..200)
            .scan(1.0_f64, |t, n| {
                let cur = *t;
                *t *= 1.0 / (n as f64 + 2.0);
                Some(cur)
            })
            .sum();
        assert!((direct - (E - 1.0)).abs() < 1e-15);
        let m = kummer_m(c(1.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!((m - c(E - 1.0, 0.0)).norm() < 1e-15);
        // far outside the series radius, on both sides
        for &x in &[45.0, -45.0, 120.0] {
            let m = kummer_m(c(1.0, 0.0), c(2.0, 0.0), c(x, 0.0)).unwrap();
            let want = (f64::exp(x) - 1.0) / x;
            assert!((m.re - want).abs() <= 1e-13 * want.abs(), "x = {x}: {m}");
        }
    }

    #[test]
    fn m_rejects_nonpositive_integer_b() {
        let r = kummer_m(c(0.5, 0.0), c(-2.0 + 1e-10, 0.0), c(1.0, 0.0));
        assert!(matches!(r, Err(Error::IllConditioned(_))));
        assert!(kummer_m(c(0.5, 0.0), c(0.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(kummer_m(c(0.5, 0.0), c(-2.0, 1e-6), c(1.0, 0.0)).is_ok());
    }

    #[test]
    fn m_terminating_polynomial() {
        // M(-2; b; z) = 1 - 2z/b + z^2/(b(b+1))
        let b = c(0.5, 1.0);
        let z = c(3.0, -2.0);
        let want = 1.0 - 2.0 * z / b + z * z / (b * (b + 1.0));
        assert!(rel(kummer_m(c(-2.0, 0.0), b, z).unwrap(), want) < 1e-14);
    }

    #[test]
    fn u_closed_form_b_equals_a_plus_one() {
        let a = c(0.3, 0.8);
        let z = c(0.0, 7.0);
        let want = (-a * principal_ln(z)).exp();
        assert!(rel(tricomi_u(a, a + 1.0, z).unwrap(), want) < 1e-15);
    }

    #[test]
    fn u_integer_b_against_quadrature() {
        // U(1;1;1) = e E1(1) = ∫_0^∞ e^{-t}/(1+t) dt
        let n = 200_000;
        // substitute t = s/(1-s) on [0,1), composite Simpson
        let f = |s: f64| {
            if s >= 1.0 {
                return 0.0;
            }
            let t = s / (1.0 - s);
            (-t).exp() / (1.0 + t) / ((1.0 - s) * (1.0 - s))
        };
        let h = 1.0 / n as f64;
        let mut acc = f(0.0) + f(1.0);
        for i in 1..n {
            acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h);
        }
        let quad = acc * h / 3.0;
        assert!((quad - 0.596_347_362_323_194).abs() < 1e-12);
        let u = tricomi_u(c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!((u - c(quad, 0.0)).norm() < 1e-12, "{u}");
    }

    #[test]
    fn u_guards() {
        assert!(matches!(
            tricomi_u(c(0.5, 0.2), c(0.3, 0.0), c(0.0, 0.0)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            tricomi_u(c(0.5, 0.2), c(2.0 + 1e-10, 0.0), c(1.0, 0.0)),
            Err(Error::IllConditioned(_))
        ));
    }

    #[test]
    fn u_nonpositive_integer_b() {
        // U(a, 0, z) = z U(a+1, 2, z)
        let a = c(0.7, 0.4);
        let z = c(1.3, 0.9);
        let lhs = tricomi_u(a, c(0.0, 0.0), z).unwrap();
        let rhs = z * tricomi_u(a + 1.0, c(2.0, 0.0), z).unwrap();
        assert!(rel(lhs, rhs) < 1e-12);
    }
}
