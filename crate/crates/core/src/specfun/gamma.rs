//! Complex log-Gamma (Lanczos) and digamma.

use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

pub(crate) fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `ln Γ(z)`.
///
/// For `Re z ≥ 1/2` this is the branch continuous from the positive real axis
/// (real there). For `Re z < 1/2` the reflection formula is used and the
/// imaginary part is only defined modulo `2π`, which is all that
/// `exp(log_gamma(z))` needs.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("log_gamma of non-finite {z}")));
    }
    if is_pole(z) {
        return Err(Error::Pole(z.re));
    }
    if z.re < 0.5 {
        let reflected = lanczos(Complex64::new(1.0, 0.0) - z);
        return Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - reflected);
    }
    Ok(lanczos(z))
}

fn lanczos(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (i, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += c / (zm1 + i as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (zm1 + 0.5) * t.ln() - t + series.ln()
}

/// `ln sin(πz)` modulo `2πi`, stable for large `|Im z|`.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let w = PI * z;
    let half_pi_i = Complex64::new(0.0, PI / 2.0);
    let ln2 = std::f64::consts::LN_2;
    if w.im > 20.0 {
        let i = Complex64::i();
        -i * w - ln2 + half_pi_i + (1.0 - (2.0 * i * w).exp()).ln()
    } else if w.im < -20.0 {
        let i = Complex64::i();
        i * w - ln2 - half_pi_i + (1.0 - (-2.0 * i * w).exp()).ln()
    } else {
        w.sin().ln()
    }
}

/// `exp(-ln Γ(z))` as a logarithm, or `None` where `1/Γ` vanishes.
pub(crate) fn ln_rgamma(z: Complex64) -> Option<Complex64> {
    if is_pole(z) {
        None
    } else {
        log_gamma(z).ok().map(|v| -v)
    }
}

/// Digamma `ψ(z) = Γ'(z)/Γ(z)`.
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if is_pole(z) {
        return Err(Error::Pole(z.re));
    }
    if z.re < 0.5 {
        // ψ(z) = ψ(1 - z) - π cot(πz)
        let w = PI * z;
        let cot = w.cos() / w.sin();
        return Ok(digamma(1.0 - z)? - PI * cot);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut x = z;
    while x.norm() < 12.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // Bernoulli numbers B_2k / (2k)
    const B: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32760.0,
        1.0 / 12.0,
    ];
    let inv2 = 1.0 / (x * x);
    let mut pow = inv2;
    let mut tail = Complex64::new(0.0, 0.0);
    for b in B {
        tail += b * pow;
        pow *= inv2;
    }
    Ok(acc + x.ln() - 0.5 / x - tail)
}
