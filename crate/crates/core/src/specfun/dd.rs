//! Double-double ("error-carrying") arithmetic for the Kummer power series.
//!
//! On the imaginary axis the terms of `1F1(a; b; iy)` grow to roughly `e^|y|`
//! before cancelling down to an O(1) result, so plain double precision loses
//! `|y|/ln 10` digits. Carrying the rounding error of every operation gives
//! about 31 significant digits, enough to absorb that loss for `|y| ≲ 40`.

use num_complex::Complex64;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    pub(crate) const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub(crate) fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Dd::renorm(s, e + f)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        Dd::renorm(p, e + (self.hi * rhs.lo + self.lo * rhs.hi))
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::new(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::new(q2);
        let q3 = r.hi / rhs.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        Dd { hi: q1, lo: q2 } + Dd::new(q3)
    }
}

/// Complex number with double-double components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct CDd {
    re: Dd,
    im: Dd,
}

impl CDd {
    pub(crate) const ONE: CDd = CDd { re: Dd { hi: 1.0, lo: 0.0 }, im: Dd::ZERO };

    pub(crate) fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub(crate) fn norm(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }
}

impl From<Complex64> for CDd {
    fn from(z: Complex64) -> Self {
        CDd { re: Dd::new(z.re), im: Dd::new(z.im) }
    }
}

impl Add for CDd {
    type Output = CDd;
    fn add(self, rhs: CDd) -> CDd {
        CDd { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Mul for CDd {
    type Output = CDd;
    fn mul(self, rhs: CDd) -> CDd {
        CDd {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Div for CDd {
    type Output = CDd;
    fn div(self, rhs: CDd) -> CDd {
        let den = rhs.re * rhs.re + rhs.im * rhs.im;
        let re = self.re * rhs.re + self.im * rhs.im;
        let im = self.im * rhs.re - self.re * rhs.im;
        CDd { re: re / den, im: im / den }
    }
}
