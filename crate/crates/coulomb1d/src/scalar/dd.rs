//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64`
//! carrying roughly 106 bits of significand.

use core::cmp::Ordering;
use core::fmt;
use core::num::FpCategory;
use core::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};
use core::str::FromStr;

use num_traits::{Float, FloatConst, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};

#[derive(Clone, Copy, Default, Debug)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const EPSILON: f64 = 4.930_380_657_631_324e-32;

    pub const fn new_raw(hi: f64, lo: f64) -> Self {
        DoubleDouble { hi, lo }
    }

    pub fn new(hi: f64, lo: f64) -> Self {
        let (h, l) = two_sum(hi, lo);
        DoubleDouble { hi: h, lo: l }
    }

    pub const fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        if !hi.is_finite() {
            return DoubleDouble { hi, lo: 0.0 };
        }
        let (h, l) = quick_two_sum(hi, lo);
        DoubleDouble { hi: h, lo: l }
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        Self::renorm(p, e + self.lo * b)
    }

    fn scale_pow2(self, k: i32) -> Self {
        // split so that 2^k never overflows on its own
        let half = k / 2;
        let f1 = 2f64.powi(half);
        let f2 = 2f64.powi(k - half);
        DoubleDouble { hi: self.hi * f1 * f2, lo: self.lo * f1 * f2 }
    }

    fn sqr(self) -> Self {
        self * self
    }

    fn exp_reduced(r: Self) -> Self {
        // expm1 by Taylor on |r| < 4e-4, then undo the 2^-10 scaling
        let r = r.scale_pow2(-10);
        if r.hi == 0.0 || !r.hi.is_finite() {
            return r;
        }
        let mut term = r;
        let mut sum = r;
        let mut n = 1.0;
        loop {
            n += 1.0;
            term = term * r / DoubleDouble::from_f64(n);
            sum += term;
            if term.hi.abs() <= 1e-36 * sum.hi.abs() || n > 60.0 {
                break;
            }
        }
        for _ in 0..10 {
            sum = sum * (sum + DoubleDouble::from_f64(2.0));
        }
        sum
    }

    fn sin_cos_taylor(r: Self) -> (Self, Self) {
        let r2 = r.sqr();
        let mut s = r;
        let mut term = r;
        let mut n = 1.0;
        while term.hi.abs() > 1e-35 {
            term = -term * r2 / DoubleDouble::from_f64((n + 1.0) * (n + 2.0));
            s += term;
            n += 2.0;
        }
        let mut c = DoubleDouble::from_f64(1.0);
        let mut term = c;
        let mut n = 0.0;
        while term.hi.abs() > 1e-35 {
            term = -term * r2 / DoubleDouble::from_f64((n + 1.0) * (n + 2.0));
            c += term;
            n += 2.0;
        }
        (s, c)
    }

    /// Decimal rendering with `digits` significant digits in scientific form.
    pub fn to_sci_string(self, digits: usize) -> String {
        if self.hi.is_nan() {
            return "NaN".into();
        }
        if self.hi.is_infinite() {
            return if self.hi > 0.0 { "inf".into() } else { "-inf".into() };
        }
        if self.hi == 0.0 {
            return format!("{:.*}e0", digits.saturating_sub(1), 0.0);
        }
        let digits = digits.clamp(1, 32);
        let neg = self.hi < 0.0;
        let x = self.abs();
        let mut e = x.hi.log10().floor() as i32;
        let ten = DoubleDouble::from_f64(10.0);
        let mut y = x / ten.powi(e);
        if y.hi >= 10.0 {
            y = y / ten;
            e += 1;
        } else if y.hi < 1.0 {
            y = y * ten;
            e -= 1;
        }
        let mut ds: Vec<u8> = Vec::with_capacity(digits + 1);
        for _ in 0..=digits {
            let d = y.hi.floor().clamp(0.0, 9.0);
            ds.push(d as u8);
            y = (y - DoubleDouble::from_f64(d)) * ten;
        }
        // round on the guard digit
        if ds[digits] >= 5 {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    e += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
        ds.truncate(digits);
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        s.push((b'0' + ds[0]) as char);
        if digits > 1 {
            s.push('.');
            for d in &ds[1..] {
                s.push((b'0' + d) as char);
            }
        }
        s.push('e');
        s.push_str(&e.to_string());
        s
    }
}

impl PartialEq for DoubleDouble {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        let (s, e) = two_sum(self.hi, b.hi);
        if !s.is_finite() {
            return DoubleDouble { hi: s, lo: 0.0 };
        }
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Self::renorm(s, e + f)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        self + (-b)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        if !p.is_finite() {
            return DoubleDouble { hi: p, lo: 0.0 };
        }
        Self::renorm(p, e + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, b: Self) -> Self {
        let q1 = self.hi / b.hi;
        if !q1.is_finite() || q1 == 0.0 && self.hi != 0.0 {
            return DoubleDouble { hi: q1, lo: 0.0 };
        }
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (h, l) = quick_two_sum(q1, q2);
        DoubleDouble { hi: h, lo: l } + DoubleDouble::from_f64(q3)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, b: Self) -> Self {
        self - (self / b).trunc() * b
    }
}

macro_rules! assign_ops {
    ($($tr:ident $m:ident $op:tt;)*) => {$(
        impl $tr for DoubleDouble {
            fn $m(&mut self, b: Self) {
                *self = *self $op b;
            }
        }
    )*};
}

assign_ops! {
    AddAssign add_assign +;
    SubAssign sub_assign -;
    MulAssign mul_assign *;
    DivAssign div_assign /;
    RemAssign rem_assign %;
}

impl Zero for DoubleDouble {
    fn zero() -> Self {
        DoubleDouble::from_f64(0.0)
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        DoubleDouble::from_f64(1.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDoubleDoubleError;

impl fmt::Display for ParseDoubleDoubleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid double-double literal")
    }
}

impl std::error::Error for ParseDoubleDoubleError {}

impl FromStr for DoubleDouble {
    type Err = ParseDoubleDoubleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "nan" => return Ok(Self::nan()),
            "inf" | "+inf" | "infinity" => return Ok(Self::infinity()),
            "-inf" | "-infinity" => return Ok(Self::neg_infinity()),
            _ => {}
        }
        let (mant, exp) = match lower.find('e') {
            Some(i) => (&lower[..i], lower[i + 1..].parse::<i32>().map_err(|_| ParseDoubleDoubleError)?),
            None => (lower.as_str(), 0),
        };
        let (neg, mant) = match mant.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, mant.strip_prefix('+').unwrap_or(mant)),
        };
        if mant.is_empty() {
            return Err(ParseDoubleDoubleError);
        }
        let ten = DoubleDouble::from_f64(10.0);
        let mut v = DoubleDouble::zero();
        let mut frac_digits = 0i32;
        let mut seen_dot = false;
        let mut any = false;
        for ch in mant.chars() {
            match ch {
                '.' if !seen_dot => seen_dot = true,
                '0'..='9' => {
                    any = true;
                    v = v * ten + DoubleDouble::from_f64((ch as u8 - b'0') as f64);
                    if seen_dot {
                        frac_digits += 1;
                    }
                }
                _ => return Err(ParseDoubleDoubleError),
            }
        }
        if !any {
            return Err(ParseDoubleDoubleError);
        }
        let e = exp - frac_digits;
        if e > 0 {
            v = v * ten.powi(e);
        } else if e < 0 {
            v = v / ten.powi(-e);
        }
        Ok(if neg { -v } else { v })
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().map(|p| p + 1).unwrap_or(32);
        f.write_str(&self.to_sci_string(digits))
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = ParseDoubleDoubleError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err(ParseDoubleDoubleError);
        }
        s.parse()
    }
}

impl ToPrimitive for DoubleDouble {
    fn to_i64(&self) -> Option<i64> {
        let t = self.trunc();
        if !t.hi.is_finite() || t.hi.abs() > 9.2e18 {
            return None;
        }
        Some(t.hi as i64 + t.lo as i64)
    }
    fn to_u64(&self) -> Option<u64> {
        let v = self.to_i64()?;
        u64::try_from(v).ok()
    }
    fn to_f64(&self) -> Option<f64> {
        Some(self.hi + self.lo)
    }
    fn to_f32(&self) -> Option<f32> {
        Some((self.hi + self.lo) as f32)
    }
}

impl FromPrimitive for DoubleDouble {
    fn from_i64(n: i64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n - hi as i64) as f64;
        Some(DoubleDouble::new(hi, lo))
    }
    fn from_u64(n: u64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(DoubleDouble::new(hi, lo))
    }
    fn from_f64(x: f64) -> Option<Self> {
        Some(DoubleDouble::from_f64(x))
    }
    fn from_f32(x: f32) -> Option<Self> {
        Some(DoubleDouble::from_f64(x as f64))
    }
}

impl NumCast for DoubleDouble {
    fn from<T: ToPrimitive>(n: T) -> Option<Self> {
        if let Some(i) = n.to_i64() {
            if let Some(f) = n.to_f64() {
                if f == i as f64 || f.fract() == 0.0 {
                    return <Self as FromPrimitive>::from_i64(i);
                }
                return Some(DoubleDouble::from_f64(f));
            }
        }
        n.to_f64().map(DoubleDouble::from_f64)
    }
}

const fn dd(hi: f64, lo: f64) -> DoubleDouble {
    DoubleDouble::new_raw(hi, lo)
}

pub const DD_PI: DoubleDouble = dd(3.141592653589793, 1.2246467991473532e-16);
pub const DD_LN_2: DoubleDouble = dd(0.6931471805599453, 2.3190468138462996e-17);
pub const DD_EULER: DoubleDouble = dd(0.5772156649015329, -4.942915152430645e-18);

impl FloatConst for DoubleDouble {
    fn E() -> Self {
        dd(2.718281828459045, 1.4456468917292502e-16)
    }
    fn FRAC_1_PI() -> Self {
        dd(0.3183098861837907, -1.9678676675182486e-17)
    }
    fn FRAC_1_SQRT_2() -> Self {
        dd(0.7071067811865476, -4.833646656726457e-17)
    }
    fn FRAC_2_PI() -> Self {
        dd(0.6366197723675814, -3.935735335036497e-17)
    }
    fn FRAC_2_SQRT_PI() -> Self {
        dd(1.1283791670955126, 1.533545961316588e-17)
    }
    fn FRAC_PI_2() -> Self {
        dd(DD_PI.hi / 2.0, DD_PI.lo / 2.0)
    }
    fn FRAC_PI_3() -> Self {
        dd(1.0471975511965979, -1.072081766451091e-16)
    }
    fn FRAC_PI_4() -> Self {
        dd(DD_PI.hi / 4.0, DD_PI.lo / 4.0)
    }
    fn FRAC_PI_6() -> Self {
        dd(0.5235987755982989, -5.360408832255455e-17)
    }
    fn FRAC_PI_8() -> Self {
        dd(DD_PI.hi / 8.0, DD_PI.lo / 8.0)
    }
    fn LN_10() -> Self {
        dd(2.302585092994046, -2.1707562233822494e-16)
    }
    fn LN_2() -> Self {
        DD_LN_2
    }
    fn LOG10_E() -> Self {
        dd(0.4342944819032518, 1.098319650216765e-17)
    }
    fn LOG2_E() -> Self {
        dd(1.4426950408889634, 2.0355273740931033e-17)
    }
    fn PI() -> Self {
        DD_PI
    }
    fn SQRT_2() -> Self {
        dd(1.4142135623730951, -9.667293313452913e-17)
    }
    fn TAU() -> Self {
        dd(DD_PI.hi * 2.0, DD_PI.lo * 2.0)
    }
    fn LOG10_2() -> Self {
        dd(0.3010299956639812, -2.8037281277851704e-18)
    }
    fn LOG2_10() -> Self {
        dd(3.321928094887362, 1.661617516973592e-16)
    }
}

impl Float for DoubleDouble {
    fn nan() -> Self {
        dd(f64::NAN, 0.0)
    }
    fn infinity() -> Self {
        dd(f64::INFINITY, 0.0)
    }
    fn neg_infinity() -> Self {
        dd(f64::NEG_INFINITY, 0.0)
    }
    fn neg_zero() -> Self {
        dd(-0.0, 0.0)
    }
    fn min_value() -> Self {
        dd(f64::MIN, 0.0)
    }
    fn min_positive_value() -> Self {
        // keep lo representable
        dd(f64::MIN_POSITIVE * 2f64.powi(53), 0.0)
    }
    fn max_value() -> Self {
        dd(f64::MAX, 0.0)
    }
    fn epsilon() -> Self {
        dd(Self::EPSILON, 0.0)
    }
    fn is_nan(self) -> bool {
        self.hi.is_nan()
    }
    fn is_infinite(self) -> bool {
        self.hi.is_infinite()
    }
    fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }
    fn is_normal(self) -> bool {
        self.hi.is_normal()
    }
    fn classify(self) -> FpCategory {
        self.hi.classify()
    }
    fn floor(self) -> Self {
        let h = self.hi.floor();
        if h == self.hi {
            Self::renorm(h, self.lo.floor())
        } else {
            dd(h, 0.0)
        }
    }
    fn ceil(self) -> Self {
        -(-self).floor()
    }
    fn round(self) -> Self {
        let f = (self + dd(0.5, 0.0)).floor();
        // ties away from zero, matching f64::round
        if self.hi < 0.0 {
            -((-self) + dd(0.5, 0.0)).floor()
        } else {
            f
        }
    }
    fn trunc(self) -> Self {
        if self.hi < 0.0 {
            self.ceil()
        } else {
            self.floor()
        }
    }
    fn fract(self) -> Self {
        self - self.trunc()
    }
    fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.hi.is_sign_negative()) {
            -self
        } else {
            self
        }
    }
    fn signum(self) -> Self {
        dd(self.hi.signum(), 0.0)
    }
    fn is_sign_positive(self) -> bool {
        self.hi.is_sign_positive()
    }
    fn is_sign_negative(self) -> bool {
        self.hi.is_sign_negative()
    }
    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    fn recip(self) -> Self {
        Self::one() / self
    }
    fn powi(self, n: i32) -> Self {
        if n == 0 {
            return Self::one();
        }
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.sqr();
            e >>= 1;
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }
    fn powf(self, n: Self) -> Self {
        if n.fract().is_zero() && n.abs().hi < 1e9 {
            return self.powi(n.hi as i32);
        }
        (n * self.ln()).exp()
    }
    fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Self::zero() } else { Self::nan() };
        }
        if self.hi.is_infinite() {
            return self;
        }
        let s = self.hi.sqrt();
        let sd = dd(s, 0.0);
        sd + (self - sd.sqr()) / dd(2.0 * s, 0.0)
    }
    fn exp(self) -> Self {
        if self.hi.is_nan() {
            return self;
        }
        if self.hi > 709.78 {
            return Self::infinity();
        }
        if self.hi < -745.2 {
            return Self::zero();
        }
        let k = (self.hi / core::f64::consts::LN_2).round();
        let r = self - DD_LN_2.mul_f64(k);
        (Self::exp_reduced(r) + Self::one()).scale_pow2(k as i32)
    }
    fn exp2(self) -> Self {
        (self * DD_LN_2).exp()
    }
    fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Self::neg_infinity() } else { Self::nan() };
        }
        if self.hi.is_infinite() {
            return self;
        }
        let mut y = dd(self.hi.ln(), 0.0);
        for _ in 0..2 {
            y = y + self * (-y).exp() - Self::one();
        }
        y
    }
    fn log(self, base: Self) -> Self {
        self.ln() / base.ln()
    }
    fn log2(self) -> Self {
        self.ln() / DD_LN_2
    }
    fn log10(self) -> Self {
        self.ln() / Self::LN_10()
    }
    fn max(self, other: Self) -> Self {
        if self.is_nan() || other > self {
            other
        } else {
            self
        }
    }
    fn min(self, other: Self) -> Self {
        if self.is_nan() || other < self {
            other
        } else {
            self
        }
    }
    fn abs_sub(self, other: Self) -> Self {
        if self > other {
            self - other
        } else {
            Self::zero()
        }
    }
    fn cbrt(self) -> Self {
        if self.hi == 0.0 {
            return self;
        }
        let y = dd(self.hi.cbrt(), 0.0);
        // one Newton step on y^3 = x
        y - (y.powi(3) - self) / (dd(3.0, 0.0) * y.sqr())
    }
    fn hypot(self, other: Self) -> Self {
        let a = self.abs();
        let b = other.abs();
        let (big, small) = if a > b { (a, b) } else { (b, a) };
        if big.is_zero() {
            return Self::zero();
        }
        let t = small / big;
        big * (Self::one() + t.sqr()).sqrt()
    }
    fn sin(self) -> Self {
        self.sin_cos().0
    }
    fn cos(self) -> Self {
        self.sin_cos().1
    }
    fn tan(self) -> Self {
        let (s, c) = self.sin_cos();
        s / c
    }
    fn asin(self) -> Self {
        self.atan2((Self::one() - self.sqr()).sqrt())
    }
    fn acos(self) -> Self {
        (Self::one() - self.sqr()).sqrt().atan2(self)
    }
    fn atan(self) -> Self {
        self.atan2(Self::one())
    }
    fn atan2(self, other: Self) -> Self {
        let (y, x) = (self, other);
        if x.is_zero() && y.is_zero() {
            return if x.hi.is_sign_negative() { DD_PI.copysign(y) } else { y };
        }
        let z0 = y.hi.atan2(x.hi);
        if !y.is_finite() || !x.is_finite() {
            return dd(z0, 0.0);
        }
        let r = x.hypot(y);
        let (xs, ys) = (x / r, y / r);
        let mut z = dd(z0, 0.0);
        let (s, c) = z.sin_cos();
        if xs.abs() > ys.abs() {
            z += (ys - s) / c;
        } else {
            z -= (xs - c) / s;
        }
        z
    }
    fn sin_cos(self) -> (Self, Self) {
        if !self.is_finite() {
            return (Self::nan(), Self::nan());
        }
        let half_pi = Self::FRAC_PI_2();
        let j = (self.hi / core::f64::consts::FRAC_PI_2).round();
        let r = self - half_pi * dd(j, 0.0);
        let (s, c) = Self::sin_cos_taylor(r);
        match (j.rem_euclid(4.0)) as i32 {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }
    fn exp_m1(self) -> Self {
        if self.hi.abs() < 0.3 {
            let k = (self.hi / core::f64::consts::LN_2).round();
            if k == 0.0 {
                return Self::exp_reduced(self);
            }
        }
        self.exp() - Self::one()
    }
    fn ln_1p(self) -> Self {
        if self.hi.abs() < 1e-3 {
            // Newton on exp_m1(y) = x
            let mut y = dd(self.hi.ln_1p(), 0.0);
            for _ in 0..2 {
                let e = y.exp_m1();
                y = y - (e - self) / (e + Self::one());
            }
            y
        } else {
            (Self::one() + self).ln()
        }
    }
    fn sinh(self) -> Self {
        if self.hi.abs() < 0.3 {
            let e = self.exp_m1();
            // (e - 1/(1+e)+1)/2 rewritten to avoid cancellation
            return (e + e / (e + Self::one())) * dd(0.5, 0.0);
        }
        let e = self.exp();
        (e - e.recip()) * dd(0.5, 0.0)
    }
    fn cosh(self) -> Self {
        let e = self.exp();
        (e + e.recip()) * dd(0.5, 0.0)
    }
    fn tanh(self) -> Self {
        if self.hi.abs() > 40.0 {
            return dd(self.hi.signum(), 0.0) - dd(2.0, 0.0).copysign(self) * (-dd(2.0, 0.0) * self.abs()).exp();
        }
        self.sinh() / self.cosh()
    }
    fn asinh(self) -> Self {
        let a = self.abs();
        let r = (a + (a.sqr() + Self::one()).sqrt()).ln();
        r.copysign(self)
    }
    fn acosh(self) -> Self {
        (self + (self.sqr() - Self::one()).sqrt()).ln()
    }
    fn atanh(self) -> Self {
        ((Self::one() + self) / (Self::one() - self)).ln() * dd(0.5, 0.0)
    }
    fn integer_decode(self) -> (u64, i16, i8) {
        self.hi.integer_decode()
    }
    fn copysign(self, sign: Self) -> Self {
        if self.hi.is_sign_negative() == sign.hi.is_sign_negative() {
            self
        } else {
            -self
        }
    }
}
