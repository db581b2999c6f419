//! Exact arithmetic over Q(i): rational numbers extended by the imaginary
//! unit, with arbitrary-precision components.
//!
//! `GaussianRational` is the coefficient field for every polynomial and
//! matrix computation in this crate. All operations are exact; nothing here
//! ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::Error;

/// An element a + b*I of Q(i), stored as exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// n/d as a real element. Panics when d = 0.
    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate a - b*I.
    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Norm a^2 + b^2, a nonnegative rational; zero only at zero.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self * &GaussianRational::from_int(k)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(GaussianRational { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact square root when one exists in Q(i).
    ///
    /// The returned root has nonnegative real part (positive imaginary part
    /// when the real part is zero), so the choice is deterministic.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // (u+vi)^2 = a+bi forces u^2 = (a + |z|)/2 with |z| = sqrt(a^2+b^2).
        let r = sqrt_rational(&self.norm())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let u2 = (&self.re + &r) / &two;
        if let Some(u) = sqrt_rational(&u2) {
            if !u.is_zero() {
                let v = &self.im / (&u * &two);
                let cand = GaussianRational { re: u, im: v };
                if &(&cand * &cand) == self {
                    return Some(cand);
                }
            }
        }
        // Real part of the root is zero: self = -v^2 is a negative rational.
        if self.im.is_zero() && self.re.is_negative() {
            let v = sqrt_rational(&-self.re.clone())?;
            return Some(GaussianRational { re: BigRational::zero(), im: v });
        }
        None
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn sqrt_rational(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let num = x.numer();
    let den = x.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
        impl $tr<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                self.$m(&rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}
forward_binop!(Add, add);

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}
forward_binop!(Sub, sub);

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}
forward_binop!(Mul, mul);

/// Panics on division by zero; use `checked_div` where the divisor is data.
impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.checked_div(rhs).expect("division by zero in Q(i)")
    }
}
forward_binop!(Div, div);

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form: "a/b", "c/d*I", "I", "-I", or "a/b+c/d*I".
/// `parse` round-trips this exactly.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let im_part = |im: &BigRational| -> String {
            if im.is_one() {
                "I".to_string()
            } else if (-im).is_one() {
                "-I".to_string()
            } else {
                format!("{}*I", fmt_rational(im))
            }
        };
        if self.re.is_zero() {
            return write!(f, "{}", im_part(&self.im));
        }
        if self.im.is_negative() {
            let pos = -self.im.clone();
            let tail = if pos.is_one() { "I".to_string() } else { format!("{}*I", fmt_rational(&pos)) };
            write!(f, "{}-{}", fmt_rational(&self.re), tail)
        } else {
            write!(f, "{}+{}", fmt_rational(&self.re), im_part(&self.im))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses the canonical scalar syntax: optional sign, a rational and/or an
/// imaginary part, e.g. "3", "-5/7", "I", "2*I", "1/2-3/4*I".
impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let bytes: Vec<char> = s.chars().collect();
        let mut pos = 0usize;
        let mut total = GaussianRational::zero();
        let mut first = true;
        while pos < bytes.len() {
            let mut sign = BigRational::one();
            if bytes[pos] == '+' || bytes[pos] == '-' {
                if bytes[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            } else if !first {
                return Err(Error::Parse(format!("expected + or - in scalar `{s}`")));
            }
            first = false;
            let (term, next) = parse_scalar_term(&bytes, pos, s)?;
            pos = next;
            total += &(term * GaussianRational::from_rational(sign));
        }
        Ok(total)
    }
}

fn parse_scalar_term(
    bytes: &[char],
    mut pos: usize,
    whole: &str,
) -> Result<(GaussianRational, usize), Error> {
    if pos >= bytes.len() {
        return Err(Error::Parse(format!("dangling sign in scalar `{whole}`")));
    }
    if bytes[pos] == 'I' {
        return Ok((GaussianRational::i(), pos + 1));
    }
    let start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == start {
        return Err(Error::Parse(format!("expected digits in scalar `{whole}`")));
    }
    let numer: BigInt = bytes[start..pos]
        .iter()
        .collect::<String>()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer in scalar `{whole}`")))?;
    let mut denom = BigInt::one();
    if pos < bytes.len() && bytes[pos] == '/' {
        pos += 1;
        let dstart = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == dstart {
            return Err(Error::Parse(format!("missing denominator in scalar `{whole}`")));
        }
        denom = bytes[dstart..pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in scalar `{whole}`")))?;
        if denom.is_zero() {
            return Err(Error::Parse(format!("zero denominator in scalar `{whole}`")));
        }
    }
    let q = BigRational::new(numer, denom);
    if pos + 1 < bytes.len() && bytes[pos] == '*' && bytes[pos + 1] == 'I' {
        return Ok((GaussianRational::new(BigRational::zero(), q), pos + 2));
    }
    Ok((GaussianRational::from_rational(q), pos))
}
