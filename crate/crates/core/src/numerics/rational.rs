use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact fraction of arbitrary-precision integers, always fully reduced
/// with a positive denominator.
///
/// Displays (and parses) as `p/q`; zero is `0/1` and integers keep their
/// `/1` so every serialized endpoint has the same shape.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `numer / denom`. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        Rational(BigRational::new(numer, denom))
    }

    /// `numer / denom` for nonnegative parts, reducing with machine-word gcd
    /// when both fit in 64 bits.
    pub(crate) fn from_unsigned_parts(numer: &BigUint, denom: &BigUint) -> Self {
        if let (Some(n), Some(d)) = (numer.to_u64(), denom.to_u64()) {
            assert!(d != 0, "zero denominator");
            let g = n.gcd(&d);
            return Rational(BigRational::new_raw(BigInt::from(n / g), BigInt::from(d / g)));
        }
        Rational(BigRational::new(BigInt::from(numer.clone()), BigInt::from(denom.clone())))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn in_unit_interval(&self) -> bool {
        !self.is_negative() && self.0 <= BigRational::one()
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow::Pow::pow(&self.0, exp))
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Nearest `f64`; the conversion keeps full double precision even when the
    /// numerator and denominator individually overflow `f64`.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // Both parts overflow; scale them down by a common power of two.
            let shift = self.numer().bits().max(self.denom().bits()).saturating_sub(1000);
            let n = (self.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (self.denom() >> shift).to_f64().unwrap_or(f64::INFINITY);
            n / d
        })
    }

    /// Natural logarithm of a positive rational, evaluated as
    /// `ln(numer) - ln(denom)` so that huge components lose no range.
    pub fn ln(&self) -> f64 {
        assert!(self.is_positive(), "logarithm of a nonpositive rational");
        ln_biguint(self.numer().magnitude()) - ln_biguint(self.denom().magnitude())
    }

    /// Decimal rendering rounded to `sig` significant digits (half away from
    /// zero), computed exactly. Plain positional notation, trailing zeros kept.
    pub fn to_decimal_string(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            let mut s = String::from("0.");
            s.extend(core::iter::repeat_n('0', sig - 1));
            if sig == 1 {
                s.pop();
            }
            return s;
        }
        let negative = self.is_negative();
        let num = self.numer().magnitude().clone();
        let den = self.denom().magnitude().clone();
        let ten = BigUint::from(10u32);

        // Find e with 10^e <= |x| < 10^(e+1).
        let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
        let ge = |e: i64| -> bool {
            // |x| >= 10^e
            if e >= 0 {
                num >= &den * ten.pow(e as u32)
            } else {
                &num * ten.pow((-e) as u32) >= den
            }
        };
        while !ge(e) {
            e -= 1;
        }
        while ge(e + 1) {
            e += 1;
        }
        // Scale so the integer part carries exactly `sig` digits.
        let shift = sig as i64 - 1 - e;
        let (scaled_num, scaled_den) = if shift >= 0 {
            (&num * ten.pow(shift as u32), den.clone())
        } else {
            (num.clone(), &den * ten.pow((-shift) as u32))
        };
        let (mut q, r) = scaled_num.div_rem(&scaled_den);
        if r * 2u32 >= scaled_den {
            q += 1u32;
        }
        let mut digits = q.to_string();
        let mut shift = shift;
        if digits.len() > sig {
            // Rounding carried into a new leading digit (e.g. 9.99 -> 10.0).
            digits.pop();
            shift -= 1;
        }
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        if shift <= 0 {
            out.push_str(&digits);
            out.extend(core::iter::repeat_n('0', (-shift) as usize));
        } else if (shift as usize) < digits.len() {
            let split = digits.len() - shift as usize;
            out.push_str(&digits[..split]);
            out.push('.');
            out.push_str(&digits[split..]);
        } else {
            out.push_str("0.");
            out.extend(core::iter::repeat_n('0', shift as usize - digits.len()));
            out.push_str(&digits);
        }
        out
    }
}

fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return libm::log(x.to_u64().unwrap_or(0) as f64);
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap_or(u64::MAX) as f64;
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`, with optional sign on `p`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p = BigInt::from_str(p).map_err(|_| Error::ParseRational)?;
        let q = BigInt::from_str(q).map_err(|_| Error::ParseRational)?;
        if q.is_zero() {
            return Err(Error::ParseRational);
        }
        Ok(Rational(BigRational::new(p, q)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl core::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> core::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_always_p_over_q() {
        assert_eq!(Rational::zero().to_string(), "0/1");
        assert_eq!(Rational::one().to_string(), "1/1");
        assert_eq!(Rational::new(6, -9).to_string(), "-2/3");
    }

    #[test]
    fn parse_reduces() {
        let r: Rational = "6/9".parse().unwrap();
        assert_eq!(r, Rational::new(2, 3));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_integer(7));
        assert_eq!("1/0".parse::<Rational>(), Err(Error::ParseRational));
        assert_eq!("x/3".parse::<Rational>(), Err(Error::ParseRational));
        assert_eq!("1/2/3".parse::<Rational>(), Err(Error::ParseRational));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Rational::new(1, 2).to_decimal_string(15), "0.500000000000000");
        assert_eq!(Rational::new(1, 3).to_decimal_string(5), "0.33333");
        assert_eq!(Rational::new(2, 3).to_decimal_string(5), "0.66667");
        assert_eq!(Rational::new(1, 16).to_decimal_string(3), "0.0625");
        assert_eq!(Rational::new(999, 100).to_decimal_string(2), "10");
        assert_eq!(Rational::new(-5, 4).to_decimal_string(3), "-1.25");
        assert_eq!(Rational::zero().to_decimal_string(3), "0.00");
        assert_eq!(Rational::new(1234, 1).to_decimal_string(2), "1200");
    }

    #[test]
    fn ln_of_huge_ratio() {
        let big = Rational::from_integer(BigInt::from(2u32).pow(300));
        let x = big.recip() * Rational::new(3, 1);
        let expected = libm::log(3.0) - 300.0 * core::f64::consts::LN_2;
        assert!((x.ln() - expected).abs() < 1e-9);
    }

    #[test]
    fn floor_handles_negatives() {
        assert_eq!(Rational::new(-1, 3).floor(), BigInt::from(-1));
        assert_eq!(Rational::new(7, 3).floor(), BigInt::from(2));
    }
}
