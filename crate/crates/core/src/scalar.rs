use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::Neg;

/// Field element usable as a coordinate type.
///
/// Exact types give exact predicates; floating types only give approximate ones.
pub trait Scalar:
    Num + Signed + Neg<Output = Self> + Clone + PartialOrd + Debug + Display + Send + Sync + 'static
{
    const EXACT: bool;
    fn from_int(v: i64) -> Self;
    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    const EXACT: bool = false;
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;
    fn from_int(v: i64) -> Self {
        v as f32
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn binom<T: Scalar>(n: usize, k: usize) -> T {
    T::from_int(binomial(n as i64, k as i64))
}

/// Integer power by repeated squaring; `pow(x, 0) == 1`.
pub fn pow<T: Scalar>(x: &T, e: usize) -> T {
    let mut base = x.clone();
    let mut acc = T::one();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"p/q"` or a plain decimal like `"-0.125"` into an exact rational.
pub fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let digits = format!("{}{}", ip.trim_start_matches(['-', '+']), fp);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let mut num: BigInt = digits.parse().ok()?;
        if neg {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), fp.len());
        return Some(BigRational::new(num, den));
    }
    let p: BigInt = s.parse().ok()?;
    Some(BigRational::from_integer(p))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
