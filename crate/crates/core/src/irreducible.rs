//! Irreducibility of nets: no iso-curve of the net may be degree-elevated or
//! a polynomial composition `q(r(t))` with `deg r >= 2`.

use crate::bezier::{BezierCurve3, ControlNet};
use crate::error::{Error, Result};
use crate::exact::Poly;
use crate::scalar::Scalar;
use std::fmt;

pub fn is_degree_elevated<T: Scalar>(curve: &BezierCurve3<T>) -> bool {
    curve.top_differences().0.is_zero()
}

/// `curve(t) = outer(inner(t))` per coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition<T> {
    /// Monic with zero constant term.
    pub inner: Poly<T>,
    pub outer: [Poly<T>; 3],
}

impl<T: Scalar> Decomposition<T> {
    /// Same decomposition with the inner polynomial rescaled to `r(0) = 0, r(1) = 1`,
    /// when `r(1) != 0`.
    pub fn normalized(&self) -> Option<Decomposition<T>> {
        let r1 = self.inner.eval(&T::one());
        if r1.is_zero() {
            return None;
        }
        let inner = self.inner.scale(&(T::one() / r1.clone()));
        let stretch = Poly::linear(T::zero(), r1);
        let outer = self.outer.each_ref().map(|q| q.compose(&stretch));
        Some(Decomposition { inner, outer })
    }
}

/// Finds a nontrivial decomposition of a curve that is not degree-elevated.
///
/// The inner polynomial of degree `d` is pinned down by the top `d`
/// coefficients of any full-degree coordinate, then every coordinate is
/// expanded in powers of it.
pub fn decompose<T: Scalar>(curve: &BezierCurve3<T>) -> Result<Option<Decomposition<T>>> {
    if is_degree_elevated(curve) {
        return Err(Error::InvalidNet("curve is degree-elevated".into()));
    }
    let n = curve.degree();
    let polys = curve.coordinate_polys();
    let f = polys.iter().find(|p| p.degree() == Some(n)).expect("full-degree coordinate").monic();
    for d in (2..=n).filter(|d| n % d == 0) {
        let k = n / d;
        let mut r: Vec<T> = vec![T::zero(); d + 1];
        r[d] = T::one();
        for i in 1..d {
            let e = Poly::new(r.clone()).pow(k).coeff(n - i);
            r[d - i] = (f.coeff(n - i) - e) / T::from_int(k as i64);
        }
        let inner = Poly::new(r);
        let outer: Option<Vec<Poly<T>>> = polys.iter().map(|p| expand_in_powers(p, &inner)).collect();
        if let Some(o) = outer {
            let outer = [o[0].clone(), o[1].clone(), o[2].clone()];
            return Ok(Some(Decomposition { inner, outer }));
        }
    }
    Ok(None)
}

// q with q(r) = h, if h is a polynomial in r.
fn expand_in_powers<T: Scalar>(h: &Poly<T>, r: &Poly<T>) -> Option<Poly<T>> {
    let mut h = h.clone();
    let mut digits = Vec::new();
    while !h.is_zero() {
        let (q, rem) = h.div_rem(r);
        if rem.degree().unwrap_or(0) > 0 {
            return None;
        }
        digits.push(rem.coeff(0));
        h = q;
    }
    Some(Poly::new(digits))
}

pub fn is_composed<T: Scalar>(curve: &BezierCurve3<T>) -> Result<bool> {
    Ok(decompose(curve)?.is_some())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoFamily {
    /// Curves `p_ij` over `i` for fixed `j`.
    U,
    /// Curves `p_ij` over `j` for fixed `i`.
    V,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveDefect {
    Elevated,
    Composed { inner_degree: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFailure {
    pub family: IsoFamily,
    pub index: usize,
    pub defect: CurveDefect,
}

impl fmt::Display for CurveFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            IsoFamily::U => "u-curve",
            IsoFamily::V => "v-curve",
        };
        match &self.defect {
            CurveDefect::Elevated => write!(f, "{fam} {} is degree-elevated", self.index),
            CurveDefect::Composed { inner_degree } => {
                write!(f, "{fam} {} is a composition with inner degree {inner_degree}", self.index)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IrreducibilityReport {
    pub failures: Vec<CurveFailure>,
}

impl IrreducibilityReport {
    pub fn is_irreducible(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for IrreducibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "irreducible");
        }
        let parts: Vec<String> = self.failures.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Why a curve is reducible, if it is.
pub fn curve_defect<T: Scalar>(curve: &BezierCurve3<T>) -> Option<CurveDefect> {
    if is_degree_elevated(curve) {
        return Some(CurveDefect::Elevated);
    }
    match decompose(curve) {
        Ok(Some(dec)) => Some(CurveDefect::Composed { inner_degree: dec.inner.degree().unwrap_or(0) }),
        _ => None,
    }
}

fn check_curve<T: Scalar>(curve: &BezierCurve3<T>, family: IsoFamily, index: usize) -> Option<CurveFailure> {
    curve_defect(curve).map(|defect| CurveFailure { family, index, defect })
}

/// Checks every iso-curve of the net along both directions.
pub fn surface_irreducible<T: Scalar>(net: &ControlNet<T>) -> IrreducibilityReport {
    let (n, m) = net.degree();
    let mut failures = Vec::new();
    for j in 0..=m {
        failures.extend(check_curve(&net.u_curve(j), IsoFamily::U, j));
    }
    for i in 0..=n {
        failures.extend(check_curve(&net.v_curve(i), IsoFamily::V, i));
    }
    IrreducibilityReport { failures }
}
