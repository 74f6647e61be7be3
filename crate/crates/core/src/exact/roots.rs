//! Real root isolation over the rationals.

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::{rat, Scalar};
use crate::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum RootLocation {
    Exact(Rat),
    /// Exactly one irrational root in `(lo, hi]` of the square-free `poly`.
    Isolated { lo: Rat, hi: Rat, poly: Poly<Rat> },
}

impl RootLocation {
    pub fn exact(&self) -> Option<&Rat> {
        match self {
            RootLocation::Exact(r) => Some(r),
            RootLocation::Isolated { .. } => None,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            RootLocation::Exact(r) => r.to_f64(),
            RootLocation::Isolated { lo, hi, .. } => ((lo + hi) / rat(2, 1)).to_f64(),
        }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        match self {
            RootLocation::Exact(r) => r == x,
            RootLocation::Isolated { lo, hi, .. } => lo < x && x <= hi,
        }
    }

    /// Bisects an isolating interval until it is narrower than `width`.
    pub fn refine(&self, width: &Rat) -> RootLocation {
        match self {
            RootLocation::Exact(_) => self.clone(),
            RootLocation::Isolated { lo, hi, poly } => {
                let (mut lo, mut hi) = (lo.clone(), hi.clone());
                let slo = poly.eval(&lo).signum();
                while &(&hi - &lo) >= width {
                    let mid = (&lo + &hi) / rat(2, 1);
                    let sm = poly.eval(&mid).signum();
                    if sm.is_zero() {
                        return RootLocation::Exact(mid);
                    }
                    if sm == slo {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                RootLocation::Isolated { lo, hi, poly: poly.clone() }
            }
        }
    }
}

impl std::fmt::Display for RootLocation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RootLocation::Exact(r) => write!(f, "{r}"),
            RootLocation::Isolated { lo, hi, .. } => write!(f, "({lo}, {hi}]"),
        }
    }
}

/// Rational multiple with coprime integer coefficients and positive leading term.
fn primitive(p: &Poly<Rat>) -> Poly<Rat> {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return Poly::zero();
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    Poly::new(ints.into_iter().map(|c| Rat::from_integer(c / &g)).collect())
}

fn square_free(p: &Poly<Rat>) -> Poly<Rat> {
    let g = p.gcd(&p.derivative());
    primitive(&p.div_rem(&g).0)
}

pub fn sturm_chain(p: &Poly<Rat>) -> Vec<Poly<Rat>> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let k = chain.len();
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]);
        chain.push(r.scale(&rat(-1, 1)));
    }
    chain.pop();
    chain
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn sign(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn variations_at(chain: &[Poly<Rat>], x: &Rat) -> usize {
    variations(chain.iter().map(|p| sign(&p.eval(x))))
}

fn variations_at_inf(chain: &[Poly<Rat>], positive: bool) -> usize {
    variations(chain.iter().map(|p| {
        let s = sign(&p.lead());
        if positive || p.degree().unwrap_or(0) % 2 == 0 {
            s
        } else {
            -s
        }
    }))
}

/// Number of distinct real roots, by Sturm's theorem.
pub fn count_real_roots(p: &Poly<Rat>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let chain = sturm_chain(&square_free(p));
    Ok(variations_at_inf(&chain, false) - variations_at_inf(&chain, true))
}

fn cauchy_bound(p: &Poly<Rat>) -> Rat {
    let lead = p.lead().abs();
    let n = p.degree().unwrap();
    let m = p.coeffs()[..n].iter().map(|c| c.abs() / &lead).fold(Rat::zero(), |a, b| if b > a { b } else { a });
    (Rat::one() + m).ceil()
}

/// Isolates every distinct real root of `p`, in increasing order.
///
/// Roots that are rational come back as `Exact`.
pub fn isolate_real_roots(p: &Poly<Rat>) -> Result<Vec<RootLocation>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut g = square_free(p);
    let mut out = Vec::new();
    if g.coeff(0).is_zero() {
        out.push(RootLocation::Exact(Rat::zero()));
        g = Poly::new(g.coeffs()[1..].to_vec());
    }
    if g.degree().unwrap_or(0) == 0 {
        return Ok(out);
    }
    let chain = sturm_chain(&g);
    let b = cauchy_bound(&g);
    let mut stack = vec![(-b.clone(), b)];
    let mut found = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        let count = variations_at(&chain, &lo) - variations_at(&chain, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            found.push((lo, hi));
            continue;
        }
        let mid = split_point(&g, &lo, &hi);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    let lead = g.lead().abs();
    let grain = Rat::one() / &lead;
    for (lo, hi) in found {
        let loc = RootLocation::Isolated { lo, hi, poly: g.clone() }.refine(&grain);
        out.push(match loc {
            RootLocation::Isolated { lo, hi, poly } => {
                // any rational root has denominator dividing the leading coefficient
                let k = (&hi * &lead).floor();
                let cand = k / &lead;
                if cand > lo && poly.eval(&cand).is_zero() {
                    RootLocation::Exact(cand)
                } else {
                    RootLocation::Isolated { lo, hi, poly }
                }
            }
            e => e,
        });
    }
    out.sort_by(|a, b| a.approx().partial_cmp(&b.approx()).unwrap());
    Ok(out)
}

fn split_point(g: &Poly<Rat>, lo: &Rat, hi: &Rat) -> Rat {
    let mut k = 2i64;
    loop {
        let mid = lo + (hi - lo) * rat(k / 2, k);
        if !g.eval(&mid).is_zero() {
            return mid;
        }
        k += 1;
    }
}

/// Rational real roots together with the interval evidence for irrational ones.
pub fn rational_roots(p: &Poly<Rat>) -> Result<(Vec<Rat>, Vec<RootLocation>)> {
    let mut exact = Vec::new();
    let mut irr = Vec::new();
    for r in isolate_real_roots(p)? {
        match r {
            RootLocation::Exact(x) => exact.push(x),
            other => irr.push(other),
        }
    }
    Ok((exact, irr))
}
