//! Seeded generation of coincident pairs with a known map.

use crate::bezier::MonomialForm;
use crate::blossom::{reparam_bilinear, reparam_bilinear_to, reparam_rectangle, AffineReparam, BilinearReparam};
use crate::coincidence::Reparam;
use crate::error::{Error, Result};
use crate::geom::{Vec3, P2};
use crate::irreducible::surface_irreducible;
use crate::scalar::rat;
use crate::{ControlNet, Rat, RatNet};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Attempts before giving up on drawing an irreducible pair.
pub const MAX_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlantKind {
    SameDegree,
    CrossDegree,
    /// Target `(n+m, m)`, or `(n, n+m)` when `transposed`.
    Mixed { transposed: bool },
}

impl PlantKind {
    pub fn from_name(s: &str) -> Option<PlantKind> {
        match s {
            "same-degree" => Some(PlantKind::SameDegree),
            "cross-degree" => Some(PlantKind::CrossDegree),
            "mixed" => Some(PlantKind::Mixed { transposed: false }),
            "mixed-transposed" => Some(PlantKind::Mixed { transposed: true }),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlantedPair {
    pub base: RatNet,
    pub other: RatNet,
    /// `other(s,t) == base(planted(s,t))`.
    pub planted: Reparam,
    /// Draws needed before both nets were irreducible.
    pub attempts: usize,
}

pub struct Generator {
    rng: ChaCha8Rng,
    coplanar_top: bool,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed), coplanar_top: false }
    }

    /// Base nets whose top power coefficients `c_nm`, `c_(n-1)m`, `c_n(m-1)`
    /// have zero `z`, so the difference vectors span a plane.
    pub fn with_coplanar_top(mut self, on: bool) -> Self {
        self.coplanar_top = on;
        self
    }

    /// `k/den` with `k` uniform in `lo*den ..= hi*den`.
    fn frac(&mut self, lo: i64, hi: i64, den: i64) -> Rat {
        rat(self.rng.gen_range(lo * den..=hi * den), den)
    }

    /// Control points with small integer and half-integer coordinates.
    pub fn random_net(&mut self, n: usize, m: usize) -> RatNet {
        let net = ControlNet::from_fn(n, m, |_, _| {
            Vec3::new(self.frac(-4, 4, 2), self.frac(-4, 4, 2), self.frac(-4, 4, 2))
        })
        .expect("positive degree");
        if !self.coplanar_top {
            return net;
        }
        let mono = net.to_monomial();
        let mut coeffs = Vec::with_capacity((n + 1) * (m + 1));
        for i in 0..=n {
            for j in 0..=m {
                let mut c = mono.coeff(i, j).clone();
                if (i == n && j + 1 >= m) || (i + 1 == n && j == m) {
                    c.z = Rat::zero();
                }
                coeffs.push(c);
            }
        }
        MonomialForm::new(n, m, coeffs).expect("same shape").to_net()
    }

    pub fn random_irreducible_net(&mut self, n: usize, m: usize) -> Result<RatNet> {
        let mut last = String::new();
        for _ in 0..MAX_ATTEMPTS {
            let net = self.random_net(n, m);
            let rep = surface_irreducible(&net);
            if rep.is_irreducible() {
                return Ok(net);
            }
            last = rep.to_string();
        }
        Err(Error::NotIrreducible { operand: "generated".into(), reason: last })
    }

    fn distinct_pair(&mut self, lo: i64, hi: i64, den: i64) -> (Rat, Rat) {
        loop {
            let (a, b) = (self.frac(lo, hi, den), self.frac(lo, hi, den));
            if a != b {
                return (a, b);
            }
        }
    }

    /// Window endpoints in `[-1, 2]` with denominators up to 6, either orientation.
    pub fn random_window(&mut self) -> AffineReparam<Rat> {
        let den = self.rng.gen_range(1..=6);
        let (a, b) = self.distinct_pair(-1, 2, den);
        let den = self.rng.gen_range(1..=6);
        let (c, d) = self.distinct_pair(-1, 2, den);
        AffineReparam::new(a, b, c, d)
    }

    /// Strictly convex quadrilateral near `[-1/2, 3/2]^2`, either orientation.
    pub fn random_quad(&mut self) -> BilinearReparam<Rat> {
        loop {
            let mut p = || P2::new(self.frac(-1, 2, 4), self.frac(-1, 2, 4));
            let q = BilinearReparam::new(p(), p(), p(), p());
            if q.is_convex() {
                return q;
            }
        }
    }

    /// Quadrilateral with `A`, `D` on one vertical line and `B`, `C` on
    /// another, so `u` depends on `s` alone.
    pub fn random_trapezoid(&mut self) -> BilinearReparam<Rat> {
        loop {
            let (a1, b1) = self.distinct_pair(-1, 2, 4);
            let mut v = || self.frac(-1, 2, 4);
            let q = BilinearReparam::new(P2::new(a1.clone(), v()), P2::new(b1.clone(), v()), P2::new(b1, v()), P2::new(a1, v()));
            if q.is_convex() {
                return q;
            }
        }
    }

    /// Draws a base net and, unless `map` is given, a random map of the kind's family.
    pub fn plant(&mut self, kind: PlantKind, degree: (usize, usize), map: Option<Reparam>) -> Result<PlantedPair> {
        let (n, m) = degree;
        match kind {
            PlantKind::SameDegree => {
                let fixed = match map {
                    None => None,
                    Some(Reparam::Affine(w)) => Some(check_window(w)?),
                    Some(Reparam::Bilinear(_)) => return Err(Error::DegenerateWindow("same-degree pairs need a window".into())),
                };
                self.retry(degree, fixed.map(Reparam::Affine), |g| Reparam::Affine(g.random_window()), |base, r| match r {
                    Reparam::Affine(w) => reparam_rectangle(base, w),
                    Reparam::Bilinear(_) => unreachable!(),
                })
            }
            PlantKind::CrossDegree => {
                let fixed = map.map(|r| check_quad(as_quad(r))).transpose()?;
                self.retry(degree, fixed.map(Reparam::Bilinear), |g| Reparam::Bilinear(g.random_quad()), |base, r| {
                    Ok(reparam_bilinear(base, &as_quad(r.clone())))
                })
            }
            PlantKind::Mixed { transposed } => {
                let fixed = map.map(|r| check_trapezoid(as_quad(r), transposed)).transpose()?;
                let (ds, dt) = if transposed { (n, n + m) } else { (n + m, m) };
                let draw = move |g: &mut Generator| {
                    let q = g.random_trapezoid();
                    Reparam::Bilinear(if transposed { transpose_map(&q) } else { q })
                };
                self.retry(degree, fixed.map(Reparam::Bilinear), draw, |base, r| {
                    reparam_bilinear_to(base, &as_quad(r.clone()), ds, dt)
                })
            }
        }
    }

    fn retry<D, F>(&mut self, degree: (usize, usize), fixed: Option<Reparam>, mut draw: D, derive: F) -> Result<PlantedPair>
    where
        D: FnMut(&mut Generator) -> Reparam,
        F: Fn(&RatNet, &Reparam) -> Result<RatNet>,
    {
        let mut last = String::new();
        for attempt in 1..=MAX_ATTEMPTS {
            let planted = match &fixed {
                Some(r) => r.clone(),
                None => draw(self),
            };
            let base = self.random_net(degree.0, degree.1);
            let rep = surface_irreducible(&base);
            if !rep.is_irreducible() {
                last = format!("base net: {rep}");
                continue;
            }
            let other = derive(&base, &planted)?;
            let rep = surface_irreducible(&other);
            if !rep.is_irreducible() {
                last = format!("derived net: {rep}");
                continue;
            }
            return Ok(PlantedPair { base, other, planted, attempts: attempt });
        }
        Err(Error::NotIrreducible { operand: "generated".into(), reason: format!("gave up after {MAX_ATTEMPTS} draws; {last}") })
    }
}

fn check_window(w: AffineReparam<Rat>) -> Result<AffineReparam<Rat>> {
    if w.a == w.b || w.c == w.d {
        return Err(Error::DegenerateWindow(format!("window ({}, {}, {}, {}) has zero width", w.a, w.b, w.c, w.d)));
    }
    Ok(w)
}

fn check_quad(q: BilinearReparam<Rat>) -> Result<BilinearReparam<Rat>> {
    if !q.is_convex() {
        return Err(Error::DegenerateWindow(format!("quadrilateral {q} is not strictly convex")));
    }
    Ok(q)
}

fn check_trapezoid(q: BilinearReparam<Rat>, transposed: bool) -> Result<BilinearReparam<Rat>> {
    let q = check_quad(q)?;
    if transposed && (q.a.v != q.b.v || q.d.v != q.c.v) {
        return Err(Error::DegenerateWindow("edges AB and DC must be horizontal".into()));
    }
    if !transposed && (q.a.u != q.d.u || q.b.u != q.c.u) {
        return Err(Error::DegenerateWindow("edges AD and BC must be vertical".into()));
    }
    Ok(q)
}

fn as_quad(r: Reparam) -> BilinearReparam<Rat> {
    match r {
        Reparam::Bilinear(q) => q,
        Reparam::Affine(w) => w.to_bilinear(),
    }
}

/// The map of the transposed problem: swap the parameter axes of both the
/// plane and the unit square.
pub fn transpose_map(q: &BilinearReparam<Rat>) -> BilinearReparam<Rat> {
    BilinearReparam::new(q.a.swap(), q.d.swap(), q.c.swap(), q.b.swap())
}
