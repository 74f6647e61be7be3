#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tpbc::blossom::{AffineReparam, BilinearReparam};
use tpbc::coincidence::{CoincidenceResult, Relation, Reparam};
use tpbc::domain::{decompose, Piece};
use tpbc::geom::P2;
use tpbc::scalar::rat;
use tpbc::{ControlNet, Rat, RatNet, Vec3};

pub fn r(s: &str) -> Rat {
    tpbc::scalar::parse_rat(s).unwrap()
}

pub fn p2(u: &str, v: &str) -> P2<Rat> {
    P2::new(r(u), r(v))
}

pub fn quad(ps: [&str; 8]) -> BilinearReparam<Rat> {
    BilinearReparam::from_params(ps.map(r))
}

pub fn window(ps: [&str; 4]) -> AffineReparam<Rat> {
    let [a, b, c, d] = ps.map(r);
    AffineReparam::new(a, b, c, d)
}

pub fn fmt_params(ps: &[Rat]) -> String {
    let v: Vec<String> = ps.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(", "))
}

pub fn reparam_params(rep: &Option<Reparam>) -> Option<Vec<Rat>> {
    match rep {
        Some(Reparam::Affine(w)) => Some(w.params().to_vec()),
        Some(Reparam::Bilinear(q)) => Some(q.params().to_vec()),
        None => None,
    }
}

pub fn random_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> Rat {
    rat(rng.gen_range(lo * den..=hi * den), den)
}

pub fn random_net(rng: &mut ChaCha8Rng, n: usize, m: usize) -> RatNet {
    ControlNet::from_fn(n, m, |_, _| {
        Vec3::new(random_rat(rng, -3, 3, 4), random_rat(rng, -3, 3, 4), random_rat(rng, -3, 3, 4))
    })
    .unwrap()
}

/// Point strictly inside `[0,1]` with a random denominator.
pub fn unit_rat(rng: &mut ChaCha8Rng) -> Rat {
    let den = rng.gen_range(2..200i64);
    rat(rng.gen_range(0..=den), den)
}

pub fn transposed(net: &RatNet) -> RatNet {
    net.transpose()
}

// separating-axis test with touching counted as separated
fn projections(pts: &[P2<Rat>], axis: &(Rat, Rat)) -> (Rat, Rat) {
    let vals: Vec<Rat> = pts.iter().map(|p| &p.u * &axis.0 + &p.v * &axis.1).collect();
    let lo = vals.iter().min().unwrap().clone();
    let hi = vals.iter().max().unwrap().clone();
    (lo, hi)
}

/// Interior overlap of two convex polygons.
pub fn convex_interiors_meet(a: &[P2<Rat>], b: &[P2<Rat>]) -> bool {
    let mut axes = Vec::new();
    for poly in [a, b] {
        for i in 0..poly.len() {
            let (p, q) = (&poly[i], &poly[(i + 1) % poly.len()]);
            axes.push((&q.v - &p.v, &p.u - &q.u));
        }
    }
    axes.iter().all(|ax| {
        let (alo, ahi) = projections(a, ax);
        let (blo, bhi) = projections(b, ax);
        ahi > blo && bhi > alo
    })
}

pub fn unit_square_corners() -> Vec<P2<Rat>> {
    vec![p2("0", "0"), p2("1", "0"), p2("1", "1"), p2("0", "1")]
}

/// Relation implied by a planted map, computed from its image alone.
pub fn expected_relation(planted: &Reparam) -> Relation {
    let corners: Vec<P2<Rat>> = match planted {
        Reparam::Affine(w) => w.to_bilinear().corners().to_vec(),
        Reparam::Bilinear(q) => q.corners().to_vec(),
    };
    let sq = unit_square_corners();
    if !convex_interiors_meet(&corners, &sq) {
        return Relation::Disjoint;
    }
    if sq.iter().all(|c| corners.contains(c)) {
        Relation::Coincident
    } else {
        Relation::CoincidentPart
    }
}

/// `a + b sqrt(d)` with a fixed rational `d` that is not a square.
#[derive(Clone, Debug, PartialEq)]
pub struct Q2 {
    pub a: Rat,
    pub b: Rat,
    pub d: Rat,
}

impl Q2 {
    pub fn rat(a: Rat, d: &Rat) -> Q2 {
        Q2 { a, b: Rat::zero(), d: d.clone() }
    }
    pub fn add(&self, o: &Q2) -> Q2 {
        Q2 { a: &self.a + &o.a, b: &self.b + &o.b, d: self.d.clone() }
    }
    pub fn sub(&self, o: &Q2) -> Q2 {
        Q2 { a: &self.a - &o.a, b: &self.b - &o.b, d: self.d.clone() }
    }
    pub fn mul(&self, o: &Q2) -> Q2 {
        Q2 {
            a: &self.a * &o.a + &self.b * &o.b * &self.d,
            b: &self.a * &o.b + &self.b * &o.a,
            d: self.d.clone(),
        }
    }
    pub fn inv(&self) -> Q2 {
        let den = &self.a * &self.a - &self.b * &self.b * &self.d;
        Q2 { a: &self.a / &den, b: -&self.b / &den, d: self.d.clone() }
    }
    pub fn approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.a.to_f64().unwrap() + self.b.to_f64().unwrap() * self.d.to_f64().unwrap().sqrt()
    }
}

fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let (p, q) = (x.numer().clone(), x.denom().clone());
    let (sp, sq): (BigInt, BigInt) = (p.sqrt(), q.sqrt());
    (&sp * &sp == p && &sq * &sq == q).then(|| Rat::new(sp, sq))
}

fn cross(a: &(Rat, Rat), b: &(Rat, Rat)) -> Rat {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// All `(s,t)` with `q(s,t) = x`, exactly, in `Q(sqrt(disc))`.
pub fn bilinear_preimages(q: &BilinearReparam<Rat>, x: &P2<Rat>) -> Vec<(Q2, Q2)> {
    let sub = |p: &P2<Rat>, o: &P2<Rat>| (&p.u - &o.u, &p.v - &o.v);
    let e = sub(&q.b, &q.a);
    let f = sub(&q.d, &q.a);
    let g = (&q.a.u - &q.b.u + &q.c.u - &q.d.u, &q.a.v - &q.b.v + &q.c.v - &q.d.v);
    let h = sub(x, &q.a);
    // h - t f = s (e + t g); cross with (e + t g)
    let c2 = -cross(&f, &g);
    let c1 = cross(&h, &g) - cross(&f, &e);
    let c0 = cross(&h, &e);
    let mut ts: Vec<Q2> = Vec::new();
    if c2.is_zero() {
        if c1.is_zero() {
            return vec![];
        }
        let one = Rat::one();
        ts.push(Q2::rat(-&c0 / &c1, &one));
    } else {
        let disc = &c1 * &c1 - Rat::from_integer(4.into()) * &c2 * &c0;
        if disc.is_negative() {
            return vec![];
        }
        let two_a = Rat::from_integer(2.into()) * &c2;
        match rational_sqrt(&disc) {
            Some(sq) => {
                let one = Rat::one();
                ts.push(Q2::rat((-&c1 + &sq) / &two_a, &one));
                ts.push(Q2::rat((-&c1 - &sq) / &two_a, &one));
            }
            None => {
                for sign in [1, -1] {
                    ts.push(Q2 { a: -&c1 / &two_a, b: Rat::from_integer(sign.into()) / &two_a, d: disc.clone() });
                }
            }
        }
    }
    let mut out = Vec::new();
    for t in ts {
        let d = t.d.clone();
        let lift = |x: &Rat| Q2::rat(x.clone(), &d);
        // component with a nonzero denominator
        for k in 0..2 {
            let (hk, fk, ek, gk) = if k == 0 { (&h.0, &f.0, &e.0, &g.0) } else { (&h.1, &f.1, &e.1, &g.1) };
            let den = lift(ek).add(&t.mul(&lift(gk)));
            if den.a.is_zero() && den.b.is_zero() {
                continue;
            }
            let num = lift(hk).sub(&t.mul(&lift(fk)));
            out.push((num.mul(&den.inv()), t.clone()));
            break;
        }
    }
    out
}

/// de Casteljau in `Q(sqrt(d))`.
pub fn evaluate_q2(net: &RatNet, s: &Q2, t: &Q2) -> [Q2; 3] {
    let (n, m) = net.degree();
    let d = s.d.clone();
    let lerp = |p: &[Q2; 3], q: &[Q2; 3], x: &Q2| -> [Q2; 3] {
        [0, 1, 2].map(|k| p[k].add(&x.mul(&q[k].sub(&p[k]))))
    };
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut w: Vec<[Q2; 3]> = (0..=m)
            .map(|j| {
                let p = net.point(i, j);
                [Q2::rat(p.x.clone(), &d), Q2::rat(p.y.clone(), &d), Q2::rat(p.z.clone(), &d)]
            })
            .collect();
        for lvl in 1..=m {
            for j in 0..=m - lvl {
                w[j] = lerp(&w[j], &w[j + 1], t);
            }
        }
        rows.push(w[0].clone());
    }
    for lvl in 1..=n {
        for i in 0..=n - lvl {
            rows[i] = lerp(&rows[i], &rows[i + 1], s);
        }
    }
    rows[0].clone()
}

pub fn q2_equals(q: &[Q2; 3], p: &Vec3<Rat>) -> bool {
    q.iter().all(|c| c.b.is_zero()) && q[0].a == p.x && q[1].a == p.y && q[2].a == p.z
}

/// Maps of the coincident pieces, in the same order as the patches.
pub fn piece_maps(res: &CoincidenceResult, psi: &BilinearReparam<Rat>) -> Vec<BilinearReparam<Rat>> {
    let flip = !psi.is_ccw();
    decompose(res.shared_domain.as_ref().unwrap())
        .into_iter()
        .filter_map(|p| match p {
            Piece::Quad([p0, p1, p2, p3]) => {
                Some(if flip { BilinearReparam::new(p0, p3, p2, p1) } else { BilinearReparam::new(p0, p1, p2, p3) })
            }
            Piece::Tri(_) => None,
        })
        .collect()
}

/// Every patch agrees with the base at the piece map and with the other net
/// at the exact preimage under the coincidence map.
pub fn patches_match_both(res: &CoincidenceResult, s1: &RatNet, s2: &RatNet, points: usize, seed: u64) -> (bool, usize) {
    let psi = res.bilinear().unwrap();
    let s2s = res.symmetry.unwrap().apply(s2);
    let maps = piece_maps(res, psi);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for (patch, mu) in res.patches.iter().zip(&maps) {
        for _ in 0..points {
            let (s, t) = (unit_rat(&mut rng), unit_rat(&mut rng));
            let x = mu.eval(&s, &t);
            let val = patch.evaluate(&s, &t);
            if val != s1.evaluate(&x.u, &x.v) {
                return (false, checked);
            }
            let pre = bilinear_preimages(psi, &x);
            let inside: Vec<_> = pre
                .iter()
                .filter(|(a, b)| (-1e-9..=1.0 + 1e-9).contains(&a.approx()) && (-1e-9..=1.0 + 1e-9).contains(&b.approx()))
                .collect();
            if inside.len() != 1 || !q2_equals(&evaluate_q2(&s2s, &inside[0].0, &inside[0].1), &val) {
                return (false, checked);
            }
            checked += 1;
        }
    }
    (maps.len() == res.patches.len(), checked)
}
