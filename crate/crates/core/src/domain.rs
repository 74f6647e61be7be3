//! Convex polygons of the parameter plane: clipping to the unit square,
//! decomposition into quadrilaterals and triangles, and areas.

use crate::error::{Error, Result};
use crate::geom::{orient2, P2};
use crate::scalar::Scalar;

/// Strictly convex polygon, counter-clockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon2<T> {
    vertices: Vec<P2<T>>,
}

impl<T: Scalar> Polygon2<T> {
    /// Accepts either orientation; clockwise input is reversed keeping the first vertex first.
    pub fn new(vertices: Vec<P2<T>>) -> Result<Self> {
        if vertices.len() < 3 || !strictly_convex(&vertices) {
            return Err(Error::NonConvex);
        }
        let mut vertices = vertices;
        if signed_area2(&vertices).is_negative() {
            vertices[1..].reverse();
        }
        Ok(Polygon2 { vertices })
    }

    pub fn unit_square() -> Self {
        let (z, o) = (T::zero(), T::one());
        Polygon2 {
            vertices: vec![
                P2::new(z.clone(), z.clone()),
                P2::new(o.clone(), z.clone()),
                P2::new(o.clone(), o.clone()),
                P2::new(z, o),
            ],
        }
    }

    pub fn vertices(&self) -> &[P2<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> T {
        signed_area2(&self.vertices) / T::from_int(2)
    }

    /// Same vertex set, ignoring the starting vertex.
    pub fn same_shape(&self, o: &Self) -> bool {
        self.len() == o.len() && self.vertices.iter().all(|v| o.vertices.contains(v))
    }

    pub fn contains(&self, q: &P2<T>) -> bool {
        let k = self.len();
        (0..k).all(|i| !orient2(&self.vertices[i], &self.vertices[(i + 1) % k], q).is_negative())
    }
}

fn signed_area2<T: Scalar>(vs: &[P2<T>]) -> T {
    let k = vs.len();
    let mut acc = T::zero();
    for i in 0..k {
        let (a, b) = (&vs[i], &vs[(i + 1) % k]);
        acc = acc + a.u.clone() * b.v.clone() - b.u.clone() * a.v.clone();
    }
    acc
}

fn strictly_convex<T: Scalar>(vs: &[P2<T>]) -> bool {
    let k = vs.len();
    let turns: Vec<T> = (0..k).map(|i| orient2(&vs[i], &vs[(i + 1) % k], &vs[(i + 2) % k])).collect();
    if !(turns.iter().all(|t| t.is_positive()) || turns.iter().all(|t| t.is_negative())) {
        return false;
    }
    // a star polygon also turns one way; its edge directions wind more than once
    let signs: Vec<bool> = (0..k)
        .map(|i| vs[(i + 1) % k].u.clone() - vs[i].u.clone())
        .filter(|d| !d.is_zero())
        .map(|d| d.is_positive())
        .collect();
    let changes = (0..signs.len()).filter(|&i| signs[i] != signs[(i + 1) % signs.len()]).count();
    changes <= 2
}

/// Half-plane `f(p) >= 0` with `f` one of `u`, `1 - u`, `v`, `1 - v`.
fn side<T: Scalar>(k: usize, p: &P2<T>) -> T {
    match k {
        0 => p.u.clone(),
        1 => T::one() - p.u.clone(),
        2 => p.v.clone(),
        _ => T::one() - p.v.clone(),
    }
}

/// Vertices of `poly` intersected with `[0,1]^2`, duplicates and collinear
/// vertices removed; fewer than three means the overlap has no interior.
///
/// The boundary walk keeps the input's starting edge: the first vertex is the
/// first kept point met when walking from the input's first vertex.
pub fn clip_points_to_unit_square<T: Scalar>(poly: &Polygon2<T>) -> Vec<P2<T>> {
    let mut cur: Vec<P2<T>> = poly.vertices.clone();
    for k in 0..4 {
        let mut next = Vec::with_capacity(cur.len() + 1);
        let len = cur.len();
        for i in 0..len {
            let (p, q) = (&cur[i], &cur[(i + 1) % len]);
            let (fp, fq) = (side(k, p), side(k, q));
            if !fp.is_negative() {
                next.push(p.clone());
            }
            if (fp.is_positive() && fq.is_negative()) || (fp.is_negative() && fq.is_positive()) {
                let t = fp.clone() / (fp - fq);
                next.push(p.lerp(q, &t));
            }
        }
        cur = next;
        if cur.is_empty() {
            return cur;
        }
    }
    clean(cur)
}

fn clean<T: Scalar>(mut vs: Vec<P2<T>>) -> Vec<P2<T>> {
    vs.dedup();
    while vs.len() > 1 && vs.first() == vs.last() {
        vs.pop();
    }
    loop {
        let k = vs.len();
        if k < 3 {
            return vs;
        }
        let drop = (0..k).find(|&i| orient2(&vs[(i + k - 1) % k], &vs[i], &vs[(i + 1) % k]).is_zero());
        match drop {
            Some(i) => {
                vs.remove(i);
            }
            None => return vs,
        }
    }
}

/// Intersection with the unit square, `None` when it has no interior.
pub fn clip_to_unit_square<T: Scalar>(poly: &Polygon2<T>) -> Option<Polygon2<T>> {
    let pts = clip_points_to_unit_square(poly);
    if pts.len() < 3 {
        return None;
    }
    Polygon2::new(pts).ok()
}

/// Clips a quadrilateral given in corner order; errors unless it is strictly convex.
pub fn clip_quad_to_unit_square<T: Scalar>(quad: &[P2<T>; 4]) -> Result<Option<Polygon2<T>>> {
    let poly = Polygon2::new(quad.to_vec())?;
    Ok(clip_to_unit_square(&poly))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Piece<T> {
    Quad([P2<T>; 4]),
    Tri([P2<T>; 3]),
}

impl<T: Scalar> Piece<T> {
    pub fn vertices(&self) -> Vec<P2<T>> {
        match self {
            Piece::Quad(q) => q.to_vec(),
            Piece::Tri(t) => t.to_vec(),
        }
    }

    pub fn area(&self) -> T {
        signed_area2(&self.vertices()).abs() / T::from_int(2)
    }
}

/// Fan from vertex 0, consecutive fan triangles merged into quadrilaterals.
///
/// An even vertex count gives only quadrilaterals; an odd one leaves a
/// single triangle at the end.
pub fn decompose<T: Scalar>(poly: &Polygon2<T>) -> Vec<Piece<T>> {
    let v = &poly.vertices;
    let k = v.len();
    let mut out = Vec::new();
    let mut i = 1;
    while i + 2 < k {
        out.push(Piece::Quad([v[0].clone(), v[i].clone(), v[i + 1].clone(), v[i + 2].clone()]));
        i += 2;
    }
    if i + 1 < k {
        out.push(Piece::Tri([v[0].clone(), v[i].clone(), v[i + 1].clone()]));
    }
    out
}
