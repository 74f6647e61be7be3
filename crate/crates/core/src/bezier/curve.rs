use crate::error::{Error, Result};
use crate::exact::Poly;
use crate::geom::Vec3;
use crate::scalar::{binom, Scalar};

/// Bezier curve in space; degree is `points.len() - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct BezierCurve3<T> {
    points: Vec<Vec3<T>>,
}

impl<T: Scalar> BezierCurve3<T> {
    pub fn new(points: Vec<Vec3<T>>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidNet("a curve needs at least two control points".into()));
        }
        Ok(BezierCurve3 { points })
    }

    pub fn degree(&self) -> usize {
        self.points.len() - 1
    }

    pub fn points(&self) -> &[Vec3<T>] {
        &self.points
    }

    /// Polar form evaluated by de Casteljau with one parameter per level.
    pub fn blossom(&self, params: &[T]) -> Vec3<T> {
        assert_eq!(params.len(), self.degree(), "blossom arity");
        blossom_points(&self.points, params)
    }

    pub fn evaluate(&self, t: &T) -> Vec3<T> {
        self.blossom(&vec![t.clone(); self.degree()])
    }

    /// Control points of the same curve over `[a, b]`, running from `a` to `b`.
    pub fn restrict(&self, a: &T, b: &T) -> Self {
        BezierCurve3 { points: restrict_points(&self.points, a, b) }
    }

    pub fn elevate(&self) -> Self {
        BezierCurve3 { points: elevate_points(&self.points) }
    }

    /// Power-basis coefficients `a_k` with `C(t) = sum a_k t^k`.
    pub fn to_power(&self) -> Vec<Vec3<T>> {
        let n = self.degree();
        (0..=n)
            .map(|k| {
                let mut acc = Vec3::zero();
                for i in 0..=k {
                    let mut w = binom::<T>(k, i);
                    if (k - i) % 2 == 1 {
                        w = -w;
                    }
                    acc = acc + self.points[i].scale(&w);
                }
                acc.scale(&binom::<T>(n, k))
            })
            .collect()
    }

    /// One polynomial per coordinate.
    pub fn coordinate_polys(&self) -> [Poly<T>; 3] {
        let pw = self.to_power();
        [
            Poly::new(pw.iter().map(|p| p.x.clone()).collect()),
            Poly::new(pw.iter().map(|p| p.y.clone()).collect()),
            Poly::new(pw.iter().map(|p| p.z.clone()).collect()),
        ]
    }

    /// Inverse of [`coordinate_polys`](Self::coordinate_polys) at the given degree.
    pub fn from_coordinate_polys(polys: &[Poly<T>; 3], degree: usize) -> Result<Self> {
        if polys.iter().any(|p| p.degree().is_some_and(|d| d > degree)) {
            return Err(Error::DegreeMismatch(format!("polynomial exceeds degree {degree}")));
        }
        let [x, y, z] = polys.each_ref().map(|p| p.to_bernstein(degree));
        let points = (0..=degree).map(|i| Vec3::new(x[i].clone(), y[i].clone(), z[i].clone())).collect();
        BezierCurve3::new(points)
    }

    /// Top forward difference and the scaled next-to-top one, as used on the
    /// boundary of a square net: `sum (-1)^(d-i) C(d,i) c_i` and
    /// `sum (-1)^(d-i) C(d,i) (i-d) c_i`.
    pub fn top_differences(&self) -> (Vec3<T>, Vec3<T>) {
        top_differences(&self.points)
    }
}

pub(crate) fn blossom_points<T: Scalar>(points: &[Vec3<T>], params: &[T]) -> Vec3<T> {
    let mut work = points.to_vec();
    for (level, t) in params.iter().enumerate() {
        for i in 0..work.len() - 1 - level {
            work[i] = work[i].lerp(&work[i + 1], t);
        }
    }
    work.swap_remove(0)
}

pub(crate) fn restrict_points<T: Scalar>(points: &[Vec3<T>], a: &T, b: &T) -> Vec<Vec3<T>> {
    let n = points.len() - 1;
    (0..=n)
        .map(|k| {
            let mut params = vec![a.clone(); n - k];
            params.extend(std::iter::repeat_n(b.clone(), k));
            blossom_points(points, &params)
        })
        .collect()
}

pub(crate) fn elevate_points<T: Scalar>(points: &[Vec3<T>]) -> Vec<Vec3<T>> {
    let n = points.len() - 1;
    let np1 = T::from_int(n as i64 + 1);
    (0..=n + 1)
        .map(|i| {
            let w = T::from_int(i as i64) / np1.clone();
            if i == 0 {
                points[0].clone()
            } else if i == n + 1 {
                points[n].clone()
            } else {
                points[i - 1].scale(&w) + points[i].scale(&(T::one() - w.clone()))
            }
        })
        .collect()
}

pub(crate) fn top_differences<T: Scalar>(points: &[Vec3<T>]) -> (Vec3<T>, Vec3<T>) {
    let d = points.len() - 1;
    let mut delta = Vec3::zero();
    let mut delta1 = Vec3::zero();
    for (i, c) in points.iter().enumerate() {
        let mut w = binom::<T>(d, i);
        if (d - i) % 2 == 1 {
            w = -w;
        }
        delta = delta + c.scale(&w);
        delta1 = delta1 + c.scale(&(w * T::from_int(i as i64 - d as i64)));
    }
    (delta, delta1)
}
