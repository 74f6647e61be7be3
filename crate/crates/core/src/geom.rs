use crate::error::{Error, Result};
use crate::exact::Matrix;
use crate::scalar::Scalar;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

/// Points and vectors share one representation.
pub type Point3<T> = Vec3<T>;

impl<T: Scalar> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Vec3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vec3::new(T::zero(), T::zero(), T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, s: &T) -> Self {
        Vec3::new(self.x.clone() * s.clone(), self.y.clone() * s.clone(), self.z.clone() * s.clone())
    }

    pub fn dot(&self, o: &Self) -> T {
        self.x.clone() * o.x.clone() + self.y.clone() * o.y.clone() + self.z.clone() * o.z.clone()
    }

    pub fn cross(&self, o: &Self) -> Self {
        Vec3::new(
            self.y.clone() * o.z.clone() - self.z.clone() * o.y.clone(),
            self.z.clone() * o.x.clone() - self.x.clone() * o.z.clone(),
            self.x.clone() * o.y.clone() - self.y.clone() * o.x.clone(),
        )
    }

    /// `(1 - t) self + t o`.
    pub fn lerp(&self, o: &Self, t: &T) -> Self {
        let s = T::one() - t.clone();
        self.scale(&s) + o.scale(t)
    }

    pub fn to_vec(&self) -> Vec<T> {
        vec![self.x.clone(), self.y.clone(), self.z.clone()]
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Vec3<U> {
        Vec3 { x: f(&self.x), y: f(&self.y), z: f(&self.z) }
    }
}

impl<T: Scalar> Add for Vec3<T> {
    type Output = Vec3<T>;
    fn add(self, o: Self) -> Self {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl<T: Scalar> Sub for Vec3<T> {
    type Output = Vec3<T>;
    fn sub(self, o: Self) -> Self {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl<T: Scalar> Neg for Vec3<T> {
    type Output = Vec3<T>;
    fn neg(self) -> Self {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl<T: Scalar> Mul<T> for Vec3<T> {
    type Output = Vec3<T>;
    fn mul(self, s: T) -> Self {
        self.scale(&s)
    }
}

impl<T: Scalar> std::fmt::Display for Vec3<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Point of a parameter plane.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct P2<T> {
    pub u: T,
    pub v: T,
}

impl<T: Scalar> P2<T> {
    pub fn new(u: T, v: T) -> Self {
        P2 { u, v }
    }

    pub fn sub(&self, o: &Self) -> Self {
        P2::new(self.u.clone() - o.u.clone(), self.v.clone() - o.v.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        P2::new(self.u.clone() + o.u.clone(), self.v.clone() + o.v.clone())
    }

    pub fn lerp(&self, o: &Self, t: &T) -> Self {
        let s = T::one() - t.clone();
        P2::new(
            self.u.clone() * s.clone() + o.u.clone() * t.clone(),
            self.v.clone() * s + o.v.clone() * t.clone(),
        )
    }

    pub fn swap(&self) -> Self {
        P2::new(self.v.clone(), self.u.clone())
    }
}

/// `(b - a) x (c - a)`: positive for a counter-clockwise turn.
pub fn orient2<T: Scalar>(a: &P2<T>, b: &P2<T>, c: &P2<T>) -> T {
    let (ab, ac) = (b.sub(a), c.sub(a));
    ab.u * ac.v - ab.v * ac.u
}

impl<T: Scalar> std::fmt::Display for P2<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// The factor `k` with `w = k v`, if `w` is collinear with the nonzero `v`.
pub fn collinear<T: Scalar>(v: &Vec3<T>, w: &Vec3<T>) -> Result<Option<T>> {
    let k = if !v.x.is_zero() {
        w.x.clone() / v.x.clone()
    } else if !v.y.is_zero() {
        w.y.clone() / v.y.clone()
    } else if !v.z.is_zero() {
        w.z.clone() / v.z.clone()
    } else {
        return Err(Error::ZeroVector);
    };
    Ok((v.scale(&k) == *w).then_some(k))
}

/// True when the vectors span at most a plane.
pub fn coplanar<T: Scalar>(vs: &[Vec3<T>]) -> bool {
    rank3(vs) <= 2
}

pub fn rank3<T: Scalar>(vs: &[Vec3<T>]) -> usize {
    Matrix::from_cols(&vs.iter().map(|v| v.to_vec()).collect::<Vec<_>>()).rank()
}
