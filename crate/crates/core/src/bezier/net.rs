use super::curve::{blossom_points, elevate_points, restrict_points, BezierCurve3};
use super::monomial::MonomialForm;
use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::scalar::{binom, Scalar};

/// Control net of a tensor-product Bezier surface.
///
/// `point(i, j)` is the control point with index `i` along `u` and `j` along `v`.
#[derive(Debug, Clone, PartialEq)]
pub struct ControlNet<T> {
    deg_u: usize,
    deg_v: usize,
    points: Vec<Vec3<T>>,
}

impl<T: Scalar> ControlNet<T> {
    pub fn new(deg_u: usize, deg_v: usize, points: Vec<Vec3<T>>) -> Result<Self> {
        if deg_u == 0 || deg_v == 0 {
            return Err(Error::InvalidNet(format!("degree ({deg_u},{deg_v}) must be at least 1 in each direction")));
        }
        if points.len() != (deg_u + 1) * (deg_v + 1) {
            return Err(Error::InvalidNet(format!(
                "degree ({deg_u},{deg_v}) needs {} points, got {}",
                (deg_u + 1) * (deg_v + 1),
                points.len()
            )));
        }
        Ok(ControlNet { deg_u, deg_v, points })
    }

    /// Builds from rows `grid[i][j]`.
    pub fn from_grid(grid: Vec<Vec<Vec3<T>>>) -> Result<Self> {
        let n = grid.len().checked_sub(1).ok_or_else(|| Error::InvalidNet("empty grid".into()))?;
        let m = grid[0].len().checked_sub(1).ok_or_else(|| Error::InvalidNet("empty row".into()))?;
        if grid.iter().any(|r| r.len() != m + 1) {
            return Err(Error::InvalidNet("ragged grid".into()));
        }
        ControlNet::new(n, m, grid.into_iter().flatten().collect())
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Vec3<T>>(deg_u: usize, deg_v: usize, mut f: F) -> Result<Self> {
        let mut pts = Vec::with_capacity((deg_u + 1) * (deg_v + 1));
        for i in 0..=deg_u {
            for j in 0..=deg_v {
                pts.push(f(i, j));
            }
        }
        ControlNet::new(deg_u, deg_v, pts)
    }

    pub fn degree(&self) -> (usize, usize) {
        (self.deg_u, self.deg_v)
    }

    pub fn point(&self, i: usize, j: usize) -> &Vec3<T> {
        &self.points[i * (self.deg_v + 1) + j]
    }

    pub fn point_mut(&mut self, i: usize, j: usize) -> &mut Vec3<T> {
        &mut self.points[i * (self.deg_v + 1) + j]
    }

    pub fn points(&self) -> &[Vec3<T>] {
        &self.points
    }

    pub fn grid(&self) -> Vec<Vec<Vec3<T>>> {
        self.points.chunks(self.deg_v + 1).map(|r| r.to_vec()).collect()
    }

    /// Iso-curve `v = j/m` of the net: points `p_ij` over `i`.
    pub fn u_curve(&self, j: usize) -> BezierCurve3<T> {
        BezierCurve3::new((0..=self.deg_u).map(|i| self.point(i, j).clone()).collect()).unwrap()
    }

    /// Iso-curve `u = i/n` of the net: points `p_ij` over `j`.
    pub fn v_curve(&self, i: usize) -> BezierCurve3<T> {
        BezierCurve3::new((0..=self.deg_v).map(|j| self.point(i, j).clone()).collect()).unwrap()
    }

    pub fn map<U: Scalar, F: Fn(&T) -> U>(&self, f: F) -> ControlNet<U> {
        ControlNet { deg_u: self.deg_u, deg_v: self.deg_v, points: self.points.iter().map(|p| p.map(&f)).collect() }
    }

    pub fn evaluate(&self, u: &T, v: &T) -> Vec3<T> {
        let us = vec![u.clone(); self.deg_u];
        let vs = vec![v.clone(); self.deg_v];
        self.tensor_blossom(&us, &vs)
    }

    /// Tensor-product polar form by repeated univariate de Casteljau.
    pub fn tensor_blossom(&self, us: &[T], vs: &[T]) -> Vec3<T> {
        assert_eq!(us.len(), self.deg_u);
        assert_eq!(vs.len(), self.deg_v);
        let col: Vec<Vec3<T>> = (0..=self.deg_u)
            .map(|i| {
                let row: Vec<Vec3<T>> = (0..=self.deg_v).map(|j| self.point(i, j).clone()).collect();
                blossom_points(&row, vs)
            })
            .collect();
        blossom_points(&col, us)
    }

    /// Net of the same surface over `[a,b] x [c,d]`, with `s = 0` at `u = a` and `t = 0` at `v = c`.
    ///
    /// Reversed or out-of-range intervals are allowed.
    pub fn subdivide(&self, a: &T, b: &T, c: &T, d: &T) -> Result<Self> {
        if a == b || c == d {
            return Err(Error::DegenerateWindow("window has zero extent".into()));
        }
        let mut out = self.clone();
        for j in 0..=self.deg_v {
            let col: Vec<Vec3<T>> = (0..=self.deg_u).map(|i| self.point(i, j).clone()).collect();
            for (i, p) in restrict_points(&col, a, b).into_iter().enumerate() {
                *out.point_mut(i, j) = p;
            }
        }
        for i in 0..=self.deg_u {
            let row: Vec<Vec3<T>> = (0..=self.deg_v).map(|j| out.point(i, j).clone()).collect();
            for (j, p) in restrict_points(&row, c, d).into_iter().enumerate() {
                *out.point_mut(i, j) = p;
            }
        }
        Ok(out)
    }

    pub fn elevate_u(&self) -> Self {
        let cols: Vec<Vec<Vec3<T>>> = (0..=self.deg_v)
            .map(|j| elevate_points(&(0..=self.deg_u).map(|i| self.point(i, j).clone()).collect::<Vec<_>>()))
            .collect();
        ControlNet::from_fn(self.deg_u + 1, self.deg_v, |i, j| cols[j][i].clone()).unwrap()
    }

    pub fn elevate_v(&self) -> Self {
        let rows: Vec<Vec<Vec3<T>>> = (0..=self.deg_u).map(|i| elevate_points(self.v_curve(i).points())).collect();
        ControlNet::from_fn(self.deg_u, self.deg_v + 1, |i, j| rows[i][j].clone()).unwrap()
    }

    /// Exact degree elevation; errors if the target is lower than the current degree.
    pub fn elevate_to(&self, n: usize, m: usize) -> Result<Self> {
        if n < self.deg_u || m < self.deg_v {
            return Err(Error::DegreeMismatch(format!("cannot elevate ({},{}) to ({n},{m})", self.deg_u, self.deg_v)));
        }
        let mut out = self.clone();
        while out.deg_u < n {
            out = out.elevate_u();
        }
        while out.deg_v < m {
            out = out.elevate_v();
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        ControlNet::from_fn(self.deg_v, self.deg_u, |i, j| self.point(j, i).clone()).unwrap()
    }

    /// Power-basis coefficients `c_ij` of `S(u,v) = sum c_ij u^i v^j`.
    pub fn to_monomial(&self) -> MonomialForm<T> {
        let (n, m) = (self.deg_u, self.deg_v);
        // convert along v first, then along u
        let mut tmp = vec![Vec3::zero(); (n + 1) * (m + 1)];
        for i in 0..=n {
            let pw = self.v_curve(i).to_power();
            for j in 0..=m {
                tmp[i * (m + 1) + j] = pw[j].clone();
            }
        }
        let mut coeffs = vec![Vec3::zero(); (n + 1) * (m + 1)];
        for j in 0..=m {
            let col = BezierCurve3::new((0..=n).map(|i| tmp[i * (m + 1) + j].clone()).collect()).unwrap();
            for (i, c) in col.to_power().into_iter().enumerate() {
                coeffs[i * (m + 1) + j] = c;
            }
        }
        MonomialForm::new(n, m, coeffs).unwrap()
    }

    /// Net with every point multiplied by `s`.
    pub fn scaled(&self, s: &T) -> Self {
        ControlNet { deg_u: self.deg_u, deg_v: self.deg_v, points: self.points.iter().map(|p| p.scale(s)).collect() }
    }
}

/// Bernstein net from monomial coefficients: `p_kl = sum c_ij C(k,i)C(l,j) / (C(n,i)C(m,j))`.
pub(crate) fn net_from_monomial<T: Scalar>(mono: &MonomialForm<T>) -> ControlNet<T> {
    let (n, m) = mono.degree();
    ControlNet::from_fn(n, m, |k, l| {
        let mut acc = Vec3::zero();
        for i in 0..=k {
            for j in 0..=l {
                let w = binom::<T>(k, i) * binom::<T>(l, j) / (binom::<T>(n, i) * binom::<T>(m, j));
                acc = acc + mono.coeff(i, j).scale(&w);
            }
        }
        acc
    })
    .unwrap()
}
