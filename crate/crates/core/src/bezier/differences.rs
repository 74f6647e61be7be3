use super::curve::top_differences;
use super::net::ControlNet;
use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::scalar::{binom, Scalar};

/// Top mixed difference of a net and its two next-to-top companions.
///
/// `rho` is the `u^n v^m` power coefficient; `rho10` and `rho01` are the
/// `u^(n-1) v^m` and `u^n v^(m-1)` coefficients divided by `n` and `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct FDSet<T> {
    pub rho: Vec3<T>,
    pub rho10: Vec3<T>,
    pub rho01: Vec3<T>,
}

pub fn finite_differences<T: Scalar>(net: &ControlNet<T>) -> FDSet<T> {
    let (n, m) = net.degree();
    let (nt, mt) = (T::from_int(n as i64), T::from_int(m as i64));
    let mut rho = Vec3::zero();
    let mut rho10 = Vec3::zero();
    let mut rho01 = Vec3::zero();
    for i in 0..=n {
        for j in 0..=m {
            let mut w = binom::<T>(n, i) * binom::<T>(m, j);
            if (n + m - i - j) % 2 == 1 {
                w = -w;
            }
            let p = net.point(i, j);
            rho = rho + p.scale(&w);
            rho10 = rho10 + p.scale(&(w.clone() * T::from_int(i as i64 - n as i64) / nt.clone()));
            rho01 = rho01 + p.scale(&(w * T::from_int(j as i64 - m as i64) / mt.clone()));
        }
    }
    FDSet { rho, rho10, rho01 }
}

/// Top differences of the four boundary curves of a square net.
///
/// Curve order: `p_i0`, `p_0i`, `p_id`, `p_di`, i.e. the edges starting at
/// the `(0,0)` corner first and the ones ending at `(1,1)` last.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryFD<T> {
    pub delta: [Vec3<T>; 4],
    pub delta1: [Vec3<T>; 4],
}

pub fn boundary_differences<T: Scalar>(net: &ControlNet<T>) -> Result<BoundaryFD<T>> {
    let (n, m) = net.degree();
    if n != m {
        return Err(Error::DegreeMismatch(format!("boundary differences need a square net, got ({n},{m})")));
    }
    let curves = [net.u_curve(0), net.v_curve(0), net.u_curve(n), net.v_curve(n)];
    let pairs = curves.map(|c| top_differences(c.points()));
    let delta = pairs.clone().map(|p| p.0);
    let delta1 = pairs.map(|p| p.1);
    Ok(BoundaryFD { delta, delta1 })
}
