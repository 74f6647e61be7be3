use super::net::{net_from_monomial, ControlNet};
use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::scalar::{pow, Scalar};

/// `S(u,v) = sum c_ij u^i v^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialForm<T> {
    deg_u: usize,
    deg_v: usize,
    coeffs: Vec<Vec3<T>>,
}

impl<T: Scalar> MonomialForm<T> {
    pub fn new(deg_u: usize, deg_v: usize, coeffs: Vec<Vec3<T>>) -> Result<Self> {
        if coeffs.len() != (deg_u + 1) * (deg_v + 1) {
            return Err(Error::InvalidNet("monomial coefficient count".into()));
        }
        Ok(MonomialForm { deg_u, deg_v, coeffs })
    }

    pub fn degree(&self) -> (usize, usize) {
        (self.deg_u, self.deg_v)
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Vec3<T> {
        &self.coeffs[i * (self.deg_v + 1) + j]
    }

    pub fn evaluate(&self, u: &T, v: &T) -> Vec3<T> {
        let mut acc = Vec3::zero();
        for i in 0..=self.deg_u {
            for j in 0..=self.deg_v {
                acc = acc + self.coeff(i, j).scale(&(pow(u, i) * pow(v, j)));
            }
        }
        acc
    }

    pub fn to_net(&self) -> ControlNet<T> {
        net_from_monomial(self)
    }
}
