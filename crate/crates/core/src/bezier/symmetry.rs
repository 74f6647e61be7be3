use super::net::ControlNet;
use crate::scalar::Scalar;

/// Relabelling of a net's index grid.
///
/// Applying it to a net `N` gives `R` with `R(s,t) = N(tau(s,t))`, where
/// `tau` reverses `s` and/or `t` and then optionally swaps the two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct NetSymmetry {
    pub flip_u: bool,
    pub flip_v: bool,
    pub transpose: bool,
}

impl NetSymmetry {
    pub const IDENTITY: NetSymmetry = NetSymmetry { flip_u: false, flip_v: false, transpose: false };

    /// All eight elements, identity first, transposing ones last.
    pub fn all() -> [NetSymmetry; 8] {
        let mut out = [NetSymmetry::IDENTITY; 8];
        for (k, s) in out.iter_mut().enumerate() {
            *s = NetSymmetry { flip_u: k & 1 != 0, flip_v: k & 2 != 0, transpose: k & 4 != 0 };
        }
        out
    }

    /// Elements usable on an `(n, m)` net while keeping its shape.
    pub fn for_degree(n: usize, m: usize) -> Vec<NetSymmetry> {
        NetSymmetry::all().into_iter().filter(|s| !s.transpose || n == m).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == NetSymmetry::IDENTITY
    }

    pub fn apply<T: Scalar>(&self, net: &ControlNet<T>) -> ControlNet<T> {
        let (n, m) = net.degree();
        let (rn, rm) = if self.transpose { (m, n) } else { (n, m) };
        ControlNet::from_fn(rn, rm, |i, j| {
            let i2 = if self.flip_u { rn - i } else { i };
            let j2 = if self.flip_v { rm - j } else { j };
            if self.transpose {
                net.point(j2, i2).clone()
            } else {
                net.point(i2, j2).clone()
            }
        })
        .unwrap()
    }

    pub fn name(&self) -> &'static str {
        match (self.transpose, self.flip_u, self.flip_v) {
            (false, false, false) => "identity",
            (false, true, false) => "flip_u",
            (false, false, true) => "flip_v",
            (false, true, true) => "flip_uv",
            (true, false, false) => "transpose",
            (true, true, false) => "transpose_flip_u",
            (true, false, true) => "transpose_flip_v",
            (true, true, true) => "transpose_flip_uv",
        }
    }

    pub fn from_name(name: &str) -> Option<NetSymmetry> {
        NetSymmetry::all().into_iter().find(|s| s.name() == name)
    }
}

impl std::fmt::Display for NetSymmetry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// First symmetry `s` (identity first) with `s.apply(a) == b`.
pub fn nets_equal_up_to_symmetry<T: Scalar>(a: &ControlNet<T>, b: &ControlNet<T>) -> Option<NetSymmetry> {
    let (n, m) = a.degree();
    let (bn, bm) = b.degree();
    if !((n, m) == (bn, bm) || (m, n) == (bn, bm)) {
        return None;
    }
    NetSymmetry::all().into_iter().find(|s| {
        let shape = if s.transpose { (m, n) } else { (n, m) };
        shape == (bn, bm) && s.apply(a) == *b
    })
}
