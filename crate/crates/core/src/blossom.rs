//! Polar forms and exact reparametrization of nets.

use crate::bezier::{ControlNet, MonomialForm};
use crate::error::{Error, Result};
use crate::geom::{orient2, Vec3, P2};
use crate::scalar::{binom, binomial, pow, Scalar};

/// `u = a + s (b - a)`, `v = c + t (d - c)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineReparam<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> AffineReparam<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        AffineReparam { a, b, c, d }
    }

    pub fn identity() -> Self {
        AffineReparam::new(T::zero(), T::one(), T::zero(), T::one())
    }

    pub fn eval(&self, s: &T, t: &T) -> P2<T> {
        P2::new(
            self.a.clone() + s.clone() * (self.b.clone() - self.a.clone()),
            self.c.clone() + t.clone() * (self.d.clone() - self.c.clone()),
        )
    }

    pub fn params(&self) -> [T; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    pub fn to_bilinear(&self) -> BilinearReparam<T> {
        BilinearReparam::new(
            P2::new(self.a.clone(), self.c.clone()),
            P2::new(self.b.clone(), self.c.clone()),
            P2::new(self.b.clone(), self.d.clone()),
            P2::new(self.a.clone(), self.d.clone()),
        )
    }
}

/// Bilinear map of the unit square with `(0,0) -> a`, `(1,0) -> b`,
/// `(1,1) -> c`, `(0,1) -> d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearReparam<T> {
    pub a: P2<T>,
    pub b: P2<T>,
    pub c: P2<T>,
    pub d: P2<T>,
}

impl<T: Scalar> BilinearReparam<T> {
    pub fn new(a: P2<T>, b: P2<T>, c: P2<T>, d: P2<T>) -> Self {
        BilinearReparam { a, b, c, d }
    }

    /// From `[a1, a2, b1, b2, c1, c2, d1, d2]`.
    pub fn from_params(p: [T; 8]) -> Self {
        let [a1, a2, b1, b2, c1, c2, d1, d2] = p;
        BilinearReparam::new(P2::new(a1, a2), P2::new(b1, b2), P2::new(c1, c2), P2::new(d1, d2))
    }

    pub fn params(&self) -> [T; 8] {
        [
            self.a.u.clone(),
            self.a.v.clone(),
            self.b.u.clone(),
            self.b.v.clone(),
            self.c.u.clone(),
            self.c.v.clone(),
            self.d.u.clone(),
            self.d.v.clone(),
        ]
    }

    pub fn corners(&self) -> [P2<T>; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    pub fn eval(&self, s: &T, t: &T) -> P2<T> {
        let bottom = self.a.lerp(&self.b, s);
        let top = self.d.lerp(&self.c, s);
        bottom.lerp(&top, t)
    }

    /// Strictly convex corner quadrilateral, either orientation.
    pub fn is_convex(&self) -> bool {
        let q = self.corners();
        let turns: Vec<T> = (0..4).map(|k| orient2(&q[k], &q[(k + 1) % 4], &q[(k + 2) % 4])).collect();
        turns.iter().all(|t| t.is_positive()) || turns.iter().all(|t| t.is_negative())
    }

    /// Counter-clockwise corner order.
    pub fn is_ccw(&self) -> bool {
        orient2(&self.a, &self.b, &self.c).is_positive()
    }

    /// Component polynomials `u(s,t)`, `v(s,t)` as `[1, s, t, st]` coefficients.
    fn components(&self) -> [[T; 4]; 2] {
        let comp = |a: &T, b: &T, c: &T, d: &T| {
            [
                a.clone(),
                b.clone() - a.clone(),
                d.clone() - a.clone(),
                a.clone() - b.clone() + c.clone() - d.clone(),
            ]
        };
        [
            comp(&self.a.u, &self.b.u, &self.c.u, &self.d.u),
            comp(&self.a.v, &self.b.v, &self.c.v, &self.d.v),
        ]
    }
}

impl<T: Scalar> std::fmt::Display for BilinearReparam<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "A{} B{} C{} D{}", self.a, self.b, self.c, self.d)
    }
}

/// Triangular Bezier net of total degree `degree`.
///
/// `point(nu, mu)` weights `l0^nu l1^mu l2^(degree - nu - mu)` for barycentric
/// coordinates `(l0, l1, l2)` over the corners `m`, `n`, `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangularNet<T> {
    degree: usize,
    points: Vec<Vec3<T>>,
    pub corners: [P2<T>; 3],
}

impl<T: Scalar> TriangularNet<T> {
    pub fn new(degree: usize, points: Vec<Vec3<T>>, corners: [P2<T>; 3]) -> Result<Self> {
        if points.len() != (degree + 1) * (degree + 2) / 2 {
            return Err(Error::InvalidNet("triangular point count".into()));
        }
        Ok(TriangularNet { degree, points, corners })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn point(&self, nu: usize, mu: usize) -> &Vec3<T> {
        assert!(nu + mu <= self.degree);
        &self.points[tri_index(self.degree, nu, mu)]
    }

    /// Rows `nu = 0..=degree`, each with `mu = 0..=degree - nu`.
    pub fn rows(&self) -> Vec<Vec<Vec3<T>>> {
        (0..=self.degree).map(|nu| (0..=self.degree - nu).map(|mu| self.point(nu, mu).clone()).collect()).collect()
    }

    pub fn evaluate_bary(&self, l0: &T, l1: &T, l2: &T) -> Vec3<T> {
        let d = self.degree;
        let mut acc = Vec3::zero();
        for nu in 0..=d {
            for mu in 0..=d - nu {
                let la = d - nu - mu;
                let w = T::from_int(multinomial(d, nu, mu)) * pow(l0, nu) * pow(l1, mu) * pow(l2, la);
                acc = acc + self.point(nu, mu).scale(&w);
            }
        }
        acc
    }

    /// Evaluates at a point of the parameter plane through its barycentric coordinates.
    pub fn evaluate_uv(&self, q: &P2<T>) -> Vec3<T> {
        let [m, n, p] = &self.corners;
        let area = orient2(m, n, p);
        let l0 = orient2(q, n, p) / area.clone();
        let l1 = orient2(m, q, p) / area;
        let l2 = T::one() - l0.clone() - l1.clone();
        self.evaluate_bary(&l0, &l1, &l2)
    }
}

fn tri_index(d: usize, nu: usize, mu: usize) -> usize {
    // sum_{k < nu} (d + 1 - k) + mu
    nu * (d + 1) - nu * nu.saturating_sub(1) / 2 + mu
}

fn multinomial(d: usize, i: usize, j: usize) -> i64 {
    binomial(d as i64, i as i64) * binomial((d - i) as i64, j as i64)
}

fn elementary_symmetric<T: Scalar>(xs: &[T], k: usize) -> T {
    // sum over k-subsets, by explicit enumeration
    let n = xs.len();
    let mut acc = T::zero();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut prod = T::one();
        for (i, x) in xs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                prod = prod * x.clone();
            }
        }
        acc = acc + prod;
    }
    acc
}

/// Tensor-product polar form from the power basis by subset sums.
///
/// Exponential in the degree; meant as a reference implementation.
pub fn tensor_blossom_direct<T: Scalar>(net: &ControlNet<T>, us: &[T], vs: &[T]) -> Vec3<T> {
    let (n, m) = net.degree();
    assert_eq!(us.len(), n);
    assert_eq!(vs.len(), m);
    let mono = net.to_monomial();
    let eu: Vec<T> = (0..=n).map(|i| elementary_symmetric(us, i) / binom::<T>(n, i)).collect();
    let ev: Vec<T> = (0..=m).map(|j| elementary_symmetric(vs, j) / binom::<T>(m, j)).collect();
    let mut acc = Vec3::zero();
    for i in 0..=n {
        for j in 0..=m {
            acc = acc + mono.coeff(i, j).scale(&(eu[i].clone() * ev[j].clone()));
        }
    }
    acc
}

/// Net of the surface over the window, in closed form from the power basis.
///
/// Same result as [`ControlNet::subdivide`]: `s = 0` at `u = a`, `t = 0` at `v = c`.
pub fn reparam_rectangle<T: Scalar>(net: &ControlNet<T>, w: &AffineReparam<T>) -> Result<ControlNet<T>> {
    if w.a == w.b || w.c == w.d {
        return Err(Error::DegenerateWindow("window has zero extent".into()));
    }
    let (n, m) = net.degree();
    let mono = net.to_monomial();
    // f[nu][i] = sum_k C(nu,k) C(n-nu,i-k) b^k a^(i-k) / C(n,i)
    let factor = |deg: usize, lo: &T, hi: &T| -> Vec<Vec<T>> {
        (0..=deg)
            .map(|nu| {
                (0..=deg)
                    .map(|i| {
                        let mut acc = T::zero();
                        for k in 0..=i.min(nu) {
                            let c = binomial(nu as i64, k as i64) * binomial((deg - nu) as i64, (i - k) as i64);
                            if c != 0 {
                                acc = acc + T::from_int(c) * pow(hi, k) * pow(lo, i - k);
                            }
                        }
                        acc / binom::<T>(deg, i)
                    })
                    .collect()
            })
            .collect()
    };
    let fu = factor(n, &w.a, &w.b);
    let fv = factor(m, &w.c, &w.d);
    ControlNet::from_fn(n, m, |nu, mu| {
        let mut acc = Vec3::zero();
        for i in 0..=n {
            for j in 0..=m {
                acc = acc + mono.coeff(i, j).scale(&(fu[nu][i].clone() * fv[mu][j].clone()));
            }
        }
        acc
    })
}

/// Dense bivariate polynomial, `c[i][j]` the coefficient of `s^i t^j`.
#[derive(Debug, Clone, PartialEq)]
struct BiPoly<T> {
    c: Vec<Vec<T>>,
}

impl<T: Scalar> BiPoly<T> {
    fn constant(v: T, ds: usize, dt: usize) -> Self {
        let mut c = vec![vec![T::zero(); dt + 1]; ds + 1];
        c[0][0] = v;
        BiPoly { c }
    }

    fn bilinear(k: &[T; 4], ds: usize, dt: usize) -> Self {
        let mut p = BiPoly::constant(k[0].clone(), ds, dt);
        p.c[1][0] = k[1].clone();
        p.c[0][1] = k[2].clone();
        p.c[1][1] = k[3].clone();
        p
    }

    // product truncated to the allocated size; callers size for the exact result
    fn mul(&self, o: &Self) -> Self {
        let ds = self.c.len();
        let dt = self.c[0].len();
        let mut out = vec![vec![T::zero(); dt]; ds];
        for (i1, r1) in self.c.iter().enumerate() {
            for (j1, a) in r1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (i2, r2) in o.c.iter().enumerate() {
                    if i1 + i2 >= ds {
                        break;
                    }
                    for (j2, b) in r2.iter().enumerate() {
                        if j1 + j2 >= dt {
                            break;
                        }
                        if !b.is_zero() {
                            out[i1 + i2][j1 + j2] = out[i1 + i2][j1 + j2].clone() + a.clone() * b.clone();
                        }
                    }
                }
            }
        }
        BiPoly { c: out }
    }
}

/// Power-basis coefficients of `S(psi(s,t))`, degree `(n+m, n+m)`.
fn compose_bilinear<T: Scalar>(net: &ControlNet<T>, psi: &BilinearReparam<T>) -> Vec<Vec<Vec3<T>>> {
    let (n, m) = net.degree();
    let d = n + m;
    let mono = net.to_monomial();
    let [ku, kv] = psi.components();
    let pu = BiPoly::bilinear(&ku, d, d);
    let pv = BiPoly::bilinear(&kv, d, d);
    let mut upow = vec![BiPoly::constant(T::one(), d, d)];
    for i in 1..=n {
        upow.push(upow[i - 1].mul(&pu));
    }
    let mut vpow = vec![BiPoly::constant(T::one(), d, d)];
    for j in 1..=m {
        vpow.push(vpow[j - 1].mul(&pv));
    }
    let mut out = vec![vec![Vec3::zero(); d + 1]; d + 1];
    for i in 0..=n {
        for j in 0..=m {
            let c = mono.coeff(i, j);
            if c.is_zero() {
                continue;
            }
            let prod = upow[i].mul(&vpow[j]);
            for (k, row) in prod.c.iter().enumerate() {
                for (l, w) in row.iter().enumerate() {
                    if !w.is_zero() {
                        out[k][l] = out[k][l].clone() + c.scale(w);
                    }
                }
            }
        }
    }
    out
}

/// Net of `S(psi(s,t))` at degree `(n+m, n+m)`.
pub fn reparam_bilinear<T: Scalar>(net: &ControlNet<T>, psi: &BilinearReparam<T>) -> ControlNet<T> {
    let (n, m) = net.degree();
    reparam_bilinear_to(net, psi, n + m, n + m).expect("composition fits its natural degree")
}

/// Net of `S(psi(s,t))` at a requested degree; errors if the composition does not fit.
pub fn reparam_bilinear_to<T: Scalar>(
    net: &ControlNet<T>,
    psi: &BilinearReparam<T>,
    ds: usize,
    dt: usize,
) -> Result<ControlNet<T>> {
    let coeffs = compose_bilinear(net, psi);
    monomial_grid_to_net(&coeffs, ds, dt)
}

/// Net of `S(psi(s,t))` at the smallest degree that represents it exactly.
pub fn reparam_bilinear_tight<T: Scalar>(net: &ControlNet<T>, psi: &BilinearReparam<T>) -> ControlNet<T> {
    let coeffs = compose_bilinear(net, psi);
    let mut ds = 1;
    let mut dt = 1;
    for (k, row) in coeffs.iter().enumerate() {
        for (l, c) in row.iter().enumerate() {
            if !c.is_zero() {
                ds = ds.max(k);
                dt = dt.max(l);
            }
        }
    }
    monomial_grid_to_net(&coeffs, ds, dt).expect("tight degree fits")
}

fn monomial_grid_to_net<T: Scalar>(coeffs: &[Vec<Vec3<T>>], ds: usize, dt: usize) -> Result<ControlNet<T>> {
    for (k, row) in coeffs.iter().enumerate() {
        for (l, c) in row.iter().enumerate() {
            if (k > ds || l > dt) && !c.is_zero() {
                return Err(Error::DegreeMismatch(format!("composition has a s^{k} t^{l} term beyond ({ds},{dt})")));
            }
        }
    }
    let mut flat = Vec::with_capacity((ds + 1) * (dt + 1));
    for k in 0..=ds {
        for l in 0..=dt {
            flat.push(coeffs.get(k).and_then(|r| r.get(l)).cloned().unwrap_or_else(Vec3::zero));
        }
    }
    Ok(MonomialForm::new(ds, dt, flat)?.to_net())
}

/// Triangular polar form of degree `n+m` from the power basis by enumerating
/// every split of the arguments into `u`-slots, `v`-slots and unused ones.
///
/// Exponential in `n+m`; meant as a reference implementation.
pub fn tri_blossom_direct<T: Scalar>(net: &ControlNet<T>, args: &[P2<T>]) -> Vec3<T> {
    let (n, m) = net.degree();
    let d = n + m;
    assert_eq!(args.len(), d);
    let mono = net.to_monomial();
    // sums[i][j] = sum over disjoint index sets I (|I|=i), J (|J|=j) of prod u_I prod v_J
    let mut sums = vec![vec![T::zero(); d + 1]; d + 1];
    let mut stack: Vec<(usize, usize, usize, T)> = vec![(0, 0, 0, T::one())];
    while let Some((k, i, j, prod)) = stack.pop() {
        if k == d {
            sums[i][j] = sums[i][j].clone() + prod;
            continue;
        }
        stack.push((k + 1, i, j, prod.clone()));
        stack.push((k + 1, i + 1, j, prod.clone() * args[k].u.clone()));
        stack.push((k + 1, i, j + 1, prod * args[k].v.clone()));
    }
    let mut acc = Vec3::zero();
    for i in 0..=n {
        for j in 0..=m {
            let w = sums[i][j].clone() / T::from_int(multinomial(d, i, j));
            acc = acc + mono.coeff(i, j).scale(&w);
        }
    }
    acc
}

/// Triangular net of degree `n+m` describing the surface over the triangle `(m_, n_, p_)`.
///
/// Closed form: four nested sums per monomial over how many `u`- and
/// `v`-slots fall on each corner.
pub fn extract_triangle<T: Scalar>(net: &ControlNet<T>, m_: &P2<T>, n_: &P2<T>, p_: &P2<T>) -> Result<TriangularNet<T>> {
    if orient2(m_, n_, p_).is_zero() {
        return Err(Error::DegenerateWindow(format!("triangle {m_}, {n_}, {p_} has no area")));
    }
    let (n, m) = net.degree();
    let d = n + m;
    let mono = net.to_monomial();
    let b = |x: usize, y: usize| binomial(x as i64, y as i64);
    let mut points = Vec::with_capacity((d + 1) * (d + 2) / 2);
    for nu in 0..=d {
        for mu in 0..=d - nu {
            let la = d - nu - mu;
            let mut acc = Vec3::zero();
            for i in 0..=n {
                for j in 0..=m {
                    let c = mono.coeff(i, j);
                    if c.is_zero() {
                        continue;
                    }
                    let mut s = T::zero();
                    for ia in 0..=i.min(nu) {
                        for ib in 0..=(i - ia).min(mu) {
                            let ig = i - ia - ib;
                            if ig > la {
                                continue;
                            }
                            let ci = b(nu, ia) * b(mu, ib) * b(la, ig);
                            let ui = pow(&m_.u, ia) * pow(&n_.u, ib) * pow(&p_.u, ig);
                            for ja in 0..=j.min(nu - ia) {
                                for jb in 0..=(j - ja).min(mu - ib) {
                                    let jg = j - ja - jb;
                                    if jg > la - ig {
                                        continue;
                                    }
                                    let cj = b(nu - ia, ja) * b(mu - ib, jb) * b(la - ig, jg);
                                    let vj = pow(&m_.v, ja) * pow(&n_.v, jb) * pow(&p_.v, jg);
                                    s = s + T::from_int(ci * cj) * ui.clone() * vj;
                                }
                            }
                        }
                    }
                    acc = acc + c.scale(&(s / T::from_int(multinomial(d, i, j))));
                }
            }
            points.push(acc);
        }
    }
    TriangularNet::new(d, points, [m_.clone(), n_.clone(), p_.clone()])
}
