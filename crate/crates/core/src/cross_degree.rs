//! Coincidence of an `(n,m)` net with a net of degree `(n+m, n+m)`, related by
//! a bilinear map, and with the mixed degrees `(n+m, m)` and `(n, n+m)`.
//!
//! Each boundary curve of the higher-degree net is the base surface along one
//! edge of the image quadrilateral. Its two top differences fix the edge
//! vector `(x, y)` up to finitely many choices and give one linear relation on
//! the edge's start point.

use crate::bezier::{boundary_differences, finite_differences, BoundaryFD, FDSet, NetSymmetry};
use crate::blossom::{reparam_bilinear, reparam_bilinear_to, BilinearReparam};
use crate::coincidence::{finish_bilinear, require_irreducible, CoincidenceResult};
use crate::error::{Error, Result};
use crate::exact::{rational_roots, LinearSolveOutcome, Matrix, Poly, RootLocation};
use crate::geom::{collinear, rank3, Vec3, P2};
use crate::scalar::{pow, rat};
use crate::{Rat, RatNet};
use num_traits::Zero;

/// Ratios `kappa_k` with `delta_k = kappa_k rho` for the four boundary curves.
pub fn boundary_scale_ratios(fd1: &FDSet<Rat>, bfd: &BoundaryFD<Rat>) -> Result<Option<[Rat; 4]>> {
    let mut out = Vec::with_capacity(4);
    for d in &bfd.delta {
        match collinear(&fd1.rho, d)? {
            Some(k) if !k.is_zero() => out.push(k),
            _ => return Ok(None),
        }
    }
    Ok(Some([out[0].clone(), out[1].clone(), out[2].clone(), out[3].clone()]))
}

/// Everything the edge equations need.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossDegreeSystem {
    pub degree: (usize, usize),
    pub fd: FDSet<Rat>,
    pub bfd: BoundaryFD<Rat>,
    pub kappa: [Rat; 4],
    /// Rank of `[n rho10, m rho01, n rho, m rho]`.
    pub rank: usize,
}

impl CrossDegreeSystem {
    pub fn new(base: &RatNet, other: &RatNet) -> Result<Option<Self>> {
        let (n, m) = base.degree();
        if other.degree() != (n + m, n + m) {
            return Err(Error::DegreeMismatch(format!("expected ({}, {}) for the second net", n + m, n + m)));
        }
        let fd = finite_differences(base);
        let bfd = boundary_differences(other)?;
        let Some(kappa) = boundary_scale_ratios(&fd, &bfd)? else { return Ok(None) };
        let rank = rank3(&[fd.rho10.clone(), fd.rho01.clone(), fd.rho.clone()]);
        Ok(Some(CrossDegreeSystem { degree: (n, m), fd, bfd, kappa, rank }))
    }
}

/// `alpha x + beta y = c x y`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedEdgeEquation {
    pub alpha: Rat,
    pub beta: Rat,
    pub c: Rat,
}

/// Edge vector `(x, y)` with the start-point relation `n y p1 + m x p2 = rel`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeCandidate {
    pub x: Rat,
    pub y: Rat,
    pub rel: Rat,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct EdgeSolutions {
    pub reduced: Vec<ReducedEdgeEquation>,
    pub exact: Vec<EdgeCandidate>,
    /// Real solutions with an irrational coordinate, located by interval.
    pub irrational: Vec<RootLocation>,
}

/// Solves the edge equation of boundary curve `k` (0-based, in
/// [`BoundaryFD`] order).
pub fn solve_edge_equation(sys: &CrossDegreeSystem, k: usize) -> Result<EdgeSolutions> {
    solve_edge(sys.degree, &sys.fd, &sys.kappa[k], &sys.bfd.delta1[k])
}

fn solve_in_basis(cols: &[&Vec3<Rat>], rhs: &Vec3<Rat>) -> Option<Vec<Rat>> {
    let m = Matrix::from_cols(&cols.iter().map(|c| c.to_vec()).collect::<Vec<_>>());
    m.solve(&rhs.to_vec()).unique()
}

/// Edge equation `kappa (n y rho10 + m x rho01 + (n p1 y + m p2 x) rho) = x y delta1`
/// together with `x^n y^m = kappa`.
pub(crate) fn solve_edge(degree: (usize, usize), fd: &FDSet<Rat>, kappa: &Rat, delta1: &Vec3<Rat>) -> Result<EdgeSolutions> {
    let (n, m) = degree;
    let (nr, mr) = (rat(n as i64, 1), rat(m as i64, 1));
    let rank = rank3(&[fd.rho10.clone(), fd.rho01.clone(), fd.rho.clone()]);
    let mut out = EdgeSolutions::default();
    if rank == 3 {
        let coef = solve_in_basis(&[&fd.rho10, &fd.rho01, &fd.rho], delta1).expect("full rank");
        let (a1, b1, g1) = (coef[0].clone(), coef[1].clone(), coef[2].clone());
        out.reduced.push(ReducedEdgeEquation { alpha: Rat::zero(), beta: &nr * kappa, c: a1.clone() });
        out.reduced.push(ReducedEdgeEquation { alpha: &mr * kappa, beta: Rat::zero(), c: b1.clone() });
        if a1.is_zero() || b1.is_zero() {
            return Ok(out);
        }
        let x = &nr * kappa / &a1;
        let y = &mr * kappa / &b1;
        if pow(&x, n) * pow(&y, m) == *kappa {
            let rel = g1 * &x * &y / kappa;
            out.exact.push(EdgeCandidate { x, y, rel });
        }
        return Ok(out);
    }
    if rank < 2 {
        return Err(Error::RankDegeneracy(format!("difference vectors span rank {rank}")));
    }
    let w = if collinear(&fd.rho, &fd.rho10)?.is_none() { &fd.rho10 } else { &fd.rho01 };
    let c10 = solve_in_basis(&[&fd.rho, w], &fd.rho10).expect("in plane");
    let c01 = solve_in_basis(&[&fd.rho, w], &fd.rho01).expect("in plane");
    let Some(cd) = solve_in_basis(&[&fd.rho, w], delta1) else {
        // no solution on this edge
        return Ok(out);
    };
    let (s1, t1) = (&c10[0], &c10[1]);
    let (s2, t2) = (&c01[0], &c01[1]);
    let (g, h) = (&cd[0], &cd[1]);
    let eq = ReducedEdgeEquation { alpha: kappa * &mr * t2, beta: kappa * &nr * t1, c: h.clone() };
    let (pairs, irr) = solve_reduced(n, m, kappa, &eq)?;
    out.reduced.push(eq);
    out.irrational = irr;
    for (x, y) in pairs {
        let rel = g * &x * &y / kappa - &nr * &y * s1 - &mr * &x * s2;
        out.exact.push(EdgeCandidate { x, y, rel });
    }
    Ok(out)
}

/// Rational solutions of `alpha x + beta y = c x y`, `x^n y^m = kappa`.
pub fn solve_reduced(
    n: usize,
    m: usize,
    kappa: &Rat,
    eq: &ReducedEdgeEquation,
) -> Result<(Vec<(Rat, Rat)>, Vec<RootLocation>)> {
    let (alpha, beta, c) = (&eq.alpha, &eq.beta, &eq.c);
    let check = |x: &Rat, y: &Rat| pow(x, n) * pow(y, m) == *kappa;
    let mut pairs = Vec::new();
    if !alpha.is_zero() && !beta.is_zero() {
        // y = alpha x / (c x - beta), so x^n (alpha x)^m = kappa (c x - beta)^m
        let lhs = Poly::new(vec![Rat::zero(), alpha.clone()]).pow(m).mul(&Poly::x().pow(n));
        let rhs = Poly::linear(-beta.clone(), c.clone()).pow(m).scale(kappa);
        let (xs, irr) = rational_roots(&lhs.sub(&rhs))?;
        for x in xs {
            let den = c * &x - beta;
            if x.is_zero() || den.is_zero() {
                continue;
            }
            let y = alpha * &x / den;
            if check(&x, &y) {
                pairs.push((x, y));
            }
        }
        return Ok((pairs, irr));
    }
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::RankDegeneracy("edge equation is vacuous".into()));
    }
    if c.is_zero() {
        return Ok((pairs, vec![]));
    }
    if alpha.is_zero() {
        // y (beta - c x) = 0 with y != 0
        let x = beta / c;
        let p = Poly::x().pow(m).scale(&pow(&x, n)).sub(&Poly::constant(kappa.clone()));
        let (ys, irr) = rational_roots(&p)?;
        pairs.extend(ys.into_iter().filter(|y| check(&x, y)).map(|y| (x.clone(), y)));
        Ok((pairs, irr))
    } else {
        let y = alpha / c;
        let p = Poly::x().pow(n).scale(&pow(&y, m)).sub(&Poly::constant(kappa.clone()));
        let (xs, irr) = rational_roots(&p)?;
        pairs.extend(xs.into_iter().filter(|x| check(x, &y)).map(|x| (x, y.clone())));
        Ok((pairs, irr))
    }
}

/// Combines one candidate per edge into a map, or `None` if the edge vectors
/// do not close up or the start-point relations are inconsistent.
pub fn assemble_bilinear(degree: (usize, usize), picks: [&EdgeCandidate; 4]) -> Option<BilinearReparam<Rat>> {
    let [e1, e2, e3, e4] = picks;
    if &e1.x - &e2.x - &e3.x + &e4.x != Rat::zero() || &e1.y - &e2.y - &e3.y + &e4.y != Rat::zero() {
        return None;
    }
    let (nr, mr) = (rat(degree.0 as i64, 1), rat(degree.1 as i64, 1));
    let row = |e: &EdgeCandidate| vec![&nr * &e.y, &mr * &e.x];
    // edges 1, 2 start at A; edge 3 at D = A + e2; edge 4 at B = A + e1
    let rhs = vec![
        e1.rel.clone(),
        e2.rel.clone(),
        &e3.rel - &nr * &e3.y * &e2.x - &mr * &e3.x * &e2.y,
        &e4.rel - &nr * &e4.y * &e1.x - &mr * &e4.x * &e1.y,
    ];
    let mat = Matrix::from_rows(vec![row(e1), row(e2), row(e3), row(e4)]);
    let LinearSolveOutcome::Unique(a) = mat.solve(&rhs) else { return None };
    let a = P2::new(a[0].clone(), a[1].clone());
    let b = a.add(&P2::new(e1.x.clone(), e1.y.clone()));
    let d = a.add(&P2::new(e2.x.clone(), e2.y.clone()));
    let c = d.add(&P2::new(e3.x.clone(), e3.y.clone()));
    Some(BilinearReparam::new(a, b, c, d))
}

/// Candidate maps for one enumeration of the higher-degree net.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateReport {
    pub system: CrossDegreeSystem,
    pub edges: Vec<EdgeSolutions>,
    pub candidates: Vec<BilinearReparam<Rat>>,
}

pub fn cross_degree_candidates(base: &RatNet, other: &RatNet) -> Result<Option<CandidateReport>> {
    let Some(system) = CrossDegreeSystem::new(base, other)? else { return Ok(None) };
    let edges: Vec<EdgeSolutions> = (0..4).map(|k| solve_edge_equation(&system, k)).collect::<Result<_>>()?;
    let mut candidates: Vec<BilinearReparam<Rat>> = Vec::new();
    for e1 in &edges[0].exact {
        for e2 in &edges[1].exact {
            for e3 in &edges[2].exact {
                for e4 in &edges[3].exact {
                    if let Some(psi) = assemble_bilinear(system.degree, [e1, e2, e3, e4]) {
                        if !candidates.contains(&psi) {
                            candidates.push(psi);
                        }
                    }
                }
            }
        }
    }
    Ok(Some(CandidateReport { system, edges, candidates }))
}

fn irrational_note(edges: &[EdgeSolutions]) -> Option<String> {
    let parts: Vec<String> = edges
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.irrational.is_empty())
        .map(|(k, e)| {
            let iv: Vec<String> = e.irrational.iter().map(|r| r.to_string()).collect();
            format!("edge {}: {}", k + 1, iv.join(", "))
        })
        .collect();
    (!parts.is_empty()).then(|| format!("no rational witness; irrational edge roots at {}", parts.join("; ")))
}

/// Tests an irreducible `(n,m)` net against an irreducible `(n+m, n+m)` net.
pub fn test_cross_degree(s1: &RatNet, s2: &RatNet) -> Result<CoincidenceResult> {
    require_irreducible(s1, "first")?;
    require_irreducible(s2, "second")?;
    test_cross_degree_unchecked(s1, s2)
}

pub(crate) fn test_cross_degree_unchecked(s1: &RatNet, s2: &RatNet) -> Result<CoincidenceResult> {
    let (n, m) = s1.degree();
    if s2.degree() != (n + m, n + m) {
        return Err(Error::DegreeMismatch(format!("expected ({}, {}) for the second net", n + m, n + m)));
    }
    let mut diagnostics = Vec::new();
    for sym in NetSymmetry::all() {
        let s2s = sym.apply(s2);
        let Some(report) = cross_degree_candidates(s1, &s2s)? else { continue };
        if sym.is_identity() {
            diagnostics.push(format!("rank {} difference system", report.system.rank));
        }
        for (k, psi) in report.candidates.iter().enumerate() {
            if reparam_bilinear(s1, psi) == s2s {
                for other in &report.candidates[k + 1..] {
                    diagnostics.push(format!("{sym}: further candidate {other} not needed"));
                }
                return Ok(finish_bilinear(s1, psi.clone(), sym, s2.degree(), diagnostics));
            }
            diagnostics.push(format!("{sym}: candidate {psi} fails net verification"));
        }
        if let Some(note) = irrational_note(&report.edges) {
            diagnostics.push(format!("{sym}: {note}"));
        }
    }
    diagnostics.push("no bilinear map relates the nets".into());
    Ok(CoincidenceResult::different(diagnostics))
}

/// Tests an irreducible `(n,m)` net against an irreducible `(n+m, m)` or `(n, n+m)` net.
///
/// For `(n+m, m)` the map keeps `u` affine in `s` alone, so the image is a
/// quadrilateral with two sides parallel to the `v` axis; `(n, n+m)` is the
/// transposed case.
pub fn test_mixed_degree(s1: &RatNet, s2: &RatNet) -> Result<CoincidenceResult> {
    require_irreducible(s1, "first")?;
    require_irreducible(s2, "second")?;
    test_mixed_degree_unchecked(s1, s2)
}

pub(crate) fn test_mixed_degree_unchecked(s1: &RatNet, s2: &RatNet) -> Result<CoincidenceResult> {
    let (n, m) = s1.degree();
    let target = s2.degree();
    if target == (n + m, m) {
        let (found, diagnostics) = mixed_u(s1, s2)?;
        return Ok(match found {
            Some((psi, sym)) => finish_bilinear(s1, psi, sym, target, diagnostics),
            None => CoincidenceResult::different(diagnostics),
        });
    }
    if target == (n, n + m) {
        let (found, diagnostics) = mixed_u(&s1.transpose(), &s2.transpose())?;
        return Ok(match found {
            Some((chi, sym)) => {
                let psi = BilinearReparam::new(chi.a.swap(), chi.d.swap(), chi.c.swap(), chi.b.swap());
                let sym = NetSymmetry { flip_u: sym.flip_v, flip_v: sym.flip_u, transpose: false };
                finish_bilinear(s1, psi, sym, target, diagnostics)
            }
            None => CoincidenceResult::different(diagnostics),
        });
    }
    Err(Error::DegreeMismatch(format!(
        "({},{}) is neither ({},{}) nor ({},{})",
        target.0,
        target.1,
        n + m,
        m,
        n,
        n + m
    )))
}

// base(a1, p + q a1) as one polynomial in a1 per coordinate, minus `target`
fn along_line(base: &RatNet, p: &Rat, q: &Rat, du: &Rat, target: &Vec3<Rat>) -> [Poly<Rat>; 3] {
    let (n, m) = base.degree();
    let mono = base.to_monomial();
    let u = Poly::linear(du.clone(), Rat::from_integer(1.into()));
    let v = Poly::linear(p.clone(), q.clone());
    let mut acc = [Poly::zero(), Poly::zero(), Poly::zero()];
    for i in 0..=n {
        let ui = u.pow(i);
        for j in 0..=m {
            let t = ui.mul(&v.pow(j));
            let c = mono.coeff(i, j);
            acc[0] = acc[0].add(&t.scale(&c.x));
            acc[1] = acc[1].add(&t.scale(&c.y));
            acc[2] = acc[2].add(&t.scale(&c.z));
        }
    }
    acc[0] = acc[0].sub(&Poly::constant(target.x.clone()));
    acc[1] = acc[1].sub(&Poly::constant(target.y.clone()));
    acc[2] = acc[2].sub(&Poly::constant(target.z.clone()));
    acc
}

type MixedFound = (Option<(BilinearReparam<Rat>, NetSymmetry)>, Vec<String>);

fn mixed_u(s1: &RatNet, s2: &RatNet) -> Result<MixedFound> {
    let (n, m) = s1.degree();
    let big = n + m;
    let fd = finite_differences(s1);
    let (nr, mr) = (rat(n as i64, 1), rat(m as i64, 1));
    let mut diagnostics = Vec::new();
    for sym in NetSymmetry::for_degree(big, m) {
        let s2s = sym.apply(s2);
        let (d1, d1b) = s2s.u_curve(0).top_differences();
        let (d3, d3b) = s2s.u_curve(m).top_differences();
        let (Some(k1), Some(k3)) = (collinear(&fd.rho, &d1)?, collinear(&fd.rho, &d3)?) else { continue };
        if k1.is_zero() || k3.is_zero() {
            continue;
        }
        let e1 = solve_edge((n, m), &fd, &k1, &d1b)?;
        let e3 = solve_edge((n, m), &fd, &k3, &d3b)?;
        for c1 in &e1.exact {
            for c3 in e3.exact.iter().filter(|c3| c3.x == c1.x) {
                let x = &c1.x;
                // a2 = (r1 - n y1 a1)/(m x), d2 = (r3 - n y3 a1)/(m x)
                let a2 = (&c1.rel / (&mr * x), -(&nr * &c1.y) / (&mr * x));
                let d2 = (&c3.rel / (&mr * x), -(&nr * &c3.y) / (&mr * x));
                let corners = [
                    (a2.clone(), Rat::zero(), s2s.point(0, 0).clone()),
                    (d2.clone(), Rat::zero(), s2s.point(0, m).clone()),
                    ((&a2.0 + &c1.y, a2.1.clone()), x.clone(), s2s.point(big, 0).clone()),
                    ((&d2.0 + &c3.y, d2.1.clone()), x.clone(), s2s.point(big, m).clone()),
                ];
                let mut g = Poly::zero();
                for ((p, q), du, target) in corners.iter() {
                    for poly in along_line(s1, p, q, du, target) {
                        g = g.gcd(&poly);
                    }
                    if !g.is_zero() {
                        break;
                    }
                }
                if g.is_zero() {
                    diagnostics.push(format!("{sym}: corner equations leave the start point free"));
                    continue;
                }
                if g.degree() == Some(0) {
                    continue;
                }
                let (roots, irr) = rational_roots(&g)?;
                if !irr.is_empty() {
                    let iv: Vec<String> = irr.iter().map(|r| r.to_string()).collect();
                    diagnostics.push(format!("{sym}: no rational witness; irrational start points at {}", iv.join(", ")));
                }
                for a1 in roots {
                    let av = &a2.0 + &a2.1 * &a1;
                    let dv = &d2.0 + &d2.1 * &a1;
                    let psi = BilinearReparam::new(
                        P2::new(a1.clone(), av.clone()),
                        P2::new(&a1 + x, &av + &c1.y),
                        P2::new(&a1 + x, &dv + &c3.y),
                        P2::new(a1.clone(), dv),
                    );
                    if reparam_bilinear_to(s1, &psi, big, m).is_ok_and(|net| net == s2s) {
                        return Ok((Some((psi, sym)), diagnostics));
                    }
                    diagnostics.push(format!("{sym}: candidate {psi} fails net verification"));
                }
            }
        }
    }
    diagnostics.push("no map of the mixed-degree family relates the nets".into());
    Ok((None, diagnostics))
}
