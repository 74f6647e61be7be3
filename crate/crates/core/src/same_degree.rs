//! Coincidence of two nets of equal degree, related by an axis-aligned affine map.

use crate::bezier::{finite_differences, FDSet, NetSymmetry};
use crate::blossom::{reparam_rectangle, AffineReparam};
use crate::coincidence::{require_irreducible, CoincidenceResult, Relation, Reparam};
use crate::domain::Polygon2;
use crate::error::{Error, Result};
use crate::exact::{LinearSolveOutcome, Matrix};
use crate::geom::{collinear, coplanar, Vec3, P2};
use crate::scalar::pow;
use crate::{Rat, RatNet};
use num_traits::{One, Zero};

/// Necessary conditions on the difference vectors; returns the ratio `kappa`
/// with `rho2 = kappa rho1`.
pub fn scale_ratio(fd1: &FDSet<Rat>, fd2: &FDSet<Rat>) -> Result<Option<Rat>> {
    let Some(kappa) = collinear(&fd1.rho, &fd2.rho)? else { return Ok(None) };
    if kappa.is_zero() {
        return Ok(None);
    }
    let ok = coplanar(&[fd1.rho.clone(), fd1.rho10.clone(), fd2.rho10.clone()])
        && coplanar(&[fd1.rho.clone(), fd1.rho01.clone(), fd2.rho01.clone()]);
    Ok(ok.then_some(kappa))
}

// b w - a (r + w) = kappa w1, solved for (a, b)
fn solve_pair(r2: &Vec3<Rat>, w2: &Vec3<Rat>, w1: &Vec3<Rat>, kappa: &Rat) -> Result<Option<(Rat, Rat)>> {
    let col_a = -(r2.clone() + w2.clone());
    let m = Matrix::from_cols(&[col_a.to_vec(), w2.to_vec()]);
    match m.solve(&w1.scale(kappa).to_vec()) {
        LinearSolveOutcome::Unique(v) => Ok(Some((v[0].clone(), v[1].clone()))),
        LinearSolveOutcome::Inconsistent => Ok(None),
        LinearSolveOutcome::Underdetermined => {
            Err(Error::RankDegeneracy("difference vectors do not determine the window".into()))
        }
    }
}

/// Window candidate from the difference vectors, checked against
/// `(b-a)^n (d-c)^m = kappa`.
pub fn solve_affine(
    degree: (usize, usize),
    fd1: &FDSet<Rat>,
    fd2: &FDSet<Rat>,
    kappa: &Rat,
) -> Result<Option<AffineReparam<Rat>>> {
    let Some((a, b)) = solve_pair(&fd2.rho, &fd2.rho10, &fd1.rho10, kappa)? else { return Ok(None) };
    let Some((c, d)) = solve_pair(&fd2.rho, &fd2.rho01, &fd1.rho01, kappa)? else { return Ok(None) };
    if a == b || c == d {
        return Ok(None);
    }
    let (n, m) = degree;
    if pow(&(&b - &a), n) * pow(&(&d - &c), m) != *kappa {
        return Ok(None);
    }
    Ok(Some(AffineReparam::new(a, b, c, d)))
}

/// Tests two irreducible nets of equal degree.
pub fn test_same_degree(s1: &RatNet, s2: &RatNet) -> Result<CoincidenceResult> {
    require_irreducible(s1, "first")?;
    require_irreducible(s2, "second")?;
    test_same_degree_unchecked(s1, s2)
}

pub(crate) fn test_same_degree_unchecked(s1: &RatNet, s2: &RatNet) -> Result<CoincidenceResult> {
    let (n, m) = s1.degree();
    if s2.degree() != (n, m) {
        return Err(Error::DegreeMismatch(format!("({n},{m}) vs ({},{})", s2.degree().0, s2.degree().1)));
    }
    let fd1 = finite_differences(s1);
    let mut diagnostics = Vec::new();
    for sym in NetSymmetry::for_degree(n, m) {
        let s2s = sym.apply(s2);
        let fd2 = finite_differences(&s2s);
        let Some(kappa) = scale_ratio(&fd1, &fd2)? else { continue };
        let Some(w) = solve_affine((n, m), &fd1, &fd2, &kappa)? else { continue };
        if reparam_rectangle(s1, &w)? == s2s {
            return Ok(finish_affine(s1, w, sym, diagnostics));
        }
        diagnostics.push(format!("{sym}: window ({}, {}, {}, {}) fails net verification", w.a, w.b, w.c, w.d));
    }
    if diagnostics.is_empty() {
        diagnostics.push("difference vectors admit no window under any grid symmetry".into());
    }
    Ok(CoincidenceResult::different(diagnostics))
}

fn min_max(x: &Rat, y: &Rat) -> (Rat, Rat) {
    if x < y {
        (x.clone(), y.clone())
    } else {
        (y.clone(), x.clone())
    }
}

fn finish_affine(s1: &RatNet, w: AffineReparam<Rat>, sym: NetSymmetry, mut diagnostics: Vec<String>) -> CoincidenceResult {
    let (ulo, uhi) = min_max(&w.a, &w.b);
    let (vlo, vhi) = min_max(&w.c, &w.d);
    let zero = Rat::zero();
    let one = Rat::one();
    let u0 = if ulo > zero { ulo.clone() } else { zero.clone() };
    let u1 = if uhi < one { uhi.clone() } else { one.clone() };
    let v0 = if vlo > zero { vlo.clone() } else { zero.clone() };
    let v1 = if vhi < one { vhi.clone() } else { one.clone() };
    let mut res = CoincidenceResult::different(vec![]);
    res.reparam = Some(Reparam::Affine(w.clone()));
    res.symmetry = Some(sym);
    if u0 >= u1 || v0 >= v1 {
        res.relation = Relation::Disjoint;
        if u0 <= u1 && v0 <= v1 {
            diagnostics.push(format!("domains meet only in [{u0}, {u1}] x [{v0}, {v1}]"));
        }
        res.diagnostics = diagnostics;
        return res;
    }
    res.relation = if ulo == zero && uhi == one && vlo == zero && vhi == one {
        Relation::Coincident
    } else {
        Relation::CoincidentPart
    };
    // keep the other net's orientation
    let (pa, pb) = if w.a < w.b { (u0.clone(), u1.clone()) } else { (u1.clone(), u0.clone()) };
    let (pc, pd) = if w.c < w.d { (v0.clone(), v1.clone()) } else { (v1.clone(), v0.clone()) };
    let patch = reparam_rectangle(s1, &AffineReparam::new(pa, pb, pc, pd)).expect("nonempty window");
    res.patches.push(patch);
    res.shared_domain = Some(
        Polygon2::new(vec![
            P2::new(u0.clone(), v0.clone()),
            P2::new(u1.clone(), v0.clone()),
            P2::new(u1, v1.clone()),
            P2::new(u0, v1),
        ])
        .expect("rectangle"),
    );
    res.diagnostics = diagnostics;
    res
}
