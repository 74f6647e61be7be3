//! Coincidence verdicts and the degree-based dispatcher.

use crate::blossom::{extract_triangle, reparam_bilinear, reparam_bilinear_to, AffineReparam, BilinearReparam, TriangularNet};
use crate::bezier::NetSymmetry;
use crate::cross_degree::{test_cross_degree_unchecked, test_mixed_degree_unchecked};
use crate::domain::{clip_points_to_unit_square, decompose, Piece, Polygon2};
use crate::error::{Error, Result};
use crate::irreducible::surface_irreducible;
use crate::same_degree::test_same_degree_unchecked;
use crate::{Rat, RatNet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// No reparametrization relates the two nets.
    Different,
    /// Both lie on one surface but their parameter domains do not overlap.
    Disjoint,
    /// They share a proper piece.
    CoincidentPart,
    /// Same point set.
    Coincident,
}

impl Relation {
    pub fn name(&self) -> &'static str {
        match self {
            Relation::Different => "different",
            Relation::Disjoint => "disjoint",
            Relation::CoincidentPart => "coincident_part",
            Relation::Coincident => "coincident",
        }
    }

    pub fn from_name(s: &str) -> Option<Relation> {
        [Relation::Different, Relation::Disjoint, Relation::CoincidentPart, Relation::Coincident]
            .into_iter()
            .find(|r| r.name() == s)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Reparam {
    Affine(AffineReparam<Rat>),
    Bilinear(BilinearReparam<Rat>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    First,
    Second,
}

impl Operand {
    pub fn name(&self) -> &'static str {
        match self {
            Operand::First => "first",
            Operand::Second => "second",
        }
    }
}

/// Verdict for a pair of nets.
///
/// `base` is the input whose `(u,v)` plane hosts the map and the shared
/// domain; with `other` the remaining input, `symmetry.apply(other)(s,t)`
/// equals `base(reparam(s,t))`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoincidenceResult {
    pub relation: Relation,
    pub base: Operand,
    pub reparam: Option<Reparam>,
    pub symmetry: Option<NetSymmetry>,
    pub shared_domain: Option<Polygon2<Rat>>,
    pub patches: Vec<RatNet>,
    pub triangle: Option<TriangularNet<Rat>>,
    pub diagnostics: Vec<String>,
}

impl CoincidenceResult {
    pub fn different(diagnostics: Vec<String>) -> Self {
        CoincidenceResult {
            relation: Relation::Different,
            base: Operand::First,
            reparam: None,
            symmetry: None,
            shared_domain: None,
            patches: vec![],
            triangle: None,
            diagnostics,
        }
    }

    pub fn affine(&self) -> Option<&AffineReparam<Rat>> {
        match &self.reparam {
            Some(Reparam::Affine(a)) => Some(a),
            _ => None,
        }
    }

    pub fn bilinear(&self) -> Option<&BilinearReparam<Rat>> {
        match &self.reparam {
            Some(Reparam::Bilinear(b)) => Some(b),
            _ => None,
        }
    }
}

pub(crate) fn require_irreducible(net: &RatNet, operand: &str) -> Result<()> {
    let rep = surface_irreducible(net);
    if rep.is_irreducible() {
        Ok(())
    } else {
        Err(Error::NotIrreducible { operand: operand.to_string(), reason: rep.to_string() })
    }
}

/// Shared domain and coincident pieces for a verified bilinear map.
///
/// Pieces are emitted at `patch_degree` (the other net's degree) when the
/// piece map allows it, else at `(n+m, n+m)`.
pub(crate) fn finish_bilinear(
    base: &RatNet,
    psi: BilinearReparam<Rat>,
    symmetry: NetSymmetry,
    patch_degree: (usize, usize),
    mut diagnostics: Vec<String>,
) -> CoincidenceResult {
    let mut res = CoincidenceResult::different(vec![]);
    if !psi.is_convex() {
        diagnostics.push(format!("map {psi} verifies but its corner quadrilateral is not strictly convex"));
        res.diagnostics = diagnostics;
        return res;
    }
    res.reparam = Some(Reparam::Bilinear(psi.clone()));
    res.symmetry = Some(symmetry);
    let quad = Polygon2::new(psi.corners().to_vec()).expect("convex quadrilateral");
    let pts = clip_points_to_unit_square(&quad);
    if pts.len() < 3 {
        res.relation = Relation::Disjoint;
        match pts.len() {
            1 => diagnostics.push(format!("domains touch at {}", pts[0])),
            2 => diagnostics.push(format!("domains share the segment {} {}", pts[0], pts[1])),
            _ => {}
        }
        res.diagnostics = diagnostics;
        return res;
    }
    let g = Polygon2::new(pts).expect("clipped polygon is convex");
    let square = Polygon2::unit_square();
    res.relation = if g.same_shape(&square) && quad.same_shape(&square) {
        Relation::Coincident
    } else {
        Relation::CoincidentPart
    };
    // pieces follow the map's orientation so an uncut image reproduces the other net
    let flip = !psi.is_ccw();
    for piece in decompose(&g) {
        match piece {
            Piece::Quad([p0, p1, p2, p3]) => {
                let map = if flip {
                    BilinearReparam::new(p0, p3, p2, p1)
                } else {
                    BilinearReparam::new(p0, p1, p2, p3)
                };
                let (ds, dt) = patch_degree;
                res.patches.push(reparam_bilinear_to(base, &map, ds, dt).unwrap_or_else(|_| reparam_bilinear(base, &map)));
            }
            Piece::Tri([p0, p1, p2]) => {
                let (a, b, c) = if flip { (p0, p2, p1) } else { (p0, p1, p2) };
                res.triangle = Some(extract_triangle(base, &a, &b, &c).expect("fan triangle of a convex polygon has area"));
            }
        }
    }
    res.shared_domain = Some(g);
    res.diagnostics = diagnostics;
    res
}

/// Routes a pair by degrees and runs the matching test.
///
/// Both nets must be irreducible. Pairs outside the supported degree
/// relations come back as [`Relation::Different`].
pub fn dispatch(s1: &RatNet, s2: &RatNet) -> Result<CoincidenceResult> {
    require_irreducible(s1, "first")?;
    require_irreducible(s2, "second")?;
    let (n, m) = s1.degree();
    let (p, q) = s2.degree();
    let swap = |mut r: CoincidenceResult| {
        r.base = Operand::Second;
        r
    };
    if (n, m) == (p, q) {
        test_same_degree_unchecked(s1, s2)
    } else if (p, q) == (n + m, n + m) {
        test_cross_degree_unchecked(s1, s2)
    } else if (n, m) == (p + q, p + q) {
        test_cross_degree_unchecked(s2, s1).map(swap)
    } else if (p, q) == (n + m, m) || (p, q) == (n, n + m) {
        test_mixed_degree_unchecked(s1, s2)
    } else if (n, m) == (p + q, q) || (n, m) == (p, p + q) {
        test_mixed_degree_unchecked(s2, s1).map(swap)
    } else {
        Ok(CoincidenceResult::different(vec![format!("unsupported degree pair ({n},{m}) vs ({p},{q})")]))
    }
}
