//! JSON net and result files, and Wavefront OBJ export.
//!
//! Every coordinate in a file is an exact rational written as `"p"` or `"p/q"`.

use crate::bezier::NetSymmetry;
use crate::blossom::{AffineReparam, BilinearReparam, TriangularNet};
use crate::coincidence::{CoincidenceResult, Operand, Relation, Reparam};
use crate::domain::Polygon2;
use crate::error::{Error, Result};
use crate::geom::{Vec3, P2};
use crate::scalar::{fmt_rat, parse_rat};
use crate::{ControlNet, Rat, RatNet, Scalar};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetFile {
    pub degree: [usize; 2],
    pub points: Vec<Vec<[String; 3]>>,
}

fn parse_coord(s: &str) -> Result<Rat> {
    parse_rat(s).ok_or_else(|| Error::Parse(format!("not an exact rational: {s:?}")))
}

fn point_strings(p: &Vec3<Rat>) -> [String; 3] {
    [fmt_rat(&p.x), fmt_rat(&p.y), fmt_rat(&p.z)]
}

impl NetFile {
    pub fn from_net(net: &RatNet) -> Self {
        let (n, m) = net.degree();
        let points = net.grid().iter().map(|row| row.iter().map(point_strings).collect()).collect();
        NetFile { degree: [n, m], points }
    }

    pub fn to_net(&self) -> Result<RatNet> {
        let [n, m] = self.degree;
        if self.points.len() != n + 1 || self.points.iter().any(|r| r.len() != m + 1) {
            return Err(Error::Parse(format!("points array is not {}x{}", n + 1, m + 1)));
        }
        let grid = self
            .points
            .iter()
            .map(|row| {
                row.iter()
                    .map(|[x, y, z]| Ok(Vec3::new(parse_coord(x)?, parse_coord(y)?, parse_coord(z)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        ControlNet::from_grid(grid)
    }
}

pub fn parse_net(text: &str) -> Result<RatNet> {
    let f: NetFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    f.to_net()
}

pub fn net_to_json(net: &RatNet) -> String {
    serde_json::to_string_pretty(&NetFile::from_net(net)).expect("serializable")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReparamFile {
    pub kind: String,
    pub params: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriangleFile {
    pub total_degree: usize,
    /// Row `nu` holds the points with first index `nu`.
    pub points: Vec<Vec<[String; 3]>>,
    pub corners: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultFile {
    pub relation: String,
    pub base: String,
    pub reparam: Option<ReparamFile>,
    pub symmetry: Option<String>,
    pub shared_domain: Option<Vec<[String; 2]>>,
    pub patches: Vec<NetFile>,
    pub triangle: Option<TriangleFile>,
    #[serde(default)]
    pub inputs: Vec<NetFile>,
    pub diagnostics: Vec<String>,
}

fn p2_strings(p: &P2<Rat>) -> [String; 2] {
    [fmt_rat(&p.u), fmt_rat(&p.v)]
}

fn parse_p2(p: &[String; 2]) -> Result<P2<Rat>> {
    Ok(P2::new(parse_coord(&p[0])?, parse_coord(&p[1])?))
}

impl ResultFile {
    /// `inputs` are the two nets in argument order; they let a result file
    /// be rendered on its own.
    pub fn from_result(res: &CoincidenceResult, inputs: &[&RatNet]) -> Self {
        let reparam = res.reparam.as_ref().map(|r| match r {
            Reparam::Affine(w) => ReparamFile { kind: "affine".into(), params: w.params().iter().map(fmt_rat).collect() },
            Reparam::Bilinear(b) => ReparamFile { kind: "bilinear".into(), params: b.params().iter().map(fmt_rat).collect() },
        });
        let triangle = res.triangle.as_ref().map(|t| TriangleFile {
            total_degree: t.degree(),
            points: t.rows().iter().map(|row| row.iter().map(point_strings).collect()).collect(),
            corners: t.corners.iter().map(p2_strings).collect(),
        });
        ResultFile {
            relation: res.relation.name().into(),
            base: res.base.name().into(),
            reparam,
            symmetry: res.symmetry.map(|s| s.name().into()),
            shared_domain: res.shared_domain.as_ref().map(|g| g.vertices().iter().map(p2_strings).collect()),
            patches: res.patches.iter().map(NetFile::from_net).collect(),
            triangle,
            inputs: inputs.iter().map(|n| NetFile::from_net(n)).collect(),
            diagnostics: res.diagnostics.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_result(&self) -> Result<CoincidenceResult> {
        let relation =
            Relation::from_name(&self.relation).ok_or_else(|| Error::Parse(format!("unknown relation {:?}", self.relation)))?;
        let base = match self.base.as_str() {
            "first" => Operand::First,
            "second" => Operand::Second,
            other => return Err(Error::Parse(format!("unknown base {other:?}"))),
        };
        let reparam = match &self.reparam {
            None => None,
            Some(r) => {
                let ps = r.params.iter().map(|s| parse_coord(s)).collect::<Result<Vec<_>>>()?;
                Some(match (r.kind.as_str(), ps.len()) {
                    ("affine", 4) => Reparam::Affine(AffineReparam::new(ps[0].clone(), ps[1].clone(), ps[2].clone(), ps[3].clone())),
                    ("bilinear", 8) => Reparam::Bilinear(BilinearReparam::from_params(ps.try_into().expect("length 8"))),
                    (k, l) => return Err(Error::Parse(format!("bad reparam {k} with {l} parameters"))),
                })
            }
        };
        let symmetry = match &self.symmetry {
            None => None,
            Some(s) => Some(NetSymmetry::from_name(s).ok_or_else(|| Error::Parse(format!("unknown symmetry {s:?}")))?),
        };
        let shared_domain = match &self.shared_domain {
            None => None,
            Some(vs) => Some(Polygon2::new(vs.iter().map(parse_p2).collect::<Result<Vec<_>>>()?)?),
        };
        let patches = self.patches.iter().map(NetFile::to_net).collect::<Result<Vec<_>>>()?;
        let triangle = match &self.triangle {
            None => None,
            Some(t) => {
                let pts = t
                    .points
                    .iter()
                    .flatten()
                    .map(|[x, y, z]| Ok(Vec3::new(parse_coord(x)?, parse_coord(y)?, parse_coord(z)?)))
                    .collect::<Result<Vec<_>>>()?;
                let cs = t.corners.iter().map(parse_p2).collect::<Result<Vec<_>>>()?;
                let corners: [P2<Rat>; 3] = cs.try_into().map_err(|_| Error::Parse("triangle needs three corners".into()))?;
                Some(TriangularNet::new(t.total_degree, pts, corners)?)
            }
        };
        Ok(CoincidenceResult {
            relation,
            base,
            reparam,
            symmetry,
            shared_domain,
            patches,
            triangle,
            diagnostics: self.diagnostics.clone(),
        })
    }

    pub fn input_nets(&self) -> Result<Vec<RatNet>> {
        self.inputs.iter().map(NetFile::to_net).collect()
    }
}

/// Triangle mesh accumulated object by object.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Mesh {
    pub objects: Vec<MeshObject>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct MeshObject {
    pub name: String,
    pub vertices: Vec<[f64; 3]>,
    /// 0-based vertex indices within the object.
    pub faces: Vec<[usize; 3]>,
}

fn to_f64s<T: Scalar>(p: &Vec3<T>) -> [f64; 3] {
    [p.x.to_f64(), p.y.to_f64(), p.z.to_f64()]
}

/// `(samples+1)^2` grid vertices, two triangles per cell.
pub fn tessellate_net<T: Scalar>(name: &str, net: &ControlNet<T>, samples: usize) -> MeshObject {
    let k = samples.max(1);
    let kt = T::from_int(k as i64);
    let mut obj = MeshObject { name: name.into(), ..Default::default() };
    for i in 0..=k {
        let u = T::from_int(i as i64) / kt.clone();
        for j in 0..=k {
            let v = T::from_int(j as i64) / kt.clone();
            obj.vertices.push(to_f64s(&net.evaluate(&u, &v)));
        }
    }
    let idx = |i: usize, j: usize| i * (k + 1) + j;
    for i in 0..k {
        for j in 0..k {
            obj.faces.push([idx(i, j), idx(i + 1, j), idx(i + 1, j + 1)]);
            obj.faces.push([idx(i, j), idx(i + 1, j + 1), idx(i, j + 1)]);
        }
    }
    obj
}

/// Barycentric grid with `samples` steps per side.
pub fn tessellate_triangle<T: Scalar>(name: &str, tri: &TriangularNet<T>, samples: usize) -> MeshObject {
    let k = samples.max(1);
    let kt = T::from_int(k as i64);
    let mut obj = MeshObject { name: name.into(), ..Default::default() };
    let mut index = vec![vec![0usize; k + 1]; k + 1];
    for a in 0..=k {
        for b in 0..=k - a {
            index[a][b] = obj.vertices.len();
            let l1 = T::from_int(a as i64) / kt.clone();
            let l2 = T::from_int(b as i64) / kt.clone();
            let l0 = T::one() - l1.clone() - l2.clone();
            obj.vertices.push(to_f64s(&tri.evaluate_bary(&l0, &l1, &l2)));
        }
    }
    for a in 0..k {
        for b in 0..k - a {
            obj.faces.push([index[a][b], index[a + 1][b], index[a][b + 1]]);
            if b + 1 < k - a {
                obj.faces.push([index[a + 1][b], index[a + 1][b + 1], index[a][b + 1]]);
            }
        }
    }
    obj
}

impl Mesh {
    pub fn push(&mut self, obj: MeshObject) {
        self.objects.push(obj);
    }

    pub fn vertex_count(&self) -> usize {
        self.objects.iter().map(|o| o.vertices.len()).sum()
    }

    pub fn face_count(&self) -> usize {
        self.objects.iter().map(|o| o.faces.len()).sum()
    }

    /// OBJ text with `v` and `f` records; each object starts with a `# object` comment.
    pub fn to_obj(&self) -> String {
        let mut s = String::new();
        let mut base = 1;
        for o in &self.objects {
            let _ = writeln!(s, "# object {}", o.name);
            for v in &o.vertices {
                let _ = writeln!(s, "v {:.16e} {:.16e} {:.16e}", v[0], v[1], v[2]);
            }
            for f in &o.faces {
                let _ = writeln!(s, "f {} {} {}", f[0] + base, f[1] + base, f[2] + base);
            }
            base += o.vertices.len();
        }
        s
    }
}

/// Both inputs plus every coincident piece.
pub fn result_mesh(res: &CoincidenceResult, inputs: &[RatNet], samples: usize) -> Mesh {
    let mut mesh = Mesh::default();
    for (k, net) in inputs.iter().enumerate() {
        mesh.push(tessellate_net(&format!("input{}", k + 1), net, samples));
    }
    for (k, p) in res.patches.iter().enumerate() {
        mesh.push(tessellate_net(&format!("coincident{}", k + 1), p, samples));
    }
    if let Some(t) = &res.triangle {
        mesh.push(tessellate_triangle("coincident_triangle", t, samples));
    }
    mesh
}
