use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tpbc::bezier::{boundary_differences, finite_differences};
use tpbc::blossom::{AffineReparam, BilinearReparam};
use tpbc::coincidence::{dispatch, Reparam};
use tpbc::generate::{Generator, PlantKind};
use tpbc::geom::P2;
use tpbc::io::{net_to_json, parse_net, result_mesh, tessellate_net, Mesh, NetFile, ResultFile};
use tpbc::irreducible::{curve_defect, surface_irreducible};
use tpbc::scalar::{fmt_rat, parse_rat};
use tpbc::{Error, Rat, RatNet, Vec3};

/// Exact coincidence tests for tensor-product Bezier surfaces.
#[derive(Parser)]
#[command(name = "tpbc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify two nets and print the result file.
    Check {
        first: PathBuf,
        second: PathBuf,
        /// Also write the result file here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write an OBJ mesh of both inputs and the coincident pieces.
        #[arg(long)]
        mesh_out: Option<PathBuf>,
        #[arg(long, default_value_t = 16)]
        samples: usize,
    },
    /// Generate a coincident pair with a planted map.
    Gen {
        /// same-degree, cross-degree, mixed or mixed-transposed
        kind: String,
        /// Base degree as "n,m".
        #[arg(long)]
        degree: String,
        /// Affine window "a,b,c,d" (same-degree only).
        #[arg(long, conflicts_with = "quad")]
        window: Option<String>,
        /// Corners "u,v;u,v;u,v;u,v" in order A, B, C, D.
        #[arg(long)]
        quad: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write PREFIX.base.json and PREFIX.other.json.
        #[arg(long)]
        out: Option<String>,
    },
    /// Print the difference vectors of a net.
    Fd { file: PathBuf },
    /// Report irreducibility of every iso-curve.
    Irreducible { file: PathBuf },
    /// Tessellate a net or a result file to OBJ.
    ExportMesh {
        file: PathBuf,
        #[arg(long, default_value_t = 16)]
        samples: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotIrreducible { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, message: msg.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure { code: 1, message: format!("cannot write {}: {e}", path.display()) })
}

fn load_net(path: &Path) -> Result<RatNet, Failure> {
    parse_net(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn rats(s: &str) -> Result<Vec<Rat>, Failure> {
    s.split(',').map(|t| parse_rat(t.trim()).ok_or_else(|| usage(format!("not a rational: {t:?}")))).collect()
}

fn parse_degree(s: &str) -> Result<(usize, usize), Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [n, m] => match (n.parse(), m.parse()) {
            (Ok(n), Ok(m)) if n > 0 && m > 0 => Ok((n, m)),
            _ => Err(usage(format!("bad degree {s:?}"))),
        },
        _ => Err(usage(format!("degree must be \"n,m\", got {s:?}"))),
    }
}

fn parse_window(s: &str) -> Result<AffineReparam<Rat>, Failure> {
    match rats(s)?.as_slice() {
        [a, b, c, d] => Ok(AffineReparam::new(a.clone(), b.clone(), c.clone(), d.clone())),
        _ => Err(usage("window needs four numbers")),
    }
}

fn parse_quad(s: &str) -> Result<BilinearReparam<Rat>, Failure> {
    let pts = s
        .split(';')
        .map(|p| match rats(p)?.as_slice() {
            [u, v] => Ok(P2::new(u.clone(), v.clone())),
            _ => Err(usage(format!("corner {p:?} needs two numbers"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    match pts.as_slice() {
        [a, b, c, d] => Ok(BilinearReparam::new(a.clone(), b.clone(), c.clone(), d.clone())),
        _ => Err(usage("quad needs four corners")),
    }
}

fn vec_json(v: &Vec3<Rat>) -> serde_json::Value {
    serde_json::json!([fmt_rat(&v.x), fmt_rat(&v.y), fmt_rat(&v.z)])
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { first, second, out, mesh_out, samples } => {
            let (s1, s2) = (load_net(&first)?, load_net(&second)?);
            let res = dispatch(&s1, &s2)?;
            let file = ResultFile::from_result(&res, &[&s1, &s2]);
            let text = file.to_json();
            println!("{text}");
            if let Some(p) = out {
                write(&p, &text)?;
            }
            if let Some(p) = mesh_out {
                write(&p, &result_mesh(&res, &[s1, s2], samples).to_obj())?;
            }
        }
        Command::Gen { kind, degree, window, quad, seed, out } => {
            let kind = PlantKind::from_name(&kind).ok_or_else(|| usage(format!("unknown kind {kind:?}")))?;
            let degree = parse_degree(&degree)?;
            let map = match (window, quad) {
                (Some(w), _) => Some(Reparam::Affine(parse_window(&w)?)),
                (None, Some(q)) => Some(Reparam::Bilinear(parse_quad(&q)?)),
                (None, None) => None,
            };
            let pair = Generator::new(seed).plant(kind, degree, map)?;
            let planted = match &pair.planted {
                Reparam::Affine(w) => serde_json::json!({"kind": "affine", "params": w.params().iter().map(fmt_rat).collect::<Vec<_>>()}),
                Reparam::Bilinear(q) => serde_json::json!({"kind": "bilinear", "params": q.params().iter().map(fmt_rat).collect::<Vec<_>>()}),
            };
            let summary = serde_json::json!({
                "seed": seed,
                "attempts": pair.attempts,
                "planted": planted,
                "base": NetFile::from_net(&pair.base),
                "other": NetFile::from_net(&pair.other),
            });
            println!("{}", serde_json::to_string_pretty(&summary).expect("serializable"));
            if let Some(prefix) = out {
                write(Path::new(&format!("{prefix}.base.json")), &net_to_json(&pair.base))?;
                write(Path::new(&format!("{prefix}.other.json")), &net_to_json(&pair.other))?;
            }
        }
        Command::Fd { file } => {
            let net = load_net(&file)?;
            let fd = finite_differences(&net);
            let mut report = serde_json::json!({
                "degree": [net.degree().0, net.degree().1],
                "rho": vec_json(&fd.rho),
                "rho10": vec_json(&fd.rho10),
                "rho01": vec_json(&fd.rho01),
            });
            if let Ok(b) = boundary_differences(&net) {
                report["delta"] = b.delta.iter().map(vec_json).collect();
                report["delta1"] = b.delta1.iter().map(vec_json).collect();
            }
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
        Command::Irreducible { file } => {
            let net = load_net(&file)?;
            let (n, m) = net.degree();
            let verdict = |d: Option<tpbc::irreducible::CurveDefect>| match d {
                None => "irreducible".to_string(),
                Some(tpbc::irreducible::CurveDefect::Elevated) => "degree-elevated".to_string(),
                Some(tpbc::irreducible::CurveDefect::Composed { inner_degree }) => {
                    format!("composition with inner degree {inner_degree}")
                }
            };
            for j in 0..=m {
                println!("u-curve {j}: {}", verdict(curve_defect(&net.u_curve(j))));
            }
            for i in 0..=n {
                println!("v-curve {i}: {}", verdict(curve_defect(&net.v_curve(i))));
            }
            let rep = surface_irreducible(&net);
            if rep.is_irreducible() {
                println!("surface: irreducible");
            } else {
                println!("surface: reducible: {rep}");
            }
        }
        Command::ExportMesh { file, samples, out } => {
            let text = read(&file)?;
            let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let mesh = if value.get("relation").is_some() {
                let rf = ResultFile::parse(&text)?;
                let res = rf.to_result()?;
                result_mesh(&res, &rf.input_nets()?, samples)
            } else {
                let net = parse_net(&text)?;
                let mut mesh = Mesh::default();
                mesh.push(tessellate_net("net", &net, samples));
                mesh
            };
            write(&out, &mesh.to_obj())?;
            eprintln!("wrote {} vertices, {} triangles to {}", mesh.vertex_count(), mesh.face_count(), out.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
