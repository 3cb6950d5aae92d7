//! `cutpoly`: batch front end for the cut polytope toolkit.
//!
//! Every command reads its inputs, validates them, runs one library
//! operation and prints a JSON report on standard output. Exit codes:
//! 0 when the command completed (whatever the verdict), 1 when `--fail-on`
//! matched the verdict, 2 for invalid input, 3 when a resource limit was hit.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::index::sample;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use cutpoly::audit::{check_normal, check_seminormal, check_very_ample, find_gaps};
use cutpoly::decompose::{balanced_three_cuts, decompose_planar, four_coloring_from_decomposition};
use cutpoly::graph::{
    cut_vector, dual_graph, families, four_color, has_k5_minor, io, is_planar, Cut, Multigraph,
};
use cutpoly::lattice::{parse_point_json, DilatedPoint};
use cutpoly::polytope::CutPolytope;
use cutpoly::switching::SwitchMap;
use cutpoly::{Error, Limits};

use report::{digest, Inputs, Report};

#[derive(Parser)]
#[command(name = "cutpoly", version, about = "Exact computations on cut polytopes of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Vertex bound for cut enumeration and minor search.
    #[arg(long, global = true)]
    limit_vertices: Option<usize>,
    /// Seed for commands that sample.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads (0 picks the number of cores).
    #[arg(long, default_value_t = 0, global = true)]
    workers: usize,
    /// Exit with status 1 when the report's verdict equals this value.
    #[arg(long, global = true)]
    fail_on: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file (JSON or `p cut` text).
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// List every cut with its cut vector.
    Cuts(GraphArg),
    /// Describe the cut lattice; with --point, test membership.
    Lattice {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        point: Option<PathBuf>,
    },
    /// Enumerate gaps of k·Cut(G) for k up to --kmax.
    Gaps {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Normality up to --kmax, or a gap.
    CheckNormal {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Search for a gap x with 2x and 3x decomposable.
    CheckSeminormal {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Hilbert basis test at the origin vertex.
    CheckVeryAmple(GraphArg),
    /// Write a lattice point of k·Cut(G), k ≤ 3, G planar, as k cuts.
    Decompose {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        point: PathBuf,
        /// Must agree with the point file's level if given.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Four-color a planar graph and round-trip through the balanced cuts.
    FourColor(GraphArg),
    /// Search for a K5 minor.
    MinorK5(GraphArg),
    /// Planar embedding and dual graph.
    Dual(GraphArg),
    /// Apply the switching by a cut to every cut and optionally a point.
    Switch {
        #[command(flatten)]
        graph: GraphArg,
        /// Comma-separated vertices of one side of the cut.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        cut: Vec<usize>,
        #[arg(long)]
        point: Option<PathBuf>,
    },
    /// Tabulate K5 minors against gaps for all connected graphs.
    ConjectureScan {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
        /// Keep only planar graphs.
        #[arg(long)]
        planar_only: bool,
        /// Scan this many graphs drawn with --seed instead of all.
        #[arg(long)]
        sample: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.common.workers)
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    let mut limits = Limits::default();
    if let Some(v) = cli.common.limit_vertices {
        limits.cut_vertices = v;
        limits.minor_vertices = v;
    }
    match run(&cli.command, &cli.common, &limits) {
        Ok(value) => {
            match cli.common.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&value).expect("report")),
                Format::Text => print!("{}", report::to_text(&value)),
            }
            let verdict = value.pointer("/result/verdict").and_then(Value::as_str);
            match (&cli.common.fail_on, verdict) {
                (Some(f), Some(v)) if f == v => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

fn read(path: &Path) -> cutpoly::Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> cutpoly::Result<(Multigraph, String)> {
    let bytes = read(path)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::InvalidInput(format!("{}: not UTF-8", path.display())))?;
    Ok((io::parse_graph(&text)?, digest(&bytes)))
}

fn load_point(path: &Path, g: &Multigraph) -> cutpoly::Result<(DilatedPoint, String)> {
    let bytes = read(path)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::InvalidInput(format!("{}: not UTF-8", path.display())))?;
    let p = parse_point_json(&text)?;
    if p.vector.len() != g.edge_count() {
        return Err(Error::DimensionMismatch {
            expected: g.edge_count(),
            got: p.vector.len(),
        });
    }
    Ok((p, digest(&bytes)))
}

fn finish<T: Serialize>(command: &'static str, inputs: Inputs, result: T) -> cutpoly::Result<Value> {
    serde_json::to_value(Report {
        command,
        inputs,
        result,
    })
    .map_err(|e| Error::Internal(format!("serializing report: {e}")))
}

fn run(cmd: &Command, common: &Common, limits: &Limits) -> cutpoly::Result<Value> {
    match cmd {
        Command::Cuts(a) => {
            let (g, h) = load_graph(&a.graph)?;
            let poly = CutPolytope::new(&g, limits)?;
            let cuts: Vec<Value> = poly
                .cuts()
                .iter()
                .zip(poly.vectors())
                .map(|(c, v)| json!({ "index": c.index(), "side": c, "vector": v }))
                .collect();
            finish("cuts", Inputs::graph(h), json!({ "count": cuts.len(), "cuts": cuts }))
        }
        Command::Lattice { graph, point } => {
            let (g, h) = load_graph(&graph.graph)?;
            let poly = CutPolytope::new(&g, limits)?;
            let ld = poly.lattice();
            let hnf: Vec<Vec<String>> = ld
                .hnf_basis
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            let mut result = json!({
                "parity_constraints": ld.parity_constraints,
                "hnf_basis": hnf,
                "index": ld.index().to_string(),
            });
            let mut inputs = Inputs::graph(h);
            if let Some(path) = point {
                let (p, ph) = load_point(path, &g)?;
                inputs.point_sha256 = Some(ph);
                result["membership"] = json!({
                    "k": p.level,
                    "in_lattice": poly.in_lattice(&p.vector),
                    "in_lattice_hnf": ld.hnf_contains(&p.vector),
                    "in_dilation": poly.in_dilation(&p)?,
                });
            }
            finish("lattice", inputs, result)
        }
        Command::Gaps { graph, kmax } => {
            let (g, h) = load_graph(&graph.graph)?;
            let poly = CutPolytope::new(&g, limits)?;
            let report = find_gaps(&poly, *kmax, limits)?;
            finish("gaps", Inputs::graph(h).param("kmax", *kmax), report)
        }
        Command::CheckNormal { graph, kmax } => {
            let (g, h) = load_graph(&graph.graph)?;
            let poly = CutPolytope::new(&g, limits)?;
            let verdict = check_normal(&poly, *kmax, limits)?;
            finish("check-normal", Inputs::graph(h).param("kmax", *kmax), verdict)
        }
        Command::CheckSeminormal { graph, kmax } => {
            let (g, h) = load_graph(&graph.graph)?;
            let poly = CutPolytope::new(&g, limits)?;
            let verdict = check_seminormal(&poly, *kmax, limits)?;
            finish("check-seminormal", Inputs::graph(h).param("kmax", *kmax), verdict)
        }
        Command::CheckVeryAmple(a) => {
            let (g, h) = load_graph(&a.graph)?;
            let poly = CutPolytope::new(&g, limits)?;
            finish("check-very-ample", Inputs::graph(h), check_very_ample(&poly, limits)?)
        }
        Command::Decompose { graph, point, k } => {
            let (g, h) = load_graph(&graph.graph)?;
            let (p, ph) = load_point(point, &g)?;
            if let Some(k) = k {
                if *k != p.level {
                    return Err(Error::InvalidInput(format!(
                        "--k {k} differs from the point's level {}",
                        p.level
                    )));
                }
            }
            let cuts = decompose_planar(&g, &p.vector, p.level, limits)?;
            let vectors: Vec<_> = cuts.iter().map(|c| cut_vector(&g, c)).collect();
            let mut inputs = Inputs::graph(h).param("k", p.level);
            inputs.point_sha256 = Some(ph);
            finish(
                "decompose",
                inputs,
                json!({ "k": p.level, "point": p.vector, "cuts": cuts, "cut_vectors": vectors }),
            )
        }
        Command::FourColor(a) => {
            let (g, h) = load_graph(&a.graph)?;
            let coloring = four_color(&g)?;
            let cuts = balanced_three_cuts(&g, &coloring)?;
            let recovered = four_coloring_from_decomposition(&g, &cuts)?;
            finish(
                "four-color",
                Inputs::graph(h),
                json!({
                    "coloring": coloring.color,
                    "colors_used": coloring.colors_used(),
                    "balanced_cuts": cuts,
                    "recovered_coloring": recovered.color,
                }),
            )
        }
        Command::MinorK5(a) => {
            let (g, h) = load_graph(&a.graph)?;
            let result = match has_k5_minor(&g, limits)? {
                Some(w) => json!({ "verdict": "minor_found", "branch_sets": w.branch_sets }),
                None => json!({ "verdict": "no_minor" }),
            };
            finish("minor-k5", Inputs::graph(h), result)
        }
        Command::Dual(a) => {
            let (g, h) = load_graph(&a.graph)?;
            let result = match is_planar(&g) {
                None => json!({ "verdict": "not_planar" }),
                Some(emb) => {
                    let dm = dual_graph(&g, &emb)?;
                    let faces: Vec<Vec<usize>> = emb
                        .faces
                        .iter()
                        .map(|f| f.iter().map(|d| d.edge).collect())
                        .collect();
                    json!({
                        "verdict": "planar",
                        "face_edges": faces,
                        "dual": dm.dual,
                        "edge_bijection": dm.edge_bijection,
                    })
                }
            };
            finish("dual", Inputs::graph(h), result)
        }
        Command::Switch { graph, cut, point } => {
            let (g, h) = load_graph(&graph.graph)?;
            if let Some(&v) = cut.iter().find(|&&v| v >= g.vertex_count()) {
                return Err(Error::InvalidInput(format!(
                    "cut vertex {v} out of range for {} vertices",
                    g.vertex_count()
                )));
            }
            let poly = CutPolytope::new(&g, limits)?;
            let s = SwitchMap::new(&g, Cut::from_side(g.vertex_count(), cut.iter().copied()));
            let images: Vec<Value> = poly
                .cuts()
                .iter()
                .map(|c| json!({ "cut": c, "image": s.switch_cut(c) }))
                .collect();
            let mut result = json!({
                "base_cut": s.base_cut(),
                "crossing_set": s.crossing_set(),
                "cut_images": images,
            });
            let mut inputs = Inputs::graph(h);
            if let Some(path) = point {
                let (p, ph) = load_point(path, &g)?;
                inputs.point_sha256 = Some(ph);
                result["point_image"] = json!(s.switch_point(&p));
            }
            finish("switch", inputs, result)
        }
        Command::ConjectureScan {
            max_n,
            kmax,
            planar_only,
            sample: count,
        } => {
            let scan = conjecture_scan(*max_n, *kmax, *planar_only, *count, common.seed, limits)?;
            let inputs = Inputs::default()
                .param("max_n", *max_n)
                .param("kmax", *kmax)
                .param("planar_only", *planar_only)
                .param("sample", *count)
                .param("seed", common.seed);
            finish("conjecture-scan", inputs, scan)
        }
    }
}

#[derive(Serialize)]
struct ScanRow {
    n: usize,
    edges: Vec<(usize, usize)>,
    planar: bool,
    k5_minor: bool,
    normality: Value,
}

#[derive(Default, Serialize)]
struct Contingency {
    minor_with_gap: usize,
    minor_without_gap: usize,
    no_minor_with_gap: usize,
    no_minor_without_gap: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct Scan {
    graphs: usize,
    table: Contingency,
    rows: Vec<ScanRow>,
}

/// Cap on the vertex count for the scan's graph catalog.
const SCAN_MAX_N: usize = 8;

fn conjecture_scan(
    max_n: usize,
    kmax: u32,
    planar_only: bool,
    count: Option<usize>,
    seed: u64,
    limits: &Limits,
) -> cutpoly::Result<Scan> {
    if max_n > SCAN_MAX_N {
        return Err(Error::ResourceLimit {
            what: "vertex count for the conjecture scan",
            actual: max_n as u128,
            limit: SCAN_MAX_N as u128,
        });
    }
    let mut graphs: Vec<Multigraph> = (1..=max_n)
        .flat_map(families::connected_classes)
        .filter(|g| !planar_only || is_planar(g).is_some())
        .collect();
    if let Some(c) = count {
        if c < graphs.len() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = sample(&mut rng, graphs.len(), c).into_vec();
            picked.sort_unstable();
            graphs = picked.into_iter().map(|i| graphs[i].clone()).collect();
        }
    }
    let rows = graphs
        .par_iter()
        .map(|g| {
            let k5_minor = has_k5_minor(g, limits)?.is_some();
            let normality = match CutPolytope::new(g, limits).and_then(|p| check_normal(&p, kmax, limits)) {
                Ok(v) => serde_json::to_value(v).expect("verdict serializes"),
                Err(Error::ResourceLimit { what, .. }) => json!({ "verdict": "skipped", "reason": what }),
                Err(e) => return Err(e),
            };
            Ok(ScanRow {
                n: g.vertex_count(),
                edges: g.edges().to_vec(),
                planar: is_planar(g).is_some(),
                k5_minor,
                normality,
            })
        })
        .collect::<cutpoly::Result<Vec<_>>>()?;
    let mut table = Contingency::default();
    for row in &rows {
        let gap = match row.normality["verdict"].as_str() {
            Some("skipped") => {
                table.skipped += 1;
                continue;
            }
            Some(v) => v != "normal_up_to",
            None => unreachable!("verdicts carry a tag"),
        };
        let slot = match (row.k5_minor, gap) {
            (true, true) => &mut table.minor_with_gap,
            (true, false) => &mut table.minor_without_gap,
            (false, true) => &mut table.no_minor_with_gap,
            (false, false) => &mut table.no_minor_without_gap,
        };
        *slot += 1;
    }
    Ok(Scan {
        graphs: rows.len(),
        table,
        rows,
    })
}
