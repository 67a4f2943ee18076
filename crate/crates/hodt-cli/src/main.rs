//! `hodt`: generate, analyze, enumerate and measure higher-order Delaunay
//! triangulations of planar point sets.
//!
//! Exit codes: 0 success, 2 input/parameter error, 3 degeneracy or generator
//! audit failure, 4 cap exceeded, 5 numerical non-convergence.

mod report;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hodt_core::analysis::{
    count_order1, edge_hull, enumerate_all_triangulations, enumerate_order1, flippable_quads,
    select_disjoint_hulls, triangulation_order, useful_k_edges, SearchMode,
};
use hodt_core::delaunay::{audit_delaunay, delaunay_triangulate};
use hodt_core::expectation::{
    expected_count_bound, integrate_dk, monte_carlo_uk, IntegralConfig,
};
use hodt_core::generators::{generate, GeneratorKind, GeneratorSpec};
use hodt_core::geom::Grid;
use hodt_core::{io, Error};

use report::{DigestSource, Report};

#[derive(Parser)]
#[command(name = "hodt", version, about = "Higher-order Delaunay triangulation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Uniform,
    Maxfodt,
    Only1,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumMode {
    Order1,
    Census,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a point set and write it in the point-set text format.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Order parameter, required by the only1 generator.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Perturbation magnitude as a fraction of the smallest pairwise
        /// distance (divided by 4).
        #[arg(long, default_value_t = 0.01)]
        epsilon: f64,
        #[arg(long)]
        out: PathBuf,
        /// Also render the generated set (with its Delaunay triangulation).
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Analyze a point set: Delaunay audit, flippable quads, exact order-1
    /// count, useful-k edges, hulls and the lower-bound certificate.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Cross-validate counts against the exhaustive census (small n only).
        #[arg(long, default_value_t = false)]
        census: bool,
        /// Override the census size cap.
        #[arg(long)]
        unsafe_cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Stream triangulations: the order-1 class, or the full census.
    Enumerate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: EnumMode,
        /// Cap: flippable quads for order1 mode (default 30), points for
        /// census mode (default 12).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo measurement of the useful-k edge density on uniform random
    /// points, compared against the quadrature constant d_k.
    Expect {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the expectation constants: c1, c2, d1, rho1 for k = 1; d_k and
    /// rho_k for k >= 2.
    Integrate {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1e-7)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::DegenerateCollinear(..))
        | Some(Error::DegenerateCocircular(..))
        | Some(Error::DuplicatePoint(..))
        | Some(Error::AuditFailed(..)) => 3,
        Some(Error::CapExceeded(..)) => 4,
        Some(Error::NonConvergence(..)) => 5,
        Some(Error::InvalidParameter(..)) | Some(Error::Parse { .. }) | Some(Error::Io(..)) => 2,
        Some(_) => 1,
        None => 2,
    }
}

fn emit(report: &Report, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let text = report.to_json();
    match out {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Generate { kind, n, k, seed, epsilon, out, svg } => {
            let spec = GeneratorSpec {
                kind: match kind {
                    Kind::Uniform => GeneratorKind::Uniform,
                    Kind::Maxfodt => GeneratorKind::Maxfodt,
                    Kind::Only1 => GeneratorKind::Only1,
                },
                n,
                k,
                seed,
                epsilon,
            };
            let ps = generate(&spec)?;
            io::write_points(&out, &ps)?;
            let t = delaunay_triangulate(&ps)?;
            let grid = Grid::build(&ps);
            audit_delaunay(&t, &ps, Some(&grid))?;
            match kind {
                Kind::Maxfodt => {
                    let q = flippable_quads(&ps, &t, Some(&grid))?.len();
                    println!("generated n={n}: delaunay_audit=ok flippable_quads={q}");
                }
                Kind::Only1 => {
                    let kk = k.unwrap_or(1);
                    let mut total = 0usize;
                    for ki in 1..=kk {
                        total +=
                            useful_k_edges(&ps, &t, ki, SearchMode::Exhaustive, Some(&grid))?.len();
                    }
                    println!(
                        "generated n={n}: delaunay_audit=ok useful_k_edges(k<={kk})={total}"
                    );
                }
                Kind::Uniform => {
                    println!(
                        "generated n={n}: delaunay_audit=ok hull_size={}",
                        t.hull_size()
                    );
                }
            }
            if let Some(path) = svg {
                std::fs::write(path, svg::render(&ps, Some(&t)))?;
            }
            Ok(())
        }

        Command::Analyze { input, k, census, unsafe_cap, out, svg } => {
            let started = Instant::now();
            let bytes = std::fs::read(&input)?;
            let ps = io::parse_points(std::str::from_utf8(&bytes).map_err(|e| {
                Error::InvalidParameter(format!("input is not utf-8: {e}"))
            })?)?;
            let t = delaunay_triangulate(&ps)?;
            let grid = Grid::build(&ps);
            audit_delaunay(&t, &ps, Some(&grid))?;
            let (q, order1) = count_order1(&ps, Some(&grid))?;
            let edges = useful_k_edges(&ps, &t, k, SearchMode::Auto, Some(&grid))?;
            let mut edge_entries = Vec::new();
            for &((u, v), uo) in &edges {
                let hull = edge_hull(&ps, &t, u, v)?;
                edge_entries.push(json!({
                    "edge": [u, v],
                    "useful_order": uo,
                    "hull_vertices": hull.boundary.len(),
                    "hull_triangles": hull.triangle_ids.len(),
                }));
            }
            let cert = select_disjoint_hulls(&ps, &t, &edges, k)?;
            let mut results = json!({
                "n": ps.len(),
                "delaunay_audit": "ok",
                "hull_size": t.hull_size(),
                "triangles": t.num_triangles(),
                "flippable_quads": q,
                "count_order1": order1.to_string(),
                "useful_k_edges": edge_entries,
                "lower_bound": {
                    "k": k,
                    "e_k": cert.all_edges.len(),
                    "selected": cert.selected.len(),
                    "bound": cert.bound.to_string(),
                    "c_k": cert.c_k,
                },
            });
            if census {
                let c = enumerate_all_triangulations(&ps, unsafe_cap)?;
                let hist: Vec<Value> = c
                    .order_histogram()
                    .into_iter()
                    .map(|(order, count)| json!({ "order": order, "count": count }))
                    .collect();
                let obj = results.as_object_mut().unwrap();
                obj.insert(
                    "census".to_string(),
                    json!({
                        "total": c.len(),
                        "r_table": hist,
                        "order1_class": c.count_order_at_most(1),
                        "order1_matches_2q": c.count_order_at_most(1).to_string()
                            == order1.to_string(),
                    }),
                );
            }
            let report = Report::new(
                "analyze",
                DigestSource::FileBytes(&bytes),
                json!({ "in": input.display().to_string(), "k": k, "census": census }),
                results,
                started,
                None,
            );
            emit(&report, out.as_ref())?;
            if let Some(path) = svg {
                std::fs::write(path, svg::render(&ps, Some(&t)))?;
            }
            Ok(())
        }

        Command::Enumerate { input, mode, cap, out } => {
            let started = Instant::now();
            let bytes = std::fs::read(&input)?;
            let ps = io::parse_points(std::str::from_utf8(&bytes).map_err(|e| {
                Error::InvalidParameter(format!("input is not utf-8: {e}"))
            })?)?;
            let grid = Grid::build(&ps);
            let results = match mode {
                EnumMode::Order1 => {
                    let en = enumerate_order1(&ps, cap)?;
                    let q = en.num_quads();
                    let mut count = 0u64;
                    for t in en {
                        let order = triangulation_order(&ps, &t, Some(&grid))?;
                        let tris: Vec<[usize; 3]> = t.triangles().collect();
                        println!("{}", json!({ "order": order, "triangles": tris }));
                        count += 1;
                    }
                    json!({ "mode": "order1", "flippable_quads": q, "emitted": count })
                }
                EnumMode::Census => {
                    let census = enumerate_all_triangulations(&ps, cap)?;
                    for e in &census.entries {
                        println!("{}", json!({ "order": e.order, "triangles": e.triangles }));
                    }
                    let hist: Vec<Value> = census
                        .order_histogram()
                        .into_iter()
                        .map(|(order, count)| json!({ "order": order, "count": count }))
                        .collect();
                    json!({ "mode": "census", "total": census.len(), "r_table": hist })
                }
            };
            let report = Report::new(
                "enumerate",
                DigestSource::FileBytes(&bytes),
                json!({ "in": input.display().to_string(), "cap": cap }),
                results,
                started,
                None,
            );
            emit(&report, out.as_ref())
        }

        Command::Expect { n, k, trials, seed, out } => {
            let started = Instant::now();
            let cfg = IntegralConfig::default();
            let constants = integrate_dk(k, &cfg)?;
            let mc = monte_carlo_uk(n, k, trials, seed, Some(constants.d_k.value))?;
            let bound = expected_count_bound(k, constants.d_k);
            let params = format!("expect n={n} k={k} trials={trials} seed={seed}");
            let report = Report::new(
                "expect",
                DigestSource::Parameters(&params),
                json!({ "n": n, "k": k, "trials": trials }),
                json!({
                    "monte_carlo": serde_json::to_value(&mc)?,
                    "d_k": constants.d_k.value,
                    "d_k_error": constants.d_k.error,
                    "exponent": bound.statement,
                    "rho_k": bound.rho_k.value,
                }),
                started,
                Some(seed),
            );
            emit(&report, out.as_ref())
        }

        Command::Integrate { k, tolerance, out } => {
            let started = Instant::now();
            let cfg = IntegralConfig { tolerance, ..Default::default() };
            let constants = integrate_dk(k, &cfg)?;
            let bound = expected_count_bound(k, constants.d_k);
            let params = format!("integrate k={k} tolerance={tolerance:e}");
            let report = Report::new(
                "integrate",
                DigestSource::Parameters(&params),
                json!({ "k": k, "tolerance": tolerance }),
                json!({
                    "constants": serde_json::to_value(&constants)?,
                    "exponent": bound.statement,
                }),
                started,
                None,
            );
            emit(&report, out.as_ref())
        }
    }
}
