use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use twocc::format::{parse_edge_list, GraphFile};
use twocc::verify::{self, Fault};
use twocc_core::coloring::{eulerian_three_coloring, search_coloring, SearchResult};
use twocc_core::defect::defect_bounds;
use twocc_core::graph::edge;
use twocc_core::instances::{
    double_wheel, even_double_wheel, glued_even_double_wheels, icosahedron, k3, k4, octahedron,
    octahedron_replacement, random_triangulation, stacked_chain,
};
use twocc_core::oracle::{
    brute_m, brute_m_dprime, brute_m_k, brute_m_prime, brute_optimal_u_acyclic, Limits,
};
use twocc_core::transversal::{m_value, min_transversal, u_acyclic_transversal, verify_certificate};
use twocc_core::Coloring;

/// 2-colored-cycle transversals and defective acyclic colorings of plane
/// triangulations.
#[derive(Parser)]
#[command(name = "twocc", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Input {
    /// Graph file; "-" or omitted reads stdin.
    file: Option<String>,
}

#[derive(Args)]
struct ColoringOpt {
    /// Coloring file, or "3col" for the forced Eulerian 3-coloring, or
    /// "search:K" for a searched proper K-coloring. Defaults to the
    /// coloring block of the graph file.
    #[arg(long)]
    coloring: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check structural invariants; with --triangulation also 3n-6 edges
    /// and triangular faces.
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        triangulation: bool,
    },
    /// List the faces of the embedding.
    Faces {
        #[command(flatten)]
        input: Input,
    },
    /// Split at separating triangles and print the piece tree.
    Decompose {
        #[command(flatten)]
        input: Input,
    },
    /// Search a proper (optionally acyclic) coloring.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 5)]
        k: u32,
        #[arg(long)]
        acyclic: bool,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// m(G, phi) by the component-count formula.
    MValue {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        coloring: ColoringOpt,
    },
    /// Minimum 2CC transversal; --u requests a U-acyclic one.
    Transversal {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        coloring: ColoringOpt,
        /// Edge-list file of edges the transversal must avoid.
        #[arg(long)]
        avoid: Option<String>,
        /// Comma-separated clique vertices, e.g. "0,1,2".
        #[arg(long)]
        u: Option<String>,
    },
    /// Deletion pipeline to an acyclic 4- or 3-coloring.
    Defect {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        k: u32,
    },
    /// Generate an instance family member.
    Gen {
        family: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Brute-force oracles (size-guarded; see ORACLE_MAX_N).
    Oracle {
        which: String,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        coloring: ColoringOpt,
        #[arg(long, default_value_t = 4)]
        k: u32,
        #[arg(long)]
        u: Option<String>,
    },
    /// Re-run every acceptance claim and print a report table.
    VerifyPaper {
        #[arg(long)]
        quick: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(input: &Input) -> Result<GraphFile, String> {
    let text = match input.file.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            s
        }
        Some(path) => fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?,
    };
    GraphFile::parse(&text).map_err(|e| e.to_string())
}

fn pick_coloring(gf: &GraphFile, opt: &ColoringOpt) -> Result<Coloring, String> {
    match opt.coloring.as_deref() {
        None => gf
            .coloring
            .clone()
            .ok_or_else(|| "no coloring block and no --coloring".to_string()),
        Some("3col") => eulerian_three_coloring(&gf.graph)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| "graph has no proper 3-coloring via parity forcing".to_string()),
        Some(spec) if spec.starts_with("search:") => {
            let k: u32 = spec[7..].parse().map_err(|_| format!("bad palette in {spec:?}"))?;
            search_coloring(&gf.graph, k, false, 100_000_000)
                .found()
                .ok_or_else(|| format!("no proper {k}-coloring found"))
        }
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            let other = GraphFile::parse(&text).map_err(|e| e.to_string())?;
            other.coloring.ok_or_else(|| format!("{path} has no coloring block"))
        }
    }
}

fn parse_u(s: &str) -> Result<BTreeSet<usize>, String> {
    s.split(',')
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse().map_err(|_| format!("bad vertex {t:?} in --u")))
        .collect()
}

fn oracle_limits() -> Limits {
    match std::env::var("ORACLE_MAX_N") {
        Ok(v) => match v.parse() {
            Ok(n) => Limits::with_max_n(n),
            Err(_) => Limits::default(),
        },
        Err(_) => Limits::default(),
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, String> {
    let ok = ExitCode::SUCCESS;
    let fail = ExitCode::from(1);
    match cmd {
        Cmd::Validate { input, triangulation } => {
            let gf = read_input(&input)?;
            let report = gf.graph.validate(triangulation || gf.triangulation);
            for c in &report.checks {
                println!(
                    "{} {}{}",
                    if c.pass { "ok" } else { "FAIL" },
                    c.name,
                    if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) }
                );
            }
            println!("# {} checks, {} failed", report.checks.len(),
                report.checks.iter().filter(|c| !c.pass).count());
            Ok(if report.ok() { ok } else { fail })
        }
        Cmd::Faces { input } => {
            let gf = read_input(&input)?;
            let faces = gf.graph.faces().map_err(|e| e.to_string())?;
            for f in &faces {
                println!("{}", f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
            }
            println!("# {} faces", faces.len());
            Ok(ok)
        }
        Cmd::Decompose { input } => {
            let gf = read_input(&input)?;
            let tree = gf.graph.decompose().map_err(|e| e.to_string())?;
            for (i, piece) in tree.pieces.iter().enumerate() {
                let verts: Vec<String> =
                    tree.piece_maps[i].iter().map(|v| v.to_string()).collect();
                println!("piece {i} n {} vertices {}", piece.n(), verts.join(" "));
            }
            for &(a, b, t) in &tree.tree_edges {
                let tri = tree.triangles[t];
                println!("link {a} {b} triangle {} {} {}", tri[0], tri[1], tri[2]);
            }
            println!("# {} pieces", tree.piece_count());
            Ok(ok)
        }
        Cmd::Color { input, k, acyclic, budget } => {
            let gf = read_input(&input)?;
            match search_coloring(&gf.graph, k, acyclic, budget) {
                SearchResult::Found(phi) => {
                    print!("{}", GraphFile::new(gf.graph).with_coloring(phi).serialize());
                    Ok(ok)
                }
                SearchResult::NoColoring => {
                    println!("# no {}coloring with {k} colors", if acyclic { "acyclic " } else { "" });
                    Ok(fail)
                }
                SearchResult::BudgetExhausted => Err("search budget exhausted".into()),
            }
        }
        Cmd::MValue { input, coloring } => {
            let gf = read_input(&input)?;
            let phi = pick_coloring(&gf, &coloring)?;
            let m = m_value(&gf.graph, &phi).map_err(|e| e.to_string())?;
            println!("{m}");
            Ok(ok)
        }
        Cmd::Transversal { input, coloring, avoid, u } => {
            let gf = read_input(&input)?;
            let phi = pick_coloring(&gf, &coloring)?;
            let cert = if let Some(spec) = u {
                let u_set = parse_u(&spec)?;
                u_acyclic_transversal(&gf.graph, &phi, &u_set).map_err(|e| e.to_string())?
            } else {
                let avoid_set: BTreeSet<_> = match avoid {
                    None => BTreeSet::new(),
                    Some(path) => {
                        let text =
                            fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
                        parse_edge_list(&text)
                            .map_err(|e| e.to_string())?
                            .into_iter()
                            .map(|(a, b)| edge(a, b))
                            .collect()
                    }
                };
                min_transversal(&gf.graph, &phi, &avoid_set).map_err(|e| e.to_string())?
            };
            for (a, b) in &cert.edges {
                println!("{a} {b}");
            }
            let report = verify_certificate(&gf.graph, &phi, &cert);
            println!(
                "# size {} bound {} optimal {} verified {}",
                cert.size(),
                cert.bound.value(),
                cert.optimal,
                report.ok()
            );
            Ok(if report.ok() { ok } else { fail })
        }
        Cmd::Defect { input, k } => {
            let gf = read_input(&input)?;
            if k != 3 && k != 4 {
                return Err("--k must be 3 or 4".into());
            }
            let (r4, r3) = defect_bounds(&gf.graph, None, 500_000_000).map_err(|e| e.to_string())?;
            let r = if k == 4 { r4 } else { r3 };
            for (a, b) in &r.deleted {
                println!("{a} {b}");
            }
            println!(
                "# k {} deleted {} bound {}/{} met {}",
                r.k,
                r.deleted.len(),
                r.bound_num,
                r.bound_den,
                r.met
            );
            print!("{}", GraphFile::new(gf.graph).with_coloring(r.coloring).serialize());
            Ok(if r.met { ok } else { fail })
        }
        Cmd::Gen { family, params, seed } => {
            let p = |i: usize| -> Result<usize, String> {
                params.get(i).copied().ok_or_else(|| format!("{family} needs a size parameter"))
            };
            let g = match family.as_str() {
                "double-wheel" => double_wheel(p(0)?).map_err(|e| e.to_string())?,
                "even-double-wheel" => even_double_wheel(p(0)?).map_err(|e| e.to_string())?,
                "octahedron" => octahedron(),
                "icosahedron" => icosahedron(),
                "k3" => k3(),
                "k4" => k4(),
                "stacked-chain" => stacked_chain(p(0)?).map_err(|e| e.to_string())?,
                "random" => random_triangulation(p(0)?, seed).map_err(|e| e.to_string())?,
                "glued-wheels" => {
                    glued_even_double_wheels(p(0)?, p(1)?).map_err(|e| e.to_string())?
                }
                "octahedron-replacement" => {
                    octahedron_replacement(&octahedron()).map_err(|e| e.to_string())?
                }
                other => return Err(format!("unknown family {other:?}")),
            };
            print!("{}", GraphFile::new(g).serialize());
            Ok(ok)
        }
        Cmd::Oracle { which, input, coloring, k, u } => {
            let gf = read_input(&input)?;
            let lim = oracle_limits();
            match which.as_str() {
                "m" => {
                    let phi = pick_coloring(&gf, &coloring)?;
                    println!("{}", brute_m(&gf.graph, &phi, &lim).map_err(|e| e.to_string())?);
                }
                "mk" => match brute_m_k(&gf.graph, k, &lim).map_err(|e| e.to_string())? {
                    Some(v) => println!("{v}"),
                    None => println!("infinite"),
                },
                "mprime" => {
                    println!("{}", brute_m_prime(&gf.graph, k, &lim).map_err(|e| e.to_string())?)
                }
                "mdprime" => {
                    println!("{}", brute_m_dprime(&gf.graph, k, &lim).map_err(|e| e.to_string())?)
                }
                "uacyclic" => {
                    let phi = pick_coloring(&gf, &coloring)?;
                    let u_set = u.as_deref().map(parse_u).transpose()?.unwrap_or_default();
                    match brute_optimal_u_acyclic(&gf.graph, &phi, &u_set, &lim)
                        .map_err(|e| e.to_string())?
                    {
                        Some(w) => {
                            for (a, b) in &w {
                                println!("{a} {b}");
                            }
                            println!("# size {}", w.len());
                        }
                        None => {
                            println!("# none");
                            return Ok(fail);
                        }
                    }
                }
                other => return Err(format!("unknown oracle {other:?}")),
            }
            Ok(ok)
        }
        Cmd::VerifyPaper { quick } => {
            let rows = verify::verify_paper(quick, Fault::None);
            println!("# claim | instance | expected | computed | result");
            for r in &rows {
                println!(
                    "{} | {} | {} | {} | {}",
                    r.claim,
                    r.instance,
                    r.expected,
                    r.computed,
                    if r.pass { "pass" } else { "FAIL" }
                );
            }
            let failed = rows.iter().filter(|r| !r.pass).count();
            println!("# {} claims, {failed} failed", rows.len());
            Ok(if failed == 0 { ok } else { fail })
        }
    }
}
