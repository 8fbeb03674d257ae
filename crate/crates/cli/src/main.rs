//! Batch entry point: classification atlas, theorem verification sweeps,
//! Hermitian pair reports, orbit listings, and Dynkin diagram export.

mod atlas;
mod dot;
mod json;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use isotropy_core::affine::build_affine;
use isotropy_core::hermitian::HermitianPair;
use isotropy_core::iab;
use isotropy_core::rootsys::{FiniteRootSystem, FiniteType};

#[derive(Parser)]
#[command(name = "isotropy", version, about = "Exact combinatorics of involution gradings: abelian Borel-stable subalgebras, orbit counts and sphericity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest rank of the graded algebra to include.
    #[arg(long, default_value_t = 4)]
    max_rank: usize,
    /// Restrict to these base types (e.g. A3,D4).
    #[arg(long, value_delimiter = ',')]
    types: Option<Vec<String>>,
    /// Level window bound for biconvexity checks.
    #[arg(long, default_value_t = 3)]
    level_bound: i64,
    /// Worker threads for the sweep (defaults to all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the full atlas: every involution with its subalgebra poset,
    /// orbit counts and sphericity verdicts.
    Atlas {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Write JSON here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Output format: json or text.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Emit one flat record per (grading, subalgebra).
    Classify {
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a theorem verification suite; exits nonzero on any violation.
    Verify {
        /// One of: cor73, mt, p63, antichain, hermitian-ranks, panyushev,
        /// orbit-dim.
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Report on a Hermitian pair (Π, α_q).
    Hermitian {
        /// Finite type, e.g. A3.
        #[arg(long = "type")]
        family: String,
        /// Bourbaki index of the simple root.
        #[arg(long)]
        node: usize,
        /// Include every orthogonal subset of Φ₁⁺.
        #[arg(long)]
        all_ort: bool,
        /// Include the unique maximal antichain (tube type only).
        #[arg(long)]
        antichain: bool,
    },
    /// List the Borel orbits of one subalgebra of a grading.
    Orbits {
        /// Grading spec: `TYPE:twist:marks` (e.g. D4:1:00100) or `flip:TYPE`.
        #[arg(long)]
        grading: String,
        /// Index into the enumerated subalgebra poset.
        #[arg(long)]
        subalgebra: usize,
    },
    /// DOT export of a Dynkin diagram.
    Dot {
        /// Finite type, e.g. E8.
        #[arg(long = "type")]
        family: String,
        /// Export the affine diagram with this twist instead.
        #[arg(long)]
        twist: Option<u8>,
    },
}

fn emit(json: Option<PathBuf>, payload: String) -> Result<(), String> {
    match json {
        Some(path) => std::fs::write(&path, payload).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn thread_pool(jobs: Option<usize>) -> Result<(), String> {
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}

/// A type filter must name valid finite types; anything else is a usage
/// error (exit code 2).
fn validate_types(types: &Option<Vec<String>>) {
    if let Some(types) = types {
        for t in types {
            if FiniteType::parse(t).is_err() {
                eprintln!("usage error: unknown type filter '{t}'");
                std::process::exit(2);
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Atlas { sweep, json, format } => {
            thread_pool(sweep.jobs)?;
            validate_types(&sweep.types);
            let cfg = atlas::SweepConfig {
                max_rank: sweep.max_rank.max(1),
                types: sweep.types,
                level_bound: sweep.level_bound,
            };
            match format.as_str() {
                "json" => emit(json, serde_json::to_string_pretty(&atlas::build_atlas(&cfg)).unwrap()),
                "text" => emit(json, atlas::atlas_text(&atlas::build_atlas(&cfg))),
                "dot" => emit(json, atlas::atlas_dot(&cfg)),
                other => Err(format!("unknown format: {other}")),
            }
        }
        Command::Classify { sweep, json } => {
            thread_pool(sweep.jobs)?;
            validate_types(&sweep.types);
            let cfg = atlas::SweepConfig {
                max_rank: sweep.max_rank.max(1),
                types: sweep.types,
                level_bound: sweep.level_bound,
            };
            let records = atlas::classify_records(&cfg);
            emit(json, serde_json::to_string_pretty(&records).unwrap())
        }
        Command::Verify { theorem, max_rank, jobs } => {
            thread_pool(jobs)?;
            if !verify::THEOREMS.contains(&theorem.as_str()) {
                // usage error: unknown suite
                eprintln!(
                    "unknown theorem id '{theorem}'; expected one of {}",
                    verify::THEOREMS.join(", ")
                );
                std::process::exit(2);
            }
            let summary = verify::run(&theorem, max_rank)?;
            println!("OK {summary}");
            Ok(())
        }
        Command::Hermitian { family, node, all_ort, antichain } => {
            let t = FiniteType::parse(&family).map_err(|e| e.to_string())?;
            let sys = FiniteRootSystem::from_type(t);
            let pair = HermitianPair::new(&sys, node).map_err(|e| e.to_string())?;
            let ort = |s: &isotropy_core::hermitian::OrtSubset| json::OrtJson {
                roots: s.roots.iter().map(json::coeffs).collect(),
                ort_type: s.ort_type,
            };
            let doc = json::HermitianJson {
                family: t.name(),
                node,
                rank: pair.rank_r,
                tube_type: pair.is_tube_type(),
                phi1plus: pair.phi1plus.iter().map(json::coeffs).collect(),
                cascade: ort(&pair.harish_chandra_cascade()),
                max_antichain: if antichain {
                    Some(ort(&pair.unique_max_antichain().map_err(|e| e.to_string())?))
                } else {
                    None
                },
                orthogonal_subsets: if all_ort {
                    Some(pair.ort().iter().map(ort).collect())
                } else {
                    None
                },
            };
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(())
        }
        Command::Orbits { grading, subalgebra } => {
            let g = verify::parse_grading(&grading)?;
            let all = iab::enumerate_iab(&g).map_err(|e| e.to_string())?;
            let w = all
                .get(subalgebra)
                .ok_or_else(|| format!("subalgebra index out of range (0..{})", all.len()))?;
            let a = iab::theta(&g, w);
            let records: Vec<json::OrbitJson> = verify::orbit_records(&g, &a)
                .into_iter()
                .map(|(rep, dim, open)| json::OrbitJson {
                    rep: rep.iter().map(json::coeffs).collect(),
                    dim,
                    open,
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&records).unwrap());
            Ok(())
        }
        Command::Dot { family, twist } => {
            let t = FiniteType::parse(&family).map_err(|e| e.to_string())?;
            let out = match twist {
                None => {
                    let sys = FiniteRootSystem::from_type(t);
                    dot::dynkin_dot(&t.name(), &sys.cartan, 1)
                }
                Some(k) => {
                    let sys = build_affine(t, k).map_err(|e| e.to_string())?;
                    dot::dynkin_dot(&sys.name, &sys.gcm, 0)
                }
            };
            println!("{out}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
