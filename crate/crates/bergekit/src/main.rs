//! Command-line entry point.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use bergekit::classifier::{classify_bh, classify_corpus, classify_treeforb, GrowthKind};
use bergekit::constructions::{expand_product, g1_extremal, h2_extremal, ik_extremal};
use bergekit::containment::{berge_contains, config_contains};
use bergekit::error::Error;
use bergekit::graphs::SimpleGraph;
use bergekit::matrix::BitMatrix;
use bergekit::named;
use bergekit::solver::{solve_bh, solve_bh_unrestricted, solve_forb_family, solve_relative};
use bergekit::transform::shift_fixpoint;
use bergekit::verify::{run as run_verify, RunOptions};
use bergekit::SCHEMA;

#[derive(Parser)]
#[command(
    name = "bergekit",
    version,
    about = "Forbidden Berge hypergraph toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide containment of F in A and print a witness when present.
    Contains {
        #[arg(long, value_enum, default_value = "berge")]
        mode: ContainMode,
        /// Forbidden matrix: a file path or an inline column literal.
        f: String,
        /// Host matrix: a file path or an inline column literal.
        a: String,
    },
    /// Shift a simple matrix to its downset fixpoint.
    Shift { a: String },
    /// Expand a lower-bound construction.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Exact Bh(m, F) by branch-and-bound.
    BhExact {
        f: String,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "downset")]
        mode: SolveModeArg,
    },
    /// Exact forb(m, family) over a directory of matrix files.
    ForbExact {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Relative maximum f(F, P): most columns of P avoiding F.
    FRel { f: String, p: String },
    /// Classify the growth of Bh(m, F), or of forb(m, F) for forests.
    Classify {
        /// Matrix input; optional when --graph is given.
        f: Option<String>,
        #[arg(long)]
        json: bool,
        /// Classify forb(m, F) for a forest incidence matrix instead.
        #[arg(long)]
        treeforb: bool,
        /// Graph literal "n;u-v,u-v,..." used with --treeforb.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Classify every small matrix on k rows and cross-check the results.
    ClassifyCorpus {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "4")]
        max_cols: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the theorem verification suite.
    VerifyTheorems {
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "779886")]
        seed: u64,
    },
    /// List the named matrices.
    Catalog,
}

#[derive(Clone, Copy, ValueEnum)]
enum ContainMode {
    Berge,
    Config,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveModeArg {
    Downset,
    Unrestricted,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// p-fold identity product on m rows.
    Product(ProductArgs),
    /// The boundary matrix H(p,k,t).
    #[command(name = "H", alias = "h")]
    H(HArgs),
    /// The general boundary matrix H((a1,...),t).
    #[command(name = "generalH", alias = "general-h")]
    GeneralH(GeneralHArgs),
    /// A named extremal construction.
    Extremal(ExtremalArgs),
}

#[derive(Args)]
struct ProductArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    verify: Option<String>,
}

#[derive(Args)]
struct HArgs {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    verify: Option<String>,
}

#[derive(Args)]
struct GeneralHArgs {
    /// Comma-separated part sizes, e.g. "1,2,2".
    #[arg(long)]
    parts: String,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    verify: Option<String>,
}

#[derive(Args)]
struct ExtremalArgs {
    /// One of: ik, g1, h2.
    #[arg(long)]
    name: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    verify: Option<String>,
}

/// Reads a matrix from a file path, or falls back to the inline literal.
fn read_matrix(arg: &str) -> Result<BitMatrix, Error> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        return Ok(BitMatrix::parse_text(&text)?);
    }
    Ok(BitMatrix::parse_literal(arg)?)
}

fn solve_json(result: &bergekit::solver::SolveResult) -> serde_json::Value {
    json!({
        "schema": SCHEMA,
        "value": result.value,
        "witness": result.witness.to_literal(),
        "nodes": result.nodes_explored,
        "mode": result.mode,
    })
}

fn main() -> ExitCode {
    // die quietly when the reader of a pipe goes away, like other CLI tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Contains { mode, f, a } => {
            let f = read_matrix(&f)?;
            let a = read_matrix(&a)?;
            let witness = match mode {
                ContainMode::Berge => berge_contains(&f, &a),
                ContainMode::Config => config_contains(&f, &a),
            };
            match witness {
                Some(e) => {
                    println!("present");
                    println!(
                        "{}",
                        json!({"schema": SCHEMA, "row_map": e.row_map, "col_map": e.col_map})
                    );
                }
                None => println!("absent"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Shift { a } => {
            let a = read_matrix(&a)?;
            let t = shift_fixpoint(&a)?;
            print!("{}", t.as_matrix().to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { what } => construct(what),
        Command::BhExact { f, m, mode } => {
            let f = read_matrix(&f)?;
            let result = match mode {
                SolveModeArg::Downset => solve_bh(&f, m)?,
                SolveModeArg::Unrestricted => solve_bh_unrestricted(&f, m)?,
            };
            println!("{}", solve_json(&result));
            Ok(ExitCode::SUCCESS)
        }
        Command::ForbExact { family, m } => {
            let mut paths: Vec<PathBuf> = std::fs::read_dir(&family)?
                .filter_map(|e| e.ok())
                .map(|e| e.path())
                .filter(|p| p.extension().is_some_and(|x| x == "txt"))
                .collect();
            paths.sort();
            let mut members = Vec::new();
            for p in paths {
                members.push(BitMatrix::parse_text(&std::fs::read_to_string(p)?)?);
            }
            if members.is_empty() {
                return Err(Error::BadParameter {
                    op: "forb-exact",
                    param: "family directory is empty",
                });
            }
            let result = solve_forb_family(&members, m)?;
            println!("{}", solve_json(&result));
            Ok(ExitCode::SUCCESS)
        }
        Command::FRel { f, p } => {
            let f = read_matrix(&f)?;
            let p = read_matrix(&p)?;
            let result = solve_relative(&f, &p)?;
            println!("{}", solve_json(&result));
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            f,
            json: as_json,
            treeforb,
            graph,
        } => {
            let matrix = match (&f, &graph) {
                (_, Some(g)) => {
                    if !treeforb {
                        return Err(Error::BadParameter {
                            op: "classify",
                            param: "--graph needs --treeforb",
                        });
                    }
                    SimpleGraph::parse_literal(g)?.incidence_matrix()
                }
                (Some(f), None) => read_matrix(f)?,
                (None, None) => {
                    return Err(Error::BadParameter {
                        op: "classify",
                        param: "missing input",
                    })
                }
            };
            let class = if treeforb {
                classify_treeforb(&matrix)?
            } else {
                classify_bh(&matrix)?
            };
            if as_json {
                let theta = match &class.kind {
                    GrowthKind::Theta { exponent } => {
                        json!({"num": exponent.num, "den": exponent.den})
                    }
                    GrowthKind::BoundedBetween { lo, hi } => {
                        json!({"lo": {"num": lo.num, "den": lo.den}, "hi": {"num": hi.num, "den": hi.den}})
                    }
                };
                println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "theta": theta,
                        "conditional": class.conditional,
                        "rules": class.rules,
                        "witness": class.lower_witness.to_string(),
                        "notes": class.notes,
                    })
                );
            } else {
                let growth = match &class.kind {
                    GrowthKind::Theta { exponent } => format!("Theta(m^{exponent})"),
                    GrowthKind::BoundedBetween { lo, hi } => format!("between m^{lo} and m^{hi}"),
                };
                println!(
                    "{growth}{}",
                    if class.conditional {
                        " (conditional)"
                    } else {
                        ""
                    }
                );
                for r in &class.rules {
                    println!("  rule {} [{}]", r.name, r.anchor);
                }
                println!("  witness {}", class.lower_witness);
                for n in &class.notes {
                    println!("  note {n}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ClassifyCorpus { k, max_cols, out } => {
            let report = classify_corpus(k, max_cols)?;
            let rendered = serde_json::to_string_pretty(&json!({
                "schema": SCHEMA,
                "k": report.k,
                "max_cols": report.max_cols,
                "entries": report.entries,
                "class_counts": report.class_counts,
                "all_witnesses_avoid": report.all_witnesses_avoid,
                "constant_cases_constant": report.constant_cases_constant,
            }))
            .expect("report serializes");
            match out {
                Some(path) => {
                    std::fs::write(&path, rendered)?;
                    println!(
                        "{} entries, witnesses avoid: {}, constants constant: {} -> {}",
                        report.entries.len(),
                        report.all_witnesses_avoid,
                        report.constant_cases_constant,
                        path.display()
                    );
                }
                None => println!("{rendered}"),
            }
            if report.all_witnesses_avoid && report.constant_cases_constant {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::VerifyTheorems { only, m, k, seed } => {
            let opts = RunOptions { only, m, k, seed };
            let results = run_verify(&opts)?;
            if results.is_empty() {
                return Err(Error::BadParameter {
                    op: "verify-theorems",
                    param: "unknown item id",
                });
            }
            let mut all_pass = true;
            for r in &results {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                println!("{verdict} {}: {} [{}]", r.id, r.description, r.details);
                all_pass &= r.pass;
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Catalog => {
            for (name, anchor) in named::catalog() {
                let m = name.expand();
                println!(
                    "{name}\t{}x{}\t{}\t[{anchor}]",
                    m.rows(),
                    m.ncols(),
                    m.to_literal()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn construct(cmd: ConstructCmd) -> Result<ExitCode, Error> {
    let (matrix, verify) = match cmd {
        ConstructCmd::Product(args) => (expand_product(args.p, args.m)?, args.verify),
        ConstructCmd::H(args) => (named::make_h(args.p, args.k, args.t)?, args.verify),
        ConstructCmd::GeneralH(args) => {
            let parts: Result<Vec<usize>, _> =
                args.parts.split(',').map(|s| s.trim().parse()).collect();
            let parts = parts.map_err(|_| Error::BadParameter {
                op: "construct generalH",
                param: "parts",
            })?;
            (named::make_general_h(&parts, args.t)?, args.verify)
        }
        ConstructCmd::Extremal(args) => {
            let m = match args.name.as_str() {
                "ik" => {
                    let k = args.k.ok_or(Error::BadParameter {
                        op: "construct extremal",
                        param: "--k required for ik",
                    })?;
                    ik_extremal(k, args.m)?
                }
                "g1" => g1_extremal(args.m)?,
                "h2" => h2_extremal(args.m)?,
                _ => {
                    return Err(Error::BadParameter {
                        op: "construct extremal",
                        param: "name",
                    })
                }
            };
            (m, args.verify)
        }
    };
    print!("{}", matrix.to_text());
    if let Some(f) = verify {
        let f = read_matrix(&f)?;
        let avoided = berge_contains(&f, &matrix).is_none();
        println!("avoids {}: {}", f.to_literal(), avoided);
        if !avoided {
            return Ok(ExitCode::FAILURE);
        }
    }
    Ok(ExitCode::SUCCESS)
}
