//! Command-line front end. Exit codes: 0 all checks passed, 1 at least one
//! mismatch or counterexample, 2 invalid input or configuration.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polyrook_core::algebra::{self, MonomialOrder};
use polyrook_core::enumerate::{self, Dedup};
use polyrook_core::grid::Polyomino;
use polyrook_core::io::{parse_auto, to_json};
use polyrook_core::lattice;
use polyrook_core::motzkin::{self, MotzkinWord};
use polyrook_core::parallelogram::{self, GorensteinMethod, Terminal};
use polyrook_core::rook::RookComplex;
use polyrook_core::verify::{self, SweepOptions};

#[derive(Parser)]
#[command(
    name = "polyrook",
    about = "Hilbert numerators, rook equivalence and Gorenstein classification for simple polyominoes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Parallel workers for sweeps (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Machine-readable JSON output where a human format is the default
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupArg {
    None,
    D4,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HilbertMethod {
    Groebner,
    Descent,
    Chains,
}

#[derive(Clone, Copy, ValueEnum)]
enum GorensteinArg {
    All,
    SProperty,
    Purity,
    Motzkin,
}

impl From<GorensteinArg> for GorensteinMethod {
    fn from(m: GorensteinArg) -> Self {
        match m {
            GorensteinArg::All => GorensteinMethod::All,
            GorensteinArg::SProperty => GorensteinMethod::SProperty,
            GorensteinArg::Purity => GorensteinMethod::Purity,
            GorensteinArg::Motzkin => GorensteinMethod::Motzkin,
        }
    }
}

#[derive(Args)]
struct FileArg {
    /// Polyomino file, grid format (#/.) or JSON {"cells": [[x,y],...]}
    file: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Stream fixed polyominoes of a rank, one JSON object per line
    Enumerate {
        #[arg(long)]
        rank: usize,
        /// Keep only simple polyominoes
        #[arg(long)]
        simple: bool,
        /// Symmetry reduction
        #[arg(long, value_enum, default_value_t = DedupArg::None)]
        dedup: DedupArg,
        /// Print only the count
        #[arg(long)]
        count_only: bool,
    },
    /// Check h(t) == r~(t) on every simple polyomino up to a rank
    Verify {
        #[arg(long)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = DedupArg::D4)]
        dedup: DedupArg,
        /// Continue an interrupted run (needs --out; keeps OUT.resume)
        #[arg(long)]
        resume: bool,
        /// Add wall-clock fields (reports stop being byte-reproducible)
        #[arg(long)]
        timings: bool,
    },
    /// Compare four h(t) computations on parallelogram polyominoes
    Crosscheck {
        #[arg(long)]
        max_rank: usize,
    },
    /// Classify parallelogram polyominoes as Gorenstein by three criteria
    GorensteinSweep {
        #[arg(long)]
        max_rank: usize,
    },
    /// h(t) of one polyomino
    Hilbert {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, value_enum)]
        method: HilbertMethod,
        #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
        order: OrderArg,
    },
    /// Rook polynomial and rook-equivalence polynomial
    Rook {
        #[command(flatten)]
        file: FileArg,
        /// Also list class representatives per level
        #[arg(long)]
        classes: bool,
    },
    /// Gorenstein decision for a parallelogram polyomino
    Gorenstein {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, value_enum, default_value_t = GorensteinArg::All)]
        method: GorensteinArg,
    },
    /// Motzkin word coding
    Motzkin {
        #[command(subcommand)]
        action: MotzkinCommand,
    },
    /// The two bounding north-east paths as binary words
    Paths {
        #[command(flatten)]
        file: FileArg,
    },
    /// Derived sequence: repeatedly strip the origin rectangle
    Derive {
        #[command(flatten)]
        file: FileArg,
    },
}

#[derive(Subcommand)]
enum MotzkinCommand {
    /// Encode a parallelogram polyomino file as a word over R, F, A, B
    Encode {
        #[command(flatten)]
        file: FileArg,
    },
    /// Decode a word over R, F, A, B back to a polyomino
    Decode { word: String },
}

fn read_polyomino(path: &PathBuf) -> Result<Polyomino, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_auto(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => {
            let append = matches!(&cli.command, Command::Verify { resume: true, .. });
            let file = fs::OpenOptions::new()
                .create(true)
                .append(append)
                .write(true)
                .truncate(!append)
                .open(path);
            match file {
                Ok(f) => Box::new(std::io::BufWriter::new(f)),
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
        }
        None => Box::new(std::io::stdout().lock()),
    };
    match run(&cli, &mut out) {
        Ok(clean) => {
            let _ = out.flush();
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Ok(true) = success, Ok(false) = a mismatch or counterexample was found,
/// Err = invalid input or configuration.
fn run(cli: &Cli, out: &mut dyn Write) -> Result<bool, String> {
    let fail = |e: &dyn std::fmt::Display| e.to_string();
    match &cli.command {
        Command::Enumerate {
            rank,
            simple,
            dedup,
            count_only,
        } => {
            let dedup = match dedup {
                DedupArg::None => Dedup::None,
                DedupArg::D4 => Dedup::D4,
            };
            let mut emit = |p: &Polyomino| {
                if !*count_only {
                    writeln!(out, "{}", to_json(p)).expect("write");
                }
            };
            let count = if *simple {
                enumerate::enumerate_simple(*rank, dedup, &mut emit)
            } else {
                enumerate::enumerate_fixed(*rank, &mut emit)
            }
            .map_err(|e| fail(&e))?;
            if *count_only {
                writeln!(out, "{count}").map_err(|e| fail(&e))?;
            }
            Ok(true)
        }
        Command::Verify {
            max_rank,
            dedup,
            resume,
            timings,
        } => {
            let opts = SweepOptions {
                max_rank: *max_rank,
                jobs: cli.jobs,
                dedup: match dedup {
                    DedupArg::None => Dedup::None,
                    DedupArg::D4 => Dedup::D4,
                },
                timings: *timings,
            };
            let ckpt_path = if *resume {
                let base = cli
                    .out
                    .as_ref()
                    .ok_or("--resume needs --out FILE to anchor the checkpoint")?;
                Some(base.with_extension("resume"))
            } else {
                None
            };
            let summary = verify::verify_conjecture(&opts, out, ckpt_path.as_deref())
                .map_err(|e| fail(&e))?;
            eprintln!(
                "verified {} polyominoes up to rank {}: {} mismatches",
                summary.total, max_rank, summary.mismatches
            );
            Ok(summary.mismatches == 0)
        }
        Command::Crosscheck { max_rank } => {
            let summary =
                verify::crosscheck_parallelogram(*max_rank, cli.jobs, out).map_err(|e| fail(&e))?;
            eprintln!(
                "crosschecked {} parallelogram polyominoes: {} mismatches",
                summary.total, summary.mismatches
            );
            Ok(summary.mismatches == 0)
        }
        Command::GorensteinSweep { max_rank } => {
            let summary =
                verify::classify_gorenstein(*max_rank, cli.jobs, out).map_err(|e| fail(&e))?;
            eprintln!(
                "classified {} parallelogram polyominoes: {} criterion disagreements",
                summary.total, summary.disagreements
            );
            Ok(summary.disagreements == 0)
        }
        Command::Hilbert {
            file,
            method,
            order,
        } => {
            let p = read_polyomino(&file.file)?;
            match method {
                HilbertMethod::Groebner => {
                    let h = algebra::h_polynomial(&p, (*order).into()).map_err(|e| fail(&e))?;
                    let payload = serde_json::json!({
                        "h": h.to_i64_coeffs(),
                        "dim": algebra::krull_dim(&p),
                        "reg": h.degree().unwrap_or(0),
                    });
                    writeln!(out, "{payload}").map_err(|e| fail(&e))?;
                }
                HilbertMethod::Descent => {
                    let l = lattice::lattice_of(&p).map_err(|e| fail(&e))?;
                    let h = l
                        .h_via_descents(lattice::DEFAULT_CHAIN_CAP)
                        .map_err(|e| fail(&e))?;
                    writeln!(out, "{}", serde_json::json!(h.to_i64_coeffs()))
                        .map_err(|e| fail(&e))?;
                }
                HilbertMethod::Chains => {
                    let h = lattice::h_via_cell_chains(&p).map_err(|e| fail(&e))?;
                    writeln!(out, "{}", serde_json::json!(h.to_i64_coeffs()))
                        .map_err(|e| fail(&e))?;
                }
            }
            Ok(true)
        }
        Command::Rook { file, classes } => {
            let p = read_polyomino(&file.file)?;
            let complex = RookComplex::new(&p);
            let r = complex.polynomial();
            let r_tilde = complex.class_polynomial().map_err(|e| fail(&e))?;
            if cli.json {
                let class_lists: Option<Vec<Vec<String>>> = classes.then(|| {
                    (0..=complex.rook_number())
                        .map(|k| {
                            complex
                                .classes(k)
                                .expect("valid complex")
                                .iter()
                                .map(|c| c.representative.to_string())
                                .collect()
                        })
                        .collect()
                });
                let payload = serde_json::json!({
                    "r": r.to_i64_coeffs(),
                    "r_tilde": r_tilde.to_i64_coeffs(),
                    "classes": class_lists,
                });
                writeln!(out, "{payload}").map_err(|e| fail(&e))?;
            } else {
                writeln!(out, "r(t)  = {r}").map_err(|e| fail(&e))?;
                writeln!(out, "r~(t) = {r_tilde}").map_err(|e| fail(&e))?;
                if *classes {
                    for k in 0..=complex.rook_number() {
                        let reps: Vec<String> = complex
                            .classes(k)
                            .map_err(|e| fail(&e))?
                            .iter()
                            .map(|c| format!("{} (size {})", c.representative, c.size))
                            .collect();
                        writeln!(out, "level {k}: {}", reps.join(", ")).map_err(|e| fail(&e))?;
                    }
                }
            }
            Ok(true)
        }
        Command::Gorenstein { file, method } => {
            let p = read_polyomino(&file.file)?;
            let verdict =
                parallelogram::is_gorenstein(&p, (*method).into()).map_err(|e| fail(&e))?;
            if cli.json {
                let detail = parallelogram::gorenstein_verdicts(&p).map_err(|e| fail(&e))?;
                let payload = serde_json::json!({
                    "gorenstein": verdict,
                    "s_property": detail.s_property,
                    "purity": detail.purity,
                    "motzkin": detail.motzkin,
                });
                writeln!(out, "{payload}").map_err(|e| fail(&e))?;
            } else {
                writeln!(
                    out,
                    "{}",
                    if verdict {
                        "Gorenstein"
                    } else {
                        "not Gorenstein"
                    }
                )
                .map_err(|e| fail(&e))?;
            }
            Ok(true)
        }
        Command::Motzkin { action } => {
            match action {
                MotzkinCommand::Encode { file } => {
                    let p = read_polyomino(&file.file)?;
                    let pair = parallelogram::detect(&p).map_err(|e| fail(&e))?;
                    writeln!(out, "{}", motzkin::encode(&pair)).map_err(|e| fail(&e))?;
                }
                MotzkinCommand::Decode { word } => {
                    let word = MotzkinWord::parse(word).map_err(|e| fail(&e))?;
                    let pair = motzkin::decode(&word).map_err(|e| fail(&e))?;
                    let p = parallelogram::from_paths(&pair).map_err(|e| fail(&e))?;
                    if cli.json {
                        writeln!(out, "{}", to_json(&p)).map_err(|e| fail(&e))?;
                    } else {
                        write!(out, "{p}").map_err(|e| fail(&e))?;
                    }
                }
            }
            Ok(true)
        }
        Command::Paths { file } => {
            let p = read_polyomino(&file.file)?;
            let pair = parallelogram::detect(&p).map_err(|e| fail(&e))?;
            writeln!(out, "u={}", pair.upper_word()).map_err(|e| fail(&e))?;
            writeln!(out, "l={}", pair.lower_word()).map_err(|e| fail(&e))?;
            Ok(true)
        }
        Command::Derive { file } => {
            let p = read_polyomino(&file.file)?;
            let seq = parallelogram::derived_sequence(&p).map_err(|e| fail(&e))?;
            let stages: Vec<serde_json::Value> = seq
                .stages
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "cells": s.cells().iter().map(|c| [c.x, c.y]).collect::<Vec<_>>()
                    })
                })
                .collect();
            let terminal = match &seq.terminal {
                Terminal::Rectangle(r) => serde_json::json!({
                    "rectangle": r.cells().iter().map(|c| [c.x, c.y]).collect::<Vec<_>>()
                }),
                Terminal::Stuck(cells) => serde_json::json!({
                    "stuck": cells.iter().map(|c| [c.x, c.y]).collect::<Vec<_>>()
                }),
            };
            writeln!(
                out,
                "{}",
                serde_json::json!({ "stages": stages, "terminal": terminal })
            )
            .map_err(|e| fail(&e))?;
            Ok(true)
        }
    }
}
