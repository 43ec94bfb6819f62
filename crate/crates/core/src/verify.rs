//! Sweep harness: the enumerate/compute/compare pipeline over all simple
//! polyominoes up to a rank, the four-method cross-check on parallelogram
//! polyominoes, and the three-method Gorenstein classification. Reports are
//! JSON lines, one record per polyomino plus a trailing summary, written in
//! enumeration order so runs are byte-identical regardless of worker count.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{self, MonomialOrder};
use crate::enumerate::{self, Dedup, EnumError};
use crate::grid::Polyomino;
use crate::lattice;
use crate::motzkin;
use crate::parallelogram::{self, GorensteinVerdicts};
use crate::poly::IntPoly;
use crate::rook::RookComplex;

/// Chunk of polyominoes processed between two checkpoint updates.
const SHARD_SIZE: usize = 1024;

pub const MAX_VERIFY_RANK: usize = 12;
pub const MAX_CROSSCHECK_RANK: usize = 10;
pub const MAX_GORENSTEIN_RANK: usize = 10;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Rank(#[from] EnumError),
    #[error("rank {0} outside supported range 1..={1}")]
    RankOutOfRange(usize, usize),
    #[error("checkpoint file does not match this run: {0}")]
    CheckpointMismatch(String),
    #[error("bad checkpoint file: {0}")]
    CheckpointParse(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub max_rank: usize,
    /// 0 uses every core.
    pub jobs: usize,
    pub dedup: Dedup,
    /// Adds wall-clock fields; off by default so reports stay byte-identical
    /// across runs.
    pub timings: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_rank: 7,
            jobs: 0,
            dedup: Dedup::D4,
            timings: false,
        }
    }
}

/// Worker pool for the shard maps; `None` uses the global rayon pool.
struct Pool(Option<rayon::ThreadPool>);

impl Pool {
    fn new(jobs: usize) -> Pool {
        Pool(if jobs == 0 {
            None
        } else {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .expect("thread pool"),
            )
        })
    }

    fn map<T: Send>(
        &self,
        items: &[Polyomino],
        f: impl Fn(&Polyomino) -> T + Sync + Send,
    ) -> Vec<T> {
        match &self.0 {
            None => items.par_iter().map(f).collect(),
            Some(pool) => pool.install(|| items.par_iter().map(f).collect()),
        }
    }
}

fn cell_list(p: &Polyomino) -> Vec<[u16; 2]> {
    p.cells().iter().map(|c| [c.x, c.y]).collect()
}

fn coeffs(p: &IntPoly) -> Vec<i64> {
    p.to_i64_coeffs().expect("desk-scale coefficients fit i64")
}

// ---------------------------------------------------------------------------
// conjecture sweep: h(t) == r~(t) for every simple polyomino
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct VerifyRecord {
    pub cells: Vec<[u16; 2]>,
    pub rank: usize,
    pub h: Vec<i64>,
    pub r_tilde: Vec<i64>,
    #[serde(rename = "match")]
    pub matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RankCounts {
    pub rank: usize,
    pub count: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct Checkpoint {
    pub max_rank: usize,
    pub dedup_d4: bool,
    pub completed: Vec<RankCounts>,
    pub current_rank: usize,
    pub done_in_current: usize,
    pub mismatches_in_current: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySummary {
    pub per_rank: Vec<RankCounts>,
    pub total: usize,
    pub mismatches: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_millis: Option<u64>,
}

fn verify_one(p: &Polyomino, timings: bool) -> VerifyRecord {
    let started = Instant::now();
    let r_tilde = RookComplex::new(p)
        .class_polynomial()
        .expect("switches preserve validity");
    let (h, error) = match algebra::h_polynomial(p, MonomialOrder::DegRevLex) {
        Ok(h) => (h, None),
        Err(e) => (IntPoly::zero(), Some(e.to_string())),
    };
    let matched = error.is_none() && h == r_tilde;
    VerifyRecord {
        cells: cell_list(p),
        rank: p.rank(),
        h: coeffs(&h),
        r_tilde: coeffs(&r_tilde),
        matched,
        error,
        micros: timings.then(|| started.elapsed().as_micros() as u64),
    }
}

fn load_checkpoint(path: &Path, opts: &SweepOptions) -> Result<Checkpoint, HarnessError> {
    if !path.exists() {
        return Ok(Checkpoint {
            max_rank: opts.max_rank,
            dedup_d4: opts.dedup == Dedup::D4,
            current_rank: 1,
            ..Default::default()
        });
    }
    let ckpt: Checkpoint = serde_json::from_str(&fs::read_to_string(path)?)?;
    if ckpt.max_rank != opts.max_rank || ckpt.dedup_d4 != (opts.dedup == Dedup::D4) {
        return Err(HarnessError::CheckpointMismatch(format!(
            "checkpoint was taken with max_rank={} dedup_d4={}",
            ckpt.max_rank, ckpt.dedup_d4
        )));
    }
    Ok(ckpt)
}

fn store_checkpoint(path: &Path, ckpt: &Checkpoint) -> Result<(), HarnessError> {
    fs::write(
        path,
        serde_json::to_string_pretty(ckpt).expect("serializable"),
    )?;
    Ok(())
}

/// Computes h(t) and r̃(t) for every simple polyomino of rank 1..=max_rank
/// and reports matches. With a checkpoint path, completed shards are skipped
/// on resume and progress is persisted after every shard.
pub fn verify_conjecture(
    opts: &SweepOptions,
    out: &mut dyn Write,
    checkpoint: Option<&Path>,
) -> Result<VerifySummary, HarnessError> {
    if opts.max_rank == 0 || opts.max_rank > MAX_VERIFY_RANK {
        return Err(HarnessError::RankOutOfRange(opts.max_rank, MAX_VERIFY_RANK));
    }
    let started = Instant::now();
    let mut ckpt = match checkpoint {
        Some(path) => load_checkpoint(path, opts)?,
        None => Checkpoint {
            max_rank: opts.max_rank,
            dedup_d4: opts.dedup == Dedup::D4,
            current_rank: 1,
            ..Default::default()
        },
    };
    let mut per_rank = ckpt.completed.clone();
    let pool = Pool::new(opts.jobs);
    for rank in ckpt.current_rank..=opts.max_rank {
        let all = enumerate::collect_simple(rank, opts.dedup)?;
        let mut done = if rank == ckpt.current_rank {
            ckpt.done_in_current
        } else {
            0
        };
        let mut mismatches = if rank == ckpt.current_rank {
            ckpt.mismatches_in_current
        } else {
            0
        };
        while done < all.len() {
            let shard = &all[done..(done + SHARD_SIZE).min(all.len())];
            let records = pool.map(shard, |p| verify_one(p, opts.timings));
            for r in &records {
                if !r.matched {
                    mismatches += 1;
                }
                writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?;
            }
            out.flush()?;
            done += shard.len();
            if let Some(path) = checkpoint {
                ckpt.current_rank = rank;
                ckpt.done_in_current = done;
                ckpt.mismatches_in_current = mismatches;
                store_checkpoint(path, &ckpt)?;
            }
        }
        per_rank.push(RankCounts {
            rank,
            count: all.len(),
            mismatches,
        });
        if let Some(path) = checkpoint {
            ckpt.completed = per_rank.clone();
            ckpt.current_rank = rank + 1;
            ckpt.done_in_current = 0;
            ckpt.mismatches_in_current = 0;
            store_checkpoint(path, &ckpt)?;
        }
    }
    let summary = VerifySummary {
        total: per_rank.iter().map(|r| r.count).sum(),
        mismatches: per_rank.iter().map(|r| r.mismatches).sum(),
        per_rank,
        wall_millis: opts.timings.then(|| started.elapsed().as_millis() as u64),
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&serde_json::json!({ "summary": &summary })).expect("serializable")
    )?;
    Ok(summary)
}

// ---------------------------------------------------------------------------
// four-method cross-check on parallelogram polyominoes
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct CrosscheckRecord {
    pub cells: Vec<[u16; 2]>,
    pub rank: usize,
    pub h_groebner: Vec<i64>,
    pub h_descents: Vec<i64>,
    pub h_cell_chains: Vec<i64>,
    pub r_tilde: Vec<i64>,
    pub rook_number: usize,
    pub chain_count: u64,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrosscheckSummary {
    pub per_rank: Vec<RankCounts>,
    pub total: usize,
    pub mismatches: usize,
}

fn crosscheck_one(p: &Polyomino) -> CrosscheckRecord {
    let complex = RookComplex::new(p);
    let r_tilde = complex.class_polynomial().expect("switches stay valid");
    let h_groebner =
        algebra::h_polynomial(p, MonomialOrder::DegRevLex).unwrap_or_else(|_| IntPoly::zero());
    let l = lattice::lattice_of(p).expect("parallelogram input");
    let h_descents = l
        .h_via_descents(lattice::DEFAULT_CHAIN_CAP)
        .unwrap_or_else(|_| IntPoly::zero());
    let h_cell_chains = lattice::h_via_cell_chains(p).expect("parallelogram input");
    let chain_count = l.maximal_chain_count();
    let rook_number = complex.rook_number();
    let degrees_line_up = h_groebner.degree() == Some(rook_number);
    let h_at_one = h_groebner.eval_at_one().to_i64().unwrap_or(-1);
    let matched = h_groebner == h_descents
        && h_descents == h_cell_chains
        && h_cell_chains == r_tilde
        && degrees_line_up
        && h_at_one == chain_count as i64;
    CrosscheckRecord {
        cells: cell_list(p),
        rank: p.rank(),
        h_groebner: coeffs(&h_groebner),
        h_descents: coeffs(&h_descents),
        h_cell_chains: coeffs(&h_cell_chains),
        r_tilde: coeffs(&r_tilde),
        rook_number,
        chain_count,
        matched,
    }
}

/// Collects the parallelogram polyominoes of one rank (no symmetry
/// reduction: the class is not closed under rotation).
pub fn parallelograms_of_rank(rank: usize) -> Result<Vec<Polyomino>, EnumError> {
    let mut out = Vec::new();
    enumerate::enumerate_fixed(rank, |p| {
        if parallelogram::is_parallelogram(p) {
            out.push(p.clone());
        }
    })?;
    Ok(out)
}

/// Gröbner, descent, cell-chain and rook-class computations of h(t) agree on
/// every parallelogram polyomino up to max_rank, with deg h equal to the
/// rook number and h(1) equal to the maximal chain count.
pub fn crosscheck_parallelogram(
    max_rank: usize,
    jobs: usize,
    out: &mut dyn Write,
) -> Result<CrosscheckSummary, HarnessError> {
    if max_rank == 0 || max_rank > MAX_CROSSCHECK_RANK {
        return Err(HarnessError::RankOutOfRange(max_rank, MAX_CROSSCHECK_RANK));
    }
    let mut per_rank = Vec::new();
    let pool = Pool::new(jobs);
    for rank in 1..=max_rank {
        let polys = parallelograms_of_rank(rank)?;
        let records = pool.map(&polys, crosscheck_one);
        let mut mismatches = 0usize;
        for r in &records {
            if !r.matched {
                mismatches += 1;
            }
            writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?;
        }
        per_rank.push(RankCounts {
            rank,
            count: records.len(),
            mismatches,
        });
    }
    let summary = CrosscheckSummary {
        total: per_rank.iter().map(|r| r.count).sum(),
        mismatches: per_rank.iter().map(|r| r.mismatches).sum(),
        per_rank,
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&serde_json::json!({ "summary": &summary })).expect("serializable")
    )?;
    Ok(summary)
}

// ---------------------------------------------------------------------------
// Gorenstein classification sweep
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize)]
pub struct GorensteinRecord {
    pub cells: Vec<[u16; 2]>,
    pub rank: usize,
    pub s_property: bool,
    pub purity: bool,
    pub motzkin: bool,
    pub word: String,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GorensteinRankCounts {
    pub rank: usize,
    pub count: usize,
    pub gorenstein: usize,
    pub disagreements: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GorensteinSummary {
    pub per_rank: Vec<GorensteinRankCounts>,
    pub total: usize,
    pub disagreements: usize,
}

fn gorenstein_one(p: &Polyomino) -> GorensteinRecord {
    let verdicts: GorensteinVerdicts =
        parallelogram::gorenstein_verdicts(p).expect("parallelogram input");
    let word = motzkin::encode(&parallelogram::detect(p).expect("parallelogram input"));
    GorensteinRecord {
        cells: cell_list(p),
        rank: p.rank(),
        s_property: verdicts.s_property,
        purity: verdicts.purity,
        motzkin: verdicts.motzkin,
        word: word.to_string(),
        agree: verdicts.agree(),
    }
}

/// Three-method Gorenstein verdicts for every parallelogram polyomino up to
/// max_rank; a disagreement is a counterexample report, not a crash.
pub fn classify_gorenstein(
    max_rank: usize,
    jobs: usize,
    out: &mut dyn Write,
) -> Result<GorensteinSummary, HarnessError> {
    if max_rank == 0 || max_rank > MAX_GORENSTEIN_RANK {
        return Err(HarnessError::RankOutOfRange(max_rank, MAX_GORENSTEIN_RANK));
    }
    let mut per_rank = Vec::new();
    let pool = Pool::new(jobs);
    for rank in 1..=max_rank {
        let polys = parallelograms_of_rank(rank)?;
        let records = pool.map(&polys, gorenstein_one);
        let mut disagreements = 0usize;
        let mut gorenstein = 0usize;
        for r in &records {
            if !r.agree {
                disagreements += 1;
            } else if r.s_property {
                gorenstein += 1;
            }
            writeln!(out, "{}", serde_json::to_string(r).expect("serializable"))?;
        }
        per_rank.push(GorensteinRankCounts {
            rank,
            count: records.len(),
            gorenstein,
            disagreements,
        });
    }
    let summary = GorensteinSummary {
        total: per_rank.iter().map(|r| r.count).sum(),
        disagreements: per_rank.iter().map(|r| r.disagreements).sum(),
        per_rank,
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string(&serde_json::json!({ "summary": &summary })).expect("serializable")
    )?;
    Ok(summary)
}
