//! Monte Carlo logical error rates under IID Z errors.
//!
//! Shots are split into fixed-size shards. Shard `k` draws from a ChaCha8
//! stream seeded by the run seed with stream number `k`, so results do not
//! depend on the number of worker threads.

use chain::{build_chained, ChainedCode, FusionMode};
use decoder::{is_logical_fault, ChainDecoder, ChainSyndrome};
use pauli_core::BitVec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const SHARD_SHOTS: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct McConfig {
    pub t: usize,
    pub p: f64,
    pub shots: u64,
    pub seed: u64,
    pub fusion: FusionMode,
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct McResult {
    pub t: usize,
    pub p: f64,
    pub shots: u64,
    pub failures: u64,
    pub eps: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub seed: u64,
    pub fusion_mode: String,
}

/// Wilson score interval with `z` standard deviations.
pub fn wilson(failures: u64, shots: u64, z: f64) -> (f64, f64) {
    let n = shots as f64;
    let phat = failures as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (phat + z2 / (2.0 * n)) / denom;
    let half = z * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

fn shard_rng(seed: u64, shard: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    rng
}

fn run_shard(code: &ChainedCode, dec: &ChainDecoder, p: f64, shots: u64, rng: &mut ChaCha8Rng) -> u64 {
    let mut failures = 0;
    let mut e = BitVec::zeros(code.n);
    for _ in 0..shots {
        let mut any = false;
        for q in 0..code.n {
            let flip = rng.gen_bool(p);
            e.set(q, flip);
            any |= flip;
        }
        if !any {
            continue;
        }
        let s = ChainSyndrome::of_error(code, &e);
        let corr = dec.decode(&s).expect("syndrome matches the code").correction;
        if is_logical_fault(corr.zmask(), &e) {
            failures += 1;
        }
    }
    failures
}

/// Worker pool capped by `CHAINCODE_THREADS` when set.
pub fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var("CHAINCODE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        b = b.num_threads(n.max(1));
    }
    b.build().map_err(|e| CliError::Threads(e.to_string()))
}

pub fn run_mc(cfg: &McConfig) -> Result<McResult, CliError> {
    if cfg.shots == 0 {
        return Err(CliError::Invalid("shots must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&cfg.p) {
        return Err(CliError::Invalid(format!("p = {} is outside [0, 1]", cfg.p)));
    }
    let code = build_chained(cfg.t, cfg.fusion);
    let dec = ChainDecoder::new(&code)?;
    let shards = cfg.shots.div_ceil(SHARD_SHOTS);
    let pool = thread_pool()?;
    let failures: u64 = pool.install(|| {
        (0..shards)
            .into_par_iter()
            .map(|k| {
                let shots = SHARD_SHOTS.min(cfg.shots - k * SHARD_SHOTS);
                run_shard(&code, &dec, cfg.p, shots, &mut shard_rng(cfg.seed, k))
            })
            .sum()
    });
    let (ci_lo, ci_hi) = wilson(failures, cfg.shots, 1.96);
    Ok(McResult {
        t: cfg.t,
        p: cfg.p,
        shots: cfg.shots,
        failures,
        eps: failures as f64 / cfg.shots as f64,
        ci_lo,
        ci_hi,
        seed: cfg.seed,
        fusion_mode: cfg.fusion.name().to_string(),
    })
}

/// Rows as CSV with a header line.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}
