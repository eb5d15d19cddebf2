//! Maximum-likelihood machinery for IID Z errors on chained codes.
//!
//! For a fixed syndrome the consistent error patterns split into an even and
//! an odd coset. Their probabilities are built bilayer by bilayer: each
//! bilayer contributes four sums `lambda` over patterns with even or odd
//! weight in layer-a and layer-b, and the type-B bit of the link decides
//! which products survive.
//!
//! The bilayer sums factor over vertical edges. Write a bilayer pattern as
//! `(z + u, u)` with `u` on layer-b and `z` the folded pattern. For fixed `z`
//! of weight `w > 0`, summing over `u` of either parity gives
//! `(2pq)^w (q^2 + p^2)^(n - w) / 2`. For `z = 0` the even and odd parts are
//! binomial sums over vertical pairs. So only the coset weight distributions
//! of the single `D_mu` are needed.

mod logsum;

use chain::ChainedCode;
use colorcode::{Color, TriangularCode};
use decoder::{is_logical_fault, ChainDecoder, ChainSyndrome, DecoderError};
use pauli_core::{solve_linear, BitVec, PauliError, PauliGroup, PauliString, PauliType};
use serde::{Deserialize, Serialize};

pub use logsum::{ln_binomial, ln_pow, log_sum_exp};

/// Largest code size for exhaustive error-rate sums.
pub const MAX_EXACT_QUBITS: usize = 20;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MlError {
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error(transparent)]
    Decoder(#[from] DecoderError),
    #[error("error rate {0} is outside [0, 1]")]
    BadRate(f64),
    #[error("type-B outcome must be +1 or -1, got {0}")]
    BadOutcome(i8),
    #[error("bilayer {0} does not exist")]
    NoBilayer(usize),
    #[error("syndrome bits do not match the code")]
    BadSyndrome,
    #[error("posterior has zero total probability")]
    ZeroPosterior,
    #[error("{n} qubits is above the exhaustive bound {max}")]
    TooManyQubits { n: usize, max: usize },
}

fn check_rate(p: f64) -> Result<(), MlError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(MlError::BadRate(p))
    }
}

/// `sum_w counts[w] p^w (1-p)^(n-w)` in log space.
fn ln_weighted(counts: &[u64], p: f64) -> f64 {
    let n = counts.len() - 1;
    let (lp, lq) = (p.ln(), (1.0 - p).ln());
    let terms: Vec<f64> = counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(w, &c)| (c as f64).ln() + ln_pow(lp, w) + ln_pow(lq, n - w))
        .collect();
    log_sum_exp(&terms)
}

/// Total probability of the coset `rep * zgroup` under IID Z errors.
pub fn coset_probability(zgroup: &PauliGroup, rep: &PauliString, p: f64) -> Result<f64, MlError> {
    check_rate(p)?;
    let dist = zgroup.coset_weight_distribution(rep)?;
    Ok(ln_weighted(&dist, p).exp())
}

/// Probabilities of the four bilayer cosets; `p` is even and `m` odd, layer-a
/// first.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaTable {
    pub lpp: f64,
    pub lmp: f64,
    pub lpm: f64,
    pub lmm: f64,
}

impl LambdaTable {
    pub fn total(&self) -> f64 {
        self.lpp + self.lmp + self.lpm + self.lmm
    }

    pub fn normalized(&self) -> Self {
        let s = self.total();
        LambdaTable {
            lpp: self.lpp / s,
            lmp: self.lmp / s,
            lpm: self.lpm / s,
            lmm: self.lmm / s,
        }
    }

    /// The table after multiplying every pattern by one vertical pair, which
    /// flips both layer parities and the type-B bit.
    pub fn with_vertical_pair(&self) -> Self {
        LambdaTable {
            lpp: self.lmm,
            lmp: self.lpm,
            lpm: self.lmp,
            lmm: self.lpp,
        }
    }
}

/// A Z pattern on `D` with the given face syndrome and even weight.
fn even_representative(code: &TriangularCode, syndrome: &BitVec) -> Result<BitVec, MlError> {
    if syndrome.len() != code.faces.len() {
        return Err(MlError::BadSyndrome);
    }
    let rows = code.face_masks();
    let rhs: Vec<bool> = (0..rows.len()).map(|k| syndrome.get(k)).collect();
    let mut x = solve_linear(&rows, &rhs, code.n).ok_or(MlError::BadSyndrome)?;
    if x.parity() {
        let red = code.boundary(Color::Red).expect("order >= 1");
        for &q in red {
            x.flip(q);
        }
    }
    Ok(x)
}

/// Four-coset sums for one `D` bilayer with folded type-F syndrome `syndrome`.
pub fn lambdas_for(code: &TriangularCode, syndrome: &BitVec, p: f64) -> Result<LambdaTable, MlError> {
    check_rate(p)?;
    let n = code.n;
    let zs = code.stabilizer_group(PauliType::Z);
    let x = even_representative(code, syndrome)?;
    let even = zs.coset_weight_distribution(&PauliString::pure(PauliType::Z, x.clone()))?;
    let mut xl = x;
    for &q in code.boundary(Color::Red).expect("order >= 1") {
        xl.flip(q);
    }
    let odd = zs.coset_weight_distribution(&PauliString::pure(PauliType::Z, xl))?;

    let q = 1.0 - p;
    let (ln_pair, ln_same) = ((2.0 * p * q).ln(), (q * q + p * p).ln());
    let half = 0.5f64.ln();
    let folded = |dist: &[u64]| -> Vec<f64> {
        dist.iter()
            .enumerate()
            .skip(1)
            .filter(|&(_, &c)| c > 0)
            .map(|(w, &c)| (c as f64).ln() + half + ln_pow(ln_pair, w) + ln_pow(ln_same, n - w))
            .collect()
    };
    let shared = folded(&even);
    let (ln_pp, ln_qq) = ((p * p).ln(), (q * q).ln());
    let mut lpp_terms = shared.clone();
    let mut lmm_terms = shared;
    if even[0] > 0 {
        for k in 0..=n {
            let term = (even[0] as f64).ln() + ln_binomial(n, k) + ln_pow(ln_pp, k) + ln_pow(ln_qq, n - k);
            if k % 2 == 0 {
                lpp_terms.push(term);
            } else {
                lmm_terms.push(term);
            }
        }
    }
    let mixed = log_sum_exp(&folded(&odd)).exp();
    Ok(LambdaTable {
        lpp: log_sum_exp(&lpp_terms).exp(),
        lmp: mixed,
        lpm: mixed,
        lmm: log_sum_exp(&lmm_terms).exp(),
    })
}

/// [`lambdas_for`] on bilayer `mu` of a chained code.
pub fn bilayer_lambdas(code: &ChainedCode, mu: usize, type_f: &BitVec, p: f64) -> Result<LambdaTable, MlError> {
    let bl = code.bilayer(mu).map_err(|_| MlError::NoBilayer(mu))?;
    lambdas_for(&bl.code, type_f, p)
}

/// Normalized probabilities of the even and odd cosets of a chain prefix.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CosetPosterior {
    pub p_plus: f64,
    pub p_minus: f64,
}

impl CosetPosterior {
    /// The bare qubit: no error or one error.
    pub fn initial(p: f64) -> Self {
        CosetPosterior {
            p_plus: 1.0 - p,
            p_minus: p,
        }
    }

    fn normalized(p_plus: f64, p_minus: f64) -> Result<Self, MlError> {
        let s = p_plus + p_minus;
        if s.is_nan() || s <= 0.0 {
            return Err(MlError::ZeroPosterior);
        }
        Ok(CosetPosterior {
            p_plus: p_plus / s,
            p_minus: p_minus / s,
        })
    }
}

/// Adds one bilayer behind a type-B link with outcome `+1` or `-1`.
pub fn posterior_update(prior: CosetPosterior, lam: &LambdaTable, outcome: i8) -> Result<CosetPosterior, MlError> {
    let (pp, pm) = (prior.p_plus, prior.p_minus);
    match outcome {
        1 => CosetPosterior::normalized(lam.lpp * pp + lam.lpm * pm, lam.lmp * pp + lam.lmm * pm),
        -1 => CosetPosterior::normalized(lam.lmm * pp + lam.lmp * pm, lam.lpm * pp + lam.lpp * pm),
        o => Err(MlError::BadOutcome(o)),
    }
}

/// Even/odd coset posterior of the whole chain for syndrome `s`.
pub fn chain_posterior(code: &ChainedCode, s: &ChainSyndrome, p: f64) -> Result<CosetPosterior, MlError> {
    check_rate(p)?;
    if s.type_f.len() != code.t || s.type_b.len() != code.t {
        return Err(MlError::BadSyndrome);
    }
    let mut post = CosetPosterior::initial(p);
    for mu in 1..=code.t {
        let lam = bilayer_lambdas(code, mu, &s.type_f[mu - 1], p)?;
        let outcome = if s.type_b.get(mu - 1) { -1 } else { 1 };
        post = posterior_update(post, &lam, outcome)?;
    }
    Ok(post)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MlDecision {
    pub correction: PauliString,
    pub posterior: CosetPosterior,
    /// True when the odd coset was chosen.
    pub odd: bool,
}

/// Picks a representative of the more probable coset; ties go to the even
/// coset.
pub fn ml_decode(dec: &ChainDecoder, s: &ChainSyndrome, p: f64) -> Result<MlDecision, MlError> {
    let code = dec.code();
    let posterior = chain_posterior(code, s, p)?;
    let odd = posterior.p_minus > posterior.p_plus;
    let mut corr = dec.decode(s)?.correction;
    if corr.weight() % 2 == 1 && !odd || corr.weight() % 2 == 0 && odd {
        corr.mul_assign(&code.logical_z)?;
    }
    Ok(MlDecision {
        correction: corr,
        posterior,
        odd,
    })
}

/// Anything that maps a syndrome to a Z correction.
pub trait ZDecoder {
    fn correct(&self, s: &ChainSyndrome) -> Result<BitVec, MlError>;
}

impl ZDecoder for ChainDecoder {
    fn correct(&self, s: &ChainSyndrome) -> Result<BitVec, MlError> {
        Ok(self.decode(s)?.correction.zmask().clone())
    }
}

/// [`ml_decode`] at a fixed error rate.
pub struct MlDecoder<'a> {
    pub dec: &'a ChainDecoder,
    pub p: f64,
}

impl ZDecoder for MlDecoder<'_> {
    fn correct(&self, s: &ChainSyndrome) -> Result<BitVec, MlError> {
        Ok(ml_decode(self.dec, s, self.p)?.correction.zmask().clone())
    }
}

/// Number of failing error patterns of each weight, over all `2^N` patterns.
pub fn failure_counts<D: ZDecoder>(code: &ChainedCode, dec: &D) -> Result<Vec<u64>, MlError> {
    if code.n > MAX_EXACT_QUBITS {
        return Err(MlError::TooManyQubits {
            n: code.n,
            max: MAX_EXACT_QUBITS,
        });
    }
    let mut counts = vec![0u64; code.n + 1];
    for m in 0u64..(1 << code.n) {
        let e = BitVec::from_u64(code.n, m);
        let corr = dec.correct(&ChainSyndrome::of_error(code, &e))?;
        if is_logical_fault(&corr, &e) {
            counts[e.count_ones()] += 1;
        }
    }
    Ok(counts)
}

/// `sum_w counts[w] p^w (1-p)^(N-w)`.
pub fn rate_from_counts(counts: &[u64], p: f64) -> Result<f64, MlError> {
    check_rate(p)?;
    if counts.iter().all(|&c| c == 0) {
        return Ok(0.0);
    }
    Ok(ln_weighted(counts, p).exp())
}

/// Exact probability that `dec` leaves a logical Z, under IID Z errors.
pub fn exact_logical_error_rate<D: ZDecoder>(code: &ChainedCode, dec: &D, p: f64) -> Result<f64, MlError> {
    check_rate(p)?;
    rate_from_counts(&failure_counts(code, dec)?, p)
}
