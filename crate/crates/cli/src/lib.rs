//! Commands behind the `chaincode` binary.
//!
//! Every command is a function returning its output as a string, so the
//! binary only parses flags and writes files. Outputs depend only on the
//! arguments and the seed.

pub mod mc;
pub mod sims;

use chain::{build_chained, render_chain_svg, ChainedCode, FusionMode};
use colorcode::{build_triangular_488, render_svg};
use decoder::{ChainDecoder, ChainSyndrome, DecodeResult, DecoderError};
use mlcoset::{failure_counts, rate_from_counts, MlError};
use pauli_core::{BitVec, PauliString};
use serde::Serialize;
use verify::{code_report, CodeReport, CssCode, VerifyError};

pub use mc::{run_mc, to_csv, wilson, McConfig, McResult};

/// Largest order accepted by `build` and `render`.
pub const MAX_BUILD_ORDER: usize = 10;

/// Grid used by `mlsweep` when no rates are given.
pub const DEFAULT_P_GRID: [f64; 5] = [1e-3, 3e-3, 1e-2, 3e-2, 1e-1];

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Decoder(#[from] DecoderError),
    #[error(transparent)]
    Ml(#[from] MlError),
    #[error(transparent)]
    Stabsim(#[from] stabsim::StabsimError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Io(String),
    #[error("thread pool: {0}")]
    Threads(String),
}

fn check_order(t: usize) -> Result<(), CliError> {
    if t > MAX_BUILD_ORDER {
        return Err(CliError::Invalid(format!("order {t} is above the limit {MAX_BUILD_ORDER}")));
    }
    Ok(())
}

pub fn build_code(t: usize, fusion: FusionMode) -> Result<ChainedCode, CliError> {
    check_order(t)?;
    Ok(build_chained(t, fusion))
}

/// `ChainedCode` JSON with a trailing newline.
pub fn cmd_build(t: usize, fusion: FusionMode) -> Result<String, CliError> {
    Ok(build_code(t, fusion)?.to_json() + "\n")
}

/// Chain drawing, or a single `D_t` lattice when `single` is set.
pub fn cmd_render(t: usize, fusion: FusionMode, single: bool) -> Result<String, CliError> {
    check_order(t)?;
    Ok(if single {
        render_svg(&build_triangular_488(t), 20.0)
    } else {
        render_chain_svg(&build_chained(t, fusion), 20.0)
    })
}

/// Search radii used by `verify` when none are given: the expected
/// distance (capped at 4) for Z, the full X distance when `n <= 20`.
pub fn default_radii(t: usize, n: usize) -> (usize, usize) {
    let z = (2 * t + 1).min(4);
    let x = if n <= 20 { 2 * (t + 1) * (t + 1) - 1 } else { 4 };
    (z, x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOutput {
    pub code: String,
    pub t: usize,
    pub z_radius: usize,
    pub x_radius: usize,
    #[serde(flatten)]
    pub report: CodeReport,
}

pub fn verify_report(
    t: usize,
    fusion: FusionMode,
    single: bool,
    radii: (Option<usize>, Option<usize>),
) -> Result<VerifyOutput, CliError> {
    check_order(t)?;
    let (name, css) = if single {
        (format!("D_{t}"), CssCode::from(&build_triangular_488(t)))
    } else {
        (format!("T_{t}"), CssCode::from(&build_chained(t, fusion)))
    };
    let (dz, dx) = default_radii(t, css.n);
    let (z_radius, x_radius) = (radii.0.unwrap_or(dz), radii.1.unwrap_or(dx));
    let report = code_report(&css, z_radius, x_radius)?;
    Ok(VerifyOutput {
        code: name,
        t,
        z_radius,
        x_radius,
        report,
    })
}

pub fn cmd_verify(
    t: usize,
    fusion: FusionMode,
    single: bool,
    radii: (Option<usize>, Option<usize>),
) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(&verify_report(t, fusion, single, radii)?)? + "\n")
}

/// Parses hex into `len` bits, most significant bit of the first digit
/// first. Padding bits past `len` must be zero.
pub fn parse_hex_bits(s: &str, len: usize) -> Result<BitVec, CliError> {
    let s = s.trim().trim_start_matches("0x");
    let digits = len.div_ceil(4);
    if s.len() != digits {
        return Err(CliError::Invalid(format!("expected {digits} hex digits for {len} bits, got {:?}", s)));
    }
    let mut out = BitVec::zeros(len);
    for (k, c) in s.chars().enumerate() {
        let v = c
            .to_digit(16)
            .ok_or_else(|| CliError::Invalid(format!("bad hex digit {c:?}")))?;
        for j in 0..4 {
            let bit = v >> (3 - j) & 1 == 1;
            let i = 4 * k + j;
            if i < len {
                out.set(i, bit);
            } else if bit {
                return Err(CliError::Invalid(format!("hex {s:?} sets bits past {len}")));
            }
        }
    }
    Ok(out)
}

/// Inverse of [`parse_hex_bits`].
pub fn to_hex_bits(b: &BitVec) -> String {
    (0..b.len().div_ceil(4))
        .map(|k| {
            let v = (0..4).fold(0u32, |acc, j| {
                let i = 4 * k + j;
                acc << 1 | u32::from(i < b.len() && b.get(i))
            });
            char::from_digit(v, 16).expect("nibble")
        })
        .collect()
}

/// An error pattern as a Pauli string over {I, Z} or a comma-separated
/// list of qubit ids.
pub fn parse_error(code: &ChainedCode, s: &str) -> Result<BitVec, CliError> {
    let s = s.trim();
    if s.chars().all(|c| matches!(c, 'I' | 'Z')) && !s.is_empty() {
        let p: PauliString = s.parse().map_err(|e| CliError::Invalid(format!("{e}")))?;
        if p.n() != code.n {
            return Err(CliError::Invalid(format!("error has {} qubits, code has {}", p.n(), code.n)));
        }
        return Ok(p.zmask().clone());
    }
    let mut e = BitVec::zeros(code.n);
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let q: usize = part
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("bad qubit id {part:?}")))?;
        if q >= code.n {
            return Err(CliError::Invalid(format!("qubit {q} is outside 0..{}", code.n)));
        }
        e.flip(q);
    }
    Ok(e)
}

pub enum DecodeInput<'a> {
    /// Hex type-F syndrome per bilayer and hex type-B bits.
    Syndrome { type_f: &'a [String], type_b: &'a str },
    Error(&'a str),
}

pub fn parse_syndrome(code: &ChainedCode, type_f: &[String], type_b: &str) -> Result<ChainSyndrome, CliError> {
    if type_f.len() != code.t {
        return Err(CliError::Invalid(format!("expected {} type-F syndromes, got {}", code.t, type_f.len())));
    }
    let f = type_f
        .iter()
        .zip(&code.type_f)
        .map(|(h, gens)| parse_hex_bits(h, gens.len()))
        .collect::<Result<_, _>>()?;
    Ok(ChainSyndrome {
        type_f: f,
        type_b: parse_hex_bits(type_b, code.t)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HexSyndrome {
    pub type_f: Vec<String>,
    pub type_b: String,
}

impl From<&ChainSyndrome> for HexSyndrome {
    fn from(s: &ChainSyndrome) -> Self {
        HexSyndrome {
            type_f: s.type_f.iter().map(to_hex_bits).collect(),
            type_b: to_hex_bits(&s.type_b),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecodeOutput {
    pub t: usize,
    pub syndrome: ChainSyndrome,
    /// The syndrome in the hex form accepted by `decode`.
    pub syndrome_hex: HexSyndrome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<PauliString>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub logical_fault: Option<bool>,
    pub result: DecodeResult,
}

pub fn decode_input(t: usize, fusion: FusionMode, input: DecodeInput<'_>) -> Result<DecodeOutput, CliError> {
    let code = build_code(t, fusion)?;
    let dec = ChainDecoder::new(&code)?;
    let (syndrome, error) = match input {
        DecodeInput::Syndrome { type_f, type_b } => (parse_syndrome(&code, type_f, type_b)?, None),
        DecodeInput::Error(s) => {
            let e = parse_error(&code, s)?;
            (ChainSyndrome::of_error(&code, &e), Some(e))
        }
    };
    let result = dec.decode(&syndrome)?;
    let logical_fault = error
        .as_ref()
        .map(|e| decoder::is_logical_fault(result.correction.zmask(), e));
    Ok(DecodeOutput {
        t,
        syndrome_hex: HexSyndrome::from(&syndrome),
        syndrome,
        error: error.map(|e| PauliString::pure(pauli_core::PauliType::Z, e)),
        logical_fault,
        result,
    })
}

pub fn cmd_decode(t: usize, fusion: FusionMode, input: DecodeInput<'_>) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(&decode_input(t, fusion, input)?)? + "\n")
}

/// One `mlsweep` CSV row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub p: f64,
    pub t: usize,
    pub eps_exact: Option<f64>,
    pub eps_mc: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
}

/// Monte Carlo rates over a grid, with exact rates of the same decoder
/// wherever the code has at most [`mlcoset::MAX_EXACT_QUBITS`] qubits.
pub fn ml_sweep(ts: &[usize], ps: &[f64], shots: u64, seed: u64, fusion: FusionMode) -> Result<Vec<SweepRow>, CliError> {
    let mut rows = Vec::new();
    for &t in ts {
        let code = build_code(t, fusion)?;
        let counts = if code.n <= mlcoset::MAX_EXACT_QUBITS {
            Some(failure_counts(&code, &ChainDecoder::new(&code)?)?)
        } else {
            None
        };
        for &p in ps {
            let r = run_mc(&McConfig { t, p, shots, seed, fusion })?;
            let eps_exact = counts.as_deref().map(|c| rate_from_counts(c, p)).transpose()?;
            rows.push(SweepRow {
                p,
                t,
                eps_exact,
                eps_mc: r.eps,
                ci_low: r.ci_lo,
                ci_high: r.ci_hi,
                seed,
            });
        }
    }
    Ok(rows)
}
