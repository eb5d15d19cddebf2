//! Dense amplitudes for small codes.
//!
//! `|0_L>` is the uniform superposition of `|s>` over the X group applied to
//! `|0...0>`; `|1_L> = X^n |0_L>`. Applying `R_Z(theta) = diag(1, e^{i theta})`
//! on every qubit multiplies amplitude `x` by `e^{i theta |x|}`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use pauli_core::{BitVec, PauliType};

use crate::{CssCode, VerifyError};

pub const MAX_STATEVECTOR_QUBITS: usize = 20;

const TOL: f64 = 1e-9;

fn index(mask: &BitVec) -> usize {
    mask.iter_ones().fold(0, |acc, q| acc | 1 << q)
}

fn logical_zero(code: &CssCode) -> Result<Vec<Complex64>, VerifyError> {
    let group = code.group(PauliType::X);
    let mut amp = vec![Complex64::new(0.0, 0.0); 1 << code.n];
    group.for_each_in_coset(&pauli_core::PauliString::identity(code.n), |x, _| {
        let mut i = 0usize;
        for (w, &word) in x.iter().enumerate() {
            i |= (word as usize) << (64 * w);
        }
        amp[i] += 1.0;
        true
    })?;
    let norm = amp.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    amp.iter_mut().for_each(|a| *a /= norm);
    Ok(amp)
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Relative phase in `[0, 2 pi)` picked up by `|1_L>` against `|0_L>` under
/// transversal `R_Z(angle)`.
pub fn statevector_check(code: &CssCode, angle: f64) -> Result<f64, VerifyError> {
    let n = code.n;
    if n > MAX_STATEVECTOR_QUBITS {
        return Err(VerifyError::TooManyQubits {
            n,
            limit: MAX_STATEVECTOR_QUBITS,
        });
    }
    let zero = logical_zero(code)?;
    let flip = index(&BitVec::ones(n));
    let one: Vec<Complex64> = (0..zero.len()).map(|i| zero[i ^ flip]).collect();
    let rotate = |v: &[Complex64]| -> Vec<Complex64> {
        v.iter()
            .enumerate()
            .map(|(i, a)| a * Complex64::from_polar(1.0, angle * i.count_ones() as f64))
            .collect()
    };
    let (u0, u1) = (rotate(&zero), rotate(&one));
    let a00 = inner(&zero, &u0);
    let a11 = inner(&one, &u1);
    let leak = inner(&one, &u0).norm() + inner(&zero, &u1).norm();
    if (a00.norm() - 1.0).abs() > TOL || (a11.norm() - 1.0).abs() > TOL || leak > TOL {
        return Err(VerifyError::NotLogical);
    }
    let phase = (a11 / a00).arg().rem_euclid(TAU);
    Ok(if TAU - phase < TOL { 0.0 } else { phase })
}
