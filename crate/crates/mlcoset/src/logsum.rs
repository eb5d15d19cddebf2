//! Sums of probabilities held as natural logarithms.

/// `k * ln(x)` with `0 * ln(0) = 0`.
pub fn ln_pow(ln_x: f64, k: usize) -> f64 {
    if k == 0 {
        0.0
    } else {
        k as f64 * ln_x
    }
}

/// `ln(sum(exp(terms)))`, with the scaled terms added by Neumaier summation.
pub fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for &t in terms {
        let v = (t - max).exp();
        let s = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - s) + v;
        } else {
            comp += (v - s) + sum;
        }
        sum = s;
    }
    max + (sum + comp).ln()
}

/// `ln C(n, k)`.
pub fn ln_binomial(n: usize, k: usize) -> f64 {
    let k = k.min(n - k);
    (0..k).map(|i| ((n - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}
