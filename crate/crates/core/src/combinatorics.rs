//! Exact-integer combinatorics and a few floating-point helpers shared by the
//! bound and probability code.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `C(n, i)` as an exact integer; zero when `i > n`.
pub fn binomial(n: usize, i: usize) -> BigUint {
    if i > n {
        return BigUint::zero();
    }
    let i = i.min(n - i);
    let mut acc = BigUint::one();
    for j in 0..i {
        // acc = C(n, j) here, so the division is exact.
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Number of distinct weight-`i` Pauli errors on `n` qubits, `3^i C(n, i)`.
pub fn error_count(n: usize, i: usize) -> Result<BigUint> {
    if i > n {
        return Err(Error::Domain(format!("error weight {i} exceeds n = {n}")));
    }
    Ok(BigUint::from(3u32).pow(i as u32) * binomial(n, i))
}

/// `sum_{i=0..=depth} 3^i C(n, i)`, the number of syndromes needed to identify
/// every error of weight at most `depth`.
///
/// Terms are generated by the recurrence `a_{i+1} = 3 a_i (n - i) / (i + 1)`;
/// terms with `i > n` vanish.
pub fn syndromes_needed(n: usize, depth: usize) -> BigUint {
    let mut term = BigUint::one();
    let mut sum = BigUint::one();
    for i in 0..depth.min(n) {
        term = term * 3u32 * (n - i) / (i + 1);
        sum += &term;
    }
    sum
}

/// `2^e` as an exact integer.
pub fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

/// Natural logarithm of a positive big integer; `-inf` for zero.
pub fn ln_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Ratio `a / b` of two big integers as `f64`, accurate even when both
/// operands overflow `f64`.
pub fn ratio_big(a: &BigUint, b: &BigUint) -> f64 {
    if a.is_zero() {
        return 0.0;
    }
    if b.is_zero() {
        return f64::INFINITY;
    }
    (ln_big(a) - ln_big(b)).exp()
}

/// Sum of non-negative terms, accumulated smallest first with Neumaier
/// compensation.
pub fn compensated_sum(mut terms: Vec<f64>) -> f64 {
    terms.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for x in terms {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
    }
    sum + carry
}
