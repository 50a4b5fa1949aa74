//! Block success probability, efficiency and the leftover-syndrome budget.
//!
//! Each qubit independently suffers one of the three Pauli errors with
//! probability `p / 3`, so the number of erroneous qubits in a block of `n` is
//! binomially distributed with parameter `p`. A code of depth `t` succeeds
//! when at most `t` qubits err.
//!
//! Binomials are exact integers. Each weight term is evaluated in the log
//! domain and the terms are summed smallest first with compensation, which
//! keeps the relative error near `1e-14` for the block lengths of interest.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use crate::code_model::CodeParams;
use crate::combinatorics::{binomial, compensated_sum, ln_big, pow2, ratio_big, syndromes_needed};
use crate::error::{Error, Result};
use crate::grid::Grid;

/// Total per-qubit Pauli error probability `p` in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ErrorProbability(f64);

impl ErrorProbability {
    pub fn new(p: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&p) {
            Ok(Self(p))
        } else {
            Err(Error::Domain(format!(
                "error probability {p} is outside [0, 1]"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for ErrorProbability {
    type Error = Error;

    fn try_from(p: f64) -> Result<Self> {
        Self::new(p)
    }
}

impl From<ErrorProbability> for f64 {
    fn from(p: ErrorProbability) -> f64 {
        p.0
    }
}

/// Yields `(i, C(n, i) (1-p)^(n-i) p^i)` for `i` in `range`.
fn weight_terms(
    n: usize,
    p: ErrorProbability,
    range: std::ops::RangeInclusive<usize>,
) -> impl Iterator<Item = f64> {
    let p = p.value();
    let ln_p = p.ln();
    let ln_q = (-p).ln_1p();
    let start = *range.start();
    let mut binom = binomial(n, start);
    range.map(move |i| {
        let term = if p == 0.0 {
            if i == 0 {
                1.0
            } else {
                0.0
            }
        } else if p == 1.0 {
            if i == n {
                1.0
            } else {
                0.0
            }
        } else {
            (ln_big(&binom) + (n - i) as f64 * ln_q + i as f64 * ln_p).exp()
        };
        if i < n {
            binom = &binom * (n - i) / (i + 1);
        }
        term
    })
}

/// Probability that exactly `i` of `n` qubits err, for `i = 0..=n`.
pub fn weight_distribution(n: usize, p: ErrorProbability) -> Vec<f64> {
    weight_terms(n, p, 0..=n).collect()
}

/// Probability of exactly `i` errors in a block of `n`.
pub fn weight_probability(n: usize, i: usize, p: ErrorProbability) -> Result<f64> {
    if i > n {
        return Err(Error::Domain(format!("error weight {i} exceeds n = {n}")));
    }
    Ok(weight_terms(n, p, i..=i).next().unwrap_or(0.0))
}

/// Probability that at most `t` of `n` qubits err.
pub fn success_probability(n: usize, t: usize, p: ErrorProbability) -> Result<f64> {
    if t > n {
        return Err(Error::Domain(format!("t = {t} exceeds n = {n}")));
    }
    if t == n {
        return Ok(1.0);
    }
    Ok(compensated_sum(weight_terms(n, p, 0..=t).collect()).min(1.0))
}

/// Probability that more than `t` of `n` qubits err, summed directly so that
/// it stays accurate when it is far below machine epsilon.
pub fn failure_probability(n: usize, t: usize, p: ErrorProbability) -> Result<f64> {
    if t > n {
        return Err(Error::Domain(format!("t = {t} exceeds n = {n}")));
    }
    if t == n {
        return Ok(0.0);
    }
    Ok(compensated_sum(weight_terms(n, p, t + 1..=n).collect()).min(1.0))
}

/// Logical qubits delivered per physical qubit, `P k / n`.
pub fn efficiency(code: &CodeParams, p: ErrorProbability) -> f64 {
    let success = success_probability(code.n(), code.t(), p).expect("CodeParams guarantees t <= n");
    success * code.rate()
}

/// Average fidelity estimate `P + (1 - P) / 2^k`: a failed block is no better
/// than a random guess in the `2^k`-dimensional logical space.
pub fn fidelity_estimate(success: f64, k: u32) -> Result<f64> {
    if !(0.0..=1.0).contains(&success) {
        return Err(Error::Domain(format!(
            "success probability {success} is outside [0, 1]"
        )));
    }
    Ok(success + (1.0 - success) * (-(k as f64)).exp2())
}

/// Exact accounting of the syndromes of one code.
#[derive(Debug, Clone, PartialEq)]
pub struct SyndromeBudget {
    pub code: CodeParams,
    /// `2^(n-k)`.
    pub total: BigUint,
    /// Syndromes spent on errors of weight `<= t`.
    pub used: BigUint,
    /// `total - used`.
    pub leftover_r: BigUint,
    /// Number of distinct weight `t+1` errors, `3^(t+1) C(n, t+1)`.
    pub next_order_q: BigUint,
    /// `min(1, r / q)`.
    pub correctable_ratio: f64,
}

impl SyndromeBudget {
    /// Coefficient `c` in the efficiency boost `c (1-p)^(n-t-1) p^(t+1)`.
    ///
    /// Equals `r k / (n 3^(t+1))` whenever `r <= q`.
    pub fn efficiency_boost_coefficient(&self) -> f64 {
        let t = self.code.t();
        let correctable = (&self.leftover_r).min(&self.next_order_q);
        ratio_big(correctable, &BigUint::from(3u32).pow(t as u32 + 1)) * self.code.rate()
    }
}

pub fn syndrome_budget(code: &CodeParams) -> Result<SyndromeBudget> {
    let (n, k, t) = (code.n(), code.k(), code.t());
    let total = pow2(n - k);
    let used = syndromes_needed(n, t);
    if used > total {
        return Err(Error::Budget {
            n,
            k,
            d: code.d(),
            used: used.to_string(),
            total: total.to_string(),
        });
    }
    let leftover_r = &total - &used;
    let next_order_q = BigUint::from(3u32).pow(t as u32 + 1) * binomial(n, t + 1);
    let correctable_ratio = if leftover_r.is_zero() {
        0.0
    } else if leftover_r >= next_order_q {
        // Includes q = 0: nothing of weight t+1 is left to correct.
        1.0
    } else {
        ratio_big(&leftover_r, &next_order_q).min(1.0)
    };
    Ok(SyndromeBudget {
        code: *code,
        total,
        used,
        leftover_r,
        next_order_q,
        correctable_ratio,
    })
}

/// Extra success probability if the leftover syndromes corrected a fraction
/// `min(1, r/q)` of the weight `t+1` errors.
pub fn boost_term(code: &CodeParams, p: ErrorProbability) -> Result<f64> {
    let budget = syndrome_budget(code)?;
    Ok(boost_from_budget(&budget, p))
}

fn boost_from_budget(budget: &SyndromeBudget, p: ErrorProbability) -> f64 {
    let (n, t) = (budget.code.n(), budget.code.t());
    if budget.correctable_ratio == 0.0 || t + 1 > n {
        return 0.0;
    }
    let next = weight_terms(n, p, t + 1..=t + 1).next().unwrap_or(0.0);
    budget.correctable_ratio * next
}

/// Success probability including the boost from leftover syndromes.
pub fn boosted_success_probability(code: &CodeParams, p: ErrorProbability) -> Result<f64> {
    let budget = syndrome_budget(code)?;
    let plain = success_probability(code.n(), code.t(), p)?;
    Ok((plain + boost_from_budget(&budget, p)).min(1.0))
}

pub fn boosted_efficiency(code: &CodeParams, p: ErrorProbability) -> Result<f64> {
    Ok(boosted_success_probability(code, p)? * code.rate())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSample {
    pub p: f64,
    /// Success probability (boosted if the series is).
    pub success: f64,
    pub efficiency: f64,
}

/// A sampled `(p, P, E)` curve for one code.
#[derive(Debug, Clone, PartialEq)]
pub struct EfficiencySeries {
    pub code: CodeParams,
    pub boosted: bool,
    pub samples: Vec<SeriesSample>,
}

pub fn efficiency_series(
    code: &CodeParams,
    grid: &Grid,
    boosted: bool,
) -> Result<EfficiencySeries> {
    let budget = if boosted {
        Some(syndrome_budget(code)?)
    } else {
        None
    };
    let samples = grid
        .points()
        .par_iter()
        .map(|&p| {
            let prob = ErrorProbability::new(p)?;
            let mut success = success_probability(code.n(), code.t(), prob)?;
            if let Some(budget) = &budget {
                success = (success + boost_from_budget(budget, prob)).min(1.0);
            }
            Ok(SeriesSample {
                p,
                success,
                efficiency: success * code.rate(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EfficiencySeries {
        code: *code,
        boosted,
        samples,
    })
}
