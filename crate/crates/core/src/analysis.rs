//! Efficiency envelopes over code families, crossover points and the
//! datasets behind the efficiency figures.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::code_model::{CodeParams, CodeRegistry, CodeStatus, RegistryQuery};
use crate::efficiency::{
    boosted_efficiency, efficiency, efficiency_series, EfficiencySeries, ErrorProbability,
};
use crate::error::{Error, Result};
use crate::grid::Grid;

/// Default absolute tolerance of [`exact_crossover`].
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

const MAX_BISECTIONS: usize = 200;

/// Best code of a family at one error probability.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopePoint {
    pub p: f64,
    pub best_code: CodeParams,
    pub efficiency: f64,
}

/// Which efficiency curve a code contributes to an envelope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Curve {
    #[default]
    Plain,
    /// Leftover syndromes spent on weight `t+1` errors.
    Boosted,
}

impl Curve {
    fn eval(self, code: &CodeParams, p: ErrorProbability) -> Result<f64> {
        match self {
            Curve::Plain => Ok(efficiency(code, p)),
            Curve::Boosted => boosted_efficiency(code, p),
        }
    }
}

/// Higher efficiency wins; ties go to the smaller `n`, then the larger `k`.
fn better(a: (&CodeParams, f64), b: (&CodeParams, f64)) -> bool {
    match a.1.total_cmp(&b.1) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => {
            (a.0.n(), std::cmp::Reverse(a.0.k())) < (b.0.n(), std::cmp::Reverse(b.0.k()))
        }
    }
}

/// The best code of `codes` at `p`.
pub fn envelope_at(
    codes: &[CodeParams],
    p: ErrorProbability,
    curve: Curve,
) -> Result<EnvelopePoint> {
    let mut best: Option<(CodeParams, f64)> = None;
    for code in codes {
        let e = curve.eval(code, p)?;
        if best.is_none_or(|(c, be)| better((code, e), (&c, be))) {
            best = Some((*code, e));
        }
    }
    let (best_code, efficiency) = best.ok_or(Error::EmptySet)?;
    Ok(EnvelopePoint {
        p: p.value(),
        best_code,
        efficiency,
    })
}

/// Pointwise maximum of the efficiency curves of `codes` over `grid`.
pub fn envelope(codes: &[CodeParams], grid: &Grid) -> Result<Vec<EnvelopePoint>> {
    envelope_with(codes, grid, Curve::Plain)
}

pub fn envelope_with(
    codes: &[CodeParams],
    grid: &Grid,
    curve: Curve,
) -> Result<Vec<EnvelopePoint>> {
    if codes.is_empty() {
        return Err(Error::EmptySet);
    }
    grid.points()
        .par_iter()
        .map(|&p| envelope_at(codes, ErrorProbability::new(p)?, curve))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossoverMethod {
    Approximate,
    Exact,
}

impl fmt::Display for CrossoverMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossoverMethod::Approximate => "approximate",
            CrossoverMethod::Exact => "exact",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossoverResult {
    pub p_c: f64,
    pub method: CrossoverMethod,
    /// Final sign-change bracket; only for the exact method.
    pub bracket: Option<(f64, f64)>,
}

/// Second-order estimate of where `[[n, k1, 3]]` and `[[n, k2, 5]]` have equal
/// efficiency: `sqrt(2 (k1 - k2) / (k1 n (n - 1)))`.
pub fn approx_crossover(n: usize, k1: usize, k2: usize) -> Result<CrossoverResult> {
    if n < 2 {
        return Err(Error::Domain(format!("n = {n} must be at least 2")));
    }
    if k1 > n || k2 > n {
        return Err(Error::Domain(format!(
            "k1 = {k1}, k2 = {k2} must not exceed n = {n}"
        )));
    }
    if k1 < k2 {
        return Err(Error::Domain(format!(
            "k1 = {k1} < k2 = {k2}: the deeper code is better everywhere, no crossover"
        )));
    }
    let p_c = if k1 == k2 {
        0.0
    } else {
        let (n, k1, k2) = (n as f64, k1 as f64, k2 as f64);
        (2.0 * (k1 - k2) / (k1 * n * (n - 1.0))).sqrt()
    };
    Ok(CrossoverResult {
        p_c,
        method: CrossoverMethod::Approximate,
        bracket: None,
    })
}

/// Bisection for a sign change of `f` on `[lo, hi]`, down to a bracket no
/// wider than `tol`.
///
/// The returned `p_c` is whichever end of the final bracket has the smaller
/// `|f|`. Where `f` is monotone on the bracket that residual never grows when
/// `tol` shrinks.
pub fn bisect<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<CrossoverResult>
where
    F: Fn(f64) -> Result<f64>,
{
    if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) || tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "need lo < hi and tol > 0, got [{lo}, {hi}] and {tol}"
        )));
    }
    let (mut lo, mut hi) = (lo, hi);
    let (mut f_lo, mut f_hi) = (f(lo)?, f(hi)?);
    let exact = |p| CrossoverResult {
        p_c: p,
        method: CrossoverMethod::Exact,
        bracket: Some((p, p)),
    };
    if f_lo.is_nan() || f_hi.is_nan() || (f_lo == 0.0 && f_hi == 0.0) || f_lo * f_hi > 0.0 {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }
    if f_lo == 0.0 {
        return Ok(exact(lo));
    }
    if f_hi == 0.0 {
        return Ok(exact(hi));
    }
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(exact(mid));
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    Ok(CrossoverResult {
        p_c: if f_lo.abs() <= f_hi.abs() { lo } else { hi },
        method: CrossoverMethod::Exact,
        bracket: Some((lo, hi)),
    })
}

/// Error probability in `[lo, hi]` where two codes have equal efficiency.
pub fn exact_crossover(
    a: &CodeParams,
    b: &CodeParams,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<CrossoverResult> {
    bisect(
        |p| {
            let p = ErrorProbability::new(p)?;
            Ok(efficiency(a, p) - efficiency(b, p))
        },
        lo,
        hi,
        tol,
    )
}

/// Error probability in `[lo, hi]` where the envelopes of two code families
/// meet.
pub fn envelope_crossover(
    a: &[CodeParams],
    b: &[CodeParams],
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<CrossoverResult> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    bisect(
        |p| {
            let p = ErrorProbability::new(p)?;
            Ok(envelope_at(a, p, Curve::Plain)?.efficiency
                - envelope_at(b, p, Curve::Plain)?.efficiency)
        },
        lo,
        hi,
        tol,
    )
}

/// Codes of depth `t` with a known construction.
pub fn existing_codes(registry: &CodeRegistry, t: usize) -> Vec<CodeParams> {
    registry
        .codes(&RegistryQuery::depth(t).with_statuses(&[CodeStatus::Existing, CodeStatus::Perfect]))
}

/// Codes of depth `t` whose parameters are only assumed.
pub fn hypothetical_codes(registry: &CodeRegistry, t: usize) -> Vec<CodeParams> {
    registry.codes(
        &RegistryQuery::depth(t)
            .with_statuses(&[CodeStatus::Hypothetical, CodeStatus::Extrapolated]),
    )
}

/// Every code of depth `t`, known or assumed.
pub fn assumed_codes(registry: &CodeRegistry, t: usize) -> Vec<CodeParams> {
    registry.codes(&RegistryQuery::depth(t))
}

/// One named curve of a figure.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedSeries {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureDataset {
    pub figure: u8,
    pub series: Vec<NamedSeries>,
}

impl FigureDataset {
    pub fn get(&self, name: &str) -> Option<&NamedSeries> {
        self.series.iter().find(|s| s.name == name)
    }
}

fn code_label(prefix: &str, code: &CodeParams) -> String {
    format!("{prefix}_{}_{}_{}", code.n(), code.k(), code.d())
}

fn series_of(name: String, series: &EfficiencySeries, success: bool) -> NamedSeries {
    NamedSeries {
        name,
        points: series
            .samples
            .iter()
            .map(|s| (s.p, if success { s.success } else { s.efficiency }))
            .collect(),
    }
}

fn envelope_series(
    name: String,
    codes: &[CodeParams],
    grid: &Grid,
    curve: Curve,
) -> Result<NamedSeries> {
    Ok(NamedSeries {
        name,
        points: envelope_with(codes, grid, curve)?
            .into_iter()
            .map(|e| (e.p, e.efficiency))
            .collect(),
    })
}

fn listed(triples: &[(usize, usize, usize)]) -> Vec<CodeParams> {
    triples
        .iter()
        .map(|&(n, k, d)| CodeParams::new(n, k, d).expect("listed triple is valid"))
        .collect()
}

/// Data behind figure `id`, sampled on `grid`.
///
/// 1. success probability and efficiency of `[[64,56,3]]`, `[[64,48,5]]`, `[[64,43,7]]`
/// 2. efficiency of five short `t = 1` codes
/// 3. envelopes of the assumed `t = 1, 2, 3` families and of the existing `t = 1` codes
/// 4. envelopes of the existing `t = 1, 2, 3` families
/// 5. existing `t = 2` envelope and `[[128,110,5]]`, each plain and boosted
pub fn figure_dataset(id: u8, grid: &Grid, registry: &CodeRegistry) -> Result<FigureDataset> {
    let mut series = Vec::new();
    match id {
        1 => {
            for code in listed(&[(64, 56, 3), (64, 48, 5), (64, 43, 7)]) {
                let s = efficiency_series(&code, grid, false)?;
                series.push(series_of(code_label("P", &code), &s, true));
                series.push(series_of(code_label("E", &code), &s, false));
            }
        }
        2 => {
            for code in listed(&[(5, 1, 3), (8, 3, 3), (17, 11, 3), (40, 33, 3), (85, 77, 3)]) {
                let s = efficiency_series(&code, grid, false)?;
                series.push(series_of(code_label("E", &code), &s, false));
            }
        }
        3 => {
            for t in 1..=3 {
                let codes = assumed_codes(registry, t);
                series.push(envelope_series(
                    format!("assumed_t{t}"),
                    &codes,
                    grid,
                    Curve::Plain,
                )?);
            }
            let codes = existing_codes(registry, 1);
            series.push(envelope_series(
                "existing_t1".into(),
                &codes,
                grid,
                Curve::Plain,
            )?);
        }
        4 => {
            for t in 1..=3 {
                let codes = existing_codes(registry, t);
                series.push(envelope_series(
                    format!("existing_t{t}"),
                    &codes,
                    grid,
                    Curve::Plain,
                )?);
            }
        }
        5 => {
            let codes = existing_codes(registry, 2);
            series.push(envelope_series(
                "existing_t2".into(),
                &codes,
                grid,
                Curve::Plain,
            )?);
            series.push(envelope_series(
                "existing_t2_boosted".into(),
                &codes,
                grid,
                Curve::Boosted,
            )?);
            let code = listed(&[(128, 110, 5)])[0];
            let plain = efficiency_series(&code, grid, false)?;
            let boosted = efficiency_series(&code, grid, true)?;
            series.push(series_of(code_label("E", &code), &plain, false));
            series.push(series_of(
                format!("{}_boosted", code_label("E", &code)),
                &boosted,
                false,
            ));
        }
        other => return Err(Error::UnknownFigure(other)),
    }
    Ok(FigureDataset { figure: id, series })
}
