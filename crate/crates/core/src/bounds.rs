//! Necessary and sufficient conditions on `[[n, k, 2t+1]]` parameters.
//!
//! Every integer predicate here is evaluated in exact arithmetic, so results
//! never depend on floating-point rounding.

use std::fmt;

use crate::combinatorics::{pow2, syndromes_needed};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Hamming,
    GilbertVarshamov,
    Singleton,
    Pure,
}

impl BoundKind {
    pub const ALL: [BoundKind; 4] = [
        BoundKind::Hamming,
        BoundKind::GilbertVarshamov,
        BoundKind::Singleton,
        BoundKind::Pure,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            BoundKind::Hamming => "hamming",
            BoundKind::GilbertVarshamov => "gilbert_varshamov",
            BoundKind::Singleton => "singleton",
            BoundKind::Pure => "pure",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::Domain(format!("k = {k} exceeds n = {n}")));
    }
    Ok(())
}

fn check_hamming_domain(n: usize, k: usize, t: usize) -> Result<()> {
    check_k(n, k)?;
    if t > n {
        return Err(Error::Domain(format!("t = {t} exceeds n = {n}")));
    }
    Ok(())
}

/// Quantum Hamming bound: `2^(n-k) >= sum_{i<=t} 3^i C(n, i)`.
pub fn hamming_satisfied(n: usize, k: usize, t: usize) -> Result<bool> {
    check_hamming_domain(n, k, t)?;
    Ok(pow2(n - k) >= syndromes_needed(n, t))
}

/// True when the Hamming bound holds with equality.
pub fn hamming_is_perfect(n: usize, k: usize, t: usize) -> Result<bool> {
    check_hamming_domain(n, k, t)?;
    Ok(pow2(n - k) == syndromes_needed(n, t))
}

/// Gilbert-Varshamov condition: `2^(n-k) <= sum_{i<=2t} 3^i C(n, i)`.
pub fn gilbert_varshamov_satisfied(n: usize, k: usize, t: usize) -> Result<bool> {
    check_k(n, k)?;
    if 2 * t > n {
        return Err(Error::Domain(format!("2t = {} exceeds n = {n}", 2 * t)));
    }
    Ok(pow2(n - k) <= syndromes_needed(n, 2 * t))
}

/// Quantum Singleton bound: `k <= n - 4t`.
pub fn singleton_satisfied(n: usize, k: usize, t: usize) -> Result<bool> {
    check_k(n, k)?;
    Ok(k as i128 <= n as i128 - 4 * t as i128)
}

/// Pure-code bound: `k <= n - 2d + 2`.
pub fn pure_bound_satisfied(n: usize, k: usize, d: usize) -> Result<bool> {
    check_k(n, k)?;
    if d == 0 {
        return Err(Error::Domain("d must be at least 1".into()));
    }
    Ok(k as i128 <= n as i128 - 2 * d as i128 + 2)
}

/// Binary entropy in bits, with `H2(0) = H2(1) = 0`.
pub fn binary_entropy(x: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    term(x) + term(1.0 - x)
}

/// Asymptotic achievable rate `1 - 2 H2(x)` for `x = 2t/n`.
pub fn asymptotic_rate(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} is outside [0, 1]")));
    }
    Ok(1.0 - 2.0 * binary_entropy(x))
}

/// Largest `k` allowed by the Hamming bound, or `None` if even `k = 0` fails.
pub fn max_k_hamming(n: usize, t: usize) -> Result<Option<usize>> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    check_hamming_domain(n, 0, t)?;
    let needed = syndromes_needed(n, t);
    // The required redundancy n - k is the bit length of needed - 1.
    let redundancy = (needed - 1u32).bits() as usize;
    Ok(n.checked_sub(redundancy))
}

/// Least-squares line through `(n, k)` points, evaluated at `target_n` and
/// rounded half away from zero.
pub fn extrapolate_k(points: &[(usize, usize)], target_n: usize) -> Result<i64> {
    let (slope, intercept) = fit_line(points)?;
    Ok((slope * target_n as f64 + intercept).round() as i64)
}

/// Ordinary least-squares fit `k = slope * n + intercept`.
pub fn fit_line(points: &[(usize, usize)]) -> Result<(f64, f64)> {
    if points.len() < 2 {
        return Err(Error::Domain(format!(
            "need at least two points, got {}",
            points.len()
        )));
    }
    let m = points.len() as f64;
    let mean_x = points.iter().map(|&(x, _)| x as f64).sum::<f64>() / m;
    let mean_y = points.iter().map(|&(_, y)| y as f64).sum::<f64>() / m;
    let (sxx, sxy) = points.iter().fold((0.0, 0.0), |(sxx, sxy), &(x, y)| {
        let dx = x as f64 - mean_x;
        (sxx + dx * dx, sxy + dx * (y as f64 - mean_y))
    });
    if sxx == 0.0 {
        return Err(Error::DegenerateFit(points[0].0));
    }
    let slope = sxy / sxx;
    Ok((slope, mean_y - slope * mean_x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hamming_examples() {
        assert!(hamming_satisfied(5, 1, 1).unwrap());
        assert!(hamming_is_perfect(5, 1, 1).unwrap());
        assert!(hamming_is_perfect(21, 15, 1).unwrap());
        assert!(hamming_is_perfect(85, 77, 1).unwrap());
        assert!(!hamming_satisfied(3, 1, 1).unwrap());
        assert!(hamming_satisfied(8, 3, 1).unwrap());
        assert!(!hamming_is_perfect(8, 3, 1).unwrap());
        for n in 1..50 {
            assert!(hamming_satisfied(n, n, 0).unwrap());
            assert!(hamming_is_perfect(n, n, 0).unwrap());
        }
    }

    #[test]
    fn hamming_domain_errors() {
        assert!(hamming_satisfied(5, 6, 1).is_err());
        assert!(hamming_satisfied(5, 1, 6).is_err());
        assert!(hamming_is_perfect(5, 6, 1).is_err());
    }

    #[test]
    fn gilbert_varshamov_examples() {
        assert!(gilbert_varshamov_satisfied(5, 1, 1).unwrap());
        assert!(gilbert_varshamov_satisfied(7, 7, 0).unwrap());
        assert!(!gilbert_varshamov_satisfied(64, 1, 1).unwrap());
        assert!(gilbert_varshamov_satisfied(5, 1, 3).is_err());
    }

    #[test]
    fn singleton_and_pure_examples() {
        assert!(singleton_satisfied(5, 1, 1).unwrap());
        assert!(singleton_satisfied(9, 9, 0).unwrap());
        assert!(!singleton_satisfied(7, 1, 2).unwrap());
        assert!(pure_bound_satisfied(5, 1, 3).unwrap());
        assert!(pure_bound_satisfied(9, 9, 1).unwrap());
        assert!(!pure_bound_satisfied(8, 5, 3).unwrap());
        assert!(pure_bound_satisfied(8, 9, 3).is_err());
        assert!(pure_bound_satisfied(8, 1, 0).is_err());
    }

    #[test]
    fn asymptotic_rate_examples() {
        assert_eq!(asymptotic_rate(0.0).unwrap(), 1.0);
        assert_eq!(asymptotic_rate(1.0).unwrap(), 1.0);
        assert!((asymptotic_rate(0.5).unwrap() + 1.0).abs() < 1e-15);
        // 1 - 2 H2(0.1), H2(0.1) = 0.468995593589281...
        assert!((asymptotic_rate(0.1).unwrap() - 0.062008812821437).abs() < 1e-12);
        assert!(asymptotic_rate(-0.01).is_err());
        assert!(asymptotic_rate(1.01).is_err());
        assert!(asymptotic_rate(f64::NAN).is_err());
    }

    #[test]
    fn max_k_examples() {
        assert_eq!(max_k_hamming(64, 2).unwrap(), Some(49));
        assert_eq!(max_k_hamming(256, 2).unwrap(), Some(237));
        assert_eq!(max_k_hamming(170, 2).unwrap(), Some(153));
        assert_eq!(max_k_hamming(256, 3).unwrap(), Some(229));
        assert_eq!(max_k_hamming(170, 1).unwrap(), Some(161));
        assert_eq!(max_k_hamming(5, 1).unwrap(), Some(1));
        assert_eq!(max_k_hamming(4, 1).unwrap(), Some(0));
        assert_eq!(max_k_hamming(3, 1).unwrap(), None);
        assert_eq!(max_k_hamming(7, 0).unwrap(), Some(7));
        assert!(max_k_hamming(0, 0).is_err());
        assert!(max_k_hamming(3, 4).is_err());
    }

    #[test]
    fn max_k_agrees_with_descending_scan() {
        for n in 1..=200usize {
            for t in 0..=4usize.min(n) {
                let scan = (0..=n).rev().find(|&k| hamming_satisfied(n, k, t).unwrap());
                assert_eq!(max_k_hamming(n, t).unwrap(), scan, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn extrapolation_examples() {
        let t2 = [
            (14, 3),
            (16, 5),
            (17, 6),
            (27, 15),
            (39, 26),
            (83, 68),
            (118, 102),
        ];
        assert_eq!(extrapolate_k(&t2, 170).unwrap(), 151);
        assert!((extrapolate_k(&t2, 256).unwrap() - 233).abs() <= 1);
        let t3 = [
            (20, 3),
            (22, 5),
            (28, 11),
            (36, 18),
            (59, 39),
            (94, 72),
            (121, 98),
        ];
        assert!((extrapolate_k(&t3, 256).unwrap() - 223).abs() <= 1);
        assert_eq!(extrapolate_k(&[(1, 1), (2, 2)], 10).unwrap(), 10);
        assert_eq!(
            extrapolate_k(&[(4, 1), (4, 2)], 10).unwrap_err(),
            Error::DegenerateFit(4)
        );
        assert!(extrapolate_k(&[(4, 1)], 10).is_err());
    }

    #[test]
    fn hamming_implies_singleton_and_pure_coincides() {
        for n in 1..=256usize {
            for t in 0..=5usize.min(n) {
                for k in 0..=n {
                    let singleton = singleton_satisfied(n, k, t).unwrap();
                    if hamming_satisfied(n, k, t).unwrap() {
                        assert!(singleton, "n={n} k={k} t={t}");
                    }
                    assert_eq!(singleton, pure_bound_satisfied(n, k, 2 * t + 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn max_k_monotone() {
        for n in 1..=256usize {
            for t in 0..5usize.min(n) {
                let a = max_k_hamming(n, t).unwrap();
                let b = max_k_hamming(n, t + 1).unwrap();
                assert!(b <= a, "n={n} t={t}");
            }
        }
        for t in 0..=5usize {
            let mut previous = None;
            for n in t.max(1)..=256usize {
                let k = max_k_hamming(n, t).unwrap();
                assert!(k >= previous, "n={n} t={t}");
                previous = k;
            }
        }
    }

    proptest! {
        #[test]
        fn rate_is_symmetric(x in 0.0f64..=1.0) {
            let a = asymptotic_rate(x).unwrap();
            let b = asymptotic_rate(1.0 - x).unwrap();
            prop_assert!((a - b).abs() < 1e-12);
            prop_assert!((-1.0 - 1e-12..=1.0).contains(&a));
        }
    }
}
