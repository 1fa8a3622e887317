//! Closed forms for the largest number of T-tetrominoes that fit in an
//! `n × n` square alongside monominoes, and the matching monomino count.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("argument must be positive, got {0}")]
    NonPositive(i64),
}

fn positive(n: i64) -> Result<u64, FormulaError> {
    if n <= 0 {
        Err(FormulaError::NonPositive(n))
    } else {
        Ok(n as u64)
    }
}

/// Maximal T-tetromino count for the `n × n` square.
pub fn max_t_count(n: i64) -> Result<u64, FormulaError> {
    let n = positive(n)?;
    if n == 1 {
        // the closed form gives -1 here
        return Ok(0);
    }
    let sq = n * n;
    Ok(match n % 4 {
        0 => sq / 4,
        2 => sq / 4 - 1,
        _ => (sq - 1) / 4 - 1,
    })
}

/// Least number of monominoes in a tiling of the `n × n` square.
pub fn min_monomino_count(n: i64) -> Result<u64, FormulaError> {
    let n = positive(n)?;
    Ok(match n {
        1 => 1,
        _ if n % 4 == 0 => 0,
        _ if n % 4 == 2 => 4,
        _ => 5,
    })
}

/// Area of `A_{2m+1}`. Panics if the two forms of the area disagree, which
/// would mean an arithmetic bug rather than bad input.
pub fn a_n_area(m: i64) -> Result<u64, FormulaError> {
    let m = positive(m)?;
    let n = 2 * m + 1;
    let area = n * n - 4;
    assert_eq!(area, 4 * (m * m + m - 1) + 1, "A_n area identity failed at m = {m}");
    Ok(area)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SquareSummary {
    pub n: u64,
    pub max_t: u64,
    pub min_mono: u64,
    pub residue: u64,
}

pub fn summary(n: i64) -> Result<SquareSummary, FormulaError> {
    let max_t = max_t_count(n)?;
    let min_mono = min_monomino_count(n)?;
    let n = n as u64;
    Ok(SquareSummary {
        n,
        max_t,
        min_mono,
        residue: n % 4,
    })
}

/// Summaries for `1..=limit`.
pub fn sequence(limit: u64) -> Vec<SquareSummary> {
    (1..=limit as i64).map(|n| summary(n).expect("n is positive")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(max_t_count(4), Ok(4));
        assert_eq!(max_t_count(6), Ok(8));
        assert_eq!(max_t_count(1), Ok(0));
        assert_eq!(min_monomino_count(8), Ok(0));
        assert_eq!(min_monomino_count(10), Ok(4));
        assert_eq!(min_monomino_count(9), Ok(5));
        assert_eq!(min_monomino_count(1), Ok(1));
        assert_eq!(a_n_area(1), Ok(5));
        assert_eq!(a_n_area(2), Ok(21));
        assert_eq!(a_n_area(10), Ok(437));
    }

    #[test]
    fn rejects_non_positive() {
        assert!(max_t_count(0).is_err());
        assert!(min_monomino_count(-3).is_err());
        assert!(a_n_area(0).is_err());
    }

    #[test]
    fn area_balance() {
        for s in sequence(10_000) {
            assert_eq!(4 * s.max_t + s.min_mono, s.n * s.n, "n = {}", s.n);
            assert_eq!(s.residue, s.n % 4);
        }
    }

    #[test]
    fn sequence_prefix() {
        let got: Vec<u64> = sequence(12).iter().map(|s| s.max_t).collect();
        assert_eq!(got, vec![0, 0, 1, 4, 5, 8, 11, 16, 19, 24, 29, 36]);
    }
}
