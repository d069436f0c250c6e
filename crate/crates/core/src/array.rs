//! The truncated Pascal array: the truncation parameter, the extended
//! binomial coefficient, the binomial-difference closed form and rows built
//! from the Pascal recurrence.
//!
//! `row` and `entry` deliberately take different routes (recurrence versus
//! closed form) so that each can check the other.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact value of one array cell.
pub type BigEntry = BigInt;

/// The truncation parameter `t >= 1`: the first row that differs from
/// Pascal's triangle. `t = 1` is the Catalan (ballot number) array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriangleSpec {
    t: u32,
}

impl TriangleSpec {
    pub fn new(t: i64) -> Result<Self> {
        if t < 1 || t > u32::MAX as i64 {
            return Err(Error::InvalidTruncation(t));
        }
        Ok(TriangleSpec { t: t as u32 })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `K(n) = min(floor((n - 1 + t) / 2), n)`; every entry of row `n` past
    /// this column is zero.
    pub fn boundary(&self, n: i64) -> Result<i64> {
        if n < 0 {
            return Err(Error::NegativeRow(n));
        }
        Ok(self.boundary_unchecked(n))
    }

    pub(crate) fn boundary_unchecked(&self, n: i64) -> i64 {
        ((n - 1 + self.t as i64).div_euclid(2)).min(n)
    }

    /// Iterates rows `0, 1, 2, ...` via the recurrence, reusing the previous
    /// row. Use this for sweeps; `row(spec, n)` rebuilds from row 0.
    pub fn rows(&self) -> Rows {
        Rows { spec: *self, next: None }
    }
}

pub fn truncation_boundary(spec: TriangleSpec, n: i64) -> Result<i64> {
    spec.boundary(n)
}

/// One row of the array; `entries[k]` for `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowVector {
    pub n: u64,
    pub entries: Vec<BigEntry>,
}

impl RowVector {
    pub fn odd_count(&self) -> usize {
        self.entries.iter().filter(|e| is_odd(e)).count()
    }
}

pub(crate) fn is_odd(value: &BigInt) -> bool {
    value.bit(0)
}

/// `C(n, k)` for `0 <= k <= n`, zero for every other integer pair.
pub fn binomial(n: i64, k: i64) -> BigEntry {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    BigInt::from(binomial_unsigned(n as u64, k as u64))
}

pub(crate) fn binomial_unsigned(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // acc = C(n - k + i, i) after step i, always an exact division.
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// Raw `C(n, k) - C(n, k - t)`. Not clamped: for `2k > n + t` it can be
/// negative where the array itself is zero.
pub fn closed_form(spec: TriangleSpec, n: i64, k: i64) -> BigEntry {
    binomial(n, k) - binomial(n, k - spec.t as i64)
}

/// `a_t(n, k)`, defined for all integer pairs.
pub fn entry(spec: TriangleSpec, n: i64, k: i64) -> BigEntry {
    if n < 0 || k < 0 || k > spec.boundary_unchecked(n) {
        return BigInt::zero();
    }
    closed_form(spec, n, k)
}

/// Row `n`, built bottom-up from the recurrence.
pub fn row(spec: TriangleSpec, n: i64) -> Result<RowVector> {
    if n < 0 {
        return Err(Error::NegativeRow(n));
    }
    Ok(spec.rows().nth(n as usize).expect("row iterator is infinite"))
}

/// Infinite iterator over the rows of one array.
#[derive(Debug, Clone)]
pub struct Rows {
    spec: TriangleSpec,
    next: Option<RowVector>,
}

impl Iterator for Rows {
    type Item = RowVector;

    fn next(&mut self) -> Option<RowVector> {
        let current = match self.next.take() {
            None => RowVector {
                n: 0,
                entries: vec![BigInt::one()],
            },
            Some(prev) => successor(self.spec, &prev),
        };
        self.next = Some(current.clone());
        Some(current)
    }
}

fn successor(spec: TriangleSpec, prev: &RowVector) -> RowVector {
    let n = prev.n + 1;
    let limit = spec.boundary_unchecked(n as i64) as usize;
    let mut entries = vec![BigInt::zero(); n as usize + 1];
    entries[0] = BigInt::one();
    for k in 1..=limit {
        let mut v = prev.entries[k - 1].clone();
        if let Some(right) = prev.entries.get(k) {
            v += right;
        }
        entries[k] = v;
    }
    RowVector { n, entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(t: i64) -> TriangleSpec {
        TriangleSpec::new(t).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rejects_nonpositive_t() {
        assert_eq!(TriangleSpec::new(0), Err(Error::InvalidTruncation(0)));
        assert!(TriangleSpec::new(-3).is_err());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(truncation_boundary(spec(4), 9).unwrap(), 6);
        assert_eq!(truncation_boundary(spec(4), 2).unwrap(), 2);
        assert_eq!(truncation_boundary(spec(1), 4).unwrap(), 2);
        assert_eq!(truncation_boundary(spec(1), 0).unwrap(), 0);
        assert_eq!(truncation_boundary(spec(1), -1), Err(Error::NegativeRow(-1)));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(7, 5), BigInt::from(21));
        assert_eq!(binomial(7, -1), BigInt::zero());
        assert_eq!(binomial(-3, 0), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(3, 4), BigInt::zero());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(spec(4), 7, 5), BigInt::from(14));
        assert_eq!(closed_form(spec(4), 8, 4), BigInt::from(69));
        assert_eq!(closed_form(spec(1), 4, 3), BigInt::from(-2));
    }

    #[test]
    fn entry_examples() {
        assert_eq!(entry(spec(4), 9, 4), BigInt::from(125));
        assert_eq!(entry(spec(4), 5, 5), BigInt::zero());
        assert_eq!(entry(spec(1), 9, 2), BigInt::from(27));
        assert_eq!(entry(spec(1), 4, 3), BigInt::zero());
        assert_eq!(entry(spec(3), -1, 0), BigInt::zero());
        assert_eq!(entry(spec(3), 4, -2), BigInt::zero());
    }

    #[test]
    fn row_examples() {
        assert_eq!(
            row(spec(4), 9).unwrap().entries,
            ints(&[1, 9, 36, 84, 125, 117, 48, 0, 0, 0])
        );
        assert_eq!(row(spec(1), 0).unwrap().entries, ints(&[1]));
        assert_eq!(row(spec(1), 6).unwrap().entries, ints(&[1, 5, 9, 5, 0, 0, 0]));
        assert_eq!(row(spec(1), -2), Err(Error::NegativeRow(-2)));
    }

    #[test]
    fn row_200_exceeds_u64() {
        let r = row(spec(3), 200).unwrap();
        assert!(r.entries.iter().any(|e| e > &BigInt::from(u64::MAX)));
        assert_eq!(r.entries[100], entry(spec(3), 200, 100));
    }

    #[test]
    fn closed_form_vanishes_on_boundary_line() {
        for t in 1..=6i64 {
            for n in 0..30i64 {
                if (n + t) % 2 == 0 && (n + t) / 2 <= n {
                    assert!(closed_form(spec(t), n, (n + t) / 2).is_zero(), "t={t} n={n}");
                }
            }
        }
    }
}
