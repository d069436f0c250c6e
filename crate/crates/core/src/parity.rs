//! Base-p digits, Lucas's theorem, and odd counts on rows of Pascal's
//! triangle and of its truncations.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::array::{binomial_unsigned, entry, is_odd, row, BigEntry, TriangleSpec};
use crate::error::{Error, Result};

/// Largest base accepted by the digit and Lucas routines.
pub const MAX_PRIME_BASE: u64 = 1_000_000;

/// Trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2u64..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn check_prime(p: u64) -> Result<()> {
    if p > MAX_PRIME_BASE {
        return Err(Error::UnsupportedBase(p));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

/// `m > 0 && m & (m - 1) == 0`.
pub fn is_power_of_two(m: u64) -> bool {
    m > 0 && m & (m - 1) == 0
}

/// Base-`p` expansion of `m`, little-endian. `0` expands to the single
/// digit `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseDigits {
    pub p: u64,
    pub m: u64,
    pub digits: Vec<u64>,
    pub nonzero_positions: Vec<usize>,
    pub count: usize,
}

impl BaseDigits {
    /// `l_p(m)`: index of the leading digit (0 for `m = 0`).
    pub fn leading_index(&self) -> usize {
        self.digits.len() - 1
    }

    fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }
}

pub fn digits(m: u64, p: u64) -> Result<BaseDigits> {
    check_prime(p)?;
    Ok(expand(m, p))
}

fn expand(m: u64, p: u64) -> BaseDigits {
    let mut ds = Vec::new();
    let mut rest = m;
    loop {
        ds.push(rest % p);
        rest /= p;
        if rest == 0 {
            break;
        }
    }
    let nonzero_positions: Vec<usize> = ds
        .iter()
        .enumerate()
        .filter(|(_, &d)| d != 0)
        .map(|(i, _)| i)
        .collect();
    BaseDigits {
        p,
        m,
        count: nonzero_positions.len(),
        digits: ds,
        nonzero_positions,
    }
}

/// `d(m)`: number of ones in the binary expansion.
pub fn binary_digit_count(m: u64) -> u32 {
    m.count_ones()
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// `C(a, b) mod p` for single digits `a, b < p`.
fn small_binomial_mod(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..b {
        num = (num as u128 * ((a - i) % p) as u128 % p as u128) as u64;
        den = (den as u128 * ((i + 1) % p) as u128 % p as u128) as u64;
    }
    // den is a product of factors below p, hence invertible.
    (num as u128 * pow_mod(den, p - 2, p) as u128 % p as u128) as u64
}

/// `C(n, k) mod p` as the product of digitwise binomials.
pub fn binom_mod_p(n: u64, k: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    if k > n {
        return Ok(0);
    }
    let nd = expand(n, p);
    let kd = expand(k, p);
    let l = nd.leading_index().max(kd.leading_index());
    let mut acc = 1u64 % p;
    for i in 0..=l {
        acc = (acc as u128 * small_binomial_mod(nd.digit(i), kd.digit(i), p) as u128 % p as u128)
            as u64;
        if acc == 0 {
            break;
        }
    }
    Ok(acc)
}

/// `C(n, k)` is odd iff the binary digits of `k` are a subset of those of `n`.
pub fn is_odd_binomial(n: u64, k: u64) -> bool {
    n & k == k
}

/// `2^{d(n)}` odd entries on row `n` of Pascal's triangle.
pub fn pascal_row_odd_count(n: u64) -> BigEntry {
    BigInt::one() << binary_digit_count(n)
}

/// Odd entries of Pascal row `n`, counted as the submasks of `n`.
pub fn pascal_row_odd_count_by_subsets(n: u64) -> BigEntry {
    let mut count = 1u64; // the empty submask
    let mut sub = n;
    while sub != 0 {
        count += 1;
        sub = (sub - 1) & n;
    }
    BigInt::from(count)
}

fn check_cell(n: i64, k: i64) -> Result<()> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::OutOfRange { n, k });
    }
    Ok(())
}

/// Parity of `a_t(n, k)` (true = odd). For `t` a power of two this uses
/// `a_t(n, k) ≡ C(n + t, k)` inside the boundary; otherwise the exact entry.
pub fn truncated_parity(spec: TriangleSpec, n: i64, k: i64) -> Result<bool> {
    check_cell(n, k)?;
    if is_power_of_two(spec.t() as u64) {
        Ok(truncated_parity_lucas(spec, n as u64, k as u64))
    } else {
        Ok(is_odd(&entry(spec, n, k)))
    }
}

pub(crate) fn truncated_parity_lucas(spec: TriangleSpec, n: u64, k: u64) -> bool {
    k as i64 <= spec.boundary_unchecked(n as i64) && is_odd_binomial(n + spec.t() as u64, k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OddCountMethod {
    /// Count odd entries of the big-integer row.
    Exact,
    /// `2^{d(n + t) - 1}`; `t` must be a power of two.
    Lucas,
}

/// `2^{d(n + t) - 1}`, the odd count predicted for power-of-two `t`.
pub fn predicted_odd_count(spec: TriangleSpec, n: u64) -> BigEntry {
    BigInt::one() << (binary_digit_count(n + spec.t() as u64) - 1)
}

pub fn truncated_row_odd_count(spec: TriangleSpec, n: i64, method: OddCountMethod) -> Result<BigEntry> {
    if n < 0 {
        return Err(Error::NegativeRow(n));
    }
    match method {
        OddCountMethod::Exact => Ok(BigInt::from(row(spec, n)?.odd_count())),
        OddCountMethod::Lucas => {
            if !is_power_of_two(spec.t() as u64) {
                return Err(Error::NotPowerOfTwo(spec.t()));
            }
            Ok(predicted_odd_count(spec, n as u64))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowOddCount {
    pub n: u64,
    #[serde(serialize_with = "crate::format::ser_decimal")]
    pub count: BigEntry,
    pub is_power_of_two: bool,
    /// `2^{d(n+t)-1}` when `t` is a power of two.
    #[serde(serialize_with = "crate::format::ser_opt_decimal")]
    pub predicted: Option<BigEntry>,
}

/// Per-row odd counts for `n = 0..=n_max` and the aggregate verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddCountReport {
    pub t: u32,
    pub n_max: u64,
    pub t_is_power_of_two: bool,
    pub rows: Vec<RowOddCount>,
    pub all_powers_of_two: bool,
    /// First row whose count is not a power of two.
    pub first_witness: Option<u64>,
    /// Counts equal the prediction on every row (power-of-two `t`), or a
    /// witness row exists (otherwise). Non-power-of-two `t` needs
    /// `n_max >= t` to be guaranteed a witness.
    pub consistent: bool,
}

pub fn odd_count_report(spec: TriangleSpec, n_max: i64) -> Result<OddCountReport> {
    if n_max < 0 {
        return Err(Error::NegativeRow(n_max));
    }
    let t_pow2 = is_power_of_two(spec.t() as u64);
    let rows: Vec<RowOddCount> = spec
        .rows()
        .take(n_max as usize + 1)
        .map(|r| {
            let count = r.odd_count() as u64;
            RowOddCount {
                n: r.n,
                count: BigInt::from(count),
                is_power_of_two: is_power_of_two(count),
                predicted: t_pow2.then(|| predicted_odd_count(spec, r.n)),
            }
        })
        .collect();
    let first_witness = rows.iter().find(|r| !r.is_power_of_two).map(|r| r.n);
    let all_powers_of_two = first_witness.is_none();
    let consistent = if t_pow2 {
        rows.iter().all(|r| r.predicted.as_ref() == Some(&r.count))
    } else {
        first_witness.is_some() || (n_max as u64) < spec.t() as u64
    };
    Ok(OddCountReport {
        t: spec.t(),
        n_max: n_max as u64,
        t_is_power_of_two: t_pow2,
        rows,
        all_powers_of_two,
        first_witness,
        consistent,
    })
}

/// Evaluates `sum_i C(l, i) C(m - l, j - i)` and `C(m, j)` exactly and
/// compares them.
pub fn vandermonde_check(m: u64, l: u64, j: u64) -> Result<bool> {
    if l > m {
        return Err(Error::InvalidSplit { m, l });
    }
    let choose = |a: u64, b: u64| {
        if b > a {
            BigInt::zero()
        } else {
            BigInt::from(binomial_unsigned(a, b))
        }
    };
    let lhs: BigInt = (0..=l.min(j)).map(|i| choose(l, i) * choose(m - l, j - i)).sum();
    Ok(lhs == choose(m, j))
}

/// Square parity grid: bit `(n, k)` is set iff `a_t(n, k)` is odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityBitmap {
    size: usize,
    bits: Vec<Vec<bool>>,
}

impl ParityBitmap {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, n: usize, k: usize) -> bool {
        self.bits[n][k]
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.bits
    }

    /// Plain PBM (`P1`): header, `width height`, one line per row.
    pub fn to_pbm(&self) -> String {
        let mut out = format!("P1\n{} {}\n", self.size, self.size);
        for r in &self.bits {
            let line: Vec<&str> = r.iter().map(|&b| if b { "1" } else { "0" }).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn parity_bitmap(spec: TriangleSpec, rows: i64) -> Result<ParityBitmap> {
    if rows < 1 {
        return Err(Error::InvalidRowCount(rows));
    }
    let size = rows as usize;
    let bits = spec
        .rows()
        .take(size)
        .map(|r| {
            let mut line = vec![false; size];
            for (k, e) in r.entries.iter().enumerate() {
                line[k] = is_odd(e);
            }
            line
        })
        .collect();
    Ok(ParityBitmap { size, bits })
}
