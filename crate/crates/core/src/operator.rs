//! Integer polynomials in the factorial basis `x[j] = x^j / j!`, the operator
//! `D(y) = y' + y''` and its inverse on the span of `x[1], x[2], ...`.
//!
//! In this basis `D` sends `x[1]` to `x[0]` and `x[j]` to `x[j-1] + x[j-2]`
//! for `j >= 2`. The system is triangular with unit diagonal, so the inverse
//! keeps integer coefficients integral.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::array::{BigEntry, TriangleSpec};
use crate::error::{Error, Result};

/// Sparse coefficient map `j -> c_j`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactorialBasisPoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl FactorialBasisPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `x[j]`.
    pub fn basis(j: usize) -> Self {
        Self::from_terms([(j, BigInt::one())])
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (j, c) in terms {
            p.add_term(j, c.into());
        }
        p
    }

    pub fn add_term(&mut self, j: usize, c: BigInt) {
        let slot = self.coeffs.entry(j).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&j);
        }
    }

    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(&j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(j, c)| (*j, c))
    }

    /// Membership in the domain of `D`: no `x[0]` term.
    pub fn in_domain(&self) -> bool {
        !self.coeffs.contains_key(&0)
    }

    pub fn apply_d(&self) -> Result<Self> {
        if !self.in_domain() {
            return Err(Error::OutsideDomain);
        }
        let mut out = Self::zero();
        for (j, c) in self.terms() {
            out.add_term(j - 1, c.clone());
            if j >= 2 {
                out.add_term(j - 2, c.clone());
            }
        }
        Ok(out)
    }

    /// The unique `q` with no `x[0]` term such that `D(q) = self`.
    ///
    /// The coefficient of `x[i]` in `D(q)` is `e[i+1] + e[i+2]`, so solving
    /// from the top index down gives `e[i+1] = c[i] - e[i+2]`.
    pub fn apply_d_inverse(&self) -> Self {
        let Some(top) = self.degree() else {
            return Self::zero();
        };
        let mut out = Self::zero();
        let mut above = BigInt::zero(); // e[i+2]
        for i in (0..=top).rev() {
            let e = self.coeff(i) - &above;
            out.add_term(i + 1, e.clone());
            above = e;
        }
        out
    }
}

impl fmt::Display for FactorialBasisPoly {
    /// Descending term list, e.g. `x[3] - x[2] + x[1]` or `2 * x[4] - x[1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (j, c)) in self.terms().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                (_, s) => write!(f, " {s} ")?,
            }
            let magnitude = c.abs();
            if magnitude.is_one() {
                write!(f, "x[{j}]")?;
            } else {
                write!(f, "{magnitude} * x[{j}]")?;
            }
        }
        Ok(())
    }
}

impl FromStr for FactorialBasisPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in polynomial {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero());
        }
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        // Split into signed terms.
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut poly = Self::zero();
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (coef, basis) = match body.split_once('*') {
                Some((c, b)) => (
                    c.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?,
                    b,
                ),
                None => (BigInt::one(), body),
            };
            let index = basis
                .strip_prefix("x[")
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| bad("expected x[j]"))?
                .parse::<usize>()
                .map_err(|_| bad("bad basis index"))?;
            poly.add_term(index, if negative { -coef } else { coef });
        }
        Ok(poly)
    }
}

pub fn apply_d(p: &FactorialBasisPoly) -> Result<FactorialBasisPoly> {
    p.apply_d()
}

pub fn apply_d_inverse(p: &FactorialBasisPoly) -> FactorialBasisPoly {
    p.apply_d_inverse()
}

fn check_exponent(exponent: i64) -> Result<u32> {
    if exponent < 1 || exponent > u32::MAX as i64 {
        return Err(Error::InvalidExponent(exponent));
    }
    Ok(exponent as u32)
}

/// `D^{-N}(x[t-1])`, by applying the inverse `N` times.
pub fn inverse_power_expansion(spec: TriangleSpec, exponent: i64) -> Result<FactorialBasisPoly> {
    let exponent = check_exponent(exponent)?;
    let mut p = FactorialBasisPoly::basis(spec.t() as usize - 1);
    for _ in 0..exponent {
        p = p.apply_d_inverse();
    }
    Ok(p)
}

/// The values `d_t(i+N-1, i)` for `i = 0..=t+N-2`: coefficient of
/// `x[t-1+N-i]` in `D^{-N}(x[t-1])`, times `(-1)^i`.
pub fn extract_d(spec: TriangleSpec, exponent: i64) -> Result<Vec<BigEntry>> {
    let p = inverse_power_expansion(spec, exponent)?;
    let top = spec.t() as usize - 1 + exponent as usize;
    Ok((0..top)
        .map(|i| {
            let c = p.coeff(top - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(t: i64) -> TriangleSpec {
        TriangleSpec::new(t).unwrap()
    }

    fn poly(s: &str) -> FactorialBasisPoly {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(apply_d(&poly("x[1]")).unwrap(), poly("x[0]"));
        assert_eq!(apply_d(&poly("x[3] - x[2] + x[1]")).unwrap(), poly("x[2]"));
        assert_eq!(apply_d(&poly("x[2]")).unwrap(), poly("x[1] + x[0]"));
        assert_eq!(apply_d(&poly("x[2] + x[0]")), Err(Error::OutsideDomain));
        assert_eq!(apply_d(&FactorialBasisPoly::zero()).unwrap(), FactorialBasisPoly::zero());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(apply_d_inverse(&poly("x[0]")), poly("x[1]"));
        assert_eq!(apply_d_inverse(&poly("x[2]")), poly("x[3] - x[2] + x[1]"));
        let q = poly("x[5] + 2*x[3]");
        assert_eq!(apply_d_inverse(&apply_d(&q).unwrap()), q);
        assert!(apply_d_inverse(&FactorialBasisPoly::zero()).is_zero());
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(
            inverse_power_expansion(spec(3), 1).unwrap(),
            poly("x[3] - x[2] + x[1]")
        );
        assert_eq!(inverse_power_expansion(spec(1), 2).unwrap(), poly("x[2] - x[1]"));
        assert_eq!(inverse_power_expansion(spec(1), 1).unwrap(), poly("x[1]"));
        let p = inverse_power_expansion(spec(4), 3).unwrap();
        let magnitudes: Vec<BigInt> = (1..=6).rev().map(|j| p.coeff(j).abs()).collect();
        assert_eq!(magnitudes, ints(&[1, 3, 6, 10, 14, 14]));
        assert_eq!(inverse_power_expansion(spec(2), 0), Err(Error::InvalidExponent(0)));
        assert!(inverse_power_expansion(spec(2), -4).is_err());
    }

    #[test]
    fn extract_examples() {
        assert_eq!(extract_d(spec(3), 1).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(extract_d(spec(1), 2).unwrap(), ints(&[1, 1]));
        assert_eq!(extract_d(spec(4), 3).unwrap(), ints(&[1, 3, 6, 10, 14, 14]));
        assert!(extract_d(spec(4), 0).is_err());
    }

    #[test]
    fn display_format() {
        assert_eq!(poly("x[3]-x[2]+x[1]").to_string(), "x[3] - x[2] + x[1]");
        assert_eq!(poly("-x[1] + 2*x[4]").to_string(), "2 * x[4] - x[1]");
        assert_eq!(poly("-3 * x[2]").to_string(), "-3 * x[2]");
        assert_eq!(FactorialBasisPoly::zero().to_string(), "0");
        assert_eq!(poly("x[2] - x[2]").to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<FactorialBasisPoly>().is_err());
        assert!("y[2]".parse::<FactorialBasisPoly>().is_err());
        assert!("a*x[2]".parse::<FactorialBasisPoly>().is_err());
        assert!("x[-1]".parse::<FactorialBasisPoly>().is_err());
    }
}
