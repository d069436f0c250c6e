//! Single-column tableaux: strictly increasing tuples from `{1..n}`, their
//! `t`-admissibility condition, enumeration, and the bijection with
//! admissible lattice paths.

use std::fmt;

use crate::array::TriangleSpec;
use crate::error::{Error, Result};
use crate::lattice::{check_enumeration, for_each_combination, NEPath, Step, DEFAULT_ENUMERATION_CAP};

/// A strictly increasing tuple `T_1 < ... < T_k` with entries in `{1..n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnarTableau {
    n: u32,
    entries: Vec<u32>,
}

impl ColumnarTableau {
    pub fn new(n: u32, entries: Vec<u32>) -> Result<Self> {
        if entries.first().is_some_and(|&e| e < 1) {
            return Err(Error::InvalidTableau(format!("entries start at 1, got {}", entries[0])));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTableau("entries must be strictly increasing".into()));
        }
        if entries.last().is_some_and(|&e| e > n) {
            return Err(Error::InvalidTableau(format!("entries must not exceed n = {n}")));
        }
        Ok(ColumnarTableau { n, entries })
    }

    /// Parses `"1,2,3,5,7"`; the empty string is the empty tableau.
    pub fn parse(n: u32, s: &str) -> Result<Self> {
        let s = s.trim();
        let entries = if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad tableau entry {p:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(n, entries)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// `T_{t-1+j} >= t-1+2j` for every `j` in `1..=k-t+1` (vacuous when
    /// `t - 1 >= k`).
    pub fn is_admissible(&self, spec: TriangleSpec) -> bool {
        let t = spec.t() as usize;
        let k = self.k();
        if t - 1 >= k {
            return true;
        }
        (1..=k - t + 1).all(|j| self.entries[t + j - 2] as usize >= t - 1 + 2 * j)
    }
}

impl fmt::Display for ColumnarTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub fn is_admissible_tableau(tableau: &ColumnarTableau, spec: TriangleSpec) -> bool {
    tableau.is_admissible(spec)
}

/// All `t`-admissible `(n, k)`-tableaux in ascending lexicographic order.
pub fn enumerate_tableaux(spec: TriangleSpec, n: i64, k: i64) -> Result<Vec<ColumnarTableau>> {
    enumerate_tableaux_capped(spec, n, k, Some(DEFAULT_ENUMERATION_CAP))
}

pub fn enumerate_tableaux_capped(
    spec: TriangleSpec,
    n: i64,
    k: i64,
    cap: Option<u64>,
) -> Result<Vec<ColumnarTableau>> {
    check_enumeration(n, k, cap)?;
    let mut out = Vec::new();
    for_each_combination(n as usize, k as usize, |c| {
        let tableau = ColumnarTableau {
            n: n as u32,
            entries: c.iter().map(|&e| e as u32).collect(),
        };
        if tableau.is_admissible(spec) {
            out.push(tableau);
        }
    });
    Ok(out)
}

/// `phi`: the tableau `(x_i + y_i)` read off the east-step endpoints of a
/// `t`-admissible `(n, k)`-path. `n` is the path length.
pub fn phi(path: &NEPath, spec: TriangleSpec) -> Result<ColumnarTableau> {
    if !path.is_admissible(spec) {
        return Err(Error::InadmissiblePath {
            t: spec.t(),
            path: path.to_string(),
        });
    }
    let entries = path
        .horizontal_endpoints()
        .into_iter()
        .map(|(x, y)| (x + y) as u32)
        .collect();
    ColumnarTableau::new(path.len() as u32, entries)
}

/// Like [`phi`], but also checks that the path is an `(n, k)`-path.
pub fn phi_checked(path: &NEPath, spec: TriangleSpec, n: i64, k: i64) -> Result<ColumnarTableau> {
    let (x, y) = path.endpoint();
    if x != k || y != n - k {
        return Err(Error::WrongEndpoint {
            path: path.to_string(),
            n,
            k,
            y: n - k,
        });
    }
    phi(path, spec)
}

/// `psi`: the path whose `i`-th east step ends at `(i, T_i - i)`, closed off
/// with north steps up to `(k, n - k)`.
pub fn psi(tableau: &ColumnarTableau, spec: TriangleSpec) -> Result<NEPath> {
    if !tableau.is_admissible(spec) {
        return Err(Error::InadmissibleTableau {
            t: spec.t(),
            tableau: tableau.to_string(),
        });
    }
    let k = tableau.k() as u32;
    let mut steps = Vec::with_capacity(tableau.n as usize);
    let mut height = 0u32;
    for (i, &value) in (1u32..).zip(&tableau.entries) {
        let y = value - i;
        steps.extend(std::iter::repeat(Step::North).take((y - height) as usize));
        steps.push(Step::East);
        height = y;
    }
    steps.extend(std::iter::repeat(Step::North).take((tableau.n - k - height) as usize));
    Ok(NEPath::new(steps))
}
