//! North/east lattice paths from the origin, the `t`-admissibility barrier
//! `y = x - t`, and brute-force enumeration and counting over all
//! `(n, k)`-paths.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::array::{binomial, BigEntry, TriangleSpec};
use crate::error::{Error, Result};

/// Enumeration refuses to visit more than this many candidates by default.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    North,
    East,
}

/// A lattice path from `(0, 0)` made of unit north and east steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NEPath {
    steps: Vec<Step>,
}

impl NEPath {
    pub fn new(steps: Vec<Step>) -> Self {
        NEPath { steps }
    }

    /// Path whose east steps occupy the given 1-based positions, padded with
    /// north steps up to `len`.
    pub(crate) fn from_east_positions(positions: &[usize], len: usize) -> Self {
        let mut steps = vec![Step::North; len];
        for &p in positions {
            steps[p - 1] = Step::East;
        }
        NEPath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `(x, y)` = (number of east steps, number of north steps).
    pub fn endpoint(&self) -> (i64, i64) {
        let x = self.steps.iter().filter(|s| **s == Step::East).count() as i64;
        (x, self.steps.len() as i64 - x)
    }

    /// Every lattice point the path visits, origin included.
    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        let mut pos = (0i64, 0i64);
        std::iter::once(pos).chain(self.steps.iter().map(move |s| {
            match s {
                Step::North => pos.1 += 1,
                Step::East => pos.0 += 1,
            }
            pos
        }))
    }

    /// Endpoints `(x_i, y_i)` of the east steps, in order.
    pub fn horizontal_endpoints(&self) -> Vec<(i64, i64)> {
        self.points()
            .zip(self.steps.iter())
            .filter(|(_, s)| **s == Step::East)
            .map(|((x, y), _)| (x + 1, y))
            .collect()
    }

    /// True iff every visited point satisfies `y > x - t`, i.e. the path never
    /// meets the line `y = x - t`.
    pub fn is_admissible(&self, spec: TriangleSpec) -> bool {
        let t = spec.t() as i64;
        self.points().all(|(x, y)| y > x - t)
    }

    /// True iff the path visits some point with `y <= x - t`.
    pub fn touches_barrier(&self, spec: TriangleSpec) -> bool {
        !self.is_admissible(spec)
    }
}

impl fmt::Display for NEPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::North => "N",
                Step::East => "E",
            })?;
        }
        Ok(())
    }
}

impl FromStr for NEPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'N' | 'n' => Ok(Step::North),
                'E' | 'e' => Ok(Step::East),
                other => Err(Error::Parse(format!("unexpected step {other:?} in path"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(NEPath::new)
    }
}

pub fn is_admissible(path: &NEPath, spec: TriangleSpec) -> bool {
    path.is_admissible(spec)
}

/// Checks `0 <= k <= n` and that `C(n, k)` fits under `cap` (`None` = no cap).
pub(crate) fn check_enumeration(n: i64, k: i64, cap: Option<u64>) -> Result<()> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::OutOfRange { n, k });
    }
    if let Some(cap) = cap {
        let total = binomial(n, k);
        if total > BigInt::from(cap) {
            return Err(Error::CapExceeded {
                n,
                k,
                total: total.to_string(),
                cap,
            });
        }
    }
    Ok(())
}

/// Calls `visit` with each `k`-subset of `{1..n}` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut c: Vec<usize> = (1..=k).collect();
    loop {
        visit(&c);
        // Rightmost position that can still be advanced.
        let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i + 1) else {
            return;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// All `t`-admissible `(n, k)`-paths, ordered by the positions of their east
/// steps (the order that sorted tableaux induce through `psi`).
pub fn enumerate_admissible(spec: TriangleSpec, n: i64, k: i64) -> Result<Vec<NEPath>> {
    enumerate_admissible_capped(spec, n, k, Some(DEFAULT_ENUMERATION_CAP))
}

pub fn enumerate_admissible_capped(
    spec: TriangleSpec,
    n: i64,
    k: i64,
    cap: Option<u64>,
) -> Result<Vec<NEPath>> {
    check_enumeration(n, k, cap)?;
    let mut out = Vec::new();
    for_each_combination(n as usize, k as usize, |east| {
        let path = NEPath::from_east_positions(east, n as usize);
        if path.is_admissible(spec) {
            out.push(path);
        }
    });
    Ok(out)
}

/// Number of `(n, k)`-paths that meet or cross `y = x - t`, by brute force.
pub fn count_touching(spec: TriangleSpec, n: i64, k: i64) -> Result<BigEntry> {
    count_touching_capped(spec, n, k, Some(DEFAULT_ENUMERATION_CAP))
}

pub fn count_touching_capped(
    spec: TriangleSpec,
    n: i64,
    k: i64,
    cap: Option<u64>,
) -> Result<BigEntry> {
    check_enumeration(n, k, cap)?;
    let mut count = 0u64;
    for_each_combination(n as usize, k as usize, |east| {
        if NEPath::from_east_positions(east, n as usize).touches_barrier(spec) {
            count += 1;
        }
    });
    Ok(BigInt::from(count))
}
