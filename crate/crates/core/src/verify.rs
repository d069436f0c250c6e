//! Cross-checks every construction of the array against the others and runs
//! the parity suite, collecting pass/fail counts and the first
//! counterexample of each check.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::array::{binomial, closed_form, entry, is_odd, TriangleSpec};
use crate::lattice::{count_touching_capped, enumerate_admissible_capped};
use crate::operator::FactorialBasisPoly;
use crate::parity::{
    binom_mod_p, is_power_of_two, pascal_row_odd_count, pascal_row_odd_count_by_subsets,
    predicted_odd_count, truncated_parity_lucas, vandermonde_check,
};
use crate::tableaux::{enumerate_tableaux_capped, phi, psi};

/// Largest `n` used by checks that enumerate objects one by one.
pub const ENUMERATION_N_MAX: i64 = 14;
/// Largest `n` used by the Lucas-versus-exact sweep.
pub const LUCAS_N_MAX: i64 = 300;
/// Largest `m` used by the Vandermonde sweep.
pub const VANDERMONDE_M_MAX: i64 = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: u64,
    pub fail: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            pass: 0,
            fail: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Counterexample) {
        if ok {
            self.pass += 1;
        } else {
            self.fail += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    fn merge(mut self, other: CheckResult) -> Self {
        self.pass += other.pass;
        self.fail += other.fail;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.fail == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ranges {
    pub t_max: u32,
    pub n_max: i64,
    pub enumeration_n_max: i64,
    pub parity_only: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub ranges: Ranges,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status}  {:<width$}  pass={} fail={}",
                c.name, c.pass, c.fail
            );
            if let Some(ce) = &c.counterexample {
                let _ = writeln!(out, "      counterexample: {}", serde_json::to_string(ce).unwrap());
            }
        }
        let verdict = if self.all_passed() { "all checks passed" } else { "FAILURES" };
        let _ = writeln!(out, "{verdict}");
        out
    }
}

fn cx(t: u32, n: i64, k: i64, expected: impl ToString, actual: impl ToString) -> Counterexample {
    Counterexample {
        t: Some(t),
        n,
        k: Some(k),
        expected: expected.to_string(),
        actual: actual.to_string(),
        note: None,
    }
}

/// Rows of ordinary Pascal's triangle by the addition rule.
pub(crate) fn pascal_rows(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![BigUint::one()]);
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut next = vec![BigUint::one(); n + 1];
        for k in 1..n {
            next[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(next);
    }
    rows
}

fn specs(t_max: u32) -> Vec<TriangleSpec> {
    (1..=t_max as i64).map(|t| TriangleSpec::new(t).unwrap()).collect()
}

/// Run `check` once per `t` in parallel and merge the results in order.
fn per_t(name: &str, t_max: u32, check: impl Fn(TriangleSpec, &mut CheckResult) + Sync) -> CheckResult {
    specs(t_max)
        .into_par_iter()
        .map(|spec| {
            let mut c = CheckResult::new(name);
            check(spec, &mut c);
            c
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(CheckResult::new(name), CheckResult::merge)
}

fn check_recurrence(t_max: u32, n_max: i64) -> CheckResult {
    per_t("recurrence_vs_closed_form", t_max, |spec, c| {
        for r in spec.rows().take(n_max as usize + 1) {
            let n = r.n as i64;
            for (k, v) in r.entries.iter().enumerate() {
                let e = entry(spec, n, k as i64);
                c.record(&e == v, || cx(spec.t(), n, k as i64, v, &e));
            }
        }
    })
}

fn check_closed_form_domain(t_max: u32, n_max: i64) -> CheckResult {
    per_t("closed_form_domain", t_max, |spec, c| {
        let t = spec.t() as i64;
        for n in 0..=n_max {
            for k in 0..=n {
                if 2 * k > n + t {
                    continue;
                }
                let b = closed_form(spec, n, k);
                let a = entry(spec, n, k);
                let on_line = 2 * k == n + t;
                let ok = b == a && !b.is_negative() && (!on_line || b.is_zero());
                c.record(ok, || cx(spec.t(), n, k, &a, &b));
            }
        }
    })
}

fn check_pascal_prefix(t_max: u32, n_max: i64) -> CheckResult {
    per_t("pascal_prefix", t_max, |spec, c| {
        for r in spec.rows().take((spec.t() as usize).min(n_max as usize + 1)) {
            let n = r.n as i64;
            for (k, v) in r.entries.iter().enumerate() {
                let b = binomial(n, k as i64);
                c.record(&b == v, || cx(spec.t(), n, k as i64, &b, v));
            }
        }
    })
}

fn check_enumerations(t_max: u32, n_max: i64) -> Vec<CheckResult> {
    let n_top = n_max.min(ENUMERATION_N_MAX);
    let parts: Vec<[CheckResult; 4]> = specs(t_max)
        .into_par_iter()
        .map(|spec| {
            let t = spec.t();
            let mut paths = CheckResult::new("path_count");
            let mut tableaux = CheckResult::new("tableau_count");
            let mut bijection = CheckResult::new("bijection_round_trip");
            let mut reflection = CheckResult::new("reflection_principle");
            for n in 0..=n_top {
                for k in 0..=n {
                    let a = entry(spec, n, k);
                    let ps = enumerate_admissible_capped(spec, n, k, None).unwrap();
                    let ts = enumerate_tableaux_capped(spec, n, k, None).unwrap();
                    paths.record(BigInt::from(ps.len()) == a, || cx(t, n, k, &a, ps.len()));
                    tableaux.record(BigInt::from(ts.len()) == a, || cx(t, n, k, &a, ts.len()));

                    let mut ok = ps.len() == ts.len();
                    for (p, tab) in ps.iter().zip(&ts) {
                        let there = phi(p, spec).ok();
                        let back = there.as_ref().and_then(|x| psi(x, spec).ok());
                        let image = psi(tab, spec).ok();
                        let again = image.as_ref().and_then(|x| phi(x, spec).ok());
                        ok &= back.as_ref() == Some(p)
                            && again.as_ref() == Some(tab)
                            && image.as_ref() == Some(p);
                    }
                    bijection.record(ok, || Counterexample {
                        note: Some("psi/phi round trip or order coherence".into()),
                        ..cx(t, n, k, ps.len(), ts.len())
                    });

                    let touching = count_touching_capped(spec, n, k, None).unwrap();
                    let total = binomial(n, k);
                    let admissible = BigInt::from(ps.len());
                    let mut ok = &admissible + &touching == total;
                    if 2 * k <= n + t as i64 {
                        ok &= touching == binomial(n, k - t as i64);
                    }
                    reflection.record(ok, || Counterexample {
                        note: Some(format!("admissible={admissible} touching={touching}")),
                        ..cx(t, n, k, &total, &admissible + &touching)
                    });
                }
            }
            [paths, tableaux, bijection, reflection]
        })
        .collect();
    let mut merged = [
        CheckResult::new("path_count"),
        CheckResult::new("tableau_count"),
        CheckResult::new("bijection_round_trip"),
        CheckResult::new("reflection_principle"),
    ]
    .to_vec();
    for part in parts {
        for (i, c) in part.into_iter().enumerate() {
            merged[i] = std::mem::replace(&mut merged[i], CheckResult::new("")).merge(c);
        }
    }
    merged
}

fn check_operator(t_max: u32, n_max: i64) -> CheckResult {
    per_t("operator_coefficients", t_max, |spec, c| {
        let t = spec.t() as usize;
        let mut prev = FactorialBasisPoly::basis(t - 1);
        for exponent in 1..=(n_max + 1) as usize {
            let next = prev.apply_d_inverse();
            let top = t - 1 + exponent;
            let mut ok = next.apply_d().as_ref() == Ok(&prev)
                && next.degree().is_some_and(|d| d <= top)
                && next.in_domain();
            if !ok {
                c.record(false, || Counterexample {
                    note: Some(format!("D did not recover the previous power at N = {exponent}")),
                    ..cx(spec.t(), exponent as i64, 0, "", &next)
                });
            }
            for i in 0..top {
                let raw = next.coeff(top - i);
                let d = if i % 2 == 0 { raw.clone() } else { -raw.clone() };
                let n = (i + exponent - 1) as i64;
                let a = entry(spec, n, i as i64);
                ok = d == a && (raw.is_zero() || raw.is_positive() == (i % 2 == 0));
                c.record(ok, || cx(spec.t(), n, i as i64, &a, &d));
            }
            prev = next;
        }
    })
}

fn check_lucas(pascal: &[Vec<BigUint>], n_max: i64) -> CheckResult {
    let mut c = CheckResult::new("lucas_vs_exact");
    for p in [2u64, 3, 5] {
        for (n, r) in pascal.iter().enumerate().take(n_max.min(LUCAS_N_MAX) as usize + 1) {
            for (k, exact) in r.iter().enumerate() {
                let expected = (exact % p).to_u64().unwrap();
                let got = binom_mod_p(n as u64, k as u64, p).unwrap();
                c.record(expected == got, || Counterexample {
                    t: None,
                    n: n as i64,
                    k: Some(k as i64),
                    expected: expected.to_string(),
                    actual: got.to_string(),
                    note: Some(format!("p = {p}")),
                });
            }
        }
    }
    c
}

fn power_of_two_specs(t_max: u32) -> Vec<TriangleSpec> {
    specs(t_max)
        .into_iter()
        .filter(|s| is_power_of_two(s.t() as u64))
        .collect()
}

fn check_truncated_parity(t_max: u32, n_max: i64) -> CheckResult {
    power_of_two_specs(t_max)
        .into_par_iter()
        .map(|spec| {
            let mut c = CheckResult::new("truncated_parity_fast_path");
            for r in spec.rows().take(n_max as usize + 1) {
                for (k, v) in r.entries.iter().enumerate() {
                    let fast = truncated_parity_lucas(spec, r.n, k as u64);
                    c.record(fast == is_odd(v), || cx(spec.t(), r.n as i64, k as i64, is_odd(v), fast));
                }
            }
            c
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(CheckResult::new("truncated_parity_fast_path"), CheckResult::merge)
}

fn check_odd_count_forward(t_max: u32, n_max: i64) -> CheckResult {
    power_of_two_specs(t_max)
        .into_par_iter()
        .map(|spec| {
            let mut c = CheckResult::new("odd_count_power_of_two_t");
            for r in spec.rows().take(n_max as usize + 1) {
                let exact = BigInt::from(r.odd_count());
                let predicted = predicted_odd_count(spec, r.n);
                c.record(exact == predicted, || Counterexample {
                    k: None,
                    ..cx(spec.t(), r.n as i64, 0, &predicted, &exact)
                });
            }
            c
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(CheckResult::new("odd_count_power_of_two_t"), CheckResult::merge)
}

fn check_odd_count_converse(t_max: u32) -> CheckResult {
    let mut c = CheckResult::new("odd_count_other_t");
    for spec in specs(t_max) {
        let t = spec.t() as u64;
        if is_power_of_two(t) {
            continue;
        }
        let count = spec.rows().nth(t as usize).unwrap().odd_count() as u64;
        let expected = (1u64 << t.count_ones()) - 1;
        c.record(count == expected && !is_power_of_two(count), || Counterexample {
            k: None,
            ..cx(spec.t(), t as i64, 0, expected, count)
        });
    }
    c
}

fn check_central_binomials(n_max: i64) -> CheckResult {
    let mut c = CheckResult::new("central_binomial_parity");
    for m in 0..=n_max as u64 {
        let even = binom_mod_p(2 * (m + 1), m + 1, 2).unwrap() == 0;
        c.record(even, || Counterexample {
            t: None,
            n: 2 * (m as i64 + 1),
            k: Some(m as i64 + 1),
            expected: "0".into(),
            actual: "1".into(),
            note: None,
        });
        let odd = binom_mod_p(2 * m + 1, m, 2).unwrap() == 1;
        let mersenne = is_power_of_two(2 * m + 2);
        c.record(odd == mersenne, || Counterexample {
            t: None,
            n: 2 * m as i64 + 1,
            k: Some(m as i64),
            expected: mersenne.to_string(),
            actual: odd.to_string(),
            note: Some("C(2m+1, m) odd iff 2m+1 = 2^q - 1".into()),
        });
    }
    c
}

fn check_pascal_rows(pascal: &[Vec<BigUint>]) -> [CheckResult; 2] {
    let mut all_odd = CheckResult::new("all_odd_pascal_rows");
    let mut counts = CheckResult::new("pascal_odd_count");
    for (n, r) in pascal.iter().enumerate() {
        let odd = r.iter().filter(|v| v.bit(0)).count() as u64;
        let every = odd == r.len() as u64;
        let mersenne = is_power_of_two(n as u64 + 1);
        all_odd.record(every == mersenne, || Counterexample {
            t: None,
            n: n as i64,
            k: None,
            expected: mersenne.to_string(),
            actual: every.to_string(),
            note: None,
        });
        let formula = pascal_row_odd_count(n as u64);
        let subsets = pascal_row_odd_count_by_subsets(n as u64);
        counts.record(formula == subsets && formula == BigInt::from(odd), || Counterexample {
            t: None,
            n: n as i64,
            k: None,
            expected: odd.to_string(),
            actual: format!("{formula} / {subsets}"),
            note: Some("formula / subsets".into()),
        });
    }
    [all_odd, counts]
}

fn check_vandermonde(n_max: i64) -> CheckResult {
    let mut c = CheckResult::new("vandermonde");
    let top = n_max.min(VANDERMONDE_M_MAX) as u64;
    for m in 0..=top {
        for l in 0..=m {
            for j in 0..=m {
                c.record(vandermonde_check(m, l, j).unwrap(), || Counterexample {
                    t: None,
                    n: m as i64,
                    k: Some(j as i64),
                    expected: "true".into(),
                    actual: "false".into(),
                    note: Some(format!("l = {l}")),
                });
            }
        }
    }
    c
}

/// Runs the full suite for `t = 1..=t_max`, `n = 0..=n_max`. Enumeration
/// checks stop at `n = 14`. With `parity_only`, only the Lucas and odd-count
/// checks run.
pub fn verify(t_max: u32, n_max: i64, parity_only: bool) -> crate::error::Result<VerificationReport> {
    if t_max < 1 {
        return Err(crate::error::Error::InvalidTruncation(t_max as i64));
    }
    if n_max < 0 {
        return Err(crate::error::Error::NegativeRow(n_max));
    }
    let pascal = pascal_rows(n_max as usize);
    let mut checks = Vec::new();
    if !parity_only {
        let (mut first, rest) = rayon::join(
            || {
                vec![
                    check_recurrence(t_max, n_max),
                    check_closed_form_domain(t_max, n_max),
                    check_pascal_prefix(t_max, n_max),
                    check_operator(t_max, n_max),
                ]
            },
            || check_enumerations(t_max, n_max),
        );
        first.extend(rest);
        checks.extend(first);
    }
    checks.push(check_lucas(&pascal, n_max));
    checks.push(check_truncated_parity(t_max, n_max));
    checks.push(check_odd_count_forward(t_max, n_max));
    checks.push(check_odd_count_converse(t_max));
    checks.push(check_central_binomials(n_max));
    checks.extend(check_pascal_rows(&pascal));
    checks.push(check_vandermonde(n_max));
    Ok(VerificationReport {
        ranges: Ranges {
            t_max,
            n_max,
            enumeration_n_max: if parity_only { 0 } else { n_max.min(ENUMERATION_N_MAX) },
            parity_only,
        },
        checks,
    })
}
