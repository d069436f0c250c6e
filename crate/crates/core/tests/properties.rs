use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use trunc_pascal::lattice::{count_touching_capped, enumerate_admissible_capped};
use trunc_pascal::parity::{binary_digit_count, is_power_of_two, pascal_row_odd_count_by_subsets};
use trunc_pascal::tableaux::enumerate_tableaux_capped;
use trunc_pascal::*;

fn spec(t: i64) -> TriangleSpec {
    TriangleSpec::new(t).unwrap()
}

/// Pascal's triangle by repeated addition, independent of the crate.
fn pascal(n_max: usize) -> Vec<Vec<BigUint>> {
    let mut rows = vec![vec![BigUint::one()]];
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

#[test]
fn recurrence_agrees_with_closed_form() {
    for t in 1..=8 {
        for r in spec(t).rows().take(65) {
            for (k, v) in r.entries.iter().enumerate() {
                assert_eq!(v, &entry(spec(t), r.n as i64, k as i64), "t={t} n={} k={k}", r.n);
            }
            assert_eq!(r.entries[0], BigInt::one());
        }
    }
}

#[test]
fn pascal_prefix_before_truncation() {
    for t in 1..=10 {
        for n in 0..t {
            let r = row(spec(t), n).unwrap();
            for k in 0..=n {
                assert_eq!(r.entries[k as usize], binomial(n, k));
            }
        }
    }
}

#[test]
fn catalan_columns_repeat() {
    let s = spec(1);
    // The last nonzero entries of rows 2n+1 and 2n+2 carry the same value.
    for n in 0..=16 {
        assert_eq!(entry(s, 2 * n + 1, n), entry(s, 2 * n + 2, n + 1));
    }
    // Catalan numbers 1, 1, 2, 5, 14, 42
    let cat: Vec<i64> = (0..6).map(|n| entry(s, 2 * n, n).to_i64().unwrap()).collect();
    assert_eq!(cat, vec![1, 1, 2, 5, 14, 42]);
}

#[test]
fn lucas_matches_exact_residues_exhaustively() {
    let rows = pascal(120);
    for p in [2u64, 3, 5, 7] {
        for (n, r) in rows.iter().enumerate() {
            for (k, v) in r.iter().enumerate() {
                let expected = (v % p).to_u64().unwrap();
                assert_eq!(binom_mod_p(n as u64, k as u64, p).unwrap(), expected);
            }
        }
    }
}

#[test]
fn central_binomial_parities() {
    for m in 0..=200u64 {
        assert_eq!(binom_mod_p(2 * (m + 1), m + 1, 2).unwrap(), 0);
    }
    for m in 0..=512u64 {
        let odd = binom_mod_p(2 * m + 1, m, 2).unwrap() == 1;
        assert_eq!(odd, (2 * m + 2).is_power_of_two(), "m={m}");
    }
}

#[test]
fn all_odd_rows_are_mersenne() {
    for (n, r) in pascal(256).iter().enumerate() {
        let all_odd = r.iter().all(|v| v.bit(0));
        assert_eq!(all_odd, is_power_of_two(n as u64 + 1), "n={n}");
    }
}

#[test]
fn pascal_odd_count_routes_agree() {
    for n in 0..=1024u64 {
        assert_eq!(pascal_row_odd_count(n), pascal_row_odd_count_by_subsets(n));
    }
    for (n, r) in pascal(200).iter().enumerate() {
        let odd = r.iter().filter(|v| v.bit(0)).count();
        assert_eq!(pascal_row_odd_count(n as u64), BigInt::from(odd));
    }
}

#[test]
fn fast_parity_matches_exact_for_power_of_two_t() {
    for t in [1i64, 2, 4, 8, 16] {
        for r in spec(t).rows().take(129) {
            for (k, v) in r.entries.iter().enumerate() {
                let fast = truncated_parity(spec(t), r.n as i64, k as i64).unwrap();
                assert_eq!(fast, v.bit(0), "t={t} n={} k={k}", r.n);
            }
        }
    }
}

#[test]
fn odd_count_converse_witness() {
    for t in 1..=64u64 {
        if is_power_of_two(t) {
            continue;
        }
        let count = truncated_row_odd_count(spec(t as i64), t as i64, OddCountMethod::Exact).unwrap();
        let expected = (1u64 << binary_digit_count(t)) - 1;
        assert_eq!(count, BigInt::from(expected));
        assert!(!is_power_of_two(expected));
        let report = odd_count_report(spec(t as i64), t as i64).unwrap();
        assert!(!report.all_powers_of_two && report.consistent);
        assert!(report.first_witness.unwrap() <= t);
    }
}

#[test]
fn operator_coefficients_follow_the_recurrence_across_powers() {
    for t in 1..=4 {
        let mut previous: Option<Vec<BigInt>> = None;
        for exponent in 1..=10 {
            let d = extract_d(spec(t), exponent).unwrap();
            let p = inverse_power_expansion(spec(t), exponent).unwrap();
            assert!(p.in_domain());
            assert!(p.degree().unwrap() <= (t - 1 + exponent) as usize);
            for (i, v) in d.iter().enumerate() {
                let n = i as i64 + exponent - 1;
                assert_eq!(v, &entry(spec(t), n, i as i64));
                let raw = p.coeff((t - 1 + exponent) as usize - i);
                if !raw.is_zero() {
                    assert_eq!(raw.is_positive(), i % 2 == 0);
                }
                // d(i+N-1, i) = d(i+N-2, i-1) + d(i+N-2, i): the first term
                // sits in this power's list, the second in the previous one.
                if let Some(prev) = &previous {
                    let left = if i == 0 { BigInt::zero() } else { d[i - 1].clone() };
                    let right = prev.get(i).cloned().unwrap_or_default();
                    if i as i64 <= TriangleSpec::boundary(&spec(t), n).unwrap() {
                        assert_eq!(v, &(left + right), "t={t} N={exponent} i={i}");
                    }
                }
            }
            previous = Some(d);
        }
    }
}

fn poly_strategy(in_domain: bool) -> impl Strategy<Value = FactorialBasisPoly> {
    let low = if in_domain { 1usize } else { 0 };
    prop::collection::vec((low..=30usize, -100i64..=100), 0..12)
        .prop_map(FactorialBasisPoly::from_terms)
}

proptest! {
    #[test]
    fn closed_form_valid_below_the_line(t in 1i64..12, n in 0i64..80, k in 0i64..80) {
        prop_assume!(k <= n && 2 * k <= n + t);
        let b = closed_form(spec(t), n, k);
        prop_assert!(!b.is_negative());
        prop_assert_eq!(&b, &entry(spec(t), n, k));
        if 2 * k == n + t {
            prop_assert!(b.is_zero());
        }
    }

    #[test]
    fn entries_vanish_outside(t in 1i64..12, n in -20i64..80, k in -20i64..100) {
        let outside = n < 0 || k < 0 || k > spec(t).boundary(n.max(0)).unwrap();
        if outside {
            prop_assert!(entry(spec(t), n, k).is_zero());
        } else {
            prop_assert!(entry(spec(t), n, k).is_positive());
        }
    }

    #[test]
    fn paths_partition_and_reflect(t in 1i64..7, n in 0i64..13, k in 0i64..13) {
        prop_assume!(k <= n);
        let admissible = enumerate_admissible_capped(spec(t), n, k, None).unwrap();
        let touching = count_touching_capped(spec(t), n, k, None).unwrap();
        prop_assert_eq!(BigInt::from(admissible.len()) + &touching, binomial(n, k));
        prop_assert_eq!(BigInt::from(admissible.len()), entry(spec(t), n, k));
        if 2 * k <= n + t {
            prop_assert_eq!(touching, binomial(n, k - t));
        }
    }

    #[test]
    fn bijection_round_trips(t in 1i64..6, n in 0i64..13, k in 0i64..13) {
        prop_assume!(k <= n);
        let paths = enumerate_admissible_capped(spec(t), n, k, None).unwrap();
        let tabs = enumerate_tableaux_capped(spec(t), n, k, None).unwrap();
        prop_assert_eq!(paths.len(), tabs.len());
        for (p, tab) in paths.iter().zip(&tabs) {
            let image = phi(p, spec(t)).unwrap();
            prop_assert!(image.is_admissible(spec(t)));
            prop_assert_eq!(&image, tab);
            prop_assert_eq!(&psi(&image, spec(t)).unwrap(), p);
            prop_assert_eq!(&psi(tab, spec(t)).unwrap(), p);
        }
    }

    #[test]
    fn path_strings_round_trip(steps in prop::collection::vec(prop::bool::ANY, 0..40)) {
        let path = NEPath::new(steps.iter().map(|&e| if e { Step::East } else { Step::North }).collect());
        let text = path.to_string();
        prop_assert_eq!(text.parse::<NEPath>().unwrap(), path);
    }

    #[test]
    fn d_and_inverse_are_mutually_inverse(p in poly_strategy(false), q in poly_strategy(true)) {
        prop_assert_eq!(apply_d(&apply_d_inverse(&p)).unwrap(), p.clone());
        prop_assert_eq!(apply_d_inverse(&apply_d(&q).unwrap()), q);
        prop_assert!(apply_d_inverse(&p).in_domain());
    }

    #[test]
    fn polynomial_text_round_trips(p in poly_strategy(false)) {
        prop_assert_eq!(p.to_string().parse::<FactorialBasisPoly>().unwrap(), p);
    }

    #[test]
    fn digit_expansions_reconstruct(m in 0u64..1_000_000_000, pi in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 101][pi];
        let d = digits(m, p).unwrap();
        let mut value = 0u64;
        for (i, &digit) in d.digits.iter().enumerate() {
            prop_assert!(digit < p);
            value += digit * p.pow(i as u32);
        }
        prop_assert_eq!(value, m);
        prop_assert_eq!(d.count, d.nonzero_positions.len());
        let expected_len = if m == 0 { 1 } else { (m as f64).log(p as f64).floor() as usize + 1 };
        // Float log can misround exactly at powers of p.
        prop_assert!(d.digits.len().abs_diff(expected_len) <= 1);
        prop_assert!(m == 0 || *d.digits.last().unwrap() != 0);
        if p == 2 {
            prop_assert_eq!(d.count as u32, m.count_ones());
        }
    }

    #[test]
    fn odd_binomial_subset_matches_lucas(n in 0u64..5000, k in 0u64..5000) {
        prop_assume!(k <= n);
        prop_assert_eq!(is_odd_binomial(n, k), binom_mod_p(n, k, 2).unwrap() == 1);
    }

    #[test]
    fn vandermonde_always_holds(m in 0u64..60, l in 0u64..60, j in 0u64..70) {
        prop_assume!(l <= m);
        prop_assert!(vandermonde_check(m, l, j).unwrap());
    }
}
