use std::cmp::Ordering;

use aag_core::classify::{classify_with, fast_path, Verdict};
use aag_core::euclid::check_invariants;
use aag_core::grobner::{basis, certify_basis, kernel_check, MonomialOrder, WeightedDegRevLex};
use aag_core::oracle::OracleReport;
use aag_core::staircase::point_to_monomial;
use aag_core::{apery_set, build_table, pf_tilde, validate_params, AagParams, Int, Monomial};
use proptest::prelude::*;

fn valid_tuple() -> impl Strategy<Value = AagParams> {
    (2..160i128, -12..12i128, 1..4i128, 1..7i128, 1..240i128).prop_filter_map(
        "invalid tuple",
        |(a, d, h, k, c)| validate_params(a, d, h, k, c).ok(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn table_invariants_hold(p in valid_tuple()) {
        let t = build_table(&p).unwrap();
        let v = check_invariants(&t, &p);
        prop_assert!(v.is_empty(), "{p}: {v:?}");
    }

    #[test]
    fn closed_forms_match_oracle(p in valid_tuple()) {
        let t = build_table(&p).unwrap();
        prop_assume!(t.hypothesis_ok);
        let rep = OracleReport::with_modulus(p.generators(), p.a).unwrap();
        let ap = apery_set(&p, &t).unwrap();
        let mut expected = rep.apery.values.clone();
        expected.sort_unstable();
        prop_assert_eq!(ap.values(&p), expected);
        prop_assert_eq!(ap.frobenius_point(&p).phi(&p) - p.a, rep.frobenius);
        if p.k < 2 {
            prop_assert!(pf_tilde(&p, &t).is_err());
            return Ok(());
        }
        let pf = pf_tilde(&p, &t).unwrap();
        prop_assert_eq!(&pf.pf_numbers, &rep.pf);
        prop_assert_eq!(pf.frobenius, rep.frobenius);
        prop_assert!(certify_basis(&p, &t).unwrap());
        prop_assert!(basis(&p, &t).unwrap().iter().all(|b| kernel_check(b, &p)));
    }

    #[test]
    fn fast_path_agrees_with_full(p in valid_tuple()) {
        prop_assume!(p.k >= 3);
        let t = build_table(&p).unwrap();
        prop_assume!(t.hypothesis_ok);
        let full = classify_with(&p, &t, &pf_tilde(&p, &t).unwrap()).unwrap();
        match fast_path(&p).unwrap() {
            Some(fast) => {
                prop_assert_eq!(full.verdict, Verdict::AlmostSymmetric);
                prop_assert_eq!(fast.family, full.family);
                prop_assert_eq!(fast.solved, full.solved);
                prop_assert_eq!(fast.frobenius, full.frobenius);
            }
            None => prop_assert_ne!(full.verdict, Verdict::AlmostSymmetric),
        }
    }
}

// All monomials in x_1..x_{k+1} of weighted degree exactly `w`.
fn monomials_of_degree(p: &AagParams, w: Int) -> Vec<Monomial> {
    let n = p.k_usize() + 2;
    let mut out = Vec::new();
    let mut exps = vec![0u64; n];
    fn rec(p: &AagParams, var: usize, left: Int, exps: &mut Vec<u64>, out: &mut Vec<Monomial>) {
        if var == exps.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(exps.clone()));
            }
            return;
        }
        let g = p.generator(var);
        let mut e = 0;
        while e * g <= left {
            exps[var] = e as u64;
            rec(p, var + 1, left - e * g, exps, out);
            e += 1;
        }
        exps[var] = 0;
    }
    rec(p, 1, w, &mut exps, &mut out);
    out
}

#[test]
fn staircase_points_are_order_minimal() {
    let mut checked = 0;
    for a in 7..40 {
        for d in [-3, -1, 1, 2, 5] {
            for c in (a + 1..a + 50).step_by(3) {
                let Ok(p) = validate_params(a, d, 1, 3, c) else { continue };
                let t = build_table(&p).unwrap();
                if !t.hypothesis_ok {
                    continue;
                }
                let ap = apery_set(&p, &t).unwrap();
                for pt in ap.points() {
                    let m = point_to_monomial(pt, p.k_usize());
                    let w = pt.phi(&p);
                    let min = monomials_of_degree(&p, w)
                        .into_iter()
                        .min_by(|x, y| WeightedDegRevLex.compare(x, y, &p))
                        .unwrap();
                    assert_eq!(WeightedDegRevLex.compare(&m, &min, &p), Ordering::Equal, "{p} {m} vs {min}");
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 50, "{checked}");
}

#[test]
fn published_examples_analyse() {
    let p = validate_params(155, 1, 4, 20, 177).unwrap();
    let t = build_table(&p).unwrap();
    let pf = pf_tilde(&p, &t).unwrap();
    assert_eq!(pf.pf_numbers, vec![1084, 2168]);
    let full = classify_with(&p, &t, &pf).unwrap();
    assert_eq!(full.family, Some("Thm5.3-(ii)"));
    assert_eq!(full.type_, 2);
}
