use aag_core::classify::family::{admissible_samples, family_generate, FamilyParams, FamilyRegistry};
use aag_core::classify::{classify, Verdict};
use aag_core::oracle::OracleReport;
use aag_core::Int;

type Formula = fn(&FamilyParams) -> (Int, Int, Int);

// The closed forms for (a, d, c) as written in each family's statement,
// independent of the row representation used by the registry.
fn explicit(id: &str) -> Option<Formula> {
    let f: Formula = match id {
        "Thm4.1-case1" => |f| {
            let s = f.sigma * f.k + 2;
            (s * f.p_prime, f.p_prime * f.r - f.p * f.r_hat, -s * f.r_hat)
        },
        "Thm4.1-case2" => |f| {
            let s = f.sigma * f.k + 2;
            (
                s * f.p_prime - f.sigma_prime * f.k * f.p,
                f.p_prime * f.r + f.p * f.h * f.sigma_prime,
                f.sigma_prime * f.k * f.r + s * f.sigma_prime * f.h,
            )
        },
        "Thm4.1-case3" => |f| {
            let s = f.sigma * f.k + 2;
            (
                s * f.p_prime - (s - 1) * f.p,
                f.p_prime * f.r + f.p * f.h * (f.sigma + 1),
                (s - 1) * f.r + s * (f.sigma + 1) * f.h,
            )
        },
        "Thm4.1-case4" => |f| {
            let s = f.sigma * f.k + 1;
            (
                s * f.p_prime - (f.k - 1) * f.p,
                -f.p_prime * f.h * f.sigma - f.p * f.r_hat,
                -(f.k - 1) * f.h * f.sigma - s * f.r_hat,
            )
        },
        "Thm5.1" => |f| {
            let d = 2 * f.r + 2;
            (f.k + 2, d, f.k + 2 + (d / 2) * f.k)
        },
        "Thm5.2" => |f| {
            let s = f.sigma * f.k + 1;
            (
                s * f.p - f.sigma * f.k,
                -f.h * f.sigma * (f.p - 1) + 1,
                f.h * f.sigma + s,
            )
        },
        "Thm5.3-(i)" => |f| {
            let s = f.sigma * f.k + 2;
            let t = (f.sigma - 1) * f.k + f.l;
            (s * f.p - t, f.p * f.r + f.sigma, t * f.r + s * f.sigma)
        },
        "Thm5.3-(ii)" => |f| {
            let s = f.sigma * f.k + 2;
            let e = f.h * (f.sigma + 1) + 1;
            (s * f.p - (s - 1), f.p * f.r + e, (s - 1) * f.r + s * e)
        },
        "Thm5.4-(i)" => |f| {
            let s = f.sigma * f.k + f.l + 2;
            (
                s * (f.p + 1) - f.l * f.p,
                -(f.p + 1) * f.sigma - f.p * f.r,
                -f.l * f.sigma - s * f.r,
            )
        },
        "Thm5.4-(ii)" => |f| {
            let s = f.sigma * f.k;
            (
                s * (f.p + 1) - (f.k - 2) * f.p,
                (1 - f.h * f.sigma) * (f.p + 1) - f.p * f.r,
                (f.k - 2) * (1 - f.h * f.sigma) - s * f.r,
            )
        },
        "Thm5.4-(iii)" => |f| {
            let s = f.sigma * f.k + 1;
            (
                s * (f.p + 1) - (f.k - 1) * f.p,
                (f.p + 1) * (1 - f.h * f.sigma) - f.p * f.r,
                (f.k - 1) * (1 - f.h * f.sigma) - s * f.r,
            )
        },
        "Thm5.4-(iv)" => |f| (f.k + f.p + 1, -(f.p + 1) - f.p * f.r, -f.k - (f.k + 1) * f.r),
        "Thm5.4-(v)" => |f| {
            let s = f.sigma * f.k + 1;
            (
                s * (f.p + 1) - (2 * f.k - 1) * f.p,
                -(f.p + 1) * f.sigma - f.p * f.r,
                -f.sigma * (2 * f.k - 1) - s * f.r,
            )
        },
        _ => return None,
    };
    Some(f)
}

#[test]
fn explicit_formulas_agree_with_rows() {
    let reg = FamilyRegistry::standard();
    for fam in reg.iter() {
        let formula = explicit(fam.id()).expect("every family has explicit formulas");
        let mut compared = 0;
        for fp in admissible_samples(fam) {
            if let Ok(p) = family_generate(fam, &fp) {
                assert_eq!((p.a, p.d, p.c), formula(&fp), "{} {fp}", fam.id());
                compared += 1;
            }
        }
        assert!(compared >= 10, "{}: {compared}", fam.id());
    }
}

#[test]
fn worked_examples() {
    let reg = FamilyRegistry::standard();
    let fp = FamilyParams {
        h: 1,
        k: 3,
        sigma: 1,
        p: 2,
        p_prime: 3,
        r: 1,
        r_hat: -2,
        ..Default::default()
    };
    let f = reg.get("Thm4.1-case1").unwrap();
    let p = family_generate(f, &fp).unwrap();
    assert_eq!((p.a, p.d, p.c), (15, 7, 10));
    let rep = OracleReport::new(p.generators()).unwrap();
    assert_eq!(rep.type_, 1);
    assert_eq!(rep.frobenius, (p.h * p.a + p.d) + (p.h * p.a + p.k * p.d) + p.c * 2 - p.a);

    let f = reg.get("Thm5.1").unwrap();
    let p = family_generate(f, &FamilyParams { h: 1, k: 3, r: 0, ..Default::default() }).unwrap();
    assert_eq!((p.a, p.d, p.c), (5, 2, 8));
    assert_eq!(OracleReport::new(p.generators()).unwrap().frobenius, 6);
}

#[test]
fn constraint_violations_are_reported() {
    let reg = FamilyRegistry::standard();
    let f = reg.get("Thm5.1").unwrap();
    let err = family_generate(f, &FamilyParams { h: 2, k: 3, ..Default::default() }).unwrap_err();
    assert_eq!(err.kind(), "family_constraint_violated");
    let f = reg.get("Thm5.4-(iv)").unwrap();
    let err = family_generate(f, &FamilyParams { h: 1, k: 3, p: 1, r: 0, ..Default::default() })
        .unwrap_err();
    assert_eq!(err.kind(), "family_constraint_violated");
}

#[test]
fn synthesized_members_match_oracle() {
    let reg = FamilyRegistry::standard();
    for fam in reg.iter() {
        let samples = admissible_samples(fam);
        assert!(samples.len() >= 20, "{}: {} samples", fam.id(), samples.len());
        let mut survivors = 0;
        for fp in &samples {
            let Ok(p) = family_generate(fam, fp) else { continue };
            let rep = OracleReport::new(p.generators()).unwrap();
            assert_eq!(rep.type_ as Int, fam.type_of(fp), "{} {fp}", fam.id());
            assert_eq!(rep.frobenius, fam.frobenius(&p, fp), "{} {fp}", fam.id());
            if fam.id() == "Thm5.2" {
                assert_eq!(rep.frobenius, 3 * p.a_i(1) - 2 * p.a_i(2) - p.a_i(p.k));
            }
            if fam.id() == "Thm5.1" {
                assert_eq!(rep.frobenius, p.k * p.d);
            }
            survivors += 1;
        }
        assert!(survivors >= 10, "{}: {survivors} survivors", fam.id());
    }
}

#[test]
fn round_trip_through_classify() {
    let reg = FamilyRegistry::standard();
    for fam in reg.iter() {
        let mut recovered = 0;
        let mut collisions = Vec::new();
        for fp in admissible_samples(fam).iter().step_by(7) {
            let Ok(p) = family_generate(fam, fp) else { continue };
            let cl = classify(&p).unwrap();
            let expected = if fam.type_of(fp) == 1 {
                Verdict::Symmetric
            } else {
                Verdict::AlmostSymmetric
            };
            assert_eq!(cl.verdict, expected, "{} {fp}", fam.id());
            assert!(cl.type_ as Int <= p.k + 1);
            if cl.family == Some(fam.id()) && cl.solved == fam.reported(fp) {
                recovered += 1;
            } else {
                collisions.push((cl.family, *fp));
            }
        }
        if !collisions.is_empty() {
            eprintln!("{}: {} collisions, e.g. {:?}", fam.id(), collisions.len(), collisions[0]);
        }
        assert!(recovered > 0, "{}", fam.id());
    }
}
