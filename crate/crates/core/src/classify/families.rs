//! The symmetric and almost symmetric families.
//!
//! Rows are `(μ row, μ+1 row)`. Quadratic fast paths solve for
//! `P = p_{μ+1}` and back-solve the remaining parameters; every candidate is
//! later re-checked against `(a, d, c)` and the Euclid table, so a root that
//! does not belong to the family is simply discarded.

use crate::arith::{exact_div, gcd, quadratic_integer_roots};
use crate::error::Result;
use crate::params::AagParams;
use crate::Int;

use super::family::{Family, FamilyKind, FamilyParams, Field, Row};

type Check = std::result::Result<(), String>;

fn require(ok: bool, what: &str) -> Check {
    if ok {
        Ok(())
    } else {
        Err(format!("requires {what}"))
    }
}

/// Integer roots of `kc·P² + B·P + C = 0`, `+` root first.
fn roots(p: &AagParams, b: Int, c: Int) -> Result<Vec<Int>> {
    let Some(q) = quadratic_integer_roots(p.k * p.c, b, c)? else {
        return Ok(Vec::new());
    };
    let mut out: Vec<Int> = [q.plus, q.minus].into_iter().flatten().collect();
    out.dedup();
    Ok(out)
}

fn base(p: &AagParams) -> FamilyParams {
    FamilyParams {
        h: p.h,
        k: p.k,
        ..FamilyParams::default()
    }
}

pub fn all() -> Vec<Box<dyn Family>> {
    vec![
        Box::new(SymZeroTail),
        Box::new(SymMultipleTail),
        Box::new(SymAdjacentTail),
        Box::new(SymShortTail),
        Box::new(EvenStep),
        Box::new(NegativeStep),
        Box::new(SingleFrobL),
        Box::new(SingleFrobPair),
        Box::new(LowerFrobL),
        Box::new(LowerFrobFull),
        Box::new(LowerFrobNearFull),
        Box::new(LowerFrobLinear),
        Box::new(LowerFrobPair),
    ]
}

/// `(σk+2, p, r)`, `(0, p′, r̂)`.
struct SymZeroTail;

impl Family for SymZeroTail {
    fn id(&self) -> &'static str {
        "Thm4.1-case1"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::Symmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::P, Field::PPrime, Field::R, Field::RHat]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        ((f.sigma * f.k + 2, f.p, f.r), (0, f.p_prime, f.r_hat))
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.k >= 3 && f.h >= 1 && f.sigma >= 1, "k >= 3, h >= 1, sigma >= 1")?;
        require(1 <= f.p && f.p < f.p_prime, "1 <= p < p'")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.r_hat < -1, "r^ < -1")?;
        require(gcd(f.p_prime, f.r_hat) == 1, "gcd(p', r^) = 1")?;
        require(f.r + f.h * f.sigma > 0, "r + h sigma > 0")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            sigma: exact_div(mu.0 - 2, k)?,
            p: mu.1,
            r: mu.2,
            p_prime: next.1,
            r_hat: next.2,
            ..Default::default()
        })
    }
    fn type_of(&self, _: &FamilyParams) -> Int {
        1
    }
    fn frobenius(&self, p: &AagParams, f: &FamilyParams) -> Int {
        p.a_i(1) + f.sigma * p.a_i(p.k) + p.c * (f.p_prime - 1) - p.a
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("p", f.p_prime), ("p_mu", f.p), ("sigma", f.sigma), ("r", f.r), ("r_hat", f.r_hat)]
    }
}

/// `(σk+2, p, r)`, `(σ′k, p′, −hσ′)`.
struct SymMultipleTail;

impl Family for SymMultipleTail {
    fn id(&self) -> &'static str {
        "Thm4.1-case2"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::Symmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::SigmaPrime, Field::P, Field::PPrime, Field::R]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        (
            (f.sigma * f.k + 2, f.p, f.r),
            (f.sigma_prime * f.k, f.p_prime, -f.h * f.sigma_prime),
        )
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.k >= 3 && f.h >= 1, "k >= 3, h >= 1")?;
        require(f.sigma >= f.sigma_prime && f.sigma_prime >= 1, "sigma >= sigma' >= 1")?;
        require(0 < f.p && f.p < f.p_prime, "0 < p < p'")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.sigma_prime >= 2, "sigma' >= 2")?;
        require(f.r + f.h * (f.sigma + 1) > 0, "r + h(sigma + 1) > 0")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            sigma: exact_div(mu.0 - 2, k)?,
            sigma_prime: exact_div(next.0, k)?,
            p: mu.1,
            r: mu.2,
            p_prime: next.1,
            ..Default::default()
        })
    }
    fn type_of(&self, _: &FamilyParams) -> Int {
        1
    }
    fn frobenius(&self, p: &AagParams, f: &FamilyParams) -> Int {
        p.a_i(1) + f.sigma * p.a_i(p.k) + p.c * (f.p_prime - f.p - 1) - p.a
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![
            ("p", f.p_prime),
            ("p_mu", f.p),
            ("sigma", f.sigma),
            ("sigma_prime", f.sigma_prime),
            ("r", f.r),
        ]
    }
}

/// `(σk+2, p, r)`, `(σk+1, p′, −h(σ+1))`.
struct SymAdjacentTail;

impl Family for SymAdjacentTail {
    fn id(&self) -> &'static str {
        "Thm4.1-case3"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::Symmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::P, Field::PPrime, Field::R]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        (
            (f.sigma * f.k + 2, f.p, f.r),
            (f.sigma * f.k + 1, f.p_prime, -f.h * (f.sigma + 1)),
        )
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.k >= 3 && f.h >= 1 && f.sigma >= 1, "k >= 3, h >= 1, sigma >= 1")?;
        require(0 < f.p && f.p < f.p_prime, "0 < p < p'")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.r + f.h * (f.sigma + 1) > 0, "r + h(sigma + 1) > 0")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            sigma: exact_div(mu.0 - 2, k)?,
            p: mu.1,
            r: mu.2,
            p_prime: next.1,
            ..Default::default()
        })
    }
    fn type_of(&self, _: &FamilyParams) -> Int {
        1
    }
    fn frobenius(&self, p: &AagParams, f: &FamilyParams) -> Int {
        p.a_i(1) + f.sigma * p.a_i(p.k) + p.c * (f.p_prime - f.p - 1) - p.a
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("p", f.p_prime), ("p_mu", f.p), ("sigma", f.sigma), ("r", f.r)]
    }
}

/// `(σk+1, p, −hσ)`, `(k−1, p′, r̂)`.
struct SymShortTail;

impl Family for SymShortTail {
    fn id(&self) -> &'static str {
        "Thm4.1-case4"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::Symmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::P, Field::PPrime, Field::RHat]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        (
            (f.sigma * f.k + 1, f.p, -f.h * f.sigma),
            (f.k - 1, f.p_prime, f.r_hat),
        )
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.k >= 3 && f.h >= 1 && f.sigma >= 1, "k >= 3, h >= 1, sigma >= 1")?;
        require(0 < f.p && f.p < f.p_prime, "0 < p < p'")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.r_hat < -f.h, "r^ < -h")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            sigma: exact_div(mu.0 - 1, k)?,
            p: mu.1,
            p_prime: next.1,
            r_hat: next.2,
            ..Default::default()
        })
    }
    fn type_of(&self, _: &FamilyParams) -> Int {
        1
    }
    fn frobenius(&self, p: &AagParams, f: &FamilyParams) -> Int {
        p.a_i(1) + (f.sigma - 1) * p.a_i(p.k) + p.c * (f.p_prime - 1) - p.a
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("p", f.p_prime), ("p_mu", f.p), ("sigma", f.sigma), ("r_hat", f.r_hat)]
    }
}

/// `(k+1, 1, r)`, `(k, 2, −2)` with `h = 1`, `k` odd: `a = k+2`, `F = kd`.
struct EvenStep;

impl Family for EvenStep {
    fn id(&self) -> &'static str {
        "Thm5.1"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::AlmostSymmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::R]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        ((f.k + 1, 1, f.r), (f.k, 2, -2))
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.h == 1, "h = 1")?;
        require(f.k >= 3 && f.k % 2 == 1, "odd k >= 3")?;
        require(f.r >= 0, "d = 2r + 2 > 0")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(gcd(f.k + 2, 2 * f.r + 2) == 1, "gcd(a, d) = 1")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, _next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            r: mu.2,
            ..Default::default()
        })
    }
    fn sample_range(&self, field: Field) -> std::ops::RangeInclusive<Int> {
        match field {
            Field::K => 3..=11,
            Field::R => 0..=20,
            f => f.sample_range(),
        }
    }
    fn type_of(&self, f: &FamilyParams) -> Int {
        f.k + 1
    }
    fn frobenius(&self, p: &AagParams, _: &FamilyParams) -> Int {
        p.k * p.d
    }
    fn fast_candidates(&self, p: &AagParams) -> Result<Vec<FamilyParams>> {
        if p.h != 1 || p.d <= 0 || p.d % 2 != 0 || p.a != p.k + 2 || p.c != p.a + (p.d / 2) * p.k {
            return Ok(Vec::new());
        }
        Ok(vec![FamilyParams {
            r: p.d / 2 - 1,
            ..base(p)
        }])
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("p", 2), ("sigma", 1), ("r", f.r)]
    }
}

/// `(σk+1, 1, −hσ)`, `(σk, p, −hσ−1)`, the `d < 0` family.
struct NegativeStep;

impl Family for NegativeStep {
    fn id(&self) -> &'static str {
        "Thm5.2"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::AlmostSymmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::P]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        (
            (f.sigma * f.k + 1, 1, -f.h * f.sigma),
            (f.sigma * f.k, f.p, -f.h * f.sigma - 1),
        )
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.h >= 2 && f.k >= 3, "h >= 2, k >= 3")?;
        require(f.sigma >= 1 && f.p >= 2, "sigma >= 1, p >= 2")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        let a = (f.sigma * f.k + 1) * f.p - f.sigma * f.k;
        let d = -f.h * f.sigma * (f.p - 1) + 1;
        require(d < 0 && gcd(a, d) == 1, "d < 0, gcd(a, d) = 1")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            sigma: exact_div(mu.0 - 1, k)?,
            p: next.1,
            ..Default::default()
        })
    }
    fn type_of(&self, f: &FamilyParams) -> Int {
        f.k + 1
    }
    fn frobenius(&self, p: &AagParams, _: &FamilyParams) -> Int {
        3 * p.a_i(1) - 2 * p.a_i(2) - p.a_i(p.k)
    }
    fn fast_candidates(&self, p: &AagParams) -> Result<Vec<FamilyParams>> {
        let Some(sigma) = exact_div(p.c - 1, p.k + p.h) else {
            return Ok(Vec::new());
        };
        let Some(pp) = exact_div(p.a + sigma * p.k, sigma * p.k + 1) else {
            return Ok(Vec::new());
        };
        Ok(vec![FamilyParams {
            sigma,
            p: pp,
            ..base(p)
        }])
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("p", f.p), ("sigma", f.sigma)]
    }
}

/// `(σk+2, 1, r)`, `((σ−1)k+l, p, −σ)`: single second family, `l`-indexed.
struct SingleFrobL;

impl Family for SingleFrobL {
    fn id(&self) -> &'static str {
        "Thm5.3-(i)"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::AlmostSymmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::P, Field::R, Field::L]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        (
            (f.sigma * f.k + 2, 1, f.r),
            ((f.sigma - 1) * f.k + f.l, f.p, -f.sigma),
        )
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.h == 1 && f.k >= 3, "h = 1, k >= 3")?;
        require(1 <= f.l && f.l < f.k, "1 <= l <= k - 1")?;
        require(f.p >= 2 && f.sigma >= 2, "p, sigma >= 2")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.r > -(f.sigma + 1), "r > -(sigma + 1)")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        let sigma = exact_div(mu.0 - 2, k)?;
        Some(FamilyParams {
            h,
            k,
            sigma,
            l: next.0 - (sigma - 1) * k,
            p: next.1,
            r: mu.2,
            ..Default::default()
        })
    }
    fn type_of(&self, f: &FamilyParams) -> Int {
        f.k - f.l + 1
    }
    fn frobenius(&self, p: &AagParams, f: &FamilyParams) -> Int {
        2 * (f.p - 1) * p.c + p.a_i(p.k - f.l + 1) - p.a
    }
    fn fast_candidates(&self, p: &AagParams) -> Result<Vec<FamilyParams>> {
        let (a, c, k, ak) = (p.a, p.c, p.k, p.a_i(p.k));
        let mut out = Vec::new();
        for l in 1..k {
            let al = p.a_i(l);
            for pp in roots(p, -(k * (c + al - ak) - 2 * ak), -ak * (a + l) + k * al)? {
                if pp < 2 {
                    continue;
                }
                let Some(sigma) = exact_div(a - 2 * pp - k + l, k * (pp - 1)) else {
                    continue;
                };
                let Some(r) = exact_div(p.d - sigma, pp) else {
                    continue;
                };
                out.push(FamilyParams {
                    sigma,
                    p: pp,
                    r,
                    l,
                    ..base(p)
                });
            }
        }
        Ok(out)
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("l", f.l), ("p", f.p), ("sigma", f.sigma), ("r", f.r)]
    }
}

/// `(σk+2, 1, r)`, `(σk+1, p, −h(σ+1)−1)`: type 2.
struct SingleFrobPair;

impl Family for SingleFrobPair {
    fn id(&self) -> &'static str {
        "Thm5.3-(ii)"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::AlmostSymmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::P, Field::R]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        (
            (f.sigma * f.k + 2, 1, f.r),
            (f.sigma * f.k + 1, f.p, -f.h * (f.sigma + 1) - 1),
        )
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.h >= 1 && f.k >= 3, "h >= 1, k >= 3")?;
        require(f.sigma >= 1 && f.p >= 2, "sigma >= 1, p >= 2")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.r > -f.h * (f.sigma + 1) - 1, "r > -h(sigma + 1) - 1")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            sigma: exact_div(mu.0 - 2, k)?,
            p: next.1,
            r: mu.2,
            ..Default::default()
        })
    }
    fn type_of(&self, _: &FamilyParams) -> Int {
        2
    }
    fn frobenius(&self, p: &AagParams, f: &FamilyParams) -> Int {
        2 * (f.p - 1) * p.c - 2 * p.a
    }
    fn fast_candidates(&self, p: &AagParams) -> Result<Vec<FamilyParams>> {
        let (a, c, k, a1, ak) = (p.a, p.c, p.k, p.a_i(1), p.a_i(p.k));
        let mut out = Vec::new();
        for pp in roots(p, -(k * (c + a + a1) - 2 * ak), -ak * (a + 1) + k * (a + a1))? {
            if pp < 2 {
                continue;
            }
            let Some(sigma) = exact_div(a + 1 - 2 * pp, k * (pp - 1)) else {
                continue;
            };
            let Some(r) = exact_div(p.d - p.h * (sigma + 1) - 1, pp) else {
                continue;
            };
            out.push(FamilyParams {
                sigma,
                p: pp,
                r,
                ..base(p)
            });
        }
        Ok(out)
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("p", f.p), ("sigma", f.sigma), ("r", f.r)]
    }
}

/// Shared back-substitution for the families whose `μ+1` row is
/// `(s′, p+1, r)`: returns `(σ, r)` given `P = p+1` and the `μ`-row shape.
fn lower_candidate(p: &AagParams, pp: Int, sigma_num: Int, sigma_den: Int, r_num: impl Fn(Int) -> Int) -> Option<FamilyParams> {
    if pp < 2 {
        return None;
    }
    let sigma = exact_div(sigma_num, sigma_den)?;
    let r = exact_div(r_num(sigma), pp - 1)?;
    Some(FamilyParams {
        sigma,
        p: pp - 1,
        r,
        ..base(p)
    })
}

/// `(σk+l+2, p, −σ)`, `(l, p+1, r)`: single first family, `l`-indexed.
struct LowerFrobL;

impl Family for LowerFrobL {
    fn id(&self) -> &'static str {
        "Thm5.4-(i)"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::AlmostSymmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::P, Field::R, Field::L]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        (
            (f.sigma * f.k + f.l + 2, f.p, -f.sigma),
            (f.l, f.p + 1, f.r),
        )
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.h == 1 && f.k >= 4, "h = 1, k >= 4")?;
        require(1 <= f.l && f.l <= f.k - 3, "1 <= l <= k - 3")?;
        require(f.sigma >= 1 && f.p >= 1, "sigma, p >= 1")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.r < -f.sigma, "r < -sigma")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        let l = next.0;
        Some(FamilyParams {
            h,
            k,
            l,
            sigma: exact_div(mu.0 - l - 2, k)?,
            p: mu.1,
            r: next.2,
            ..Default::default()
        })
    }
    fn type_of(&self, f: &FamilyParams) -> Int {
        f.l + 1
    }
    fn frobenius(&self, p: &AagParams, f: &FamilyParams) -> Int {
        p.a_i(f.l + 3) + 2 * f.sigma * p.a_i(p.k) - p.a
    }
    fn fast_candidates(&self, p: &AagParams) -> Result<Vec<FamilyParams>> {
        let (a, c, k, ak) = (p.a, p.c, p.k, p.a_i(p.k));
        let mut out = Vec::new();
        for l in 1..=(k - 3) {
            let b = -(k * (c - a + p.a_i(l + 2)) - 2 * ak);
            for pp in roots(p, b, -ak * (a - l))? {
                let fp = lower_candidate(p, pp, a - 2 * pp - l, k * pp, |s| -pp * s - p.d);
                out.extend(fp.map(|fp| FamilyParams { l, ..fp }));
            }
        }
        Ok(out)
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("l", f.l), ("p", f.p + 1), ("sigma", f.sigma), ("r", f.r)]
    }
}

/// `(σk, p, 1−hσ)`, `(k−2, p+1, r)`: type `k−1`.
struct LowerFrobFull;

impl Family for LowerFrobFull {
    fn id(&self) -> &'static str {
        "Thm5.4-(ii)"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::AlmostSymmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::P, Field::R]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        (
            (f.sigma * f.k, f.p, 1 - f.h * f.sigma),
            (f.k - 2, f.p + 1, f.r),
        )
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.h >= 1 && f.k >= 3, "h >= 1, k >= 3")?;
        require(f.sigma >= 2 && f.p >= 1, "sigma >= 2, p >= 1")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.r < -f.h, "r < -h")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            sigma: exact_div(mu.0, k)?,
            p: mu.1,
            r: next.2,
            ..Default::default()
        })
    }
    fn type_of(&self, f: &FamilyParams) -> Int {
        f.k - 1
    }
    fn frobenius(&self, p: &AagParams, f: &FamilyParams) -> Int {
        p.a_i(1) + (2 * f.sigma - 1) * p.a_i(p.k) - 2 * p.a
    }
    fn fast_candidates(&self, p: &AagParams) -> Result<Vec<FamilyParams>> {
        let (a, c, k, ak) = (p.a, p.c, p.k, p.a_i(p.k));
        let mut out = Vec::new();
        for pp in roots(p, -(k * (c - a + ak) - 2 * ak), -ak * (a - k + 2))? {
            out.extend(lower_candidate(p, pp, a + (k - 2) * (pp - 1), k * pp, |s| {
                (1 - p.h * s) * pp - p.d
            }));
        }
        Ok(out)
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("p", f.p + 1), ("sigma", f.sigma), ("r", f.r)]
    }
}

/// `(σk+1, p, 1−hσ)`, `(k−1, p+1, r)`: type `k`.
struct LowerFrobNearFull;

impl Family for LowerFrobNearFull {
    fn id(&self) -> &'static str {
        "Thm5.4-(iii)"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::AlmostSymmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::P, Field::R]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        (
            (f.sigma * f.k + 1, f.p, 1 - f.h * f.sigma),
            (f.k - 1, f.p + 1, f.r),
        )
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.h >= 1 && f.k >= 3, "h >= 1, k >= 3")?;
        require(f.sigma >= 1 && f.p >= 1, "sigma, p >= 1")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.r < (-f.h).min(1 - f.h * f.sigma), "r < min(-h, 1 - h sigma)")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            sigma: exact_div(mu.0 - 1, k)?,
            p: mu.1,
            r: next.2,
            ..Default::default()
        })
    }
    fn type_of(&self, f: &FamilyParams) -> Int {
        f.k
    }
    fn frobenius(&self, p: &AagParams, f: &FamilyParams) -> Int {
        p.a_i(2) + (2 * f.sigma - 1) * p.a_i(p.k) - 2 * p.a
    }
    fn fast_candidates(&self, p: &AagParams) -> Result<Vec<FamilyParams>> {
        let (a, c, k, ak) = (p.a, p.c, p.k, p.a_i(p.k));
        let b = -(k * (p.a_i(1) + c - (p.h + 1) * a + ak) - 2 * ak);
        let mut out = Vec::new();
        for pp in roots(p, b, -ak * (a - k + 1))? {
            out.extend(lower_candidate(p, pp, a - pp + (k - 1) * (pp - 1), k * pp, |s| {
                pp * (1 - p.h * s) - p.d
            }));
        }
        Ok(out)
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("p", f.p + 1), ("sigma", f.sigma), ("r", f.r)]
    }
}

/// `(k+1, p, −1)`, `(k, p+1, r)`: `a = k+p+1`, linear Frobenius formula.
struct LowerFrobLinear;

impl Family for LowerFrobLinear {
    fn id(&self) -> &'static str {
        "Thm5.4-(iv)"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::AlmostSymmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::P, Field::R]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        ((f.k + 1, f.p, -1), (f.k, f.p + 1, f.r))
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.h == 1 && f.k >= 3, "h = 1, k >= 3")?;
        require(f.p >= 1, "p >= 1")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.r < -1, "r < -1")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            p: mu.1,
            r: next.2,
            ..Default::default()
        })
    }
    fn type_of(&self, f: &FamilyParams) -> Int {
        f.k + 1
    }
    fn frobenius(&self, p: &AagParams, _: &FamilyParams) -> Int {
        p.c * (p.a - p.k - 1) - p.a
    }
    fn fast_candidates(&self, p: &AagParams) -> Result<Vec<FamilyParams>> {
        let pp = p.a - p.k;
        Ok(lower_candidate(p, pp, 1, 1, |_| -pp - p.d)
            .map(|fp| FamilyParams { sigma: 0, ..fp })
            .into_iter()
            .collect())
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("p", f.p + 1), ("r", f.r)]
    }
}

/// `(σk+1, p, −σ)`, `(2k−1, p+1, r)`: type 2.
struct LowerFrobPair;

impl Family for LowerFrobPair {
    fn id(&self) -> &'static str {
        "Thm5.4-(v)"
    }
    fn kind(&self) -> FamilyKind {
        FamilyKind::AlmostSymmetric
    }
    fn fields(&self) -> &'static [Field] {
        &[Field::Sigma, Field::P, Field::R]
    }
    fn rows(&self, f: &FamilyParams) -> (Row, Row) {
        (
            (f.sigma * f.k + 1, f.p, -f.sigma),
            (2 * f.k - 1, f.p + 1, f.r),
        )
    }
    fn check_structure(&self, f: &FamilyParams) -> Check {
        require(f.h == 1 && f.k >= 3, "h = 1, k >= 3")?;
        require(f.sigma >= 2 && f.p >= 1, "sigma >= 2, p >= 1")
    }
    fn check_stated(&self, f: &FamilyParams) -> Check {
        require(f.r < -f.sigma, "r < -sigma")
    }
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams> {
        Some(FamilyParams {
            h,
            k,
            sigma: exact_div(mu.0 - 1, k)?,
            p: mu.1,
            r: next.2,
            ..Default::default()
        })
    }
    fn type_of(&self, _: &FamilyParams) -> Int {
        2
    }
    fn frobenius(&self, p: &AagParams, f: &FamilyParams) -> Int {
        p.a_i(2) + (2 * f.sigma - 2) * p.a_i(p.k) - p.a
    }
    fn fast_candidates(&self, p: &AagParams) -> Result<Vec<FamilyParams>> {
        let (a, c, k, ak) = (p.a, p.c, p.k, p.a_i(p.k));
        let mut out = Vec::new();
        for pp in roots(p, -(k * (c + p.d + 2 * ak) - 2 * ak), -ak * (a - 2 * k + 1))? {
            out.extend(lower_candidate(p, pp, a - pp + (2 * k - 1) * (pp - 1), k * pp, |s| {
                -pp * s - p.d
            }));
        }
        Ok(out)
    }
    fn reported(&self, f: &FamilyParams) -> Vec<(&'static str, Int)> {
        vec![("p", f.p + 1), ("sigma", f.sigma), ("r", f.r)]
    }
}
