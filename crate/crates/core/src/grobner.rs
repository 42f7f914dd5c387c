//! Binomial families of the toric ideal and a combinatorial Gröbner-basis
//! certificate.
//!
//! No Buchberger run is needed: the leading terms of `𝒢 = 𝒜 ∪ ℬ ∪ 𝒞 ∪ 𝒟`
//! are certified by checking that the monomials they leave standard are
//! exactly the `a` points of the Apéry staircase.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::error::Result;
use crate::euclid::{decompose, EuclidTable};
use crate::params::{phi, AagParams, Monomial};
use crate::staircase::{apery_set, point_to_monomial, StandardPoint};
use crate::Int;

/// A total order on monomials over `x₀, …, x_{k+1}`.
pub trait MonomialOrder: Send + Sync {
    fn name(&self) -> &'static str;
    fn compare(&self, m: &Monomial, n: &Monomial, p: &AagParams) -> Ordering;
}

/// Weighted degree reverse lexicographic order with `x₀ ≺ x₁ ≺ … ≺ x_{k+1}`:
/// compare `φ` first, then the monomial with the larger exponent at the
/// first differing index (scanning up from `x₀`) is the smaller one.
#[derive(Debug, Clone, Copy, Default)]
pub struct WeightedDegRevLex;

impl MonomialOrder for WeightedDegRevLex {
    fn name(&self) -> &'static str {
        "degrevlex"
    }

    fn compare(&self, m: &Monomial, n: &Monomial, p: &AagParams) -> Ordering {
        let wm = phi(m, p).unwrap_or(Int::MAX);
        let wn = phi(n, p).unwrap_or(Int::MAX);
        wm.cmp(&wn).then_with(|| {
            m.exponents
                .iter()
                .zip(&n.exponents)
                .find(|(x, y)| x != y)
                .map_or(Ordering::Equal, |(x, y)| y.cmp(x))
        })
    }
}

/// The reverse of [`WeightedDegRevLex`]. Deliberately wrong; the `verify`
/// harness uses it to prove it can detect a broken order.
#[derive(Debug, Clone, Copy, Default)]
pub struct Inverted;

impl MonomialOrder for Inverted {
    fn name(&self) -> &'static str {
        "inverted"
    }

    fn compare(&self, m: &Monomial, n: &Monomial, p: &AagParams) -> Ordering {
        WeightedDegRevLex.compare(m, n, p).reverse()
    }
}

pub fn order_names() -> &'static [&'static str] {
    &["degrevlex", "inverted"]
}

pub fn order_by_name(name: &str) -> Option<Box<dyn MonomialOrder>> {
    match name {
        "degrevlex" => Some(Box::new(WeightedDegRevLex)),
        "inverted" => Some(Box::new(Inverted)),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinomialFamily {
    A,
    B,
    C,
    D,
    Row,
    Tilde,
}

impl fmt::Display for BinomialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BinomialFamily::A => "A",
            BinomialFamily::B => "B",
            BinomialFamily::C => "C",
            BinomialFamily::D => "D",
            BinomialFamily::Row => "Row",
            BinomialFamily::Tilde => "Tilde",
        };
        f.write_str(s)
    }
}

/// `lead − tail`, written the way it is displayed, not necessarily ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    pub lead: Monomial,
    pub tail: Monomial,
    pub family: BinomialFamily,
}

impl Binomial {
    fn new(lead: Monomial, tail: Monomial, family: BinomialFamily) -> Self {
        Binomial { lead, tail, family }
    }

    /// Puts the larger monomial first under `order`.
    pub fn oriented(self, order: &dyn MonomialOrder, p: &AagParams) -> Self {
        if order.compare(&self.lead, &self.tail, p) == Ordering::Less {
            Binomial::new(self.tail, self.lead, self.family)
        } else {
            self
        }
    }

    /// The monomial `order` picks as leading term.
    pub fn leading_term(&self, order: &dyn MonomialOrder, p: &AagParams) -> Monomial {
        if order.compare(&self.lead, &self.tail, p) == Ordering::Less {
            self.tail.clone()
        } else {
            self.lead.clone()
        }
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {} [{}]", self.lead, self.tail, self.family)
    }
}

/// `φ(lead) = φ(tail)`.
pub fn kernel_check(b: &Binomial, p: &AagParams) -> bool {
    match (phi(&b.lead, p), phi(&b.tail, p)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

fn x(k: usize, i: usize, e: Int) -> Monomial {
    Monomial::var(k, i, e as u64)
}

/// `L_i x_k^σ`, with `L_0 = 1` and `L_k = x_k`.
fn l_xk(k: usize, i: Int, sigma: Int) -> Monomial {
    let m = x(k, k, sigma);
    if i > 0 {
        m.times_var(i as usize, 1)
    } else {
        m
    }
}

pub fn family_a(p: &AagParams) -> Vec<Binomial> {
    let k = p.k_usize();
    let mut out = Vec::with_capacity(k * (k - 1) / 2);
    for i in 1..k {
        for j in i..k {
            let lead = x(k, i, 1).times_var(j, 1);
            let tail = if i + j <= k {
                x(k, 0, p.h).times_var(i + j, 1)
            } else {
                x(k, i + j - k, 1).times_var(k, 1)
            };
            out.push(Binomial::new(lead, tail, BinomialFamily::A));
        }
    }
    out
}

pub fn family_b(p: &AagParams, t: &EuclidTable) -> Result<Vec<Binomial>> {
    t.require_hypothesis()?;
    let k = p.k_usize();
    let m = t.mu_row();
    let tail = x(k, 0, m.r_prime).times_var(k + 1, m.p as u64);
    if m.rho == 0 {
        return Ok(vec![Binomial::new(x(k, k, m.sigma), tail, BinomialFamily::B)]);
    }
    let mut out = vec![Binomial::new(l_xk(k, m.rho, m.sigma), tail, BinomialFamily::B)];
    for j in 1..=(p.k - m.rho) {
        let lead = l_xk(k, m.rho + j, m.sigma);
        let tail = x(k, 0, m.r_prime - p.h)
            .times_var(j as usize, 1)
            .times_var(k + 1, m.p as u64);
        out.push(Binomial::new(lead, tail, BinomialFamily::B));
    }
    Ok(out)
}

pub fn family_c(p: &AagParams, t: &EuclidTable) -> Result<Vec<Binomial>> {
    t.require_hypothesis()?;
    let k = p.k_usize();
    if t.next_row().s == 0 {
        return Ok(Vec::new());
    }
    let dp = (t.next_row().p - t.mu_row().p) as u64;
    let (ts, tr) = (t.tilde_sigma, t.tilde_rho);
    let lead = l_xk(k, tr, ts).times_var(k + 1, dp);
    let mut out = vec![Binomial::new(lead, x(k, 0, t.tilde_r), BinomialFamily::C)];
    if tr > 0 {
        for j in 1..=(p.k - tr) {
            let lead = l_xk(k, j + tr, ts).times_var(k + 1, dp);
            let tail = x(k, 0, t.tilde_r - p.h).times_var(j as usize, 1);
            out.push(Binomial::new(lead, tail, BinomialFamily::C));
        }
    }
    Ok(out)
}

pub fn family_d(p: &AagParams, t: &EuclidTable) -> Binomial {
    let k = p.k_usize();
    let n = t.next_row();
    let tail = l_xk(k, n.rho, n.sigma).times_var(0, (-n.r_prime) as u64);
    Binomial::new(x(k, k + 1, n.p), tail, BinomialFamily::D)
}

pub fn families_bcd(p: &AagParams, t: &EuclidTable) -> Result<Vec<Binomial>> {
    let mut out = family_b(p, t)?;
    out.extend(family_c(p, t)?);
    out.push(family_d(p, t));
    Ok(out)
}

/// `𝒢 = 𝒜 ∪ ℬ ∪ 𝒞 ∪ 𝒟`, each written lead first.
pub fn basis(p: &AagParams, t: &EuclidTable) -> Result<Vec<Binomial>> {
    let mut out = family_a(p);
    out.extend(families_bcd(p, t)?);
    Ok(out)
}

/// One binomial per table row, from `s·d − p·c = r·a`, oriented by `order`.
pub fn row_binomials(p: &AagParams, t: &EuclidTable, order: &dyn MonomialOrder) -> Vec<Binomial> {
    let k = p.k_usize();
    t.rows
        .iter()
        .map(|row| {
            let l = l_xk(k, row.rho, row.sigma);
            let b = if row.r_prime >= 0 {
                let tail = x(k, 0, row.r_prime).times_var(k + 1, row.p as u64);
                Binomial::new(l, tail, BinomialFamily::Row)
            } else {
                let tail = l.times_var(0, (-row.r_prime) as u64);
                Binomial::new(x(k, k + 1, row.p), tail, BinomialFamily::Row)
            };
            b.oriented(order, p)
        })
        .collect()
}

/// A binomial together with the tilde quantities it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeBinomial {
    pub binomial: Binomial,
    pub tilde_rho: Int,
    pub tilde_r: Int,
}

/// `L_ρ̃ x_k^σ̃ x_{k+1}^{p_{i+1} − p_i} − x₀^r̃` for every consecutive pair.
pub fn tilde_binomials(t: &EuclidTable, p: &AagParams) -> Vec<TildeBinomial> {
    let k = p.k_usize();
    t.rows
        .windows(2)
        .map(|w| {
            let (ts, tr, tl) = decompose(w[0].s - w[1].s, p.k);
            let tilde_r = w[0].r - w[1].r + p.h * (ts + tl);
            let lead = l_xk(k, tr, ts).times_var(k + 1, (w[1].p - w[0].p) as u64);
            TildeBinomial {
                binomial: Binomial::new(lead, x(k, 0, tilde_r), BinomialFamily::Tilde),
                tilde_rho: tr,
                tilde_r,
            }
        })
        .collect()
}

/// Outcome of [`certify_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kernel_ok: bool,
    pub pairs_reduced: bool,
    pub bounded: bool,
    pub standard_count: Int,
    pub matches_apery: bool,
}

impl Certificate {
    pub fn ok(&self) -> bool {
        self.kernel_ok && self.pairs_reduced && self.bounded && self.matches_apery
    }
}

/// Certifies `basis` under `order` against the Apéry staircase.
///
/// With leading terms `LT`, standard monomials in `x₁, …, x_{k+1}` are
/// those divisible by no element of `LT`. If every `xᵢxⱼ` (`1 ≤ i ≤ j < k`)
/// and some power of each of `x_k`, `x_{k+1}` are leading-term multiples,
/// the standard monomials all have the shape `L_i x_k^α x_{k+1}^z` inside a
/// finite box, which is then scanned.
pub fn certify_with(
    p: &AagParams,
    t: &EuclidTable,
    basis: &[Binomial],
    order: &dyn MonomialOrder,
) -> Result<Certificate> {
    let k = p.k_usize();
    let ap = apery_set(p, t)?;
    let kernel_ok = basis.iter().all(|b| kernel_check(b, p));
    let leads: Vec<Monomial> = basis.iter().map(|b| b.leading_term(order, p)).collect();
    let reducible = |m: &Monomial| leads.iter().any(|l| l.divides(m));

    let pairs_reduced =
        (1..k).all(|i| (i..k).all(|j| reducible(&x(k, i, 1).times_var(j, 1))));
    let z_bound = leads
        .iter()
        .filter(|l| l.exponents[..=k].iter().all(|&e| e == 0))
        .map(|l| l.exponents[k + 1])
        .min();
    let alpha_bound = leads
        .iter()
        .filter(|l| l.exponents.iter().enumerate().all(|(i, &e)| i == k || e == 0))
        .map(|l| l.exponents[k])
        .min();
    let (Some(z_bound), Some(alpha_bound)) = (z_bound, alpha_bound) else {
        return Ok(Certificate {
            kernel_ok,
            pairs_reduced,
            bounded: false,
            standard_count: 0,
            matches_apery: false,
        });
    };

    let mut standard = HashSet::new();
    for y in 0..(alpha_bound as Int * p.k) {
        for z in 0..z_bound as Int {
            let pt = StandardPoint::new(y, z);
            if !reducible(&point_to_monomial(pt, k)) {
                standard.insert(pt);
            }
        }
    }
    let standard_count = standard.len() as Int;
    let matches_apery =
        standard_count == ap.len() && standard.iter().all(|&pt| ap.contains(pt));
    Ok(Certificate {
        kernel_ok,
        pairs_reduced,
        bounded: true,
        standard_count,
        matches_apery,
    })
}

pub fn certify_basis(p: &AagParams, t: &EuclidTable) -> Result<bool> {
    let g = basis(p, t)?;
    Ok(certify_with(p, t, &g, &WeightedDegRevLex)?.ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::build_table;
    use crate::params::validate_params;

    fn example1() -> (AagParams, EuclidTable) {
        let p = validate_params(155, 1, 4, 20, 177).unwrap();
        let t = build_table(&p).unwrap();
        (p, t)
    }

    #[test]
    fn family_a_small() {
        let p = AagParams::structural(7, 1, 2, 3, 11).unwrap();
        let a: Vec<String> = family_a(&p).iter().map(|b| format!("{} - {}", b.lead, b.tail)).collect();
        assert_eq!(a, vec!["x1^2 - x0^2*x2", "x1*x2 - x0^2*x3", "x2^2 - x1*x3"]);
        assert!(family_a(&p).iter().all(|b| kernel_check(b, &p)));
        let p2 = AagParams::structural(7, 1, 3, 2, 11).unwrap();
        let a2 = family_a(&p2);
        assert_eq!(a2.len(), 1);
        assert_eq!(a2[0].to_string(), "x1^2 - x0^3*x2 [A]");
    }

    #[test]
    fn example1_families() {
        let (p, t) = example1();
        let b = family_b(&p, &t).unwrap();
        assert_eq!(b.len(), 19);
        assert_eq!(b[0].to_string(), "x2*x20 - x0^7*x21 [B]");
        assert_eq!(b[1].to_string(), "x3*x20 - x0^3*x1*x21 [B]");
        assert_eq!(b[18].to_string(), "x20^2 - x0^3*x18*x21 [B]");
        let d = family_d(&p, &t);
        assert_eq!(d.to_string(), "x21^8 - x0*x1*x20 [D]");
        assert!(kernel_check(&d, &p));
        let g = basis(&p, &t).unwrap();
        assert!(g.iter().all(|b| kernel_check(b, &p)));
        for b in &g {
            assert_eq!(b.leading_term(&WeightedDegRevLex, &p), b.lead, "{b}");
        }
    }

    #[test]
    fn example1_tilde() {
        let (p, t) = example1();
        let tb = tilde_binomials(&t, &p);
        assert_eq!(tb[1].binomial.to_string(), "x1*x21^7 - x0^12 [Tilde]");
        assert!(tb.iter().all(|b| kernel_check(&b.binomial, &p) && b.tilde_r >= 2));
        assert!(row_binomials(&p, &t, &WeightedDegRevLex).iter().all(|b| kernel_check(b, &p)));
    }

    #[test]
    fn certificate_example1() {
        let (p, t) = example1();
        assert!(certify_basis(&p, &t).unwrap());
        let g = basis(&p, &t).unwrap();
        let cert = certify_with(&p, &t, &g, &WeightedDegRevLex).unwrap();
        assert_eq!(cert.standard_count, 155);
    }

    #[test]
    fn dropping_a_b_element_breaks_certificate() {
        let (p, t) = example1();
        let mut g = basis(&p, &t).unwrap();
        let pos = g.iter().position(|b| b.family == BinomialFamily::B).unwrap();
        g.remove(pos);
        let cert = certify_with(&p, &t, &g, &WeightedDegRevLex).unwrap();
        assert!(!cert.ok());
        assert!(cert.standard_count > 155);
    }

    #[test]
    fn inverted_order_fails() {
        let (p, t) = example1();
        let g = basis(&p, &t).unwrap();
        assert!(!certify_with(&p, &t, &g, &Inverted).unwrap().ok());
    }

    #[test]
    fn kernel_negative() {
        let p = AagParams::structural(7, 1, 2, 3, 11).unwrap();
        let b = Binomial::new(x(3, 1, 1), x(3, 2, 1), BinomialFamily::A);
        assert!(!kernel_check(&b, &p));
    }

    #[test]
    fn registry() {
        for name in order_names() {
            assert_eq!(order_by_name(name).unwrap().name(), *name);
        }
        assert!(order_by_name("lex").is_none());
    }
}
