//! Pseudo-Frobenius monomials read off the pivot rows.
//!
//! Every pseudo-Frobenius monomial is a standard monomial whose
//! `x_{k+1}`-exponent is either `p_{μ+1} − 1` (first family) or
//! `p_{μ+1} − p_μ − 1` (second family). Which `L_i x_k^α` factors occur is
//! decided by a flat table of clauses keyed on the pivot rows.

use std::fmt;

use crate::error::{AagError, Result};
use crate::euclid::EuclidTable;
use crate::params::{AagParams, Monomial};
use crate::staircase::{point_to_monomial, StandardPoint};
use crate::Int;

/// Which clause produced each family, e.g. `2b` and `7i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CaseTrace {
    pub pf1: &'static str,
    pub pf2: &'static str,
}

impl fmt::Display for CaseTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PF1: clause {}; PF2: clause {}", self.pf1, self.pf2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfResult {
    pub pf1: Vec<StandardPoint>,
    pub pf2: Vec<StandardPoint>,
    pub pf_numbers: Vec<Int>,
    pub type_: usize,
    pub frob_point: StandardPoint,
    pub frobenius: Int,
    pub case_trace: CaseTrace,
}

impl PfResult {
    pub fn pf1_monomials(&self, k: usize) -> Vec<Monomial> {
        self.pf1.iter().map(|&pt| point_to_monomial(pt, k)).collect()
    }

    pub fn pf2_monomials(&self, k: usize) -> Vec<Monomial> {
        self.pf2.iter().map(|&pt| point_to_monomial(pt, k)).collect()
    }

    pub fn frob_monomial(&self, k: usize) -> Monomial {
        point_to_monomial(self.frob_point, k)
    }

    /// Which family contains the Frobenius monomial: 1 or 2.
    pub fn frob_family(&self) -> u8 {
        if self.pf1.contains(&self.frob_point) {
            1
        } else {
            2
        }
    }
}

/// `L_i x_k^α x_{k+1}^z` for `i = lo..=hi` (with `L_k = x_k`).
fn run(k: Int, lo: Int, hi: Int, alpha: Int, z: Int) -> Result<Vec<StandardPoint>> {
    if lo > hi {
        return Ok(Vec::new());
    }
    if alpha < 0 || z < 0 || lo < 0 {
        return Err(AagError::InternalDispatchGap(format!(
            "negative exponent (alpha={alpha}, z={z}, i from {lo})"
        )));
    }
    Ok((lo..=hi)
        .map(|i| StandardPoint::new(k * alpha + i, z))
        .collect())
}

pub fn pf_tilde(p: &AagParams, t: &EuclidTable) -> Result<PfResult> {
    if p.k < 2 {
        return Err(AagError::NonsenseInput(format!(
            "closed-form pseudo-Frobenius sets need k >= 2 (got k={})",
            p.k
        )));
    }
    t.require_hypothesis()?;
    let k = p.k;
    let (m, n) = (t.mu_row(), t.next_row());
    let (st, rt) = (t.tilde_sigma, t.tilde_rho);
    let z1 = n.p - 1;
    let z2 = n.p - m.p - 1;

    let (c1, pf1) = if n.r_prime == 0 {
        if n.rho == 0 {
            ("1a", Vec::new())
        } else if rt == 0 {
            ("1b", run(k, 1, k - n.rho, st - 1, z1)?)
        } else if rt == 1 && st == 0 {
            ("1c", Vec::new())
        } else if rt == 1 {
            ("1d", run(k, 1, k - n.rho, st - 1, z1)?)
        } else {
            ("1e", run(k, 1, (rt - 1).min(k - n.rho), st, z1)?)
        }
    } else if rt == 0 {
        ("2a", run(k, 1, k - 1, st - 1, z1)?)
    } else if rt == 1 && st == 0 {
        ("2b", run(k, 0, 0, 0, z1)?)
    } else if rt == 1 {
        ("2c", run(k, 1, k, st - 1, z1)?)
    } else {
        ("2d", run(k, 1, rt - 1, st, z1)?)
    };

    let (sm, rho, rp) = (m.sigma, m.rho, m.r_prime);
    let (c2, pf2) = if n.s == 0 {
        ("3", Vec::new())
    } else if rho == 0 {
        if n.s >= k - 1 {
            ("4i", run(k, 1, k - 1, sm - 1, z2)?)
        } else {
            ("4ii", run(k, rt, k - 1, sm - 1, z2)?)
        }
    } else if rho == 1 && rp > p.h {
        if n.s >= k {
            ("5i", run(k, 1, k, sm - 1, z2)?)
        } else if n.s > 1 {
            ("5ii", run(k, rt, k, sm - 1, z2)?)
        } else {
            ("5iii", run(k, 0, 0, sm, z2)?)
        }
    } else if rho == 1 && rp == p.h {
        if m.s - n.s == 1 {
            ("6i", run(k, 1, k, sm - 1, z2)?)
        } else if m.s - n.s <= m.s - k {
            ("6ii", run(k, 1, 1, sm - 1, z2)?)
        } else {
            ("6iii", Vec::new())
        }
    } else if rho > 1 {
        if n.s >= rho - 1 {
            ("7i", run(k, 1, rho - 1, sm, z2)?)
        } else {
            ("7ii", run(k, rt, rho - 1, sm, z2)?)
        }
    } else {
        return Err(AagError::InternalDispatchGap(format!(
            "rho_mu={rho}, r'_mu={rp}, h={}",
            p.h
        )));
    };

    let mut pf_numbers: Vec<Int> = pf1.iter().chain(&pf2).map(|pt| pt.phi(p) - p.a).collect();
    let (pf_numbers, type_) = pf_numbers_and_type(&mut pf_numbers)?;
    let frob_point = *pf1
        .iter()
        .chain(&pf2)
        .max_by_key(|pt| pt.phi(p))
        .ok_or_else(|| AagError::InternalDispatchGap("empty pseudo-Frobenius set".into()))?;
    Ok(PfResult {
        pf1,
        pf2,
        frobenius: frob_point.phi(p) - p.a,
        pf_numbers,
        type_,
        frob_point,
        case_trace: CaseTrace { pf1: c1, pf2: c2 },
    })
}

/// Sorts the values and rejects duplicates, which would mean two clauses
/// produced the same monomial.
pub fn pf_numbers_and_type(values: &mut [Int]) -> Result<(Vec<Int>, usize)> {
    values.sort_unstable();
    if let Some(w) = values.windows(2).find(|w| w[0] == w[1]) {
        return Err(AagError::DuplicatePfValue(w[0]));
    }
    Ok((values.to_vec(), values.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euclid::build_table;
    use crate::params::validate_params;

    fn pf(a: Int, d: Int, h: Int, k: Int, c: Int) -> PfResult {
        let p = validate_params(a, d, h, k, c).unwrap();
        let t = build_table(&p).unwrap();
        pf_tilde(&p, &t).unwrap()
    }

    #[test]
    fn example1() {
        let r = pf(155, 1, 4, 20, 177);
        assert_eq!(r.case_trace, CaseTrace { pf1: "2b", pf2: "7i" });
        assert_eq!(r.pf1_monomials(20)[0].to_string(), "x21^7");
        assert_eq!(r.pf2_monomials(20)[0].to_string(), "x1*x20*x21^6");
        assert_eq!(r.pf_numbers, vec![1084, 2168]);
        assert_eq!(r.type_, 2);
        assert_eq!(r.frobenius, 2168);
        assert_eq!(r.frob_family(), 2);
        assert_eq!(r.case_trace.to_string(), "PF1: clause 2b; PF2: clause 7i");
    }

    #[test]
    fn sweep_record_six() {
        let r = pf(165, 7, 3, 19, 183);
        assert_eq!(r.type_, 19);
    }

    #[test]
    fn duplicates_are_rejected() {
        assert_eq!(
            pf_numbers_and_type(&mut [5, 3, 5]),
            Err(AagError::DuplicatePfValue(5))
        );
        assert_eq!(pf_numbers_and_type(&mut [5, 3]).unwrap(), (vec![3, 5], 2));
    }

    #[test]
    fn hypothesis_failure() {
        // h = 4 with r'_mu < h and rho_mu != 0 somewhere in a small grid.
        let mut seen = false;
        'outer: for a in 20..80 {
            for c in 20..120 {
                let Ok(p) = validate_params(a, 1, 4, 3, c) else { continue };
                let t = build_table(&p).unwrap();
                if !t.hypothesis_ok {
                    assert!(matches!(
                        pf_tilde(&p, &t),
                        Err(AagError::HypothesisViolated { .. })
                    ));
                    seen = true;
                    break 'outer;
                }
            }
        }
        assert!(seen);
    }
}
