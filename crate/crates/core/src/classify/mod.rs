//! Symmetric / almost symmetric classification.
//!
//! The full path computes the pseudo-Frobenius set from the pivot rows,
//! applies Nari's pairing criterion, and then names the closed-form family
//! whose row shape matches. The fast path skips the pseudo-Frobenius
//! computation and solves each family's Frobenius formula for `p_{μ+1}`.

pub mod families;
pub mod family;

use std::fmt;
use std::sync::OnceLock;

pub use family::{
    adc_from_rows, admissible_samples, consistent, family_generate, family_table, match_table,
    Family, FamilyKind, FamilyParams, FamilyRegistry, Field, Row,
};

use crate::error::{AagError, Result};
use crate::euclid::{build_table, EuclidTable};
use crate::oracle;
use crate::params::AagParams;
use crate::pseudofrob::{pf_tilde, CaseTrace, PfResult};
use crate::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Symmetric,
    AlmostSymmetric,
    NeitherSpecial,
    OracleOnly,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Symmetric => "Symmetric",
            Verdict::AlmostSymmetric => "AlmostSymmetric",
            Verdict::NeitherSpecial => "NeitherSpecial",
            Verdict::OracleOnly => "OracleOnly",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub family: Option<&'static str>,
    pub family_params: Option<FamilyParams>,
    /// Solved parameters as reported; `p` is `p_{μ+1}`.
    pub solved: Vec<(&'static str, Int)>,
    pub type_: usize,
    pub frobenius: Int,
    pub pf: Vec<Int>,
    pub fast_path_used: bool,
    pub hypothesis_ok: bool,
    pub case_trace: Option<CaseTrace>,
}

impl Classification {
    pub fn solved_value(&self, name: &str) -> Option<Int> {
        self.solved.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }
}

pub fn registry() -> &'static FamilyRegistry {
    static REGISTRY: OnceLock<FamilyRegistry> = OnceLock::new();
    REGISTRY.get_or_init(FamilyRegistry::standard)
}

/// Nari's criterion on a sorted pseudo-Frobenius list ending in `F`:
/// `f_i + f_{t−i} = F` for `i = 1..t−1`.
pub fn nari_check(pf: &[Int], frobenius: Int) -> Result<bool> {
    match pf.last() {
        Some(&last) if last == frobenius => {}
        _ => {
            return Err(AagError::MalformedPf(format!(
                "last element {:?} is not F = {frobenius}",
                pf.last()
            )))
        }
    }
    if pf.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AagError::MalformedPf("list is not strictly increasing".into()));
    }
    let t = pf.len();
    Ok((0..t - 1).all(|i| pf[i] + pf[t - 2 - i] == frobenius))
}

/// Full classification: pivot rows, pseudo-Frobenius set, Nari check,
/// family identification. Falls back to the oracle when the hypothesis
/// fails or `k < 3`.
pub fn classify(p: &AagParams) -> Result<Classification> {
    let t = build_table(p)?;
    if !t.hypothesis_ok || p.k < 3 {
        return oracle_only(p, t.hypothesis_ok);
    }
    let pf = pf_tilde(p, &t)?;
    classify_with(p, &t, &pf)
}

fn oracle_only(p: &AagParams, hypothesis_ok: bool) -> Result<Classification> {
    let report = oracle::OracleReport::with_modulus(p.generators(), p.a)?;
    Ok(Classification {
        verdict: Verdict::OracleOnly,
        family: None,
        family_params: None,
        solved: Vec::new(),
        type_: report.type_,
        frobenius: report.frobenius,
        pf: report.pf,
        fast_path_used: false,
        hypothesis_ok,
        case_trace: None,
    })
}

/// Classification from an already computed table and pseudo-Frobenius set.
pub fn classify_with(p: &AagParams, t: &EuclidTable, pf: &PfResult) -> Result<Classification> {
    let verdict = if pf.type_ == 1 {
        Verdict::Symmetric
    } else if nari_check(&pf.pf_numbers, pf.frobenius)? {
        Verdict::AlmostSymmetric
    } else {
        Verdict::NeitherSpecial
    };
    let kind = match verdict {
        Verdict::Symmetric => Some(FamilyKind::Symmetric),
        Verdict::AlmostSymmetric => Some(FamilyKind::AlmostSymmetric),
        _ => None,
    };
    let found = kind.and_then(|kind| {
        registry().iter().filter(|f| f.kind() == kind).find_map(|f| {
            let fp = match_table(f, p, t)?;
            (f.type_of(&fp) == pf.type_ as Int && f.frobenius(p, &fp) == pf.frobenius)
                .then_some((f, fp))
        })
    });
    Ok(Classification {
        verdict,
        family: found.map(|(f, _)| f.id()),
        family_params: found.map(|(_, fp)| fp),
        solved: found.map(|(f, fp)| f.reported(&fp)).unwrap_or_default(),
        type_: pf.type_,
        frobenius: pf.frobenius,
        pf: pf.pf_numbers.clone(),
        fast_path_used: false,
        hypothesis_ok: t.hypothesis_ok,
        case_trace: Some(pf.case_trace),
    })
}

/// Consistent fast-path hits for every almost symmetric family.
pub fn fast_hits(p: &AagParams, t: &EuclidTable) -> Result<Vec<(&'static dyn Family, FamilyParams)>> {
    let mut hits: Vec<(&'static dyn Family, FamilyParams)> = Vec::new();
    for f in registry().iter() {
        if f.kind() != FamilyKind::AlmostSymmetric {
            continue;
        }
        if (f.id() == "Thm5.1" && p.d < 0) || (f.id() == "Thm5.2" && p.d > 0) {
            continue;
        }
        for fp in f.fast_candidates(p)? {
            if consistent(f, &fp, p, t) && !hits.iter().any(|(g, q)| g.id() == f.id() && *q == fp) {
                hits.push((f, fp));
            }
        }
    }
    Ok(hits)
}

/// Classification through the linear/quadratic Frobenius formulas alone.
///
/// `Ok(None)` means no family is consistent with the tuple; the caller
/// should use [`classify`].
pub fn fast_path(p: &AagParams) -> Result<Option<Classification>> {
    if p.k < 3 {
        return Ok(None);
    }
    let t = build_table(p)?;
    if !t.hypothesis_ok {
        return Ok(None);
    }
    let hits = fast_hits(p, &t)?;
    match hits.as_slice() {
        [] => Ok(None),
        [(f, fp)] => Ok(Some(Classification {
            verdict: Verdict::AlmostSymmetric,
            family: Some(f.id()),
            family_params: Some(*fp),
            solved: f.reported(fp),
            type_: f.type_of(fp) as usize,
            frobenius: f.frobenius(p, fp),
            pf: Vec::new(),
            fast_path_used: true,
            hypothesis_ok: true,
            case_trace: None,
        })),
        many => Err(AagError::AmbiguousFastPath(
            many.iter().map(|(f, _)| f.id().to_string()).collect(),
        )),
    }
}
