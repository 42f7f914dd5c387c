//! One-shot analysis of a tuple, bundling every closed-form result.

use crate::classify::{classify_with, fast_path, Classification};
use crate::error::Result;
use crate::euclid::{build_table, EuclidTable};
use crate::grobner::{basis, certify_basis, Binomial};
use crate::oracle::OracleReport;
use crate::params::AagParams;
use crate::pseudofrob::{pf_tilde, PfResult};
use crate::staircase::{apery_set, AperySet};
use crate::Int;

#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub params: AagParams,
    pub table: EuclidTable,
    pub apery: Option<AperySet>,
    pub pf: Option<PfResult>,
    pub classification: Classification,
    pub basis: Option<Vec<Binomial>>,
    pub basis_certified: Option<bool>,
    pub oracle: Option<OracleCheck>,
}

/// Closed form against brute force.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub report: OracleReport,
    pub apery_agrees: bool,
    pub pf_agrees: bool,
    pub frobenius_agrees: bool,
}

impl OracleCheck {
    pub fn agrees(&self) -> bool {
        self.apery_agrees && self.pf_agrees && self.frobenius_agrees
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalysisOptions {
    pub fast: bool,
    pub grobner: bool,
    pub oracle_verify: bool,
}

pub fn analyze(p: &AagParams, opts: AnalysisOptions) -> Result<AnalysisReport> {
    let table = build_table(p)?;
    let closed_form = table.hypothesis_ok && p.k >= 3;
    let apery = table.hypothesis_ok.then(|| apery_set(p, &table)).transpose()?;
    let pf = (table.hypothesis_ok && p.k >= 2)
        .then(|| pf_tilde(p, &table))
        .transpose()?;
    let fast = if opts.fast && closed_form {
        fast_path(p)?
    } else {
        None
    };
    let classification = match (fast, &pf) {
        (Some(c), _) => c,
        (None, Some(pf)) if closed_form => classify_with(p, &table, pf)?,
        _ => crate::classify::classify(p)?,
    };
    let (basis, basis_certified) = if opts.grobner && table.hypothesis_ok && p.k >= 2 {
        (Some(basis(p, &table)?), Some(certify_basis(p, &table)?))
    } else {
        (None, None)
    };
    let oracle = if opts.oracle_verify {
        Some(oracle_check(p, apery.as_ref(), pf.as_ref(), classification.frobenius)?)
    } else {
        None
    };
    Ok(AnalysisReport {
        params: p.clone(),
        table,
        apery,
        pf,
        classification,
        basis,
        basis_certified,
        oracle,
    })
}

/// Compares closed-form Apéry values, PF set and Frobenius number with the
/// shortest-path oracle (modulus `a`).
pub fn oracle_check(
    p: &AagParams,
    apery: Option<&AperySet>,
    pf: Option<&PfResult>,
    frobenius: Int,
) -> Result<OracleCheck> {
    let report = OracleReport::with_modulus(p.generators(), p.a)?;
    let apery_agrees = apery.is_none_or(|ap| {
        let mut expected = report.apery.values.clone();
        expected.sort_unstable();
        ap.values(p) == expected
    });
    let pf_agrees = pf.is_none_or(|pf| pf.pf_numbers == report.pf);
    Ok(OracleCheck {
        apery_agrees,
        pf_agrees,
        frobenius_agrees: frobenius == report.frobenius,
        report,
    })
}
