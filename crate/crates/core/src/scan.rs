//! Grid scans and the oracle verification engine.
//!
//! Tuples are visited in lexicographic `(a, d, c, k, h)` order. Work is
//! spread over a rayon pool in fixed-size chunks and merged back in order,
//! so results do not depend on the worker count.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::classify::{classify_with, fast_hits, fast_path, Classification, Verdict};
use crate::error::{AagError, Result};
use crate::euclid::{build_table, check_invariants, EuclidTable};
use crate::grobner::{basis, certify_with, kernel_check, tilde_binomials, MonomialOrder, WeightedDegRevLex};
use crate::oracle::OracleReport;
use crate::params::AagParams;
use crate::pseudofrob::pf_tilde;
use crate::staircase::apery_set;
use crate::Int;

const CHUNK: usize = 1 << 14;

/// Inclusive integer range with a positive step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: Int,
    pub end: Int,
    pub step: Int,
}

impl Span {
    pub fn new(start: Int, end: Int) -> Self {
        Span { start, end, step: 1 }
    }

    pub fn stepped(start: Int, end: Int, step: Int) -> Self {
        Span { start, end, step }
    }

    pub fn single(v: Int) -> Self {
        Span::new(v, v)
    }

    pub fn len(&self) -> usize {
        if self.end < self.start || self.step <= 0 {
            0
        } else {
            ((self.end - self.start) / self.step + 1) as usize
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn nth(&self, i: usize) -> Int {
        self.start + self.step * i as Int
    }
}

impl From<RangeInclusive<Int>> for Span {
    fn from(r: RangeInclusive<Int>) -> Self {
        Span::new(*r.start(), *r.end())
    }
}

/// Which pivot rows are analysed with the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PivotFilter {
    /// `r′_μ ≥ h`, the filter of the published sweep.
    #[default]
    Strict,
    /// `r′_μ ≥ h` or `ρ_μ = 0`.
    Hypothesis,
    /// Everything valid; tuples outside the hypothesis fall back to the
    /// oracle.
    None,
}

impl PivotFilter {
    pub fn admits(self, t: &EuclidTable) -> bool {
        match self {
            PivotFilter::Strict => t.strict_pivot(),
            PivotFilter::Hypothesis => t.hypothesis_ok,
            PivotFilter::None => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanSpec {
    pub a: Span,
    pub d: Span,
    pub c: Span,
    pub k: Span,
    pub h: Span,
    pub filter: PivotFilter,
    /// Emit a record for every analysed tuple, not just almost symmetric
    /// ones.
    pub all: bool,
    pub oracle_verify: bool,
    pub fast_only: bool,
}

impl ScanSpec {
    pub fn new(a: Span, d: Span, c: Span, k: Span, h: Span) -> Self {
        ScanSpec {
            a,
            d,
            c,
            k,
            h,
            filter: PivotFilter::Strict,
            all: false,
            oracle_verify: false,
            fast_only: false,
        }
    }

    /// The sweep `150 ≤ a ≤ 165, −5 ≤ d ≤ 10, 170 ≤ c ≤ 186, 19 ≤ k ≤ 20,
    /// 1 ≤ h ≤ 4`.
    pub fn published_sweep() -> Self {
        ScanSpec::new(
            Span::new(150, 165),
            Span::new(-5, 10),
            Span::new(170, 186),
            Span::new(19, 20),
            Span::new(1, 4),
        )
    }

    pub fn total(&self) -> usize {
        self.a.len() * self.d.len() * self.c.len() * self.k.len() * self.h.len()
    }

    /// The `i`-th tuple `(a, d, c, k, h)` in lexicographic order.
    pub fn tuple(&self, mut i: usize) -> (Int, Int, Int, Int, Int) {
        let h = self.h.nth(i % self.h.len());
        i /= self.h.len();
        let k = self.k.nth(i % self.k.len());
        i /= self.k.len();
        let c = self.c.nth(i % self.c.len());
        i /= self.c.len();
        let d = self.d.nth(i % self.d.len());
        i /= self.d.len();
        (self.a.nth(i), d, c, k, h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub a: Int,
    pub d: Int,
    pub c: Int,
    pub k: Int,
    pub h: Int,
    pub classification: Classification,
    pub oracle_agrees: Option<bool>,
}

/// What [`scan`] hands to its sink, in tuple order.
#[derive(Debug, Clone, Copy)]
pub enum ScanEvent<'a> {
    Record(&'a ScanRecord),
    /// A valid tuple whose analysis failed. Never aborts the scan.
    Error {
        tuple: (Int, Int, Int, Int, Int),
        message: &'a str,
    },
}

/// Why a tuple produced no record.
pub type SkipReason = &'static str;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ScanSummary {
    pub total: usize,
    pub analysed: usize,
    pub records: usize,
    pub skipped: BTreeMap<SkipReason, usize>,
    pub errors: Vec<((Int, Int, Int, Int, Int), String)>,
}

enum Outcome {
    Skip(SkipReason),
    Quiet,
    Record(Box<ScanRecord>),
    Failed(String),
}

/// Validates a tuple and applies the pivot filter. Cheap checks run first;
/// the oracle-backed minimality check runs last.
fn admit(
    tuple: (Int, Int, Int, Int, Int),
    filter: PivotFilter,
) -> std::result::Result<(AagParams, EuclidTable), SkipReason> {
    let (a, d, c, k, h) = tuple;
    let p = AagParams::structural(a, d, h, k, c).map_err(|e| e.kind())?;
    let t = build_table(&p).map_err(|e| e.kind())?;
    if !filter.admits(&t) {
        return Err("pivot_filter");
    }
    p.check_minimal().map_err(|e| e.kind())?;
    Ok((p, t))
}

fn scan_one(spec: &ScanSpec, tuple: (Int, Int, Int, Int, Int)) -> Outcome {
    let (p, t) = match admit(tuple, spec.filter) {
        Ok(x) => x,
        Err(reason) => return Outcome::Skip(reason),
    };
    let run = || -> Result<Option<ScanRecord>> {
        let classification = if spec.fast_only {
            match fast_path(&p)? {
                Some(c) => c,
                None => return Ok(None),
            }
        } else if t.hypothesis_ok && p.k >= 3 {
            classify_with(&p, &t, &pf_tilde(&p, &t)?)?
        } else {
            crate::classify::classify(&p)?
        };
        if !spec.all && classification.verdict != Verdict::AlmostSymmetric {
            return Ok(None);
        }
        let oracle_agrees = if spec.oracle_verify {
            let report = OracleReport::with_modulus(p.generators(), p.a)?;
            let pf_ok = classification.pf.is_empty() || classification.pf == report.pf;
            let verdict_ok = match classification.verdict {
                Verdict::OracleOnly => true,
                v => report.almost_symmetric == matches!(v, Verdict::AlmostSymmetric | Verdict::Symmetric),
            };
            Some(
                pf_ok
                    && verdict_ok
                    && report.frobenius == classification.frobenius
                    && report.type_ == classification.type_,
            )
        } else {
            None
        };
        let (a, d, c, k, h) = tuple;
        Ok(Some(ScanRecord {
            a,
            d,
            c,
            k,
            h,
            classification,
            oracle_agrees,
        }))
    };
    match run() {
        Ok(Some(r)) => Outcome::Record(Box::new(r)),
        Ok(None) => Outcome::Quiet,
        Err(e) => Outcome::Failed(e.to_string()),
    }
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers {
        b = b.num_threads(n.max(1));
    }
    b.build()
        .map_err(|e| AagError::NonsenseInput(format!("thread pool: {e}")))
}

/// Runs the scan, handing each record and per-tuple error to `sink` in
/// tuple order.
pub fn scan<F>(spec: &ScanSpec, workers: Option<usize>, mut sink: F) -> Result<ScanSummary>
where
    F: FnMut(ScanEvent<'_>) -> std::io::Result<()>,
{
    let total = spec.total();
    let mut summary = ScanSummary {
        total,
        ..Default::default()
    };
    let pool = pool(workers)?;
    let mut start = 0;
    while start < total {
        let end = (start + CHUNK).min(total);
        let outcomes: Vec<Outcome> = pool.install(|| {
            (start..end)
                .into_par_iter()
                .map(|i| scan_one(spec, spec.tuple(i)))
                .collect()
        });
        for (i, outcome) in (start..end).zip(outcomes) {
            match outcome {
                Outcome::Skip(reason) => *summary.skipped.entry(reason).or_default() += 1,
                Outcome::Quiet => summary.analysed += 1,
                Outcome::Record(r) => {
                    summary.analysed += 1;
                    summary.records += 1;
                    sink(ScanEvent::Record(&r)).map_err(write_failed)?;
                }
                Outcome::Failed(msg) => {
                    summary.analysed += 1;
                    let tuple = spec.tuple(i);
                    sink(ScanEvent::Error {
                        tuple,
                        message: &msg,
                    })
                    .map_err(write_failed)?;
                    summary.errors.push((tuple, msg));
                }
            }
        }
        start = end;
    }
    Ok(summary)
}

fn write_failed(e: std::io::Error) -> AagError {
    AagError::NonsenseInput(format!("write failed: {e}"))
}

/// Convenience wrapper collecting all records.
pub fn scan_collect(spec: &ScanSpec, workers: Option<usize>) -> Result<(Vec<ScanRecord>, ScanSummary)> {
    let mut out = Vec::new();
    let summary = scan(spec, workers, |ev| {
        if let ScanEvent::Record(r) = ev {
            out.push(r.clone());
        }
        Ok(())
    })?;
    Ok((out, summary))
}

/// The individual checks run by [`verify`].
pub const CHECKS: &[&str] = &[
    "apery",
    "pf",
    "frobenius",
    "verdict",
    "family",
    "fast_path",
    "euclid",
    "grobner",
];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifySummary {
    pub total: usize,
    pub checked: usize,
    pub skipped: BTreeMap<SkipReason, usize>,
    pub mismatches: BTreeMap<&'static str, usize>,
    pub first_failure: Option<((Int, Int, Int, Int, Int), Vec<&'static str>)>,
    pub almost_symmetric: usize,
    pub fast_hits: usize,
}

impl VerifySummary {
    pub fn total_mismatches(&self) -> usize {
        self.mismatches.values().sum()
    }
}

/// All checks for a single admitted tuple; returns the names of the failing
/// ones plus (almost symmetric, fast hit) flags.
pub fn verify_tuple(
    p: &AagParams,
    t: &EuclidTable,
    order: &dyn MonomialOrder,
) -> (Vec<&'static str>, bool, bool) {
    let mut failed = Vec::new();
    let mut run = || -> Result<(bool, bool)> {
        if !check_invariants(t, p).is_empty() {
            failed.push("euclid");
        }
        let report = OracleReport::with_modulus(p.generators(), p.a)?;
        let ap = apery_set(p, t)?;
        let mut expected = report.apery.values.clone();
        expected.sort_unstable();
        if ap.len() != p.a || ap.values(p) != expected {
            failed.push("apery");
        }
        if p.k < 2 {
            return Ok((false, false));
        }
        let pf = pf_tilde(p, t)?;
        if pf.pf_numbers != report.pf {
            failed.push("pf");
        }
        if pf.frobenius != report.frobenius {
            failed.push("frobenius");
        }
        let g = basis(p, t)?;
        let tilde_ok = tilde_binomials(t, p).iter().all(|b| {
            kernel_check(&b.binomial, p) && b.tilde_r >= 2 && (b.tilde_rho == 0 || b.tilde_r > p.h)
        });
        let a_count = g.iter().filter(|b| b.family == crate::grobner::BinomialFamily::A).count();
        let cert = certify_with(p, t, &g, order)?;
        if !cert.ok() || !tilde_ok || a_count as Int != p.k * (p.k - 1) / 2 {
            failed.push("grobner");
        }
        if p.k < 3 {
            return Ok((false, false));
        }
        let full = classify_with(p, t, &pf)?;
        let oracle_special = report.almost_symmetric;
        let full_special = matches!(full.verdict, Verdict::AlmostSymmetric | Verdict::Symmetric);
        if oracle_special != full_special || (report.type_ == 1) != (full.verdict == Verdict::Symmetric) {
            failed.push("verdict");
        }
        if full_special && full.family.is_none() {
            failed.push("family");
        }
        let almost = full.verdict == Verdict::AlmostSymmetric;
        let hits = fast_hits(p, t)?;
        let fast_ok = match (almost, hits.as_slice()) {
            (false, []) => true,
            (true, [(f, fp)]) => {
                Some(f.id()) == full.family
                    && f.reported(fp) == full.solved
                    && f.type_of(fp) as usize == full.type_
                    && f.frobenius(p, fp) == full.frobenius
            }
            _ => false,
        };
        if !fast_ok {
            failed.push("fast_path");
        }
        Ok((almost, !hits.is_empty()))
    };
    match run() {
        Ok((almost, hit)) => (failed, almost, hit),
        Err(_) => {
            failed.push("error");
            (failed, false, false)
        }
    }
}

/// Runs every closed-form result against the oracle over a grid of
/// hypothesis-satisfying tuples.
pub fn verify(spec: &ScanSpec, workers: Option<usize>, order: &dyn MonomialOrder) -> Result<VerifySummary> {
    let total = spec.total();
    let mut summary = VerifySummary {
        total,
        ..Default::default()
    };
    let filter = match spec.filter {
        PivotFilter::None => PivotFilter::Hypothesis,
        f => f,
    };
    let pool = pool(workers)?;
    let mut start = 0;
    while start < total {
        let end = (start + CHUNK).min(total);
        let results: Vec<_> = pool.install(|| {
            (start..end)
                .into_par_iter()
                .map(|i| {
                    admit(spec.tuple(i), filter).map(|(p, t)| verify_tuple(&p, &t, order))
                })
                .collect()
        });
        for (i, r) in (start..end).zip(results) {
            match r {
                Err(reason) => *summary.skipped.entry(reason).or_default() += 1,
                Ok((failed, almost, hit)) => {
                    summary.checked += 1;
                    summary.almost_symmetric += almost as usize;
                    summary.fast_hits += hit as usize;
                    for name in &failed {
                        *summary.mismatches.entry(name).or_default() += 1;
                    }
                    if !failed.is_empty() && summary.first_failure.is_none() {
                        summary.first_failure = Some((spec.tuple(i), failed));
                    }
                }
            }
        }
        start = end;
    }
    Ok(summary)
}

/// Verification with the standard order.
pub fn verify_standard(spec: &ScanSpec, workers: Option<usize>) -> Result<VerifySummary> {
    verify(spec, workers, &WeightedDegRevLex)
}
