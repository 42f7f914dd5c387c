//! JSON and CSV shaping. Integers beyond 2^53 are written as decimal
//! strings so JSON consumers with double-precision numbers stay exact.

use std::io::Write;

use aag_core::classify::Classification;
use aag_core::euclid::EuclidTable;
use aag_core::oracle::OracleReport;
use aag_core::report::AnalysisReport;
use aag_core::scan::ScanRecord;
use aag_core::Int;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

const SAFE: Int = 1 << 53;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Num(pub Int);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.abs() <= SAFE {
            s.serialize_i64(self.0 as i64)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

fn nums(v: &[Int]) -> Vec<Num> {
    v.iter().copied().map(Num).collect()
}

pub const CSV_HEADER: [&str; 15] = [
    "a",
    "d",
    "c",
    "k",
    "h",
    "verdict",
    "family",
    "l",
    "p",
    "sigma",
    "r",
    "type",
    "frobenius",
    "fast_path",
    "hypothesis_ok",
];

#[derive(Serialize)]
pub struct RecordJson {
    pub a: Num,
    pub d: Num,
    pub c: Num,
    pub k: Num,
    pub h: Num,
    pub verdict: &'static str,
    pub family: Option<&'static str>,
    pub l: Option<Num>,
    pub p: Option<Num>,
    pub sigma: Option<Num>,
    pub r: Option<Num>,
    #[serde(rename = "type")]
    pub type_: usize,
    pub frobenius: Num,
    pub fast_path_used: bool,
    pub hypothesis_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

fn solved(c: &Classification, name: &str) -> Option<Num> {
    c.solved_value(name).map(Num)
}

impl RecordJson {
    pub fn new(r: &ScanRecord) -> Self {
        let c = &r.classification;
        RecordJson {
            a: Num(r.a),
            d: Num(r.d),
            c: Num(r.c),
            k: Num(r.k),
            h: Num(r.h),
            verdict: c.verdict.as_str(),
            family: c.family,
            l: solved(c, "l"),
            p: solved(c, "p"),
            sigma: solved(c, "sigma"),
            r: solved(c, "r"),
            type_: c.type_,
            frobenius: Num(c.frobenius),
            fast_path_used: c.fast_path_used,
            hypothesis_ok: c.hypothesis_ok,
            oracle_agrees: r.oracle_agrees,
        }
    }
}

pub fn csv_row(r: &ScanRecord) -> [String; 15] {
    let c = &r.classification;
    let opt = |name: &str| c.solved_value(name).map(|v| v.to_string()).unwrap_or_default();
    [
        r.a.to_string(),
        r.d.to_string(),
        r.c.to_string(),
        r.k.to_string(),
        r.h.to_string(),
        c.verdict.as_str().to_string(),
        c.family.unwrap_or("").to_string(),
        opt("l"),
        opt("p"),
        opt("sigma"),
        opt("r"),
        c.type_.to_string(),
        c.frobenius.to_string(),
        c.fast_path_used.to_string(),
        c.hypothesis_ok.to_string(),
    ]
}

pub fn table_json(t: &EuclidTable) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "i": r.index,
                "q": r.q.map(Num),
                "s": Num(r.s),
                "p": Num(r.p),
                "r": Num(r.r),
                "sigma": Num(r.sigma),
                "rho": Num(r.rho),
                "l": Num(r.ell),
                "r_prime": Num(r.r_prime),
            })
        })
        .collect();
    json!({
        "rows": rows,
        "mu": t.mu,
        "hypothesis_ok": t.hypothesis_ok,
        "strict_pivot": t.strict_pivot(),
        "tilde": {
            "sigma": Num(t.tilde_sigma),
            "rho": Num(t.tilde_rho),
            "l": Num(t.tilde_ell),
            "r": Num(t.tilde_r),
        },
    })
}

pub fn oracle_json(rep: &OracleReport, with_apery: bool) -> Value {
    let mut v = json!({
        "generators": nums(&rep.generators),
        "modulus": Num(rep.apery.modulus),
        "frobenius": Num(rep.frobenius),
        "pf": nums(&rep.pf),
        "type": rep.type_,
        "genus": Num(rep.genus),
        "symmetric": rep.symmetric,
        "almost_symmetric": rep.almost_symmetric,
    });
    if with_apery {
        v["apery"] = json!(nums(&rep.apery.values));
    }
    v
}

pub fn analysis_json(rep: &AnalysisReport, with_apery: bool) -> Value {
    let p = &rep.params;
    let k = p.k_usize();
    let c = &rep.classification;
    let solved: serde_json::Map<String, Value> = c
        .solved
        .iter()
        .map(|(n, v)| (n.to_string(), json!(Num(*v))))
        .collect();
    let mut v = json!({
        "params": {"a": Num(p.a), "d": Num(p.d), "h": Num(p.h), "k": Num(p.k), "c": Num(p.c)},
        "generators": nums(p.generators()),
        "table": table_json(&rep.table),
        "verdict": c.verdict.as_str(),
        "family": c.family,
        "solved": solved,
        "type": c.type_,
        "frobenius": Num(c.frobenius),
        "pf": nums(&c.pf),
        "fast_path_used": c.fast_path_used,
        "hypothesis_ok": c.hypothesis_ok,
    });
    if let Some(ap) = &rep.apery {
        let fp = ap.frobenius_point(p);
        let mut a = json!({
            "size": Num(ap.len()),
            "s_mu": Num(ap.s_mu),
            "s_next": Num(ap.s_next),
            "p_mu": Num(ap.p_mu),
            "p_next": Num(ap.p_next),
            "frobenius_point": {"y": Num(fp.y), "z": Num(fp.z)},
        });
        if with_apery {
            let pts: Vec<Value> = ap
                .points()
                .map(|pt| json!({"y": Num(pt.y), "z": Num(pt.z), "phi": Num(pt.phi(p))}))
                .collect();
            a["points"] = json!(pts);
        }
        v["apery"] = a;
    }
    if let Some(pf) = &rep.pf {
        let mono = |ms: Vec<aag_core::Monomial>| ms.iter().map(|m| m.to_string()).collect::<Vec<_>>();
        v["pf_monomials"] = json!({
            "pf1": mono(pf.pf1_monomials(k)),
            "pf2": mono(pf.pf2_monomials(k)),
            "frobenius": pf.frob_monomial(k).to_string(),
        });
        v["case_trace"] = json!(pf.case_trace.to_string());
    }
    if let Some(basis) = &rep.basis {
        v["basis"] = json!(basis.iter().map(|b| b.to_string()).collect::<Vec<_>>());
        v["basis_certified"] = json!(rep.basis_certified);
    }
    if let Some(o) = &rep.oracle {
        v["oracle_agrees"] = json!(o.agrees());
        v["oracle"] = json!({
            "apery_agrees": o.apery_agrees,
            "pf_agrees": o.pf_agrees,
            "frobenius_agrees": o.frobenius_agrees,
            "report": oracle_json(&o.report, false),
        });
    }
    v
}

pub fn analysis_text(rep: &AnalysisReport, with_apery: bool, out: &mut dyn Write) -> std::io::Result<()> {
    let p = &rep.params;
    let k = p.k_usize();
    let c = &rep.classification;
    writeln!(out, "{p}")?;
    let gens: Vec<String> = p.generators().iter().map(|g| g.to_string()).collect();
    writeln!(out, "generators: {}", gens.join(", "))?;
    writeln!(out)?;
    write!(out, "{}", rep.table.render())?;
    let t = &rep.table;
    writeln!(
        out,
        "hypothesis (r'_mu >= h or rho_mu = 0): {}; r'_mu >= h: {}",
        if t.hypothesis_ok { "holds" } else { "fails" },
        t.strict_pivot()
    )?;
    if let Some(ap) = &rep.apery {
        let fp = ap.frobenius_point(p);
        writeln!(
            out,
            "apery: {} points, rectangles {}x{} and {}x{}, frobenius point (y={}, z={})",
            ap.len(),
            ap.s_mu - ap.s_next,
            ap.p_next,
            ap.s_next,
            ap.p_next - ap.p_mu,
            fp.y,
            fp.z
        )?;
    }
    writeln!(out, "F(S) = {}", c.frobenius)?;
    let pf: Vec<String> = c.pf.iter().map(|v| v.to_string()).collect();
    writeln!(out, "PF(S) = {{{}}}, type {}", pf.join(", "), c.type_)?;
    if let Some(pf) = &rep.pf {
        writeln!(out, "{}", pf.case_trace)?;
        writeln!(out, "Frob monomial: {}", pf.frob_monomial(k))?;
    }
    write!(out, "verdict: {}", c.verdict)?;
    if let Some(f) = c.family {
        let solved: Vec<String> = c.solved.iter().map(|(n, v)| format!("{n}={v}")).collect();
        write!(out, " ({f}; {})", solved.join(", "))?;
    }
    writeln!(out)?;
    writeln!(out, "fast path used: {}", c.fast_path_used)?;
    if let Some(basis) = &rep.basis {
        writeln!(out, "groebner basis ({} binomials, certified: {}):", basis.len(), rep.basis_certified == Some(true))?;
        for b in basis {
            writeln!(out, "  {b}")?;
        }
    }
    if let Some(o) = &rep.oracle {
        writeln!(
            out,
            "oracle: apery {}, pf {}, frobenius {}",
            agree(o.apery_agrees),
            agree(o.pf_agrees),
            agree(o.frobenius_agrees)
        )?;
    }
    if with_apery {
        if let Some(ap) = &rep.apery {
            writeln!(out, "y,z,phi")?;
            for pt in ap.points() {
                writeln!(out, "{},{},{}", pt.y, pt.z, pt.phi(p))?;
            }
        }
    }
    Ok(())
}

fn agree(b: bool) -> &'static str {
    if b {
        "agrees"
    } else {
        "DISAGREES"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_integers_become_strings() {
        assert_eq!(serde_json::to_string(&Num(1 << 53)).unwrap(), "9007199254740992");
        assert_eq!(serde_json::to_string(&Num((1 << 53) + 1)).unwrap(), "\"9007199254740993\"");
        assert_eq!(serde_json::to_string(&Num(-(1 << 60))).unwrap(), "\"-1152921504606846976\"");
        assert_eq!(serde_json::to_string(&Num(-7)).unwrap(), "-7");
    }
}
