//! The negative-remainder Euclidean table on `(a, d, c)`.
//!
//! Row 0 is `(a, 0, d)`, row 1 is `(s₁, 1, r₁)` with `s₁ ≡ c·d⁻¹ (mod a)`,
//! and every later row follows `x_{i+1} = q·x_i − x_{i−1}` with
//! `q = ⌈s_{i−1}/s_i⌉`. Each row solves `s·d − p·c = r·a`.

use crate::arith::{self, mod_inverse};
use crate::error::{AagError, Result};
use crate::params::AagParams;
use crate::Int;

/// `s = σk + lρ` with `0 ≤ ρ < k` and `l = 0 ⇔ ρ = 0`.
pub fn decompose(s: Int, k: Int) -> (Int, Int, Int) {
    debug_assert!(s >= 0 && k >= 1);
    let (sigma, rho) = arith::div_rem_nonneg(s, k);
    (sigma, rho, Int::from(rho != 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EuclidRow {
    pub index: usize,
    pub s: Int,
    pub p: Int,
    pub r: Int,
    pub q: Option<Int>,
    pub sigma: Int,
    pub rho: Int,
    pub ell: Int,
    pub r_prime: Int,
}

impl EuclidRow {
    fn new(index: usize, s: Int, p: Int, r: Int, q: Option<Int>, h: Int, k: Int) -> Self {
        let (sigma, rho, ell) = decompose(s, k);
        EuclidRow {
            index,
            s,
            p,
            r,
            q,
            sigma,
            rho,
            ell,
            r_prime: r + h * (sigma + ell),
        }
    }

    pub fn spr(&self) -> (Int, Int, Int) {
        (self.s, self.p, self.r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidTable {
    pub rows: Vec<EuclidRow>,
    pub mu: usize,
    pub tilde_sigma: Int,
    pub tilde_rho: Int,
    pub tilde_ell: Int,
    pub tilde_r: Int,
    pub hypothesis_ok: bool,
    h: Int,
    k: Int,
}

pub fn build_table(p: &AagParams) -> Result<EuclidTable> {
    let (a, d, c, h, k) = (p.a, p.d, p.c, p.h, p.k);
    const CTX: &str = "euclid table";
    let inv = mod_inverse(d, a).ok_or(AagError::GcdViolation {
        what: "a,d",
        gcd: arith::gcd(a, d),
    })?;
    let s1 = arith::mul(c.rem_euclid(a), inv, CTX)?.rem_euclid(a);
    let r1 = arith::sub(arith::mul(s1, d, CTX)?, c, CTX)? / a;

    let mut rows = vec![
        EuclidRow::new(0, a, 0, d, None, h, k),
        EuclidRow::new(1, s1, 1, r1, None, h, k),
    ];
    while rows[rows.len() - 1].s > 0 {
        let prev = rows[rows.len() - 2];
        let cur = rows[rows.len() - 1];
        let q = if prev.s <= 2 * cur.s {
            2
        } else {
            match arith::div_rem_nonneg(prev.s, cur.s) {
                (q, 0) => q,
                (q, _) => q + 1,
            }
        };
        let step = |x: Int, y: Int| arith::sub(arith::mul(q, x, CTX)?, y, CTX);
        rows.push(EuclidRow::new(
            rows.len(),
            step(cur.s, prev.s)?,
            step(cur.p, prev.p)?,
            step(cur.r, prev.r)?,
            Some(q),
            h,
            k,
        ));
    }

    let mu = rows
        .windows(2)
        .position(|w| w[0].r_prime > 0 && w[1].r_prime <= 0)
        .ok_or(AagError::NoPivot)?;
    let (m, n) = (&rows[mu], &rows[mu + 1]);
    let (ts, tr, tl) = decompose(m.s - n.s, k);
    let tilde_r = m.r - n.r + h * (ts + tl);
    let hypothesis_ok = m.r_prime >= h || m.rho == 0;
    Ok(EuclidTable {
        rows,
        mu,
        tilde_sigma: ts,
        tilde_rho: tr,
        tilde_ell: tl,
        tilde_r,
        hypothesis_ok,
        h,
        k,
    })
}

/// `r′_μ ≥ h` or `ρ_μ = 0`.
pub fn hypothesis_holds(t: &EuclidTable, h: Int) -> bool {
    let m = t.mu_row();
    m.r_prime >= h || m.rho == 0
}

impl EuclidTable {
    pub fn mu_row(&self) -> &EuclidRow {
        &self.rows[self.mu]
    }

    pub fn next_row(&self) -> &EuclidRow {
        &self.rows[self.mu + 1]
    }

    /// `s_μ − s_{μ+1}`.
    pub fn tilde_s(&self) -> Int {
        self.mu_row().s - self.next_row().s
    }

    pub fn require_hypothesis(&self) -> Result<()> {
        if self.hypothesis_ok {
            Ok(())
        } else {
            let m = self.mu_row();
            Err(AagError::HypothesisViolated {
                r_prime: m.r_prime,
                h: self.h,
                rho: m.rho,
            })
        }
    }

    /// Same as `r′_μ ≥ h`, the narrower filter used by the published sweep.
    pub fn strict_pivot(&self) -> bool {
        self.mu_row().r_prime >= self.h
    }

    pub fn h(&self) -> Int {
        self.h
    }

    pub fn k(&self) -> Int {
        self.k
    }

    /// Aligned text rendering with columns `i | q | s | p | r | r′`.
    pub fn render(&self) -> String {
        let header = ["i", "q", "s", "p", "r", "r'"];
        let body: Vec<[String; 6]> = self
            .rows
            .iter()
            .map(|row| {
                [
                    row.index.to_string(),
                    row.q.map_or_else(String::new, |q| q.to_string()),
                    row.s.to_string(),
                    row.p.to_string(),
                    row.r.to_string(),
                    row.r_prime.to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for cells in &body {
            for (w, cell) in widths.iter_mut().zip(cells) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &[&str]| {
            let mut out = String::new();
            for (j, cell) in cells.iter().enumerate() {
                if j == 5 {
                    out.push_str(" |");
                }
                out.push_str(&format!(" {:>w$}", cell, w = widths[j]));
            }
            out.split_off(1)
        };
        let mut out = line(&header);
        out.push('\n');
        out.push_str(&"-".repeat(out.len() - 1));
        out.push('\n');
        for (cells, row) in body.iter().zip(&self.rows) {
            let refs: Vec<&str> = cells.iter().map(String::as_str).collect();
            out.push_str(&line(&refs));
            if row.index == self.mu {
                out.push_str("   <- mu");
            }
            out.push('\n');
        }
        out
    }
}

/// A violated table invariant, reported by [`check_invariants`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantViolation {
    pub row: usize,
    pub what: &'static str,
}

/// Checks every structural identity the table must satisfy: the row
/// equation, the three determinant identities, monotonicity, strict decrease
/// of `r′`, `q ≥ 2`, `r̃ ≥ 2` for consecutive pairs, and the six-way relation
/// between `r̃` and `r′_μ − r′_{μ+1}`.
pub fn check_invariants(t: &EuclidTable, p: &AagParams) -> Vec<InvariantViolation> {
    let (a, d, c, h, k) = (p.a, p.d, p.c, p.h, p.k);
    let mut out = Vec::new();
    let mut flag = |ok: bool, row: usize, what: &'static str| {
        if !ok {
            out.push(InvariantViolation { row, what });
        }
    };
    let rows = &t.rows;
    flag(rows[0].spr() == (a, 0, d), 0, "row 0 is (a, 0, d)");
    flag(rows[1].p == 1 && (0..a).contains(&rows[1].s), 1, "row 1");
    flag(rows.last().map(|r| r.s) == Some(0), rows.len() - 1, "ends at s = 0");
    for row in rows {
        flag(row.s * d - row.p * c == row.r * a, row.index, "s d - p c = r a");
        flag(row.s == row.sigma * k + row.ell * row.rho, row.index, "decomposition");
        flag((row.rho == 0) == (row.ell == 0), row.index, "l = 0 iff rho = 0");
        if let Some(q) = row.q {
            flag(q >= 2, row.index, "q >= 2");
        }
    }
    for w in rows.windows(2) {
        let (x, y) = (&w[0], &w[1]);
        flag(x.s * y.p - y.s * x.p == a, y.index, "s_i p_{i+1} - s_{i+1} p_i = a");
        flag(y.s * x.r - x.s * y.r == c, y.index, "s_{i+1} r_i - s_i r_{i+1} = c");
        flag(y.p * x.r - x.p * y.r == d, y.index, "p_{i+1} r_i - p_i r_{i+1} = d");
        flag(x.s > y.s, y.index, "s strictly decreasing");
        flag(x.p < y.p, y.index, "p strictly increasing");
        if d > 0 {
            flag(x.r > y.r, y.index, "r strictly decreasing");
        }
        flag(x.r_prime > y.r_prime, y.index, "r' strictly decreasing");
        let (ts, _, tl) = decompose(x.s - y.s, k);
        flag(x.r - y.r + h * (ts + tl) >= 2, y.index, "tilde r >= 2");
    }
    let (m, n) = (t.mu_row(), t.next_row());
    flag(m.r_prime > 0 && n.r_prime <= 0, t.mu, "pivot");
    let diff = m.r_prime - n.r_prime;
    let shifted = (m.rho == 0 && n.rho > 0) || (m.rho > n.rho && n.rho > 0);
    let expected = if shifted { t.tilde_r - h } else { t.tilde_r };
    flag(expected == diff, t.mu, "tilde r against r'_mu - r'_{mu+1}");
    out
}
