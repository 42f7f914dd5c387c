//! Brute-force numerical-semigroup engine for arbitrary generator lists.
//!
//! Everything here is derived from the Apéry set with respect to one
//! modulus `m`, computed as shortest paths on the residue graph
//! `n → (n + g) mod m` with edge weight `g`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::arith::gcd_all;
use crate::classify::nari_check;
use crate::error::{AagError, Result};
use crate::Int;

/// Environment variable capping the oracle modulus.
pub const MAX_A_ENV: &str = "AAG_MAX_A";
pub const DEFAULT_MAX_A: Int = 1_000_000;

/// The modulus cap: `AAG_MAX_A` when set and parseable, else `10⁶`.
pub fn max_modulus() -> Int {
    std::env::var(MAX_A_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<Int>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_MAX_A)
}

/// Apéry set of `⟨generators⟩` with respect to `modulus`: entry `res` is the
/// least semigroup element congruent to `res`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyMap {
    pub modulus: Int,
    pub values: Vec<Int>,
}

fn check_generators(generators: &[Int]) -> Result<()> {
    if generators.is_empty() || generators.iter().any(|&g| g <= 0) {
        return Err(AagError::NonsenseInput(
            "generators must be a nonempty list of positive integers".into(),
        ));
    }
    let g = gcd_all(generators);
    if g != 1 {
        return Err(AagError::NotCoprime(g));
    }
    Ok(())
}

/// Apéry set with respect to the smallest generator.
pub fn apery_oracle(generators: &[Int]) -> Result<AperyMap> {
    check_generators(generators)?;
    let m = *generators.iter().min().unwrap();
    apery_mod(generators, m)
}

/// Apéry set with respect to an explicit modulus, which must itself be one
/// of the generators.
pub fn apery_mod(generators: &[Int], modulus: Int) -> Result<AperyMap> {
    apery_mod_capped(generators, modulus, max_modulus())
}

pub fn apery_mod_capped(generators: &[Int], modulus: Int, cap: Int) -> Result<AperyMap> {
    check_generators(generators)?;
    if !generators.contains(&modulus) {
        return Err(AagError::NonsenseInput(format!(
            "modulus {modulus} is not a generator"
        )));
    }
    if modulus > cap {
        return Err(AagError::ModulusTooLarge { modulus, cap });
    }
    let m = modulus as usize;
    // Weights fit comfortably in u64: every Apéry element is at most
    // (m - 1) * max(g).
    let mut steps: Vec<(usize, u64)> = generators
        .iter()
        .filter(|&&g| g != modulus)
        .map(|&g| ((g % modulus) as usize, g as u64))
        .collect();
    steps.sort_unstable();
    steps.dedup_by_key(|s| s.0);
    steps.retain(|s| s.0 != 0);
    let max_g = generators.iter().copied().max().unwrap();
    if (max_g as u128).saturating_mul(m as u128) > u64::MAX as u128 / 2 {
        return Err(AagError::Overflow("oracle path weights"));
    }

    let mut dist = vec![u64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((w, n))) = heap.pop() {
        if w != dist[n] {
            continue;
        }
        for &(step, g) in &steps {
            let mut next = n + step;
            if next >= m {
                next -= m;
            }
            let nw = w + g;
            if nw < dist[next] {
                dist[next] = nw;
                heap.push(Reverse((nw, next)));
            }
        }
    }
    Ok(AperyMap {
        modulus,
        values: dist.into_iter().map(|w| w as Int).collect(),
    })
}

impl AperyMap {
    pub fn contains(&self, n: Int) -> bool {
        n >= 0 && n >= self.values[n.rem_euclid(self.modulus) as usize]
    }

    pub fn frobenius(&self) -> Int {
        self.values.iter().copied().max().unwrap_or(0) - self.modulus
    }

    /// Number of gaps, by Selmer's formula.
    pub fn genus(&self) -> Int {
        self.values.iter().map(|w| w / self.modulus).sum()
    }

    /// Pseudo-Frobenius numbers. An Apéry element `w` is maximal exactly
    /// when `w + g` leaves the Apéry set for every generator `g ≠ m`.
    pub fn pseudo_frobenius(&self, generators: &[Int]) -> Vec<Int> {
        let m = self.modulus;
        let others: Vec<Int> = generators.iter().copied().filter(|&g| g != m).collect();
        let mut pf: Vec<Int> = self
            .values
            .iter()
            .filter(|&&w| {
                others
                    .iter()
                    .all(|&g| self.values[((w + g) % m) as usize] != w + g)
            })
            .map(|&w| w - m)
            .collect();
        pf.sort_unstable();
        pf
    }

    /// The definition-level scan: `w` is maximal when no other Apéry element
    /// `w′` has `w′ − w ∈ S`. Quadratic in the modulus.
    pub fn pseudo_frobenius_quadratic(&self) -> Vec<Int> {
        let mut pf: Vec<Int> = self
            .values
            .iter()
            .filter(|&&w| {
                self.values
                    .iter()
                    .all(|&w2| w2 == w || !self.contains(w2 - w))
            })
            .map(|&w| w - self.modulus)
            .collect();
        pf.sort_unstable();
        pf
    }
}

pub fn pf_oracle(generators: &[Int]) -> Result<Vec<Int>> {
    Ok(apery_oracle(generators)?.pseudo_frobenius(generators))
}

pub fn frobenius_oracle(generators: &[Int]) -> Result<Int> {
    Ok(apery_oracle(generators)?.frobenius())
}

pub fn membership(n: Int, generators: &[Int]) -> Result<bool> {
    Ok(apery_oracle(generators)?.contains(n))
}

pub fn genus(generators: &[Int]) -> Result<Int> {
    Ok(apery_oracle(generators)?.genus())
}

/// Index of the first generator lying in the semigroup of the others.
///
/// `gᵢ` is redundant iff `gᵢ − gⱼ ∈ S` for some `j ≠ i`, so a single Apéry
/// computation for the full list decides every generator at once.
pub fn redundant_generator(generators: &[Int]) -> Result<Option<usize>> {
    let ap = apery_oracle(generators)?;
    Ok((0..generators.len()).find(|&i| {
        generators
            .iter()
            .enumerate()
            .any(|(j, &gj)| j != i && ap.contains(generators[i] - gj))
    }))
}

pub fn is_minimal_generating(generators: &[Int]) -> Result<bool> {
    Ok(redundant_generator(generators)?.is_none())
}

pub fn almost_symmetric_oracle(generators: &[Int]) -> Result<bool> {
    let ap = apery_oracle(generators)?;
    let pf = ap.pseudo_frobenius(generators);
    Ok(nari_check(&pf, ap.frobenius()).unwrap_or(false))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub generators: Vec<Int>,
    pub apery: AperyMap,
    pub frobenius: Int,
    pub pf: Vec<Int>,
    pub type_: usize,
    pub genus: Int,
    pub symmetric: bool,
    pub almost_symmetric: bool,
}

impl OracleReport {
    /// Full report with respect to the smallest generator.
    pub fn new(generators: &[Int]) -> Result<Self> {
        check_generators(generators)?;
        let m = *generators.iter().min().unwrap();
        Self::with_modulus(generators, m)
    }

    pub fn with_modulus(generators: &[Int], modulus: Int) -> Result<Self> {
        let apery = apery_mod(generators, modulus)?;
        let pf = apery.pseudo_frobenius(generators);
        let frobenius = apery.frobenius();
        let mut sorted = generators.to_vec();
        sorted.sort_unstable();
        Ok(OracleReport {
            generators: sorted,
            genus: apery.genus(),
            type_: pf.len(),
            symmetric: pf.len() == 1,
            almost_symmetric: nari_check(&pf, frobenius).unwrap_or(false),
            frobenius,
            pf,
            apery,
        })
    }
}
