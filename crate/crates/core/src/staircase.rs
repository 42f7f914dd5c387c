//! Plane representation of standard monomials and the two-rectangle Apéry
//! set.
//!
//! The point `(y, z)` stands for `M(y, z) = L_i x_k^α x_{k+1}^z` with
//! `α = ⌊y/k⌋` and `i = y − kα`, where `L_0 = 1`.

use crate::error::{AagError, Result};
use crate::euclid::EuclidTable;
use crate::params::{AagParams, Monomial};
use crate::Int;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardPoint {
    pub y: Int,
    pub z: Int,
}

impl StandardPoint {
    pub fn new(y: Int, z: Int) -> Self {
        StandardPoint { y, z }
    }

    /// `(i, α)` with `y = kα + i`, `0 ≤ i < k`.
    pub fn split(&self, k: Int) -> (Int, Int) {
        (self.y % k, self.y / k)
    }

    pub fn phi(&self, p: &AagParams) -> Int {
        let (i, alpha) = self.split(p.k);
        p.phi_standard(i, alpha, self.z)
    }
}

pub fn point_to_monomial(pt: StandardPoint, k: usize) -> Monomial {
    let (i, alpha) = pt.split(k as Int);
    let mut m = Monomial::one(k);
    if i > 0 {
        m.exponents[i as usize] = 1;
    }
    m.exponents[k] += alpha as u64;
    m.exponents[k + 1] = pt.z as u64;
    m
}

pub fn monomial_to_point(m: &Monomial) -> Result<StandardPoint> {
    let k = m.k();
    let e = &m.exponents;
    if e[0] != 0 {
        return Err(AagError::NotStandardForm);
    }
    let mut i = 0usize;
    for (j, &ej) in e.iter().enumerate().take(k).skip(1) {
        match ej {
            0 => {}
            1 if i == 0 => i = j,
            _ => return Err(AagError::NotStandardForm),
        }
    }
    Ok(StandardPoint {
        y: (k as Int) * e[k] as Int + i as Int,
        z: e[k + 1] as Int,
    })
}

/// Which part of the plane a point falls in relative to the initial ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    U,
    V,
    W,
    Standard,
}

pub fn initial_region(pt: StandardPoint, t: &EuclidTable) -> Region {
    let (m, n) = (t.mu_row(), t.next_row());
    let cut = m.s - n.s;
    if pt.y < cut && pt.z >= n.p {
        Region::U
    } else if pt.y >= cut && pt.z >= n.p - m.p {
        Region::V
    } else if pt.y >= m.s && pt.z < n.p - m.p {
        Region::W
    } else {
        Region::Standard
    }
}

/// The Apéry set as the union of two half-open rectangles
/// `[0, s_μ − s_{μ+1}) × [0, p_{μ+1})` and
/// `[s_μ − s_{μ+1}, s_μ) × [0, p_{μ+1} − p_μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AperySet {
    pub s_mu: Int,
    pub s_next: Int,
    pub p_mu: Int,
    pub p_next: Int,
}

pub fn apery_set(_p: &AagParams, t: &EuclidTable) -> Result<AperySet> {
    t.require_hypothesis()?;
    let (m, n) = (t.mu_row(), t.next_row());
    Ok(AperySet {
        s_mu: m.s,
        s_next: n.s,
        p_mu: m.p,
        p_next: n.p,
    })
}

impl AperySet {
    pub fn len(&self) -> Int {
        (self.s_mu - self.s_next) * self.p_next + self.s_next * (self.p_next - self.p_mu)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, pt: StandardPoint) -> bool {
        let cut = self.s_mu - self.s_next;
        pt.y >= 0
            && pt.z >= 0
            && ((pt.y < cut && pt.z < self.p_next)
                || (pt.y >= cut && pt.y < self.s_mu && pt.z < self.p_next - self.p_mu))
    }

    /// Points in `(y, z)` order.
    pub fn points(&self) -> impl Iterator<Item = StandardPoint> + '_ {
        let cut = self.s_mu - self.s_next;
        (0..self.s_mu).flat_map(move |y| {
            let height = if y < cut {
                self.p_next
            } else {
                self.p_next - self.p_mu
            };
            (0..height).map(move |z| StandardPoint { y, z })
        })
    }

    /// The Apéry elements `φ(M(y, z))`, sorted.
    pub fn values(&self, p: &AagParams) -> Vec<Int> {
        let mut v: Vec<Int> = self.points().map(|pt| pt.phi(p)).collect();
        v.sort_unstable();
        v
    }

    /// Point of maximal weight. `φ` grows with `z` and with `α`, so only the
    /// top row of the last `k` columns of each rectangle can win.
    pub fn frobenius_point(&self, p: &AagParams) -> StandardPoint {
        let cut = self.s_mu - self.s_next;
        let top = |lo: Int, hi: Int, height: Int| {
            (lo.max(hi - p.k)..hi)
                .filter(move |_| height > 0)
                .map(move |y| StandardPoint { y, z: height - 1 })
        };
        top(0, cut, self.p_next)
            .chain(top(cut, self.s_mu, self.p_next - self.p_mu))
            .max_by_key(|pt| pt.phi(p))
            .expect("Apéry set is never empty")
    }
}

/// `F(S) = max φ(Ap) − a`.
pub fn frobenius(p: &AagParams, t: &EuclidTable) -> Result<Int> {
    let ap = apery_set(p, t)?;
    Ok(ap.frobenius_point(p).phi(p) - p.a)
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
    fn round_trips() {
        let m = point_to_monomial(StandardPoint::new(0, 3), 20);
        assert_eq!(m, Monomial::var(20, 21, 3));
        let m = point_to_monomial(StandardPoint::new(21, 6), 20);
        assert_eq!(m.to_string(), "x1*x20*x21^6");
        let m = Monomial::var(20, 5, 1).times_var(20, 2).times_var(21, 1);
        assert_eq!(monomial_to_point(&m).unwrap(), StandardPoint::new(45, 1));
        for y in 0..50 {
            for z in 0..3 {
                let pt = StandardPoint::new(y, z);
                assert_eq!(monomial_to_point(&point_to_monomial(pt, 7)).unwrap(), pt);
            }
        }
    }

    #[test]
    fn non_standard_shapes() {
        let two_small = Monomial::var(5, 1, 1).times_var(2, 1);
        assert_eq!(monomial_to_point(&two_small), Err(AagError::NotStandardForm));
        let squared = Monomial::var(5, 2, 2);
        assert_eq!(monomial_to_point(&squared), Err(AagError::NotStandardForm));
        let with_x0 = Monomial::var(5, 0, 1);
        assert_eq!(monomial_to_point(&with_x0), Err(AagError::NotStandardForm));
    }

    #[test]
    fn example1_apery() {
        let (p, t) = example1();
        let ap = apery_set(&p, &t).unwrap();
        assert_eq!(ap.len(), 155);
        assert_eq!(ap.points().count(), 155);
        let brute = ap.points().max_by_key(|pt| pt.phi(&p)).unwrap();
        assert_eq!(ap.frobenius_point(&p), brute);
        assert!(ap.contains(StandardPoint::new(0, 7)));
        assert!(!ap.contains(StandardPoint::new(1, 7)));
        let values = ap.values(&p);
        let mut residues: Vec<Int> = values.iter().map(|v| v % 155).collect();
        residues.sort_unstable();
        residues.dedup();
        assert_eq!(residues.len(), 155);
        assert_eq!(ap.frobenius_point(&p), StandardPoint::new(21, 6));
        assert_eq!(frobenius(&p, &t).unwrap(), 2168);
    }

    #[test]
    fn regions() {
        let (_, t) = example1();
        assert_eq!(initial_region(StandardPoint::new(0, 8), &t), Region::U);
        assert_eq!(initial_region(StandardPoint::new(22, 0), &t), Region::W);
        assert_eq!(initial_region(StandardPoint::new(5, 7), &t), Region::V);
        assert_eq!(initial_region(StandardPoint::new(0, 0), &t), Region::Standard);
    }

    #[test]
    fn single_rectangle_when_next_row_is_zero() {
        let ap = AperySet {
            s_mu: 4,
            s_next: 0,
            p_mu: 2,
            p_next: 5,
        };
        assert_eq!(ap.len(), 20);
        assert!(ap.points().all(|pt| pt.y < 4 && pt.z < 5));
    }
}
