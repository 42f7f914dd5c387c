//! Validated input tuples, generators and the weight map `φ`.

use std::fmt;

use crate::arith::{self, gcd, gcd_all};
use crate::error::{AagError, Result};
use crate::oracle;
use crate::Int;

/// A validated tuple `(a, d, h, k, c)` together with its generator list
/// `a, ha+d, …, ha+kd, c`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AagParams {
    pub a: Int,
    pub d: Int,
    pub h: Int,
    pub k: Int,
    pub c: Int,
    generators: Vec<Int>,
    normalized: bool,
}

/// Full validation, including the minimal-generation check through the
/// oracle.
pub fn validate_params(a: Int, d: Int, h: Int, k: Int, c: Int) -> Result<AagParams> {
    let params = AagParams::structural(a, d, h, k, c)?;
    params.check_minimal()?;
    Ok(params)
}

impl AagParams {
    /// Validates everything except minimal generation. Cheap: no oracle
    /// call, so suitable for hot loops that check minimality separately.
    pub fn structural(a: Int, d: Int, h: Int, k: Int, c: Int) -> Result<Self> {
        if a <= 0 || h <= 0 || k <= 0 || c <= 0 {
            return Err(AagError::NonsenseInput(format!(
                "a, h, k, c must be positive (got a={a}, h={h}, k={k}, c={c})"
            )));
        }
        if d == 0 {
            return Err(AagError::NonsenseInput("d must be nonzero".into()));
        }
        if k > 4096 {
            return Err(AagError::NonsenseInput(format!("k={k} is too large")));
        }
        let ha = arith::mul(h, a, "generator")?;
        let last = arith::add(ha, arith::mul(k, d, "generator")?, "generator")?;
        let first = arith::add(ha, d, "generator")?;
        if last <= 0 || first <= 0 {
            return Err(AagError::NonPositiveGenerator {
                value: last.min(first),
            });
        }
        let g = gcd(a, d);
        if g != 1 {
            return Err(AagError::GcdViolation { what: "a,d", gcd: g });
        }
        let mut generators = Vec::with_capacity(k as usize + 2);
        generators.push(a);
        generators.extend((1..=k).map(|i| ha + i * d));
        generators.push(c);
        let g = gcd_all(&generators);
        if g != 1 {
            return Err(AagError::GcdViolation {
                what: "generators",
                gcd: g,
            });
        }
        Ok(AagParams {
            a,
            d,
            h,
            k,
            c,
            generators,
            normalized: false,
        })
    }

    /// Fails with [`AagError::NotMinimal`] when some generator lies in the
    /// semigroup spanned by the others.
    pub fn check_minimal(&self) -> Result<()> {
        match oracle::redundant_generator(&self.generators)? {
            Some(index) => Err(AagError::NotMinimal {
                index,
                value: self.generators[index],
            }),
            None => Ok(()),
        }
    }

    /// `g₀ = a, gᵢ = ha+id, g_{k+1} = c`.
    pub fn generators(&self) -> &[Int] {
        &self.generators
    }

    /// `gᵢ` for `0 ≤ i ≤ k+1`.
    pub fn generator(&self, i: usize) -> Int {
        self.generators[i]
    }

    /// `aᵢ = ha + id` for `0 ≤ i ≤ k`, with `a₀ = a`.
    pub fn a_i(&self, i: Int) -> Int {
        if i == 0 {
            self.a
        } else {
            self.h * self.a + i * self.d
        }
    }

    pub fn k_usize(&self) -> usize {
        self.k as usize
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// The rewrite `a′ = a + kd, d′ = −d` for `d < 0, h = 1`, which presents
    /// the same semigroup with a positive common difference. Returns a clone
    /// for any other tuple.
    pub fn normalized(&self) -> Result<Self> {
        if self.d > 0 || self.h != 1 {
            return Ok(self.clone());
        }
        let mut out = Self::structural(self.a + self.k * self.d, -self.d, 1, self.k, self.c)?;
        out.normalized = true;
        Ok(out)
    }

    /// Weight of the monomial `L_i x_k^α x_{k+1}^z`.
    pub fn phi_standard(&self, i: Int, alpha: Int, z: Int) -> Int {
        let li = if i > 0 { self.a_i(i) } else { 0 };
        li + alpha * self.a_i(self.k) + z * self.c
    }
}

impl fmt::Display for AagParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a={}, d={}, h={}, k={}, c={})",
            self.a, self.d, self.h, self.k, self.c
        )
    }
}

/// Exponent vector over `x₀, …, x_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: Vec<u64>,
}

impl Monomial {
    pub fn one(k: usize) -> Self {
        Monomial {
            exponents: vec![0; k + 2],
        }
    }

    pub fn var(k: usize, i: usize, e: u64) -> Self {
        let mut m = Self::one(k);
        m.exponents[i] = e;
        m
    }

    pub fn from_exponents(exponents: Vec<u64>) -> Self {
        Monomial { exponents }
    }

    /// `k` for a monomial over `x₀, …, x_{k+1}`.
    pub fn k(&self) -> usize {
        self.exponents.len() - 2
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    /// Multiplies in place by `x_i^e`.
    pub fn times_var(mut self, i: usize, e: u64) -> Monomial {
        self.exponents[i] += e;
        self
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(x, y)| x <= y)
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// `φ(M) = Σ eᵢ gᵢ`.
pub fn phi(m: &Monomial, p: &AagParams) -> Result<Int> {
    if m.exponents.len() != p.generators.len() {
        return Err(AagError::NonsenseInput(format!(
            "monomial has {} variables, expected {}",
            m.exponents.len(),
            p.generators.len()
        )));
    }
    m.exponents
        .iter()
        .zip(&p.generators)
        .try_fold(0 as Int, |acc, (&e, &g)| {
            let term = arith::mul(e as Int, g, "phi")?;
            arith::add(acc, term, "phi")
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn example1() -> AagParams {
        validate_params(155, 1, 4, 20, 177).unwrap()
    }

    #[test]
    fn generators_of_example1() {
        let p = example1();
        let g = p.generators();
        assert_eq!(g.len(), 22);
        assert_eq!(g[0], 155);
        assert_eq!(g[1], 621);
        assert_eq!(g[20], 640);
        assert_eq!(g[21], 177);
    }

    #[test]
    fn gcd_of_a_and_d() {
        assert_eq!(
            validate_params(6, 2, 1, 3, 7),
            Err(AagError::GcdViolation { what: "a,d", gcd: 2 })
        );
    }

    #[test]
    fn nonsense_inputs() {
        assert!(matches!(
            validate_params(5, 0, 1, 3, 7),
            Err(AagError::NonsenseInput(_))
        ));
        assert!(matches!(
            validate_params(5, 1, 1, 0, 7),
            Err(AagError::NonsenseInput(_))
        ));
        assert!(matches!(
            validate_params(5, -3, 1, 3, 7),
            Err(AagError::NonPositiveGenerator { .. })
        ));
    }

    #[test]
    fn redundant_c() {
        // c = 2a is generated by a.
        let err = validate_params(7, 1, 1, 3, 14).unwrap_err();
        assert_eq!(err, AagError::NotMinimal { index: 4, value: 14 });
    }

    #[test]
    fn normalization_rewrite() {
        let p = validate_params(20, -1, 1, 3, 23).unwrap();
        let n = p.normalized().unwrap();
        assert!(n.is_normalized());
        assert_eq!((n.a, n.d, n.h, n.k, n.c), (17, 1, 1, 3, 23));
        let mut g1 = p.generators().to_vec();
        let mut g2 = n.generators().to_vec();
        g1.sort();
        g2.sort();
        assert_eq!(g1, g2);
        assert!(!example1().normalized().unwrap().is_normalized());
    }

    #[test]
    fn phi_examples() {
        let p = example1();
        let m = Monomial::var(20, 1, 1).times_var(20, 1).times_var(21, 6);
        assert_eq!(phi(&m, &p).unwrap(), 2323);
        assert_eq!(phi(&Monomial::one(20), &p).unwrap(), 0);
        assert_eq!(phi(&Monomial::var(20, 0, 1), &p).unwrap(), 155);
        assert_eq!(p.phi_standard(1, 1, 6), 2323);
    }

    #[test]
    fn monomial_display() {
        let m = Monomial::var(20, 0, 7).times_var(21, 1);
        assert_eq!(m.to_string(), "x0^7*x21");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }

    proptest! {
        #[test]
        fn arithmetic_progression(a in 1i128..200, d in -9i128..10, h in 1i128..4, k in 1i128..8, c in 1i128..300) {
            if let Ok(p) = AagParams::structural(a, d, h, k, c) {
                let g = p.generators();
                prop_assert!(g.iter().all(|&x| x > 0));
                prop_assert_eq!(g[1] - h * a, d);
                for i in 1..k as usize {
                    prop_assert_eq!(g[i + 1] - g[i], d);
                }
            }
        }

        #[test]
        fn phi_is_additive(e1 in proptest::collection::vec(0u64..5, 6), e2 in proptest::collection::vec(0u64..5, 6)) {
            let p = AagParams::structural(23, 2, 1, 4, 31).unwrap();
            let m1 = Monomial::from_exponents(e1);
            let m2 = Monomial::from_exponents(e2);
            let lhs = phi(&m1.mul(&m2), &p).unwrap();
            prop_assert_eq!(lhs, phi(&m1, &p).unwrap() + phi(&m2, &p).unwrap());
        }
    }
}
