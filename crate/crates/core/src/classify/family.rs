//! The closed-form family abstraction and its registry.
//!
//! A family is pinned down by the two pivot rows `(s, p, r)` at `μ` and
//! `μ+1`. The tuple `(a, d, c)` follows from the rows alone:
//! `a = s p′ − s′ p`, `d = p′ r − p r′`, `c = s′ r − s r′`.

use std::fmt;

use crate::error::{AagError, Result};
use crate::euclid::{build_table, EuclidTable};
use crate::params::{validate_params, AagParams};
use crate::Int;

use super::families;

/// An `(s, p, r)` triple.
pub type Row = (Int, Int, Int);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Symmetric,
    AlmostSymmetric,
}

/// Parameters of a family, in the convention of the family's statement.
/// Each family reads only the fields it needs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub h: Int,
    pub k: Int,
    pub sigma: Int,
    pub sigma_prime: Int,
    pub p: Int,
    pub p_prime: Int,
    pub r: Int,
    pub r_hat: Int,
    pub l: Int,
}

/// The parameter slots a family uses, for enumeration and display.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    H,
    K,
    Sigma,
    SigmaPrime,
    P,
    PPrime,
    R,
    RHat,
    L,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::H => "h",
            Field::K => "k",
            Field::Sigma => "sigma",
            Field::SigmaPrime => "sigma_prime",
            Field::P => "p",
            Field::PPrime => "p_prime",
            Field::R => "r",
            Field::RHat => "r_hat",
            Field::L => "l",
        }
    }

    pub fn get(self, fp: &FamilyParams) -> Int {
        match self {
            Field::H => fp.h,
            Field::K => fp.k,
            Field::Sigma => fp.sigma,
            Field::SigmaPrime => fp.sigma_prime,
            Field::P => fp.p,
            Field::PPrime => fp.p_prime,
            Field::R => fp.r,
            Field::RHat => fp.r_hat,
            Field::L => fp.l,
        }
    }

    fn set(self, fp: &mut FamilyParams, v: Int) {
        match self {
            Field::H => fp.h = v,
            Field::K => fp.k = v,
            Field::Sigma => fp.sigma = v,
            Field::SigmaPrime => fp.sigma_prime = v,
            Field::P => fp.p = v,
            Field::PPrime => fp.p_prime = v,
            Field::R => fp.r = v,
            Field::RHat => fp.r_hat = v,
            Field::L => fp.l = v,
        }
    }

    /// Range scanned when sampling admissible parameters.
    pub fn sample_range(self) -> std::ops::RangeInclusive<Int> {
        match self {
            Field::H => 1..=3,
            Field::K => 3..=7,
            Field::Sigma | Field::SigmaPrime => 1..=4,
            Field::P => 1..=4,
            Field::PPrime => 1..=6,
            Field::R => -12..=6,
            Field::RHat => -12..=-1,
            Field::L => 1..=6,
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "h={} k={} sigma={} sigma'={} p={} p'={} r={} r^={} l={}",
            self.h, self.k, self.sigma, self.sigma_prime, self.p, self.p_prime, self.r, self.r_hat, self.l
        )
    }
}

/// A closed-form symmetric or almost symmetric family.
pub trait Family: Send + Sync {
    /// Stable identifier such as `Thm5.3-(ii)`.
    fn id(&self) -> &'static str;
    fn kind(&self) -> FamilyKind;
    /// Fields this family reads, besides `h` and `k`.
    fn fields(&self) -> &'static [Field];
    /// Pivot rows `(μ, μ+1)`.
    fn rows(&self, fp: &FamilyParams) -> (Row, Row);
    /// Parameter ranges needed for the rows to have the family's shape.
    fn check_structure(&self, fp: &FamilyParams) -> std::result::Result<(), String>;
    /// Additional inequalities from the family's statement.
    fn check_stated(&self, fp: &FamilyParams) -> std::result::Result<(), String>;
    /// Decodes parameters from a pair of rows with this family's shape.
    fn params_from_rows(&self, h: Int, k: Int, mu: Row, next: Row) -> Option<FamilyParams>;
    fn type_of(&self, fp: &FamilyParams) -> Int;
    fn frobenius(&self, p: &AagParams, fp: &FamilyParams) -> Int;
    /// Candidate parameters from the linear or quadratic Frobenius
    /// formula. Empty for families without one.
    fn fast_candidates(&self, _p: &AagParams) -> Result<Vec<FamilyParams>> {
        Ok(Vec::new())
    }
    /// Values tried for `field` when sampling members.
    fn sample_range(&self, field: Field) -> std::ops::RangeInclusive<Int> {
        field.sample_range()
    }
    /// Solved parameters as reported, with `p` meaning `p_{μ+1}`.
    fn reported(&self, fp: &FamilyParams) -> Vec<(&'static str, Int)>;
}

/// `a`, `d`, `c` from the two pivot rows.
pub fn adc_from_rows(mu: Row, next: Row) -> Result<(Int, Int, Int)> {
    let (s, p, r) = mu;
    let (s2, p2, r2) = next;
    let f = |x: Int, y: Int, u: Int, v: Int| {
        x.checked_mul(y)
            .zip(u.checked_mul(v))
            .and_then(|(l, rr)| l.checked_sub(rr))
            .ok_or(AagError::Overflow("family rows"))
    };
    Ok((f(s, p2, s2, p)?, f(p2, r, p, r2)?, f(s2, r, s, r2)?))
}

/// Registry of all families, in a fixed order.
pub struct FamilyRegistry {
    families: Vec<Box<dyn Family>>,
}

impl FamilyRegistry {
    pub fn standard() -> Self {
        FamilyRegistry {
            families: families::all(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Family> {
        self.families.iter().map(|f| f.as_ref())
    }

    pub fn get(&self, id: &str) -> Result<&dyn Family> {
        self.iter()
            .find(|f| f.id() == id)
            .ok_or_else(|| AagError::UnknownFamily(id.to_string()))
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.iter().map(|f| f.id()).collect()
    }
}

fn violated(family: &dyn Family, reason: String) -> AagError {
    AagError::FamilyConstraintViolated {
        family: family.id().to_string(),
        reason,
    }
}

/// Builds the tuple of a family member and validates it, including
/// minimal generation. The generated table must satisfy the pivot
/// hypothesis and have the family's rows at `μ, μ+1`.
pub fn family_generate(family: &dyn Family, fp: &FamilyParams) -> Result<AagParams> {
    family
        .check_structure(fp)
        .and_then(|_| family.check_stated(fp))
        .map_err(|r| violated(family, r))?;
    let (mu, next) = family.rows(fp);
    let (a, d, c) = adc_from_rows(mu, next)?;
    let p = AagParams::structural(a, d, fp.h, fp.k, c)?;
    let t = build_table(&p)?;
    if !t.hypothesis_ok {
        return Err(violated(family, "pivot hypothesis fails".into()));
    }
    if (t.mu_row().spr(), t.next_row().spr()) != (mu, next) {
        return Err(violated(family, "family rows are not the pivot rows".into()));
    }
    validate_params(a, d, fp.h, fp.k, c)
}

/// Decodes family parameters when the table's pivot rows have this family's
/// shape.
pub fn match_table(family: &dyn Family, p: &AagParams, t: &EuclidTable) -> Option<FamilyParams> {
    let mu = t.mu_row().spr();
    let next = t.next_row().spr();
    let fp = family.params_from_rows(p.h, p.k, mu, next)?;
    (family.check_structure(&fp).is_ok() && family.rows(&fp) == (mu, next)).then_some(fp)
}

/// A candidate is consistent when it regenerates `(a, d, c)` exactly and
/// its rows are the pivot rows of the table.
pub fn consistent(family: &dyn Family, fp: &FamilyParams, p: &AagParams, t: &EuclidTable) -> bool {
    if fp.h != p.h || fp.k != p.k || family.check_structure(fp).is_err() {
        return false;
    }
    let (mu, next) = family.rows(fp);
    adc_from_rows(mu, next).ok() == Some((p.a, p.d, p.c))
        && (mu, next) == (t.mu_row().spr(), t.next_row().spr())
}

/// Every parameter vector in the sampling box that satisfies the family's
/// structural and stated conditions, in a deterministic order.
pub fn admissible_samples(family: &dyn Family) -> Vec<FamilyParams> {
    let mut fields = vec![Field::K, Field::H];
    fields.extend_from_slice(family.fields());
    let mut out = Vec::new();
    let mut cur = FamilyParams::default();
    fn rec(
        family: &dyn Family,
        fields: &[Field],
        cur: &mut FamilyParams,
        out: &mut Vec<FamilyParams>,
    ) {
        match fields.split_first() {
            None => {
                if family.check_structure(cur).is_ok() && family.check_stated(cur).is_ok() {
                    out.push(*cur);
                }
            }
            Some((f, rest)) => {
                for v in family.sample_range(*f) {
                    f.set(cur, v);
                    rec(family, rest, cur, out);
                }
            }
        }
    }
    rec(family, &fields, &mut cur, &mut out);
    out
}

/// Builds the Euclid table for a family member without the oracle.
pub fn family_table(family: &dyn Family, fp: &FamilyParams) -> Result<(AagParams, EuclidTable)> {
    let (mu, next) = family.rows(fp);
    let (a, d, c) = adc_from_rows(mu, next)?;
    let p = AagParams::structural(a, d, fp.h, fp.k, c)?;
    let t = build_table(&p)?;
    Ok((p, t))
}
