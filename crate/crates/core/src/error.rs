use thiserror::Error;

use crate::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AagError {
    #[error("gcd({what})={gcd}")]
    GcdViolation { what: &'static str, gcd: Int },
    #[error("non-positive generator: h*a+k*d = {value}")]
    NonPositiveGenerator { value: Int },
    #[error("embedding dimension below k+2: generator {value} (index {index}) lies in the semigroup of the others")]
    NotMinimal { index: usize, value: Int },
    #[error("invalid input: {0}")]
    NonsenseInput(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("euclid table has no pivot row")]
    NoPivot,
    #[error("pivot hypothesis fails: r'_mu = {r_prime} < h = {h} and rho_mu = {rho} != 0")]
    HypothesisViolated { r_prime: Int, h: Int, rho: Int },
    #[error("monomial is not of the form L_i x_k^alpha x_(k+1)^z")]
    NotStandardForm,
    #[error("pseudo-Frobenius dispatch matched no clause: {0}")]
    InternalDispatchGap(String),
    #[error("duplicate pseudo-Frobenius value {0}")]
    DuplicatePfValue(Int),
    #[error("malformed pseudo-Frobenius list: {0}")]
    MalformedPf(String),
    #[error("family {family}: {reason}")]
    FamilyConstraintViolated { family: String, reason: String },
    #[error("fast path is ambiguous between {0:?}")]
    AmbiguousFastPath(Vec<String>),
    #[error("unknown family id {0:?}")]
    UnknownFamily(String),
    #[error("generators are not coprime (gcd {0})")]
    NotCoprime(Int),
    #[error("oracle modulus {modulus} exceeds cap {cap}")]
    ModulusTooLarge { modulus: Int, cap: Int },
}

impl AagError {
    /// Short machine-readable tag, used by the CLI for validation failures.
    pub fn kind(&self) -> &'static str {
        match self {
            AagError::GcdViolation { .. } => "gcd_violation",
            AagError::NonPositiveGenerator { .. } => "non_positive_generator",
            AagError::NotMinimal { .. } => "not_minimal",
            AagError::NonsenseInput(_) => "nonsense_input",
            AagError::Overflow(_) => "overflow",
            AagError::NoPivot => "no_pivot",
            AagError::HypothesisViolated { .. } => "hypothesis_violated",
            AagError::NotStandardForm => "not_standard_form",
            AagError::InternalDispatchGap(_) => "internal_dispatch_gap",
            AagError::DuplicatePfValue(_) => "duplicate_pf_value",
            AagError::MalformedPf(_) => "malformed_pf",
            AagError::FamilyConstraintViolated { .. } => "family_constraint_violated",
            AagError::AmbiguousFastPath(_) => "ambiguous_fast_path",
            AagError::UnknownFamily(_) => "unknown_family",
            AagError::NotCoprime(_) => "not_coprime",
            AagError::ModulusTooLarge { .. } => "modulus_too_large",
        }
    }

    /// Errors raised while validating an input tuple.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            AagError::GcdViolation { .. }
                | AagError::NonPositiveGenerator { .. }
                | AagError::NotMinimal { .. }
                | AagError::NonsenseInput(_)
                | AagError::NotCoprime(_)
                | AagError::ModulusTooLarge { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, AagError>;
