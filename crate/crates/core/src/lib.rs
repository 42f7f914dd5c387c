//! Closed-form analysis of generalized almost arithmetic numerical semigroups
//! `⟨a, ha+d, ha+2d, …, ha+kd, c⟩`.
//!
//! The pipeline is:
//!
//! 1. [`params::AagParams`] validates the tuple `(a, d, h, k, c)`.
//! 2. [`euclid::EuclidTable`] runs the negative-remainder Euclidean algorithm
//!    on `(a, d, c)` and locates the pivot row `μ`.
//! 3. [`staircase`] reads the Apéry set off the two-rectangle staircase and
//!    derives the Frobenius number.
//! 4. [`grobner`] builds the binomial families and certifies them as a
//!    Gröbner basis by standard-monomial counting.
//! 5. [`pseudofrob`] dispatches on the pivot rows to produce the
//!    pseudo-Frobenius monomials.
//! 6. [`classify`] decides symmetric / almost symmetric and identifies the
//!    closed-form family, either from the table or from the quadratic
//!    fast path.
//!
//! Every closed-form result can be checked against [`oracle`], a brute-force
//! engine for arbitrary generator lists.

pub mod arith;
pub mod classify;
pub mod error;
pub mod euclid;
pub mod grobner;
pub mod oracle;
pub mod params;
pub mod pseudofrob;
pub mod report;
pub mod scan;
pub mod staircase;

pub use classify::{classify, fast_path, nari_check, Classification, Verdict};
pub use error::{AagError, Result};
pub use euclid::{build_table, EuclidRow, EuclidTable};
pub use params::{phi, validate_params, AagParams, Monomial};
pub use pseudofrob::{pf_tilde, PfResult};
pub use staircase::{apery_set, frobenius, AperySet, StandardPoint};

/// Integer type used for all semigroup arithmetic.
pub type Int = i128;
