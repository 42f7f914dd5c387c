//! Checked integer helpers. Every operation that could leave the `i128`
//! range reports [`AagError::Overflow`] instead of wrapping.

use crate::error::{AagError, Result};
use crate::Int;

pub fn add(x: Int, y: Int, ctx: &'static str) -> Result<Int> {
    x.checked_add(y).ok_or(AagError::Overflow(ctx))
}

pub fn sub(x: Int, y: Int, ctx: &'static str) -> Result<Int> {
    x.checked_sub(y).ok_or(AagError::Overflow(ctx))
}

#[inline]
pub fn mul(x: Int, y: Int, ctx: &'static str) -> Result<Int> {
    if let (Ok(a), Ok(b)) = (i64::try_from(x), i64::try_from(y)) {
        return Ok(Int::from(a) * Int::from(b));
    }
    x.checked_mul(y).ok_or(AagError::Overflow(ctx))
}

pub fn gcd(x: Int, y: Int) -> Int {
    let (mut x, mut y) = (x.unsigned_abs(), y.unsigned_abs());
    while y != 0 {
        let t = x % y;
        x = y;
        y = t;
    }
    x as Int
}

pub fn gcd_all(values: &[Int]) -> Int {
    values.iter().fold(0, |g, &v| gcd(g, v))
}

/// Ceiling of `x / y` for `y > 0`.
/// `(x / y, x % y)` for `x >= 0`, `y > 0`, dividing in 64 bits when both fit.
#[inline]
pub fn div_rem_nonneg(x: Int, y: Int) -> (Int, Int) {
    debug_assert!(x >= 0 && y > 0);
    match (u64::try_from(x), u64::try_from(y)) {
        (Ok(x), Ok(y)) => ((x / y) as Int, (x % y) as Int),
        _ => (x / y, x % y),
    }
}

pub fn ceil_div(x: Int, y: Int) -> Int {
    debug_assert!(y > 0);
    let q = x.div_euclid(y);
    if x.rem_euclid(y) == 0 {
        q
    } else {
        q + 1
    }
}

/// Exact division: `Some(x / y)` when `y` divides `x`.
pub fn exact_div(x: Int, y: Int) -> Option<Int> {
    if y == 0 || x % y != 0 {
        None
    } else {
        Some(x / y)
    }
}

/// Inverse of `x` modulo `m` (`m ≥ 1`), if `gcd(x, m) = 1`.
pub fn mod_inverse(x: Int, m: Int) -> Option<Int> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (x.rem_euclid(m), m);
    let (mut old_s, mut s) = (1 as Int, 0 as Int);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(m))
}

/// Floor square root of a nonnegative integer.
pub fn isqrt(n: Int) -> Int {
    assert!(n >= 0, "isqrt of negative value");
    if n < 2 {
        return n;
    }
    let n = n as u128;
    // Newton iteration from an f64 seed, then fix up.
    let mut x = (n as f64).sqrt() as u128;
    loop {
        let y = (x + n / x.max(1)) / 2;
        if y >= x && x.checked_mul(x).is_some_and(|sq| sq <= n) {
            break;
        }
        x = y;
    }
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x as Int
}

/// Integer roots of `A p² + B p + C = 0` (with `A ≠ 0`), computed exactly.
///
/// Returns `None` when the discriminant is negative or not a perfect square.
/// Otherwise returns the integer values among `(−B + √Δ)/2A` and
/// `(−B − √Δ)/2A`, in that order; a root is `None` when it is not integral.
pub fn quadratic_integer_roots(a: Int, b: Int, c: Int) -> Result<Option<QuadraticRoots>> {
    const CTX: &str = "quadratic discriminant";
    let disc = sub(mul(b, b, CTX)?, mul(mul(4, a, CTX)?, c, CTX)?, CTX)?;
    if disc < 0 {
        return Ok(None);
    }
    let root = isqrt(disc);
    if root * root != disc {
        return Ok(None);
    }
    let two_a = mul(2, a, CTX)?;
    let plus = exact_div(sub(root, b, CTX)?, two_a);
    let minus = exact_div(sub(-b, root, CTX)?, two_a);
    Ok(Some(QuadraticRoots {
        discriminant: disc,
        plus,
        minus,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticRoots {
    pub discriminant: Int,
    pub plus: Option<Int>,
    pub minus: Option<Int>,
}
