//! Range arguments: `N`, `START..END` or `START..END:STEP`, all inclusive.

use aag_core::scan::Span;
use aag_core::Int;

pub fn parse_span(s: &str) -> Result<Span, String> {
    let s = s.trim();
    let (body, step) = match s.rsplit_once(':') {
        Some((b, st)) => (b, parse_int(st)?),
        None => (s, 1),
    };
    if step <= 0 {
        return Err(format!("step must be positive, got {step}"));
    }
    let span = match body.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Span::stepped(parse_int(lo)?, parse_int(hi)?, step)
        }
        None => Span::stepped(parse_int(body)?, parse_int(body)?, step),
    };
    Ok(span)
}

fn parse_int(s: &str) -> Result<Int, String> {
    s.trim()
        .parse::<Int>()
        .map_err(|e| format!("not an integer: {s:?} ({e})"))
}
