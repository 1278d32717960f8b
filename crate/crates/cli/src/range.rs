use std::ops::RangeInclusive;

/// Parses `a`, `a..b` or `a..=b`, all inclusive of `b`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad number `{t}` in range `{s}`"))
    };
    let (lo, hi) = match s.split_once("..") {
        None => {
            let v = num(s)?;
            (v, v)
        }
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}
