use crate::error::{invalid, Result};
use crate::exactnum::Rat;

const MAX_STEPS: usize = 1 << 22;

/// For a convex integer function `f`, the inclusive range of `n` with `f(n) < limit`
/// restricted to `n >= lower`, or `None` when no such `n` exists.
pub(crate) fn convex_window(
    f: impl Fn(i64) -> Rat,
    start: i64,
    lower: Option<i64>,
    limit: Rat,
) -> Result<Option<(i64, i64)>> {
    let lo_bound = lower.unwrap_or(i64::MIN);
    let mut n = start.max(lo_bound);
    let mut steps = 0usize;
    let mut guard = || {
        steps += 1;
        if steps > MAX_STEPS {
            Err(invalid("summation range does not close; exponent growth is not convex"))
        } else {
            Ok(())
        }
    };
    while n > lo_bound && f(n - 1) < f(n) {
        n -= 1;
        guard()?;
    }
    while f(n + 1) < f(n) {
        n += 1;
        guard()?;
    }
    if f(n) >= limit {
        return Ok(None);
    }
    let (mut lo, mut hi) = (n, n);
    while lo > lo_bound && f(lo - 1) < limit {
        lo -= 1;
        guard()?;
    }
    while f(hi + 1) < limit {
        hi += 1;
        guard()?;
    }
    Ok(Some((lo, hi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_windows() {
        let f = |n: i64| Rat::from_integer(n * n - 10 * n);
        assert_eq!(convex_window(f, 0, None, Rat::from_integer(0)).unwrap(), Some((1, 9)));
        assert_eq!(
            convex_window(f, 0, Some(3), Rat::from_integer(0)).unwrap(),
            Some((3, 9))
        );
        assert_eq!(convex_window(f, 0, None, Rat::from_integer(-25)).unwrap(), None);
    }
}
