//! Bracketing root finder for continuous scalar functions.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("f does not change sign on [{lo}, {hi}] (f(lo) = {f_lo}, f(hi) = {f_hi})")]
    BracketFailure {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("non-finite function value at x = {0}")]
    NonFinite(f64),
}

const MAX_ITERATIONS: usize = 4096;

/// Bisection on `[lo, hi]` until the bracket is narrower than
/// `rtol · max(|lo|, |hi|)` (or cannot be split further).
///
/// Returns the midpoint of the final bracket. An exact zero at an endpoint
/// or midpoint is returned immediately.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, rtol: f64) -> Result<f64, RootError>
where
    F: Fn(f64) -> f64,
{
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let f_lo = f(lo);
    let f_hi = f(hi);
    if !f_lo.is_finite() {
        return Err(RootError::NonFinite(lo));
    }
    if !f_hi.is_finite() {
        return Err(RootError::NonFinite(hi));
    }
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(RootError::BracketFailure { lo, hi, f_lo, f_hi });
    }
    let lo_negative = f_lo < 0.0;
    for _ in 0..MAX_ITERATIONS {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi || hi - lo <= rtol * lo.abs().max(hi.abs()) {
            break;
        }
        let fm = f(mid);
        if !fm.is_finite() {
            return Err(RootError::NonFinite(mid));
        }
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + 0.5 * (hi - lo))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_square_root_of_two() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn decreasing_functions_and_swapped_brackets() {
        let r = bisect(|x| 1.0 - x.powi(3), 5.0, 0.0, 1e-13).unwrap();
        assert!((r - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_endpoint_roots() {
        assert_eq!(bisect(|x| x - 1.0, 1.0, 3.0, 1e-12).unwrap(), 1.0);
        assert_eq!(bisect(|x| x - 3.0, 1.0, 3.0, 1e-12).unwrap(), 3.0);
    }

    #[test]
    fn no_sign_change_is_reported() {
        assert!(matches!(
            bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12),
            Err(RootError::BracketFailure { .. })
        ));
        assert!(matches!(
            bisect(|x| 1.0 / x - 0.5, 0.0, 4.0, 1e-12),
            Err(RootError::NonFinite(_))
        ));
    }
}
