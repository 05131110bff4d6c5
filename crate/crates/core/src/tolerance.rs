//! Numerical tolerances shared by every module.
//!
//! | Name | Value | Used for |
//! |------|-------|----------|
//! | [`ALGEBRA`] | 1e-12 | determinant normalization, unit-modulus checks |
//! | [`ANALYSIS`] | 1e-9 | round trips, crossing identities, isometry checks |
//! | [`PRINTED`] | 1e-3 | agreement with decimals quoted to three or four places |

/// Exact-in-principle matrix algebra (determinants, closed-form products).
pub const ALGEBRA: f64 = 1e-12;

/// Analytic identities evaluated through several floating point steps.
pub const ANALYSIS: f64 = 1e-9;

/// Comparisons against constants quoted with a handful of decimals.
pub const PRINTED: f64 = 1e-3;

/// Default tolerance of [`crate::moebius::MoebiusMap::classify`].
pub const CLASSIFY: f64 = 1e-9;

/// Absolute tolerance on Euclidean quantities in horoball tangency tests.
pub const TANGENCY: f64 = 1e-9;

/// Relative tolerance on the bisection bracket width.
pub const ROOT_RTOL: f64 = 1e-12;
