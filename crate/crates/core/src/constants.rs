//! The regular ideal tetrahedron volume and the cusp-density constant.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use serde::Serialize;

/// Published value of the regular ideal tetrahedron volume, kept as a
/// regression guard for the quadrature.
pub const V0_REFERENCE: f64 = 1.014_941_606_409_653_6;

/// Lobachevsky function `Λ(θ) = −∫₀^θ log|2 sin u| du`.
///
/// `Λ` is odd and π-periodic; the argument is first reduced into
/// `(−π/2, π/2]`, where the only singularity of the integrand is the
/// `log u` at 0.
pub fn lobachevsky(theta: f64) -> f64 {
    let mut t = theta - PI * (theta / PI).round();
    if t <= -FRAC_PI_2 {
        t += PI;
    }
    if t == 0.0 {
        return 0.0;
    }
    let (sign, t) = if t < 0.0 { (-1.0, -t) } else { (1.0, t) };
    // log(2 sin u) = log u + log(2 sin u / u); the first part integrates in
    // closed form, the second is smooth on [0, π/2]
    let smooth = |u: f64| {
        if u == 0.0 {
            2f64.ln()
        } else {
            (2.0 * u.sin() / u).ln()
        }
    };
    let out = quadrature::double_exponential::integrate(smooth, 0.0, t, 1e-15);
    -sign * (t * t.ln() - t + out.integral)
}

/// Volume of the regular ideal tetrahedron, `2Λ(π/6) = 3Λ(π/3)`.
pub fn ideal_tetrahedron_volume() -> f64 {
    2.0 * lobachevsky(PI / 6.0)
}

/// Numerical constants used throughout the bound functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Constants {
    /// Regular ideal tetrahedron volume.
    pub v0: f64,
    /// Maximal cusp density `√3 / (2 v0)`.
    pub c0: f64,
    /// `π²√3`, the smallest cusp area compatible with a translation longer than 2π.
    pub vc_min: f64,
}

impl Constants {
    pub fn compute() -> Self {
        let v0 = ideal_tetrahedron_volume();
        Self {
            v0,
            c0: 3f64.sqrt() / (2.0 * v0),
            vc_min: PI * PI * 3f64.sqrt(),
        }
    }
}

/// Process-wide constants, computed once.
pub fn constants() -> &'static Constants {
    static CONSTANTS: OnceLock<Constants> = OnceLock::new();
    CONSTANTS.get_or_init(Constants::compute)
}
