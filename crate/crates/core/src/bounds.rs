//! Scalar bound functions for closed geodesic lengths.
//!
//! The chain of estimates runs as follows. A cusp of area `V_c` with
//! minimal parabolic translation `l > 2π` forces `l ≤ √(4V_c/√3)`, and the
//! witness families give loxodromic elements with trace moduli bounded by
//! [`diagonal_trace_bound`] and [`perpendicular_trace_bound`]. Minimizing
//! over the admissible `l` yields [`trace_bound_from_cusp_area`]. Writing
//! the cusp area in terms of the link complement volume `x` gives the
//! increasing family [`volume_trace_bound`]; the Dehn filling volume
//! inequality gives the decreasing family [`filling_trace_bound`]. The two
//! meet at [`crossing_volume`], independent of `n`, and converting the trace
//! bound at the crossing into a length gives [`geodesic_length_bound`].

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::constants::constants;
use crate::roots::{bisect, RootError};
use crate::tolerance;
use crate::witness::{far_center_formula, near_center_formula};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no admissible translation length: upper end {upper} does not exceed 2π")]
    EmptyInterval { upper: f64 },
    #[error("slope length {0} does not exceed 2π")]
    SlopeTooShort(f64),
    #[error(transparent)]
    Root(#[from] RootError),
}

fn domain(msg: impl Into<String>) -> BoundError {
    BoundError::Domain(msg.into())
}

fn check_rank(n: u32) -> Result<f64, BoundError> {
    if n == 0 {
        return Err(domain("n must be at least 1"));
    }
    Ok(f64::from(n))
}

fn check_volume(v: f64) -> Result<(), BoundError> {
    if !(v.is_finite() && v >= 0.0) {
        return Err(domain(format!(
            "volume must be finite and nonnegative, got {v}"
        )));
    }
    Ok(())
}

fn check_translation(l: f64) -> Result<(), BoundError> {
    if !(l.is_finite() && l > 2.0 * PI) {
        return Err(domain(format!("translation length l = {l} must exceed 2π")));
    }
    Ok(())
}

fn check_area(vc: f64) -> Result<(), BoundError> {
    if !(vc.is_finite() && vc > 0.0) {
        return Err(domain(format!("cusp area must be positive, got {vc}")));
    }
    Ok(())
}

/// Rank `n` of a geodesic and the volume `V` of the filled manifold.
/// `V = 0` stands for a filled manifold with no hyperbolic structure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundQuery {
    n: u32,
    volume: f64,
}

impl BoundQuery {
    pub fn new(n: u32, volume: f64) -> Result<Self, BoundError> {
        check_rank(n)?;
        check_volume(volume)?;
        Ok(Self { n, volume })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }
}

/// Cusp area budget `V_c = C₀ V`.
pub fn cusp_area_budget(volume: f64) -> Result<f64, BoundError> {
    check_volume(volume)?;
    Ok(constants().c0 * volume)
}

/// Largest possible minimal translation, `√(4V_c/√3)`.
///
/// Fails with [`BoundError::EmptyInterval`] when this is below 2π, so that no
/// translation longer than 2π fits. The boundary case `V_c = π²√3` is
/// accepted and returns 2π up to rounding.
pub fn slope_length_upper(vc: f64) -> Result<f64, BoundError> {
    check_area(vc)?;
    let upper = (4.0 * vc / 3f64.sqrt()).sqrt();
    if upper < 2.0 * PI * (1.0 - tolerance::ALGEBRA) {
        return Err(BoundError::EmptyInterval { upper });
    }
    Ok(upper)
}

/// `√((n − ½)² l² + V_c² / l²)`: distance to the far corner of the cusp cell.
pub fn diagonal_trace_bound(l: f64, n: u32, vc: f64) -> Result<f64, BoundError> {
    let nf = check_rank(n)?;
    check_translation(l)?;
    check_area(vc)?;
    Ok(far_center_formula(nf, l, vc))
}

/// `√(n² l⁴ + 4)`: trace modulus of the perpendicular witness.
pub fn perpendicular_trace_bound(l: f64, n: u32) -> Result<f64, BoundError> {
    let nf = check_rank(n)?;
    check_translation(l)?;
    Ok(perpendicular_formula(nf, l))
}

fn perpendicular_formula(n: f64, l: f64) -> f64 {
    (n * n * l.powi(4) + 4.0).sqrt()
}

/// `√(l² n² + 4)`: bound for translates of a nearby full-sized ball.
pub fn translate_trace_bound(l: f64, n: u32) -> Result<f64, BoundError> {
    let nf = check_rank(n)?;
    check_translation(l)?;
    Ok(near_center_formula(nf, l))
}

/// The cubic `n²x³ − (n − ½)²x² + 4x − V_c²` whose positive root marks
/// where the squared perpendicular bound overtakes the squared diagonal one
/// (in the variable `x = l²`).
pub fn crossover_poly(n: u32, vc: f64, x: f64) -> f64 {
    let nf = f64::from(n);
    let h = nf - 0.5;
    ((nf * nf * x - h * h) * x + 4.0) * x - vc * vc
}

/// Unique positive root of [`crossover_poly`], found by bisection on
/// `(0, √2·V_c^{2/3} + 1]`.
pub fn crossover_root(n: u32, vc: f64) -> Result<f64, BoundError> {
    check_rank(n)?;
    if !(vc.is_finite() && vc > 1.0) {
        return Err(domain(format!("cusp area must exceed 1, got {vc}")));
    }
    let hi = 2f64.sqrt() * vc.powf(2.0 / 3.0) + 1.0;
    Ok(bisect(
        |x| crossover_poly(n, vc, x),
        0.0,
        hi,
        tolerance::ROOT_RTOL,
    )?)
}

/// `√(2n² V_c^{4/3} + 4)`.
pub fn trace_bound_from_cusp_area(n: u32, vc: f64) -> Result<f64, BoundError> {
    let nf = check_rank(n)?;
    check_area(vc)?;
    Ok((2.0 * nf * nf * vc.powf(4.0 / 3.0) + 4.0).sqrt())
}

/// `√(4V_c n²/√3 + 4)`: the translate bound at the largest admissible `l`.
pub fn translate_bound_at_max_length(n: u32, vc: f64) -> Result<f64, BoundError> {
    let nf = check_rank(n)?;
    check_area(vc)?;
    Ok((4.0 * vc * nf * nf / 3f64.sqrt() + 4.0).sqrt())
}

/// Range of minimal translations scanned by [`max_min_trace_bound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthWindow {
    /// `l ∈ (2π, √(4V_c/√3)]`.
    AboveTwoPi,
    /// `l² ∈ (1, 4V_c/√3]`, the wider window used in the cubic's variable.
    SquaredAboveOne,
}

impl LengthWindow {
    /// Open lower and closed upper end, in units of translation length.
    pub fn range(self, vc: f64) -> (f64, f64) {
        let hi = (4.0 * vc / 3f64.sqrt()).sqrt();
        match self {
            LengthWindow::AboveTwoPi => (2.0 * PI, hi),
            LengthWindow::SquaredAboveOne => (1.0, hi),
        }
    }
}

/// Largest value of `min(diagonal, perpendicular)` over `samples` evenly
/// spaced translations in the window, excluding its lower end. `None` when
/// the window is empty.
pub fn max_min_trace_bound(n: u32, vc: f64, window: LengthWindow, samples: usize) -> Option<f64> {
    let (lo, hi) = window.range(vc);
    if hi <= lo || samples == 0 {
        return None;
    }
    let nf = f64::from(n);
    (1..=samples)
        .map(|k| {
            let l = lo + (hi - lo) * k as f64 / samples as f64;
            far_center_formula(nf, l, vc).min(perpendicular_formula(nf, l))
        })
        .reduce(f64::max)
}

/// Trace bound as a function of the link complement volume `x`:
/// `√(2n² C₀^{4/3} x^{4/3} + 4)`. Increasing in `x`.
pub fn volume_trace_bound(x: f64, n: u32) -> Result<f64, BoundError> {
    let nf = check_rank(n)?;
    if !(x.is_finite() && x > 0.0) {
        return Err(domain(format!("volume x must be positive, got {x}")));
    }
    let c0 = constants().c0;
    Ok((2.0 * nf * nf * c0.powf(4.0 / 3.0) * x.powf(4.0 / 3.0) + 4.0).sqrt())
}

/// Trace bound from the filling inequality, for a link complement of volume
/// `x` whose filling has volume `V < x`:
/// `√(16π⁴n² / (1 − (V/x)^{2/3})² + 4)`. Decreasing in `x`.
pub fn filling_trace_bound(x: f64, n: u32, volume: f64) -> Result<f64, BoundError> {
    let nf = check_rank(n)?;
    check_volume(volume)?;
    if !(x.is_finite() && x > volume) {
        return Err(domain(format!(
            "link complement volume {x} must exceed filled volume {volume}"
        )));
    }
    let shrink = 1.0 - (volume / x).powf(2.0 / 3.0);
    Ok((16.0 * PI.powi(4) * nf * nf / (shrink * shrink) + 4.0).sqrt())
}

/// Volume at which [`volume_trace_bound`] and [`filling_trace_bound`]
/// agree: `(V^{2/3} + 4π² / (√2 C₀^{2/3}))^{3/2}`.
pub fn crossing_volume(volume: f64) -> Result<f64, BoundError> {
    check_volume(volume)?;
    let c0 = constants().c0;
    let u = volume.powf(2.0 / 3.0) + 4.0 * PI * PI / (2f64.sqrt() * c0.powf(2.0 / 3.0));
    Ok(u.powf(1.5))
}

/// The same crossing located by bisection on the difference of the two
/// trace bounds for rank `n`, without using the closed form.
pub fn crossing_volume_numeric(volume: f64, n: u32) -> Result<f64, BoundError> {
    check_rank(n)?;
    check_volume(volume)?;
    let diff = |x: f64| {
        let rising = volume_trace_bound(x, n).unwrap_or(f64::NAN);
        let falling = filling_trace_bound(x, n, volume).unwrap_or(f64::NAN);
        rising - falling
    };
    let lo = if volume > 0.0 {
        volume * (1.0 + 1e-9)
    } else {
        1e-300
    };
    let mut hi = (2.0 * volume).max(1.0);
    while diff(hi) <= 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(domain("trace bounds never cross"));
        }
    }
    Ok(bisect(diff, lo, hi, tolerance::ROOT_RTOL * 1e-2)?)
}

/// Upper bound on the length of the `n`-th shortest closed geodesic:
/// `log(n² (√2 (C₀V)^{2/3} + 4π²)² + 8)`.
pub fn geodesic_length_bound(query: &BoundQuery) -> f64 {
    let nf = f64::from(query.n);
    let inner = shortest_inner(query.volume);
    (nf * nf * inner * inner + 8.0).ln()
}

fn shortest_inner(volume: f64) -> f64 {
    let c0 = constants().c0;
    2f64.sqrt() * (c0 * volume).powf(2.0 / 3.0) + 4.0 * PI * PI
}

/// The `n = 1` case, `log((√2 (C₀V)^{2/3} + 4π²)² + 8)`, evaluated on its own.
pub fn systole_length_bound(volume: f64) -> Result<f64, BoundError> {
    check_volume(volume)?;
    let inner = shortest_inner(volume);
    Ok((inner.powi(2) + 8.0).ln())
}

/// Lower bound on the volume after filling slopes of minimal length
/// `l_min > 2π`: `(1 − (2π/l_min)²)^{3/2} · vol`.
pub fn filled_volume_lower_bound(vol_cusped: f64, l_min: f64) -> Result<f64, BoundError> {
    if !(vol_cusped.is_finite() && vol_cusped > 0.0) {
        return Err(domain(format!(
            "cusped volume must be positive, got {vol_cusped}"
        )));
    }
    if l_min.is_nan() || l_min <= 2.0 * PI {
        return Err(BoundError::SlopeTooShort(l_min));
    }
    let ratio = 2.0 * PI / l_min;
    Ok((1.0 - ratio * ratio).powf(1.5) * vol_cusped)
}

/// Largest minimal slope length compatible with filling a link complement
/// of volume `x` to volume `V`: `2π / √(1 − (V/x)^{2/3})`.
pub fn min_slope_length_upper(volume: f64, x: f64) -> Result<f64, BoundError> {
    check_volume(volume)?;
    if !(x.is_finite() && x > volume) {
        return Err(domain(format!(
            "link complement volume {x} must exceed filled volume {volume}"
        )));
    }
    Ok(2.0 * PI / (1.0 - (volume / x).powf(2.0 / 3.0)).sqrt())
}

/// Translation length bound `log(R² + 4)` for a loxodromic of trace
/// modulus at most `R`.
pub fn translation_length_upper(r: f64) -> f64 {
    (r * r + 4.0).ln()
}

/// One row of [`bound_table`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub crossing_x: f64,
    pub trace_bound: f64,
    pub length_bound: f64,
}

fn table_row(n: u32, volume: f64) -> Result<TableRow, BoundError> {
    let crossing_x = crossing_volume(volume)?;
    Ok(TableRow {
        n,
        crossing_x,
        trace_bound: volume_trace_bound(crossing_x, n)?,
        length_bound: geodesic_length_bound(&BoundQuery::new(n, volume)?),
    })
}

/// Rows `n = 1..=n_max`, evaluated in parallel and returned in order.
pub fn bound_table(n_max: u32, volume: f64) -> Result<Vec<TableRow>, BoundError> {
    check_rank(n_max)?;
    check_volume(volume)?;
    (1..=n_max)
        .into_par_iter()
        .map(|n| table_row(n, volume))
        .collect()
}

/// Sequential counterpart of [`bound_table`].
pub fn bound_table_sequential(n_max: u32, volume: f64) -> Result<Vec<TableRow>, BoundError> {
    check_rank(n_max)?;
    check_volume(volume)?;
    (1..=n_max).map(|n| table_row(n, volume)).collect()
}
