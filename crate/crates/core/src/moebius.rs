//! Orientation-preserving isometries of hyperbolic 3-space.
//!
//! Points of ℍ³ are written `(z, t)` in the upper half-space model, with
//! `z` complex and height `t > 0`. An isometry is an element of PSL(2, ℂ):
//! a 2×2 complex matrix of unit determinant, taken up to a global sign.
//! The boundary sphere is ℂ ∪ {∞}, on which matrices act by fractional
//! linear transformations.

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::tolerance;

/// Errors raised by isometry constructors and measurements.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MoebiusError {
    /// An entry or coordinate was NaN or infinite.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    /// `ad - bc` vanished, so the matrix cannot be scaled into SL(2, ℂ).
    #[error("degenerate matrix: determinant {0} is zero")]
    Degenerate(Complex64),
    /// Heights in the upper half-space must be strictly positive.
    #[error("height must be positive, got {0}")]
    NonpositiveHeight(f64),
    /// Translation length is only defined for loxodromic elements.
    #[error("map is {0}, not loxodromic")]
    NotLoxodromic(IsometryClass),
    /// Maps with `c = 0` fix ∞ and have no isometric circle.
    #[error("map fixes infinity (c = 0) and has no isometric circle")]
    NoIsometricCircle,
}

/// Conjugacy type of an element of PSL(2, ℂ), read off from its trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IsometryClass {
    Identity,
    Parabolic,
    Elliptic,
    Loxodromic,
}

impl fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IsometryClass::Identity => "identity",
            IsometryClass::Parabolic => "parabolic",
            IsometryClass::Elliptic => "elliptic",
            IsometryClass::Loxodromic => "loxodromic",
        };
        f.write_str(s)
    }
}

/// A point of the boundary sphere ℂ ∪ {∞}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPoint {
    Finite(Complex64),
    Infinity,
}

/// A point `(z, t)` of the upper half-space with `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct H3Point {
    z: Complex64,
    t: f64,
}

impl H3Point {
    pub fn new(z: Complex64, t: f64) -> Result<Self, MoebiusError> {
        if !(z.re.is_finite() && z.im.is_finite() && t.is_finite()) {
            return Err(MoebiusError::NonFinite("point"));
        }
        if t <= 0.0 {
            return Err(MoebiusError::NonpositiveHeight(t));
        }
        Ok(Self { z, t })
    }

    /// Boundary coordinate.
    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// Height above the boundary plane.
    pub fn t(&self) -> f64 {
        self.t
    }
}

/// Hyperbolic distance in the metric `(|dz|² + dt²) / t²`.
///
/// Evaluated as `2 asinh(ρ / (2 √(t_p t_q)))`, where `ρ` is the Euclidean
/// separation. This agrees with `cosh d = 1 + ρ² / (2 t_p t_q)` but keeps
/// full relative precision for nearby points.
pub fn hyperbolic_distance(p: &H3Point, q: &H3Point) -> f64 {
    let dz = p.z - q.z;
    let rho = (dz.norm_sqr() + (p.t - q.t).powi(2)).sqrt();
    2.0 * (rho / (2.0 * (p.t * q.t).sqrt())).asinh()
}

/// An element of PSL(2, ℂ), stored as a unit-determinant representative.
///
/// `M` and `-M` describe the same isometry and compare equal.
#[derive(Debug, Clone, Copy)]
pub struct MoebiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl PartialEq for MoebiusMap {
    fn eq(&self, other: &Self) -> bool {
        let same = self.entries() == other.entries();
        let flipped = self.entries() == (-*other).entries();
        same || flipped
    }
}

impl std::ops::Neg for MoebiusMap {
    type Output = MoebiusMap;

    fn neg(self) -> MoebiusMap {
        MoebiusMap {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

impl std::ops::Mul for MoebiusMap {
    type Output = MoebiusMap;

    fn mul(self, rhs: MoebiusMap) -> MoebiusMap {
        self.compose(&rhs)
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            fmt_complex(self.a),
            fmt_complex(self.b),
            fmt_complex(self.c),
            fmt_complex(self.d)
        )
    }
}

fn fmt_complex(z: Complex64) -> String {
    if z.im >= 0.0 {
        format!("{}+{}i", z.re, z.im)
    } else {
        format!("{}{}i", z.re, z.im)
    }
}

fn is_integral(z: Complex64) -> bool {
    z.re.fract() == 0.0 && z.im.fract() == 0.0
}

impl MoebiusMap {
    /// Builds the isometry represented by `[[a, b], [c, d]]`, rescaling by
    /// `1/√(ad − bc)` so the stored representative has determinant one.
    pub fn new(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
    ) -> Result<Self, MoebiusError> {
        let all = [a, b, c, d];
        if all.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(MoebiusError::NonFinite("matrix entry"));
        }
        let det = a * d - b * c;
        let scale = all.iter().map(|z| z.norm_sqr()).fold(0.0, f64::max);
        if det.norm() <= f64::EPSILON * scale || det == Complex64::new(0.0, 0.0) {
            return Err(MoebiusError::Degenerate(det));
        }
        Ok(Self { a, b, c, d }.rescaled(det))
    }

    /// Real-entry convenience constructor.
    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Result<Self, MoebiusError> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self {
            a: one,
            b: zero,
            c: zero,
            d: one,
        }
    }

    fn rescaled(self, det: Complex64) -> Self {
        if det == Complex64::new(1.0, 0.0) {
            return self;
        }
        let s = det.sqrt().inv();
        Self {
            a: self.a * s,
            b: self.b * s,
            c: self.c * s,
            d: self.d * s,
        }
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn d(&self) -> Complex64 {
        self.d
    }

    /// Entries in row-major order `[a, b, c, d]`.
    pub fn entries(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn determinant(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    /// Matrix product `self · other`, renormalized to unit determinant.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        let m = MoebiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        };
        let det = m.determinant();
        m.rescaled(det)
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// `self` composed with itself `n` times; negative `n` uses the inverse.
    pub fn pow(&self, n: i64) -> MoebiusMap {
        let base = if n < 0 { self.inverse() } else { *self };
        (0..n.unsigned_abs()).fold(MoebiusMap::identity(), |acc, _| acc.compose(&base))
    }

    /// `B A B⁻¹`.
    pub fn conjugate_by(&self, b: &MoebiusMap) -> MoebiusMap {
        b.compose(self).compose(&b.inverse())
    }

    /// `a + d` of the stored representative, without sign normalization.
    pub fn raw_trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Trace with the PSL sign fixed: the representative with nonnegative
    /// real part, ties broken towards nonnegative imaginary part.
    pub fn trace(&self) -> Complex64 {
        let tr = self.raw_trace();
        if tr.re < 0.0 || (tr.re == 0.0 && tr.im < 0.0) {
            -tr
        } else {
            tr
        }
    }

    /// Classification with the default tolerance.
    pub fn class(&self) -> IsometryClass {
        self.classify(tolerance::CLASSIFY)
    }

    /// Classifies by trace. Matrices whose entries are all Gaussian
    /// integers are compared exactly, ignoring `tol`.
    pub fn classify(&self, tol: f64) -> IsometryClass {
        let tol = if self.entries().iter().all(|z| is_integral(*z)) {
            0.0
        } else {
            tol
        };
        let one = Complex64::new(1.0, 0.0);
        let near_identity = |s: Complex64| {
            (self.a - s).norm() <= tol
                && self.b.norm() <= tol
                && self.c.norm() <= tol
                && (self.d - s).norm() <= tol
        };
        if near_identity(one) || near_identity(-one) {
            return IsometryClass::Identity;
        }
        let tr = self.raw_trace();
        if (tr * tr - 4.0).norm() <= tol {
            return IsometryClass::Parabolic;
        }
        if tr.im.abs() <= tol && tr.re * tr.re < 4.0 {
            return IsometryClass::Elliptic;
        }
        IsometryClass::Loxodromic
    }

    /// Exact translation length of a loxodromic element.
    ///
    /// The eigenvalues solve `μ² − tr·μ + 1 = 0`; the length is
    /// `2 log max(|μ₁|, |μ₂|)`.
    pub fn translation_length(&self) -> Result<f64, MoebiusError> {
        match self.class() {
            IsometryClass::Loxodromic => {}
            other => return Err(MoebiusError::NotLoxodromic(other)),
        }
        let tr = self.raw_trace();
        let disc = (tr * tr - 4.0).sqrt();
        let mu = ((tr + disc) * 0.5).norm().max(((tr - disc) * 0.5).norm());
        Ok(2.0 * mu.ln())
    }

    /// Fractional linear action on ℂ ∪ {∞}.
    pub fn act_on_boundary(&self, p: BoundaryPoint) -> BoundaryPoint {
        match p {
            BoundaryPoint::Infinity => {
                if self.c == Complex64::new(0.0, 0.0) {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite(self.a / self.c)
                }
            }
            BoundaryPoint::Finite(z) => {
                let den = self.c * z + self.d;
                if den == Complex64::new(0.0, 0.0) {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite((self.a * z + self.b) / den)
                }
            }
        }
    }

    /// Poincaré extension of the boundary action to ℍ³.
    pub fn act_on_h3(&self, p: &H3Point) -> H3Point {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let (z, t) = (p.z, p.t);
        if c == Complex64::new(0.0, 0.0) {
            let k = a / d;
            return H3Point {
                z: k * z + b / d,
                t: k.norm() * t,
            };
        }
        let w = z + d / c;
        let r2 = w.norm_sqr() + t * t;
        H3Point {
            z: -w.conj() / (c * c * r2) + a / c,
            t: t / (c.norm_sqr() * r2),
        }
    }

    /// Isometric circle `|cz + d| = 1`: center `−d/c`, radius `1/|c|`.
    pub fn isometric_circle(&self) -> Result<(Complex64, f64), MoebiusError> {
        if self.c.norm() <= tolerance::ALGEBRA {
            return Err(MoebiusError::NoIsometricCircle);
        }
        Ok((-self.d / self.c, 1.0 / self.c.norm()))
    }

    /// Entrywise comparison up to global sign.
    pub fn approx_eq(&self, other: &MoebiusMap, tol: f64) -> bool {
        let close = |x: &MoebiusMap, y: &MoebiusMap| {
            x.entries()
                .iter()
                .zip(y.entries().iter())
                .all(|(p, q)| (p - q).norm() <= tol)
        };
        close(self, other) || close(self, &-*other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{E, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pt(re: f64, im: f64, t: f64) -> H3Point {
        H3Point::new(c(re, im), t).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = MoebiusMap::new(c(2.0, 1.0), c(0.5, 0.0), c(1.0, -1.0), c(3.0, 0.0)).unwrap();
        assert!(MoebiusMap::identity().compose(&a).approx_eq(&a, 1e-15));
        assert!(a.compose(&MoebiusMap::identity()).approx_eq(&a, 1e-15));
    }

    #[test]
    fn parabolic_powers_add_translations() {
        let l = 7.0;
        let beta = MoebiusMap::from_real(1.0, l, 0.0, 1.0).unwrap();
        for n in 1..6 {
            let expected = MoebiusMap::from_real(1.0, n as f64 * l, 0.0, 1.0).unwrap();
            assert_eq!(beta.pow(n), expected);
        }
    }

    #[test]
    fn translation_products_match_closed_form() {
        let (l, omega) = (7.0, c(0.3, -1.2));
        let beta_inv = MoebiusMap::from_real(1.0, l, 0.0, 1.0).unwrap();
        let gamma = MoebiusMap::new(c(1.0, 0.0), c(0.0, 0.0), omega, c(1.0, 0.0)).unwrap();
        for n in 1..5 {
            let nl = n as f64 * l;
            let prod = beta_inv.pow(n).compose(&gamma);
            let closed = MoebiusMap::new(1.0 + nl * omega, nl.into(), omega, c(1.0, 0.0)).unwrap();
            assert!(prod.approx_eq(&closed, 1e-10));
        }
    }

    #[test]
    fn normalization_rescales_determinant() {
        let m = MoebiusMap::from_real(2.0, 0.0, 0.0, 2.0).unwrap();
        assert_abs_diff_eq!(m.determinant().re, 1.0, epsilon = 1e-15);
        assert_eq!(m, MoebiusMap::identity());
        assert!(matches!(
            MoebiusMap::from_real(1.0, 2.0, 2.0, 4.0),
            Err(MoebiusError::Degenerate(_))
        ));
        assert!(MoebiusMap::from_real(f64::NAN, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn negation_compares_equal() {
        let m = MoebiusMap::new(c(1.0, 2.0), c(0.0, 1.0), c(1.0, 0.0), c(1.0, -1.0)).unwrap();
        assert_eq!(m, -m);
        assert_eq!(m.class(), (-m).class());
    }

    #[test]
    fn traces() {
        let l = 7.0;
        assert_eq!(
            MoebiusMap::from_real(1.0, l, 0.0, 1.0).unwrap().trace(),
            c(2.0, 0.0)
        );
        let alpha = MoebiusMap::new(c(1.0, l * l), c(l, 0.0), c(0.0, l), c(1.0, 0.0)).unwrap();
        assert_eq!(alpha.trace(), c(2.0, l * l));
        let diag = MoebiusMap::from_real(2.0, 0.0, 0.0, 0.5).unwrap();
        assert_eq!(diag.trace(), c(2.5, 0.0));
        assert_eq!((-diag).trace(), c(2.5, 0.0));
        assert_eq!((-diag).raw_trace(), c(-2.5, 0.0));
        // −2 parabolic is reported as +2
        let neg_par = MoebiusMap::from_real(-1.0, 1.0, 0.0, -1.0).unwrap();
        assert_eq!(neg_par.trace(), c(2.0, 0.0));
        // purely imaginary traces keep the nonnegative imaginary part
        let m = MoebiusMap::new(c(0.0, -1.0), c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(m.raw_trace(), c(0.0, -1.0));
        assert_eq!(m.trace(), c(0.0, 1.0));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            MoebiusMap::from_real(1.0, 1.0, 0.0, 1.0).unwrap().class(),
            IsometryClass::Parabolic
        );
        assert_eq!(MoebiusMap::identity().class(), IsometryClass::Identity);
        assert_eq!((-MoebiusMap::identity()).class(), IsometryClass::Identity);

        let theta = PI / 5.0;
        let rot = MoebiusMap::new(
            Complex64::from_polar(1.0, theta),
            c(0.0, 0.0),
            c(0.0, 0.0),
            Complex64::from_polar(1.0, -theta),
        )
        .unwrap();
        assert_abs_diff_eq!(rot.trace().re, 2.0 * theta.cos(), epsilon = 1e-15);
        assert_eq!(rot.class(), IsometryClass::Elliptic);

        let l = 7.0_f64;
        let alpha = MoebiusMap::new(c(1.0, l * l), c(l, 0.0), c(0.0, l), c(1.0, 0.0)).unwrap();
        // |tr| = √(l⁴ + 4) ≈ 49.04 > 2
        assert_abs_diff_eq!(
            alpha.trace().norm(),
            (l.powi(4) + 4.0).sqrt(),
            epsilon = 1e-12
        );
        assert_eq!(alpha.class(), IsometryClass::Loxodromic);
    }

    #[test]
    fn integer_matrices_classify_exactly() {
        // trace ≈ 2 + 1e-10 is parabolic at the default tolerance
        let near = MoebiusMap::from_real(1.0 + 1e-5, 1.0, 0.0, 1.0 / (1.0 + 1e-5)).unwrap();
        assert_eq!(near.class(), IsometryClass::Parabolic);
        assert_eq!(near.classify(1e-14), IsometryClass::Loxodromic);
        let exact = MoebiusMap::from_real(2.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(exact.classify(10.0), IsometryClass::Loxodromic);
    }

    #[test]
    fn translation_length_examples() {
        let diag = MoebiusMap::from_real(2.0, 0.0, 0.0, 0.5).unwrap();
        assert_abs_diff_eq!(
            diag.translation_length().unwrap(),
            2.0 * 2f64.ln(),
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(diag.translation_length().unwrap(), 1.386294, epsilon = 1e-6);

        // τ = 2 cosh(ℓ/2) with ℓ = 2
        let tau = 2.0 * 1f64.cosh();
        let m = MoebiusMap::from_real(tau, -1.0, 1.0, 0.0).unwrap();
        assert_abs_diff_eq!(m.trace().re, 3.086161, epsilon = 1e-6);
        assert_abs_diff_eq!(m.translation_length().unwrap(), 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!((-m).translation_length().unwrap(), 2.0, epsilon = 1e-12);

        let par = MoebiusMap::from_real(1.0, 1.0, 0.0, 1.0).unwrap();
        assert_eq!(
            par.translation_length(),
            Err(MoebiusError::NotLoxodromic(IsometryClass::Parabolic))
        );
    }

    #[test]
    fn action_examples() {
        let p = pt(0.3, -0.7, 1.9);
        assert_eq!(MoebiusMap::identity().act_on_h3(&p), p);

        let l = 7.0;
        let beta = MoebiusMap::from_real(1.0, l, 0.0, 1.0).unwrap();
        let q = beta.act_on_h3(&p);
        assert_abs_diff_eq!(q.z().re, 7.3, epsilon = 1e-15);
        assert_abs_diff_eq!(q.z().im, -0.7, epsilon = 1e-15);
        assert_abs_diff_eq!(q.t(), 1.9, epsilon = 1e-15);

        let inv = MoebiusMap::from_real(0.0, -1.0, 1.0, 0.0).unwrap();
        let fixed = inv.act_on_h3(&pt(0.0, 0.0, 1.0));
        assert_abs_diff_eq!(fixed.z().norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(fixed.t(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn diagonal_action_scales_height() {
        let m = MoebiusMap::from_real(2.0, 0.0, 0.0, 0.5).unwrap();
        let q = m.act_on_h3(&pt(1.0, 1.0, 1.0));
        assert_abs_diff_eq!(q.z().re, 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q.z().im, 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(q.t(), 4.0, epsilon = 1e-15);
    }

    #[test]
    fn distance_examples() {
        let p = pt(0.0, 0.0, 1.0);
        assert_eq!(hyperbolic_distance(&p, &p), 0.0);
        assert_abs_diff_eq!(
            hyperbolic_distance(&p, &pt(0.0, 0.0, E)),
            1.0,
            epsilon = 1e-15
        );
        // arccosh(1.5)
        let expected = (1.5f64 + (1.5f64 * 1.5 - 1.0).sqrt()).ln();
        assert_abs_diff_eq!(
            hyperbolic_distance(&p, &pt(1.0, 0.0, 1.0)),
            expected,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(expected, 0.962424, epsilon = 1e-6);
    }

    #[test]
    fn heights_must_be_positive() {
        assert!(matches!(
            H3Point::new(c(0.0, 0.0), 0.0),
            Err(MoebiusError::NonpositiveHeight(_))
        ));
        assert!(H3Point::new(c(0.0, 0.0), -1.0).is_err());
    }

    #[test]
    fn isometric_circles() {
        let inv = MoebiusMap::from_real(0.0, -1.0, 1.0, 0.0).unwrap();
        let (center, radius) = inv.isometric_circle().unwrap();
        assert_eq!(center.norm(), 0.0);
        assert_eq!(radius, 1.0);

        let cc = Complex64::from_polar(1.0, 0.4);
        let a = c(2.5, 1.0);
        let gamma = MoebiusMap::new(a, -cc.inv(), cc, c(0.0, 0.0)).unwrap();
        let (center, radius) = gamma.isometric_circle().unwrap();
        assert_abs_diff_eq!(center.norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(radius, 1.0, epsilon = 1e-15);

        let (inv_center, inv_radius) = gamma.inverse().isometric_circle().unwrap();
        assert_abs_diff_eq!((inv_center - a / cc).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(inv_radius, radius, epsilon = 1e-15);

        let beta = MoebiusMap::from_real(1.0, 7.0, 0.0, 1.0).unwrap();
        assert_eq!(
            beta.isometric_circle(),
            Err(MoebiusError::NoIsometricCircle)
        );
    }

    #[test]
    fn isometric_circle_maps_to_inverse_circle() {
        let m = MoebiusMap::new(c(1.0, 2.0), c(-0.5, 0.3), c(0.7, -0.4), c(2.0, 1.0)).unwrap();
        let (center, radius) = m.isometric_circle().unwrap();
        let (inv_center, inv_radius) = m.inverse().isometric_circle().unwrap();
        for k in 0..12 {
            let z = center + Complex64::from_polar(radius, k as f64 * PI / 6.0);
            match m.act_on_boundary(BoundaryPoint::Finite(z)) {
                BoundaryPoint::Finite(w) => {
                    assert_abs_diff_eq!((w - inv_center).norm(), inv_radius, epsilon = 1e-12)
                }
                BoundaryPoint::Infinity => panic!("circle point sent to infinity"),
            }
        }
    }

    #[test]
    fn boundary_action_fixes_and_moves_infinity() {
        let beta = MoebiusMap::from_real(1.0, 7.0, 0.0, 1.0).unwrap();
        assert_eq!(
            beta.act_on_boundary(BoundaryPoint::Infinity),
            BoundaryPoint::Infinity
        );
        let inv = MoebiusMap::from_real(0.0, -1.0, 1.0, 0.0).unwrap();
        assert_eq!(
            inv.act_on_boundary(BoundaryPoint::Finite(c(0.0, 0.0))),
            BoundaryPoint::Infinity
        );
        assert_eq!(
            inv.act_on_boundary(BoundaryPoint::Infinity),
            BoundaryPoint::Finite(c(0.0, 0.0))
        );
    }
}
