//! Horoballs, cusp lattices and slope lengths.
//!
//! A horoball is stored by its center on ℂ ∪ {∞} and a size: the Euclidean
//! diameter for finite centers, the height of the bounding horosphere for
//! the ball at ∞. Isometries act on horoballs through the spinor picture: a
//! ball at `p` of diameter `D` corresponds to the vector `(p, 1)/√D ∈ ℂ²`
//! (the ball at ∞ of height `h` to `(√h, 0)`), and a matrix acts linearly
//! on that vector. Images of `H_∞` come out as balls centered at `a/c`
//! with diameter `1/(h|c|²)`.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use thiserror::Error;

use crate::moebius::{BoundaryPoint, MoebiusMap};
use crate::tolerance;

/// Errors from lattice and horoball constructors and slope computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CuspError {
    #[error("horoball size must be positive and finite, got {0}")]
    InvalidSize(f64),
    #[error("horoball center must be finite")]
    NonFiniteCenter,
    #[error("lattice generators do not span a rank-2 lattice (tau1 = {tau1}, tau2 = {tau2})")]
    DegenerateLattice { tau1: f64, tau2: Complex64 },
    #[error("tau1 = {tau1} is not a shortest vector of the lattice")]
    NotReduced { tau1: f64 },
    #[error("slope (0, 0) is not a slope")]
    ZeroSlope,
}

/// A horoball in the upper half-space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Horoball {
    /// Ball tangent to ℂ at `center`, with Euclidean diameter `diameter`.
    Finite { center: Complex64, diameter: f64 },
    /// Region `t ≥ height` above a horizontal horosphere.
    AtInfinity { height: f64 },
}

impl Horoball {
    pub fn finite(center: Complex64, diameter: f64) -> Result<Self, CuspError> {
        if !(center.re.is_finite() && center.im.is_finite()) {
            return Err(CuspError::NonFiniteCenter);
        }
        if !(diameter.is_finite() && diameter > 0.0) {
            return Err(CuspError::InvalidSize(diameter));
        }
        Ok(Horoball::Finite { center, diameter })
    }

    pub fn at_infinity(height: f64) -> Result<Self, CuspError> {
        if !(height.is_finite() && height > 0.0) {
            return Err(CuspError::InvalidSize(height));
        }
        Ok(Horoball::AtInfinity { height })
    }

    /// `H_∞` bounded by the plane `t = 1`.
    pub fn standard() -> Self {
        Horoball::AtInfinity { height: 1.0 }
    }

    pub fn center(&self) -> BoundaryPoint {
        match self {
            Horoball::Finite { center, .. } => BoundaryPoint::Finite(*center),
            Horoball::AtInfinity { .. } => BoundaryPoint::Infinity,
        }
    }

    /// Diameter of a finite ball, height of the ball at ∞.
    pub fn size(&self) -> f64 {
        match self {
            Horoball::Finite { diameter, .. } => *diameter,
            Horoball::AtInfinity { height } => *height,
        }
    }

    /// Finite ball tangent to the plane `t = 1`.
    pub fn is_full_sized(&self) -> bool {
        matches!(self, Horoball::Finite { diameter, .. } if (diameter - 1.0).abs() <= tolerance::TANGENCY)
    }

    fn spinor(&self) -> (Complex64, Complex64) {
        match *self {
            Horoball::Finite { center, diameter } => {
                let s = diameter.sqrt().recip();
                (center * s, Complex64::new(s, 0.0))
            }
            Horoball::AtInfinity { height } => {
                (Complex64::new(height.sqrt(), 0.0), Complex64::new(0.0, 0.0))
            }
        }
    }

    fn from_spinor(u: Complex64, v: Complex64) -> Self {
        // center sent to ∞ up to rounding
        if v.norm() <= tolerance::ALGEBRA * u.norm().max(1.0) {
            Horoball::AtInfinity {
                height: u.norm_sqr(),
            }
        } else {
            Horoball::Finite {
                center: u / v,
                diameter: v.norm_sqr().recip(),
            }
        }
    }

    /// Signed gap in the tangency relation: `|p−q|² − D₁D₂` for two finite
    /// balls and `D − h` for a finite ball against the ball at ∞. Zero means
    /// tangent, positive disjoint, negative overlapping. Two balls at ∞ are
    /// nested and report `None`.
    pub fn tangency_gap(&self, other: &Horoball) -> Option<f64> {
        match (*self, *other) {
            (
                Horoball::Finite {
                    center: p,
                    diameter: d1,
                },
                Horoball::Finite {
                    center: q,
                    diameter: d2,
                },
            ) => Some((p - q).norm_sqr() - d1 * d2),
            (Horoball::Finite { diameter, .. }, Horoball::AtInfinity { height })
            | (Horoball::AtInfinity { height }, Horoball::Finite { diameter, .. }) => {
                Some(height - diameter)
            }
            (Horoball::AtInfinity { .. }, Horoball::AtInfinity { .. }) => None,
        }
    }

    pub fn is_tangent_to(&self, other: &Horoball) -> bool {
        self.tangency_gap(other)
            .is_some_and(|g| g.abs() <= tolerance::TANGENCY)
    }
}

/// Image of a horoball under an isometry.
pub fn image_horoball(map: &MoebiusMap, ball: &Horoball) -> Horoball {
    let (u, v) = ball.spinor();
    Horoball::from_spinor(map.a() * u + map.b() * v, map.c() * u + map.d() * v)
}

/// The rank-2 translation lattice of a cusp, acting on the horosphere at ∞.
///
/// `tau1` is real and positive; `tau2` has nonzero imaginary part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CuspLattice {
    tau1: f64,
    tau2: Complex64,
}

impl CuspLattice {
    pub fn new(tau1: f64, tau2: Complex64) -> Result<Self, CuspError> {
        let ok = tau1.is_finite()
            && tau1 > 0.0
            && tau2.re.is_finite()
            && tau2.im.is_finite()
            && tau2.im != 0.0;
        if !ok {
            return Err(CuspError::DegenerateLattice { tau1, tau2 });
        }
        Ok(Self { tau1, tau2 })
    }

    /// Like [`CuspLattice::new`], additionally requiring `tau1` to be a
    /// shortest lattice vector, so that `tau1` is the minimal translation.
    pub fn new_reduced(tau1: f64, tau2: Complex64) -> Result<Self, CuspError> {
        let lattice = Self::new(tau1, tau2)?;
        if !lattice.is_reduced() {
            return Err(CuspError::NotReduced { tau1 });
        }
        Ok(lattice)
    }

    pub fn tau1(&self) -> f64 {
        self.tau1
    }

    pub fn tau2(&self) -> Complex64 {
        self.tau2
    }

    /// `tau1 ≤ |tau2|` and `tau1 ≤ |tau1 ± tau2|`.
    pub fn is_reduced(&self) -> bool {
        let t1 = Complex64::new(self.tau1, 0.0);
        let slack = tolerance::ALGEBRA * self.tau1;
        self.tau1 <= self.tau2.norm() + slack
            && self.tau1 <= (t1 + self.tau2).norm() + slack
            && self.tau1 <= (t1 - self.tau2).norm() + slack
    }

    /// Area of a fundamental parallelogram.
    pub fn coarea(&self) -> f64 {
        self.tau1 * self.tau2.im.abs()
    }

    /// Length of the lattice vector `p·tau1 + q·tau2`.
    pub fn slope_length(&self, p: i64, q: i64) -> Result<f64, CuspError> {
        if p == 0 && q == 0 {
            return Err(CuspError::ZeroSlope);
        }
        Ok((p as f64 * self.tau1 + q as f64 * self.tau2).norm())
    }

    /// Shortest representative of `z` modulo the lattice, i.e. the point of
    /// `z + Λ` in the Dirichlet cell at 0.
    pub fn reduce(&self, z: Complex64) -> Complex64 {
        let (e1, e2) = gauss_reduced_basis(Complex64::new(self.tau1, 0.0), self.tau2);
        // lattice coordinates of z in the reduced basis
        let det = e1.re * e2.im - e1.im * e2.re;
        let x = (z.re * e2.im - z.im * e2.re) / det;
        let y = (e1.re * z.im - e1.im * z.re) / det;
        let (m0, n0) = (x.round() as i64, y.round() as i64);
        let mut best = z - m0 as f64 * e1 - n0 as f64 * e2;
        for dm in -2..=2 {
            for dn in -2..=2 {
                let cand = z - (m0 + dm) as f64 * e1 - (n0 + dn) as f64 * e2;
                if cand.norm_sqr() < best.norm_sqr() {
                    best = cand;
                }
            }
        }
        best
    }
}

/// Lagrange–Gauss reduction of a 2-D basis.
fn gauss_reduced_basis(mut u: Complex64, mut v: Complex64) -> (Complex64, Complex64) {
    if u.norm_sqr() > v.norm_sqr() {
        std::mem::swap(&mut u, &mut v);
    }
    loop {
        let mu = ((u.conj() * v).re / u.norm_sqr()).round();
        v -= mu * u;
        if v.norm_sqr() >= u.norm_sqr() {
            return (u, v);
        }
        std::mem::swap(&mut u, &mut v);
    }
}

/// `reduce_mod_lattice` as a free function.
pub fn reduce_mod_lattice(z: Complex64, lattice: &CuspLattice) -> Complex64 {
    lattice.reduce(z)
}

/// Length threshold for hyperbolic Dehn filling.
pub const TWO_PI_THRESHOLD: f64 = 2.0 * PI;

/// The improved threshold 6.
pub const SIX_THRESHOLD: f64 = 6.0;

/// A cusp together with the slope to be filled on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FillingSlope {
    pub lattice: CuspLattice,
    pub p: i64,
    pub q: i64,
}

/// True iff every filling slope is strictly longer than `threshold`.
pub fn filling_admissible(slopes: &[FillingSlope], threshold: f64) -> Result<bool, CuspError> {
    for s in slopes {
        if s.lattice.slope_length(s.p, s.q)? <= threshold {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Images of `H_∞` (height 1) under all reduced words of length at most
/// `depth` in the generators and their inverses.
///
/// Balls agreeing to 1e-9 in center and size are merged. The result lists
/// the ball at ∞ first, then finite balls by decreasing diameter, then by
/// center.
pub fn horoball_orbit(generators: &[MoebiusMap], depth: usize) -> Vec<Horoball> {
    let letters: Vec<MoebiusMap> = generators.iter().flat_map(|g| [*g, g.inverse()]).collect();
    let inverse_of = |i: usize| i ^ 1;

    let mut balls = vec![Horoball::standard()];
    // (word, index of its last letter)
    let mut frontier: Vec<(MoebiusMap, Option<usize>)> = vec![(MoebiusMap::identity(), None)];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(frontier.len() * letters.len());
        for (word, last) in &frontier {
            for (i, letter) in letters.iter().enumerate() {
                if last.is_some_and(|j| inverse_of(j) == i) {
                    continue;
                }
                let w = word.compose(letter);
                let ball = match image_horoball(&w, &Horoball::standard()) {
                    // adding 0.0 clears negative zeros
                    Horoball::Finite { center, diameter } => Horoball::Finite {
                        center: center + Complex64::new(0.0, 0.0),
                        diameter,
                    },
                    ball => ball,
                };
                balls.push(ball);
                next.push((w, Some(i)));
            }
        }
        frontier = next;
    }

    let key = |b: &Horoball| {
        let q = |x: f64| (x * 1e9).round() as i64;
        match b {
            Horoball::Finite { center, diameter } => (1, q(center.re), q(center.im), q(*diameter)),
            Horoball::AtInfinity { height } => (0, 0, 0, q(*height)),
        }
    };
    let mut seen = std::collections::HashSet::new();
    balls.retain(|b| seen.insert(key(b)));
    balls.sort_by(|x, y| match (x, y) {
        (Horoball::AtInfinity { height: h1 }, Horoball::AtInfinity { height: h2 }) => {
            h1.total_cmp(h2)
        }
        (Horoball::AtInfinity { .. }, _) => std::cmp::Ordering::Less,
        (_, Horoball::AtInfinity { .. }) => std::cmp::Ordering::Greater,
        (
            Horoball::Finite {
                center: c1,
                diameter: d1,
            },
            Horoball::Finite {
                center: c2,
                diameter: d2,
            },
        ) => d2
            .total_cmp(d1)
            .then(c1.re.total_cmp(&c2.re))
            .then(c1.im.total_cmp(&c2.im)),
    });
    balls
}

/// Writes horoballs as `center_re,center_im,diameter` rows. The ball at ∞
/// is written with center `inf,inf` and its height in the size column.
pub fn write_horoball_csv<W: Write>(out: W, balls: &[Horoball]) -> Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(["center_re", "center_im", "diameter"])?;
    for ball in balls {
        match ball {
            Horoball::Finite { center, diameter } => w.write_record([
                center.re.to_string(),
                center.im.to_string(),
                diameter.to_string(),
            ])?,
            Horoball::AtInfinity { height } => {
                w.write_record(["inf", "inf", &height.to_string()])?
            }
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::H3Point;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn assert_finite(ball: Horoball, center: Complex64, diameter: f64, tol: f64) {
        match ball {
            Horoball::Finite {
                center: z,
                diameter: d,
            } => {
                assert_abs_diff_eq!((z - center).norm(), 0.0, epsilon = tol);
                assert_abs_diff_eq!(d, diameter, epsilon = tol);
            }
            other => panic!("expected a finite ball, got {other:?}"),
        }
    }

    #[test]
    fn full_sized_image_of_h_infinity() {
        let cc = Complex64::from_polar(1.0, 0.9);
        let a = c(1.5, -0.5);
        let gamma = MoebiusMap::new(a, -cc.inv(), cc, c(0.0, 0.0)).unwrap();
        let img = image_horoball(&gamma, &Horoball::standard());
        assert_finite(img, a / cc, 1.0, 1e-14);
        assert!(img.is_full_sized());
        assert!(img.is_tangent_to(&Horoball::standard()));
    }

    #[test]
    fn parabolic_fixes_h_infinity() {
        let beta = MoebiusMap::from_real(1.0, 7.0, 0.0, 1.0).unwrap();
        assert_eq!(
            image_horoball(&beta, &Horoball::standard()),
            Horoball::standard()
        );
        let diag = MoebiusMap::from_real(2.0, 0.0, 0.0, 0.5).unwrap();
        match image_horoball(&diag, &Horoball::at_infinity(1.5).unwrap()) {
            Horoball::AtInfinity { height } => assert_abs_diff_eq!(height, 6.0, epsilon = 1e-14),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inversion_image_matches_point_sampling() {
        let inv = MoebiusMap::from_real(0.0, -1.0, 1.0, 0.0).unwrap();
        let img = image_horoball(&inv, &Horoball::standard());
        assert_finite(img, c(0.0, 0.0), 1.0, 1e-15);
        assert!(img.is_tangent_to(&Horoball::standard()));

        // the plane t = 1 lands on the sphere |w - i/2·ê_t| = 1/2
        for (x, y) in [(0.0, 0.0), (0.5, 0.2), (-2.0, 1.0), (10.0, -3.0)] {
            let q = inv.act_on_h3(&H3Point::new(c(x, y), 1.0).unwrap());
            let r = (q.z().norm_sqr() + (q.t() - 0.5).powi(2)).sqrt();
            assert_abs_diff_eq!(r, 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn analytic_diameter_matches_sampling() {
        let m = MoebiusMap::new(c(1.0, 0.5), c(2.0, -1.0), c(0.3, 0.8), c(1.2, 0.1)).unwrap();
        let h = 1.7;
        let img = image_horoball(&m, &Horoball::at_infinity(h).unwrap());
        let (center, diameter) = match img {
            Horoball::Finite { center, diameter } => (center, diameter),
            _ => unreachable!(),
        };
        assert_abs_diff_eq!((center - m.a() / m.c()).norm(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(diameter, 1.0 / (h * m.c().norm_sqr()), epsilon = 1e-14);
        // three points of the horosphere t = h land on the image sphere
        for (x, y) in [(0.0, 0.0), (1.0, 2.0), (-3.0, 0.5)] {
            let q = m.act_on_h3(&H3Point::new(c(x, y), h).unwrap());
            let r = ((q.z() - center).norm_sqr() + (q.t() - diameter / 2.0).powi(2)).sqrt();
            assert_abs_diff_eq!(r, diameter / 2.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn finite_ball_can_be_sent_to_infinity() {
        let inv = MoebiusMap::from_real(0.0, -1.0, 1.0, 0.0).unwrap();
        let ball = Horoball::finite(c(0.0, 0.0), 0.25).unwrap();
        match image_horoball(&inv, &ball) {
            Horoball::AtInfinity { height } => assert_abs_diff_eq!(height, 4.0, epsilon = 1e-14),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn horoball_validation() {
        assert!(Horoball::finite(c(0.0, 0.0), 0.0).is_err());
        assert!(Horoball::finite(c(f64::NAN, 0.0), 1.0).is_err());
        assert!(Horoball::at_infinity(-1.0).is_err());
    }

    #[test]
    fn reduction_examples() {
        let lat = CuspLattice::new(1.0, c(0.0, 1.0)).unwrap();
        assert_abs_diff_eq!(lat.reduce(c(1.0, 0.0)).norm(), 0.0, epsilon = 1e-15);
        let r = lat.reduce(c(0.6, 0.0));
        assert_abs_diff_eq!(r.re, -0.4, epsilon = 1e-15);
        assert_abs_diff_eq!(r.im, 0.0, epsilon = 1e-15);
        let inside = c(0.2, -0.3);
        assert_eq!(lat.reduce(inside), inside);
    }

    #[test]
    fn reduction_handles_skewed_bases() {
        // tau2 far from reduced; the search still finds the Dirichlet point
        let lat = CuspLattice::new(1.0, c(7.3, 0.9)).unwrap();
        let z = c(3.3, 2.7);
        let r = lat.reduce(z);
        let mut best = f64::INFINITY;
        for m in -60..=60 {
            for n in -10..=10 {
                let w = z - m as f64 * lat.tau1() - n as f64 * lat.tau2();
                best = best.min(w.norm());
            }
        }
        assert_abs_diff_eq!(r.norm(), best, epsilon = 1e-12);
    }

    #[test]
    fn coarea_examples() {
        assert_eq!(CuspLattice::new(1.0, c(0.0, 1.0)).unwrap().coarea(), 1.0);
        assert_eq!(CuspLattice::new(7.0, c(1.0, 5.0)).unwrap().coarea(), 35.0);
        let s = 2.5;
        let base = CuspLattice::new(3.0, c(0.7, 4.0)).unwrap();
        let scaled = CuspLattice::new(3.0 * s, c(0.7, 4.0) * s).unwrap();
        assert_abs_diff_eq!(scaled.coarea(), s * s * base.coarea(), epsilon = 1e-12);
    }

    #[test]
    fn lattice_validation() {
        assert!(CuspLattice::new(0.0, c(0.0, 1.0)).is_err());
        assert!(CuspLattice::new(1.0, c(2.0, 0.0)).is_err());
        assert!(CuspLattice::new_reduced(3.0, c(0.0, 4.0)).is_ok());
        assert_eq!(
            CuspLattice::new_reduced(7.0, c(1.0, 5.0)),
            Err(CuspError::NotReduced { tau1: 7.0 })
        );
    }

    #[test]
    fn slope_lengths() {
        let lat = CuspLattice::new(3.0, c(0.0, 4.0)).unwrap();
        assert_eq!(lat.slope_length(1, 0).unwrap(), 3.0);
        assert_eq!(lat.slope_length(1, 1).unwrap(), 5.0);
        assert_eq!(lat.slope_length(0, 1).unwrap(), 4.0);
        assert_eq!(lat.slope_length(-1, -1).unwrap(), 5.0);
        assert_eq!(lat.slope_length(0, 0), Err(CuspError::ZeroSlope));
    }

    #[test]
    fn filling_thresholds() {
        let seven = CuspLattice::new(7.0, c(0.0, 9.0)).unwrap();
        let six = CuspLattice::new(6.0, c(0.0, 9.0)).unwrap();
        let six_half = CuspLattice::new(6.2, c(0.0, 9.0)).unwrap();
        let ten = CuspLattice::new(10.0, c(0.0, 11.0)).unwrap();
        let slope = |lattice| FillingSlope {
            lattice,
            p: 1,
            q: 0,
        };

        assert!(filling_admissible(&[slope(seven)], TWO_PI_THRESHOLD).unwrap());
        assert!(!filling_admissible(&[slope(six)], TWO_PI_THRESHOLD).unwrap());
        assert!(filling_admissible(&[slope(six_half), slope(ten)], SIX_THRESHOLD).unwrap());
        assert!(!filling_admissible(&[slope(six_half), slope(ten)], TWO_PI_THRESHOLD).unwrap());
        assert!(!filling_admissible(&[slope(six)], SIX_THRESHOLD).unwrap());
        let zero = FillingSlope {
            lattice: seven,
            p: 0,
            q: 0,
        };
        assert_eq!(
            filling_admissible(&[zero], SIX_THRESHOLD),
            Err(CuspError::ZeroSlope)
        );
    }

    #[test]
    fn orbit_contains_full_sized_ball_and_h_zero() {
        let beta = MoebiusMap::from_real(1.0, 7.0, 0.0, 1.0).unwrap();
        let gamma = MoebiusMap::from_real(3.0, -1.0, 1.0, 0.0).unwrap();
        let balls = horoball_orbit(&[beta, gamma], 2);
        assert_eq!(balls[0], Horoball::standard());
        assert!(balls.iter().all(|b| !matches!(b, Horoball::Finite { center, .. }
            if center.re.is_sign_negative() && center.re == 0.0 || center.im.is_sign_negative() && center.im == 0.0)));
        let has = |z: Complex64| {
            balls.iter().any(|b| {
                matches!(b, Horoball::Finite { center, diameter }
            if (center - z).norm() < 1e-12 && (diameter - 1.0).abs() < 1e-12)
            })
        };
        assert!(has(c(3.0, 0.0)));
        assert!(has(c(0.0, 0.0)));
        assert!(has(c(10.0, 0.0)));
        assert!(has(c(-4.0, 0.0)));
        // no duplicates of the ball at ∞ despite β-words
        assert_eq!(
            balls
                .iter()
                .filter(|b| matches!(b, Horoball::AtInfinity { .. }))
                .count(),
            1
        );
        assert_eq!(horoball_orbit(&[beta, gamma], 2), balls);
        assert_eq!(
            horoball_orbit(&[beta, gamma], 0),
            vec![Horoball::standard()]
        );
    }

    #[test]
    fn csv_encoding() {
        let balls = [
            Horoball::standard(),
            Horoball::finite(c(3.0, -0.5), 1.0).unwrap(),
        ];
        let mut buf = Vec::new();
        write_horoball_csv(&mut buf, &balls).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "center_re,center_im,diameter\ninf,inf,1\n3,-0.5,1\n"
        );
    }
}
