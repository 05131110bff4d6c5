use std::f64::consts::PI;

use geodesic_bounds::bounds::{geodesic_length_bound, translation_length_upper, BoundQuery};
use geodesic_bounds::cusp::{image_horoball, CuspLattice, Horoball};
use geodesic_bounds::moebius::{
    hyperbolic_distance, BoundaryPoint, H3Point, IsometryClass, MoebiusMap,
};
use geodesic_bounds::witness::{
    product_witness_closed_form, signed_product_witness, translate_pair, WitnessParams,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn complex(r: f64) -> impl Strategy<Value = Complex64> {
    (-r..r, -r..r).prop_map(|(re, im)| Complex64::new(re, im))
}

fn map() -> impl Strategy<Value = MoebiusMap> {
    (complex(3.0), complex(3.0), complex(3.0))
        .prop_filter("a bounded away from 0", |(a, _, _)| a.norm() > 0.2)
        .prop_map(|(a, b, c)| {
            let d = (Complex64::new(1.0, 0.0) + b * c) / a;
            MoebiusMap::new(a, b, c, d).unwrap()
        })
}

fn point() -> impl Strategy<Value = H3Point> {
    (complex(5.0), 0.05..20.0).prop_map(|(z, t)| H3Point::new(z, t).unwrap())
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn isometries_preserve_distance(m in map(), p in point(), q in point()) {
        let before = hyperbolic_distance(&p, &q);
        let after = hyperbolic_distance(&m.act_on_h3(&p), &m.act_on_h3(&q));
        prop_assert!(close(before, after, 1e-9), "{} vs {}", before, after);
    }

    #[test]
    fn action_is_a_homomorphism(f in map(), g in map(), p in point()) {
        let direct = f.compose(&g).act_on_h3(&p);
        let stepwise = f.act_on_h3(&g.act_on_h3(&p));
        prop_assert!(hyperbolic_distance(&direct, &stepwise) <= 1e-8);
    }

    #[test]
    fn sign_does_not_change_anything(m in map(), p in point()) {
        let neg = -m;
        prop_assert_eq!(neg, m);
        prop_assert_eq!(neg.class(), m.class());
        prop_assert_eq!(neg.act_on_h3(&p), m.act_on_h3(&p));
        prop_assert_eq!(neg.trace(), m.trace());
    }

    #[test]
    fn conjugation_preserves_class_and_length(m in map(), b in map()) {
        let conj = m.conjugate_by(&b);
        prop_assert!(close(conj.trace().norm(), m.trace().norm(), 1e-9));
        if m.class() == IsometryClass::Loxodromic && (m.trace() * m.trace() - 4.0).norm() > 1e-6 {
            prop_assert_eq!(conj.class(), IsometryClass::Loxodromic);
            let (l1, l2) = (m.translation_length().unwrap(), conj.translation_length().unwrap());
            prop_assert!(close(l1, l2, 1e-8), "{} vs {}", l1, l2);
        }
    }

    #[test]
    fn inverse_composes_to_identity(m in map()) {
        prop_assert!(m.compose(&m.inverse()).approx_eq(&MoebiusMap::identity(), 1e-10));
    }

    #[test]
    fn boundary_action_is_the_limit_of_the_interior_action(m in map(), z in complex(4.0)) {
        let BoundaryPoint::Finite(w) = m.act_on_boundary(BoundaryPoint::Finite(z)) else {
            return Ok(());
        };
        prop_assume!(w.norm() < 1e6);
        let image = m.act_on_h3(&H3Point::new(z, 1e-7).unwrap());
        prop_assert!((image.z() - w).norm() <= 1e-4 * w.norm().max(1.0), "{} vs {}", image.z(), w);
        prop_assert!(image.t() < 1e-3);
    }

    #[test]
    fn trace_bounds_translation_length(m in map(), stretch in 1.0..3.0f64) {
        prop_assume!(m.class() == IsometryClass::Loxodromic);
        let r = m.trace().norm() * stretch;
        prop_assert!(m.translation_length().unwrap() < translation_length_upper(r));
    }

    #[test]
    fn horoball_images_compose(f in map(), g in map(), center in complex(3.0), size in 0.1..2.0f64) {
        let ball = Horoball::finite(center, size).unwrap();
        let direct = image_horoball(&f.compose(&g), &ball);
        let stepwise = image_horoball(&f, &image_horoball(&g, &ball));
        match (direct, stepwise) {
            (Horoball::Finite { center: c1, diameter: d1 }, Horoball::Finite { center: c2, diameter: d2 }) => {
                prop_assert!((c1 - c2).norm() <= 1e-8 * c1.norm().max(1.0));
                prop_assert!(close(d1, d2, 1e-8));
            }
            (Horoball::AtInfinity { height: h1 }, Horoball::AtInfinity { height: h2 }) => {
                prop_assert!(close(h1, h2, 1e-8));
            }
            other => prop_assert!(false, "mismatched kinds {:?}", other),
        }
    }

    #[test]
    fn isometries_preserve_tangency(m in map(), x in -3.0..3.0f64) {
        // two unit balls whose centers are one apart are tangent
        let p = Horoball::finite(Complex64::new(x, 0.0), 1.0).unwrap();
        let q = Horoball::finite(Complex64::new(x + 1.0, 0.0), 1.0).unwrap();
        prop_assert!(p.is_tangent_to(&q));
        let (p2, q2) = (image_horoball(&m, &p), image_horoball(&m, &q));
        let gap = p2.tangency_gap(&q2).unwrap();
        prop_assert!(gap.abs() <= 1e-8, "gap {}", gap);
    }

    #[test]
    fn lattice_reduction_is_minimal(
        tau1 in 0.5..5.0f64,
        tau2 in (-10.0..10.0f64, 0.3..8.0f64),
        z in complex(40.0),
    ) {
        let lattice = CuspLattice::new(tau1, Complex64::new(tau2.0, tau2.1)).unwrap();
        let r = lattice.reduce(z);
        let t2 = lattice.tau2();
        for m in -6i32..=6 {
            for n in -6i32..=6 {
                let shifted = r - f64::from(m) * tau1 - f64::from(n) * t2;
                prop_assert!(r.norm() <= shifted.norm() + 1e-9);
            }
        }
    }

    #[test]
    fn translate_pair_traces_and_never_both_parabolic(
        a in complex(10.0).prop_filter("nonzero", |a| a.norm() > 1e-3),
        theta in 0.0..(2.0 * PI),
        l in (2.0 * PI * (1.0 + 1e-9))..40.0,
        n in 1u32..60,
    ) {
        let c = Complex64::from_polar(1.0, theta);
        let pair = translate_pair(&WitnessParams::new(l, a, c, n).unwrap()).unwrap();
        let shift = f64::from(n) * c * l;
        prop_assert!((pair.plus.trace - (a + shift)).norm() <= 1e-10 * (a + shift).norm().max(1.0));
        prop_assert!((pair.minus.trace - (a - shift)).norm() <= 1e-10 * (a - shift).norm().max(1.0));
        prop_assert_eq!(pair.chosen().class, IsometryClass::Loxodromic);
    }

    #[test]
    fn product_witness_matches_closed_form(
        l in (2.0 * PI * (1.0 + 1e-9))..30.0,
        omega in complex(2.0),
        k in -20i64..=20,
    ) {
        let product = signed_product_witness(l, omega, k).unwrap();
        let closed = product_witness_closed_form(l, omega, k).unwrap();
        let scale = (k.unsigned_abs() as f64 * l).max(1.0);
        prop_assert!(product.approx_eq(&closed, 1e-12 * scale * scale), "{} vs {}", product, closed);
    }

    #[test]
    fn geodesic_bound_is_monotone(n in 1u32..500, v in 0.0..200.0f64, dv in 0.001..10.0f64) {
        let b = |n, v| geodesic_length_bound(&BoundQuery::new(n, v).unwrap());
        prop_assert!(b(n + 1, v) > b(n, v));
        prop_assert!(b(n, v + dv) > b(n, v));
    }
}
