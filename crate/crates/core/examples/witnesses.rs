//! Loxodromic witnesses built from a cusp translation and a full-sized
//! horoball, compared with the trace bounds they are meant to satisfy.

use std::f64::consts::PI;

use geodesic_bounds::bounds::{perpendicular_trace_bound, translation_length_upper};
use geodesic_bounds::witness::{
    check_translate_witness, perpendicular_witness, product_witness, product_witness_closed_form,
    translate_pair, WitnessParams,
};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = 7.0;

    println!("translates of a full-sized ball, gamma = [[a, -1/c], [c, 0]]");
    for (a, vc) in [
        (Complex64::new(3.0, 0.0), Some(40.0)),
        (Complex64::new(0.5, 1.0), None),
    ] {
        for n in 1..=3 {
            let params = WitnessParams::new(l, a, Complex64::new(1.0, 0.0), n)?;
            let pair = translate_pair(&params)?;
            let check = check_translate_witness(&params, &pair, vc)?;
            println!(
                "  a = {a}, n = {n}: tr+ = {:.3}, tr- = {:.3}, chosen {:?}, bound {:?}, ok {:?}",
                pair.plus.trace, pair.minus.trace, pair.chosen, check.bound, check.satisfied
            );
        }
    }

    println!("perpendicular shear, gamma = [[1, 0], [il, 1]]");
    for l in [2.0 * PI + 0.1, 7.0, 10.0] {
        for n in [1, 2, 5] {
            let (m, modulus) = perpendicular_witness(l, n)?;
            let bound = perpendicular_trace_bound(l, n)?;
            let length = m.translation_length()?;
            println!(
                "  l = {l:.4}, n = {n}: |tr| = {modulus:.6} (bound {bound:.6}), length {length:.6} <= {:.6}",
                translation_length_upper(bound)
            );
        }
    }

    println!("general shear against the closed form");
    let omega = Complex64::new(-0.5, 1.2);
    for n in 1..=4u32 {
        let (m, trace) = product_witness(l, omega, n)?;
        let closed = product_witness_closed_form(l, omega, i64::from(n))?;
        println!(
            "  n = {n}: tr = {trace:.6}, class {}, matches closed form: {}",
            m.class(),
            m.approx_eq(&closed, 1e-9)
        );
    }
    Ok(())
}
