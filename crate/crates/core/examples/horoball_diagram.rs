//! Print a horoball diagram as CSV: images of the ball at infinity under
//! short words in a parabolic translation and a full-sized element.
//!
//! ```text
//! cargo run --example horoball_diagram -- 7 3 0 4 > balls.csv
//! ```

use std::io;

use geodesic_bounds::cusp::{horoball_orbit, write_horoball_csv, Horoball};
use geodesic_bounds::witness::{full_sized_gamma, parabolic_translation};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let (l, a_re, a_im, depth) = match args.as_slice() {
        [] => (7.0, 3.0, 0.0, 3.0),
        [l, a_re, a_im, depth] => (*l, *a_re, *a_im, *depth),
        _ => return Err("usage: horoball_diagram [l a_re a_im depth]".into()),
    };

    let beta = parabolic_translation(l)?;
    let gamma = full_sized_gamma(Complex64::new(a_re, a_im), Complex64::new(1.0, 0.0))?;
    let balls = horoball_orbit(&[beta, gamma], depth as usize);

    let full = balls.iter().filter(|b| b.is_full_sized()).count();
    let tangent = balls
        .iter()
        .filter(|b| matches!(b, Horoball::Finite { .. }) && b.is_tangent_to(&Horoball::standard()))
        .count();
    eprintln!(
        "{} balls, {full} full-sized, {tangent} tangent to H_inf",
        balls.len()
    );

    write_horoball_csv(io::stdout().lock(), &balls)?;
    Ok(())
}
