//! Classify a few PSL(2,C) elements and check that they act isometrically.

use geodesic_bounds::moebius::{hyperbolic_distance, BoundaryPoint, H3Point, MoebiusMap};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let maps = [
        ("translation", MoebiusMap::from_real(1.0, 7.0, 0.0, 1.0)?),
        (
            "rotation",
            MoebiusMap::new(c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0))?,
        ),
        ("hyperbolic", MoebiusMap::from_real(2.0, 1.0, 1.0, 1.0)?),
        (
            "loxodromic",
            MoebiusMap::new(c(1.0, 49.0), c(7.0, 0.0), c(0.0, 7.0), c(1.0, 0.0))?,
        ),
    ];

    let p = H3Point::new(c(0.3, -0.2), 1.5)?;
    let q = H3Point::new(c(-1.0, 2.0), 0.4)?;
    println!("d(p, q) = {:.12}", hyperbolic_distance(&p, &q));

    for (name, m) in &maps {
        let length = m
            .translation_length()
            .map_or_else(|_| "-".to_string(), |l| format!("{l:.6}"));
        let moved = hyperbolic_distance(&m.act_on_h3(&p), &m.act_on_h3(&q));
        println!(
            "{name:>12}: tr = {:.4}, class = {}, length = {length}",
            m.trace(),
            m.class()
        );
        println!("{:>12}  d(gp, gq) = {moved:.12}", "");
    }

    // the boundary action is the limit of the interior action as t -> 0
    let m = maps[3].1;
    let z = c(0.25, 0.5);
    if let BoundaryPoint::Finite(w) = m.act_on_boundary(BoundaryPoint::Finite(z)) {
        let near = m.act_on_h3(&H3Point::new(z, 1e-8)?);
        println!(
            "g({z}) = {w:.6}; g({z}, 1e-8) = ({:.6}, {:.2e})",
            near.z(),
            near.t()
        );
    }

    let (center, radius) = m.isometric_circle()?;
    println!("isometric circle: center {center:.6}, radius {radius:.6}");
    Ok(())
}
