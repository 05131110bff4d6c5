//! Cusp lattices: reduction, co-area, slope lengths and what they say about
//! Dehn fillings.

use std::f64::consts::PI;

use geodesic_bounds::bounds::{filled_volume_lower_bound, slope_length_upper};
use geodesic_bounds::cusp::{
    filling_admissible, CuspLattice, FillingSlope, SIX_THRESHOLD, TWO_PI_THRESHOLD,
};
use num_complex::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lattice = CuspLattice::new(7.0, Complex64::new(1.0, 5.0))?;
    println!(
        "tau1 = {}, tau2 = {}, co-area = {}",
        lattice.tau1(),
        lattice.tau2(),
        lattice.coarea()
    );

    for z in [Complex64::new(20.3, 11.0), Complex64::new(-3.6, -2.4)] {
        println!("  {z} reduces to {:.6}", lattice.reduce(z));
    }

    println!("slope lengths:");
    for (p, q) in [(1, 0), (0, 1), (1, 1), (2, 1), (3, -1)] {
        let len = lattice.slope_length(p, q)?;
        let slope = [FillingSlope { lattice, p, q }];
        println!(
            "  ({p:>2}, {q:>2}): {len:>8.4}  > 2pi: {:<5}  > 6: {:<5}",
            filling_admissible(&slope, TWO_PI_THRESHOLD)?,
            filling_admissible(&slope, SIX_THRESHOLD)?
        );
    }

    // a translation longer than 2pi needs enough cusp area
    for vc in [10.0, PI * PI * 3f64.sqrt(), 40.0] {
        match slope_length_upper(vc) {
            Ok(l) => println!("co-area {vc}: translations up to {l:.4}"),
            Err(e) => println!("co-area {vc}: {e}"),
        }
    }

    let vol = 2.0298832128;
    for l_min in [7.0, 10.0, 50.0] {
        println!(
            "volume {vol} filled along slopes >= {l_min}: at least {:.6}",
            filled_volume_lower_bound(vol, l_min)?
        );
    }
    Ok(())
}
