//! From the filled volume to a length bound, both through the closed form
//! and through the crossing of the two trace bounds.

use geodesic_bounds::bounds::{
    bound_table, crossing_volume, crossing_volume_numeric, filling_trace_bound,
    geodesic_length_bound, volume_trace_bound, BoundQuery,
};
use geodesic_bounds::constants::constants;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let volume: f64 = match std::env::args().nth(1) {
        Some(s) => s.parse()?,
        None => 2.0299,
    };
    let k = constants();
    println!("v0 = {:.12}, C0 = {:.12}", k.v0, k.c0);

    let x = crossing_volume(volume)?;
    println!("filled volume V = {volume}: trace bounds cross at x* = {x:.9}");
    for n in [1, 2, 10] {
        let f = volume_trace_bound(x, n)?;
        let g = filling_trace_bound(x, n, volume)?;
        let numeric = crossing_volume_numeric(volume, n)?;
        let direct = geodesic_length_bound(&BoundQuery::new(n, volume)?);
        println!(
            "  n = {n:>2}: F = {f:.6}, G = {g:.6}, bisection x* = {numeric:.9}, log(F^2 + 4) = {:.9}, bound = {direct:.9}",
            (f * f + 4.0).ln()
        );
    }

    println!("{:>4} {:>14} {:>12}", "n", "trace bound", "length");
    for row in bound_table(8, volume)? {
        println!(
            "{:>4} {:>14.4} {:>12.6}",
            row.n, row.trace_bound, row.length_bound
        );
    }
    Ok(())
}
