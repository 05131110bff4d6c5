//! Upper bounds on the lengths of the shortest closed geodesics in
//! hyperbolic link complements, and the machinery behind them.
//!
//! * [`moebius`]: PSL(2,C) elements, their classification and their action
//!   on the boundary and on upper half-space.
//! * [`cusp`]: horoballs, cusp lattices and slope lengths.
//! * [`witness`]: explicit loxodromic elements built from a parabolic
//!   translation and a full-sized horoball.
//! * [`bounds`]: trace and length bounds in terms of cusp area and volume.
//! * [`spectrum`]: auditing externally computed length spectra.
//! * [`cli`]: the `geodesic-bounds` command-line front end.
//!
//! ```
//! use geodesic_bounds::bounds::{geodesic_length_bound, BoundQuery};
//!
//! let q = BoundQuery::new(1, 0.0).unwrap();
//! assert!((geodesic_length_bound(&q) - 7.356628).abs() < 1e-6);
//! ```

pub mod bounds;
pub mod cli;
pub mod constants;
pub mod cusp;
pub mod moebius;
pub mod roots;
pub mod spectrum;
pub mod tolerance;
pub mod witness;

pub use bounds::{geodesic_length_bound, BoundError, BoundQuery};
pub use constants::{constants, Constants};
pub use cusp::{CuspLattice, Horoball};
pub use moebius::{IsometryClass, MoebiusMap};
pub use spectrum::{audit, load_spectrum, SpectrumRecord};
pub use witness::WitnessParams;
