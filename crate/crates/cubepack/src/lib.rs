//! Dense packings of equal spheres in a cube.
//!
//! The toolkit generates cubic close-packed (ccp) baselines, constructs
//! certified improved packings of `g(p) − 2` spheres by translating lattice
//! shells, runs a high-precision stochastic local search on ccp arrangements
//! with removed spheres, and certifies every claim in exact rational
//! arithmetic.
//!
//! Sphere radius is normalized to 1, so centers must stay at pairwise
//! Euclidean distance ≥ 2. Internally packings are stored in lattice units
//! (physical coordinates divided by √2): ccp centers become integer triples
//! with even coordinate sum, the feasibility threshold becomes squared
//! distance ≥ 2, and the side of the enclosing cube of a ccp of order `p`
//! becomes exactly `p − 1`. All stored coordinates are dyadic rationals,
//! which is what makes exact certification of tangent configurations
//! possible.

pub mod certifier;
pub mod construct;
pub mod io;
pub mod lattice;
pub mod numerics;
pub mod optimizer;

pub use certifier::{certify, certify_packing, Certificate, Verdict};
pub use construct::{build_p2, build_pp, lower_bound_improvement, tau_recurrence, TauTriple};
pub use lattice::{apply_pattern, g, gen_ccp, layer, split_layer, LatticePoint, Packing, Point};
pub use numerics::{quartic_root_a, BigReal, ExactRational, Rounding};
pub use optimizer::{feasible_segments, move_sphere, run_search, SearchConfig, SegmentSet};
