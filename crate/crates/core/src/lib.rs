//! Exact combinatorics of the shifted zonotope `Δ^{m,n}_τ`.
//!
//! `Δ^{m,n}_τ ⊂ Rⁿ` is the Minkowski sum of the segments `[0, e_i]` and
//! `[0, (m/2)(e_i − e_j)]`, translated by `τ·(1, …, 1)`. For admissible
//! `τ` its integer points are in `S_n`-equivariant bijection with the
//! `(m,n)`-parking functions, and its regular `S_n`-orbits are counted by
//! the Fuss-Catalan number `A_n(m,1)`.
//!
//! The crate is organized as:
//!
//! * [`exact`]: rationals and the symbolic infinitesimal `a + b·ε`;
//! * [`zonotope`]: support bounds, membership, admissibility, enumeration;
//! * [`orbits`]: set partitions, stabilizers, regular orbits;
//! * [`parking`]: `Zⁿ/L`, parking functions, Dyck paths, the bijection;
//! * [`treecount`]: the spanning-tree and Möbius-inversion count;
//! * [`tilting`]: dominant weight tables and their color decomposition;
//! * [`verify`]: a bounded sweep over all of the above invariants.
//!
//! ```
//! use zonotope_parking::{fuss_catalan, regular_orbit_reps, ZonotopeSpec};
//!
//! let spec = ZonotopeSpec::new(2, 3, "11/6".parse()?)?;
//! let points = spec.lattice_points();
//! assert_eq!(points.len(), 49); // (mn+1)^(n−1)
//! let reps = regular_orbit_reps(&points)?;
//! assert_eq!(reps.len() as u64, 5);
//! assert_eq!(fuss_catalan(2, 3), 5.into());
//! # Ok::<(), zonotope_parking::Error>(())
//! ```

pub mod error;
pub mod exact;
pub mod orbits;
pub mod parking;
mod point;
pub mod tilting;
pub mod treecount;
pub mod verify;
pub mod zonotope;

pub use error::{Error, Result};
pub use exact::{EpsRational, Rational};
pub use orbits::{is_regular, regular_orbit_reps, stabilizer_partition, SetPartition};
pub use parking::{
    canonical_class, enumerate_dyck_paths, enumerate_parking_functions, fuss_catalan,
    is_parking_function, orbit_to_dyck, DyckPath, ParkingBijection, ParkingFunction, QuotientClass,
};
pub use point::LatticePoint;
pub use tilting::{
    color_blocks, rho_hat, t_grid, tau_for_t, tilting_weights, TauConvention, TiltingTable,
};
pub use treecount::{
    build_graph, contract, mobius, regular_orbit_count_mobius, spanning_tree_count, MultiGraph,
};
pub use zonotope::{enumerate_lattice_points, is_admissible, Membership, ZonotopeSpec};

// The guide's code blocks are compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/zonotope.md")]
    mod zonotope {}
    #[doc = include_str!("../../../book/src/parking.md")]
    mod parking {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/tilting.md")]
    mod tilting {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
