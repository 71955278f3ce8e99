//! Exact snake two-colorings of the Chebyshev space `R^d`.
//!
//! The crate builds the piecewise-linear "snake" hypersurfaces of `R^{n+1}`,
//! decomposes points against them exactly, and colors `R^d` by the parity of
//! the translate of the thickened snake that contains a point. Around that
//! core sit the classification of `l∞`-isometric copies of batons, polytope
//! norms with their isometric embedding into `l∞^f`, and a deterministic
//! search harness that hunts for monochromatic baton copies.
//!
//! Every geometric decision is taken on exact rationals; nothing in the crate
//! compares floating-point values.
//!
//! The crate is `no_std` (with `alloc`) unless the default `std` feature is
//! enabled, which adds multi-threaded search and wall-clock timing.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod baton;
pub mod coloring;
mod error;
pub mod exactnum;
pub mod hunt;
pub mod norms;
pub mod sample;
pub mod snake;

pub use baton::{copy_build, copy_check, Baton, CopyVerdict};
pub use coloring::{space_coloring, Color, ColorOracle, SnakeColoring};
pub use error::{Error, Result};
pub use exactnum::{linf_dist, Integer, RVector, Rational};
pub use norms::{EquivalenceConstants, PolytopeColoring, PolytopeNorm};
pub use snake::{theorem_params, SnakeDecomposition, SnakeParams};
