//! The snake two-coloring of `R^d`.
//!
//! `R^d` is the disjoint union of the translates `T + z·1_d`, `z ∈ Z`, of the
//! thickened snake `T = S^{d-1} + [0, 1)·1_d`. Points in even translates are
//! red, points in odd translates blue.

use crate::exactnum::{Integer, RVector, Rational};
use crate::snake::{self, SnakeDecomposition, SnakeParams};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn from_layer(layer: &Integer) -> Self {
        if layer.bit(0) {
            Color::Blue
        } else {
            Color::Red
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }

    pub fn other(self) -> Self {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// A total two-coloring of `R^d`.
///
/// Implementations must be pure: the same point always gets the same color,
/// and queries may come from several threads at once.
pub trait ColorOracle: Sync {
    fn dim(&self) -> usize;

    fn color(&self, x: &RVector) -> Result<Color>;

    /// Heights of the last coordinate where the coloring changes shape,
    /// as `(period, offsets)`: boundaries sit at `m·period + offset`.
    /// Used by proof-informed probes; `None` when the oracle has no such
    /// structure.
    fn boundary_heights(&self) -> Option<(Rational, alloc::vec::Vec<Rational>)> {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeColoring {
    params: SnakeParams,
}

/// The coloring of `R^d` backed by `theorem_params(d - 1)`.
pub fn space_coloring(d: usize) -> Result<SnakeColoring> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    Ok(SnakeColoring { params: snake::theorem_params(d - 1) })
}

impl SnakeColoring {
    /// Coloring of `R^{n+1}` from a custom snake `S^n`.
    pub fn with_params(params: SnakeParams) -> Self {
        SnakeColoring { params }
    }

    pub fn params(&self) -> &SnakeParams {
        &self.params
    }

    pub fn dim(&self) -> usize {
        self.params.ambient_dim()
    }

    pub fn decompose(&self, x: &RVector) -> Result<SnakeDecomposition> {
        snake::shift(&self.params, x)
    }

    /// The unique `z` with `x - z·1_d` in the thickened snake.
    pub fn layer_index(&self, x: &RVector) -> Result<Integer> {
        Ok(self.decompose(x)?.layer())
    }

    pub fn color(&self, x: &RVector) -> Result<Color> {
        Ok(Color::from_layer(&self.layer_index(x)?))
    }
}

impl ColorOracle for SnakeColoring {
    fn dim(&self) -> usize {
        SnakeColoring::dim(self)
    }

    fn color(&self, x: &RVector) -> Result<Color> {
        SnakeColoring::color(self, x)
    }

    fn boundary_heights(&self) -> Option<(Rational, alloc::vec::Vec<Rational>)> {
        let a = self.params.a_last()?.clone();
        Some((a, alloc::vec![Rational::zero(), Rational::one(), -Rational::one()]))
    }
}
