//! Polytope norms, their isometric embedding into `l∞^f`, and the reduction
//! of collinear copies in an arbitrary norm to `l∞` copies.
//!
//! A centrally symmetric polytope with `2f` facets is the unit ball of
//! `‖x‖_N = max_i |⟨c_i, x⟩|`, one functional `c_i` per pair of opposite
//! facets. The map `x ↦ (⟨c_1, x⟩, …, ⟨c_f, x⟩)` is then an isometry into
//! `l∞^f`, so the snake coloring of `R^f` pulls back to `R^n`.

use alloc::vec::Vec;

use num_traits::Float;

use crate::baton::Baton;
use crate::coloring::{space_coloring, Color, ColorOracle, SnakeColoring};
use crate::exactnum::{RVector, Rational};
use crate::{Error, Result};

/// An exactly computable norm on `R^n`.
pub trait NormOracle {
    fn norm(&self, x: &RVector) -> Result<Rational>;
}

/// The Chebyshev norm itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct LinfNorm;

impl NormOracle for LinfNorm {
    fn norm(&self, x: &RVector) -> Result<Rational> {
        Ok(x.linf_norm())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeNorm {
    n: usize,
    facets: Vec<RVector>,
}

/// Rank of a list of vectors, by exact Gaussian elimination.
fn rank(rows: &[RVector]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        let head = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &head[col];
            for (x, h) in row.iter_mut().zip(&head).skip(col) {
                *x -= &(&factor * h);
            }
        }
        rank += 1;
    }
    rank
}

impl PolytopeNorm {
    /// Facet functionals `c_1..c_f`, which must span `R^n`.
    pub fn new(facets: Vec<RVector>) -> Result<Self> {
        let n = facets.first().ok_or(Error::DegenerateFacets)?.dim();
        for c in &facets {
            c.check_dim(n)?;
        }
        if facets.len() < n || rank(&facets) < n {
            return Err(Error::DegenerateFacets);
        }
        Ok(PolytopeNorm { n, facets })
    }

    /// `‖·‖_1` on `R^n`.
    pub fn l1(n: usize) -> Result<Self> {
        Self::new(l1_facets(n)?)
    }

    /// `‖·‖∞` on `R^n`, from the coordinate functionals.
    pub fn linf(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| RVector::basis(n, i)).collect::<Result<_>>()?)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `f`, the number of facet pairs.
    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> &[RVector] {
        &self.facets
    }

    pub fn norm_eval(&self, x: &RVector) -> Result<Rational> {
        x.check_dim(self.n)?;
        let mut best = Rational::zero();
        for c in &self.facets {
            best = best.max(c.dot(x)?.abs());
        }
        Ok(best)
    }

    /// `φ(x) = (⟨c_1, x⟩, …, ⟨c_f, x⟩)`.
    pub fn embed(&self, x: &RVector) -> Result<RVector> {
        x.check_dim(self.n)?;
        RVector::new(self.facets.iter().map(|c| c.dot(x)).collect::<Result<_>>()?)
    }

    /// The `x` with `φ(x) = y`, for `y` in the image of the embedding.
    pub fn pullback(&self, y: &RVector) -> Result<RVector> {
        y.check_dim(self.facets.len())?;
        // Augmented system [C | y], C has full column rank.
        let mut m: Vec<Vec<Rational>> = self
            .facets
            .iter()
            .zip(y.coords())
            .map(|(c, yi)| c.coords().iter().cloned().chain(core::iter::once(yi.clone())).collect())
            .collect();
        let n = self.n;
        for col in 0..n {
            let pivot = (col..m.len()).find(|&r| !m[r][col].is_zero()).ok_or(Error::DegenerateFacets)?;
            m.swap(col, pivot);
            let inv = m[col][col].recip().expect("pivot is nonzero");
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            let head = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, h) in row.iter_mut().zip(&head) {
                    *x -= &(&factor * h);
                }
            }
        }
        if m[n..].iter().any(|row| !row[n].is_zero()) {
            return Err(Error::OutsideImage);
        }
        RVector::new(m[..n].iter().map(|row| row[n].clone()).collect())
    }
}

impl NormOracle for PolytopeNorm {
    fn norm(&self, x: &RVector) -> Result<Rational> {
        self.norm_eval(x)
    }
}

/// Facet functionals of the cross-polytope: the `2^{n-1}` sign vectors with a
/// leading `+1`, later coordinates flipping fastest.
pub fn l1_facets(n: usize) -> Result<Vec<RVector>> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let count = 1usize << (n - 1);
    (0..count)
        .map(|mask| {
            let coords = (0..n)
                .map(|j| {
                    let flipped = j > 0 && (mask >> (n - 1 - j)) & 1 == 1;
                    if flipped {
                        -Rational::one()
                    } else {
                        Rational::one()
                    }
                })
                .collect();
            RVector::new(coords)
        })
        .collect()
}

/// The snake coloring of `R^f` induced on `R^n` through `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeColoring {
    norm: PolytopeNorm,
    snake: SnakeColoring,
}

pub fn polytope_coloring(norm: PolytopeNorm) -> PolytopeColoring {
    let snake = space_coloring(norm.facet_count()).expect("at least one facet");
    PolytopeColoring { norm, snake }
}

impl PolytopeColoring {
    pub fn norm(&self) -> &PolytopeNorm {
        &self.norm
    }

    /// The coloring of the embedding space `R^f`.
    pub fn snake(&self) -> &SnakeColoring {
        &self.snake
    }

    pub fn color(&self, x: &RVector) -> Result<Color> {
        self.snake.color(&self.norm.embed(x)?)
    }
}

impl ColorOracle for PolytopeColoring {
    fn dim(&self) -> usize {
        self.norm.dim()
    }

    fn color(&self, x: &RVector) -> Result<Color> {
        PolytopeColoring::color(self, x)
    }
}

/// Bounds `c·‖x‖_N <= ‖x‖∞ <= ‖x‖_N`, normalised so the upper constant is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceConstants {
    c_low: Rational,
}

impl EquivalenceConstants {
    pub fn new(c_low: Rational) -> Result<Self> {
        if !c_low.is_positive() || c_low > Rational::one() {
            return Err(Error::NonPositiveConstant);
        }
        Ok(EquivalenceConstants { c_low })
    }

    pub fn c_low(&self) -> &Rational {
        &self.c_low
    }

    /// Checks the sandwich on the given sample; returns the first violation.
    pub fn first_violation<'a>(&self, norm: &impl NormOracle, sample: &'a [RVector]) -> Result<Option<&'a RVector>> {
        for x in sample {
            let n = norm.norm(x)?;
            let inf = x.linf_norm();
            if &self.c_low * &n > inf || inf > n {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }
}

/// `5^d / c`, the baton length beyond which collinear copies in a norm with
/// constant `c` cannot be monochromatic.
pub fn delta_threshold(consts: &EquivalenceConstants, d: usize) -> Result<Rational> {
    let c = consts.c_low();
    if !c.is_positive() {
        return Err(Error::NonPositiveConstant);
    }
    Ok(Rational::from(5).pow(d as u32) / c.clone())
}

/// Checks `points` lie on one line `x^0 + s·v` and returns the `s` values
/// relative to `v = x^j - x^0` for the first `x^j ≠ x^0`.
fn line_parameters(points: &[RVector]) -> Result<Vec<Rational>> {
    let origin = points.first().ok_or(Error::ZeroLengthSegment { index: 0 })?;
    for p in points {
        p.check_dim(origin.dim())?;
    }
    let dir = points
        .iter()
        .map(|p| p.try_sub(origin))
        .find(|d| d.as_ref().map_or(true, |d| !d.linf_norm().is_zero()))
        .ok_or(Error::ZeroLengthSegment { index: 0 })??;
    let pivot = dir.coords().iter().position(|c| !c.is_zero()).expect("nonzero direction");
    points
        .iter()
        .map(|p| {
            let delta = p.try_sub(origin)?;
            let s = &delta[pivot] / &dir[pivot];
            if delta == dir.scaled(&s) {
                Ok(s)
            } else {
                Err(Error::NotCollinear)
            }
        })
        .collect()
}

/// For collinear points, the ratio `μ = ‖x^r - x^l‖∞ / ‖x^r - x^l‖_N` (the
/// same for every pair) and the baton `B(μλ_1, …, μλ_k)` of consecutive
/// `N`-distances scaled by `μ`.
pub fn collinear_to_linf(points: &[RVector], norm: &impl NormOracle) -> Result<(Rational, Baton)> {
    if points.len() < 2 {
        return Err(Error::PointCountMismatch { expected: 2, found: points.len() });
    }
    line_parameters(points)?;
    let mut steps = Vec::with_capacity(points.len() - 1);
    for (index, pair) in points.windows(2).enumerate() {
        let step = norm.norm(&pair[1].try_sub(&pair[0])?)?;
        if step.is_zero() {
            return Err(Error::ZeroLengthSegment { index });
        }
        steps.push(step);
    }
    let span = points.last().expect("two points").try_sub(&points[0])?;
    let span_n = norm.norm(&span)?;
    if span_n.is_zero() {
        return Err(Error::ZeroLengthSegment { index: 0 });
    }
    let mu = span.linf_norm() / span_n;
    let baton = Baton::new(steps)?.scaled(&mu)?;
    Ok((mu, baton))
}

/// A norm that can only be evaluated approximately, such as `l2`.
pub trait ApproxNorm {
    fn norm_approx(&self, x: &[f64]) -> f64;
}

/// `‖x‖_p` for finite `p >= 1`.
#[derive(Clone, Copy, Debug)]
pub struct LpNorm(pub f64);

impl ApproxNorm for LpNorm {
    fn norm_approx(&self, x: &[f64]) -> f64 {
        let p = self.0;
        let sum: f64 = x.iter().map(|v| Float::powf(Float::abs(*v), p)).sum();
        Float::powf(sum, 1.0 / p)
    }
}

/// Approximate version of [`collinear_to_linf`] for norms without exact
/// values. Fails with [`Error::NotCollinear`] when the ratio varies by more
/// than `tol` across pairs.
pub fn collinear_to_linf_approx(points: &[RVector], norm: &impl ApproxNorm, tol: f64) -> Result<(f64, Vec<f64>)> {
    line_parameters(points)?;
    let as_f64 = |v: &RVector| v.coords().iter().map(Rational::to_f64).collect::<Vec<f64>>();
    let mut mu: Option<f64> = None;
    for l in 0..points.len() {
        for r in l + 1..points.len() {
            let d = points[r].try_sub(&points[l])?;
            let dn = norm.norm_approx(&as_f64(&d));
            if dn == 0.0 {
                return Err(Error::ZeroLengthSegment { index: l });
            }
            let ratio = d.linf_norm().to_f64() / dn;
            match mu {
                None => mu = Some(ratio),
                Some(m) if Float::abs(m - ratio) > tol => return Err(Error::NotCollinear),
                Some(_) => {}
            }
        }
    }
    let mu = mu.ok_or(Error::ZeroLengthSegment { index: 0 })?;
    let steps = points
        .windows(2)
        .map(|pair| Ok(mu * norm.norm_approx(&as_f64(&pair[1].try_sub(&pair[0])?))))
        .collect::<Result<Vec<f64>>>()?;
    Ok((mu, steps))
}
