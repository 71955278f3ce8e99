//! Batons and their `l∞`-isometric copies.
//!
//! A baton `B(λ_1, …, λ_k)` is the point set `{0, σ_1, …, σ_k}` of the line
//! with `σ_s = λ_1 + … + λ_s`. An ordered sequence of points of `R^n` is an
//! `l∞`-isometric copy of it exactly when some coordinate walks the baton
//! (forwards or backwards) while no other coordinate moves further than the
//! current step. [`copy_check`] tests that criterion and [`copy_build`] is its
//! constructive inverse.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::exactnum::{linf_dist, RVector, Rational};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Baton {
    steps: Vec<Rational>,
    prefix: Vec<Rational>,
}

impl Baton {
    pub fn new(steps: Vec<Rational>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::EmptyBaton);
        }
        if let Some(index) = steps.iter().position(|s| !s.is_positive()) {
            return Err(Error::NonPositiveStep { index });
        }
        let mut prefix = Vec::with_capacity(steps.len() + 1);
        prefix.push(Rational::zero());
        for step in &steps {
            let next = prefix.last().expect("seeded") + step;
            prefix.push(next);
        }
        Ok(Baton { steps, prefix })
    }

    /// The unit arithmetic progression `B_k` with `k` unit steps.
    pub fn unit(k: usize) -> Result<Self> {
        Self::new(alloc::vec![Rational::one(); k])
    }

    pub fn steps(&self) -> &[Rational] {
        &self.steps
    }

    /// `k`, the number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Prefix sums `σ_0 = 0, σ_1, …, σ_k`.
    pub fn prefix(&self) -> &[Rational] {
        &self.prefix
    }

    /// The baton's points on the line, identical to [`Baton::prefix`].
    pub fn points(&self) -> &[Rational] {
        &self.prefix
    }

    /// Diameter `σ_k`.
    pub fn total(&self) -> &Rational {
        self.prefix.last().expect("nonempty")
    }

    pub fn max_step(&self) -> &Rational {
        self.steps.iter().max().expect("nonempty")
    }

    /// `B(μλ_1, …, μλ_k)`.
    pub fn scaled(&self, mu: &Rational) -> Result<Self> {
        if !mu.is_positive() {
            return Err(Error::NonPositiveScale);
        }
        Self::new(self.steps.iter().map(|s| s * mu).collect())
    }

    pub fn reversed(&self) -> Self {
        let mut steps = self.steps.clone();
        steps.reverse();
        Self::new(steps).expect("steps stay positive")
    }
}

impl fmt::Display for Baton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Baton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({self})")
    }
}

impl FromStr for Baton {
    type Err = Error;

    /// Comma-separated steps (`1,1/2,1`) or the shorthand `Bk` for `k` unit steps.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(k) = text.strip_prefix(['B', 'b']) {
            let k: usize = k
                .parse()
                .map_err(|_| Error::MalformedRational(alloc::string::String::from(text)))?;
            return Self::unit(k);
        }
        let steps = text.split(',').map(Rational::from_str).collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

/// Outcome of [`copy_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopyVerdict {
    pub is_copy: bool,
    /// Zero-based coordinates whose projection walks the baton.
    pub directions: Vec<usize>,
    /// For each direction, whether the projection is a reflection `x - B`.
    pub reflected: BTreeMap<usize, bool>,
}

impl CopyVerdict {
    /// First direction, if any.
    pub fn direction(&self) -> Option<(usize, bool)> {
        self.directions.first().map(|d| (*d, self.reflected[d]))
    }
}

fn common_dim(points: &[RVector]) -> Result<usize> {
    let dim = points.first().ok_or(Error::PointCountMismatch { expected: 1, found: 0 })?.dim();
    for p in points {
        p.check_dim(dim)?;
    }
    Ok(dim)
}

/// Decides whether `points` (in this order) is an `l∞`-isometric copy of `b`
/// and reports every direction of the copy.
pub fn copy_check(points: &[RVector], b: &Baton) -> Result<CopyVerdict> {
    let expected = b.len() + 1;
    if points.len() != expected {
        return Err(Error::PointCountMismatch { expected, found: points.len() });
    }
    let dim = common_dim(points)?;

    // Every coordinate may move at most λ_s on step s.
    let steps_bounded = points.windows(2).zip(b.steps()).all(|(pair, step)| {
        pair[0].coords().iter().zip(pair[1].coords()).all(|(u, v)| &(v - u).abs() <= step)
    });

    let mut verdict = CopyVerdict { is_copy: false, directions: Vec::new(), reflected: BTreeMap::new() };
    if !steps_bounded {
        return Ok(verdict);
    }
    for i in 0..dim {
        let origin = &points[0][i];
        let forward = points.iter().zip(b.prefix()).all(|(p, sigma)| &(&p[i] - origin) == sigma);
        let backward = !forward
            && points.iter().zip(b.prefix()).all(|(p, sigma)| (origin - &p[i]) == *sigma);
        if forward || backward {
            verdict.directions.push(i);
            verdict.reflected.insert(i, backward);
        }
    }
    verdict.is_copy = !verdict.directions.is_empty();
    Ok(verdict)
}

/// Set-level variant: tries the given order and its reverse.
pub fn copy_check_unordered(points: &[RVector], b: &Baton) -> Result<Option<CopyVerdict>> {
    let verdict = copy_check(points, b)?;
    if verdict.is_copy {
        return Ok(Some(verdict));
    }
    let reversed: Vec<RVector> = points.iter().rev().cloned().collect();
    let verdict = copy_check(&reversed, b)?;
    Ok(verdict.is_copy.then_some(verdict))
}

/// Builds the copy of `b` starting at `anchor` that walks coordinate
/// `direction` (zero-based) forwards, or backwards when `reflected`.
///
/// `perturbations[s][j]` is the move on step `s + 1` of the `j`-th coordinate
/// other than `direction`, in increasing coordinate order; `|move| <= λ_s`.
pub fn copy_build(
    b: &Baton,
    anchor: &RVector,
    direction: usize,
    reflected: bool,
    perturbations: &[Vec<Rational>],
) -> Result<Vec<RVector>> {
    let dim = anchor.dim();
    if direction >= dim {
        return Err(Error::DirectionOutOfRange { direction, dim });
    }
    let shape = Error::PerturbationShape { rows: b.len(), cols: dim - 1 };
    if perturbations.len() != b.len() || perturbations.iter().any(|row| row.len() != dim - 1) {
        return Err(shape);
    }
    let mut points = Vec::with_capacity(b.len() + 1);
    let mut current = anchor.clone().into_coords();
    points.push(anchor.clone());
    for (s, (step, row)) in b.steps().iter().zip(perturbations).enumerate() {
        let mut moves = row.iter();
        for (coord, value) in current.iter_mut().enumerate() {
            if coord == direction {
                if reflected {
                    *value -= step;
                } else {
                    *value += step;
                }
            } else {
                let delta = moves.next().expect("row length checked");
                if &delta.abs() > step {
                    return Err(Error::PerturbationOutOfBounds { step: s, coord });
                }
                *value += delta;
            }
        }
        points.push(RVector::new(current.clone())?);
    }
    Ok(points)
}

/// Independent check: the full pairwise `l∞` distance matrix of `points`
/// equals `|σ_r - σ_l|` for every pair.
pub fn distance_matrix_matches(points: &[RVector], b: &Baton) -> Result<bool> {
    if points.len() != b.len() + 1 {
        return Ok(false);
    }
    common_dim(points)?;
    let sigma = b.prefix();
    for l in 0..points.len() {
        for r in l + 1..points.len() {
            if linf_dist(&points[l], &points[r])? != &sigma[r] - &sigma[l] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
