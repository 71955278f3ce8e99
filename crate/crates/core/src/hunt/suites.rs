//! Packaged property suites. Each suite draws `samples` independent random
//! cases, one generator per case seeded by `mix_seed(seed, index)`, so any
//! failure can be replayed from its `sample_seed` alone.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::Rng;

use crate::baton::{copy_build, copy_check, distance_matrix_matches};
use crate::coloring::SnakeColoring;
use crate::exactnum::{linf_dist, RVector, Rational};
use crate::sample::{self, SampleRng};
use crate::snake::{
    contains_snake, contains_thick, contains_thick_width, contour_contains, contour_description,
    contour_formula_contains, scale, snake_point, theorem_params, ParamsOrigin, SnakeParams,
};
use crate::{Error, Result};

const SUITES: [&str; 7] =
    ["scaling", "distance", "injectivity", "contours", "cross-translate", "self-similarity", "lemma1-oracle"];

pub fn suite_ids() -> &'static [&'static str] {
    &SUITES
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteFailure {
    pub index: u64,
    pub sample_seed: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub samples: u64,
    pub seed: u64,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs suite `name` against `theorem_params(2)`.
pub fn verify_suite(name: &str, samples: u64, seed: u64) -> Result<SuiteReport> {
    verify_suite_with(name, &theorem_params(2), samples, seed)
}

/// Runs suite `name` against explicit snake parameters.
///
/// `contours` requires `a_n > 1`; `self-similarity` requires theorem
/// parameters with `n >= 2`; `lemma1-oracle` ignores `p`.
pub fn verify_suite_with(name: &str, p: &SnakeParams, samples: u64, seed: u64) -> Result<SuiteReport> {
    let case: fn(&SnakeParams, &mut SampleRng, u64) -> Result<Option<String>> = match name {
        "scaling" => scaling_case,
        "distance" => distance_case,
        "injectivity" => injectivity_case,
        "contours" => {
            contour_description(p, &Rational::zero())?;
            contours_case
        }
        "cross-translate" => cross_translate_case,
        "self-similarity" => {
            if !matches!(p.origin(), ParamsOrigin::Theorem(n) if n >= 2) {
                return Err(Error::InvalidConfig("self-similarity needs theorem parameters with n >= 2"));
            }
            self_similarity_case
        }
        "lemma1-oracle" => copy_oracle_case,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    let mut failures = Vec::new();
    for index in 0..samples {
        let sample_seed = sample::mix_seed(seed, index);
        let mut rng = sample::rng(sample_seed, 0);
        let outcome = case(p, &mut rng, index).unwrap_or_else(|e| Some(format!("error: {e}")));
        if let Some(detail) = outcome {
            failures.push(SuiteFailure { index, sample_seed, detail });
        }
    }
    Ok(SuiteReport { suite: name.to_string(), samples, seed, failures })
}

fn cube_radius(p: &SnakeParams) -> Rational {
    Rational::from(2) * Rational::integer(5).pow(p.ambient_dim() as u32)
}

fn random_snake_point(p: &SnakeParams, rng: &mut SampleRng) -> Result<RVector> {
    snake_point(p, &sample::snake_levels(rng, p, 3, 32))
}

/// Half the time a point of `S^n`, otherwise a point of the sampling cube.
fn mixed_point(p: &SnakeParams, rng: &mut SampleRng) -> Result<RVector> {
    if rng.gen() {
        random_snake_point(p, rng)
    } else {
        Ok(sample::point_in_cube(rng, p.ambient_dim(), &cube_radius(p), 64))
    }
}

fn scaling_case(p: &SnakeParams, rng: &mut SampleRng, _: u64) -> Result<Option<String>> {
    let factors = [Rational::ratio(1, 5), Rational::from(2), Rational::from(5), Rational::ratio(7, 3)];
    let mu = &factors[rng.gen_range(0..factors.len())];
    let x = mixed_point(p, rng)?;
    let lhs = contains_snake(p, &x)?;
    let rhs = contains_snake(&scale(p, mu)?, &x.scaled(mu))?;
    Ok((lhs != rhs).then(|| format!("x = ({x}), mu = {mu}: {lhs} vs {rhs}")))
}

fn distance_case(p: &SnakeParams, rng: &mut SampleRng, index: u64) -> Result<Option<String>> {
    let x = random_snake_point(p, rng)?;
    let y = if index.is_multiple_of(4) { x.clone() } else { random_snake_point(p, rng)? };
    let t = sample::rational_open_closed(rng, &Rational::zero(), &Rational::from(10), 64);
    let dist = linf_dist(&x.shifted_diag(&t), &y)?;
    let ok = if x == y { dist == t } else { dist >= t };
    Ok((!ok).then(|| format!("x = ({x}), y = ({y}), t = {t}: distance {dist}")))
}

fn injectivity_case(p: &SnakeParams, rng: &mut SampleRng, _: u64) -> Result<Option<String>> {
    let x = sample::point_in_cube(rng, p.ambient_dim(), &cube_radius(p), 64);
    let dec = crate::snake::shift(p, &x)?;
    let back = dec.recompose(p)?;
    if back != x {
        return Ok(Some(format!("x = ({x}) recomposes to ({back})")));
    }
    let base = x.shifted_diag(&-Rational::integer(dec.layer()));
    if !contains_thick(p, &base)? {
        return Ok(Some(format!("x = ({x}) minus its layer leaves the thickened snake")));
    }
    Ok(None)
}

/// Heights and slices near the thickened snake: a random thickened point,
/// half the time moved off it by a small diagonal or vertical offset.
fn contours_case(p: &SnakeParams, rng: &mut SampleRng, _: u64) -> Result<Option<String>> {
    let u = sample::rational_half_open(rng, &Rational::zero(), &Rational::one(), 64);
    let mut x = random_snake_point(p, rng)?.shifted_diag(&u).into_coords();
    if rng.gen() {
        let jitter = sample::rational_in(rng, &Rational::from(-2), &Rational::from(2), 16);
        let idx = if rng.gen() { x.len() - 1 } else { rng.gen_range(0..x.len()) };
        x[idx] += jitter;
    }
    let h = x.pop().expect("ambient dimension >= 2");
    let y = RVector::new(x)?;
    let desc = contour_description(p, &h)?;
    let direct = contour_contains(p, &h, &y)?;
    let formula = contour_formula_contains(p, &desc, &y)?;
    Ok((direct != formula).then(|| format!("h = {h}, y = ({y}): direct {direct}, formula {formula}")))
}

/// Moves `x` by one along the diagonal when its layer is odd.
fn to_even_layer(c: &SnakeColoring, x: RVector) -> Result<(RVector, Rational)> {
    let layer = c.layer_index(&x)?;
    if layer.bit(0) {
        Ok((x.shifted_diag(&Rational::one()), Rational::integer(layer + 1)))
    } else {
        Ok((x, Rational::integer(layer)))
    }
}

fn cross_translate_case(p: &SnakeParams, rng: &mut SampleRng, _: u64) -> Result<Option<String>> {
    let c = SnakeColoring::with_params(p.clone());
    let d = p.ambient_dim();
    let x = sample::point_in_cube(rng, d, &cube_radius(p), 64);
    let offset = sample::point_in_cube(rng, d, &Rational::from(6), 64);
    let (x, lx) = to_even_layer(&c, x)?;
    let (mut y, mut ly) = to_even_layer(&c, x.try_add(&offset)?)?;
    if ly == lx {
        y = y.shifted_diag(&Rational::from(2));
        ly = &ly + &Rational::from(2);
    }
    let gap = (&lx - &ly).abs() - Rational::one();
    let dist = linf_dist(&x, &y)?;
    Ok((dist <= gap).then(|| format!("x = ({x}) layer {lx}, y = ({y}) layer {ly}: distance {dist}")))
}

/// `snake^{n-1}(a_1(n), .., b_{n-1}(n)) + [0, b_n + 1)·1_n` against
/// `5·Snake^{n-1}` with level-`(n-1)` theorem parameters.
fn self_similarity_case(p: &SnakeParams, rng: &mut SampleRng, _: u64) -> Result<Option<String>> {
    let n = p.n();
    let lower = p.truncated(n - 1);
    let width = p.b_last().expect("n >= 2") + &Rational::one();
    let y = if rng.gen() {
        let u = sample::rational_in(rng, &Rational::from(-1), &(&width + &Rational::one()), 64);
        random_snake_point(&lower, rng)?.shifted_diag(&u)
    } else {
        sample::point_in_cube(rng, n, &cube_radius(&lower), 64)
    };
    let lhs = contains_thick_width(&lower, &y, &width)?;
    let rhs = contains_thick(&theorem_params(n - 1), &y.scaled(&Rational::ratio(1, 5)))?;
    Ok((lhs != rhs).then(|| format!("y = ({y}): {lhs} vs {rhs}")))
}

/// A random baton configuration with `k <= 4` in dimension `<= 3`: a true
/// copy, or (half the time) a copy nudged into a near-copy.
fn copy_oracle_case(_: &SnakeParams, rng: &mut SampleRng, _: u64) -> Result<Option<String>> {
    let k = rng.gen_range(1..=4);
    let dim = rng.gen_range(1..=3);
    let b = sample::baton(rng, k, &Rational::from(3), 8);
    let anchor = sample::point_in_cube(rng, dim, &Rational::from(5), 8);
    let pert = sample::perturbations(rng, &b, dim - 1, 3, 8);
    let mut points = copy_build(&b, &anchor, rng.gen_range(0..dim), rng.gen(), &pert)?;
    if rng.gen() {
        let which = rng.gen_range(0..points.len());
        let mut coords = points[which].clone().into_coords();
        let axis = rng.gen_range(0..dim);
        let nudge = match rng.gen_range(0..3) {
            0 => Rational::ratio(1, 64),
            1 => Rational::ratio(-1, 8),
            _ => b.steps()[rng.gen_range(0..k)].clone(),
        };
        coords[axis] += nudge;
        points[which] = RVector::new(coords)?;
    }
    let fast = copy_check(&points, &b)?.is_copy;
    let slow = distance_matrix_matches(&points, &b)?;
    Ok((fast != slow).then(|| format!("baton {b}, points {points:?}: check {fast}, matrix {slow}")))
}
