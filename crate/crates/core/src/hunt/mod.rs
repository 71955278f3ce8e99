//! Adversarial search for monochromatic baton copies.
//!
//! Candidates are produced exclusively by [`copy_build`], so every candidate
//! is an `l∞`-isometric copy of the baton by construction. The search asks a
//! [`ColorOracle`] for the color of each point and stops at the first
//! monochromatic candidate, which is re-verified from scratch before it is
//! reported. A negative report means "not found within budget".
//!
//! Runs are reproducible: the budget is split into per-worker streams
//! derived from `(seed, worker)`, and worker results merge in worker order.

mod suites;

use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use crate::baton::{copy_build, copy_check, distance_matrix_matches, Baton};
use crate::coloring::{Color, ColorOracle};
use crate::exactnum::{RVector, Rational};
use crate::norms::{NormOracle, PolytopeColoring};
use crate::sample;
use crate::{Error, Result};

pub use suites::{suite_ids, verify_suite, verify_suite_with, SuiteFailure, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Uniform anchors, directions and perturbations, biased towards
    /// interval boundaries.
    Random,
    /// Axis-aligned copies anchored on a lattice.
    Grid,
    /// Axis-aligned copies anchored at the coloring's boundary heights.
    Segment,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Random => "random",
            Strategy::Grid => "grid",
            Strategy::Segment => "segment",
        }
    }
}

impl core::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(Strategy::Random),
            "grid" => Ok(Strategy::Grid),
            "segment" => Ok(Strategy::Segment),
            _ => Err(Error::InvalidConfig("strategy must be random, grid or segment")),
        }
    }
}

/// Axis-aligned box `[lo_i, hi_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    bounds: Vec<(Rational, Rational)>,
}

impl Region {
    pub fn new(bounds: Vec<(Rational, Rational)>) -> Result<Self> {
        if bounds.is_empty() || bounds.iter().any(|(lo, hi)| lo > hi) {
            return Err(Error::EmptyRegion);
        }
        Ok(Region { bounds })
    }

    pub fn cube(dim: usize, lo: Rational, hi: Rational) -> Result<Self> {
        Self::new(alloc::vec![(lo, hi); dim])
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(Rational, Rational)] {
        &self.bounds
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub strategy: Strategy,
    /// Number of candidate copies to try.
    pub budget: u64,
    pub seed: u64,
    pub region: Region,
    pub workers: usize,
    /// Lattice spacing for `Grid` anchors and `Segment` off-axis anchors.
    pub grid_step: Rational,
    /// A perturbation is pinned to `±λ_s` or `0` with probability `1/pin_one_in`.
    pub pin_one_in: u32,
    /// A random anchor snaps to a boundary height with probability `1/snap_one_in`.
    pub snap_one_in: u32,
    /// Largest denominator of sampled rationals.
    pub max_den: u32,
}

impl SearchConfig {
    pub fn new(strategy: Strategy, budget: u64, seed: u64, region: Region) -> Self {
        SearchConfig {
            strategy,
            budget,
            seed,
            region,
            workers: 1,
            grid_step: Rational::ratio(1, 2),
            pin_one_in: 4,
            snap_one_in: 4,
            max_den: 64,
        }
    }

    fn validate(&self, dim: usize) -> Result<()> {
        if self.budget == 0 {
            return Err(Error::InvalidConfig("budget must be at least 1"));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("workers must be at least 1"));
        }
        if !self.grid_step.is_positive() {
            return Err(Error::InvalidConfig("grid step must be positive"));
        }
        if self.region.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: self.region.dim() });
        }
        Ok(())
    }
}

/// A verified monochromatic copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub points: Vec<RVector>,
    /// Zero-based axis walked by the copy.
    pub direction: usize,
    pub reflected: bool,
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub found: bool,
    pub witness: Option<Witness>,
    pub tried: u64,
    pub elapsed_ms: u64,
    pub strategy: Strategy,
    pub budget: u64,
    pub seed: u64,
    pub workers: usize,
}

#[derive(Clone, Debug)]
struct Candidate {
    anchor: RVector,
    direction: usize,
    reflected: bool,
    perturbations: Vec<Vec<Rational>>,
}

/// Values `lo, lo + step, …` inside `[lo, hi]`.
fn lattice(lo: &Rational, hi: &Rational, step: &Rational) -> Vec<Rational> {
    let mut out = Vec::new();
    let mut x = lo.clone();
    while &x <= hi {
        out.push(x.clone());
        x += step;
    }
    out
}

/// Lattice values of `[lo, hi]` through 0 (when inside), ordered by distance
/// from 0 with the positive side first.
fn centered_lattice(lo: &Rational, hi: &Rational, step: &Rational) -> Vec<Rational> {
    let center = if lo <= &Rational::zero() && &Rational::zero() <= hi { Rational::zero() } else { lo.clone() };
    let mut out = alloc::vec![center.clone()];
    let (mut up, mut down) = (&center + step, &center - step);
    while &up <= hi || &down >= lo {
        if &up <= hi {
            out.push(up.clone());
        }
        if &down >= lo {
            out.push(down.clone());
        }
        up += step;
        down -= step;
    }
    out
}

/// Deterministic enumeration shared by the grid and segment strategies.
///
/// Anchors are decoded mixed-radix over `axes`, with `order` listing the
/// axes from slowest to fastest varying.
struct Enumeration {
    axes: Vec<Vec<Rational>>,
    order: Vec<usize>,
    /// Directions in trial order.
    directions: Vec<usize>,
}

impl Enumeration {
    fn len(&self) -> u64 {
        let anchors = self.axes.iter().fold(1u64, |acc, list| acc.saturating_mul(list.len() as u64));
        anchors.saturating_mul(2 * self.directions.len() as u64)
    }

    fn anchor(&self, mut index: u64) -> RVector {
        let mut coords = alloc::vec![Rational::zero(); self.axes.len()];
        for &axis in self.order.iter().rev() {
            let list = &self.axes[axis];
            let len = list.len() as u64;
            coords[axis] = list[(index % len) as usize].clone();
            index /= len;
        }
        RVector::new(coords).expect("nonempty")
    }

    fn candidate(&self, index: u64, b: &Baton) -> Candidate {
        let per_anchor = 2 * self.directions.len() as u64;
        let slot = index % per_anchor;
        Candidate {
            anchor: self.anchor(index / per_anchor),
            direction: self.directions[(slot / 2) as usize],
            reflected: slot % 2 == 1,
            perturbations: alloc::vec![alloc::vec![Rational::zero(); self.axes.len() - 1]; b.len()],
        }
    }
}

fn grid_enumeration(cfg: &SearchConfig) -> Enumeration {
    let dim = cfg.region.dim();
    Enumeration {
        axes: cfg.region.bounds().iter().map(|(lo, hi)| lattice(lo, hi, &cfg.grid_step)).collect(),
        order: (0..dim).collect(),
        directions: (0..dim).collect(),
    }
}

/// Anchors whose last coordinate sits on a boundary height `m·period + offset`
/// inside the region, nearest heights first, with the other coordinates on
/// the grid lattice ordered by distance from the origin.
fn segment_enumeration(oracle: &impl ColorOracle, cfg: &SearchConfig) -> Result<Enumeration> {
    let (period, offsets) = oracle
        .boundary_heights()
        .ok_or(Error::InvalidConfig("segment strategy needs a coloring with boundary heights"))?;
    let dim = cfg.region.dim();
    let (lo, hi) = &cfg.region.bounds()[dim - 1];
    let m_lo = Rational::integer((lo / &period).floor() - 1);
    let m_hi = Rational::integer((hi / &period).floor() + 1);
    let mut heights = Vec::new();
    for m in centered_lattice(&m_lo, &m_hi, &Rational::one()) {
        for off in &offsets {
            let h = &(&m * &period) + off;
            if &h >= lo && &h <= hi && !heights.contains(&h) {
                heights.push(h);
            }
        }
    }
    if heights.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let mut axes: Vec<Vec<Rational>> = cfg.region.bounds()[..dim - 1]
        .iter()
        .map(|(lo, hi)| centered_lattice(lo, hi, &cfg.grid_step))
        .collect();
    axes.push(heights);
    Ok(Enumeration {
        axes,
        order: core::iter::once(dim - 1).chain(0..dim - 1).collect(),
        directions: core::iter::once(dim - 1).chain(0..dim - 1).collect(),
    })
}

fn random_candidate(rng: &mut impl Rng, oracle: &impl ColorOracle, b: &Baton, cfg: &SearchConfig) -> Candidate {
    let dim = cfg.region.dim();
    let mut anchor = sample::point_in(rng, cfg.region.bounds(), cfg.max_den).into_coords();
    if cfg.snap_one_in > 0 && rng.gen_ratio(1, cfg.snap_one_in) {
        if let Some((period, offsets)) = oracle.boundary_heights() {
            let (lo, hi) = &cfg.region.bounds()[dim - 1];
            let m_lo = (lo / &period).floor();
            let m_hi = (hi / &period).floor();
            let span = (&m_hi - &m_lo).try_into().unwrap_or(0u64);
            let m = &m_lo + num_bigint::BigInt::from(rng.gen_range(0..=span));
            let offset = &offsets[rng.gen_range(0..offsets.len())];
            let jitter = Rational::ratio(rng.gen_range(-2..=2), cfg.max_den as i64);
            anchor[dim - 1] = &Rational::integer(m) * &period + offset + jitter;
        }
    }
    let perturbations = sample::perturbations(rng, b, dim - 1, cfg.pin_one_in, cfg.max_den);
    Candidate {
        anchor: RVector::new(anchor).expect("nonempty"),
        direction: rng.gen_range(0..dim),
        reflected: rng.gen(),
        perturbations,
    }
}

/// Colors the points in order, stopping at the first change.
fn monochromatic(oracle: &impl ColorOracle, points: &[RVector]) -> Result<Option<Color>> {
    let first = oracle.color(&points[0])?;
    for p in &points[1..] {
        if oracle.color(p)? != first {
            return Ok(None);
        }
    }
    Ok(Some(first))
}

struct WorkerOutcome {
    tried: u64,
    witness: Option<Witness>,
}

/// Independent confirmation of a candidate witness: a copy under both the
/// coordinatewise check and the distance matrix, and one color under fresh
/// queries.
fn reverify_linf(oracle: &impl ColorOracle, b: &Baton, points: &[RVector]) -> Result<Option<Witness>> {
    let verdict = copy_check(points, b)?;
    if !verdict.is_copy || !distance_matrix_matches(points, b)? {
        return Ok(None);
    }
    let colors = points.iter().map(|p| oracle.color(p)).collect::<Result<Vec<_>>>()?;
    if colors.windows(2).any(|w| w[0] != w[1]) {
        return Ok(None);
    }
    let (direction, reflected) = verdict.direction().expect("copy has a direction");
    Ok(Some(Witness { points: points.to_vec(), direction, reflected, color: colors[0] }))
}

type Reverify<'a> = dyn Fn(&[RVector], &Candidate) -> Result<Option<Witness>> + Sync + 'a;

fn run_worker<O: ColorOracle>(
    oracle: &O,
    b: &Baton,
    cfg: &SearchConfig,
    worker: usize,
    range: (u64, u64),
    enumeration: Option<&Enumeration>,
    reverify: &Reverify<'_>,
) -> Result<WorkerOutcome> {
    let mut rng = sample::rng(cfg.seed, worker as u64);
    let mut tried = 0;
    for index in range.0..range.1 {
        let candidate = match enumeration {
            Some(e) => e.candidate(index, b),
            None => random_candidate(&mut rng, oracle, b, cfg),
        };
        let points = copy_build(b, &candidate.anchor, candidate.direction, candidate.reflected, &candidate.perturbations)?;
        tried += 1;
        if monochromatic(oracle, &points)?.is_some() {
            if let Some(witness) = reverify(&points, &candidate)? {
                return Ok(WorkerOutcome { tried, witness: Some(witness) });
            }
        }
    }
    Ok(WorkerOutcome { tried, witness: None })
}

/// Contiguous index ranges of `total` candidates over `workers`.
fn split(total: u64, workers: usize) -> Vec<(u64, u64)> {
    let w = workers as u64;
    let (base, extra) = (total / w, total % w);
    let mut start = 0;
    (0..w)
        .map(|i| {
            let len = base + u64::from(i < extra);
            let range = (start, start + len);
            start += len;
            range
        })
        .collect()
}

#[cfg(feature = "std")]
fn now() -> Option<std::time::Instant> {
    Some(std::time::Instant::now())
}

#[cfg(not(feature = "std"))]
fn now() -> Option<()> {
    None
}

#[cfg(feature = "std")]
fn elapsed_ms(start: Option<std::time::Instant>) -> u64 {
    start.map_or(0, |s| s.elapsed().as_millis() as u64)
}

#[cfg(not(feature = "std"))]
fn elapsed_ms(_start: Option<()>) -> u64 {
    0
}

fn search_with<O: ColorOracle>(oracle: &O, b: &Baton, cfg: &SearchConfig, reverify: &Reverify<'_>) -> Result<SearchReport> {
    cfg.validate(oracle.dim())?;
    let start = now();
    let enumeration = match cfg.strategy {
        Strategy::Random => None,
        Strategy::Grid => Some(grid_enumeration(cfg)),
        Strategy::Segment => Some(segment_enumeration(oracle, cfg)?),
    };
    let total = enumeration.as_ref().map_or(cfg.budget, |e| e.len().min(cfg.budget));
    let ranges = split(total, cfg.workers);
    let run = |worker: usize| run_worker(oracle, b, cfg, worker, ranges[worker], enumeration.as_ref(), reverify);

    #[cfg(feature = "std")]
    let outcomes: Vec<Result<WorkerOutcome>> = if cfg.workers == 1 {
        alloc::vec![run(0)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..cfg.workers).map(|w| scope.spawn(move || run(w))).collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        })
    };
    #[cfg(not(feature = "std"))]
    let outcomes: Vec<Result<WorkerOutcome>> = (0..cfg.workers).map(run).collect();

    let mut tried = 0;
    let mut witness = None;
    for outcome in outcomes {
        let outcome = outcome?;
        tried += outcome.tried;
        if witness.is_none() {
            witness = outcome.witness;
        }
    }
    Ok(SearchReport {
        found: witness.is_some(),
        witness,
        tried,
        elapsed_ms: elapsed_ms(start),
        strategy: cfg.strategy,
        budget: cfg.budget,
        seed: cfg.seed,
        workers: cfg.workers,
    })
}

/// Searches for a monochromatic `l∞`-isometric copy of `b` under `oracle`.
pub fn search<O: ColorOracle>(oracle: &O, b: &Baton, cfg: &SearchConfig) -> Result<SearchReport> {
    search_with(oracle, b, cfg, &|points, _| reverify_linf(oracle, b, points))
}

/// The coloring of `R^f` seen through the inverse of the polytope embedding.
struct PulledBack<'a> {
    coloring: &'a PolytopeColoring,
}

impl ColorOracle for PulledBack<'_> {
    fn dim(&self) -> usize {
        self.coloring.norm().facet_count()
    }

    fn color(&self, y: &RVector) -> Result<Color> {
        self.coloring.color(&self.coloring.norm().pullback(y)?)
    }

    fn boundary_heights(&self) -> Option<(Rational, Vec<Rational>)> {
        ColorOracle::boundary_heights(self.coloring.snake())
    }
}

/// Searches for a monochromatic `N`-isometric copy of `b` under a polytope
/// coloring. Copies are built as `l∞` copies in the embedding space `R^f`
/// and pulled back; the witness is reported in `R^n` after checking every
/// pairwise `N`-distance. The embedding must be invertible (`f = n`).
pub fn search_polytope(coloring: &PolytopeColoring, b: &Baton, cfg: &SearchConfig) -> Result<SearchReport> {
    let norm = coloring.norm();
    if norm.facet_count() != norm.dim() {
        return Err(Error::NonInvertibleEmbedding);
    }
    let pulled = PulledBack { coloring };
    let reverify = |points: &[RVector], candidate: &Candidate| -> Result<Option<Witness>> {
        let source = points.iter().map(|y| norm.pullback(y)).collect::<Result<Vec<_>>>()?;
        Ok(norm_copy_matches(norm, &source, b)?
            .then(|| monochrome_under(coloring, &source))
            .transpose()?
            .flatten()
            .map(|color| Witness { points: source, direction: candidate.direction, reflected: candidate.reflected, color }))
    };
    search_with(&pulled, b, cfg, &reverify)
}

fn monochrome_under(coloring: &PolytopeColoring, points: &[RVector]) -> Result<Option<Color>> {
    let colors = points.iter().map(|p| coloring.color(p)).collect::<Result<Vec<_>>>()?;
    Ok(colors.windows(2).all(|w| w[0] == w[1]).then_some(colors[0]))
}

/// Every pairwise distance `‖x^r - x^l‖_N` equals `σ_r - σ_l`.
pub fn norm_copy_matches(norm: &impl NormOracle, points: &[RVector], b: &Baton) -> Result<bool> {
    if points.len() != b.len() + 1 {
        return Ok(false);
    }
    let sigma = b.prefix();
    for l in 0..points.len() {
        for r in l + 1..points.len() {
            if norm.norm(&points[r].try_sub(&points[l])?)? != &sigma[r] - &sigma[l] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Re-checks a reported witness from scratch against `oracle` and `b`.
pub fn witness_holds(oracle: &impl ColorOracle, b: &Baton, witness: &Witness) -> Result<bool> {
    Ok(reverify_linf(oracle, b, &witness.points)?.is_some_and(|w| w.color == witness.color))
}

/// `((k+1)/k)^n`, the lower bound on the number of colors needed in
/// `R∞^n` to avoid monochromatic copies of `B_k`.
pub fn ks_bound(k: u32, n: u32) -> Result<Rational> {
    if k == 0 || n == 0 {
        return Err(Error::InvalidConfig("k and n must be positive"));
    }
    Ok(Rational::ratio(i64::from(k) + 1, i64::from(k)).pow(n))
}

/// Short human-readable summary of a report.
pub fn summary(report: &SearchReport) -> String {
    match &report.witness {
        Some(w) => alloc::format!(
            "found {} copy after {} candidates, first point {}",
            w.color.name(),
            report.tried,
            w.points[0]
        ),
        None => alloc::format!("not found within budget ({} candidates)", report.tried),
    }
}
