//! Snake hypersurfaces `S^n(a_1, b_1, …, a_n, b_n) ⊂ R^{n+1}`.
//!
//! `S^0 = {0}` and
//!
//! ```text
//! S^n = S^{n-1} + Z·(a_n·e_{n+1} - b_n·1_n) + ([0, a_n)·e_{n+1} ∪ (0, b_n]·1_n)
//! ```
//!
//! where `R^n` sits inside `R^{n+1}` as the first `n` coordinates. Every point
//! `x ∈ R^{n+1}` has a unique representation `x = s + t·1_{n+1}` with `s` on
//! the snake; [`shift`] computes `t` together with the per-level data of `s`.
//! The thickened snake is `S^n + [0, 1)·1_{n+1}`.
//!
//! [`oracle_contains`] answers membership by enumerating the recursive
//! definition directly and is kept independent of [`shift`] so the two can be
//! checked against each other.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::exactnum::{in_half_open, Integer, RVector, Rational};
use crate::{Error, Result};

/// Where a parameter set came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamsOrigin {
    /// `theorem_params(n)`.
    Theorem(usize),
    Custom,
}

/// Parameters `a_1..a_n`, `b_1..b_n` of a snake hypersurface, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeParams {
    a: Vec<Rational>,
    b: Vec<Rational>,
    origin: ParamsOrigin,
}

impl SnakeParams {
    pub fn new(a: Vec<Rational>, b: Vec<Rational>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidParams("a and b must have the same length"));
        }
        if a.iter().chain(&b).any(|v| !v.is_positive()) {
            return Err(Error::InvalidParams("all parameters must be positive"));
        }
        Ok(SnakeParams { a, b, origin: ParamsOrigin::Custom })
    }

    /// The degenerate snake `S^0 = {0} ⊂ R`.
    pub fn point() -> Self {
        SnakeParams { a: Vec::new(), b: Vec::new(), origin: ParamsOrigin::Theorem(0) }
    }

    /// Snake dimension `n`; the snake lives in `R^{n+1}`.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Dimension of the ambient space, `n + 1`.
    pub fn ambient_dim(&self) -> usize {
        self.a.len() + 1
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    /// `a_n`, or `None` for `n = 0`.
    pub fn a_last(&self) -> Option<&Rational> {
        self.a.last()
    }

    pub fn b_last(&self) -> Option<&Rational> {
        self.b.last()
    }

    pub fn origin(&self) -> ParamsOrigin {
        self.origin
    }

    /// The first `m` levels, `S^m(a_1, b_1, …, a_m, b_m)`.
    pub fn truncated(&self, m: usize) -> Self {
        let m = m.min(self.n());
        SnakeParams {
            a: self.a[..m].to_vec(),
            b: self.b[..m].to_vec(),
            origin: if m == self.n() { self.origin } else { ParamsOrigin::Custom },
        }
    }

    fn min_param(&self) -> Option<Rational> {
        self.a.iter().chain(&self.b).min().cloned()
    }
}

fn pow5(e: usize) -> Rational {
    Rational::integer(num_traits::pow(BigInt::from(5), e))
}

/// `(a_i(n), b_i(n)) = (7/4·(5^n - 5^{n-i}), 4·5^{n-i})` for `0 <= i <= n`.
pub fn theorem_level(n: usize, i: usize) -> (Rational, Rational) {
    assert!(i <= n, "level {i} exceeds snake dimension {n}");
    let a = Rational::ratio(7, 4) * (pow5(n) - pow5(n - i));
    let b = Rational::from(4) * pow5(n - i);
    (a, b)
}

/// Parameters of the snake behind the coloring of `R^{n+1}`.
pub fn theorem_params(n: usize) -> SnakeParams {
    let (a, b) = (1..=n).map(|i| theorem_level(n, i)).unzip();
    SnakeParams { a, b, origin: ParamsOrigin::Theorem(n) }
}

/// All parameters multiplied by `mu`; `S^n(μ·p) = μ·S^n(p)`.
pub fn scale(p: &SnakeParams, mu: &Rational) -> Result<SnakeParams> {
    if !mu.is_positive() {
        return Err(Error::NonPositiveScale);
    }
    let origin = if mu == &Rational::one() { p.origin } else { ParamsOrigin::Custom };
    Ok(SnakeParams {
        a: p.a.iter().map(|v| v * mu).collect(),
        b: p.b.iter().map(|v| v * mu).collect(),
        origin,
    })
}

/// Data of one level `i` of a snake point: the summand
/// `c·(a_i·e_{i+1} - b_i·1_i) + v·e_{i+1} + w·1_i` with `v ∈ [0, a_i)`,
/// `w ∈ [0, b_i]` and `v·w = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub c: Integer,
    pub v: Rational,
    pub w: Rational,
}

/// Unique decomposition `x = Σ_i level_i + t·1_{n+1}` of a point of `R^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeDecomposition {
    /// `levels[i - 1]` holds level `i`, for `i = 1..=n`.
    pub levels: Vec<Level>,
    /// The shift `t`.
    pub shift: Rational,
}

impl SnakeDecomposition {
    /// `floor(t)`: index of the translate of the thickened snake holding `x`.
    pub fn layer(&self) -> Integer {
        self.shift.floor()
    }

    /// `t - floor(t) ∈ [0, 1)`.
    pub fn thick(&self) -> Rational {
        self.shift.fract()
    }

    /// The snake point `x - t·1_{n+1}`.
    pub fn snake_point(&self, p: &SnakeParams) -> Result<RVector> {
        snake_point(p, &self.levels)
    }

    /// Rebuilds the decomposed point from the level data and the shift.
    pub fn recompose(&self, p: &SnakeParams) -> Result<RVector> {
        Ok(self.snake_point(p)?.shifted_diag(&self.shift))
    }
}

/// Sums the level summands into a point of `S^n ⊂ R^{n+1}`, validating the
/// interval constraints of every level.
pub fn snake_point(p: &SnakeParams, levels: &[Level]) -> Result<RVector> {
    if levels.len() != p.n() {
        return Err(Error::InvalidParams("one level per snake dimension required"));
    }
    let mut coords = alloc::vec![Rational::zero(); p.ambient_dim()];
    for (idx, (level, (a, b))) in levels.iter().zip(p.a.iter().zip(&p.b)).enumerate() {
        let valid = in_half_open(&level.v, &Rational::zero(), a)
            && !level.w.is_negative()
            && &level.w <= b
            && (level.v.is_zero() || level.w.is_zero());
        if !valid {
            return Err(Error::InvalidParams("level data outside its intervals"));
        }
        let c = Rational::integer(level.c.clone());
        let diag = &level.w - &(&c * b);
        for coord in &mut coords[..=idx] {
            *coord += &diag;
        }
        coords[idx + 1] += &(&c * a) + &level.v;
    }
    RVector::new(coords)
}

/// Computes the unique `t` with `x - t·1_{n+1} ∈ S^n`, and the level data.
///
/// Bottom-up: the level-0 shift of `x_1` is `x_1` itself. Given the shift `g`
/// of `(x_1..x_i)` against the first `i - 1` levels, let `d = x_{i+1} - g` and
/// pick the integer `c` with `d - c·(a_i + b_i) ∈ [-b_i, a_i)`. A non-negative
/// residue is `v`, a negative one is `-w`, and the level-`i` shift is
/// `g - w + c·b_i`.
pub fn shift(p: &SnakeParams, x: &RVector) -> Result<SnakeDecomposition> {
    x.check_dim(p.ambient_dim())?;
    let mut g = x[0].clone();
    let mut levels = Vec::with_capacity(p.n());
    for (i, (a, b)) in p.a.iter().zip(&p.b).enumerate() {
        let period = a + b;
        let d = &x[i + 1] - &g;
        let c = ((&d + b) / &period).floor();
        let cr = Rational::integer(c.clone());
        let residue = &d - &(&cr * &period);
        let (v, w) = if residue.is_negative() {
            (Rational::zero(), -residue)
        } else {
            (residue, Rational::zero())
        };
        g = &g - &w + &cr * b;
        levels.push(Level { c, v, w });
    }
    Ok(SnakeDecomposition { levels, shift: g })
}

/// `x ∈ S^n`.
pub fn contains_snake(p: &SnakeParams, x: &RVector) -> Result<bool> {
    Ok(shift(p, x)?.shift.is_zero())
}

/// `x ∈ S^n + [0, 1)·1_{n+1}`.
pub fn contains_thick(p: &SnakeParams, x: &RVector) -> Result<bool> {
    contains_thick_width(p, x, &Rational::one())
}

/// `x ∈ S^n + [0, width)·1_{n+1}`.
pub fn contains_thick_width(p: &SnakeParams, x: &RVector, width: &Rational) -> Result<bool> {
    let t = shift(p, x)?.shift;
    Ok(in_half_open(&t, &Rational::zero(), width))
}

/// Bounded interval of the line with independently open or closed ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub lo_closed: bool,
    pub hi: Rational,
    pub hi_closed: bool,
}

impl Interval {
    pub fn point(value: Rational) -> Self {
        Interval { lo: value.clone(), lo_closed: true, hi: value, hi_closed: true }
    }

    /// `[lo, hi)`.
    pub fn half_open(lo: Rational, hi: Rational) -> Self {
        Interval { lo, lo_closed: true, hi, hi_closed: false }
    }

    /// `(lo, hi]`.
    pub fn open_closed(lo: Rational, hi: Rational) -> Self {
        Interval { lo, lo_closed: false, hi, hi_closed: true }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn contains(&self, t: &Rational) -> bool {
        let above = if self.lo_closed { t >= &self.lo } else { t > &self.lo };
        let below = if self.hi_closed { t <= &self.hi } else { t < &self.hi };
        above && below
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = match self.lo.cmp(&other.lo) {
            core::cmp::Ordering::Greater => (self.lo.clone(), self.lo_closed),
            core::cmp::Ordering::Less => (other.lo.clone(), other.lo_closed),
            core::cmp::Ordering::Equal => (self.lo.clone(), self.lo_closed && other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.cmp(&other.hi) {
            core::cmp::Ordering::Less => (self.hi.clone(), self.hi_closed),
            core::cmp::Ordering::Greater => (other.hi.clone(), other.hi_closed),
            core::cmp::Ordering::Equal => (self.hi.clone(), self.hi_closed && other.hi_closed),
        };
        Interval { lo, lo_closed, hi, hi_closed }
    }
}

fn int_range(lo: &Integer, hi: &Integer, bound: &Integer) -> impl Iterator<Item = Integer> {
    let lo = lo.clone().max(-bound.clone());
    let hi = hi.clone().min(bound.clone());
    let count = if hi >= lo { (&hi - &lo).to_u64().unwrap_or(u64::MAX) + 1 } else { 0 };
    (0..count).map(move |k| &lo + BigInt::from(k))
}

/// Collects every `t ∈ window` with `x - t·1 ∈ S^m`, trying each `c` with
/// `|c| <= bound` that the window allows and both branches of the union.
fn diagonal_hits(p: &SnakeParams, x: &[Rational], window: &Interval, bound: &Integer, out: &mut Vec<Rational>) {
    let m = x.len() - 1;
    if window.is_empty() {
        return;
    }
    if m == 0 {
        if window.contains(&x[0]) {
            out.push(x[0].clone());
        }
        return;
    }
    let (a, b) = (&p.a[m - 1], &p.b[m - 1]);
    let last = &x[m];
    let base = &x[..m];

    // Vertical branch: last - t = c·a + v with v ∈ [0, a), so
    // t ∈ (last - (c+1)·a, last - c·a]; the rest must lie on S^{m-1} after
    // undoing the -c·b·1_m summand.
    let c_lo = ((last - &window.hi) / a).floor();
    let c_hi = ((last - &window.lo) / a).floor();
    for c in int_range(&c_lo, &c_hi, bound) {
        let cr = Rational::integer(c);
        let run = Interval::open_closed(last - &(&(&cr + &Rational::one()) * a), last - &(&cr * a));
        let sub_window = window.intersect(&run);
        if sub_window.is_empty() {
            continue;
        }
        let cb = &cr * b;
        let lifted: Vec<Rational> = base.iter().map(|y| y + &cb).collect();
        diagonal_hits(p, &lifted, &sub_window, bound, out);
    }

    // Diagonal branch: last - t = c·a exactly and the first m coordinates
    // pick up w·1_m with w ∈ (0, b].
    let c_lo = ((last - &window.hi) / a).ceil();
    let c_hi = ((last - &window.lo) / a).floor();
    for c in int_range(&c_lo, &c_hi, bound) {
        let cr = Rational::integer(c);
        let t = last - &(&cr * a);
        if !window.contains(&t) {
            continue;
        }
        let offset = &(&cr * b) - &t;
        let lifted: Vec<Rational> = base.iter().map(|y| y + &offset).collect();
        let mut ws = Vec::new();
        diagonal_hits(p, &lifted, &Interval::open_closed(Rational::zero(), b.clone()), bound, &mut ws);
        if !ws.is_empty() {
            out.push(t);
        }
    }
}

/// Every `t` in `window` with `x - t·1_{n+1} ∈ S^n`, by direct enumeration of
/// the definition with `|c_i| <= c_bound`. Sorted and deduplicated.
pub fn oracle_shifts(p: &SnakeParams, x: &RVector, window: &Interval, c_bound: &Integer) -> Result<Vec<Rational>> {
    x.check_dim(p.ambient_dim())?;
    let mut hits = Vec::new();
    diagonal_hits(p, x.coords(), window, c_bound, &mut hits);
    hits.sort();
    hits.dedup();
    Ok(hits)
}

/// Brute-force membership `x ∈ S^n` from the recursive definition.
pub fn oracle_contains(p: &SnakeParams, x: &RVector, c_bound: &Integer) -> Result<bool> {
    Ok(!oracle_shifts(p, x, &Interval::point(Rational::zero()), c_bound)?.is_empty())
}

/// A bound on `|c_i|` large enough for [`oracle_shifts`] on `x` with a window
/// inside `[-window_radius, window_radius]`.
///
/// It is at least `⌈‖x‖∞ / min_i min(a_i, b_i)⌉ + 1`, and grows with the
/// coordinate drift that lower levels see after undoing `c_i·b_i·1_i`.
pub fn oracle_bound(p: &SnakeParams, x: &RVector, window_radius: &Rational) -> Integer {
    let Some(min) = p.min_param() else { return Integer::one() };
    let norm = x.linf_norm();
    let mut bound = (&norm / &min).ceil() + Integer::one();
    let mut base = norm;
    let mut window = window_radius.abs();
    for (a, b) in p.a.iter().zip(&p.b).rev() {
        let c = ((&base + &window) / a).floor() + Integer::one();
        let cr = Rational::integer(c.abs());
        base = &base + &(&cr * b) + &window;
        window = window.max(b.clone());
        bound = bound.max(c.abs());
    }
    bound
}

/// Oracle membership with a bound derived from `x`.
pub fn oracle_contains_auto(p: &SnakeParams, x: &RVector) -> Result<bool> {
    oracle_contains(p, x, &oracle_bound(p, x, &Rational::zero()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContourCase {
    /// `h ∈ [m·a_n, m·a_n + 1)`: interval `[0, b_n + 1)`.
    Wide,
    /// `h ∈ [m·a_n + 1, (m + 1)·a_n)`: interval `[0, 1)`.
    Narrow,
}

/// The slice of the thickened snake at height `x_{n+1} = h`, written as
/// `S^{n-1} + base_shift·1_n + [0, width)·1_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContourDesc {
    pub m: Integer,
    pub case: ContourCase,
    /// `-m·b_n`.
    pub base_shift: Rational,
    /// Right end of the half-open interval starting at 0.
    pub width: Rational,
}

fn contour_hypothesis(p: &SnakeParams) -> Result<(&Rational, &Rational)> {
    match (p.a_last(), p.b_last()) {
        (Some(a), Some(b)) if a > &Rational::one() => Ok((a, b)),
        _ => Err(Error::ContourHypothesis),
    }
}

pub fn contour_description(p: &SnakeParams, h: &Rational) -> Result<ContourDesc> {
    let (a, b) = contour_hypothesis(p)?;
    let m = (h / a).floor();
    let mr = Rational::integer(m.clone());
    let offset = h - &(&mr * a);
    let (case, width) = if offset < Rational::one() {
        (ContourCase::Wide, b + &Rational::one())
    } else {
        (ContourCase::Narrow, Rational::one())
    };
    Ok(ContourDesc { base_shift: -(&mr * b), m, case, width })
}

/// `y ∈ S^n(h)`, i.e. `(y, h)` lies on the thickened snake.
pub fn contour_contains(p: &SnakeParams, h: &Rational, y: &RVector) -> Result<bool> {
    contour_hypothesis(p)?;
    y.check_dim(p.n())?;
    contains_thick(p, &y.extended(h.clone()))
}

/// `y ∈ S^{n-1} + base_shift·1_n + [0, width)·1_n`, decided with the shift
/// against the first `n - 1` levels.
pub fn contour_formula_contains(p: &SnakeParams, desc: &ContourDesc, y: &RVector) -> Result<bool> {
    let lower = p.truncated(p.n().saturating_sub(1));
    y.check_dim(lower.ambient_dim())?;
    let g = shift(&lower, y)?.shift;
    Ok(in_half_open(&(&g - &desc.base_shift), &Rational::zero(), &desc.width))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn v(s: &str) -> RVector {
        s.parse().unwrap()
    }

    fn qs(list: &[&str]) -> Vec<Rational> {
        list.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn theorem_parameter_values() {
        let p1 = theorem_params(1);
        assert_eq!(p1.a(), qs(&["7"]).as_slice());
        assert_eq!(p1.b(), qs(&["4"]).as_slice());
        let p2 = theorem_params(2);
        assert_eq!(p2.a(), qs(&["35", "42"]).as_slice());
        assert_eq!(p2.b(), qs(&["20", "4"]).as_slice());
        for n in 1..8 {
            assert_eq!(theorem_params(n).b_last(), Some(&q("4")));
            assert_eq!(theorem_level(n, 0), (q("0"), Rational::from(4) * pow5(n)));
        }
        assert_eq!(theorem_params(0).n(), 0);
        assert_eq!(theorem_params(2).origin(), ParamsOrigin::Theorem(2));
    }

    #[test]
    fn params_validation() {
        assert!(SnakeParams::new(qs(&["1"]), qs(&["1", "2"])).is_err());
        assert!(SnakeParams::new(qs(&["0"]), qs(&["1"])).is_err());
        assert!(SnakeParams::new(qs(&["1"]), qs(&["-1"])).is_err());
        assert_eq!(SnakeParams::new(qs(&["1"]), qs(&["2"])).unwrap().origin(), ParamsOrigin::Custom);
    }

    #[test]
    fn shift_examples_plane() {
        let p = theorem_params(1);
        assert_eq!(shift(&p, &v("0,0")).unwrap().shift, q("0"));

        let d = shift(&p, &v("0,71/10")).unwrap();
        assert_eq!(d.shift, q("1/10"));
        assert_eq!(d.levels, vec![Level { c: 1.into(), v: q("0"), w: q("39/10") }]);
        let on_snake = v("0,71/10").shifted_diag(&-d.shift.clone());
        assert!(oracle_contains_auto(&p, &on_snake).unwrap());

        let d = shift(&p, &v("0,-1/2")).unwrap();
        assert_eq!(d.shift, q("-1/2"));
        assert!(oracle_contains_auto(&p, &v("1/2,0")).unwrap());
        assert!(matches!(shift(&p, &v("0")), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn membership_examples_plane() {
        let p = theorem_params(1);
        assert!(contains_snake(&p, &v("0,0")).unwrap());
        assert!(contains_snake(&p, &v("0,7")).unwrap());
        assert_eq!(shift(&p, &v("0,7")).unwrap().levels[0], Level { c: 1.into(), v: q("0"), w: q("4") });
        assert!(!contains_snake(&p, &v("0,-1/2")).unwrap());

        assert!(contains_thick(&p, &v("1/2,1/2")).unwrap());
        assert!(contains_thick(&p, &v("0,7.9")).unwrap());
        assert!(!contains_thick(&p, &v("0,8")).unwrap());
        assert!(contains_thick(&p, &v("0,0")).unwrap());
    }

    #[test]
    fn oracle_examples() {
        let p = theorem_params(1);
        let three = Integer::from(3);
        assert!(oracle_contains(&p, &v("0,0"), &Integer::from(0)).unwrap());
        assert!(oracle_contains(&p, &v("4,-1/2"), &three).unwrap());
        let d = shift(&p, &v("4,-1/2")).unwrap();
        assert_eq!(d.shift, q("0"));
        assert_eq!(d.levels[0], Level { c: (-1).into(), v: q("13/2"), w: q("0") });
        assert!(!oracle_contains(&p, &v("0,-1/2"), &three).unwrap());
        // the c = -1 summand is needed, so a zero bound misses it
        assert!(!oracle_contains(&p, &v("4,-1/2"), &Integer::from(0)).unwrap());
    }

    #[test]
    fn oracle_sees_both_branch_boundaries() {
        let p = theorem_params(1);
        let bound = Integer::from(5);
        // (0, b] excludes w = 0 but the v-branch covers it; [0, a) excludes v = a.
        assert!(oracle_contains(&p, &v("-4,7"), &bound).unwrap());
        assert!(!oracle_contains(&p, &v("-4,6"), &bound).unwrap());
        assert!(oracle_contains(&p, &v("0,7"), &bound).unwrap());
        assert!(oracle_contains(&p, &v("4,0"), &bound).unwrap());
        assert!(!oracle_contains(&p, &v("0,-1"), &bound).unwrap());
        assert!(!oracle_contains(&p, &v("-3,11"), &bound).unwrap());
        assert!(oracle_contains(&p, &v("-4,11"), &bound).unwrap());
        let window = Interval { lo: q("-20"), lo_closed: true, hi: q("20"), hi_closed: true };
        let hits = oracle_shifts(&p, &v("3/2,-5/3"), &window, &Integer::from(10)).unwrap();
        assert_eq!(hits, vec![shift(&p, &v("3/2,-5/3")).unwrap().shift]);
    }

    #[test]
    fn degenerate_point_snake() {
        let p = SnakeParams::point();
        let d = shift(&p, &v("-5/3")).unwrap();
        assert_eq!(d.shift, q("-5/3"));
        assert!(d.levels.is_empty());
        assert!(contains_thick(&p, &v("1/2")).unwrap());
        assert!(!contains_thick(&p, &v("1")).unwrap());
        assert!(oracle_contains_auto(&p, &v("0")).unwrap());
        assert!(!oracle_contains_auto(&p, &v("1/3")).unwrap());
    }

    #[test]
    fn recomposition_is_exact() {
        let p = theorem_params(2);
        for text in ["0,0,0", "1/3,-40,17/2", "1000,-7/64,42", "-13,86,41"] {
            let x = v(text);
            let d = shift(&p, &x).unwrap();
            assert_eq!(d.recompose(&p).unwrap(), x);
            assert!(oracle_contains_auto(&p, &d.snake_point(&p).unwrap()).unwrap());
        }
    }

    #[test]
    fn snake_point_rejects_invalid_levels() {
        let p = theorem_params(1);
        let bad = [
            Level { c: 0.into(), v: q("7"), w: q("0") },
            Level { c: 0.into(), v: q("1"), w: q("1") },
            Level { c: 0.into(), v: q("0"), w: q("9/2") },
            Level { c: 0.into(), v: q("-1"), w: q("0") },
        ];
        for level in bad {
            assert!(snake_point(&p, &[level]).is_err());
        }
        assert_eq!(
            snake_point(&p, &[Level { c: 1.into(), v: q("0"), w: q("4") }]).unwrap(),
            v("0,7")
        );
    }

    #[test]
    fn contour_examples() {
        let p = theorem_params(1);
        let d = contour_description(&p, &q("0")).unwrap();
        assert_eq!((d.m.clone(), d.case, d.width.clone()), (0.into(), ContourCase::Wide, q("5")));
        let d = contour_description(&p, &q("3/2")).unwrap();
        assert_eq!((d.m.clone(), d.case, d.width.clone()), (0.into(), ContourCase::Narrow, q("1")));
        let d = contour_description(&p, &q("7")).unwrap();
        assert_eq!((d.m.clone(), d.case, d.base_shift.clone()), (1.into(), ContourCase::Wide, q("-4")));
        assert!(contains_thick(&p, &v("0,7")).unwrap());

        assert!(contour_contains(&p, &q("0"), &v("9/2")).unwrap());
        assert!(!contour_contains(&p, &q("0"), &v("5")).unwrap());
        assert!(contour_contains(&p, &q("0"), &v("0")).unwrap());
        let d0 = contour_description(&p, &q("0")).unwrap();
        assert!(contour_formula_contains(&p, &d0, &v("9/2")).unwrap());
        assert!(!contour_formula_contains(&p, &d0, &v("5")).unwrap());

        let flat = SnakeParams::new(qs(&["1/2"]), qs(&["4"])).unwrap();
        assert_eq!(contour_description(&flat, &q("0")), Err(Error::ContourHypothesis));
        let unit = SnakeParams::new(qs(&["1"]), qs(&["4"])).unwrap();
        assert_eq!(contour_contains(&unit, &q("0"), &v("0")), Err(Error::ContourHypothesis));
        assert_eq!(contour_description(&SnakeParams::point(), &q("0")), Err(Error::ContourHypothesis));
    }

    #[test]
    fn scaling_examples() {
        let p = theorem_params(1);
        assert_eq!(scale(&p, &q("1")).unwrap(), p);
        let five = scale(&p, &q("5")).unwrap();
        assert_eq!(five.a(), &theorem_params(2).a()[..1]);
        assert_eq!(five.b(), &theorem_params(2).b()[..1]);
        assert_eq!(scale(&five, &q("1/5")).unwrap().a(), p.a());
        assert_eq!(scale(&p, &q("0")), Err(Error::NonPositiveScale));
        assert_eq!(scale(&p, &q("-2")), Err(Error::NonPositiveScale));
    }

    #[test]
    fn interval_edges() {
        let i = Interval::half_open(q("0"), q("1"));
        assert!(i.contains(&q("0")) && !i.contains(&q("1")));
        let j = Interval::open_closed(q("1"), q("2"));
        assert!(i.intersect(&j).is_empty());
        let k = Interval::open_closed(q("0"), q("1"));
        let both = i.intersect(&k);
        assert!(!both.lo_closed && !both.hi_closed && !both.is_empty());
        assert!(!Interval::point(q("3")).is_empty());
    }

    #[test]
    fn oracle_bound_covers_spec_formula() {
        let p = theorem_params(2);
        let x = v("250,-250,13");
        let spec = (x.linf_norm() / q("4")).ceil() + Integer::one();
        assert!(oracle_bound(&p, &x, &q("0")) >= spec);
    }
}
