//! Seeded random generation of exact test data: rationals, points, snake
//! decompositions and baton copies.
//!
//! All generators draw from [`ChaCha8Rng`] so a `(seed, stream)` pair
//! reproduces the same values on every platform.

use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::baton::Baton;
use crate::exactnum::{Integer, RVector, Rational};
use crate::snake::{Level, SnakeParams};

pub type SampleRng = ChaCha8Rng;

/// Generator for stream `stream` of `seed`.
pub fn rng(seed: u64, stream: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// SplitMix64 step, used to derive per-sample seeds.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// `lo + (hi - lo)·k/q` with `q` uniform in `1..=max_den` and `k` uniform in
/// `0..=q`; with integer bounds the result has denominator at most `max_den`.
pub fn rational_in(rng: &mut impl Rng, lo: &Rational, hi: &Rational, max_den: u32) -> Rational {
    let q = rng.gen_range(1..=max_den.max(1));
    let k = rng.gen_range(0..=q);
    lo + &(&(hi - lo) * &Rational::ratio(k as i64, q as i64))
}

/// As [`rational_in`] but never returns `hi`: a draw from `[lo, hi)`.
pub fn rational_half_open(rng: &mut impl Rng, lo: &Rational, hi: &Rational, max_den: u32) -> Rational {
    let q = rng.gen_range(1..=max_den.max(1));
    let k = rng.gen_range(0..q);
    lo + &(&(hi - lo) * &Rational::ratio(k as i64, q as i64))
}

/// As [`rational_in`] but never returns `lo`: a draw from `(lo, hi]`.
pub fn rational_open_closed(rng: &mut impl Rng, lo: &Rational, hi: &Rational, max_den: u32) -> Rational {
    let q = rng.gen_range(1..=max_den.max(1));
    let k = rng.gen_range(1..=q);
    lo + &(&(hi - lo) * &Rational::ratio(k as i64, q as i64))
}

/// Uniform point of the box `[lo_i, hi_i]`.
pub fn point_in(rng: &mut impl Rng, bounds: &[(Rational, Rational)], max_den: u32) -> RVector {
    RVector::new(bounds.iter().map(|(lo, hi)| rational_in(rng, lo, hi, max_den)).collect())
        .expect("nonempty box")
}

/// Uniform point of the cube `[-radius, radius]^dim`.
pub fn point_in_cube(rng: &mut impl Rng, dim: usize, radius: &Rational, max_den: u32) -> RVector {
    let bounds: Vec<_> = (0..dim).map(|_| (-radius, radius.clone())).collect();
    point_in(rng, &bounds, max_den)
}

/// Random valid level data for a point of `S^n(p)` with `|c_i| <= c_range`.
///
/// One level in eight sits on a boundary of its intervals (`v = w = 0` or
/// `w = b_i`) since those are where half-open conventions matter.
pub fn snake_levels(rng: &mut impl Rng, p: &SnakeParams, c_range: i64, max_den: u32) -> Vec<Level> {
    p.a()
        .iter()
        .zip(p.b())
        .map(|(a, b)| {
            let c = Integer::from(rng.gen_range(-c_range..=c_range));
            let zero = Rational::zero();
            match rng.gen_range(0..8) {
                0 => Level { c, v: zero.clone(), w: zero },
                1 => Level { c, v: zero, w: b.clone() },
                2..=4 => Level { c, v: rational_half_open(rng, &zero, a, max_den), w: zero },
                _ => Level { c, v: zero.clone(), w: rational_open_closed(rng, &zero, b, max_den) },
            }
        })
        .collect()
}

/// A baton with `k` steps in `(0, max_step]`.
pub fn baton(rng: &mut impl Rng, k: usize, max_step: &Rational, max_den: u32) -> Baton {
    let steps = (0..k).map(|_| rational_open_closed(rng, &Rational::zero(), max_step, max_den)).collect();
    Baton::new(steps).expect("positive steps")
}

/// Perturbation matrix for `copy_build`: entry `(s, j)` in `[-λ_s, λ_s]`,
/// pinned to `±λ_s` or `0` with probability `1/pin_one_in` each.
pub fn perturbations(rng: &mut impl Rng, b: &Baton, off_axis: usize, pin_one_in: u32, max_den: u32) -> Vec<Vec<Rational>> {
    b.steps()
        .iter()
        .map(|step| {
            (0..off_axis)
                .map(|_| {
                    if pin_one_in > 0 && rng.gen_ratio(1, pin_one_in) {
                        match rng.gen_range(0..3) {
                            0 => step.clone(),
                            1 => -step,
                            _ => Rational::zero(),
                        }
                    } else {
                        rational_in(rng, &-step, step, max_den)
                    }
                })
                .collect()
        })
        .collect()
}
