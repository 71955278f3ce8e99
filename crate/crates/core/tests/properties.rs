use proptest::prelude::*;

use linf_snake::coloring::{space_coloring, Color};
use linf_snake::exactnum::{linf_dist, RVector, Rational};
use linf_snake::hunt::{search, witness_holds, Region, SearchConfig, Strategy as Search};
use linf_snake::norms::{polytope_coloring, PolytopeNorm};
use linf_snake::snake::{
    contains_snake, contour_contains, oracle_contains_auto, scale, shift, snake_point, theorem_params, Level,
    SnakeParams,
};
use linf_snake::{Baton, Integer};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn rational(bound: i64, den: i64) -> impl Strategy<Value = Rational> {
    (-bound * den..=bound * den, 1..=den).prop_map(|(p, q)| Rational::ratio(p, q))
}

fn point(dim: usize, bound: i64) -> impl Strategy<Value = RVector> {
    proptest::collection::vec(rational(bound, 64), dim).prop_map(|c| RVector::new(c).unwrap())
}

/// Valid level data for `p`: `c` in `[-3, 3]`, then a vertical or diagonal
/// remainder, with both interval ends reachable.
fn levels(p: &SnakeParams) -> impl Strategy<Value = Vec<Level>> {
    let per_level: Vec<_> = p
        .a()
        .iter()
        .zip(p.b())
        .map(|(a, b)| {
            let (a, b) = (a.clone(), b.clone());
            (-3i64..=3, 0u8..4, 0i64..=64).prop_map(move |(c, kind, k)| {
                let frac = Rational::ratio(k, 64);
                let zero = Rational::zero();
                let (v, w) = match kind {
                    0 => (zero.clone(), zero),
                    1 => (zero, b.clone()),
                    // v in [0, a): k = 64 would reach a itself.
                    2 => (&a * &Rational::ratio(k.min(63), 64), zero),
                    _ => (zero, &b * &frac),
                };
                Level { c: Integer::from(c), v, w }
            })
        })
        .collect();
    per_level
}

fn snake_pt(n: usize) -> impl Strategy<Value = RVector> {
    let p = theorem_params(n);
    levels(&p).prop_map(move |l| snake_point(&p, &l).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shift_is_diagonally_equivariant(x in point(3, 250), s in rational(40, 16)) {
        let p = theorem_params(2);
        let t = shift(&p, &x).unwrap().shift;
        prop_assert_eq!(shift(&p, &x.shifted_diag(&s)).unwrap().shift, t + s);
    }

    #[test]
    fn decomposition_recomposes_with_valid_levels(x in point(4, 1250)) {
        let p = theorem_params(3);
        let dec = shift(&p, &x).unwrap();
        // snake_point re-validates every level's interval constraints.
        let on = dec.snake_point(&p).unwrap();
        prop_assert_eq!(on.shifted_diag(&dec.shift), x);
        prop_assert!(contains_snake(&p, &on).unwrap());
    }

    #[test]
    fn generated_snake_points_are_members(x in snake_pt(2)) {
        let p = theorem_params(2);
        prop_assert!(contains_snake(&p, &x).unwrap());
        prop_assert!(oracle_contains_auto(&p, &x).unwrap());
    }

    #[test]
    fn membership_agrees_with_oracle_near_the_snake(x in snake_pt(2), nudge in rational(1, 8), axis in 0usize..3) {
        let p = theorem_params(2);
        let mut coords = x.into_coords();
        coords[axis] += nudge;
        let y = RVector::new(coords).unwrap();
        prop_assert_eq!(contains_snake(&p, &y).unwrap(), oracle_contains_auto(&p, &y).unwrap());
    }

    #[test]
    fn membership_is_scale_invariant(x in snake_pt(2), nudge in rational(1, 4), pick in 0usize..4) {
        let p = theorem_params(2);
        let mu = [q("1/5"), q("2"), q("5"), q("7/3")][pick].clone();
        let y = x.shifted_diag(&nudge);
        prop_assert_eq!(
            contains_snake(&p, &y).unwrap(),
            contains_snake(&scale(&p, &mu).unwrap(), &y.scaled(&mu)).unwrap()
        );
    }

    #[test]
    fn translation_distance_is_at_least_t(x in snake_pt(2), y in snake_pt(2), t in (1i64..=640).prop_map(|k| Rational::ratio(k, 64))) {
        let d = linf_dist(&x.shifted_diag(&t), &y).unwrap();
        prop_assert!(d >= t);
        prop_assert_eq!(linf_dist(&x.shifted_diag(&t), &x).unwrap(), t);
    }

    #[test]
    fn neighbouring_contours_nest(y in point(1, 60), m in -4i64..=4, k in 0i64..=(12 * 64)) {
        // h ranges over [m·a - a + 1, m·a + a) for a = 7.
        let p = theorem_params(1);
        let a = Rational::from(7);
        let h = &Rational::from(7 * m - 6) + &Rational::ratio(k, 64);
        prop_assume!(h < &Rational::from(7 * m) + &a);
        if contour_contains(&p, &h, &y).unwrap() {
            prop_assert!(contour_contains(&p, &(&Rational::from(m) * &a), &y).unwrap());
        }
    }

    #[test]
    fn colors_have_period_two_and_alternate(x in point(3, 250)) {
        let c = space_coloring(3).unwrap();
        let color = c.color(&x).unwrap();
        prop_assert_eq!(c.color(&x.shifted_diag(&Rational::from(2))).unwrap(), color);
        prop_assert_eq!(c.color(&x.shifted_diag(&Rational::one())).unwrap(), color.other());
    }

    #[test]
    fn layer_moves_with_integer_diagonal_shifts(x in point(2, 50), m in -20i64..=20) {
        let c = space_coloring(2).unwrap();
        let shifted = c.layer_index(&x.shifted_diag(&Rational::from(m))).unwrap();
        prop_assert_eq!(shifted, c.layer_index(&x).unwrap() + m);
    }

    #[test]
    fn coloring_is_total_and_recomposes(x in point(3, 250)) {
        let c = space_coloring(3).unwrap();
        let dec = c.decompose(&x).unwrap();
        let z = Rational::integer(dec.layer());
        let u = dec.thick();
        prop_assert!(u >= Rational::zero() && u < Rational::one());
        let back = dec.snake_point(c.params()).unwrap().shifted_diag(&u).shifted_diag(&z);
        prop_assert_eq!(back, x.clone());
        prop_assert_eq!(Color::from_layer(&dec.layer()), c.color(&x).unwrap());
    }

    #[test]
    fn even_translates_are_separated(x in point(2, 50), offset in point(2, 6)) {
        let c = space_coloring(2).unwrap();
        let even = |v: RVector| {
            let z = c.layer_index(&v).unwrap();
            if z.bit(0) { v.shifted_diag(&Rational::one()) } else { v }
        };
        let x = even(x);
        let mut y = even(x.try_add(&offset).unwrap());
        let (zx, mut zy) = (c.layer_index(&x).unwrap(), c.layer_index(&y).unwrap());
        if zx == zy {
            y = y.shifted_diag(&Rational::from(2));
            zy += 2;
        }
        let gap = Rational::integer((zx - zy).magnitude().clone()) - Rational::one();
        prop_assert!(linf_dist(&x, &y).unwrap() > gap);
    }

    #[test]
    fn polytope_embeddings_are_isometries(x in point(3, 20), y in point(3, 20), pick in 0usize..3) {
        let norm = match pick {
            0 => PolytopeNorm::l1(3).unwrap(),
            1 => PolytopeNorm::linf(3).unwrap(),
            _ => PolytopeNorm::new(vec![
                "1,2,0".parse().unwrap(),
                "0,1,-1/3".parse().unwrap(),
                "5/2,0,1".parse().unwrap(),
                "1,1,1".parse().unwrap(),
            ]).unwrap(),
        };
        let dist = linf_dist(&norm.embed(&x).unwrap(), &norm.embed(&y).unwrap()).unwrap();
        prop_assert_eq!(dist, norm.norm_eval(&x.try_sub(&y).unwrap()).unwrap());
    }

    #[test]
    fn polytope_pullback_inverts_embedding(x in point(2, 20)) {
        let norm = PolytopeNorm::l1(2).unwrap();
        prop_assert_eq!(norm.pullback(&norm.embed(&x).unwrap()).unwrap(), x.clone());
        let coloring = polytope_coloring(norm);
        prop_assert_eq!(coloring.color(&x).unwrap(), coloring.snake().color(&coloring.norm().embed(&x).unwrap()).unwrap());
    }
}

fn square(lo: i64, hi: i64) -> Region {
    Region::cube(2, Rational::from(lo), Rational::from(hi)).unwrap()
}

#[test]
fn witnesses_survive_fresh_reverification() {
    let c = space_coloring(2).unwrap();
    for k in 1..=7 {
        let b = Baton::unit(k).unwrap();
        for strategy in [Search::Random, Search::Segment] {
            let cfg = SearchConfig::new(strategy, 5000, k as u64, square(-20, 20));
            let report = search(&c, &b, &cfg).unwrap();
            let w = report.witness.as_ref().unwrap_or_else(|| panic!("B{k} {strategy:?}"));
            assert!(witness_holds(&c, &b, w).unwrap());
        }
    }
}

#[test]
fn identical_configs_give_identical_reports() {
    let c = space_coloring(3).unwrap();
    let b = Baton::new(vec![q("1/2"), q("1"), q("3/4")]).unwrap();
    for workers in [1, 3] {
        let mut cfg = SearchConfig::new(Search::Random, 400, 77, Region::cube(3, q("-30"), q("30")).unwrap());
        cfg.workers = workers;
        let (mut a, mut b2) = (search(&c, &b, &cfg).unwrap(), search(&c, &b, &cfg).unwrap());
        a.elapsed_ms = 0;
        b2.elapsed_ms = 0;
        assert_eq!(a, b2);
    }
}

#[test]
fn grid_over_zero_to_ten_finds_b7() {
    let c = space_coloring(2).unwrap();
    let report = search(&c, &Baton::unit(7).unwrap(), &SearchConfig::new(Search::Grid, u64::MAX, 0, square(0, 10))).unwrap();
    let w = report.witness.expect("grid witness");
    assert!(witness_holds(&c, &Baton::unit(7).unwrap(), &w).unwrap());
}
