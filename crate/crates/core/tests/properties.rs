use num_bigint::BigInt;
use proptest::prelude::*;
use rainbow_core::constructions::{build_no_rainbow_quad_set, build_upper_bound_set, lower_bound_formula, lower_bound_witnesses};
use rainbow_core::enumeration::{
    empty_quadrilaterals, empty_rainbow_triangles, empty_triangles, empty_triangles_filtered, empty_triangles_naive,
    Budget, ColorFilter,
};
use rainbow_core::geom::point_in_triangle_strict;
use rainbow_core::horton::{empty_triangle_triples, generate_horton, visible_edges};
use rainbow_core::random::random_colored_set;
use rainbow_core::{orient, Color, ColoredPointSet, Point, Scalar};

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| Scalar::new(n, d).unwrap())
}

fn point() -> impl Strategy<Value = Point> {
    (small_scalar(), small_scalar()).prop_map(|(x, y)| Point::new(x, y))
}

fn positive() -> impl Strategy<Value = Scalar> {
    (1i64..40, 1i64..40).prop_map(|(n, d)| Scalar::new(n, d).unwrap())
}

fn huge_denominator(v: i64, bits: u32) -> Scalar {
    Scalar::new(v, BigInt::from(1) << bits).unwrap()
}

fn counts(set: &ColoredPointSet) -> (usize, usize, usize, usize) {
    let b = Budget::default();
    let q = empty_quadrilaterals(set, ColorFilter::Rainbow, &b).unwrap();
    (
        empty_triangles(set, &b).unwrap().len(),
        empty_rainbow_triangles(set, &b).unwrap().len(),
        q.convex.len(),
        q.nonconvex.len(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn orient_antisymmetric_and_cyclic(a in point(), b in point(), c in point()) {
        let s = orient(&a, &b, &c).sign();
        prop_assert_eq!(s, -orient(&a, &c, &b).sign());
        prop_assert_eq!(s, orient(&b, &c, &a).sign());
    }

    #[test]
    fn orient_translation_and_scaling(a in point(), b in point(), c in point(),
                                      dx in small_scalar(), dy in small_scalar(), s in positive()) {
        let f = |p: &Point| Point::new(&(&p.x * &s) + &dx, &(&p.y * &s) + &dy);
        prop_assert_eq!(orient(&a, &b, &c), orient(&f(&a), &f(&b), &f(&c)));
    }

    #[test]
    fn orient_exact_at_tiny_scales(ax in -9i64..9, ay in -9i64..9, bx in -9i64..9, by in -9i64..9,
                                   cx in -9i64..9, cy in -9i64..9, bits in 1u32..=256) {
        let p = |x, y| Point::from_ints(x, y);
        let q = |x, y| Point::new(huge_denominator(x, bits), huge_denominator(y, bits));
        prop_assert_eq!(orient(&p(ax, ay), &p(bx, by), &p(cx, cy)),
                        orient(&q(ax, ay), &q(bx, by), &q(cx, cy)));
    }

    #[test]
    fn inside_test_ignores_vertex_order(p in point(), a in point(), b in point(), c in point()) {
        let base = point_in_triangle_strict(&p, &a, &b, &c);
        prop_assume!(base.is_ok());
        let base = base.unwrap();
        for (x, y, z) in [(&a, &c, &b), (&b, &a, &c), (&b, &c, &a), (&c, &a, &b), (&c, &b, &a)] {
            prop_assert_eq!(point_in_triangle_strict(&p, x, y, z).unwrap(), base);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn color_relabeling_keeps_counts(k in 3usize..6, m in 1usize..4, seed in 0u64..10_000, shift in 0usize..6) {
        let set = random_colored_set(k, m, seed, None).unwrap();
        let map: Vec<Color> = (0..k).map(|c| Color(((c * 2 + shift) % k + 1) as u32)).collect();
        prop_assume!(map.iter().collect::<std::collections::BTreeSet<_>>().len() == k);
        prop_assert_eq!(counts(&set), counts(&set.recolored(&map).unwrap()));
    }

    #[test]
    fn affine_maps_keep_counts(k in 3usize..5, m in 1usize..4, seed in 0u64..10_000,
                               a in positive(), d in positive(), b in small_scalar(), e in small_scalar(), f in small_scalar()) {
        let set = random_colored_set(k, m, seed, None).unwrap();
        // x' = a x + e, y' = b x + d y + f: orientation preserving, keeps x order.
        let pts: Vec<Point> = set.points().iter()
            .map(|p| Point::new(&(&p.x * &a) + &e, &(&(&p.x * &b) + &(&p.y * &d)) + &f))
            .collect();
        let mapped = ColoredPointSet::new(pts, set.colors().to_vec(), k).unwrap();
        prop_assert_eq!(counts(&set), counts(&mapped));
    }

    #[test]
    fn rainbow_filter_matches_direct_check(k in 3usize..6, m in 1usize..5, seed in 0u64..10_000) {
        let set = random_colored_set(k, m, seed, None).unwrap();
        let b = Budget::default();
        let direct: Vec<_> = empty_triangles(&set, &b).unwrap().into_iter().filter(|w| set.is_rainbow(&w.vertices)).collect();
        prop_assert_eq!(&direct, &empty_rainbow_triangles(&set, &b).unwrap());
        prop_assert_eq!(direct, empty_triangles_filtered(&set, ColorFilter::Rainbow, &b).unwrap());
    }

    #[test]
    fn random_sets_meet_lower_bound(k in 3usize..8, m in 1usize..6, seed in 0u64..10_000) {
        let set = random_colored_set(k, m, seed, None).unwrap();
        let bound = lower_bound_formula(k, m).unwrap();
        prop_assert!(empty_rainbow_triangles(&set, &Budget::default()).unwrap().len() as u128 >= bound);
        prop_assert!(lower_bound_witnesses(&set).unwrap().len() as u128 >= bound);
    }
}

#[test]
fn horton_recursion_matches_naive_up_to_64() {
    let b = Budget::default();
    for n in [33, 40, 48, 57, 64] {
        let h = generate_horton(n).unwrap();
        let set = ColoredPointSet::uncolored(h.points().to_vec()).unwrap();
        let naive: Vec<Vec<usize>> = empty_triangles_naive(&set, &b).unwrap().into_iter().map(|w| w.vertices).collect();
        let rec: Vec<Vec<usize>> = empty_triangle_triples(&h).into_iter().map(|t| t.to_vec()).collect();
        assert_eq!(naive, rec, "n={n}");
    }
}

#[test]
fn mixed_parity_triangles_use_a_visible_edge() {
    for n in [7, 16, 29, 64] {
        let h = generate_horton(n).unwrap();
        let edges: std::collections::BTreeSet<(usize, usize)> = visible_edges(&h).iter().map(|e| (e.i, e.j)).collect();
        for t in empty_triangle_triples(&h) {
            let odd = t.iter().filter(|&&i| i % 2 == 1).count();
            if odd == 0 || odd == 3 {
                continue;
            }
            let same: Vec<usize> = t.iter().copied().filter(|&i| (i % 2 == 1) == (odd == 2)).collect();
            assert!(edges.contains(&(same[0], same[1])), "n={n} triangle {t:?}");
        }
    }
}

#[test]
fn upper_bound_rainbow_triangles_span_three_clusters() {
    for (k, m) in [(4, 4), (5, 7), (6, 3)] {
        let (set, schedule) = build_upper_bound_set(k, m).unwrap();
        let mut cluster = vec![usize::MAX; set.len()];
        for (i, roster) in schedule.clusters.iter().enumerate() {
            for p in roster.blockers.iter().map(|b| b.point).chain(roster.fillers.iter().copied()) {
                cluster[p] = i;
            }
        }
        assert!(cluster.iter().all(|&c| c != usize::MAX));
        for (p, &c) in cluster.iter().enumerate() {
            assert_eq!(set.color(p).index(), c, "cluster {c} is not monochromatic");
        }
        for w in empty_rainbow_triangles(&set, &Budget::default()).unwrap() {
            let (a, b, c) = (cluster[w.vertices[0]], cluster[w.vertices[1]], cluster[w.vertices[2]]);
            assert!(a != b && b != c && a != c, "k={k} m={m} {w:?}");
        }
    }
}

#[test]
fn constructions_meet_lower_bound() {
    for (k, m) in [(5, 5), (7, 3)] {
        let (set, _) = build_upper_bound_set(k, m).unwrap();
        assert!(lower_bound_witnesses(&set).unwrap().len() as u128 >= lower_bound_formula(k, m).unwrap());
    }
    let c = build_no_rainbow_quad_set(5).unwrap();
    let bound = lower_bound_formula(5, c.m).unwrap();
    assert!(lower_bound_witnesses(&c.set).unwrap().len() as u128 >= bound);
}

#[test]
fn no_quad_guards_hold() {
    for k in 4..=6 {
        build_no_rainbow_quad_set(k).unwrap().check_guards().unwrap();
    }
}
