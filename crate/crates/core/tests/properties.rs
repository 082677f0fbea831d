use proptest::prelude::*;

use sl3_billiards_core::billiards::{
    billiard_trajectory, build_ztilde, dynamics_on_walls, lambda_q, step1,
};
use sl3_billiards_core::lattice::{adjacent_dominant_alcoves, classify};
use sl3_billiards_core::treegen::{phi, verify_lemma, LambdaVariant, NodeType};
use sl3_billiards_core::{Label, LabelledPoint, PointClass, PointMultiset, Weight};

fn plain_wall_points(ell: i64, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    for a in 1..bound {
        for b in 1..bound {
            let mu = Weight::new(a, b);
            if matches!(classify(mu, ell), PointClass::Wall(_)) {
                out.push(mu);
            }
        }
    }
    out
}

// Z̃ rebuilt one starting seed at a time, in a caller-chosen order.
fn ztilde_by_seed(ell: i64, max_n: u32, order: &[usize]) -> PointMultiset {
    let (x, seeds) = step1(ell, max_n).unwrap();
    let mut z = x.clone();
    for &i in order {
        let d = dynamics_on_walls(seeds[i], ell, max_n).unwrap();
        z.union_with(&d.points);
        let mut qs: Vec<_> = d.seeds.iter().map(|(p, m)| (*p, m)).collect();
        qs.reverse();
        for (q, m) in qs {
            z.union_with(&lambda_q(q, ell, max_n).unwrap().scaled(m));
        }
    }
    z.difference(&x)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn truncation_is_sound(ell in 3i64..8, n in 0u32..70, extra in 0u32..40) {
        let small = build_ztilde(ell, n).unwrap();
        let large = build_ztilde(ell, n + extra).unwrap();
        prop_assert_eq!(large.restrict(n), small);
    }

    #[test]
    fn seed_order_does_not_matter(ell in 3i64..7, n in 20u32..90, rot in 0usize..5) {
        let seeds = step1(ell, n).unwrap().1.len();
        let mut order: Vec<usize> = (0..seeds).collect();
        if seeds > 0 {
            order.rotate_left(rot % seeds);
            order.reverse();
        }
        prop_assert_eq!(ztilde_by_seed(ell, n, &order), build_ztilde(ell, n).unwrap());
    }

    #[test]
    fn ztilde_points_are_strictly_dominant(ell in 3i64..8, n in 0u32..100) {
        let z = build_ztilde(ell, n).unwrap();
        prop_assert!(z.iter().all(|(p, _)| p.mu.is_strictly_dominant()));
    }

    #[test]
    fn lemma_holds(ell in 3i64..8, n in 0u32..80) {
        let r = verify_lemma(ell, n, LambdaVariant::Corrected).unwrap();
        prop_assert!(r.is_equal(), "{:?}", r.discrepancies);
    }

    #[test]
    fn billiards_stay_inside_with_two_exponents(
        ell in 3i64..10,
        pick in 0usize..1000,
        n0 in 0u32..50,
        k0 in 0i32..5,
    ) {
        let walls = plain_wall_points(ell, 3 * ell);
        let mu = walls[pick % walls.len()];
        let q = LabelledPoint::new(mu, Label::new(n0, k0));
        for alcove in adjacent_dominant_alcoves(mu, ell).unwrap() {
            let traj = billiard_trajectory(q, &alcove, n0 + 120).unwrap();
            for w in traj.windows(2) {
                let (p, next) = (w[0], w[1]);
                let dn = next.label.n - p.label.n;
                prop_assert!(dn == 2 || dn == 3);
                prop_assert_eq!(dn == 3, p.mu == next.mu);
            }
            for p in &traj[1..] {
                prop_assert!(alcove.interior_contains(p.mu));
                prop_assert!((k0..=k0 + 1).contains(&p.label.k));
            }
        }
    }

    #[test]
    fn tree_map_properties(ell in 3i64..8, depth in 20u32..90) {
        let lambda = Weight::new(ell - 1, 1);
        for node in phi(lambda, ell, depth).unwrap() {
            let class = classify(node.image.mu, ell);
            match node.handle.node_type() {
                NodeType::AlmostCorner => {
                    prop_assert!(matches!(class, PointClass::AlmostCorner(_)));
                }
                NodeType::Wall => prop_assert!(class.is_wall_point()),
                NodeType::Interior => prop_assert!(class.is_regular()),
            }
            if let Some(parent) = node.parent_image {
                let d = node.image.mu - parent.mu;
                prop_assert!(d == Weight::ZERO
                    || sl3_billiards_core::Direction::from_vector(d).is_some());
            }
        }
    }
}
