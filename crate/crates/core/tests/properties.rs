mod common;

use common::*;
use proptest::prelude::*;
use tsbalance::graph::apsp;
use tsbalance::symmetry::automorphism_orbits;
use tsbalance::ts::TsProfile;
use tsbalance::{Graph, Guards, Rational};

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=7, any::<u64>(), 0.1f64..0.7)
        .prop_map(|(n, seed, extra)| random_connected(&mut rng(seed), n, extra))
}

fn arb_probability() -> impl Strategy<Value = Rational> {
    (1i64..=20).prop_flat_map(|d| (0..=d).prop_map(move |n| r(n, d)))
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn vectors_follow_relabeling(g in arb_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng(seed));
        let h = g.relabel(&perm).unwrap();
        let guards = Guards::default();
        let pg = TsProfile::compute(&g, &apsp(&g).unwrap(), &guards).unwrap();
        let ph = TsProfile::compute(&h, &apsp(&h).unwrap(), &guards).unwrap();
        for u in 0..n {
            prop_assert_eq!(&pg.vectors()[u], &ph.vectors()[perm[u]]);
        }
    }

    #[test]
    fn orbit_mates_share_vectors(g in arb_graph()) {
        let d = apsp(&g).unwrap();
        let guards = Guards::default();
        let orbits = automorphism_orbits(&g, &d, &guards).unwrap();
        let prof = TsProfile::compute(&g, &d, &guards).unwrap();
        for class in orbits.classes() {
            for &v in &class[1..] {
                prop_assert_eq!(&prof.vectors()[class[0]], &prof.vectors()[v]);
            }
        }
    }

    #[test]
    fn polynomial_matches_expected_distance(g in arb_graph(), p in arb_probability()) {
        let prof = TsProfile::compute(&g, &apsp(&g).unwrap(), &Guards::default()).unwrap();
        let n = Rational::from_integer(g.order().into());
        for (u, w) in prof.vectors().iter().enumerate() {
            prop_assert_eq!(w.polynomial().eval(&p), prof.expected_distance(u, &p).unwrap() * &n);
        }
    }

    #[test]
    fn vector_bounds(g in arb_graph()) {
        let n = g.order() as u64;
        let prof = TsProfile::compute(&g, &apsp(&g).unwrap(), &Guards::default()).unwrap();
        for w in prof.vectors() {
            prop_assert!(w.0[1..].iter().all(|&x| 0 < x && x < (1 << n) * n * n * n));
        }
    }

    #[test]
    fn balanced_points_are_in_the_balancing_set(g in arb_graph(), p in arb_probability()) {
        let prof = TsProfile::compute(&g, &apsp(&g).unwrap(), &Guards::default()).unwrap();
        let set = prof.balancing_probabilities(&g);
        if prof.is_pts_distance_balanced(&p).unwrap() {
            match set {
                tsbalance::ts::BalancingSet::All => {}
                tsbalance::ts::BalancingSet::Finite { roots, .. } => prop_assert!(roots.exact.contains(&p)),
            }
        }
    }
}
