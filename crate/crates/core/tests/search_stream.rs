mod common;

use common::*;
use tsbalance::graph::apsp;
use tsbalance::graph::io::parse_graph6;
use tsbalance::symmetry::{automorphism_orbits, search_counterexamples, SearchHit};
use tsbalance::ts::total_distance_vector;
use tsbalance::Guards;

#[test]
fn exhaustive_stream_up_to_seven_vertices() {
    let input = include_str!("connected_le7.g6");
    let guards = Guards::default();
    let mut out = Vec::new();
    let summary = search_counterexamples(input.as_bytes(), &mut out, &guards, 64).unwrap();
    assert_eq!(summary.processed, small_connected_graphs().len());
    assert_eq!(summary.skipped, 0);

    let text = String::from_utf8(out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), summary.hits + 1);
    for line in &lines[..summary.hits] {
        let hit: SearchHit = serde_json::from_str(line).unwrap();
        let g = parse_graph6(hit.graph6.as_bytes()).unwrap();
        let d = apsp(&g).unwrap();
        let orbits = automorphism_orbits(&g, &d, &guards).unwrap();
        assert!(!orbits.same_class(hit.u, hit.v));
        assert_eq!(total_distance_vector(&g, &d, hit.u, &guards).unwrap(), hit.vector);
        assert_eq!(total_distance_vector(&g, &d, hit.v, &guards).unwrap(), hit.vector);
    }
    eprintln!("connected graphs on at most 7 vertices: {summary:?}");
}

#[test]
fn malformed_and_oversized_lines_are_skipped() {
    let big = tsbalance::graph::io::emit_graph6_string(&tsbalance::graph::builtin::cycle(25).unwrap());
    let input = format!(">>graph6<<\nBw\n???\n{big}\nC~\n");
    let mut out = Vec::new();
    let s = search_counterexamples(input.as_bytes(), &mut out, &Guards::default(), 1).unwrap();
    assert_eq!((s.processed, s.skipped, s.hits), (2, 2, 0));
}

#[test]
fn six_vertex_pair_with_equal_vectors_in_distinct_orbits() {
    // triangle 0-3-5, edge 5-4, leaves 1 and 2 on vertex 4
    let g = parse_graph6(b"ECYW").unwrap();
    let hits = tsbalance::symmetry::analyze_graph(&g, &Guards::default()).unwrap();
    assert_eq!(hits.len(), 1);
    let hit = &hits[0];
    assert_eq!((hit.u, hit.v), (4, 5));
    assert_eq!(hit.vector.0, [7, 98, 363, 618, 551, 252, 47]);
    // the orbit of 4 is {4}: any automorphism fixes the unique vertex with
    // two leaves, so 4 and 5 are not exchangeable
    assert_eq!((hit.orbit_u.clone(), hit.orbit_v.clone()), (vec![4], vec![5]));
    for (a, w) in [(4, hit.vector.clone()), (5, hit.vector.clone())] {
        let d = apsp(&g).unwrap();
        let mut brute = vec![0u64; 7];
        for set in subsets(6) {
            brute[set.len()] += rho_by_walk_bfs(&g, &set, a).iter().map(|&x| x as u64).sum::<u64>();
        }
        assert_eq!(brute, w.0);
        assert_eq!(total_distance_vector(&g, &d, a, &Guards::default()).unwrap(), w);
    }
}
