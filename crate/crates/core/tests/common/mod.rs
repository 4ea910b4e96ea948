#![allow(dead_code)]

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tsbalance::graph::io::parse_graph6;
use tsbalance::{DistanceMatrix, Graph, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Random spanning tree plus each remaining pair with probability `extra`.
pub fn random_connected(rng: &mut impl Rng, n: usize, extra: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Every connected graph on 1 to 7 vertices.
pub fn small_connected_graphs() -> Vec<Graph> {
    let text = include_str!("../connected_le7.g6");
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l.trim().as_bytes()).unwrap())
        .collect()
}

/// `rho_A(u, v)` for all `v`, minimizing over every ordering of `A` in the
/// metric closure.
pub fn rho_by_permutations(dist: &DistanceMatrix, a: &[usize], u: usize) -> Vec<u32> {
    let n = dist.order();
    if a.is_empty() {
        return dist.row(u).to_vec();
    }
    // best[x] = cheapest walk from u through all of A ending at x in A
    let mut best = vec![u32::MAX; n];
    let mut used = vec![false; a.len()];
    fn go(
        dist: &DistanceMatrix,
        a: &[usize],
        used: &mut [bool],
        at: usize,
        cost: u32,
        depth: usize,
        best: &mut [u32],
    ) {
        if depth == a.len() {
            best[at] = best[at].min(cost);
            return;
        }
        for i in 0..a.len() {
            if !used[i] {
                used[i] = true;
                go(dist, a, used, a[i], cost + dist.get(at, a[i]), depth + 1, best);
                used[i] = false;
            }
        }
    }
    go(dist, a, &mut used, u, 0, 0, &mut best);
    (0..n)
        .map(|v| {
            a.iter()
                .map(|&x| best[x] + dist.get(x, v))
                .min()
                .unwrap()
        })
        .collect()
}

/// `rho_A(u, v)` for all `v` straight from the definition: BFS over
/// states (vertex, required vertices seen so far) in the graph itself.
pub fn rho_by_walk_bfs(g: &Graph, a: &[usize], u: usize) -> Vec<u32> {
    let n = g.order();
    let bit = |x: usize| a.iter().position(|&y| y == x).map_or(0usize, |i| 1 << i);
    let full = (1usize << a.len()) - 1;
    let states = n << a.len();
    let mut seen = vec![u32::MAX; states];
    let idx = |x: usize, s: usize| (x << a.len()) | s;
    let start = bit(u);
    seen[idx(u, start)] = 0;
    let mut queue = VecDeque::from([(u, start)]);
    while let Some((x, s)) = queue.pop_front() {
        let d = seen[idx(x, s)];
        for &y in g.neighbors(x) {
            let t = s | bit(y);
            if seen[idx(y, t)] == u32::MAX {
                seen[idx(y, t)] = d + 1;
                queue.push_back((y, t));
            }
        }
    }
    (0..n).map(|v| seen[idx(v, full)]).collect()
}

/// Subsets of `0..n` as sorted vertex lists, in mask order.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
}
