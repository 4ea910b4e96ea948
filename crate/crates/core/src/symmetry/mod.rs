//! Automorphism orbits and the equal-vector search.
//!
//! Orbits come from explicit automorphisms found by backtracking. Vertices
//! are first colored by degree and sorted distance row, refined once by the
//! multiset of `(distance, color)` pairs; candidate images must match color
//! and preserve every distance to the already mapped vertices. The orbit
//! partition is the union-find closure of the automorphisms found.

mod search;

pub use search::{analyze_graph, search_counterexamples, SearchHit, SearchSummary};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph};
use crate::Guards;

/// Disjoint vertex classes covering `0..n`, each sorted, ordered by their
/// smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexPartition {
    classes: Vec<Vec<usize>>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

impl VertexPartition {
    fn from_labels(labels: &[usize]) -> Self {
        let n = labels.len();
        let mut first_seen = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of = vec![0; n];
        for v in 0..n {
            let l = labels[v];
            if first_seen[l] == usize::MAX {
                first_seen[l] = classes.len();
                classes.push(Vec::new());
            }
            class_of[v] = first_seen[l];
            classes[first_seen[l]].push(v);
        }
        VertexPartition { classes, class_of }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class holding `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class_containing(&self, v: usize) -> &[usize] {
        &self.classes[self.class_of[v]]
    }

    pub fn same_class(&self, u: usize, v: usize) -> bool {
        self.class_of[u] == self.class_of[v]
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// Degree plus sorted distance row, refined once by neighbor colors.
pub(crate) fn invariant_colors(g: &Graph, dist: &DistanceMatrix) -> Vec<usize> {
    let n = g.order();
    let profile = |u: usize| {
        let mut row = dist.row(u).to_vec();
        row.sort_unstable();
        row
    };
    let base: Vec<(usize, Vec<u32>)> = (0..n).map(|u| (g.degree(u), profile(u))).collect();
    let base_colors = dense_labels(&base);
    let refined: Vec<(usize, Vec<(u32, usize)>)> = (0..n)
        .map(|u| {
            let mut seen: Vec<(u32, usize)> =
                (0..n).map(|v| (dist.get(u, v), base_colors[v])).collect();
            seen.sort_unstable();
            (base_colors[u], seen)
        })
        .collect();
    dense_labels(&refined)
}

fn dense_labels<T: Ord>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<&T> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).expect("key present"))
        .collect()
}

/// An automorphism mapping `from` to `to`, if one exists.
pub fn find_automorphism(
    g: &Graph,
    dist: &DistanceMatrix,
    colors: &[usize],
    from: usize,
    to: usize,
) -> Option<Vec<usize>> {
    if colors[from] != colors[to] {
        return None;
    }
    let n = g.order();
    // BFS order from `from`, each vertex after its parent
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    order.push(from);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[from] = to;
    used[to] = true;
    let mut search = Backtrack {
        g,
        dist,
        colors,
        order: &order,
        parent: &parent,
        image,
        used,
    };
    search.extend(1).then_some(search.image)
}

struct Backtrack<'a> {
    g: &'a Graph,
    dist: &'a DistanceMatrix,
    colors: &'a [usize],
    order: &'a [usize],
    parent: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
}

impl Backtrack<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let w = self.order[depth];
        let anchor = self.image[self.parent[w]];
        for &c in self.g.neighbors(anchor) {
            if self.used[c] || self.colors[c] != self.colors[w] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&a| self.dist.get(self.image[a], c) == self.dist.get(a, w));
            if !consistent {
                continue;
            }
            self.image[w] = c;
            self.used[c] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.image[w] = usize::MAX;
        }
        false
    }
}

/// Orbits of the automorphism group on the vertices.
pub fn automorphism_orbits(g: &Graph, dist: &DistanceMatrix, guards: &Guards) -> Result<VertexPartition> {
    guards.check_order(g.order())?;
    let n = g.order();
    let colors = invariant_colors(g, dist);
    let mut uf = UnionFind::new(n);
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        if uf.find(v) != v {
            continue;
        }
        let mut joined = false;
        for &r in &reps {
            if colors[r] != colors[v] || uf.find(r) == uf.find(v) {
                continue;
            }
            if let Some(phi) = find_automorphism(g, dist, &colors, r, v) {
                for (i, &j) in phi.iter().enumerate() {
                    uf.union(i, j);
                }
                joined = true;
                break;
            }
        }
        if !joined && uf.find(v) == v {
            reps.push(v);
        }
    }
    let labels: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    Ok(VertexPartition::from_labels(&labels))
}

pub fn is_vertex_transitive(g: &Graph, dist: &DistanceMatrix, guards: &Guards) -> Result<bool> {
    Ok(automorphism_orbits(g, dist, guards)?.len() <= 1)
}
