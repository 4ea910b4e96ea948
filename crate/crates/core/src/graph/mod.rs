//! Simple undirected graphs on vertices `0..n`, their text formats, named
//! constructions, shortest paths and the classical balance checks.

mod balance;
pub mod builtin;
mod distance;
pub mod io;

pub use balance::{
    edge_balance, is_distance_balanced, is_nicely_distance_balanced, median_vertices,
    nice_balance_constant, total_distance, EdgeBalance,
};
pub use distance::{apsp, DistanceMatrix};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An immutable simple undirected graph. Neighbor lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Basic structural predicates of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub connected: bool,
    pub bipartite: bool,
    /// The common degree, if the graph is regular.
    pub regular: Option<usize>,
    /// Degrees in non-increasing order.
    pub degree_sequence: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_unsorted_adjacency(adj))
    }

    /// Trusted constructor for symmetric, loop-free adjacency lists.
    pub(crate) fn from_unsorted_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    /// BFS hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].map(|d| d + 1);
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Returns a pair of mutually unreachable vertices, if any.
    pub fn disconnected_pair(&self) -> Option<(usize, usize)> {
        if self.order() == 0 {
            return None;
        }
        self.bfs(0)
            .iter()
            .position(Option::is_none)
            .map(|v| (0, v))
    }

    pub fn is_connected(&self) -> bool {
        self.disconnected_pair().is_none()
    }

    pub fn require_connected(&self) -> Result<()> {
        match self.disconnected_pair() {
            Some((u, v)) => Err(Error::Disconnected(u, v)),
            None => Ok(()),
        }
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        let mut queue = VecDeque::new();
        for start in 0..self.order() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let s = side[u].unwrap();
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!s);
                            queue.push_back(v);
                        }
                        Some(t) if t == s => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn classify(&self) -> Classification {
        Classification {
            connected: self.is_connected(),
            bipartite: self.is_bipartite(),
            regular: self.regular_degree(),
            degree_sequence: self.degree_sequence(),
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has order {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v]).collect();
        }
        Ok(Self::from_unsorted_adjacency(adj))
    }
}

#[cfg(test)]
mod tests {
    use super::builtin::*;
    use super::*;

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (2, 2)]),
            Err(Error::SelfLoop { vertex: 2 })
        );
    }

    #[test]
    fn classify_examples() {
        let k33 = complete_bipartite(3, 3);
        let c = k33.classify();
        assert!(c.bipartite && c.connected);
        assert_eq!(c.regular, Some(3));

        assert_eq!(wheel(7).unwrap().classify().regular, None);

        let c6 = cycle(6).unwrap().classify();
        assert!(c6.bipartite);
        assert_eq!(c6.regular, Some(2));

        assert!(!cycle(5).unwrap().is_bipartite());
    }

    #[test]
    fn disconnected_pair_reported() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.require_connected(), Err(Error::Disconnected(0, 2)));
        assert!(!g.classify().connected);
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = path(4).unwrap();
        let h = g.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h, g);
        let h = g.relabel(&[1, 0, 2, 3]).unwrap();
        assert!(h.has_edge(0, 1) && h.has_edge(0, 2) && h.has_edge(2, 3));
        assert!(!h.has_edge(1, 2));
        assert!(g.relabel(&[0, 0, 1, 2]).is_err());
    }
}
