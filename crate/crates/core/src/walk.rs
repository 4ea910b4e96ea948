//! Shortest visiting walks.
//!
//! `rho(A, u, v)` is the length of a shortest walk from `u` to `v` that
//! passes through every vertex of `A`. Walks may revisit vertices, so an
//! optimal walk is a concatenation of geodesics between consecutive required
//! vertices, and the problem reduces to a Held-Karp recursion on the
//! distance matrix:
//!
//! ```text
//! cost({j}, j) = d(u, j)
//! cost(S, j)   = min_{i in S \ {j}} cost(S \ {j}, i) + d(i, j)
//! rho(S, u, v) = min_{j in S} cost(S, j) + d(j, v)
//! ```
//!
//! Subsets are processed one cardinality layer at a time. Within a layer
//! the subsets are listed in colexicographic order (which is ascending
//! numeric order of their bitmasks), so a subset's position equals its
//! combinatorial-number-system rank and predecessors are found without
//! hashing. Only two layers are resident at once.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::Guards;

/// A set of required vertices, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VisitSet(Vec<usize>);

impl VisitSet {
    pub fn new(order: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        if let Some(&bad) = v.iter().find(|&&x| x >= order) {
            return Err(Error::VertexOutOfRange { vertex: bad, order });
        }
        v.sort_unstable();
        v.dedup();
        Ok(VisitSet(v))
    }

    pub fn empty() -> Self {
        VisitSet(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        VisitSet((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    /// Bitmask form; all members must be below 64.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

/// Pascal's triangle up to row `n`.
#[derive(Debug, Clone)]
pub(crate) struct Binomials {
    rows: Vec<Vec<usize>>,
}

impl Binomials {
    pub(crate) fn new(n: usize) -> Self {
        let mut rows = vec![vec![1usize]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![1usize; i + 1];
            for j in 1..i {
                row[j] = prev[j - 1] + prev[j];
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    #[inline]
    pub(crate) fn get(&self, n: usize, k: usize) -> usize {
        if k > n {
            0
        } else {
            self.rows[n][k]
        }
    }

    /// Colexicographic rank of `mask` among subsets of its cardinality.
    #[inline]
    pub(crate) fn rank(&self, mut mask: u64) -> usize {
        let mut rank = 0;
        let mut i = 1;
        while mask != 0 {
            let b = mask.trailing_zeros() as usize;
            rank += self.get(b, i);
            i += 1;
            mask &= mask - 1;
        }
        rank
    }
}

/// Next larger integer with the same number of set bits.
#[inline]
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// All `k`-subsets of `0..m` as bitmasks in ascending (colex) order.
pub(crate) fn combinations(m: usize, k: usize) -> Vec<u64> {
    if k == 0 {
        return vec![0];
    }
    if k > m {
        return Vec::new();
    }
    let last = ((1u64 << k) - 1) << (m - k);
    let mut out = Vec::new();
    let mut x = (1u64 << k) - 1;
    loop {
        out.push(x);
        if x == last {
            break;
        }
        x = next_combination(x);
    }
    out
}

/// One cardinality layer of the walk recursion.
///
/// Masks index into the engine's point list. `costs[r * k + p]` is the cost
/// of the walk that visits the `r`-th mask and ends at its `p`-th lowest
/// member.
#[derive(Debug, Clone)]
pub struct Layer {
    pub k: usize,
    pub masks: Vec<u64>,
    pub costs: Vec<u16>,
}

impl Layer {
    pub fn costs_of(&self, rank: usize) -> &[u16] {
        &self.costs[rank * self.k..(rank + 1) * self.k]
    }
}

/// Layer-by-layer evaluation of the walk recursion from one source over a
/// chosen list of points (all vertices, or just the required ones).
pub struct LayeredWalk<'a> {
    dist: &'a DistanceMatrix,
    source: usize,
    points: Vec<usize>,
    binom: Binomials,
    current: Option<Layer>,
}

impl<'a> LayeredWalk<'a> {
    pub fn new(dist: &'a DistanceMatrix, source: usize, points: Vec<usize>) -> Self {
        assert!(points.len() < 64, "at most 63 required points");
        let binom = Binomials::new(points.len());
        LayeredWalk {
            dist,
            source,
            points,
            binom,
            current: None,
        }
    }

    pub fn over_all_vertices(dist: &'a DistanceMatrix, source: usize) -> Self {
        Self::new(dist, source, (0..dist.order()).collect())
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    /// The most recently computed layer.
    pub fn current(&self) -> Option<&Layer> {
        self.current.as_ref()
    }

    /// Runs to the last layer (the full point set).
    pub fn finish(&mut self) -> Option<&Layer> {
        while self.advance().is_some() {}
        self.current.as_ref()
    }

    /// Computes the next layer (cardinality 1 first). `None` after the last.
    pub fn advance(&mut self) -> Option<&Layer> {
        let m = self.points.len();
        let k = self.current.as_ref().map_or(1, |l| l.k + 1);
        if k > m {
            return None;
        }
        let masks = combinations(m, k);
        let mut costs = Vec::with_capacity(masks.len() * k);
        match &self.current {
            None => {
                costs.extend(self.points.iter().map(|&p| self.dist.get(self.source, p) as u16));
            }
            Some(prev) => {
                let mut members = Vec::with_capacity(k);
                for &mask in &masks {
                    members.clear();
                    let mut rest = mask;
                    while rest != 0 {
                        members.push(rest.trailing_zeros() as usize);
                        rest &= rest - 1;
                    }
                    for (pos, &j) in members.iter().enumerate() {
                        let sub = mask ^ (1 << j);
                        let sub_costs = prev.costs_of(self.binom.rank(sub));
                        let pj = self.points[j];
                        let best = members
                            .iter()
                            .enumerate()
                            .filter(|&(q, _)| q != pos)
                            .map(|(q, &i)| {
                                let at = if q < pos { q } else { q - 1 };
                                sub_costs[at] + self.dist.get(self.points[i], pj) as u16
                            })
                            .min()
                            .expect("layer k >= 2 has a predecessor");
                        costs.push(best);
                    }
                }
            }
        }
        self.current = Some(Layer { k, masks, costs });
        self.current.as_ref()
    }

    /// `rho` from the source to every vertex for the `rank`-th subset of the
    /// current layer, written into `out` (length `n`).
    pub fn rho_row(&self, layer: &Layer, rank: usize, out: &mut [u32]) {
        let mask = layer.masks[rank];
        let costs = layer.costs_of(rank);
        out.fill(u32::MAX);
        let mut rest = mask;
        let mut pos = 0;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let c = u32::from(costs[pos]);
            pos += 1;
            let row = self.dist.row(self.points[j]);
            for (o, &d) in out.iter_mut().zip(row) {
                *o = (*o).min(c + d);
            }
        }
    }
}

fn check_order(g: &Graph, guards: &Guards) -> Result<()> {
    guards.check_order(g.order())
}

/// Shortest walk length from `u` to `v` through every vertex of `a`.
pub fn rho(dist: &DistanceMatrix, a: &VisitSet, u: usize, v: usize, guards: &Guards) -> Result<u32> {
    let n = dist.order();
    for w in [u, v].into_iter().chain(a.vertices().iter().copied()) {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, order: n });
        }
    }
    if a.is_empty() {
        return Ok(dist.get(u, v));
    }
    guards.check_order(a.len()).map_err(|_| {
        Error::guard("required set size", a.len(), guards.max_order)
    })?;
    let mut walk = LayeredWalk::new(dist, u, a.vertices().to_vec());
    let costs = walk.finish().expect("nonempty set has a layer").costs_of(0);
    Ok(a.vertices()
        .iter()
        .zip(costs)
        .map(|(&j, &c)| u32::from(c) + dist.get(j, v))
        .min()
        .expect("nonempty"))
}

/// Full table of `cost(S, j)` for one source, every nonempty `S` and
/// `j in S`.
#[derive(Debug, Clone)]
pub struct WalkCostTable {
    source: usize,
    geodesics: Vec<u32>,
    layers: Vec<Layer>,
    binom: Binomials,
}

impl WalkCostTable {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn order(&self) -> usize {
        self.geodesics.len()
    }

    /// Cost of the shortest walk from the source covering `s` and ending at
    /// `j`, or `None` unless `j` is in the nonempty set `s`.
    pub fn cost(&self, s: &VisitSet, j: usize) -> Option<u32> {
        let k = s.len();
        if k == 0 || !s.contains(j) {
            return None;
        }
        let layer = &self.layers[k - 1];
        let rank = self.binom.rank(s.mask());
        let pos = s.vertices().iter().position(|&x| x == j)?;
        Some(u32::from(layer.costs_of(rank)[pos]))
    }

    /// `rho(a, source, v)` derived from the table.
    pub fn rho(&self, dist: &DistanceMatrix, a: &VisitSet, v: usize) -> u32 {
        if a.is_empty() {
            return self.geodesics[v];
        }
        a.vertices()
            .iter()
            .map(|&j| self.cost(a, j).expect("member") + dist.get(j, v))
            .min()
            .expect("nonempty")
    }
}

pub fn rho_table(g: &Graph, dist: &DistanceMatrix, u: usize, guards: &Guards) -> Result<WalkCostTable> {
    check_order(g, guards)?;
    g.check_vertex(u)?;
    let mut walk = LayeredWalk::over_all_vertices(dist, u);
    let mut layers = Vec::with_capacity(g.order());
    while let Some(layer) = walk.advance() {
        layers.push(layer.clone());
    }
    Ok(WalkCostTable {
        source: u,
        geodesics: dist.row(u).to_vec(),
        layers,
        binom: Binomials::new(g.order()),
    })
}

/// `rho_{V}(u, v)` for every `v`: shortest walks from `u` covering the whole
/// vertex set.
pub fn covering_walks(dist: &DistanceMatrix, u: usize) -> Vec<u32> {
    let mut walk = LayeredWalk::over_all_vertices(dist, u);
    let mut row = dist.row(u).to_vec();
    walk.finish();
    if let Some(layer) = walk.current() {
        walk.rho_row(layer, 0, &mut row);
    }
    row
}

/// Whether the graph has a Hamiltonian cycle, read off as
/// `rho_V(0, 0) == n`.
pub fn is_hamiltonian(g: &Graph, dist: &DistanceMatrix, guards: &Guards) -> Result<bool> {
    if g.order() < 3 {
        return Err(Error::InvalidParameter(format!(
            "Hamiltonicity needs at least 3 vertices, got {}",
            g.order()
        )));
    }
    check_order(g, guards)?;
    Ok(covering_walks(dist, 0)[0] as usize == g.order())
}

/// Whether every pair of distinct vertices is joined by a Hamiltonian path,
/// i.e. `rho_V(u, v) == n - 1` for all `u != v`.
pub fn is_hamilton_connected(g: &Graph, dist: &DistanceMatrix, guards: &Guards) -> Result<bool> {
    use rayon::prelude::*;
    check_order(g, guards)?;
    let n = g.order();
    Ok((0..n).into_par_iter().all(|u| {
        let row = covering_walks(dist, u);
        (0..n).filter(|&v| v != u).all(|v| row[v] as usize == n - 1)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::apsp;
    use crate::graph::builtin::*;

    fn set(n: usize, v: &[usize]) -> VisitSet {
        VisitSet::new(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn colex_rank_matches_enumeration() {
        let b = Binomials::new(10);
        for k in 0..=10 {
            for (r, &m) in combinations(10, k).iter().enumerate() {
                assert_eq!(b.rank(m), r);
            }
            assert_eq!(combinations(10, k).len(), b.get(10, k));
        }
    }

    #[test]
    fn rho_examples() {
        let g = complete(5);
        let d = apsp(&g).unwrap();
        let guards = Guards::default();
        assert_eq!(rho(&d, &set(5, &[1, 2]), 0, 3, &guards).unwrap(), 3);
        let c4 = apsp(&cycle(4).unwrap()).unwrap();
        assert_eq!(rho(&c4, &set(4, &[2]), 0, 0, &guards).unwrap(), 4);
        assert_eq!(rho(&c4, &VisitSet::empty(), 0, 2, &guards).unwrap(), 2);
        assert!(rho(&c4, &VisitSet::empty(), 0, 9, &guards).is_err());
        assert!(VisitSet::new(4, [4]).is_err());
    }

    #[test]
    fn table_examples() {
        let guards = Guards::default();
        let k3 = complete(3);
        let d = apsp(&k3).unwrap();
        let t = rho_table(&k3, &d, 0, &guards).unwrap();
        assert_eq!(t.cost(&set(3, &[1]), 1), Some(1));
        assert_eq!(t.cost(&set(3, &[1, 2]), 2), Some(2));
        assert_eq!(t.cost(&set(3, &[1, 2]), 0), None);

        let p3 = path(3).unwrap();
        let d = apsp(&p3).unwrap();
        let t = rho_table(&p3, &d, 0, &guards).unwrap();
        assert_eq!(t.cost(&set(3, &[2]), 2), Some(2));
        assert_eq!(t.cost(&set(3, &[1, 2]), 2), Some(2));
        assert_eq!(t.cost(&set(3, &[1, 2]), 1), Some(3));
    }

    #[test]
    fn order_guard() {
        let g = cycle(8).unwrap();
        let d = apsp(&g).unwrap();
        let guards = Guards { max_order: 6, ..Guards::default() };
        assert!(matches!(rho_table(&g, &d, 0, &guards), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn hamiltonicity() {
        let guards = Guards::default();
        let check = |g: Graph| {
            let d = apsp(&g).unwrap();
            (
                is_hamiltonian(&g, &d, &guards).unwrap(),
                is_hamilton_connected(&g, &d, &guards).unwrap(),
            )
        };
        assert_eq!(check(cycle(5).unwrap()), (true, false));
        assert!(!check(path(4).unwrap()).0);
        assert_eq!(check(complete(4)), (true, true));
        assert!(check(wheel(7).unwrap()).1);
        let k2 = complete(2);
        let d = apsp(&k2).unwrap();
        assert!(is_hamiltonian(&k2, &d, &guards).is_err());
        assert!(is_hamilton_connected(&k2, &d, &guards).unwrap());
    }
}
