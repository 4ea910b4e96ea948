//! Probabilistic travelling-salesman centrality.
//!
//! Each vertex independently requires a visit with probability `p`; the
//! expected distance `d^p(u)` is the mean, over the random required set `A`
//! and a uniform endpoint `v`, of `rho_A(u, v)`. Grouping subsets by size
//! gives the total distance vector `W(u) = (W_0, ..., W_n)` with
//! `W_k = sum_{|A| = k} sum_v rho_A(u, v)`, and then
//!
//! ```text
//! n d^p(u) = P_u(p) = sum_k p^k (1 - p)^(n - k) W_k(u)
//! ```
//!
//! A connected graph is pTS-distance-balanced exactly when `d^p` is
//! constant, so everything here reduces to exact comparisons of the
//! polynomials `P_u`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{check_probability, int, IntPolynomial, Rational, RootOutcome, RootSet};
use crate::graph::{DistanceMatrix, Graph};
use crate::walk::LayeredWalk;
use crate::Guards;

/// `(W_0, ..., W_n)` for one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TotalDistanceVector(pub Vec<u64>);

impl TotalDistanceVector {
    /// The graph order `n` (the vector has `n + 1` entries).
    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_weights(&self.0)
    }

    /// `d^p(u) = P_u(p) / n`.
    pub fn expected_distance(&self, p: &Rational) -> Rational {
        let n = self.order();
        bernstein_sum(&self.0, p) / int(n as u64)
    }
}

/// `sum_k p^k (1-p)^(n-k) w_k` with `n = w.len() - 1`.
fn bernstein_sum(w: &[u64], p: &Rational) -> Rational {
    let n = w.len() - 1;
    let q = int(1) - p;
    let mut p_pow = vec![int(1)];
    let mut q_pow = vec![int(1)];
    for i in 0..n {
        p_pow.push(&p_pow[i] * p);
        q_pow.push(&q_pow[i] * &q);
    }
    w.iter()
        .enumerate()
        .map(|(k, &wk)| &p_pow[k] * &q_pow[n - k] * int(wk))
        .sum()
}

/// Total distance vector of `u`, aggregated from one layered pass.
pub fn total_distance_vector(
    g: &Graph,
    dist: &DistanceMatrix,
    u: usize,
    guards: &Guards,
) -> Result<TotalDistanceVector> {
    guards.check_order(g.order())?;
    g.check_vertex(u)?;
    Ok(vector_unchecked(dist, u))
}

fn vector_unchecked(dist: &DistanceMatrix, u: usize) -> TotalDistanceVector {
    let n = dist.order();
    let mut w = vec![0u64; n + 1];
    w[0] = dist.transmission(u);
    let mut walk = LayeredWalk::over_all_vertices(dist, u);
    let mut row = vec![0u32; n];
    while walk.advance().is_some() {
        let layer = walk.current().expect("just advanced");
        let mut sum = 0u64;
        for rank in 0..layer.masks.len() {
            walk.rho_row(layer, rank, &mut row);
            sum += row.iter().map(|&x| u64::from(x)).sum::<u64>();
        }
        w[layer.k] = sum;
    }
    TotalDistanceVector(w)
}

/// Vectors of all vertices; sources are processed in parallel.
pub fn total_distance_vectors(
    g: &Graph,
    dist: &DistanceMatrix,
    guards: &Guards,
) -> Result<Vec<TotalDistanceVector>> {
    guards.check_order(g.order())?;
    Ok((0..g.order())
        .into_par_iter()
        .map(|u| vector_unchecked(dist, u))
        .collect())
}

pub fn expected_distance(
    g: &Graph,
    dist: &DistanceMatrix,
    u: usize,
    p: &Rational,
    guards: &Guards,
) -> Result<Rational> {
    check_probability(p)?;
    Ok(total_distance_vector(g, dist, u, guards)?.expected_distance(p))
}

/// `P_u(x) = sum_k x^k (1-x)^(n-k) W_k(u)`, so that `P_u(p) = n d^p(u)`.
pub fn balance_polynomial(
    g: &Graph,
    dist: &DistanceMatrix,
    u: usize,
    guards: &Guards,
) -> Result<IntPolynomial> {
    Ok(total_distance_vector(g, dist, u, guards)?.polynomial())
}

/// `sum_{A} p^|A| (1-p)^(n-|A|)` enumerated over all `2^n` subsets.
pub fn probability_mass(n: usize, p: &Rational) -> Rational {
    let q = int(1) - p;
    let weights: Vec<Rational> = (0..=n)
        .map(|k| num_traits::pow(p.clone(), k) * num_traits::pow(q.clone(), n - k))
        .collect();
    (0u64..1 << n)
        .map(|mask| &weights[mask.count_ones() as usize])
        .sum()
}

/// Per-cardinality counts `c_k = sum_{|A|=k} |W^A_{uv}|` for an edge, where
/// `W^A_{uv}` holds the vertices `z` with `rho_A(z, u) < rho_A(z, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSideCounts {
    pub closer_to_u: Vec<u64>,
    pub closer_to_v: Vec<u64>,
}

impl EdgeSideCounts {
    /// `(w^p_uv, w^p_vu)`.
    pub fn expected(&self, p: &Rational) -> (Rational, Rational) {
        (bernstein_sum(&self.closer_to_u, p), bernstein_sum(&self.closer_to_v, p))
    }
}

/// Classifies every vertex against both ends of the edge for every subset.
/// Uses `rho_A(z, u) = rho_A(u, z)` so only the tables of `u` and `v` are
/// needed; the two layered walks run in lockstep.
pub fn edge_side_counts(
    g: &Graph,
    dist: &DistanceMatrix,
    u: usize,
    v: usize,
    guards: &Guards,
) -> Result<EdgeSideCounts> {
    guards.check_order(g.order())?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(crate::Error::NotAdjacent(u, v));
    }
    let n = g.order();
    let mut cu = vec![0u64; n + 1];
    let mut cv = vec![0u64; n + 1];
    let tally = |a: &[u32], b: &[u32], k: usize, cu: &mut [u64], cv: &mut [u64]| {
        for (x, y) in a.iter().zip(b) {
            match x.cmp(y) {
                std::cmp::Ordering::Less => cu[k] += 1,
                std::cmp::Ordering::Greater => cv[k] += 1,
                std::cmp::Ordering::Equal => {}
            }
        }
    };
    tally(dist.row(u), dist.row(v), 0, &mut cu, &mut cv);
    let mut wu = LayeredWalk::over_all_vertices(dist, u);
    let mut wv = LayeredWalk::over_all_vertices(dist, v);
    let (mut ru, mut rv) = (vec![0u32; n], vec![0u32; n]);
    while wu.advance().is_some() {
        wv.advance();
        let (lu, lv) = (wu.current().unwrap(), wv.current().unwrap());
        for rank in 0..lu.masks.len() {
            wu.rho_row(lu, rank, &mut ru);
            wv.rho_row(lv, rank, &mut rv);
            tally(&ru, &rv, lu.k, &mut cu, &mut cv);
        }
    }
    Ok(EdgeSideCounts {
        closer_to_u: cu,
        closer_to_v: cv,
    })
}

/// `(w^p_uv, w^p_vu)`: expected sizes of the two sides of the edge.
pub fn w_p_edge(
    g: &Graph,
    dist: &DistanceMatrix,
    u: usize,
    v: usize,
    p: &Rational,
    guards: &Guards,
) -> Result<(Rational, Rational)> {
    check_probability(p)?;
    Ok(edge_side_counts(g, dist, u, v, guards)?.expected(p))
}

/// pTS-balance checked edge by edge from the `w^p` values.
pub fn is_pts_distance_balanced_by_edges(
    g: &Graph,
    dist: &DistanceMatrix,
    p: &Rational,
    guards: &Guards,
) -> Result<bool> {
    check_probability(p)?;
    for (u, v) in g.edges() {
        let (a, b) = edge_side_counts(g, dist, u, v, guards)?.expected(p);
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The set of `p in [0, 1]` at which a graph is pTS-distance-balanced.
#[derive(Debug, Clone)]
pub enum BalancingSet {
    /// Every `p`: the graph is TS-distance-balanced.
    All,
    /// Finitely many `p`, the roots in `[0, 1]` of `gcd`.
    Finite { gcd: IntPolynomial, roots: RootSet },
}

impl BalancingSet {
    pub fn is_all(&self) -> bool {
        matches!(self, BalancingSet::All)
    }
}

/// Total distance vectors of every vertex, with the derived pTS queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TsProfile {
    vectors: Vec<TotalDistanceVector>,
}

impl TsProfile {
    pub fn compute(g: &Graph, dist: &DistanceMatrix, guards: &Guards) -> Result<Self> {
        Ok(TsProfile {
            vectors: total_distance_vectors(g, dist, guards)?,
        })
    }

    pub fn from_vectors(vectors: Vec<TotalDistanceVector>) -> Self {
        TsProfile { vectors }
    }

    pub fn vectors(&self) -> &[TotalDistanceVector] {
        &self.vectors
    }

    pub fn order(&self) -> usize {
        self.vectors.len()
    }

    pub fn expected_distance(&self, u: usize, p: &Rational) -> Result<Rational> {
        check_probability(p)?;
        Ok(self.vectors[u].expected_distance(p))
    }

    /// Vertices minimizing `d^p`, ascending.
    pub fn pts_median_vertices(&self, p: &Rational) -> Result<Vec<usize>> {
        check_probability(p)?;
        let values: Vec<Rational> = self.vectors.iter().map(|w| w.expected_distance(p)).collect();
        let Some(best) = values.iter().min() else {
            return Ok(Vec::new());
        };
        Ok((0..values.len()).filter(|&u| &values[u] == best).collect())
    }

    /// True when `d^p` is the same at every vertex.
    pub fn is_pts_distance_balanced(&self, p: &Rational) -> Result<bool> {
        check_probability(p)?;
        let mut values = self.vectors.iter().map(|w| w.expected_distance(p));
        let Some(first) = values.next() else {
            return Ok(true);
        };
        Ok(values.all(|x| x == first))
    }

    /// True when all total distance vectors coincide.
    pub fn is_ts_distance_balanced(&self) -> bool {
        self.vectors.windows(2).all(|w| w[0] == w[1])
    }

    /// Roots in `[0, 1]` shared by every edge difference `P_u - P_v`.
    pub fn balancing_probabilities(&self, g: &Graph) -> BalancingSet {
        let polys: Vec<IntPolynomial> = self.vectors.iter().map(|w| w.polynomial()).collect();
        let diffs: Vec<IntPolynomial> = g
            .edges()
            .map(|(u, v)| &polys[u] - &polys[v])
            .filter(|d| !d.is_zero())
            .collect();
        let Some(first) = diffs.first() else {
            return BalancingSet::All;
        };
        let gcd = diffs[1..].iter().fold(first.primitive(), |acc, d| acc.gcd(d));
        let mut roots = match RootSet::isolate(&gcd) {
            RootOutcome::Roots(r) => r,
            RootOutcome::IdenticallyZero => unreachable!("gcd of nonzero polynomials"),
        };
        roots
            .exact
            .retain(|x| diffs.iter().all(|d| d.sign_at(x).is_eq()));
        if !diffs.iter().all(|d| gcd.divides(d)) {
            roots.intervals.clear();
        }
        BalancingSet::Finite { gcd, roots }
    }
}
