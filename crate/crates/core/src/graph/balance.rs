use serde::{Deserialize, Serialize};

use super::{DistanceMatrix, Graph};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Vertex counts on either side of an edge `uv`: `closer_to_u` counts the
/// vertices strictly nearer to `u` than to `v`, and vice versa.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBalance {
    pub u: usize,
    pub v: usize,
    pub closer_to_u: usize,
    pub closer_to_v: usize,
}

impl EdgeBalance {
    pub fn is_balanced(&self) -> bool {
        self.closer_to_u == self.closer_to_v
    }
}

pub fn edge_balance(g: &Graph, dist: &DistanceMatrix, u: usize, v: usize) -> Result<EdgeBalance> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAdjacent(u, v));
    }
    Ok(edge_balance_unchecked(dist, u, v))
}

fn edge_balance_unchecked(dist: &DistanceMatrix, u: usize, v: usize) -> EdgeBalance {
    let (ru, rv) = (dist.row(u), dist.row(v));
    let mut closer_to_u = 0;
    let mut closer_to_v = 0;
    for (du, dv) in ru.iter().zip(rv) {
        match du.cmp(dv) {
            std::cmp::Ordering::Less => closer_to_u += 1,
            std::cmp::Ordering::Greater => closer_to_v += 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    EdgeBalance {
        u,
        v,
        closer_to_u,
        closer_to_v,
    }
}

pub fn is_distance_balanced(g: &Graph, dist: &DistanceMatrix) -> bool {
    g.edges()
        .all(|(u, v)| edge_balance_unchecked(dist, u, v).is_balanced())
}

/// The common value `|W_uv| = |W_vu|` shared by every edge, if there is one.
pub fn nice_balance_constant(g: &Graph, dist: &DistanceMatrix) -> Option<usize> {
    let mut gamma = None;
    for (u, v) in g.edges() {
        let b = edge_balance_unchecked(dist, u, v);
        if !b.is_balanced() || gamma.is_some_and(|c| c != b.closer_to_u) {
            return None;
        }
        gamma = Some(b.closer_to_u);
    }
    gamma
}

pub fn is_nicely_distance_balanced(g: &Graph, dist: &DistanceMatrix) -> bool {
    g.size() == 0 || nice_balance_constant(g, dist).is_some()
}

/// Normalized total distance `(sum_v d(u,v)) / n`.
pub fn total_distance(dist: &DistanceMatrix, u: usize) -> Rational {
    Rational::new(dist.transmission(u).into(), dist.order().into())
}

/// Vertices of minimum total distance, ascending.
pub fn median_vertices(dist: &DistanceMatrix) -> Vec<usize> {
    let n = dist.order();
    let totals: Vec<u64> = (0..n).map(|u| dist.transmission(u)).collect();
    let best = totals.iter().copied().min().unwrap_or(0);
    (0..n).filter(|&u| totals[u] == best).collect()
}
