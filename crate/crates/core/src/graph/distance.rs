use rayon::prelude::*;

use super::Graph;
use crate::error::{Error, Result};

/// Geodesic hop distances of a connected graph, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    /// Non-normalized total distance (transmission) of `u`.
    pub fn transmission(&self, u: usize) -> u64 {
        self.row(u).iter().map(|&d| u64::from(d)).sum()
    }

    pub fn diameter(&self) -> u32 {
        self.data.iter().copied().max().unwrap_or(0)
    }
}

/// All-pairs shortest paths by one BFS per source. Sources run in parallel.
pub fn apsp(g: &Graph) -> Result<DistanceMatrix> {
    g.require_connected()?;
    let n = g.order();
    let rows: Vec<Vec<u32>> = (0..n)
        .into_par_iter()
        .map(|s| {
            g.bfs(s)
                .into_iter()
                .enumerate()
                .map(|(v, d)| d.ok_or(Error::Disconnected(s, v)))
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<_>>()?;
    Ok(DistanceMatrix {
        n,
        data: rows.concat(),
    })
}
