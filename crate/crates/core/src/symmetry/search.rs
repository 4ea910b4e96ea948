//! Streaming scan for vertices with equal total distance vectors that lie
//! in different automorphism orbits.

use std::io::{self, BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::automorphism_orbits;
use crate::error::Result;
use crate::graph::io::{emit_graph6_string, parse_graph6};
use crate::graph::{apsp, Graph};
use crate::ts::{total_distance_vector, TotalDistanceVector};
use crate::Guards;

/// Two vertices in different orbits sharing a total distance vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub graph6: String,
    pub u: usize,
    pub v: usize,
    pub vector: TotalDistanceVector,
    pub orbit_u: Vec<usize>,
    pub orbit_v: Vec<usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    /// Graphs fully analyzed.
    pub processed: usize,
    /// Lines that were malformed, disconnected, or over the order guard.
    pub skipped: usize,
    pub hits: usize,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a SearchSummary,
}

/// Every pair `u < v` in distinct orbits with `W(u) = W(v)`.
///
/// Pairs are first filtered by degree, transmission and sorted distance
/// row; orbits and vectors are only computed when some pair survives.
pub fn analyze_graph(g: &Graph, guards: &Guards) -> Result<Vec<SearchHit>> {
    guards.check_order(g.order())?;
    let dist = apsp(g)?;
    let n = g.order();
    let keys: Vec<(usize, u64, Vec<u32>)> = (0..n)
        .map(|u| {
            let mut row = dist.row(u).to_vec();
            row.sort_unstable();
            (g.degree(u), dist.transmission(u), row)
        })
        .collect();
    let candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| keys[u] == keys[v])
        .collect();
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    let orbits = automorphism_orbits(g, &dist, guards)?;
    let candidates: Vec<(usize, usize)> = candidates
        .into_iter()
        .filter(|&(u, v)| !orbits.same_class(u, v))
        .collect();
    if candidates.is_empty() {
        return Ok(Vec::new());
    }
    let mut vectors: Vec<Option<TotalDistanceVector>> = vec![None; n];
    let graph6 = emit_graph6_string(g);
    let mut hits = Vec::new();
    for (u, v) in candidates {
        for w in [u, v] {
            if vectors[w].is_none() {
                vectors[w] = Some(total_distance_vector(g, &dist, w, guards)?);
            }
        }
        if vectors[u] == vectors[v] {
            hits.push(SearchHit {
                graph6: graph6.clone(),
                u,
                v,
                vector: vectors[u].clone().expect("computed above"),
                orbit_u: orbits.class_containing(u).to_vec(),
                orbit_v: orbits.class_containing(v).to_vec(),
            });
        }
    }
    Ok(hits)
}

/// Reads graph6 lines from `input` and writes one JSON object per hit to
/// `output`, followed by a `{"summary": ...}` line. Lines are analyzed in
/// parallel batches of `batch` and written in input order.
pub fn search_counterexamples<R: BufRead, W: Write>(
    input: R,
    mut output: W,
    guards: &Guards,
    batch: usize,
) -> io::Result<SearchSummary> {
    let batch = batch.max(1);
    let mut summary = SearchSummary::default();
    let mut lines = input.lines();
    loop {
        let mut chunk = Vec::with_capacity(batch);
        for line in lines.by_ref() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed == ">>graph6<<" {
                continue;
            }
            chunk.push(trimmed.to_owned());
            if chunk.len() == batch {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Option<Vec<SearchHit>>> = chunk
            .par_iter()
            .map(|line| {
                let g = parse_graph6(line.as_bytes()).ok()?;
                analyze_graph(&g, guards).ok()
            })
            .collect();
        for result in results {
            match result {
                Some(hits) => {
                    summary.processed += 1;
                    summary.hits += hits.len();
                    for hit in &hits {
                        serde_json::to_writer(&mut output, hit)?;
                        output.write_all(b"\n")?;
                    }
                }
                None => summary.skipped += 1,
            }
        }
        output.flush()?;
    }
    serde_json::to_writer(&mut output, &SummaryLine { summary: &summary })?;
    output.write_all(b"\n")?;
    output.flush()?;
    Ok(summary)
}
