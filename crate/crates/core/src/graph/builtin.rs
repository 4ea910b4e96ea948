//! Named graphs with fixed vertex numberings.
//!
//! | name | numbering |
//! |------|-----------|
//! | `complete n` | `0..n` |
//! | `cycle n` | `i ~ i+1 mod n` |
//! | `path n` | `i ~ i+1` |
//! | `complete_bipartite a b` | parts `0..a` and `a..a+b` |
//! | `wheel n` | hub `0`, rim cycle `1..n` |
//! | `generalized_petersen n k` | outer `i ~ i+1`, spokes `i ~ n+i`, inner `n+i ~ n+(i+k mod n)` |
//! | `hypercube d` | binary words, adjacent when they differ in one bit |
//! | `h9` | bundled data file, see `data/h9.edges` |
//! | `handa24` | `handa24.edges` under `$TSB_DATA_DIR` |

use std::path::PathBuf;

use super::io::parse_edge_list;
use super::Graph;
use crate::error::{Error, Result};

const H9_EDGES: &str = include_str!("../../data/h9.edges");

/// Environment variable naming a directory of optional graph data files.
pub const DATA_DIR_ENV: &str = "TSB_DATA_DIR";

pub fn complete(n: usize) -> Graph {
    let adj = (0..n)
        .map(|u| (0..n).filter(|&v| v != u).collect())
        .collect();
    Graph::from_unsorted_adjacency(adj)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
    Graph::from_edges(a + b, edges).expect("valid bipartite edges")
}

/// Wheel on `n` vertices in total: hub `0` joined to the cycle `1..n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("wheel needs n >= 4, got {n}")));
    }
    let rim = n - 1;
    let spokes = (1..n).map(|i| (0, i));
    let rim_edges = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
    Graph::from_edges(n, spokes.chain(rim_edges))
}

pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::InvalidParameter(format!(
            "generalized_petersen needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}"
        )));
    }
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]);
    Graph::from_edges(2 * n, edges)
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 20 {
        return Err(Error::InvalidParameter(format!("hypercube dimension {d} too large")));
    }
    let n = 1usize << d;
    let adj = (0..n).map(|w| (0..d).map(|b| w ^ (1 << b)).collect()).collect();
    Ok(Graph::from_unsorted_adjacency(adj))
}

/// The 9-vertex non-regular distance-balanced graph. Vertex 0 is a
/// degree-4 vertex and vertex 3 a degree-3 vertex.
pub fn h9() -> Graph {
    parse_edge_list(H9_EDGES).expect("bundled h9 data is valid")
}

/// The 24-vertex Handa graph, read from `$TSB_DATA_DIR/handa24.edges`.
pub fn handa24() -> Result<Graph> {
    let dir = std::env::var_os(DATA_DIR_ENV).ok_or_else(|| {
        Error::MissingData(format!("handa24.edges (set {DATA_DIR_ENV} to its directory)"))
    })?;
    let file: PathBuf = PathBuf::from(dir).join("handa24.edges");
    let text = std::fs::read_to_string(&file)
        .map_err(|e| Error::MissingData(format!("{}: {e}", file.display())))?;
    let g = parse_edge_list(&text)?;
    if g.order() != 24 {
        return Err(Error::InvalidParameter(format!(
            "{} describes {} vertices, expected 24",
            file.display(),
            g.order()
        )));
    }
    Ok(g)
}

/// Looks up a named graph. Parameter counts are checked; aliases `gp`,
/// `k`, `kbip`, `c`, `p`, `q` are accepted.
pub fn builtin(name: &str, params: &[usize]) -> Result<Graph> {
    let want = |count: usize| -> Result<()> {
        if params.len() == count {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "{name} takes {count} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "complete" | "k" => {
            want(1)?;
            if params[0] == 0 {
                return Err(Error::InvalidParameter("complete needs n >= 1".into()));
            }
            Ok(complete(params[0]))
        }
        "cycle" | "c" => {
            want(1)?;
            cycle(params[0])
        }
        "path" | "p" => {
            want(1)?;
            path(params[0])
        }
        "complete_bipartite" | "kbip" => {
            want(2)?;
            Ok(complete_bipartite(params[0], params[1]))
        }
        "wheel" => {
            want(1)?;
            wheel(params[0])
        }
        "generalized_petersen" | "gp" => {
            want(2)?;
            generalized_petersen(params[0], params[1])
        }
        "hypercube" | "q" => {
            want(1)?;
            hypercube(params[0])
        }
        "h9" => {
            want(0)?;
            Ok(h9())
        }
        "handa24" => {
            want(0)?;
            handa24()
        }
        _ => Err(Error::InvalidParameter(format!("unknown graph {name:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_seven() {
        let w = wheel(7).unwrap();
        assert_eq!(w.order(), 7);
        assert_eq!(w.size(), 12);
        assert_eq!(w.degree_sequence(), vec![6, 3, 3, 3, 3, 3, 3]);
        assert!(wheel(3).is_err());
    }

    #[test]
    fn petersen_family() {
        let g = generalized_petersen(7, 3).unwrap();
        assert_eq!(g.order(), 14);
        assert_eq!(g.regular_degree(), Some(3));
        let p = generalized_petersen(5, 2).unwrap();
        assert_eq!(p.size(), 15);
        assert!(generalized_petersen(6, 3).is_err());
        assert!(generalized_petersen(7, 4).is_err());
    }

    #[test]
    fn h9_shape() {
        let g = h9();
        assert_eq!(g.order(), 9);
        assert_eq!(g.size(), 15);
        assert_eq!(g.regular_degree(), None);
        assert_eq!(g.degree(0), 4);
        assert_eq!(g.degree(3), 3);
    }

    #[test]
    fn hypercube_three() {
        let q = hypercube(3).unwrap();
        assert_eq!(q.order(), 8);
        assert_eq!(q.regular_degree(), Some(3));
        assert!(q.is_bipartite());
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(builtin("gp", &[7, 3]).unwrap(), generalized_petersen(7, 3).unwrap());
        assert_eq!(builtin("complete", &[4]).unwrap(), complete(4));
        assert!(builtin("wheel", &[]).is_err());
        assert!(builtin("nope", &[]).is_err());
    }

    #[test]
    fn handa24_without_data_dir_is_missing() {
        if std::env::var_os(DATA_DIR_ENV).is_none() {
            assert!(matches!(handa24(), Err(Error::MissingData(_))));
        }
    }
}
