//! Graph sources: a file path, `-` for standard input, or
//! `builtin:<name>[:<param>...]`. File contents are read as graph6 when the
//! first meaningful line is a graph6 string, and as an edge list otherwise.

use std::io::Read;

use tsbalance::graph::builtin::builtin;
use tsbalance::graph::io::{parse_edge_list, parse_graph6};
use tsbalance::{Error, Graph};

pub fn load(source: &str) -> Result<Graph, Error> {
    if let Some(spec) = source.strip_prefix("builtin:") {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or_default();
        let params = parts
            .map(|p| {
                p.parse::<usize>().map_err(|_| {
                    Error::InvalidParameter(format!("builtin parameter {p:?} is not a number"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        return builtin(name, &params);
    }
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidParameter(format!("reading standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| Error::InvalidParameter(format!("reading {source}: {e}")))?
    };
    parse_text(&text)
}

pub fn parse_text(text: &str) -> Result<Graph, Error> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) if looks_like_graph6(line) => {
            let graphs: Vec<&str> = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && *l != ">>graph6<<")
                .collect();
            if graphs.len() > 1 {
                return Err(Error::InvalidParameter(format!(
                    "expected one graph6 line, found {}",
                    graphs.len()
                )));
            }
            parse_graph6(line.as_bytes())
        }
        _ => parse_edge_list(text),
    }
}

fn looks_like_graph6(line: &str) -> bool {
    let body = line.strip_prefix(">>graph6<<").unwrap_or(line);
    !body.is_empty() && body.bytes().all(|b| (63..=126).contains(&b))
}
