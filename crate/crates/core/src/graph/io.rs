//! Edge-list text and graph6 byte formats.
//!
//! Edge lists hold one `u v` pair per line with 0-based vertex indices.
//! Blank lines and lines starting with `#` are ignored. An optional first
//! line `n=<count>` fixes the order, which otherwise is the largest index
//! plus one.
//!
//! graph6 follows the nauty definition: a size header followed by the
//! upper-triangular adjacency bits taken column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six to a byte with an
//! offset of 63 and zero padding at the end.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_content = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        if let Some(rest) = line.strip_prefix("n=") {
            if seen_content {
                return Err(parse_err("order declaration must precede edges".into()));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| parse_err(format!("invalid order {rest:?}")))?;
            declared = Some(n);
            seen_content = true;
            continue;
        }
        seen_content = true;
        let mut tokens = line.split_whitespace();
        let mut next = || -> Result<usize> {
            let tok = tokens
                .next()
                .ok_or_else(|| parse_err("expected two vertex indices".into()))?;
            tok.parse::<usize>()
                .map_err(|_| parse_err(format!("invalid vertex index {tok:?}")))
        };
        let (u, v) = (next()?, next()?);
        if tokens.next().is_some() {
            return Err(parse_err("expected exactly two vertex indices".into()));
        }
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(parse_err(format!(
                    "vertex {} out of range for declared order {n}",
                    u.max(v)
                )));
            }
        }
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| {
        edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0)
    });
    Graph::from_edges(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_OFFSET: u8 = 63;

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + G6_OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + G6_OFFSET);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + G6_OFFSET);
        }
    }
}

pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + G6_OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + G6_OFFSET);
    }
    out
}

pub fn emit_graph6_string(g: &Graph) -> String {
    // graph6 bytes are always printable ASCII
    String::from_utf8(emit_graph6(g)).expect("graph6 is ASCII")
}

fn g6_value(byte: u8, pos: usize) -> Result<usize> {
    if (63..=126).contains(&byte) {
        Ok(usize::from(byte - G6_OFFSET))
    } else {
        Err(Error::Graph6(format!(
            "byte {byte:#04x} at offset {pos} is outside the printable range 63..=126"
        )))
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes
        .first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if first != 126 {
        return Ok((g6_value(first, 0)?, 1));
    }
    let (start, digits) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    if bytes.len() < start + digits {
        return Err(Error::Graph6("truncated size header".into()));
    }
    let mut n = 0usize;
    for (k, &b) in bytes[start..start + digits].iter().enumerate() {
        n = (n << 6) | g6_value(b, start + k)?;
    }
    Ok((n, start + digits))
}

/// Parses one graph6 record. A `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut bytes = bytes.trim_ascii();
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
    }
    let (n, header) = decode_size(bytes)?;
    let body = &bytes[header..];
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut adj = vec![Vec::new(); n];
    let mut bit = 0usize;
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for (k, &b) in body.iter().enumerate() {
        let value = g6_value(b, header + k)?;
        for shift in (0..6).rev() {
            let set = (value >> shift) & 1 == 1;
            if bit < bit_count {
                let (i, j) = pairs.next().expect("pair per bit");
                if set {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            } else if set {
                return Err(Error::Graph6("nonzero padding bits".into()));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_unsorted_adjacency(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_examples() {
        let p3 = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(p3, path(3).unwrap());
        let k2 = parse_edge_list("0 1\n0 1").unwrap();
        assert_eq!(k2, complete(2));
        assert_eq!(
            parse_edge_list("0 0"),
            Err(Error::SelfLoop { vertex: 0 })
        );
    }

    #[test]
    fn edge_list_comments_and_declared_order() {
        let g = parse_edge_list("# header\n\nn=5\n0 1\n  # indented comment\n3 4\n").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 2);
        assert_eq!(parse_edge_list("").unwrap().order(), 0);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        match parse_edge_list("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("0 1\n\n2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_edge_list("n=3\n0 3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert!(parse_edge_list("0 1\nn=4\n").is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = wheel(7).unwrap();
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_empty_five() {
        let g = parse_graph6(b"D??").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 0);
        assert_eq!(emit_graph6(&g), b"D??");
    }

    #[test]
    fn graph6_k2_and_k3() {
        assert_eq!(parse_graph6(&emit_graph6(&complete(2))).unwrap(), complete(2));
        // K3: order byte 3+63, bits 111 padded to 111000 = 56, plus 63 = 'w'
        assert_eq!(emit_graph6(&complete(3)), b"Bw");
        assert_eq!(parse_graph6(b"Bw\n").unwrap(), complete(3));
    }

    #[test]
    fn graph6_known_strings() {
        // nauty output for the 5-cycle 0-1-2-3-4-0 and the Petersen graph
        assert_eq!(emit_graph6_string(&cycle(5).unwrap()), "Dhc");
        assert_eq!(
            emit_graph6_string(&generalized_petersen(5, 2).unwrap()).len(),
            1 + 45usize.div_ceil(6)
        );
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(matches!(parse_graph6(b"D?\x20"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6(b"D?"), Err(Error::Graph6(_))));
        // K2 is "A_"; "A`" sets a padding bit
        assert_eq!(parse_graph6(b"A_").unwrap(), complete(2));
        assert!(matches!(parse_graph6(b"A`"), Err(Error::Graph6(_))));
        assert!(parse_graph6(b"").is_err());
    }

    #[test]
    fn graph6_large_header() {
        let g = cycle(100).unwrap();
        let bytes = emit_graph6(&g);
        assert_eq!(bytes[0], 126);
        assert_eq!(parse_graph6(&bytes).unwrap(), g);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let edges = (1..n)
                    .flat_map(|j| (0..j).map(move |i| (i, j)))
                    .zip(bits)
                    .filter_map(|(e, b)| b.then_some(e));
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph(32)) {
            let bytes = emit_graph6(&g);
            let back = parse_graph6(&bytes).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(emit_graph6(&back), bytes);
        }
    }
}
