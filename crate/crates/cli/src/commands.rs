use std::fmt::Write as _;
use std::io::{BufRead, BufReader};

use serde::Serialize;
use tsbalance::exact::{format_rational, parse_probability};
use tsbalance::graph::io::{emit_edge_list, emit_graph6_string};
use tsbalance::graph::{apsp, is_distance_balanced, median_vertices, total_distance};
use tsbalance::report::{AnalysisReport, BalancingSummary, ReportOptions};
use tsbalance::symmetry::{automorphism_orbits, search_counterexamples};
use tsbalance::ts::{TotalDistanceVector, TsProfile};
use tsbalance::walk::{is_hamilton_connected, is_hamiltonian, rho};
use tsbalance::wreath::{check_wreath_balance, wreath_product, WreathBalanceCheck};
use tsbalance::{Error, Guards, Result, VisitSet};

use crate::source::load;
use crate::{Command, Format, GraphFormat};

/// Serializes with keys in sorted order, so that parsing and
/// re-serializing the output reproduces it byte for byte.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("output serializes");
    serde_json::to_string_pretty(&v).expect("value serializes")
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", canonical_json(value)),
        Format::Table => print!("{}", table()),
    }
}

fn verdict(b: bool) -> u8 {
    if b {
        0
    } else {
        1
    }
}

fn vector_text(w: &TotalDistanceVector) -> String {
    let parts: Vec<String> = w.0.iter().map(u64::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn run(command: Command, guards: &Guards, format: Format) -> Result<u8> {
    match command {
        Command::Info { graph, ts } => info(&graph, ts, guards, format),
        Command::Rho { graph, set, from, to } => rho_cmd(&graph, &set, from, to, guards, format),
        Command::Vector { graph, vertex, .. } => vector(&graph, vertex, guards, format),
        Command::Balance { graph, p, ts, roots } => balance(&graph, p, ts, roots, guards, format),
        Command::Median { graph, p } => median(&graph, p, guards, format),
        Command::Hamilton { graph, connected } => hamilton(&graph, connected, guards, format),
        Command::Orbits { graph } => orbits(&graph, guards, format),
        Command::Wreath { base, color, out, out_format, check } => {
            wreath(&base, &color, out.as_deref(), out_format, check, guards, format)
        }
        Command::Search { input, batch } => search(input.as_deref(), batch, guards),
    }
}

fn info(source: &str, ts: bool, guards: &Guards, format: Format) -> Result<u8> {
    let g = load(source)?;
    let report = AnalysisReport::build(&g, guards, &ReportOptions { ts, p: None })?;
    emit(format, &report, || info_table(&report));
    Ok(0)
}

fn info_table(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let g = &r.graph;
    let opt = |x: Option<bool>| x.map_or("n/a".to_string(), |b| b.to_string());
    let _ = writeln!(s, "order                     {}", g.order);
    let _ = writeln!(s, "size                      {}", g.size);
    let _ = writeln!(s, "degree sequence           {:?}", g.degree_sequence);
    let _ = writeln!(s, "bipartite                 {}", g.bipartite);
    let _ = writeln!(
        s,
        "regular                   {}",
        g.regular.map_or("no".to_string(), |d| format!("degree {d}"))
    );
    let _ = writeln!(s, "diameter                  {}", g.diameter);
    let _ = writeln!(s, "vertex_transitive         {}", opt(g.vertex_transitive));
    let b = &r.balance;
    let _ = writeln!(s, "distance_balanced         {}", b.distance_balanced);
    let _ = writeln!(s, "nicely_distance_balanced  {}", b.nicely_distance_balanced);
    let _ = writeln!(s, "median vertices           {:?}", b.median_vertices);
    if let Some(ts) = &b.ts {
        let _ = writeln!(s, "ts_distance_balanced      {}", ts.ts_distance_balanced);
        let _ = writeln!(s, "balancing set             {}", ts.balancing_probabilities.display);
        for (u, w) in ts.vectors.iter().enumerate() {
            let _ = writeln!(s, "  W({u}) = {}", vector_text(w));
        }
    }
    for note in &r.notes {
        let _ = writeln!(s, "note: {note}");
    }
    s
}

#[derive(Serialize)]
struct RhoOutput {
    set: Vec<usize>,
    from: usize,
    to: usize,
    rho: u32,
}

fn rho_cmd(source: &str, set: &[usize], from: usize, to: usize, guards: &Guards, format: Format) -> Result<u8> {
    let g = load(source)?;
    let d = apsp(&g)?;
    let a = VisitSet::new(g.order(), set.iter().copied())?;
    let value = rho(&d, &a, from, to, guards)?;
    let out = RhoOutput { set: a.vertices().to_vec(), from, to, rho: value };
    emit(format, &out, || format!("rho = {value}\n"));
    Ok(0)
}

#[derive(Serialize)]
struct VectorEntry {
    vertex: usize,
    vector: TotalDistanceVector,
}

fn vector(source: &str, vertex: Option<usize>, guards: &Guards, format: Format) -> Result<u8> {
    let g = load(source)?;
    let d = apsp(&g)?;
    let entries: Vec<VectorEntry> = match vertex {
        Some(u) => vec![VectorEntry {
            vertex: u,
            vector: tsbalance::ts::total_distance_vector(&g, &d, u, guards)?,
        }],
        None => TsProfile::compute(&g, &d, guards)?
            .vectors()
            .iter()
            .cloned()
            .enumerate()
            .map(|(vertex, vector)| VectorEntry { vertex, vector })
            .collect(),
    };
    emit(format, &entries, || {
        entries
            .iter()
            .map(|e| format!("W({}) = {}\n", e.vertex, vector_text(&e.vector)))
            .collect()
    });
    Ok(0)
}

#[derive(Serialize)]
struct DistanceBalance {
    distance_balanced: bool,
}

#[derive(Serialize)]
struct PtsBalance {
    p: String,
    pts_distance_balanced: bool,
    expected_distances: Vec<String>,
}

#[derive(Serialize)]
struct TsBalance {
    ts_distance_balanced: bool,
}

fn balance(
    source: &str,
    p: Option<String>,
    ts: bool,
    roots: bool,
    guards: &Guards,
    format: Format,
) -> Result<u8> {
    let g = load(source)?;
    let d = apsp(&g)?;
    if let Some(p) = p {
        let p = parse_probability(&p)?;
        let profile = TsProfile::compute(&g, &d, guards)?;
        let out = PtsBalance {
            p: format_rational(&p),
            pts_distance_balanced: profile.is_pts_distance_balanced(&p)?,
            expected_distances: (0..g.order())
                .map(|u| profile.expected_distance(u, &p).map(|x| format_rational(&x)))
                .collect::<Result<_>>()?,
        };
        emit(format, &out, || {
            let mut s = format!("pts_distance_balanced at p = {}: {}\n", out.p, out.pts_distance_balanced);
            for (u, x) in out.expected_distances.iter().enumerate() {
                let _ = writeln!(s, "  d^p({u}) = {x}");
            }
            s
        });
        return Ok(verdict(out.pts_distance_balanced));
    }
    if ts || roots {
        let profile = TsProfile::compute(&g, &d, guards)?;
        if ts {
            let out = TsBalance { ts_distance_balanced: profile.is_ts_distance_balanced() };
            emit(format, &out, || format!("ts_distance_balanced: {}\n", out.ts_distance_balanced));
            return Ok(verdict(out.ts_distance_balanced));
        }
        let summary = BalancingSummary::from_set(&profile.balancing_probabilities(&g));
        emit(format, &summary, || {
            format!("{}\nodds p/(1-p): {}\n", summary.display, summary.odds_display)
        });
        return Ok(0);
    }
    let out = DistanceBalance { distance_balanced: is_distance_balanced(&g, &d) };
    emit(format, &out, || format!("distance_balanced: {}\n", out.distance_balanced));
    Ok(verdict(out.distance_balanced))
}

#[derive(Serialize)]
struct MedianOutput {
    p: Option<String>,
    values: Vec<String>,
    median_vertices: Vec<usize>,
}

fn median(source: &str, p: Option<String>, guards: &Guards, format: Format) -> Result<u8> {
    let g = load(source)?;
    let d = apsp(&g)?;
    let out = match p {
        Some(p) => {
            let p = parse_probability(&p)?;
            let profile = TsProfile::compute(&g, &d, guards)?;
            MedianOutput {
                p: Some(format_rational(&p)),
                values: (0..g.order())
                    .map(|u| profile.expected_distance(u, &p).map(|x| format_rational(&x)))
                    .collect::<Result<_>>()?,
                median_vertices: profile.pts_median_vertices(&p)?,
            }
        }
        None => MedianOutput {
            p: None,
            values: (0..g.order()).map(|u| format_rational(&total_distance(&d, u))).collect(),
            median_vertices: median_vertices(&d),
        },
    };
    emit(format, &out, || format!("median vertices: {:?}\n", out.median_vertices));
    Ok(0)
}

#[derive(Serialize)]
struct HamiltonOutput {
    hamiltonian: bool,
    hamilton_connected: bool,
}

fn hamilton(source: &str, connected: bool, guards: &Guards, format: Format) -> Result<u8> {
    let g = load(source)?;
    let d = apsp(&g)?;
    let out = HamiltonOutput {
        hamiltonian: is_hamiltonian(&g, &d, guards)?,
        hamilton_connected: is_hamilton_connected(&g, &d, guards)?,
    };
    emit(format, &out, || {
        format!("hamiltonian: {}\nhamilton_connected: {}\n", out.hamiltonian, out.hamilton_connected)
    });
    Ok(verdict(if connected { out.hamilton_connected } else { out.hamiltonian }))
}

#[derive(Serialize)]
struct OrbitsOutput {
    orbits: Vec<Vec<usize>>,
    vertex_transitive: bool,
}

fn orbits(source: &str, guards: &Guards, format: Format) -> Result<u8> {
    let g = load(source)?;
    let d = apsp(&g)?;
    let part = automorphism_orbits(&g, &d, guards)?;
    let out = OrbitsOutput {
        orbits: part.classes().to_vec(),
        vertex_transitive: part.len() <= 1,
    };
    emit(format, &out, || {
        let mut s = String::new();
        for (i, c) in out.orbits.iter().enumerate() {
            let _ = writeln!(s, "orbit {i}: {c:?}");
        }
        let _ = writeln!(s, "vertex_transitive: {}", out.vertex_transitive);
        s
    });
    Ok(0)
}

#[derive(Serialize)]
struct WreathOutput {
    order: usize,
    size: usize,
    codec: String,
    written_to: Option<String>,
    check: Option<WreathBalanceCheck>,
}

fn wreath(
    base: &str,
    color: &str,
    out_path: Option<&str>,
    out_format: GraphFormat,
    check: bool,
    guards: &Guards,
    format: Format,
) -> Result<u8> {
    let g = load(base)?;
    let h = load(color)?;
    let (product, codec) = wreath_product(&g, &h, guards)?;
    if let Some(path) = out_path {
        let text = match out_format {
            GraphFormat::Edges => format!("# {}\n{}", codec.describe(), emit_edge_list(&product)),
            GraphFormat::Graph6 => format!("{}\n", emit_graph6_string(&product)),
        };
        std::fs::write(path, text)
            .map_err(|e| Error::InvalidParameter(format!("writing {path}: {e}")))?;
    }
    let result = if check { Some(check_wreath_balance(&g, &h, guards)?) } else { None };
    let out = WreathOutput {
        order: product.order(),
        size: product.size(),
        codec: codec.describe(),
        written_to: out_path.map(str::to_string),
        check: result,
    };
    emit(format, &out, || {
        let mut s = format!("order {} size {}\n{}\n", out.order, out.size, out.codec);
        if let Some(c) = &out.check {
            let _ = writeln!(s, "p = {}", c.p);
            let _ = writeln!(s, "product_db: {}", c.product_db);
            let _ = writeln!(s, "product_nicely_db: {}", c.product_nicely_db);
            let _ = writeln!(s, "factor_pts_db: {}", c.factor_pts_db);
            let _ = writeln!(s, "factor_h_db: {}", c.factor_h_db);
            let _ = writeln!(s, "theorem_consistent: {}", c.theorem_consistent);
        }
        s
    });
    Ok(match &out.check {
        Some(c) => verdict(c.theorem_consistent),
        None => 0,
    })
}

fn search(input: Option<&str>, batch: usize, guards: &Guards) -> Result<u8> {
    let reader: Box<dyn BufRead> = match input {
        Some(path) => Box::new(BufReader::new(
            std::fs::File::open(path)
                .map_err(|e| Error::InvalidParameter(format!("reading {path}: {e}")))?,
        )),
        None => Box::new(BufReader::new(std::io::stdin())),
    };
    let stdout = std::io::stdout();
    search_counterexamples(reader, stdout.lock(), guards, batch)
        .map_err(|e| Error::InvalidParameter(format!("search stream: {e}")))?;
    Ok(0)
}
