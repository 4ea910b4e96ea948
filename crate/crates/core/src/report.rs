//! Serializable analysis reports.
//!
//! Every rational is written as an exact `"num/den"` string. Decimal
//! approximations are presentation only and always travel with their
//! tolerance.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{format_rational, to_decimal, IsolatingInterval, Rational, RootSet};
use crate::graph::{
    apsp, is_distance_balanced, median_vertices, nice_balance_constant, DistanceMatrix, Graph,
};
use crate::symmetry::automorphism_orbits;
use crate::ts::{BalancingSet, TotalDistanceVector, TsProfile};
use crate::Guards;

/// Digits used for the decimal isolating interval of an irrational root.
pub const DECIMAL_DIGITS: u32 = 4;

/// Default refinement width for exact isolating intervals.
pub fn default_tolerance() -> Rational {
    Rational::new(1.into(), 1_000_000_000.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSection {
    pub order: usize,
    pub size: usize,
    pub degree_sequence: Vec<usize>,
    pub connected: bool,
    pub bipartite: bool,
    pub regular: Option<usize>,
    pub diameter: u32,
    pub vertex_transitive: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Approximation {
    pub value: String,
    pub tolerance: String,
}

/// An irrational root: exact isolating interval, a rounded decimal
/// interval certified to contain it, and a decimal approximation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    pub lo: String,
    pub hi: String,
    pub decimal_lo: String,
    pub decimal_hi: String,
    /// The same root in odds coordinates `t = p / (1 - p)`.
    pub odds_decimal_lo: Option<String>,
    pub odds_decimal_hi: Option<String>,
    pub approximation: Approximation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalancingSummary {
    /// True when the graph is balanced at every `p`.
    pub all: bool,
    /// Primitive gcd of the edge differences, when finite.
    pub gcd: Option<String>,
    pub exact: Vec<String>,
    pub intervals: Vec<RootInterval>,
    /// Compact form such as `{0, [0.48215,0.48225]}`.
    pub display: String,
    /// The set in odds coordinates `t = p / (1 - p)`, where `p = 1` maps
    /// to `inf`.
    pub odds_display: String,
}

impl BalancingSummary {
    pub fn from_set(set: &BalancingSet) -> Self {
        match set {
            BalancingSet::All => BalancingSummary {
                all: true,
                gcd: None,
                exact: Vec::new(),
                intervals: Vec::new(),
                display: "[0,1]".into(),
                odds_display: "[0,inf]".into(),
            },
            BalancingSet::Finite { gcd, roots } => {
                let intervals: Vec<RootInterval> = roots
                    .intervals
                    .iter()
                    .map(|i| root_interval(roots, i))
                    .collect();
                let mut parts: Vec<(Rational, String, String)> = roots
                    .exact
                    .iter()
                    .map(|r| (r.clone(), display_rational(r), display_odds(r)))
                    .collect();
                for (i, ri) in roots.intervals.iter().zip(&intervals) {
                    let odds = match (&ri.odds_decimal_lo, &ri.odds_decimal_hi) {
                        (Some(lo), Some(hi)) => format!("[{lo},{hi}]"),
                        _ => "?".into(),
                    };
                    parts.push((
                        i.lo.clone(),
                        format!("[{},{}]", ri.decimal_lo, ri.decimal_hi),
                        odds,
                    ));
                }
                parts.sort_by(|a, b| a.0.cmp(&b.0));
                let join = |pick: fn(&(Rational, String, String)) -> &String| {
                    let items: Vec<&str> = parts.iter().map(|p| pick(p).as_str()).collect();
                    format!("{{{}}}", items.join(", "))
                };
                let display = join(|p| &p.1);
                let odds_display = join(|p| &p.2);
                BalancingSummary {
                    all: false,
                    gcd: Some(gcd.to_string()),
                    exact: roots.exact.iter().map(format_rational).collect(),
                    intervals,
                    display,
                    odds_display,
                }
            }
        }
    }
}

fn display_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_rational(r)
    }
}

fn display_odds(r: &Rational) -> String {
    let one = Rational::from_integer(1.into());
    if *r == one {
        "inf".into()
    } else {
        display_rational(&(r / (one - r)))
    }
}

fn root_interval(roots: &RootSet, interval: &IsolatingInterval) -> RootInterval {
    let tol = default_tolerance();
    let refined = roots
        .refine_interval(interval, &tol)
        .unwrap_or_else(|_| interval.clone());
    let digits = DECIMAL_DIGITS as usize + 1;
    let (decimal_lo, decimal_hi) = match roots.decimal_interval(interval, DECIMAL_DIGITS) {
        Some(d) => (to_decimal(&d.lo, digits), to_decimal(&d.hi, digits)),
        None => (to_decimal(&refined.lo, 10), to_decimal(&refined.hi, 10)),
    };
    let odds = roots.odds_decimal_interval(interval, DECIMAL_DIGITS);
    RootInterval {
        odds_decimal_lo: odds.as_ref().map(|d| to_decimal(&d.lo, digits)),
        odds_decimal_hi: odds.as_ref().map(|d| to_decimal(&d.hi, digits)),
        lo: format_rational(&refined.lo),
        hi: format_rational(&refined.hi),
        decimal_lo,
        decimal_hi,
        approximation: Approximation {
            value: to_decimal(&refined.midpoint(), 10),
            tolerance: format_rational(&tol),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PtsSection {
    pub p: String,
    pub expected_distances: Vec<String>,
    pub median_vertices: Vec<usize>,
    pub pts_distance_balanced: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TsSection {
    pub ts_distance_balanced: bool,
    pub vectors: Vec<TotalDistanceVector>,
    pub balancing_probabilities: BalancingSummary,
    pub pts: Option<PtsSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalanceSection {
    pub distance_balanced: bool,
    pub nicely_distance_balanced: bool,
    pub nice_constant: Option<usize>,
    pub median_vertices: Vec<usize>,
    pub ts: Option<TsSection>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub guards: Guards,
}

impl Provenance {
    pub fn new(guards: &Guards) -> Self {
        Provenance {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            guards: *guards,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: GraphSection,
    pub balance: BalanceSection,
    pub notes: Vec<String>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Default)]
pub struct ReportOptions {
    /// Include vectors and the balancing set when the order is within the
    /// guard.
    pub ts: bool,
    pub p: Option<Rational>,
}

impl AnalysisReport {
    pub fn build(g: &Graph, guards: &Guards, options: &ReportOptions) -> Result<Self> {
        let dist = apsp(g)?;
        Self::build_with(g, &dist, guards, options)
    }

    pub fn build_with(
        g: &Graph,
        dist: &DistanceMatrix,
        guards: &Guards,
        options: &ReportOptions,
    ) -> Result<Self> {
        let class = g.classify();
        let mut notes = Vec::new();
        let within_guard = guards.check_order(g.order()).is_ok();
        let vertex_transitive = if within_guard {
            Some(automorphism_orbits(g, dist, guards)?.len() <= 1)
        } else {
            notes.push(format!(
                "order {} exceeds max-n {}; orbit and TS sections omitted",
                g.order(),
                guards.max_order
            ));
            None
        };
        let ts = if options.ts && within_guard {
            Some(ts_section(g, dist, guards, options.p.as_ref())?)
        } else {
            None
        };
        let nice_constant = nice_balance_constant(g, dist);
        Ok(AnalysisReport {
            graph: GraphSection {
                order: g.order(),
                size: g.size(),
                degree_sequence: class.degree_sequence,
                connected: class.connected,
                bipartite: class.bipartite,
                regular: class.regular,
                diameter: dist.diameter(),
                vertex_transitive,
            },
            balance: BalanceSection {
                distance_balanced: is_distance_balanced(g, dist),
                nicely_distance_balanced: nice_constant.is_some(),
                nice_constant,
                median_vertices: median_vertices(dist),
                ts,
            },
            notes,
            provenance: Provenance::new(guards),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn ts_section(
    g: &Graph,
    dist: &DistanceMatrix,
    guards: &Guards,
    p: Option<&Rational>,
) -> Result<TsSection> {
    let profile = TsProfile::compute(g, dist, guards)?;
    let set = profile.balancing_probabilities(g);
    let pts = match p {
        Some(p) => Some(PtsSection {
            p: format_rational(p),
            expected_distances: (0..g.order())
                .map(|u| profile.expected_distance(u, p).map(|x| format_rational(&x)))
                .collect::<Result<_>>()?,
            median_vertices: profile.pts_median_vertices(p)?,
            pts_distance_balanced: profile.is_pts_distance_balanced(p)?,
        }),
        None => None,
    };
    Ok(TsSection {
        ts_distance_balanced: profile.is_ts_distance_balanced(),
        vectors: profile.vectors().to_vec(),
        balancing_probabilities: BalancingSummary::from_set(&set),
        pts,
    })
}
