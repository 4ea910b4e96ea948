//! Wreath (lamplighter) products `G wr H`.
//!
//! A vertex is a coloring `y: V_G -> V_H` together with a position
//! `x in V_G`. Type I edges recolor the lamp at the current position along
//! an edge of `H`; type II edges move the position along an edge of `G`
//! without touching the coloring.
//!
//! Vertices are numbered `x * m^n + sum_i y_i * m^i`: lamp `i` is the
//! `i`-th base-`m` digit and the position is the high digit.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::{self, apsp, DistanceMatrix, Graph};
use crate::ts::TsProfile;
use crate::walk::{rho, VisitSet};
use crate::Guards;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WreathVertex {
    /// `coloring[i]` is the `H`-vertex on lamp `i`.
    pub coloring: Vec<usize>,
    pub position: usize,
}

/// Bijection between [`WreathVertex`] values and `0..n * m^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathCodec {
    base_order: usize,
    color_order: usize,
    colorings: usize,
}

impl WreathCodec {
    pub fn new(base_order: usize, color_order: usize) -> Result<Self> {
        if base_order == 0 || color_order == 0 {
            return Err(Error::InvalidParameter("wreath factors must be nonempty".into()));
        }
        let too_big = || {
            Error::guard(
                "wreath product order",
                format!("{base_order} * {color_order}^{base_order} (overflows)"),
                usize::MAX,
            )
        };
        let colorings = u32::try_from(base_order)
            .ok()
            .and_then(|e| color_order.checked_pow(e))
            .ok_or_else(too_big)?;
        colorings.checked_mul(base_order).ok_or_else(too_big)?;
        Ok(WreathCodec {
            base_order,
            color_order,
            colorings,
        })
    }

    /// `n * m^n`
    pub fn order(&self) -> usize {
        self.base_order * self.colorings
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn color_order(&self) -> usize {
        self.color_order
    }

    pub fn encode(&self, w: &WreathVertex) -> Result<usize> {
        let (n, m) = (self.base_order, self.color_order);
        if w.coloring.len() != n {
            return Err(Error::InvalidParameter(format!(
                "coloring has {} lamps, expected {n}",
                w.coloring.len()
            )));
        }
        if w.position >= n {
            return Err(Error::VertexOutOfRange { vertex: w.position, order: n });
        }
        let mut idx = 0;
        for &y in w.coloring.iter().rev() {
            if y >= m {
                return Err(Error::VertexOutOfRange { vertex: y, order: m });
            }
            idx = idx * m + y;
        }
        Ok(w.position * self.colorings + idx)
    }

    pub fn decode(&self, idx: usize) -> Result<WreathVertex> {
        if idx >= self.order() {
            return Err(Error::VertexOutOfRange { vertex: idx, order: self.order() });
        }
        let position = idx / self.colorings;
        let mut rest = idx % self.colorings;
        let coloring = (0..self.base_order)
            .map(|_| {
                let y = rest % self.color_order;
                rest /= self.color_order;
                y
            })
            .collect();
        Ok(WreathVertex { coloring, position })
    }

    /// One-line description of the numbering, for report headers.
    pub fn describe(&self) -> String {
        format!(
            "wreath product vertex index = x * {m}^{n} + sum_i y_i * {m}^i (x: position in 0..{n}, y_i: color of lamp i in 0..{m})",
            m = self.color_order,
            n = self.base_order
        )
    }
}

/// Builds `G wr H` explicitly.
pub fn wreath_product(g: &Graph, h: &Graph, guards: &Guards) -> Result<(Graph, WreathCodec)> {
    g.require_connected()?;
    h.require_connected()?;
    let codec = WreathCodec::new(g.order(), h.order())?;
    let order = codec.order();
    if order > guards.max_product {
        return Err(Error::guard("wreath product order", order, guards.max_product));
    }
    let m = h.order();
    let colorings = codec.colorings;
    let mut place = vec![1usize; g.order()];
    for i in 1..g.order() {
        place[i] = place[i - 1] * m;
    }
    let mut adj = Vec::with_capacity(order);
    for idx in 0..order {
        let x = idx / colorings;
        let lamps = idx % colorings;
        let y = (lamps / place[x]) % m;
        let mut list = Vec::with_capacity(h.degree(y) + g.degree(x));
        for &y2 in h.neighbors(y) {
            list.push(idx - y * place[x] + y2 * place[x]);
        }
        for &x2 in g.neighbors(x) {
            list.push(x2 * colorings + lamps);
        }
        adj.push(list);
    }
    Ok((Graph::from_unsorted_adjacency(adj), codec))
}

/// Distances and total distances in `G wr H` from factor data alone.
pub struct WreathMetric {
    g_dist: DistanceMatrix,
    h_dist: DistanceMatrix,
    codec: WreathCodec,
    guards: Guards,
}

impl WreathMetric {
    pub fn new(g: &Graph, h: &Graph, guards: &Guards) -> Result<Self> {
        Ok(WreathMetric {
            g_dist: apsp(g)?,
            h_dist: apsp(h)?,
            codec: WreathCodec::new(g.order(), h.order())?,
            guards: *guards,
        })
    }

    pub fn codec(&self) -> &WreathCodec {
        &self.codec
    }

    fn check(&self, w: &WreathVertex) -> Result<()> {
        self.codec.encode(w).map(|_| ())
    }

    /// `sum_i d_H(y_i, y'_i) + rho_delta(x, x')`, `delta` being the lamps
    /// whose colors differ.
    pub fn distance(&self, a: &WreathVertex, b: &WreathVertex) -> Result<u64> {
        self.check(a)?;
        self.check(b)?;
        let mut lamps = 0u64;
        let mut delta = Vec::new();
        for (i, (&y, &y2)) in a.coloring.iter().zip(&b.coloring).enumerate() {
            if y != y2 {
                lamps += u64::from(self.h_dist.get(y, y2));
                delta.push(i);
            }
        }
        let delta = VisitSet::new(self.codec.base_order, delta)?;
        let walk = rho(&self.g_dist, &delta, a.position, b.position, &self.guards)?;
        Ok(lamps + u64::from(walk))
    }

    /// `sum_i d_H(y_i) + d^p_G(x)` with `p = (m-1)/m`.
    pub fn total_distance(&self, profile: &TsProfile, a: &WreathVertex) -> Result<Rational> {
        self.check(a)?;
        let p = self.lamp_probability();
        let lamps: Rational = a
            .coloring
            .iter()
            .map(|&y| graph::total_distance(&self.h_dist, y))
            .sum();
        Ok(lamps + profile.expected_distance(a.position, &p)?)
    }

    /// The pTS profile of the base graph.
    pub fn base_profile(&self, g: &Graph) -> Result<TsProfile> {
        TsProfile::compute(g, &self.g_dist, &self.guards)
    }

    /// `(m - 1) / m`
    pub fn lamp_probability(&self) -> Rational {
        let m = self.codec.color_order as u64;
        Rational::new((m - 1).into(), m.into())
    }
}

pub fn wreath_distance(g: &Graph, h: &Graph, a: &WreathVertex, b: &WreathVertex, guards: &Guards) -> Result<u64> {
    WreathMetric::new(g, h, guards)?.distance(a, b)
}

pub fn wreath_total_distance(g: &Graph, h: &Graph, a: &WreathVertex, guards: &Guards) -> Result<Rational> {
    let metric = WreathMetric::new(g, h, guards)?;
    let profile = metric.base_profile(g)?;
    metric.total_distance(&profile, a)
}

/// Both sides of the wreath balance criterion, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathBalanceCheck {
    pub product_order: usize,
    /// `(m-1)/m` as `num/den`.
    pub p: String,
    pub product_db: bool,
    pub product_nicely_db: bool,
    pub factor_pts_db: bool,
    pub factor_h_db: bool,
    /// `product_db == (factor_pts_db && factor_h_db)`
    pub theorem_consistent: bool,
}

pub fn check_wreath_balance(g: &Graph, h: &Graph, guards: &Guards) -> Result<WreathBalanceCheck> {
    let (product, codec) = wreath_product(g, h, guards)?;
    let pd = apsp(&product)?;
    let product_db = graph::is_distance_balanced(&product, &pd);
    let product_nicely_db = graph::is_nicely_distance_balanced(&product, &pd);
    drop(pd);

    let gd = apsp(g)?;
    let hd = apsp(h)?;
    let m = codec.color_order() as u64;
    let p = Rational::new((m - 1).into(), m.into());
    let factor_pts_db = TsProfile::compute(g, &gd, guards)?.is_pts_distance_balanced(&p)?;
    let factor_h_db = graph::is_distance_balanced(h, &hd);
    Ok(WreathBalanceCheck {
        product_order: codec.order(),
        p: crate::exact::format_rational(&p),
        product_db,
        product_nicely_db,
        factor_pts_db,
        factor_h_db,
        theorem_consistent: product_db == (factor_pts_db && factor_h_db),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::graph::builtin::*;

    #[test]
    fn codec_round_trip() {
        let c = WreathCodec::new(3, 4).unwrap();
        assert_eq!(c.order(), 3 * 64);
        for idx in 0..c.order() {
            assert_eq!(c.encode(&c.decode(idx).unwrap()).unwrap(), idx);
        }
        let w = WreathVertex { coloring: vec![1, 2, 3], position: 2 };
        assert_eq!(c.encode(&w).unwrap(), 2 * 64 + 1 + 2 * 4 + 3 * 16);
        assert!(c.decode(c.order()).is_err());
        assert!(c.encode(&WreathVertex { coloring: vec![4, 0, 0], position: 0 }).is_err());
        assert!(WreathCodec::new(64, 1000).is_err());
    }

    #[test]
    fn small_products() {
        let g = Guards::default();
        let (p, _) = wreath_product(&complete(2), &complete(2), &g).unwrap();
        assert_eq!(p.order(), 8);
        assert!(p.is_connected());
        assert_eq!(p.regular_degree(), Some(2));

        let (p, _) = wreath_product(&cycle(3).unwrap(), &complete(2), &g).unwrap();
        assert_eq!(p.order(), 24);
        assert_eq!(p.regular_degree(), Some(3));
        assert!(!p.is_bipartite());

        let (p, _) = wreath_product(&wheel(7).unwrap(), &complete(2), &g).unwrap();
        assert_eq!(p.order(), 896);
    }

    #[test]
    fn product_guard() {
        let g = Guards { max_product: 100, ..Guards::default() };
        match wreath_product(&h9(), &complete(2), &g) {
            Err(Error::GuardExceeded { value, .. }) => assert_eq!(value, "4608"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn distance_basics() {
        let m = WreathMetric::new(&path(3).unwrap(), &complete(3), &Guards::default()).unwrap();
        let a = WreathVertex { coloring: vec![0, 1, 2], position: 1 };
        assert_eq!(m.distance(&a, &a).unwrap(), 0);
        let b = WreathVertex { position: 2, ..a.clone() };
        assert_eq!(m.distance(&a, &b).unwrap(), 1);
        let c = WreathVertex { coloring: vec![1, 1, 2], position: 1 };
        // recolor lamp 0: walk 1 -> 0 -> 1 plus one recoloring step
        assert_eq!(m.distance(&a, &c).unwrap(), 3);
    }

    #[test]
    fn k2_k2_total_distance() {
        // d_{K2}(y) = 1/2 per lamp, d^{1/2}_{K2}(x) = (1 + 2/2) / 2 = 1
        let t = wreath_total_distance(
            &complete(2),
            &complete(2),
            &WreathVertex { coloring: vec![0, 1], position: 0 },
            &Guards::default(),
        )
        .unwrap();
        assert_eq!(t, int(2));
    }

    #[test]
    fn k2_k2_balance() {
        let c = check_wreath_balance(&complete(2), &complete(2), &Guards::default()).unwrap();
        assert!(c.product_db && c.factor_pts_db && c.factor_h_db && c.theorem_consistent);
    }
}
