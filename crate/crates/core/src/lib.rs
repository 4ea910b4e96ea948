//! Exact travelling-salesman distance functionals on small graphs.
//!
//! The crate computes shortest visiting-walk lengths `rho_A(u, v)`, the
//! expected distances `d^p(u)` of the probabilistic travelling-salesman
//! model, total distance vectors, and certifies (p)TS-distance-balancedness
//! with exact rational arithmetic. It also builds wreath (lamplighter)
//! products, computes automorphism orbits, and scans graph streams for
//! vertices with equal total distance vectors in different orbits.
//!
//! Every analysis expects a connected graph; a [`graph::DistanceMatrix`]
//! can only be built for one, so functions taking a distance matrix never
//! see a disconnected input.

pub mod error;
pub mod exact;
pub mod graph;
pub mod report;
pub mod symmetry;
pub mod ts;
pub mod walk;
pub mod wreath;

pub use error::{Error, Result};
pub use exact::{IntPolynomial, Rational, RootSet};
pub use graph::{apsp, DistanceMatrix, Graph};
pub use walk::VisitSet;

/// Size limits for the exponential and product-size computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Guards {
    /// Largest graph order for subset dynamic programming and orbit search.
    pub max_order: usize,
    /// Largest order of an explicitly constructed wreath product.
    pub max_product: usize,
}

/// Subset masks are 64-bit and vector entries are `u64`; beyond this the
/// exact computation is out of reach anyway.
pub const HARD_MAX_ORDER: usize = 32;

pub const DEFAULT_MAX_ORDER: usize = 20;
pub const DEFAULT_MAX_PRODUCT: usize = 100_000;

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_order: DEFAULT_MAX_ORDER,
            max_product: DEFAULT_MAX_PRODUCT,
        }
    }
}

impl Guards {
    pub fn check_order(&self, n: usize) -> Result<()> {
        let limit = self.max_order.min(HARD_MAX_ORDER);
        if n > limit {
            Err(Error::guard("graph order", n, limit))
        } else {
            Ok(())
        }
    }
}
