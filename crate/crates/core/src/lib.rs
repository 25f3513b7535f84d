//! Exact computation of the attainable (triangle density, square density)
//! region of `r`-regular graphs.
//!
//! The crate is organised by subsystem:
//!
//! - [`graph`] and [`profile`]: finite simple graphs and every per-vertex
//!   cycle statistic (triangles, four-cycles by diagonal type, the weighted
//!   square count, triple profiles).
//! - [`hypergraph`], [`construct`] and [`extreme`]: high-girth hypergraphs and
//!   the extreme graphs `C^r_l` obtained from them by clique expansion.
//! - [`polytope`]: the polygon `Q^r`, its boundary, the scaled limit region
//!   and the moment region, all in exact rational arithmetic.
//! - [`realize`]: explicit graphs realizing any rational point of `Q^r`.
//! - [`spectral`]: closed-walk moments of the random-walk eigenvalue
//!   distribution.
//! - [`enumerate`] and [`verify`]: exhaustive regular-graph generation and the
//!   property suites built on it.
//! - [`sample`]: configuration-model sampling of random regular graphs.
//! - [`svg`]: deterministic SVG figures.

pub mod construct;
pub mod enumerate;
mod error;
pub mod extreme;
pub mod graph;
pub mod hypergraph;
pub mod polytope;
pub mod profile;
pub mod rational;
pub mod realize;
pub mod sample;
pub mod spectral;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::{DegreeProfile, Hypergraph, Partition};
pub use polytope::{Location, Polygon};
pub use profile::{LocalProfile, TripleProfile};
pub use rational::{QPoint, Rat};
