//! Exact chromatic and flow polynomials for trees joined to an apex vertex,
//! generalized wheels, clique joins and outerplanar multigraphs.

pub mod cli;
pub mod error;
pub mod multigraph;
pub mod oracle;
pub mod outerplanar;
pub mod polyring;
pub mod vjtree;
pub mod wheels;

pub use error::{Error, Result};
pub use multigraph::MultiGraph;
pub use polyring::IntPoly;
pub use vjtree::VertexJoinTree;
pub use wheels::PhiString;
