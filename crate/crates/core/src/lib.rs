//! Forest-complex filtrations of simple graphs.
//!
//! For a graph `G` and a degree cap `d`, the complex `F_d(G)` has as faces the
//! vertex sets inducing a forest of maximum degree at most `d`. `F_0` is the
//! independence complex; the unbounded stage keeps every induced forest.
//!
//! The crate is split into:
//!
//! * [`graph`]: dense bitset graphs, family generators, products, blocks.
//! * [`complex`]: simplicial complexes, forest complexes, links, joins and
//!   Alexander duals.
//! * [`homology`]: boundary matrices, Smith normal form over `Z`, reduced
//!   (co)homology and relative homology.
//! * [`verify`]: the closed-form catalog, structural property suites and
//!   brute-force oracles.
//! * [`cli`]: the command-line front end used by the `forestcx` binary.

pub mod cli;
pub mod complex;
pub mod error;
pub mod formats;
pub mod graph;
pub mod homology;
pub mod verify;

pub use complex::{DegreeBound, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use homology::HomologyProfile;
