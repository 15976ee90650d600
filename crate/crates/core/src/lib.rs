//! Combinatorial lower bounds for chromatic numbers of Kneser-type graphs.
//!
//! The crate computes the alternation numbers `alt(H)` / `salt(H)` of a
//! hypergraph, builds and verifies moment-curve point configurations whose
//! open hemispheres always see a prescribed signed-increasing property,
//! computes exact chromatic and multichromatic numbers of the associated
//! Kneser graphs, and enumerates the box complexes `B(G)` and `B₀(G)`.

pub mod alternation;
pub mod bounds;
pub mod boxcomplex;
pub mod coloring;
pub mod error;
pub mod family;
pub mod gale;
pub mod graph;
pub mod hypergraph;

pub use error::{Error, Result};
