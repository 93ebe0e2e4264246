//! Red/blue colorings of complete 3-uniform hypergraphs whose red parts have
//! tight-component structure, together with the tools used to check them.
//!
//! The crate is organised by concern:
//!
//! - [`hypergraph`]: 3-graphs, tight components, tripartitions, iterated
//!   tripartite recognition and red-copy embedding.
//! - [`trifference`]: random r-trifference codes over `{1,2,3}`.
//! - [`coloring`]: pair and triple colorings and the four builders.
//! - [`tree`]: weighted binary trees, rotations, the weight-budgeted score LP
//!   and split trees over integer sets.
//! - [`verify`]: checks that run on concrete coloring instances.
//! - [`extract`]: constructive blue clique extraction.
//! - [`format`]: the text file formats shared with the CLI.
//!
//! All randomness is drawn from [`rng::Stream`], a labeled ChaCha20 stream, so
//! every builder is reproducible from `(parameters, seed)`.

pub mod coloring;
pub mod combin;
pub mod error;
pub mod extract;
pub mod format;
pub mod hypergraph;
pub mod rng;
pub mod tree;
pub mod trifference;
pub mod verify;

pub use error::{Error, Result};

/// Vertex index. Vertices are dense `0..n`.
pub type Vertex = u32;

/// Unordered triple stored sorted ascending.
pub type Triple = [Vertex; 3];

/// Sorts three vertices into canonical triple order.
#[inline]
pub fn sort_triple(a: Vertex, b: Vertex, c: Vertex) -> Triple {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}
