//! Edge-colouring, criticality and even-factor machinery for small simple
//! graphs, with executable checks of the structural lemmas relating
//! critical graphs and even factors.
//!
//! Everything works on [`Graph`], a simple undirected graph on `0..n`
//! read from graph6. Colourings use colours `1..=k`.

pub mod coloring;
pub mod criticality;
pub mod error;
pub mod even_factor;
pub mod graph;
pub mod graph6;
pub mod lemma;
pub mod scalar;
pub mod search;

pub use coloring::{
    align_missing, chromatic_index, color_exact, color_minus_edge, kempe_chain, kempe_swap,
    vizing_color, ChainKind, ChiVerdict, Color, ColorSearch, ColorSet, EdgeColoring, KempeChain,
};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeSet, Graph, VertexSet};
pub use graph6::{encode_graph6, parse_graph6};
pub use scalar::Scalar;
pub use search::Verdict;

/// Exact weights.
pub type Rational = num_rational::Ratio<i64>;
