//! Triangulations of closed n-manifolds and their colorings.
//!
//! This crate builds, validates and generates triangulations, computes
//! facet 2-colorings and Grünbaum hyper-colorings ((n+1)-colorings of the
//! (n-1)-faces showing every color on every facet boundary), and ships
//! exact solvers and verifiers for desk-scale instances:
//!
//! - [`complex`]: simplicial complexes, validation, Euler characteristic,
//!   orientability, automorphisms.
//! - [`graph`]: the facet-adjacency graph A(T), bipartition, matchings,
//!   König edge coloring of regular bipartite graphs, exact edge coloring,
//!   snark recognition.
//! - [`coloring`]: facet 2-colorings, the 2-coloring-to-hyper-coloring
//!   pipeline, the 4-class and tripartite rules, exact search, counting up
//!   to isomorphism, quadrangulation extraction, scalene labelings.
//! - [`generators`]: barycentric subdivision, bipyramidal crowning, the
//!   glue (connected-sum) operator, cross-polytope boundaries, and a
//!   catalog of named complexes and graphs.
//! - [`files`] and [`cli`]: the text formats and the `grunbaum` command
//!   line tool.
//!
//! Everything is deterministic: identical inputs produce identical outputs,
//! including file renderings. All values are immutable after construction
//! and all operations are pure, so they can be shared freely across
//! threads.
//!
//! ```
//! use grunbaum::generators::catalog;
//! use grunbaum::coloring::{facet_two_coloring, grunbaum_from_two_coloring, verify_grunbaum};
//!
//! let oct = catalog::octahedron();
//! let two = facet_two_coloring(&oct).expect("the octahedron is facet 2-colorable");
//! let hyper = grunbaum_from_two_coloring(&oct, &two).unwrap();
//! assert!(verify_grunbaum(&oct, &hyper).unwrap());
//! ```

pub mod cli;
pub mod coloring;
pub mod complex;
pub mod files;
pub mod generators;
pub mod graph;

pub use coloring::{
    count_grunbaum_nonisomorphic, exact_grunbaum, facet_two_coloring, grunbaum_from_two_coloring,
    grunbaum_from_vertex4, grunbaum_tripartite, quadrangulate, remove_color_class,
    scalene_labeling, verify_grunbaum, vertex_coloring_exact, ColoringError, FacetColor,
    FacetTwoColoring, GrunbaumColoring, Quadrangulation, ScaleneLabeling, VertexColoring,
};
pub use complex::{
    validate, ComplexError, Orientation, Permutation, Simplex, Triangulation, ValidationReport,
    VertexId,
};
pub use generators::{
    barycentric_subdivision, bipyramidal_crown, catalog, cross_polytope, glue, glue_canonical,
    GeneratorError,
};
pub use graph::{
    bipartition, exact_edge_coloring, facet_adjacency, is_snark, max_bipartite_matching,
    regular_bipartite_edge_coloring, skeleton, Bipartition, EdgeColoring, FacetAdjacency,
    GraphError, Matching, SimpleGraph,
};
