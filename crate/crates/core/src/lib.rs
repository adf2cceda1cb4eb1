//! Exact tripartite separability analysis for density matrices of graphs.
//!
//! A graph on `n = m·p·q` vertices defines the state `ρ(G) = L(G)/d_G` on
//! `C^m ⊗ C^p ⊗ C^q`. This crate decides entanglement with the Peres test
//! over exact rationals and builds explicit separable decompositions where
//! the edge structure allows one.

pub mod density;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod separability;
pub mod transpose;

pub use density::{
    density_matrix, edge_factor, edge_factor_plus, partial_transpose, partial_transpose_matrix,
    rho_complete, rho_plus, rho_star, DensityMatrix,
};
pub use error::{Error, Result};
pub use graph::{
    adjacency_matrix, apply_vertex_permutation, classify_edge, complete_graph, degree_matrix,
    is_nearest_point_graph, laplacian, star_graph, tensor_product, vertex_coord, vertex_index,
    Edge, EdgeClass, Graph, Subsystem, TripartiteDims, VertexCoord,
};
pub use linalg::{CharPoly, Poly, RatMatrix, Rational};
pub use separability::{
    classify, decompose_by_edge_orbits, decompose_quadruple, decompose_tensor_product, ppt_test,
    star_witness, verify_decomposition, SeparableDecomposition, Verdict,
};
pub use transpose::{degree_condition, partial_transpose_graph, DegreeReport};
