//! Graph files, JSON certificates and seeded generators.

mod gen;
mod json;
mod text;

pub use gen::{generate, nearest_point_edges, random_factor, random_subgraph, Family};
pub use json::{
    matrix_to_text, serde_poly, verify_certificate, Certificate, CertificateCheck, GraphJson,
    MatrixJson, WitnessJson,
};
pub use text::{parse_graph, parse_graph_with_warnings, write_graph, ParseWarning};
