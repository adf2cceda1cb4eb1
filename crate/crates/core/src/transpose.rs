//! Partially transposed graphs and the degree condition.

use serde::{Deserialize, Serialize};

use crate::graph::{vertex_index, Edge, Graph, Subsystem};

/// Image of an edge under the partner map for `sub`: the `sub` coordinate is
/// exchanged between the two endpoints.
///
/// An edge whose endpoints agree on `sub` is a fixed point.
pub fn transpose_edge(g: &Graph, e: &Edge, sub: Subsystem) -> Edge {
    let dims = g.dims();
    let (x, y) = g.edge_coords(e);
    let x2 = x.with(sub, y.get(sub));
    let y2 = y.with(sub, x.get(sub));
    let a = vertex_index(x2, dims).expect("coordinates stay in range");
    let b = vertex_index(y2, dims).expect("coordinates stay in range");
    // Endpoints of a loop-free edge differ in some coordinate; swapping one
    // coordinate keeps them different.
    debug_assert_ne!(a, b);
    Edge::new(a, b).expect("transpose of an edge is never a loop")
}

/// `G^Γ` for one subsystem. Its adjacency matrix is the matrix partial
/// transpose of `M(G)`.
pub fn partial_transpose_graph(g: &Graph, sub: Subsystem) -> Graph {
    let mut out = Graph::empty(g.dims());
    for e in g.edges() {
        out.insert(transpose_edge(g, e, sub))
            .expect("endpoints stay in range");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMismatch {
    pub vertex: usize,
    pub degree: usize,
    pub transposed_degree: usize,
}

/// Outcome of comparing `Δ(G)` against `Δ(G^{Γ_A})`, `Δ(G^{Γ_B})`,
/// `Δ(G^{Γ_C})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub holds: bool,
    #[serde(rename = "A")]
    pub a: Vec<DegreeMismatch>,
    #[serde(rename = "B")]
    pub b: Vec<DegreeMismatch>,
    #[serde(rename = "C")]
    pub c: Vec<DegreeMismatch>,
}

impl DegreeReport {
    pub fn mismatches(&self, sub: Subsystem) -> &[DegreeMismatch] {
        match sub {
            Subsystem::A => &self.a,
            Subsystem::B => &self.b,
            Subsystem::C => &self.c,
        }
    }
}

pub fn degree_mismatches(g: &Graph, sub: Subsystem) -> Vec<DegreeMismatch> {
    let deg = g.degrees();
    let tdeg = partial_transpose_graph(g, sub).degrees();
    deg.iter()
        .zip(&tdeg)
        .enumerate()
        .filter(|(_, (d, t))| d != t)
        .map(|(v, (&degree, &transposed_degree))| DegreeMismatch {
            vertex: v + 1,
            degree,
            transposed_degree,
        })
        .collect()
}

/// Degree condition `Δ(G) = Δ(G^{Γ_A}) = Δ(G^{Γ_B}) = Δ(G^{Γ_C})`, with
/// every violating vertex listed per subsystem.
pub fn degree_condition(g: &Graph) -> DegreeReport {
    let [a, b, c] = Subsystem::ALL.map(|s| degree_mismatches(g, s));
    DegreeReport {
        holds: a.is_empty() && b.is_empty() && c.is_empty(),
        a,
        b,
        c,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, TripartiteDims, VertexCoord};

    fn dims() -> TripartiteDims {
        TripartiteDims::new(3, 2, 2).unwrap()
    }

    fn one_edge(x: (usize, usize, usize), y: (usize, usize, usize)) -> Graph {
        Graph::from_coords(
            dims(),
            [(
                VertexCoord::new(x.0, x.1, x.2),
                VertexCoord::new(y.0, y.1, y.2),
            )],
        )
        .unwrap()
    }

    #[test]
    fn example_graph_transposes() {
        let g = one_edge((1, 1, 1), (2, 2, 2));
        assert_eq!(
            partial_transpose_graph(&g, Subsystem::A),
            one_edge((2, 1, 1), (1, 2, 2))
        );
        let twice =
            partial_transpose_graph(&partial_transpose_graph(&g, Subsystem::A), Subsystem::A);
        assert_eq!(twice, g);

        let report = degree_condition(&g);
        assert!(!report.holds);
        // Vertices 1 and 8 lose their edge to 4 and 5 under every transpose.
        let vertices: Vec<_> = report.a.iter().map(|m| m.vertex).collect();
        assert_eq!(vertices, vec![1, 4, 5, 8]);
        assert_eq!(
            report.a[0],
            DegreeMismatch {
                vertex: 1,
                degree: 1,
                transposed_degree: 0
            }
        );
    }

    #[test]
    fn one_coordinate_edges_are_fixed() {
        let h = one_edge((1, 1, 1), (1, 1, 2));
        for s in Subsystem::ALL {
            assert_eq!(partial_transpose_graph(&h, s), h);
        }
        assert!(degree_condition(&h).holds);
    }

    #[test]
    fn complete_graph_satisfies_condition() {
        let k = complete_graph(dims());
        for s in Subsystem::ALL {
            assert_eq!(partial_transpose_graph(&k, s), k);
        }
        assert!(degree_condition(&k).holds);
    }

    #[test]
    fn edgeless_graph_holds_vacuously() {
        assert!(degree_condition(&Graph::empty(dims())).holds);
    }
}
