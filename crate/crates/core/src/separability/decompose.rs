use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{
    classify_edge, vertex_index, EdgeClass, Graph, Subsystem, TripartiteDims, VertexCoord,
};
use crate::linalg::rat;
use crate::transpose::{degree_condition, transpose_edge};

use super::product::{
    negative_sign_patterns, sign_pattern_states, PureProductState, SeparableDecomposition,
};

/// Four product states of weight 1/4 whose mixture is the uniform mixture σ
/// of the edge factors `{x, y}`, `{T_A}`, `{T_B}`, `{T_C}` images.
pub fn decompose_quadruple(
    x: VertexCoord,
    y: VertexCoord,
    dims: TripartiteDims,
) -> Result<SeparableDecomposition> {
    vertex_index(x, dims)?;
    vertex_index(y, dims)?;
    if let Some(s) = Subsystem::ALL.into_iter().find(|&s| x.get(s) == y.get(s)) {
        return Err(Error::InvalidArgument(format!(
            "{x} and {y} agree on subsystem {s}; a quadruple needs all three to differ"
        )));
    }
    let mut d = SeparableDecomposition::default();
    for state in sign_pattern_states(x, y, dims) {
        d.push(rat(1, 4), state);
    }
    Ok(d)
}

/// Explicit decomposition of `ρ(G)` built from the partial-transpose orbits
/// of its edges.
///
/// Edges are visited in canonical order. A OneCoord edge is its own orbit
/// and gives one product term. A TwoCoord edge pairs with its image under
/// the swap on its first differing subsystem and the pair gives two terms.
/// A ThreeCoord edge and its three images give four terms. Every term has
/// weight `1/|E|`.
pub fn decompose_by_edge_orbits(g: &Graph) -> Result<SeparableDecomposition> {
    if g.edge_count() == 0 {
        return Err(Error::DensityUndefined);
    }
    if !degree_condition(g).holds {
        return Err(Error::DegreeConditionFails);
    }
    let dims = g.dims();
    let weight = rat(1, g.edge_count() as i64);
    let mut consumed = BTreeSet::new();
    let mut d = SeparableDecomposition::default();
    for e in g.edges() {
        if consumed.contains(e) {
            continue;
        }
        let swaps: &[Subsystem] = match classify_edge(e, dims)? {
            EdgeClass::OneCoord(_) => &[],
            // Swapping either differing coordinate gives the same partner.
            EdgeClass::TwoCoord(s, _) => match s {
                Subsystem::A => &[Subsystem::A],
                Subsystem::B => &[Subsystem::B],
                Subsystem::C => unreachable!("C is never the first of two"),
            },
            EdgeClass::ThreeCoord => &Subsystem::ALL,
        };
        consumed.insert(*e);
        for &s in swaps {
            let partner = transpose_edge(g, e, s);
            if !g.contains(&partner) {
                return Err(Error::OrbitPairing {
                    edge: *e,
                    missing: partner,
                    subsystem: s,
                });
            }
            consumed.insert(partner);
        }
        let (x, y) = g.edge_coords(e);
        for state in sign_pattern_states(x, y, dims) {
            d.push(weight.clone(), state);
        }
    }
    Ok(d)
}

fn edge_combination(n: usize, (c, d): (usize, usize), sign: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[c - 1] = 1;
    v[d - 1] = sign;
    v
}

/// Decomposition of `ρ(G1 ⊗ G2 ⊗ G3)`: for each edge triple, the four sign
/// patterns with product −1 over the per-factor combinations `|c⟩ ± |d⟩`.
pub fn decompose_tensor_product(
    g1: &Graph,
    g2: &Graph,
    g3: &Graph,
) -> Result<SeparableDecomposition> {
    for (idx, g) in [g1, g2, g3].into_iter().enumerate() {
        if g.edge_count() == 0 {
            return Err(Error::InvalidArgument(format!(
                "tensor factor {} has no edges",
                idx + 1
            )));
        }
    }
    let triples = g1.edge_count() * g2.edge_count() * g3.edge_count();
    let weight = rat(1, 4 * triples as i64);
    let mut d = SeparableDecomposition::default();
    for e1 in g1.edges() {
        for e2 in g2.edges() {
            for e3 in g3.edges() {
                for pattern in negative_sign_patterns(3) {
                    let state = PureProductState::new(
                        edge_combination(g1.n(), e1.endpoints(), pattern[0]),
                        edge_combination(g2.n(), e2.endpoints(), pattern[1]),
                        edge_combination(g3.n(), e3.endpoints(), pattern[2]),
                    )?;
                    d.push(weight.clone(), state);
                }
            }
        }
    }
    Ok(d)
}
