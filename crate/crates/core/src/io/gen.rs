//! Seeded graph generators. The same seed always yields the same graph.

use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{
    complete_graph, star_graph, tensor_product, vertex_coord, Edge, Graph, Subsystem,
    TripartiteDims,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Star,
    /// `G1 ⊗ G2 ⊗ G3` with random factors on `m`, `p` and `q` vertices.
    Tensor,
    /// Random subset of the unit-cell edges of the `m × p × q` grid.
    NearestRandom,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            "tensor" => Ok(Family::Tensor),
            "nearest-random" => Ok(Family::NearestRandom),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

/// Every edge whose endpoints differ by at most one in each coordinate.
pub fn nearest_point_edges(dims: TripartiteDims) -> Vec<Edge> {
    let n = dims.n();
    let coords: Vec<_> = (1..=n)
        .map(|s| vertex_coord(s, dims).expect("in range"))
        .collect();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            let (x, y) = (coords[a - 1], coords[b - 1]);
            if Subsystem::ALL
                .into_iter()
                .all(|s| x.get(s).abs_diff(y.get(s)) <= 1)
            {
                out.push(Edge::new(a, b).expect("distinct"));
            }
        }
    }
    out
}

/// Keeps each candidate edge with probability 1/2, redrawing until at least
/// one edge survives.
pub fn random_subgraph<R: Rng>(rng: &mut R, dims: TripartiteDims, candidates: &[Edge]) -> Graph {
    assert!(!candidates.is_empty(), "no candidate edges");
    loop {
        let mut g = Graph::empty(dims);
        for e in candidates {
            if rng.gen_bool(0.5) {
                g.insert(*e).expect("candidates are in range");
            }
        }
        if g.edge_count() > 0 {
            return g;
        }
    }
}

/// Random graph on `n ≥ 2` flat vertices with at least one edge.
pub fn random_factor<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let dims = TripartiteDims::flat(n).expect("positive");
    random_subgraph(
        rng,
        dims,
        &complete_graph(dims).edges().copied().collect::<Vec<_>>(),
    )
}

pub fn generate(family: Family, dims: TripartiteDims, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        Family::Complete => Ok(complete_graph(dims)),
        Family::Star => star_graph(dims),
        Family::Tensor => {
            if dims.as_array().iter().any(|&d| d < 2) {
                return Err(Error::InvalidArgument(
                    "tensor factors need at least 2 vertices each".into(),
                ));
            }
            let g1 = random_factor(&mut rng, dims.m);
            let g2 = random_factor(&mut rng, dims.p);
            let g3 = random_factor(&mut rng, dims.q);
            Ok(tensor_product(&g1, &g2, &g3))
        }
        Family::NearestRandom => {
            let candidates = nearest_point_edges(dims);
            if candidates.is_empty() {
                return Err(Error::InvalidArgument("dims admit no edges".into()));
            }
            Ok(random_subgraph(&mut rng, dims, &candidates))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_nearest_point_graph;

    #[test]
    fn cube_has_every_pair_as_a_neighbour() {
        let cube = TripartiteDims::new(2, 2, 2).unwrap();
        assert_eq!(nearest_point_edges(cube).len(), 28);
        // 3×2×2: two unit cells sharing a face.
        assert_eq!(
            nearest_point_edges(TripartiteDims::new(3, 2, 2).unwrap()).len(),
            28 * 2 - 6
        );
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let dims = TripartiteDims::new(3, 2, 2).unwrap();
        for family in [
            Family::Complete,
            Family::Star,
            Family::Tensor,
            Family::NearestRandom,
        ] {
            assert_eq!(
                generate(family, dims, 7).unwrap(),
                generate(family, dims, 7).unwrap()
            );
        }
        let g = generate(Family::NearestRandom, dims, 3).unwrap();
        assert!(is_nearest_point_graph(&g) && g.edge_count() > 0);
        assert_eq!(generate(Family::Tensor, dims, 1).unwrap().dims(), dims);
        assert!(generate(Family::Tensor, TripartiteDims::new(1, 2, 2).unwrap(), 1).is_err());
        assert!("ring".parse::<Family>().is_err());
    }
}
