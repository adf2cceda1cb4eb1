//! Graphs on `n = m·p·q` vertices with tripartite vertex labels.
//!
//! Vertices are flat indices `1..=n`. Vertex `s` carries the label
//! `u_i v_j w_k` with `s = (i−1)pq + (j−1)q + k`, so the flat order agrees
//! with the Kronecker order of `C^m ⊗ C^p ⊗ C^q`. Matrices built from a graph
//! use zero-based rows, i.e. row `s − 1` belongs to vertex `s`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{int, RatMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
    C,
}

impl Subsystem {
    pub const ALL: [Subsystem; 3] = [Subsystem::A, Subsystem::B, Subsystem::C];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Subsystem::A => "A",
            Subsystem::B => "B",
            Subsystem::C => "C",
        };
        f.write_str(s)
    }
}

impl FromStr for Subsystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Subsystem::A),
            "B" | "b" => Ok(Subsystem::B),
            "C" | "c" => Ok(Subsystem::C),
            other => Err(Error::InvalidArgument(format!(
                "unknown subsystem {other:?}"
            ))),
        }
    }
}

/// Local dimensions `(m, p, q)` of `C^m ⊗ C^p ⊗ C^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripartiteDims {
    pub m: usize,
    pub p: usize,
    pub q: usize,
}

impl TripartiteDims {
    pub fn new(m: usize, p: usize, q: usize) -> Result<Self> {
        if m == 0 || p == 0 || q == 0 {
            return Err(Error::InvalidArgument(format!(
                "dims must be positive, got ({m}, {p}, {q})"
            )));
        }
        Ok(Self { m, p, q })
    }

    /// `(n, 1, 1)`: a plain graph with no tripartite structure.
    pub fn flat(n: usize) -> Result<Self> {
        Self::new(n, 1, 1)
    }

    pub fn n(&self) -> usize {
        self.m * self.p * self.q
    }

    pub fn get(&self, sub: Subsystem) -> usize {
        match sub {
            Subsystem::A => self.m,
            Subsystem::B => self.p,
            Subsystem::C => self.q,
        }
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.m, self.p, self.q]
    }
}

/// One-based coordinates `(i, j, k)` of the vertex `u_i v_j w_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexCoord {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl VertexCoord {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        Self { i, j, k }
    }

    pub fn get(&self, sub: Subsystem) -> usize {
        match sub {
            Subsystem::A => self.i,
            Subsystem::B => self.j,
            Subsystem::C => self.k,
        }
    }

    pub fn with(mut self, sub: Subsystem, value: usize) -> Self {
        match sub {
            Subsystem::A => self.i = value,
            Subsystem::B => self.j = value,
            Subsystem::C => self.k = value,
        }
        self
    }
}

impl fmt::Display for VertexCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u{}v{}w{}", self.i, self.j, self.k)
    }
}

pub fn vertex_index(c: VertexCoord, d: TripartiteDims) -> Result<usize> {
    if !(1..=d.m).contains(&c.i) || !(1..=d.p).contains(&c.j) || !(1..=d.q).contains(&c.k) {
        return Err(Error::CoordOutOfRange {
            i: c.i,
            j: c.j,
            k: c.k,
            m: d.m,
            p: d.p,
            q: d.q,
        });
    }
    Ok((c.i - 1) * d.p * d.q + (c.j - 1) * d.q + c.k)
}

pub fn vertex_coord(s: usize, d: TripartiteDims) -> Result<VertexCoord> {
    if !(1..=d.n()).contains(&s) {
        return Err(Error::VertexOutOfRange {
            vertex: s,
            n: d.n(),
        });
    }
    let z = s - 1;
    Ok(VertexCoord {
        i: z / (d.p * d.q) + 1,
        j: (z / d.q) % d.p + 1,
        k: z % d.q + 1,
    })
}

/// Unordered loop-free edge between flat vertices, stored smaller index first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    a: usize,
    b: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::Loop(a));
        }
        Ok(Self {
            a: a.min(b),
            b: a.max(b),
        })
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.a, e.b]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from([a, b]: [usize; 2]) -> Result<Self> {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.a, self.b)
    }
}

/// Loop-free simple graph with tripartite dimensions attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    dims: TripartiteDims,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn empty(dims: TripartiteDims) -> Self {
        Self {
            dims,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph from flat vertex pairs; duplicates collapse silently.
    pub fn new(
        dims: TripartiteDims,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Self::empty(dims);
        for (a, b) in pairs {
            g.insert(Edge::new(a, b)?)?;
        }
        Ok(g)
    }

    pub fn from_coords(
        dims: TripartiteDims,
        pairs: impl IntoIterator<Item = (VertexCoord, VertexCoord)>,
    ) -> Result<Self> {
        let mut g = Self::empty(dims);
        for (x, y) in pairs {
            let e = Edge::new(vertex_index(x, dims)?, vertex_index(y, dims)?)?;
            g.insert(e)?;
        }
        Ok(g)
    }

    /// Returns `false` when the edge was already present.
    pub fn insert(&mut self, e: Edge) -> Result<bool> {
        let n = self.dims.n();
        if e.b > n {
            return Err(Error::VertexOutOfRange { vertex: e.b, n });
        }
        if e.a == 0 {
            return Err(Error::VertexOutOfRange { vertex: 0, n });
        }
        Ok(self.edges.insert(e))
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.edges.remove(e)
    }

    pub fn dims(&self) -> TripartiteDims {
        self.dims
    }

    /// Same edge set viewed under different dims with the same vertex count.
    pub fn with_dims(&self, dims: TripartiteDims) -> Result<Self> {
        if dims.n() != self.dims.n() {
            return Err(Error::DimsMismatch {
                order: self.dims.n(),
                product: dims.n(),
            });
        }
        Ok(Self {
            dims,
            edges: self.edges.clone(),
        })
    }

    pub fn n(&self) -> usize {
        self.dims.n()
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &Edge> + '_ {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    /// Edge-membership indicator for two flat vertices.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        Edge::new(a, b).is_ok_and(|e| self.edges.contains(&e))
    }

    /// Degrees indexed by `vertex − 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n()];
        for e in &self.edges {
            deg[e.a - 1] += 1;
            deg[e.b - 1] += 1;
        }
        deg
    }

    pub fn degree_sum(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn coord(&self, v: usize) -> Result<VertexCoord> {
        vertex_coord(v, self.dims)
    }

    pub fn edge_coords(&self, e: &Edge) -> (VertexCoord, VertexCoord) {
        (
            vertex_coord(e.a, self.dims).expect("edge endpoints validated on insert"),
            vertex_coord(e.b, self.dims).expect("edge endpoints validated on insert"),
        )
    }

    pub fn filter_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> Self {
        Self {
            dims: self.dims,
            edges: self.edges.iter().filter(|e| keep(e)).copied().collect(),
        }
    }
}

pub fn adjacency_matrix(g: &Graph) -> RatMatrix {
    let mut m = RatMatrix::zeros(g.n());
    for e in g.edges() {
        m[(e.a - 1, e.b - 1)] = int(1);
        m[(e.b - 1, e.a - 1)] = int(1);
    }
    m
}

pub fn degree_matrix(g: &Graph) -> RatMatrix {
    let deg: Vec<_> = g.degrees().into_iter().map(|d| int(d as i64)).collect();
    RatMatrix::diagonal(&deg)
}

/// Combinatorial laplacian `Δ(G) − M(G)`.
pub fn laplacian(g: &Graph) -> RatMatrix {
    &degree_matrix(g) - &adjacency_matrix(g)
}

/// `G1 ⊗ G2 ⊗ G3`, whose adjacency is `M(G1) ⊗ M(G2) ⊗ M(G3)`. The result
/// has dims `(|V(G1)|, |V(G2)|, |V(G3)|)`.
pub fn tensor_product(g1: &Graph, g2: &Graph, g3: &Graph) -> Graph {
    let dims = TripartiteDims::new(g1.n(), g2.n(), g3.n()).expect("graphs have vertices");
    let mut out = Graph::empty(dims);
    let idx = |i, j, k| vertex_index(VertexCoord::new(i, j, k), dims).expect("in range");
    for &Edge { a: a1, b: b1 } in g1.edges() {
        for &Edge { a: a2, b: b2 } in g2.edges() {
            for &Edge { a: a3, b: b3 } in g3.edges() {
                // Fixing the first factor's orientation, the other two give
                // the four distinct unordered edges.
                for (x2, y2) in [(a2, b2), (b2, a2)] {
                    for (x3, y3) in [(a3, b3), (b3, a3)] {
                        let e = Edge::new(idx(a1, x2, x3), idx(b1, y2, y3)).expect("distinct");
                        out.edges.insert(e);
                    }
                }
            }
        }
    }
    out
}

/// `K_n` with `n = dims.n()`.
pub fn complete_graph(dims: TripartiteDims) -> Graph {
    let n = dims.n();
    let mut g = Graph::empty(dims);
    for a in 1..=n {
        for b in a + 1..=n {
            g.edges.insert(Edge { a, b });
        }
    }
    g
}

/// Star `K_{1,n−1}` centred at vertex 1 (`u_1 v_1 w_1`).
pub fn star_graph(dims: TripartiteDims) -> Result<Graph> {
    let n = dims.n();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "a star graph needs at least 2 vertices, got {n}"
        )));
    }
    let mut g = Graph::empty(dims);
    for b in 2..=n {
        g.edges.insert(Edge { a: 1, b });
    }
    Ok(g)
}

/// Which coordinates differ between the endpoints of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    OneCoord(Subsystem),
    /// The two differing subsystems, in `A < B < C` order.
    TwoCoord(Subsystem, Subsystem),
    /// Differs in every coordinate: an entangled edge.
    ThreeCoord,
}

impl EdgeClass {
    pub fn differing(&self) -> Vec<Subsystem> {
        match *self {
            EdgeClass::OneCoord(s) => vec![s],
            EdgeClass::TwoCoord(s, t) => vec![s, t],
            EdgeClass::ThreeCoord => Subsystem::ALL.to_vec(),
        }
    }
}

pub fn classify_edge(e: &Edge, d: TripartiteDims) -> Result<EdgeClass> {
    let x = vertex_coord(e.a, d)?;
    let y = vertex_coord(e.b, d)?;
    let diff: Vec<Subsystem> = Subsystem::ALL
        .into_iter()
        .filter(|&s| x.get(s) != y.get(s))
        .collect();
    Ok(match diff.as_slice() {
        [s] => EdgeClass::OneCoord(*s),
        [s, t] => EdgeClass::TwoCoord(*s, *t),
        [_, _, _] => EdgeClass::ThreeCoord,
        _ => unreachable!("distinct flat indices differ in some coordinate"),
    })
}

/// Every edge joins two points of one unit cell of the `m × p × q` grid,
/// i.e. has length 1, √2 or √3. Both diagonal orientations count.
pub fn is_nearest_point_graph(g: &Graph) -> bool {
    g.edges().all(|e| {
        let (x, y) = g.edge_coords(e);
        Subsystem::ALL
            .into_iter()
            .all(|s| x.get(s).abs_diff(y.get(s)) <= 1)
    })
}

/// Relabels vertex `v` as `perm[v − 1]` (one-based images), i.e. the graph
/// with adjacency `P·M(G)·Pᵀ`.
pub fn apply_vertex_permutation(g: &Graph, perm: &[usize]) -> Result<Graph> {
    let n = g.n();
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation has {} entries for {n} vertices",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in perm {
        if !(1..=n).contains(&v) || std::mem::replace(&mut seen[v - 1], true) {
            return Err(Error::InvalidArgument("not a bijection on 1..=n".into()));
        }
    }
    let mut out = Graph::empty(g.dims);
    for e in g.edges() {
        out.edges.insert(
            Edge::new(perm[e.a - 1], perm[e.b - 1]).expect("bijection keeps endpoints distinct"),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{is_psd_exact, RatMatrix};

    fn d(m: usize, p: usize, q: usize) -> TripartiteDims {
        TripartiteDims::new(m, p, q).unwrap()
    }

    fn example_graph() -> Graph {
        Graph::from_coords(
            d(3, 2, 2),
            [(VertexCoord::new(1, 1, 1), VertexCoord::new(2, 2, 2))],
        )
        .unwrap()
    }

    #[test]
    fn flat_indexing() {
        let dims = d(3, 2, 2);
        assert_eq!(vertex_index(VertexCoord::new(1, 1, 1), dims).unwrap(), 1);
        assert_eq!(vertex_index(VertexCoord::new(2, 2, 2), dims).unwrap(), 8);
        assert_eq!(vertex_index(VertexCoord::new(3, 2, 2), dims).unwrap(), 12);
        assert!(vertex_index(VertexCoord::new(4, 1, 1), dims).is_err());
        assert!(vertex_index(VertexCoord::new(1, 0, 1), dims).is_err());
        assert!(vertex_coord(13, dims).is_err());
    }

    #[test]
    fn adjacency_examples() {
        let single = Graph::new(TripartiteDims::flat(2).unwrap(), [(1, 2)]).unwrap();
        assert_eq!(
            adjacency_matrix(&single),
            RatMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
        );
        let k3 = complete_graph(TripartiteDims::flat(3).unwrap());
        assert_eq!(
            adjacency_matrix(&k3),
            &RatMatrix::ones(3) - &RatMatrix::identity(3)
        );
        assert!(adjacency_matrix(&Graph::empty(d(2, 2, 2))).is_zero());
    }

    #[test]
    fn degree_examples() {
        let g = Graph::new(TripartiteDims::flat(3).unwrap(), [(1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 1, 0]);
        assert_eq!(
            complete_graph(TripartiteDims::flat(4).unwrap()).degrees(),
            vec![3; 4]
        );
        let star = star_graph(TripartiteDims::flat(4).unwrap()).unwrap();
        assert_eq!(
            degree_matrix(&star),
            RatMatrix::from_i64_rows(&[
                vec![3, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![0, 0, 0, 1]
            ])
            .unwrap()
        );
    }

    #[test]
    fn laplacian_examples() {
        let single = Graph::new(TripartiteDims::flat(2).unwrap(), [(1, 2)]).unwrap();
        assert_eq!(
            laplacian(&single),
            RatMatrix::from_i64_rows(&[vec![1, -1], vec![-1, 1]]).unwrap()
        );
        let k3 = complete_graph(TripartiteDims::flat(3).unwrap());
        assert_eq!(
            laplacian(&k3),
            &RatMatrix::identity(3).scale(&int(3)) - &RatMatrix::ones(3)
        );
        assert!(laplacian(&Graph::empty(d(1, 1, 3))).is_zero());
        assert!(is_psd_exact(&laplacian(&k3)).unwrap());
    }

    #[test]
    fn constructions() {
        assert_eq!(
            complete_graph(TripartiteDims::flat(4).unwrap()).edge_count(),
            6
        );
        assert_eq!(
            complete_graph(TripartiteDims::flat(1).unwrap()).edge_count(),
            0
        );
        let star = star_graph(TripartiteDims::flat(4).unwrap()).unwrap();
        let edges: Vec<_> = star.edges().map(|e| e.endpoints()).collect();
        assert_eq!(edges, vec![(1, 2), (1, 3), (1, 4)]);
        assert!(star_graph(TripartiteDims::flat(1).unwrap()).is_err());
    }

    #[test]
    fn tensor_product_counts() {
        let k2 = complete_graph(TripartiteDims::flat(2).unwrap());
        let k3 = complete_graph(TripartiteDims::flat(3).unwrap());
        let t = tensor_product(&k2, &k2, &k2);
        assert_eq!((t.n(), t.edge_count()), (8, 4));
        let t = tensor_product(&k2, &k2, &k3);
        assert_eq!((t.n(), t.edge_count()), (12, 12));
        assert_eq!(t.dims(), d(2, 2, 3));
        let empty = Graph::empty(TripartiteDims::flat(2).unwrap());
        assert_eq!(tensor_product(&k2, &empty, &k3).edge_count(), 0);
    }

    #[test]
    fn edge_classes() {
        let dims = d(3, 2, 2);
        let idx = |i, j, k| vertex_index(VertexCoord::new(i, j, k), dims).unwrap();
        let e = Edge::new(idx(1, 1, 1), idx(2, 2, 2)).unwrap();
        assert_eq!(classify_edge(&e, dims).unwrap(), EdgeClass::ThreeCoord);
        let e = Edge::new(idx(1, 1, 1), idx(1, 1, 2)).unwrap();
        assert_eq!(
            classify_edge(&e, dims).unwrap(),
            EdgeClass::OneCoord(Subsystem::C)
        );
        let e = Edge::new(idx(1, 1, 1), idx(1, 2, 2)).unwrap();
        assert_eq!(
            classify_edge(&e, dims).unwrap(),
            EdgeClass::TwoCoord(Subsystem::B, Subsystem::C)
        );
    }

    #[test]
    fn nearest_point_membership() {
        assert!(is_nearest_point_graph(&example_graph()));
        let far = Graph::from_coords(
            d(3, 2, 2),
            [(VertexCoord::new(1, 1, 1), VertexCoord::new(3, 1, 1))],
        )
        .unwrap();
        assert!(!is_nearest_point_graph(&far));
        assert!(is_nearest_point_graph(&Graph::empty(d(3, 2, 2))));
        // Anti-diagonal of a face: j = s + 1, k = t − 1.
        let anti = Graph::from_coords(
            d(2, 2, 2),
            [(VertexCoord::new(1, 2, 1), VertexCoord::new(1, 1, 2))],
        )
        .unwrap();
        assert!(is_nearest_point_graph(&anti));
    }

    #[test]
    fn permutations() {
        let g = example_graph();
        let identity: Vec<usize> = (1..=12).collect();
        assert_eq!(apply_vertex_permutation(&g, &identity).unwrap(), g);
        let mut swap = identity.clone();
        swap.swap(1, 7);
        let h = apply_vertex_permutation(&g, &swap).unwrap();
        let expected = Graph::from_coords(
            d(3, 2, 2),
            [(VertexCoord::new(1, 1, 1), VertexCoord::new(1, 1, 2))],
        )
        .unwrap();
        assert_eq!(h, expected);
        assert_eq!(apply_vertex_permutation(&h, &swap).unwrap(), g);
        let mut bad = identity;
        bad[0] = 2;
        assert!(apply_vertex_permutation(&g, &bad).is_err());
    }

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(Edge::new(3, 3), Err(Error::Loop(3)));
        assert!(Graph::new(d(2, 1, 1), [(1, 3)]).is_err());
        let g = Graph::new(d(2, 2, 1), [(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree_sum(), 2);
    }
}
