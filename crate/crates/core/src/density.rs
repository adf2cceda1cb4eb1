//! Density matrices of graphs and matrix-level partial transposes.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{
    adjacency_matrix, degree_matrix, laplacian, vertex_coord, vertex_index, Edge, Graph, Subsystem,
    TripartiteDims,
};
use crate::linalg::{int, rat, RatMatrix, Rational};

/// Unit-trace PSD matrix acting on `C^m ⊗ C^p ⊗ C^q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityMatrix {
    mat: RatMatrix,
    dims: TripartiteDims,
}

impl DensityMatrix {
    /// Wraps a matrix after checking order, symmetry and unit trace.
    /// Positivity is not re-checked here; see [`crate::linalg::is_psd_exact`].
    pub fn new(mat: RatMatrix, dims: TripartiteDims) -> Result<Self> {
        if mat.order() != dims.n() {
            return Err(Error::DimsMismatch {
                order: mat.order(),
                product: dims.n(),
            });
        }
        if !mat.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if !mat.trace().is_one() {
            return Err(Error::InvalidArgument(
                "density matrix must have unit trace".into(),
            ));
        }
        Ok(Self { mat, dims })
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> RatMatrix {
        self.mat
    }

    pub fn dims(&self) -> TripartiteDims {
        self.dims
    }
}

fn inverse_degree_sum(g: &Graph) -> Result<Rational> {
    if g.edge_count() == 0 {
        return Err(Error::DensityUndefined);
    }
    Ok(rat(1, g.degree_sum() as i64))
}

/// `ρ(G) = L(G) / d_G`.
pub fn density_matrix(g: &Graph) -> Result<DensityMatrix> {
    let scale = inverse_degree_sum(g)?;
    Ok(DensityMatrix {
        mat: laplacian(g).scale(&scale),
        dims: g.dims(),
    })
}

/// Signless companion `ρ₊(G) = (Δ(G) + M(G)) / d_G`, the uniform mixture of
/// the projectors onto `(|a⟩ + |b⟩)/√2` over the edges.
pub fn rho_plus(g: &Graph) -> Result<DensityMatrix> {
    let scale = inverse_degree_sum(g)?;
    Ok(DensityMatrix {
        mat: (&degree_matrix(g) + &adjacency_matrix(g)).scale(&scale),
        dims: g.dims(),
    })
}

fn edge_projector(e: &Edge, dims: TripartiteDims, sign: i64) -> Result<DensityMatrix> {
    let (a, b) = e.endpoints();
    if b > dims.n() {
        return Err(Error::VertexOutOfRange {
            vertex: b,
            n: dims.n(),
        });
    }
    let mut mat = RatMatrix::zeros(dims.n());
    let half = rat(1, 2);
    mat[(a - 1, a - 1)] = half.clone();
    mat[(b - 1, b - 1)] = half.clone();
    mat[(a - 1, b - 1)] = &half * int(sign);
    mat[(b - 1, a - 1)] = &half * int(sign);
    Ok(DensityMatrix { mat, dims })
}

/// Pure density of the one-edge factor `H_e`: projector onto `(|a⟩ − |b⟩)/√2`.
pub fn edge_factor(e: &Edge, dims: TripartiteDims) -> Result<DensityMatrix> {
    edge_projector(e, dims, -1)
}

/// Projector onto `(|a⟩ + |b⟩)/√2`.
pub fn edge_factor_plus(e: &Edge, dims: TripartiteDims) -> Result<DensityMatrix> {
    edge_projector(e, dims, 1)
}

/// Partial transpose on one subsystem of a matrix acting on
/// `C^m ⊗ C^p ⊗ C^q`: the chosen coordinate is exchanged between the row and
/// the column index of every entry.
pub fn partial_transpose_matrix(
    mat: &RatMatrix,
    dims: TripartiteDims,
    sub: Subsystem,
) -> Result<RatMatrix> {
    let n = mat.order();
    if n != dims.n() {
        return Err(Error::DimsMismatch {
            order: n,
            product: dims.n(),
        });
    }
    let coords: Vec<_> = (1..=n)
        .map(|s| vertex_coord(s, dims).expect("in range"))
        .collect();
    let mut out = RatMatrix::zeros(n);
    for (r, x) in coords.iter().enumerate() {
        for (c, y) in coords.iter().enumerate() {
            let src_r = vertex_index(x.with(sub, y.get(sub)), dims)? - 1;
            let src_c = vertex_index(y.with(sub, x.get(sub)), dims)? - 1;
            let v = &mat[(src_r, src_c)];
            if !v.is_zero() {
                out[(r, c)] = v.clone();
            }
        }
    }
    Ok(out)
}

pub fn partial_transpose(rho: &DensityMatrix, sub: Subsystem) -> RatMatrix {
    partial_transpose_matrix(&rho.mat, rho.dims, sub).expect("density order matches its dims")
}

/// Closed form `ρ(K_n) = (n·I − J) / (n(n−1))`.
pub fn rho_complete(dims: TripartiteDims) -> Result<DensityMatrix> {
    let n = dims.n();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "ρ(K_n) needs n ≥ 2, got {n}"
        )));
    }
    let n_i = n as i64;
    let mat = (&RatMatrix::identity(n).scale(&int(n_i)) - &RatMatrix::ones(n))
        .scale(&rat(1, n_i * (n_i - 1)));
    Ok(DensityMatrix { mat, dims })
}

/// Closed form of `ρ(K_{1,n−1})`: prefactor `1/(2(n−1))`, centre entry
/// `n − 1`, leaf diagonal 1, centre–leaf entries −1.
pub fn rho_star(dims: TripartiteDims) -> Result<DensityMatrix> {
    let n = dims.n();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "ρ(K_1,n−1) needs n ≥ 2, got {n}"
        )));
    }
    let n_i = n as i64;
    let inner = RatMatrix::from_fn(n, |r, c| match (r, c) {
        (0, 0) => int(n_i - 1),
        (0, _) | (_, 0) => int(-1),
        _ if r == c => int(1),
        _ => Rational::zero(),
    });
    Ok(DensityMatrix {
        mat: inner.scale(&rat(1, 2 * (n_i - 1))),
        dims,
    })
}
