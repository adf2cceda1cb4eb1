use serde::Serialize;

use crate::density::{density_matrix, partial_transpose_matrix};
use crate::error::{Error, Result};
use crate::graph::{star_graph, vertex_index, Subsystem, TripartiteDims, VertexCoord};
use crate::linalg::{
    char_poly, count_negative_roots, eigenvalues_float, rat, CharPoly, Poly, RatMatrix, Rational,
    DEFAULT_TOL,
};

pub const STAR_MULTIPLICITY: u32 = 5;

/// Exact entanglement evidence for `ρ(K_{1,n−1})`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StarWitness {
    pub n: usize,
    pub dims: TripartiteDims,
    /// Partial transpose on A of the compressed state, in the basis
    /// `u_a v_b w_c` with `a, b, c ∈ {1, 2}` in flat order.
    #[serde(skip)]
    pub matrix: RatMatrix,
    #[serde(with = "crate::io::serde_poly")]
    pub charpoly: CharPoly,
    #[serde(with = "crate::linalg::rational::serde_rational")]
    pub repeated_eigenvalue: Rational,
    pub multiplicity: u32,
    #[serde(with = "crate::io::serde_poly")]
    pub cubic: Poly,
    #[serde(with = "crate::linalg::rational::serde_rational")]
    pub root_product: Rational,
    pub negative_roots: usize,
    pub min_eig_approx: f64,
}

/// `λ³ − (n+1)/(2(n−1)) λ² + (n−4)/(2(n−1)²) λ + (n+4)/(4(n−1)³)`.
pub fn star_cubic(n: usize) -> Poly {
    let n = n as i64;
    let k = n - 1;
    Poly::from_descending(vec![
        rat(1, 1),
        rat(-(n + 1), 2 * k),
        rat(n - 4, 2 * k * k),
        rat(n + 4, 4 * k * k * k),
    ])
}

/// Compresses `ρ(K_{1,n−1})` with `P ⊗ Q ⊗ R`, where each factor projects
/// onto the first two basis vectors, and returns the 8 × 8 block together
/// with its flat indices.
fn compressed_star(dims: TripartiteDims) -> Result<RatMatrix> {
    let rho = density_matrix(&star_graph(dims)?)?;
    let mut support = Vec::with_capacity(8);
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                support.push(vertex_index(VertexCoord::new(i, j, k), dims)? - 1);
            }
        }
    }
    let diag: Vec<Rational> = (0..dims.n())
        .map(|s| rat(support.contains(&s) as i64, 1))
        .collect();
    let proj = RatMatrix::diagonal(&diag);
    let compressed = &(&proj * rho.matrix()) * &proj;
    Ok(compressed.principal_submatrix(&support))
}

/// Builds the star-graph entanglement witness and checks every claimed
/// identity exactly: the factorisation of the char poly of the compressed
/// `T_A` block, the multiplicity of `1/(2(n−1))`, the root product of the
/// cubic and its single negative root.
pub fn star_witness(n: usize, dims: TripartiteDims) -> Result<StarWitness> {
    if dims.n() != n {
        return Err(Error::Precondition(format!(
            "n = {n} but dims ({}, {}, {}) give {}",
            dims.m,
            dims.p,
            dims.q,
            dims.n()
        )));
    }
    if dims.as_array().iter().any(|&d| d < 2) {
        return Err(Error::Precondition(format!(
            "every local dimension must be at least 2, got ({}, {}, {})",
            dims.m, dims.p, dims.q
        )));
    }
    if n < 8 {
        return Err(Error::Precondition(format!(
            "n must be at least 8, got {n}"
        )));
    }

    let block = compressed_star(dims)?;
    let cube = TripartiteDims::new(2, 2, 2)?;
    let matrix = partial_transpose_matrix(&block, cube, Subsystem::A)?;
    let charpoly = char_poly(&matrix);

    let repeated_eigenvalue = rat(1, 2 * (n as i64 - 1));
    let repeated = Poly::linear_root(repeated_eigenvalue.clone()).pow(STAR_MULTIPLICITY);
    let (cubic, rem) = charpoly.div_rem(&repeated);
    let mismatch = |what: &str| Error::Precondition(format!("star witness at n = {n}: {what}"));
    if !rem.is_zero() {
        return Err(mismatch("(λ − 1/(2(n−1)))⁵ does not divide the char poly"));
    }
    if cubic != star_cubic(n) {
        return Err(mismatch("cofactor differs from the closed-form cubic"));
    }
    if cubic.eval(&repeated_eigenvalue) == rat(0, 1) {
        return Err(mismatch("1/(2(n−1)) has multiplicity above 5"));
    }
    let root_product = -cubic.coeff(0);
    if root_product != rat(-(n as i64 + 4), 4 * (n as i64 - 1).pow(3)) {
        return Err(mismatch("root product differs from −(n+4)/(4(n−1)³)"));
    }
    let negative_roots = count_negative_roots(&cubic)?;
    if negative_roots != 1 || count_negative_roots(&charpoly)? != 1 {
        return Err(mismatch("expected exactly one negative eigenvalue"));
    }
    let min_eig_approx = eigenvalues_float(&matrix, DEFAULT_TOL)[0];

    Ok(StarWitness {
        n,
        dims,
        matrix,
        charpoly,
        repeated_eigenvalue,
        multiplicity: STAR_MULTIPLICITY,
        cubic,
        root_product,
        negative_roots,
        min_eig_approx,
    })
}
