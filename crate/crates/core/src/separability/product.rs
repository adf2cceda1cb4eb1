use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::graph::{Subsystem, TripartiteDims, VertexCoord};
use crate::linalg::{format_rational, RatMatrix, Rational};

/// Unnormalised product vector `a ⊗ b ⊗ c` with integer factors.
///
/// The projector onto the normalised state has entries
/// `a_i a_r · b_j b_s · c_k c_t / (‖a‖²‖b‖²‖c‖²)`, so it is exactly rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawProductState", into = "RawProductState")]
pub struct PureProductState {
    a: Vec<i64>,
    b: Vec<i64>,
    c: Vec<i64>,
    norms: [i64; 3],
}

#[derive(Serialize, Deserialize)]
struct RawProductState {
    a: Vec<i64>,
    b: Vec<i64>,
    c: Vec<i64>,
}

impl TryFrom<RawProductState> for PureProductState {
    type Error = Error;

    fn try_from(raw: RawProductState) -> Result<Self> {
        PureProductState::new(raw.a, raw.b, raw.c)
    }
}

impl From<PureProductState> for RawProductState {
    fn from(s: PureProductState) -> Self {
        RawProductState {
            a: s.a,
            b: s.b,
            c: s.c,
        }
    }
}

fn norm_sq(v: &[i64]) -> Result<i64> {
    v.iter()
        .try_fold(0i64, |acc, &x| {
            x.checked_mul(x).and_then(|sq| acc.checked_add(sq))
        })
        .ok_or_else(|| Error::InvalidArgument("product-state coefficients overflow".into()))
}

impl PureProductState {
    pub fn new(a: Vec<i64>, b: Vec<i64>, c: Vec<i64>) -> Result<Self> {
        let norms = [norm_sq(&a)?, norm_sq(&b)?, norm_sq(&c)?];
        if norms.contains(&0) {
            return Err(Error::InvalidArgument(
                "product-state factor is the zero vector".into(),
            ));
        }
        Ok(Self { a, b, c, norms })
    }

    pub fn factor(&self, sub: Subsystem) -> &[i64] {
        match sub {
            Subsystem::A => &self.a,
            Subsystem::B => &self.b,
            Subsystem::C => &self.c,
        }
    }

    pub fn squared_norms(&self) -> [i64; 3] {
        self.norms
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.a.len(), self.b.len(), self.c.len())
    }

    /// Full vector `a ⊗ b ⊗ c` in flat vertex order.
    pub fn kron_vector(&self) -> Vec<BigInt> {
        let mut out = Vec::with_capacity(self.a.len() * self.b.len() * self.c.len());
        for &x in &self.a {
            for &y in &self.b {
                for &z in &self.c {
                    out.push(BigInt::from(x) * y * z);
                }
            }
        }
        out
    }

    /// Product of the three squared norms.
    pub fn total_norm(&self) -> BigInt {
        self.norms.iter().map(|&n| BigInt::from(n)).product()
    }

    pub fn projector(&self) -> RatMatrix {
        let n = self.a.len() * self.b.len() * self.c.len();
        let mut out = RatMatrix::zeros(n);
        accumulate(&mut out, self, &Rational::one());
        out
    }
}

/// `out += weight · projector(state)`.
fn accumulate(out: &mut RatMatrix, state: &PureProductState, weight: &Rational) {
    let v = state.kron_vector();
    let coeff = weight / Rational::from_integer(state.total_norm());
    let support: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    for &r in &support {
        for &c in &support {
            out[(r, c)] += &coeff * Rational::from_integer(&v[r] * &v[c]);
        }
    }
}

/// One term `p_i · |α⟩⟨α| ⊗ |β⟩⟨β| ⊗ |γ⟩⟨γ|` of a separable decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedState {
    #[serde(with = "crate::linalg::rational::serde_rational")]
    pub weight: Rational,
    #[serde(flatten)]
    pub state: PureProductState,
}

/// Convex combination of product projectors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SeparableDecomposition {
    pub terms: Vec<WeightedState>,
}

impl SeparableDecomposition {
    pub fn new(terms: Vec<WeightedState>) -> Self {
        Self { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, weight: Rational, state: PureProductState) {
        self.terms.push(WeightedState { weight, state });
    }

    pub fn weight_sum(&self) -> Rational {
        self.terms.iter().map(|t| &t.weight).sum()
    }

    /// `Σ p_i · projector(state_i)` as an `n × n` matrix.
    pub fn mixture(&self, dims: TripartiteDims) -> Result<RatMatrix> {
        let mut out = RatMatrix::zeros(dims.n());
        for (idx, t) in self.terms.iter().enumerate() {
            if t.state.dims() != (dims.m, dims.p, dims.q) {
                return Err(Error::InvalidArgument(format!(
                    "term {idx} has factor lengths {:?}, expected ({}, {}, {})",
                    t.state.dims(),
                    dims.m,
                    dims.p,
                    dims.q
                )));
            }
            accumulate(&mut out, &t.state, &t.weight);
        }
        Ok(out)
    }
}

/// Why a decomposition does not certify a density matrix. Rows and columns
/// are one-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionMismatch {
    NonPositiveWeight {
        term: usize,
        weight: Rational,
    },
    WeightSum {
        sum: Rational,
    },
    Entry {
        row: usize,
        col: usize,
        expected: Rational,
        found: Rational,
    },
}

impl std::fmt::Display for DecompositionMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::NonPositiveWeight { term, weight } => {
                write!(
                    f,
                    "term {term} has non-positive weight {}",
                    format_rational(weight)
                )
            }
            Self::WeightSum { sum } => {
                write!(f, "weights sum to {}, not 1", format_rational(sum))
            }
            Self::Entry {
                row,
                col,
                expected,
                found,
            } => write!(
                f,
                "entry ({row}, {col}): density has {}, decomposition gives {}",
                format_rational(expected),
                format_rational(found)
            ),
        }
    }
}

/// Checks a decomposition against a density matrix over exact rationals.
///
/// `Err` is reserved for shape errors; a well-formed but wrong certificate
/// yields `Ok(Err(mismatch))` naming the first failure.
pub fn check_decomposition(
    rho: &DensityMatrix,
    d: &SeparableDecomposition,
) -> Result<std::result::Result<(), DecompositionMismatch>> {
    let sum = d.mixture(rho.dims())?;
    for (term, t) in d.terms.iter().enumerate() {
        if !t.weight.is_positive() {
            return Ok(Err(DecompositionMismatch::NonPositiveWeight {
                term,
                weight: t.weight.clone(),
            }));
        }
    }
    let total = d.weight_sum();
    if !total.is_one() {
        return Ok(Err(DecompositionMismatch::WeightSum { sum: total }));
    }
    if let Some((r, c)) = rho.matrix().first_difference(&sum) {
        return Ok(Err(DecompositionMismatch::Entry {
            row: r + 1,
            col: c + 1,
            expected: rho.matrix()[(r, c)].clone(),
            found: sum[(r, c)].clone(),
        }));
    }
    Ok(Ok(()))
}

pub fn verify_decomposition(rho: &DensityMatrix, d: &SeparableDecomposition) -> Result<bool> {
    Ok(check_decomposition(rho, d)?.is_ok())
}

/// Sign patterns over `k` differing subsystems whose product is −1.
///
/// For three subsystems the order is `(+,−,+), (+,+,−), (−,−,−), (−,+,+)`.
pub(crate) fn negative_sign_patterns(k: usize) -> &'static [&'static [i64]] {
    match k {
        1 => &[&[-1]],
        2 => &[&[1, -1], &[-1, 1]],
        3 => &[&[1, -1, 1], &[1, 1, -1], &[-1, -1, -1], &[-1, 1, 1]],
        _ => unreachable!("an edge differs in one to three subsystems"),
    }
}

/// Product states `⊗_s (|x_s⟩ + σ_s |y_s⟩)` for every negative sign pattern
/// over the subsystems where `x` and `y` differ; agreeing subsystems carry
/// the basis vector `|x_s⟩`.
///
/// With weight `w` each, these sum to `w · 2^{k−1}` times the uniform mixture
/// of the edge factors in the orbit of `{x, y}`.
pub(crate) fn sign_pattern_states(
    x: VertexCoord,
    y: VertexCoord,
    dims: TripartiteDims,
) -> Vec<PureProductState> {
    let differing: Vec<Subsystem> = Subsystem::ALL
        .into_iter()
        .filter(|&s| x.get(s) != y.get(s))
        .collect();
    negative_sign_patterns(differing.len())
        .iter()
        .map(|pattern| {
            let [a, b, c] = Subsystem::ALL.map(|s| {
                let mut v = vec![0i64; dims.get(s)];
                v[x.get(s) - 1] = 1;
                if let Some(pos) = differing.iter().position(|&d| d == s) {
                    v[y.get(s) - 1] = pattern[pos];
                }
                v
            });
            PureProductState::new(a, b, c).expect("basis combinations are nonzero")
        })
        .collect()
}
