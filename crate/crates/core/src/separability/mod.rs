//! Verdicts: exact PPT testing, constructive decompositions and their
//! verification.

mod decompose;
mod product;
mod star;

pub use decompose::{decompose_by_edge_orbits, decompose_quadruple, decompose_tensor_product};
pub use product::{
    check_decomposition, verify_decomposition, DecompositionMismatch, PureProductState,
    SeparableDecomposition, WeightedState,
};
pub use star::{star_cubic, star_witness, StarWitness, STAR_MULTIPLICITY};

use std::fmt;

use crate::density::{density_matrix, partial_transpose, DensityMatrix};
use crate::error::{Error, Result};
use crate::graph::{Graph, Subsystem};
use crate::linalg::{
    char_poly, count_negative_roots, eigenvalues_float, psd_from_char_poly, CharPoly, DEFAULT_TOL,
};
use crate::transpose::degree_condition;

/// Exact evidence that `ρ^{T_s}` is not positive semidefinite.
#[derive(Debug, Clone, PartialEq)]
pub struct NptWitness {
    pub subsystem: Subsystem,
    pub charpoly: CharPoly,
    /// Negative eigenvalues counted with multiplicity; always at least one.
    pub negative_roots: usize,
    pub min_eig_approx: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InconclusiveReason {
    /// All three partial transposes are PSD and nothing else was tried.
    Ppt,
    /// The degree condition fails yet every partial transpose is PSD.
    DegreeFailsButPpt,
    /// The degree condition holds but an edge lacks its transposed partner.
    OrbitPairing,
}

impl InconclusiveReason {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Ppt => "PPT",
            Self::DegreeFailsButPpt => "degree-fails-but-PPT",
            Self::OrbitPairing => "orbit-pairing-failure",
        }
    }
}

impl fmt::Display for InconclusiveReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Separable(SeparableDecomposition),
    Npt(NptWitness),
    Inconclusive {
        reason: InconclusiveReason,
        detail: String,
    },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Separable(_) => "separable",
            Verdict::Npt(_) => "npt",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn is_npt(&self) -> bool {
        matches!(self, Verdict::Npt(_))
    }
}

/// Exact PSD test of one partial transpose. `None` means PSD.
pub fn npt_on(rho: &DensityMatrix, sub: Subsystem) -> Option<NptWitness> {
    let pt = partial_transpose(rho, sub);
    let charpoly = char_poly(&pt);
    if psd_from_char_poly(&charpoly) {
        return None;
    }
    let negative_roots = count_negative_roots(&charpoly).expect("char poly is monic");
    // A symmetric matrix has real eigenvalues, so a negative e_k forces a
    // negative root.
    assert!(
        negative_roots >= 1,
        "non-PSD symmetric matrix without a negative root"
    );
    let min_eig_approx = eigenvalues_float(&pt, DEFAULT_TOL)[0];
    Some(NptWitness {
        subsystem: sub,
        charpoly,
        negative_roots,
        min_eig_approx,
    })
}

/// Exact PSD check of all three partial transposes, without building a
/// witness. Cheaper than [`ppt_test`] when only the yes/no answer matters.
pub fn ppt_holds(rho: &DensityMatrix) -> bool {
    Subsystem::ALL
        .into_iter()
        .all(|s| psd_from_char_poly(&char_poly(&partial_transpose(rho, s))))
}

/// Peres test over the cuts A, B, C in that order; the first non-PSD
/// partial transpose is reported.
pub fn ppt_test(rho: &DensityMatrix) -> Verdict {
    match Subsystem::ALL.into_iter().find_map(|s| npt_on(rho, s)) {
        Some(w) => Verdict::Npt(w),
        None => Verdict::Inconclusive {
            reason: InconclusiveReason::Ppt,
            detail: "all three partial transposes are positive semidefinite".into(),
        },
    }
}

/// Full pipeline for one graph.
///
/// The degree condition and the PPT test are evaluated independently, so a
/// disagreement between them shows up as `Inconclusive` rather than as a
/// wrong verdict.
pub fn classify(g: &Graph) -> Result<Verdict> {
    let rho = density_matrix(g)?;
    let report = degree_condition(g);
    if !report.holds {
        return Ok(match ppt_test(&rho) {
            Verdict::Inconclusive { .. } => {
                let cuts: Vec<String> = Subsystem::ALL
                    .into_iter()
                    .filter(|&s| !report.mismatches(s).is_empty())
                    .map(|s| s.to_string())
                    .collect();
                Verdict::Inconclusive {
                    reason: InconclusiveReason::DegreeFailsButPpt,
                    detail: format!(
                        "degree condition fails on {} but all partial transposes are PSD",
                        cuts.join(", ")
                    ),
                }
            }
            npt => npt,
        });
    }
    match decompose_by_edge_orbits(g) {
        Ok(d) => {
            if let Err(m) = check_decomposition(&rho, &d)? {
                panic!("edge-orbit decomposition failed verification: {m}");
            }
            Ok(Verdict::Separable(d))
        }
        Err(Error::OrbitPairing {
            edge,
            missing,
            subsystem,
        }) => Ok(match ppt_test(&rho) {
            Verdict::Inconclusive { .. } => Verdict::Inconclusive {
                reason: InconclusiveReason::OrbitPairing,
                detail: format!(
                    "edge {edge} has no partner {missing} under T_{subsystem}; \
                     the state is PPT on all cuts but no real product decomposition follows"
                ),
            },
            npt => npt,
        }),
        Err(e) => Err(e),
    }
}
