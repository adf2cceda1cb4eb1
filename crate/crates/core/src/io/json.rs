//! JSON forms of verdicts, certificates and matrices.

use serde::{Deserialize, Serialize};

use crate::density::{density_matrix, partial_transpose};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Subsystem, TripartiteDims};
use crate::linalg::{
    char_poly, count_negative_roots, format_rational, parse_rational, CharPoly, RatMatrix,
};
use crate::separability::{check_decomposition, SeparableDecomposition, Verdict};

/// Serde adapter writing a polynomial as `"num/den"` coefficients, highest
/// power first.
pub mod serde_poly {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &CharPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<String> = p.descending().iter().map(format_rational).collect();
        coeffs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<CharPoly, D::Error> {
        let coeffs = Vec::<String>::deserialize(d)?;
        let parsed = coeffs
            .iter()
            .map(|c| parse_rational(c).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CharPoly::from_descending(parsed))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub subsystem: Subsystem,
    #[serde(with = "serde_poly")]
    pub charpoly: CharPoly,
    pub min_eig_approx: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub dims: [usize; 3],
    pub edges: Vec<Edge>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        Self {
            dims: g.dims().as_array(),
            edges: g.edges().copied().collect(),
        }
    }
}

impl TryFrom<&GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: &GraphJson) -> Result<Graph> {
        let [m, p, q] = j.dims;
        let mut g = Graph::empty(TripartiteDims::new(m, p, q)?);
        for e in &j.edges {
            g.insert(*e)?;
        }
        Ok(g)
    }
}

/// Verdict record. `graph` is embedded so a certificate can be checked on
/// its own.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<SeparableDecomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
}

impl Certificate {
    pub fn from_verdict(v: &Verdict, graph: Option<&Graph>) -> Self {
        let mut cert = Certificate {
            verdict: v.label().to_string(),
            reason: None,
            detail: None,
            witness: None,
            decomposition: None,
            graph: graph.map(GraphJson::from),
        };
        match v {
            Verdict::Separable(d) => cert.decomposition = Some(d.clone()),
            Verdict::Npt(w) => {
                cert.witness = Some(WitnessJson {
                    subsystem: w.subsystem,
                    charpoly: w.charpoly.clone(),
                    min_eig_approx: w.min_eig_approx,
                })
            }
            Verdict::Inconclusive { reason, detail } => {
                cert.reason = Some(reason.to_string());
                cert.detail = Some(detail.clone());
            }
        }
        cert
    }
}

/// Outcome of checking a certificate against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateCheck {
    Valid,
    /// Nothing to check: the certificate claims no verdict.
    NoClaim,
    Invalid(String),
}

/// Re-derives the claim of a certificate from scratch. A separable claim is
/// checked term by term, an NPT claim by recomputing the char poly of the
/// named partial transpose and counting its negative roots.
pub fn verify_certificate(cert: &Certificate, g: &Graph) -> Result<CertificateCheck> {
    let rho = density_matrix(g)?;
    match cert.verdict.as_str() {
        "separable" => {
            let d = cert.decomposition.as_ref().ok_or_else(|| {
                Error::Format("separable certificate without decomposition".into())
            })?;
            Ok(match check_decomposition(&rho, d)? {
                Ok(()) => CertificateCheck::Valid,
                Err(m) => CertificateCheck::Invalid(m.to_string()),
            })
        }
        "npt" => {
            let w = cert
                .witness
                .as_ref()
                .ok_or_else(|| Error::Format("npt certificate without witness".into()))?;
            let actual = char_poly(&partial_transpose(&rho, w.subsystem));
            if actual != w.charpoly {
                return Ok(CertificateCheck::Invalid(format!(
                    "char poly of the {} partial transpose differs from the certificate",
                    w.subsystem
                )));
            }
            Ok(if count_negative_roots(&actual)? >= 1 {
                CertificateCheck::Valid
            } else {
                CertificateCheck::Invalid(format!(
                    "{} partial transpose has no negative eigenvalue",
                    w.subsystem
                ))
            })
        }
        "inconclusive" => Ok(CertificateCheck::NoClaim),
        other => Err(Error::Format(format!("unknown verdict {other:?}"))),
    }
}

/// Matrix with its tensor dims; entries are `"num/den"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dims: [usize; 3],
    pub rows: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn new(mat: &RatMatrix, dims: TripartiteDims) -> Self {
        Self {
            dims: dims.as_array(),
            rows: mat
                .rows()
                .map(|r| r.iter().map(format_rational).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<RatMatrix> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RatMatrix::from_rows(rows)
    }
}

/// Plain-text matrix: one row per line, entries separated by spaces.
pub fn matrix_to_text(mat: &RatMatrix) -> String {
    let mut out = String::new();
    for row in mat.rows() {
        let cells: Vec<String> = row.iter().map(format_rational).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
