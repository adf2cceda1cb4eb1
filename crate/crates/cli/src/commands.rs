use std::fs;
use std::path::{Path, PathBuf};

use graphsep_core::io::{
    generate, parse_graph_with_warnings, verify_certificate, Certificate, CertificateCheck, Family,
};
use graphsep_core::linalg::eigenvalues_float;
use graphsep_core::separability::{ppt_test, star_witness};
use graphsep_core::{
    classify, decompose_by_edge_orbits, decompose_tensor_product, degree_condition, density_matrix,
    partial_transpose, partial_transpose_graph, rho_plus, tensor_product, Graph, TripartiteDims,
    Verdict,
};
use rayon::prelude::*;
use thiserror::Error;

use crate::render;
use crate::{Command, FamilyArg, Format, Level};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Input {
        path: PathBuf,
        source: graphsep_core::Error,
    },
    #[error("{}: malformed certificate: {source}", path.display())]
    Certificate {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Core(#[from] graphsep_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("certificate rejected: {0}")]
    Rejected(String),
}

pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read(path)?;
    let (g, warnings) = parse_graph_with_warnings(&text).map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })?;
    for w in warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(g)
}

fn dims_arg(v: &[usize]) -> Result<TripartiteDims, CliError> {
    match *v {
        [m, p, q] => Ok(TripartiteDims::new(m, p, q)?),
        _ => Err(CliError::Usage("--dims takes exactly three values".into())),
    }
}

fn classify_file(path: &Path) -> Result<(Graph, Verdict), CliError> {
    let g = load_graph(path)?;
    let v = classify(&g).map_err(|source| CliError::Input {
        path: path.to_owned(),
        source,
    })?;
    Ok((g, v))
}

pub fn run(command: Command, format: Format) -> Result<Outcome, CliError> {
    match command {
        Command::Rho { graph } => {
            let g = load_graph(&graph)?;
            let rho = density_matrix(&g)?;
            Ok(Outcome::ok(render::matrix(rho.matrix(), g.dims(), format)))
        }
        Command::RhoPlus { graph } => {
            let g = load_graph(&graph)?;
            let rho = rho_plus(&g)?;
            Ok(Outcome::ok(render::matrix(rho.matrix(), g.dims(), format)))
        }
        Command::Ptrans { graph, sub, level } => {
            let g = load_graph(&graph)?;
            Ok(Outcome::ok(match level {
                Level::Graph => render::graph(&partial_transpose_graph(&g, sub), format),
                Level::Matrix => {
                    let pt = partial_transpose(&density_matrix(&g)?, sub);
                    render::matrix(&pt, g.dims(), format)
                }
            }))
        }
        Command::Degree { graph } => {
            let g = load_graph(&graph)?;
            Ok(Outcome::ok(render::degree(&degree_condition(&g), format)))
        }
        Command::Ppt { graph } => {
            let g = load_graph(&graph)?;
            let v = ppt_test(&density_matrix(&g)?);
            Ok(Outcome::ok(render::verdict(&v, &g, format)))
        }
        Command::Classify { graphs, jobs } => classify_batch(&graphs, jobs.into(), format),
        Command::Decompose { graphs, tensor } => {
            let (g, d) = if tensor {
                let [a, b, c] = graphs.as_slice() else {
                    return Err(CliError::Usage(
                        "--tensor takes exactly three graph files".into(),
                    ));
                };
                let (g1, g2, g3) = (load_graph(a)?, load_graph(b)?, load_graph(c)?);
                (
                    tensor_product(&g1, &g2, &g3),
                    decompose_tensor_product(&g1, &g2, &g3)?,
                )
            } else {
                let [path] = graphs.as_slice() else {
                    return Err(CliError::Usage("expected one graph file".into()));
                };
                let g = load_graph(path)?;
                let d = decompose_by_edge_orbits(&g)?;
                (g, d)
            };
            Ok(Outcome::ok(render::verdict(
                &Verdict::Separable(d),
                &g,
                format,
            )))
        }
        Command::Verify { graph, cert } => {
            let text = read(&cert)?;
            let certificate: Certificate =
                serde_json::from_str(&text).map_err(|source| CliError::Certificate {
                    path: cert.clone(),
                    source,
                })?;
            let g = match (&graph, &certificate.graph) {
                (Some(path), _) => load_graph(path)?,
                (None, Some(embedded)) => Graph::try_from(embedded)?,
                (None, None) => {
                    return Err(CliError::Usage(
                        "certificate has no embedded graph; pass a graph file".into(),
                    ))
                }
            };
            match verify_certificate(&certificate, &g)? {
                CertificateCheck::Invalid(why) => Err(CliError::Rejected(why)),
                check => Ok(Outcome::ok(render::check(&certificate, &check, format))),
            }
        }
        Command::StarWitness { n, dims } => {
            let w = star_witness(n, dims_arg(&dims)?)?;
            Ok(Outcome::ok(render::star(&w, format)))
        }
        Command::Gen { family, dims, seed } => {
            let family = match family {
                FamilyArg::Complete => Family::Complete,
                FamilyArg::Star => Family::Star,
                FamilyArg::Tensor => Family::Tensor,
                FamilyArg::NearestRandom => Family::NearestRandom,
            };
            let g = generate(family, dims_arg(&dims)?, seed)?;
            Ok(Outcome::ok(render::graph(&g, format)))
        }
        Command::Eig { graph, tol, sub } => {
            let g = load_graph(&graph)?;
            let rho = density_matrix(&g)?;
            let mat = match sub {
                Some(s) => partial_transpose(&rho, s),
                None => rho.into_matrix(),
            };
            Ok(Outcome::ok(render::eigenvalues(
                &eigenvalues_float(&mat, tol),
                format,
            )))
        }
    }
}

/// Classifies every file, in parallel when `jobs > 1`. Results keep the
/// input order so the output does not depend on scheduling.
fn classify_batch(paths: &[PathBuf], jobs: usize, format: Format) -> Result<Outcome, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let results: Vec<Result<(Graph, Verdict), CliError>> =
        pool.install(|| paths.par_iter().map(|p| classify_file(p)).collect());

    if results.len() == 1 {
        let (g, v) = results.into_iter().next().expect("one result")?;
        return Ok(Outcome {
            stdout: render::verdict(&v, &g, format),
            code: if v.is_npt() { 1 } else { 0 },
        });
    }

    let any_npt = results
        .iter()
        .any(|r| matches!(r, Ok((_, v)) if v.is_npt()));
    let any_error = results.iter().any(Result::is_err);
    let stdout = render::batch(paths, &results, format);
    let code = if any_error {
        for e in results.iter().filter_map(|r| r.as_ref().err()) {
            eprintln!("error: {e}");
        }
        2
    } else if any_npt {
        1
    } else {
        0
    };
    Ok(Outcome { stdout, code })
}
