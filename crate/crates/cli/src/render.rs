//! Text and JSON rendering. Every output ends with a newline.

use std::fmt::Write as _;
use std::path::PathBuf;

use graphsep_core::io::{
    matrix_to_text, write_graph, Certificate, CertificateCheck, GraphJson, MatrixJson,
};
use graphsep_core::linalg::format_rational;
use graphsep_core::separability::StarWitness;
use graphsep_core::{CharPoly, DegreeReport, Graph, RatMatrix, Subsystem, TripartiteDims, Verdict};
use serde::Serialize;

use crate::commands::CliError;
use crate::Format;

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serialises");
    s.push('\n');
    s
}

fn coefficients(p: &CharPoly) -> String {
    p.descending()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn matrix(m: &RatMatrix, dims: TripartiteDims, format: Format) -> String {
    match format {
        Format::Json => json(&MatrixJson::new(m, dims)),
        Format::Text => format!(
            "# dims {} {} {}\n{}",
            dims.m,
            dims.p,
            dims.q,
            matrix_to_text(m)
        ),
    }
}

pub fn graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Json => json(&GraphJson::from(g)),
        Format::Text => write_graph(g),
    }
}

pub fn degree(report: &DegreeReport, format: Format) -> String {
    if format == Format::Json {
        return json(report);
    }
    let mut out = format!(
        "degree condition: {}\n",
        if report.holds { "holds" } else { "fails" }
    );
    for s in Subsystem::ALL {
        for m in report.mismatches(s) {
            writeln!(
                out,
                "{s}: vertex {} degree {} transposed {}",
                m.vertex, m.degree, m.transposed_degree
            )
            .unwrap();
        }
    }
    out
}

fn verdict_text(v: &Verdict) -> String {
    let mut out = format!("verdict: {}\n", v.label());
    match v {
        Verdict::Npt(w) => {
            writeln!(out, "subsystem: {}", w.subsystem).unwrap();
            writeln!(out, "charpoly: {}", coefficients(&w.charpoly)).unwrap();
            writeln!(out, "negative eigenvalues: {}", w.negative_roots).unwrap();
            writeln!(out, "min eigenvalue (approx): {}", w.min_eig_approx).unwrap();
        }
        Verdict::Separable(d) => {
            writeln!(out, "terms: {}", d.len()).unwrap();
            for t in &d.terms {
                writeln!(
                    out,
                    "{}  a {:?}  b {:?}  c {:?}",
                    format_rational(&t.weight),
                    t.state.factor(Subsystem::A),
                    t.state.factor(Subsystem::B),
                    t.state.factor(Subsystem::C)
                )
                .unwrap();
            }
        }
        Verdict::Inconclusive { reason, detail } => {
            writeln!(out, "reason: {reason}").unwrap();
            writeln!(out, "detail: {detail}").unwrap();
        }
    }
    out
}

pub fn verdict(v: &Verdict, g: &Graph, format: Format) -> String {
    match format {
        Format::Json => json(&Certificate::from_verdict(v, Some(g))),
        Format::Text => verdict_text(v),
    }
}

#[derive(Serialize)]
struct BatchEntry<'a> {
    file: String,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

pub fn batch(
    paths: &[PathBuf],
    results: &[Result<(Graph, Verdict), CliError>],
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let messages: Vec<Option<String>> = results
                .iter()
                .map(|r| r.as_ref().err().map(ToString::to_string))
                .collect();
            let entries: Vec<BatchEntry> = paths
                .iter()
                .zip(results)
                .zip(&messages)
                .map(|((p, r), msg)| BatchEntry {
                    file: p.display().to_string(),
                    certificate: r
                        .as_ref()
                        .ok()
                        .map(|(g, v)| Certificate::from_verdict(v, Some(g))),
                    error: msg.as_deref(),
                })
                .collect();
            json(&entries)
        }
        Format::Text => {
            let mut out = String::new();
            for (p, r) in paths.iter().zip(results) {
                let label = match r {
                    Ok((_, v)) => v.label().to_string(),
                    Err(e) => format!("error: {e}"),
                };
                writeln!(out, "{}: {label}", p.display()).unwrap();
            }
            out
        }
    }
}

pub fn check(cert: &Certificate, check: &CertificateCheck, format: Format) -> String {
    let status = match check {
        CertificateCheck::Valid => "valid",
        CertificateCheck::NoClaim => "no-claim",
        CertificateCheck::Invalid(_) => "invalid",
    };
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Check<'a> {
                verdict: &'a str,
                status: &'a str,
            }
            json(&Check {
                verdict: &cert.verdict,
                status,
            })
        }
        Format::Text => format!("{} certificate: {status}\n", cert.verdict),
    }
}

pub fn star(w: &StarWitness, format: Format) -> String {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Star<'a> {
                verdict: &'static str,
                #[serde(flatten)]
                witness: &'a StarWitness,
            }
            json(&Star {
                verdict: "entangled",
                witness: w,
            })
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "n: {}", w.n).unwrap();
            writeln!(out, "dims: {} {} {}", w.dims.m, w.dims.p, w.dims.q).unwrap();
            writeln!(out, "charpoly: {}", coefficients(&w.charpoly)).unwrap();
            writeln!(
                out,
                "repeated eigenvalue: {} (multiplicity {})",
                format_rational(&w.repeated_eigenvalue),
                w.multiplicity
            )
            .unwrap();
            writeln!(out, "cubic: {}", coefficients(&w.cubic)).unwrap();
            writeln!(out, "root product: {}", format_rational(&w.root_product)).unwrap();
            writeln!(out, "negative eigenvalues: {}", w.negative_roots).unwrap();
            writeln!(out, "min eigenvalue (approx): {}", w.min_eig_approx).unwrap();
            out.push_str("verdict: entangled\n");
            out
        }
    }
}

pub fn eigenvalues(values: &[f64], format: Format) -> String {
    match format {
        Format::Json => json(values),
        Format::Text => values.iter().map(|v| format!("{v}\n")).collect(),
    }
}
