//! Report generation for `arrmono`.
//!
//! [`pipeline::run`] builds an [`report::AnalysisReport`] for one command;
//! [`render_json`] and [`render_text`] turn it into output.

pub mod input;
pub mod pipeline;
pub mod report;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use anyhow::{Context, Result};

use report::{AnalysisReport, CertificateOutcome, EigenStatus};

/// Pretty JSON with a trailing newline; identical input gives identical bytes.
pub fn render_json(report: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let a = &report.arrangement;
    let field = match a.cyclotomic_order {
        1 => "Q".to_string(),
        n => format!("Q(ζ_{n})"),
    };
    let _ = writeln!(
        out,
        "{}: {} lines over {field}{}",
        a.name,
        a.d,
        if a.complexified_real { ", complexified real" } else { "" }
    );
    if let Some(l) = &report.lattice {
        let census: Vec<String> = l.census.iter().map(|(m, n)| format!("{n} x mult {m}")).collect();
        let _ = writeln!(out, "lattice: {} points ({})", l.points.len(), census.join(", "));
    }
    if let Some(r) = &report.resonance {
        let _ = writeln!(
            out,
            "resonance: {} components ({} local, {} multinet)",
            r.components.len(),
            r.local,
            r.multinet
        );
        for c in &r.components {
            let _ = writeln!(out, "  dim {} {:?}", c.dimension, c.provenance);
        }
    }
    if let Some(m) = &report.multinets {
        let _ = writeln!(
            out,
            "multinets: {} found ({})",
            m.multinets.len(),
            if m.exhaustive { "exhaustive" } else { "partial" }
        );
        for (i, e) in m.multinets.iter().enumerate() {
            let pencil = match (&e.pencil, &e.pencil_error) {
                (Some(p), _) => format!("pencil span {}", p.span_dim),
                (None, Some(err)) => err.clone(),
                (None, None) => "no pencil".to_string(),
            };
            let _ = writeln!(
                out,
                "  [{i}] k={} e={} {} classes {:?}, {pencil}",
                e.k,
                e.structure.e(),
                if e.reduced { "reduced" } else { "non-reduced" },
                e.structure.classes()
            );
        }
    }
    if let Some(certs) = &report.certificates {
        for r in certs {
            match &r.outcome {
                CertificateOutcome::Issued { certificate } => {
                    let bounds: Vec<String> = certificate
                        .bounds
                        .iter()
                        .map(|b| format!("dim H1(F)_{} >= {}", b.lambda, b.bound))
                        .collect();
                    let _ = writeln!(
                        out,
                        "certificate [{}]: {:?} {}",
                        r.multinet,
                        certificate.conclusion,
                        bounds.join(", ")
                    );
                }
                CertificateOutcome::NotIssued { reason } => {
                    let _ = writeln!(out, "certificate [{}]: not issued ({reason})", r.multinet);
                }
            }
        }
    }
    if let Some(e) = &report.eigenspaces {
        match (e.status, &e.report) {
            (EigenStatus::Exact, Some(rep)) => {
                let dims: Vec<String> = rep
                    .entries
                    .iter()
                    .map(|x| format!("order {}: {}", x.order, x.dim))
                    .collect();
                let _ = writeln!(
                    out,
                    "eigenspaces (exact, {}): {}; b1(F) = {}",
                    e.source.unwrap_or("?"),
                    dims.join(", "),
                    rep.b1_f
                );
            }
            _ => {
                let _ = writeln!(out, "eigenspaces: {}", e.note.as_deref().unwrap_or("bounds only"));
            }
        }
        for b in &e.bounds {
            let _ = writeln!(out, "  bound dim H1(F)_{} >= {}", b.lambda, b.bound);
        }
    }
    let failed = report.failed_checks().count();
    let _ = writeln!(
        out,
        "consistency: {}/{} checks passed",
        report.consistency.len() - failed,
        report.consistency.len()
    );
    for c in report.failed_checks() {
        let _ = writeln!(out, "  FAILED {}: {}", c.name, c.detail);
    }
    out
}

/// Writes `contents` to a sibling temporary file, then renames it over `path`.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let file_name = path
        .file_name()
        .with_context(|| format!("{} is not a file path", path.display()))?;
    let tmp = dir.join(format!(".{}.tmp", file_name.to_string_lossy()));
    let mut f = fs::File::create(&tmp).with_context(|| format!("cannot create {}", tmp.display()))?;
    f.write_all(contents.as_bytes())?;
    f.sync_all()?;
    drop(f);
    fs::rename(&tmp, path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}
