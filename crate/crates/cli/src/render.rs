//! Human-readable renderings. Each carries the same facts as the JSON form.

use std::fmt::Write;

use ftspare::autgroup::AutomorphismSummary;
use ftspare::fault::{RealizationCheck, ReconfigPlan, SpectrumEntry};
use ftspare::graph::{Graph, VertexSet};
use ftspare::lab::VerificationReport;

pub const SCHEMA_VERSION: u32 = 1;

/// Identifier of the schema a document conforms to, e.g. `ftspare/analyze/v1`.
pub fn schema_id(command: &str) -> String {
    format!("ftspare/{command}/v{SCHEMA_VERSION}")
}

fn flag(h: Option<bool>) -> &'static str {
    match h {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

fn spectrum_lines(out: &mut String, spectrum: &[SpectrumEntry]) {
    for e in spectrum {
        writeln!(out, "  k={:<3} homogeneous: {}", e.k, flag(e.homogeneous)).unwrap();
    }
}

pub fn analyze(g: &Graph, s: &AutomorphismSummary) -> String {
    let mut out = String::new();
    writeln!(out, "vertices: {}", g.order()).unwrap();
    writeln!(out, "edges: {}", g.edge_count()).unwrap();
    let degrees: Vec<String> = g.degree_sequence().iter().map(ToString::to_string).collect();
    writeln!(out, "degree sequence: {}", degrees.join(" ")).unwrap();
    writeln!(out, "automorphism group order: {}", s.order).unwrap();
    writeln!(out, "generators:").unwrap();
    for p in &s.generators {
        writeln!(out, "  {p}").unwrap();
    }
    writeln!(out, "vertex-transitive: {}", flag(Some(s.vertex_transitive))).unwrap();
    writeln!(out, "max homogeneity: {}", s.max_homogeneity).unwrap();
    writeln!(out, "homogeneity spectrum:").unwrap();
    for (k, h) in s.homogeneity.iter().enumerate() {
        writeln!(out, "  k={k:<3} homogeneous: {}", flag(*h)).unwrap();
    }
    out
}

pub fn check_ftr(c: &RealizationCheck) -> String {
    let mut out = String::new();
    writeln!(out, "host vertices: {}", c.host.order()).unwrap();
    writeln!(out, "basic vertices: {}", c.basic.order()).unwrap();
    writeln!(out, "k: {}", c.k).unwrap();
    writeln!(out, "fault sets checked: {}", c.checked_subsets).unwrap();
    writeln!(out, "verdict: {}", if c.verdict { "fault-tolerant" } else { "not fault-tolerant" }).unwrap();
    if let Some(f) = &c.counterexample {
        writeln!(out, "counterexample: {f}").unwrap();
    }
    out
}

pub fn homogeneity(degree: usize, order: &str, spectrum: &[SpectrumEntry], selected: Option<SpectrumEntry>) -> String {
    let mut out = String::new();
    writeln!(out, "degree: {degree}").unwrap();
    writeln!(out, "group order: {order}").unwrap();
    match selected {
        Some(e) => writeln!(out, "{}-homogeneous: {}", e.k, flag(e.homogeneous)).unwrap(),
        None => {
            writeln!(out, "homogeneity spectrum:").unwrap();
            spectrum_lines(&mut out, spectrum);
        }
    }
    out
}

pub fn reconfigure(spares: &VertexSet, faults: &VertexSet, plan: Option<&ReconfigPlan>) -> String {
    let mut out = String::new();
    writeln!(out, "spares: {spares}").unwrap();
    writeln!(out, "faults: {faults}").unwrap();
    match plan {
        None => writeln!(out, "no automorphism maps the spares onto the faults").unwrap(),
        Some(p) => {
            writeln!(out, "automorphism: {}", p.automorphism).unwrap();
            writeln!(out, "relabel (vertex <- role):").unwrap();
            for (v, r) in &p.relabel {
                writeln!(out, "  {v} <- {r}").unwrap();
            }
        }
    }
    out
}

pub fn verify(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        write!(out, "{status} {} ({} instances", r.suite, r.instances_checked).unwrap();
        if let Some(ms) = r.elapsed_ms {
            write!(out, ", {ms} ms").unwrap();
        }
        writeln!(out, ")").unwrap();
        for (key, value) in &r.parameters {
            writeln!(out, "  parameter {key} = {value}").unwrap();
        }
        for c in &r.checks {
            let mark = if c.passed { "ok" } else { "FAILED" };
            writeln!(out, "  check {}: {} (expected {}, observed {})", c.name, mark, c.expected, c.observed).unwrap();
        }
        for c in &r.counterexamples {
            let kind = if c.expected { "expected boundary case" } else { "COUNTEREXAMPLE" };
            writeln!(out, "  {kind}: {} {}", serde_json::to_string(&c.instance).unwrap(), c.description).unwrap();
        }
        for n in &r.notes {
            writeln!(out, "  note: {n}").unwrap();
        }
    }
    out
}
