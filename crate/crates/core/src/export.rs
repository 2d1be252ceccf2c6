//! Serialization helpers: rational matrices as string grids, module dumps as
//! JSON, action graphs as DOT.

use std::fmt::Write;

use num_traits::One;

use crate::module::AlgModule;
use crate::RatMatrix;

pub fn matrix_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

pub fn module_json(m: &AlgModule) -> serde_json::Value {
    serde_json::to_value(m).expect("module serializes")
}

fn color(name: &str) -> &'static str {
    match name.as_bytes().first() {
        Some(b'e') => "blue",
        Some(b'f') => "red",
        _ => "black",
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT digraph of the generator actions: one node per basis label, one edge
/// `b_j → b_i` labeled by the generator whenever its matrix has a nonzero
/// `(i, j)` entry. Diagonal weight idempotents are omitted; coefficients
/// other than 1 are appended to the edge label.
pub fn action_dot(m: &AlgModule, graph_name: &str) -> String {
    let names = m.tag.generator_names();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(graph_name)).unwrap();
    for l in &m.labels {
        writeln!(out, "  {} [shape=box];", quote(l)).unwrap();
    }
    for (g, name) in m.gens.iter().zip(&names) {
        if name.starts_with('k') {
            continue;
        }
        for (i, j, c) in g.nonzeros() {
            let label = if c.is_one() { name.clone() } else { format!("{name} ({c})") };
            writeln!(
                out,
                "  {} -> {} [label={}, color={}];",
                quote(&m.labels[j]),
                quote(&m.labels[i]),
                quote(&label),
                color(name)
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Labeled edge list `(source, generator, target, coefficient)` extracted
/// from the generator matrices, sorted.
pub fn action_edges(m: &AlgModule) -> Vec<(String, String, String, String)> {
    let names = m.tag.generator_names();
    let mut out = Vec::new();
    for (g, name) in m.gens.iter().zip(&names) {
        for (i, j, c) in g.nonzeros() {
            out.push((m.labels[j].clone(), name.clone(), m.labels[i].clone(), c.to_string()));
        }
    }
    out.sort();
    out
}
