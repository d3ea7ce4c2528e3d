use std::fmt::Write;

use crate::graph::PrimeGraph;

/// Graphviz identifier for `name`: runs of other characters become `_`,
/// and a leading digit gets a `G_` prefix.
pub fn dot_identifier(name: &str) -> String {
    let mut id = String::new();
    for c in name.chars() {
        if c.is_ascii_alphanumeric() {
            id.push(c);
        } else if !id.is_empty() && !id.ends_with('_') {
            id.push('_');
        }
    }
    while id.ends_with('_') {
        id.pop();
    }
    if id.is_empty() {
        "G".into()
    } else if id.starts_with(|c: char| c.is_ascii_digit()) {
        format!("G_{id}")
    } else {
        id
    }
}

/// Undirected DOT text, vertices then edges, both ascending.
pub fn export_dot(g: &PrimeGraph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", dot_identifier(name));
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}
