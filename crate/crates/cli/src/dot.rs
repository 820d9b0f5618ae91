//! Graphviz emitters. Node order is fixed by the input, so output is
//! byte-for-byte reproducible.

use std::fmt::Write as _;

use weylbrick::typea::{DefiningQuiver, InversionGraph};
use weylbrick::{RootSystem, WeakInterval, Word};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// `s12312`, or `s_{0,10,2}` once a label needs two digits; `e` when empty.
pub fn word_name(rs: &RootSystem, w: &Word) -> String {
    let labels = rs.word_labels(w);
    if labels.is_empty() {
        "e".into()
    } else if labels.iter().all(|&l| l < 10) {
        let digits: String = labels.iter().map(|l| l.to_string()).collect();
        format!("s{digits}")
    } else {
        let parts: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        format!("s_{{{}}}", parts.join(","))
    }
}

pub fn hasse(rs: &RootSystem, h: &WeakInterval) -> String {
    let mut out = String::from("digraph hasse {\n");
    if !h.vertices.is_empty() {
        out.push_str("  rankdir=TB;\n  node [shape=plaintext];\n");
    }
    for (k, w) in h.words.iter().enumerate() {
        let _ = writeln!(out, "  n{k} [label=\"{}\"];", escape(&word_name(rs, w)));
    }
    for a in &h.arrows {
        let _ = writeln!(
            out,
            "  n{} -> n{} [label=\"{}\"];",
            a.from,
            a.to,
            escape(&rs.format_root(&a.label))
        );
    }
    out.push_str("}\n");
    out
}

/// Dots sit at `(column, row) = (i, w(i))`; edges join Bruhat inversion pairs.
pub fn inversion_graph(g: &InversionGraph) -> String {
    let mut out = String::from("graph inversions {\n");
    if !g.dots.is_empty() {
        out.push_str("  node [shape=point, width=0.12];\n");
    }
    for &(i, v) in &g.dots {
        let _ = writeln!(out, "  v{v} [pos=\"{i},{v}!\", xlabel=\"{v}\"];");
    }
    for &(a, b) in &g.edges {
        let _ = writeln!(out, "  v{a} -- v{b};");
    }
    out.push_str("}\n");
    out
}

pub fn quivers(qs: &[DefiningQuiver]) -> String {
    let mut out = String::from("digraph quivers {\n");
    for q in qs {
        let (i, j) = q.edge;
        let _ = writeln!(out, "  subgraph cluster_{i}_{j} {{");
        let _ = writeln!(out, "    label=\"({i},{j})\";");
        for v in &q.vertices {
            let _ = writeln!(out, "    q{i}_{j}_{v} [label=\"{v}\"];");
        }
        for (a, b) in &q.arrows {
            let _ = writeln!(out, "    q{i}_{j}_{a} -> q{i}_{j}_{b};");
        }
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
