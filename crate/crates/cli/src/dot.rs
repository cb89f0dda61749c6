use std::fmt::Write;

use snakefrac::MatchingPoset;

/// Hasse diagram of the matching poset. Nodes are emitted bottom-up and
/// labelled by their height monomial; edges carry the turned tile.
pub fn export_poset_dot(poset: &MatchingPoset) -> String {
    let order = poset.topological_order();
    let mut rank = vec![0; poset.len()];
    for (k, &v) in order.iter().enumerate() {
        rank[v] = k;
    }
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for (k, &v) in order.iter().enumerate() {
        writeln!(out, "  n{k} [label=\"{}\"];", poset.heights[v]).unwrap();
    }
    let mut edges: Vec<(usize, usize, usize)> =
        poset.up_edges.iter().map(|e| (rank[e.from], rank[e.to], e.label)).collect();
    edges.sort();
    for (from, to, label) in edges {
        writeln!(out, "  n{from} -> n{to} [label=\"y{label}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}
