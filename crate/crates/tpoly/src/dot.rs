use std::fmt::Write;

use tpoly_core::polygon::MutationGraph;

/// Undirected DOT rendering; nodes in discovery order, edges sorted by endpoints.
/// A mutation and its inverse give one edge, labelled by the first found.
pub fn graph_to_dot(g: &MutationGraph) -> String {
    let mut out = String::from("graph mutations {\n");
    for (i, (p, d)) in g.nodes.iter().zip(&g.depths).enumerate() {
        writeln!(out, "  n{i} [label=\"{p}\", depth={d}];").unwrap();
    }
    let mut edges: Vec<_> = g.edges.iter().enumerate().collect();
    edges.sort_by_key(|(i, e)| (e.from.min(e.to), e.from.max(e.to), *i));
    edges.dedup_by_key(|(_, e)| (e.from.min(e.to), e.from.max(e.to)));
    for (_, e) in edges {
        writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.from, e.to, e.mutation).unwrap();
    }
    if g.truncated {
        out.push_str("  // truncated by search bounds\n");
    }
    out.push_str("}\n");
    out
}
