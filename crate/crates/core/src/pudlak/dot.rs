use std::fmt::Write;

use super::graph::ColoredGraph;

/// Graphviz text with vertices grouped by stage and colors as edge labels.
pub fn render_dot(g: &ColoredGraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for stage in 0..g.stage_count() {
        writeln!(out, "  subgraph cluster_stage{stage} {{").unwrap();
        writeln!(out, "    label=\"stage {stage}\";").unwrap();
        for (v, _) in g
            .vertex_stages()
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == stage)
        {
            writeln!(out, "    v{v} [label=\"{v}\"];").unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for (i, e) in g.edges().iter().enumerate() {
        writeln!(
            out,
            "  v{} -- v{} [label=\"{}\", stage={}];",
            e.u,
            e.v,
            e.color,
            g.edge_stage(i)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
