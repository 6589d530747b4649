//! Graph serialization. Every format is a pure function of the group, so
//! repeated exports are byte-identical.

use std::fmt::Write as _;

use powergraph::power_graph::{directed_power_graph, power_graph, proper_power_graph};
use powergraph::FiniteGroup;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphKind {
    /// P(G): undirected, all elements.
    Power,
    /// P*(G): P(G) without the identity.
    Proper,
    /// Arc x -> y when y is a power of x.
    Directed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ExportFormat {
    Dot,
    /// One "u v" line per edge, 0-based, sorted.
    Edges,
    Json,
}

/// A graph flattened for output: vertex `v` is group element `elements[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExportedGraph {
    pub group: String,
    pub kind: &'static str,
    pub directed: bool,
    pub vertices: usize,
    pub elements: Vec<usize>,
    pub labels: Vec<String>,
    pub adjacency: Vec<Vec<usize>>,
}

impl ExportedGraph {
    pub fn build(g: &FiniteGroup, kind: GraphKind) -> Self {
        let (directed, kind_name, elements, labels, adjacency) = match kind {
            GraphKind::Directed => {
                let d = directed_power_graph(g);
                let adj = (0..d.vertex_count())
                    .map(|x| d.out_neighbors(x).ones().collect())
                    .collect();
                (
                    true,
                    "directed",
                    (0..g.order()).collect(),
                    d.labels().to_vec(),
                    adj,
                )
            }
            GraphKind::Power | GraphKind::Proper => {
                let (p, name) = if kind == GraphKind::Power {
                    (power_graph(g), "power")
                } else {
                    (proper_power_graph(g), "proper")
                };
                let adj = (0..p.vertex_count())
                    .map(|v| p.neighbors(v).ones().collect())
                    .collect();
                (false, name, p.origins().to_vec(), p.labels().to_vec(), adj)
            }
        };
        ExportedGraph {
            group: g.name().to_string(),
            kind: kind_name,
            directed,
            vertices: elements.len(),
            elements,
            labels,
            adjacency,
        }
    }

    /// Edges `u < v` (or all arcs when directed), sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| self.directed || u < v)
            .collect()
    }

    pub fn render(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Edges => self.to_edge_list(),
            ExportFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("serializable");
                s.push('\n');
                s
            }
        }
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let (keyword, arrow) = if self.directed {
            ("digraph", "->")
        } else {
            ("graph", "--")
        };
        let mut out = String::new();
        writeln!(
            out,
            "{keyword} {} {{",
            quote(&format!("{} {}", self.kind, self.group))
        )
        .unwrap();
        for (v, label) in self.labels.iter().enumerate() {
            writeln!(out, "  {v} [label={}];", quote(label)).unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} {arrow} {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn quote(s: &str) -> String {
    let mut q = String::with_capacity(s.len() + 2);
    q.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            q.push('\\');
        }
        q.push(c);
    }
    q.push('"');
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> FiniteGroup {
        FiniteGroup::cyclic(4).unwrap().with_name("C(4)")
    }

    #[test]
    fn edge_list_of_c4() {
        // cyclic of prime-power order, so P(G) is complete
        let e = ExportedGraph::build(&c4(), GraphKind::Power);
        assert_eq!(e.to_edge_list(), "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
        let p = ExportedGraph::build(&c4(), GraphKind::Proper);
        assert_eq!(p.elements, vec![1, 2, 3]);
        assert_eq!(p.to_edge_list(), "0 1\n0 2\n1 2\n");
    }

    #[test]
    fn directed_arcs_point_to_powers() {
        let d = ExportedGraph::build(&c4(), GraphKind::Directed);
        let edges = d.edges();
        assert!(edges.contains(&(1, 2)));
        assert!(!edges.contains(&(2, 1)));
        assert!(d.to_dot().starts_with("digraph \"directed C(4)\" {\n"));
        assert!(d.to_dot().contains("  1 -> 2;\n"));
    }

    #[test]
    fn dot_quotes_labels() {
        assert_eq!(quote(r#"a"b\c"#), r#""a\"b\\c""#);
        let s =
            ExportedGraph::build(&FiniteGroup::symmetric(3).unwrap(), GraphKind::Power).to_dot();
        assert!(s.contains("[label=\"(1 2)\"]"), "{s}");
    }

    #[test]
    fn json_has_stable_key_order() {
        let j = ExportedGraph::build(&c4(), GraphKind::Proper).render(ExportFormat::Json);
        let keys = [
            "group",
            "kind",
            "directed",
            "vertices",
            "elements",
            "labels",
            "adjacency",
        ];
        let pos: Vec<usize> = keys
            .iter()
            .map(|k| j.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }
}
