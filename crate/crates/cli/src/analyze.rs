//! `analyze`: invariants of `P(G)` and `P*(G)` with the dominating-vertex
//! classification.

use std::fmt::Write as _;

use powergraph::invariants::{Diameter, InvariantReport, SolverError, SolverLimits};
use powergraph::power_graph::{power_graph, proper_power_graph};
use powergraph::theorems::{classify_dominating, DominatingClassification};
use powergraph::{Element, FiniteGroup, Graph};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Json,
    Table,
}

/// Odd holes and antiholes are listed as group element indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub group: String,
    pub order: usize,
    pub dominating: DominatingClassification,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<InvariantReport>,
    pub proper: InvariantReport,
}

fn graph_report(p: &Graph, limits: &SolverLimits) -> Result<InvariantReport, SolverError> {
    let mut r = InvariantReport::compute(p, limits)?;
    for cycle in [&mut r.odd_hole, &mut r.odd_antihole].into_iter().flatten() {
        for v in cycle.iter_mut() {
            *v = p.origin(*v);
        }
    }
    Ok(r)
}

/// With `proper_only`, the `P(G)` report is left out.
pub fn analyze(
    g: &FiniteGroup,
    limits: &SolverLimits,
    proper_only: bool,
) -> Result<AnalyzeReport, SolverError> {
    let power = if proper_only {
        None
    } else {
        Some(graph_report(&power_graph(g), limits)?)
    };
    Ok(AnalyzeReport {
        group: g.name().to_string(),
        order: g.order(),
        dominating: classify_dominating(g),
        power,
        proper: graph_report(&proper_power_graph(g), limits)?,
    })
}

impl AnalyzeReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_table(&self, g: &FiniteGroup) -> String {
        let names = |xs: &[usize]| -> String {
            xs.iter()
                .map(|&x| g.label(Element(x)))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let mut out = String::new();
        writeln!(out, "group       {}", self.group).unwrap();
        writeln!(out, "order       {}", self.order).unwrap();
        writeln!(
            out,
            "dominating  {:?}: {}",
            self.dominating.case,
            names(&self.dominating.witnesses)
        )
        .unwrap();
        writeln!(out).unwrap();

        let mut reports = Vec::new();
        if let Some(p) = &self.power {
            reports.push(("P(G)", p));
        }
        reports.push(("P*(G)", &self.proper));
        let cycle = |c: &Option<Vec<usize>>| c.as_ref().map_or("none".to_string(), |c| names(c));
        let row = |name: &'static str, f: &dyn Fn(&InvariantReport) -> String| {
            (name, reports.iter().map(|(_, r)| f(r)).collect::<Vec<_>>())
        };
        let rows = [
            row("vertices", &|r| r.vertices.to_string()),
            row("edges", &|r| r.edges.to_string()),
            row("alpha", &|r| r.alpha.to_string()),
            row("theta", &|r| r.theta.to_string()),
            row("omega", &|r| r.omega.to_string()),
            row("chi", &|r| r.chi.to_string()),
            row("components", &|r| r.component_sizes.len().to_string()),
            row("diameter", &|r| match r.diameter {
                Diameter::Finite(d) => d.to_string(),
                Diameter::Infinite => "infinite".to_string(),
            }),
            row("odd hole", &|r| cycle(&r.odd_hole)),
            row("odd antihole", &|r| cycle(&r.odd_antihole)),
        ];
        let header: Vec<String> = reports.iter().map(|(n, _)| n.to_string()).collect();
        let first = rows.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..header.len())
            .map(|i| {
                rows.iter()
                    .map(|(_, v)| v[i].len())
                    .chain([header[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut line = |name: &str, values: &[String]| {
            let mut l = format!("{name:<first$}");
            for (v, w) in values.iter().zip(&widths) {
                write!(l, "  {v:>w$}").unwrap();
            }
            writeln!(out, "{}", l.trim_end()).unwrap();
        };
        line("", &header);
        for (name, values) in &rows {
            line(name, values);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c6_report() {
        let g = FiniteGroup::cyclic(6).unwrap().with_name("C(6)");
        let r = analyze(&g, &SolverLimits::default(), false).unwrap();
        let p = r.power.as_ref().unwrap();
        assert_eq!((p.alpha, p.omega, p.chi, p.theta), (2, 5, 5, 2));
        assert_eq!(r.proper.vertices, 5);
        assert_eq!(r.dominating.witnesses, vec![0, 1, 5]);
        let json = r.to_json();
        assert!(json.find("\"dominating\"").unwrap() < json.find("\"power\"").unwrap());
        let table = r.to_table(&g);
        assert!(table.contains("CyclicGenerators: 1, a, a^5"), "{table}");
        assert!(table
            .lines()
            .any(|l| l.starts_with("alpha") && l.ends_with("2")));
    }

    #[test]
    fn proper_only_omits_power_graph() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let r = analyze(&g, &SolverLimits::default(), true).unwrap();
        assert!(r.power.is_none());
        assert!(!r.to_json().contains("\"power\""));
        assert_eq!(r.proper.component_sizes, vec![2, 1, 1, 1]);
        assert!(!r.to_table(&g).contains("P(G)"));
    }

    #[test]
    fn solver_cap_is_reported() {
        let g = FiniteGroup::cyclic(40).unwrap();
        let limits = SolverLimits {
            chi_cap: 10,
            ..SolverLimits::default()
        };
        assert!(matches!(
            analyze(&g, &limits, false),
            Err(SolverError::TooLarge { .. })
        ));
    }
}
