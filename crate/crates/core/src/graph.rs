//! Simple undirected graphs over bitset adjacency rows.

use fixedbitset::FixedBitSet;

/// An undirected simple graph on vertices `0..n`.
///
/// Every vertex remembers the index it had in the graph it was cut from
/// (`origin`) and a display label, so induced subgraphs can still name the
/// group elements they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    origin: Vec<usize>,
    labels: Vec<String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices labelled by their index.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            origin: (0..n).collect(),
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub(crate) fn from_rows(adj: Vec<FixedBitSet>, labels: Vec<String>) -> Self {
        let n = adj.len();
        Graph {
            adj,
            origin: (0..n).collect(),
            labels,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count());
        self.labels = labels;
        self
    }

    /// Adds `{u, v}`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn rows(&self) -> &[FixedBitSet] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Index of `v` in the graph this one was derived from.
    pub fn origin(&self, v: usize) -> usize {
        self.origin[v]
    }

    pub fn origins(&self) -> &[usize] {
        &self.origin
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].clone();
                row.toggle_range(..);
                row.set(v, false);
                row
            })
            .collect();
        Graph {
            adj,
            origin: self.origin.clone(),
            labels: self.labels.clone(),
        }
    }

    /// Induced subgraph on `keep` (in the given order). Origins compose, so
    /// `sub.origin(i) == self.origin(keep[i])`.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                let mut row = FixedBitSet::with_capacity(keep.len());
                for w in self.adj[v].ones() {
                    if pos[w] != usize::MAX {
                        row.insert(pos[w]);
                    }
                }
                row
            })
            .collect();
        Graph {
            adj,
            origin: keep.iter().map(|&v| self.origin[v]).collect(),
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
        }
    }

    /// Whether every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Whether no two vertices in `set` are adjacent (and none repeats).
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_empty() {
        let k = Graph::complete(5);
        assert_eq!(k.edge_count(), 10);
        assert!(k.is_complete());
        assert_eq!(k.complement().edge_count(), 0);
        assert_eq!(k.complement().complement(), k);
    }

    #[test]
    fn induced_composes_origins() {
        let c = Graph::cycle(6);
        let sub = c.induced(&[1, 2, 3, 5]);
        assert_eq!(sub.vertex_count(), 4);
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
        let subsub = sub.induced(&[1, 3]);
        assert_eq!(subsub.origins(), &[2, 5]);
        assert_eq!(subsub.label(1), "5");
    }

    #[test]
    fn clique_and_independence_predicates() {
        let c5 = Graph::cycle(5);
        assert!(c5.is_independent(&[0, 2]));
        assert!(!c5.is_independent(&[0, 1]));
        assert!(!c5.is_independent(&[0, 0]));
        assert!(c5.is_clique(&[3, 4]));
        assert!(!c5.is_clique(&[0, 2]));
        assert!(c5.is_clique(&[]));
    }
}
