//! Directed, undirected and proper power graphs of a finite group, and the
//! poset of classes of elements generating the same cyclic subgroup.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use fixedbitset::FixedBitSet;

use crate::graph::Graph;
use crate::group::{Element, FiniteGroup};

pub type PowerGraph = Graph;

/// Arc `x -> y` iff `y != x` and `y = x^k` for some `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerDigraph {
    out: Vec<FixedBitSet>,
    labels: Vec<String>,
}

impl PowerDigraph {
    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    #[inline]
    pub fn has_arc(&self, x: usize, y: usize) -> bool {
        self.out[x].contains(y)
    }

    pub fn out_neighbors(&self, x: usize) -> &FixedBitSet {
        &self.out[x]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones(..)).sum()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.ones().map(move |y| (x, y)))
            .collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Underlying undirected graph.
    pub fn symmetrize(&self) -> Graph {
        let mut adj = self.out.clone();
        for (x, row) in self.out.iter().enumerate() {
            for y in row.ones() {
                adj[y].insert(x);
            }
        }
        Graph::from_rows(adj, self.labels.clone())
    }
}

pub fn directed_power_graph(g: &FiniteGroup) -> PowerDigraph {
    let n = g.order();
    let out = g
        .elements()
        .map(|x| {
            let mut row = FixedBitSet::with_capacity(n);
            for y in g.powers(x) {
                row.insert(y.index());
            }
            row.set(x.index(), false);
            row
        })
        .collect();
    PowerDigraph {
        out,
        labels: g.labels().to_vec(),
    }
}

pub fn power_graph(g: &FiniteGroup) -> PowerGraph {
    directed_power_graph(g).symmetrize()
}

/// Power graph with the identity deleted. Vertex `v` maps back to element
/// `origin(v)`.
pub fn proper_power_graph(g: &FiniteGroup) -> PowerGraph {
    delete_vertices(&power_graph(g), &[g.identity().index()])
}

/// Vertices adjacent to every other vertex.
pub fn dominating_vertices(p: &Graph) -> Vec<usize> {
    let n = p.vertex_count();
    (0..n).filter(|&v| p.degree(v) + 1 == n).collect()
}

/// Induced subgraph on the vertices not in `remove`.
pub fn delete_vertices(p: &Graph, remove: &[usize]) -> Graph {
    let mut gone = FixedBitSet::with_capacity(p.vertex_count());
    for &v in remove {
        gone.insert(v);
    }
    let keep: Vec<usize> = (0..p.vertex_count())
        .filter(|&v| !gone.contains(v))
        .collect();
    p.induced(&keep)
}

/// Classes of elements with equal cyclic subgroups, ordered by inclusion of
/// those subgroups.
///
/// Class ids are assigned in increasing order of smallest member, so class 0
/// always holds the identity when it sits at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicClassPoset {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    /// `below[c]` = classes whose subgroup is a proper subgroup of class `c`'s.
    below: Vec<FixedBitSet>,
    linear_extension: Vec<usize>,
}

impl CyclicClassPoset {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Whether `<a> ⊊ <b>` for representatives of classes `a` and `b`.
    pub fn is_below(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// Class ids from bottom to top, refining the inclusion order.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear_extension
    }

    /// For each class, the number of classes on a longest strictly increasing
    /// chain starting just above it (0 for classes of maximal cyclic subgroups).
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.len()];
        for &c in self.linear_extension.iter().rev() {
            depth[c] = (0..self.len())
                .filter(|&d| self.is_below(c, d))
                .map(|d| depth[d] + 1)
                .max()
                .unwrap_or(0);
        }
        depth
    }

    /// Length of a longest chain of classes.
    pub fn height(&self) -> usize {
        self.depths().into_iter().max().map_or(0, |d| d + 1)
    }
}

pub fn mutual_power_classes(g: &FiniteGroup) -> CyclicClassPoset {
    let n = g.order();
    let digraph = directed_power_graph(g);
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        // generators of <x> are the x^k with gcd(k, o(x)) = 1
        let members: Vec<usize> = std::iter::once(x)
            .chain(
                digraph
                    .out_neighbors(x)
                    .ones()
                    .filter(|&y| digraph.has_arc(y, x)),
            )
            .collect();
        let mut members = members;
        members.sort_unstable();
        for &m in &members {
            class_of[m] = id;
        }
        classes.push(members);
    }
    let r = classes.len();
    let mut below = vec![FixedBitSet::with_capacity(r); r];
    for (c, members) in classes.iter().enumerate() {
        let rep = members[0];
        for y in digraph.out_neighbors(rep).ones() {
            if class_of[y] != c {
                below[c].insert(class_of[y]);
            }
        }
    }
    // Kahn's algorithm, ready classes taken by smallest id (= smallest member).
    let mut pending: Vec<usize> = below.iter().map(|b| b.count_ones(..)).collect();
    let mut above: Vec<Vec<usize>> = vec![Vec::new(); r];
    for (c, row) in below.iter().enumerate() {
        for d in row.ones() {
            above[d].push(c);
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..r).filter(|&c| pending[c] == 0).map(Reverse).collect();
    let mut linear_extension = Vec::with_capacity(r);
    while let Some(Reverse(c)) = ready.pop() {
        linear_extension.push(c);
        for &d in &above[c] {
            pending[d] -= 1;
            if pending[d] == 0 {
                ready.push(Reverse(d));
            }
        }
    }
    debug_assert_eq!(linear_extension.len(), r);
    CyclicClassPoset {
        classes,
        class_of,
        below,
        linear_extension,
    }
}

/// Whether `x` is a power of `y` or `y` a power of `x`, for every `y` in `g`.
pub fn comparable_with_all(g: &FiniteGroup, x: Element) -> bool {
    let sx = g.cyclic_subgroup(x);
    g.elements()
        .all(|y| sx.binary_search(&y).is_ok() || g.cyclic_subgroup(y).binary_search(&x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;

    fn c(n: u64) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn digraph_small_cases() {
        let d = directed_power_graph(&c(3));
        assert_eq!(d.arcs(), vec![(1, 0), (1, 2), (2, 0), (2, 1)]);
        let d4 = directed_power_graph(&c(4));
        assert!(d4.has_arc(1, 2));
        assert!(!d4.has_arc(2, 1));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let ds3 = directed_power_graph(&s3);
        for t in s3.involutions() {
            let outs: Vec<usize> = ds3.out_neighbors(t.index()).ones().collect();
            assert_eq!(outs, vec![0]);
        }
    }

    #[test]
    fn cyclic_prime_power_is_complete() {
        assert!(power_graph(&c(5)).is_complete());
        assert!(power_graph(&c(9)).is_complete());
        let v4 = FiniteGroup::direct_product(&c(2), &c(2));
        let p = power_graph(&v4);
        assert_eq!(p.edges(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn proper_power_graph_cases() {
        let p = proper_power_graph(&c(4));
        assert!(p.is_complete());
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.origins(), &[1, 2, 3]);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let ps3 = proper_power_graph(&s3);
        assert_eq!(ps3.edge_count(), 1);
        let (u, v) = ps3.edges()[0];
        assert_eq!(s3.element_order(Element(ps3.origin(u))), 3);
        assert_eq!(s3.element_order(Element(ps3.origin(v))), 3);

        let v4 = FiniteGroup::direct_product(&c(2), &c(2));
        assert_eq!(proper_power_graph(&v4).edge_count(), 0);
    }

    #[test]
    fn class_poset_of_c6() {
        let poset = mutual_power_classes(&c(6));
        assert_eq!(poset.classes(), &[vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        assert!(poset.is_below(0, 1));
        assert!(poset.is_below(3, 1));
        assert!(!poset.is_below(3, 2));
        assert_eq!(poset.linear_extension(), &[0, 2, 3, 1]);
        assert_eq!(poset.height(), 3);
    }

    #[test]
    fn class_poset_counts() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(mutual_power_classes(&s3).len(), 5);
        let v4 = FiniteGroup::direct_product(&c(2), &c(2));
        let poset = mutual_power_classes(&v4);
        assert_eq!(poset.len(), 4);
        assert!((1..4).all(|c| poset.is_below(0, c)));
        assert_eq!(poset.linear_extension()[0], 0);
    }

    #[test]
    fn classes_are_cliques_of_phi_size() {
        for g in [
            c(12),
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::generalized_quaternion(16).unwrap(),
        ] {
            let p = power_graph(&g);
            let poset = mutual_power_classes(&g);
            for class in poset.classes() {
                assert!(p.is_clique(class));
                let o = g.element_order(Element(class[0])) as u64;
                assert_eq!(class.len() as u64, euler_phi(o));
            }
        }
    }

    #[test]
    fn dominating_and_deletion() {
        assert_eq!(dominating_vertices(&Graph::complete(4)), vec![0, 1, 2, 3]);
        let p6 = power_graph(&c(6));
        let dom = dominating_vertices(&p6);
        assert_eq!(dom, vec![0, 1, 5]);
        let rest = delete_vertices(&p6, &dom);
        assert_eq!(rest.origins(), &[2, 3, 4]);
        assert_eq!(rest.edges(), vec![(0, 2)]);
        let q8 = FiniteGroup::generalized_quaternion(8).unwrap();
        assert_eq!(dominating_vertices(&power_graph(&q8)), vec![0, 2]);
        assert_eq!(delete_vertices(&p6, &[]), p6);
        assert_eq!(delete_vertices(&p6, &[0, 1, 2, 3, 4, 5]).vertex_count(), 0);
    }
}
