//! Exact graph invariants: independence, clique, chromatic and clique cover
//! numbers, connectivity, diameter and bounded odd-hole search.
//!
//! Solvers never approximate. Inputs above the configured caps are refused
//! with [`SolverError::TooLarge`].

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_MIS_CAP: usize = 512;
pub const DEFAULT_CHI_CAP: usize = 256;
pub const DEFAULT_HOLE_LENGTH: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("{solver}: graph has {vertices} vertices, above the cap of {cap}")]
    TooLarge {
        solver: &'static str,
        vertices: usize,
        cap: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverLimits {
    pub mis_cap: usize,
    pub chi_cap: usize,
    pub hole_length: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            mis_cap: DEFAULT_MIS_CAP,
            chi_cap: DEFAULT_CHI_CAP,
            hole_length: DEFAULT_HOLE_LENGTH,
        }
    }
}

fn check_cap(solver: &'static str, g: &Graph, cap: usize) -> Result<(), SolverError> {
    if g.vertex_count() > cap {
        Err(SolverError::TooLarge {
            solver,
            vertices: g.vertex_count(),
            cap,
        })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Connectivity
// ---------------------------------------------------------------------------

/// Components ordered by smallest vertex; each component is sorted.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v).ones() {
                if !seen.put(w) {
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// One component exactly; the empty graph is not connected.
pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() > 0 && connected_components(g).len() == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("infinite"),
        }
    }
}

fn eccentricity(g: &Graph, s: usize) -> Option<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    let mut reached = 1;
    let mut ecc = 0;
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v).ones() {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                ecc = ecc.max(dist[w]);
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    (reached == n).then_some(ecc)
}

/// Maximum eccentricity, or `Infinite` for disconnected (and empty) graphs.
pub fn diameter(g: &Graph) -> Diameter {
    if g.vertex_count() == 0 {
        return Diameter::Infinite;
    }
    let mut d = 0;
    for s in 0..g.vertex_count() {
        match eccentricity(g, s) {
            Some(e) => d = d.max(e),
            None => return Diameter::Infinite,
        }
    }
    Diameter::Finite(d)
}

// ---------------------------------------------------------------------------
// Maximum independent set
// ---------------------------------------------------------------------------

/// Keeps one representative per class of vertices with equal closed
/// neighborhoods. Such vertices are pairwise adjacent, so some maximum
/// independent set uses only representatives.
fn true_twin_representatives(g: &Graph) -> Vec<usize> {
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut reps = Vec::new();
    for v in 0..g.vertex_count() {
        let mut closed = g.neighbors(v).clone();
        closed.insert(v);
        if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(closed) {
            e.insert(v);
            reps.push(v);
        }
    }
    reps
}

struct MisSearch<'a> {
    adj: &'a [FixedBitSet],
    /// Branching priority: descending degree, ties by index.
    rank: Vec<usize>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl MisSearch<'_> {
    /// Greedy partition of `cand` into cliques; its size bounds any
    /// independent subset of `cand`.
    fn clique_cover_bound(&self, cand: &FixedBitSet) -> usize {
        let mut cliques: Vec<FixedBitSet> = Vec::new();
        let mut verts: Vec<usize> = cand.ones().collect();
        verts.sort_unstable_by_key(|&v| self.rank[v]);
        'next: for v in verts {
            for common in cliques.iter_mut() {
                if common.contains(v) {
                    common.intersect_with(&self.adj[v]);
                    continue 'next;
                }
            }
            let mut common = self.adj[v].clone();
            common.intersect_with(cand);
            cliques.push(common);
        }
        cliques.len()
    }

    fn expand(&mut self, mut cand: FixedBitSet) {
        loop {
            if cand.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
                return;
            }
            if self.current.len() + self.clique_cover_bound(&cand) <= self.best.len() {
                return;
            }
            let v = cand
                .ones()
                .min_by_key(|&v| self.rank[v])
                .expect("nonempty candidate set");
            // include v
            let mut with_v = cand.clone();
            with_v.difference_with(&self.adj[v]);
            with_v.set(v, false);
            self.current.push(v);
            self.expand(with_v);
            self.current.pop();
            // exclude v
            cand.set(v, false);
        }
    }
}

fn mis_exact(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut rank = vec![0; n];
    for (i, &v) in by_degree.iter().enumerate() {
        rank[v] = i;
    }
    let mut search = MisSearch {
        adj: g.rows(),
        rank,
        best: Vec::new(),
        current: Vec::new(),
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(all);
    let mut best = search.best;
    best.sort_unstable();
    best
}

/// An exact maximum independent set, sorted.
pub fn max_independent_set(g: &Graph, cap: usize) -> Result<Vec<usize>, SolverError> {
    check_cap("max_independent_set", g, cap)?;
    let reps = true_twin_representatives(g);
    let reduced = g.induced(&reps);
    let mut set: Vec<usize> = mis_exact(&reduced).into_iter().map(|i| reps[i]).collect();
    set.sort_unstable();
    Ok(set)
}

pub fn independence_number(g: &Graph, cap: usize) -> Result<usize, SolverError> {
    max_independent_set(g, cap).map(|s| s.len())
}

/// An exact maximum clique, via an independent set of the complement.
pub fn max_clique(g: &Graph, cap: usize) -> Result<Vec<usize>, SolverError> {
    check_cap("max_clique", g, cap)?;
    max_independent_set(&g.complement(), cap)
}

pub fn clique_number(g: &Graph, cap: usize) -> Result<usize, SolverError> {
    max_clique(g, cap).map(|s| s.len())
}

// ---------------------------------------------------------------------------
// Colouring
// ---------------------------------------------------------------------------

struct ColorSearch<'a> {
    adj: &'a [FixedBitSet],
    degree: Vec<usize>,
    color: Vec<usize>,
    /// `neighbor_colors[v][c]` = number of colored neighbors of `v` with color `c`.
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: usize,
    best_coloring: Vec<usize>,
    lower: usize,
}

const UNCOLORED: usize = usize::MAX;

impl ColorSearch<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for w in self.adj[v].ones() {
            if self.neighbor_colors[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.neighbor_colors[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = UNCOLORED;
        for w in self.adj[v].ones() {
            self.neighbor_colors[w][c] -= 1;
            if self.neighbor_colors[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v] == UNCOLORED)
            .max_by_key(|&v| (self.saturation[v], self.degree[v], std::cmp::Reverse(v)))
    }

    /// DSATUR branch and bound; `used` colors are in play.
    fn search(&mut self, used: usize) {
        if self.best <= self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best {
                self.best = used;
                self.best_coloring = self.color.clone();
            }
            return;
        };
        for c in 0..used {
            if self.neighbor_colors[v][c] == 0 {
                self.assign(v, c);
                self.search(used);
                self.unassign(v);
                if self.best <= self.lower {
                    return;
                }
            }
        }
        if used + 1 < self.best {
            self.assign(v, used);
            self.search(used + 1);
            self.unassign(v);
        }
    }
}

/// An optimal proper coloring as a color per vertex, with the clique number
/// as the initial lower bound.
pub fn optimal_coloring(g: &Graph, cap: usize) -> Result<Vec<usize>, SolverError> {
    check_cap("chromatic_number", g, cap)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let lower = clique_number(g, cap.max(n))?;
    let mut search = ColorSearch {
        adj: g.rows(),
        degree: (0..n).map(|v| g.degree(v)).collect(),
        color: vec![UNCOLORED; n],
        neighbor_colors: vec![vec![0; n + 1]; n],
        saturation: vec![0; n],
        best: n + 1,
        best_coloring: Vec::new(),
        lower,
    };
    search.search(0);
    Ok(search.best_coloring)
}

pub fn chromatic_number(g: &Graph, cap: usize) -> Result<usize, SolverError> {
    Ok(color_count(&optimal_coloring(g, cap)?))
}

fn color_count(coloring: &[usize]) -> usize {
    coloring.iter().max().map_or(0, |&c| c + 1)
}

/// A minimum partition of the vertices into cliques (color classes of the complement).
pub fn min_clique_cover(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>, SolverError> {
    let coloring = optimal_coloring(&g.complement(), cap)?;
    let mut parts = vec![Vec::new(); color_count(&coloring)];
    for (v, &c) in coloring.iter().enumerate() {
        parts[c].push(v);
    }
    Ok(parts)
}

pub fn clique_cover_number(g: &Graph, cap: usize) -> Result<usize, SolverError> {
    min_clique_cover(g, cap).map(|p| p.len())
}

// ---------------------------------------------------------------------------
// Odd holes
// ---------------------------------------------------------------------------

/// Vertices surviving repeated removal of twins (equal open or equal closed
/// neighborhoods). A chordless cycle of length at least 5 contains at most one
/// vertex of any twin pair, and a twin can stand in for its partner, so holes
/// survive the reduction.
fn twin_free_core(g: &Graph) -> Vec<usize> {
    let mut alive: Vec<usize> = (0..g.vertex_count()).collect();
    loop {
        let sub = g.induced(&alive);
        let mut open = HashSet::new();
        let mut closed = HashSet::new();
        let mut keep = Vec::with_capacity(alive.len());
        for (v, &orig) in alive.iter().enumerate() {
            let o = sub.neighbors(v).clone();
            let mut c = o.clone();
            c.insert(v);
            let fresh_open = open.insert(o);
            let fresh_closed = closed.insert(c);
            if fresh_open && fresh_closed {
                keep.push(orig);
            }
        }
        if keep.len() == alive.len() {
            return alive;
        }
        alive = keep;
    }
}

struct HoleSearch<'a> {
    g: &'a Graph,
    max_len: usize,
    path: Vec<usize>,
}

impl HoleSearch<'_> {
    /// `blocked` = path vertices plus neighbors of every path vertex except
    /// the first and the last.
    fn extend(&mut self, blocked: &FixedBitSet) -> Option<Vec<usize>> {
        let start = self.path[0];
        let last = *self.path.last().unwrap();
        let k = self.path.len();
        let candidates: Vec<usize> = self
            .g
            .neighbors(last)
            .ones()
            .filter(|&w| w > start && !blocked.contains(w))
            .collect();
        for w in candidates {
            if k >= 2 && self.g.has_edge(w, start) {
                // closes a cycle of length k + 1; the w > path[1] test keeps
                // one orientation per cycle
                if k + 1 >= 5 && (k + 1) % 2 == 1 && w > self.path[1] {
                    let mut cycle = self.path.clone();
                    cycle.push(w);
                    return Some(cycle);
                }
                continue;
            }
            // w would need at least one more vertex to close
            if k + 2 > self.max_len {
                continue;
            }
            let mut next_blocked = blocked.clone();
            next_blocked.insert(w);
            if k >= 2 {
                next_blocked.union_with(self.g.neighbors(last));
            }
            self.path.push(w);
            if let Some(c) = self.extend(&next_blocked) {
                return Some(c);
            }
            self.path.pop();
        }
        None
    }
}

/// Whether `cycle` is an induced cycle of odd length at least 5.
pub fn is_odd_hole(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 5 || k.is_multiple_of(2) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k || sorted.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// An induced odd cycle of length in `5..=max_len`, if one exists.
pub fn find_odd_hole(g: &Graph, max_len: usize) -> Option<Vec<usize>> {
    if max_len < 5 {
        return None;
    }
    let core = twin_free_core(g);
    let sub = g.induced(&core);
    let n = sub.vertex_count();
    for start in 0..n {
        let mut search = HoleSearch {
            g: &sub,
            max_len,
            path: vec![start],
        };
        let mut blocked = FixedBitSet::with_capacity(n);
        blocked.insert(start);
        if let Some(cycle) = search.extend(&blocked) {
            let cycle: Vec<usize> = cycle.into_iter().map(|v| core[v]).collect();
            assert!(
                is_odd_hole(g, &cycle),
                "hole search produced a non-hole {cycle:?}"
            );
            return Some(cycle);
        }
    }
    None
}

/// An odd antihole (odd hole of the complement) of length in `5..=max_len`.
pub fn find_odd_antihole(g: &Graph, max_len: usize) -> Option<Vec<usize>> {
    find_odd_hole(&g.complement(), max_len)
}

// ---------------------------------------------------------------------------
// Report
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub vertices: usize,
    pub edges: usize,
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    pub theta: usize,
    /// Sorted in decreasing order.
    pub component_sizes: Vec<usize>,
    pub diameter: Diameter,
    pub odd_hole: Option<Vec<usize>>,
    pub odd_antihole: Option<Vec<usize>>,
}

impl InvariantReport {
    pub fn compute(g: &Graph, limits: &SolverLimits) -> Result<Self, SolverError> {
        let mut component_sizes: Vec<usize> =
            connected_components(g).iter().map(Vec::len).collect();
        component_sizes.sort_unstable_by(|a, b| b.cmp(a));
        check_cap("find_odd_hole", g, limits.chi_cap)?;
        Ok(InvariantReport {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            alpha: independence_number(g, limits.mis_cap)?,
            omega: clique_number(g, limits.mis_cap)?,
            chi: chromatic_number(g, limits.chi_cap)?,
            theta: clique_cover_number(g, limits.chi_cap)?,
            component_sizes,
            diameter: diameter(g),
            odd_hole: find_odd_hole(g, limits.hole_length),
            odd_antihole: find_odd_antihole(g, limits.hole_length),
        })
    }
}
