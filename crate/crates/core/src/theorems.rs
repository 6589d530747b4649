//! Executable forms of the structural statements about power graphs: which
//! vertices are joined to everything, what is left after deleting them,
//! the independence/clique-cover structure of `C(p^n) x H` with `p` coprime
//! to `|H|`, and the connectivity criteria for proper power graphs.
//!
//! Each routine here predicts something from group structure alone. The
//! brute-force side (graph construction, exact solvers, BFS) lives in
//! [`crate::power_graph`] and [`crate::invariants`]; callers compare the two.

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::arith;
use crate::graph::Graph;
use crate::group::{Element, FiniteGroup, GroupError};
use crate::invariants::{connected_components, is_connected};
use crate::power_graph::{
    delete_vertices, directed_power_graph, dominating_vertices, mutual_power_classes, power_graph,
    proper_power_graph, CyclicClassPoset,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = {p} divides |H| = {order}")]
    NotCoprime { p: u64, order: usize },
    #[error("the trivial group has no proper power graph")]
    TrivialGroup,
    #[error("{0} is not a nontrivial p-group")]
    NotPGroup(String),
    #[error("need at least {needed} levels above the bottom, have {n}")]
    InsufficientLevels { n: u32, needed: usize },
    #[error("parameter {0} out of range")]
    BadParameter(u64),
    #[error(transparent)]
    Group(#[from] GroupError),
}

// ---------------------------------------------------------------------------
// Vertices joined to every vertex
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DominatingCase {
    IdentityOnly,
    CyclicGenerators,
    CyclicPrimePowerAll,
    GeneralizedQuaternionInvolution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominatingClassification {
    pub case: DominatingCase,
    /// Predicted dominating vertices of `P(G)`, sorted.
    pub witnesses: Vec<usize>,
}

/// Predicts the dominating vertices of `P(G)` from group structure alone.
///
/// The identity always qualifies. Beyond it: every element of a cyclic
/// group of prime-power order (the trivial group included), the generators
/// of any other cyclic group, or the unique involution of a generalized
/// quaternion group.
pub fn classify_dominating(g: &FiniteGroup) -> DominatingClassification {
    let n = g.order();
    let id = g.identity().index();
    let (case, mut witnesses) = if g.is_cyclic() {
        if n == 1 || arith::prime_power(n as u64).is_some() {
            (DominatingCase::CyclicPrimePowerAll, (0..n).collect())
        } else {
            let mut w: Vec<usize> = g
                .elements()
                .filter(|&x| g.element_order(x) == n)
                .map(Element::index)
                .collect();
            w.push(id);
            (DominatingCase::CyclicGenerators, w)
        }
    } else if g.is_generalized_quaternion() {
        let inv = g.involutions()[0].index();
        (
            DominatingCase::GeneralizedQuaternionInvolution,
            vec![id, inv],
        )
    } else {
        (DominatingCase::IdentityOnly, vec![id])
    };
    witnesses.sort_unstable();
    DominatingClassification { case, witnesses }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DeletionPrediction {
    /// Cyclic of prime-power order: the graph is complete, nothing remains.
    Empty,
    /// Cyclic of order `pq`: complete components of sizes `p-1` and `q-1`.
    TwoCliques { p_minus_1: usize, q_minus_1: usize },
    /// Any other cyclic group: the residue is connected.
    Connected,
    /// Generalized quaternion of order `2^n`: `K_{2^{n-1}-2}` plus `2^{n-2}` disjoint edges.
    CliquePlusEdges { clique: usize, edges: usize },
    /// No structural prediction for this group.
    NoPrediction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResidueComponent {
    pub size: usize,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletedStructure {
    /// Dominating vertices of `P(G)` that were deleted.
    pub removed: Vec<usize>,
    pub prediction: DeletionPrediction,
    /// Components of the residue, largest first.
    pub components: Vec<ResidueComponent>,
    pub residue_vertices: usize,
}

impl DeletedStructure {
    /// `None` when there is no prediction to compare against.
    pub fn matches(&self) -> Option<bool> {
        let comps = &self.components;
        let all_complete = comps.iter().all(|c| c.complete);
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        Some(match self.prediction {
            DeletionPrediction::NoPrediction => return None,
            DeletionPrediction::Empty => self.residue_vertices == 0,
            DeletionPrediction::Connected => comps.len() == 1,
            DeletionPrediction::TwoCliques {
                p_minus_1,
                q_minus_1,
            } => {
                let mut want = vec![p_minus_1, q_minus_1];
                want.sort_unstable();
                all_complete && sizes == want
            }
            DeletionPrediction::CliquePlusEdges { clique, edges } => {
                let mut want = vec![2; edges];
                want.push(clique);
                want.sort_unstable();
                all_complete && sizes == want
            }
        })
    }
}

fn predict_deletion(g: &FiniteGroup) -> DeletionPrediction {
    let n = g.order() as u64;
    if g.is_cyclic() {
        let f = arith::factorize(n);
        match f.as_slice() {
            [] | [(_, _)] => DeletionPrediction::Empty,
            [(p, 1), (q, 1)] => DeletionPrediction::TwoCliques {
                p_minus_1: (*p - 1) as usize,
                q_minus_1: (*q - 1) as usize,
            },
            _ => DeletionPrediction::Connected,
        }
    } else if g.is_generalized_quaternion() {
        let half = g.order() / 2;
        DeletionPrediction::CliquePlusEdges {
            clique: half - 2,
            edges: half / 2,
        }
    } else {
        DeletionPrediction::NoPrediction
    }
}

/// Deletes every dominating vertex of `P(G)` and reports the residue next to
/// the structural prediction for `G`.
pub fn deleted_structure(g: &FiniteGroup) -> DeletedStructure {
    let p = power_graph(g);
    let removed = dominating_vertices(&p);
    let residue = delete_vertices(&p, &removed);
    let mut components: Vec<ResidueComponent> = connected_components(&residue)
        .iter()
        .map(|c| ResidueComponent {
            size: c.len(),
            complete: residue.is_clique(c),
        })
        .collect();
    components.sort_by_key(|c| std::cmp::Reverse(c.size));
    DeletedStructure {
        removed,
        prediction: predict_deletion(g),
        components,
        residue_vertices: residue.vertex_count(),
    }
}

// ---------------------------------------------------------------------------
// C(p^n) x H with p coprime to |H|
// ---------------------------------------------------------------------------

/// Elements of the cyclic factor `C(p^n)` grouped by level: `levels[i]`
/// holds the elements of order `p^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelDecomposition {
    pub p: u64,
    pub n: u32,
    pub levels: Vec<Vec<usize>>,
}

/// The group `C(p^n) x H` together with the data the structural arguments use.
///
/// Element `(z, h)` sits at index `z * |H| + h`, where `z` is the exponent of
/// the generator of `C(p^n)`.
#[derive(Debug, Clone)]
pub struct CoprimeProduct {
    p: u64,
    n: u32,
    h: FiniteGroup,
    group: FiniteGroup,
    h_classes: CyclicClassPoset,
    /// `h_contains[h]` = elements of `<h>` (including `h` itself).
    h_contains: Vec<FixedBitSet>,
    exp_h: u64,
}

impl CoprimeProduct {
    pub fn new(p: u64, n: u32, h: FiniteGroup) -> Result<Self, TheoremError> {
        if !arith::is_prime(p) {
            return Err(TheoremError::NotPrime(p));
        }
        if (h.order() as u64).is_multiple_of(p) {
            return Err(TheoremError::NotCoprime {
                p,
                order: h.order(),
            });
        }
        let cyclic = FiniteGroup::cyclic(p.pow(n))?;
        let group = FiniteGroup::direct_product(&cyclic, &h);
        let h_classes = mutual_power_classes(&h);
        let digraph = directed_power_graph(&h);
        let h_contains = (0..h.order())
            .map(|x| {
                let mut row = digraph.out_neighbors(x).clone();
                row.insert(x);
                row
            })
            .collect();
        let exp_h = h.exponent();
        Ok(CoprimeProduct {
            p,
            n,
            h,
            group,
            h_classes,
            h_contains,
            exp_h,
        })
    }

    /// Renames the product group, e.g. to the spec it was built from.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.group = self.group.with_name(name);
        self
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.h
    }

    pub fn h_classes(&self) -> &CyclicClassPoset {
        &self.h_classes
    }

    fn cyclic_order(&self) -> u64 {
        self.p.pow(self.n)
    }

    /// `(z, h)` components of a product element.
    pub fn split(&self, x: Element) -> (usize, usize) {
        let m = self.h.order();
        (x.index() / m, x.index() % m)
    }

    pub fn join(&self, z: usize, h: usize) -> Element {
        Element(z * self.h.order() + h)
    }

    /// Order of `a^z` in `C(p^n)`.
    fn z_order(&self, z: usize) -> u64 {
        let m = self.cyclic_order();
        m / arith::gcd(z as u64, m)
    }

    /// `i` such that `a^z` has order `p^i`.
    pub fn level(&self, z: usize) -> u32 {
        let mut o = self.z_order(z);
        let mut i = 0;
        while o > 1 {
            o /= self.p;
            i += 1;
        }
        i
    }

    pub fn level_decomposition(&self) -> LevelDecomposition {
        let mut levels = vec![Vec::new(); self.n as usize + 1];
        for z in 0..self.cyclic_order() as usize {
            levels[self.level(z) as usize].push(z);
        }
        LevelDecomposition {
            p: self.p,
            n: self.n,
            levels,
        }
    }

    fn h_in(&self, h_sub: usize, h: usize) -> bool {
        self.h_contains[h].contains(h_sub)
    }

    /// If `y` is a power of `x`, returns an exponent `c >= 1` with `x^c = y`,
    /// built componentwise and glued with the Chinese remainder theorem
    /// (`c = a mod o(z)`, `c = b mod exp(H)`).
    pub fn crt_joint_power(&self, x: Element, y: Element) -> Option<u64> {
        let (z, h) = self.split(x);
        let (z2, h2) = self.split(y);
        let m = self.cyclic_order();
        let oz = self.z_order(z);
        // in additive Z/m: z2 = a * z has a solution iff o(z2) | o(z), i.e. <z2> ⊆ <z>
        let a = if oz == 1 {
            (z2 == 0).then_some(0)?
        } else {
            let step = m / oz; // <z> = multiples of step
            if !(z2 as u64).is_multiple_of(step) {
                return None;
            }
            // z = u * step with u a unit mod oz; a = (z2/step) * u^{-1} mod oz
            let u = (z as u64 / step) % oz;
            let target = (z2 as u64 / step) % oz;
            (target * mod_inverse(u, oz)) % oz
        };
        if !self.h_in(h2, h) {
            return None;
        }
        let b = self
            .h
            .powers(Element(h))
            .iter()
            .position(|&e| e.index() == h2)
            .expect("membership checked") as u64;
        let c = arith::crt_pair(a, oz, b % self.exp_h, self.exp_h)?;
        Some(if c == 0 { oz * self.exp_h } else { c })
    }

    /// Adjacency in `P(C(p^n) x H)` predicted from the factors: either the
    /// `H` parts generate the same cyclic subgroup, or one `H` part strictly
    /// contains the other and the matching `C(p^n)` part sits at least as
    /// high.
    pub fn adjacency_rule(&self, x: Element, y: Element) -> bool {
        let (z, h) = self.split(x);
        let (z2, h2) = self.split(y);
        let h_to_h2 = self.h_in(h2, h);
        let h2_to_h = self.h_in(h, h2);
        let (lz, lz2) = (self.level(z), self.level(z2));
        (h_to_h2 && h2_to_h)
            || (h_to_h2 && !h2_to_h && lz >= lz2)
            || (!h_to_h2 && h2_to_h && lz <= lz2)
    }

    /// Parts `C(p^n) x E`, one per class `E` of `H`, each sorted.
    pub fn structural_clique_cover(&self) -> Vec<Vec<usize>> {
        self.h_classes
            .classes()
            .iter()
            .map(|class| {
                let mut part: Vec<usize> = (0..self.cyclic_order() as usize)
                    .flat_map(|z| class.iter().map(move |&h| (z, h)))
                    .map(|(z, h)| self.join(z, h).index())
                    .collect();
                part.sort_unstable();
                part
            })
            .collect()
    }

    /// Smallest `z` whose order is `p^level`.
    fn first_at_level(&self, level: u32) -> usize {
        if level == 0 {
            0
        } else {
            self.p.pow(self.n - level) as usize
        }
    }

    /// One element per class of `H`, paired with a level of `C(p^n)` that
    /// strictly decreases as the class moves up the inclusion order, so no
    /// two chosen elements are powers of each other.
    ///
    /// With `n >= r - 1` (`r` classes) the levels come from the linear
    /// extension: the `i`-th class from the bottom gets level `r - i`.
    /// Otherwise each class gets its depth (longest chain above it), which
    /// needs only `n >= height - 1`.
    pub fn structural_independent_set(&self) -> Result<Vec<usize>, TheoremError> {
        let r = self.h_classes.len();
        let levels: Vec<u32> = if self.n as usize + 1 >= r {
            let mut lv = vec![0; r];
            for (i, &c) in self.h_classes.linear_extension().iter().enumerate() {
                lv[c] = (r - 1 - i) as u32;
            }
            lv
        } else {
            let height = self.h_classes.height();
            if self.n as usize + 1 < height {
                return Err(TheoremError::InsufficientLevels {
                    n: self.n,
                    needed: height - 1,
                });
            }
            self.h_classes
                .depths()
                .into_iter()
                .map(|d| d as u32)
                .collect()
        };
        let mut set: Vec<usize> = (0..r)
            .map(|c| {
                let h = self.h_classes.class(c)[0];
                self.join(self.first_at_level(levels[c]), h).index()
            })
            .collect();
        set.sort_unstable();
        Ok(set)
    }
}

fn mod_inverse(u: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    // m is a prime power and u a unit, so u^{phi(m) - 1} works
    let e = arith::euler_phi(m) - 1;
    let mut result = 1u128;
    let mut base = u as u128 % m as u128;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % m as u128;
        }
        base = base * base % m as u128;
        e >>= 1;
    }
    result as u64
}

/// Number of cyclic subgroups of `H`: the independence number of
/// `P(C(p^n) x H)` once `n` is large enough.
pub fn predicted_alpha(h: &FiniteGroup) -> usize {
    h.count_cyclic_subgroups()
}

// ---------------------------------------------------------------------------
// Connectivity of the proper power graph
// ---------------------------------------------------------------------------

/// Graph whose vertices are the subgroups of prime order, joined when some
/// element of order `pq` contains both. Vertex labels name a generator.
pub fn reduced_prime_graph(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let orders = g.element_orders();
    // canonical id of a prime-order subgroup: its smallest non-identity element
    let mut canon = vec![usize::MAX; n];
    let mut vertices = Vec::new();
    for x in g.elements() {
        let o = orders[x.index()];
        if !arith::is_prime(o as u64) || canon[x.index()] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = g.powers(x).iter().skip(1).map(|e| e.index()).collect();
        let id = vertices.len();
        for &m in &members {
            canon[m] = id;
        }
        vertices.push(*members.iter().min().unwrap());
    }
    let mut r = Graph::empty(vertices.len())
        .with_labels(vertices.iter().map(|&v| g.labels()[v].clone()).collect());
    for w in g.elements() {
        let o = orders[w.index()] as u64;
        if let [(p, 1), (q, 1)] = arith::factorize(o).as_slice() {
            let x = g.pow(w, *q);
            let y = g.pow(w, *p);
            r.add_edge(canon[x.index()], canon[y.index()]);
        }
    }
    r
}

/// Connectivity of `P*(G)` decided on the reduced prime-order graph.
pub fn ham_connectivity(g: &FiniteGroup) -> Result<bool, TheoremError> {
    if g.order() == 1 {
        return Err(TheoremError::TrivialGroup);
    }
    Ok(is_connected(&reduced_prime_graph(g)))
}

/// For a nontrivial `p`-group: exactly one subgroup of order `p`.
pub fn pgroup_connectivity_criterion(g: &FiniteGroup) -> Result<bool, TheoremError> {
    let p = g
        .p_group_prime()
        .ok_or_else(|| TheoremError::NotPGroup(g.name().to_string()))?;
    Ok(g.subgroups_of_prime_order(p).len() == 1)
}

pub fn is_cyclic_or_generalized_quaternion(g: &FiniteGroup) -> bool {
    g.is_cyclic() || g.is_generalized_quaternion()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CenterVerdict {
    MustBeConnected,
    NoClaim,
}

/// At least two primes among the orders of central elements forces `P*(G)`
/// to be connected.
pub fn center_spectrum_sufficiency(g: &FiniteGroup) -> CenterVerdict {
    let primes: std::collections::BTreeSet<u64> = g
        .center()
        .into_iter()
        .flat_map(|z| arith::prime_divisors(g.element_order(z) as u64))
        .collect();
    if primes.len() >= 2 {
        CenterVerdict::MustBeConnected
    } else {
        CenterVerdict::NoClaim
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsolatedInvolutionReport {
    pub group: String,
    pub order: usize,
    pub non_central_involutions: Vec<usize>,
    pub isolated: Vec<usize>,
    pub center: Vec<usize>,
    pub center_is_2_group: bool,
}

impl IsolatedInvolutionReport {
    pub fn holds(&self) -> bool {
        !self.non_central_involutions.is_empty()
            && self.isolated == self.non_central_involutions
            && self.center_is_2_group
    }
}

/// `G = <A, t>` with `A = C_n` (`n >= 3`) and `t` an involution inverting
/// `A`, i.e. the dihedral group of order `2n`. Reports which non-central
/// involutions are isolated in `P*(G)` and whether `Z(G)` is a 2-group.
pub fn isolated_involution_example(n: u64) -> Result<IsolatedInvolutionReport, TheoremError> {
    if n < 3 {
        return Err(TheoremError::BadParameter(n));
    }
    let g = FiniteGroup::dihedral(n)?;
    let center: Vec<usize> = g.center().into_iter().map(Element::index).collect();
    let non_central_involutions: Vec<usize> = g
        .involutions()
        .into_iter()
        .map(Element::index)
        .filter(|x| !center.contains(x))
        .collect();
    let proper = proper_power_graph(&g);
    let isolated: Vec<usize> = (0..proper.vertex_count())
        .filter(|&v| proper.degree(v) == 0)
        .map(|v| proper.origin(v))
        .filter(|x| non_central_involutions.contains(x))
        .collect();
    let center_is_2_group = center
        .iter()
        .all(|&z| g.element_order(Element(z)).is_power_of_two());
    Ok(IsolatedInvolutionReport {
        group: g.name().to_string(),
        order: g.order(),
        non_central_involutions,
        isolated,
        center,
        center_is_2_group,
    })
}

// ---------------------------------------------------------------------------
// Finite truncations of the infinite cases
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChainFamily {
    /// `C(p) < C(p^2) < ...`
    Prufer(u64),
    /// `Q(8) < Q(16) < ...`
    Quaternion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLevel {
    pub group: String,
    pub order: usize,
    pub complete: bool,
    pub proper_connected: bool,
    pub dominating: Vec<usize>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub family: ChainFamily,
    pub depth: u32,
    pub levels: Vec<ChainLevel>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        !self.levels.is_empty() && self.levels.iter().all(|l| l.holds)
    }
}

/// Checks each finite level of a chain: `C(p^k)` for `k = 1..=depth` must
/// have complete `P` and connected `P*`; `Q(2^k)` for `k = 3..=depth` must
/// have dominating set `{1, involution}` and connected `P*`.
pub fn truncation_chain_report(
    family: ChainFamily,
    depth: u32,
) -> Result<ChainReport, TheoremError> {
    let groups: Vec<FiniteGroup> = match family {
        ChainFamily::Prufer(p) => {
            if !arith::is_prime(p) {
                return Err(TheoremError::NotPrime(p));
            }
            (1..=depth)
                .map(|k| FiniteGroup::cyclic(p.pow(k)))
                .collect::<Result<_, _>>()?
        }
        ChainFamily::Quaternion => (3..=depth)
            .map(|k| FiniteGroup::generalized_quaternion(1 << k))
            .collect::<Result<_, _>>()?,
    };
    let levels = groups
        .iter()
        .map(|g| {
            let p = power_graph(g);
            let dominating = dominating_vertices(&p);
            let complete = p.is_complete();
            let proper_connected = is_connected(&proper_power_graph(g));
            let holds = match family {
                ChainFamily::Prufer(_) => complete && proper_connected,
                ChainFamily::Quaternion => {
                    let inv = g.involutions();
                    inv.len() == 1
                        && dominating == [g.identity().index(), inv[0].index()]
                        && proper_connected
                }
            };
            ChainLevel {
                group: g.name().to_string(),
                order: g.order(),
                complete,
                proper_connected,
                dominating,
                holds,
            }
        })
        .collect();
    Ok(ChainReport {
        family,
        depth,
        levels,
    })
}

/// Edge of the divisibility model of `P(<x>)` on exponents: `x^m ~ x^k` iff
/// one exponent divides the other.
pub fn divisibility_adjacent(m: u64, k: u64) -> bool {
    m != k && m > 0 && k > 0 && (k.is_multiple_of(m) || m.is_multiple_of(k))
}

/// The common neighbor `mn` of `m` and `n` when it lies inside the window.
pub fn window_common_neighbor(m: u64, n: u64, window: u64) -> Option<u64> {
    let w = m.checked_mul(n)?;
    (w <= window && divisibility_adjacent(m, w) && divisibility_adjacent(n, w)).then_some(w)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowReport {
    pub window: u64,
    pub bound: u64,
    pub pairs_checked: u64,
    pub failures: Vec<(u64, u64)>,
}

impl WindowReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.pairs_checked > 0
    }
}

/// For every pair `2 <= m, n <= floor(sqrt(window))`, checks that `mn` is a
/// common neighbor in the divisibility window `{2..=window}`.
pub fn infinite_cyclic_window(window: u64) -> WindowReport {
    let bound = (1..)
        .take_while(|b: &u64| b * b <= window)
        .last()
        .unwrap_or(0);
    let mut pairs_checked = 0;
    let mut failures = Vec::new();
    for m in 2..=bound {
        for n in 2..=bound {
            pairs_checked += 1;
            if window_common_neighbor(m, n, window).is_none() {
                failures.push((m, n));
            }
        }
    }
    WindowReport {
        window,
        bound,
        pairs_checked,
        failures,
    }
}
