//! Verification checks: each compares a structural prediction against an
//! exhaustive computation on one corpus entry.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use fixedbitset::FixedBitSet;
use powergraph::invariants::{
    connected_components, find_odd_antihole, find_odd_hole, is_connected, max_clique,
    max_independent_set, min_clique_cover, optimal_coloring, SolverError, SolverLimits,
};
use powergraph::power_graph::{delete_vertices, power_graph, proper_power_graph};
use powergraph::theorems::{
    center_spectrum_sufficiency, classify_dominating, deleted_structure, ham_connectivity,
    infinite_cyclic_window, is_cyclic_or_generalized_quaternion, pgroup_connectivity_criterion,
    truncation_chain_report, CenterVerdict, ChainFamily, CoprimeProduct, DeletionPrediction,
    TheoremError,
};
use powergraph::{arith, Element, FiniteGroup, Graph};
use rayon::prelude::*;
use serde::Serialize;

use crate::spec::{Family, GroupSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    Dominating,
    DeletedStructure,
    AlphaFormula,
    AdjacencyRule,
    StructuralCover,
    CrtLemma,
    HamConnectivity,
    PgroupCriterion,
    CenterSpectrum,
    PerfectionProxy,
    AlphaEqualsTheta,
    TruncationChains,
    InfiniteCyclicWindow,
}

impl CheckId {
    pub const ALL: [CheckId; 13] = [
        CheckId::Dominating,
        CheckId::DeletedStructure,
        CheckId::AlphaFormula,
        CheckId::AdjacencyRule,
        CheckId::StructuralCover,
        CheckId::CrtLemma,
        CheckId::HamConnectivity,
        CheckId::PgroupCriterion,
        CheckId::CenterSpectrum,
        CheckId::PerfectionProxy,
        CheckId::AlphaEqualsTheta,
        CheckId::TruncationChains,
        CheckId::InfiniteCyclicWindow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Dominating => "dominating",
            CheckId::DeletedStructure => "deleted-structure",
            CheckId::AlphaFormula => "alpha-formula",
            CheckId::AdjacencyRule => "adjacency-rule",
            CheckId::StructuralCover => "structural-cover",
            CheckId::CrtLemma => "crt-lemma",
            CheckId::HamConnectivity => "ham-connectivity",
            CheckId::PgroupCriterion => "pgroup-criterion",
            CheckId::CenterSpectrum => "center-spectrum",
            CheckId::PerfectionProxy => "perfection-proxy",
            CheckId::AlphaEqualsTheta => "alpha-equals-theta",
            CheckId::TruncationChains => "truncation-chains",
            CheckId::InfiniteCyclicWindow => "infinite-cyclic-window",
        }
    }

    /// Whether `--inject-fault` has a prediction to falsify for this check.
    pub fn supports_fault(self) -> bool {
        matches!(
            self,
            CheckId::Dominating
                | CheckId::AlphaFormula
                | CheckId::AdjacencyRule
                | CheckId::CrtLemma
                | CheckId::HamConnectivity
        )
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check does not apply to this entry, or an exact solver refused it.
    Skip,
}

/// Elements of `group` on which the prediction and the exhaustive
/// computation disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub group: String,
    pub elements: Vec<usize>,
    pub labels: Vec<String>,
    pub claim: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationOutcome {
    pub check: CheckId,
    pub spec: String,
    pub status: Status,
    pub detail: String,
    /// Number of individual comparisons made.
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckContext {
    pub limits: SolverLimits,
    /// Falsify the prediction so the comparison must fail.
    pub inject_fault: bool,
}

enum Verdict {
    Pass {
        detail: String,
        checked: u64,
    },
    Fail {
        detail: String,
        checked: u64,
        cx: Counterexample,
    },
    Skip(String),
}

fn pass(detail: impl Into<String>, checked: u64) -> Verdict {
    Verdict::Pass {
        detail: detail.into(),
        checked,
    }
}

fn fail(detail: impl Into<String>, checked: u64, cx: Counterexample) -> Verdict {
    Verdict::Fail {
        detail: detail.into(),
        checked,
        cx,
    }
}

fn cx(
    g: &FiniteGroup,
    elements: Vec<usize>,
    claim: impl Into<String>,
    actual: impl Into<String>,
) -> Counterexample {
    Counterexample {
        group: g.name().to_string(),
        labels: elements
            .iter()
            .map(|&x| g.label(Element(x)).to_string())
            .collect(),
        elements,
        claim: claim.into(),
        actual: actual.into(),
    }
}

impl From<SolverError> for Verdict {
    fn from(e: SolverError) -> Self {
        Verdict::Skip(e.to_string())
    }
}

impl From<TheoremError> for Verdict {
    fn from(e: TheoremError) -> Self {
        Verdict::Skip(e.to_string())
    }
}

fn outcome(check: CheckId, spec: String, verdict: Verdict, start: Instant) -> VerificationOutcome {
    let (status, detail, checked, counterexample) = match verdict {
        Verdict::Pass { detail, checked } => (Status::Pass, detail, checked, None),
        Verdict::Fail {
            detail,
            checked,
            cx,
        } => (Status::Fail, detail, checked, Some(cx)),
        Verdict::Skip(detail) => (Status::Skip, detail, 0, None),
    };
    VerificationOutcome {
        check,
        spec,
        status,
        detail,
        checked,
        counterexample,
        wall_ms: Some((start.elapsed().as_secs_f64() * 1000.0 * 1000.0).round() / 1000.0),
    }
}

/// Runs a group-based check on one spec.
pub fn run_check(check: CheckId, spec: &GroupSpec, ctx: &CheckContext) -> VerificationOutcome {
    let start = Instant::now();
    let verdict = match check {
        CheckId::Dominating => dominating(spec, ctx),
        CheckId::DeletedStructure => deleted(spec),
        CheckId::AlphaFormula => with_coprime(spec, |cp| alpha_formula(cp, ctx)),
        CheckId::AdjacencyRule => with_coprime(spec, |cp| adjacency_rule(cp, ctx)),
        CheckId::StructuralCover => with_coprime(spec, structural_cover),
        CheckId::CrtLemma => with_coprime(spec, |cp| crt_lemma(cp, ctx)),
        CheckId::HamConnectivity => ham(spec, ctx),
        CheckId::PgroupCriterion => pgroup(spec),
        CheckId::CenterSpectrum => center(spec),
        CheckId::PerfectionProxy => perfection(spec, ctx),
        CheckId::AlphaEqualsTheta => alpha_theta(spec, ctx),
        CheckId::TruncationChains => chains(spec),
        CheckId::InfiniteCyclicWindow => {
            Verdict::Skip("infinite-cyclic-window takes no group".to_string())
        }
    };
    outcome(check, spec.render(), verdict, start)
}

/// Runs `check` on every entry in parallel; results keep the input order.
pub fn run_all(
    check: CheckId,
    specs: &[GroupSpec],
    ctx: &CheckContext,
) -> Vec<VerificationOutcome> {
    specs.par_iter().map(|s| run_check(check, s, ctx)).collect()
}

/// Runs the divisibility-window check for exponents `2..=window`.
pub fn run_window(window: u64) -> VerificationOutcome {
    let start = Instant::now();
    let report = infinite_cyclic_window(window);
    let verdict = if report.pairs_checked == 0 {
        Verdict::Skip(format!(
            "window {window} has no pairs 2 <= m, n <= sqrt(window)"
        ))
    } else if let Some(&(m, n)) = report.failures.first() {
        // elements are exponents of x in the window model
        let c = Counterexample {
            group: format!("window({window})"),
            elements: vec![m as usize, n as usize],
            labels: vec![format!("x^{m}"), format!("x^{n}")],
            claim: "common neighbor x^(m*n)".to_string(),
            actual: "no common neighbor in the window".to_string(),
        };
        fail(
            format!(
                "{} of {} pairs lack a common neighbor",
                report.failures.len(),
                report.pairs_checked
            ),
            report.pairs_checked,
            c,
        )
    } else {
        pass(
            format!(
                "all pairs 2 <= m, n <= {} have common neighbor m*n",
                report.bound
            ),
            report.pairs_checked,
        )
    };
    outcome(
        CheckId::InfiniteCyclicWindow,
        format!("window({window})"),
        verdict,
        start,
    )
}

/// Entries used when `truncation-chains` runs without input: Prüfer chains
/// for p = 2, 3, 5 to depth 4 and the quaternion chain to Q(64).
pub const DEFAULT_CHAIN_SPECS: [&str; 4] = ["C(16)", "C(81)", "C(625)", "Q(64)"];

fn dominating(spec: &GroupSpec, ctx: &CheckContext) -> Verdict {
    let g = spec.build();
    let mut predicted = classify_dominating(&g).witnesses;
    if ctx.inject_fault {
        predicted.pop();
    }
    // exhaustive: x dominates when x is adjacent to every other vertex
    let p = power_graph(&g);
    let n = g.order();
    let actual: Vec<usize> = (0..n).filter(|&x| p.degree(x) == n - 1).collect();
    let checked = n as u64;
    let missing: Vec<usize> = actual
        .iter()
        .copied()
        .filter(|x| !predicted.contains(x))
        .collect();
    let extra: Vec<usize> = predicted
        .iter()
        .copied()
        .filter(|x| !actual.contains(x))
        .collect();
    if let Some(&x) = missing.first() {
        return fail(
            format!("{} dominating vertices not predicted", missing.len()),
            checked,
            cx(&g, vec![x], "not dominating", "dominating"),
        );
    }
    if let Some(&x) = extra.first() {
        let y = (0..n)
            .find(|&y| y != x && !p.has_edge(x, y))
            .expect("x does not dominate");
        return fail(
            format!("{} predicted vertices do not dominate", extra.len()),
            checked,
            cx(&g, vec![x, y], "dominating", "not adjacent"),
        );
    }
    pass(format!("{} dominating vertices", actual.len()), checked)
}

fn deleted(spec: &GroupSpec) -> Verdict {
    let g = spec.build();
    let report = deleted_structure(&g);
    let Some(ok) = report.matches() else {
        return Verdict::Skip(
            "no deletion prediction: not cyclic and not generalized quaternion".into(),
        );
    };
    let prediction = match report.prediction {
        DeletionPrediction::Empty => "empty residue".to_string(),
        DeletionPrediction::Connected => "connected residue".to_string(),
        DeletionPrediction::TwoCliques {
            p_minus_1,
            q_minus_1,
        } => {
            format!("cliques of sizes {p_minus_1} and {q_minus_1}")
        }
        DeletionPrediction::CliquePlusEdges { clique, edges } => {
            format!("clique of size {clique} plus {edges} disjoint edges")
        }
        DeletionPrediction::NoPrediction => unreachable!(),
    };
    let sizes: Vec<String> = report
        .components
        .iter()
        .map(|c| format!("{}{}", c.size, if c.complete { "" } else { "*" }))
        .collect();
    let actual = format!("components [{}] (* = not complete)", sizes.join(", "));
    let checked = report.components.len() as u64 + 1;
    if ok {
        return pass(format!("{prediction}: {actual}"), checked);
    }
    // report the residue elements of the first component, or the removed set
    let p = power_graph(&g);
    let residue = delete_vertices(&p, &report.removed);
    let elements = connected_components(&residue)
        .first()
        .map(|c| c.iter().map(|&v| residue.origin(v)).collect())
        .unwrap_or_else(|| report.removed.clone());
    fail(
        "residue does not match",
        checked,
        cx(&g, elements, prediction, actual),
    )
}

fn with_coprime(spec: &GroupSpec, f: impl FnOnce(&CoprimeProduct) -> Verdict) -> Verdict {
    let Some((p, n, h)) = spec.coprime_split() else {
        return Verdict::Skip("not of the form C(p^n) x H with p coprime to |H|".into());
    };
    match CoprimeProduct::new(p, n, h.build()) {
        Ok(cp) => f(&cp.with_name(spec.render())),
        Err(e) => e.into(),
    }
}

fn alpha_formula(cp: &CoprimeProduct, ctx: &CheckContext) -> Verdict {
    let r = cp.h_classes().len();
    // the formula is proved once a structural independent set of size r exists
    if let Err(e) = cp.structural_independent_set() {
        return e.into();
    }
    let g = cp.group();
    let mis = match max_independent_set(&power_graph(g), ctx.limits.mis_cap) {
        Ok(s) => s,
        Err(e) => return e.into(),
    };
    let predicted = if ctx.inject_fault { r + 1 } else { r };
    if mis.len() == predicted {
        pass(format!("alpha = {r} = cyclic subgroups of H"), 1)
    } else {
        fail(
            format!("alpha = {}, predicted {predicted}", mis.len()),
            1,
            cx(
                g,
                mis.clone(),
                format!("alpha = {predicted}"),
                format!("independent set of size {}", mis.len()),
            ),
        )
    }
}

fn adjacency_rule(cp: &CoprimeProduct, ctx: &CheckContext) -> Verdict {
    let g = cp.group();
    let p = power_graph(g);
    let n = g.order();
    let mut checked = 0u64;
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            checked += 1;
            let mut rule = cp.adjacency_rule(Element(x), Element(y));
            if ctx.inject_fault && checked == 1 {
                rule = !rule;
            }
            let actual = p.has_edge(x, y);
            if rule != actual {
                let word = |b: bool| if b { "adjacent" } else { "not adjacent" };
                return fail(
                    "adjacency rule disagrees with P(G)",
                    checked,
                    cx(g, vec![x, y], word(rule), word(actual)),
                );
            }
        }
    }
    pass(format!("{checked} ordered pairs"), checked)
}

fn structural_cover(cp: &CoprimeProduct) -> Verdict {
    let g = cp.group();
    let p = power_graph(g);
    let r = cp.h_classes().len();
    let cover = cp.structural_clique_cover();
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut checked = 0u64;
    for part in &cover {
        for (i, &u) in part.iter().enumerate() {
            if seen.put(u) {
                return fail(
                    "parts overlap",
                    checked,
                    cx(g, vec![u], "in one part", "in two parts"),
                );
            }
            for &v in &part[i + 1..] {
                checked += 1;
                if !p.has_edge(u, v) {
                    return fail(
                        "cover part is not a clique",
                        checked,
                        cx(g, vec![u, v], "same clique", "not adjacent"),
                    );
                }
            }
        }
    }
    if seen.count_ones(..) != g.order() {
        let x = (0..g.order())
            .find(|&x| !seen.contains(x))
            .expect("uncovered element");
        return fail(
            "cover misses elements",
            checked,
            cx(g, vec![x], "covered", "uncovered"),
        );
    }
    let set = match cp.structural_independent_set() {
        Ok(s) => s,
        Err(e) => return e.into(),
    };
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            checked += 1;
            if p.has_edge(u, v) {
                return fail(
                    "independent set has an edge",
                    checked,
                    cx(g, vec![u, v], "independent", "adjacent"),
                );
            }
        }
    }
    if cover.len() != r || set.len() != r {
        return fail(
            format!(
                "cover has {} parts, independent set {} elements",
                cover.len(),
                set.len()
            ),
            checked,
            cx(g, set, format!("both of size {r}"), "sizes differ"),
        );
    }
    pass(
        format!("clique cover and independent set of size {r}"),
        checked,
    )
}

fn crt_lemma(cp: &CoprimeProduct, ctx: &CheckContext) -> Verdict {
    let g = cp.group();
    let n = g.order();
    let mut checked = 0u64;
    let mut faulted = false;
    let mut members = FixedBitSet::with_capacity(n);
    for x in 0..n {
        members.clear();
        for e in g.powers(Element(x)) {
            members.insert(e.index());
        }
        for y in 0..n {
            checked += 1;
            let mut witness = cp.crt_joint_power(Element(x), Element(y));
            if ctx.inject_fault && !faulted && members.contains(y) {
                faulted = true;
                witness = None;
            }
            let actual = members.contains(y);
            let bad = match witness {
                None => actual,
                Some(c) => !actual || g.pow(Element(x), c) != Element(y),
            };
            if bad {
                let claim = match witness {
                    None => "y not in <x>".to_string(),
                    Some(c) => format!("y = x^{c}"),
                };
                let truth = if actual { "y in <x>" } else { "y not in <x>" };
                return fail(
                    "joint power disagrees with <x>",
                    checked,
                    cx(g, vec![x, y], claim, truth),
                );
            }
        }
    }
    pass(format!("{checked} ordered pairs"), checked)
}

fn ham(spec: &GroupSpec, ctx: &CheckContext) -> Verdict {
    let g = spec.build();
    let predicted = match ham_connectivity(&g) {
        Ok(b) => b ^ ctx.inject_fault,
        Err(e) => return e.into(),
    };
    let proper = proper_power_graph(&g);
    let actual = is_connected(&proper);
    connectivity_verdict(&g, &proper, predicted, actual, "reduced prime-order graph")
}

fn connectivity_verdict(
    g: &FiniteGroup,
    proper: &Graph,
    predicted: bool,
    actual: bool,
    what: &str,
) -> Verdict {
    let word = |b: bool| {
        if b {
            "P*(G) connected"
        } else {
            "P*(G) disconnected"
        }
    };
    if predicted == actual {
        return pass(format!("{what}: {}", word(actual)), 1);
    }
    // one element from each of two components, or a whole component
    let comps = connected_components(proper);
    let elements = if comps.len() >= 2 {
        vec![proper.origin(comps[0][0]), proper.origin(comps[1][0])]
    } else {
        comps
            .first()
            .map(|c| c.iter().take(2).map(|&v| proper.origin(v)).collect())
            .unwrap_or_default()
    };
    fail(
        format!("{what} disagrees with BFS"),
        1,
        cx(g, elements, word(predicted), word(actual)),
    )
}

fn pgroup(spec: &GroupSpec) -> Verdict {
    let g = spec.build();
    let criterion = match pgroup_connectivity_criterion(&g) {
        Ok(b) => b,
        Err(e) => return e.into(),
    };
    if g.order() == 1 {
        return Verdict::Skip("trivial group".into());
    }
    let proper = proper_power_graph(&g);
    let actual = is_connected(&proper);
    let classification = is_cyclic_or_generalized_quaternion(&g);
    if criterion != classification {
        let p = g.p_group_prime().expect("p-group");
        let elements = g
            .subgroups_of_prime_order(p)
            .iter()
            .map(|s| s[1].index())
            .collect();
        return fail(
            "criterion disagrees with the cyclic-or-quaternion classification",
            2,
            cx(
                &g,
                elements,
                format!("one subgroup of order p: {criterion}"),
                format!("cyclic or generalized quaternion: {classification}"),
            ),
        );
    }
    match connectivity_verdict(&g, &proper, criterion, actual, "unique subgroup of order p") {
        Verdict::Pass { detail, .. } => pass(detail, 2),
        v => v,
    }
}

fn center(spec: &GroupSpec) -> Verdict {
    let g = spec.build();
    match center_spectrum_sufficiency(&g) {
        CenterVerdict::NoClaim => pass("center involves fewer than two primes: no claim", 0),
        CenterVerdict::MustBeConnected => {
            let proper = proper_power_graph(&g);
            let actual = is_connected(&proper);
            connectivity_verdict(&g, &proper, true, actual, "center involves two primes")
        }
    }
}

fn perfection(spec: &GroupSpec, ctx: &CheckContext) -> Verdict {
    let g = spec.build();
    let p = power_graph(&g);
    let limits = &ctx.limits;
    if p.vertex_count() > limits.chi_cap {
        return SolverError::TooLarge {
            solver: "perfection-proxy",
            vertices: p.vertex_count(),
            cap: limits.chi_cap,
        }
        .into();
    }
    let len = limits.hole_length;
    if let Some(hole) = find_odd_hole(&p, len) {
        return fail(
            "odd hole",
            1,
            cx(
                &g,
                hole,
                format!("no odd hole of length <= {len}"),
                "induced odd cycle",
            ),
        );
    }
    if let Some(anti) = find_odd_antihole(&p, len) {
        return fail(
            "odd antihole",
            2,
            cx(
                &g,
                anti,
                format!("no odd antihole of length <= {len}"),
                "induced odd anticycle",
            ),
        );
    }
    let solved = (|| -> Result<_, SolverError> {
        Ok((
            max_independent_set(&p, limits.mis_cap)?,
            min_clique_cover(&p, limits.chi_cap)?,
            max_clique(&p, limits.mis_cap)?,
            optimal_coloring(&p, limits.chi_cap)?,
        ))
    })();
    let (mis, cover, clique, coloring) = match solved {
        Ok(t) => t,
        Err(e) => return e.into(),
    };
    let chi = coloring.iter().max().map_or(0, |&c| c + 1);
    if mis.len() != cover.len() {
        return fail(
            format!("alpha = {}, theta = {}", mis.len(), cover.len()),
            4,
            cx(&g, mis, "alpha = theta", format!("theta = {}", cover.len())),
        );
    }
    if clique.len() != chi {
        return fail(
            format!("omega = {}, chi = {chi}", clique.len()),
            4,
            cx(&g, clique, "omega = chi", format!("chi = {chi}")),
        );
    }
    pass(
        format!(
            "no odd hole or antihole up to length {len}; alpha = theta = {}, omega = chi = {chi}",
            mis.len()
        ),
        4,
    )
}

fn alpha_theta(spec: &GroupSpec, ctx: &CheckContext) -> Verdict {
    let g = spec.build();
    let p = power_graph(&g);
    let mis = match max_independent_set(&p, ctx.limits.mis_cap) {
        Ok(s) => s,
        Err(e) => return e.into(),
    };
    let cover = match min_clique_cover(&p, ctx.limits.chi_cap) {
        Ok(c) => c,
        Err(e) => return e.into(),
    };
    if !p.is_independent(&mis) || cover.iter().any(|part| !p.is_clique(part)) {
        return fail(
            "solver certificate invalid",
            2,
            cx(&g, mis, "valid certificates", "invalid"),
        );
    }
    if mis.len() != cover.len() {
        return fail(
            format!("alpha = {}, theta = {}", mis.len(), cover.len()),
            2,
            cx(&g, mis, "alpha = theta", format!("theta = {}", cover.len())),
        );
    }
    pass(format!("alpha = theta = {}", mis.len()), 2)
}

fn chains(spec: &GroupSpec) -> Verdict {
    let [atom] = spec.atoms() else {
        return Verdict::Skip("truncation chains take a single C(p^k) or Q(2^k)".into());
    };
    let (family, depth) = match atom.family {
        Family::Cyclic => match arith::prime_power(atom.param) {
            Some((p, k)) => (ChainFamily::Prufer(p), k),
            None => return Verdict::Skip("C(n) with n not a prime power".into()),
        },
        Family::Quaternion => (ChainFamily::Quaternion, atom.param.trailing_zeros()),
        _ => return Verdict::Skip("truncation chains take a single C(p^k) or Q(2^k)".into()),
    };
    let report = match truncation_chain_report(family, depth) {
        Ok(r) => r,
        Err(e) => return e.into(),
    };
    let checked = report.levels.len() as u64;
    if let Some(level) = report.levels.iter().find(|l| !l.holds) {
        let g = level_group(family, level.order);
        let claim = match family {
            ChainFamily::Prufer(_) => "P(G) complete and P*(G) connected",
            ChainFamily::Quaternion => "dominating set {1, involution} and P*(G) connected",
        };
        let actual = format!(
            "complete = {}, P*(G) connected = {}, {} dominating vertices",
            level.complete,
            level.proper_connected,
            level.dominating.len()
        );
        return fail(
            format!("level {} fails", level.group),
            checked,
            cx(&g, level.dominating.clone(), claim, actual),
        );
    }
    let names: Vec<&str> = report.levels.iter().map(|l| l.group.as_str()).collect();
    pass(format!("levels {} all hold", names.join(", ")), checked)
}

fn level_group(family: ChainFamily, order: usize) -> FiniteGroup {
    match family {
        ChainFamily::Prufer(_) => FiniteGroup::cyclic(order as u64),
        ChainFamily::Quaternion => FiniteGroup::generalized_quaternion(order as u64),
    }
    .expect("chain level")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::parse_spec;

    fn run(check: CheckId, s: &str) -> VerificationOutcome {
        run_check(check, &parse_spec(s).unwrap(), &CheckContext::default())
    }

    #[test]
    fn names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
            assert_eq!(serde_json::to_value(c).unwrap(), c.name());
        }
        assert!("nope".parse::<CheckId>().is_err());
    }

    #[test]
    fn examples_pass() {
        assert_eq!(run(CheckId::Dominating, "Q(16)").status, Status::Pass);
        let alpha = run(CheckId::AlphaFormula, "C(9)xC(2)");
        assert_eq!(alpha.status, Status::Pass, "{}", alpha.detail);
        assert!(alpha.detail.starts_with("alpha = 2"));
        assert_eq!(run(CheckId::PgroupCriterion, "C(6)").status, Status::Skip);
        assert_eq!(run(CheckId::DeletedStructure, "C(15)").status, Status::Pass);
        assert_eq!(
            run(CheckId::StructuralCover, "C(27)xC(2)xC(2)").status,
            Status::Pass
        );
        assert_eq!(run(CheckId::CrtLemma, "C(25)xS(3)").status, Status::Pass);
        assert_eq!(
            run(CheckId::AdjacencyRule, "C(8)xC(3)").status,
            Status::Pass
        );
        assert_eq!(run(CheckId::TruncationChains, "Q(32)").status, Status::Pass);
        assert_eq!(run(CheckId::PerfectionProxy, "D(6)").status, Status::Pass);
        assert_eq!(run(CheckId::AlphaEqualsTheta, "S(4)").status, Status::Pass);
        assert_eq!(
            run(CheckId::HamConnectivity, "C(2)xC(2)").status,
            Status::Pass
        );
        assert_eq!(
            run(CheckId::CenterSpectrum, "C(6)xS(3)").status,
            Status::Pass
        );
        assert_eq!(run_window(100).status, Status::Pass);
    }

    #[test]
    fn inapplicable_entries_skip() {
        assert_eq!(
            run(CheckId::AdjacencyRule, "C(9)xS(3)").status,
            Status::Skip
        );
        assert_eq!(run(CheckId::DeletedStructure, "S(3)").status, Status::Skip);
        assert_eq!(run(CheckId::TruncationChains, "C(12)").status, Status::Skip);
        assert_eq!(run(CheckId::HamConnectivity, "C(1)").status, Status::Skip);
    }

    #[test]
    fn injected_faults_fail_with_counterexamples() {
        let ctx = CheckContext {
            inject_fault: true,
            ..CheckContext::default()
        };
        for (check, s) in [
            (CheckId::Dominating, "C(8)"),
            (CheckId::AlphaFormula, "C(3)xC(2)"),
            (CheckId::AdjacencyRule, "C(3)xC(2)"),
            (CheckId::CrtLemma, "C(3)xC(2)"),
            (CheckId::HamConnectivity, "S(3)"),
        ] {
            let out = run_check(check, &parse_spec(s).unwrap(), &ctx);
            assert_eq!(out.status, Status::Fail, "{check}");
            let c = out.counterexample.unwrap();
            assert!(!c.elements.is_empty());
            assert_eq!(c.labels.len(), c.elements.len());
        }
    }

    #[test]
    fn compare_mode_drops_wall_time() {
        let mut out = run(CheckId::Dominating, "C(6)");
        assert!(serde_json::to_string(&out).unwrap().contains("wall_ms"));
        out.wall_ms = None;
        let json = serde_json::to_string(&out).unwrap();
        assert!(!json.contains("wall_ms"));
        assert!(json.starts_with(r#"{"check":"dominating","spec":"C(6)","status":"pass""#));
    }
}
