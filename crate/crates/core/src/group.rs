//! Finite groups materialized as full Cayley tables.
//!
//! Every element is an index `0..order`. The multiplication table is stored
//! row-major, so `table[i * order + j]` is the index of `g_i * g_j`. Element
//! orders are computed once at construction since nearly every downstream
//! check needs them.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;

/// Largest order for which [`FiniteGroup::validate`] checks associativity exhaustively.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("{family}({param}) is not a valid group parameter: {reason}")]
    BadParameter {
        family: char,
        param: u64,
        reason: &'static str,
    },
    #[error("table is not a latin square (row or column {0} repeats an entry)")]
    NotLatin(usize),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("table shape does not match order {0}")]
    BadShape(usize),
    #[error("negative exponent {0}; invert the element first")]
    NegativeExponent(i64),
    #[error("element index {index} out of range for group of order {order}")]
    OutOfRange { index: usize, order: usize },
}

/// An element of a particular [`FiniteGroup`], identified by its table index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element(pub usize);

impl Element {
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for Element {
    fn from(i: usize) -> Self {
        Element(i)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<usize>,
    orders: Vec<usize>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Builds a group from an explicit table, checking every group axiom.
    pub fn from_table(
        name: impl Into<String>,
        rows: &[Vec<usize>],
        labels: Vec<String>,
    ) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 || labels.len() != order || rows.iter().any(|r| r.len() != order) {
            return Err(GroupError::BadShape(order));
        }
        let mut table = Vec::with_capacity(order * order);
        for row in rows {
            for &k in row {
                if k >= order {
                    return Err(GroupError::OutOfRange { index: k, order });
                }
                table.push(k as u32);
            }
        }
        let identity = (0..order)
            .find(|&e| {
                (0..order).all(|j| {
                    table[e * order + j] as usize == j && table[j * order + e] as usize == j
                })
            })
            .ok_or(GroupError::NoIdentity)?;
        check_latin(order, &table)?;
        let group = Self::assemble(name.into(), order, table, identity, labels);
        group.validate()?;
        Ok(group)
    }

    /// Trusted constructor used by the built-in families: `mul` must define a group
    /// with identity at index `identity`.
    fn from_fn(
        name: String,
        order: usize,
        identity: usize,
        labels: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                table.push(mul(i, j) as u32);
            }
        }
        Self::assemble(name, order, table, identity, labels)
    }

    fn assemble(
        name: String,
        order: usize,
        table: Vec<u32>,
        identity: usize,
        labels: Vec<String>,
    ) -> Self {
        let mut inverses = vec![usize::MAX; order];
        for i in 0..order {
            let row = &table[i * order..(i + 1) * order];
            inverses[i] = row
                .iter()
                .position(|&k| k as usize == identity)
                .unwrap_or(usize::MAX);
        }
        let mut orders = vec![0; order];
        for x in 0..order {
            let mut k = 1;
            let mut y = x;
            while y != identity && k <= order {
                y = table[y * order + x] as usize;
                k += 1;
            }
            orders[x] = k;
        }
        FiniteGroup {
            name,
            order,
            table,
            identity,
            inverses,
            orders,
            labels,
        }
    }

    /// Cyclic group `C_n`: element `i` is `a^i`, so index 1 generates.
    pub fn cyclic(n: u64) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::BadParameter {
                family: 'C',
                param: n,
                reason: "order must be positive",
            });
        }
        let n = n as usize;
        let labels = (0..n).map(|i| power_label("a", i)).collect();
        Ok(Self::from_fn(format!("C({n})"), n, 0, labels, |i, j| {
            (i + j) % n
        }))
    }

    /// Dihedral group of order `2n`, `<r, s | r^n = s^2 = 1, srs = r^-1>`.
    ///
    /// Index `i + n*j` is `r^i s^j`.
    pub fn dihedral(n: u64) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::BadParameter {
                family: 'D',
                param: n,
                reason: "parameter must be positive",
            });
        }
        let n = n as usize;
        let labels = (0..2 * n)
            .map(|k| {
                let (i, j) = (k % n, k / n);
                match (i, j) {
                    (_, 0) => power_label("r", i),
                    (0, _) => "s".to_string(),
                    _ => format!("{}s", power_label("r", i)),
                }
            })
            .collect();
        Ok(Self::from_fn(
            format!("D({n})"),
            2 * n,
            0,
            labels,
            |x, y| {
                let (i, j) = (x % n, x / n);
                let (k, l) = (y % n, y / n);
                let rot = if j == 0 { i + k } else { i + n - k };
                rot % n + n * ((j + l) % 2)
            },
        ))
    }

    /// Generalized quaternion group of order `m = 2^k`, `k >= 3`.
    ///
    /// Elements are `a^i b^j` with `0 <= i < m/2`, stored at index `i + (m/2) j`,
    /// with `b^2 = a^{m/4}` and `b a^i = a^{-i} b`. The unique involution is `a^{m/4}`.
    pub fn generalized_quaternion(m: u64) -> Result<Self, GroupError> {
        if m < 8 || !m.is_power_of_two() {
            return Err(GroupError::BadParameter {
                family: 'Q',
                param: m,
                reason: "order must be a power of 2 and at least 8",
            });
        }
        let half = (m / 2) as usize;
        let quarter = half / 2;
        let labels = (0..2 * half)
            .map(|x| {
                let (i, j) = (x % half, x / half);
                match (i, j) {
                    (_, 0) => power_label("a", i),
                    (0, _) => "b".to_string(),
                    _ => format!("{}b", power_label("a", i)),
                }
            })
            .collect();
        Ok(Self::from_fn(
            format!("Q({m})"),
            m as usize,
            0,
            labels,
            |x, y| {
                let (i, j) = (x % half, x / half);
                let (k, l) = (y % half, y / half);
                let mut rot = if j == 0 { i + k } else { i + half - k };
                if j + l == 2 {
                    rot += quarter;
                }
                rot % half + half * ((j + l) % 2)
            },
        ))
    }

    /// Symmetric group on `n <= 6` points; permutations in lexicographic order,
    /// so index 0 is the identity. The product `g * h` applies `h` first.
    pub fn symmetric(n: u64) -> Result<Self, GroupError> {
        if n == 0 || n > 6 {
            return Err(GroupError::BadParameter {
                family: 'S',
                param: n,
                reason: "degree must be between 1 and 6",
            });
        }
        let perms = permutations(n as usize);
        let index: std::collections::HashMap<&[u8], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        let order = perms.len();
        Ok(Self::from_fn(
            format!("S({n})"),
            order,
            0,
            labels,
            |a, b| {
                let (g, h) = (&perms[a], &perms[b]);
                let composed: Vec<u8> = h.iter().map(|&x| g[x as usize]).collect();
                index[composed.as_slice()]
            },
        ))
    }

    /// Componentwise product; the pair `(i, j)` lives at index `i * |H| + j`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let m = h.order;
        let order = g.order * m;
        let labels = (0..order)
            .map(|x| format!("({},{})", g.labels[x / m], h.labels[x % m]))
            .collect();
        let identity = g.identity * m + h.identity;
        Self::from_fn(
            format!("{}x{}", g.name, h.name),
            order,
            identity,
            labels,
            |x, y| g.mul_index(x / m, y / m) * m + h.mul_index(x % m, y % m),
        )
    }

    /// Checks the latin-square, identity, inverse and (for small orders) associativity laws.
    pub fn validate(&self) -> Result<(), GroupError> {
        check_latin(self.order, &self.table)?;
        let n = self.order;
        for j in 0..n {
            if self.mul_index(self.identity, j) != j || self.mul_index(j, self.identity) != j {
                return Err(GroupError::NoIdentity);
            }
        }
        for i in 0..n {
            if self.inverses[i] >= n || self.mul_index(i, self.inverses[i]) != self.identity {
                return Err(GroupError::NoIdentity);
            }
        }
        if n <= ASSOCIATIVITY_CHECK_LIMIT {
            self.check_associative()?;
        }
        Ok(())
    }

    /// Exhaustive associativity check, `O(n^3)`.
    pub fn check_associative(&self) -> Result<(), GroupError> {
        let n = self.order;
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul_index(i, j);
                for k in 0..n {
                    if self.mul_index(ij, k) != self.mul_index(i, self.mul_index(j, k)) {
                        return Err(GroupError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        Element(self.identity)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order).map(Element)
    }

    pub fn label(&self, x: Element) -> &str {
        &self.labels[x.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub(crate) fn mul_index(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        Element(self.mul_index(x.0, y.0))
    }

    pub fn inverse(&self, x: Element) -> Element {
        Element(self.inverses[x.0])
    }

    #[inline]
    pub fn element_order(&self, x: Element) -> usize {
        self.orders[x.0]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.orders
    }

    /// `x^k` by repeated squaring.
    pub fn pow(&self, x: Element, k: u64) -> Element {
        let mut result = self.identity;
        let mut base = x.0;
        // Reducing mod o(x) keeps the loop short for huge exponents.
        let mut k = k % self.orders[x.0] as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul_index(result, base);
            }
            base = self.mul_index(base, base);
            k >>= 1;
        }
        Element(result)
    }

    /// Checked power for signed exponents; negative exponents are rejected.
    pub fn power(&self, x: Element, k: i64) -> Result<Element, GroupError> {
        if k < 0 {
            return Err(GroupError::NegativeExponent(k));
        }
        if x.0 >= self.order {
            return Err(GroupError::OutOfRange {
                index: x.0,
                order: self.order,
            });
        }
        Ok(self.pow(x, k as u64))
    }

    /// `x^0, x^1, ..., x^{o(x)-1}` in exponent order.
    pub fn powers(&self, x: Element) -> Vec<Element> {
        let mut out = Vec::with_capacity(self.orders[x.0]);
        let mut y = self.identity;
        for _ in 0..self.orders[x.0] {
            out.push(Element(y));
            y = self.mul_index(y, x.0);
        }
        out
    }

    /// The cyclic subgroup `<x>` as a sorted set.
    pub fn cyclic_subgroup(&self, x: Element) -> Vec<Element> {
        let mut s = self.powers(x);
        s.sort_unstable();
        s
    }

    pub fn commutes(&self, x: Element, y: Element) -> bool {
        self.mul_index(x.0, y.0) == self.mul_index(y.0, x.0)
    }

    pub fn center(&self) -> Vec<Element> {
        self.elements()
            .filter(|&z| self.elements().all(|g| self.commutes(z, g)))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.commutes(Element(i), Element(j))))
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.contains(&self.order)
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1, |acc, &o| arith::lcm(acc, o as u64))
    }

    /// Primes dividing the order of some element.
    pub fn prime_spectrum(&self) -> BTreeSet<u64> {
        arith::prime_divisors(self.exponent()).into_iter().collect()
    }

    /// The prime `p` when the group is a nontrivial `p`-group.
    pub fn p_group_prime(&self) -> Option<u64> {
        arith::prime_power(self.order as u64).map(|(p, _)| p)
    }

    pub fn involutions(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.orders[x.0] == 2).collect()
    }

    /// Distinct cyclic subgroups, each as a sorted element list, ordered by
    /// their smallest generator index.
    pub fn cyclic_subgroups(&self) -> Vec<Vec<Element>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in self.elements() {
            let s = self.cyclic_subgroup(x);
            if seen.insert(s.clone()) {
                out.push(s);
            }
        }
        out
    }

    /// Number of cyclic subgroups, the trivial subgroup included.
    pub fn count_cyclic_subgroups(&self) -> usize {
        self.cyclic_subgroups().len()
    }

    /// Distinct subgroups `<x>` with `o(x) = p`.
    pub fn subgroups_of_prime_order(&self, p: u64) -> Vec<Vec<Element>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for x in self.elements().filter(|&x| self.orders[x.0] as u64 == p) {
            let s = self.cyclic_subgroup(x);
            if seen.insert(s.clone()) {
                out.push(s);
            }
        }
        out
    }

    /// Nonabelian 2-group with a unique involution.
    pub fn is_generalized_quaternion(&self) -> bool {
        self.order >= 8
            && self.order.is_power_of_two()
            && self.involutions().len() == 1
            && !self.is_abelian()
    }
}

fn check_latin(order: usize, table: &[u32]) -> Result<(), GroupError> {
    let mut seen = vec![usize::MAX; order];
    for i in 0..order {
        for j in 0..order {
            let k = table[i * order + j] as usize;
            if seen[k] == i {
                return Err(GroupError::NotLatin(i));
            }
            seen[k] = i;
        }
    }
    seen.fill(usize::MAX);
    for j in 0..order {
        for i in 0..order {
            let k = table[i * order + j] as usize;
            if seen[k] == j {
                return Err(GroupError::NotLatin(j));
            }
            seen[k] = j;
        }
    }
    Ok(())
}

fn power_label(base: &str, i: usize) -> String {
    match i {
        0 => "1".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{i}"),
    }
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut current: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![current.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "1".to_string()
    } else {
        out
    }
}
