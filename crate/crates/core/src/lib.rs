//! Power graphs of finite groups.
//!
//! Groups are explicit Cayley tables ([`FiniteGroup`]); from them we build the
//! directed, undirected and proper power graphs ([`power_graph`]), compute
//! exact graph invariants ([`invariants`]) and evaluate structural
//! predictions about those graphs ([`theorems`]) so they can be compared with
//! brute force.

pub mod arith;
pub mod graph;
pub mod group;
pub mod invariants;
pub mod power_graph;
pub mod theorems;

pub use graph::Graph;
pub use group::{Element, FiniteGroup, GroupError};
pub use invariants::{Diameter, InvariantReport, SolverError, SolverLimits};
pub use power_graph::{CyclicClassPoset, PowerDigraph, PowerGraph};
pub use theorems::{CoprimeProduct, DominatingCase, DominatingClassification, TheoremError};
