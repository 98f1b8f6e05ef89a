//! Constructive placement policies with provable confusion guarantees.
//!
//! Every policy emits an ID strategy that drives the process to completion.
//! Ties are broken toward the smallest vertex id.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::engine::{incoming, step, Label, LabelState, Placement, Strategy};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolicyKind {
    TreeFrontier,
    CircuitSpacing,
    MaxDegreeFirst,
    RescuePriority,
    BalancedPartitionFirst,
}

impl PolicyKind {
    pub const ALL: [PolicyKind; 5] = [
        PolicyKind::TreeFrontier,
        PolicyKind::CircuitSpacing,
        PolicyKind::MaxDegreeFirst,
        PolicyKind::RescuePriority,
        PolicyKind::BalancedPartitionFirst,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolicyKind::TreeFrontier => "tree-frontier",
            PolicyKind::CircuitSpacing => "circuit-spacing",
            PolicyKind::MaxDegreeFirst => "max-degree-first",
            PolicyKind::RescuePriority => "rescue-priority",
            PolicyKind::BalancedPartitionFirst => "balanced-partition-first",
        }
    }

    pub fn build(self, g: &SignedGraph) -> Result<Strategy> {
        match self {
            PolicyKind::TreeFrontier => tree_frontier(g),
            PolicyKind::CircuitSpacing => circuit_strategy(g),
            PolicyKind::MaxDegreeFirst => max_degree_first(g),
            PolicyKind::RescuePriority => rescue_priority(g),
            PolicyKind::BalancedPartitionFirst => balanced_partition_first(g),
        }
    }

    /// The confusion guarantee this policy carries on `g`, if its
    /// hypotheses hold there.
    pub fn guarantee(self, g: &SignedGraph) -> Option<Guarantee> {
        let n = g.n() as i64;
        let delta = g.max_degree() as i64;
        match self {
            PolicyKind::TreeFrontier => g.is_tree().then(|| Guarantee::exactly(0)),
            PolicyKind::CircuitSpacing => g.is_circuit().then(|| {
                Guarantee::exactly(i64::from(g.n() == 5 && g.is_all_negative()))
            }),
            PolicyKind::MaxDegreeFirst => {
                g.is_connected().then(|| Guarantee::at_most((n - 2 - delta).max(0).into()))
            }
            PolicyKind::RescuePriority => (g.is_connected() && delta >= 3)
                .then(|| Guarantee::at_most((Ratio::from(1) - Ratio::new(2, delta)) * n)),
            PolicyKind::BalancedPartitionFirst => {
                (n >= 4 && g.is_connected() && g.is_balanced().is_some())
                    .then(|| Guarantee::at_most(Ratio::new(n, 2) - 2))
            }
        }
    }
}

impl fmt::Display for PolicyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolicyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PolicyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown policy `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Exactly,
    AtMost,
}

/// A bound on the confused count, kept as an exact rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guarantee {
    pub relation: Relation,
    pub value: Ratio<i64>,
}

impl Guarantee {
    pub fn exactly(v: i64) -> Self {
        Self { relation: Relation::Exactly, value: v.into() }
    }

    pub fn at_most(value: Ratio<i64>) -> Self {
        Self { relation: Relation::AtMost, value }
    }

    pub fn holds(&self, confused: usize) -> bool {
        let c = Ratio::from(confused as i64);
        match self.relation {
            Relation::Exactly => c == self.value,
            Relation::AtMost => c <= self.value,
        }
    }
}

impl fmt::Display for Guarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.relation {
            Relation::Exactly => "=",
            Relation::AtMost => "<=",
        };
        write!(f, "confused {op} {}", self.value)
    }
}

/// Runs the process from scratch, asking `choose` for the next p-vertex
/// until no uninformed vertex remains.
fn drive<F>(g: &SignedGraph, mut choose: F) -> Strategy
where
    F: FnMut(&LabelState) -> Vertex,
{
    let mut state = LabelState::all_zero(g.n());
    let mut chosen = Vec::new();
    while !state.is_complete() {
        let v = choose(&state);
        state = step(g, &state, Placement::a(v)).expect("policy picks an uninformed vertex");
        chosen.push(v);
    }
    Strategy::id(chosen)
}

fn smallest_zero(state: &LabelState) -> Vertex {
    (0..state.n())
        .find(|&v| state.get(v) == Label::Zero)
        .expect("called only while uninformed vertices remain")
}

fn has_informed_neighbor(g: &SignedGraph, state: &LabelState, v: Vertex) -> bool {
    g.neighbors(v).iter().any(|&(z, _)| state.get(z).is_informed())
}

fn require_connected(g: &SignedGraph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::precondition("graph must be connected"))
    }
}

/// Grow the informed set along the frontier. Zero confusion on trees.
pub fn tree_frontier(g: &SignedGraph) -> Result<Strategy> {
    if !g.is_tree() {
        return Err(Error::precondition("tree_frontier requires a tree"));
    }
    Ok(drive(g, |state| {
        (0..g.n())
            .find(|&v| state.get(v) == Label::Zero && has_informed_neighbor(g, state, v))
            .unwrap_or_else(|| smallest_zero(state))
    }))
}

/// Cyclic vertex order starting at 0 and heading to its smaller neighbour.
fn circuit_order(g: &SignedGraph) -> Vec<Vertex> {
    let mut order = vec![0];
    let mut prev = 0;
    let mut cur = g.neighbors(0)[0].0;
    while cur != 0 {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .map(|&(w, _)| w)
            .find(|&w| w != prev)
            .expect("2-regular");
        prev = cur;
        cur = next;
    }
    order
}

/// Spaced placements around a circuit `u_1 .. u_k` with `k = 3t + r`.
pub fn circuit_strategy(g: &SignedGraph) -> Result<Strategy> {
    if !g.is_circuit() {
        return Err(Error::precondition("circuit_strategy requires a circuit C_k, k >= 3"));
    }
    let u = circuit_order(g);
    let k = u.len();
    let (t, r) = (k / 3, k % 3);
    // indices are 0-based: u[i] is the paper-style u_{i+1}
    let picks: Vec<usize> = if k == 5 {
        if g.is_all_negative() {
            vec![0, 2]
        } else {
            let sign_at = |i: usize| g.sign(u[i % k], u[(i + 1) % k]).expect("circuit edge");
            let (start, dir) = (0..k)
                .flat_map(|a| [(a, 1usize), (a, k - 1)])
                .find(|&(a, d)| {
                    let steps = [a, a + d, a + 2 * d].map(|i| i % k);
                    let edge = |i: usize| if d == 1 { sign_at(i) } else { sign_at(i + k - 1) };
                    steps.iter().fold(Sign::Positive, |acc, &i| acc * edge(i)) == Sign::Positive
                })
                .expect("a C_5 that is not all-negative has a positive 3-path");
            vec![start, (start + 3 * dir) % k]
        }
    } else {
        match r {
            0 => (1..=t).map(|i| 2 * i - 2).collect(),
            1 => (1..=t + 1).map(|i| 2 * i - 2).collect(),
            _ => [0, 4].into_iter().chain((3..=t).map(|i| 2 * i)).collect(),
        }
    };
    Ok(Strategy::id(picks.into_iter().map(|i| u[i])))
}

/// Start at a maximum-degree vertex; if exactly one vertex is left out,
/// place it next.
pub fn max_degree_first(g: &SignedGraph) -> Result<Strategy> {
    require_connected(g)?;
    if g.n() == 0 {
        return Ok(Strategy::id([]));
    }
    let delta = g.max_degree();
    let first = (0..g.n()).find(|&v| g.degree(v) == delta).expect("n > 0");
    let mut step_no = 0;
    Ok(drive(g, |state| {
        step_no += 1;
        match step_no {
            1 => first,
            2 if delta + 2 == g.n() => (0..g.n())
                .find(|&v| v != first && g.sign(first, v).is_none())
                .expect("exactly one non-neighbour"),
            _ => smallest_zero(state),
        }
    }))
}

/// Priority: vertices about to be confused, then consistent frontier
/// vertices, then any uninformed vertex.
pub fn rescue_priority(g: &SignedGraph) -> Result<Strategy> {
    require_connected(g)?;
    Ok(rescue_priority_any(g))
}

/// The rescue-priority rule without the connectivity precondition.
pub(crate) fn rescue_priority_any(g: &SignedGraph) -> Strategy {
    drive(g, |state| {
        let mut consistent = None;
        for v in (0..g.n()).filter(|&v| state.get(v) == Label::Zero) {
            match incoming(g, state, v) {
                Label::C => return v,
                Label::A | Label::NegA if consistent.is_none() => consistent = Some(v),
                _ => {}
            }
        }
        consistent.unwrap_or_else(|| smallest_zero(state))
    })
}

/// Exhaust the larger Harary side first, starting next to the other side.
pub fn balanced_partition_first(g: &SignedGraph) -> Result<Strategy> {
    require_connected(g)?;
    let partition = g
        .is_balanced()
        .ok_or_else(|| Error::precondition("balanced_partition_first requires a balanced graph"))?;
    let (u1, u2) = if partition.u2.len() > partition.u1.len() {
        (partition.u2, partition.u1)
    } else {
        (partition.u1, partition.u2)
    };
    if u2.is_empty() {
        return Ok(drive(g, smallest_zero));
    }
    let first = u1
        .iter()
        .copied()
        .find(|&v| g.neighbors(v).iter().any(|(w, _)| u2.contains(w)))
        .expect("connected graph has a cut edge between the sides");
    Ok(drive(g, |state| {
        if state.count(Label::Zero) == g.n() {
            return first;
        }
        first_zero_in(state, &u1).unwrap_or_else(|| smallest_zero(state))
    }))
}

fn first_zero_in(state: &LabelState, set: &BTreeSet<Vertex>) -> Option<Vertex> {
    set.iter().copied().find(|&v| state.get(v) == Label::Zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::run;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn cycle(signs: &[Sign]) -> SignedGraph {
        let k = signs.len();
        SignedGraph::new(k, (0..k).map(|i| (i, (i + 1) % k, signs[i]))).unwrap()
    }

    fn confused(g: &SignedGraph, s: &Strategy) -> usize {
        let t = run(g, s).unwrap();
        assert!(t.is_complete());
        t.confused_count()
    }

    #[test]
    fn tree_frontier_on_star() {
        let star = SignedGraph::new(6, (1..6).map(|v| (0, v, if v % 2 == 0 { N } else { P })))
            .unwrap();
        assert_eq!(confused(&star, &tree_frontier(&star).unwrap()), 0);
        let single = SignedGraph::edgeless(1);
        assert_eq!(tree_frontier(&single).unwrap(), Strategy::id([0]));
        assert!(tree_frontier(&cycle(&[P; 3])).is_err());
    }

    #[test]
    fn circuit_cases() {
        assert_eq!(confused(&cycle(&[P; 6]), &circuit_strategy(&cycle(&[P; 6])).unwrap()), 0);
        let c5 = cycle(&[N; 5]);
        assert_eq!(confused(&c5, &circuit_strategy(&c5).unwrap()), 1);
        let one_pos = cycle(&[N, N, P, N, N]);
        assert_eq!(confused(&one_pos, &circuit_strategy(&one_pos).unwrap()), 0);
        let path = SignedGraph::all_positive(3, [(0, 1), (1, 2)]).unwrap();
        assert!(circuit_strategy(&path).is_err());
    }

    #[test]
    fn every_signed_circuit_up_to_twelve() {
        for k in 3..=12usize {
            for mask in 0u32..(1 << k) {
                let signs: Vec<Sign> =
                    (0..k).map(|i| if mask >> i & 1 == 1 { N } else { P }).collect();
                let g = cycle(&signs);
                let c = confused(&g, &circuit_strategy(&g).unwrap());
                let expected = usize::from(k == 5 && mask == 0b11111);
                assert_eq!(c, expected, "k={k} mask={mask:b}");
            }
        }
    }

    #[test]
    fn max_degree_first_complete_graph() {
        let pairs: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let k5 = SignedGraph::new(5, pairs.iter().map(|&(u, v)| (u, v, if u + v == 4 { N } else { P })))
            .unwrap();
        let s = max_degree_first(&k5).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(confused(&k5, &s), 0);
        let p6 = SignedGraph::all_positive(6, (0..5).map(|i| (i, i + 1))).unwrap();
        assert_eq!(confused(&p6, &max_degree_first(&p6).unwrap()), 0);
        let split = SignedGraph::edgeless(2);
        assert!(max_degree_first(&split).is_err());
    }

    #[test]
    fn rescue_priority_on_tree() {
        let t = SignedGraph::new(5, [(0, 1, N), (1, 2, P), (1, 3, N), (3, 4, N)]).unwrap();
        assert_eq!(confused(&t, &rescue_priority(&t).unwrap()), 0);
    }

    #[test]
    fn balanced_partition_cases() {
        // balanced C_4 with two negative edges forming a cut
        let c4 = SignedGraph::new(4, [(0, 1, N), (1, 2, P), (2, 3, N), (0, 3, P)]).unwrap();
        assert_eq!(confused(&c4, &balanced_partition_first(&c4).unwrap()), 0);
        let pos = cycle(&[P; 4]);
        assert_eq!(confused(&pos, &balanced_partition_first(&pos).unwrap()), 0);
        assert!(balanced_partition_first(&cycle(&[N, P, P])).is_err());
    }

    #[test]
    fn guarantees() {
        let c5 = cycle(&[N; 5]);
        assert_eq!(PolicyKind::CircuitSpacing.guarantee(&c5), Some(Guarantee::exactly(1)));
        assert_eq!(PolicyKind::TreeFrontier.guarantee(&c5), None);
        let g = Guarantee::at_most(Ratio::new(10, 3));
        assert!(g.holds(3));
        assert!(!g.holds(4));
        assert_eq!("rescue-priority".parse::<PolicyKind>().unwrap(), PolicyKind::RescuePriority);
    }
}
