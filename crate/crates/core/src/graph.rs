//! Signed graphs and the switching algebra over them.
//!
//! A [`SignedGraph`] is a simple undirected graph on the dense vertex set
//! `0..n` with a sign on every edge. Edges are stored canonically (`u < v`,
//! sorted), which keeps equality, hashing and the interchange format stable.
//!
//! The operations here are the classical ones: switching at a vertex set,
//! Harary's balance test, switching equivalence via product signatures,
//! negative circuit enumeration and the frustration index.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Mul, Neg};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Unordered vertex pair stored with the smaller endpoint first.
pub type EdgeKey = (Vertex, Vertex);

/// Default cap on the order of graphs passed to [`SignedGraph::negative_cycles`].
pub const DEFAULT_CYCLE_CAP: usize = 10;
/// Default cap on the order of graphs passed to [`SignedGraph::frustration_index`].
pub const DEFAULT_FRUSTRATION_CAP: usize = 20;

pub fn edge_key(u: Vertex, v: Vertex) -> EdgeKey {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn from_i64(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub sign: Sign,
}

impl Edge {
    pub fn key(&self) -> EdgeKey {
        (self.u, self.v)
    }
}

/// A simple undirected graph on `0..n` with a ±1 signature.
#[derive(Clone)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(Vertex, Sign)>>,
}

impl PartialEq for SignedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for SignedGraph {}

impl Hash for SignedGraph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph(n={}; ", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign, e.v)?;
        }
        f.write_str(")")
    }
}

/// A vertex set to switch at.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SwitchSet(pub BTreeSet<Vertex>);

impl SwitchSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    /// Switch set from a bit mask over `0..n`.
    pub fn from_mask(mask: u64) -> Self {
        Self((0..64).filter(|&v| mask >> v & 1 == 1).collect())
    }
}

impl FromIterator<Vertex> for SwitchSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Harary partition of a balanced signed graph: edges inside either side are
/// positive, edges across are negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalancePartition {
    pub u1: BTreeSet<Vertex>,
    pub u2: BTreeSet<Vertex>,
}

impl BalancePartition {
    /// True when `g`'s signature agrees with this partition edge by edge.
    pub fn certifies(&self, g: &SignedGraph) -> bool {
        self.u1.len() + self.u2.len() == g.n()
            && self.u1.is_disjoint(&self.u2)
            && g.edges().iter().all(|e| {
                let across = self.u1.contains(&e.u) != self.u1.contains(&e.v);
                across == e.sign.is_negative()
            })
    }
}

/// Simple circuits in canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleSet(pub BTreeSet<Vec<Vertex>>);

impl CycleSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, cycle: &[Vertex]) -> bool {
        self.0.contains(&canonical_cycle(cycle))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<Vertex>> {
        self.0.iter()
    }
}

/// Frustration index together with a minimum balancing edge set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frustration {
    pub value: usize,
    pub witness: BTreeSet<EdgeKey>,
}

/// Canonical form of a circuit: both orientations are rotated to start at
/// their minimum vertex and the lexicographically smaller one is kept.
pub fn canonical_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    if cycle.is_empty() {
        return Vec::new();
    }
    let rotate_min = |seq: &[Vertex]| -> Vec<Vertex> {
        let start = seq
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .map(|(i, _)| i)
            .unwrap_or(0);
        seq[start..].iter().chain(&seq[..start]).copied().collect()
    };
    let forward = rotate_min(cycle);
    let reversed: Vec<Vertex> = cycle.iter().rev().copied().collect();
    let backward = rotate_min(&reversed);
    forward.min(backward)
}

impl SignedGraph {
    /// Builds a graph from `(u, v, sign)` triples. Rejects self-loops,
    /// duplicate edges (in either orientation) and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Sign)>,
    {
        let mut list = Vec::new();
        for (u, v, sign) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (u, v) = edge_key(u, v);
            list.push(Edge { u, v, sign });
        }
        list.sort();
        for pair in list.windows(2) {
            if pair[0].key() == pair[1].key() {
                return Err(Error::DuplicateEdge(pair[0].u, pair[0].v));
            }
        }
        Ok(Self::from_sorted(n, list))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for list in &mut adj {
            list.sort();
        }
        Self { n, edges, adj }
    }

    /// Same topology with every edge carrying `sign`.
    pub fn uniform<I>(n: usize, pairs: I, sign: Sign) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::new(n, pairs.into_iter().map(|(u, v)| (u, v, sign)))
    }

    pub fn all_positive<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::uniform(n, pairs, Sign::Positive)
    }

    pub fn all_negative<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::uniform(n, pairs, Sign::Negative)
    }

    pub fn edgeless(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn topology(&self) -> Vec<EdgeKey> {
        self.edges.iter().map(Edge::key).collect()
    }

    pub fn same_topology(&self, other: &SignedGraph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.key() == b.key())
    }

    /// Neighbors of `v` with the sign of the connecting edge, sorted by id.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, Sign)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn sign(&self, u: Vertex, v: Vertex) -> Option<Sign> {
        let (u, v) = edge_key(u, v);
        self.edges
            .binary_search_by(|e| e.key().cmp(&(u, v)))
            .ok()
            .map(|i| self.edges[i].sign)
    }

    pub fn negative_edges(&self) -> BTreeSet<EdgeKey> {
        self.edges
            .iter()
            .filter(|e| e.sign.is_negative())
            .map(Edge::key)
            .collect()
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| !e.sign.is_negative())
    }

    pub fn is_all_negative(&self) -> bool {
        self.edges.iter().all(|e| e.sign.is_negative())
    }

    /// Same topology, signs replaced by `f(edge)`.
    pub fn map_signs<F>(&self, mut f: F) -> SignedGraph
    where
        F: FnMut(&Edge) -> Sign,
    {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { sign: f(e), ..*e })
            .collect();
        Self::from_sorted(self.n, edges)
    }

    /// Deletes the given edges (which must exist).
    pub fn without_edges(&self, removed: &BTreeSet<EdgeKey>) -> Result<SignedGraph> {
        for &(u, v) in removed {
            if self.sign(u, v).is_none() {
                return Err(Error::MissingEdge(u, v));
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !removed.contains(&e.key()))
            .copied()
            .collect();
        Ok(Self::from_sorted(self.n, edges))
    }

    /// Connected components, each sorted; components ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Connected and 2-regular.
    pub fn is_circuit(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    /// Switching at `x`: flips the sign of every edge with exactly one end in `x`.
    pub fn switch(&self, x: &SwitchSet) -> Result<SignedGraph> {
        if let Some(v) = x.iter().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.map_signs(|e| {
            if x.contains(e.u) != x.contains(e.v) {
                -e.sign
            } else {
                e.sign
            }
        }))
    }

    pub fn negate_signature(&self) -> SignedGraph {
        self.map_signs(|e| -e.sign)
    }

    /// Edge-wise product of two signatures on the same topology.
    pub fn product(&self, other: &SignedGraph) -> Result<SignedGraph> {
        if !self.same_topology(other) {
            return Err(Error::TopologyMismatch);
        }
        let mut other_signs = other.edges.iter().map(|e| e.sign);
        Ok(self.map_signs(|e| e.sign * other_signs.next().expect("same topology")))
    }

    /// Harary partition when balanced, via a sign-aware BFS 2-colouring.
    /// The smallest vertex of each component lands in `u1`.
    pub fn is_balanced(&self) -> Option<BalancePartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].expect("coloured before enqueue");
                for &(y, sign) in &self.adj[x] {
                    let want = sx ^ sign.is_negative();
                    match side[y] {
                        None => {
                            side[y] = Some(want);
                            queue.push_back(y);
                        }
                        Some(sy) if sy != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut u1, mut u2) = (BTreeSet::new(), BTreeSet::new());
        for (v, s) in side.into_iter().enumerate() {
            if s == Some(true) {
                u2.insert(v);
            } else {
                u1.insert(v);
            }
        }
        Some(BalancePartition { u1, u2 })
    }

    pub fn is_antibalanced(&self) -> bool {
        self.negate_signature().is_balanced().is_some()
    }

    /// Product of the signs along a closed vertex walk, or `None` if some
    /// consecutive pair is not an edge.
    pub fn circuit_sign(&self, cycle: &[Vertex]) -> Option<Sign> {
        let k = cycle.len();
        (0..k).try_fold(Sign::Positive, |acc, i| {
            self.sign(cycle[i], cycle[(i + 1) % k]).map(|s| acc * s)
        })
    }

    /// Every simple circuit with its sign, canonicalised.
    pub fn cycles(&self, max_n: usize) -> Result<Vec<(Vec<Vertex>, Sign)>> {
        if self.n > max_n {
            return Err(Error::TooLarge { what: "circuit enumeration", n: self.n, max: max_n });
        }
        let mut out = Vec::new();
        let mut on_path = vec![false; self.n];
        for start in 0..self.n {
            let mut path = vec![start];
            on_path[start] = true;
            self.extend_cycles(start, &mut path, &mut on_path, Sign::Positive, &mut out);
            on_path[start] = false;
        }
        out.sort();
        Ok(out)
    }

    // Paths only use vertices above `start`; each circuit is closed once by
    // requiring the second vertex to be smaller than the last.
    fn extend_cycles(
        &self,
        start: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        sign: Sign,
        out: &mut Vec<(Vec<Vertex>, Sign)>,
    ) {
        let last = *path.last().expect("non-empty path");
        for &(next, s) in &self.adj[last] {
            if next == start && path.len() >= 3 && path[1] < last {
                out.push((canonical_cycle(path), sign * s));
            } else if next > start && !on_path[next] {
                on_path[next] = true;
                path.push(next);
                self.extend_cycles(start, path, on_path, sign * s, out);
                path.pop();
                on_path[next] = false;
            }
        }
    }

    /// All negative simple circuits. Exponential; guarded by `max_n`.
    pub fn negative_cycles(&self, max_n: usize) -> Result<CycleSet> {
        Ok(CycleSet(
            self.cycles(max_n)?
                .into_iter()
                .filter(|(_, s)| s.is_negative())
                .map(|(c, _)| c)
                .collect(),
        ))
    }

    /// Frustration index by enumerating the `2^(n-1)` switchings that keep
    /// vertex 0 fixed. Ties go to the lexicographically smallest witness.
    pub fn frustration_index(&self, max_n: usize) -> Result<Frustration> {
        let cap = max_n.min(63);
        if self.n > cap {
            return Err(Error::TooLarge { what: "frustration index", n: self.n, max: cap });
        }
        if self.n <= 1 || self.edges.is_empty() {
            return Ok(Frustration { value: 0, witness: BTreeSet::new() });
        }
        let edges: Vec<(u64, u64, bool)> = self
            .edges
            .iter()
            .map(|e| (1u64 << e.u, 1u64 << e.v, e.sign.is_negative()))
            .collect();
        let negatives_after = |mask: u64| -> usize {
            edges
                .iter()
                .filter(|&&(bu, bv, neg)| neg ^ ((mask & bu != 0) != (mask & bv != 0)))
                .count()
        };
        // switch sets never contain vertex 0: masks are even numbers
        let half = 1u64 << (self.n - 1);
        let best = (0..half)
            .into_par_iter()
            .map(|m| negatives_after(m << 1))
            .min()
            .expect("at least one switching");
        let witness = (0..half)
            .into_par_iter()
            .filter(|&m| negatives_after(m << 1) == best)
            .map(|m| {
                let mask = m << 1;
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, &(bu, bv, neg))| neg ^ ((mask & bu != 0) != (mask & bv != 0)))
                    .map(|(i, _)| i)
                    .collect::<Vec<usize>>()
            })
            .min()
            .expect("minimiser exists");
        Ok(Frustration {
            value: best,
            witness: witness.into_iter().map(|i| self.edges[i].key()).collect(),
        })
    }

    /// Equivalent signature whose negative edges lie inside `removed`, given
    /// that deleting `removed` balances the graph. When `removed` is a
    /// minimum balancing set the negative edges are exactly `removed`.
    pub fn realize_min_signature(&self, removed: &BTreeSet<EdgeKey>) -> Result<SignedGraph> {
        let rest = self.without_edges(removed)?;
        let partition = rest.is_balanced().ok_or(Error::NotBalancing)?;
        self.switch(&SwitchSet(partition.u2))
    }
}

/// A switch set `X` with `g1.switch(X) == g2`, or `None` when the two
/// signatures are not switching equivalent. Vertex 0 is never in `X`.
pub fn equivalent(g1: &SignedGraph, g2: &SignedGraph) -> Result<Option<SwitchSet>> {
    let product = g1.product(g2)?;
    Ok(product.is_balanced().map(|p| SwitchSet(p.u2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(signs: [Sign; 3]) -> SignedGraph {
        SignedGraph::new(3, [(0, 1, signs[0]), (0, 2, signs[1]), (1, 2, signs[2])]).unwrap()
    }

    use Sign::{Negative as N, Positive as P};

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(SignedGraph::new(3, [(1, 1, P)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            SignedGraph::new(3, [(0, 1, P), (1, 0, N)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            SignedGraph::new(2, [(0, 2, P)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn switch_single_vertex_of_triangle() {
        let g = triangle([P, P, P]);
        let h = g.switch(&SwitchSet::from_iter([0])).unwrap();
        assert_eq!(h.sign(0, 1), Some(N));
        assert_eq!(h.sign(0, 2), Some(N));
        assert_eq!(h.sign(1, 2), Some(P));
        assert_eq!(g.switch(&SwitchSet::new()).unwrap(), g);
        assert!(matches!(
            g.switch(&SwitchSet::from_iter([3])),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn balance_on_small_cases() {
        let p = triangle([P, P, P]).is_balanced().unwrap();
        assert_eq!(p.u1, BTreeSet::from([0, 1, 2]));
        assert!(p.u2.is_empty());
        assert!(triangle([N, P, P]).is_balanced().is_none());
        assert!(!triangle([P, P, P]).is_antibalanced());
        assert!(triangle([N, N, N]).is_antibalanced());
        assert!(SignedGraph::edgeless(0).is_balanced().is_some());
        let e = SignedGraph::edgeless(4).is_balanced().unwrap();
        assert_eq!(e.u1.len(), 4);
    }

    #[test]
    fn negate_is_involution() {
        let g = triangle([N, P, P]);
        assert_eq!(g.negate_signature().negate_signature(), g);
        assert!(triangle([P, P, P]).negate_signature().is_all_negative());
    }

    #[test]
    fn equivalence_by_product_signature() {
        let g = triangle([P, P, P]);
        let h = triangle([N, P, P]);
        assert_eq!(equivalent(&g, &h).unwrap(), None);
        let x = SwitchSet::from_iter([1, 2]);
        let s = g.switch(&x).unwrap();
        let w = equivalent(&g, &s).unwrap().unwrap();
        assert!(!w.contains(0));
        assert_eq!(g.switch(&w).unwrap(), s);
        let path = SignedGraph::all_positive(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(equivalent(&g, &path), Err(Error::TopologyMismatch));
    }

    #[test]
    fn cycles_of_k4() {
        let k4 = SignedGraph::all_positive(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        // 4 triangles + 3 four-circuits
        assert_eq!(k4.cycles(10).unwrap().len(), 7);
        assert!(k4.negative_cycles(10).unwrap().is_empty());
        let c5 = SignedGraph::all_negative(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let neg = c5.negative_cycles(10).unwrap();
        assert_eq!(neg.len(), 1);
        assert!(neg.contains(&[2, 3, 4, 0, 1]));
        assert!(matches!(
            SignedGraph::edgeless(11).negative_cycles(10),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn canonical_cycle_form() {
        assert_eq!(canonical_cycle(&[3, 1, 4, 2]), vec![1, 3, 2, 4]);
        assert_eq!(canonical_cycle(&[1, 4, 2, 3]), vec![1, 3, 2, 4]);
    }

    #[test]
    fn frustration_small() {
        let f = triangle([N, P, P]).frustration_index(20).unwrap();
        assert_eq!(f.value, 1);
        assert_eq!(f.witness, BTreeSet::from([(0, 1)]));
        // any single edge balances; ties go to the smallest edge set
        let f = triangle([P, P, N]).frustration_index(20).unwrap();
        assert_eq!((f.value, f.witness), (1, BTreeSet::from([(0, 1)])));
        let f = triangle([P, P, P]).frustration_index(20).unwrap();
        assert_eq!((f.value, f.witness.len()), (0, 0));
        assert_eq!(SignedGraph::edgeless(0).frustration_index(20).unwrap().value, 0);
    }

    #[test]
    fn realize_min_signature_keeps_class() {
        let g = triangle([P, N, P]);
        let h = g.realize_min_signature(&BTreeSet::from([(0, 2)])).unwrap();
        assert_eq!(h.negative_edges(), BTreeSet::from([(0, 2)]));
        assert!(equivalent(&g, &h).unwrap().is_some());
        // a different single edge also works and moves the negative edge
        let h = g.realize_min_signature(&BTreeSet::from([(1, 2)])).unwrap();
        assert_eq!(h.negative_edges(), BTreeSet::from([(1, 2)]));
        assert_eq!(
            g.realize_min_signature(&BTreeSet::new()),
            Err(Error::NotBalancing)
        );
        assert_eq!(
            g.realize_min_signature(&BTreeSet::from([(0, 3)])),
            Err(Error::MissingEdge(0, 3))
        );
    }
}
