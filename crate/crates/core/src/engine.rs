//! The dissemination process.
//!
//! Each step places information on one uninformed vertex and then runs a
//! single synchronous propagation round computed from the primed state:
//! vertices that already carry a label keep it, an uninformed vertex adopts
//! the unique signed message it hears from its informed neighbours, becomes
//! confused when it hears both `A` and `-A`, and otherwise stays uninformed.
//! Confused vertices transmit nothing.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Zero,
    A,
    NegA,
    C,
}

impl Label {
    fn bits(self) -> u64 {
        match self {
            Label::Zero => 0,
            Label::A => 1,
            Label::NegA => 2,
            Label::C => 3,
        }
    }

    fn from_bits(bits: u64) -> Label {
        match bits & 3 {
            0 => Label::Zero,
            1 => Label::A,
            2 => Label::NegA,
            _ => Label::C,
        }
    }

    /// Negation of the carried information; `C` and `Zero` are fixed.
    pub fn negate(self) -> Label {
        match self {
            Label::A => Label::NegA,
            Label::NegA => Label::A,
            other => other,
        }
    }

    pub fn is_informed(self) -> bool {
        matches!(self, Label::A | Label::NegA)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Label::Zero => "0",
            Label::A => "A",
            Label::NegA => "-A",
            Label::C => "C",
        }
    }

    pub fn parse(s: &str) -> Option<Label> {
        match s {
            "0" => Some(Label::Zero),
            "A" => Some(Label::A),
            "-A" => Some(Label::NegA),
            "C" => Some(Label::C),
            _ => None,
        }
    }
}

impl Mul<Label> for Sign {
    type Output = Label;

    fn mul(self, label: Label) -> Label {
        match self {
            Sign::Positive => label,
            Sign::Negative => label.negate(),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Information placed on a p-vertex. `A` orders before `-A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Info {
    #[serde(rename = "A")]
    A,
    #[serde(rename = "-A")]
    NegA,
}

impl Info {
    pub fn label(self) -> Label {
        match self {
            Info::A => Label::A,
            Info::NegA => Label::NegA,
        }
    }

    pub fn negate(self) -> Info {
        match self {
            Info::A => Info::NegA,
            Info::NegA => Info::A,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Placement {
    pub vertex: Vertex,
    pub info: Info,
}

impl Placement {
    pub fn a(vertex: Vertex) -> Self {
        Self { vertex, info: Info::A }
    }

    pub fn neg_a(vertex: Vertex) -> Self {
        Self { vertex, info: Info::NegA }
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.vertex, self.info.label())
    }
}

/// Parses `v:A` or `v:-A`.
impl FromStr for Placement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("placement must look like `3:A` or `3:-A`, got `{s}`"));
        let (v, info) = s.split_once(':').ok_or_else(bad)?;
        let vertex = v.trim().parse().map_err(|_| bad())?;
        let info = match info.trim() {
            "A" => Info::A,
            "-A" => Info::NegA,
            _ => return Err(bad()),
        };
        Ok(Placement { vertex, info })
    }
}

/// ID places only `A`; rID (relaxed) may place `A` or `-A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "ID")]
    Id,
    #[serde(rename = "rID")]
    Relaxed,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Id => "ID",
            Mode::Relaxed => "rID",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "id" => Ok(Mode::Id),
            "rid" | "relaxed" => Ok(Mode::Relaxed),
            _ => Err(Error::Parse(format!("unknown mode `{s}` (expected ID or rID)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Strategy {
    pub mode: Mode,
    pub placements: Vec<Placement>,
}

impl Strategy {
    /// ID strategy placing `A` on each vertex in turn.
    pub fn id<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        Self {
            mode: Mode::Id,
            placements: vertices.into_iter().map(Placement::a).collect(),
        }
    }

    pub fn relaxed<I: IntoIterator<Item = Placement>>(placements: I) -> Self {
        Self {
            mode: Mode::Relaxed,
            placements: placements.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.placements.iter().map(|p| p.vertex)
    }

    /// Checks distinct in-range vertices and, in ID mode, `A`-only placements.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut seen = vec![false; n];
        for (i, p) in self.placements.iter().enumerate() {
            if p.vertex >= n {
                return Err(Error::VertexOutOfRange { vertex: p.vertex, n });
            }
            if std::mem::replace(&mut seen[p.vertex], true) {
                return Err(Error::DuplicatePlacement(p.vertex));
            }
            if self.mode == Mode::Id && p.info != Info::A {
                return Err(Error::NegativeInfoInIdMode { step: i + 1 });
            }
        }
        Ok(())
    }
}

/// Per-vertex labels packed two bits per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabelState {
    n: usize,
    words: Vec<u64>,
}

const PER_WORD: usize = 32;

impl LabelState {
    pub fn all_zero(n: usize) -> Self {
        Self {
            n,
            words: vec![0; n.div_ceil(PER_WORD)],
        }
    }

    pub fn from_labels(labels: &[Label]) -> Self {
        let mut s = Self::all_zero(labels.len());
        for (v, &l) in labels.iter().enumerate() {
            s.set(v, l);
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, v: Vertex) -> Label {
        assert!(v < self.n, "vertex {v} out of range");
        Label::from_bits(self.words[v / PER_WORD] >> (2 * (v % PER_WORD)))
    }

    pub fn set(&mut self, v: Vertex, label: Label) {
        assert!(v < self.n, "vertex {v} out of range");
        let shift = 2 * (v % PER_WORD);
        let w = &mut self.words[v / PER_WORD];
        *w = (*w & !(3 << shift)) | (label.bits() << shift);
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        (0..self.n).map(|v| self.get(v))
    }

    pub fn to_vec(&self) -> Vec<Label> {
        self.labels().collect()
    }

    pub fn vertices_with(&self, label: Label) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.get(v) == label).collect()
    }

    pub fn count(&self, label: Label) -> usize {
        self.labels().filter(|&l| l == label).count()
    }

    /// No uninformed vertex remains.
    pub fn is_complete(&self) -> bool {
        self.labels().all(|l| l != Label::Zero)
    }
}

impl fmt::Debug for LabelState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (v, l) in self.labels().enumerate() {
            if v > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

/// What an uninformed vertex hears from the informed vertices of `state`.
pub fn incoming(g: &SignedGraph, state: &LabelState, v: Vertex) -> Label {
    let (mut heard_a, mut heard_neg) = (false, false);
    for &(z, sign) in g.neighbors(v) {
        match sign * state.get(z) {
            Label::A => heard_a = true,
            Label::NegA => heard_neg = true,
            _ => {}
        }
    }
    match (heard_a, heard_neg) {
        (false, false) => Label::Zero,
        (true, false) => Label::A,
        (false, true) => Label::NegA,
        (true, true) => Label::C,
    }
}

/// One step: place `p`, then one synchronous propagation round.
pub fn step(g: &SignedGraph, state: &LabelState, p: Placement) -> Result<LabelState> {
    if state.n() != g.n() {
        return Err(Error::precondition("label state does not match the graph order"));
    }
    if p.vertex >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: p.vertex, n: g.n() });
    }
    if state.get(p.vertex) != Label::Zero {
        return Err(Error::NotUninformed(p.vertex));
    }
    let mut primed = state.clone();
    primed.set(p.vertex, p.info.label());
    let mut next = primed.clone();
    for v in 0..g.n() {
        if primed.get(v) == Label::Zero {
            next.set(v, incoming(g, &primed, v));
        }
    }
    Ok(next)
}

/// Full record of one run: snapshot `i` is the state after step `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub graph: SignedGraph,
    pub strategy: Strategy,
    pub snapshots: Vec<LabelState>,
}

impl Trace {
    pub fn steps(&self) -> usize {
        self.strategy.len()
    }

    pub fn final_state(&self) -> &LabelState {
        self.snapshots.last().expect("snapshot 0 always present")
    }

    pub fn is_complete(&self) -> bool {
        self.final_state().is_complete()
    }

    pub fn confused(&self) -> Vec<Vertex> {
        self.final_state().vertices_with(Label::C)
    }

    pub fn confused_count(&self) -> usize {
        self.final_state().count(Label::C)
    }
}

/// Replays `strategy` on `g`. A strategy that stops early yields an
/// incomplete trace rather than an error.
pub fn run(g: &SignedGraph, strategy: &Strategy) -> Result<Trace> {
    strategy.validate(g.n())?;
    let mut snapshots = Vec::with_capacity(strategy.len() + 1);
    snapshots.push(LabelState::all_zero(g.n()));
    for (i, &p) in strategy.placements.iter().enumerate() {
        let current = snapshots.last().expect("non-empty");
        let next = step(g, current, p).map_err(|e| match e {
            Error::NotUninformed(vertex) => Error::PlacementOnInformed { step: i + 1, vertex },
            other => other,
        })?;
        snapshots.push(next);
    }
    Ok(Trace {
        graph: g.clone(),
        strategy: strategy.clone(),
        snapshots,
    })
}

/// Step index at which each vertex entered the process; p-vertex `v_j`
/// (1-based) has level `j - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelMap(pub Vec<usize>);

impl LevelMap {
    pub fn level(&self, v: Vertex) -> usize {
        self.0[v]
    }
}

pub fn levels(trace: &Trace) -> Result<LevelMap> {
    if !trace.is_complete() {
        return Err(Error::IncompleteTrace);
    }
    let n = trace.graph.n();
    let mut level = vec![usize::MAX; n];
    for (j, v) in trace.strategy.vertices().enumerate() {
        level[v] = j;
    }
    for (v, slot) in level.iter_mut().enumerate() {
        if *slot == usize::MAX {
            *slot = trace
                .snapshots
                .iter()
                .position(|s| s.get(v) != Label::Zero)
                .expect("complete trace informs every vertex");
        }
    }
    Ok(LevelMap(level))
}

/// Transfers a complete rID trace to the negated signature by negating the
/// information on every odd-level vertex. The confused set is unchanged.
pub fn mirror_trace(trace: &Trace) -> Result<Trace> {
    if trace.strategy.mode != Mode::Relaxed {
        return Err(Error::NotRelaxed);
    }
    let level = levels(trace)?;
    let odd = |v: Vertex| level.level(v) % 2 == 1;
    let placements: Vec<Placement> = trace
        .strategy
        .placements
        .iter()
        .map(|p| Placement {
            vertex: p.vertex,
            info: if odd(p.vertex) { p.info.negate() } else { p.info },
        })
        .collect();
    let snapshots = trace
        .snapshots
        .iter()
        .map(|s| {
            let mut m = s.clone();
            for v in (0..s.n()).filter(|&v| odd(v)) {
                m.set(v, s.get(v).negate());
            }
            m
        })
        .collect();
    Ok(Trace {
        graph: trace.graph.negate_signature(),
        strategy: Strategy::relaxed(placements),
        snapshots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    fn path3() -> SignedGraph {
        SignedGraph::all_positive(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn c5_negative() -> SignedGraph {
        SignedGraph::all_negative(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
    }

    use Label::{NegA, Zero, A, C};

    #[test]
    fn one_round_per_step() {
        let s = step(&path3(), &LabelState::all_zero(3), Placement::a(0)).unwrap();
        assert_eq!(s.to_vec(), vec![A, A, Zero]);
    }

    #[test]
    fn all_negative_c5_confuses_one_vertex() {
        let g = c5_negative();
        let s1 = step(&g, &LabelState::all_zero(5), Placement::a(0)).unwrap();
        assert_eq!(s1.to_vec(), vec![A, NegA, Zero, Zero, NegA]);
        let s2 = step(&g, &s1, Placement::a(2)).unwrap();
        assert_eq!(s2.to_vec(), vec![A, NegA, A, C, NegA]);
        assert_eq!(step(&g, &s2, Placement::a(1)), Err(Error::NotUninformed(1)));
    }

    #[test]
    fn run_reports_offending_step() {
        let g = c5_negative();
        let t = run(&g, &Strategy::id([0, 2])).unwrap();
        assert!(t.is_complete());
        assert_eq!(t.confused(), vec![3]);
        assert_eq!(
            run(&g, &Strategy::id([0, 1])),
            Err(Error::PlacementOnInformed { step: 2, vertex: 1 })
        );
        let partial = run(&g, &Strategy::id([0])).unwrap();
        assert!(!partial.is_complete());
        assert_eq!(
            run(&g, &Strategy::relaxed([Placement::neg_a(0)])).map(|t| t.confused_count()),
            Ok(0)
        );
        let bad = Strategy {
            mode: Mode::Id,
            placements: vec![Placement::neg_a(0)],
        };
        assert_eq!(run(&g, &bad), Err(Error::NegativeInfoInIdMode { step: 1 }));
        assert_eq!(run(&g, &Strategy::id([0, 0])), Err(Error::DuplicatePlacement(0)));
    }

    #[test]
    fn single_vertex() {
        let g = SignedGraph::edgeless(1);
        let t = run(&g, &Strategy::id([0])).unwrap();
        assert!(t.is_complete());
        assert_eq!((t.steps(), t.confused_count()), (1, 0));
        assert_eq!(levels(&t).unwrap().0, vec![0]);
    }

    #[test]
    fn levels_follow_first_informed_step() {
        let t = run(&c5_negative(), &Strategy::id([0, 2])).unwrap();
        assert_eq!(levels(&t).unwrap().0, vec![0, 1, 1, 2, 1]);
        let t = run(&path3(), &Strategy::id([0, 2])).unwrap();
        assert_eq!(levels(&t).unwrap().0, vec![0, 1, 1]);
        let partial = run(&path3(), &Strategy::id([0])).unwrap();
        assert_eq!(levels(&partial), Err(Error::IncompleteTrace));
    }

    #[test]
    fn mirror_of_c5_trace() {
        let g = c5_negative();
        let t = run(&g, &Strategy::relaxed([Placement::a(0), Placement::a(2)])).unwrap();
        let m = mirror_trace(&t).unwrap();
        assert!(m.graph.is_all_positive());
        assert_eq!(m.strategy.placements, vec![Placement::a(0), Placement::neg_a(2)]);
        assert_eq!(m.final_state().to_vec(), vec![A, A, NegA, C, A]);
        assert_eq!(run(&m.graph, &m.strategy).unwrap(), m);
        assert_eq!(mirror_trace(&m).unwrap(), t);
        let id = run(&g, &Strategy::id([0, 2])).unwrap();
        assert_eq!(mirror_trace(&id), Err(Error::NotRelaxed));
    }

    #[test]
    fn label_packing_roundtrip() {
        let labels: Vec<Label> = (0..70).map(|i| [Zero, A, NegA, C][i % 4]).collect();
        let s = LabelState::from_labels(&labels);
        assert_eq!(s.to_vec(), labels);
        assert_eq!(s.count(C), 17);
        assert_eq!(Sign::Negative * A, NegA);
        assert_eq!(Sign::Negative * C, C);
    }

    #[test]
    fn parse_placements_and_modes() {
        assert_eq!("3:A".parse::<Placement>().unwrap(), Placement::a(3));
        assert_eq!(" 0:-A".parse::<Placement>().unwrap(), Placement::neg_a(0));
        assert!("3:B".parse::<Placement>().is_err());
        assert!("x:A".parse::<Placement>().is_err());
        assert_eq!("rID".parse::<Mode>().unwrap(), Mode::Relaxed);
        assert_eq!("id".parse::<Mode>().unwrap(), Mode::Id);
    }
}
