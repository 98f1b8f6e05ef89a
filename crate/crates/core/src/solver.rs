//! Exact confusion numbers by memoized branch-and-bound.
//!
//! The search branches on every uninformed vertex as the next p-vertex
//! (and, in rID mode, on the placed sign). States are memoized on their
//! labels alone: the process is Markovian in the label state, so equal
//! states have equal optimal completions. A branch is cut as soon as its
//! confused count reaches the incumbent, since confusion never decreases.
//!
//! The memo stores either the exact optimum below a state or a lower bound
//! proven while searching under a tighter cap. The reported witness is the
//! lexicographically smallest optimal placement sequence, reconstructed
//! after the optimum is known.
//!
//! Internally a state is three bit planes (`A`, `-A`, `C`), which limits
//! the solver to graphs of order at most 64.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::engine::{step, Info, Label, LabelState, Mode, Placement, Strategy};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SwitchSet};
use crate::strategies::rescue_priority_any;

/// Default cap on the order of graphs handed to the exact solvers.
pub const DEFAULT_EXACT_CAP: usize = 15;
/// Cap for the switching-class enumeration.
pub const VIA_CLASS_CAP: usize = 12;
/// Cap for the unpruned oracle.
pub const ORACLE_CAP: usize = 8;
const HARD_CAP: usize = 64;

/// Resource limits for one solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_n: usize,
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_EXACT_CAP,
            max_nodes: None,
            max_time: None,
        }
    }
}

impl Budget {
    pub fn with_max_n(self, max_n: usize) -> Self {
        Self { max_n, ..self }
    }

    pub fn with_nodes(self, nodes: u64) -> Self {
        Self { max_nodes: Some(nodes), ..self }
    }

    pub fn with_time(self, time: Duration) -> Self {
        Self { max_time: Some(time), ..self }
    }

    fn check_order(&self, g: &SignedGraph, what: &'static str) -> Result<()> {
        let max = self.max_n.min(HARD_CAP);
        if g.n() > max {
            Err(Error::TooLarge { what, n: g.n(), max })
        } else {
            Ok(())
        }
    }

    fn deadline(&self, start: Instant) -> Option<Instant> {
        self.max_time.map(|d| start + d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    /// Optimal confused count, or an upper bound when `optimal` is false.
    pub optimum: usize,
    pub witness: Strategy,
    pub optimal: bool,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    pub mode: Mode,
}

/// Minimum number of p-vertices over complete strategies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepsReport {
    pub steps: usize,
    pub witness: Strategy,
    pub optimal: bool,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    pub mode: Mode,
}

/// Label state as bit planes; `confused_so_far` is the popcount of `conf`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SearchState {
    pos: u64,
    neg: u64,
    conf: u64,
}

impl SearchState {
    pub fn confused_so_far(&self) -> u32 {
        self.conf.count_ones()
    }

    fn occupied(&self) -> u64 {
        self.pos | self.neg | self.conf
    }

    pub fn to_labels(&self, n: usize) -> LabelState {
        let mut s = LabelState::all_zero(n);
        for v in 0..n {
            let bit = 1u64 << v;
            let label = if self.pos & bit != 0 {
                Label::A
            } else if self.neg & bit != 0 {
                Label::NegA
            } else if self.conf & bit != 0 {
                Label::C
            } else {
                Label::Zero
            };
            s.set(v, label);
        }
        s
    }
}

/// Neighbourhoods split by edge sign, as bit masks.
struct Masks {
    full: u64,
    plus: Vec<u64>,
    minus: Vec<u64>,
}

impl Masks {
    fn new(g: &SignedGraph) -> Self {
        let n = g.n();
        let mut plus = vec![0u64; n];
        let mut minus = vec![0u64; n];
        for e in g.edges() {
            let (bu, bv) = (1u64 << e.u, 1u64 << e.v);
            match e.sign {
                Sign::Positive => {
                    plus[e.u] |= bv;
                    plus[e.v] |= bu;
                }
                Sign::Negative => {
                    minus[e.u] |= bv;
                    minus[e.v] |= bu;
                }
            }
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self { full, plus, minus }
    }

    fn zeros(&self, s: SearchState) -> u64 {
        self.full & !s.occupied()
    }

    fn advance(&self, s: SearchState, p: Placement) -> SearchState {
        let bit = 1u64 << p.vertex;
        let (pos, neg) = match p.info {
            Info::A => (s.pos | bit, s.neg),
            Info::NegA => (s.pos, s.neg | bit),
        };
        let mut next = SearchState { pos, neg, conf: s.conf };
        let mut zeros = self.full & !(pos | neg | s.conf);
        while zeros != 0 {
            let v = zeros.trailing_zeros() as usize;
            zeros &= zeros - 1;
            let hears_a = (self.plus[v] & pos) | (self.minus[v] & neg) != 0;
            let hears_neg = (self.plus[v] & neg) | (self.minus[v] & pos) != 0;
            let b = 1u64 << v;
            match (hears_a, hears_neg) {
                (true, true) => next.conf |= b,
                (true, false) => next.pos |= b,
                (false, true) => next.neg |= b,
                (false, false) => {}
            }
        }
        next
    }

    /// Children in lexicographic order of `(vertex, info)`.
    fn moves(&self, s: SearchState, mode: Mode) -> Vec<Placement> {
        let root = s.occupied() == 0;
        let mut zeros = self.zeros(s);
        let mut out = Vec::with_capacity(2 * zeros.count_ones() as usize);
        while zeros != 0 {
            let v = zeros.trailing_zeros() as usize;
            zeros &= zeros - 1;
            out.push(Placement::a(v));
            // negating every label commutes with the step rule, so the first
            // sign can be fixed to A
            if mode == Mode::Relaxed && !root {
                out.push(Placement::neg_a(v));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
enum Memo {
    Exact(u32),
    AtLeast(u32),
}

struct Limits {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

struct Search<'a> {
    masks: &'a Masks,
    mode: Mode,
    memo: HashMap<SearchState, Memo>,
    nodes: u64,
    limits: Limits,
    aborted: bool,
    path: Vec<Placement>,
    best_leaf: Option<(u32, Vec<Placement>)>,
}

impl<'a> Search<'a> {
    fn new(masks: &'a Masks, mode: Mode, limits: Limits) -> Self {
        Self {
            masks,
            mode,
            memo: HashMap::new(),
            nodes: 0,
            limits,
            aborted: false,
            path: Vec::new(),
            best_leaf: None,
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if self.limits.max_nodes.is_some_and(|m| self.nodes >= m) {
            self.aborted = true;
        } else if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.limits.deadline {
                self.aborted = Instant::now() >= d;
            }
        }
        self.aborted
    }

    /// Minimum final confused count below `s` when it is `< cap`; otherwise
    /// some lower bound `>= cap`.
    fn value(&mut self, s: SearchState, cap: u32) -> u32 {
        let here = s.confused_so_far();
        if here >= cap {
            return here;
        }
        match self.memo.get(&s) {
            Some(&Memo::Exact(v)) => return v,
            Some(&Memo::AtLeast(lb)) if lb >= cap => return lb,
            _ => {}
        }
        if self.masks.zeros(s) == 0 {
            if self.best_leaf.as_ref().is_none_or(|(b, _)| here < *b) {
                self.best_leaf = Some((here, self.path.clone()));
            }
            self.memo.insert(s, Memo::Exact(here));
            return here;
        }
        if self.out_of_budget() {
            return cap;
        }
        self.nodes += 1;
        let mut best = u32::MAX;
        for p in self.masks.moves(s, self.mode) {
            let child = self.masks.advance(s, p);
            self.path.push(p);
            let v = self.value(child, cap.min(best));
            self.path.pop();
            if self.aborted {
                return cap;
            }
            best = best.min(v);
            if best <= here {
                break;
            }
        }
        let entry = if best < cap { Memo::Exact(best) } else { Memo::AtLeast(best) };
        self.memo.insert(s, entry);
        best
    }

    /// Lexicographically smallest placement sequence reaching `optimum`.
    fn reconstruct(&mut self, optimum: u32) -> Vec<Placement> {
        let mut s = SearchState::default();
        let mut out = Vec::new();
        while self.masks.zeros(s) != 0 {
            let p = self
                .masks
                .moves(s, self.mode)
                .into_iter()
                .find(|&p| self.value(self.masks.advance(s, p), optimum + 1) == optimum)
                .expect("an optimal child exists");
            s = self.masks.advance(s, p);
            out.push(p);
        }
        out
    }
}

fn strategy_for(mode: Mode, placements: Vec<Placement>) -> Strategy {
    Strategy { mode, placements }
}

fn solve_with(g: &SignedGraph, mode: Mode, budget: &Budget, deadline: Option<Instant>) -> SolveReport {
    let start = Instant::now();
    let masks = Masks::new(g);
    let greedy = rescue_priority_any(g);
    let greedy_value = crate::engine::run(g, &greedy)
        .expect("greedy strategy is valid")
        .confused_count() as u32;
    let mut search = Search::new(
        &masks,
        mode,
        Limits { max_nodes: budget.max_nodes, deadline },
    );
    let optimum = search.value(SearchState::default(), greedy_value + 1);
    let (optimum, placements, optimal) = if search.aborted {
        match search.best_leaf.take() {
            Some((v, path)) if v < greedy_value => (v, path, false),
            _ => (greedy_value, greedy.placements, false),
        }
    } else {
        (optimum, search.reconstruct(optimum), true)
    };
    SolveReport {
        optimum: optimum as usize,
        witness: strategy_for(mode, placements),
        optimal,
        nodes_explored: search.nodes,
        wall_time: start.elapsed(),
        mode,
    }
}

/// The confusion number `C(G, sigma)` over all ID strategies.
pub fn exact_confusion(g: &SignedGraph, budget: &Budget) -> Result<SolveReport> {
    budget.check_order(g, "exact solver")?;
    Ok(solve_with(g, Mode::Id, budget, budget.deadline(Instant::now())))
}

/// The relaxed confusion number `C_r(G, sigma)` over all rID strategies.
pub fn exact_relaxed_confusion(g: &SignedGraph, budget: &Budget) -> Result<SolveReport> {
    budget.check_order(g, "exact solver")?;
    Ok(solve_with(g, Mode::Relaxed, budget, budget.deadline(Instant::now())))
}

/// `C_r` as the minimum of `C` over the switching class, enumerating the
/// `2^(n-1)` switch sets that leave vertex 0 fixed. The witness is the
/// optimal ID strategy of the best class member carried back to `g` by
/// negating the placed sign on switched vertices. The node limit applies
/// to each class member separately; the time limit to the whole call.
pub fn relaxed_via_class(g: &SignedGraph, budget: &Budget) -> Result<SolveReport> {
    let cap = Budget { max_n: budget.max_n.min(VIA_CLASS_CAP), ..*budget };
    cap.check_order(g, "switching-class enumeration")?;
    let start = Instant::now();
    let deadline = budget.deadline(start);
    let members = if g.n() == 0 { 1u64 } else { 1u64 << (g.n() - 1) };
    let reports: Vec<(u64, SolveReport)> = (0..members)
        .into_par_iter()
        .map(|m| {
            let x = SwitchSet::from_mask(m << 1);
            let switched = g.switch(&x).expect("switch set within range");
            (m << 1, solve_with(&switched, Mode::Id, budget, deadline))
        })
        .collect();
    let optimal = reports.iter().all(|(_, r)| r.optimal);
    let nodes = reports.iter().map(|(_, r)| r.nodes_explored).sum();
    let (mask, best) = reports
        .into_iter()
        .min_by_key(|(m, r)| (r.optimum, *m))
        .expect("at least one class member");
    let placements: Vec<Placement> = best
        .witness
        .placements
        .iter()
        .map(|p| {
            let info = if mask >> p.vertex & 1 == 1 { p.info.negate() } else { p.info };
            Placement { vertex: p.vertex, info }
        })
        .collect();
    Ok(SolveReport {
        optimum: best.optimum,
        witness: Strategy::relaxed(placements),
        optimal,
        nodes_explored: nodes,
        wall_time: start.elapsed(),
        mode: Mode::Relaxed,
    })
}

struct StepSearch<'a> {
    masks: &'a Masks,
    mode: Mode,
    failed: HashMap<SearchState, usize>,
    nodes: u64,
    limits: Limits,
    aborted: bool,
}

impl StepSearch<'_> {
    /// Can `s` be completed within `remaining` more placements?
    fn reach(&mut self, s: SearchState, remaining: usize, path: &mut Vec<Placement>) -> bool {
        if self.masks.zeros(s) == 0 {
            return true;
        }
        if remaining == 0 || self.failed.get(&s).is_some_and(|&r| r >= remaining) {
            return false;
        }
        self.nodes += 1;
        if self.limits.max_nodes.is_some_and(|m| self.nodes > m)
            || (self.nodes.is_multiple_of(1024) && self.limits.deadline.is_some_and(|d| Instant::now() >= d))
        {
            self.aborted = true;
        }
        if self.aborted {
            return false;
        }
        for p in self.masks.moves(s, self.mode) {
            path.push(p);
            if self.reach(self.masks.advance(s, p), remaining - 1, path) {
                return true;
            }
            path.pop();
            if self.aborted {
                return false;
            }
        }
        self.failed.insert(s, remaining);
        false
    }
}

/// Minimum number of p-vertices in a complete strategy, ignoring confusion,
/// by iterative deepening on the step count.
pub fn min_steps(g: &SignedGraph, mode: Mode, budget: &Budget) -> Result<StepsReport> {
    budget.check_order(g, "min-steps solver")?;
    let start = Instant::now();
    let masks = Masks::new(g);
    let greedy = rescue_priority_any(g);
    let mut search = StepSearch {
        masks: &masks,
        mode,
        failed: HashMap::new(),
        nodes: 0,
        limits: Limits { max_nodes: budget.max_nodes, deadline: budget.deadline(start) },
        aborted: false,
    };
    let mut found = None;
    for depth in 0..=greedy.len() {
        let mut path = Vec::new();
        if search.reach(SearchState::default(), depth, &mut path) {
            found = Some(path);
            break;
        }
        if search.aborted {
            break;
        }
    }
    let (placements, optimal) = match found {
        Some(path) => (path, true),
        None => (greedy.placements, false),
    };
    Ok(StepsReport {
        steps: placements.len(),
        witness: strategy_for(mode, placements),
        optimal,
        nodes_explored: search.nodes,
        wall_time: start.elapsed(),
        mode,
    })
}

/// Exhaustive, unpruned, unmemoized minimum over every placement sequence
/// (and every sign in rID mode), driven by the reference step rule.
pub fn brute_oracle(g: &SignedGraph, mode: Mode) -> Result<usize> {
    if g.n() > ORACLE_CAP {
        return Err(Error::TooLarge { what: "brute-force oracle", n: g.n(), max: ORACLE_CAP });
    }
    fn go(g: &SignedGraph, state: &LabelState, mode: Mode) -> usize {
        let zeros = state.vertices_with(Label::Zero);
        if zeros.is_empty() {
            return state.count(Label::C);
        }
        let infos: &[Info] = match mode {
            Mode::Id => &[Info::A],
            Mode::Relaxed => &[Info::A, Info::NegA],
        };
        let mut best = usize::MAX;
        for &v in &zeros {
            for &info in infos {
                let next = step(g, state, Placement { vertex: v, info }).expect("uninformed");
                best = best.min(go(g, &next, mode));
            }
        }
        best
    }
    Ok(go(g, &LabelState::all_zero(g.n()), mode))
}

/// Confused count after replaying `placements` from the empty state, as
/// seen by the bit-plane transition. Exposed for cross-checking against
/// the reference engine.
pub fn fast_replay(g: &SignedGraph, placements: &[Placement]) -> Option<LabelState> {
    if g.n() > HARD_CAP {
        return None;
    }
    let masks = Masks::new(g);
    let mut s = SearchState::default();
    for &p in placements {
        if p.vertex >= g.n() || masks.zeros(s) & (1u64 << p.vertex) == 0 {
            return None;
        }
        s = masks.advance(s, p);
    }
    Some(s.to_labels(g.n()))
}

/// Vertices in increasing order as a one-line summary of a witness.
pub fn describe(placements: &[Placement]) -> String {
    placements.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
pub(crate) fn vertex_mask(vs: impl IntoIterator<Item = crate::graph::Vertex>) -> u64 {
    vs.into_iter().fold(0, |m, v| m | 1u64 << v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::run;
    use crate::families::{gen_cycle, gen_gn, gen_ktt_tau};
    use crate::graph::Sign::{Negative as N, Positive as P};

    #[test]
    fn c5_all_negative() {
        let g = gen_cycle(&[N; 5]).unwrap();
        let r = exact_confusion(&g, &Budget::default()).unwrap();
        assert_eq!((r.optimum, r.optimal), (1, true));
        assert_eq!(r.witness, Strategy::id([0, 2]));
        assert_eq!(brute_oracle(&g, Mode::Id).unwrap(), 1);
        assert_eq!(exact_relaxed_confusion(&g, &Budget::default()).unwrap().optimum, 0);
    }

    #[test]
    fn gn_and_ktt() {
        let b = Budget::default();
        assert_eq!(exact_confusion(&gen_gn(6).unwrap(), &b).unwrap().optimum, 1);
        assert_eq!(exact_confusion(&gen_gn(8).unwrap(), &b).unwrap().optimum, 2);
        let k33 = gen_ktt_tau(3, false).unwrap();
        let r = exact_confusion(&k33, &b).unwrap();
        assert_eq!(r.optimum, 1);
        assert_eq!(run(&k33, &r.witness).unwrap().confused_count(), 1);
        assert_eq!(exact_relaxed_confusion(&k33, &b).unwrap().optimum, 1);
        assert_eq!(relaxed_via_class(&k33, &b).unwrap().optimum, 1);
    }

    #[test]
    fn witness_replays_in_relaxed_mode() {
        let g = gen_gn(6).unwrap();
        let r = exact_relaxed_confusion(&g, &Budget::default()).unwrap();
        assert_eq!(r.optimum, 0);
        assert_eq!(r.witness.placements[0].info, Info::A);
        let t = run(&g, &r.witness).unwrap();
        assert!(t.is_complete());
        assert_eq!(t.confused_count(), 0);
        let via = relaxed_via_class(&g, &Budget::default()).unwrap();
        assert_eq!(run(&g, &via.witness).unwrap().confused_count(), 0);
    }

    #[test]
    fn budget_exhaustion_degrades_to_upper_bound() {
        let g = gen_gn(10).unwrap();
        let r = exact_confusion(&g, &Budget::default().with_nodes(0)).unwrap();
        assert!(!r.optimal);
        let t = run(&g, &r.witness).unwrap();
        assert!(t.is_complete());
        assert_eq!(t.confused_count(), r.optimum);
        assert!(r.optimum >= 3);
    }

    #[test]
    fn caps() {
        let big = crate::graph::SignedGraph::edgeless(16);
        assert!(matches!(exact_confusion(&big, &Budget::default()), Err(Error::TooLarge { .. })));
        assert!(matches!(brute_oracle(&big, Mode::Id), Err(Error::TooLarge { .. })));
        assert!(relaxed_via_class(&crate::graph::SignedGraph::edgeless(13), &Budget::default()).is_err());
    }

    #[test]
    fn min_steps_small() {
        let k5 = crate::graph::SignedGraph::all_positive(
            5,
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))),
        )
        .unwrap();
        assert_eq!(min_steps(&k5, Mode::Id, &Budget::default()).unwrap().steps, 1);
        let single = crate::graph::SignedGraph::edgeless(1);
        assert_eq!(min_steps(&single, Mode::Id, &Budget::default()).unwrap().steps, 1);
        let path = gen_cycle(&[P; 6]).unwrap();
        let r = min_steps(&path, Mode::Id, &Budget::default()).unwrap();
        assert!(r.optimal);
        assert!(run(&path, &r.witness).unwrap().is_complete());
        assert_eq!(r.steps, 2);
    }

    #[test]
    fn empty_graph() {
        let g = crate::graph::SignedGraph::edgeless(0);
        let r = exact_confusion(&g, &Budget::default()).unwrap();
        assert_eq!((r.optimum, r.witness.len()), (0, 0));
        assert_eq!(min_steps(&g, Mode::Id, &Budget::default()).unwrap().steps, 0);
    }

    #[test]
    fn vertex_mask_bits() {
        assert_eq!(vertex_mask([0, 3]), 0b1001);
    }
}
