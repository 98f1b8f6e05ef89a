//! Claim registry and conjecture explorer.
//!
//! Each registered claim regenerates its instances from seeds or family
//! parameters, solves them, and compares the result against the closed
//! form. A claim over several instances passes when every instance does.
//! Two different propositions share the label `prop_H_n` in the source
//! text (the max-degree bounds and the layered-family values); here they
//! are the `maxdeg_*` and `gst_*` claims respectively.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::engine::{mirror_trace, run, step, Info, Label, LabelState, Mode, Placement, Strategy};
use crate::error::{Error, Result};
use crate::families::{gen_cycle, gen_gn, FamilySpec};
use crate::graph::{EdgeKey, Frustration, Sign, SignedGraph, SwitchSet, DEFAULT_FRUSTRATION_CAP};
use crate::io::{graph_to_json, report_to_value};
use crate::solver::{
    exact_confusion, exact_relaxed_confusion, min_steps, relaxed_via_class, Budget, SolveReport,
};
use crate::strategies::{circuit_strategy, rescue_priority, tree_frontier};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// The relation a claim expects of its observed count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "relation", rename_all = "kebab-case")]
pub enum Expected {
    Equals { value: i64 },
    AtMost { value: i64 },
    OneOf { values: Vec<i64> },
    /// Observed is 1 when the predicate holds and 0 otherwise.
    Holds,
    /// Observed is the number of instances that passed.
    AllHold { instances: i64 },
}

impl Expected {
    pub fn accepts(&self, observed: i64) -> bool {
        match self {
            Expected::Equals { value } => observed == *value,
            Expected::AtMost { value } => observed <= *value,
            Expected::OneOf { values } => values.contains(&observed),
            Expected::Holds => observed == 1,
            Expected::AllHold { instances } => observed == *instances,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub instance: Value,
    pub statement: String,
    pub expected: Expected,
    pub observed: Option<i64>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub repro: String,
}

/// Optional overrides for a claim's default instances.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimParams {
    pub n: Option<usize>,
    pub t: Option<usize>,
    pub seed: Option<u64>,
    pub count: Option<usize>,
}

impl ClaimParams {
    fn flags(&self) -> String {
        let mut out = String::new();
        if let Some(n) = self.n {
            out.push_str(&format!(" --n {n}"));
        }
        if let Some(t) = self.t {
            out.push_str(&format!(" --t {t}"));
        }
        if let Some(seed) = self.seed {
            out.push_str(&format!(" --seed {seed}"));
        }
        if let Some(count) = self.count {
            out.push_str(&format!(" --count {count}"));
        }
        out
    }

    fn ns(&self, default: &[usize]) -> Vec<usize> {
        self.n.map_or_else(|| default.to_vec(), |n| vec![n])
    }

    fn ts(&self, default: &[usize]) -> Vec<usize> {
        self.t.map_or_else(|| default.to_vec(), |t| vec![t])
    }

    fn seed_or(&self, default: u64) -> u64 {
        self.seed.unwrap_or(default)
    }

    fn count_or(&self, default: usize) -> usize {
        self.count.unwrap_or(default)
    }
}

struct Check {
    instance: Value,
    expected: Expected,
    /// `None` when the solver ran out of budget.
    observed: Option<i64>,
}

impl Check {
    fn eq(instance: Value, value: i64, observed: Option<i64>) -> Self {
        Self { instance, expected: Expected::Equals { value }, observed }
    }

    fn le(instance: Value, value: i64, observed: Option<i64>) -> Self {
        Self { instance, expected: Expected::AtMost { value }, observed }
    }

    fn holds(instance: Value, ok: bool) -> Self {
        Self { instance, expected: Expected::Holds, observed: Some(i64::from(ok)) }
    }

    fn passed(&self) -> Option<bool> {
        self.observed.map(|o| self.expected.accepts(o))
    }
}

type ClaimFn = fn(&ClaimParams, &Budget) -> Result<Vec<Check>>;

struct Claim {
    id: &'static str,
    statement: &'static str,
    run: ClaimFn,
}

const CLAIMS: &[Claim] = &[
    Claim { id: "balanced_attained", statement: "a balanced graph attains C = n/2 - 2 for n in {4, 6, 8}", run: balanced_attained },
    Claim { id: "balanced_bound", statement: "connected balanced graphs with n >= 4 have C <= n/2 - 2", run: balanced_bound },
    Claim { id: "burning_relation", statement: "on all-positive paths and circuits the minimum ID step count is b(G) - 1 or b(G)", run: burning_relation },
    Claim { id: "c5_allneg", statement: "C(C_5, -) = 1", run: c5_allneg },
    Claim { id: "circuit_cases", statement: "every signed circuit other than (C_5, -) has C = 0", run: circuit_cases },
    Claim { id: "circuit_policy", statement: "the residue-class circuit strategy leaves no confused vertex except on (C_5, -)", run: circuit_policy },
    Claim { id: "class_minimum", statement: "C_r equals the minimum of C over the switching class", run: class_minimum },
    Claim { id: "cor_balanced_antibalanced", statement: "balanced or antibalanced graphs have C_r = 0", run: cor_balanced_antibalanced },
    Claim { id: "cor_transfer_circuit", statement: "circuits have C_r = 0", run: cor_transfer_circuit },
    Claim { id: "cor_transfer_frustration", statement: "frustration index at most 1 implies C_r = 0", run: cor_transfer_frustration },
    Claim { id: "cor_transfer_maxdeg", statement: "C_r <= n - 2 - Delta for Delta >= 3 (0 when Delta >= n - 2), attained by (K_tt, tau_t)", run: cor_transfer_maxdeg },
    Claim { id: "cor_transfer_ratio", statement: "C_r <= (1 - 2/Delta) n for Delta >= 3", run: cor_transfer_ratio },
    Claim { id: "cor_transfer_tree", statement: "trees have C_r = 0", run: cor_transfer_tree },
    Claim { id: "frustration_family", statement: "l(K_tt, tau_t) = t for t >= 4", run: frustration_family },
    Claim { id: "frustration_oracle", statement: "the switching enumeration of l agrees with edge-deletion enumeration", run: frustration_oracle },
    Claim { id: "frustration_ratio", statement: "C_r / l on (K_tt, tau_t) equals (t - 2)/t and strictly increases in t >= 4", run: frustration_ratio },
    Claim { id: "gn_balance", statement: "(G_n, sigma_n) is balanced and (G_n, -sigma_n) is antibalanced", run: gn_balance },
    Claim { id: "gn_confusion", statement: "C(G_n, sigma_n) = C(G_n, -) = n/2 - 2", run: gn_confusion },
    Claim { id: "gn_zero", statement: "C(G_n, -sigma_n) = C(G_n, +) = 0", run: gn_zero },
    Claim { id: "gst_mixed_flags", statement: "members of the s = 5 layered family with mixed layer signs share the value 3t - 4", run: gst_mixed_flags },
    Claim { id: "gst_s4", statement: "layered family with s = 4 has C = n/2 - 3", run: gst_s4 },
    Claim { id: "gst_s5", statement: "layered family with s = 5 has C = 3n/5 - 4", run: gst_s5 },
    Claim { id: "gst_s6", statement: "layered family with s = 6 has C = n/2 - 4 (construction plus forced second placement)", run: gst_s6 },
    Claim { id: "ktt_confusion", statement: "C(K_tt, tau_t) = t - 2", run: ktt_confusion },
    Claim { id: "lemma_switch_invariance", statement: "C_r is invariant under switching", run: lemma_switch_invariance },
    Claim { id: "maxdeg_attained", statement: "(G_n, sigma_n) attains C = n - 2 - Delta", run: maxdeg_attained },
    Claim { id: "maxdeg_bound", statement: "C <= n - 2 - Delta when 3 <= Delta < n - 2", run: maxdeg_bound },
    Claim { id: "maxdeg_full", statement: "C = 0 when Delta >= n - 2", run: maxdeg_full },
    Claim { id: "maxdeg_ratio", statement: "C and the rescue-priority trace stay within (1 - 2/Delta) n for Delta >= 3", run: maxdeg_ratio },
    Claim { id: "negation_invariance", statement: "C_r(G, sigma) = C_r(G, -sigma) and mirrored optimal traces replay on the negation", run: negation_invariance },
    Claim { id: "relaxed_families", statement: "C_r on the layered families (s = 4, 5) and on (K_tt, tau_t) matches the ID values", run: relaxed_families },
    Claim { id: "relaxed_gst_s6", statement: "layered family with s = 6 has C_r = n/2 - 4 (construction plus forced second placement)", run: relaxed_gst_s6 },
    Claim { id: "tree_zero", statement: "trees have C = 0, reached by the frontier strategy", run: tree_zero },
];

/// Registered claim ids in sorted order.
pub fn claim_ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

fn find_claim(id: &str) -> Result<&'static Claim> {
    CLAIMS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

fn zero_budget(budget: &Budget) -> bool {
    budget.max_nodes == Some(0) || budget.max_time == Some(Duration::ZERO)
}

pub fn verify_claim(id: &str, params: &ClaimParams, budget: &Budget) -> Result<ClaimResult> {
    let claim = find_claim(id)?;
    Ok(evaluate(claim, params, budget))
}

/// Every registered claim at its default parameters, run concurrently and
/// returned in claim-id order.
pub fn run_suite(budget: &Budget) -> Vec<ClaimResult> {
    let params = ClaimParams::default();
    CLAIMS.par_iter().map(|c| evaluate(c, &params, budget)).collect()
}

fn evaluate(claim: &Claim, params: &ClaimParams, budget: &Budget) -> ClaimResult {
    let mut result = ClaimResult {
        claim_id: claim.id.to_string(),
        instance: serde_json::to_value(params).expect("params serialize"),
        statement: claim.statement.to_string(),
        expected: Expected::Holds,
        observed: None,
        status: Status::Skipped,
        reason: None,
        repro: format!("sigspread verify --claim {}{}", claim.id, params.flags()),
    };
    if zero_budget(budget) {
        result.reason = Some("zero budget".into());
        return result;
    }
    let checks = match (claim.run)(params, budget) {
        Ok(checks) => checks,
        Err(e @ Error::TooLarge { .. }) => {
            result.reason = Some(format!("skipped: {e}"));
            return result;
        }
        Err(e) => {
            result.status = Status::Fail;
            result.reason = Some(format!("error: {e}"));
            return result;
        }
    };
    if let [single] = checks.as_slice() {
        result.instance = single.instance.clone();
        result.expected = single.expected.clone();
        result.observed = single.observed;
        result.status = match single.passed() {
            Some(true) => Status::Pass,
            Some(false) => Status::Fail,
            None => Status::Skipped,
        };
        if result.status == Status::Skipped {
            result.reason = Some("solver budget exhausted".into());
        }
        return result;
    }
    let passed = checks.iter().filter(|c| c.passed() == Some(true)).count();
    let failed: Vec<&Check> = checks.iter().filter(|c| c.passed() == Some(false)).collect();
    let budget_hit = checks.iter().any(|c| c.observed.is_none());
    result.instance = Value::Array(checks.iter().map(|c| c.instance.clone()).collect());
    result.expected = Expected::AllHold { instances: checks.len() as i64 };
    result.observed = Some(passed as i64);
    result.status = if !failed.is_empty() {
        let first = failed[0];
        result.reason = Some(format!(
            "{} of {} instances failed; first: {} expected {:?}, observed {:?}",
            failed.len(),
            checks.len(),
            first.instance,
            first.expected,
            first.observed
        ));
        Status::Fail
    } else if budget_hit {
        result.reason = Some("solver budget exhausted on some instances".into());
        Status::Skipped
    } else {
        Status::Pass
    };
    result
}

fn solve(g: &SignedGraph, mode: Mode, budget: &Budget) -> Result<SolveReport> {
    match mode {
        Mode::Id => exact_confusion(g, budget),
        Mode::Relaxed => exact_relaxed_confusion(g, budget),
    }
}

fn value(g: &SignedGraph, mode: Mode, budget: &Budget) -> Result<Option<i64>> {
    let r = solve(g, mode, budget)?;
    Ok(r.optimal.then_some(r.optimum as i64))
}

fn spec_json(spec: &FamilySpec) -> Value {
    serde_json::to_value(spec).expect("family spec serializes")
}

fn floor(r: Ratio<i64>) -> i64 {
    r.floor().to_integer()
}

fn all_signs(k: usize) -> impl Iterator<Item = Vec<Sign>> {
    (0..1u32 << k).map(move |mask| {
        (0..k)
            .map(|i| if mask >> i & 1 == 1 { Sign::Negative } else { Sign::Positive })
            .collect()
    })
}

fn is_c5_negative(signs: &[Sign]) -> bool {
    signs.len() == 5 && signs.iter().all(|s| s.is_negative())
}

fn flag_vector(k: usize) -> Vec<i64> {
    vec![-1; k]
}

/// Seeded random connected graphs with `n` cycling through `ns`.
pub fn connected_corpus(seed: u64, count: usize, ns: &[usize], edge_prob: f64) -> Vec<FamilySpec> {
    (0..count)
        .map(|i| FamilySpec::RandomConnected {
            seed: seed + i as u64,
            n: ns[i % ns.len()],
            edge_prob,
            neg_prob: 0.5,
        })
        .collect()
}

/// Random connected graphs made balanced: sampled all-positive, then
/// switched at a seeded random vertex set. With `anti` the signature is
/// negated afterwards.
pub fn balanced_corpus(seed: u64, count: usize, ns: &[usize], anti: bool) -> Result<Vec<(Value, SignedGraph)>> {
    (0..count)
        .map(|i| {
            let n = ns[i % ns.len()];
            let base = FamilySpec::RandomConnected { seed: seed + i as u64, n, edge_prob: 0.5, neg_prob: 0.0 };
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(31) + i as u64);
            let x: SwitchSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            let g = base.generate()?.switch(&x)?;
            let g = if anti { g.negate_signature() } else { g };
            let instance = json!({ "base": spec_json(&base), "switch": x, "negated": anti });
            Ok((instance, g))
        })
        .collect()
}

/// Connected graphs with `n` in `5..=10` and maximum degree at least 3.
fn maxdeg_corpus(seed: u64, count: usize) -> Result<Vec<(FamilySpec, SignedGraph)>> {
    let probs = [0.3, 0.45, 0.6, 0.8];
    let mut out = Vec::with_capacity(count);
    let mut i = 0u64;
    while out.len() < count {
        let spec = FamilySpec::RandomConnected {
            seed: seed + i,
            n: 5 + (i as usize % 6),
            edge_prob: probs[(i as usize / 6) % probs.len()],
            neg_prob: 0.5,
        };
        i += 1;
        let g = spec.generate()?;
        if g.max_degree() >= 3 {
            out.push((spec, g));
        }
    }
    Ok(out)
}

fn trees(seed: u64, count: usize) -> Vec<FamilySpec> {
    (0..count)
        .map(|i| FamilySpec::RandomTree { seed: seed + i as u64, n: 4 + (i * 3) % 7, neg_prob: 0.5 })
        .collect()
}

fn cross_check_corpus(params: &ClaimParams) -> Vec<FamilySpec> {
    connected_corpus(params.seed_or(3100), params.count_or(25), &[4, 5, 6, 7, 8], 0.5)
}

/// Minimum burning number by brute force over ball coverings: the
/// smallest `k` with centres `x_1 .. x_k` whose balls of radius
/// `k - 1, .., 0` cover every vertex.
pub fn burning_number(g: &SignedGraph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    if n > 64 {
        return Err(Error::TooLarge { what: "burning number", n, max: 64 });
    }
    if !g.is_connected() {
        return Err(Error::precondition("burning number needs a connected graph"));
    }
    let dist: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in g.neighbors(u) {
                    if d[w] == usize::MAX {
                        d[w] = d[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect();
    let ball = |v: usize, r: usize| -> u64 {
        (0..n).filter(|&w| dist[v][w] <= r).fold(0, |m, w| m | 1 << w)
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    fn cover(balls: &[Vec<u64>], k: usize, i: usize, covered: u64, full: u64) -> bool {
        if covered == full {
            return true;
        }
        if i == k {
            return false;
        }
        let r = k - 1 - i;
        balls.iter().any(|b| cover(balls, k, i + 1, covered | b[r], full))
    }
    for k in 1..=n {
        let balls: Vec<Vec<u64>> = (0..n).map(|v| (0..k).map(|r| ball(v, r)).collect()).collect();
        if cover(&balls, k, 0, 0, full) {
            return Ok(k);
        }
    }
    unreachable!("n balls of radius 0 cover a graph on n vertices")
}

/// Frustration index by deleting edge sets of increasing size until the
/// remainder is balanced. Independent of the switching enumeration.
pub fn frustration_by_deletion(g: &SignedGraph) -> Result<usize> {
    let edges: Vec<EdgeKey> = g.topology();
    let m = edges.len();
    if m > 40 {
        return Err(Error::TooLarge { what: "deletion oracle", n: m, max: 40 });
    }
    for k in 0..=m {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let removed: BTreeSet<EdgeKey> = idx.iter().map(|&i| edges[i]).collect();
            if g.without_edges(&removed)?.is_balanced().is_some() {
                return Ok(k);
            }
            // next k-combination of 0..m
            let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + m - k) else { break };
            idx[pos] += 1;
            for j in pos + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("deleting every edge leaves a balanced graph")
}

fn gn_balance(p: &ClaimParams, _: &Budget) -> Result<Vec<Check>> {
    p.ns(&[6, 8, 10])
        .into_iter()
        .map(|n| {
            let g = gen_gn(n)?;
            let ok = g.is_balanced().is_some() && g.negate_signature().is_antibalanced();
            Ok(Check::holds(json!({ "family": "gn", "n": n }), ok))
        })
        .collect()
}

fn gn_confusion(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in p.ns(&[6, 8, 10]) {
        let g = gen_gn(n)?;
        let expected = n as i64 / 2 - 2;
        out.push(Check::eq(json!({ "family": "gn", "n": n, "signature": "sigma" }), expected, value(&g, Mode::Id, b)?));
        let neg = g.map_signs(|_| Sign::Negative);
        out.push(Check::eq(json!({ "family": "gn", "n": n, "signature": "-" }), expected, value(&neg, Mode::Id, b)?));
    }
    Ok(out)
}

fn gn_zero(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in p.ns(&[6, 8, 10]) {
        let g = gen_gn(n)?;
        out.push(Check::eq(
            json!({ "family": "gn", "n": n, "signature": "-sigma" }),
            0,
            value(&g.negate_signature(), Mode::Id, b)?,
        ));
        let pos = g.map_signs(|_| Sign::Positive);
        out.push(Check::eq(json!({ "family": "gn", "n": n, "signature": "+" }), 0, value(&pos, Mode::Id, b)?));
    }
    Ok(out)
}

fn balanced_attained(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    p.ns(&[4, 6, 8])
        .into_iter()
        .map(|n| {
            let (instance, g) = if n == 4 {
                let signs = [Sign::Positive, Sign::Negative, Sign::Positive, Sign::Negative];
                (json!({ "kind": "cycle", "signs": [1, -1, 1, -1] }), gen_cycle(&signs)?)
            } else {
                let spec = FamilySpec::Gn { n, negated: false };
                (spec_json(&spec), spec.generate()?)
            };
            Ok(Check::eq(instance, n as i64 / 2 - 2, value(&g, Mode::Id, b)?))
        })
        .collect()
}

fn balanced_bound(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let ns: Vec<usize> = p.ns(&[4, 5, 6, 7, 8, 9, 10]);
    balanced_corpus(p.seed_or(2100), p.count_or(10), &ns, false)?
        .into_iter()
        .map(|(instance, g)| {
            let bound = floor(Ratio::new(g.n() as i64, 2) - 2);
            Ok(Check::le(instance, bound, value(&g, Mode::Id, b)?))
        })
        .collect()
}

fn tree_zero(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    trees(p.seed_or(1100), p.count_or(5))
        .into_iter()
        .map(|spec| {
            let g = spec.generate()?;
            let policy = run(&g, &tree_frontier(&g)?)?.confused_count() as i64;
            let exact = value(&g, Mode::Id, b)?;
            Ok(Check::eq(spec_json(&spec), 0, exact.map(|e| e.max(policy))))
        })
        .collect()
}

fn c5_allneg(_: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let spec = FamilySpec::Cycle { signs: flag_vector(5) };
    Ok(vec![Check::eq(spec_json(&spec), 1, value(&spec.generate()?, Mode::Id, b)?)])
}

fn circuit_cases(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let ks = p.n.map_or_else(|| (3..=8).collect(), |n| vec![n]);
    ks.into_iter()
        .map(|k| {
            let mut worst = Some(0);
            for signs in all_signs(k).filter(|s| !is_c5_negative(s)) {
                let v = value(&gen_cycle(&signs)?, Mode::Id, b)?;
                worst = match (worst, v) {
                    (Some(w), Some(v)) => Some(w.max(v)),
                    _ => None,
                };
            }
            Ok(Check::eq(json!({ "family": "cycle", "k": k, "signatures": "all except (C_5, -)" }), 0, worst))
        })
        .collect()
}

fn circuit_policy(p: &ClaimParams, _: &Budget) -> Result<Vec<Check>> {
    let ks = p.n.map_or_else(|| (3..=12).collect(), |n| vec![n]);
    ks.into_iter()
        .map(|k| {
            let mut ok = true;
            for signs in all_signs(k) {
                let g = gen_cycle(&signs)?;
                let c = run(&g, &circuit_strategy(&g)?)?;
                ok &= c.is_complete() && c.confused_count() == usize::from(is_c5_negative(&signs));
            }
            Ok(Check::holds(json!({ "family": "cycle", "k": k, "signatures": "all" }), ok))
        })
        .collect()
}

fn maxdeg_full(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (spec, g) in maxdeg_corpus(p.seed_or(4100), p.count_or(40))? {
        if g.max_degree() + 2 >= g.n() {
            out.push(Check::eq(spec_json(&spec), 0, value(&g, Mode::Id, b)?));
        }
    }
    // complete graphs with every signature pattern on K_5 would be 1024
    // instances; two fixed ones suffice next to the random corpus
    for sign in [Sign::Positive, Sign::Negative] {
        let g = SignedGraph::uniform(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))), sign)?;
        out.push(Check::eq(json!({ "family": "complete", "n": 5, "sign": sign.as_i64() }), 0, value(&g, Mode::Id, b)?));
    }
    Ok(out)
}

fn maxdeg_bound(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let n = p.n.unwrap_or(9);
    let mut seed = p.seed_or(5100);
    let count = p.count_or(10);
    let mut tries = 0;
    while out.len() < count {
        let spec = FamilySpec::RandomConnected { seed, n, edge_prob: 0.3, neg_prob: 0.5 };
        seed += 1;
        tries += 1;
        if tries > 100 * count {
            return Err(Error::precondition(format!("no graphs with 3 <= Delta < n - 2 found at n = {n}")));
        }
        let g = spec.generate()?;
        let delta = g.max_degree();
        if delta >= 3 && delta + 2 < n {
            out.push(Check::le(spec_json(&spec), (n - 2 - delta) as i64, value(&g, Mode::Id, b)?));
        }
    }
    Ok(out)
}

fn maxdeg_attained(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    p.ns(&[6, 8, 10])
        .into_iter()
        .map(|n| {
            let g = gen_gn(n)?;
            let expected = (n - 2 - g.max_degree()) as i64;
            Ok(Check::eq(spec_json(&FamilySpec::Gn { n, negated: false }), expected, value(&g, Mode::Id, b)?))
        })
        .collect()
}

fn ratio_bound(g: &SignedGraph) -> i64 {
    let n = g.n() as i64;
    floor((Ratio::from(1) - Ratio::new(2, g.max_degree() as i64)) * n)
}

fn maxdeg_ratio(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (spec, g) in maxdeg_corpus(p.seed_or(4100), p.count_or(40))? {
        let bound = ratio_bound(&g);
        let policy = run(&g, &rescue_priority(&g)?)?.confused_count() as i64;
        out.push(Check::le(json!({ "instance": spec_json(&spec), "strategy": "rescue-priority" }), bound, Some(policy)));
        out.push(Check::le(spec_json(&spec), bound, value(&g, Mode::Id, b)?));
    }
    Ok(out)
}

fn gst_value(s: usize, t: usize, mode: Mode, b: &Budget) -> Result<Check> {
    let spec = FamilySpec::Gst { s, t, layer_negated: vec![false; s] };
    let t = t as i64;
    let expected = match s {
        4 => 2 * t - 3,
        5 | 6 => 3 * t - 4,
        _ => return Err(Error::precondition(format!("no closed form for s = {s}"))),
    };
    Ok(Check::eq(spec_json(&spec), expected, value(&spec.generate()?, mode, b)?))
}

fn gst_s4(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    p.ts(&[3]).into_iter().map(|t| gst_value(4, t, Mode::Id, b)).collect()
}

fn gst_s5(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    p.ts(&[3]).into_iter().map(|t| gst_value(5, t, Mode::Id, b)).collect()
}

/// The two-placement construction and the exhaustive two-step lower bound
/// for the `s = 6` layered family. The lower bound tries every first and
/// every second placement (both signs in rID mode) and keeps the smallest
/// confused count after step two, which can only grow afterwards.
fn gst_s6_checks(t: usize, mode: Mode) -> Result<Vec<Check>> {
    let spec = FamilySpec::Gst { s: 6, t, layer_negated: vec![false; 6] };
    let g = spec.generate()?;
    let expected = 3 * t as i64 - 4;
    let construction = Strategy { mode, placements: vec![Placement::a(0), Placement::a(2 * t + 1)] };
    let trace = run(&g, &construction)?;
    let built = trace.is_complete().then(|| trace.confused_count() as i64);
    let infos: &[Info] = match mode {
        Mode::Id => &[Info::A],
        Mode::Relaxed => &[Info::A, Info::NegA],
    };
    let empty = LabelState::all_zero(g.n());
    let lower = (0..g.n())
        .into_par_iter()
        .flat_map_iter(|v1| infos.iter().map(move |&i1| Placement { vertex: v1, info: i1 }))
        .map(|p1| {
            let s1 = step(&g, &empty, p1).expect("empty state");
            s1.vertices_with(Label::Zero)
                .into_iter()
                .flat_map(|v2| infos.iter().map(move |&i2| Placement { vertex: v2, info: i2 }))
                .map(|p2| step(&g, &s1, p2).expect("uninformed").count(Label::C))
                .min()
                .unwrap_or(usize::MAX)
        })
        .min()
        .expect("non-empty graph") as i64;
    Ok(vec![
        Check::eq(json!({ "instance": spec_json(&spec), "part": "construction", "placements": construction.placements }), expected, built),
        Check::eq(json!({ "instance": spec_json(&spec), "part": "two-step lower bound" }), expected, Some(lower)),
    ])
}

fn gst_s6(p: &ClaimParams, _: &Budget) -> Result<Vec<Check>> {
    gst_s6_checks(p.t.unwrap_or(3), Mode::Id)
}

fn relaxed_gst_s6(p: &ClaimParams, _: &Budget) -> Result<Vec<Check>> {
    gst_s6_checks(p.t.unwrap_or(3), Mode::Relaxed)
}

fn gst_mixed_flags(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let t = p.t.unwrap_or(3);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed_or(6100));
    let mut out = Vec::new();
    while out.len() < p.count_or(2) {
        let flags: Vec<bool> = (0..5).map(|_| rng.gen_bool(0.5)).collect();
        if flags.iter().all(|&f| !f) {
            continue;
        }
        let spec = FamilySpec::Gst { s: 5, t, layer_negated: flags };
        out.push(Check::eq(spec_json(&spec), 3 * t as i64 - 4, value(&spec.generate()?, Mode::Id, b)?));
    }
    Ok(out)
}

fn ktt_confusion(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    p.ts(&[3, 4, 5])
        .into_iter()
        .map(|t| {
            let spec = FamilySpec::KttTau { t, negated: false };
            Ok(Check::eq(spec_json(&spec), t as i64 - 2, value(&spec.generate()?, Mode::Id, b)?))
        })
        .collect()
}

fn relaxed_families(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for t in p.ts(&[3]) {
        out.push(gst_value(4, t, Mode::Relaxed, b)?);
        out.push(gst_value(5, t, Mode::Relaxed, b)?);
    }
    for t in p.ts(&[3, 4]) {
        let spec = FamilySpec::KttTau { t, negated: false };
        out.push(Check::eq(spec_json(&spec), t as i64 - 2, value(&spec.generate()?, Mode::Relaxed, b)?));
    }
    Ok(out)
}

fn cor_balanced_antibalanced(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let ns = p.ns(&[4, 5, 6, 7, 8, 9, 10]);
    let count = p.count_or(10);
    let mut out = Vec::new();
    for anti in [false, true] {
        for (instance, g) in balanced_corpus(p.seed_or(7100), count, &ns, anti)? {
            out.push(Check::eq(instance, 0, value(&g, Mode::Relaxed, b)?));
        }
    }
    Ok(out)
}

fn cor_transfer_tree(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    trees(p.seed_or(1100), p.count_or(5))
        .into_iter()
        .map(|spec| Ok(Check::eq(spec_json(&spec), 0, value(&spec.generate()?, Mode::Relaxed, b)?)))
        .collect()
}

fn cor_transfer_circuit(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let ks = p.n.map_or_else(|| (3..=8).collect(), |n| vec![n]);
    ks.into_iter()
        .map(|k| {
            let mut worst = Some(0);
            for signs in all_signs(k) {
                let v = value(&gen_cycle(&signs)?, Mode::Relaxed, b)?;
                worst = match (worst, v) {
                    (Some(w), Some(v)) => Some(w.max(v)),
                    _ => None,
                };
            }
            Ok(Check::eq(json!({ "family": "cycle", "k": k, "signatures": "all" }), 0, worst))
        })
        .collect()
}

/// All-positive random graphs with one edge flipped negative, so the
/// frustration index is at most 1.
fn cor_transfer_frustration(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let seed = p.seed_or(8100);
    let mut out = Vec::new();
    for i in 0..p.count_or(10) {
        let base = FamilySpec::RandomConnected { seed: seed + i as u64, n: 4 + i % 6, edge_prob: 0.5, neg_prob: 0.0 };
        let g = base.generate()?;
        let flip = g.edges()[i * 7 % g.edge_count()].key();
        let g = g.map_signs(|e| if e.key() == flip { Sign::Negative } else { e.sign });
        let ell = g.frustration_index(DEFAULT_FRUSTRATION_CAP)?.value;
        let instance = json!({ "base": spec_json(&base), "negative_edge": [flip.0, flip.1], "frustration": ell });
        let observed = if ell <= 1 { value(&g, Mode::Relaxed, b)? } else { Some(-1) };
        out.push(Check::eq(instance, 0, observed));
    }
    Ok(out)
}

fn cor_transfer_maxdeg(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (spec, g) in maxdeg_corpus(p.seed_or(4100), p.count_or(40))? {
        let bound = g.n() as i64 - 2 - g.max_degree() as i64;
        out.push(Check::le(spec_json(&spec), bound.max(0), value(&g, Mode::Relaxed, b)?));
    }
    for t in [3, 4] {
        let spec = FamilySpec::KttTau { t, negated: false };
        let g = spec.generate()?;
        let bound = (g.n() - 2 - g.max_degree()) as i64;
        out.push(Check::eq(json!({ "instance": spec_json(&spec), "part": "attained" }), bound, value(&g, Mode::Relaxed, b)?));
    }
    Ok(out)
}

fn cor_transfer_ratio(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    maxdeg_corpus(p.seed_or(4100), p.count_or(40))?
        .into_iter()
        .map(|(spec, g)| Ok(Check::le(spec_json(&spec), ratio_bound(&g), value(&g, Mode::Relaxed, b)?)))
        .collect()
}

fn lemma_switch_invariance(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for spec in cross_check_corpus(p) {
        let g = spec.generate()?;
        let Some(base) = value(&g, Mode::Relaxed, b)? else {
            out.push(Check::eq(spec_json(&spec), 0, None));
            continue;
        };
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed_or(3100) ^ 0x5eed);
        for _ in 0..5 {
            let x: SwitchSet = (0..g.n()).filter(|_| rng.gen_bool(0.5)).collect();
            let observed = value(&g.switch(&x)?, Mode::Relaxed, b)?;
            out.push(Check::eq(json!({ "instance": spec_json(&spec), "switch": x }), base, observed));
        }
    }
    Ok(out)
}

fn class_minimum(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    cross_check_corpus(p)
        .into_iter()
        .map(|spec| {
            let g = spec.generate()?;
            let via = relaxed_via_class(&g, b)?;
            let direct = value(&g, Mode::Relaxed, b)?;
            Ok(match direct {
                Some(d) => Check::eq(spec_json(&spec), d, via.optimal.then_some(via.optimum as i64)),
                None => Check::eq(spec_json(&spec), 0, None),
            })
        })
        .collect()
}

fn negation_invariance(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for spec in cross_check_corpus(p) {
        let g = spec.generate()?;
        let neg = g.negate_signature();
        let report = solve(&g, Mode::Relaxed, b)?;
        if !report.optimal {
            out.push(Check::eq(spec_json(&spec), 0, None));
            continue;
        }
        let optimum = report.optimum as i64;
        out.push(Check::eq(json!({ "instance": spec_json(&spec), "part": "value" }), optimum, value(&neg, Mode::Relaxed, b)?));
        let trace = run(&g, &report.witness)?;
        let mirrored = mirror_trace(&trace)?;
        let replayed = run(&neg, &mirrored.strategy)?;
        let ok = mirrored.graph == neg
            && replayed == mirrored
            && replayed.is_complete()
            && replayed.confused() == trace.confused();
        out.push(Check::holds(json!({ "instance": spec_json(&spec), "part": "mirror" }), ok));
    }
    Ok(out)
}

/// The family starts at `t = 4`: for `t = 3` the four-circuits used in
/// the lower bound share edges and `l(K_33, tau_3) = 2`.
fn frustration_family(p: &ClaimParams, _: &Budget) -> Result<Vec<Check>> {
    p.ts(&[4, 5, 6])
        .into_iter()
        .map(|t| {
            let spec = FamilySpec::KttTau { t, negated: false };
            let ell = spec.generate()?.frustration_index(DEFAULT_FRUSTRATION_CAP)?.value;
            Ok(Check::eq(spec_json(&spec), t as i64, Some(ell as i64)))
        })
        .collect()
}

fn frustration_oracle(p: &ClaimParams, _: &Budget) -> Result<Vec<Check>> {
    cross_check_corpus(p)
        .into_iter()
        .map(|spec| {
            let g = spec.generate()?;
            let ell = g.frustration_index(DEFAULT_FRUSTRATION_CAP)?.value as i64;
            Ok(Check::eq(spec_json(&spec), frustration_by_deletion(&g)? as i64, Some(ell)))
        })
        .collect()
}

fn frustration_ratio(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut prev: Option<Ratio<i64>> = None;
    for t in p.ts(&[4, 5, 6]) {
        let spec = FamilySpec::KttTau { t, negated: false };
        let g = spec.generate()?;
        let ell = g.frustration_index(DEFAULT_FRUSTRATION_CAP)?.value as i64;
        let Some(cr) = value(&g, Mode::Relaxed, b)? else {
            out.push(Check::holds(spec_json(&spec), false));
            out.last_mut().expect("just pushed").observed = None;
            continue;
        };
        let ratio = Ratio::new(cr, ell);
        let ok = ratio == Ratio::new(t as i64 - 2, t as i64) && ratio < Ratio::from(1) && prev.is_none_or(|q| q < ratio);
        prev = Some(ratio);
        out.push(Check::holds(json!({ "instance": spec_json(&spec), "ratio": ratio.to_string() }), ok));
    }
    Ok(out)
}

fn burning_relation(p: &ClaimParams, b: &Budget) -> Result<Vec<Check>> {
    let ns = p.n.map_or_else(|| (4..=16).collect(), |n| vec![n]);
    let budget = b.with_max_n(b.max_n.max(16));
    let mut out = Vec::new();
    for n in ns {
        let path = SignedGraph::all_positive(n, (0..n - 1).map(|i| (i, i + 1)))?;
        let cycle = SignedGraph::all_positive(n, (0..n).map(|i| (i, (i + 1) % n)))?;
        for (name, g) in [("path", path), ("cycle", cycle)] {
            let burn = burning_number(&g)? as i64;
            let steps = min_steps(&g, Mode::Id, &budget)?;
            out.push(Check {
                instance: json!({ "family": name, "n": n, "sign": 1, "burning_number": burn }),
                expected: Expected::OneOf { values: vec![burn - 1, burn] },
                observed: steps.optimal.then_some(steps.steps as i64),
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conjecture {
    /// `C <= ceil(3n/5 - 4)`.
    Conj1,
    /// `C_r <= min(l, ceil(3n/5 - 4))`.
    Conj2,
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "1" | "conj1" => Ok(Conjecture::Conj1),
            "2" | "conj2" => Ok(Conjecture::Conj2),
            _ => Err(Error::Parse(format!("unknown conjecture `{s}` (expected conj1 or conj2)"))),
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjecture::Conj1 => "conj1",
            Conjecture::Conj2 => "conj2",
        })
    }
}

/// `ceil(3n/5 - 4)`.
pub fn conjecture_bound(n: usize) -> i64 {
    (Ratio::new(3 * n as i64, 5) - 4).ceil().to_integer()
}

/// Which graphs the explorer visits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    /// Family instances up to this order.
    pub family_max_n: usize,
    pub random_count: usize,
    /// Random connected graphs have order `3..=random_max_n`.
    pub random_max_n: usize,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        Self { family_max_n: 12, random_count: 100, random_max_n: 8, seed: 9100 }
    }
}

impl CorpusSpec {
    pub fn instances(&self) -> Vec<FamilySpec> {
        let max = self.family_max_n;
        let mut out = Vec::new();
        for n in (6..=max).step_by(2) {
            for negated in [false, true] {
                out.push(FamilySpec::Gn { n, negated });
            }
        }
        for t in (3..).take_while(|t| 2 * t <= max) {
            for negated in [false, true] {
                out.push(FamilySpec::KttTau { t, negated });
            }
        }
        for s in 3..=6 {
            for t in (3..).take_while(|t| s * t <= max) {
                out.push(FamilySpec::Gst { s, t, layer_negated: vec![false; s] });
                out.push(FamilySpec::Gst { s, t, layer_negated: (0..s).map(|i| i % 2 == 1).collect() });
            }
        }
        for k in 3..=max {
            out.push(FamilySpec::Cycle { signs: vec![-1; k] });
            out.push(FamilySpec::Cycle { signs: vec![1; k] });
            out.push(FamilySpec::Cycle { signs: (0..k).map(|i| if i == 0 { -1 } else { 1 }).collect() });
        }
        for len in 1..max {
            out.push(FamilySpec::Path { signs: (0..len).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect() });
        }
        for i in 0..5 {
            out.push(FamilySpec::RandomTree { seed: self.seed + i, n: max, neg_prob: 0.5 });
        }
        if self.random_max_n >= 3 {
            let ns: Vec<usize> = (3..=self.random_max_n).collect();
            out.extend(connected_corpus(self.seed, self.random_count, &ns, 0.5));
        }
        out
    }
}

/// Everything needed to reproduce a counterexample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub instance: FamilySpec,
    pub graph: Value,
    pub report: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frustration: Option<Frustration>,
    pub bound: i64,
    pub observed: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SkippedInstance {
    pub instance: FamilySpec,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture: Conjecture,
    pub corpus: CorpusSpec,
    pub checked: usize,
    pub skipped: Vec<SkippedInstance>,
    pub violations: Vec<Violation>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

enum Outcome {
    Ok,
    Skipped(String),
    Violated(Box<Violation>),
}

fn explore_one(which: Conjecture, spec: &FamilySpec, budget: &Budget) -> Result<Outcome> {
    let g = spec.generate()?;
    let mode = match which {
        Conjecture::Conj1 => Mode::Id,
        Conjecture::Conj2 => Mode::Relaxed,
    };
    let report = match solve(&g, mode, budget) {
        Ok(r) => r,
        Err(e @ Error::TooLarge { .. }) => return Ok(Outcome::Skipped(e.to_string())),
        Err(e) => return Err(e),
    };
    let frustration = match which {
        Conjecture::Conj1 => None,
        Conjecture::Conj2 => Some(g.frustration_index(DEFAULT_FRUSTRATION_CAP)?),
    };
    let mut bound = conjecture_bound(g.n());
    if let Some(f) = &frustration {
        bound = bound.min(f.value as i64);
    }
    let observed = report.optimum as i64;
    if observed <= bound {
        // an upper bound within the conjectured bound settles the instance
        return Ok(Outcome::Ok);
    }
    if !report.optimal {
        return Ok(Outcome::Skipped("solver budget exhausted above the bound".into()));
    }
    Ok(Outcome::Violated(Box::new(Violation {
        instance: spec.clone(),
        graph: serde_json::from_str(&graph_to_json(&g)).expect("graph json"),
        report: report_to_value(&report),
        frustration,
        bound,
        observed,
    })))
}

/// Evaluates the conjectured inequality on every corpus graph. A
/// violation is reported with the graph, the optimal witness and, for
/// the second conjecture, a minimum balancing edge set.
pub fn explore_conjecture(which: Conjecture, corpus: &CorpusSpec, budget: &Budget) -> Result<ConjectureReport> {
    let instances = corpus.instances();
    let outcomes = instances
        .par_iter()
        .map(|spec| explore_one(which, spec, budget))
        .collect::<Result<Vec<_>>>()?;
    let mut report = ConjectureReport {
        conjecture: which,
        corpus: corpus.clone(),
        checked: 0,
        skipped: Vec::new(),
        violations: Vec::new(),
    };
    for (spec, outcome) in instances.into_iter().zip(outcomes) {
        match outcome {
            Outcome::Ok => report.checked += 1,
            Outcome::Skipped(reason) => report.skipped.push(SkippedInstance { instance: spec, reason }),
            Outcome::Violated(v) => {
                report.checked += 1;
                report.violations.push(*v);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_ktt_tau;

    #[test]
    fn registry_is_sorted_and_unique() {
        let ids = claim_ids();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn unknown_claim_is_an_error() {
        let err = verify_claim("no_such_claim", &ClaimParams::default(), &Budget::default());
        assert_eq!(err, Err(Error::UnknownClaim("no_such_claim".into())));
    }

    #[test]
    fn single_instance_claims() {
        let b = Budget::default();
        let r = verify_claim("gn_confusion", &ClaimParams { n: Some(6), ..Default::default() }, &b).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.expected, Expected::AllHold { instances: 2 });
        let r = verify_claim("c5_allneg", &ClaimParams::default(), &b).unwrap();
        assert_eq!((r.expected.clone(), r.observed, r.status), (Expected::Equals { value: 1 }, Some(1), Status::Pass));
        assert_eq!(r.repro, "sigspread verify --claim c5_allneg");
    }

    #[test]
    fn zero_budget_skips() {
        let r = verify_claim("c5_allneg", &ClaimParams::default(), &Budget::default().with_nodes(0)).unwrap();
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn burning_numbers_of_paths() {
        for n in 1..=16usize {
            let g = SignedGraph::all_positive(n, (1..n).map(|i| (i - 1, i))).unwrap();
            let expected = (1..).find(|k| k * k >= n).unwrap();
            assert_eq!(burning_number(&g).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn deletion_oracle_small() {
        let g = gen_ktt_tau(3, false).unwrap();
        assert_eq!(frustration_by_deletion(&g).unwrap(), 2);
        assert_eq!(frustration_by_deletion(&gen_gn(6).unwrap()).unwrap(), 0);
    }

    #[test]
    fn bound_rounds_up() {
        assert_eq!(conjecture_bound(15), 5);
        assert_eq!(conjecture_bound(12), 4);
        assert_eq!(conjecture_bound(6), 0);
        assert_eq!(conjecture_bound(5), -1);
    }
}
