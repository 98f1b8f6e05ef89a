//! Generators for the signed graph families under study, plus a small
//! seeded random corpus.
//!
//! Vertex numbering is fixed so that goldens stay stable:
//! `G_n` puts `u_i` at `i` and `u_i'` at `i + k`; `(K_{t,t}, tau_t)` puts
//! `a_i` at `i` and `b_i` at `t + i`; the layered family puts `u_{i,j}` at
//! `i * t + j`.
//!
//! Random generators use ChaCha8 seeded from a `u64`, which produces the
//! same stream on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, Vertex};

/// Attempts made by [`gen_random_connected`] before giving up.
pub const CONNECTED_RETRIES: usize = 1000;

/// Description of one generated instance, enough to regenerate it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    Gn { n: usize, negated: bool },
    KttTau { t: usize, negated: bool },
    Gst { s: usize, t: usize, layer_negated: Vec<bool> },
    Cycle { signs: Vec<i64> },
    Path { signs: Vec<i64> },
    RandomTree { seed: u64, n: usize, neg_prob: f64 },
    RandomConnected { seed: u64, n: usize, edge_prob: f64, neg_prob: f64 },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<SignedGraph> {
        let signs = |raw: &[i64]| -> Result<Vec<Sign>> {
            raw.iter()
                .map(|&s| Sign::from_i64(s).ok_or_else(|| Error::Parse(format!("bad sign {s}"))))
                .collect()
        };
        match self {
            FamilySpec::Gn { n, negated } => {
                let g = gen_gn(*n)?;
                Ok(if *negated { g.negate_signature() } else { g })
            }
            FamilySpec::KttTau { t, negated } => gen_ktt_tau(*t, *negated),
            FamilySpec::Gst { s, t, layer_negated } => gen_gst(*s, *t, layer_negated),
            FamilySpec::Cycle { signs: raw } => gen_cycle(&signs(raw)?),
            FamilySpec::Path { signs: raw } => gen_path(&signs(raw)?),
            FamilySpec::RandomTree { seed, n, neg_prob } => gen_random_tree(*seed, *n, *neg_prob),
            FamilySpec::RandomConnected { seed, n, edge_prob, neg_prob } => {
                gen_random_connected(*seed, *n, *edge_prob, *neg_prob)
            }
        }
    }
}

/// Two all-positive `K_k` copies joined by a negative perfect matching.
pub fn gen_gn(n: usize) -> Result<SignedGraph> {
    if n < 6 || !n.is_multiple_of(2) {
        return Err(Error::precondition(format!("G_n needs even n >= 6, got {n}")));
    }
    let k = n / 2;
    let mut edges = Vec::new();
    for side in [0, k] {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((side + i, side + j, Sign::Positive));
            }
        }
    }
    edges.extend((0..k).map(|i| (i, i + k, Sign::Negative)));
    SignedGraph::new(n, edges)
}

/// `K_{t,t}` whose negative edges are the matching `a_i b_i`; with
/// `negated` every sign is flipped.
pub fn gen_ktt_tau(t: usize, negated: bool) -> Result<SignedGraph> {
    if t < 3 {
        return Err(Error::precondition(format!("K_tt tau needs t >= 3, got {t}")));
    }
    let flip = |s: Sign| if negated { -s } else { s };
    let edges = (0..t).flat_map(|i| {
        (0..t).map(move |j| {
            let sign = if i == j { Sign::Negative } else { Sign::Positive };
            (i, t + j, flip(sign))
        })
    });
    SignedGraph::new(2 * t, edges)
}

/// Layers `U_0 .. U_{s-1}` of size `t` arranged in a ring; consecutive
/// layers (indices mod `s`) induce `(K_{t,t}, tau_t)`, or its negation when
/// `layer_negated[i]` is set for the pair `U_i, U_{i+1}`.
pub fn gen_gst(s: usize, t: usize, layer_negated: &[bool]) -> Result<SignedGraph> {
    if s < 3 || t < 3 {
        return Err(Error::precondition(format!("layered family needs s, t >= 3, got s={s}, t={t}")));
    }
    if layer_negated.len() != s {
        return Err(Error::precondition(format!(
            "expected {s} layer flags, got {}",
            layer_negated.len()
        )));
    }
    let id = |i: usize, j: usize| -> Vertex { i * t + j };
    let mut edges = Vec::with_capacity(s * t * t);
    for (i, &neg) in layer_negated.iter().enumerate() {
        let next = (i + 1) % s;
        for a in 0..t {
            for b in 0..t {
                let sign = if a == b { Sign::Negative } else { Sign::Positive };
                edges.push((id(i, a), id(next, b), if neg { -sign } else { sign }));
            }
        }
    }
    SignedGraph::new(s * t, edges)
}

/// Membership check for the layered family with parameters `(s, t)`.
/// Each consecutive layer pair must induce a complete bipartite graph whose
/// negative edges (flag `false`) or positive edges (flag `true`) form a
/// perfect matching, and there are no other edges. Returns the flags.
///
/// The flags are read off the actual signs: `tau_t` and `-tau_t` are
/// switching equivalent on any bipartite graph, so equivalence alone
/// cannot tell them apart.
pub fn layer_flags(g: &SignedGraph, s: usize, t: usize) -> Option<Vec<bool>> {
    if s < 3 || t < 3 || g.n() != s * t || g.edge_count() != s * t * t {
        return None;
    }
    let is_matching = |pairs: &[(usize, usize)]| {
        let mut left = vec![false; t];
        let mut right = vec![false; t];
        pairs.len() == t
            && pairs
                .iter()
                .all(|&(a, b)| !std::mem::replace(&mut left[a], true) && !std::mem::replace(&mut right[b], true))
    };
    let mut flags = Vec::with_capacity(s);
    for i in 0..s {
        let next = (i + 1) % s;
        let (mut neg, mut pos) = (Vec::new(), Vec::new());
        for a in 0..t {
            for b in 0..t {
                match g.sign(i * t + a, next * t + b)? {
                    Sign::Negative => neg.push((a, b)),
                    Sign::Positive => pos.push((a, b)),
                }
            }
        }
        if is_matching(&neg) {
            flags.push(false);
        } else if is_matching(&pos) {
            flags.push(true);
        } else {
            return None;
        }
    }
    Some(flags)
}

/// Circuit `0 - 1 - ... - (k-1) - 0`; edge `{i, i+1 mod k}` gets `signs[i]`.
pub fn gen_cycle(signs: &[Sign]) -> Result<SignedGraph> {
    let k = signs.len();
    if k < 3 {
        return Err(Error::precondition(format!("circuit needs k >= 3, got {k}")));
    }
    SignedGraph::new(k, (0..k).map(|i| (i, (i + 1) % k, signs[i])))
}

/// Path on `signs.len() + 1` vertices; edge `{i, i+1}` gets `signs[i]`.
pub fn gen_path(signs: &[Sign]) -> Result<SignedGraph> {
    SignedGraph::new(signs.len() + 1, signs.iter().enumerate().map(|(i, &s)| (i, i + 1, s)))
}

fn check_prob(p: f64, what: &str) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::precondition(format!("{what} must lie in [0, 1], got {p}")))
    }
}

fn random_sign(rng: &mut ChaCha8Rng, neg_prob: f64) -> Sign {
    if rng.gen_bool(neg_prob) {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

/// Random recursive tree: vertex `i` attaches to a uniform earlier vertex.
pub fn gen_random_tree(seed: u64, n: usize, neg_prob: f64) -> Result<SignedGraph> {
    check_prob(neg_prob, "neg_prob")?;
    if n == 0 {
        return Err(Error::precondition("tree needs at least one vertex"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n)
        .map(|v| {
            let parent = rng.gen_range(0..v);
            (parent, v, random_sign(&mut rng, neg_prob))
        })
        .collect();
    SignedGraph::new(n, edges)
}

/// Erdős–Rényi `G(n, edge_prob)` conditioned on connectivity by rejection
/// (up to [`CONNECTED_RETRIES`] samples from one seeded stream).
pub fn gen_random_connected(seed: u64, n: usize, edge_prob: f64, neg_prob: f64) -> Result<SignedGraph> {
    check_prob(edge_prob, "edge_prob")?;
    check_prob(neg_prob, "neg_prob")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..CONNECTED_RETRIES {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(edge_prob) {
                    edges.push((u, v, random_sign(&mut rng, neg_prob)));
                }
            }
        }
        let g = SignedGraph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::precondition(format!(
        "no connected sample after {CONNECTED_RETRIES} attempts (n={n}, p={edge_prob})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gn_shape() {
        let g = gen_gn(6).unwrap();
        assert_eq!(g.edge_count(), 9);
        assert!((0..6).all(|v| g.degree(v) == 3));
        assert_eq!(g.negative_edges().len(), 3);
        let p = g.is_balanced().unwrap();
        assert_eq!(p.u1.iter().copied().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert!(gen_gn(8).unwrap().negate_signature().is_antibalanced());
        assert!(gen_gn(7).is_err());
        assert!(gen_gn(4).is_err());
    }

    #[test]
    fn ktt_shape() {
        let g = gen_ktt_tau(4, false).unwrap();
        assert_eq!(g.edge_count(), 16);
        let neg = g.negative_edges();
        assert_eq!(neg, (0..4).map(|i| (i, 4 + i)).collect());
        let neg_side = gen_ktt_tau(4, true).unwrap();
        assert_eq!(neg_side.negative_edges().len(), 12);
        assert!(gen_ktt_tau(2, false).is_err());
    }

    #[test]
    fn gst_shape() {
        let g = gen_gst(5, 3, &[false, true, false, true, true]).unwrap();
        assert_eq!(g.n(), 15);
        assert_eq!(g.edge_count(), 45);
        assert!((0..15).all(|v| g.degree(v) == 6));
        assert_eq!(layer_flags(&g, 5, 3), Some(vec![false, true, false, true, true]));
        assert_eq!(layer_flags(&gen_gn(6).unwrap(), 3, 2), None);
        assert!(gen_gst(5, 3, &[false; 4]).is_err());
        assert!(gen_gst(2, 3, &[false; 2]).is_err());
    }

    #[test]
    fn random_generators_are_seeded() {
        let t = gen_random_tree(1, 10, 0.5).unwrap();
        assert_eq!(t.edge_count(), 9);
        assert!(t.is_tree());
        let a = gen_random_connected(7, 8, 0.4, 0.5).unwrap();
        let b = gen_random_connected(7, 8, 0.4, 0.5).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert!(gen_random_connected(7, 8, 1.5, 0.5).is_err());
        assert!(gen_random_connected(1, 6, 0.0, 0.5).is_err());
    }

    #[test]
    fn spec_regenerates() {
        let spec = FamilySpec::Cycle { signs: vec![-1; 5] };
        assert!(spec.generate().unwrap().is_all_negative());
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<FamilySpec>(&json).unwrap(), spec);
    }
}
