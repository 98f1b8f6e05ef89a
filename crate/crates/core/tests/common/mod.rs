#![allow(dead_code)]

use proptest::prelude::*;
use sigspread::{Sign, SignedGraph};

/// Arbitrary simple signed graph on `1..=max_n` vertices.
pub fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        (Just(pairs), proptest::collection::vec(0u8..3, m)).prop_map(move |(pairs, pick)| {
            let edges = pairs.iter().zip(&pick).filter_map(|(&(u, v), &p)| match p {
                1 => Some((u, v, Sign::Positive)),
                2 => Some((u, v, Sign::Negative)),
                _ => None,
            });
            SignedGraph::new(n, edges).unwrap()
        })
    })
}

/// Connected signed graph: a random spanning tree plus extra edges.
pub fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let extra = proptest::collection::vec(0u8..3, n * (n - 1) / 2);
        let tree_signs = proptest::collection::vec(any::<bool>(), n.saturating_sub(1));
        (Just(n), parents, tree_signs, extra).prop_map(|(n, parents, tree_signs, extra)| {
            let mut edges = std::collections::BTreeMap::new();
            for (i, (&p, &neg)) in parents.iter().zip(&tree_signs).enumerate() {
                edges.insert((p, i + 1), if neg { Sign::Negative } else { Sign::Positive });
            }
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    match extra[k] {
                        1 => {
                            edges.entry((u, v)).or_insert(Sign::Positive);
                        }
                        2 => {
                            edges.entry((u, v)).or_insert(Sign::Negative);
                        }
                        _ => {}
                    }
                    k += 1;
                }
            }
            SignedGraph::new(n, edges.into_iter().map(|((u, v), s)| (u, v, s))).unwrap()
        })
    })
}

/// Vertex subset of `0..n` as a bit mask.
pub fn subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    any::<u64>().prop_map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}
