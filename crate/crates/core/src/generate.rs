//! Small graph families and seeded random graphs for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, NodeId};

pub fn complete(n: i64) -> Graph {
    Graph::from_parts(
        1..=n,
        (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))),
    )
}

pub fn cycle(n: i64) -> Graph {
    Graph::from_edge_list((1..=n).map(|u| (u, u % n + 1)))
}

pub fn path(n: i64) -> Graph {
    Graph::from_parts(1..=n, (1..n).map(|u| (u, u + 1)))
}

/// Centre 0 with leaves `1..=leaves`.
pub fn star(leaves: i64) -> Graph {
    Graph::from_edge_list((1..=leaves).map(|v| (0, v)))
}

/// Erdős–Rényi `G(n, p)` on labels `1..=n`.
pub fn gnp<R: Rng>(n: i64, p: f64, rng: &mut R) -> Graph {
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_parts(1..=n, pairs)
}

/// `G(n, p)` plus a random spanning tree, so the result is connected.
pub fn connected_gnp<R: Rng>(n: i64, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<i64> = (1..=n).collect();
    order.shuffle(rng);
    let mut pairs: Vec<(i64, i64)> = (1..order.len())
        .map(|i| (order[rng.gen_range(0..i)], order[i]))
        .collect();
    pairs.extend(gnp(n, p, rng).edges().map(|(u, v)| (u.0, v.0)));
    Graph::from_parts(1..=n, pairs)
}

/// A random injective relabelling of the graph's nodes onto a shuffled copy
/// of the same label set. Returns the relabelled graph and the mapping.
pub fn shuffle_labels<R: Rng>(g: &Graph, rng: &mut R) -> (Graph, Vec<(NodeId, NodeId)>) {
    let mut targets = g.nodes().to_vec();
    targets.shuffle(rng);
    let map: Vec<(NodeId, NodeId)> = g.nodes().iter().copied().zip(targets).collect();
    let lookup: std::collections::HashMap<NodeId, NodeId> = map.iter().copied().collect();
    (g.relabel(|v| lookup[&v]), map)
}
