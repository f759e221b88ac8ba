//! Brute-force reference implementations used to check the fast paths.
//!
//! These share no code with the measures they check: triangles come from
//! enumerating every node triple and betweenness from enumerating every
//! shortest path explicitly.

use std::collections::BTreeMap;

use crate::centrality::{MeasureTag, ScoreVector};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

pub const TRIANGLE_ORACLE_LIMIT: usize = 200;
pub const BETWEENNESS_ORACLE_LIMIT: usize = 8;

/// Incident triangles per node by checking all `C(n, 3)` triples.
pub fn oracle_triangles(g: &Graph) -> Result<BTreeMap<NodeId, usize>> {
    let n = g.node_count();
    if n > TRIANGLE_ORACLE_LIMIT {
        return Err(Error::Refused(format!(
            "{n} nodes exceeds the triangle oracle limit of {TRIANGLE_ORACLE_LIMIT}"
        )));
    }
    let nodes = g.nodes();
    let edge = |a: NodeId, b: NodeId| g.has_edge(a, b).unwrap_or(false);
    let mut counts: BTreeMap<NodeId, usize> = nodes.iter().map(|&v| (v, 0)).collect();
    for a in 0..n {
        for b in a + 1..n {
            if !edge(nodes[a], nodes[b]) {
                continue;
            }
            for c in b + 1..n {
                if edge(nodes[a], nodes[c]) && edge(nodes[b], nodes[c]) {
                    for v in [a, b, c] {
                        *counts.get_mut(&nodes[v]).unwrap() += 1;
                    }
                }
            }
        }
    }
    Ok(counts)
}

fn simple_paths_of_length(
    g: &Graph,
    from: NodeId,
    to: NodeId,
    len: usize,
    trail: &mut Vec<NodeId>,
    out: &mut Vec<Vec<NodeId>>,
) {
    let here = *trail.last().unwrap();
    if trail.len() - 1 == len {
        if here == to {
            out.push(trail.clone());
        }
        return;
    }
    for next in g.neighbors(here).unwrap() {
        if next == from || trail.contains(&next) {
            continue;
        }
        trail.push(next);
        simple_paths_of_length(g, from, to, len, trail, out);
        trail.pop();
    }
}

/// Betweenness from explicit shortest-path enumeration on small connected
/// graphs, with the same `2/((n-1)(n-2))` normalisation as the Brandes
/// implementation.
pub fn oracle_betweenness(g: &Graph) -> Result<ScoreVector> {
    let n = g.node_count();
    if n > BETWEENNESS_ORACLE_LIMIT {
        return Err(Error::Refused(format!(
            "{n} nodes exceeds the betweenness oracle limit of {BETWEENNESS_ORACLE_LIMIT}"
        )));
    }
    let nodes = g.nodes();
    let mut score: BTreeMap<NodeId, f64> = nodes.iter().map(|&v| (v, 0.0)).collect();
    for a in 0..n {
        for b in a + 1..n {
            let (s, t) = (nodes[a], nodes[b]);
            // shortest length = smallest length admitting a simple path
            let mut paths = Vec::new();
            let mut len = 1;
            while paths.is_empty() {
                if len >= n {
                    return Err(Error::Refused(
                        "betweenness oracle requires a connected graph".into(),
                    ));
                }
                simple_paths_of_length(g, s, t, len, &mut vec![s], &mut paths);
                len += 1;
            }
            let total = paths.len() as f64;
            for p in &paths {
                for v in &p[1..p.len() - 1] {
                    *score.get_mut(v).unwrap() += 1.0 / total;
                }
            }
        }
    }
    let scale = if n < 3 {
        1.0
    } else {
        2.0 / ((n as f64 - 1.0) * (n as f64 - 2.0))
    };
    Ok(ScoreVector::from_pairs(
        MeasureTag::Bc,
        score.into_iter().map(|(v, s)| (v, s * scale)),
    ))
}
