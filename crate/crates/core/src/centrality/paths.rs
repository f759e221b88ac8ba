//! Shortest-path measures: betweenness (Brandes) and closeness.

use std::collections::VecDeque;

use crate::graph::Graph;

use super::{MeasureTag, ScoreVector};

/// Unnormalised betweenness over unordered pairs: for every node `v`,
/// `Σ_{s<t, s≠v≠t} σ_st(v) / σ_st`.
pub fn betweenness_raw(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    let mut bc = vec![0.0f64; n];

    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![usize::MAX; n];
    let mut delta = vec![0.0f64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n {
        for v in 0..n {
            sigma[v] = 0.0;
            dist[v] = usize::MAX;
            delta[v] = 0.0;
            preds[v].clear();
        }
        order.clear();
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.adjacent(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }
        for &w in order.iter().rev() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    // every unordered pair was visited from both ends
    for b in &mut bc {
        *b /= 2.0;
    }
    ScoreVector::from_dense(MeasureTag::Bc, g, bc)
}

pub(crate) fn betweenness_scale(n: usize) -> f64 {
    if n < 3 {
        1.0
    } else {
        2.0 / ((n as f64 - 1.0) * (n as f64 - 2.0))
    }
}

/// Betweenness normalised by `2 / ((n-1)(n-2))` for `n >= 3`.
pub fn betweenness_centrality(g: &Graph) -> ScoreVector {
    betweenness_raw(g).scaled(betweenness_scale(g.node_count()))
}

/// Closeness with component scaling: `(r/(n-1)) * (r/S)` where `r` is the
/// number of nodes reachable from `i` and `S` the sum of their distances.
/// Reduces to `(n-1)/S` on connected graphs; isolated nodes score 0.
pub fn closeness_centrality(g: &Graph) -> ScoreVector {
    let n = g.node_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    let scores = (0..n)
        .map(|s| {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            queue.push_back(s);
            let (mut reached, mut total) = (0usize, 0usize);
            while let Some(v) = queue.pop_front() {
                for &w in g.adjacent(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        reached += 1;
                        total += dist[w];
                        queue.push_back(w);
                    }
                }
            }
            if reached == 0 {
                0.0
            } else {
                let r = reached as f64;
                (r / (n as f64 - 1.0)) * (r / total as f64)
            }
        })
        .collect();
    ScoreVector::from_dense(MeasureTag::Cnc, g, scores)
}
