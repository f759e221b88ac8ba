//! Subgraph degree and Tr-centrality.
//!
//! For a node `i` let `γ_i` be its one-hop triangle neighbours and `G_i` the
//! subgraph induced on `{i} ∪ γ_i`. With `sdeg_i = |γ_i|`, `N_i = |V(G_i)|`
//! (always `sdeg_i + 1`), `NT_i` the triangles incident to `i` and `D_i` the
//! sum of the degrees of all members of `G_i` measured inside `G_i`:
//!
//! ```text
//! TC_i = 0.01 * (3 * sdeg_i - (2 * N_i + NT_i) + D_i)
//! ```
//!
//! The mobility count of a planar linkage, `3(n - 1) - 2 j1 - j2`, is the
//! template: `sdeg_i` stands in for `n - 1`, `N_i` for the single-freedom
//! joints and `NT_i` for the two-freedom joints.
//!
//! Every edge of `G_i` closes a triangle through `i`, so `D_i = 2|E(G_i)|`
//! and `|E(G_i)| = sdeg_i + NT_i`. The score therefore reduces to
//! `0.01 * (3 * sdeg_i + NT_i - 2)`, which is what [`tr_centrality`] evaluates.
//! [`tr_centrality_expanded`] builds each `G_i` and evaluates the formula
//! term by term.

use crate::error::Result;
use crate::graph::{Graph, NodeId};
use crate::triangles::{gamma_at, sdeg_and_triangles_at};

use super::{MeasureTag, ScoreVector};

const SCALE: f64 = 0.01;

/// `|γ_i|`, never larger than the degree of `i`.
pub fn sdeg(g: &Graph, i: NodeId) -> Result<usize> {
    let idx = g.index_of(i)?;
    Ok(sdeg_and_triangles_at(g, idx).0)
}

pub fn sdeg_vector(g: &Graph) -> ScoreVector {
    let scores = (0..g.node_count())
        .map(|i| sdeg_and_triangles_at(g, i).0 as f64)
        .collect();
    ScoreVector::from_dense(MeasureTag::Sdeg, g, scores)
}

/// The Tr-centrality formula on precomputed terms.
pub fn tr_score(sdeg: usize, subgraph_nodes: usize, triangles: usize, degree_sum: usize) -> f64 {
    let raw = 3 * sdeg as i64 - (2 * subgraph_nodes as i64 + triangles as i64) + degree_sum as i64;
    SCALE * raw as f64
}

pub fn tr_centrality(g: &Graph) -> ScoreVector {
    let scores = (0..g.node_count())
        .map(|i| {
            let (s, nt) = sdeg_and_triangles_at(g, i);
            tr_score(s, s + 1, nt, 2 * (s + nt))
        })
        .collect();
    ScoreVector::from_dense(MeasureTag::Tc, g, scores)
}

/// Tr-centrality evaluated by materialising every triangle subgraph.
pub fn tr_centrality_expanded(g: &Graph) -> ScoreVector {
    let scores = (0..g.node_count())
        .map(|i| {
            let gamma = gamma_at(g, i);
            let members: Vec<NodeId> = std::iter::once(i)
                .chain(gamma.iter().copied())
                .map(|j| g.label(j))
                .collect();
            let sub = g.induced_subgraph(members).expect("members are nodes of g");
            let degree_sum: usize = (0..sub.node_count()).map(|j| sub.degree_at(j)).sum();
            let (_, nt) = sdeg_and_triangles_at(g, i);
            tr_score(gamma.len(), sub.node_count(), nt, degree_sum)
        })
        .collect();
    ScoreVector::from_dense(MeasureTag::Tc, g, scores)
}
