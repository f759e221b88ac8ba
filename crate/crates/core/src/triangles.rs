//! Triangle primitives: one-hop triangle neighbours, incident triangle
//! counts and the triangle-neighbourhood subgraph of a node.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::graph::{Graph, NodeId};

/// The neighbours of `owner` that close at least one triangle with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    pub owner: NodeId,
    pub members: BTreeSet<NodeId>,
}

impl GammaSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Size of the intersection of two sorted slices.
pub(crate) fn common_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Per-neighbour count of common neighbours with `idx`, aligned with
/// `g.adjacent(idx)`.
pub(crate) fn shared_counts(g: &Graph, idx: usize) -> Vec<usize> {
    let own = g.adjacent(idx);
    own.iter()
        .map(|&j| common_count(own, g.adjacent(j)))
        .collect()
}

/// Dense indices of the one-hop triangle neighbours of `idx`, ascending.
pub(crate) fn gamma_at(g: &Graph, idx: usize) -> Vec<usize> {
    g.adjacent(idx)
        .iter()
        .zip(shared_counts(g, idx))
        .filter(|&(_, c)| c > 0)
        .map(|(&j, _)| j)
        .collect()
}

/// `(|γ_i|, triangles incident to i)` for the node at `idx`.
pub(crate) fn sdeg_and_triangles_at(g: &Graph, idx: usize) -> (usize, usize) {
    let counts = shared_counts(g, idx);
    let sdeg = counts.iter().filter(|&&c| c > 0).count();
    // each triangle is seen once from each of its two other corners
    let tri = counts.iter().sum::<usize>() / 2;
    (sdeg, tri)
}

pub fn triangle_neighbors(g: &Graph, i: NodeId) -> Result<GammaSet> {
    let idx = g.index_of(i)?;
    Ok(GammaSet {
        owner: i,
        members: gamma_at(g, idx).into_iter().map(|j| g.label(j)).collect(),
    })
}

/// Number of triangles incident to `i`, i.e. the number of edges among its
/// neighbours.
pub fn triangles_at(g: &Graph, i: NodeId) -> Result<usize> {
    let idx = g.index_of(i)?;
    Ok(sdeg_and_triangles_at(g, idx).1)
}

pub fn triangle_count(g: &Graph) -> usize {
    (0..g.node_count())
        .map(|i| sdeg_and_triangles_at(g, i).1)
        .sum::<usize>()
        / 3
}

/// Induced subgraph on `{i} ∪ γ_i`.
pub fn triangle_subgraph(g: &Graph, i: NodeId) -> Result<Graph> {
    let gamma = triangle_neighbors(g, i)?;
    g.induced_subgraph(std::iter::once(i).chain(gamma.members))
}
