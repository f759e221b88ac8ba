//! Centrality measures as score vectors over a graph.
//!
//! Every measure returns a [`ScoreVector`] with exactly one finite score per
//! node, keyed by the node's label. [`compute`] dispatches on a
//! [`MeasureTag`] with a shared [`Params`] block.

mod paths;
mod spectral;
mod tr;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::triangles::sdeg_and_triangles_at;

pub use paths::{betweenness_centrality, betweenness_raw, closeness_centrality};
pub use spectral::{eigenvector_centrality, pagerank};
pub use tr::{sdeg, sdeg_vector, tr_centrality, tr_centrality_expanded, tr_score};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MeasureTag {
    /// Tr-centrality.
    Tc,
    /// Incident triangle count.
    Tr,
    Dc,
    Bc,
    Cnc,
    Ec,
    Pr,
    /// Subgraph (triangle-neighbour) degree.
    Sdeg,
}

impl MeasureTag {
    pub const ALL: [MeasureTag; 8] = [
        MeasureTag::Tc,
        MeasureTag::Tr,
        MeasureTag::Dc,
        MeasureTag::Bc,
        MeasureTag::Cnc,
        MeasureTag::Ec,
        MeasureTag::Pr,
        MeasureTag::Sdeg,
    ];

    /// Column order of the comparison tables.
    pub const COMPARISON: [MeasureTag; 6] = [
        MeasureTag::Tr,
        MeasureTag::Bc,
        MeasureTag::Cnc,
        MeasureTag::Ec,
        MeasureTag::Pr,
        MeasureTag::Tc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MeasureTag::Tc => "TC",
            MeasureTag::Tr => "TR",
            MeasureTag::Dc => "DC",
            MeasureTag::Bc => "BC",
            MeasureTag::Cnc => "CNC",
            MeasureTag::Ec => "EC",
            MeasureTag::Pr => "PR",
            MeasureTag::Sdeg => "SDEG",
        }
    }
}

impl fmt::Display for MeasureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MeasureTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MeasureTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Domain(format!("unknown measure {s:?}")))
    }
}

/// Numeric settings for the iterative measures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub damping: f64,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            damping: 0.85,
            tol: 1e-10,
            max_iter: 1000,
        }
    }
}

impl Params {
    pub fn validate(&self) -> Result<()> {
        if !(self.damping > 0.0 && self.damping < 1.0) {
            return Err(Error::Domain(format!(
                "damping must lie in (0, 1), got {}",
                self.damping
            )));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::Domain(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub measure: MeasureTag,
    /// Sorted by node label.
    entries: Vec<(NodeId, f64)>,
}

impl ScoreVector {
    /// Builds a vector from scores aligned with `g.nodes()`.
    pub(crate) fn from_dense(measure: MeasureTag, g: &Graph, scores: Vec<f64>) -> Self {
        debug_assert_eq!(scores.len(), g.node_count());
        ScoreVector {
            measure,
            entries: g.nodes().iter().copied().zip(scores).collect(),
        }
    }

    /// Builds a vector from arbitrary `(node, score)` pairs; later duplicates
    /// overwrite earlier ones.
    pub fn from_pairs<I>(measure: MeasureTag, pairs: I) -> Self
    where
        I: IntoIterator<Item = (NodeId, f64)>,
    {
        let map: std::collections::BTreeMap<NodeId, f64> = pairs.into_iter().collect();
        ScoreVector {
            measure,
            entries: map.into_iter().collect(),
        }
    }

    pub fn get(&self, id: NodeId) -> Option<f64> {
        self.entries
            .binary_search_by_key(&id, |&(n, _)| n)
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn entries(&self) -> &[(NodeId, f64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().map(|&(_, s)| s)
    }

    pub fn scaled(&self, factor: f64) -> ScoreVector {
        ScoreVector {
            measure: self.measure,
            entries: self.entries.iter().map(|&(n, s)| (n, s * factor)).collect(),
        }
    }
}

pub fn degree_centrality(g: &Graph) -> ScoreVector {
    let scores = (0..g.node_count()).map(|i| g.degree_at(i) as f64).collect();
    ScoreVector::from_dense(MeasureTag::Dc, g, scores)
}

pub fn triangle_count_centrality(g: &Graph) -> ScoreVector {
    let scores = (0..g.node_count())
        .map(|i| sdeg_and_triangles_at(g, i).1 as f64)
        .collect();
    ScoreVector::from_dense(MeasureTag::Tr, g, scores)
}

/// Dispatches to the measure named by `tag`.
pub fn compute(g: &Graph, tag: MeasureTag, params: &Params) -> Result<ScoreVector> {
    params.validate()?;
    Ok(match tag {
        MeasureTag::Tc => tr_centrality(g),
        MeasureTag::Tr => triangle_count_centrality(g),
        MeasureTag::Dc => degree_centrality(g),
        MeasureTag::Bc => betweenness_centrality(g),
        MeasureTag::Cnc => closeness_centrality(g),
        MeasureTag::Ec => eigenvector_centrality(g, params.tol, params.max_iter)?,
        MeasureTag::Pr => pagerank(g, params.damping, params.tol, params.max_iter)?,
        MeasureTag::Sdeg => sdeg_vector(g),
    })
}
