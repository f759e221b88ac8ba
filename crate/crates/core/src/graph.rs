//! Immutable undirected simple graphs keyed by the labels of the source data.
//!
//! Nodes are stored in ascending label order and addressed internally by
//! their position in that order (a dense index). Adjacency lists hold dense
//! indices and are kept sorted, so they behave as sets and allow merge-based
//! intersection.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Node label as it appears in the input file (1-based for Pajek inputs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub i64);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for NodeId {
    fn from(v: i64) -> Self {
        NodeId(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    labels: Vec<NodeId>,
    index: BTreeMap<NodeId, usize>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a simple graph from raw pairs. Self-loops are dropped (their
    /// endpoint is still added as a node) and repeated or reversed pairs
    /// collapse to one edge.
    pub fn from_edge_list<I, N>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (N, N)>,
        N: Into<NodeId>,
    {
        Self::from_parts(std::iter::empty::<NodeId>(), pairs)
    }

    /// Like [`Graph::from_edge_list`], with extra nodes that are kept even
    /// when no edge touches them.
    pub fn from_parts<V, I, N>(nodes: V, pairs: I) -> Self
    where
        V: IntoIterator,
        V::Item: Into<NodeId>,
        I: IntoIterator<Item = (N, N)>,
        N: Into<NodeId>,
    {
        let mut set: BTreeMap<NodeId, BTreeSet<NodeId>> = BTreeMap::new();
        for v in nodes {
            set.entry(v.into()).or_default();
        }
        for (u, v) in pairs {
            let (u, v) = (u.into(), v.into());
            set.entry(u).or_default();
            set.entry(v).or_default();
            if u != v {
                set.get_mut(&u).unwrap().insert(v);
                set.get_mut(&v).unwrap().insert(u);
            }
        }

        let labels: Vec<NodeId> = set.keys().copied().collect();
        let index: BTreeMap<NodeId, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let adj: Vec<Vec<usize>> = set
            .values()
            .map(|nbrs| nbrs.iter().map(|l| index[l]).collect())
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            labels,
            index,
            adj,
            edge_count,
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Node labels in ascending order.
    pub fn nodes(&self) -> &[NodeId] {
        &self.labels
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.index.contains_key(&id)
    }

    /// Every edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (self.labels[u], self.labels[v]))
        })
    }

    pub fn index_of(&self, id: NodeId) -> Result<usize> {
        self.index.get(&id).copied().ok_or(Error::UnknownNode(id))
    }

    pub fn label(&self, idx: usize) -> NodeId {
        self.labels[idx]
    }

    /// Sorted dense-index neighbours of the node at `idx`.
    pub fn adjacent(&self, idx: usize) -> &[usize] {
        &self.adj[idx]
    }

    pub fn degree_at(&self, idx: usize) -> usize {
        self.adj[idx].len()
    }

    pub fn has_edge_at(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, id: NodeId) -> Result<BTreeSet<NodeId>> {
        let i = self.index_of(id)?;
        Ok(self.adj[i].iter().map(|&j| self.labels[j]).collect())
    }

    pub fn degree(&self, id: NodeId) -> Result<usize> {
        Ok(self.degree_at(self.index_of(id)?))
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> Result<bool> {
        let (u, v) = (self.index_of(u)?, self.index_of(v)?);
        Ok(self.has_edge_at(u, v))
    }

    /// `2N / (n(n-1))`: 0 for an edgeless graph, 1 for a complete one.
    pub fn density(&self) -> Result<f64> {
        let n = self.node_count();
        if n < 2 {
            return Err(Error::Domain(format!(
                "density is undefined for a graph with {n} node(s)"
            )));
        }
        Ok(2.0 * self.edge_count as f64 / (n as f64 * (n as f64 - 1.0)))
    }

    /// Induced subgraph on `keep`; labels are preserved.
    pub fn induced_subgraph<I>(&self, keep: I) -> Result<Graph>
    where
        I: IntoIterator<Item = NodeId>,
    {
        let mut mask = vec![false; self.node_count()];
        for id in keep {
            mask[self.index_of(id)?] = true;
        }
        Ok(self.restrict(&mask))
    }

    /// Induced subgraph on everything except `victims`. The input is untouched.
    pub fn remove_nodes<I>(&self, victims: I) -> Result<Graph>
    where
        I: IntoIterator<Item = NodeId>,
    {
        let mut mask = vec![true; self.node_count()];
        for id in victims {
            mask[self.index_of(id)?] = false;
        }
        Ok(self.restrict(&mask))
    }

    fn restrict(&self, mask: &[bool]) -> Graph {
        let mut remap = vec![usize::MAX; mask.len()];
        let mut labels = Vec::new();
        for (old, _) in mask.iter().enumerate().filter(|(_, &m)| m) {
            remap[old] = labels.len();
            labels.push(self.labels[old]);
        }
        let adj: Vec<Vec<usize>> = (0..mask.len())
            .filter(|&old| mask[old])
            .map(|old| {
                self.adj[old]
                    .iter()
                    .filter(|&&v| mask[v])
                    .map(|&v| remap[v])
                    .collect()
            })
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        Graph {
            labels,
            index,
            adj,
            edge_count,
        }
    }

    /// Applies a label mapping. The mapping must be injective on the node set.
    pub fn relabel<F>(&self, mut f: F) -> Graph
    where
        F: FnMut(NodeId) -> NodeId,
    {
        let mapped: Vec<NodeId> = self.labels.iter().map(|&l| f(l)).collect();
        Graph::from_parts(
            mapped.iter().copied(),
            self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
                let mapped = &mapped;
                nbrs.iter().map(move |&v| (mapped[u], mapped[v]))
            }),
        )
    }
}
