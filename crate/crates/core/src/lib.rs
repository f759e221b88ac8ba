//! Node-influence ranking on undirected graphs.
//!
//! The centrepiece is Tr-centrality, a score built from a node's one-hop
//! triangle neighbourhood, computed alongside triangle count, degree,
//! betweenness, closeness, eigenvector centrality and PageRank. The
//! [`experiments`] module compares their top-k rankings and measures how much
//! removing each measure's top-k nodes thins out the graph.

pub mod centrality;
pub mod datasets;
pub mod error;
pub mod experiments;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod triangles;

pub use centrality::{compute, MeasureTag, Params, ScoreVector};
pub use error::{Error, Result};
pub use experiments::{
    comparison_table, plot_series, rank_top_k, removal_impact, PlotSeries, RankingTable,
    RemovalReport, RemovalRow,
};
pub use graph::{Graph, NodeId};
pub use triangles::{triangle_neighbors, triangles_at, GammaSet};
