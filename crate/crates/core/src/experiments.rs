//! Top-k ranking comparisons and the density impact of removing each
//! measure's top-k nodes.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::centrality::{compute, MeasureTag, Params, ScoreVector};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Seed used for the random-removal baseline unless the caller picks one.
pub const DEFAULT_SEED: u64 = 20_210_615;

/// Nodes by descending score, ties broken by ascending label; at most `k`.
pub fn rank_top_k(scores: &ScoreVector, k: usize) -> Vec<NodeId> {
    let mut order: Vec<(NodeId, f64)> = scores.entries().to_vec();
    order.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    order.into_iter().take(k).map(|(n, _)| n).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankingTable {
    pub graph_name: String,
    pub k: usize,
    pub columns: Vec<(MeasureTag, Vec<NodeId>)>,
}

impl RankingTable {
    pub fn column(&self, tag: MeasureTag) -> Option<&[NodeId]> {
        self.columns
            .iter()
            .find(|(t, _)| *t == tag)
            .map(|(_, c)| c.as_slice())
    }
}

/// One top-k column per measure in `measures`, in the given order.
pub fn ranking_table(
    g: &Graph,
    name: &str,
    k: usize,
    measures: &[MeasureTag],
    params: &Params,
) -> Result<RankingTable> {
    let columns = measures
        .iter()
        .map(|&tag| Ok((tag, rank_top_k(&compute(g, tag, params)?, k))))
        .collect::<Result<Vec<_>>>()?;
    Ok(RankingTable {
        graph_name: name.to_string(),
        k,
        columns,
    })
}

/// The six-column comparison (TR, BC, CNC, EC, PR, TC).
pub fn comparison_table(g: &Graph, name: &str, k: usize, params: &Params) -> Result<RankingTable> {
    ranking_table(g, name, k, &MeasureTag::COMPARISON, params)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RemovalRow {
    pub measure: MeasureTag,
    pub removed: Vec<NodeId>,
    pub remaining_nodes: usize,
    pub remaining_edges: usize,
    pub density: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RemovalReport {
    pub graph_name: String,
    pub k: usize,
    pub rows: Vec<RemovalRow>,
}

impl RemovalReport {
    pub fn density(&self, tag: MeasureTag) -> Option<f64> {
        self.row(tag).map(|r| r.density)
    }

    pub fn row(&self, tag: MeasureTag) -> Option<&RemovalRow> {
        self.rows.iter().find(|r| r.measure == tag)
    }

    pub fn measures(&self) -> Vec<MeasureTag> {
        self.rows.iter().map(|r| r.measure).collect()
    }

    /// Measures that share the lowest residual density.
    pub fn lowest(&self) -> Vec<MeasureTag> {
        let min = self
            .rows
            .iter()
            .map(|r| r.density)
            .fold(f64::INFINITY, f64::min);
        self.rows
            .iter()
            .filter(|r| r.density == min)
            .map(|r| r.measure)
            .collect()
    }
}

fn check_removable(g: &Graph, k: usize) -> Result<()> {
    let n = g.node_count();
    if k >= n || n - k < 2 {
        return Err(Error::Domain(format!(
            "cannot remove {k} of {n} nodes and still measure density (need at least 2 left)"
        )));
    }
    Ok(())
}

/// Removes each measure's top-k nodes and records the density of what is left.
pub fn removal_impact(
    g: &Graph,
    name: &str,
    k: usize,
    measures: &[MeasureTag],
    params: &Params,
) -> Result<RemovalReport> {
    check_removable(g, k)?;
    let table = ranking_table(g, name, k, measures, params)?;
    let rows = table
        .columns
        .into_iter()
        .map(|(measure, removed)| {
            let rest = g.remove_nodes(removed.iter().copied())?;
            Ok(RemovalRow {
                measure,
                density: rest.density()?,
                remaining_nodes: rest.node_count(),
                remaining_edges: rest.edge_count(),
                removed,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RemovalReport {
        graph_name: name.to_string(),
        k,
        rows,
    })
}

/// Mean residual density after removing `k` uniformly random nodes, over
/// `trials` seeded draws.
pub fn random_removal_density(g: &Graph, k: usize, trials: usize, seed: u64) -> Result<f64> {
    check_removable(g, k)?;
    if trials == 0 {
        return Err(Error::Domain(
            "random baseline needs at least one trial".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0.0;
    for _ in 0..trials {
        let victims: Vec<NodeId> = g.nodes().choose_multiple(&mut rng, k).copied().collect();
        total += g.remove_nodes(victims)?.density()?;
    }
    Ok(total / trials as f64)
}

/// Density-by-network series, one per measure, for plotting.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PlotSeries {
    /// 1-based network index and name.
    pub x: Vec<(usize, String)>,
    pub series: Vec<(MeasureTag, Vec<f64>)>,
}

pub fn plot_series(reports: &[RemovalReport]) -> Result<PlotSeries> {
    let Some(first) = reports.first() else {
        return Ok(PlotSeries::default());
    };
    let measures = first.measures();
    for r in reports {
        if r.measures() != measures {
            return Err(Error::Shape(format!(
                "report {:?} has measures {:?}, expected {:?}",
                r.graph_name,
                r.measures(),
                measures
            )));
        }
    }
    Ok(PlotSeries {
        x: reports
            .iter()
            .enumerate()
            .map(|(i, r)| (i + 1, r.graph_name.clone()))
            .collect(),
        series: measures
            .iter()
            .map(|&m| (m, reports.iter().map(|r| r.density(m).unwrap()).collect()))
            .collect(),
    })
}
