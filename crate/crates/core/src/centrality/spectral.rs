//! Power-iteration measures: eigenvector centrality and PageRank.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{MeasureTag, Params, ScoreVector};

fn adjacency_product(g: &Graph, x: &[f64]) -> Vec<f64> {
    (0..g.node_count())
        .map(|i| g.adjacent(i).iter().map(|&j| x[j]).sum())
        .collect()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Leading eigenvector of the adjacency matrix, unit Euclidean length and
/// nonnegative, reached by power iteration from the uniform vector.
///
/// Iterates on `A + I` (same eigenvectors, strictly dominant eigenvalue on
/// bipartite graphs) and stops once `max |A x - λ x| < tol` with `λ` the
/// Rayleigh quotient. Nodes without edges score 0.
pub fn eigenvector_centrality(g: &Graph, tol: f64, max_iter: usize) -> Result<ScoreVector> {
    Params {
        tol,
        ..Params::default()
    }
    .validate()?;
    let n = g.node_count();
    if g.edge_count() == 0 {
        return Ok(ScoreVector::from_dense(MeasureTag::Ec, g, vec![0.0; n]));
    }

    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut residual = f64::INFINITY;
    for _ in 0..=max_iter {
        let ax = adjacency_product(g, &x);
        let lambda: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        residual = ax
            .iter()
            .zip(&x)
            .map(|(a, v)| (a - lambda * v).abs())
            .fold(0.0, f64::max);
        if residual < tol {
            for (i, v) in x.iter_mut().enumerate() {
                if g.degree_at(i) == 0 {
                    *v = 0.0;
                }
            }
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            x.iter_mut().for_each(|v| *v /= norm);
            return Ok(ScoreVector::from_dense(MeasureTag::Ec, g, x));
        }
        let mut next: Vec<f64> = ax.iter().zip(&x).map(|(a, v)| a + v).collect();
        let norm = next.iter().map(|v| v * v).sum::<f64>().sqrt();
        next.iter_mut().for_each(|v| *v /= norm);
        x = next;
    }
    Err(Error::Convergence {
        measure: "eigenvector centrality",
        iterations: max_iter,
        residual,
    })
}

/// PageRank with every undirected edge acting in both directions. Mass on
/// degree-0 nodes is spread uniformly. Stops when the largest per-node change
/// drops below `tol`.
pub fn pagerank(g: &Graph, damping: f64, tol: f64, max_iter: usize) -> Result<ScoreVector> {
    Params {
        damping,
        tol,
        max_iter,
    }
    .validate()?;
    let n = g.node_count();
    if n == 0 {
        return Ok(ScoreVector::from_dense(MeasureTag::Pr, g, Vec::new()));
    }
    let nf = n as f64;
    let deg: Vec<f64> = (0..n).map(|i| g.degree_at(i) as f64).collect();

    let mut x = vec![1.0 / nf; n];
    let mut change = f64::INFINITY;
    for _ in 0..max_iter {
        let dangling: f64 = (0..n).filter(|&i| deg[i] == 0.0).map(|i| x[i]).sum();
        let base = (1.0 - damping) / nf + damping * dangling / nf;
        let next: Vec<f64> = (0..n)
            .map(|i| base + damping * g.adjacent(i).iter().map(|&j| x[j] / deg[j]).sum::<f64>())
            .collect();
        change = max_abs_diff(&next, &x);
        x = next;
        if change < tol {
            return Ok(ScoreVector::from_dense(MeasureTag::Pr, g, x));
        }
    }
    Err(Error::Convergence {
        measure: "pagerank",
        iterations: max_iter,
        residual: change,
    })
}
