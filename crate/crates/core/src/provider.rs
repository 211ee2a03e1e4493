//! Uniform row access over either a graph (rows computed on demand by SSSP)
//! or a precomputed distance matrix.
//!
//! The search algorithms only ever see a [`DistanceProvider`], so the same
//! code answers the problem with and without a known distance matrix. The
//! provider counts how many rows were read and how many had to be computed.

use serde::{Deserialize, Serialize};

use crate::error::{MetricsError, Result};
use crate::graph::{Graph, VertexId};
use crate::sssp::{sssp, DistanceMatrix};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AccessStats {
    /// Rows computed by SSSP (cache misses in on-demand mode).
    pub sssp_count: usize,
    /// Rows read, cached or not.
    pub rows_accessed: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProviderMode {
    OnDemand,
    MatrixBacked,
}

enum Backing<'a> {
    OnDemand {
        graph: &'a Graph,
        // No eviction: rows live as long as the provider.
        cache: Vec<Option<Box<[f64]>>>,
    },
    Matrix(&'a DistanceMatrix),
}

pub struct DistanceProvider<'a> {
    backing: Backing<'a>,
    stats: AccessStats,
}

impl<'a> DistanceProvider<'a> {
    pub fn on_demand(graph: &'a Graph) -> Self {
        Self {
            backing: Backing::OnDemand {
                graph,
                cache: vec![None; graph.vertex_count()],
            },
            stats: AccessStats::default(),
        }
    }

    pub fn matrix(matrix: &'a DistanceMatrix) -> Self {
        Self {
            backing: Backing::Matrix(matrix),
            stats: AccessStats::default(),
        }
    }

    pub fn mode(&self) -> ProviderMode {
        match self.backing {
            Backing::OnDemand { .. } => ProviderMode::OnDemand,
            Backing::Matrix(_) => ProviderMode::MatrixBacked,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match &self.backing {
            Backing::OnDemand { graph, .. } => graph.vertex_count(),
            Backing::Matrix(m) => m.n(),
        }
    }

    pub fn stats(&self) -> AccessStats {
        self.stats
    }

    /// Whether reading `source` would not trigger an SSSP.
    pub fn is_available(&self, source: VertexId) -> bool {
        match &self.backing {
            Backing::OnDemand { cache, .. } => cache.get(source).is_some_and(Option::is_some),
            Backing::Matrix(m) => source < m.n(),
        }
    }

    /// Distances from `source` to every vertex, computing them if needed.
    pub fn row(&mut self, source: VertexId) -> Result<&[f64]> {
        let n = self.vertex_count();
        if source >= n {
            return Err(MetricsError::VertexOutOfRange { vertex: source, n });
        }
        self.stats.rows_accessed += 1;
        match &mut self.backing {
            Backing::Matrix(m) => Ok(m.row(source)),
            Backing::OnDemand { graph, cache } => {
                let slot = &mut cache[source];
                if slot.is_none() {
                    let row = sssp(graph, source)?;
                    self.stats.sssp_count += 1;
                    *slot = Some(row.dist.into_boxed_slice());
                }
                Ok(slot.as_deref().unwrap())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(0, 1, 1.0), (1, 2, 2.0)]).unwrap()
    }

    #[test]
    fn on_demand_caches_rows() {
        let g = path3();
        let mut p = DistanceProvider::on_demand(&g);
        assert!(!p.is_available(1));
        let first = p.row(1).unwrap().to_vec();
        let second = p.row(1).unwrap().to_vec();
        assert_eq!(first, second);
        assert!(p.is_available(1));
        assert_eq!(
            p.stats(),
            AccessStats {
                sssp_count: 1,
                rows_accessed: 2
            }
        );
    }

    #[test]
    fn matrix_backed_never_runs_sssp() {
        let m =
            DistanceMatrix::from_row_major(3, vec![0.0, 1.0, 3.0, 1.0, 0.0, 2.0, 3.0, 2.0, 0.0])
                .unwrap();
        let mut p = DistanceProvider::matrix(&m);
        for s in [0, 1, 2, 2] {
            p.row(s).unwrap();
        }
        assert_eq!(p.stats().sssp_count, 0);
        assert_eq!(p.stats().rows_accessed, 4);
        assert_eq!(p.mode(), ProviderMode::MatrixBacked);
    }

    #[test]
    fn both_modes_agree_on_path() {
        let g = path3();
        let m =
            DistanceMatrix::from_row_major(3, vec![0.0, 1.0, 3.0, 1.0, 0.0, 2.0, 3.0, 2.0, 0.0])
                .unwrap();
        let mut lazy = DistanceProvider::on_demand(&g);
        let mut dense = DistanceProvider::matrix(&m);
        assert_eq!(lazy.row(2).unwrap(), dense.row(2).unwrap());
    }

    #[test]
    fn out_of_range_and_disconnected() {
        let g = Graph::from_edges(3, &[(0, 1, 1.0)]).unwrap();
        let mut p = DistanceProvider::on_demand(&g);
        assert!(matches!(
            p.row(5),
            Err(MetricsError::VertexOutOfRange { .. })
        ));
        assert!(matches!(p.row(0), Err(MetricsError::Disconnected { .. })));
        assert_eq!(p.stats().sssp_count, 0);
    }
}
