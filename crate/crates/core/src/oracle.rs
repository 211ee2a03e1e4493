//! Brute-force baselines: all-pairs shortest paths and exhaustive matrix scans.
//! These are the ground truth for tests and the reference timings in benches.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{MetricsError, Result};
use crate::graph::{Graph, VertexId};
use crate::sssp::{sssp, DistanceMatrix};

pub const DEFAULT_MATRIX_CAP: usize = 20_000;

/// One SSSP per vertex, rows computed in parallel. Identical to the
/// sequential result since each row is an independent pure computation.
pub fn apsp_repeated_sssp(g: &Graph) -> Result<DistanceMatrix> {
    let rows = (0..g.vertex_count())
        .into_par_iter()
        .map(|s| sssp(g, s))
        .collect::<Result<Vec<_>>>()?;
    DistanceMatrix::from_rows(rows)
}

pub fn floyd_warshall(g: &Graph) -> Result<DistanceMatrix> {
    floyd_warshall_capped(g, DEFAULT_MATRIX_CAP)
}

pub fn floyd_warshall_capped(g: &Graph, cap: usize) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    if n > cap {
        return Err(MetricsError::MatrixTooLarge { n, cap });
    }
    let mut m = vec![f64::INFINITY; n * n];
    for i in 0..n {
        m[i * n + i] = 0.0;
    }
    for &(u, v, w) in g.edges() {
        m[u * n + v] = w;
        m[v * n + u] = w;
    }
    for k in 0..n {
        let row_k = m[k * n..(k + 1) * n].to_vec();
        for i in 0..n {
            let ik = m[i * n + k];
            if ik.is_infinite() {
                continue;
            }
            let row_i = &mut m[i * n..(i + 1) * n];
            for (ij, &kj) in row_i.iter_mut().zip(&row_k) {
                let through = ik + kj;
                if through < *ij {
                    *ij = through;
                }
            }
        }
    }
    if let Some(idx) = m.iter().position(|d| d.is_infinite()) {
        return Err(MetricsError::Disconnected {
            source_vertex: idx / n,
            unreachable: idx % n,
        });
    }
    DistanceMatrix::from_row_major(n, m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Baseline {
    /// Floyd-Warshall when the average degree exceeds n/4, else Dijkstra.
    Auto,
    Dijkstra,
    Floyd,
}

impl Baseline {
    /// The concrete algorithm for this graph.
    pub fn resolve(self, g: &Graph) -> Baseline {
        match self {
            Baseline::Auto if g.average_degree() > g.vertex_count() as f64 / 4.0 => Baseline::Floyd,
            Baseline::Auto => Baseline::Dijkstra,
            other => other,
        }
    }

    pub fn build_matrix(self, g: &Graph, cap: usize) -> Result<DistanceMatrix> {
        let n = g.vertex_count();
        if n > cap {
            return Err(MetricsError::MatrixTooLarge { n, cap });
        }
        match self.resolve(g) {
            Baseline::Floyd => floyd_warshall_capped(g, cap),
            _ => apsp_repeated_sssp(g),
        }
    }
}

impl FromStr for Baseline {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Baseline::Auto),
            "dijkstra" => Ok(Baseline::Dijkstra),
            "floyd" => Ok(Baseline::Floyd),
            other => Err(format!("unknown baseline `{other}`")),
        }
    }
}

impl fmt::Display for Baseline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Baseline::Auto => "auto",
            Baseline::Dijkstra => "dijkstra",
            Baseline::Floyd => "floyd",
        })
    }
}

/// Exhaustive metrics of a distance matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixMetrics {
    pub radius: f64,
    pub all_centers: Vec<VertexId>,
    pub diameter: f64,
    /// Pairs `(i, j)` with `i < j`; `(0, 0)` for a single vertex.
    pub all_peripheral_pairs: Vec<(VertexId, VertexId)>,
    pub eccentricities: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct OracleMetrics {
    pub metrics: MatrixMetrics,
    pub matrix: DistanceMatrix,
    pub baseline: Baseline,
    pub build_elapsed: Duration,
    pub scan_elapsed: Duration,
}

/// Radius from every row maximum, diameter from the upper triangle.
pub fn scan_metrics(m: &DistanceMatrix) -> MatrixMetrics {
    let n = m.n();
    let eccentricities: Vec<f64> = (0..n).map(|i| radius_scan_row(m.row(i))).collect();
    let radius = eccentricities.iter().copied().fold(f64::INFINITY, f64::min);
    let all_centers = (0..n).filter(|&i| eccentricities[i] == radius).collect();

    let diameter = diameter_scan(m);
    let mut pairs = Vec::new();
    for i in 0..n {
        let row = m.row(i);
        for (j, &d) in row.iter().enumerate().skip(i + 1) {
            if d == diameter {
                pairs.push((i, j));
            }
        }
    }
    if n == 1 {
        pairs.push((0, 0));
    }
    MatrixMetrics {
        radius,
        all_centers,
        diameter,
        all_peripheral_pairs: pairs,
        eccentricities,
    }
}

fn radius_scan_row(row: &[f64]) -> f64 {
    row.iter().copied().fold(0.0, f64::max)
}

/// Minimum row maximum over the full matrix; the trivial radius baseline.
pub fn radius_scan(m: &DistanceMatrix) -> f64 {
    (0..m.n())
        .map(|i| radius_scan_row(m.row(i)))
        .fold(f64::INFINITY, f64::min)
}

/// Maximum over the strict upper triangle; the trivial diameter baseline.
pub fn diameter_scan(m: &DistanceMatrix) -> f64 {
    let mut best = 0.0f64;
    for i in 0..m.n() {
        for &d in &m.row(i)[i + 1..] {
            best = best.max(d);
        }
    }
    best
}

/// Builds the matrix with the chosen baseline and scans it.
pub fn run_oracle(g: &Graph, baseline: Baseline, cap: usize) -> Result<OracleMetrics> {
    let baseline = baseline.resolve(g);
    let start = Instant::now();
    let matrix = baseline.build_matrix(g, cap)?;
    let build_elapsed = start.elapsed();
    let start = Instant::now();
    let metrics = scan_metrics(&matrix);
    let scan_elapsed = start.elapsed();
    Ok(OracleMetrics {
        metrics,
        matrix,
        baseline,
        build_elapsed,
        scan_elapsed,
    })
}
