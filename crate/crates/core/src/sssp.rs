//! Single-source shortest paths and the distance containers built from it.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{MetricsError, Result};
use crate::graph::{Graph, VertexId};

/// Shortest-path distances from one source to every vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceRow {
    pub source: VertexId,
    pub dist: Vec<f64>,
}

impl DistanceRow {
    pub fn eccentricity(&self) -> (f64, VertexId) {
        eccentricity(&self.dist)
    }
}

/// Maximum entry of a row and the smallest vertex id attaining it.
pub fn eccentricity(row: &[f64]) -> (f64, VertexId) {
    let mut best = (f64::NEG_INFINITY, 0);
    for (v, &d) in row.iter().enumerate() {
        if d > best.0 {
            best = (d, v);
        }
    }
    best
}

#[derive(Copy, Clone, PartialEq)]
struct HeapEntry {
    dist: f64,
    vertex: VertexId,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed for a min-heap on distance.
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dijkstra with a binary heap and lazy deletion of stale entries.
pub fn sssp(g: &Graph, source: VertexId) -> Result<DistanceRow> {
    let n = g.vertex_count();
    if source >= n {
        return Err(MetricsError::VertexOutOfRange { vertex: source, n });
    }
    let mut dist = vec![f64::INFINITY; n];
    let mut heap = BinaryHeap::with_capacity(n);
    dist[source] = 0.0;
    heap.push(HeapEntry {
        dist: 0.0,
        vertex: source,
    });

    while let Some(HeapEntry { dist: d, vertex: u }) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for (v, w) in g.neighbors(u) {
            let candidate = d + w;
            if candidate < dist[v] {
                dist[v] = candidate;
                heap.push(HeapEntry {
                    dist: candidate,
                    vertex: v,
                });
            }
        }
    }

    if let Some(unreachable) = dist.iter().position(|d| d.is_infinite()) {
        return Err(MetricsError::Disconnected {
            source_vertex: source,
            unreachable,
        });
    }
    Ok(DistanceRow { source, dist })
}

/// Dense row-major all-pairs distance matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DistanceMatrix {
    /// Builds from row-major data; `data.len()` must be `n * n`.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 || data.len() != n * n {
            return Err(MetricsError::InvalidGraph(format!(
                "matrix data of length {} does not describe an {n}x{n} matrix",
                data.len()
            )));
        }
        Ok(Self { n, data })
    }

    pub fn from_rows(rows: Vec<DistanceRow>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.source != i || row.dist.len() != n {
                return Err(MetricsError::InvalidGraph(format!(
                    "row {i} has source {} and length {}",
                    row.source,
                    row.dist.len()
                )));
            }
            data.extend_from_slice(&row.dist);
        }
        Self::from_row_major(n, data)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: VertexId) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn get(&self, i: VertexId, j: VertexId) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Zero diagonal, finite non-negative entries, exact symmetry.
    pub fn check_valid(&self) -> Result<()> {
        for i in 0..self.n {
            if self.get(i, i) != 0.0 {
                return Err(MetricsError::InvalidGraph(format!(
                    "m[{i}][{i}] is not zero"
                )));
            }
            for j in 0..self.n {
                let d = self.get(i, j);
                if !(d >= 0.0 && d.is_finite()) {
                    return Err(MetricsError::InvalidGraph(format!("m[{i}][{j}] = {d}")));
                }
                if d != self.get(j, i) {
                    return Err(MetricsError::InvalidGraph(format!(
                        "m[{i}][{j}] != m[{j}][{i}]"
                    )));
                }
            }
        }
        Ok(())
    }
}
