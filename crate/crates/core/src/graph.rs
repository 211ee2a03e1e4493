//! Immutable weighted undirected graph in compressed sparse row form.
//!
//! Construction goes through [`GraphBuilder`], which normalizes the edge set:
//! self-loops are dropped and parallel edges collapse to their minimum weight.
//! Neither transformation changes any shortest-path distance.

use std::collections::VecDeque;

use crate::error::{MetricsError, Result};

pub type VertexId = usize;

#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    weights: Vec<f64>,
    /// Canonical edge list, `u < v`, sorted lexicographically.
    edges: Vec<(VertexId, VertexId, f64)>,
    labels: Vec<u64>,
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of undirected edges after normalization.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of directed arcs (both directions of every edge), the convention
    /// used by DIMACS headers.
    pub fn arc_count(&self) -> usize {
        self.targets.len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, f64)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        self.targets[range.clone()]
            .iter()
            .copied()
            .zip(self.weights[range].iter().copied())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn average_degree(&self) -> f64 {
        if self.vertex_count() == 0 {
            0.0
        } else {
            self.arc_count() as f64 / self.vertex_count() as f64
        }
    }

    pub fn edges(&self) -> &[(VertexId, VertexId, f64)] {
        &self.edges
    }

    /// External id of an internal vertex. DIMACS input keeps its 1-based ids.
    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Weight of the edge `u`-`v`, if present.
    pub fn edge_weight(&self, u: VertexId, v: VertexId) -> Option<f64> {
        self.neighbors(u).find(|&(t, _)| t == v).map(|(_, w)| w)
    }

    /// Full scan confirming every arc has a reverse arc of identical weight.
    pub fn is_symmetric(&self) -> bool {
        (0..self.vertex_count()).all(|u| {
            self.neighbors(u)
                .all(|(v, w)| self.edge_weight(v, u).is_some_and(|back| back == w))
        })
    }

    /// First vertex (in id order) not reachable from vertex 0, if any.
    pub fn first_unreachable(&self) -> Option<VertexId> {
        let n = self.vertex_count();
        if n == 0 {
            return None;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for (v, _) in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }
}

/// True iff a traversal from vertex 0 reaches every vertex.
pub fn check_connected(g: &Graph) -> bool {
    g.first_unreachable().is_none()
}

#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<(VertexId, VertexId, f64)>,
    labels: Option<Vec<u64>>,
}

impl GraphBuilder {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            n: vertex_count,
            edges: Vec::new(),
            labels: None,
        }
    }

    pub fn with_capacity(vertex_count: usize, edges: usize) -> Self {
        Self {
            n: vertex_count,
            edges: Vec::with_capacity(edges),
            labels: None,
        }
    }

    /// Overrides the default labels `1..=n`.
    pub fn labels(mut self, labels: Vec<u64>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, weight: f64) -> Result<()> {
        for vertex in [u, v] {
            if vertex >= self.n {
                return Err(MetricsError::VertexOutOfRange { vertex, n: self.n });
            }
        }
        if !(weight >= 0.0 && weight.is_finite()) {
            return Err(MetricsError::InvalidGraph(format!(
                "edge ({u}, {v}) has weight {weight}; weights must be finite and non-negative"
            )));
        }
        if u != v {
            self.edges.push((u.min(v), u.max(v), weight));
        }
        Ok(())
    }

    pub fn build(self) -> Result<Graph> {
        let n = self.n;
        if n == 0 {
            return Err(MetricsError::InvalidGraph("graph has no vertices".into()));
        }
        let labels = match self.labels {
            Some(labels) if labels.len() != n => {
                return Err(MetricsError::InvalidGraph(format!(
                    "{} labels supplied for {n} vertices",
                    labels.len()
                )))
            }
            Some(labels) => labels,
            None => (1..=n as u64).collect(),
        };

        let mut edges = self.edges;
        edges.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then(a.2.total_cmp(&b.2)));
        // Sorted by weight within a (u, v) run, so keeping the first is the min.
        edges.dedup_by(|later, earlier| later.0 == earlier.0 && later.1 == earlier.1);

        let mut degree = vec![0usize; n];
        for &(u, v, _) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let arcs = offsets[n];
        let mut targets = vec![0; arcs];
        let mut weights = vec![0.0; arcs];
        let mut cursor = offsets[..n].to_vec();
        for &(u, v, w) in &edges {
            targets[cursor[u]] = v;
            weights[cursor[u]] = w;
            cursor[u] += 1;
            targets[cursor[v]] = u;
            weights[cursor[v]] = w;
            cursor[v] += 1;
        }

        Ok(Graph {
            offsets,
            targets,
            weights,
            edges,
            labels,
        })
    }
}

impl Graph {
    /// Convenience constructor from an edge list with default labels.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId, f64)]) -> Result<Self> {
        let mut builder = GraphBuilder::with_capacity(n, edges.len());
        for &(u, v, w) in edges {
            builder.add_edge(u, v, w)?;
        }
        builder.build()
    }
}
