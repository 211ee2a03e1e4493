//! Exact radius and center search driven by pivot vertices.
//!
//! For a pivot set `P`, every vertex `i` satisfies
//! `max_{p in P} m(i, p) <= ecc(i)`, so the minimum of that pivot maximum over
//! all vertices is a lower bound on the radius. The eccentricity of any
//! examined vertex is an upper bound. The search repeatedly examines the
//! unexamined vertex with the smallest pivot maximum, tightens both bounds and
//! adds the vertex farthest from that candidate as a new pivot, until the
//! bounds meet.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::VertexId;
use crate::provider::DistanceProvider;
use crate::sssp::eccentricity;

/// Both radius bounds after one examined candidate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundStep {
    pub lower: f64,
    pub upper: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub radius: f64,
    pub center: VertexId,
    pub pivots: Vec<VertexId>,
    pub candidates_examined: usize,
    pub sssp_count: usize,
    pub rows_accessed: usize,
    pub bound_trace: Vec<BoundStep>,
}

#[derive(Clone, Debug)]
pub struct PivotState {
    pivots: Vec<VertexId>,
    is_pivot: Vec<bool>,
    pivot_max: Vec<f64>,
    examined: Vec<bool>,
    examined_count: usize,
    pub r_lower: f64,
    pub r_upper: f64,
    pub best_center: Option<VertexId>,
}

impl PivotState {
    pub fn new(n: usize) -> Self {
        Self {
            pivots: Vec::new(),
            is_pivot: vec![false; n],
            // Distances are non-negative, so 0 is the identity for the max.
            pivot_max: vec![0.0; n],
            examined: vec![false; n],
            examined_count: 0,
            r_lower: 0.0,
            r_upper: f64::INFINITY,
            best_center: None,
        }
    }

    pub fn pivots(&self) -> &[VertexId] {
        &self.pivots
    }

    pub fn pivot_max(&self) -> &[f64] {
        &self.pivot_max
    }

    pub fn is_examined(&self, v: VertexId) -> bool {
        self.examined[v]
    }

    pub fn examined_count(&self) -> usize {
        self.examined_count
    }

    pub fn contains_pivot(&self, v: VertexId) -> bool {
        self.is_pivot[v]
    }

    /// Folds the row of `pivot` into the running pivot maximum. Returns
    /// `false` (and changes nothing) if `pivot` is already in the set.
    pub fn add_pivot(&mut self, pivot: VertexId, row: &[f64]) -> bool {
        if self.is_pivot[pivot] {
            return false;
        }
        self.is_pivot[pivot] = true;
        self.pivots.push(pivot);
        for (acc, &d) in self.pivot_max.iter_mut().zip(row) {
            if d > *acc {
                *acc = d;
            }
        }
        true
    }

    /// Picks the unexamined vertex with the smallest pivot maximum and raises
    /// `r_lower` to the pivot-maximum minimum over all vertices. Returns
    /// `None` once every vertex has been examined.
    pub fn select_candidate(&mut self) -> Option<(VertexId, f64)> {
        let mut bound = f64::INFINITY;
        let mut candidate: Option<(VertexId, f64)> = None;
        for (v, &value) in self.pivot_max.iter().enumerate() {
            if value < bound {
                bound = value;
            }
            if !self.examined[v] && candidate.is_none_or(|(_, best)| value < best) {
                candidate = Some((v, value));
            }
        }
        let (c, _) = candidate?;
        if bound > self.r_lower {
            self.r_lower = bound;
        }
        Some((c, bound))
    }

    pub fn mark_examined(&mut self, v: VertexId, ecc: f64) {
        if !self.examined[v] {
            self.examined[v] = true;
            self.examined_count += 1;
        }
        if ecc < self.r_upper {
            self.r_upper = ecc;
            self.best_center = Some(v);
        }
    }
}

/// Two mutually remote vertices: starting at vertex 0, hop to the farthest
/// vertex until the walk returns to the vertex it just left. Capped at
/// `min(n, 64)` row reads, in which case the last pair is returned.
pub fn far_pair(p: &mut DistanceProvider) -> Result<(VertexId, VertexId)> {
    let n = p.vertex_count();
    if n == 1 {
        return Ok((0, 0));
    }
    let cap = n.min(64);
    let mut prev = 0;
    let mut cur = eccentricity(p.row(prev)?).1;
    let mut steps = 1;
    loop {
        if steps >= cap {
            return Ok((prev, cur));
        }
        let next = eccentricity(p.row(cur)?).1;
        steps += 1;
        if next == prev {
            return Ok((cur, next));
        }
        prev = cur;
        cur = next;
    }
}

pub fn find_radius(p: &mut DistanceProvider) -> Result<RadiusResult> {
    let n = p.vertex_count();
    let mut state = PivotState::new(n);
    let (p1, p2) = far_pair(p)?;
    for pivot in [p1, p2] {
        if !state.contains_pivot(pivot) {
            state.add_pivot(pivot, p.row(pivot)?);
        }
    }

    let mut trace = Vec::new();
    while let Some((candidate, _)) = state.select_candidate() {
        let (ecc, farthest) = eccentricity(p.row(candidate)?);
        state.mark_examined(candidate, ecc);
        trace.push(BoundStep {
            lower: state.r_lower,
            upper: state.r_upper,
        });
        if state.r_lower >= state.r_upper {
            break;
        }
        if !state.contains_pivot(farthest) {
            state.add_pivot(farthest, p.row(farthest)?);
        }
    }

    let stats = p.stats();
    Ok(RadiusResult {
        radius: state.r_upper,
        center: state
            .best_center
            .expect("at least one candidate is examined"),
        pivots: state.pivots,
        candidates_examined: state.examined_count,
        sssp_count: stats.sssp_count,
        rows_accessed: stats.rows_accessed,
        bound_trace: trace,
    })
}
