//! Exact diameter and peripheral pair search, seeded by a finished radius
//! search.
//!
//! Both algorithms start from the largest distance between two pivots and
//! only look at distances that could still exceed it. With `c` a center and
//! `d` the current lower bound, the triangle inequality gives
//! `m(i, j) <= m(i, c) + m(c, j)`, so:
//!
//! * [`diameter_row_scan`] reads the full rows of vertices with
//!   `m(i, c) > d / 2` only. Cheap when rows are already stored.
//! * [`diameter_pair_sweep`] visits vertex pairs in an order that makes
//!   `m(k, c) + m(c, l)` non-increasing and stops once that sum is `<= d`.
//!   It computes rows only for pairs that survive the filter.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::VertexId;
use crate::provider::DistanceProvider;
use crate::radius::{find_radius, RadiusResult};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiameterResult {
    pub diameter: f64,
    pub peripheral_pair: (VertexId, VertexId),
    /// Lower bound after the pivot phase, then after every improvement.
    pub d_lower_trace: Vec<f64>,
    pub vertices_scanned: usize,
    pub pairs_checked: usize,
    /// Totals for the whole run, radius phase included.
    pub sssp_count: usize,
    pub rows_accessed: usize,
    pub radius_result: RadiusResult,
}

/// Vertices sorted by distance to the center, farthest first, ties by id.
#[derive(Clone, Debug, PartialEq)]
pub struct CandidateOrder {
    pub order: Vec<VertexId>,
    pub dist_to_center: Vec<f64>,
}

impl CandidateOrder {
    pub fn new(center_row: &[f64]) -> Self {
        let mut order: Vec<VertexId> = (0..center_row.len()).collect();
        order.sort_unstable_by(|&a, &b| {
            center_row[b]
                .partial_cmp(&center_row[a])
                .unwrap_or(Ordering::Equal)
                .then(a.cmp(&b))
        });
        Self {
            order,
            dist_to_center: center_row.to_vec(),
        }
    }

    /// Upper bound on `m(order[i], order[j])`.
    pub fn pair_bound(&self, i: usize, j: usize) -> f64 {
        self.dist_to_center[self.order[i]] + self.dist_to_center[self.order[j]]
    }
}

/// Largest distance between two pivots, with the first achieving pair in
/// scan order. Every pivot row is already cached after the radius search.
pub fn initial_lower_bound(
    pivots: &[VertexId],
    p: &mut DistanceProvider,
) -> Result<(f64, (VertexId, VertexId))> {
    let Some(&first) = pivots.first() else {
        return Ok((0.0, (0, 0)));
    };
    let mut best = (0.0, (first, first));
    let mut found = false;
    for (i, &a) in pivots.iter().enumerate() {
        if i + 1 == pivots.len() {
            break;
        }
        let row = p.row(a)?;
        for &b in &pivots[i + 1..] {
            if !found || row[b] > best.0 {
                best = (row[b], (a, b));
                found = true;
            }
        }
    }
    Ok(best)
}

struct Search {
    d_lower: f64,
    pair: (VertexId, VertexId),
    trace: Vec<f64>,
}

impl Search {
    fn start(bound: (f64, (VertexId, VertexId))) -> Self {
        Self {
            d_lower: bound.0,
            pair: bound.1,
            trace: vec![bound.0],
        }
    }

    fn offer(&mut self, d: f64, pair: (VertexId, VertexId)) {
        if d > self.d_lower {
            self.d_lower = d;
            self.pair = pair;
            self.trace.push(d);
        }
    }
}

fn tiny_graph(p: &mut DistanceProvider, rr: RadiusResult) -> Result<Option<DiameterResult>> {
    let (diameter, pair) = match p.vertex_count() {
        1 => (0.0, (0, 0)),
        2 => (p.row(0)?[1], (0, 1)),
        _ => return Ok(None),
    };
    let stats = p.stats();
    Ok(Some(DiameterResult {
        diameter,
        peripheral_pair: pair,
        d_lower_trace: vec![diameter],
        vertices_scanned: 0,
        pairs_checked: 0,
        sssp_count: stats.sssp_count,
        rows_accessed: stats.rows_accessed,
        radius_result: rr,
    }))
}

/// Diameter by scanning the rows of vertices far from the center. Intended
/// for a matrix-backed provider; `rr` must come from the same provider.
pub fn diameter_row_scan(p: &mut DistanceProvider, rr: RadiusResult) -> Result<DiameterResult> {
    if let Some(done) = tiny_graph(p, rr.clone())? {
        return Ok(done);
    }
    let mut search = Search::start(initial_lower_bound(&rr.pivots, p)?);
    let to_center = p.row(rr.center)?.to_vec();
    let mut scanned = 0;
    let mut pairs = 0;
    for (i, &dc) in to_center.iter().enumerate() {
        // The threshold follows the bound as it grows.
        if dc <= search.d_lower / 2.0 {
            continue;
        }
        scanned += 1;
        pairs += to_center.len();
        let row = p.row(i)?;
        let (best, j) = crate::sssp::eccentricity(row);
        search.offer(best, (i, j));
    }
    let stats = p.stats();
    Ok(DiameterResult {
        diameter: search.d_lower,
        peripheral_pair: search.pair,
        d_lower_trace: search.trace,
        vertices_scanned: scanned,
        pairs_checked: pairs,
        sssp_count: stats.sssp_count,
        rows_accessed: stats.rows_accessed,
        radius_result: rr,
    })
}

/// Diameter by sweeping vertex pairs in decreasing order of distance to the
/// center. Intended for an on-demand provider; `rr` must come from the same
/// provider so the center and pivot rows are cached.
pub fn diameter_pair_sweep(p: &mut DistanceProvider, rr: RadiusResult) -> Result<DiameterResult> {
    if let Some(done) = tiny_graph(p, rr.clone())? {
        return Ok(done);
    }
    let mut search = Search::start(initial_lower_bound(&rr.pivots, p)?);
    let candidates = CandidateOrder::new(p.row(rr.center)?);
    let order = &candidates.order;
    let n = order.len();
    let mut touched = vec![false; n];
    let mut pairs = 0;

    'rows: for i in 0..n - 1 {
        for j in i + 1..n {
            pairs += 1;
            if candidates.pair_bound(i, j) <= search.d_lower {
                if j == i + 1 {
                    // Every later pair has a bound no larger than this one.
                    break 'rows;
                }
                continue 'rows;
            }
            let (k, l) = (order[i], order[j]);
            touched[k] = true;
            touched[l] = true;
            p.row(l)?;
            let d = p.row(k)?[l];
            search.offer(d, (k, l));
        }
    }

    let stats = p.stats();
    Ok(DiameterResult {
        diameter: search.d_lower,
        peripheral_pair: search.pair,
        d_lower_trace: search.trace,
        vertices_scanned: touched.iter().filter(|&&t| t).count(),
        pairs_checked: pairs,
        sssp_count: stats.sssp_count,
        rows_accessed: stats.rows_accessed,
        radius_result: rr,
    })
}

/// Radius then diameter over one provider, using the row scan.
pub fn radius_and_diameter_row_scan(p: &mut DistanceProvider) -> Result<DiameterResult> {
    let rr = find_radius(p)?;
    diameter_row_scan(p, rr)
}

/// Radius then diameter over one provider, using the pair sweep.
pub fn radius_and_diameter_pair_sweep(p: &mut DistanceProvider) -> Result<DiameterResult> {
    let rr = find_radius(p)?;
    diameter_pair_sweep(p, rr)
}
