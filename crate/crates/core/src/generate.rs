//! Seeded graph generators.
//!
//! Generation is a pure function of [`GraphSpec`]: the same spec always
//! yields the same edge list, on every platform.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{MetricsError, Result};
use crate::graph::{Graph, GraphBuilder, VertexId};

/// Fractional weights are drawn on a grid of `1 / 2^20`. Sums of such values
/// stay exact in an `f64` up to about 8.6e9, so distances do not depend on
/// the order in which a path is summed and every distance appears with the
/// same bit pattern in the rows of both of its endpoints.
pub const WEIGHT_GRID: f64 = (1u64 << 20) as f64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Complete,
    /// Uniform random spanning tree plus uniform extra edges up to `edges`.
    SparseConnected {
        edges: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Integer,
    Real,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GraphSpec {
    pub kind: GraphKind,
    pub n: usize,
    pub seed: u64,
    pub weight_lo: f64,
    pub weight_hi: f64,
    pub weights: WeightKind,
}

impl GraphSpec {
    pub const DEFAULT_WEIGHT_RANGE: (f64, f64) = (0.0, 1.0);

    pub fn complete(n: usize, seed: u64) -> Self {
        Self {
            kind: GraphKind::Complete,
            n,
            seed,
            weight_lo: Self::DEFAULT_WEIGHT_RANGE.0,
            weight_hi: Self::DEFAULT_WEIGHT_RANGE.1,
            weights: WeightKind::Real,
        }
    }

    pub fn sparse(n: usize, edges: usize, seed: u64) -> Self {
        Self {
            kind: GraphKind::SparseConnected { edges },
            ..Self::complete(n, seed)
        }
    }

    pub fn with_weights(mut self, lo: f64, hi: f64, weights: WeightKind) -> Self {
        self.weight_lo = lo;
        self.weight_hi = hi;
        self.weights = weights;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(MetricsError::InvalidSpec(msg));
        if self.n == 0 {
            return bad("n must be positive".into());
        }
        if !(self.weight_lo >= 0.0
            && self.weight_lo <= self.weight_hi
            && self.weight_hi.is_finite())
        {
            return bad(format!(
                "weight range [{}, {}] must satisfy 0 <= lo <= hi < inf",
                self.weight_lo, self.weight_hi
            ));
        }
        if self.weights == WeightKind::Integer && self.weight_lo.ceil() > self.weight_hi.floor() {
            return bad(format!(
                "no integer weight in [{}, {}]",
                self.weight_lo, self.weight_hi
            ));
        }
        if let GraphKind::SparseConnected { edges } = self.kind {
            let max = max_edges(self.n);
            if edges + 1 < self.n {
                return bad(format!("{edges} edges cannot connect {} vertices", self.n));
            }
            if edges > max {
                return bad(format!(
                    "{edges} edges exceed the {max} possible for n={}",
                    self.n
                ));
            }
        }
        Ok(())
    }

    /// Short name used in reports, e.g. `complete-1000-s1`.
    pub fn name(&self) -> String {
        match self.kind {
            GraphKind::Complete => format!("complete-{}-s{}", self.n, self.seed),
            GraphKind::SparseConnected { edges } => {
                format!("sparse-{}-{}-s{}", self.n, edges, self.seed)
            }
        }
    }
}

fn max_edges(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Parses `kind:n[:m]:seed=s[:w=lo..hi][:int]`, where kind is `complete` or
/// `sparse`.
impl FromStr for GraphSpec {
    type Err = MetricsError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| MetricsError::InvalidSpec(format!("`{s}`: {msg}"));
        let mut parts = s.split(':');
        let kind = parts.next().unwrap_or_default();
        let n: usize = parts
            .next()
            .ok_or_else(|| bad("missing vertex count"))?
            .parse()
            .map_err(|_| bad("vertex count is not an integer"))?;

        let mut edges = None;
        let mut seed = None;
        let mut range = Self::DEFAULT_WEIGHT_RANGE;
        let mut weights = WeightKind::Real;
        for part in parts {
            if let Some(v) = part.strip_prefix("seed=") {
                seed = Some(v.parse().map_err(|_| bad("seed is not an integer"))?);
            } else if let Some(v) = part.strip_prefix("w=") {
                let (lo, hi) = v
                    .split_once("..")
                    .ok_or_else(|| bad("weights must be `w=lo..hi`"))?;
                range = (
                    lo.parse().map_err(|_| bad("bad weight lower bound"))?,
                    hi.parse().map_err(|_| bad("bad weight upper bound"))?,
                );
            } else if part == "int" {
                weights = WeightKind::Integer;
            } else if edges.is_none() && seed.is_none() {
                edges = Some(
                    part.parse()
                        .map_err(|_| bad("edge count is not an integer"))?,
                );
            } else {
                return Err(bad(&format!("unrecognized field `{part}`")));
            }
        }
        let seed = seed.ok_or_else(|| bad("missing `seed=<s>`"))?;

        let kind = match (kind, edges) {
            ("complete", None) => GraphKind::Complete,
            ("complete", Some(_)) => return Err(bad("complete graphs take no edge count")),
            ("sparse", Some(edges)) => GraphKind::SparseConnected { edges },
            ("sparse", None) => return Err(bad("sparse graphs need an edge count")),
            _ => return Err(bad("kind must be `complete` or `sparse`")),
        };
        let spec = GraphSpec {
            kind,
            n,
            seed,
            weight_lo: range.0,
            weight_hi: range.1,
            weights,
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GraphKind::Complete => write!(f, "complete:{}", self.n)?,
            GraphKind::SparseConnected { edges } => write!(f, "sparse:{}:{}", self.n, edges)?,
        }
        write!(
            f,
            ":seed={}:w={}..{}",
            self.seed, self.weight_lo, self.weight_hi
        )?;
        if self.weights == WeightKind::Integer {
            write!(f, ":int")?;
        }
        Ok(())
    }
}

struct WeightSampler {
    lo: f64,
    grid: Option<(u64, u64, f64)>,
}

impl WeightSampler {
    fn new(spec: &GraphSpec) -> Self {
        let scale = match spec.weights {
            WeightKind::Integer => 1.0,
            WeightKind::Real => WEIGHT_GRID,
        };
        let first = (spec.weight_lo * scale).ceil();
        let last = (spec.weight_hi * scale).floor();
        // A range narrower than one grid step degenerates to constant weights.
        let grid = (first <= last).then_some((first as u64, last as u64, scale));
        Self {
            lo: spec.weight_lo,
            grid,
        }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> f64 {
        match self.grid {
            Some((first, last, scale)) => rng.gen_range(first..=last) as f64 / scale,
            None => self.lo,
        }
    }
}

pub fn generate(spec: &GraphSpec) -> Result<Graph> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let weights = WeightSampler::new(spec);
    let n = spec.n;

    match spec.kind {
        GraphKind::Complete => {
            let mut builder = GraphBuilder::with_capacity(n, max_edges(n));
            for u in 0..n {
                for v in u + 1..n {
                    builder.add_edge(u, v, weights.sample(&mut rng))?;
                }
            }
            builder.build()
        }
        GraphKind::SparseConnected { edges } => {
            let mut builder = GraphBuilder::with_capacity(n, edges);
            let mut present = HashSet::with_capacity(edges);
            for (u, v) in random_spanning_tree(n, &mut rng) {
                present.insert((u.min(v), u.max(v)));
                builder.add_edge(u, v, weights.sample(&mut rng))?;
            }
            while present.len() < edges {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u == v || !present.insert((u.min(v), u.max(v))) {
                    continue;
                }
                builder.add_edge(u, v, weights.sample(&mut rng))?;
            }
            builder.build()
        }
    }
}

/// Uniformly random labeled tree, decoded from a random Prüfer sequence.
fn random_spanning_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(VertexId, VertexId)> {
    match n {
        0 | 1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let code: Vec<VertexId> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &code {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<VertexId>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut tree = Vec::with_capacity(n - 1);
    for &v in &code {
        let Reverse(leaf) = leaves.pop().expect("Prüfer decoding always has a leaf");
        tree.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    tree.push((a, b));
    tree
}
