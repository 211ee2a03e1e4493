//! Machine-readable run reports (JSON) and bench rows (CSV).
//!
//! Vertex ids in reports are always the graph's external labels, so DIMACS
//! input is echoed with its original 1-based ids.

use std::fmt;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    /// Radius search, rows computed on demand.
    R1,
    /// Radius search over a stored matrix.
    R2,
    /// Radius + diameter, on-demand pair sweep.
    D1,
    /// Radius + diameter, row scan over a stored matrix.
    D2,
    /// All-pairs baseline, radius.
    RC1,
    /// All-pairs baseline, diameter.
    DC1,
    /// Full matrix scan, radius.
    RC2,
    /// Upper-triangle scan, diameter.
    DC2,
}

impl Algorithm {
    pub fn is_radius(self) -> bool {
        matches!(
            self,
            Algorithm::R1 | Algorithm::R2 | Algorithm::RC1 | Algorithm::RC2
        )
    }

    /// The brute-force algorithm a fast one is compared against.
    pub fn baseline(self) -> Algorithm {
        match self {
            Algorithm::R1 | Algorithm::RC1 => Algorithm::RC1,
            Algorithm::D1 | Algorithm::DC1 => Algorithm::DC1,
            Algorithm::R2 | Algorithm::RC2 => Algorithm::RC2,
            Algorithm::D2 | Algorithm::DC2 => Algorithm::DC2,
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InputKind {
    File,
    Generated,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub graph: String,
    pub source: InputKind,
    pub n: usize,
    /// Undirected edges.
    pub m: usize,
    /// Directed arcs, `2m`, the DIMACS header convention.
    pub arcs: usize,
    pub algorithm: Algorithm,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub centers: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diameter: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<(u64, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<(u64, u64)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pivots: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidates_examined: Option<usize>,
    pub sssp_count: usize,
    pub sssp_share: f64,
    pub rows_accessed: usize,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix_build_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub baseline: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Keys whose values vary between otherwise identical runs.
pub const TIMING_FIELDS: [&str; 2] = ["elapsed_ms", "matrix_build_ms"];

impl RunReport {
    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "{:<4} {} (n={}, m={})",
            self.algorithm, self.graph, self.n, self.m
        );
        if let Some(r) = self.radius {
            line.push_str(&format!(" radius={r}"));
        }
        if let Some(c) = self.center {
            line.push_str(&format!(" center={c}"));
        }
        if let Some(centers) = &self.centers {
            line.push_str(&format!(" centers={}", centers.len()));
        }
        if let Some(d) = self.diameter {
            line.push_str(&format!(" diameter={d}"));
        }
        if let Some((a, b)) = self.pair {
            line.push_str(&format!(" pair=({a},{b})"));
        }
        if let Some(pairs) = &self.pairs {
            line.push_str(&format!(" peripheral_pairs={}", pairs.len()));
        }
        line.push_str(&format!(
            " sssp={} share={:.4} rows={} time={:.3}ms",
            self.sssp_count, self.sssp_share, self.rows_accessed, self.elapsed_ms
        ));
        line
    }
}

pub fn write_json_reports<W: Write>(reports: &[RunReport], mut out: W) -> serde_json::Result<()> {
    serde_json::to_writer_pretty(&mut out, reports)?;
    out.write_all(b"\n").map_err(serde_json::Error::io)
}

pub fn read_json_reports<R: Read>(input: R) -> serde_json::Result<Vec<RunReport>> {
    serde_json::from_reader(input)
}

/// JSON with timing fields removed, for determinism comparisons.
pub fn strip_timing(json: &str) -> serde_json::Result<String> {
    let mut value: serde_json::Value = serde_json::from_str(json)?;
    fn strip(v: &mut serde_json::Value) {
        match v {
            serde_json::Value::Object(map) => {
                for key in TIMING_FIELDS {
                    map.remove(key);
                }
                map.values_mut().for_each(strip);
            }
            serde_json::Value::Array(items) => items.iter_mut().for_each(strip),
            _ => {}
        }
    }
    strip(&mut value);
    serde_json::to_string(&value)
}

/// One CSV line of a bench run: one algorithm on one input, averaged over
/// repeats.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub algo: Option<Algorithm>,
    pub value: Option<f64>,
    pub sssp_count: Option<f64>,
    pub sssp_share: Option<f64>,
    pub elapsed_ms: Option<f64>,
    pub speedup_vs_baseline: Option<f64>,
    pub errors: String,
}

pub fn write_bench_csv<W: Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_bench_csv<R: Read>(input: R) -> csv::Result<Vec<BenchRow>> {
    csv::Reader::from_reader(input).deserialize().collect()
}
