//! The work behind each CLI subcommand, kept in the library so tests can
//! drive it without spawning a process.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::diameter::{diameter_pair_sweep, diameter_row_scan, DiameterResult};
use crate::dimacs::load_dimacs;
use crate::error::{MetricsError, Result};
use crate::generate::{generate, GraphSpec};
use crate::graph::{Graph, VertexId};
use crate::oracle::{diameter_scan, radius_scan, run_oracle, Baseline, DEFAULT_MATRIX_CAP};
use crate::provider::DistanceProvider;
use crate::radius::{find_radius, RadiusResult};
use crate::report::{Algorithm, BenchRow, InputKind, RunReport};
use crate::sssp::DistanceMatrix;

#[derive(Clone, Debug, PartialEq)]
pub enum InputSource {
    File(PathBuf),
    Generated(GraphSpec),
}

impl fmt::Display for InputSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputSource::File(path) => write!(f, "{}", path.display()),
            InputSource::Generated(spec) => write!(f, "{spec}"),
        }
    }
}

pub struct LoadedGraph {
    pub graph: Graph,
    pub name: String,
    pub kind: InputKind,
    pub seed: Option<u64>,
}

impl InputSource {
    pub fn load(&self) -> Result<LoadedGraph> {
        match self {
            InputSource::File(path) => Ok(LoadedGraph {
                graph: load_dimacs(path)?,
                name: path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string()),
                kind: InputKind::File,
                seed: None,
            }),
            InputSource::Generated(spec) => Ok(LoadedGraph {
                graph: generate(spec)?,
                name: spec.name(),
                kind: InputKind::Generated,
                seed: Some(spec.seed),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Distances computed on demand from the graph.
    P1,
    /// Distance matrix built first, then searched.
    P2,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "p1" => Ok(Mode::P1),
            "p2" => Ok(Mode::P2),
            other => Err(format!("unknown mode `{other}` (expected p1 or p2)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Radius,
    Diameter,
    Both,
}

impl FromStr for Target {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "radius" => Ok(Target::Radius),
            "diameter" => Ok(Target::Diameter),
            "both" => Ok(Target::Both),
            other => Err(format!(
                "unknown target `{other}` (expected radius, diameter or both)"
            )),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MetricsOptions {
    pub mode: Mode,
    pub target: Target,
    pub baseline: Baseline,
    pub max_matrix_n: usize,
}

impl Default for MetricsOptions {
    fn default() -> Self {
        Self {
            mode: Mode::P1,
            target: Target::Both,
            baseline: Baseline::Auto,
            max_matrix_n: DEFAULT_MATRIX_CAP,
        }
    }
}

pub fn ensure_connected(g: &Graph) -> Result<()> {
    match g.first_unreachable() {
        None => Ok(()),
        Some(unreachable) => Err(MetricsError::Disconnected {
            source_vertex: 0,
            unreachable,
        }),
    }
}

/// Renders an error for users, translating internal vertex ids to labels.
pub fn describe_error(g: Option<&Graph>, err: &MetricsError) -> String {
    match (g, err) {
        (
            Some(g),
            MetricsError::Disconnected {
                source_vertex,
                unreachable,
            },
        ) => format!(
            "graph is disconnected: vertex {} is unreachable from vertex {}",
            g.label(*unreachable),
            g.label(*source_vertex)
        ),
        _ => err.to_string(),
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

struct ReportBase<'a> {
    input: &'a LoadedGraph,
}

impl ReportBase<'_> {
    fn report(
        &self,
        algorithm: Algorithm,
        sssp_count: usize,
        rows_accessed: usize,
        elapsed: Duration,
    ) -> RunReport {
        let g = &self.input.graph;
        RunReport {
            graph: self.input.name.clone(),
            source: self.input.kind,
            n: g.vertex_count(),
            m: g.edge_count(),
            arcs: g.arc_count(),
            algorithm,
            radius: None,
            center: None,
            centers: None,
            diameter: None,
            pair: None,
            pairs: None,
            pivots: None,
            candidates_examined: None,
            sssp_count,
            sssp_share: sssp_count as f64 / g.vertex_count() as f64,
            rows_accessed,
            elapsed_ms: ms(elapsed),
            matrix_build_ms: None,
            baseline: None,
            seed: self.input.seed,
        }
    }

    fn radius(&self, algorithm: Algorithm, rr: &RadiusResult, elapsed: Duration) -> RunReport {
        let g = &self.input.graph;
        RunReport {
            radius: Some(rr.radius),
            center: Some(g.label(rr.center)),
            pivots: Some(rr.pivots.iter().map(|&v| g.label(v)).collect()),
            candidates_examined: Some(rr.candidates_examined),
            ..self.report(algorithm, rr.sssp_count, rr.rows_accessed, elapsed)
        }
    }

    fn diameter(&self, algorithm: Algorithm, dr: &DiameterResult, elapsed: Duration) -> RunReport {
        let g = &self.input.graph;
        let (a, b) = dr.peripheral_pair;
        RunReport {
            diameter: Some(dr.diameter),
            pair: Some((g.label(a), g.label(b))),
            ..self.report(algorithm, dr.sssp_count, dr.rows_accessed, elapsed)
        }
    }
}

/// Runs the fast searches. In P2 mode the matrix is built first with the
/// chosen baseline; its build time is reported separately and excluded from
/// the algorithm timing.
pub fn run_metrics(input: &LoadedGraph, opts: &MetricsOptions) -> Result<Vec<RunReport>> {
    let g = &input.graph;
    ensure_connected(g)?;
    let base = ReportBase { input };

    let (matrix, build) = match opts.mode {
        Mode::P1 => (None, None),
        Mode::P2 => {
            let start = Instant::now();
            let m = opts.baseline.build_matrix(g, opts.max_matrix_n)?;
            (Some(m), Some(start.elapsed()))
        }
    };
    let mut provider = match &matrix {
        Some(m) => DistanceProvider::matrix(m),
        None => DistanceProvider::on_demand(g),
    };
    let (r_algo, d_algo) = match opts.mode {
        Mode::P1 => (Algorithm::R1, Algorithm::D1),
        Mode::P2 => (Algorithm::R2, Algorithm::D2),
    };

    let start = Instant::now();
    let rr = find_radius(&mut provider)?;
    let radius_elapsed = start.elapsed();

    let mut reports = Vec::new();
    if matches!(opts.target, Target::Radius | Target::Both) {
        reports.push(base.radius(r_algo, &rr, radius_elapsed));
    }
    if matches!(opts.target, Target::Diameter | Target::Both) {
        let start = Instant::now();
        let dr = match opts.mode {
            Mode::P1 => diameter_pair_sweep(&mut provider, rr)?,
            Mode::P2 => diameter_row_scan(&mut provider, rr)?,
        };
        reports.push(base.diameter(d_algo, &dr, radius_elapsed + start.elapsed()));
    }
    if let (Some(build), Some(_)) = (build, &matrix) {
        let resolved = opts.baseline.resolve(g).to_string();
        for r in &mut reports {
            r.matrix_build_ms = Some(ms(build));
            r.baseline = Some(resolved.clone());
        }
    }
    Ok(reports)
}

/// Exhaustive ground truth: every center and every peripheral pair.
pub fn run_oracle_command(
    input: &LoadedGraph,
    baseline: Baseline,
    max_matrix_n: usize,
) -> Result<Vec<RunReport>> {
    let g = &input.graph;
    ensure_connected(g)?;
    let base = ReportBase { input };
    let oracle = run_oracle(g, baseline, max_matrix_n)?;
    let n = g.vertex_count();
    let (sssp_count, rows) = match oracle.baseline {
        Baseline::Floyd => (0, 0),
        _ => (n, n),
    };
    let elapsed = oracle.build_elapsed + oracle.scan_elapsed;
    let m = &oracle.metrics;
    let labels = |vs: &[VertexId]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>();

    let mut rc = base.report(Algorithm::RC1, sssp_count, rows, elapsed);
    rc.radius = Some(m.radius);
    rc.center = m.all_centers.first().map(|&c| g.label(c));
    rc.centers = Some(labels(&m.all_centers));

    let mut dc = base.report(Algorithm::DC1, sssp_count, rows, elapsed);
    dc.diameter = Some(m.diameter);
    dc.pair = m
        .all_peripheral_pairs
        .first()
        .map(|&(a, b)| (g.label(a), g.label(b)));
    dc.pairs = Some(
        m.all_peripheral_pairs
            .iter()
            .map(|&(a, b)| (g.label(a), g.label(b)))
            .collect(),
    );

    for r in [&mut rc, &mut dc] {
        r.matrix_build_ms = Some(ms(oracle.build_elapsed));
        r.baseline = Some(oracle.baseline.to_string());
    }
    Ok(vec![rc, dc])
}

#[derive(Clone, Copy, Debug)]
pub struct BenchOptions {
    pub repeats: usize,
    pub baseline: Baseline,
    pub max_matrix_n: usize,
}

impl Default for BenchOptions {
    fn default() -> Self {
        Self {
            repeats: 1,
            baseline: Baseline::Auto,
            max_matrix_n: DEFAULT_MATRIX_CAP,
        }
    }
}

#[derive(Default)]
struct Tally {
    value: Option<f64>,
    sssp: usize,
    elapsed: Duration,
    runs: usize,
}

impl Tally {
    fn record(&mut self, value: f64, sssp: usize, elapsed: Duration) {
        self.value = Some(value);
        self.sssp += sssp;
        self.elapsed += elapsed;
        self.runs += 1;
    }

    fn mean_ms(&self) -> f64 {
        ms(self.elapsed) / self.runs.max(1) as f64
    }
}

const BENCH_ORDER: [Algorithm; 8] = [
    Algorithm::R1,
    Algorithm::RC1,
    Algorithm::D1,
    Algorithm::DC1,
    Algorithm::R2,
    Algorithm::RC2,
    Algorithm::D2,
    Algorithm::DC2,
];

/// Times every algorithm on every input, averaging over `repeats`. A failing
/// input produces a single row carrying the error; the suite continues.
pub fn run_bench(inputs: &[InputSource], opts: &BenchOptions) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for input in inputs {
        match bench_one(input, opts) {
            Ok(mut r) => rows.append(&mut r),
            Err((name, n, m, message)) => rows.push(BenchRow {
                name,
                n,
                m,
                algo: None,
                value: None,
                sssp_count: None,
                sssp_share: None,
                elapsed_ms: None,
                speedup_vs_baseline: None,
                errors: message,
            }),
        }
    }
    rows
}

type BenchFailure = (String, usize, usize, String);

fn bench_one(
    input: &InputSource,
    opts: &BenchOptions,
) -> std::result::Result<Vec<BenchRow>, BenchFailure> {
    let loaded = input
        .load()
        .map_err(|e| (input.to_string(), 0, 0, e.to_string()))?;
    let g = &loaded.graph;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let fail = |e: MetricsError| (loaded.name.clone(), n, m, describe_error(Some(g), &e));
    ensure_connected(g).map_err(fail)?;

    let repeats = opts.repeats.max(1);
    let mut tallies: Vec<(Algorithm, Tally)> =
        BENCH_ORDER.iter().map(|&a| (a, Tally::default())).collect();
    let mut note = String::new();
    let with_matrix = n <= opts.max_matrix_n;
    if !with_matrix {
        note = format!(
            "baselines and matrix runs skipped: n={n} exceeds matrix cap {}",
            opts.max_matrix_n
        );
    }
    let baseline = opts.baseline.resolve(g);

    for _ in 0..repeats {
        let start = Instant::now();
        let mut p = DistanceProvider::on_demand(g);
        let rr = find_radius(&mut p).map_err(fail)?;
        slot(&mut tallies, Algorithm::R1).record(rr.radius, rr.sssp_count, start.elapsed());

        let start = Instant::now();
        let mut p = DistanceProvider::on_demand(g);
        let rr = find_radius(&mut p).map_err(fail)?;
        let dr = diameter_pair_sweep(&mut p, rr).map_err(fail)?;
        slot(&mut tallies, Algorithm::D1).record(dr.diameter, dr.sssp_count, start.elapsed());

        if !with_matrix {
            continue;
        }
        let start = Instant::now();
        let matrix: DistanceMatrix = baseline.build_matrix(g, opts.max_matrix_n).map_err(fail)?;
        let build = start.elapsed();
        let baseline_sssp = if baseline == Baseline::Floyd { 0 } else { n };

        let start = Instant::now();
        let radius = radius_scan(&matrix);
        let rc2 = start.elapsed();
        slot(&mut tallies, Algorithm::RC1).record(radius, baseline_sssp, build + rc2);
        slot(&mut tallies, Algorithm::RC2).record(radius, 0, rc2);

        let start = Instant::now();
        let diameter = diameter_scan(&matrix);
        let dc2 = start.elapsed();
        slot(&mut tallies, Algorithm::DC1).record(diameter, baseline_sssp, build + dc2);
        slot(&mut tallies, Algorithm::DC2).record(diameter, 0, dc2);

        let start = Instant::now();
        let mut p = DistanceProvider::matrix(&matrix);
        let rr = find_radius(&mut p).map_err(fail)?;
        slot(&mut tallies, Algorithm::R2).record(rr.radius, 0, start.elapsed());

        let start = Instant::now();
        let mut p = DistanceProvider::matrix(&matrix);
        let rr = find_radius(&mut p).map_err(fail)?;
        let dr = diameter_row_scan(&mut p, rr).map_err(fail)?;
        slot(&mut tallies, Algorithm::D2).record(dr.diameter, 0, start.elapsed());
    }

    let lookup = |a: Algorithm| {
        tallies
            .iter()
            .find(|(x, _)| *x == a)
            .map(|(_, t)| t)
            .unwrap()
    };
    let mut rows = Vec::new();
    for (algo, tally) in &tallies {
        if tally.runs == 0 {
            continue;
        }
        let reference = lookup(algo.baseline());
        let speedup = (reference.runs > 0).then(|| reference.mean_ms() / tally.mean_ms().max(1e-9));
        let mut errors = note.clone();
        if let (Some(v), Some(truth)) = (tally.value, reference.value) {
            if v != truth {
                errors = format!("value {v} disagrees with {} value {truth}", algo.baseline());
            }
        }
        let mean_sssp = tally.sssp as f64 / tally.runs as f64;
        rows.push(BenchRow {
            name: loaded.name.clone(),
            n,
            m,
            algo: Some(*algo),
            value: tally.value,
            sssp_count: Some(mean_sssp),
            sssp_share: Some(mean_sssp / n as f64),
            elapsed_ms: Some(tally.mean_ms()),
            speedup_vs_baseline: speedup,
            errors,
        });
    }
    Ok(rows)
}

fn slot(tallies: &mut [(Algorithm, Tally)], algo: Algorithm) -> &mut Tally {
    &mut tallies.iter_mut().find(|(a, _)| *a == algo).unwrap().1
}
