//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Set `GRAPH_METRICS_DIMACS=/path/to/file.gr` to additionally run the
//! on-demand searches on a supplied road network (reported, never graded).

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use graph_metrics::diameter::{CandidateOrder, DiameterResult};
use graph_metrics::oracle::{diameter_scan, radius_scan};
use graph_metrics::report::strip_timing;
use graph_metrics::{
    apsp_repeated_sssp, diameter_pair_sweep, diameter_row_scan, find_radius, floyd_warshall,
    generate, load_dimacs, scan_metrics, Baseline, DistanceMatrix, DistanceProvider, Graph,
    GraphSpec, RadiusResult, WeightKind,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn weighted(spec: GraphSpec, pick: u32) -> GraphSpec {
    match pick % 3 {
        0 => spec,
        1 => spec.with_weights(1.0, 100.0, WeightKind::Integer),
        _ => spec.with_weights(1.0, 3.0, WeightKind::Integer),
    }
}

/// 200 sparse graphs with n in [5,300] and m <= 4n, then 50 complete graphs
/// with n in [4,100].
fn exactness_instances() -> Vec<(String, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for k in 0..200u32 {
        let n = rng.gen_range(5..=300);
        let max_m = (4 * n).min(n * (n - 1) / 2);
        let m = rng.gen_range(n - 1..=max_m);
        let spec = weighted(GraphSpec::sparse(n, m, 1000 + k as u64), k);
        out.push((spec.to_string(), generate(&spec).unwrap()));
    }
    for k in 0..50u32 {
        let n = rng.gen_range(4..=100);
        let spec = weighted(GraphSpec::complete(n, 2000 + k as u64), k);
        out.push((spec.to_string(), generate(&spec).unwrap()));
    }
    out
}

struct Solved {
    name: String,
    truth: graph_metrics::oracle::MatrixMetrics,
    matrix: DistanceMatrix,
    r1: RadiusResult,
    d1: DiameterResult,
    r2: RadiusResult,
    d2: DiameterResult,
}

fn solve(name: String, g: &Graph) -> Solved {
    let matrix = apsp_repeated_sssp(g).unwrap();
    let truth = scan_metrics(&matrix);

    let mut lazy = DistanceProvider::on_demand(g);
    let r1 = find_radius(&mut lazy).unwrap();
    let d1 = diameter_pair_sweep(&mut lazy, r1.clone()).unwrap();

    let mut dense = DistanceProvider::matrix(&matrix);
    let r2 = find_radius(&mut dense).unwrap();
    let d2 = diameter_row_scan(&mut dense, r2.clone()).unwrap();
    Solved {
        name,
        truth,
        matrix,
        r1,
        d1,
        r2,
        d2,
    }
}

fn exactness(cases: &[Solved]) -> Outcome {
    let mut mismatches = Vec::new();
    for s in cases {
        let m = &s.matrix;
        let t = &s.truth;
        for (label, r) in [("R1", &s.r1), ("R2", &s.r2)] {
            if r.radius != t.radius || t.eccentricities[r.center] != t.radius {
                mismatches.push(format!(
                    "{}: {label} radius {} center {} vs {}",
                    s.name, r.radius, r.center, t.radius
                ));
            }
        }
        for (label, d) in [("D1", &s.d1), ("D2", &s.d2)] {
            let (a, b) = d.peripheral_pair;
            if d.diameter != t.diameter || m.get(a, b) != t.diameter {
                mismatches.push(format!(
                    "{}: {label} diameter {} pair ({a},{b}) vs {}",
                    s.name, d.diameter, t.diameter
                ));
            }
        }
    }
    if mismatches.is_empty() {
        Ok(format!("{} graphs, 0 mismatches", cases.len()))
    } else {
        Err(format!(
            "{} mismatches, first: {}",
            mismatches.len(),
            mismatches[0]
        ))
    }
}

fn bound_traces(cases: &[Solved]) -> Outcome {
    let mut violations = Vec::new();
    for s in cases {
        let (r, d) = (s.truth.radius, s.truth.diameter);
        for (label, rr) in [("R1", &s.r1), ("R2", &s.r2)] {
            let trace = &rr.bound_trace;
            let monotone = trace
                .windows(2)
                .all(|w| w[0].lower <= w[1].lower && w[0].upper >= w[1].upper);
            let sandwiched = trace.iter().all(|b| b.lower <= r && r <= b.upper);
            let closed = trace.last().is_some_and(|b| b.upper == r);
            if !(monotone && sandwiched && closed) {
                violations.push(format!("{}: {label} radius trace", s.name));
            }
        }
        for (label, dr) in [("D1", &s.d1), ("D2", &s.d2)] {
            let trace = &dr.d_lower_trace;
            let ok = trace.windows(2).all(|w| w[0] <= w[1])
                && trace.iter().all(|&x| x <= d)
                && trace.last() == Some(&d);
            if !ok {
                violations.push(format!("{}: {label} diameter trace {trace:?}", s.name));
            }
        }
    }
    if violations.is_empty() {
        Ok(format!("{} graphs, 0 violations", cases.len()))
    } else {
        Err(format!(
            "{} violations, first: {}",
            violations.len(),
            violations[0]
        ))
    }
}

fn cross_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf10d);
    let mut worst: f64 = 0.0;
    for k in 0..50u32 {
        let n = rng.gen_range(2..=80);
        let spec = if k % 2 == 0 {
            GraphSpec::complete(n, 3000 + k as u64)
        } else {
            let max_m = n * (n - 1) / 2;
            GraphSpec::sparse(n, rng.gen_range(n - 1..=max_m.min(3 * n)), 3000 + k as u64)
        };
        let integer = k % 3 != 0;
        let spec = if integer {
            spec.with_weights(1.0, 50.0, WeightKind::Integer)
        } else {
            spec
        };
        let g = generate(&spec).unwrap();
        let a = apsp_repeated_sssp(&g).unwrap();
        let b = floyd_warshall(&g).unwrap();
        for (x, y) in a.as_slice().iter().zip(b.as_slice()) {
            if integer && x != y {
                return Err(format!("{spec}: {x} != {y}"));
            }
            let rel = (x - y).abs() / x.abs().max(y.abs()).max(f64::MIN_POSITIVE);
            worst = worst.max(rel);
            if rel > 1e-9 {
                return Err(format!("{spec}: relative error {rel:e}"));
            }
        }
    }
    Ok(format!("50 graphs, worst relative error {worst:e}"))
}

fn complete_thousand(count: u64) -> Vec<Graph> {
    (1..=count)
        .map(|s| generate(&GraphSpec::complete(1000, s)).unwrap())
        .collect()
}

fn sssp_economy(graphs: &[Graph]) -> Outcome {
    let start = Instant::now();
    let (mut r1, mut d1) = (0usize, 0usize);
    for g in graphs {
        let mut p = DistanceProvider::on_demand(g);
        let rr = find_radius(&mut p).unwrap();
        r1 += rr.sssp_count;
        d1 += diameter_pair_sweep(&mut p, rr).unwrap().sssp_count;
    }
    let elapsed = start.elapsed();
    let k = graphs.len() as f64;
    let (r1, d1) = (r1 as f64 / k, d1 as f64 / k);
    let line = format!(
        "mean R1 sssp {r1:.1} (<= 30), mean D1 sssp {d1:.1} (<= 60), share {:.4}, {:.1}s",
        d1 / 1000.0,
        elapsed.as_secs_f64()
    );
    if r1 <= 30.0 && d1 <= 60.0 && elapsed < Duration::from_secs(60) {
        Ok(line)
    } else {
        Err(line)
    }
}

/// Mean wall-clock of `f` over enough repetitions to fill `budget`.
fn time<T>(budget: Duration, mut f: impl FnMut() -> T) -> Duration {
    let mut runs = 0u32;
    let start = Instant::now();
    while runs < 3 || start.elapsed() < budget {
        std::hint::black_box(f());
        runs += 1;
    }
    start.elapsed() / runs
}

fn speedup(graphs: &[Graph]) -> Outcome {
    let budget = Duration::from_millis(100);
    let mut totals = [Duration::ZERO; 4];
    for g in graphs {
        let matrix = Baseline::Auto.build_matrix(g, usize::MAX).unwrap();
        let truth = scan_metrics(&matrix);
        let mut p = DistanceProvider::matrix(&matrix);
        let rr = find_radius(&mut p).unwrap();
        let dr = diameter_row_scan(&mut p, rr.clone()).unwrap();
        if rr.radius != truth.radius || dr.diameter != truth.diameter {
            return Err("matrix searches disagree with the scan".into());
        }
        totals[0] += time(budget, || {
            find_radius(&mut DistanceProvider::matrix(&matrix))
                .unwrap()
                .radius
        });
        totals[1] += time(budget, || radius_scan(&matrix));
        totals[2] += time(budget, || {
            let mut p = DistanceProvider::matrix(&matrix);
            let rr = find_radius(&mut p).unwrap();
            diameter_row_scan(&mut p, rr).unwrap().diameter
        });
        totals[3] += time(budget, || diameter_scan(&matrix));
    }
    let r = totals[1].as_secs_f64() / totals[0].as_secs_f64();
    let d = totals[3].as_secs_f64() / totals[2].as_secs_f64();
    let k = graphs.len() as f64;
    let line = format!(
        "R2 {:.3}ms vs RC2 {:.3}ms: {r:.1}x (>= 5); D2 {:.3}ms vs DC2 {:.3}ms: {d:.1}x (>= 2)",
        totals[0].as_secs_f64() * 1e3 / k,
        totals[1].as_secs_f64() * 1e3 / k,
        totals[2].as_secs_f64() * 1e3 / k,
        totals[3].as_secs_f64() * 1e3 / k,
    );
    if r >= 5.0 && d >= 2.0 {
        Ok(line)
    } else {
        Err(line)
    }
}

/// Replays the pair sweep on a full matrix and returns every pair it skips
/// together with the lower bound in force when it was skipped.
fn skipped_pairs(
    m: &DistanceMatrix,
    order: &CandidateOrder,
    start: f64,
) -> (f64, Vec<(usize, usize, f64)>) {
    let n = order.order.len();
    let mut d_l = start;
    let mut skipped = Vec::new();
    let mut i = 0;
    'rows: while i + 1 < n {
        for j in i + 1..n {
            if order.pair_bound(i, j) <= d_l {
                let rest = if j == i + 1 {
                    (i..n - 1)
                        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                        .collect::<Vec<_>>()
                } else {
                    (j..n).map(|b| (i, b)).collect()
                };
                skipped.extend(
                    rest.into_iter()
                        .map(|(a, b)| (order.order[a], order.order[b], d_l)),
                );
                if j == i + 1 {
                    break 'rows;
                }
                i += 1;
                continue 'rows;
            }
            d_l = d_l.max(m.get(order.order[i], order.order[j]));
        }
        i += 1;
    }
    (d_l, skipped)
}

fn pruning_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbead);
    let (mut triples, mut pairs, mut violations) = (0usize, 0usize, Vec::new());
    for k in 0..50u32 {
        let n = rng.gen_range(3..=120);
        let spec = if k % 4 == 0 {
            GraphSpec::complete(n, 4000 + k as u64)
        } else {
            let max_m = n * (n - 1) / 2;
            GraphSpec::sparse(n, rng.gen_range(n - 1..=max_m.min(4 * n)), 4000 + k as u64)
        };
        let g = generate(&weighted(spec.clone(), k)).unwrap();
        let m = apsp_repeated_sssp(&g).unwrap();
        let truth = scan_metrics(&m);
        let mut p = DistanceProvider::matrix(&m);
        let rr = find_radius(&mut p).unwrap();
        let c = rr.center;

        // Row-scan rule: two vertices within d/2 of any c are within d of each other.
        for _ in 0..1000 {
            let (i, j, x) = (
                rng.gen_range(0..n),
                rng.gen_range(0..n),
                rng.gen_range(0..n),
            );
            let d = 2.0 * m.get(i, x).max(m.get(j, x));
            triples += 1;
            if m.get(i, j) > d {
                violations.push(format!("{spec}: triple ({i},{j},{x})"));
            }
        }
        // Every row the scan skips stays within every bound it was skipped under.
        let dr = diameter_row_scan(&mut p, rr.clone()).unwrap();
        for &d in &dr.d_lower_trace {
            let near: Vec<usize> = (0..n).filter(|&v| m.get(v, c) <= d / 2.0).collect();
            for &a in &near {
                for &b in &near {
                    triples += 1;
                    if m.get(a, b) > d {
                        violations.push(format!("{spec}: skipped row {a} exceeds {d}"));
                    }
                }
            }
        }

        // Pair filter: skipped pairs never beat the bound in force.
        let order = CandidateOrder::new(m.row(c));
        let start = rr
            .pivots
            .iter()
            .flat_map(|&a| rr.pivots.iter().map(move |&b| (a, b)))
            .map(|(a, b)| m.get(a, b))
            .fold(0.0, f64::max);
        let (replayed, skipped) = skipped_pairs(&m, &order, start);
        for (a, b, d_l) in skipped {
            pairs += 1;
            if m.get(a, b) > d_l || m.get(a, b) > m.get(a, c) + m.get(c, b) {
                violations.push(format!("{spec}: skipped pair ({a},{b}) beats {d_l}"));
            }
        }
        if replayed != truth.diameter {
            violations.push(format!(
                "{spec}: replayed sweep gives {replayed}, truth {}",
                truth.diameter
            ));
        }

        // Early termination: bounds fall along rows and along the diagonal.
        for i in 0..n.saturating_sub(1) {
            for j in i + 2..n {
                if order.pair_bound(i, j) > order.pair_bound(i, j - 1) {
                    violations.push(format!("{spec}: row {i} bound rises at {j}"));
                }
            }
            if i + 2 < n && order.pair_bound(i + 1, i + 2) > order.pair_bound(i, i + 1) {
                violations.push(format!("{spec}: diagonal bound rises at {i}"));
            }
        }
    }
    if violations.is_empty() {
        Ok(format!(
            "50 graphs, {triples} triples, {pairs} skipped pairs, 0 violations"
        ))
    } else {
        Err(format!(
            "{} violations, first: {}",
            violations.len(),
            violations[0]
        ))
    }
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_graph-metrics"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/path4.gr");
    let fixture = fixture.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["metrics", "--gen", "complete:300:seed=1", "--mode", "p1"],
        vec!["metrics", "--gen", "complete:300:seed=1", "--mode", "p2"],
        vec![
            "metrics",
            "--gen",
            "sparse:500:1500:seed=2:w=1..100:int",
            "--mode",
            "p1",
        ],
        vec![
            "metrics",
            "--gen",
            "sparse:500:1500:seed=2:w=1..100:int",
            "--mode",
            "p2",
        ],
        vec!["metrics", "--input", fixture],
        vec!["metrics", "--input", fixture, "--mode", "p2"],
        vec!["oracle", "--gen", "sparse:200:400:seed=3"],
        vec!["oracle", "--input", fixture],
    ];
    for (i, case) in cases.iter().enumerate() {
        let mut seen = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("{i}-{run}.json"));
            let mut args = case.clone();
            args.extend(["--json", path.to_str().unwrap()]);
            run_cli(&args)?;
            let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
            seen.push(strip_timing(&text).map_err(|e| e.to_string())?);
        }
        if seen[0] != seen[1] {
            return Err(format!("{case:?} differs between runs"));
        }
    }
    let gen = ["gen", "--gen", "sparse:300:900:seed=4"];
    if run_cli(&gen)? != run_cli(&gen)? {
        return Err("gen output differs between runs".into());
    }
    Ok(format!(
        "{} commands byte-identical across two runs",
        cases.len() + 1
    ))
}

fn supplied_network(path: &str) -> Outcome {
    let g = load_dimacs(path).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let mut p = DistanceProvider::on_demand(&g);
    let rr = find_radius(&mut p).map_err(|e| e.to_string())?;
    let r1 = (rr.radius, rr.sssp_count, start.elapsed());
    let dr = diameter_pair_sweep(&mut p, rr).map_err(|e| e.to_string())?;
    Ok(format!(
        "n={} radius {} ({} sssp, {:.1}s), diameter {} ({} sssp total, {:.1}s); no threshold",
        g.vertex_count(),
        r1.0,
        r1.1,
        r1.2.as_secs_f64(),
        dr.diameter,
        dr.sssp_count,
        start.elapsed().as_secs_f64()
    ))
}

fn report(failed: &mut bool, label: &str, outcome: Outcome) {
    match outcome {
        Ok(detail) => println!("PASS {label}: {detail}"),
        Err(detail) => {
            *failed = true;
            println!("FAIL {label}: {detail}");
        }
    }
}

fn main() -> ExitCode {
    let mut failed = false;

    let start = Instant::now();
    let solved: Vec<Solved> = exactness_instances()
        .into_iter()
        .map(|(name, g)| solve(name, &g))
        .collect();
    let exact = exactness(&solved).map(|s| format!("{s}, {:.1}s", start.elapsed().as_secs_f64()));
    report(&mut failed, "1 exactness", exact);
    report(&mut failed, "2 cross-oracle agreement", cross_oracle());
    report(&mut failed, "3 bound traces", bound_traces(&solved));
    drop(solved);

    let graphs = complete_thousand(10);
    report(&mut failed, "4 sssp economy", sssp_economy(&graphs));
    report(&mut failed, "5 matrix speedup", speedup(&graphs));
    drop(graphs);
    if let Ok(path) = std::env::var("GRAPH_METRICS_DIMACS") {
        report(&mut failed, "5 supplied network", supplied_network(&path));
    }

    report(&mut failed, "6 pruning soundness", pruning_soundness());
    report(&mut failed, "7 determinism", determinism());

    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
