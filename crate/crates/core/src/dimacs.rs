//! DIMACS shortest-path `.gr` reader and writer.
//!
//! ```text
//! c comment
//! p sp <n> <m>
//! a <u> <v> <w>
//! ```
//!
//! Vertex ids are 1-based in the file and 0-based internally. Every arc is
//! treated as an undirected edge, so a file listing only one direction of an
//! arc still yields a symmetric graph.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{MetricsError, Result};
use crate::graph::{Graph, GraphBuilder};

pub fn load_dimacs(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| MetricsError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_dimacs(BufReader::new(file)).map_err(|err| match err {
        MetricsError::Io { source, .. } => MetricsError::Io {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    read_dimacs(text.as_bytes())
}

pub fn read_dimacs<R: BufRead>(reader: R) -> Result<Graph> {
    let mut builder: Option<GraphBuilder> = None;
    let mut n = 0usize;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|source| MetricsError::Io {
            path: Default::default(),
            source,
        })?;
        let mut fields = line.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let rest: Vec<&str> = fields.collect();
        let parse_err = |message: String| MetricsError::Parse {
            line: line_no,
            message,
        };

        match tag {
            "c" => {}
            "p" => {
                if builder.is_some() {
                    return Err(parse_err("duplicate problem line".into()));
                }
                if rest.len() != 3 || rest[0] != "sp" {
                    return Err(parse_err(format!(
                        "expected `p sp <n> <m>`, found `{}`",
                        line.trim()
                    )));
                }
                n = rest[1]
                    .parse()
                    .map_err(|_| parse_err(format!("bad vertex count `{}`", rest[1])))?;
                let m: usize = rest[2]
                    .parse()
                    .map_err(|_| parse_err(format!("bad arc count `{}`", rest[2])))?;
                if n == 0 {
                    return Err(MetricsError::Validation {
                        line: line_no,
                        message: "graph must have at least one vertex".into(),
                    });
                }
                builder = Some(GraphBuilder::with_capacity(n, m / 2 + 1));
            }
            "a" => {
                let Some(b) = builder.as_mut() else {
                    return Err(parse_err("arc line before problem line".into()));
                };
                if rest.len() != 3 {
                    return Err(parse_err(format!(
                        "expected `a <u> <v> <w>`, found `{}`",
                        line.trim()
                    )));
                }
                let u: u64 = rest[0]
                    .parse()
                    .map_err(|_| parse_err(format!("bad vertex id `{}`", rest[0])))?;
                let v: u64 = rest[1]
                    .parse()
                    .map_err(|_| parse_err(format!("bad vertex id `{}`", rest[1])))?;
                let w: f64 = rest[2]
                    .parse()
                    .map_err(|_| parse_err(format!("bad weight `{}`", rest[2])))?;
                for id in [u, v] {
                    if id == 0 || id > n as u64 {
                        return Err(MetricsError::Validation {
                            line: line_no,
                            message: format!("vertex id {id} outside 1..={n}"),
                        });
                    }
                }
                if !(w >= 0.0 && w.is_finite()) {
                    return Err(MetricsError::Validation {
                        line: line_no,
                        message: format!("weight {} must be finite and non-negative", rest[2]),
                    });
                }
                b.add_edge(u as usize - 1, v as usize - 1, w)?;
            }
            other => {
                return Err(parse_err(format!("unknown line tag `{other}`")));
            }
        }
    }

    builder
        .ok_or(MetricsError::Parse {
            line: 0,
            message: "missing `p sp <n> <m>` problem line".into(),
        })?
        .build()
}

/// Writes both directions of every edge, so the output is a conventional
/// road-network style file.
pub fn write_dimacs<W: Write>(g: &Graph, out: W) -> std::io::Result<()> {
    let mut out = BufWriter::new(out);
    writeln!(out, "c generated by graph-metrics")?;
    writeln!(out, "p sp {} {}", g.vertex_count(), g.arc_count())?;
    for &(u, v, w) in g.edges() {
        let (lu, lv) = (u + 1, v + 1);
        // f64 Display prints the shortest string that parses back to the same value.
        writeln!(out, "a {lu} {lv} {w}")?;
        writeln!(out, "a {lv} {lu} {w}")?;
    }
    out.flush()
}

pub fn save_dimacs(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io_err = |source| MetricsError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    write_dimacs(g, file).map_err(io_err)
}
