//! Exact radius, center, diameter and peripheral pair of weighted undirected
//! graphs.
//!
//! The searches keep lower and upper bounds on the radius and a lower bound
//! on the diameter, derived from the distance rows of a few pivot vertices,
//! and stop as soon as the bounds prove the answer. They read rows through a
//! [`DistanceProvider`], which either runs Dijkstra on demand or reads a
//! precomputed distance matrix.
//!
//! ```
//! use graph_metrics::{generate, DistanceProvider, GraphSpec};
//! use graph_metrics::diameter::radius_and_diameter_pair_sweep;
//!
//! let g = generate(&GraphSpec::sparse(200, 400, 7)).unwrap();
//! let mut provider = DistanceProvider::on_demand(&g);
//! let result = radius_and_diameter_pair_sweep(&mut provider).unwrap();
//! assert!(result.radius_result.radius <= result.diameter);
//! assert!(result.sssp_count < 200);
//! ```

pub mod commands;
pub mod diameter;
pub mod dimacs;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod provider;
pub mod radius;
pub mod report;
pub mod sssp;

pub use diameter::{diameter_pair_sweep, diameter_row_scan, DiameterResult};
pub use dimacs::{load_dimacs, parse_dimacs, write_dimacs};
pub use error::{MetricsError, Result};
pub use generate::{generate, GraphKind, GraphSpec, WeightKind};
pub use graph::{check_connected, Graph, GraphBuilder, VertexId};
pub use oracle::{apsp_repeated_sssp, floyd_warshall, scan_metrics, Baseline};
pub use provider::{AccessStats, DistanceProvider, ProviderMode};
pub use radius::{far_pair, find_radius, RadiusResult};
pub use sssp::{eccentricity, sssp, DistanceMatrix, DistanceRow};
