//! Brush numbers of finite Jaco graphs `J_n(1)`.
//!
//! - [`jaco`] builds `J_n(1)` and its degree tables, Jaconian vertices and Hope subgraph.
//! - [`cleaning`] runs the directed brush-cleaning process on any digraph.
//! - [`brush`] holds the closed form for `b_r(J_n(1))`, per-orientation costs
//!   and minimal allocations.
//! - [`oracle`] enumerates every orientation of a small graph for an exact,
//!   formula-free brush number.
//! - [`experiments`] produces the degree/brush table and open-problem data.
//!
//! ```
//! use jaco_brush::{brush_number, build_jaco, simulate};
//!
//! let g = build_jaco(9).unwrap();
//! let report = brush_number(&g).unwrap();
//! assert_eq!(report.b_r, 6);
//! assert!(simulate(&g.to_digraph(), &report.allocation).unwrap().is_cleaned());
//! ```

pub mod brush;
pub mod cleaning;
pub mod cli;
pub mod digraph;
pub mod error;
pub mod experiments;
pub mod io;
pub mod jaco;
pub mod oracle;
pub mod report;

pub use brush::{brush_number, minimal_allocation, orientation_cost, BrushReport, Cost};
pub use cleaning::{
    is_cleanable, simulate, simulate_by, verify_allocation, BrushAllocation, CleaningTrace,
    Outcome, Step,
};
pub use digraph::{DiGraph, UndirectedGraph};
pub use error::{JacoError, Result};
pub use experiments::{
    hope_bound_experiment, linking_edges, linking_experiment, table1, union_additivity_check,
    HopeBoundRow, LinkingRow, TableRow,
};
pub use jaco::{build_jaco, HopeView, JacoGraph};
pub use oracle::{
    brute_force_brush_number, census, complete_graph_brush_number, OrientationCensus,
    DEFAULT_CAP_EPS,
};
