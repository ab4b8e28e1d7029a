//! File formats and batch tooling behind the `goodcubic` command.

pub mod certificate;
pub mod formats;
pub mod sweep;

pub use certificate::{to_dot, Certificate, OracleJson, Refusal, ReportJson};
pub use formats::{parse_edge_list, parse_graph, parse_many, write_edge_list, GraphFormat};
pub use sweep::{summary_table, sweep, Status, SweepRow};
