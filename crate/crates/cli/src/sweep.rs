//! Batch checking: decompose, verify and diagnose many graphs in parallel.

use goodcubic_core::oracle::oracle_decompose;
use goodcubic_core::recognition::unit_partition;
use goodcubic_core::{decompose, graph6, lemma2_check, verify, Graph};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    /// Certificate verified, no structural violations, oracle agrees.
    Ok,
    /// Input is outside the supported class.
    Refused(String),
    Failed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub index: usize,
    pub n: usize,
    pub graph6: String,
    pub oracle: Option<bool>,
    pub status: Status,
}

impl SweepRow {
    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Failed(_))
    }
}

fn check_one(index: usize, g: &Graph, oracle_limit: usize) -> SweepRow {
    let mut row = SweepRow {
        index,
        n: g.n(),
        graph6: graph6::encode(g),
        oracle: None,
        status: Status::Ok,
    };
    let partition = match unit_partition(g) {
        Ok(p) => p,
        Err(e) => {
            row.status = Status::Refused(e.to_string());
            return row;
        }
    };
    let d = match decompose(g) {
        Ok(d) => d,
        Err(e) => {
            row.status = Status::Failed(e.to_string());
            return row;
        }
    };
    let report = verify(g, &d);
    if let Some(f) = report.failures.first() {
        row.status = Status::Failed(format!("{}: {}", f.check, f.witness));
        return row;
    }
    if let Some(v) = lemma2_check(g, &d, &partition).first() {
        row.status = Status::Failed(format!("cycle diagnostic {:?} on {:?}", v.kind, v.cycle));
        return row;
    }
    if g.n() <= oracle_limit {
        match oracle_decompose(g) {
            Ok(r) => {
                let found = r.found().is_some();
                row.oracle = Some(found);
                if !found {
                    row.status = Status::Failed("oracle found no decomposition".into());
                }
            }
            Err(e) => row.status = Status::Failed(format!("oracle: {e}")),
        }
    }
    row
}

/// Rows in input order.
pub fn sweep(graphs: &[Graph], oracle_limit: usize) -> Vec<SweepRow> {
    graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| check_one(i + 1, g, oracle_limit))
        .collect()
}

pub fn summary_table(rows: &[SweepRow]) -> String {
    let mut out = format!("{:>6}  {:>6}  {:<6}  {:<8}  detail\n", "index", "n", "oracle", "status");
    for r in rows {
        let oracle = match r.oracle {
            Some(true) => "found",
            Some(false) => "none",
            None => "-",
        };
        let (status, detail) = match &r.status {
            Status::Ok => ("ok", String::new()),
            Status::Refused(m) => ("refused", m.clone()),
            Status::Failed(m) => ("FAILED", format!("{m} [{}]", r.graph6)),
        };
        let line = format!("{:>6}  {:>6}  {:<6}  {:<8}  {detail}", r.index, r.n, oracle, status);
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let count = |f: fn(&Status) -> bool| rows.iter().filter(|r| f(&r.status)).count();
    out.push_str(&format!(
        "total {}  ok {}  refused {}  failed {}\n",
        rows.len(),
        count(|s| matches!(s, Status::Ok)),
        count(|s| matches!(s, Status::Refused(_))),
        count(|s| matches!(s, Status::Failed(_))),
    ));
    out
}
