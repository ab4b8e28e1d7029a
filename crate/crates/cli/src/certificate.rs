//! JSON shapes for certificates, verification reports, oracle results and
//! refusals, plus DOT rendering.

use anyhow::{bail, Result};
use goodcubic_core::oracle::{OracleOutcome, OracleResult};
use goodcubic_core::verify::Witness;
use goodcubic_core::{Decomposition, Edge, EdgeLabel, Error, Graph, Vertex, VerificationReport};
use serde::{Deserialize, Serialize};

/// A labeled graph. `labels[i]` belongs to `edges[i]`; edges are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    pub labels: Vec<String>,
}

impl Certificate {
    pub fn new(g: &Graph, d: &Decomposition) -> Certificate {
        let edges = g.edges();
        Certificate {
            n: g.n(),
            labels: edges
                .iter()
                .map(|&e| d.get(e).map_or_else(|| "?".to_string(), |l| l.as_char().to_string()))
                .collect(),
            edges: edges.iter().map(|e| [e.u(), e.v()]).collect(),
        }
    }

    /// Rebuilds the graph and labeling. Unknown labels are an error;
    /// structural problems are left for the verifier.
    pub fn parts(&self) -> Result<(Graph, Decomposition)> {
        if self.edges.len() != self.labels.len() {
            bail!("{} edges but {} labels", self.edges.len(), self.labels.len());
        }
        let g = Graph::from_edge_list(self.n, self.edges.iter().map(|&[u, v]| (u, v)))?;
        let mut d = Decomposition::new();
        for (&[u, v], l) in self.edges.iter().zip(&self.labels) {
            let mut chars = l.chars();
            let label = match (chars.next().and_then(EdgeLabel::from_char), chars.next()) {
                (Some(label), None) => label,
                _ => bail!("unknown label {l:?} on edge {u}-{v}"),
            };
            d.set(Edge::new(u, v), label);
        }
        Ok((g, d))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureJson {
    pub check: String,
    pub witness: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub pass: bool,
    pub checks: Vec<String>,
    pub failures: Vec<FailureJson>,
}

fn witness_json(w: &Witness) -> serde_json::Value {
    use serde_json::json;
    match w {
        Witness::Vertex(v) => json!({ "vertex": v }),
        Witness::Edge(e) => json!({ "edge": [e.u(), e.v()] }),
        Witness::Count { expected, found } => json!({ "expected": expected, "found": found }),
        Witness::Empty => json!(null),
    }
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> ReportJson {
        ReportJson {
            pass: r.pass(),
            checks: r.checks.iter().map(|c| c.name().to_string()).collect(),
            failures: r
                .failures
                .iter()
                .map(|f| FailureJson {
                    check: f.check.name().to_string(),
                    witness: witness_json(&f.witness),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub outcome: String,
    pub trees_examined: u64,
    pub certificate: Option<Certificate>,
}

impl OracleJson {
    pub fn new(g: &Graph, r: &OracleResult) -> OracleJson {
        let (outcome, certificate) = match &r.outcome {
            OracleOutcome::Found(d) => ("found", Some(Certificate::new(g, d))),
            OracleOutcome::None => ("none", None),
        };
        OracleJson {
            outcome: outcome.into(),
            trees_examined: r.trees_examined,
            certificate,
        }
    }
}

/// A refusal printed on stderr.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refusal {
    pub error: String,
    pub message: String,
}

impl From<&Error> for Refusal {
    fn from(e: &Error) -> Refusal {
        let error = match e {
            Error::LoopEdge(_) => "loop-edge",
            Error::DuplicateEdge(..) => "duplicate-edge",
            Error::VertexOutOfRange { .. } => "vertex-out-of-range",
            Error::MalformedGraph6(_) => "malformed-graph6",
            Error::NotConnected => "not-connected",
            Error::IsK4 => "is-k4",
            Error::PreconditionFailed(_) => "precondition-failed",
            Error::NotCubic => "not-cubic",
            Error::OddOrder(_) => "odd-order",
            Error::BadSpec(_) => "bad-spec",
            Error::NotInO(_) => "not-in-o",
            Error::IsTriangleCycle(_) => "is-triangle-cycle",
            Error::FrameAssertionFailed(_) => "frame-assertion-failed",
            Error::NotASpanningTree => "not-a-spanning-tree",
            Error::CounterexampleFound(_) => "counterexample-found",
            Error::InternalError(_) => "internal-error",
        };
        Refusal {
            error: error.into(),
            message: e.to_string(),
        }
    }
}

/// Graphviz rendering: `T` solid, `M` dashed, `O` bold.
pub fn to_dot(g: &Graph, d: &Decomposition) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for e in g.edges() {
        let (style, label) = match d.get(e) {
            Some(EdgeLabel::T) => ("solid", "T"),
            Some(EdgeLabel::M) => ("dashed", "M"),
            Some(EdgeLabel::O) => ("bold", "O"),
            None => ("dotted", "?"),
        };
        out.push_str(&format!("  {} -- {} [style={style}, label={label}];\n", e.u(), e.v()));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use goodcubic_core::{decompose, generators, verify};

    #[test]
    fn certificate_round_trip() {
        let g = generators::necklace(3).unwrap();
        let d = decompose(&g).unwrap();
        let cert = Certificate::new(&g, &d);
        let text = serde_json::to_string(&cert).unwrap();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        let (g2, d2) = back.parts().unwrap();
        assert_eq!((g2, d2), (g.clone(), d.clone()));
        assert!(ReportJson::from(&verify(&g, &d)).pass);
    }

    #[test]
    fn rejects_unknown_labels() {
        let cert = Certificate {
            n: 2,
            edges: vec![[0, 1]],
            labels: vec!["X".into()],
        };
        assert!(cert.parts().is_err());
    }

    #[test]
    fn dot_styles() {
        let g = generators::prism();
        let dot = to_dot(&g, &decompose(&g).unwrap());
        assert_eq!(dot.matches("style=bold").count(), 3);
        assert_eq!(dot.matches("style=dashed").count(), 1);
        assert_eq!(dot.matches("style=solid").count(), 5);
    }
}
