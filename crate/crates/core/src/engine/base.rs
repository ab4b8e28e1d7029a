//! Labelings of the terminal components.

use alloc::vec::Vec;

use super::work::WorkGraph;
use crate::decomposition::EdgeLabel::{self, M, O, T};
use crate::error::{Error, Result};
use crate::graph::{Edge, Vertex};
use crate::graph6;
use crate::oracle::{oracle_decompose_with, OracleOutcome};
use crate::recognition::{Adjacency, DiamondString};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Terminal {
    /// Triangles `v` and `u` with rungs `v[i] - u[i]`; `v` has the smaller
    /// minimum.
    Prism { v: [Vertex; 3], u: [Vertex; 3] },
    Necklace(DiamondString),
    /// A component small enough for exhaustive search.
    Small(Vec<Vertex>),
}

pub(crate) fn k4_labels(vs: [Vertex; 4]) -> Vec<(Edge, EdgeLabel)> {
    let mut vs = vs;
    vs.sort_unstable();
    let [s, p, q, r] = vs;
    Vec::from([
        (Edge::new(s, p), T),
        (Edge::new(s, q), T),
        (Edge::new(s, r), T),
        (Edge::new(p, q), O),
        (Edge::new(q, r), O),
        (Edge::new(p, r), O),
    ])
}

pub(crate) fn prism_labels(v: [Vertex; 3], u: [Vertex; 3]) -> Vec<(Edge, EdgeLabel)> {
    let mut out: Vec<(Edge, EdgeLabel)> = (0..3).map(|i| (Edge::new(v[i], u[i]), T)).collect();
    let mut us = u;
    us.sort_unstable();
    out.extend([
        (Edge::new(us[0], us[1]), T),
        (Edge::new(us[1], us[2]), T),
        (Edge::new(us[0], us[2]), M),
        (Edge::new(v[0], v[1]), O),
        (Edge::new(v[1], v[2]), O),
        (Edge::new(v[0], v[2]), O),
    ]);
    out
}

pub(crate) fn necklace_labels(s: &DiamondString) -> Vec<(Edge, EdgeLabel)> {
    let ds = &s.diamonds;
    let k = ds.len();
    let d1 = ds[0];
    let mut out = Vec::from([
        (Edge::new(d1.a, d1.b), O),
        (Edge::new(d1.b, d1.c), O),
        (Edge::new(d1.a, d1.c), O),
        (Edge::new(ds[k - 1].d, d1.a), T),
        (Edge::new(d1.c, d1.d), T),
        (Edge::new(d1.b, d1.d), T),
    ]);
    for i in 0..k - 1 {
        out.push((Edge::new(ds[i].d, ds[i + 1].a), T));
    }
    for d in &ds[1..] {
        out.extend([
            (Edge::new(d.a, d.b), T),
            (Edge::new(d.b, d.c), T),
            (Edge::new(d.c, d.d), T),
            (Edge::new(d.a, d.c), M),
            (Edge::new(d.b, d.d), M),
        ]);
    }
    out
}

/// Exhaustive search on a small component, allowing an empty cycle part.
pub(crate) fn small_labels(w: &WorkGraph, verts: &[Vertex]) -> Result<Vec<(Edge, EdgeLabel)>> {
    let (g, _) = w.extract(verts);
    match oracle_decompose_with(&g, false)?.outcome {
        OracleOutcome::Found(d) => Ok(d
            .iter()
            .map(|(e, l)| (Edge::new(verts[e.u() as usize], verts[e.v() as usize]), l))
            .collect()),
        OracleOutcome::None => Err(Error::CounterexampleFound(graph6::encode(&g))),
    }
}

pub(crate) fn terminal_labels(w: &WorkGraph, t: &Terminal) -> Result<Vec<(Edge, EdgeLabel)>> {
    Ok(match t {
        Terminal::Prism { v, u } => prism_labels(*v, *u),
        Terminal::Necklace(s) => necklace_labels(s),
        Terminal::Small(vs) => small_labels(w, vs)?,
    })
}

/// Rung partner of each vertex of triangle `v` when `v` and `u` form a
/// prism, in `v` order.
pub(crate) fn prism_partner(w: &WorkGraph, v: [Vertex; 3]) -> Option<[Vertex; 3]> {
    let mut u = [0; 3];
    for i in 0..3 {
        u[i] = w.other_neighbor(v[i], &v)?;
    }
    let mut sorted = u;
    sorted.sort_unstable();
    let closed = (0..3).all(|i| (0..3).all(|j| i == j || w.adjacent(u[i], u[j])));
    (closed && sorted[0] != sorted[1] && sorted[1] != sorted[2]).then_some(u)
}
