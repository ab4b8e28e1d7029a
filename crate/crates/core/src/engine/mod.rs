//! Constructive decomposition by reduction and lifting.

mod base;
mod reroute;
mod run;
mod step;
mod work;

use alloc::format;
use alloc::vec::Vec;

pub use reroute::RerouteFrame;
pub use step::ReductionStep;

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::recognition::{
    check_claw_free_cubic, claw_at, find_diamond_strings, is_k4, partition_unchecked, Adjacency, StringConfig, Unit,
};
use crate::verify::{verify, UnionFind};
use base::Terminal;
use run::{apply_structure, lift_step, Action, Engine};
use work::WorkGraph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Check the intermediate labeling after every lift.
    pub verify_each_step: bool,
    /// Record a snapshot before every reroute.
    pub harvest_reroutes: bool,
}

/// A reroute met while lifting: the component, its labeling and the edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RerouteInstance {
    pub graph: Graph,
    pub decomposition: Decomposition,
    pub edge: Edge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposed {
    pub decomposition: Decomposition,
    /// Reductions in the order they were applied.
    pub steps: Vec<ReductionStep>,
    pub reroutes: Vec<RerouteInstance>,
}

/// One component of a reduced graph. `map[v]` is the new id of original
/// vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGraph {
    pub graph: Graph,
    pub map: Vec<Option<Vertex>>,
}

/// Good decomposition of a connected claw-free cubic graph.
pub fn decompose(g: &Graph) -> Result<Decomposition> {
    decompose_with(g, DecomposeOptions::default()).map(|d| d.decomposition)
}

pub fn decompose_with(g: &Graph, opts: DecomposeOptions) -> Result<Decomposed> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if is_k4(g) {
        let d = base::k4_labels([0, 1, 2, 3]).into_iter().collect();
        return finish(g, Decomposed { decomposition: d, steps: Vec::new(), reroutes: Vec::new() });
    }
    check_claw_free_cubic(g)?;
    finish(g, Engine::new(g, opts)?.run()?)
}

fn finish(g: &Graph, out: Decomposed) -> Result<Decomposed> {
    let report = verify(g, &out.decomposition);
    if let Some(f) = report.failures.first() {
        return Err(Error::InternalError(format!("result fails {}: {:?}", f.check.name(), f.witness)));
    }
    Ok(out)
}

/// Good decomposition of a connected claw-free graph in which `x` has
/// degree two with adjacent neighbors and every other vertex has degree
/// three.
pub fn decompose_capped(g: &Graph, x: Vertex) -> Result<Decomposition> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if x as usize >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    for v in g.vertices() {
        let want = if v == x { 2 } else { 3 };
        if g.degree(v) != want {
            return Err(Error::PreconditionFailed(format!(
                "vertex {v} has degree {}, expected {want}",
                g.degree(v)
            )));
        }
        if let Some(c) = claw_at(g, v) {
            return Err(Error::PreconditionFailed(format!("claw centered at {}", c.center)));
        }
    }
    let nb = g.neighbors(x);
    if !g.has_edge(nb[0], nb[1]) {
        return Err(Error::PreconditionFailed(format!("neighbors of {x} are not adjacent")));
    }
    let out = Engine::new(g, DecomposeOptions::default())?.run()?;
    let report = verify(g, &out.decomposition);
    if !report.pass() {
        return Err(Error::InternalError(format!("capped result fails {:?}", report.failures)));
    }
    Ok(out.decomposition)
}

/// The fixed labeling of `K4`, the prism or a necklace; `None` for other
/// graphs.
pub fn decompose_base(g: &Graph) -> Option<Decomposition> {
    if is_k4(g) {
        return Some(base::k4_labels([0, 1, 2, 3]).into_iter().collect());
    }
    if !g.is_connected() || check_claw_free_cubic(g).is_err() {
        return None;
    }
    let p = partition_unchecked(g).ok()?;
    let w = WorkGraph::from_graph(g).ok()?;
    let labels = if g.n() == 6 {
        let Unit::Triangle(v) = p.units[p.unit_of[0]] else { return None };
        base::prism_labels(v, base::prism_partner(&w, v)?)
    } else {
        let strings = find_diamond_strings(g, &p);
        match strings.as_slice() {
            [s] if s.config == StringConfig::Necklace && 4 * s.k() == g.n() => base::necklace_labels(s),
            _ => return None,
        }
    };
    Some(labels.into_iter().collect())
}

fn check_reducible(g: &Graph) -> Result<()> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if is_k4(g) {
        return Err(Error::IsK4);
    }
    check_claw_free_cubic(g)
}

/// The reduction the engine applies first to `g`. Fails with
/// `PreconditionFailed` when `g` is a base case.
pub fn select_reduction(g: &Graph) -> Result<ReductionStep> {
    check_reducible(g)?;
    let mut e = Engine::new(g, DecomposeOptions::default())?;
    match e.next_action()? {
        Some(Action::Step(mut s)) => {
            if let ReductionStep::StepB { x, w, .. } = s {
                let mut work = WorkGraph::from_graph(g)?;
                apply_structure(&mut work, &s);
                let split = work.component(x).binary_search(&w).is_err();
                if let ReductionStep::StepB { disconnected, .. } = &mut s {
                    *disconnected = split;
                }
            }
            Ok(s)
        }
        Some(Action::Terminal(t)) => Err(Error::PreconditionFailed(format!(
            "graph is a base case ({})",
            match t {
                Terminal::Prism { .. } => "prism",
                Terminal::Necklace(_) => "necklace",
                Terminal::Small(_) => "small component",
            }
        ))),
        None => Err(Error::InternalError("no reduction applies".into())),
    }
}

fn validate_step(g: &Graph, step: &ReductionStep) -> Result<()> {
    let n = g.n();
    let mut vs = step.removed_vertices();
    for e in step.added_edges().iter().chain(&step.cut_edges()) {
        vs.extend([e.u(), e.v()]);
    }
    if let Some(&v) = vs.iter().find(|&&v| v as usize >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    for e in step.cut_edges() {
        if !g.has_edge(e.u(), e.v()) {
            return Err(Error::PreconditionFailed(format!("{e} is not an edge")));
        }
    }
    let removed = step.removed_vertices();
    for e in step.added_edges() {
        if removed.binary_search(&e.u()).is_ok() || removed.binary_search(&e.v()).is_ok() {
            return Err(Error::PreconditionFailed(format!("added edge {e} touches a removed vertex")));
        }
    }
    Ok(())
}

fn reduce(g: &Graph, step: &ReductionStep) -> Result<(WorkGraph, Vec<Edge>)> {
    validate_step(g, step)?;
    let removed = step.removed_vertices();
    let cut = step.cut_edges();
    let added = step.added_edges();
    for e in &added {
        if g.has_edge(e.u(), e.v()) {
            return Err(Error::PreconditionFailed(format!("added edge {e} already present")));
        }
    }
    for &v in added.iter().flat_map(|e| [e.u(), e.v()]).collect::<Vec<_>>().iter() {
        let kept = g
            .neighbors(v)
            .iter()
            .filter(|&&x| removed.binary_search(&x).is_err() && !cut.contains(&Edge::new(v, x)))
            .count();
        let new = added.iter().filter(|e| e.contains(v)).count();
        if kept + new > 3 {
            return Err(Error::PreconditionFailed(format!("vertex {v} would exceed degree 3")));
        }
    }
    let mut w = WorkGraph::from_graph(g)?;
    let gone = apply_structure(&mut w, step);
    Ok((w, gone))
}

/// Applies `step` and returns the components of the reduced graph, ordered
/// by smallest original vertex.
pub fn apply_reduction(g: &Graph, step: &ReductionStep) -> Result<Vec<ReducedGraph>> {
    let (w, _) = reduce(g, step)?;
    let mut seen = alloc::vec![false; g.n()];
    let mut out = Vec::new();
    for v in w.alive_vertices() {
        if seen[v as usize] {
            continue;
        }
        let comp = w.component(v);
        let mut map = alloc::vec![None; g.n()];
        for (i, &x) in comp.iter().enumerate() {
            seen[x as usize] = true;
            map[x as usize] = Some(i as Vertex);
        }
        let (graph, _) = w.extract(&comp);
        out.push(ReducedGraph { graph, map });
    }
    Ok(out)
}

/// Lifts decompositions of the reduced components (as returned by
/// [`apply_reduction`]) to a decomposition of `g`.
pub fn lift(g: &Graph, step: &ReductionStep, reduced: &[(ReducedGraph, Decomposition)]) -> Result<Decomposition> {
    let (mut w, removed) = reduce(g, step)?;
    for (r, d) in reduced {
        let mut inv = alloc::vec![0 as Vertex; r.graph.n()];
        for (v, m) in r.map.iter().enumerate() {
            if let Some(i) = m {
                inv[*i as usize] = v as Vertex;
            }
        }
        for (e, l) in d.iter() {
            let (a, b) = (inv[e.u() as usize], inv[e.v() as usize]);
            if w.adjacent(a, b) {
                w.set_label(a, b, l);
            }
        }
    }
    w.check_forest_decomposition()
        .map_err(|m| Error::PreconditionFailed(format!("reduced labeling is not good: {m}")))?;
    let mut uf = UnionFind::new(g.n());
    for e in w.edges() {
        uf.union(e.u(), e.v());
    }
    let mut step = step.clone();
    lift_step(&mut w, &mut step, &removed, &mut uf, None)?;
    let d = w.to_decomposition();
    let report = verify(g, &d);
    if !report.pass() {
        return Err(Error::InternalError(format!("lift of {step} fails {:?}", report.failures)));
    }
    Ok(d)
}

fn rerouting_state(g: &Graph, d: &Decomposition, e: Edge) -> Result<WorkGraph> {
    if !g.has_edge(e.u(), e.v()) {
        return Err(Error::PreconditionFailed(format!("{e} is not an edge")));
    }
    let mut w = WorkGraph::from_graph(g)?;
    w.load_labels(d);
    Ok(w)
}

/// The frame the reroute of `e` would use.
pub fn reroute_frame(g: &Graph, d: &Decomposition, e: Edge) -> Result<RerouteFrame> {
    reroute::frame(&rerouting_state(g, d, e)?, e)
}

/// Moves `e` out of the cycle part by relabeling its cycle and the adjacent
/// triangles.
pub fn reroute_cycle(g: &Graph, d: &Decomposition, e: Edge) -> Result<Decomposition> {
    let mut w = rerouting_state(g, d, e)?;
    reroute::reroute(&mut w, e)?;
    Ok(w.to_decomposition())
}
