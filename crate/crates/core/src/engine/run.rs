//! Forward reduction to terminal components, then lifting in reverse.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::base::{prism_partner, terminal_labels, Terminal};
use super::reroute::reroute;
use super::step::ReductionStep;
use super::work::WorkGraph;
use super::{DecomposeOptions, Decomposed, RerouteInstance};
use crate::decomposition::EdgeLabel;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::recognition::{partition_unchecked, walk_string, Adjacency, Diamond, StringConfig, Unit};
use crate::verify::UnionFind;

/// Components with a degree-two vertex and at most this many vertices are
/// solved by exhaustive search.
pub(crate) const SMALL_COMPONENT: usize = 10;

pub(crate) enum Action {
    Step(ReductionStep),
    Terminal(Terminal),
}

struct Logged {
    step: ReductionStep,
    removed: Vec<Edge>,
}

pub(crate) struct Engine {
    pub(crate) w: WorkGraph,
    units: Vec<Unit>,
    unit_of: Vec<usize>,
    unit_alive: Vec<bool>,
    caps: BTreeSet<Vertex>,
    /// Diamonds with a tip next to another diamond.
    multi: BTreeSet<(Vertex, usize)>,
    diamonds: BTreeSet<(Vertex, usize)>,
    triangles: BTreeSet<(Vertex, usize)>,
    log: Vec<Logged>,
    terminals: Vec<Terminal>,
    opts: DecomposeOptions,
    reroutes: Vec<RerouteInstance>,
}

fn internal(msg: alloc::string::String) -> Error {
    Error::InternalError(msg)
}

impl Engine {
    /// `g` must be claw-free with every vertex of degree three except
    /// degree-two vertices whose neighbors are adjacent.
    pub(crate) fn new(g: &Graph, opts: DecomposeOptions) -> Result<Engine> {
        let p = partition_unchecked(g)?;
        let w = WorkGraph::from_graph(g)?;
        let mut e = Engine {
            w,
            unit_alive: alloc::vec![true; p.units.len()],
            units: p.units,
            unit_of: p.unit_of,
            caps: g.vertices().filter(|&v| g.degree(v) == 2).collect(),
            multi: BTreeSet::new(),
            diamonds: BTreeSet::new(),
            triangles: BTreeSet::new(),
            log: Vec::new(),
            terminals: Vec::new(),
            opts,
            reroutes: Vec::new(),
        };
        for i in 0..e.units.len() {
            let key = e.key(i);
            match e.units[i] {
                Unit::Triangle(_) => {
                    e.triangles.insert(key);
                }
                Unit::Diamond(d) => {
                    e.diamonds.insert(key);
                    if e.touches_diamond(&d) {
                        e.multi.insert(key);
                    }
                }
            }
        }
        Ok(e)
    }

    fn key(&self, i: usize) -> (Vertex, usize) {
        (self.units[i].min_vertex(), i)
    }

    fn diamond_at(&self, v: Vertex) -> Option<Diamond> {
        let i = self.unit_of[v as usize];
        match self.units[i] {
            Unit::Diamond(d) if self.unit_alive[i] => Some(d),
            _ => None,
        }
    }

    fn touches_diamond(&self, d: &Diamond) -> bool {
        [d.a, d.d].iter().any(|&t| {
            crate::recognition::tip_exit(&self.w, d, t).is_some_and(|x| self.diamond_at(x).is_some())
        })
    }

    fn kill_unit(&mut self, i: usize) {
        if !self.unit_alive[i] {
            return;
        }
        self.unit_alive[i] = false;
        let key = self.key(i);
        self.multi.remove(&key);
        self.diamonds.remove(&key);
        self.triangles.remove(&key);
    }

    fn out(&self, v: Vertex, excluded: &[Vertex]) -> Result<Vertex> {
        self.w
            .other_neighbor(v, excluded)
            .ok_or_else(|| internal(format!("vertex {v} has no neighbor outside {excluded:?}")))
    }

    fn triangle(&self, v: Vertex) -> Result<[Vertex; 3]> {
        match self.units[self.unit_of[v as usize]] {
            Unit::Triangle(t) => Ok(t),
            Unit::Diamond(_) => Err(internal(format!("vertex {v} expected in a triangle"))),
        }
    }

    pub(crate) fn next_action(&mut self) -> Result<Option<Action>> {
        loop {
            if let Some(&c) = self.caps.first() {
                if !self.w.is_alive(c) || self.w.degree(c) != 2 {
                    self.caps.remove(&c);
                    continue;
                }
                return self.cap_action(c).map(Some);
            }
            if let Some(&(_, i)) = self.multi.first() {
                let Unit::Diamond(d) = self.units[i] else { unreachable!() };
                let s = walk_string(&self.w, d, |v| self.diamond_at(v));
                if s.config == StringConfig::Necklace {
                    return Ok(Some(Action::Terminal(Terminal::Necklace(s))));
                }
                if s.k() >= 2 {
                    return Ok(Some(Action::Step(string_reduce(s)?)));
                }
                self.multi.remove(&(d.min_vertex(), i));
                continue;
            }
            if let Some(&(_, i)) = self.diamonds.first() {
                let Unit::Diamond(d) = self.units[i] else { unreachable!() };
                let s = walk_string(&self.w, d, |v| self.diamond_at(v));
                let step = match s.config {
                    StringConfig::Necklace => {
                        return Ok(Some(Action::Terminal(Terminal::Necklace(s))));
                    }
                    _ if s.k() >= 2 => string_reduce(s)?,
                    StringConfig::CommonTriangle { u } => {
                        let (w, z) = ends(&s)?;
                        ReductionStep::CutEdge {
                            diamond: s.diamonds[0],
                            u,
                            w,
                            z,
                            x: self.out(u, &[w, z])?,
                        }
                    }
                    StringConfig::DistinctTriangles => {
                        let (w, z) = ends(&s)?;
                        ReductionStep::SingleDiamond { diamond: s.diamonds[0], w, z }
                    }
                };
                return Ok(Some(Action::Step(step)));
            }
            if let Some(&(_, i)) = self.triangles.first() {
                let Unit::Triangle(t) = self.units[i] else { unreachable!() };
                return self.triangle_action(t).map(Some);
            }
            return Ok(None);
        }
    }

    fn cap_action(&self, c: Vertex) -> Result<Action> {
        let w = &self.w;
        if let Some(comp) = w.bounded_component(c, SMALL_COMPONENT) {
            return Ok(Action::Terminal(Terminal::Small(comp)));
        }
        let split = |a: Vertex, b: Vertex| Ok(Action::Step(ReductionStep::BridgeSplit { bridge: Edge::new(a, b) }));
        let (p, q) = (w.neighbors(c)[0], w.neighbors(c)[1]);
        if w.degree(p) == 2 || w.degree(q) == 2 {
            let (r, other) = if w.degree(p) == 3 { (p, q) } else { (q, p) };
            return split(r, self.out(r, &[c, other])?);
        }
        let p_out = self.out(p, &[c, q])?;
        let q_out = self.out(q, &[c, p])?;
        if p_out == q_out {
            return split(p_out, self.out(p_out, &[p, q])?);
        }
        if w.adjacent(p_out, q_out) {
            let s = self.out(p_out, &[p, q_out])?;
            if !w.adjacent(s, q_out) {
                return Err(internal(format!("claw at {p_out}")));
            }
            return split(s, self.out(s, &[p_out, q_out])?);
        }
        Ok(Action::Step(ReductionStep::CapReduce { cap: c, p, q, p_out, q_out }))
    }

    fn triangle_action(&self, t: [Vertex; 3]) -> Result<Action> {
        let o = [self.out(t[0], &t)?, self.out(t[1], &t)?, self.out(t[2], &t)?];
        let pu = o.map(|x| self.unit_of[x as usize]);
        if pu[0] == pu[1] && pu[1] == pu[2] {
            let u = prism_partner(&self.w, t).ok_or_else(|| internal(format!("{t:?} is not in a prism")))?;
            return Ok(Action::Terminal(Terminal::Prism { v: t, u }));
        }
        for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
            if pu[i] == pu[j] {
                return self.double(t[i], t[j], t[k]);
            }
        }
        let v3 = t[0];
        let u3 = o[0];
        let ut = self.triangle(u3)?;
        let mut rest = ut.iter().copied().filter(|&x| x != u3);
        let (u1, u2) = (rest.next().unwrap(), rest.next().unwrap());
        let w = self.out(u1, &ut)?;
        let z = self.out(u2, &ut)?;
        if self.unit_of[w as usize] == self.unit_of[z as usize] {
            return self.double(u1, u2, u3);
        }
        Ok(Action::Step(ReductionStep::StepB {
            v: [t[1], t[2], v3],
            u: [u1, u2, u3],
            x: o[1],
            y: o[2],
            w,
            z,
            disconnected: false,
        }))
    }

    /// `v1`, `v2` of one triangle have outside neighbors in a common
    /// triangle.
    fn double(&self, v1: Vertex, v2: Vertex, v3: Vertex) -> Result<Action> {
        let vt = [v1, v2, v3];
        let u1 = self.out(v1, &vt)?;
        let u2 = self.out(v2, &vt)?;
        let ut = self.triangle(u1)?;
        let u3 = *ut.iter().find(|&&x| x != u1 && x != u2).unwrap();
        let x = self.out(v3, &vt)?;
        let y = self.out(u3, &ut)?;
        if x == y {
            return Err(internal(format!("{x} has no triangle")));
        }
        if self.w.adjacent(x, y) {
            let b = self.out(x, &[v3, y])?;
            let b_out = self.out(b, &[x, y])?;
            return Ok(Action::Step(ReductionStep::BridgeSplit { bridge: Edge::new(b, b_out) }));
        }
        Ok(Action::Step(ReductionStep::StepA { v: vt, u: [u1, u2, u3], x, y }))
    }

    pub(crate) fn apply(&mut self, step: ReductionStep) -> Result<()> {
        let removed_v = step.removed_vertices();
        for &v in &removed_v {
            let i = self.unit_of[v as usize];
            if self.unit_alive[i] && !self.units[i].vertices().iter().all(|x| removed_v.binary_search(x).is_ok()) {
                return Err(internal(format!("{step} splits unit {:?}", self.units[i])));
            }
            self.kill_unit(i);
        }
        let removed = apply_structure(&mut self.w, &step);
        match step {
            ReductionStep::BridgeSplit { bridge } => {
                self.caps.insert(bridge.u());
                self.caps.insert(bridge.v());
            }
            ReductionStep::CutEdge { x, .. } => {
                self.caps.insert(x);
            }
            ReductionStep::CapReduce { p_out, q_out, .. } => {
                for v in [p_out, q_out] {
                    if let Some(d) = self.diamond_at(v) {
                        let i = self.unit_of[v as usize];
                        self.multi.insert((d.min_vertex(), i));
                    }
                }
            }
            _ => {}
        }
        self.log.push(Logged { step, removed });
        Ok(())
    }

    fn declare(&mut self, t: Terminal) {
        let verts: Vec<Vertex> = match &t {
            Terminal::Prism { v, u } => v.iter().chain(u).copied().collect(),
            Terminal::Necklace(s) => s.diamonds.iter().flat_map(|d| d.vertices()).collect(),
            Terminal::Small(vs) => vs.clone(),
        };
        for v in verts {
            self.kill_unit(self.unit_of[v as usize]);
            self.caps.remove(&v);
        }
        self.terminals.push(t);
    }

    fn check(&self, after: &dyn core::fmt::Display) -> Result<()> {
        if self.opts.verify_each_step {
            self.w
                .check_forest_decomposition()
                .map_err(|m| internal(format!("after {after}: {m}")))?;
        }
        Ok(())
    }

    pub(crate) fn run(mut self) -> Result<Decomposed> {
        while let Some(action) = self.next_action()? {
            match action {
                Action::Step(s) => self.apply(s)?,
                Action::Terminal(t) => self.declare(t),
            }
        }
        for t in &self.terminals {
            for (e, l) in terminal_labels(&self.w, t)? {
                self.w.set_label(e.u(), e.v(), l);
            }
        }
        self.check(&"base cases")?;
        let mut uf = UnionFind::new(self.w.n());
        for e in self.w.edges() {
            uf.union(e.u(), e.v());
        }
        let mut log = core::mem::take(&mut self.log);
        for entry in log.iter_mut().rev() {
            let harvest = self.opts.harvest_reroutes.then_some(&mut self.reroutes);
            lift_step(&mut self.w, &mut entry.step, &entry.removed, &mut uf, harvest)?;
            self.check(&entry.step)?;
        }
        Ok(Decomposed {
            decomposition: self.w.to_decomposition(),
            steps: log.into_iter().map(|l| l.step).collect(),
            reroutes: self.reroutes,
        })
    }
}

fn ends(s: &crate::recognition::DiamondString) -> Result<(Vertex, Vertex)> {
    match (s.w, s.z) {
        (Some(w), Some(z)) => Ok((w, z)),
        _ => Err(internal("open diamond string without both ends".into())),
    }
}

fn string_reduce(s: crate::recognition::DiamondString) -> Result<ReductionStep> {
    let (w, z) = ends(&s)?;
    Ok(ReductionStep::StringReduce { diamonds: s.diamonds, w, z })
}

/// Deletes the step's vertices and cut edges and inserts its new edges.
/// Returns the deleted edges.
pub(crate) fn apply_structure(w: &mut WorkGraph, step: &ReductionStep) -> Vec<Edge> {
    let mut removed = Vec::new();
    for e in step.cut_edges() {
        w.remove_edge(e.u(), e.v());
        removed.push(e);
    }
    for v in step.removed_vertices() {
        while let Some(&x) = w.neighbors(v).first() {
            w.remove_edge(v, x);
            removed.push(Edge::new(v, x));
        }
        w.kill(v);
    }
    for e in step.added_edges() {
        w.add_edge(e.u(), e.v());
    }
    removed
}

fn needs_reroute(step: &ReductionStep) -> bool {
    matches!(
        step,
        ReductionStep::StepA { .. } | ReductionStep::SingleDiamond { .. } | ReductionStep::CapReduce { .. }
    )
}

fn reroute_logged(w: &mut WorkGraph, e: Edge, harvest: &mut Option<&mut Vec<RerouteInstance>>) -> Result<()> {
    if let Some(list) = harvest {
        let verts = w.component(e.u());
        let (graph, decomposition) = w.extract(&verts);
        let idx = |v: Vertex| verts.binary_search(&v).unwrap() as Vertex;
        list.push(RerouteInstance {
            graph,
            decomposition,
            edge: Edge::new(idx(e.u()), idx(e.v())),
        });
    }
    reroute(w, e).map(|_| ())
}

/// Undoes `step` on `w`, which must carry a labeling of the reduced graph,
/// and labels the restored edges. `uf` tracks the components of the
/// current graph.
pub(crate) fn lift_step(
    w: &mut WorkGraph,
    step: &mut ReductionStep,
    removed: &[Edge],
    uf: &mut UnionFind,
    mut harvest: Option<&mut Vec<RerouteInstance>>,
) -> Result<()> {
    use EdgeLabel::O;
    let added = step.added_edges();
    if let ReductionStep::StepB { x, w: wv, disconnected, .. } = step {
        *disconnected = uf.find(*x) != uf.find(*wv);
        let both = w.label_of(added[0]) == Some(O) && w.label_of(added[1]) == Some(O);
        if *disconnected {
            for &e in &added {
                if w.label_of(e) == Some(O) {
                    reroute_logged(w, e, &mut harvest)?;
                }
            }
        } else if both {
            reroute_logged(w, added[0], &mut harvest)?;
        }
    } else if needs_reroute(step) && w.label_of(added[0]) == Some(O) {
        reroute_logged(w, added[0], &mut harvest)?;
    }
    let labels = added
        .iter()
        .map(|&e| w.label_of(e).ok_or_else(|| internal(format!("added edge {e} unlabeled"))))
        .collect::<Result<Vec<_>>>()?;
    for e in &added {
        w.remove_edge(e.u(), e.v());
    }
    for v in step.removed_vertices() {
        w.revive(v);
    }
    for e in removed {
        w.add_edge(e.u(), e.v());
    }
    let table = step.lift_table(&labels)?;
    let mut covered: Vec<Edge> = table.iter().map(|&(e, _)| e).collect();
    covered.sort_unstable();
    let mut expected = removed.to_vec();
    expected.sort_unstable();
    if covered != expected {
        return Err(internal(format!("lift table of {step} does not match the restored edges")));
    }
    for (e, l) in table {
        w.set_label(e.u(), e.v(), l);
    }
    for e in removed {
        uf.union(e.u(), e.v());
    }
    Ok(())
}
