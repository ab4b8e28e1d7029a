//! Local relabeling that moves a chosen edge off its `O` cycle.
//!
//! The cycle alternates triangle edges `a_i b_i` (each with hub `t_i`) and
//! connecting edges `b_i a_{i+1}`. Only edges of the cycle and the hub
//! sides change.

use alloc::format;
use alloc::vec::Vec;

use super::work::WorkGraph;
use crate::decomposition::EdgeLabel;
use crate::error::{Error, Result};
use crate::graph::{Edge, Vertex};
use crate::recognition::Adjacency;

/// Frame of a rerouted cycle, oriented so the fixed edge is `b_1 a_2` or
/// the triangle edge `a_2 b_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RerouteFrame {
    pub a: Vec<Vertex>,
    pub b: Vec<Vertex>,
    pub hubs: Vec<Vertex>,
}

impl RerouteFrame {
    pub fn r(&self) -> usize {
        self.a.len()
    }

    /// Edges whose labels the reroute may change.
    pub fn touched_edges(&self) -> Vec<Edge> {
        let r = self.r();
        let mut out = Vec::with_capacity(4 * r);
        for i in 0..r {
            out.push(Edge::new(self.a[i], self.b[i]));
            out.push(Edge::new(self.b[i], self.a[(i + 1) % r]));
            out.push(Edge::new(self.a[i], self.hubs[i]));
            out.push(Edge::new(self.hubs[i], self.b[i]));
        }
        out.sort_unstable();
        out
    }
}

fn frame_err(msg: alloc::string::String) -> Error {
    Error::FrameAssertionFailed(msg)
}

/// Walks the `O` cycle through `e`, starting `e.u() -> e.v()`.
fn o_cycle(w: &WorkGraph, e: Edge) -> Result<Vec<Vertex>> {
    let (start, mut cur) = e.endpoints();
    let mut cycle = alloc::vec![start];
    let mut prev = start;
    while cur != start {
        cycle.push(cur);
        let next = w
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&x| x != prev && w.label(cur, x) == Some(EdgeLabel::O))
            .ok_or_else(|| frame_err(format!("O is not 2-regular at {cur}")))?;
        prev = cur;
        cur = next;
        if cycle.len() > w.n() {
            return Err(frame_err("O walk does not close".into()));
        }
    }
    Ok(cycle)
}

fn common_neighbor(w: &WorkGraph, a: Vertex, b: Vertex) -> Option<Vertex> {
    w.neighbors(a).iter().copied().find(|&x| w.adjacent(x, b))
}

/// Builds and checks the frame for `e` without changing anything.
pub(crate) fn frame(w: &WorkGraph, e: Edge) -> Result<RerouteFrame> {
    if w.label_of(e) != Some(EdgeLabel::O) {
        return Err(Error::NotInO(e));
    }
    let cycle = o_cycle(w, e)?;
    let len = cycle.len();
    if len == 3 {
        return Err(Error::IsTriangleCycle(e));
    }
    if len % 2 == 1 {
        return Err(frame_err(format!("O cycle through {e} has odd length {len}")));
    }
    let hub_of = |i: usize| common_neighbor(w, cycle[i], cycle[(i + 1) % len]);
    let fixed_is_triangle = hub_of(0).is_some();
    // rotate so that position 0 is a_1
    let shift = if fixed_is_triangle { len - 2 } else { len - 1 };
    let seq: Vec<Vertex> = (0..len).map(|i| cycle[(i + shift) % len]).collect();
    let r = len / 2;
    let mut a = Vec::with_capacity(r);
    let mut b = Vec::with_capacity(r);
    let mut hubs = Vec::with_capacity(r);
    for i in 0..r {
        let (ai, bi) = (seq[2 * i], seq[2 * i + 1]);
        let t = common_neighbor(w, ai, bi)
            .ok_or_else(|| frame_err(format!("cycle edge {ai}-{bi} should be a triangle edge")))?;
        let next = seq[(2 * i + 2) % len];
        if common_neighbor(w, bi, next).is_some() {
            return Err(frame_err(format!("connecting edge {bi}-{next} lies in a triangle")));
        }
        a.push(ai);
        b.push(bi);
        hubs.push(t);
    }
    let mut sorted = hubs.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != r {
        return Err(frame_err("hubs are not distinct".into()));
    }
    for i in 0..r {
        let t = hubs[i];
        if w.degree(t) != 3 {
            return Err(frame_err(format!("hub {t} has degree {}", w.degree(t))));
        }
        for (x, y) in [(a[i], t), (t, b[i])] {
            if w.label(x, y) != Some(EdgeLabel::T) {
                return Err(frame_err(format!("hub side {x}-{y} is not in T")));
            }
        }
        let third = w.other_neighbor(t, &[a[i], b[i]]).unwrap();
        if w.label(t, third) != Some(EdgeLabel::T) {
            return Err(frame_err(format!("hub edge {t}-{third} is not in T")));
        }
    }
    Ok(RerouteFrame { a, b, hubs })
}

/// Relabels the frame of `e` so that `e` leaves `O`.
pub(crate) fn reroute(w: &mut WorkGraph, e: Edge) -> Result<RerouteFrame> {
    use EdgeLabel::{M, O, T};
    let f = frame(w, e)?;
    let r = f.r();
    let (a, b, t) = (&f.a, &f.b, &f.hubs);
    let mut set = |x: Vertex, y: Vertex, l: EdgeLabel| w.set_label(x, y, l);
    // 0-based: triangle i here is C_{i+1}
    if r % 2 == 0 {
        for i in 0..r {
            set(b[i], a[(i + 1) % r], T);
            if i % 2 == 1 {
                set(a[i], t[i], T);
                set(t[i], b[i], T);
                set(a[i], b[i], M);
            } else {
                set(a[i], t[i], O);
                set(t[i], b[i], O);
                set(a[i], b[i], O);
            }
        }
    } else {
        set(a[0], b[0], T);
        set(t[0], b[0], T);
        set(a[0], t[0], M);
        set(b[0], a[1], M);
        set(a[1], t[1], T);
        set(a[1], b[1], T);
        set(t[1], b[1], M);
        set(b[r - 1], a[0], T);
        for j in 1..r - 1 {
            set(b[j], a[j + 1], T);
        }
        for i in 2..r {
            if i % 2 == 1 {
                set(a[i], t[i], T);
                set(t[i], b[i], T);
                set(a[i], b[i], M);
            } else {
                set(a[i], t[i], O);
                set(t[i], b[i], O);
                set(a[i], b[i], O);
            }
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::Decomposition;
    use crate::generators;
    use alloc::vec;

    fn prism_state() -> WorkGraph {
        let g = generators::prism();
        let e = Edge::new;
        let d = Decomposition::from_parts(
            &[e(0, 2), e(1, 2), e(2, 5), e(3, 5), e(4, 5)],
            &[],
            &[e(0, 1), e(1, 4), e(3, 4), e(0, 3)],
        );
        let mut w = WorkGraph::from_graph(&g).unwrap();
        w.load_labels(&d);
        w
    }

    #[test]
    fn prism_reroute() {
        let mut w = prism_state();
        reroute(&mut w, Edge::new(1, 4)).unwrap();
        let d = w.to_decomposition();
        let e = Edge::new;
        assert_eq!(d.edges_with(T), vec![e(0, 3), e(1, 4), e(2, 5), e(3, 5), e(4, 5)]);
        assert_eq!(d.edges_with(M), vec![e(3, 4)]);
        assert_eq!(d.edges_with(O), vec![e(0, 1), e(0, 2), e(1, 2)]);
        assert!(w.check_forest_decomposition().is_ok());
    }

    #[test]
    fn reroute_from_triangle_edge() {
        let mut w = prism_state();
        let f = reroute(&mut w, Edge::new(3, 4)).unwrap();
        assert_eq!(f.r(), 2);
        assert_ne!(w.label(3, 4), Some(O));
        assert!(w.check_forest_decomposition().is_ok());
    }

    #[test]
    fn reroute_errors() {
        let mut w = prism_state();
        assert_eq!(reroute(&mut w, Edge::new(0, 2)), Err(Error::NotInO(Edge::new(0, 2))));
    }

    use EdgeLabel::{M, O, T};
}
