use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::decomposition::EdgeLabel;
use crate::error::{Error, Result};
use crate::graph::{Edge, Vertex};
use crate::recognition::Diamond;

/// One reduction. Vertex ids refer to the graph the step is applied to.
///
/// Triangle roles follow `v = [v1, v2, v3]` and `u = [u1, u2, u3]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ReductionStep {
    /// Triangles `V` and `U` joined by `v1 u1` and `v2 u2`; `x` and `y`
    /// are the outside neighbors of `v3` and `u3`. Removes both triangles
    /// and adds `x y`.
    StepA {
        v: [Vertex; 3],
        u: [Vertex; 3],
        x: Vertex,
        y: Vertex,
    },
    /// Triangles joined by the single edge `v3 u3`; `x`, `y` hang off `v1`,
    /// `v2` and `w`, `z` off `u1`, `u2`. Removes both triangles and adds
    /// `x y` and `w z`. `disconnected` records whether the reduced graph
    /// falls apart; the engine fills it in while lifting.
    StepB {
        v: [Vertex; 3],
        u: [Vertex; 3],
        x: Vertex,
        y: Vertex,
        w: Vertex,
        z: Vertex,
        disconnected: bool,
    },
    /// A string of `k >= 2` diamonds, oriented so `a_1` faces `w` and `d_k`
    /// faces `z`. Removes `D_2 .. D_k` and adds `d_1 z`.
    StringReduce {
        diamonds: Vec<Diamond>,
        w: Vertex,
        z: Vertex,
    },
    /// A lone diamond between non-adjacent `w` and `z`. Removes it and adds
    /// `w z`.
    SingleDiamond { diamond: Diamond, w: Vertex, z: Vertex },
    /// A lone diamond whose ends `w`, `z` share the triangle `u w z`.
    /// Removes the seven vertices and the edge `x u`, leaving `x` of
    /// degree two.
    CutEdge {
        diamond: Diamond,
        u: Vertex,
        w: Vertex,
        z: Vertex,
        x: Vertex,
    },
    /// Deletes a bridge.
    BridgeSplit { bridge: Edge },
    /// Degree-two vertex `cap` in triangle `cap p q` with outside
    /// neighbors `p_out`, `q_out`. Removes the triangle and adds
    /// `p_out q_out`.
    CapReduce {
        cap: Vertex,
        p: Vertex,
        q: Vertex,
        p_out: Vertex,
        q_out: Vertex,
    },
}

impl ReductionStep {
    pub fn name(&self) -> &'static str {
        match self {
            ReductionStep::StepA { .. } => "StepA",
            ReductionStep::StepB { .. } => "StepB",
            ReductionStep::StringReduce { .. } => "StringReduce",
            ReductionStep::SingleDiamond { .. } => "SingleDiamond",
            ReductionStep::CutEdge { .. } => "CutEdge",
            ReductionStep::BridgeSplit { .. } => "BridgeSplit",
            ReductionStep::CapReduce { .. } => "CapReduce",
        }
    }

    pub fn removed_vertices(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = match self {
            ReductionStep::StepA { v, u, .. } | ReductionStep::StepB { v, u, .. } => {
                v.iter().chain(u).copied().collect()
            }
            ReductionStep::StringReduce { diamonds, .. } => {
                diamonds[1..].iter().flat_map(|d| d.vertices()).collect()
            }
            ReductionStep::SingleDiamond { diamond, .. } => diamond.vertices().to_vec(),
            ReductionStep::CutEdge { diamond, u, w, z, .. } => {
                let mut vs = diamond.vertices().to_vec();
                vs.extend([*u, *w, *z]);
                vs
            }
            ReductionStep::BridgeSplit { .. } => Vec::new(),
            ReductionStep::CapReduce { cap, p, q, .. } => alloc::vec![*cap, *p, *q],
        };
        out.sort_unstable();
        out
    }

    /// Edges created by the reduction.
    pub fn added_edges(&self) -> Vec<Edge> {
        match *self {
            ReductionStep::StepA { x, y, .. } => alloc::vec![Edge::new(x, y)],
            ReductionStep::StepB { x, y, w, z, .. } => alloc::vec![Edge::new(x, y), Edge::new(w, z)],
            ReductionStep::StringReduce { ref diamonds, z, .. } => {
                alloc::vec![Edge::new(diamonds[0].d, z)]
            }
            ReductionStep::SingleDiamond { w, z, .. } => alloc::vec![Edge::new(w, z)],
            ReductionStep::CapReduce { p_out, q_out, .. } => alloc::vec![Edge::new(p_out, q_out)],
            ReductionStep::CutEdge { .. } | ReductionStep::BridgeSplit { .. } => Vec::new(),
        }
    }

    /// Edges deleted although neither endpoint is removed.
    pub fn cut_edges(&self) -> Vec<Edge> {
        match *self {
            ReductionStep::BridgeSplit { bridge } => alloc::vec![bridge],
            _ => Vec::new(),
        }
    }

    /// Labels for the restored edges, given the labels of the added edges
    /// in the reduced decomposition (after any rerouting). The result must
    /// cover exactly the restored edges.
    pub(crate) fn lift_table(&self, added: &[EdgeLabel]) -> Result<Vec<(Edge, EdgeLabel)>> {
        use EdgeLabel::{M, O, T};
        let bad = || {
            Error::InternalError(format!(
                "{} cannot lift added labels {added:?}",
                self.name()
            ))
        };
        let table = match *self {
            ReductionStep::StepA { v: [v1, v2, v3], u: [u1, u2, u3], x, y } => match added[0] {
                T => Table::new()
                    .t(&[(x, v3), (v3, v1), (v1, v2), (v2, u2), (u2, u1), (u1, u3), (u3, y)])
                    .m(&[(v3, v2), (v1, u1), (u2, u3)]),
                M => Table::new()
                    .t(&[(x, v3), (v1, v3), (v2, v3), (u1, u3), (u2, u3), (u3, y)])
                    .o(&[(v1, v2), (v2, u2), (u2, u1), (u1, v1)]),
                O => return Err(bad()),
            },
            ReductionStep::StepB { v, u, x, y, w, z, disconnected } => {
                let r = BRoles { v, u, x, y, w, z };
                let (lx, lw) = (added[0], added[1]);
                if disconnected {
                    match (lx, lw) {
                        (M, M) => r.forest_mm(),
                        (T, T) => r.forest_tt(),
                        (T, M) => r.forest_tm(),
                        (M, T) => r.swapped().forest_tm(),
                        _ => return Err(bad()),
                    }
                } else {
                    match (lx, lw) {
                        (M, M) => r.mm(),
                        (T, T) => r.tt(),
                        (T, M) => r.tm(),
                        (T, O) => r.to(),
                        (M, O) => r.mo(),
                        (M, T) => r.swapped().tm(),
                        (O, T) => r.swapped().to(),
                        (O, M) => r.swapped().mo(),
                        (O, O) => return Err(bad()),
                    }
                }
            }
            ReductionStep::StringReduce { ref diamonds, z, .. } => {
                let k = diamonds.len();
                let dk = diamonds[k - 1].d;
                let mut tab = Table::new();
                for j in 0..k - 1 {
                    tab = tab.t(&[(diamonds[j].d, diamonds[j + 1].a)]);
                }
                tab = tab.t(&[(dk, z)]);
                let full = |tab: Table, d: &Diamond| {
                    tab.t(&[(d.a, d.b), (d.b, d.c), (d.c, d.d)])
                        .m(&[(d.a, d.c), (d.b, d.d)])
                };
                match added[0] {
                    T => diamonds[1..].iter().fold(tab, full),
                    M => {
                        let d2 = &diamonds[1];
                        let tab = tab
                            .t(&[(d2.b, d2.d), (d2.c, d2.d)])
                            .o(&[(d2.a, d2.b), (d2.b, d2.c), (d2.a, d2.c)]);
                        diamonds[2..].iter().fold(tab, full)
                    }
                    O => return Err(bad()),
                }
            }
            ReductionStep::SingleDiamond { diamond: d, w, z } => match added[0] {
                T => Table::new()
                    .t(&[(w, d.a), (d.a, d.b), (d.b, d.c), (d.c, d.d), (d.d, z)])
                    .m(&[(d.a, d.c), (d.b, d.d)]),
                M => Table::new()
                    .t(&[(w, d.a), (d.a, d.b), (d.a, d.c), (d.d, z)])
                    .o(&[(d.b, d.c), (d.c, d.d), (d.b, d.d)]),
                O => return Err(bad()),
            },
            ReductionStep::CutEdge { diamond: d, u, w, z, x } => Table::new()
                .t(&[(x, u), (u, w), (u, z), (w, d.a), (z, d.d), (d.d, d.c), (d.d, d.b)])
                .m(&[(w, z)])
                .o(&[(d.a, d.b), (d.b, d.c), (d.a, d.c)]),
            ReductionStep::BridgeSplit { bridge } => Table::new().t(&[bridge.endpoints()]),
            ReductionStep::CapReduce { cap, p, q, p_out, q_out } => match added[0] {
                T => Table::new()
                    .t(&[(p_out, p), (p, q), (q, q_out), (p, cap)])
                    .m(&[(cap, q)]),
                M => Table::new()
                    .t(&[(p_out, p), (p, q), (q, cap)])
                    .m(&[(p, cap), (q, q_out)]),
                O => return Err(bad()),
            },
        };
        Ok(table.0)
    }
}

struct Table(Vec<(Edge, EdgeLabel)>);

impl Table {
    fn new() -> Table {
        Table(Vec::new())
    }

    fn with(mut self, pairs: &[(Vertex, Vertex)], l: EdgeLabel) -> Table {
        self.0.extend(pairs.iter().map(|&(a, b)| (Edge::new(a, b), l)));
        self
    }

    fn t(self, pairs: &[(Vertex, Vertex)]) -> Table {
        self.with(pairs, EdgeLabel::T)
    }

    fn m(self, pairs: &[(Vertex, Vertex)]) -> Table {
        self.with(pairs, EdgeLabel::M)
    }

    fn o(self, pairs: &[(Vertex, Vertex)]) -> Table {
        self.with(pairs, EdgeLabel::O)
    }
}

#[derive(Clone, Copy)]
struct BRoles {
    v: [Vertex; 3],
    u: [Vertex; 3],
    x: Vertex,
    y: Vertex,
    w: Vertex,
    z: Vertex,
}

impl BRoles {
    fn swapped(self) -> BRoles {
        BRoles {
            v: self.u,
            u: self.v,
            x: self.w,
            y: self.z,
            w: self.x,
            z: self.y,
        }
    }

    fn mm(self) -> Table {
        let ([v1, v2, v3], [u1, u2, u3], x, y, w, z) = self.parts();
        Table::new()
            .t(&[(x, v1), (v1, v2), (v2, v3), (v3, u3), (w, u1), (u2, z)])
            .m(&[(v1, v3), (v2, y)])
            .o(&[(u1, u2), (u2, u3), (u1, u3)])
    }

    fn tt(self) -> Table {
        let ([v1, v2, v3], [u1, u2, u3], x, y, w, z) = self.parts();
        Table::new()
            .t(&[(x, v1), (v1, v3), (v3, v2), (v2, y), (w, u1), (u1, u3), (u3, u2), (u2, z)])
            .m(&[(v1, v2), (u1, u2), (u3, v3)])
    }

    fn tm(self) -> Table {
        let ([v1, v2, v3], [u1, u2, u3], x, y, w, z) = self.parts();
        Table::new()
            .t(&[(x, v1), (v1, v2), (v2, v3), (v2, y), (v3, u3), (w, u1), (u2, z)])
            .m(&[(v1, v3)])
            .o(&[(u1, u2), (u2, u3), (u1, u3)])
    }

    fn to(self) -> Table {
        let ([v1, v2, v3], [u1, u2, u3], x, y, w, z) = self.parts();
        Table::new()
            .t(&[(x, v1), (v1, v3), (v3, v2), (v2, y), (v3, u3), (u3, u1), (u3, u2)])
            .m(&[(v1, v2)])
            .o(&[(w, u1), (u1, u2), (u2, z)])
    }

    fn mo(self) -> Table {
        let ([v1, v2, v3], [u1, u2, u3], x, y, w, z) = self.parts();
        Table::new()
            .t(&[(x, v1), (v1, v2), (v2, v3), (v3, u3), (u3, u1), (u3, u2)])
            .m(&[(v1, v3), (v2, y)])
            .o(&[(w, u1), (u1, u2), (u2, z)])
    }

    fn forest_mm(self) -> Table {
        let ([v1, v2, v3], [u1, u2, u3], x, y, w, z) = self.parts();
        Table::new()
            .t(&[(x, v1), (v1, v2), (v2, v3), (v3, u3), (u3, u2), (u2, u1), (u1, w)])
            .m(&[(v1, v3), (u1, u3), (v2, y), (u2, z)])
    }

    fn forest_tt(self) -> Table {
        let ([v1, v2, v3], [u1, u2, u3], x, y, w, z) = self.parts();
        Table::new()
            .t(&[
                (x, v1),
                (v1, v3),
                (v2, v3),
                (v2, y),
                (v3, u3),
                (w, u1),
                (u1, u3),
                (u3, u2),
                (u2, z),
            ])
            .m(&[(v1, v2), (u1, u2)])
    }

    fn forest_tm(self) -> Table {
        let ([v1, v2, v3], [u1, u2, u3], x, y, w, z) = self.parts();
        Table::new()
            .t(&[(x, v1), (v1, v2), (v2, y), (v2, v3), (v3, u3), (u3, u2), (u2, u1), (u1, w)])
            .m(&[(v1, v3), (u1, u3), (u2, z)])
    }

    #[allow(clippy::type_complexity)]
    fn parts(self) -> ([Vertex; 3], [Vertex; 3], Vertex, Vertex, Vertex, Vertex) {
        (self.v, self.u, self.x, self.y, self.w, self.z)
    }
}

fn triple(f: &mut fmt::Formatter<'_>, t: &[Vertex; 3]) -> fmt::Result {
    write!(f, "({},{},{})", t[0], t[1], t[2])
}

fn diamond(f: &mut fmt::Formatter<'_>, d: &Diamond) -> fmt::Result {
    write!(f, "[{},{},{},{}]", d.a, d.b, d.c, d.d)
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        match self {
            ReductionStep::StepA { v, u, x, y } => {
                f.write_str(" v=")?;
                triple(f, v)?;
                f.write_str(" u=")?;
                triple(f, u)?;
                write!(f, " x={x} y={y}")
            }
            ReductionStep::StepB { v, u, x, y, w, z, disconnected } => {
                f.write_str(" v=")?;
                triple(f, v)?;
                f.write_str(" u=")?;
                triple(f, u)?;
                write!(f, " x={x} y={y} w={w} z={z}")?;
                if *disconnected {
                    f.write_str(" disconnected")?;
                }
                Ok(())
            }
            ReductionStep::StringReduce { diamonds, w, z } => {
                write!(f, " k={} w={w} z={z}", diamonds.len())?;
                for d in diamonds {
                    f.write_str(" ")?;
                    diamond(f, d)?;
                }
                Ok(())
            }
            ReductionStep::SingleDiamond { diamond: d, w, z } => {
                f.write_str(" ")?;
                diamond(f, d)?;
                write!(f, " w={w} z={z}")
            }
            ReductionStep::CutEdge { diamond: d, u, w, z, x } => {
                f.write_str(" ")?;
                diamond(f, d)?;
                write!(f, " u={u} w={w} z={z} x={x}")
            }
            ReductionStep::BridgeSplit { bridge } => write!(f, " {bridge}"),
            ReductionStep::CapReduce { cap, p, q, p_out, q_out } => {
                write!(f, " cap={cap} p={p} q={q} p'={p_out} q'={q_out}")
            }
        }
    }
}
