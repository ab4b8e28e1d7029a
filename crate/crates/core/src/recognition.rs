//! Classification of inputs and the triangle/diamond structure of claw-free
//! cubic graphs.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Read-only adjacency access shared by [`Graph`] and the engine's mutable
/// working graph.
pub trait Adjacency {
    fn neighbors(&self, v: Vertex) -> &[Vertex];

    fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.neighbors(a).contains(&b)
    }

    fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }
}

impl Adjacency for Graph {
    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        Graph::neighbors(self, v)
    }

    fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.has_edge(a, b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeClass {
    Cubic,
    /// Every degree at most three and at least one below three.
    SubcubicProper,
    Other,
}

pub fn classify_degrees(g: &Graph) -> DegreeClass {
    if g.vertices().all(|v| g.degree(v) == 3) {
        DegreeClass::Cubic
    } else if g.max_degree() <= 3 {
        DegreeClass::SubcubicProper
    } else {
        DegreeClass::Other
    }
}

/// An induced `K_{1,3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claw {
    pub center: Vertex,
    pub leaves: [Vertex; 3],
}

/// Smallest claw by center, then by lexicographic leaf triple.
///
/// Vertices of degree at most three contribute at most one triple, so on
/// subcubic inputs this is a linear scan.
pub fn find_claw(g: &Graph) -> Option<Claw> {
    g.vertices().find_map(|v| claw_at(g, v))
}

pub(crate) fn claw_at<A: Adjacency + ?Sized>(g: &A, v: Vertex) -> Option<Claw> {
    let nb = g.neighbors(v);
    let mut nb_sorted: Vec<Vertex> = nb.to_vec();
    nb_sorted.sort_unstable();
    let d = nb_sorted.len();
    for i in 0..d {
        for j in i + 1..d {
            if g.adjacent(nb_sorted[i], nb_sorted[j]) {
                continue;
            }
            for k in j + 1..d {
                let (a, b, c) = (nb_sorted[i], nb_sorted[j], nb_sorted[k]);
                if !g.adjacent(a, c) && !g.adjacent(b, c) {
                    return Some(Claw {
                        center: v,
                        leaves: [a, b, c],
                    });
                }
            }
        }
    }
    None
}

/// A diamond: `K4` minus the edge `a d`. As a partition unit, `a < d` and
/// `b < c`. Inside a [`DiamondString`] the tips are oriented along the
/// string instead, `a` facing the previous diamond (or `w`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diamond {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub d: Vertex,
}

impl Diamond {
    pub fn vertices(&self) -> [Vertex; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn reversed(self) -> Diamond {
        Diamond {
            a: self.d,
            d: self.a,
            ..self
        }
    }

    pub fn min_vertex(&self) -> Vertex {
        *self.vertices().iter().min().unwrap()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unit {
    /// Sorted vertex triple.
    Triangle([Vertex; 3]),
    Diamond(Diamond),
}

impl Unit {
    pub fn vertices(&self) -> UnitVertices {
        match *self {
            Unit::Triangle([x, y, z]) => UnitVertices {
                buf: [x, y, z, 0],
                len: 3,
            },
            Unit::Diamond(d) => UnitVertices {
                buf: d.vertices(),
                len: 4,
            },
        }
    }

    pub fn is_diamond(&self) -> bool {
        matches!(self, Unit::Diamond(_))
    }

    pub fn min_vertex(&self) -> Vertex {
        *self.vertices().iter().min().unwrap()
    }
}

/// The three or four vertices of a [`Unit`].
#[derive(Clone, Copy, Debug)]
pub struct UnitVertices {
    buf: [Vertex; 4],
    len: u8,
}

impl core::ops::Deref for UnitVertices {
    type Target = [Vertex];

    fn deref(&self) -> &[Vertex] {
        &self.buf[..self.len as usize]
    }
}

/// The unique partition of `V(G)` into triangle and diamond units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitPartition {
    pub units: Vec<Unit>,
    /// `unit_of[v]` indexes into `units`.
    pub unit_of: Vec<usize>,
}

impl UnitPartition {
    pub fn unit(&self, v: Vertex) -> &Unit {
        &self.units[self.unit_of[v as usize]]
    }

    pub fn in_diamond(&self, v: Vertex) -> bool {
        self.unit(v).is_diamond()
    }

    pub fn diamonds(&self) -> impl Iterator<Item = (usize, &Diamond)> {
        self.units.iter().enumerate().filter_map(|(i, u)| match u {
            Unit::Diamond(d) => Some((i, d)),
            Unit::Triangle(_) => None,
        })
    }
}

pub(crate) fn is_k4(g: &Graph) -> bool {
    g.n() == 4 && g.m() == 6
}

/// Checks connected + cubic + claw-free and reports the first violation.
pub fn check_claw_free_cubic(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::PreconditionFailed("empty graph".into()));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) != 3) {
        return Err(Error::PreconditionFailed(format!(
            "vertex {v} has degree {}, expected 3",
            g.degree(v)
        )));
    }
    if !g.is_connected() {
        return Err(Error::PreconditionFailed("graph is not connected".into()));
    }
    if let Some(c) = find_claw(g) {
        return Err(Error::PreconditionFailed(format!(
            "claw centered at {} with leaves {:?}",
            c.center, c.leaves
        )));
    }
    Ok(())
}

/// The unit containing `v`, found from `v`'s neighborhood alone.
///
/// Valid wherever `v` and its neighbors have degree three in a claw-free
/// graph that is not `K4` around `v`. Returns `None` if `v` is in no
/// triangle.
pub(crate) fn local_unit<A: Adjacency + ?Sized>(g: &A, v: Vertex) -> Option<Unit> {
    let nb = g.neighbors(v);
    let mut tri = None;
    'find: for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            if g.adjacent(nb[i], nb[j]) {
                tri = Some((nb[i], nb[j]));
                break 'find;
            }
        }
    }
    let (p, q) = tri?;
    let other_common = |x: Vertex, y: Vertex, not: Vertex| {
        g.neighbors(x)
            .iter()
            .copied()
            .find(|&r| r != not && r != y && g.adjacent(y, r))
    };
    // the three edges of the triangle; a second triangle on one of them
    // makes a diamond whose tips are the two non-shared vertices
    for (x, y, third) in [(p, q, v), (v, p, q), (v, q, p)] {
        if let Some(r) = other_common(x, y, third) {
            let (a, d) = if third < r { (third, r) } else { (r, third) };
            let (b, c) = if x < y { (x, y) } else { (y, x) };
            return Some(Unit::Diamond(Diamond { a, b, c, d }));
        }
    }
    let mut t = [v, p, q];
    t.sort_unstable();
    Some(Unit::Triangle(t))
}

/// Partitions the vertices of a connected claw-free cubic graph other than
/// `K4` into triangles and diamonds.
pub fn unit_partition(g: &Graph) -> Result<UnitPartition> {
    if is_k4(g) {
        return Err(Error::IsK4);
    }
    check_claw_free_cubic(g)?;
    partition_unchecked(g)
}

pub(crate) fn partition_unchecked(g: &Graph) -> Result<UnitPartition> {
    let n = g.n();
    const NONE: usize = usize::MAX;
    let mut unit_of = vec![NONE; n];
    let mut units = Vec::new();
    for v in 0..n as Vertex {
        if unit_of[v as usize] != NONE {
            continue;
        }
        let unit = local_unit(g, v).ok_or_else(|| {
            Error::PreconditionFailed(format!("vertex {v} lies in no triangle"))
        })?;
        for &x in unit.vertices().iter() {
            if unit_of[x as usize] != NONE {
                return Err(Error::InternalError(format!(
                    "unit {unit:?} overlaps an earlier unit at vertex {x}"
                )));
            }
            unit_of[x as usize] = units.len();
        }
        units.push(unit);
    }
    Ok(UnitPartition { units, unit_of })
}

/// Inter-unit edges counted per unordered unit pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitMultigraph {
    pub units: usize,
    pub multiplicity: BTreeMap<(usize, usize), usize>,
}

impl UnitMultigraph {
    pub fn between(&self, i: usize, j: usize) -> usize {
        let key = if i < j { (i, j) } else { (j, i) };
        self.multiplicity.get(&key).copied().unwrap_or(0)
    }
}

pub fn unit_multigraph(g: &Graph, p: &UnitPartition) -> UnitMultigraph {
    let mut multiplicity = BTreeMap::new();
    for e in g.edges() {
        let (i, j) = (p.unit_of[e.u() as usize], p.unit_of[e.v() as usize]);
        if i != j {
            *multiplicity.entry((i.min(j), i.max(j))).or_insert(0) += 1;
        }
    }
    UnitMultigraph {
        units: p.units.len(),
        multiplicity,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StringConfig {
    /// The diamonds close into a ring covering the whole graph.
    Necklace,
    /// `w` and `z` are adjacent, sharing a triangle with `u`.
    CommonTriangle { u: Vertex },
    DistinctTriangles,
}

/// A maximal run of diamonds `D_1 .. D_k` joined by the edges `d_i a_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondString {
    pub diamonds: Vec<Diamond>,
    /// Outside neighbor of `a_1`; `None` for a necklace.
    pub w: Option<Vertex>,
    /// Outside neighbor of `d_k`; `None` for a necklace.
    pub z: Option<Vertex>,
    pub config: StringConfig,
}

impl DiamondString {
    pub fn k(&self) -> usize {
        self.diamonds.len()
    }

    pub fn min_vertex(&self) -> Vertex {
        self.diamonds.iter().map(Diamond::min_vertex).min().unwrap()
    }
}

/// The neighbor of diamond tip `t` outside its diamond.
pub(crate) fn tip_exit<A: Adjacency + ?Sized>(g: &A, dia: &Diamond, t: Vertex) -> Option<Vertex> {
    g.neighbors(t).iter().copied().find(|&x| x != dia.b && x != dia.c)
}

/// Walks the string through diamond `start` (given with arbitrary tip
/// orientation). `diamond_at` maps a vertex to the diamond containing it.
pub(crate) fn walk_string<A, F>(g: &A, start: Diamond, diamond_at: F) -> DiamondString
where
    A: Adjacency + ?Sized,
    F: Fn(Vertex) -> Option<Diamond>,
{
    // orient a neighbouring diamond so that `entry` is its `a`
    let orient = |dia: Diamond, entry: Vertex| {
        if dia.a == entry {
            dia
        } else {
            dia.reversed()
        }
    };
    let mut forward = vec![start];
    let mut closed = false;
    loop {
        let last = *forward.last().unwrap();
        let Some(next) = tip_exit(g, &last, last.d) else { break };
        match diamond_at(next) {
            Some(dia) if dia.min_vertex() == start.min_vertex() => {
                closed = true;
                break;
            }
            Some(dia) => forward.push(orient(dia, next)),
            None => break,
        }
    }
    if closed {
        // D_1 holds the smallest vertex and a_1 is its smaller tip
        let (mut idx, _) = forward
            .iter()
            .enumerate()
            .min_by_key(|(_, d)| d.min_vertex())
            .unwrap();
        if forward[idx].a > forward[idx].d {
            forward.reverse();
            for d in &mut forward {
                *d = d.reversed();
            }
            idx = forward.len() - 1 - idx;
        }
        forward.rotate_left(idx);
        return DiamondString {
            diamonds: forward,
            w: None,
            z: None,
            config: StringConfig::Necklace,
        };
    }
    let mut backward = Vec::new();
    let mut cur = start;
    while let Some(prev) = tip_exit(g, &cur, cur.a) {
        match diamond_at(prev) {
            Some(dia) => {
                // entering from the a-side means `prev` is that diamond's d
                let dia = if dia.d == prev { dia } else { dia.reversed() };
                backward.push(dia);
                cur = dia;
            }
            None => break,
        }
    }
    backward.reverse();
    backward.extend(forward);
    let mut diamonds = backward;
    let mut w = tip_exit(g, &diamonds[0], diamonds[0].a);
    let mut z = {
        let last = diamonds.last().unwrap();
        tip_exit(g, last, last.d)
    };
    if let (Some(wv), Some(zv)) = (w, z) {
        if wv > zv {
            diamonds.reverse();
            for d in &mut diamonds {
                *d = d.reversed();
            }
            core::mem::swap(&mut w, &mut z);
        }
    }
    let config = match (w, z) {
        (Some(wv), Some(zv)) if g.adjacent(wv, zv) => {
            let u = g
                .neighbors(wv)
                .iter()
                .copied()
                .find(|&u| u != zv && g.adjacent(u, zv))
                .unwrap_or(Vertex::MAX);
            StringConfig::CommonTriangle { u }
        }
        _ => StringConfig::DistinctTriangles,
    };
    DiamondString {
        diamonds,
        w,
        z,
        config,
    }
}

/// All maximal diamond strings, ordered by smallest vertex.
pub fn find_diamond_strings(g: &Graph, p: &UnitPartition) -> Vec<DiamondString> {
    let diamond_at = |v: Vertex| match p.unit(v) {
        Unit::Diamond(d) => Some(*d),
        Unit::Triangle(_) => None,
    };
    let mut seen = vec![false; p.units.len()];
    let mut out = Vec::new();
    for (i, dia) in p.diamonds() {
        if seen[i] {
            continue;
        }
        let s = walk_string(g, *dia, diamond_at);
        for d in &s.diamonds {
            seen[p.unit_of[d.a as usize]] = true;
        }
        out.push(s);
    }
    out.sort_by_key(DiamondString::min_vertex);
    out
}
