//! Fixture families and random corpora.
//!
//! Numbering conventions: in every diamond family, diamond `i` (1-based)
//! occupies ids `4(i-1) .. 4i-1` in the order `a, b, c, d`, with `a d` the
//! missing edge. Capping triangles follow the diamonds.

use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::recognition::{classify_degrees, DegreeClass};

/// A named fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenSpec {
    K4,
    Prism,
    Necklace(usize),
    BraceletGadget(usize),
    ChainGadget(usize),
    DoubleBracelet(usize, usize),
    Inflate(Graph),
    RandomCubic { n: usize, seed: u64 },
}

pub fn gen_named(spec: &GenSpec) -> Result<Graph> {
    match spec {
        GenSpec::K4 => Ok(k4()),
        GenSpec::Prism => Ok(prism()),
        GenSpec::Necklace(k) => necklace(*k),
        GenSpec::BraceletGadget(k) => bracelet_gadget(*k),
        GenSpec::ChainGadget(k) => chain_gadget(*k),
        GenSpec::DoubleBracelet(k, j) => double_bracelet(*k, *j),
        GenSpec::Inflate(g) => inflate(g),
        GenSpec::RandomCubic { n, seed } => random_cubic(*n, *seed),
    }
}

fn build(n: usize, edges: Vec<(Vertex, Vertex)>) -> Graph {
    Graph::from_edge_list(n, edges).expect("generator emits simple graphs")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for j in 0..n as Vertex {
        for i in 0..j {
            edges.push((i, j));
        }
    }
    build(n, edges)
}

pub fn k4() -> Graph {
    complete(4)
}

/// `C3 □ K2`: triangles `0 1 2` and `3 4 5`, rungs `i, i+3`.
pub fn prism() -> Graph {
    build(
        6,
        alloc::vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
    )
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n as Vertex).map(|i| (i - 1, i)).collect())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadSpec(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<_> = (1..n as Vertex).map(|i| (i - 1, i)).collect();
    edges.push((0, n as Vertex - 1));
    Ok(build(n, edges))
}

/// Edges of `k` diamonds at ids `0..4k` plus the connectors `d_i a_{i+1}`.
fn diamond_run(k: usize) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for i in 0..k as Vertex {
        let (a, b, c, d) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        edges.extend([(a, b), (a, c), (b, c), (b, d), (c, d)]);
        if i > 0 {
            edges.push((4 * i - 1, a));
        }
    }
    edges
}

/// The diamond-necklace `N_k`, `k >= 2`.
pub fn necklace(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::BadSpec(format!("necklace needs k >= 2, got {k}")));
    }
    let mut edges = diamond_run(k);
    edges.push((4 * k as Vertex - 1, 0));
    Ok(build(4 * k, edges))
}

/// The diamond-bracelet `B_k` as a gadget: triangle `a b c` at ids
/// `4k, 4k+1, 4k+2` with `b a_1` and `a d_k`; `c` keeps degree two.
pub fn bracelet_gadget(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::BadSpec("bracelet needs k >= 1".into()));
    }
    let t = 4 * k as Vertex;
    let mut edges = diamond_run(k);
    edges.extend([(t, t + 1), (t, t + 2), (t + 1, t + 2), (t + 1, 0), (t, t - 1)]);
    Ok(build(4 * k + 3, edges))
}

/// Vertex of degree two in [`bracelet_gadget`]`(k)`.
pub fn bracelet_cap(k: usize) -> Vertex {
    4 * k as Vertex + 2
}

/// The diamond-chain `L_k` as a gadget: triangles at `4k..4k+3` and
/// `4k+3..4k+6`, joined to `a_1` and `d_k` through their first vertex.
pub fn chain_gadget(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::BadSpec("chain needs k >= 1".into()));
    }
    let t = 4 * k as Vertex;
    let mut edges = diamond_run(k);
    for base in [t, t + 3] {
        edges.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)]);
    }
    edges.extend([(0, t), (t - 1, t + 3)]);
    Ok(build(4 * k + 6, edges))
}

/// Two bracelet gadgets joined by an edge between their degree-two
/// vertices: a claw-free cubic graph whose only bridge is that edge.
pub fn double_bracelet(k: usize, j: usize) -> Result<Graph> {
    let left = bracelet_gadget(k)?;
    let right = bracelet_gadget(j)?;
    let shift = left.n() as Vertex;
    let g = left.disjoint_union(&right);
    g.add_edges(&[Edge::new(bracelet_cap(k), shift + bracelet_cap(j))])
}

/// Replaces every vertex of a cubic graph by a triangle.
///
/// Vertex `v` becomes `3v, 3v+1, 3v+2`; the edge to `v`'s `i`-th smallest
/// neighbor leaves from `3v + i`.
pub fn inflate(g: &Graph) -> Result<Graph> {
    if g.n() == 0 || classify_degrees(g) != DegreeClass::Cubic {
        return Err(Error::NotCubic);
    }
    let slot = |v: Vertex, w: Vertex| {
        let i = g.neighbors(v).iter().position(|&x| x == w).unwrap();
        3 * v + i as Vertex
    };
    let mut edges = Vec::with_capacity(g.m() + 3 * g.n());
    for v in g.vertices() {
        let b = 3 * v;
        edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
    }
    for e in g.edges() {
        edges.push((slot(e.u(), e.v()), slot(e.v(), e.u())));
    }
    Ok(build(3 * g.n(), edges))
}

/// Subdivides edge `xy` with a diamond: new ids `n..n+4` as `a b c d`, with
/// `x a` and `d y`.
pub fn insert_diamond(g: &Graph, e: Edge) -> Result<Graph> {
    let (x, y) = e.endpoints();
    if !g.has_edge(x, y) {
        return Err(Error::BadSpec(format!("{e} is not an edge")));
    }
    let n = g.n() as Vertex;
    let (a, b, c, d) = (n, n + 1, n + 2, n + 3);
    let mut edges: Vec<_> = g.remove_edges(&[e]).edges().iter().map(|e| e.endpoints()).collect();
    edges.extend([(a, b), (a, c), (b, c), (b, d), (c, d), (x, a), (d, y)]);
    Ok(build(g.n() + 4, edges))
}

/// A connected simple cubic graph from the pairing model, rejecting loops,
/// parallel edges and disconnected outcomes. Deterministic per seed.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    if n < 4 {
        return Err(Error::BadSpec(format!("cubic graphs need n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<Vertex> = (0..3 * n).map(|p| (p / 3) as Vertex).collect();
    'retry: loop {
        points.shuffle(&mut rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks(2) {
            if pair[0] == pair[1] {
                continue 'retry;
            }
            edges.push(pair[0].min(pair[1]) as u64 * n as u64 + pair[0].max(pair[1]) as u64);
        }
        edges.sort_unstable();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let g = build(
            n,
            edges
                .iter()
                .map(|&k| ((k / n as u64) as Vertex, (k % n as u64) as Vertex))
                .collect(),
        );
        if g.is_connected() {
            return Ok(g);
        }
    }
}
