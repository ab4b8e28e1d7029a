//! Exhaustive ground truth: enumerate spanning trees and test whether the
//! complement splits into a matching plus disjoint cycles.

use alloc::vec;
use alloc::vec::Vec;

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::verify::UnionFind;

/// Union-find with undo, for backtracking.
struct RollbackDsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    history: Vec<u32>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] > self.size[rb as usize] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[ra as usize] = rb;
        self.size[rb as usize] += self.size[ra as usize];
        self.history.push(ra);
        true
    }

    fn undo(&mut self) {
        let ra = self.history.pop().expect("undo without union");
        let rb = self.parent[ra as usize];
        self.size[rb as usize] -= self.size[ra as usize];
        self.parent[ra as usize] = ra;
    }
}

#[derive(Clone, Copy)]
enum Stage {
    Include,
    Exclude,
    Done,
}

struct Frame {
    idx: usize,
    stage: Stage,
    included: bool,
}

/// Streams every spanning tree exactly once, as sorted edge lists.
///
/// Edges are branched in lexicographic order, inclusion first, so trees come
/// out in lexicographic order of their edge lists.
pub struct SpanningTrees {
    n: usize,
    edges: Vec<Edge>,
    dsu: RollbackDsu,
    chosen: Vec<Edge>,
    stack: Vec<Frame>,
}

pub fn spanning_trees(g: &Graph) -> Result<SpanningTrees> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(SpanningTrees {
        n: g.n(),
        edges: g.edges(),
        dsu: RollbackDsu::new(g.n()),
        chosen: Vec::with_capacity(g.n()),
        stack: vec![Frame {
            idx: 0,
            stage: Stage::Include,
            included: false,
        }],
    })
}

impl SpanningTrees {
    /// Whether the chosen edges plus `edges[from..]` still connect the graph.
    fn completable(&self, from: usize) -> bool {
        let mut uf = UnionFind::new(self.n);
        for e in self.chosen.iter().chain(&self.edges[from..]) {
            uf.union(e.u(), e.v());
        }
        let root = uf.find(0);
        (1..self.n as Vertex).all(|v| uf.find(v) == root)
    }
}

impl Iterator for SpanningTrees {
    type Item = Vec<Edge>;

    fn next(&mut self) -> Option<Vec<Edge>> {
        while let Some(top) = self.stack.last_mut() {
            let i = top.idx;
            match top.stage {
                Stage::Include => {
                    if self.chosen.len() + 1 == self.n {
                        self.stack.pop();
                        return Some(self.chosen.clone());
                    }
                    if i == self.edges.len() {
                        self.stack.pop();
                        continue;
                    }
                    top.stage = Stage::Exclude;
                    let e = self.edges[i];
                    if self.dsu.union(e.u(), e.v()) {
                        top.included = true;
                        self.chosen.push(e);
                        self.stack.push(Frame {
                            idx: i + 1,
                            stage: Stage::Include,
                            included: false,
                        });
                    }
                }
                Stage::Exclude => {
                    top.stage = Stage::Done;
                    if top.included {
                        top.included = false;
                        self.chosen.pop();
                        self.dsu.undo();
                    }
                    if self.completable(i + 1) {
                        self.stack.push(Frame {
                            idx: i + 1,
                            stage: Stage::Include,
                            included: false,
                        });
                    }
                }
                Stage::Done => {
                    self.stack.pop();
                }
            }
        }
        None
    }
}

/// Splits `E(G) \ tree` into matching edges and cycle edges, if possible.
///
/// With `strict`, an empty cycle part is rejected.
pub fn complement_ok(g: &Graph, tree: &[Edge], strict: bool) -> Result<Option<(Vec<Edge>, Vec<Edge>)>> {
    let n = g.n();
    if tree.len() + 1 != n {
        return Err(Error::NotASpanningTree);
    }
    let mut uf = UnionFind::new(n);
    for e in tree {
        if !g.has_edge(e.u(), e.v()) || !uf.union(e.u(), e.v()) {
            return Err(Error::NotASpanningTree);
        }
    }
    let mut in_tree: Vec<Edge> = tree.to_vec();
    in_tree.sort_unstable();
    let rest: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|e| in_tree.binary_search(e).is_err())
        .collect();
    let mut deg = vec![0u8; n];
    for e in &rest {
        deg[e.u() as usize] += 1;
        deg[e.v() as usize] += 1;
    }
    if deg.iter().any(|&d| d > 2) {
        return Ok(None);
    }
    // components of the complement: count vertices and edges
    let mut cuf = UnionFind::new(n);
    for e in &rest {
        cuf.union(e.u(), e.v());
    }
    let mut verts = vec![0usize; n];
    let mut edges = vec![0usize; n];
    for v in 0..n as Vertex {
        if deg[v as usize] > 0 {
            verts[cuf.find(v) as usize] += 1;
        }
    }
    for e in &rest {
        edges[cuf.find(e.u()) as usize] += 1;
    }
    let (mut matching, mut cycles) = (Vec::new(), Vec::new());
    for e in rest {
        let root = cuf.find(e.u()) as usize;
        if edges[root] == verts[root] {
            cycles.push(e);
        } else if edges[root] == 1 {
            matching.push(e);
        } else {
            return Ok(None);
        }
    }
    if strict && cycles.is_empty() {
        return Ok(None);
    }
    Ok(Some((matching, cycles)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Found(Decomposition),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub outcome: OracleOutcome,
    pub trees_examined: u64,
}

impl OracleResult {
    pub fn found(&self) -> Option<&Decomposition> {
        match &self.outcome {
            OracleOutcome::Found(d) => Some(d),
            OracleOutcome::None => None,
        }
    }
}

/// Strict search: the cycle part must be nonempty.
pub fn oracle_decompose(g: &Graph) -> Result<OracleResult> {
    oracle_decompose_with(g, true)
}

/// First good decomposition in spanning-tree enumeration order, or `None`
/// after exhausting every tree.
pub fn oracle_decompose_with(g: &Graph, strict: bool) -> Result<OracleResult> {
    let mut examined = 0;
    for tree in spanning_trees(g)? {
        examined += 1;
        if let Some((matching, cycles)) = complement_ok(g, &tree, strict)? {
            return Ok(OracleResult {
                outcome: OracleOutcome::Found(Decomposition::from_parts(&tree, &matching, &cycles)),
                trees_examined: examined,
            });
        }
    }
    Ok(OracleResult {
        outcome: OracleOutcome::None,
        trees_examined: examined,
    })
}

/// Number of spanning trees by enumeration.
pub fn count_spanning_trees(g: &Graph) -> Result<u64> {
    Ok(spanning_trees(g)?.count() as u64)
}
