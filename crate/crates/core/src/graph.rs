//! Immutable simple undirected graphs with dense `0..n` vertex ids.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Vertex id. Graphs in this crate are always densely numbered `0..n`.
pub type Vertex = u32;

/// An undirected edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Builds the canonical edge between two distinct vertices.
    ///
    /// Panics if `a == b`; use [`Graph::from_edge_list`] for checked input.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        assert_ne!(a, b, "loop edge {a}-{a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> Vertex {
        self.u
    }

    pub fn v(self) -> Vertex {
        self.v
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(self, x: Vertex) -> Vertex {
        debug_assert!(x == self.u || x == self.v);
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Edge {
        Edge::new(a, b)
    }
}

/// A finite simple undirected graph.
///
/// Neighbor lists are kept sorted so every traversal, and therefore every
/// tie-break made on top of it, is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Loops, repeated pairs and out-of-range endpoints are rejected rather
    /// than silently repaired.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        let mut m = 0;
        for (a, b) in edges {
            for x in [a, b] {
                if x as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            if adj[a as usize].contains(&b) {
                let e = Edge::new(a, b);
                return Err(Error::DuplicateEdge(e.u, e.v));
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, m })
    }

    /// Builds from canonical edges; used internally where simplicity is
    /// already guaranteed.
    pub(crate) fn from_edges_unchecked(n: usize, edges: impl IntoIterator<Item = Edge>) -> Graph {
        Graph::from_edge_list(n, edges.into_iter().map(Edge::endpoints))
            .expect("internal edge list is simple")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        let (a, b) = (a as usize, b as usize);
        if a >= self.n() || b >= self.n() {
            return false;
        }
        self.adj[a].binary_search(&(b as Vertex)).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        0..self.n() as Vertex
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as Vertex) < v {
                    out.push(Edge::new(u as Vertex, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `G \ S`: deletes the given vertices and renumbers the survivors in
    /// increasing order. Returns the new graph and the old-to-new map.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Option<Vertex>>) {
        let mut keep = vec![true; self.n()];
        for &v in removed {
            keep[v as usize] = false;
        }
        self.induced(&keep)
    }

    /// Subgraph induced by the vertices flagged in `keep`, renumbered.
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<Option<Vertex>>) {
        let mut map = vec![None; self.n()];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                map[v] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges()
            .into_iter()
            .filter_map(|e| Some(Edge::new(map[e.u as usize]?, map[e.v as usize]?)));
        (Graph::from_edges_unchecked(next as usize, edges), map)
    }

    /// `G \ X`: deletes the given edges, keeping vertex ids.
    pub fn remove_edges(&self, removed: &[Edge]) -> Graph {
        let edges = self.edges().into_iter().filter(|e| !removed.contains(e));
        Graph::from_edges_unchecked(self.n(), edges)
    }

    /// Adds edges that must not already be present.
    pub fn add_edges(&self, added: &[Edge]) -> Result<Graph> {
        let all = self.edges().into_iter().chain(added.iter().copied());
        Graph::from_edge_list(self.n(), all.map(Edge::endpoints))
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s as Vertex);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Cut-edges of a connected graph, sorted.
    ///
    /// Iterative DFS with low-points, linear time.
    pub fn bridges(&self) -> Result<Vec<Edge>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let n = self.n();
        const UNSEEN: u32 = u32::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0u32; n];
        let mut out = Vec::new();
        let mut time = 0u32;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(0, None, 0)];
        disc[0] = 0;
        low[0] = 0;
        time += 1;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            let nbrs = &self.adj[v as usize];
            if *idx < nbrs.len() {
                let w = nbrs[*idx];
                *idx += 1;
                if Some(w) == parent {
                    continue;
                }
                if disc[w as usize] == UNSEEN {
                    disc[w as usize] = time;
                    low[w as usize] = time;
                    time += 1;
                    stack.push((w, Some(v), 0));
                } else {
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    low[p as usize] = low[p as usize].min(low[v as usize]);
                    if low[v as usize] > disc[p as usize] {
                        out.push(Edge::new(p, v));
                    }
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n() as Vertex;
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|e| Edge::new(e.u + shift, e.v + shift)));
        Graph::from_edges_unchecked(self.n() + other.n(), edges)
    }

    /// Applies a vertex permutation `perm[old] = new`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let edges = self
            .edges()
            .into_iter()
            .map(|e| Edge::new(perm[e.u as usize], perm[e.v as usize]));
        Graph::from_edges_unchecked(self.n(), edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn k4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn builds_k4_and_prism() {
        assert_eq!(k4().m(), 6);
        let prism = Graph::from_edge_list(
            6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!((prism.n(), prism.m()), (6, 9));
    }

    #[test]
    fn rejects_malformed_edge_lists() {
        assert_eq!(Graph::from_edge_list(3, [(0, 1), (1, 1)]), Err(Error::LoopEdge(1)));
        assert_eq!(
            Graph::from_edge_list(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn bridges_of_small_graphs() {
        let path = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.bridges().unwrap(), vec![Edge::new(0, 1), Edge::new(1, 2)]);
        assert!(k4().bridges().unwrap().is_empty());
        let two = k4().disjoint_union(&k4());
        assert_eq!(two.bridges(), Err(Error::NotConnected));
    }

    #[test]
    fn double_bracelet_has_one_bridge_between_caps() {
        let g = generators::double_bracelet(1, 1).unwrap();
        let b = g.bridges().unwrap();
        // brute force: an edge is a bridge iff deleting it disconnects
        let brute: Vec<Edge> = g
            .edges()
            .into_iter()
            .filter(|&e| !g.remove_edges(&[e]).is_connected())
            .collect();
        assert_eq!(b, brute);
        assert_eq!(b.len(), 1);
        // the cap vertices of the two bracelets are 6 and 13
        assert_eq!(b[0], Edge::new(6, 13));
    }

    #[test]
    fn components_are_ordered() {
        assert_eq!(k4().components(), vec![vec![0, 1, 2, 3]]);
        let two = k4().disjoint_union(&k4());
        assert_eq!(two.components(), vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn remove_vertices_relabels() {
        let (g, map) = k4().remove_vertices(&[1]);
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(map, vec![Some(0), None, Some(1), Some(2)]);
    }
}
