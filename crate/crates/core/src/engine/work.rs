//! Mutable subcubic working graph with stable vertex ids and per-edge
//! labels. Reductions delete and re-insert vertices in place; lifting
//! replays them backwards.

use alloc::vec;
use alloc::vec::Vec;

use crate::decomposition::{Decomposition, EdgeLabel};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::recognition::Adjacency;
use crate::verify::UnionFind;

#[derive(Clone, Debug)]
pub(crate) struct WorkGraph {
    adj: Vec<[Vertex; 3]>,
    lab: Vec<[Option<EdgeLabel>; 3]>,
    deg: Vec<u8>,
    alive: Vec<bool>,
}

impl Adjacency for WorkGraph {
    fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize][..self.deg[v as usize] as usize]
    }
}

impl WorkGraph {
    pub(crate) fn from_graph(g: &Graph) -> Result<WorkGraph> {
        if g.max_degree() > 3 {
            return Err(Error::PreconditionFailed("maximum degree exceeds 3".into()));
        }
        let n = g.n();
        let mut w = WorkGraph {
            adj: vec![[0; 3]; n],
            lab: vec![[None; 3]; n],
            deg: vec![0; n],
            alive: vec![true; n],
        };
        for v in g.vertices() {
            for (i, &x) in g.neighbors(v).iter().enumerate() {
                w.adj[v as usize][i] = x;
            }
            w.deg[v as usize] = g.degree(v) as u8;
        }
        Ok(w)
    }

    pub(crate) fn n(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn is_alive(&self, v: Vertex) -> bool {
        self.alive[v as usize]
    }

    pub(crate) fn alive_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n() as Vertex).filter(|&v| self.alive[v as usize])
    }

    pub(crate) fn kill(&mut self, v: Vertex) {
        debug_assert_eq!(self.deg[v as usize], 0, "killing {v} with edges left");
        self.alive[v as usize] = false;
    }

    pub(crate) fn revive(&mut self, v: Vertex) {
        self.alive[v as usize] = true;
    }

    fn slot(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.neighbors(u).iter().position(|&x| x == v)
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && self.slot(u, v).is_none(), "edge {u}-{v} exists");
        for (a, b) in [(u, v), (v, u)] {
            let d = self.deg[a as usize] as usize;
            assert!(d < 3, "vertex {a} would exceed degree 3");
            let row = &mut self.adj[a as usize];
            let labels = &mut self.lab[a as usize];
            let mut i = d;
            while i > 0 && row[i - 1] > b {
                row[i] = row[i - 1];
                labels[i] = labels[i - 1];
                i -= 1;
            }
            row[i] = b;
            labels[i] = None;
            self.deg[a as usize] += 1;
        }
    }

    /// Removes the edge and returns its label.
    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Option<EdgeLabel> {
        let mut label = None;
        for (a, b) in [(u, v), (v, u)] {
            let i = self.slot(a, b).unwrap_or_else(|| panic!("no edge {a}-{b}"));
            let d = self.deg[a as usize] as usize;
            label = self.lab[a as usize][i];
            let row = &mut self.adj[a as usize];
            let labels = &mut self.lab[a as usize];
            for j in i..d - 1 {
                row[j] = row[j + 1];
                labels[j] = labels[j + 1];
            }
            self.deg[a as usize] -= 1;
        }
        label
    }

    pub(crate) fn label(&self, u: Vertex, v: Vertex) -> Option<EdgeLabel> {
        self.slot(u, v).and_then(|i| self.lab[u as usize][i])
    }

    pub(crate) fn label_of(&self, e: Edge) -> Option<EdgeLabel> {
        self.label(e.u(), e.v())
    }

    pub(crate) fn set_label(&mut self, u: Vertex, v: Vertex, l: EdgeLabel) {
        for (a, b) in [(u, v), (v, u)] {
            let i = self
                .slot(a, b)
                .unwrap_or_else(|| panic!("labeling missing edge {a}-{b}"));
            self.lab[a as usize][i] = Some(l);
        }
    }

    /// The neighbor of `v` outside `excluded`, if exactly such one exists
    /// among the first matches.
    pub(crate) fn other_neighbor(&self, v: Vertex, excluded: &[Vertex]) -> Option<Vertex> {
        self.neighbors(v).iter().copied().find(|x| !excluded.contains(x))
    }

    /// Alive edges with `u < v`.
    pub(crate) fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.alive_vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| Edge::new(u, v))
        })
    }

    /// Vertices of `v`'s component, or `None` once more than `limit` are
    /// found.
    pub(crate) fn bounded_component(&self, v: Vertex, limit: usize) -> Option<Vec<Vertex>> {
        let mut comp = vec![v];
        let mut i = 0;
        while i < comp.len() {
            for &x in self.neighbors(comp[i]) {
                if !comp.contains(&x) {
                    comp.push(x);
                    if comp.len() > limit {
                        return None;
                    }
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        Some(comp)
    }

    /// Full component of `v`, sorted.
    pub(crate) fn component(&self, v: Vertex) -> Vec<Vertex> {
        let mut seen = alloc::collections::BTreeSet::new();
        let mut stack = vec![v];
        seen.insert(v);
        while let Some(x) = stack.pop() {
            for &y in self.neighbors(x) {
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Compact copy of the subgraph induced by `verts` (sorted), with its
    /// labels. The i-th entry of `verts` becomes vertex i.
    pub(crate) fn extract(&self, verts: &[Vertex]) -> (Graph, Decomposition) {
        let idx = |v: Vertex| verts.binary_search(&v).ok().map(|i| i as Vertex);
        let mut edges = Vec::new();
        let mut d = Decomposition::new();
        for &u in verts {
            for &v in self.neighbors(u) {
                if u < v {
                    if let Some(j) = idx(v) {
                        let e = Edge::new(idx(u).unwrap(), j);
                        edges.push(e);
                        if let Some(l) = self.label(u, v) {
                            d.set(e, l);
                        }
                    }
                }
            }
        }
        (Graph::from_edges_unchecked(verts.len(), edges), d)
    }

    pub(crate) fn load_labels(&mut self, d: &Decomposition) {
        for (e, l) in d.iter() {
            if self.slot(e.u(), e.v()).is_some() {
                self.set_label(e.u(), e.v(), l);
            }
        }
    }

    pub(crate) fn to_decomposition(&self) -> Decomposition {
        self.edges()
            .filter_map(|e| Some((e, self.label_of(e)?)))
            .collect()
    }

    /// Checks that the labels form a good decomposition of every component
    /// of the alive graph: a spanning tree per component, a matching and a
    /// 2-regular part.
    pub(crate) fn check_forest_decomposition(&self) -> core::result::Result<(), alloc::string::String> {
        use alloc::format;
        let n = self.n();
        let mut tree = UnionFind::new(n);
        let mut graph = UnionFind::new(n);
        let mut t_edges = 0usize;
        let mut joins = 0usize;
        for e in self.edges() {
            let (u, v) = e.endpoints();
            if graph.union(u, v) {
                joins += 1;
            }
            match self.label(u, v) {
                None => return Err(format!("edge {e} unlabeled")),
                Some(EdgeLabel::T) => {
                    if !tree.union(u, v) {
                        return Err(format!("T has a cycle through {e}"));
                    }
                    t_edges += 1;
                }
                Some(_) => {}
            }
        }
        if t_edges != joins {
            return Err(format!("T has {t_edges} edges but the forest needs {joins}"));
        }
        for v in self.alive_vertices() {
            let count = |l| {
                self.neighbors(v)
                    .iter()
                    .filter(|&&x| self.label(v, x) == Some(l))
                    .count()
            };
            if count(EdgeLabel::M) > 1 {
                return Err(format!("two matching edges at {v}"));
            }
            let o = count(EdgeLabel::O);
            if o != 0 && o != 2 {
                return Err(format!("vertex {v} has O-degree {o}"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn edit_and_label() {
        let mut w = WorkGraph::from_graph(&generators::k4()).unwrap();
        w.set_label(0, 1, EdgeLabel::M);
        assert_eq!(w.remove_edge(1, 0), Some(EdgeLabel::M));
        assert_eq!(w.neighbors(0), &[2, 3]);
        w.add_edge(1, 0);
        assert_eq!(w.neighbors(0), &[1, 2, 3]);
        assert_eq!(w.label(0, 1), None);
        w.set_label(2, 3, EdgeLabel::O);
        assert_eq!(w.label(3, 2), Some(EdgeLabel::O));
        assert_eq!(w.edges().count(), 6);
    }

    #[test]
    fn bounded_components() {
        let w = WorkGraph::from_graph(&generators::prism()).unwrap();
        assert_eq!(w.bounded_component(0, 10), Some(vec![0, 1, 2, 3, 4, 5]));
        assert_eq!(w.bounded_component(0, 5), None);
    }
}
