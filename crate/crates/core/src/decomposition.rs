use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, Graph};

/// Part of a good decomposition an edge is assigned to.
///
/// The derived order `T < M < O` is the serialization order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeLabel {
    /// Spanning tree.
    T,
    /// Matching.
    M,
    /// 2-regular subgraph.
    O,
}

impl EdgeLabel {
    pub fn as_char(self) -> char {
        match self {
            EdgeLabel::T => 'T',
            EdgeLabel::M => 'M',
            EdgeLabel::O => 'O',
        }
    }

    pub fn from_char(c: char) -> Option<EdgeLabel> {
        match c {
            'T' => Some(EdgeLabel::T),
            'M' => Some(EdgeLabel::M),
            'O' => Some(EdgeLabel::O),
            _ => None,
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An edge labeling offered as a certificate. It is not required to be
/// total or valid; [`crate::verify::verify`] decides that.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Decomposition {
    labels: BTreeMap<Edge, EdgeLabel>,
}

impl Decomposition {
    pub fn new() -> Decomposition {
        Decomposition::default()
    }

    pub fn get(&self, e: Edge) -> Option<EdgeLabel> {
        self.labels.get(&e).copied()
    }

    pub fn set(&mut self, e: Edge, label: EdgeLabel) -> Option<EdgeLabel> {
        self.labels.insert(e, label)
    }

    pub fn remove(&mut self, e: Edge) -> Option<EdgeLabel> {
        self.labels.remove(&e)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Labeled edges in lexicographic edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, EdgeLabel)> + '_ {
        self.labels.iter().map(|(&e, &l)| (e, l))
    }

    pub fn edges_with(&self, label: EdgeLabel) -> Vec<Edge> {
        self.iter().filter(|&(_, l)| l == label).map(|(e, _)| e).collect()
    }

    pub fn count(&self, label: EdgeLabel) -> usize {
        self.labels.values().filter(|&&l| l == label).count()
    }

    /// Builds a labeling of `g` from the three parts; edges listed in no part
    /// stay unlabeled.
    pub fn from_parts(tree: &[Edge], matching: &[Edge], cycles: &[Edge]) -> Decomposition {
        let mut d = Decomposition::new();
        for (set, l) in [(tree, EdgeLabel::T), (matching, EdgeLabel::M), (cycles, EdgeLabel::O)] {
            for &e in set {
                d.set(e, l);
            }
        }
        d
    }

    /// Labels parallel to `g.edges()`, or `None` if some edge is unlabeled.
    pub fn labels_for(&self, g: &Graph) -> Option<Vec<EdgeLabel>> {
        g.edges().into_iter().map(|e| self.get(e)).collect()
    }
}

impl FromIterator<(Edge, EdgeLabel)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (Edge, EdgeLabel)>>(iter: I) -> Self {
        Decomposition {
            labels: iter.into_iter().collect(),
        }
    }
}
