//! Certificate checking, plus structural diagnostics on the cycles of a
//! good decomposition.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::decomposition::{Decomposition, EdgeLabel};
use crate::graph::{Edge, Graph, Vertex};
use crate::recognition::{classify_degrees, DegreeClass, UnitPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    PartitionTotal,
    TreeSpanning,
    TreeAcyclic,
    MatchingDisjoint,
    OTwoRegular,
    ONonempty,
    SizeArithmetic,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::PartitionTotal => "partition-total",
            Check::TreeSpanning => "tree-spanning",
            Check::TreeAcyclic => "tree-acyclic",
            Check::MatchingDisjoint => "matching-disjoint",
            Check::OTwoRegular => "o-two-regular",
            Check::ONonempty => "o-nonempty",
            Check::SizeArithmetic => "size-arithmetic",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vertex(Vertex),
    Edge(Edge),
    /// Expected versus found count.
    Count { expected: usize, found: usize },
    Empty,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertex(v) => write!(f, "vertex {v}"),
            Witness::Edge(e) => write!(f, "edge {e}"),
            Witness::Count { expected, found } => write!(f, "expected {expected}, found {found}"),
            Witness::Empty => f.write_str("empty"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: Check,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub failures: Vec<Failure>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, check: Check) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// False if already joined.
    pub(crate) fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra as usize] = rb;
        true
    }
}

/// Checks that `d` is a good decomposition of `g`. Runs in near-linear time.
pub fn verify(g: &Graph, d: &Decomposition) -> VerificationReport {
    let n = g.n();
    let cubic = n > 0 && classify_degrees(g) == DegreeClass::Cubic;
    let mut checks = vec![
        Check::PartitionTotal,
        Check::TreeSpanning,
        Check::TreeAcyclic,
        Check::MatchingDisjoint,
        Check::OTwoRegular,
    ];
    if cubic {
        checks.extend([Check::ONonempty, Check::SizeArithmetic]);
    }
    let mut failures = Vec::new();
    let mut fail = |check, witness| failures.push(Failure { check, witness });

    let mut labeled = Vec::with_capacity(g.m());
    for e in g.edges() {
        match d.get(e) {
            Some(l) => labeled.push((e, l)),
            None => fail(Check::PartitionTotal, Witness::Edge(e)),
        }
    }
    for (e, _) in d.iter() {
        let (u, v) = e.endpoints();
        if !g.has_edge(u, v) {
            fail(Check::PartitionTotal, Witness::Edge(e));
        }
    }

    let mut uf = UnionFind::new(n);
    let mut m_deg = vec![0u8; n];
    let mut o_deg = vec![0u8; n];
    let (mut t_count, mut m_count, mut o_count) = (0, 0, 0);
    for &(e, l) in &labeled {
        let (u, v) = e.endpoints();
        match l {
            EdgeLabel::T => {
                t_count += 1;
                if !uf.union(u, v) {
                    fail(Check::TreeAcyclic, Witness::Edge(e));
                }
            }
            EdgeLabel::M => {
                m_count += 1;
                for x in [u, v] {
                    m_deg[x as usize] += 1;
                    if m_deg[x as usize] == 2 {
                        fail(Check::MatchingDisjoint, Witness::Vertex(x));
                    }
                }
            }
            EdgeLabel::O => {
                o_count += 1;
                o_deg[u as usize] += 1;
                o_deg[v as usize] += 1;
            }
        }
    }
    if n > 0 {
        let root = uf.find(0);
        if let Some(v) = (1..n as Vertex).find(|&v| uf.find(v) != root) {
            fail(Check::TreeSpanning, Witness::Vertex(v));
        }
    }
    for (v, &k) in o_deg.iter().enumerate() {
        if k != 0 && k != 2 {
            fail(Check::OTwoRegular, Witness::Vertex(v as Vertex));
        }
    }
    if cubic {
        if o_count == 0 {
            fail(Check::ONonempty, Witness::Empty);
        }
        if t_count != n - 1 {
            fail(
                Check::SizeArithmetic,
                Witness::Count {
                    expected: n - 1,
                    found: t_count,
                },
            );
        }
        if m_count + o_count != n / 2 + 1 {
            fail(
                Check::SizeArithmetic,
                Witness::Count {
                    expected: n / 2 + 1,
                    found: m_count + o_count,
                },
            );
        }
    }
    VerificationReport { failures, checks }
}

/// Cycles of the `O`-part as vertex sequences, each starting at its smallest
/// vertex and continuing toward the smaller of its two cycle neighbors.
///
/// Vertices whose `O`-degree is not 2 are skipped, so this is meaningful on
/// labelings that pass the two-regularity check.
pub fn o_cycles(g: &Graph, d: &Decomposition) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut o_nbrs: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for (e, l) in d.iter() {
        if l == EdgeLabel::O && (e.v() as usize) < n {
            o_nbrs[e.u() as usize].push(e.v());
            o_nbrs[e.v() as usize].push(e.u());
        }
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] || o_nbrs[s].len() != 2 {
            continue;
        }
        let mut cycle = vec![s as Vertex];
        seen[s] = true;
        let mut prev = s as Vertex;
        let mut cur = *o_nbrs[s].iter().min().unwrap();
        let mut ok = true;
        while cur as usize != s {
            if seen[cur as usize] || o_nbrs[cur as usize].len() != 2 {
                ok = false;
                break;
            }
            seen[cur as usize] = true;
            cycle.push(cur);
            let next = if o_nbrs[cur as usize][0] == prev {
                o_nbrs[cur as usize][1]
            } else {
                o_nbrs[cur as usize][0]
            };
            prev = cur;
            cur = next;
        }
        if ok {
            out.push(cycle);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma2Kind {
    /// The cycle has a chord.
    Chord(Edge),
    /// Odd length, not a triangle.
    OddLength,
    /// A cycle vertex belongs to a diamond unit.
    DiamondVertex(Vertex),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2Violation {
    pub kind: Lemma2Kind,
    pub cycle: Vec<Vertex>,
}

/// Structural diagnostics on the non-triangle cycles of the `O`-part: each
/// should be chordless, of even length, and avoid diamond units.
///
/// These are consequences of a valid decomposition of a claw-free cubic
/// graph, not part of the certificate contract.
pub fn lemma2_check(g: &Graph, d: &Decomposition, p: &UnitPartition) -> Vec<Lemma2Violation> {
    let mut out = Vec::new();
    let mut pos = vec![usize::MAX; g.n()];
    for cycle in o_cycles(g, d) {
        if cycle.len() == 3 {
            continue;
        }
        let len = cycle.len();
        for (i, &v) in cycle.iter().enumerate() {
            pos[v as usize] = i;
        }
        let mut report = |kind| {
            out.push(Lemma2Violation {
                kind,
                cycle: cycle.clone(),
            })
        };
        for (i, &v) in cycle.iter().enumerate() {
            for &w in g.neighbors(v) {
                let j = pos[w as usize];
                if j == usize::MAX || v > w {
                    continue;
                }
                let gap = i.abs_diff(j);
                if gap != 1 && gap != len - 1 {
                    report(Lemma2Kind::Chord(Edge::new(v, w)));
                }
            }
        }
        if len % 2 == 1 {
            report(Lemma2Kind::OddLength);
        }
        for &v in &cycle {
            if p.in_diamond(v) {
                report(Lemma2Kind::DiamondVertex(v));
            }
        }
        for &v in &cycle {
            pos[v as usize] = usize::MAX;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::recognition::unit_partition;

    fn e(a: Vertex, b: Vertex) -> Edge {
        Edge::new(a, b)
    }

    fn k4_star() -> Decomposition {
        Decomposition::from_parts(&[e(0, 1), e(0, 2), e(0, 3)], &[], &[e(1, 2), e(1, 3), e(2, 3)])
    }

    #[test]
    fn k4_star_passes() {
        let r = verify(&generators::k4(), &k4_star());
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.checks.len(), 7);
    }

    #[test]
    fn overlapping_matching_fails_at_shared_vertex() {
        let d = Decomposition::from_parts(&[e(0, 1), e(0, 2), e(0, 3)], &[e(1, 2), e(2, 3)], &[e(1, 3)]);
        let r = verify(&generators::k4(), &d);
        assert!(r.failures.contains(&Failure {
            check: Check::MatchingDisjoint,
            witness: Witness::Vertex(2)
        }));
    }

    #[test]
    fn partial_and_extra_labels_fail_totality() {
        let mut d = k4_star();
        d.remove(e(2, 3));
        let r = verify(&generators::k4(), &d);
        assert!(r.failures.contains(&Failure {
            check: Check::PartitionTotal,
            witness: Witness::Edge(e(2, 3))
        }));
        let mut d = k4_star();
        d.set(e(0, 9), EdgeLabel::M);
        assert!(verify(&generators::k4(), &d).failed(Check::PartitionTotal));
    }

    #[test]
    fn tree_failures() {
        // T contains the triangle 1-2-3, vertex 0 hangs only on M/O
        let d = Decomposition::from_parts(&[e(1, 2), e(1, 3), e(2, 3)], &[e(0, 1)], &[e(0, 2), e(0, 3)]);
        let r = verify(&generators::k4(), &d);
        assert!(r.failed(Check::TreeAcyclic));
        assert!(r.failed(Check::TreeSpanning));
        assert!(r.failed(Check::OTwoRegular));
    }

    #[test]
    fn empty_o_fails_on_cubic() {
        // prism: a Hamiltonian path in T leaves 4 edges which cannot all be M
        let g = generators::prism();
        let mut d = Decomposition::new();
        for x in g.edges() {
            d.set(x, EdgeLabel::M);
        }
        let r = verify(&g, &d);
        assert!(r.failed(Check::ONonempty));
        assert!(r.failed(Check::SizeArithmetic));
    }

    #[test]
    fn o_cycles_are_extracted() {
        let cycles = o_cycles(&generators::k4(), &k4_star());
        assert_eq!(cycles, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn lemma2_flags_odd_cycle() {
        // raw labeling with a 7-cycle of inflate(K4) in O; the rest of the
        // labeling is irrelevant to the diagnostic
        let g = generators::inflate(&generators::k4()).unwrap();
        let p = unit_partition(&g).unwrap();
        let mut d = Decomposition::new();
        let cycle = find_cycle_of_len(&g, 7).unwrap();
        for w in 0..cycle.len() {
            d.set(e(cycle[w], cycle[(w + 1) % cycle.len()]), EdgeLabel::O);
        }
        let v = lemma2_check(&g, &d, &p);
        assert!(v.iter().any(|x| x.kind == Lemma2Kind::OddLength));
    }

    fn find_cycle_of_len(g: &Graph, len: usize) -> Option<Vec<Vertex>> {
        fn go(g: &Graph, path: &mut Vec<Vertex>, len: usize) -> bool {
            let last = *path.last().unwrap();
            if path.len() == len {
                return g.has_edge(last, path[0]);
            }
            for &w in g.neighbors(last) {
                if !path.contains(&w) && w > path[0] {
                    path.push(w);
                    if go(g, path, len) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        for s in g.vertices() {
            let mut path = vec![s];
            if go(g, &mut path, len) {
                return Some(path);
            }
        }
        None
    }

    #[test]
    fn lemma2_flags_diamond_vertices() {
        let g = generators::necklace(2).unwrap();
        let p = unit_partition(&g).unwrap();
        // Hamiltonian cycle 0-1-3-4-5-7-... through both diamonds
        let cyc = [0, 1, 2, 3, 4, 5, 6, 7];
        let mut d = Decomposition::new();
        for w in 0..cyc.len() {
            let (a, b) = (cyc[w], cyc[(w + 1) % cyc.len()]);
            if g.has_edge(a, b) {
                d.set(e(a, b), EdgeLabel::O);
            }
        }
        let v = lemma2_check(&g, &d, &p);
        assert!(v.iter().any(|x| matches!(x.kind, Lemma2Kind::DiamondVertex(_))));
        assert!(v.iter().any(|x| matches!(x.kind, Lemma2Kind::Chord(_))));
    }
}
