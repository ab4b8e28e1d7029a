#![allow(dead_code)]

use goodcubic_core::{Graph, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random connected claw-free cubic graph: a loopless cubic multigraph on
/// `m` nodes with every node blown up into a triangle, then `strings`
/// inter-triangle edges replaced by runs of one to three diamonds. Loops
/// of the multigraph always become diamond runs.
pub fn random_claw_free(m: usize, strings: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut points: Vec<usize> = (0..3 * m).collect();
        points.shuffle(&mut rng);
        // point i is vertex i of the blown-up triangle i / 3
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for t in 0..m as Vertex {
            edges.extend([(3 * t, 3 * t + 1), (3 * t + 1, 3 * t + 2), (3 * t, 3 * t + 2)]);
        }
        let (mut looped, mut links): (Vec<_>, Vec<_>) = points
            .chunks(2)
            .map(|p| (p[0] as Vertex, p[1] as Vertex))
            .partition(|&(x, y)| x / 3 == y / 3);
        let mut n = 3 * m as Vertex;
        let mut chosen = looped.len() + strings.min(links.len());
        while chosen > 0 {
            chosen -= 1;
            let (x, y) = match looped.pop() {
                Some(l) => l,
                None => links.swap_remove(rng.gen_range(0..links.len())),
            };
            let k = rng.gen_range(1..=3);
            let mut prev = x;
            for _ in 0..k {
                let (a, b, c, d) = (n, n + 1, n + 2, n + 3);
                n += 4;
                edges.extend([(a, b), (a, c), (b, c), (b, d), (c, d), (prev, a)]);
                prev = d;
            }
            links.push((prev, y));
        }
        edges.extend(links);
        let g = Graph::from_edge_list(n as usize, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// The permutation [`shuffled`] applies: vertex `v` becomes `perm[v]`.
pub fn shuffle_permutation(n: usize, seed: u64) -> Vec<Vertex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<Vertex> = (0..n as Vertex).collect();
    perm.shuffle(&mut rng);
    perm
}

/// Applies a random vertex permutation.
pub fn shuffled(g: &Graph, seed: u64) -> Graph {
    g.relabel(&shuffle_permutation(g.n(), seed))
}

/// Every connected claw-free cubic graph on at most 14 vertices, up to
/// isomorphism. Apart from `K4` and necklaces these come from a cubic
/// multigraph on two or four nodes with triangles for nodes and diamond
/// runs for edges; with at most 14 vertices that leaves the prism with up
/// to two diamonds, two nodes with diamond loops, and two inflations.
pub fn small_corpus() -> Vec<(&'static str, Graph)> {
    use goodcubic_core::generators::{double_bracelet, inflate, insert_diamond, k4, necklace, prism};
    use goodcubic_core::Edge;
    let prism1 = insert_diamond(&prism(), Edge::new(0, 3)).unwrap();
    let doubled: Vec<(Vertex, Vertex)> = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        .into_iter()
        .chain([(6, 7), (7, 8), (6, 8), (9, 10), (10, 11), (9, 11)])
        .chain([(0, 3), (1, 4), (5, 8), (6, 9), (7, 10), (2, 11)])
        .collect();
    vec![
        ("K4", k4()),
        ("prism", prism()),
        ("prism+diamond", prism1.clone()),
        ("prism+2 diamonds, one rung", insert_diamond(&prism1, Edge::new(3, 9)).unwrap()),
        ("prism+2 diamonds, two rungs", insert_diamond(&prism1, Edge::new(1, 4)).unwrap()),
        ("double bracelet(1,1)", double_bracelet(1, 1).unwrap()),
        ("inflated K4", inflate(&k4()).unwrap()),
        ("inflated doubled 4-cycle", Graph::from_edge_list(12, doubled).unwrap()),
        ("N_2", necklace(2).unwrap()),
        ("N_3", necklace(3).unwrap()),
    ]
}

/// Number of spanning trees by the matrix-tree theorem: the determinant of
/// the reduced Laplacian, by fraction-free elimination.
pub fn matrix_tree_count(g: &Graph) -> i128 {
    let n = g.n() - 1;
    let mut a = vec![vec![0i128; n]; n];
    for (v, row) in a.iter_mut().enumerate() {
        row[v] = g.degree(v as u32 + 1) as i128;
    }
    for e in g.edges() {
        let (u, v) = (e.u() as usize, e.v() as usize);
        if u > 0 && v > 0 {
            a[u - 1][v - 1] = -1;
            a[v - 1][u - 1] = -1;
        }
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r][k] != 0) else { return 0 };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}
