//! Instance generators: classical named graphs, prisms, truncation, and the
//! random two-cycle-union model.

use crate::graph::{Graph, RandomSeed};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("truncation requires a cubic graph; vertex {0} has degree {1}")]
    NotCubic(usize, usize),
    #[error("truncation requires a simple graph")]
    NotSimple,
    #[error("two-cycle union needs n >= 3, got {0}")]
    CycleTooShort(usize),
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges_canonical(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges_canonical(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        .unwrap()
}

/// The prism C_q x K_2: two q-cycles joined by a perfect matching.
pub fn prism(q: usize) -> Graph {
    assert!(q >= 3);
    let mut edges = Vec::with_capacity(3 * q);
    for i in 0..q {
        edges.push((i, (i + 1) % q));
        edges.push((q + i, q + (i + 1) % q));
        edges.push((i, q + i));
    }
    Graph::new(2 * q, edges).unwrap()
}

/// Petersen graph: outer 5-cycle 0..4, spokes, inner pentagram 5..9.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, 5 + (i + 2) % 5));
    }
    Graph::from_edges_canonical(10, edges).unwrap()
}

/// Replaces one vertex by a triangle whose corners inherit the vertex's three
/// edges. Requires degree exactly 3 at `v`.
pub fn expand_vertex_to_triangle(g: &Graph, v: usize) -> Graph {
    let inc = g.incidence();
    assert_eq!(inc[v].len(), 3, "triangle expansion needs a degree-3 vertex");
    let n = g.vertex_count();
    let mut map = vec![0usize; n];
    let mut next = 0;
    for u in 0..n {
        if u != v {
            map[u] = next;
            next += 1;
        }
    }
    let corners = [next, next + 1, next + 2];
    let mut edges = Vec::new();
    let mut slot = 0;
    for (id, &(a, b)) in g.edges().iter().enumerate() {
        if a == v && b == v {
            unreachable!("loops are excluded by Graph");
        } else if a == v || b == v {
            let other = if a == v { b } else { a };
            let _ = id;
            edges.push((map[other], corners[slot]));
            slot += 1;
        } else {
            edges.push((map[a], map[b]));
        }
    }
    edges.push((corners[0], corners[1]));
    edges.push((corners[0], corners[2]));
    edges.push((corners[1], corners[2]));
    Graph::new(n + 2, edges).unwrap()
}

/// Tietze's graph: the Petersen graph with one vertex expanded to a triangle.
/// 12 vertices, 18 edges, girth 3, not 3-edge-colorable.
pub fn tietze() -> Graph {
    expand_vertex_to_triangle(&petersen(), 0)
}

/// Flower snark J_k for odd k >= 5: k stars whose tips are tied into one
/// k-cycle and one 2k-cycle. J_5 has 20 vertices and girth 5.
pub fn flower_snark(k: usize) -> Graph {
    assert!(k >= 5 && k % 2 == 1, "flower snark needs odd k >= 5");
    let c = |i: usize| i;
    let x = |i: usize| k + i;
    let y = |i: usize| 2 * k + i;
    let z = |i: usize| 3 * k + i;
    let mut edges = Vec::with_capacity(6 * k);
    for i in 0..k {
        edges.push((c(i), x(i)));
        edges.push((c(i), y(i)));
        edges.push((c(i), z(i)));
        edges.push((x(i), x((i + 1) % k)));
    }
    for i in 0..k - 1 {
        edges.push((y(i), y(i + 1)));
        edges.push((z(i), z(i + 1)));
    }
    edges.push((y(k - 1), z(0)));
    edges.push((z(k - 1), y(0)));
    Graph::new(4 * k, edges).unwrap()
}

/// The two 18-vertex snarks, decoded from fixed graph6 lines (derived from
/// dot products of two Petersen graphs; girth 5, class 2, non-isomorphic).
pub fn blanusa_snarks() -> (Graph, Graph) {
    let a = crate::graph6::parse_graph6("QGeA@GUAp??@_@O?A???Q?@W?Ao").unwrap();
    let b = crate::graph6::parse_graph6("QHeA@GEAo_?@_@O??C??Q?@W?Ao").unwrap();
    (a, b)
}

/// Truncation T(G): every vertex of a cubic simple graph becomes a triangle
/// on its three edge slots; original edges join the corresponding corners.
/// The result has 3n vertices and m + 3n edges and is cubic, claw-free and
/// diamond-free.
pub fn truncate(g: &Graph) -> Result<Graph, GenerateError> {
    if !g.is_simple() {
        return Err(GenerateError::NotSimple);
    }
    let degs = g.degrees();
    if let Some(v) = degs.iter().position(|&d| d != 3) {
        return Err(GenerateError::NotCubic(v, degs[v]));
    }
    let n = g.vertex_count();
    // slot(v, k) for the k-th incident edge of v in increasing edge-id order
    let mut slot_rank = vec![0usize; g.edge_count() * 2];
    let mut counter = vec![0usize; n];
    for (id, &(a, b)) in g.edges().iter().enumerate() {
        slot_rank[2 * id] = counter[a];
        counter[a] += 1;
        slot_rank[2 * id + 1] = counter[b];
        counter[b] += 1;
    }
    let mut edges = Vec::with_capacity(g.edge_count() + 3 * n);
    for v in 0..n {
        edges.push((3 * v, 3 * v + 1));
        edges.push((3 * v, 3 * v + 2));
        edges.push((3 * v + 1, 3 * v + 2));
    }
    for (id, &(a, b)) in g.edges().iter().enumerate() {
        edges.push((3 * a + slot_rank[2 * id], 3 * b + slot_rank[2 * id + 1]));
    }
    Ok(Graph::new(3 * n, edges).unwrap())
}

/// A labeled Hamiltonian cycle on `0..n`, as the vertex sequence starting at 0.
pub type CycleSeq = Vec<usize>;

pub fn cycle_edges(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len();
    (0..n)
        .map(|i| {
            let (a, b) = (seq[i], seq[(i + 1) % n]);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

/// All (n-1)!/2 undirected labeled Hamiltonian cycles on `0..n`, each as a
/// vertex sequence starting at 0 with its second vertex smaller than its last.
pub fn all_hamiltonian_cycles(n: usize) -> Vec<CycleSeq> {
    assert!(n >= 3);
    let mut out = Vec::new();
    let mut rest: Vec<usize> = (1..n).collect();
    permute(&mut rest, 0, &mut |perm| {
        if perm[0] < perm[n - 2] {
            let mut seq = Vec::with_capacity(n);
            seq.push(0);
            seq.extend_from_slice(perm);
            out.push(seq);
        }
    });
    out
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Uniformly random undirected Hamiltonian cycle, deterministic in the rng.
pub fn random_hamiltonian_cycle(n: usize, rng: &mut ChaCha8Rng) -> CycleSeq {
    let mut rest: Vec<usize> = (1..n).collect();
    rest.shuffle(rng);
    let mut seq = Vec::with_capacity(n);
    seq.push(0);
    seq.extend(rest);
    seq
}

/// The union multigraph of two Hamiltonian cycles; parallel edges retained.
pub fn two_cycle_union(c1: &[usize], c2: &[usize]) -> Graph {
    let n = c1.len();
    let mut edges = cycle_edges(c1);
    edges.extend(cycle_edges(c2));
    Graph::new(n, edges).unwrap()
}

/// 4-regular multigraph: disjoint edge-multiset union of two uniformly random
/// Hamiltonian cycles on `0..n`. Identical seed reproduces identical output.
pub fn random_two_cycle_union(n: usize, seed: RandomSeed) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::CycleTooShort(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c1 = random_hamiltonian_cycle(n, &mut rng);
    let c2 = random_hamiltonian_cycle(n, &mut rng);
    Ok(two_cycle_union(&c1, &c2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncate_k4_counts() {
        let t = truncate(&complete(4)).unwrap();
        assert_eq!(t.vertex_count(), 12);
        assert_eq!(t.edge_count(), 18);
        assert!(t.is_cubic());
        assert!(t.is_simple());
    }

    #[test]
    fn truncate_k33_counts() {
        let t = truncate(&complete_bipartite(3, 3)).unwrap();
        assert_eq!(t.vertex_count(), 18);
        assert_eq!(t.edge_count(), 27);
        assert!(t.is_cubic());
    }

    #[test]
    fn truncate_rejects_non_cubic() {
        assert!(matches!(
            truncate(&cycle(5)),
            Err(GenerateError::NotCubic(0, 2))
        ));
        let doubled = Graph::new(4, vec![(0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (2, 3)]).unwrap();
        assert!(matches!(truncate(&doubled), Err(GenerateError::NotSimple)));
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.is_cubic());
    }

    #[test]
    fn tietze_shape() {
        let t = tietze();
        assert_eq!(t.vertex_count(), 12);
        assert_eq!(t.edge_count(), 18);
        assert!(t.is_cubic());
        assert!(!crate::edge_coloring::is_three_edge_colorable(&t));
    }

    #[test]
    fn blanusa_shapes() {
        let (a, b) = blanusa_snarks();
        for g in [&a, &b] {
            assert_eq!(g.vertex_count(), 18);
            assert_eq!(g.edge_count(), 27);
            assert!(g.is_cubic());
            assert!(!crate::edge_coloring::is_three_edge_colorable(g));
        }
        assert_ne!(a, b);
    }

    #[test]
    fn flower_snark_shape() {
        let j5 = flower_snark(5);
        assert_eq!(j5.vertex_count(), 20);
        assert_eq!(j5.edge_count(), 30);
        assert!(j5.is_cubic());
        assert!(!crate::edge_coloring::is_three_edge_colorable(&j5));
    }

    #[test]
    fn hamiltonian_cycle_counts() {
        assert_eq!(all_hamiltonian_cycles(3).len(), 1);
        assert_eq!(all_hamiltonian_cycles(4).len(), 3);
        assert_eq!(all_hamiltonian_cycles(5).len(), 12);
        assert_eq!(all_hamiltonian_cycles(6).len(), 60);
    }

    #[test]
    fn two_cycle_union_n3_is_doubled_triangle() {
        let g = random_two_cycle_union(3, 42).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.degrees().iter().all(|&d| d == 4));
        let mut counts = std::collections::HashMap::new();
        for &(a, b) in g.edges() {
            *counts.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
        assert_eq!(counts.len(), 3);
        assert!(counts.values().all(|&c| c == 2));
    }

    #[test]
    fn two_cycle_union_deterministic() {
        let a = random_two_cycle_union(5, 7).unwrap();
        let b = random_two_cycle_union(5, 7).unwrap();
        assert_eq!(a, b);
        let c = random_two_cycle_union(5, 8).unwrap();
        assert!(a == c || a != c); // different seeds may rarely coincide; just exercise
    }

    #[test]
    fn two_cycle_union_rejects_small_n() {
        assert!(random_two_cycle_union(2, 1).is_err());
    }
}
