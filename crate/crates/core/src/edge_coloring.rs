//! Exact proper 3-edge-coloring by backtracking, for subcubic multigraphs.
//!
//! Used to split cubic graphs into class 1 / class 2 and to test the
//! vertex-deleted subgraphs in snark criticality checks.

use crate::graph::Graph;

/// Finds a proper 3-edge-coloring (colors 0..3, edges sharing an endpoint
/// differ) or proves none exists. Works on any multigraph with max degree 3;
/// a vertex of degree > 3 makes it trivially uncolorable with 3 colors.
pub fn three_edge_coloring(g: &Graph) -> Option<Vec<u8>> {
    let m = g.edge_count();
    if m == 0 {
        return Some(Vec::new());
    }
    if g.degrees().iter().any(|&d| d > 3) {
        return None;
    }
    // Parallel edge pairs at a shared vertex force distinct colors; a triple
    // edge is uncolorable but the generic search handles that too.
    let order = search_order(g);
    let mut used = vec![0u8; g.vertex_count()]; // bitmask of colors at vertex
    let mut colors = vec![u8::MAX; m];

    fn rec(
        g: &Graph,
        order: &[usize],
        pos: usize,
        used: &mut [u8],
        colors: &mut [u8],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let eid = order[pos];
        let (a, b) = g.edge(eid);
        let free = !(used[a] | used[b]) & 0b111;
        let mut bits = free;
        while bits != 0 {
            let c = bits.trailing_zeros() as u8;
            bits &= bits - 1;
            used[a] |= 1 << c;
            used[b] |= 1 << c;
            colors[eid] = c;
            if rec(g, order, pos + 1, used, colors) {
                return true;
            }
            used[a] &= !(1 << c);
            used[b] &= !(1 << c);
            colors[eid] = u8::MAX;
        }
        false
    }

    if rec(g, &order, 0, &mut used, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

pub fn is_three_edge_colorable(g: &Graph) -> bool {
    three_edge_coloring(g).is_some()
}

/// Checks that `colors` is a proper 3-edge-coloring of `g`.
pub fn verify_three_edge_coloring(g: &Graph, colors: &[u8]) -> bool {
    if colors.len() != g.edge_count() || colors.iter().any(|&c| c > 2) {
        return false;
    }
    let inc = g.incidence();
    for list in inc {
        let mut seen = 0u8;
        for &(_, eid) in &list {
            let bit = 1 << colors[eid];
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
    }
    true
}

/// BFS edge order over the incidence structure, so consecutive edges share
/// vertices and contradictions surface early.
fn search_order(g: &Graph) -> Vec<usize> {
    let inc = g.incidence();
    let mut seen_edge = vec![false; g.edge_count()];
    let mut seen_vertex = vec![false; g.vertex_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    for start in 0..g.vertex_count() {
        if seen_vertex[start] {
            continue;
        }
        seen_vertex[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(u, eid) in &inc[v] {
                if !seen_edge[eid] {
                    seen_edge[eid] = true;
                    order.push(eid);
                }
                if !seen_vertex[u] {
                    seen_vertex[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn k4_is_class1() {
        let g = generate::complete(4);
        let coloring = three_edge_coloring(&g).expect("K4 is 3-edge-colorable");
        assert!(verify_three_edge_coloring(&g, &coloring));
    }

    #[test]
    fn petersen_is_class2() {
        assert!(!is_three_edge_colorable(&generate::petersen()));
    }

    #[test]
    fn k33_is_class1() {
        let g = generate::complete_bipartite(3, 3);
        let coloring = three_edge_coloring(&g).unwrap();
        assert!(verify_three_edge_coloring(&g, &coloring));
    }

    #[test]
    fn odd_cycle_needs_three_even_needs_two() {
        let c5 = generate::cycle(5);
        let coloring = three_edge_coloring(&c5).unwrap();
        assert!(verify_three_edge_coloring(&c5, &coloring));
        assert_eq!(coloring.iter().collect::<std::collections::HashSet<_>>().len(), 3);
    }

    #[test]
    fn multigraph_cases() {
        // doubled triangle is 4-regular: four incident edges cannot share 3 colors
        let doubled = crate::graph::Graph::new(3, vec![(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)])
            .unwrap();
        assert!(!is_three_edge_colorable(&doubled));
        let triple = crate::graph::Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        assert!(is_three_edge_colorable(&triple));
        let quad = crate::graph::Graph::new(2, vec![(0, 1); 4]).unwrap();
        assert!(!is_three_edge_colorable(&quad));
    }
}
