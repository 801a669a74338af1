//! Structural classifiers feeding the per-problem instance filters.

use crate::edge_coloring::is_three_edge_colorable;
use crate::graph::Graph;

/// Exactly computed structural flags. `girth` is `None` for forests (the
/// infinity sentinel; serialized as 0 in reports). `class1` is `None` unless
/// the graph is cubic. Induced-subgraph flags (claw, diamond) read the
/// underlying simple graph: parallel edges count as one adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyFlags {
    pub connected: bool,
    pub bipartite: bool,
    pub cubic: bool,
    pub bridgeless: bool,
    pub girth: Option<usize>,
    pub claw_free: bool,
    pub diamond_free: bool,
    pub class1: Option<bool>,
}

pub fn classify(g: &Graph) -> PropertyFlags {
    let (_, components) = g.components();
    let cubic = g.is_cubic();
    PropertyFlags {
        connected: components <= 1,
        bipartite: is_bipartite(g),
        cubic,
        bridgeless: g.is_bridgeless(),
        girth: girth(g),
        claw_free: is_claw_free(g),
        diamond_free: is_diamond_free(g),
        class1: if cubic {
            Some(is_three_edge_colorable(g))
        } else {
            None
        },
    }
}

pub fn is_bipartite(g: &Graph) -> bool {
    let nb = g.simple_neighbors();
    let mut color = vec![u8::MAX; g.vertex_count()];
    for start in 0..g.vertex_count() {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &u in &nb[v] {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                } else if color[u] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Length of a shortest cycle, or `None` for forests. Parallel edges form
/// 2-cycles. BFS from every vertex; the minimum over roots is exact.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in g.edges() {
        if !seen.insert((a.min(b), a.max(b))) {
            return Some(2);
        }
    }
    let n = g.vertex_count();
    let inc = g.incidence();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut via_edge = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[v] >= b {
                    break;
                }
            }
            for &(u, eid) in &inc[v] {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    via_edge[u] = eid;
                    queue.push_back(u);
                } else if via_edge[v] != eid {
                    let len = dist[v] + dist[u] + 1;
                    if best.map_or(true, |b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// No induced K_{1,3} in the underlying simple graph.
pub fn is_claw_free(g: &Graph) -> bool {
    let nb = g.simple_neighbors();
    let adj = g.simple_adjacency();
    for center in 0..g.vertex_count() {
        let ns = &nb[center];
        for i in 0..ns.len() {
            for j in i + 1..ns.len() {
                if adj[ns[i]] >> ns[j] & 1 == 1 {
                    continue;
                }
                for k in j + 1..ns.len() {
                    if adj[ns[i]] >> ns[k] & 1 == 0 && adj[ns[j]] >> ns[k] & 1 == 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// No diamond (two triangles sharing an edge) as a subgraph of the underlying
/// simple graph, i.e. no edge whose endpoints share two common neighbors.
pub fn is_diamond_free(g: &Graph) -> bool {
    let adj = g.simple_adjacency();
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in g.edges() {
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            continue;
        }
        if (adj[a] & adj[b]).count_ones() >= 2 {
            return false;
        }
    }
    true
}
