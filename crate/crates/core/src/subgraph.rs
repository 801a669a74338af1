//! Small-pattern subgraph isomorphism (not induced): does the host contain an
//! injective image of the pattern with every pattern edge present?

use crate::graph::Graph;

/// Backtracking matcher with degree pruning; intended for patterns of at most
/// a dozen vertices against desk-scale hosts.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_embedding(host, pattern).is_some()
}

/// Returns one embedding `pattern vertex -> host vertex` if any exists.
pub fn find_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let pn = pattern.vertex_count();
    let hn = host.vertex_count();
    if pn > hn || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let p_adj = pattern.simple_neighbors();
    let h_adj = host.simple_adjacency();
    let p_deg: Vec<usize> = p_adj.iter().map(|l| l.len()).collect();
    let h_deg: Vec<u32> = h_adj.iter().map(|m| m.count_ones()).collect();

    // Order pattern vertices so each (after the first) touches earlier ones,
    // highest degree first; keeps the partial map connected where possible.
    let mut order: Vec<usize> = Vec::with_capacity(pn);
    let mut placed = vec![false; pn];
    while order.len() < pn {
        let next = (0..pn)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = p_adj[v].iter().filter(|&&u| placed[u]).count();
                (back, p_deg[v])
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; pn];
    let mut used = vec![false; hn];
    fn rec(
        order: &[usize],
        pos: usize,
        p_adj: &[Vec<usize>],
        p_deg: &[usize],
        h_adj: &[u128],
        h_deg: &[u32],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let pv = order[pos];
        for hv in 0..h_adj.len() {
            if used[hv] || (h_deg[hv] as usize) < p_deg[pv] {
                continue;
            }
            let ok = p_adj[pv]
                .iter()
                .filter(|&&pu| map[pu] != usize::MAX)
                .all(|&pu| h_adj[hv] >> map[pu] & 1 == 1);
            if !ok {
                continue;
            }
            map[pv] = hv;
            used[hv] = true;
            if rec(order, pos + 1, p_adj, p_deg, h_adj, h_deg, map, used) {
                return true;
            }
            map[pv] = usize::MAX;
            used[hv] = false;
        }
        false
    }

    if rec(
        &order, 0, &p_adj, &p_deg, &h_adj, &h_deg, &mut map, &mut used,
    ) {
        Some(map)
    } else {
        None
    }
}
