//! k-homogeneous colorings: proper vertex colorings where the open
//! neighborhood of every vertex shows exactly k distinct colors.

use crate::classify;
use crate::graph::Graph;
use crate::subgraph;

/// Witness coloring; `c` is the number of colors actually used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousColoring {
    pub colors: Vec<u8>,
    pub k: usize,
    pub c: usize,
}

#[derive(Debug, Clone)]
pub struct FindOutcome {
    pub coloring: Option<HomogeneousColoring>,
    pub nodes: u64,
}

/// Independent witness checker: properness plus the exact-k condition on
/// every open neighborhood.
pub fn verify_homogeneous(g: &Graph, coloring: &HomogeneousColoring) -> bool {
    let n = g.vertex_count();
    if coloring.colors.len() != n {
        return false;
    }
    let nb = g.simple_neighbors();
    for v in 0..n {
        let mut seen = std::collections::HashSet::new();
        for &u in &nb[v] {
            if coloring.colors[u] == coloring.colors[v] {
                return false;
            }
            seen.insert(coloring.colors[u]);
        }
        if seen.len() != coloring.k {
            return false;
        }
    }
    true
}

struct HomSearch<'a> {
    nb: &'a [Vec<usize>],
    k: usize,
    c_max: usize,
    order: Vec<usize>,
    colors: Vec<u8>,
    /// cnt[v][c]: how many assigned neighbors of v have color c
    cnt: Vec<Vec<u16>>,
    distinct: Vec<usize>,
    free: Vec<usize>,
    max_used: i32,
    nodes: u64,
}

impl<'a> HomSearch<'a> {
    fn feasible(&self, u: usize) -> bool {
        if self.distinct[u] > self.k {
            return false;
        }
        if self.distinct[u] + self.free[u] < self.k {
            return false;
        }
        // a finished neighborhood must show exactly k colors
        if self.free[u] == 0 && self.distinct[u] != self.k {
            return false;
        }
        true
    }

    fn dfs(&mut self, pos: usize) -> bool {
        self.nodes += 1;
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let limit = ((self.max_used + 2) as usize).min(self.c_max);
        for c in 0..limit {
            // properness against assigned neighbors
            if self.cnt[v][c] > 0 {
                continue;
            }
            let prev_max = self.max_used;
            self.colors[v] = c as u8;
            self.max_used = self.max_used.max(c as i32);
            let mut touched = 0usize;
            let mut ok = true;
            for (idx, &u) in self.nb[v].iter().enumerate() {
                self.free[u] -= 1;
                self.cnt[u][c] += 1;
                if self.cnt[u][c] == 1 {
                    self.distinct[u] += 1;
                }
                touched = idx + 1;
                if !self.feasible(u) {
                    ok = false;
                    break;
                }
            }
            if ok && self.dfs(pos + 1) {
                return true;
            }
            for &u in self.nb[v].iter().take(touched) {
                if self.cnt[u][c] == 1 {
                    self.distinct[u] -= 1;
                }
                self.cnt[u][c] -= 1;
                self.free[u] += 1;
            }
            self.colors[v] = u8::MAX;
            self.max_used = prev_max;
        }
        false
    }
}

/// Exact search for a k-homogeneous coloring with at most `c_max` colors.
/// Components are solved independently over a shared palette. Color indices
/// are introduced first-occurrence-canonically, which fixes vertex 0's color
/// and kills palette permutations without losing solutions.
pub fn find_homogeneous(g: &Graph, k: usize, c_max: usize) -> FindOutcome {
    let n = g.vertex_count();
    let nb = g.simple_neighbors();
    // a vertex with fewer than k distinct neighbors can never see k colors
    if nb.iter().any(|l| l.len() < k) || c_max < k {
        return FindOutcome {
            coloring: None,
            nodes: 0,
        };
    }
    let (comp, count) = g.components();
    let mut colors = vec![u8::MAX; n];
    let mut total_nodes = 0u64;
    for ci in 0..count {
        let verts: Vec<usize> = (0..n).filter(|&v| comp[v] == ci).collect();
        let order = bfs_order(&nb, &verts);
        let mut search = HomSearch {
            nb: &nb,
            k,
            c_max,
            order,
            colors: vec![u8::MAX; n],
            cnt: vec![vec![0u16; c_max]; n],
            distinct: vec![0; n],
            free: nb.iter().map(|l| l.len()).collect(),
            max_used: -1,
            nodes: 0,
        };
        let found = search.dfs(0);
        total_nodes += search.nodes;
        if !found {
            return FindOutcome {
                coloring: None,
                nodes: total_nodes,
            };
        }
        for &v in &verts {
            colors[v] = search.colors[v];
        }
    }
    let used = colors
        .iter()
        .collect::<std::collections::HashSet<_>>()
        .len();
    let witness = HomogeneousColoring { colors, k, c: used };
    debug_assert!(verify_homogeneous(g, &witness));
    FindOutcome {
        coloring: Some(witness),
        nodes: total_nodes,
    }
}

fn bfs_order(nb: &[Vec<usize>], verts: &[usize]) -> Vec<usize> {
    let mut order = Vec::with_capacity(verts.len());
    let mut seen: std::collections::HashSet<usize> = std::collections::HashSet::new();
    let start = verts[0];
    seen.insert(start);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in &nb[v] {
            if seen.insert(u) {
                queue.push_back(u);
            }
        }
    }
    order
}

#[derive(Debug, Clone)]
pub struct MinColorsOutcome {
    pub min_colors: Option<usize>,
    pub witness: Option<HomogeneousColoring>,
    pub nodes: u64,
}

/// Least palette size in `k..=c_max` admitting a k-homogeneous coloring.
/// Existence is monotone in the palette, so the first hit is the minimum.
pub fn min_homogeneous_colors(g: &Graph, k: usize, c_max: usize) -> MinColorsOutcome {
    let mut nodes = 0u64;
    for c in k.max(1)..=c_max {
        let out = find_homogeneous(g, k, c);
        nodes += out.nodes;
        if let Some(w) = out.coloring {
            return MinColorsOutcome {
                min_colors: Some(c),
                witness: Some(w),
                nodes,
            };
        }
    }
    MinColorsOutcome {
        min_colors: None,
        witness: None,
        nodes,
    }
}

/// The one obstruction named for cubic graphs: a triangular prism with one
/// triangle edge subdivided (7 vertices, 10 edges). A cubic graph containing
/// it as a subgraph admits no 2-homogeneous coloring.
pub fn obstruction_pattern() -> Graph {
    // prism: triangles 0-1-2 and 3-4-5, matching i -- i+3; (0,1) subdivided by 6
    let mut edges = vec![(0, 2), (1, 2), (3, 4), (3, 5), (4, 5)];
    edges.extend([(0, 3), (1, 4), (2, 5)]);
    edges.extend([(0, 6), (1, 6)]);
    Graph::from_edges_canonical(7, edges).unwrap()
}

#[derive(Debug, Clone)]
pub struct ScanEntry {
    pub index: usize,
    pub vertices: usize,
    pub bridgeless: bool,
    pub bipartite: bool,
    pub admits: bool,
    pub min_colors: Option<usize>,
    pub contains_obstruction: bool,
    pub nodes: u64,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub entries: Vec<ScanEntry>,
    pub skipped_non_cubic: Vec<usize>,
    /// Graphs that contain the obstruction yet admit a coloring; anything
    /// here contradicts the obstruction argument and must be investigated.
    pub inconsistencies: Vec<usize>,
}

/// Partitions a cubic corpus into 2-homogeneous admitters (with their minimum
/// palette) and non-admitters, cross-checking the subdivided-prism
/// obstruction on every entry.
pub fn scan_cubic_corpus(corpus: &[Graph], c_max: usize) -> ScanReport {
    let pattern = obstruction_pattern();
    let mut report = ScanReport {
        entries: Vec::new(),
        skipped_non_cubic: Vec::new(),
        inconsistencies: Vec::new(),
    };
    for (index, g) in corpus.iter().enumerate() {
        if !g.is_cubic() || !g.is_simple() {
            report.skipped_non_cubic.push(index);
            continue;
        }
        let flags = classify::classify(g);
        let contains = subgraph::contains_subgraph(g, &pattern);
        // admission is decided with an unbounded palette (n colors suffice)
        let decide = find_homogeneous(g, 2, g.vertex_count());
        let admits = decide.coloring.is_some();
        let mut nodes = decide.nodes;
        let min_colors = if admits {
            let scan = min_homogeneous_colors(g, 2, c_max.min(g.vertex_count()));
            nodes += scan.nodes;
            scan.min_colors
        } else {
            None
        };
        if contains && admits {
            report.inconsistencies.push(index);
        }
        report.entries.push(ScanEntry {
            index,
            vertices: g.vertex_count(),
            bridgeless: flags.bridgeless,
            bipartite: flags.bipartite,
            admits,
            min_colors,
            contains_obstruction: contains,
            nodes,
        });
    }
    report
}

/// Cubic host that contains the obstruction: two subdivided prisms with the
/// two subdivision vertices joined by an edge.
pub fn obstruction_host_double_prism() -> Graph {
    let p = obstruction_pattern();
    let two = p.disjoint_union(&p);
    let mut edges: Vec<(usize, usize)> = two.edges().to_vec();
    edges.push((6, 13));
    Graph::from_edges_canonical(14, edges).unwrap()
}

/// Second host: a subdivided prism tied to a subdivided K_3,3.
pub fn obstruction_host_prism_k33() -> Graph {
    let p = obstruction_pattern();
    // K33 on 7..12 with edge (7,10) subdivided by vertex 13
    let mut edges: Vec<(usize, usize)> = p.edges().to_vec();
    for i in 7..10 {
        for j in 10..13 {
            if (i, j) != (7, 10) {
                edges.push((i, j));
            }
        }
    }
    edges.push((7, 13));
    edges.push((10, 13));
    edges.push((6, 13));
    Graph::from_edges_canonical(14, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn bipartite_iff_one_homogeneous() {
        let k33 = generate::complete_bipartite(3, 3);
        let out = find_homogeneous(&k33, 1, 2);
        let w = out.coloring.expect("bipartition is 1-homogeneous");
        assert!(verify_homogeneous(&k33, &w));
        assert_eq!(min_homogeneous_colors(&k33, 1, 4).min_colors, Some(2));
        // odd cycle: not bipartite, no 1-homogeneous coloring at any palette
        let c5 = generate::cycle(5);
        assert!(find_homogeneous(&c5, 1, 5).coloring.is_none());
    }

    #[test]
    fn k4_admits_no_two_homogeneous() {
        let k4 = generate::complete(4);
        assert!(find_homogeneous(&k4, 2, 4).coloring.is_none());
    }

    #[test]
    fn k33_min_two_homogeneous_is_4() {
        let k33 = generate::complete_bipartite(3, 3);
        let out = min_homogeneous_colors(&k33, 2, 6);
        assert_eq!(out.min_colors, Some(4));
        assert!(verify_homogeneous(&k33, &out.witness.unwrap()));
        // and 3 colors provably fail
        assert!(find_homogeneous(&k33, 2, 3).coloring.is_none());
    }

    #[test]
    fn cube_admits_two_homogeneous_within_6() {
        let cube = generate::prism(4);
        let out = min_homogeneous_colors(&cube, 2, 6);
        let min = out.min_colors.expect("bipartite cubic graphs admit with <= 6");
        assert!(min <= 6);
        assert!(verify_homogeneous(&cube, &out.witness.unwrap()));
    }

    #[test]
    fn obstruction_pattern_shape() {
        let p = obstruction_pattern();
        assert_eq!(p.vertex_count(), 7);
        assert_eq!(p.edge_count(), 10);
        let degs = p.degrees();
        assert_eq!(degs.iter().filter(|&&d| d == 2).count(), 1);
        assert_eq!(degs.iter().filter(|&&d| d == 3).count(), 6);
    }

    #[test]
    fn hosts_are_cubic_and_contain_obstruction() {
        for host in [obstruction_host_double_prism(), obstruction_host_prism_k33()] {
            assert!(host.is_cubic());
            assert!(host.is_simple());
            assert!(subgraph::contains_subgraph(&host, &obstruction_pattern()));
        }
    }

    #[test]
    fn obstruction_host_is_non_admitter() {
        let host = obstruction_host_double_prism();
        let out = find_homogeneous(&host, 2, host.vertex_count());
        assert!(out.coloring.is_none());
    }

    #[test]
    fn monotone_in_palette() {
        let cube = generate::prism(4);
        let min = min_homogeneous_colors(&cube, 2, 6).min_colors.unwrap();
        for c in min..=6 {
            assert!(
                find_homogeneous(&cube, 2, c).coloring.is_some(),
                "witness at {min} colors but none at {c}"
            );
        }
    }

    #[test]
    fn disconnected_components_share_palette() {
        let two = generate::complete_bipartite(3, 3)
            .disjoint_union(&generate::complete_bipartite(3, 3));
        let out = min_homogeneous_colors(&two, 2, 6);
        assert_eq!(out.min_colors, Some(4));
    }

    #[test]
    fn scan_partitions_corpus() {
        let corpus = vec![
            generate::complete(4),
            generate::complete_bipartite(3, 3),
            obstruction_host_double_prism(),
        ];
        let report = scan_cubic_corpus(&corpus, 8);
        assert!(report.inconsistencies.is_empty());
        assert!(!report.entries[0].admits);
        assert!(report.entries[1].admits);
        assert_eq!(report.entries[1].min_colors, Some(4));
        assert!(report.entries[2].contains_obstruction);
        assert!(!report.entries[2].admits);
    }
}
