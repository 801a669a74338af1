//! Undirected multigraph with stable edge identities.
//!
//! Edges are stored as ordered `(a, b)` pairs; the pair order doubles as the
//! reference orientation `a -> b` used by the flow modules. Edge identities
//! are positions in the edge list and survive every operation that does not
//! change the edge set. Parallel edges are allowed, loops are not.

use thiserror::Error;

/// Seed for all randomized operations. Identical seed and parameters
/// reproduce identical outputs.
pub type RandomSeed = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint out of range (vertex count {2})")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("loop at vertex {0} is not allowed")]
    LoopEdge(usize),
}

/// An undirected multigraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(a, b) in &edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(GraphError::EndpointOutOfRange(a, b, vertex_count));
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    /// Builds a graph from an iterator of edges, normalizing each pair so the
    /// smaller endpoint comes first and sorting lexicographically. This is the
    /// canonical edge order used by the graph6 codec.
    pub fn from_edges_canonical<I: IntoIterator<Item = (usize, usize)>>(
        vertex_count: usize,
        edges: I,
    ) -> Result<Self, GraphError> {
        let mut es: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        es.sort_unstable();
        Graph::new(vertex_count, es)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// Per-vertex list of `(neighbor, edge id)` pairs, parallel edges listed
    /// once per copy.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            inc[a].push((b, id));
            inc[b].push((a, id));
        }
        inc
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn is_cubic(&self) -> bool {
        self.vertex_count > 0 && self.degrees().iter().all(|&d| d == 3)
    }

    /// True when no two edges join the same pair of vertices.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(a, b)| {
            let key = if a < b { (a, b) } else { (b, a) };
            seen.insert(key)
        })
    }

    /// Neighbor bitmasks of the underlying simple graph. Panics if the graph
    /// has more than 128 vertices; every instance in this workbench is far
    /// smaller.
    pub fn simple_adjacency(&self) -> Vec<u128> {
        assert!(self.vertex_count <= 128, "graph too large for bitmask adjacency");
        let mut adj = vec![0u128; self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    /// Underlying simple neighbor lists (parallel edges collapsed), sorted.
    pub fn simple_neighbors(&self) -> Vec<Vec<usize>> {
        let mut nb = vec![Vec::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            nb[a].push(b);
            nb[b].push(a);
        }
        for list in &mut nb {
            list.sort_unstable();
            list.dedup();
        }
        nb
    }

    /// Connected component index per vertex and the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let inc = self.incidence();
        let mut comp = vec![usize::MAX; self.vertex_count];
        let mut count = 0;
        for start in 0..self.vertex_count {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &(u, _) in &inc[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = count;
                        stack.push(u);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Edge ids of all bridges, via lowlink traversal. Parallel edges are
    /// never bridges.
    pub fn bridges(&self) -> Vec<usize> {
        let n = self.vertex_count;
        let inc = self.incidence();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0usize;
        let mut out = Vec::new();
        // Iterative DFS: stack of (vertex, incoming edge id, iterator index).
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, in_edge, ref mut idx)) = stack.last_mut() {
                if *idx < inc[v].len() {
                    let (u, eid) = inc[v][*idx];
                    *idx += 1;
                    if eid == in_edge {
                        continue;
                    }
                    if disc[u] == usize::MAX {
                        disc[u] = timer;
                        low[u] = timer;
                        timer += 1;
                        stack.push((u, eid, 0));
                    } else {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(in_edge);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Disjoint union; the other graph's vertices are shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        Graph {
            vertex_count: self.vertex_count + other.vertex_count,
            edges,
        }
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`. Edge pair
    /// order is preserved, so the reference orientation follows the map.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count);
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a], perm[b]))
            .collect();
        Graph {
            vertex_count: self.vertex_count,
            edges,
        }
    }

    /// Deletes the given vertices, re-indexing the rest and dropping incident
    /// edges. Edge identities are not preserved.
    pub fn delete_vertices(&self, remove: &[usize]) -> Graph {
        let mut keep = vec![true; self.vertex_count];
        for &v in remove {
            keep[v] = false;
        }
        let mut map = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            if keep[v] {
                map[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| keep[a] && keep[b])
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        Graph {
            vertex_count: next,
            edges,
        }
    }
}
