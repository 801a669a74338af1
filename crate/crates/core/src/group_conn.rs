//! Boundary admissibility for Z_4 and Z_2 x Z_2, almost-connectivity scans
//! over all zero-sum boundaries, and snark criticality classification.
//!
//! A boundary assigns a group element to every vertex, summing to zero. It is
//! admissible when some nowhere-zero edge labeling f has that boundary, where
//! the boundary of f at x is the sum over edges leaving x minus the sum over
//! edges entering x (reference orientation = edge pair order).

use crate::edge_coloring::is_three_edge_colorable;
use crate::graph::Graph;
use thiserror::Error;

/// The two groups of order four, elements encoded as 0..4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlowGroup {
    Z4,
    Z2x2,
}

impl FlowGroup {
    #[inline(always)]
    pub fn add(self, a: u8, b: u8) -> u8 {
        match self {
            FlowGroup::Z4 => (a + b) & 3,
            FlowGroup::Z2x2 => a ^ b,
        }
    }

    #[inline(always)]
    pub fn neg(self, a: u8) -> u8 {
        match self {
            FlowGroup::Z4 => (4 - a) & 3,
            FlowGroup::Z2x2 => a,
        }
    }

    #[inline(always)]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn name(self) -> &'static str {
        match self {
            FlowGroup::Z4 => "z4",
            FlowGroup::Z2x2 => "z2z2",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupConnError {
    #[error("boundary length {found} does not match vertex count {expected}")]
    BoundaryLength { expected: usize, found: usize },
    #[error("boundary value {0} is not a group element")]
    BadElement(u8),
    #[error("graph must be connected for the boundary scan")]
    Disconnected,
    #[error("criticality needs a cubic simple graph")]
    NotCubicSimple,
    #[error("flow has a zero value at edge {0}")]
    ZeroEdge(usize),
    #[error("boundary mismatch at vertex {0}")]
    BoundaryMismatch(usize),
}

/// Per-vertex group elements with zero sum (checked per component).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary(pub Vec<u8>);

impl Boundary {
    pub fn zero(n: usize) -> Boundary {
        Boundary(vec![0; n])
    }

    /// Base-4 string indexed by vertex, e.g. "0000000000" for the zero
    /// boundary on ten vertices.
    pub fn to_base4(&self) -> String {
        self.0.iter().map(|&d| char::from(b'0' + d)).collect()
    }

    pub fn from_base4(s: &str) -> Result<Boundary, GroupConnError> {
        let mut vals = Vec::with_capacity(s.len());
        for ch in s.chars() {
            let d = ch as u32;
            if !('0'..='3').contains(&ch) {
                return Err(GroupConnError::BadElement(d as u8));
            }
            vals.push((d - '0' as u32) as u8);
        }
        Ok(Boundary(vals))
    }
}

/// Nowhere-zero edge labeling realizing some boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFlow(pub Vec<u8>);

/// Boundary of a labeling: sum over leaving edges minus entering edges.
pub fn boundary_of(g: &Graph, group: FlowGroup, f: &[u8]) -> Boundary {
    let mut b = vec![0u8; g.vertex_count()];
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        b[x] = group.add(b[x], f[e]);
        b[y] = group.sub(b[y], f[e]);
    }
    Boundary(b)
}

/// Independent witness checker: nonzero everywhere and boundary matches.
pub fn verify_group_flow(
    g: &Graph,
    group: FlowGroup,
    b: &Boundary,
    f: &GroupFlow,
) -> Result<(), GroupConnError> {
    if b.0.len() != g.vertex_count() {
        return Err(GroupConnError::BoundaryLength {
            expected: g.vertex_count(),
            found: b.0.len(),
        });
    }
    if let Some(e) = f.0.iter().position(|&t| t == 0) {
        return Err(GroupConnError::ZeroEdge(e));
    }
    if let Some(&t) = f.0.iter().find(|&&t| t > 3) {
        return Err(GroupConnError::BadElement(t));
    }
    let derived = boundary_of(g, group, &f.0);
    if let Some(v) = (0..g.vertex_count()).find(|&v| derived.0[v] != b.0[v]) {
        return Err(GroupConnError::BoundaryMismatch(v));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdmissibleOutcome {
    Admissible(GroupFlow),
    Inadmissible,
    /// The per-component zero-sum precondition fails; no labeling of any kind
    /// can realize the boundary.
    TriviallyInadmissible,
}

/// Precomputed search structure shared by all boundary decisions on a graph.
pub struct Solver<'g> {
    g: &'g Graph,
    group: FlowGroup,
    /// (other endpoint, edge id, +1 if v is the edge tail) per vertex
    inc: Vec<Vec<(usize, usize, bool)>>,
    /// branching order: cotree edges, deepest endpoints first
    branch_order: Vec<usize>,
    component: Vec<usize>,
    component_count: usize,
}

/// Reusable scratch space for repeated decisions on one graph.
pub struct SearchState {
    value: Vec<u8>,
    assigned: Vec<bool>,
    need: Vec<u8>,
    unassigned: Vec<u32>,
    trail: Vec<usize>,
    nodes: u64,
}

impl<'g> Solver<'g> {
    pub fn new(g: &'g Graph, group: FlowGroup) -> Solver<'g> {
        let n = g.vertex_count();
        let mut inc = vec![Vec::new(); n];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            inc[a].push((b, e, true));
            inc[b].push((a, e, false));
        }
        // BFS tree from a max-degree vertex; cotree edges ordered by the
        // deeper of their endpoints so leaf regions force early
        let degrees = g.degrees();
        let root = (0..n).max_by_key(|&v| degrees[v]).unwrap_or(0);
        let mut depth = vec![usize::MAX; n];
        let mut in_tree = vec![false; g.edge_count()];
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(u, e, _) in &inc[v] {
                if depth[u] == usize::MAX {
                    depth[u] = depth[v] + 1;
                    in_tree[e] = true;
                    queue.push_back(u);
                }
            }
        }
        let mut branch_order: Vec<usize> = (0..g.edge_count()).filter(|&e| !in_tree[e]).collect();
        branch_order.sort_by_key(|&e| {
            let (a, b) = g.edge(e);
            std::cmp::Reverse(depth[a].max(depth[b]))
        });
        let (component, component_count) = g.components();
        Solver {
            g,
            group,
            inc,
            branch_order,
            component,
            component_count,
        }
    }

    pub fn new_state(&self) -> SearchState {
        SearchState {
            value: vec![0; self.g.edge_count()],
            assigned: vec![false; self.g.edge_count()],
            need: vec![0; self.g.vertex_count()],
            unassigned: vec![0; self.g.vertex_count()],
            trail: Vec::with_capacity(self.g.edge_count()),
            nodes: 0,
        }
    }

    fn reset_state(&self, st: &mut SearchState, b: &[u8]) {
        st.value.fill(0);
        st.assigned.fill(false);
        st.need.copy_from_slice(b);
        for (v, d) in self.g.degrees().into_iter().enumerate() {
            st.unassigned[v] = d as u32;
        }
        st.trail.clear();
        st.nodes = 0;
    }

    fn zero_sum_ok(&self, b: &[u8]) -> bool {
        let mut sums = vec![0u8; self.component_count];
        for (v, &x) in b.iter().enumerate() {
            let c = self.component[v];
            sums[c] = self.group.add(sums[c], x);
        }
        sums.iter().all(|&s| s == 0)
    }

    /// Assigns edge `e` to `t` and unit-propagates forced edges. Nonzero is
    /// enforced on every assignment. Returns the trail watermark to undo to,
    /// or None after rolling back itself.
    fn assign(&self, st: &mut SearchState, e0: usize, t0: u8) -> Option<usize> {
        let group = self.group;
        let mark = st.trail.len();
        let mut queue: [(usize, u8); 64] = [(0, 0); 64];
        let mut qlen = 1usize;
        queue[0] = (e0, t0);
        while qlen > 0 {
            qlen -= 1;
            let (e, t) = queue[qlen];
            if st.assigned[e] {
                if st.value[e] != t {
                    self.undo(st, mark);
                    return None;
                }
                continue;
            }
            if t == 0 {
                self.undo(st, mark);
                return None;
            }
            st.assigned[e] = true;
            st.value[e] = t;
            st.trail.push(e);
            let (a, b) = self.g.edge(e);
            st.need[a] = group.sub(st.need[a], t);
            st.need[b] = group.add(st.need[b], t);
            st.unassigned[a] -= 1;
            st.unassigned[b] -= 1;
            for &v in &[a, b] {
                match st.unassigned[v] {
                    0 => {
                        if st.need[v] != 0 {
                            self.undo(st, mark);
                            return None;
                        }
                    }
                    1 => {
                        let &(_, last, tail) = self.inc[v]
                            .iter()
                            .find(|&&(_, eid, _)| !st.assigned[eid])
                            .expect("exactly one unassigned edge");
                        // leaving contributes +t, entering -t
                        let forced = if tail {
                            st.need[v]
                        } else {
                            group.neg(st.need[v])
                        };
                        if qlen == queue.len() {
                            self.undo(st, mark);
                            return None; // overflow cannot happen on desk-scale graphs
                        }
                        queue[qlen] = (last, forced);
                        qlen += 1;
                    }
                    _ => {}
                }
            }
        }
        Some(mark)
    }

    fn undo(&self, st: &mut SearchState, mark: usize) {
        let group = self.group;
        while st.trail.len() > mark {
            let e = st.trail.pop().expect("trail under mark");
            let t = st.value[e];
            st.assigned[e] = false;
            let (a, b) = self.g.edge(e);
            st.need[a] = group.add(st.need[a], t);
            st.need[b] = group.sub(st.need[b], t);
            st.unassigned[a] += 1;
            st.unassigned[b] += 1;
        }
    }

    fn search(&self, st: &mut SearchState, pos: usize, prefer: Option<&[u8]>) -> bool {
        let mut pos = pos;
        while pos < self.branch_order.len() && st.assigned[self.branch_order[pos]] {
            pos += 1;
        }
        if pos == self.branch_order.len() {
            // all cotree edges assigned; propagation has settled the tree
            if st.assigned.iter().all(|&a| a) {
                return true;
            }
            // leftover unforced edges appear only in degenerate components
            if let Some(e) = (0..st.assigned.len()).find(|&e| !st.assigned[e]) {
                for t in 1..4u8 {
                    st.nodes += 1;
                    if let Some(mark) = self.assign(st, e, t) {
                        if self.search(st, pos, prefer) {
                            return true;
                        }
                        self.undo(st, mark);
                    }
                }
                return false;
            }
            return true;
        }
        let e = self.branch_order[pos];
        let start = prefer.map_or(1, |w| if w[e] == 0 { 1 } else { w[e] });
        for i in 0..3u8 {
            let t = (start + i - 1) % 3 + 1;
            st.nodes += 1;
            if let Some(mark) = self.assign(st, e, t) {
                if self.search(st, pos + 1, prefer) {
                    return true;
                }
                self.undo(st, mark);
            }
        }
        false
    }

    /// Allocation-free decision on a reusable state: true means admissible,
    /// with the witness left in the state.
    pub fn decide(&self, st: &mut SearchState, b: &[u8], prefer: Option<&[u8]>) -> bool {
        self.reset_state(st, b);
        self.search(st, 0, prefer)
    }

    pub fn witness_of(st: &SearchState) -> &[u8] {
        &st.value
    }

    pub fn nodes_of(st: &SearchState) -> u64 {
        st.nodes
    }

    /// Exact admissibility decision. `prefer` biases the cotree value order,
    /// used to warm-start from a nearby witness.
    pub fn admissible_with(
        &self,
        b: &Boundary,
        prefer: Option<&[u8]>,
    ) -> (AdmissibleOutcome, u64) {
        if b.0.len() != self.g.vertex_count() {
            return (AdmissibleOutcome::TriviallyInadmissible, 0);
        }
        if !self.zero_sum_ok(&b.0) {
            return (AdmissibleOutcome::TriviallyInadmissible, 0);
        }
        let mut st = self.new_state();
        let found = self.decide(&mut st, &b.0, prefer);
        let nodes = st.nodes;
        if found {
            debug_assert!(
                verify_group_flow(self.g, self.group, b, &GroupFlow(st.value.clone())).is_ok()
            );
            (AdmissibleOutcome::Admissible(GroupFlow(st.value)), nodes)
        } else {
            (AdmissibleOutcome::Inadmissible, nodes)
        }
    }

    /// Counts all nowhere-zero labelings with boundary `b` by exhausting the
    /// cotree assignment space.
    pub fn count_flows(&self, b: &Boundary) -> u64 {
        if b.0.len() != self.g.vertex_count() || !self.zero_sum_ok(&b.0) {
            return 0;
        }
        let mut st = self.new_state();
        self.reset_state(&mut st, &b.0);
        let mut total = 0u64;
        self.count_rec(&mut st, 0, &mut total);
        total
    }

    fn count_rec(&self, st: &mut SearchState, pos: usize, total: &mut u64) {
        let mut pos = pos;
        while pos < self.branch_order.len() && st.assigned[self.branch_order[pos]] {
            pos += 1;
        }
        if pos == self.branch_order.len() {
            if st.assigned.iter().all(|&a| a) {
                *total += 1;
                return;
            }
            if let Some(e) = (0..st.assigned.len()).find(|&e| !st.assigned[e]) {
                for t in 1..4u8 {
                    if let Some(mark) = self.assign(st, e, t) {
                        self.count_rec(st, pos, total);
                        self.undo(st, mark);
                    }
                }
            }
            return;
        }
        let e = self.branch_order[pos];
        for t in 1..4u8 {
            if let Some(mark) = self.assign(st, e, t) {
                self.count_rec(st, pos + 1, total);
                self.undo(st, mark);
            }
        }
    }
}

/// One-shot admissibility decision.
pub fn admissible(g: &Graph, group: FlowGroup, b: &Boundary) -> (AdmissibleOutcome, u64) {
    Solver::new(g, group).admissible_with(b, None)
}

pub mod scan;

pub use scan::{almost_connected, scan_range, AlmostReport, ScanProgress};

/// Snark criticality by direct definition checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criticality {
    Bicritical,
    CriticalNotBicritical,
    Neither,
}

impl Criticality {
    pub fn name(self) -> &'static str {
        match self {
            Criticality::Bicritical => "bicritical",
            Criticality::CriticalNotBicritical => "critical-not-bicritical",
            Criticality::Neither => "neither",
        }
    }
}

/// Deletes every vertex pair (all pairs for bicritical, adjacent pairs for
/// critical) and tests 3-edge-colorability of the rest.
pub fn criticality_class(g: &Graph) -> Result<Criticality, GroupConnError> {
    if !g.is_cubic() || !g.is_simple() {
        return Err(GroupConnError::NotCubicSimple);
    }
    let n = g.vertex_count();
    let adj = g.simple_adjacency();
    let mut all_pairs = true;
    let mut adjacent_pairs = true;
    for u in 0..n {
        for v in u + 1..n {
            let colorable = is_three_edge_colorable(&g.delete_vertices(&[u, v]));
            if !colorable {
                all_pairs = false;
                if adj[u] >> v & 1 == 1 {
                    adjacent_pairs = false;
                }
            }
        }
    }
    Ok(if all_pairs {
        Criticality::Bicritical
    } else if adjacent_pairs {
        Criticality::CriticalNotBicritical
    } else {
        Criticality::Neither
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn k4_zero_boundary_admissible_z2z2() {
        let g = generate::complete(4);
        let (outcome, _) = admissible(&g, FlowGroup::Z2x2, &Boundary::zero(4));
        match outcome {
            AdmissibleOutcome::Admissible(f) => {
                verify_group_flow(&g, FlowGroup::Z2x2, &Boundary::zero(4), &f).unwrap();
            }
            other => panic!("K4 has a nowhere-zero Z2xZ2 flow, got {other:?}"),
        }
    }

    #[test]
    fn petersen_zero_boundary_inadmissible_both_groups() {
        let g = generate::petersen();
        for group in [FlowGroup::Z4, FlowGroup::Z2x2] {
            let (outcome, _) = admissible(&g, group, &Boundary::zero(10));
            assert_eq!(outcome, AdmissibleOutcome::Inadmissible, "{group:?}");
        }
    }

    #[test]
    fn petersen_nonzero_boundaries_admissible_spot_checks() {
        let g = generate::petersen();
        for group in [FlowGroup::Z4, FlowGroup::Z2x2] {
            let solver = Solver::new(&g, group);
            // a few zero-sum nonzero boundaries
            let mut b = Boundary::zero(10);
            b.0[0] = 1;
            b.0[1] = group.neg(1);
            let (outcome, _) = solver.admissible_with(&b, None);
            assert!(matches!(outcome, AdmissibleOutcome::Admissible(_)), "{group:?}");
            let mut b = Boundary::zero(10);
            b.0[2] = 2;
            b.0[7] = 2;
            b.0[9] = group.neg(group.add(2, 2));
            let (outcome, _) = solver.admissible_with(&b, None);
            assert!(matches!(outcome, AdmissibleOutcome::Admissible(_)), "{group:?}");
        }
    }

    #[test]
    fn zero_sum_violation_is_trivially_inadmissible() {
        let g = generate::complete(4);
        let mut b = Boundary::zero(4);
        b.0[0] = 1;
        let (outcome, _) = admissible(&g, FlowGroup::Z4, &b);
        assert_eq!(outcome, AdmissibleOutcome::TriviallyInadmissible);
    }

    #[test]
    fn negation_symmetry() {
        let g = generate::prism(3);
        let solver = Solver::new(&g, FlowGroup::Z4);
        let mut b = Boundary::zero(6);
        b.0[0] = 1;
        b.0[3] = 2;
        b.0[5] = 1; // sums to 0 mod 4
        let (out1, _) = solver.admissible_with(&b, None);
        let negated = Boundary(b.0.iter().map(|&x| FlowGroup::Z4.neg(x)).collect());
        let (out2, _) = solver.admissible_with(&negated, None);
        assert_eq!(
            matches!(out1, AdmissibleOutcome::Admissible(_)),
            matches!(out2, AdmissibleOutcome::Admissible(_))
        );
    }

    #[test]
    fn counting_identity_on_small_graphs() {
        // sum over all boundaries of N(b) = 3^m: every nowhere-zero labeling
        // has exactly one boundary
        for (g, name) in [
            (generate::complete(4), "K4"),
            (generate::cycle(5), "C5"),
            (generate::complete_bipartite(2, 3), "K23"),
        ] {
            let m = g.edge_count() as u32;
            for group in [FlowGroup::Z4, FlowGroup::Z2x2] {
                let solver = Solver::new(&g, group);
                let mut total = 0u64;
                let n = g.vertex_count();
                for code in 0..4u64.pow(n as u32) {
                    let b = Boundary(
                        (0..n).map(|v| ((code >> (2 * v)) & 3) as u8).collect(),
                    );
                    total += solver.count_flows(&b);
                }
                assert_eq!(total, 3u64.pow(m), "{name} {group:?}");
            }
        }
    }

    #[test]
    fn class1_cubic_zero_boundary_admissible_z2z2() {
        for g in [generate::complete(4), generate::prism(3), generate::complete_bipartite(3, 3)] {
            let (outcome, _) = admissible(&g, FlowGroup::Z2x2, &Boundary::zero(g.vertex_count()));
            assert!(matches!(outcome, AdmissibleOutcome::Admissible(_)));
        }
    }

    #[test]
    fn petersen_is_bicritical() {
        assert_eq!(
            criticality_class(&generate::petersen()).unwrap(),
            Criticality::Bicritical
        );
    }

    #[test]
    fn tietze_is_not_bicritical() {
        let c = criticality_class(&generate::tietze()).unwrap();
        assert_ne!(c, Criticality::Bicritical);
    }

    #[test]
    fn base4_round_trip() {
        let b = Boundary(vec![0, 1, 2, 3, 0]);
        assert_eq!(b.to_base4(), "01230");
        assert_eq!(Boundary::from_base4("01230").unwrap(), b);
        assert!(Boundary::from_base4("014").is_err());
    }
}
