//! Monochromatic non-nested matchings in 2-colored ordered complete graphs.
//!
//! Vertices of the ordered complete graph are `0..m` in their natural order.
//! Edges `ij` and `st` (with `i<j`, `s<t`) are nested when one interval lies
//! strictly inside the other; a non-nested matching is a set of pairwise
//! disjoint, pairwise non-nested edges. Sorted by left endpoint, such a
//! matching has strictly increasing right endpoints, which drives both the
//! exact solver and the greedy bound.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RamseyError {
    #[error("ordered complete graph needs m >= 2, got {0}")]
    TooFewVertices(usize),
    #[error("target matching size must be >= 1")]
    ZeroTarget,
    #[error("m_cap {cap} below the scan start {start}")]
    CapTooSmall { cap: usize, start: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Color {
    Red = 0,
    Blue = 1,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// Canonical edge order of the ordered complete graph: `(0,1), (0,2), ...,
/// (0,m-1), (1,2), ...` — increasing left endpoint, then right.
pub fn edge_list(m: usize) -> Vec<(usize, usize)> {
    (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect()
}

pub fn edge_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < m);
    // edges with left endpoint < i, then offset within row i
    i * m - i * (i + 1) / 2 + (j - i - 1)
}

/// A 2-coloring of the edges of the ordered complete graph K_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedTwoColoring {
    pub m: usize,
    /// One color per edge in canonical order; length C(m,2).
    pub colors: Vec<Color>,
}

impl OrderedTwoColoring {
    pub fn new(m: usize, colors: Vec<Color>) -> Result<Self, RamseyError> {
        if m < 2 {
            return Err(RamseyError::TooFewVertices(m));
        }
        assert_eq!(colors.len(), m * (m - 1) / 2);
        Ok(OrderedTwoColoring { m, colors })
    }

    pub fn color_of(&self, i: usize, j: usize) -> Color {
        self.colors[edge_index(self.m, i.min(j), i.max(j))]
    }

    /// Edges of one color class, in canonical order.
    pub fn class(&self, color: Color) -> Vec<(usize, usize)> {
        edge_list(self.m)
            .into_iter()
            .zip(&self.colors)
            .filter(|(_, &c)| c == color)
            .map(|(e, _)| e)
            .collect()
    }

    /// Restriction to the first `m` vertices.
    pub fn restrict(&self, m: usize) -> OrderedTwoColoring {
        assert!(2 <= m && m <= self.m);
        let colors = edge_list(m)
            .into_iter()
            .map(|(i, j)| self.color_of(i, j))
            .collect();
        OrderedTwoColoring { m, colors }
    }
}

/// A witness matching: pairwise disjoint, pairwise non-nested, single color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonNestedMatching {
    pub edges: Vec<(usize, usize)>,
    pub color: Color,
}

pub fn are_nested(e: (usize, usize), f: (usize, usize)) -> bool {
    let (i, j) = e;
    let (s, t) = f;
    (i < s && t < j) || (s < i && j < t)
}

pub fn are_disjoint(e: (usize, usize), f: (usize, usize)) -> bool {
    e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1
}

/// Checks the full non-nested matching condition pairwise.
pub fn is_nonnested_matching(edges: &[(usize, usize)]) -> bool {
    for (k, &e) in edges.iter().enumerate() {
        if e.0 >= e.1 {
            return false;
        }
        for &f in &edges[k + 1..] {
            if !are_disjoint(e, f) || are_nested(e, f) {
                return false;
            }
        }
    }
    true
}

/// Exact maximum non-nested matching within one edge set, branch and bound.
/// `stop_at` short-circuits as soon as a matching of that size is found.
/// Edges must be intervals `(i, j)` with `i < j`.
pub fn max_nonnested(edges: &[(usize, usize)], stop_at: Option<usize>) -> (usize, Vec<(usize, usize)>) {
    let mut sorted: Vec<(usize, usize)> = edges.to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    let mut best = 0usize;
    let mut best_set: Vec<(usize, usize)> = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();

    fn rec(
        sorted: &[(usize, usize)],
        from: usize,
        used: u64,
        last: (usize, usize),
        chosen: &mut Vec<(usize, usize)>,
        best: &mut usize,
        best_set: &mut Vec<(usize, usize)>,
        stop_at: Option<usize>,
    ) {
        if chosen.len() > *best {
            *best = chosen.len();
            *best_set = chosen.clone();
        }
        if let Some(target) = stop_at {
            if *best >= target {
                return;
            }
        }
        for idx in from..sorted.len() {
            if chosen.len() + (sorted.len() - idx) <= *best {
                break; // even taking everything left cannot beat best
            }
            let (l, r) = sorted[idx];
            // chain: strictly increasing left and right endpoints; plus
            // endpoint-disjointness against everything chosen so far
            if l <= last.0 && !chosen.is_empty() {
                continue;
            }
            if !chosen.is_empty() && r <= last.1 {
                continue;
            }
            if used >> l & 1 == 1 || used >> r & 1 == 1 {
                continue;
            }
            chosen.push((l, r));
            rec(
                sorted,
                idx + 1,
                used | 1 << l | 1 << r,
                (l, r),
                chosen,
                best,
                best_set,
                stop_at,
            );
            chosen.pop();
            if let Some(target) = stop_at {
                if *best >= target {
                    return;
                }
            }
        }
    }

    let _ = n;
    rec(
        &sorted, 0, 0, (0, 0), &mut chosen, &mut best, &mut best_set, stop_at,
    );
    (best, best_set)
}

/// Greedy sweep lower bound: scan edges in canonical order, extend a chain
/// whenever endpoints are fresh and both coordinates increase.
fn greedy_nonnested(sorted_class: &[(usize, usize)]) -> usize {
    let mut used = 0u64;
    let mut last = (usize::MAX, usize::MAX);
    let mut count = 0usize;
    for &(l, r) in sorted_class {
        let fits = count == 0 || (l > last.0 && r > last.1);
        if fits && used >> l & 1 == 0 && used >> r & 1 == 0 {
            used |= 1 << l | 1 << r;
            last = (l, r);
            count += 1;
        }
    }
    count
}

/// Exact maximum monochromatic non-nested matching over both colors.
pub fn max_mono_nonnested(
    c: &OrderedTwoColoring,
) -> Result<(usize, NonNestedMatching), RamseyError> {
    if c.m < 2 {
        return Err(RamseyError::TooFewVertices(c.m));
    }
    let mut best: Option<(usize, NonNestedMatching)> = None;
    for color in [Color::Red, Color::Blue] {
        let class = c.class(color);
        let (size, set) = max_nonnested(&class, None);
        if best.as_ref().map_or(true, |(s, _)| size > *s) {
            best = Some((size, NonNestedMatching { edges: set, color }));
        }
    }
    Ok(best.expect("two colors always produce a candidate"))
}

/// Search outcome for one (m, n) avoidance question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Avoidance {
    /// A coloring whose maximum monochromatic non-nested matching is < n.
    Found(OrderedTwoColoring),
    /// The pruned DFS exhausted the (symmetry-reduced) space: none exists.
    ExhaustedNone,
    BudgetExceeded,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchStats {
    pub nodes: u64,
}

/// Lexicographic-comparison state against one symmetry image of the partial
/// coloring. Prunes branches proven non-canonical; stalls (soundly) when the
/// image prefix is not yet decided.
#[derive(Clone, Copy)]
struct SymCmp {
    pos: usize,
    decided_lt: bool,
}

struct AvoidSearch {
    m: usize,
    n: usize,
    edges: Vec<(usize, usize)>,
    reversal: Vec<usize>, // edge index -> index of its order-reversed image
    colors: Vec<Option<Color>>,
    class: [Vec<(usize, usize)>; 2], // sorted class edges, maintained incrementally
    nodes: u64,
    budget: Option<u64>,
    exceeded: bool,
    result: Option<OrderedTwoColoring>,
}

impl AvoidSearch {
    fn new(m: usize, n: usize, budget: Option<u64>) -> Self {
        let edges = edge_list(m);
        let reversal = edges
            .iter()
            .map(|&(i, j)| edge_index(m, m - 1 - j, m - 1 - i))
            .collect();
        AvoidSearch {
            m,
            n,
            edges,
            reversal,
            colors: vec![None; m * (m - 1) / 2],
            class: [Vec::new(), Vec::new()],
            nodes: 0,
            budget: None.or(budget),
            exceeded: false,
            result: None,
        }
    }

    /// Advances a stalled lexicographic comparison as far as assignments
    /// allow. `flip` compares against the color-swapped image. Returns false
    /// when the partial coloring is proven strictly greater than its image.
    fn advance(&self, mut cmp: SymCmp, flip: bool) -> Option<SymCmp> {
        if cmp.decided_lt {
            return Some(cmp);
        }
        while cmp.pos < self.colors.len() {
            let own = match self.colors[cmp.pos] {
                Some(c) => c,
                None => break,
            };
            let img = match self.colors[self.reversal[cmp.pos]] {
                Some(c) => {
                    if flip {
                        c.flip()
                    } else {
                        c
                    }
                }
                None => break,
            };
            match (own as u8).cmp(&(img as u8)) {
                std::cmp::Ordering::Less => {
                    cmp.decided_lt = true;
                    return Some(cmp);
                }
                std::cmp::Ordering::Greater => return None,
                std::cmp::Ordering::Equal => cmp.pos += 1,
            }
        }
        Some(cmp)
    }

    fn class_contains_target(&mut self, color: Color) -> bool {
        let class = &self.class[color as usize];
        let lb = greedy_nonnested(class);
        if lb >= self.n {
            return true;
        }
        if lb + 1 >= self.n {
            // greedy is one short; only now pay for the exact bounded search
            let (size, _) = max_nonnested(class, Some(self.n));
            return size >= self.n;
        }
        false
    }

    fn dfs(&mut self, pos: usize, rev: SymCmp, revflip: SymCmp) -> bool {
        if self.exceeded || self.result.is_some() {
            return true;
        }
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.exceeded = true;
                return true;
            }
        }
        if pos == self.colors.len() {
            // leaf: verify exactly before declaring avoidance
            let coloring = OrderedTwoColoring {
                m: self.m,
                colors: self.colors.iter().map(|c| c.unwrap()).collect(),
            };
            let (size, _) = max_mono_nonnested(&coloring).expect("m >= 2");
            if size < self.n {
                self.result = Some(coloring);
                return true;
            }
            return false;
        }
        let choices: &[Color] = if pos == 0 {
            &[Color::Red] // color-swap symmetry: first edge is red
        } else {
            &[Color::Red, Color::Blue]
        };
        for &color in choices {
            self.colors[pos] = Some(color);
            let e = self.edges[pos];
            let slot = self.class[color as usize]
                .binary_search(&e)
                .unwrap_err();
            self.class[color as usize].insert(slot, e);

            let keep = !self.class_contains_target(color);
            if keep {
                let rev2 = self.advance(rev, false);
                let revflip2 = self.advance(revflip, true);
                if let (Some(rev2), Some(revflip2)) = (rev2, revflip2) {
                    if self.dfs(pos + 1, rev2, revflip2) {
                        // propagate stop (found / budget) without cleanup
                        return true;
                    }
                }
            }
            self.class[color as usize].remove(slot);
            self.colors[pos] = None;
        }
        false
    }
}

/// Searches for a 2-coloring of ordered K_m whose maximum monochromatic
/// non-nested matching has fewer than `n` edges. DFS over edges in canonical
/// order; branches die as soon as a color class provably contains a size-n
/// matching; color swap and order reversal are factored out by canonicity.
pub fn find_avoiding_coloring(
    m: usize,
    n: usize,
    budget: Option<u64>,
) -> Result<(Avoidance, SearchStats), RamseyError> {
    if m < 2 {
        return Err(RamseyError::TooFewVertices(m));
    }
    if n == 0 {
        return Err(RamseyError::ZeroTarget);
    }
    if 2 * n > m {
        // a size-n matching does not even fit on m vertices
        let colors = vec![Color::Red; m * (m - 1) / 2];
        return Ok((
            Avoidance::Found(OrderedTwoColoring { m, colors }),
            SearchStats { nodes: 0 },
        ));
    }
    let mut search = AvoidSearch::new(m, n, budget);
    let start = SymCmp {
        pos: 0,
        decided_lt: false,
    };
    search.dfs(0, start, start);
    let stats = SearchStats {
        nodes: search.nodes,
    };
    if search.exceeded {
        return Ok((Avoidance::BudgetExceeded, stats));
    }
    match search.result {
        Some(c) => Ok((Avoidance::Found(c), stats)),
        None => Ok((Avoidance::ExhaustedNone, stats)),
    }
}

/// Outcome of the threshold scan for one n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseyValue {
    /// Least m such that no avoiding coloring exists; every smaller m in the
    /// scan range had one.
    Determined { value: usize },
    /// Budget ran out before the threshold was pinned down.
    Unresolved { largest_avoiding: usize },
    /// Avoidance still possible at m_cap.
    AboveCap { largest_avoiding: usize },
}

#[derive(Debug, Clone, Default)]
pub struct RamseyScan {
    pub outcome: Option<RamseyValue>,
    /// Per-m node counts, in scan order starting at m = 2.
    pub nodes_per_m: Vec<(usize, u64)>,
}

/// Ascending scan for the least m with no avoiding coloring. Avoidance is
/// monotone (a coloring of K_m restricts to K_{m-1}), so the first
/// exhausted-none is the threshold.
pub fn ramsey_value(
    n: usize,
    m_cap: usize,
    budget_per_m: Option<u64>,
) -> Result<RamseyScan, RamseyError> {
    if n == 0 {
        return Err(RamseyError::ZeroTarget);
    }
    if m_cap < 2 {
        return Err(RamseyError::CapTooSmall {
            cap: m_cap,
            start: 2,
        });
    }
    let mut scan = RamseyScan::default();
    let mut largest_avoiding = 0usize;
    for m in 2..=m_cap {
        let (outcome, stats) = find_avoiding_coloring(m, n, budget_per_m)?;
        scan.nodes_per_m.push((m, stats.nodes));
        match outcome {
            Avoidance::Found(_) => largest_avoiding = m,
            Avoidance::ExhaustedNone => {
                scan.outcome = Some(RamseyValue::Determined { value: m });
                return Ok(scan);
            }
            Avoidance::BudgetExceeded => {
                scan.outcome = Some(RamseyValue::Unresolved { largest_avoiding });
                return Ok(scan);
            }
        }
    }
    scan.outcome = Some(RamseyValue::AboveCap { largest_avoiding });
    Ok(scan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloring_from_red(m: usize, red: &[(usize, usize)]) -> OrderedTwoColoring {
        let red: std::collections::HashSet<_> = red.iter().copied().collect();
        let colors = edge_list(m)
            .into_iter()
            .map(|e| {
                if red.contains(&e) {
                    Color::Red
                } else {
                    Color::Blue
                }
            })
            .collect();
        OrderedTwoColoring { m, colors }
    }

    #[test]
    fn nesting_definition() {
        assert!(are_nested((0, 3), (1, 2)));
        assert!(are_nested((1, 2), (0, 3)));
        assert!(!are_nested((0, 2), (1, 3))); // crossing
        assert!(!are_nested((0, 1), (2, 3))); // sequential
    }

    #[test]
    fn spec_small_examples() {
        // m=4 (vertices 1..4 -> 0..3): red = {(0,3),(1,2)} nested, so red max
        // is 1; blue contains (0,1),(2,3).
        let c = coloring_from_red(4, &[(0, 3), (1, 2)]);
        let (size, w) = max_mono_nonnested(&c).unwrap();
        assert_eq!(size, 2);
        assert_eq!(w.color, Color::Blue);
        assert!(is_nonnested_matching(&w.edges));

        // crossing red pair counts
        let c = coloring_from_red(4, &[(0, 2), (1, 3)]);
        let (size, w) = max_mono_nonnested(&c).unwrap();
        assert_eq!((size, w.color), (2, Color::Red));
    }

    #[test]
    fn all_red_k5_has_max_two() {
        let colors = vec![Color::Red; 10];
        let c = OrderedTwoColoring { m: 5, colors };
        let (size, _) = max_mono_nonnested(&c).unwrap();
        assert_eq!(size, 2);
    }

    #[test]
    fn avoidance_m2_n1_impossible() {
        let (out, _) = find_avoiding_coloring(2, 1, None).unwrap();
        assert_eq!(out, Avoidance::ExhaustedNone);
    }

    #[test]
    fn ramsey_value_n1_is_2() {
        let scan = ramsey_value(1, 2, None).unwrap();
        assert_eq!(scan.outcome, Some(RamseyValue::Determined { value: 2 }));
    }

    #[test]
    fn avoiding_exists_at_lower_bound_minus_one() {
        // paper's trivial bounds: avoidance possible at m = 3n-2
        for n in [1usize, 2, 3] {
            let m = 3 * n - 2;
            if m < 2 {
                continue;
            }
            let (out, _) = find_avoiding_coloring(m, n, None).unwrap();
            match out {
                Avoidance::Found(c) => {
                    let (size, _) = max_mono_nonnested(&c).unwrap();
                    assert!(size < n, "claimed avoiding coloring fails at n={n}");
                }
                other => panic!("expected avoidance at m=3n-2 for n={n}, got {other:?}"),
            }
        }
    }

    #[test]
    fn no_avoidance_at_upper_bound() {
        // paper's trivial upper bound: none exists at m = 4n-2
        for n in [1usize, 2] {
            let m = 4 * n - 2;
            let (out, _) = find_avoiding_coloring(m, n, None).unwrap();
            assert_eq!(out, Avoidance::ExhaustedNone, "n={n}");
        }
    }

    #[test]
    fn budget_is_reported() {
        let (out, stats) = find_avoiding_coloring(8, 3, Some(5)).unwrap();
        assert_eq!(out, Avoidance::BudgetExceeded);
        assert!(stats.nodes >= 5);
    }

    #[test]
    fn reversal_and_color_swap_invariance() {
        let c = coloring_from_red(6, &[(0, 1), (1, 3), (2, 5), (0, 4)]);
        let (size, _) = max_mono_nonnested(&c).unwrap();
        // order reversal
        let m = c.m;
        let rev_colors = edge_list(m)
            .into_iter()
            .map(|(i, j)| c.color_of(m - 1 - j, m - 1 - i))
            .collect();
        let rc = OrderedTwoColoring { m, colors: rev_colors };
        assert_eq!(max_mono_nonnested(&rc).unwrap().0, size);
        // color swap
        let fc = OrderedTwoColoring {
            m,
            colors: c.colors.iter().map(|c| c.flip()).collect(),
        };
        assert_eq!(max_mono_nonnested(&fc).unwrap().0, size);
    }

    #[test]
    fn restriction_never_increases() {
        let c = coloring_from_red(7, &[(0, 2), (1, 4), (3, 6), (2, 5), (0, 6)]);
        let full = max_mono_nonnested(&c).unwrap().0;
        let restricted = max_mono_nonnested(&c.restrict(6)).unwrap().0;
        assert!(restricted <= full);
    }
}
