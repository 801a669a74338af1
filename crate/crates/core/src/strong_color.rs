//! Union instances G ∪ H where G is a disjoint union of cycles (or a perfect
//! matching) spanning the vertex set and H is a partition into equal cliques,
//! with exact k-colorability decisions and a counterexample hunter.

use crate::coloring;
use crate::graph::Graph;
use rand::Rng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrongColorError {
    #[error("cycle of length {0} is too short")]
    ShortCycle(usize),
    #[error("vertex {0} is not covered exactly once by the cycle system")]
    BadCycleCover(usize),
    #[error("clique blocks must all have size {expected}, found {found}")]
    UnevenBlock { expected: usize, found: usize },
    #[error("vertex {0} is not covered exactly once by the clique partition")]
    BadPartition(usize),
    #[error("k = {k} below clique size s = {s}: trivially uncolorable")]
    TooFewColors { k: usize, s: usize },
    #[error("n_max {0} is not usable with clique size {1}")]
    BadParameters(usize, usize),
    #[error("degree parameter d must be 1 or 2, got {0}")]
    BadDegree(usize),
}

/// One instance: explicit cycle system (or matching for d = 1) plus a clique
/// partition on the same vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionInstance {
    pub n: usize,
    /// For d = 2: vertex sequences of cycles, lengths >= 3, partitioning 0..n.
    /// For d = 1: blocks of size 2 (a perfect matching).
    pub cycles: Vec<Vec<usize>>,
    /// Equal-size clique blocks partitioning 0..n.
    pub blocks: Vec<Vec<usize>>,
    pub s: usize,
    pub d: usize,
}

impl UnionInstance {
    pub fn validate(&self) -> Result<(), StrongColorError> {
        if self.d != 1 && self.d != 2 {
            return Err(StrongColorError::BadDegree(self.d));
        }
        let min_len = if self.d == 2 { 3 } else { 2 };
        let mut seen = vec![0usize; self.n];
        for cyc in &self.cycles {
            if cyc.len() < min_len || (self.d == 1 && cyc.len() != 2) {
                return Err(StrongColorError::ShortCycle(cyc.len()));
            }
            for &v in cyc {
                seen[v] += 1;
            }
        }
        if let Some(v) = seen.iter().position(|&c| c != 1) {
            return Err(StrongColorError::BadCycleCover(v));
        }
        let mut seen = vec![0usize; self.n];
        for block in &self.blocks {
            if block.len() != self.s {
                return Err(StrongColorError::UnevenBlock {
                    expected: self.s,
                    found: block.len(),
                });
            }
            for &v in block {
                seen[v] += 1;
            }
        }
        if let Some(v) = seen.iter().position(|&c| c != 1) {
            return Err(StrongColorError::BadPartition(v));
        }
        Ok(())
    }
}

/// Simple union graph: cycle (or matching) edges plus clique edges, merged.
pub fn build_union(inst: &UnionInstance) -> Result<Graph, StrongColorError> {
    inst.validate()?;
    let mut set = std::collections::BTreeSet::new();
    for cyc in &inst.cycles {
        if cyc.len() == 2 {
            set.insert((cyc[0].min(cyc[1]), cyc[0].max(cyc[1])));
            continue;
        }
        for i in 0..cyc.len() {
            let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
            set.insert((a.min(b), a.max(b)));
        }
    }
    for block in &inst.blocks {
        for i in 0..block.len() {
            for j in i + 1..block.len() {
                let (a, b) = (block[i], block[j]);
                set.insert((a.min(b), a.max(b)));
            }
        }
    }
    Ok(Graph::from_edges_canonical(inst.n, set).expect("validated instance"))
}

#[derive(Debug, Clone)]
pub struct ColorOutcome {
    pub coloring: Option<Vec<u8>>,
    pub nodes: u64,
}

/// Exact k-colorability of the union. The first clique block is pre-colored
/// 0..s, which breaks color permutations without losing any instance.
pub fn strong_colorable(inst: &UnionInstance, k: usize) -> Result<ColorOutcome, StrongColorError> {
    if k < inst.s {
        return Err(StrongColorError::TooFewColors { k, s: inst.s });
    }
    let g = build_union(inst)?;
    let adj = coloring::graph_to_adj(&g);
    let pre: Vec<(usize, u8)> = inst.blocks[0]
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u8))
        .collect();
    let out = coloring::decide_k_coloring(&adj, k, &pre);
    Ok(ColorOutcome {
        coloring: out.coloring,
        nodes: out.nodes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HuntStrategy {
    Exhaustive,
    Random { trials: u64, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct HuntReport {
    pub instances_tested: u64,
    pub nodes: u64,
    /// First (canonically smallest) uncolorable instance, if any.
    pub counterexample: Option<UnionInstance>,
}

/// Iterates instances with clique size s against k colors up to n_max
/// vertices. Cycle systems are laid out canonically on consecutive vertex
/// ranges (sound up to relabeling, which moves all freedom into the clique
/// partition); clique partitions are enumerated canonically or sampled.
pub fn hunt_counterexample(
    s: usize,
    k: usize,
    n_max: usize,
    strategy: HuntStrategy,
) -> Result<HuntReport, StrongColorError> {
    if k < s {
        return Err(StrongColorError::TooFewColors { k, s });
    }
    if s < 2 || n_max < s {
        return Err(StrongColorError::BadParameters(n_max, s));
    }
    let d = if s == 2 { 1 } else { 2 };
    let mut report = HuntReport {
        instances_tested: 0,
        nodes: 0,
        counterexample: None,
    };

    match strategy {
        HuntStrategy::Exhaustive => {
            let min_n = if d == 2 { 3 } else { 2 };
            let mut n = s;
            while n <= n_max {
                if n >= min_n {
                    hunt_exhaustive_n(n, s, k, d, &mut report)?;
                    if report.counterexample.is_some() {
                        return Ok(report);
                    }
                }
                n += s;
            }
        }
        HuntStrategy::Random { trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let usable: Vec<usize> = (1..=n_max / s)
                .map(|q| q * s)
                .filter(|&n| n >= if d == 2 { 3 } else { 2 })
                .collect();
            if usable.is_empty() {
                return Err(StrongColorError::BadParameters(n_max, s));
            }
            for _ in 0..trials {
                let n = usable[rng.gen_range(0..usable.len())];
                let inst = random_instance(n, s, d, &mut rng);
                let out = strong_colorable(&inst, k)?;
                report.instances_tested += 1;
                report.nodes += out.nodes;
                if out.coloring.is_none() {
                    report.counterexample = Some(inst);
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn hunt_exhaustive_n(
    n: usize,
    s: usize,
    k: usize,
    d: usize,
    report: &mut HuntReport,
) -> Result<(), StrongColorError> {
    let types = if d == 2 {
        partitions_min3(n)
    } else {
        vec![vec![2; n / 2]]
    };
    for cycle_type in types {
        let cycles = canonical_cycles(&cycle_type);
        let mut partition = Vec::new();
        let mut free: Vec<usize> = (0..n).collect();
        let stop = enumerate_partitions(&mut free, s, &mut partition, &mut |blocks| {
            let inst = UnionInstance {
                n,
                cycles: cycles.clone(),
                blocks: blocks.to_vec(),
                s,
                d,
            };
            let out = strong_colorable(&inst, k).expect("valid enumerated instance");
            report.instances_tested += 1;
            report.nodes += out.nodes;
            if out.coloring.is_none() {
                report.counterexample = Some(inst);
                true
            } else {
                false
            }
        });
        if stop {
            return Ok(());
        }
    }
    Ok(())
}

/// Partitions of n into parts >= 3, non-increasing, lexicographically
/// descending by first part.
pub fn partitions_min3(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        let mut part = max.min(n);
        while part >= 3 {
            if n - part == 0 || n - part >= 3 {
                cur.push(part);
                rec(n - part, part, cur, out);
                cur.pop();
            }
            part -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Lays the cycle type out on consecutive vertex ranges in natural order.
pub fn canonical_cycles(cycle_type: &[usize]) -> Vec<Vec<usize>> {
    let mut cycles = Vec::with_capacity(cycle_type.len());
    let mut next = 0usize;
    for &len in cycle_type {
        cycles.push((next..next + len).collect());
        next += len;
    }
    cycles
}

/// Enumerates set partitions into blocks of size s in canonical order: each
/// block starts with the smallest vertex not yet used. The visitor returns
/// true to stop early; the function reports whether it stopped.
fn enumerate_partitions(
    free: &mut Vec<usize>,
    s: usize,
    acc: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[Vec<usize>]) -> bool,
) -> bool {
    if free.is_empty() {
        return visit(acc);
    }
    let head = free[0];
    let rest: Vec<usize> = free[1..].to_vec();
    let mut combo_idx: Vec<usize> = (0..s - 1).collect();
    loop {
        let mut block = vec![head];
        block.extend(combo_idx.iter().map(|&i| rest[i]));
        let mut remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|(i, _)| !combo_idx.contains(i))
            .map(|(_, &v)| v)
            .collect();
        acc.push(block);
        let stop = enumerate_partitions(&mut remaining, s, acc, visit);
        acc.pop();
        if stop {
            return true;
        }
        // next (s-1)-combination of rest
        let len = rest.len();
        let mut i = s - 1;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if combo_idx[i] != i + len - (s - 1) {
                break;
            }
        }
        combo_idx[i] += 1;
        for j in i + 1..s - 1 {
            combo_idx[j] = combo_idx[j - 1] + 1;
        }
    }
}

fn random_instance(n: usize, s: usize, d: usize, rng: &mut ChaCha8Rng) -> UnionInstance {
    let cycle_type = if d == 1 {
        vec![2; n / 2]
    } else {
        // random partition of n into parts >= 3
        loop {
            let mut parts = Vec::new();
            let mut left = n;
            let ok = loop {
                if left == 0 {
                    break true;
                }
                if left < 3 {
                    break false;
                }
                let hi = left;
                let part = rng.gen_range(3..=hi);
                if left - part != 0 && left - part < 3 {
                    break false;
                }
                parts.push(part);
                left -= part;
            };
            if ok {
                parts.sort_unstable_by(|a, b| b.cmp(a));
                break parts;
            }
        }
    };
    let cycles = canonical_cycles(&cycle_type);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    let mut blocks: Vec<Vec<usize>> = verts.chunks(s).map(|c| {
        let mut b = c.to_vec();
        b.sort_unstable();
        b
    }).collect();
    blocks.sort();
    UnionInstance {
        n,
        cycles,
        blocks,
        s,
        d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_of_c4_and_k4_block_is_k4() {
        let inst = UnionInstance {
            n: 4,
            cycles: vec![vec![0, 1, 2, 3]],
            blocks: vec![vec![0, 1, 2, 3]],
            s: 4,
            d: 2,
        };
        let g = build_union(&inst).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(strong_colorable(&inst, 4).unwrap().coloring.is_some());
        assert!(strong_colorable(&inst, 3).is_err()); // k < s precondition
    }

    #[test]
    fn c8_with_two_k4_blocks_edge_count() {
        let inst = UnionInstance {
            n: 8,
            cycles: vec![(0..8).collect()],
            blocks: vec![vec![0, 2, 4, 6], vec![1, 3, 5, 7]],
            s: 4,
            d: 2,
        };
        let g = build_union(&inst).unwrap();
        assert_eq!(g.edge_count(), 8 + 12);
    }

    #[test]
    fn c6_with_two_triangles_edge_count() {
        let inst = UnionInstance {
            n: 6,
            cycles: vec![(0..6).collect()],
            blocks: vec![vec![0, 2, 4], vec![1, 3, 5]],
            s: 3,
            d: 2,
        };
        let g = build_union(&inst).unwrap();
        assert_eq!(g.edge_count(), 12);
        // this union is the octahedron, which is 3-colorable
        assert!(strong_colorable(&inst, 3).unwrap().coloring.is_some());
    }

    #[test]
    fn returned_colorings_are_proper_and_blocks_rainbow() {
        let inst = UnionInstance {
            n: 10,
            cycles: vec![(0..10).collect()],
            blocks: vec![vec![0, 2, 4, 6, 8], vec![1, 3, 5, 7, 9]],
            s: 5,
            d: 2,
        };
        let g = build_union(&inst).unwrap();
        let out = strong_colorable(&inst, 5).unwrap();
        let colors = out.coloring.expect("K5 blocks against C10 are 5-colorable");
        let adj = coloring::graph_to_adj(&g);
        assert!(coloring::verify_coloring(&adj, &colors, 5));
        for block in &inst.blocks {
            let distinct: std::collections::HashSet<u8> =
                block.iter().map(|&v| colors[v]).collect();
            assert_eq!(distinct.len(), inst.s);
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_min3(6), vec![vec![6], vec![3, 3]]);
        assert_eq!(partitions_min3(7).len(), 2); // 7, 4+3
        // set partitions of 6 into pairs: 15
        let mut count = 0u64;
        let mut free: Vec<usize> = (0..6).collect();
        enumerate_partitions(&mut free, 2, &mut Vec::new(), &mut |_| {
            count += 1;
            false
        });
        assert_eq!(count, 15);
    }

    #[test]
    fn matching_variant_never_fails_with_two_colors() {
        // d = 1 smoke case: matching plus K2 blocks is bipartite
        let report = hunt_counterexample(2, 2, 8, HuntStrategy::Exhaustive).unwrap();
        assert!(report.counterexample.is_none());
        assert!(report.instances_tested > 0);
    }

    #[test]
    fn invalid_instances_are_rejected() {
        let bad = UnionInstance {
            n: 5,
            cycles: vec![vec![0, 1], vec![2, 3, 4]],
            blocks: vec![vec![0, 1, 2, 3, 4]],
            s: 5,
            d: 2,
        };
        assert!(matches!(bad.validate(), Err(StrongColorError::ShortCycle(2))));
    }
}
