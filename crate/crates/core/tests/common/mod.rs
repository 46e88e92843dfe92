//! Shared fixtures for the integration suites: the group corpus with cached
//! analyses, a subset-filtering subgroup oracle, and generic brute-force
//! graph-parameter oracles that know nothing about the closed forms.

#![allow(dead_code)]

use std::sync::OnceLock;

use bigen::report::{analyze_group, Analysis};
use bigen::{ElementSet, GroupTable};

/// Every group the suites run against. Orders stay at or below 120 so the
/// whole suite finishes comfortably inside the time budget; the degree-5
/// permutation groups cover the non-solvable regime.
pub const CORPUS: &[&str] = &[
    "Z:1",
    "Z:2",
    "Z:3",
    "Z:4",
    "Z:5",
    "Z:6",
    "Z:7",
    "Z:8",
    "Z:9",
    "Z:10",
    "Z:12",
    "Z:18",
    "Z:25",
    "Z:50",
    "D:4",
    "D:6",
    "D:8",
    "D:10",
    "D:12",
    "D:14",
    "D:18",
    "D:50",
    "D:98",
    "Q:8",
    "Q:12",
    "Q:16",
    "Q:20",
    "Q:28",
    "Q:36",
    "Q:100",
    "S:3",
    "S:4",
    "S:5",
    "A:4",
    "A:5",
    "X(Z:2,Z:2)",
    "X(Z:3,Z:3)",
    "X(Z:5,Z:5)",
    "X(Z:2,Z:4)",
    "X(Z:2,Z:2,Z:2)",
];

static ANALYSES: OnceLock<Vec<Analysis>> = OnceLock::new();

/// Cached full-pipeline analyses of the corpus, built once per process.
pub fn corpus() -> &'static [Analysis] {
    ANALYSES.get_or_init(|| {
        CORPUS
            .iter()
            .map(|spec| analyze_group(spec, 512, 1).expect("corpus group must analyze"))
            .collect()
    })
}

pub fn corpus_entry(spec: &str) -> &'static Analysis {
    corpus()
        .iter()
        .find(|a| a.group.spec() == spec)
        .unwrap_or_else(|| panic!("{spec} not in corpus"))
}

/// Independent subgroup oracle: filters all subsets containing the identity
/// for closure under multiplication. Only feasible for small orders.
pub fn subgroups_by_subset_filter(g: &GroupTable) -> Vec<ElementSet> {
    let n = g.order();
    assert!(n <= 16, "subset oracle is exponential in the order");
    let mut found = Vec::new();
    // Bit i of the mask decides membership of element i + 1; the identity is
    // always in.
    for mask in 0u32..(1 << (n - 1)) {
        let mut members = vec![0u16];
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                members.push((i + 1) as u16);
            }
        }
        let closed = members
            .iter()
            .all(|&x| members.iter().all(|&y| members.contains(&g.mul(x, y))));
        if closed {
            found.push(ElementSet::from_indices(n, &members));
        }
    }
    found
}

/// Explicit undirected graph for the generic parameter oracles.
pub struct ExplicitGraph {
    pub vertex_count: usize,
    pub adj: Vec<Vec<usize>>,
    /// Vertices below this index are pair vertices; the rest are subgroups.
    pub pair_count: usize,
}

/// Materializes the bigraph: pair `(a, b)` is vertex `a*n + b`, subgroup
/// `id` is vertex `n^2 + id`.
pub fn explicit_bigraph(analysis: &Analysis) -> ExplicitGraph {
    let g = &analysis.group;
    let n = g.order();
    let pair_count = n * n;
    let vertex_count = pair_count + analysis.lattice.len();
    let mut adj = vec![Vec::new(); vertex_count];
    for a in 0..n as u16 {
        for b in 0..n as u16 {
            let pair = a as usize * n + b as usize;
            let id = analysis
                .lattice
                .id_of(&g.generate_pair(a, b))
                .expect("pair resolves in the lattice");
            adj[pair].push(pair_count + id);
            adj[pair_count + id].push(pair);
        }
    }
    ExplicitGraph {
        vertex_count,
        adj,
        pair_count,
    }
}

impl ExplicitGraph {
    /// Connected components as sorted vertex lists (singletons included).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut components = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut queue = vec![start];
            let mut component = Vec::new();
            seen[start] = true;
            while let Some(v) = queue.pop() {
                component.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }
}

/// A component re-indexed to local vertices with bitmask adjacency.
struct MaskedComponent {
    size: usize,
    nbhd: Vec<u64>,
}

fn masked(g: &ExplicitGraph, component: &[usize]) -> MaskedComponent {
    assert!(component.len() <= 63, "component too large for mask search");
    let local: std::collections::HashMap<usize, usize> =
        component.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut nbhd = vec![0u64; component.len()];
    for (i, &v) in component.iter().enumerate() {
        for &w in &g.adj[v] {
            nbhd[i] |= 1 << local[&w];
        }
    }
    MaskedComponent {
        size: component.len(),
        nbhd,
    }
}

fn subsets_of_size(universe: usize, size: usize) -> Box<dyn Iterator<Item = u64>> {
    if size == 0 {
        return Box::new(std::iter::once(0u64));
    }
    if size > universe {
        return Box::new(std::iter::empty());
    }
    // Gosper's hack walks the size-subsets of {0..universe-1} in order.
    let limit = 1u64 << universe;
    let first = (1u64 << size) - 1;
    let mut current = Some(first);
    Box::new(std::iter::from_fn(move || {
        let value = current?;
        let c = value & value.wrapping_neg();
        let r = value + c;
        let next = (((r ^ value) >> 2) / c) | r;
        current = if next < limit { Some(next) } else { None };
        Some(value)
    }))
}

fn mis_branch(comp: &MaskedComponent, alive: u64) -> u32 {
    let mut best_vertex = None;
    let mut best_degree = 0;
    let mut bits = alive;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let degree = (comp.nbhd[v] & alive).count_ones();
        if degree > best_degree {
            best_degree = degree;
            best_vertex = Some(v);
        }
    }
    match best_vertex {
        None => alive.count_ones(), // edgeless remainder: take everything
        Some(v) => {
            let without = mis_branch(comp, alive & !(1 << v));
            let with = 1 + mis_branch(comp, alive & !(comp.nbhd[v] | (1 << v)));
            without.max(with)
        }
    }
}

/// Exact maximum independent set by branching, summed over components.
pub fn brute_max_independent_set(g: &ExplicitGraph) -> u64 {
    g.components()
        .iter()
        .map(|c| {
            let comp = masked(g, c);
            mis_branch(&comp, (1u64 << comp.size) - 1) as u64
        })
        .sum()
}

/// Exact minimum dominating set by increasing-size subset search per
/// component.
pub fn brute_min_dominating_set(g: &ExplicitGraph) -> u64 {
    g.components()
        .iter()
        .map(|c| {
            let comp = masked(g, c);
            let full = (1u64 << comp.size) - 1;
            for size in 0..=comp.size {
                for subset in subsets_of_size(comp.size, size) {
                    let mut covered = subset;
                    let mut bits = subset;
                    while bits != 0 {
                        let v = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        covered |= comp.nbhd[v];
                    }
                    if covered == full {
                        return size as u64;
                    }
                }
            }
            unreachable!("the full vertex set dominates")
        })
        .sum()
}

/// Exact minimum vertex cover by increasing-size subset search per
/// component.
pub fn brute_min_vertex_cover(g: &ExplicitGraph) -> u64 {
    g.components()
        .iter()
        .map(|c| {
            let comp = masked(g, c);
            for size in 0..=comp.size {
                for subset in subsets_of_size(comp.size, size) {
                    // Every edge is covered when each vertex outside the
                    // subset has all neighbors inside it.
                    let covers =
                        (0..comp.size).all(|v| subset >> v & 1 == 1 || comp.nbhd[v] & !subset == 0);
                    if covers {
                        return size as u64;
                    }
                }
            }
            unreachable!("the full vertex set covers")
        })
        .sum()
}

/// Maximum matching by augmenting paths over the bipartition (pairs on the
/// left, subgroups on the right).
pub fn brute_max_matching(g: &ExplicitGraph) -> u64 {
    let mut matched_right: Vec<Option<usize>> = vec![None; g.vertex_count];
    let mut matching = 0u64;
    for left in 0..g.pair_count {
        let mut visited = vec![false; g.vertex_count];
        if augment(g, left, &mut matched_right, &mut visited) {
            matching += 1;
        }
    }
    matching
}

fn augment(
    g: &ExplicitGraph,
    left: usize,
    matched_right: &mut Vec<Option<usize>>,
    visited: &mut Vec<bool>,
) -> bool {
    for &right in &g.adj[left] {
        if visited[right] {
            continue;
        }
        visited[right] = true;
        let free = match matched_right[right] {
            None => true,
            Some(other) => augment(g, other, matched_right, visited),
        };
        if free {
            matched_right[right] = Some(left);
            return true;
        }
    }
    false
}

fn coverage(comp: &MaskedComponent, subset: u64) -> u64 {
    let mut covered = subset;
    let mut bits = subset;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        covered |= comp.nbhd[v];
    }
    covered
}

fn is_irredundant(comp: &MaskedComponent, subset: u64) -> bool {
    let full = coverage(comp, subset);
    let mut bits = subset;
    while bits != 0 {
        let v = bits.trailing_zeros() as u64;
        bits &= bits - 1;
        if coverage(comp, subset & !(1 << v)) == full {
            return false;
        }
    }
    true
}

/// Smallest maximal irredundant set by increasing-size search per component.
pub fn brute_min_maximal_irredundant(g: &ExplicitGraph) -> u64 {
    g.components()
        .iter()
        .map(|c| {
            let comp = masked(g, c);
            for size in 1..=comp.size {
                for subset in subsets_of_size(comp.size, size) {
                    if !is_irredundant(&comp, subset) {
                        continue;
                    }
                    let maximal = (0..comp.size)
                        .all(|u| subset >> u & 1 == 1 || !is_irredundant(&comp, subset | (1 << u)));
                    if maximal {
                        return size as u64;
                    }
                }
            }
            unreachable!("every graph has a maximal irredundant set")
        })
        .sum()
}
