//! Generating-graph edge counts and Euler's totient.
//!
//! The generating graph of a subgroup `H` has vertex set `H` with an edge
//! between distinct `x`, `y` exactly when `<x, y> = H`. Its edge count splits
//! the bigraph degree: `deg(H) = 2 e(H) + t(H)`, where `t(H)` counts the
//! elements generating `H` alone (the totient of `|H|` for cyclic `H`, zero
//! otherwise; the trivial subgroup folds in because the totient of 1 is 1).

use crate::group::GroupTable;
use crate::lattice::Subgroup;

/// Euler's totient by trial-division factorization.
pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result = result / p * (p - 1);
        }
        p += 1;
    }
    if rest > 1 {
        result = result / rest * (rest - 1);
    }
    result
}

/// Edge count of a subgroup's generating graph plus its diagonal generator
/// count, satisfying `deg(H) = 2 * edge_count + diagonal_generators`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenGraphSummary {
    pub subgroup_id: usize,
    pub edge_count: u64,
    pub diagonal_generators: u64,
}

/// Counts generating pairs inside `H`: unordered distinct pairs become
/// edges, single generators are counted separately.
pub fn gen_graph_edges(g: &GroupTable, sub: &Subgroup) -> GenGraphSummary {
    let members = sub.carrier.to_indices();
    let mut ordered_distinct = 0u64;
    let mut diagonal = 0u64;
    for &x in &members {
        if g.generate_from(&[x]) == sub.carrier {
            diagonal += 1;
        }
        for &y in &members {
            if x != y && g.generate_pair(x, y) == sub.carrier {
                ordered_distinct += 1;
            }
        }
    }
    debug_assert_eq!(ordered_distinct % 2, 0);
    GenGraphSummary {
        subgroup_id: sub.id,
        edge_count: ordered_distinct / 2,
        diagonal_generators: diagonal,
    }
}
