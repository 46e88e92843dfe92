//! The generation bigraph as a degree map over the subgroup lattice, its
//! star-forest decomposition, graph parameters, and closed-form star forests
//! for the supported group families.
//!
//! The graph is never materialized: every pair vertex has degree one, so the
//! per-subgroup degrees (plus the pair count) carry the whole structure, and
//! memory stays proportional to the lattice size rather than the square of
//! the group order.

use serde::Serialize;

use crate::error::Error;
use crate::group::{is_prime, GroupTable};
use crate::lattice::Lattice;
use crate::Result;

/// How many generators the whole group needs, bucketed as far as the bigraph
/// can tell: `deg(G) > 0` means two generators suffice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RankBucket {
    Trivial,
    OneGenerated,
    TwoGenerated,
    NeedsThreePlus,
}

/// Per-subgroup degrees in the generation bigraph: `deg(H)` counts the
/// ordered pairs `(a, b)` with `<a, b> = H`.
#[derive(Clone, Debug)]
pub struct DegreeMap {
    group_order: usize,
    deg: Vec<u64>,
    l2_ids: Vec<usize>,
    rank_bucket: RankBucket,
}

impl DegreeMap {
    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn degree(&self, id: usize) -> u64 {
        self.deg[id]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.deg
    }

    /// Ids of the subgroups generated by at most two elements, i.e. those
    /// with positive degree.
    pub fn l2_ids(&self) -> &[usize] {
        &self.l2_ids
    }

    pub fn l2_len(&self) -> usize {
        self.l2_ids.len()
    }

    pub fn rank_bucket(&self) -> RankBucket {
        self.rank_bucket
    }

    /// Sum of all degrees; equals the squared group order (each ordered pair
    /// contributes exactly one edge).
    pub fn total(&self) -> u64 {
        self.deg.iter().sum()
    }
}

/// Builds the degree map by resolving `<a, b>` for every ordered pair.
pub fn build_degree_map(g: &GroupTable, lat: &Lattice) -> Result<DegreeMap> {
    build_degree_map_threaded(g, lat, 1)
}

/// `build_degree_map` with the pair space partitioned across `threads`
/// workers. Each worker owns a private count vector and the results are
/// merged by addition, so the outcome does not depend on the thread count.
pub fn build_degree_map_threaded(
    g: &GroupTable,
    lat: &Lattice,
    threads: usize,
) -> Result<DegreeMap> {
    let n = g.order();
    let threads = threads.max(1).min(n);
    let counts = if threads == 1 || n < 32 {
        scan_rows(g, lat, 0, 1)?
    } else {
        let partials: Vec<Result<Vec<u64>>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| scope.spawn(move || scan_rows(g, lat, t, threads)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        let mut total = vec![0u64; lat.len()];
        for partial in partials {
            for (acc, v) in total.iter_mut().zip(partial?) {
                *acc += v;
            }
        }
        total
    };

    let l2_ids: Vec<usize> = (0..lat.len()).filter(|&id| counts[id] > 0).collect();
    let full_degree = counts[lat.full_id()];
    let rank_bucket = if n == 1 {
        RankBucket::Trivial
    } else if g.elements().any(|x| g.element_order(x) == n) {
        RankBucket::OneGenerated
    } else if full_degree > 0 {
        RankBucket::TwoGenerated
    } else {
        RankBucket::NeedsThreePlus
    };

    Ok(DegreeMap {
        group_order: n,
        deg: counts,
        l2_ids,
        rank_bucket,
    })
}

/// Scans rows `a = offset, offset + stride, ..` of the pair matrix over
/// columns `b >= a`; the pair `(b, a)` generates the same subgroup, so it is
/// accounted with weight two off the diagonal.
fn scan_rows(g: &GroupTable, lat: &Lattice, offset: usize, stride: usize) -> Result<Vec<u64>> {
    let n = g.order();
    let mut counts = vec![0u64; lat.len()];
    let mut a = offset;
    while a < n {
        for b in a..n {
            let carrier = g.generate_pair(a as u16, b as u16);
            let id = lat.id_of(&carrier).ok_or_else(|| {
                Error::Internal(format!(
                    "generated carrier of order {} missing from the lattice",
                    carrier.len()
                ))
            })?;
            counts[id] += if a == b { 1 } else { 2 };
        }
        a += stride;
    }
    Ok(counts)
}

/// The canonical star-forest decomposition: one star per subgroup, recorded
/// as the ascending multiset of leaf counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarForest {
    stars: Vec<u64>,
    isolated_count: usize,
}

impl StarForest {
    pub fn from_leaf_counts(mut stars: Vec<u64>) -> Self {
        stars.sort_unstable();
        let isolated_count = stars.iter().filter(|&&d| d == 0).count();
        StarForest {
            stars,
            isolated_count,
        }
    }

    /// Leaf counts in ascending order, one entry per subgroup; zero entries
    /// are the isolated subgroup vertices.
    pub fn stars(&self) -> &[u64] {
        &self.stars
    }

    pub fn isolated_count(&self) -> usize {
        self.isolated_count
    }

    pub fn total_leaves(&self) -> u64 {
        self.stars.iter().sum()
    }
}

/// Reads the star multiset off a degree map.
pub fn star_forest(dm: &DegreeMap) -> StarForest {
    StarForest::from_leaf_counts(dm.degrees().to_vec())
}

/// Diameter of the bigraph: finite only for the trivial group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(u64),
    Infinite,
}

impl Serialize for Diameter {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => serializer.serialize_u64(*d),
            Diameter::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Classical graph parameters of the generation bigraph.
///
/// Girth is reported as 0 for this acyclic graph, and the domatic number is
/// absent when no domatic partition exists (groups needing three or more
/// generators leave isolated subgroup vertices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamReport {
    pub independence_number: u64,
    pub domination_number: u64,
    pub matching_number: u64,
    pub clique_number: u64,
    pub vertex_cover_number: u64,
    pub irredundance_number: u64,
    pub bondage_number: u64,
    pub girth: u64,
    pub diameter: Diameter,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub domatic_number: Option<u64>,
}

/// Evaluates the closed forms: with `n = |G|`, `L` the subgroup count and
/// `L2` the count of positive-degree subgroups, independence is
/// `n^2 + L - L2`, matching and vertex cover are `L2`, and domination and
/// irredundance are `min(n^2 + L - L2, L)`; since every positive-degree
/// subgroup absorbs at least one pair, `n^2 >= L2` and the minimum is always
/// `L`. The pair side dominates only when every subgroup has positive
/// degree, which is why the domatic number exists exactly for groups
/// generated by at most two elements.
pub fn compute_params(dm: &DegreeMap, lat: &Lattice) -> ParamReport {
    let n2 = (dm.group_order() as u64).pow(2);
    let l = lat.len() as u64;
    let l2 = dm.l2_len() as u64;
    let independence = n2 + l - l2;
    let domination = independence.min(l);
    ParamReport {
        independence_number: independence,
        domination_number: domination,
        matching_number: l2,
        clique_number: 2,
        vertex_cover_number: l2,
        irredundance_number: domination,
        bondage_number: 1,
        girth: 0,
        diameter: if dm.group_order() == 1 {
            Diameter::Finite(1)
        } else {
            Diameter::Infinite
        },
        domatic_number: match dm.rank_bucket() {
            RankBucket::Trivial | RankBucket::OneGenerated | RankBucket::TwoGenerated => Some(2),
            RankBucket::NeedsThreePlus => None,
        },
    }
}

/// Group families with a closed-form star forest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Dihedral of order 2p.
    D2p,
    /// Dihedral of order 2p^2.
    D2p2,
    /// Dicyclic of order 4p.
    Q4p,
    /// Dicyclic of order 4p^2.
    Q4p2,
    /// Cyclic of prime order.
    Zp,
    /// Cyclic of order 2p, odd p.
    Z2p,
    /// Cyclic of order p^2.
    Zp2,
    /// Cyclic of order 2p^2, odd p.
    Z2p2,
    /// The non-cyclic group of order p^2.
    NoncyclicP2,
}

pub const ALL_FAMILIES: [Family; 9] = [
    Family::D2p,
    Family::D2p2,
    Family::Q4p,
    Family::Q4p2,
    Family::Zp,
    Family::Z2p,
    Family::Zp2,
    Family::Z2p2,
    Family::NoncyclicP2,
];

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::D2p => "D2p",
            Family::D2p2 => "D2p2",
            Family::Q4p => "Q4p",
            Family::Q4p2 => "Q4p2",
            Family::Zp => "Zp",
            Family::Z2p => "Z2p",
            Family::Zp2 => "Zp2",
            Family::Z2p2 => "Z2p2",
            Family::NoncyclicP2 => "noncyclic_p2",
        }
    }

    pub fn parse(name: &str) -> Result<Family> {
        ALL_FAMILIES
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnsupportedFamily(name.to_string()))
    }

    pub fn order(self, p: u64) -> u64 {
        match self {
            Family::D2p => 2 * p,
            Family::D2p2 => 2 * p * p,
            Family::Q4p => 4 * p,
            Family::Q4p2 => 4 * p * p,
            Family::Zp => p,
            Family::Z2p => 2 * p,
            Family::Zp2 => p * p,
            Family::Z2p2 => 2 * p * p,
            Family::NoncyclicP2 => p * p,
        }
    }

    /// The group description realizing this family at prime `p`.
    pub fn group_spec(self, p: u64) -> String {
        match self {
            Family::D2p | Family::D2p2 => format!("D:{}", self.order(p)),
            Family::Q4p | Family::Q4p2 => format!("Q:{}", self.order(p)),
            Family::Zp | Family::Z2p | Family::Zp2 | Family::Z2p2 => {
                format!("Z:{}", self.order(p))
            }
            Family::NoncyclicP2 => format!("X(Z:{p},Z:{p})"),
        }
    }
}

/// The closed-form star forest of a family at prime `p`, as literal integer
/// arithmetic on `p`.
///
/// The dihedral forms hold for every prime (at p = 2 the generic terms merge
/// into the same multiset as the worked-out small case). The dicyclic forms
/// change shape at p = 2 because subgroups collide there, so that prime gets
/// its own branch. The cyclic 2p and 2p^2 forms require odd p: at p = 2
/// those orders are 4 and 8, where the listed subgroups coincide. Each form
/// is pinned by tests to the brute-force decomposition of the constructed
/// groups, which is the authority whenever a published reading disagrees.
pub fn closed_form_forest(family: Family, p: u64) -> Result<StarForest> {
    let unsupported = || Error::UnsupportedFamilyPrime {
        family: family.name(),
        prime: p,
    };
    // The p^4 terms must stay within u64; primes past this bound are far
    // beyond any constructible order anyway.
    if p > 1 << 15 {
        return Err(unsupported());
    }
    if !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let mut leaves: Vec<u64> = vec![1]; // the trivial subgroup's single pair
    match family {
        Family::Zp => {
            leaves.push(p * p - 1);
        }
        Family::Z2p => {
            if p == 2 {
                return Err(unsupported());
            }
            leaves.extend([3, p * p - 1, 3 * p * p - 3]);
        }
        Family::Zp2 => {
            leaves.extend([p * p - 1, p.pow(4) - p * p]);
        }
        Family::Z2p2 => {
            if p == 2 {
                return Err(unsupported());
            }
            leaves.extend([
                3,
                p * p - 1,
                3 * p * p - 3,
                p.pow(4) - p * p,
                3 * p.pow(4) - 3 * p * p,
            ]);
        }
        Family::NoncyclicP2 => {
            leaves.extend(std::iter::repeat_n(p * p - 1, p as usize + 1));
            leaves.push(p * (p - 1) * (p * p - 1));
        }
        Family::D2p => {
            leaves.extend(std::iter::repeat_n(3, p as usize));
            leaves.extend([p * p - 1, 3 * p * (p - 1)]);
        }
        Family::D2p2 => {
            leaves.extend(std::iter::repeat_n(3, (p * p) as usize));
            leaves.extend([p * p - 1, p.pow(4) - p * p]);
            leaves.extend(std::iter::repeat_n(3 * p * (p - 1), p as usize));
            leaves.push(3 * p * p * (p * p - p));
        }
        Family::Q4p => {
            if p == 2 {
                leaves.extend([3, 12, 12, 12, 24]);
            } else {
                leaves.push(3);
                leaves.extend(std::iter::repeat_n(12, p as usize));
                leaves.extend([p * p - 1, 3 * p * p - 3, 12 * p * p - 12 * p]);
            }
        }
        Family::Q4p2 => {
            if p == 2 {
                leaves.extend([3, 12, 12, 12, 12, 12, 24, 24, 48, 96]);
            } else {
                // Subgroups of the dicyclic group of order 4p^2, odd p: one
                // cyclic subgroup per divisor of 2p^2 (orders 1, 2, p, 2p,
                // p^2, 2p^2), p^2 cyclic subgroups of order 4, p dicyclic
                // subgroups of order 4p, and the group itself; in total
                // tau(2p^2) + sigma(p^2) members. The top star then holds
                // 16p^4 minus the rest, which is 12p^4 - 12p^3.
                leaves.push(3);
                leaves.extend(std::iter::repeat_n(12, (p * p) as usize));
                leaves.extend([
                    p * p - 1,
                    3 * p * p - 3,
                    p.pow(4) - p * p,
                    3 * p.pow(4) - 3 * p * p,
                ]);
                leaves.extend(std::iter::repeat_n(12 * p * p - 12 * p, p as usize));
                leaves.push(12 * p.pow(4) - 12 * p.pow(3));
            }
        }
    }
    Ok(StarForest::from_leaf_counts(leaves))
}
