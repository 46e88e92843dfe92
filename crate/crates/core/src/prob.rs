//! Generation probabilities as exact rationals.
//!
//! Everything here is a quotient of pair counts by the squared group order;
//! no floating point is involved, so equality checks are exact.

use std::collections::HashMap;
use std::fmt;
use std::ops::Add;

use serde::Serialize;

use crate::bigraph::DegreeMap;
use crate::group::{ElementSet, GroupTable};
use crate::lattice::{Lattice, Subgroup};

/// A fraction kept fully reduced with a positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn zero() -> Self {
        Rational { num: 0, den: 1 }
    }

    pub fn one() -> Self {
        Rational { num: 1, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, other: Rational) -> Rational {
        Rational::new(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Per-subgroup generation probabilities and the four aggregates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbReport {
    /// Probability of generating exactly the subgroup with each id.
    pub per_subgroup: Vec<Rational>,
    /// Probability that a random pair generates the whole group.
    pub phi2_group: Rational,
    pub pr_abelian: Rational,
    pub pr_cyclic: Rational,
    pub pr_nilpotent: Rational,
    pub pr_solvable: Rational,
}

/// Probability that a uniform ordered pair generates exactly the subgroup
/// with id `id`: its degree over the squared group order.
pub fn pr_subgroup(dm: &DegreeMap, id: usize) -> Rational {
    let n = dm.group_order() as i64;
    Rational::new(dm.degree(id) as i64, n * n)
}

/// Probability that a uniform ordered pair of `H` generates `H`: the
/// subgroup's bigraph degree over its own squared order. The ambient group
/// does not matter, which is what makes this well defined.
pub fn phi2(sub: &Subgroup, dm: &DegreeMap) -> Rational {
    let h = sub.order as i64;
    Rational::new(dm.degree(sub.id) as i64, h * h)
}

/// Sums the per-subgroup probabilities over each structural family.
pub fn aggregate(dm: &DegreeMap, lat: &Lattice) -> ProbReport {
    let per_subgroup: Vec<Rational> = (0..lat.len()).map(|id| pr_subgroup(dm, id)).collect();
    let sum_over = |keep: &dyn Fn(&Subgroup) -> bool| {
        lat.iter()
            .filter(|s| keep(s))
            .fold(Rational::zero(), |acc, s| acc + per_subgroup[s.id])
    };
    ProbReport {
        phi2_group: phi2(lat.get(lat.full_id()), dm),
        pr_abelian: sum_over(&|s| s.flags.is_abelian),
        pr_cyclic: sum_over(&|s| s.flags.is_cyclic),
        pr_nilpotent: sum_over(&|s| s.flags.is_nilpotent),
        pr_solvable: sum_over(&|s| s.flags.is_solvable),
        per_subgroup,
    }
}

/// Predicate on the subgroup generated by a pair.
#[derive(Clone, Debug)]
pub enum GenPredicate {
    Cyclic,
    Abelian,
    Nilpotent,
    Solvable,
    /// Generates exactly the given carrier.
    EqualsCarrier(ElementSet),
}

/// Brute-force probability: scans every ordered pair, generates its
/// subgroup, and tests the predicate on the generated carrier directly.
/// Neither the lattice nor the degree map is consulted, so this is an
/// independent check of the aggregate formulas.
pub fn oracle_probability(g: &GroupTable, predicate: &GenPredicate) -> Rational {
    oracle_probability_threaded(g, predicate, 1)
}

/// `oracle_probability` with the pair scan partitioned across workers;
/// per-worker integer counters are merged before the single final division.
pub fn oracle_probability_threaded(
    g: &GroupTable,
    predicate: &GenPredicate,
    threads: usize,
) -> Rational {
    let n = g.order();
    let threads = threads.max(1).min(n);
    let count: u64 = if threads == 1 || n < 32 {
        oracle_scan(g, predicate, 0, 1)
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| scope.spawn(move || oracle_scan(g, predicate, t, threads)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .sum()
        })
    };
    Rational::new(count as i64, (n * n) as i64)
}

fn oracle_scan(g: &GroupTable, predicate: &GenPredicate, offset: usize, stride: usize) -> u64 {
    let n = g.order();
    // Classification happens once per distinct carrier; the cache is local
    // to this scan and holds predicate verdicts, not lattice state.
    let mut verdicts: HashMap<ElementSet, bool> = HashMap::new();
    let mut count = 0u64;
    let mut a = offset;
    while a < n {
        for b in a..n {
            let carrier = g.generate_pair(a as u16, b as u16);
            let holds = *verdicts
                .entry(carrier)
                .or_insert_with_key(|carrier| match predicate {
                    GenPredicate::EqualsCarrier(target) => carrier == target,
                    class => {
                        let flags = g
                            .classify(carrier)
                            .expect("generated carriers are subgroups");
                        match class {
                            GenPredicate::Cyclic => flags.is_cyclic,
                            GenPredicate::Abelian => flags.is_abelian,
                            GenPredicate::Nilpotent => flags.is_nilpotent,
                            GenPredicate::Solvable => flags.is_solvable,
                            GenPredicate::EqualsCarrier(_) => unreachable!(),
                        }
                    }
                });
            if holds {
                count += if a == b { 1 } else { 2 };
            }
        }
        a += stride;
    }
    count
}
