//! Finite groups as multiplication tables over dense element indices, with
//! subset closure and structural classification.
//!
//! Index 0 is always the identity. Tables are immutable once constructed and
//! all operations here are pure reads, safe to share across threads.

mod families;
mod set;

pub use families::{make_group, make_group_with_cap, DEFAULT_ORDER_CAP};
pub use set::ElementSet;

use crate::error::Error;
use crate::Result;

/// Structural classification of a group or subgroup carrier.
///
/// Construction enforces the implication chain
/// cyclic => abelian => nilpotent => solvable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyFlags {
    pub is_cyclic: bool,
    pub is_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
}

impl PropertyFlags {
    pub fn new(is_cyclic: bool, is_abelian: bool, is_nilpotent: bool, is_solvable: bool) -> Self {
        let is_abelian = is_abelian || is_cyclic;
        let is_nilpotent = is_nilpotent || is_abelian;
        let is_solvable = is_solvable || is_nilpotent;
        PropertyFlags {
            is_cyclic,
            is_abelian,
            is_nilpotent,
            is_solvable,
        }
    }

    pub fn all_true() -> Self {
        PropertyFlags::new(true, true, true, true)
    }
}

/// A finite group of order `n` as an `n x n` multiplication table of element
/// indices, with inverses, display labels, and the originating description
/// string.
#[derive(Clone, Debug)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
    spec: String,
}

/// Number of random triples used for the associativity spot check on orders
/// past the exhaustive threshold.
const ASSOC_SAMPLES: usize = 10_000;
/// Orders up to this bound get the full O(n^3) associativity check.
const ASSOC_EXHAUSTIVE_MAX: usize = 64;

impl GroupTable {
    /// Builds and validates a table. `mul` is row-major: `mul[x*n + y] = xy`.
    pub(crate) fn from_table(spec: String, labels: Vec<String>, mul: Vec<u16>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Internal("empty group table".into()));
        }
        if mul.len() != n * n {
            return Err(Error::Internal(
                "multiplication table has wrong size".into(),
            ));
        }
        if mul.iter().any(|&e| (e as usize) >= n) {
            return Err(Error::Internal("multiplication table is not closed".into()));
        }
        for x in 0..n {
            if mul[x] as usize != x || mul[x * n] as usize != x {
                return Err(Error::Internal(
                    "index 0 is not a two-sided identity".into(),
                ));
            }
        }
        let mut inv = vec![u16::MAX; n];
        for x in 0..n {
            let mut found = false;
            for y in 0..n {
                if mul[x * n + y] == 0 {
                    if mul[y * n + x] != 0 {
                        return Err(Error::Internal("one-sided inverse found".into()));
                    }
                    inv[x] = y as u16;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(Error::Internal(format!("element {x} has no inverse")));
            }
        }
        let table = GroupTable {
            order: n,
            mul,
            inv,
            labels,
            spec,
        };
        table.check_associativity()?;
        Ok(table)
    }

    /// Exhaustive associativity for small orders, sampled above; constructors
    /// are generative, so this is a guard rather than a proof.
    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        if n <= ASSOC_EXHAUSTIVE_MAX {
            for x in 0..n as u16 {
                for y in 0..n as u16 {
                    let xy = self.mul(x, y);
                    for z in 0..n as u16 {
                        if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                            return Err(Error::Internal(format!(
                                "associativity fails at ({x}, {y}, {z})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9E37_79B9_7F4A_7C15u64;
            let mut next = move || {
                // splitmix64, fixed seed: the check must be reproducible
                state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
                let mut z = state;
                z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
                z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
                z ^ (z >> 31)
            };
            for _ in 0..ASSOC_SAMPLES {
                let x = (next() % n as u64) as u16;
                let y = (next() % n as u64) as u16;
                let z = (next() % n as u64) as u16;
                if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                    return Err(Error::Internal(format!(
                        "associativity fails at ({x}, {y}, {z})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element index; always 0 by construction.
    pub fn identity(&self) -> u16 {
        0
    }

    #[inline]
    pub fn mul(&self, x: u16, y: u16) -> u16 {
        self.mul[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: u16) -> u16 {
        self.inv[x as usize]
    }

    pub fn label(&self, x: u16) -> &str {
        &self.labels[x as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The description string this table was built from.
    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.order as u16
    }

    /// Least `k >= 1` with `x^k = 1`; always divides the group order.
    pub fn element_order(&self, x: u16) -> usize {
        let mut power = x;
        let mut k = 1;
        while power != 0 {
            power = self.mul(power, x);
            k += 1;
        }
        k
    }

    /// Smallest subgroup containing `seeds`; the identity is always included,
    /// so the empty seed set yields the trivial subgroup.
    pub fn generate(&self, seeds: &ElementSet) -> ElementSet {
        self.generate_from(&seeds.to_indices())
    }

    /// `generate` for a seed slice, avoiding the set round trip on hot paths.
    pub fn generate_from(&self, seeds: &[u16]) -> ElementSet {
        let mut set = ElementSet::empty(self.order);
        let mut members: Vec<u16> = Vec::with_capacity(seeds.len() + 1);
        set.insert(0);
        members.push(0);
        for &s in seeds {
            if set.insert(s) {
                members.push(s);
            }
        }
        // Worklist closure: when members[i] is processed it is multiplied, in
        // both orders, with every element of no-larger position, so each pair
        // is covered when its later member is processed. Closure under
        // multiplication suffices for inverses in a finite group.
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for j in 0..=i {
                let y = members[j];
                let p = self.mul(x, y);
                if set.insert(p) {
                    members.push(p);
                }
                let q = self.mul(y, x);
                if set.insert(q) {
                    members.push(q);
                }
            }
            i += 1;
        }
        set
    }

    /// `<a, b>` as a carrier set.
    pub fn generate_pair(&self, a: u16, b: u16) -> ElementSet {
        self.generate_from(&[a, b])
    }

    /// True when `carrier` contains the identity and is closed under
    /// multiplication and inverses.
    pub fn is_subgroup(&self, carrier: &ElementSet) -> bool {
        if !carrier.contains(0) {
            return false;
        }
        let members = carrier.to_indices();
        for &x in &members {
            if !carrier.contains(self.inv(x)) {
                return false;
            }
            for &y in &members {
                if !carrier.contains(self.mul(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Classifies a subgroup carrier. Cyclicity looks for an element of full
    /// order, solvability follows the derived series down to the trivial
    /// subgroup, and nilpotency checks that each Sylow subgroup is unique:
    /// the Sylow p-subgroup of `H` is unique exactly when the p-elements of
    /// `H` number `p^a`, the full p-part of `|H|`.
    pub fn classify(&self, carrier: &ElementSet) -> Result<PropertyFlags> {
        if !self.is_subgroup(carrier) {
            return Err(Error::NotASubgroup);
        }
        let members = carrier.to_indices();
        let h = members.len();

        let orders: Vec<usize> = members.iter().map(|&x| self.element_order(x)).collect();
        let is_cyclic = orders.contains(&h);

        let is_abelian = members.iter().enumerate().all(|(i, &x)| {
            members[i + 1..]
                .iter()
                .all(|&y| self.mul(x, y) == self.mul(y, x))
        });

        let is_nilpotent = if is_abelian {
            true
        } else {
            factorize(h as u64).into_iter().all(|(p, a)| {
                let p_part = (p as usize).pow(a);
                let p_elements = orders.iter().filter(|&&k| p_part % k == 0).count();
                p_elements == p_part
            })
        };

        let is_solvable = is_nilpotent || self.is_solvable(carrier);

        Ok(PropertyFlags::new(
            is_cyclic,
            is_abelian,
            is_nilpotent,
            is_solvable,
        ))
    }

    fn is_solvable(&self, carrier: &ElementSet) -> bool {
        let mut current = carrier.clone();
        loop {
            if current.len() == 1 {
                return true;
            }
            let next = self.derived_subgroup(&current);
            if next == current {
                return false;
            }
            current = next;
        }
    }

    /// Subgroup generated by all commutators `x^-1 y^-1 x y` of the carrier.
    fn derived_subgroup(&self, carrier: &ElementSet) -> ElementSet {
        let members = carrier.to_indices();
        let mut seeds = ElementSet::empty(self.order);
        for &x in &members {
            let xi = self.inv(x);
            for &y in &members {
                let c = self.mul(self.mul(self.inv(y), xi), self.mul(y, x));
                seeds.insert(c);
            }
        }
        self.generate(&seeds)
    }

    /// Extracts a subgroup as a standalone group with relabeled indices.
    /// Member k of the carrier (in ascending index order) becomes index k;
    /// the identity stays at 0.
    pub fn subgroup_table(&self, carrier: &ElementSet) -> Result<GroupTable> {
        if !self.is_subgroup(carrier) {
            return Err(Error::NotASubgroup);
        }
        let members = carrier.to_indices();
        let m = members.len();
        let mut position = vec![u16::MAX; self.order];
        for (k, &x) in members.iter().enumerate() {
            position[x as usize] = k as u16;
        }
        let mut mul = vec![0u16; m * m];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                mul[i * m + j] = position[self.mul(x, y) as usize];
            }
        }
        let labels = members
            .iter()
            .map(|&x| self.labels[x as usize].clone())
            .collect();
        GroupTable::from_table(format!("{}|sub{}", self.spec, m), labels, mul)
    }
}

/// Prime factorization by trial division: `(p, multiplicity)` pairs.
pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            factors.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}
