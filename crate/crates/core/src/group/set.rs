//! Fixed-universe bitset over element indices, the carrier representation
//! for subsets and subgroups of a group.

use std::cmp::Ordering;
use std::fmt;

/// A subset of `{0, .., universe-1}` as a bit vector with a cached
/// population count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: u16,
    count: u16,
    bits: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        let words = universe.div_ceil(64).max(1);
        ElementSet {
            universe: universe as u16,
            count: 0,
            bits: vec![0; words],
        }
    }

    pub fn from_indices(universe: usize, indices: &[u16]) -> Self {
        let mut set = ElementSet::empty(universe);
        for &x in indices {
            set.insert(x);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    /// Number of members (the cached population count).
    pub fn len(&self) -> usize {
        self.count as usize
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    #[inline]
    pub fn contains(&self, x: u16) -> bool {
        debug_assert!(x < self.universe);
        self.bits[(x >> 6) as usize] >> (x & 63) & 1 == 1
    }

    /// Inserts `x`; returns true if it was not already present.
    #[inline]
    pub fn insert(&mut self, x: u16) -> bool {
        debug_assert!(x < self.universe);
        let word = &mut self.bits[(x >> 6) as usize];
        let mask = 1u64 << (x & 63);
        if *word & mask == 0 {
            *word |= mask;
            self.count += 1;
            true
        } else {
            false
        }
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = u16> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some((w as u32 * 64 + tz) as u16)
                }
            })
        })
    }

    pub fn to_indices(&self) -> Vec<u16> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.universe, other.universe);
        let bits: Vec<u64> = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & b)
            .collect();
        let count = bits.iter().map(|w| w.count_ones() as u16).sum();
        ElementSet {
            universe: self.universe,
            count,
            bits,
        }
    }

    /// Total order on carriers of one universe: the bit vector read as one
    /// big unsigned integer. Used as the canonical dedup/sort key.
    pub fn cmp_bits(&self, other: &ElementSet) -> Ordering {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.bits.iter().rev().zip(other.bits.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
