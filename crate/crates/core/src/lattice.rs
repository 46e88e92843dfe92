//! Complete subgroup lattice of a finite group, with per-subgroup structural
//! flags and a carrier-to-id index.

use std::collections::HashMap;

use crate::group::{ElementSet, GroupTable, PropertyFlags};

/// One subgroup: dense id, carrier bitset, order and classification flags.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub id: usize,
    pub carrier: ElementSet,
    pub order: usize,
    pub flags: PropertyFlags,
}

/// All subgroups of a group, sorted by (order, carrier bits) so that the
/// trivial subgroup is id 0 and the whole group is the last id. The ordering
/// is deterministic, which keeps reports and golden tests stable.
#[derive(Clone, Debug)]
pub struct Lattice {
    subgroups: Vec<Subgroup>,
    index: HashMap<ElementSet, usize>,
}

/// Sizes of the cyclic/abelian/nilpotent/solvable families and the total.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyCounts {
    pub cyclic: usize,
    pub abelian: usize,
    pub nilpotent: usize,
    pub solvable: usize,
    pub total: usize,
}

impl Lattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, id: usize) -> &Subgroup {
        &self.subgroups[id]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups.iter()
    }

    /// Id of a carrier, if it is a subgroup of the lattice.
    pub fn id_of(&self, carrier: &ElementSet) -> Option<usize> {
        self.index.get(carrier).copied()
    }

    /// Id of the trivial subgroup; 0 by the sort order.
    pub fn trivial_id(&self) -> usize {
        0
    }

    /// Id of the whole group; the last id by the sort order.
    pub fn full_id(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn family_counts(&self) -> FamilyCounts {
        let mut counts = FamilyCounts {
            cyclic: 0,
            abelian: 0,
            nilpotent: 0,
            solvable: 0,
            total: self.subgroups.len(),
        };
        for sub in &self.subgroups {
            counts.cyclic += sub.flags.is_cyclic as usize;
            counts.abelian += sub.flags.is_abelian as usize;
            counts.nilpotent += sub.flags.is_nilpotent as usize;
            counts.solvable += sub.flags.is_solvable as usize;
        }
        counts
    }
}

/// Enumerates every subgroup of `g` exactly once.
///
/// The worklist starts from the trivial subgroup and all cyclic subgroups,
/// then extends each known subgroup `H` by each element outside it via
/// `<H, x>` until no new carrier appears. Every subgroup `K` arises as an
/// ascending chain of such extensions from one of its cyclic subgroups, so
/// the fixpoint is complete.
pub fn enumerate_subgroups(g: &GroupTable) -> Lattice {
    let mut carriers: Vec<ElementSet> = Vec::new();
    let mut seen: HashMap<ElementSet, ()> = HashMap::new();
    let mut push = |carrier: ElementSet, carriers: &mut Vec<ElementSet>| {
        if seen.insert(carrier.clone(), ()).is_none() {
            carriers.push(carrier);
        }
    };

    push(g.generate_from(&[]), &mut carriers);
    for x in g.elements() {
        push(g.generate_from(&[x]), &mut carriers);
    }

    let mut i = 0;
    while i < carriers.len() {
        let members = carriers[i].to_indices();
        let current = carriers[i].clone();
        for x in g.elements() {
            if current.contains(x) {
                continue;
            }
            let mut seeds = members.clone();
            seeds.push(x);
            push(g.generate_from(&seeds), &mut carriers);
        }
        i += 1;
    }

    carriers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp_bits(b)));

    let subgroups: Vec<Subgroup> = carriers
        .into_iter()
        .enumerate()
        .map(|(id, carrier)| {
            let flags = g
                .classify(&carrier)
                .expect("enumerated carriers are closed");
            Subgroup {
                id,
                order: carrier.len(),
                carrier,
                flags,
            }
        })
        .collect();
    let index = subgroups
        .iter()
        .map(|s| (s.carrier.clone(), s.id))
        .collect();
    Lattice { subgroups, index }
}
