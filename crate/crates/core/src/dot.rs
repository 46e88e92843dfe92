//! DOT export of the generation bigraph.
//!
//! `full` mode reconstructs every pair vertex and its single edge on demand;
//! `collapsed` mode emits one node per subgroup annotated with its leaf
//! count. Output ordering is fixed, so identical inputs yield identical
//! bytes.

use std::fmt::Write as _;

use crate::bigraph::DegreeMap;
use crate::error::Error;
use crate::group::GroupTable;
use crate::lattice::Lattice;
use crate::Result;

/// Full renderings are refused past this many pair vertices.
pub const FULL_PAIR_LIMIT: u64 = 10_000;

/// Renders every pair vertex `(x,y)` and subgroup vertex `H<id>|<order>`,
/// with one edge per pair. Refuses groups whose pair side exceeds
/// [`FULL_PAIR_LIMIT`].
pub fn dot_full(g: &GroupTable, lat: &Lattice) -> Result<String> {
    let n = g.order() as u64;
    if n * n > FULL_PAIR_LIMIT {
        return Err(Error::TooLarge {
            pairs: n * n,
            limit: FULL_PAIR_LIMIT,
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "graph bigraph {{");
    let _ = writeln!(out, "  // generation bigraph of {}", g.spec());
    for sub in lat.iter() {
        let _ = writeln!(
            out,
            "  h{} [shape=box,label=\"H{}|{}\"];",
            sub.id, sub.id, sub.order
        );
    }
    let n = g.order();
    for a in 0..n as u16 {
        for b in 0..n as u16 {
            let idx = a as usize * n + b as usize;
            let _ = writeln!(
                out,
                "  p{} [label=\"({},{})\"];",
                idx,
                g.label(a),
                g.label(b)
            );
        }
    }
    for a in 0..n as u16 {
        for b in 0..n as u16 {
            let idx = a as usize * n + b as usize;
            let carrier = g.generate_pair(a, b);
            let id = lat
                .id_of(&carrier)
                .ok_or_else(|| Error::Internal("pair generated an unknown carrier".into()))?;
            let _ = writeln!(out, "  p{idx} -- h{id};");
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// One node per star, labeled `H<id>|<order>|<leaf count>`.
pub fn dot_collapsed(g: &GroupTable, lat: &Lattice, dm: &DegreeMap) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph bigraph_collapsed {{");
    let _ = writeln!(
        out,
        "  // star decomposition of the generation bigraph of {}",
        g.spec()
    );
    for sub in lat.iter() {
        let _ = writeln!(
            out,
            "  h{} [shape=box,label=\"H{}|{}|{}\"];",
            sub.id,
            sub.id,
            sub.order,
            dm.degree(sub.id)
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::build_degree_map;
    use crate::group::make_group;
    use crate::lattice::enumerate_subgroups;

    #[test]
    fn trivial_group_full_dot() {
        let g = make_group("Z:1").unwrap();
        let lat = enumerate_subgroups(&g);
        let dot = dot_full(&g, &lat).unwrap();
        assert_eq!(
            dot.matches("[label=").count() + dot.matches("[shape=box,label=").count(),
            2
        );
        assert_eq!(dot.matches(" -- ").count(), 1);
    }

    #[test]
    fn collapsed_s3_counts() {
        let g = make_group("S:3").unwrap();
        let lat = enumerate_subgroups(&g);
        let dm = build_degree_map(&g, &lat).unwrap();
        let dot = dot_collapsed(&g, &lat, &dm);
        for want in ["|1|1\"", "|2|3\"", "|3|8\"", "|6|18\""] {
            assert!(dot.contains(want), "missing {want} in\n{dot}");
        }
        assert_eq!(dot.matches("shape=box").count(), 6);
    }

    #[test]
    fn collapsed_d8_counts() {
        let g = make_group("D:8").unwrap();
        let lat = enumerate_subgroups(&g);
        let dm = build_degree_map(&g, &lat).unwrap();
        let dot = dot_collapsed(&g, &lat, &dm);
        let mut counts: Vec<u64> = lat.iter().map(|s| dm.degree(s.id)).collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![1, 3, 3, 3, 3, 3, 6, 6, 12, 24]);
        assert_eq!(dot.matches("shape=box").count(), 10);
    }

    #[test]
    fn full_mode_is_refused_for_large_groups() {
        let g = make_group("D:102").unwrap();
        let lat = enumerate_subgroups(&g);
        assert!(matches!(
            dot_full(&g, &lat),
            Err(Error::TooLarge {
                pairs: 10404,
                limit: FULL_PAIR_LIMIT
            })
        ));
    }

    #[test]
    fn deterministic_output() {
        let g = make_group("S:3").unwrap();
        let lat = enumerate_subgroups(&g);
        assert_eq!(dot_full(&g, &lat).unwrap(), dot_full(&g, &lat).unwrap());
    }
}
