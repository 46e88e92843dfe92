#![forbid(unsafe_code)]

//! Generation bigraphs of finite groups.
//!
//! For a finite group `G`, the generation bigraph has one vertex per ordered
//! pair `(a, b)` of group elements and one vertex per subgroup `H`, with an
//! edge between `(a, b)` and `H` exactly when `<a, b> = H`. Every pair vertex
//! has degree one, so the graph is a disjoint union of stars, one per
//! subgroup; the multiset of star leaf counts determines the graph up to
//! isomorphism.
//!
//! The crate builds groups from family descriptions (`Z:n`, `D:2n`, `Q:4n`,
//! `S:n`, `A:n` and direct products), enumerates their subgroup lattices,
//! computes the bigraph degree map and its star-forest decomposition, and
//! derives from it:
//!
//! - classical graph parameters (independence, domination, matching, clique,
//!   vertex cover, irredundance, bondage, girth, diameter, domatic number),
//! - exact generation probabilities (probability that a random pair generates
//!   a given subgroup, or a cyclic/abelian/nilpotent/solvable one),
//! - degree-based topological indices (Zagreb, Randic, atom-bond
//!   connectivity, geometric-arithmetic, harmonic, sum-connectivity),
//! - closed-form star forests for dihedral, dicyclic, cyclic and
//!   elementary-abelian families, checked against brute force.
//!
//! ```
//! use bigen::{build_degree_map, enumerate_subgroups, make_group, star_forest};
//!
//! let g = make_group("S:3")?;
//! let lattice = enumerate_subgroups(&g);
//! let degrees = build_degree_map(&g, &lattice)?;
//! assert_eq!(star_forest(&degrees).stars(), &[1, 3, 3, 3, 8, 18]);
//! # Ok::<(), bigen::Error>(())
//! ```

pub mod bigraph;
pub mod dot;
pub mod error;
pub mod gengraph;
pub mod group;
pub mod lattice;
pub mod prob;
pub mod report;
pub mod table;
pub mod topo;
pub mod verify;

pub use bigraph::{
    build_degree_map, build_degree_map_threaded, closed_form_forest, compute_params, star_forest,
    DegreeMap, Diameter, Family, ParamReport, RankBucket, StarForest,
};
pub use error::Error;
pub use gengraph::{gen_graph_edges, totient, GenGraphSummary};
pub use group::{
    make_group, make_group_with_cap, ElementSet, GroupTable, PropertyFlags, DEFAULT_ORDER_CAP,
};
pub use lattice::{enumerate_subgroups, FamilyCounts, Lattice, Subgroup};
pub use prob::{
    aggregate, oracle_probability, phi2, pr_subgroup, GenPredicate, ProbReport, Rational,
};
pub use report::{analyze, analyze_group, Analysis, AnalysisReport};
pub use topo::{indices_closed_form, indices_direct, IndexReport};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
