//! Whole-group analysis: runs the full pipeline and assembles the JSON
//! report. Field order is fixed by declaration order and every collection is
//! pre-sorted, so serialization is byte-for-byte deterministic.

use serde::Serialize;

use crate::bigraph::{
    build_degree_map_threaded, compute_params, star_forest, DegreeMap, ParamReport, RankBucket,
    StarForest,
};
use crate::error::Error;
use crate::gengraph::gen_graph_edges;
use crate::group::{make_group_with_cap, GroupTable};
use crate::lattice::{enumerate_subgroups, Lattice};
use crate::prob::{aggregate, ProbReport, Rational};
use crate::topo::{indices_closed_form, IndexReport};
use crate::Result;

/// Everything the pipeline produces for one group, in typed form.
pub struct Analysis {
    pub group: GroupTable,
    pub lattice: Lattice,
    pub degrees: DegreeMap,
    pub forest: StarForest,
    pub params: ParamReport,
    pub probs: ProbReport,
    pub indices: IndexReport,
}

/// Runs construction, lattice enumeration, the pair scan and all derived
/// computations for one group description.
pub fn analyze_group(spec: &str, cap: u64, threads: usize) -> Result<Analysis> {
    let group = make_group_with_cap(spec, cap)?;
    let lattice = enumerate_subgroups(&group);
    let degrees = build_degree_map_threaded(&group, &lattice, threads)?;
    let forest = star_forest(&degrees);
    let params = compute_params(&degrees, &lattice);
    let probs = aggregate(&degrees, &lattice);
    let indices = indices_closed_form(&degrees);
    Ok(Analysis {
        group,
        lattice,
        degrees,
        forest,
        params,
        probs,
        indices,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupRecord {
    pub id: usize,
    pub order: usize,
    pub cyclic: bool,
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub degree: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexSection {
    pub m1: u64,
    pub m2: u64,
    pub randic: String,
    pub abc: String,
    pub ga: String,
    pub harmonic: String,
    pub sci: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GenGraphRecord {
    pub id: usize,
    pub edge_count: u64,
    pub diagonal_generators: u64,
}

/// The `analyze` command's JSON document.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    pub rank_bucket: RankBucket,
    pub edges: u64,
    pub subgroups: Vec<SubgroupRecord>,
    pub stars: Vec<u64>,
    pub isolated: usize,
    pub parameters: ParamReport,
    pub probabilities: ProbReport,
    pub topological_indices: IndexSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gen_graph: Option<Vec<GenGraphRecord>>,
}

/// Renders a nonnegative float with the given number of significant digits,
/// in plain decimal notation.
pub fn format_significant(v: f64, digits: u32) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = digits as i32 - 1 - magnitude;
    if decimals >= 0 {
        format!("{:.*}", decimals as usize, v)
    } else {
        let scale = 10f64.powi(-decimals);
        format!("{:.0}", (v / scale).round() * scale)
    }
}

const FLOAT_DIGITS: u32 = 12;

fn index_section(indices: &IndexReport) -> IndexSection {
    IndexSection {
        m1: indices.m1,
        m2: indices.m2,
        randic: format_significant(indices.randic, FLOAT_DIGITS),
        abc: format_significant(indices.abc, FLOAT_DIGITS),
        ga: format_significant(indices.ga, FLOAT_DIGITS),
        harmonic: format_significant(indices.harmonic, FLOAT_DIGITS),
        sci: format_significant(indices.sci, FLOAT_DIGITS),
    }
}

/// Assembles the JSON report, re-checking the cross-module consistency laws
/// (degree sum, probability normalization) so that a pipeline bug surfaces
/// as an internal error rather than a wrong report.
pub fn analysis_report(analysis: &Analysis, with_gen_graph: bool) -> Result<AnalysisReport> {
    let n = analysis.group.order() as u64;
    if analysis.forest.total_leaves() != n * n {
        return Err(Error::Internal(format!(
            "star leaves sum to {}, expected {}",
            analysis.forest.total_leaves(),
            n * n
        )));
    }
    let sum = analysis
        .probs
        .per_subgroup
        .iter()
        .fold(Rational::zero(), |acc, &r| acc + r);
    if sum != Rational::one() {
        return Err(Error::Internal(format!(
            "subgroup probabilities sum to {sum}, expected 1/1"
        )));
    }

    let subgroups = analysis
        .lattice
        .iter()
        .map(|s| SubgroupRecord {
            id: s.id,
            order: s.order,
            cyclic: s.flags.is_cyclic,
            abelian: s.flags.is_abelian,
            nilpotent: s.flags.is_nilpotent,
            solvable: s.flags.is_solvable,
            degree: analysis.degrees.degree(s.id),
        })
        .collect();

    let gen_graph = with_gen_graph.then(|| {
        analysis
            .lattice
            .iter()
            .map(|s| {
                let summary = gen_graph_edges(&analysis.group, s);
                GenGraphRecord {
                    id: s.id,
                    edge_count: summary.edge_count,
                    diagonal_generators: summary.diagonal_generators,
                }
            })
            .collect()
    });

    Ok(AnalysisReport {
        schema: 1,
        group: analysis.group.spec().to_string(),
        order: analysis.group.order(),
        rank_bucket: analysis.degrees.rank_bucket(),
        edges: n * n,
        subgroups,
        stars: analysis.forest.stars().to_vec(),
        isolated: analysis.forest.isolated_count(),
        parameters: analysis.params.clone(),
        probabilities: analysis.probs.clone(),
        topological_indices: index_section(&analysis.indices),
        gen_graph,
    })
}

/// One-call analysis returning the JSON-ready report.
pub fn analyze(
    spec: &str,
    cap: u64,
    threads: usize,
    with_gen_graph: bool,
) -> Result<AnalysisReport> {
    let analysis = analyze_group(spec, cap, threads)?;
    analysis_report(&analysis, with_gen_graph)
}

/// Serializes a report as pretty JSON with a trailing newline.
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serialization cannot fail");
    text.push('\n');
    text
}
