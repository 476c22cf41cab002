//! Counterexample-evidence search over the unresolved shape families.
//!
//! For each enumerated instance the driver records the formula bound, the
//! exact search result under that bound as a depth cap, the known trajectory
//! length (when the family has one), and whether a girth-achieving cycle
//! walks the whole graph. A full-usage instance outside the proven family
//! set is a candidate counterexample to the conjectured equality of the
//! trajectory sets.

use serde::{Deserialize, Serialize};
use std::io::Write;
use std::time::{Duration, Instant};

use crate::error::Result;
use crate::families::{enumerate_instances, make, FamilySpec, ShapeKind};
use crate::girth_theory::{self, ShapeTag};
use crate::star_search::{self, GirthValue, SearchOptions};
use crate::trajectories;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchRecord {
    pub spec: String,
    pub n: usize,
    pub formula_bound: usize,
    /// Exact girth when the search completed.
    pub search_result: Option<usize>,
    /// Floor from a truncated search: no cycle strictly below this.
    pub no_cycle_below: Option<usize>,
    pub trajectory_length: Option<usize>,
    /// A girth-achieving cycle uses every vertex and edge of the graph.
    pub full_usage: Option<bool>,
    pub in_g_tilde: bool,
    /// Full usage outside the proven set: evidence against the conjectured
    /// equality.
    pub counterexample_candidate: bool,
    pub budget_exceeded: bool,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub shapes: Vec<ShapeKind>,
    pub vertex_budget: usize,
    pub time_budget: Option<Duration>,
    pub state_cap: Option<usize>,
    /// Check full usage over every root's candidate cycles, not only the
    /// first winning witness.
    pub exhaustive_cycles: bool,
}

pub struct SearchOutcome {
    pub records: Vec<SearchRecord>,
    pub out_of_time: bool,
}

/// Run one instance.
pub fn search_instance(
    spec: &FamilySpec,
    state_cap: Option<usize>,
    exhaustive_cycles: bool,
) -> Result<SearchRecord> {
    let (graph, _) = make(spec)?;
    let n = graph.n();
    let formula_bound = girth_theory::upper_bound_hint(&graph);
    let classification = girth_theory::classify(&graph)?;
    let in_g_tilde = classification.in_g_tilde;

    let trajectory_length = trajectories::family_sequence(spec).ok().map(|seq| {
        let rep = trajectories::simulate(&graph, &seq).expect("family trajectory is walkable");
        debug_assert!(rep.is_closed && rep.is_simple);
        rep.length
    });

    let opts = SearchOptions { depth_cap: None, state_cap };
    let report = star_search::girth_star(&graph, &opts)?;
    let (search_result, no_cycle_below, budget_exceeded) = match report.value {
        GirthValue::Finite(v) => (Some(v), None, false),
        GirthValue::Infinite => (None, None, false),
        GirthValue::UnknownAbove { floor, .. } => (None, Some(floor), true),
    };

    let full_usage = match (&report.witness, search_result) {
        (Some(w), Some(len)) => {
            let mut full = trajectories::simulate(&graph, w)
                .map(|r| r.is_simple && r.length == len && r.covers(&graph))
                .unwrap_or(false);
            if !full && exhaustive_cycles {
                full = exhaustive_full_usage(&graph, len);
            }
            Some(full)
        }
        _ => None,
    };

    let counterexample_candidate = full_usage == Some(true)
        && !in_g_tilde
        && matches!(
            classification.shape,
            ShapeTag::Theta4 | ShapeTag::Theta5 | ShapeTag::K4Subdivision | ShapeTag::K33Subdivision
        );

    Ok(SearchRecord {
        spec: spec.to_spec_string(),
        n,
        formula_bound,
        search_result,
        no_cycle_below,
        trajectory_length,
        full_usage,
        in_g_tilde,
        counterexample_candidate,
        budget_exceeded,
    })
}

/// Test every girth-length candidate cycle through every root for full
/// usage. Kept behind a flag: this multiplies root work by the candidate
/// count.
fn exhaustive_full_usage(graph: &crate::graph::Graph, len: usize) -> bool {
    (0..graph.n()).any(|root| {
        star_search::closed_walks_through_root(graph, root, len)
            .map(|walks| {
                walks.iter().any(|w| {
                    trajectories::simulate(graph, w)
                        .map(|r| r.is_simple && r.length == len && r.covers(graph))
                        .unwrap_or(false)
                })
            })
            .unwrap_or(false)
    })
}

/// Enumerate instances for the configured shapes and run each, appending
/// NDJSON records to `log` and skipping specs already present there.
pub fn run_search(
    config: &SearchConfig,
    done: &std::collections::HashSet<String>,
    mut log: Option<&mut dyn Write>,
) -> Result<SearchOutcome> {
    let start = Instant::now();
    let mut specs: Vec<FamilySpec> = Vec::new();
    for &shape in &config.shapes {
        specs.extend(enumerate_instances(shape, config.vertex_budget));
    }
    specs.sort_by_key(|s| (s.vertex_count(), s.to_spec_string()));
    specs.dedup();

    let mut records = Vec::new();
    let mut out_of_time = false;
    for spec in &specs {
        if done.contains(&spec.to_spec_string()) {
            continue;
        }
        if let Some(budget) = config.time_budget {
            if start.elapsed() > budget {
                out_of_time = true;
                break;
            }
        }
        let record = search_instance(spec, config.state_cap, config.exhaustive_cycles)?;
        if let Some(w) = log.as_deref_mut() {
            writeln!(w, "{}", serde_json::to_string(&record)?)?;
        }
        records.push(record);
    }
    Ok(SearchOutcome { records, out_of_time })
}

/// Spec keys already present in an NDJSON log.
pub fn load_done_keys(text: &str) -> std::collections::HashSet<String> {
    text.lines()
        .filter_map(|line| serde_json::from_str::<SearchRecord>(line).ok())
        .map(|r| r.spec)
        .collect()
}
