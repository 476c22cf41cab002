//! Connectivity theorems as executable predicates, plus sweep harnesses that
//! confront each predicate with the brute-force oracle.
//!
//! The central criterion: the complement of `Y` is a forest whose tree sizes
//! are jointly coprime. For `X = Cycle_n` this characterizes connectivity of
//! `FS(X, Y)` exactly; for arbitrary biconnected `X` it is sufficient.

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{self, Canonicalizer, PairIndexer};
use crate::error::{Error, Result};
use crate::families::{make, FamilySpec};
use crate::fs_explicit;
use crate::graph::Graph;

/// Rule tags naming the statement a verdict applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectivityRule {
    /// Cycle host: connected iff complement forest with coprime tree sizes.
    CycleForestGcd,
    /// Biconnected host: the forest-gcd condition is sufficient.
    BiconnectedForestGcd,
    /// Component classification for star hosts on biconnected graphs.
    StarClassification,
    /// Cycle against a star: components of size n(n-1).
    CycleStarComponents,
    /// Direct n = 3 case analysis.
    TriangleTable,
    NoPrediction,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityVerdict {
    pub applicable: bool,
    pub predicted_connected: Option<bool>,
    pub predicted_component_count: Option<u64>,
    pub rule: ConnectivityRule,
}

impl ConnectivityVerdict {
    fn none() -> Self {
        ConnectivityVerdict {
            applicable: false,
            predicted_connected: None,
            predicted_component_count: None,
            rule: ConnectivityRule::NoPrediction,
        }
    }
}

/// Does the complement-forest-gcd condition hold for `y`?
pub fn forest_gcd_condition(y: &Graph) -> bool {
    let profile = y.complement().forest_profile();
    profile.is_forest && profile.gcd_of_sizes == Some(1)
}

/// Connectivity of `FS(Cycle_n, y)`: an exact biconditional.
pub fn predict_cycle_connectivity(y: &Graph) -> ConnectivityVerdict {
    ConnectivityVerdict {
        applicable: true,
        predicted_connected: Some(forest_gcd_condition(y)),
        predicted_component_count: None,
        rule: ConnectivityRule::CycleForestGcd,
    }
}

/// Connectivity of `FS(x, y)` for biconnected `x`.
///
/// When the condition on `y` holds, the answer is connected. When it fails,
/// only a cycle host supports the converse; for any other biconnected host
/// the statement is one-directional and no prediction is made.
pub fn predict_biconnected_connectivity(x: &Graph, y: &Graph) -> ConnectivityVerdict {
    if !x.is_biconnected() {
        return ConnectivityVerdict::none();
    }
    if forest_gcd_condition(y) {
        return ConnectivityVerdict {
            applicable: true,
            predicted_connected: Some(true),
            predicted_component_count: None,
            rule: ConnectivityRule::BiconnectedForestGcd,
        };
    }
    if is_cycle_graph(x) {
        return ConnectivityVerdict {
            applicable: true,
            predicted_connected: Some(false),
            predicted_component_count: None,
            rule: ConnectivityRule::CycleForestGcd,
        };
    }
    ConnectivityVerdict::none()
}

fn is_cycle_graph(x: &Graph) -> bool {
    x.n() >= 3 && x.is_connected() && (0..x.n()).all(|v| x.degree(v) == 2)
}

fn is_theta0(x: &Graph) -> bool {
    if x.n() != 7 || x.edge_count() != 8 {
        return false;
    }
    match x.topological_core() {
        Ok(core) => {
            let mut labels: Vec<usize> = core.edges.iter().map(|&(_, _, l)| l).collect();
            labels.sort_unstable();
            core.vertex_count == 2 && core.loop_count() == 0 && labels == vec![2, 3, 3]
        }
        Err(_) => false,
    }
}

/// Component count of `FS(x, Star_n)` for biconnected `x`: `(n-2)!` for a
/// cycle, 6 for the exceptional 7-vertex one-ear graph, otherwise 2 if
/// bipartite and 1 if not.
pub fn predict_star_components(x: &Graph) -> Result<ConnectivityVerdict> {
    if !x.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let n = x.n();
    let (count, rule) = if is_theta0(x) {
        (6, ConnectivityRule::StarClassification)
    } else if is_cycle_graph(x) {
        // Components are cycles of length n(n-1): n!/(n(n-1)) = (n-2)!.
        let c: u64 = (1..=n as u64 - 2).product();
        (c, ConnectivityRule::CycleStarComponents)
    } else if x.is_bipartite() {
        (2, ConnectivityRule::StarClassification)
    } else {
        (1, ConnectivityRule::StarClassification)
    };
    Ok(ConnectivityVerdict {
        applicable: true,
        predicted_connected: Some(count == 1),
        predicted_component_count: Some(count),
        rule,
    })
}

/// A predicate/oracle disagreement found by a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub check: String,
    pub x: String,
    pub y: String,
    pub predicted: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepReport {
    pub instances: u64,
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn merge(&mut self, other: SweepReport) {
        self.instances += other.instances;
        self.mismatches.extend(other.mismatches);
    }

    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    /// Enumerate the full labeled space even where class representatives
    /// suffice (slow at n >= 6).
    pub exhaustive: bool,
    /// Sample size for biconnected hosts at n = 7.
    pub sample: usize,
    pub seed: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { exhaustive: false, sample: 50, seed: 0xF5_1AB }
    }
}

/// All labeled graphs `y` on `n` vertices whose complement is a forest,
/// given as complement masks (forest masks).
fn forest_masks(idx: &PairIndexer) -> Vec<u64> {
    (0..(1u64 << idx.bits())).filter(|&m| idx.is_forest(m)).collect()
}

fn check_range(n: usize) -> Result<()> {
    if (3..=7).contains(&n) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("connectivity sweep needs 3 <= n <= 7, got {n}")))
    }
}

/// Biconnected host graphs at size `n`: labeled-exhaustive for `n <= 5` or
/// with `exhaustive`, isomorphism-class representatives at `n = 6`, and a
/// seeded sample (plus the cycle and the exceptional one-ear graph) at
/// `n = 7`.
pub fn biconnected_hosts(n: usize, opts: &SweepOptions) -> Result<Vec<Graph>> {
    check_range(n)?;
    let idx = PairIndexer::new(n);
    Ok(if n == 7 && !opts.exhaustive {
        let mut hs = vec![make(&FamilySpec::Cycle(7))?.0, make(&FamilySpec::Theta0)?.0];
        hs.extend(enumerate::sample_biconnected(7, opts.sample, opts.seed));
        hs
    } else if n <= 5 || opts.exhaustive {
        (0..(1u64 << idx.bits()))
            .filter(|&m| idx.is_biconnected(m))
            .map(|m| idx.graph(m))
            .collect()
    } else {
        let canon = Canonicalizer::new(n);
        enumerate::classes_up_to_iso(&canon, |i, m| i.is_biconnected(m))
            .into_iter()
            .map(|(m, _)| idx.graph(m))
            .collect()
    })
}

fn merge_all(reports: Vec<SweepReport>) -> SweepReport {
    let mut out = SweepReport::default();
    for r in reports {
        out.merge(r);
    }
    out
}

/// Sweep 1: the cycle-host biconditional against the oracle, over every
/// labeled forest-complement `y` on `n` vertices.
pub fn cycle_connectivity_sweep(n: usize) -> Result<SweepReport> {
    check_range(n)?;
    let idx = PairIndexer::new(n);
    let cycle = make(&FamilySpec::Cycle(n))?.0;
    let forests = forest_masks(&idx);
    Ok(merge_all(
        forests
            .par_iter()
            .map(|&fm| {
                let mut rep = SweepReport { instances: 1, ..Default::default() };
                let y = idx.graph(fm).complement();
                let verdict = predict_cycle_connectivity(&y);
                let fs = fs_explicit::build(&cycle, &y, fs_explicit::DEFAULT_N_LIMIT).unwrap();
                let actual = fs.components().len() == 1;
                if verdict.predicted_connected != Some(actual) {
                    rep.mismatches.push(Mismatch {
                        check: "cycle_connectivity".into(),
                        x: cycle.to_json(),
                        y: y.to_json(),
                        predicted: format!("{:?}", verdict.predicted_connected),
                        actual: format!("connected = {actual}"),
                    });
                }
                rep
            })
            .collect(),
    ))
}

/// Sweep 2: `FS(X, Y)` is connected for every biconnected host and every
/// qualifying `y` (forest complement with coprime tree sizes; class
/// representatives at `n >= 6`, where connectivity is relabeling-invariant).
pub fn biconnected_connectivity_sweep(n: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let hosts = biconnected_hosts(n, opts)?;
    let idx = PairIndexer::new(n);
    let qualifying: Vec<Graph> = if n <= 5 || opts.exhaustive {
        forest_masks(&idx)
            .iter()
            .map(|&fm| idx.graph(fm).complement())
            .filter(forest_gcd_condition)
            .collect()
    } else {
        enumerate::free_forests(n)
            .into_iter()
            .map(|f| f.complement())
            .filter(forest_gcd_condition)
            .collect()
    };
    let pairs: Vec<(usize, usize)> = (0..hosts.len())
        .flat_map(|i| (0..qualifying.len()).map(move |j| (i, j)))
        .collect();
    Ok(merge_all(
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let (x, y) = (&hosts[i], &qualifying[j]);
                let mut rep = SweepReport { instances: 1, ..Default::default() };
                let verdict = predict_biconnected_connectivity(x, y);
                debug_assert!(verdict.applicable);
                let fs = fs_explicit::build(x, y, fs_explicit::DEFAULT_N_LIMIT).unwrap();
                let actual = fs.components().len() == 1;
                if verdict.predicted_connected != Some(actual) {
                    rep.mismatches.push(Mismatch {
                        check: "biconnected_connectivity".into(),
                        x: x.to_json(),
                        y: y.to_json(),
                        predicted: format!("{:?}", verdict.predicted_connected),
                        actual: format!("connected = {actual}"),
                    });
                }
                rep
            })
            .collect(),
    ))
}

/// Sweep 3: star-host component classification for every biconnected host;
/// cycle hosts must additionally split into 2-regular components of size
/// `n(n-1)`.
pub fn star_components_sweep(n: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let hosts = biconnected_hosts(n, opts)?;
    let star = make(&FamilySpec::Star(n))?.0;
    Ok(merge_all(
        hosts
            .par_iter()
            .map(|x| {
                let mut rep = SweepReport { instances: 1, ..Default::default() };
                let verdict = predict_star_components(x).unwrap();
                let fs = fs_explicit::build(x, &star, fs_explicit::DEFAULT_N_LIMIT).unwrap();
                let comps = fs.components();
                let actual = comps.len() as u64;
                let mut bad = verdict.predicted_component_count != Some(actual);
                // Cycle hosts additionally split into cycles of length n(n-1).
                if !bad && is_cycle_graph(x) {
                    let want = n * (n - 1);
                    bad = comps.iter().any(|&s| s != want)
                        || !(0..fs.vertex_count()).all(|r| fs.neighbors(r).len() == 2);
                }
                if bad {
                    rep.mismatches.push(Mismatch {
                        check: "star_components".into(),
                        x: x.to_json(),
                        y: star.to_json(),
                        predicted: format!("{:?}", verdict.predicted_component_count),
                        actual: format!("components = {comps:?}"),
                    });
                }
                rep
            })
            .collect(),
    ))
}

/// Theorem-vs-oracle sweep at size `n` (3 <= n <= 7): the cycle
/// biconditional, the biconnected sufficiency, and the star-host component
/// classification.
pub fn verify_connectivity_sweep(n: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let mut report = cycle_connectivity_sweep(n)?;
    report.merge(biconnected_connectivity_sweep(n, opts)?);
    report.merge(star_components_sweep(n, opts)?);
    Ok(report)
}

/// Star-shape test used as a lemma by the connectivity argument: a tree all
/// of whose leaves share a neighbor is a star.
pub fn leaves_share_neighbor(tree: &Graph) -> Option<usize> {
    let adj = tree.adjacency();
    let leaves: Vec<usize> = (0..tree.n()).filter(|&v| adj[v].len() == 1).collect();
    if leaves.is_empty() {
        return None;
    }
    let first = adj[leaves[0]][0];
    leaves.iter().all(|&l| adj[l][0] == first).then_some(first)
}

pub fn is_star(g: &Graph) -> bool {
    g.n() >= 2
        && g.is_connected()
        && g.edge_count() == g.n() - 1
        && (0..g.n()).any(|c| g.degree(c) == g.n() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(text: &str) -> Graph {
        make(&FamilySpec::parse(text).unwrap()).unwrap().0
    }

    #[test]
    fn cycle_prediction_examples() {
        // K_n: complement is n singletons, gcd 1.
        let v = predict_cycle_connectivity(&fam("complete:5"));
        assert_eq!(v.predicted_connected, Some(true));
        // Complement = Star_n: one tree of size n.
        let y = fam("star:5").complement();
        let v = predict_cycle_connectivity(&y);
        assert_eq!(v.predicted_connected, Some(false));
        // Complement = trees of sizes {2, 3}: connected, matches the oracle.
        let ybar = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let y = ybar.complement();
        let v = predict_cycle_connectivity(&y);
        assert_eq!(v.predicted_connected, Some(true));
        let fs = fs_explicit::build(&fam("cycle:5"), &y, 8).unwrap();
        assert_eq!(fs.components().len(), 1);
    }

    #[test]
    fn biconnected_prediction_examples() {
        let v = predict_biconnected_connectivity(&fam("complete:4"), &fam("complete:4"));
        assert_eq!(v.predicted_connected, Some(true));

        // Complement trees {2, 4}: gcd 2, host not a cycle: no prediction.
        let ybar = Graph::from_edges(6, [(0, 1), (2, 3), (3, 4), (4, 5)]).unwrap();
        let x = fam("onear:6,2,4");
        let v = predict_biconnected_connectivity(&x, &ybar.complement());
        assert!(!v.applicable);
        assert_eq!(v.rule, ConnectivityRule::NoPrediction);

        // Same y against a cycle host: exact biconditional applies.
        let v = predict_biconnected_connectivity(&fam("cycle:6"), &ybar.complement());
        assert_eq!(v.predicted_connected, Some(false));

        // Complement = isolated vertex + 6-vertex tree against theta0.
        let ybar = Graph::from_edges(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let v = predict_biconnected_connectivity(&fam("theta0"), &ybar.complement());
        assert_eq!(v.predicted_connected, Some(true));
        let fs = fs_explicit::build(&fam("theta0"), &ybar.complement(), 8).unwrap();
        assert_eq!(fs.components().len(), 1);
    }

    #[test]
    fn star_component_predictions() {
        let v = predict_star_components(&fam("complete:4")).unwrap();
        assert_eq!(v.predicted_component_count, Some(1));
        let v = predict_star_components(&fam("kb:3,3")).unwrap();
        assert_eq!(v.predicted_component_count, Some(2));
        let v = predict_star_components(&fam("cycle:5")).unwrap();
        assert_eq!(v.predicted_component_count, Some(6));
        let v = predict_star_components(&fam("theta0")).unwrap();
        assert_eq!(v.predicted_component_count, Some(6));
        assert!(predict_star_components(&fam("path:4")).is_err());
    }

    #[test]
    fn sweep_n4_clean() {
        let report = verify_connectivity_sweep(4, &SweepOptions::default()).unwrap();
        assert!(report.ok(), "mismatches: {:?}", report.mismatches);
        assert!(report.instances > 0);
    }

    #[test]
    fn isolated_complement_vertex_forces_connected() {
        // A forest complement with an isolated vertex always has gcd 1.
        for n in 3..=6 {
            let idx = PairIndexer::new(n);
            for m in 0..(1u64 << idx.bits()) {
                if !idx.is_forest(m) {
                    continue;
                }
                let f = idx.graph(m);
                if (0..n).any(|v| f.degree(v) == 0) {
                    let y = f.complement();
                    assert_eq!(
                        predict_cycle_connectivity(&y).predicted_connected,
                        Some(true)
                    );
                }
            }
        }
    }

    #[test]
    fn relabeling_invariance_of_cycle_prediction() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let idx = PairIndexer::new(6);
        for m in (0..(1u64 << idx.bits())).step_by(97) {
            let y = idx.graph(m);
            let base = predict_cycle_connectivity(&y).predicted_connected;
            let mut perm: Vec<usize> = (0..6).collect();
            perm.shuffle(&mut rng);
            let relabeled = y.relabel(&perm);
            assert_eq!(predict_cycle_connectivity(&relabeled).predicted_connected, base);
        }
    }

    #[test]
    fn leaf_lemma_over_all_trees_up_to_8() {
        for n in 2..=8usize {
            for t in enumerate::labeled_trees(n) {
                if leaves_share_neighbor(&t).is_some() {
                    assert!(is_star(&t), "tree {t:?} has co-adjacent leaves but is not a star");
                }
            }
        }
    }
}
