//! Girth formulas for `FS(X, Star_n)`, shape classifiers for the trajectory
//! families, and the predicted-girth minimizer over recognized subgraphs.
//!
//! Exact formulas exist for connected unicyclic hosts (`k(k-1)` for cycle
//! length `k`) and, under strict inequality preconditions, for barbells and
//! three- and four-path theta graphs. Outside the preconditions only upper
//! bounds are reported.

use serde::Serialize;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PredictionKind {
    Exact,
    UpperBound,
}

/// Rule tags for girth predictions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GirthRule {
    /// Both graphs have two disjoint edges or both have triangles.
    FourCycle,
    /// Connected unicyclic host: k(k-1).
    Unicyclic,
    /// Barbell loop trajectory: 2(m1 + m2 + 2d).
    BarbellLoop,
    /// Theta double pass: 2(|C1| + |C2| + |C|).
    ThetaDoublePass,
    /// Theta triple pass (one edge path): 3(|C1| + |C2| + |C|).
    ThetaTriplePass,
    /// Four-path word: 4 + 4 p2 + 2(p3 + p4).
    FourPathWord,
    /// Quadratic fallback: g(X) (g(X) - 1).
    QuadFromHostGirth,
    /// Minimum over recognized subgraphs.
    SubgraphMinimum,
}

#[derive(Clone, Debug, Serialize)]
pub struct GirthPrediction {
    /// Predicted girth of `FS(X, Star_n)`; `None` means infinite.
    pub value: Option<usize>,
    pub kind: PredictionKind,
    pub rule: GirthRule,
    pub preconditions_met: bool,
    /// The quadratic bound, reported alongside family formulas.
    pub competing_bound: Option<usize>,
}

impl GirthPrediction {
    fn exact(value: usize, rule: GirthRule, competing: Option<usize>) -> Self {
        GirthPrediction {
            value: Some(value),
            kind: PredictionKind::Exact,
            rule,
            preconditions_met: true,
            competing_bound: competing,
        }
    }

    fn upper(value: usize, rule: GirthRule, competing: Option<usize>) -> Self {
        GirthPrediction {
            value: Some(value),
            kind: PredictionKind::UpperBound,
            rule,
            preconditions_met: false,
            competing_bound: competing,
        }
    }

    /// Smallest bound this prediction asserts.
    pub fn best_bound(&self) -> Option<usize> {
        match (self.value, self.competing_bound) {
            (Some(v), Some(c)) => Some(v.min(c)),
            (Some(v), None) => Some(v),
            (None, c) => c,
        }
    }
}

/// `g(FS(X, Y)) = 4` iff both graphs have two vertex-disjoint edges or both
/// contain a triangle.
pub fn girth_is_four(x: &Graph, y: &Graph) -> bool {
    (x.has_two_disjoint_edges() && y.has_two_disjoint_edges())
        || (x.has_triangle() && y.has_triangle())
}

/// Exact girth for a connected unicyclic host, `None` if the shape does not
/// apply.
pub fn unicyclic_girth(x: &Graph) -> Option<GirthPrediction> {
    if !x.is_connected() || x.edge_count() != x.n() {
        return None;
    }
    let k = x.girth().expect("connected graph with |E| = |V| has a cycle");
    Some(GirthPrediction::exact(k * (k - 1), GirthRule::Unicyclic, Some(k * (k - 1))))
}

/// Barbell formula `2(m1 + m2 + 2d)`, exact when strictly below both cycle
/// quadratics.
pub fn barbell_girth(spec: &FamilySpec) -> Result<GirthPrediction> {
    let FamilySpec::Barbell { m1, m2, d } = *spec else {
        return Err(Error::InvalidSpec("barbell_girth needs a barbell spec".into()));
    };
    if m1 < 3 || m2 < 3 {
        return Err(Error::InvalidSpec("barbell cycles need >= 3 vertices".into()));
    }
    let value = 2 * (m1 + m2 + 2 * d);
    let quad = (m1 * (m1 - 1)).min(m2 * (m2 - 1));
    if value < quad {
        Ok(GirthPrediction::exact(value, GirthRule::BarbellLoop, Some(quad)))
    } else {
        Ok(GirthPrediction::upper(value, GirthRule::BarbellLoop, Some(quad)))
    }
}

/// Cycle sizes of a three-path theta with sorted lengths: the two shorter
/// paths, the two longer, and the outer pair.
fn theta_cycle_sizes(p: &[usize]) -> (usize, usize, usize) {
    (p[0] + p[1], p[1] + p[2], p[0] + p[2])
}

/// Theta formula: `2(|C1|+|C2|+|C|)` when all paths have inner vertices,
/// `3(|C1|+|C2|+|C|)` when exactly one path is an edge; exact under the
/// strict min-quadratic inequality.
pub fn theta_girth(spec: &FamilySpec) -> Result<GirthPrediction> {
    let FamilySpec::GeneralizedTheta(lengths) = spec else {
        return Err(Error::InvalidSpec("theta_girth needs a theta spec".into()));
    };
    if lengths.len() != 3 {
        return Err(Error::InvalidSpec("theta_girth needs exactly 3 paths".into()));
    }
    let mut p = lengths.clone();
    p.sort_unstable();
    if p[1] == 1 {
        return Err(Error::InvalidSpec("two unit paths are not a simple graph".into()));
    }
    let (c1, c2, c) = theta_cycle_sizes(&p);
    let sum = c1 + c2 + c;
    let quad = [c1, c2, c].iter().map(|&s| s * (s - 1)).min().unwrap();
    let (value, rule) = if p[0] == 1 {
        (3 * sum, GirthRule::ThetaTriplePass)
    } else {
        (2 * sum, GirthRule::ThetaDoublePass)
    };
    if value < quad {
        Ok(GirthPrediction::exact(value, rule, Some(quad)))
    } else {
        Ok(GirthPrediction::upper(value, rule, Some(quad)))
    }
}

/// Four-path formula `4 + 4 p2 + 2(p3 + p4)` for `1 = p1 < p2 <= p3 <= p4`,
/// exact when strictly below `min{p2(p2+1), 4(p2+p3+p4), 6(1+p2+p3)}`.
pub fn theta4_girth(spec: &FamilySpec) -> Result<GirthPrediction> {
    let FamilySpec::GeneralizedTheta(lengths) = spec else {
        return Err(Error::InvalidSpec("theta4_girth needs a theta spec".into()));
    };
    if lengths.len() != 4 {
        return Err(Error::InvalidSpec("theta4_girth needs exactly 4 paths".into()));
    }
    let mut p = lengths.clone();
    p.sort_unstable();
    if p[0] != 1 || p[1] == 1 {
        return Err(Error::InvalidSpec(
            "theta4_girth needs exactly one unit path".into(),
        ));
    }
    let (p2, p3, p4) = (p[1], p[2], p[3]);
    let value = 4 + 4 * p2 + 2 * (p3 + p4);
    let min = (p2 * (p2 + 1)).min(4 * (p2 + p3 + p4)).min(6 * (1 + p2 + p3));
    if value < min {
        Ok(GirthPrediction::exact(value, GirthRule::FourPathWord, Some(min)))
    } else {
        Ok(GirthPrediction::upper(value, GirthRule::FourPathWord, Some(min)))
    }
}

/// Shape tags for the trajectory-family classifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeTag {
    Cycle,
    Barbell,
    Theta,
    TildeTheta,
    Theta4,
    Theta5,
    K4Subdivision,
    K33Subdivision,
    Other,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeClassification {
    pub shape: ShapeTag,
    /// Cycle length, barbell `(m1, m2, d)`, or sorted path lengths.
    pub parameters: Vec<usize>,
    pub in_g_tilde: bool,
    pub in_g_prime: bool,
}

/// Classify a connected graph against the trajectory families by suppressing
/// its degree-2 vertices and pattern-matching the core.
pub fn classify(x: &Graph) -> Result<ShapeClassification> {
    if !x.is_connected() {
        return Err(Error::NotConnected);
    }
    let other = ShapeClassification {
        shape: ShapeTag::Other,
        parameters: Vec::new(),
        in_g_tilde: false,
        in_g_prime: false,
    };
    let Ok(core) = x.topological_core() else {
        return Ok(other); // pendant vertices or trees match no family
    };
    let loops = core.loop_count();
    match (core.vertex_count, core.edges.len()) {
        (1, 1) => {
            let n = core.edges[0].2;
            Ok(ShapeClassification {
                shape: ShapeTag::Cycle,
                parameters: vec![n],
                in_g_tilde: true,
                in_g_prime: true,
            })
        }
        (1, 2) if loops == 2 => {
            // Two cycles sharing one vertex: a barbell with a trivial path.
            let (m1, m2) = (core.edges[0].2, core.edges[1].2);
            let (m1, m2) = (m1.min(m2), m1.max(m2));
            let in_g = barbell_in_g_tilde(m1, m2, 0);
            Ok(ShapeClassification {
                shape: ShapeTag::Barbell,
                parameters: vec![m1, m2, 0],
                in_g_tilde: in_g,
                in_g_prime: in_g,
            })
        }
        (2, 3) if loops == 2 => {
            // A loop at each endpoint of one connecting edge.
            let mut cycles: Vec<usize> =
                core.edges.iter().filter(|&&(a, b, _)| a == b).map(|&(_, _, l)| l).collect();
            cycles.sort_unstable();
            let d = core.edges.iter().find(|&&(a, b, _)| a != b).unwrap().2;
            let in_g = barbell_in_g_tilde(cycles[0], cycles[1], d);
            Ok(ShapeClassification {
                shape: ShapeTag::Barbell,
                parameters: vec![cycles[0], cycles[1], d],
                in_g_tilde: in_g,
                in_g_prime: in_g,
            })
        }
        (2, k) if loops == 0 && k >= 3 => {
            // k internally disjoint hub-to-hub paths.
            let mut lengths: Vec<usize> = core.edges.iter().map(|&(_, _, l)| l).collect();
            lengths.sort_unstable();
            let spec = FamilySpec::GeneralizedTheta(lengths.clone());
            match k {
                3 => {
                    let pred = theta_girth(&spec)?;
                    let tilde = lengths[0] == 1;
                    let in_g = pred.kind == PredictionKind::Exact;
                    Ok(ShapeClassification {
                        shape: if tilde { ShapeTag::TildeTheta } else { ShapeTag::Theta },
                        parameters: lengths,
                        in_g_tilde: in_g,
                        in_g_prime: in_g,
                    })
                }
                4 => {
                    let in_g_tilde = lengths[0] == 1
                        && theta4_girth(&spec)
                            .map(|p| p.kind == PredictionKind::Exact)
                            .unwrap_or(false);
                    Ok(ShapeClassification {
                        shape: ShapeTag::Theta4,
                        parameters: lengths,
                        in_g_tilde,
                        in_g_prime: true,
                    })
                }
                5 => Ok(ShapeClassification {
                    shape: ShapeTag::Theta5,
                    parameters: lengths,
                    in_g_tilde: false,
                    in_g_prime: true,
                }),
                _ => Ok(ShapeClassification {
                    // Six or more paths are excluded from the candidate set.
                    shape: ShapeTag::Other,
                    parameters: lengths,
                    in_g_tilde: false,
                    in_g_prime: false,
                }),
            }
        }
        (4, 6) if loops == 0 && core_is_k4(&core) => {
            let mut lengths: Vec<usize> = core.edges.iter().map(|&(_, _, l)| l).collect();
            lengths.sort_unstable();
            Ok(ShapeClassification {
                shape: ShapeTag::K4Subdivision,
                parameters: lengths,
                in_g_tilde: false,
                in_g_prime: true,
            })
        }
        (6, 9) if loops == 0 && core_is_k33(&core) => {
            let mut lengths: Vec<usize> = core.edges.iter().map(|&(_, _, l)| l).collect();
            lengths.sort_unstable();
            Ok(ShapeClassification {
                shape: ShapeTag::K33Subdivision,
                parameters: lengths,
                in_g_tilde: false,
                in_g_prime: true,
            })
        }
        _ => Ok(other),
    }
}

fn barbell_in_g_tilde(m1: usize, m2: usize, d: usize) -> bool {
    2 * (m1 + m2 + 2 * d) < (m1 * (m1 - 1)).min(m2 * (m2 - 1))
}

fn core_is_k4(core: &crate::graph::Multigraph) -> bool {
    // Every pair of the four vertices joined by exactly one edge.
    let mut count = [[0usize; 4]; 4];
    for &(a, b, _) in &core.edges {
        if a == b || a >= 4 || b >= 4 {
            return false;
        }
        count[a][b] += 1;
    }
    (0..4).all(|a| (a + 1..4).all(|b| count[a][b] == 1))
}

fn core_is_k33(core: &crate::graph::Multigraph) -> bool {
    if core.edges.iter().any(|&(a, b, _)| a == b) {
        return false;
    }
    // Exactly one edge per cross pair for some 3+3 bipartition.
    let verts: Vec<usize> = (0..6).collect();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                let part: BTreeSet<usize> = BTreeSet::from([a, b, c]);
                let mut ok = true;
                let mut seen = std::collections::HashMap::new();
                for &(u, v, _) in &core.edges {
                    if part.contains(&u) == part.contains(&v) {
                        ok = false;
                        break;
                    }
                    *seen.entry((u.min(v), u.max(v))).or_insert(0) += 1;
                }
                if ok
                    && seen.len() == 9
                    && seen.values().all(|&c| c == 1)
                    && verts.iter().all(|v| core.degree(*v) == 3)
                {
                    return true;
                }
            }
        }
    }
    false
}

/// Cheapest proven upper bound on the girth of `FS(x, Star_n)`: the
/// quadratic bound always, improved by a family formula when the shape
/// classifier recognizes one. Requires `x` to contain a cycle.
pub fn upper_bound_hint(x: &Graph) -> usize {
    let g = x.girth().expect("upper_bound_hint needs a cyclic graph");
    let mut bound = g * (g - 1);
    if let Ok(c) = classify(x) {
        let family = match c.shape {
            ShapeTag::Cycle => Some(c.parameters[0] * (c.parameters[0] - 1)),
            ShapeTag::Barbell => {
                Some(2 * (c.parameters[0] + c.parameters[1] + 2 * c.parameters[2]))
            }
            ShapeTag::Theta | ShapeTag::TildeTheta => {
                let spec = FamilySpec::GeneralizedTheta(c.parameters.clone());
                theta_girth(&spec).ok().and_then(|p| p.value)
            }
            ShapeTag::Theta4 if c.parameters[0] == 1 => {
                let spec = FamilySpec::GeneralizedTheta(c.parameters.clone());
                theta4_girth(&spec).ok().and_then(|p| p.value)
            }
            _ => None,
        };
        if let Some(f) = family {
            bound = bound.min(f);
        }
    }
    bound
}

/// A recognized subgraph together with its girth prediction.
#[derive(Clone, Debug, Serialize)]
pub struct SubgraphMember {
    pub description: String,
    pub prediction: GirthPrediction,
}

#[derive(Clone, Copy, Debug)]
pub struct SubgraphBudget {
    pub max_cycle_len: usize,
    pub max_cycle_pairs: usize,
}

impl Default for SubgraphBudget {
    fn default() -> Self {
        SubgraphBudget { max_cycle_len: 20, max_cycle_pairs: 100_000 }
    }
}

/// Predicted girth of `FS(x, Star_n)`: the minimum prediction over the whole
/// graph (when classified), every simple cycle, and every barbell or theta
/// assembled from a pair of cycles, within `budget`.
///
/// The result is exact when the minimum is an exact member and no enumerated
/// member lacks an exact rule, or when the minimum hits 6, the floor for
/// `FS(-, Star_n)` girth once 4-cycles are impossible.
pub fn predicted_girth(x: &Graph, budget: &SubgraphBudget) -> Result<GirthPrediction> {
    if !x.is_connected() {
        return Err(Error::NotConnected);
    }
    if x.girth().is_none() {
        return Err(Error::Precondition("predicted_girth needs a cycle".into()));
    }
    let mut best: Option<usize> = None;
    let mut all_exact = true;
    let mut note = |p: &GirthPrediction| {
        if let Some(v) = p.value {
            if best.is_none_or(|b| v < b) {
                best = Some(v);
            }
        }
        if p.kind != PredictionKind::Exact {
            all_exact = false;
        }
    };

    // The whole graph, when it is a recognized family member.
    let whole = classify(x)?;
    match whole.shape {
        ShapeTag::Cycle => note(&unicyclic_girth(x).unwrap()),
        ShapeTag::Barbell => {
            let (m1, m2, d) = (whole.parameters[0], whole.parameters[1], whole.parameters[2]);
            note(&barbell_girth(&FamilySpec::Barbell { m1, m2, d })?);
        }
        ShapeTag::Theta | ShapeTag::TildeTheta => {
            note(&theta_girth(&FamilySpec::GeneralizedTheta(whole.parameters.clone()))?);
        }
        ShapeTag::Theta4 if whole.parameters[0] == 1 => {
            note(&theta4_girth(&FamilySpec::GeneralizedTheta(whole.parameters.clone()))?);
        }
        _ => {}
    }

    let (cycles, cycles_truncated) = enumerate_cycles(x, budget.max_cycle_len, budget.max_cycle_pairs);
    for c in &cycles {
        let k = c.len();
        note(&GirthPrediction::exact(k * (k - 1), GirthRule::Unicyclic, None));
    }

    // Barbell and theta members from cycle pairs.
    let mut pairs = 0usize;
    let mut pairs_truncated = cycles_truncated;
    'outer: for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            pairs += 1;
            if pairs > budget.max_cycle_pairs {
                pairs_truncated = true;
                break 'outer;
            }
            if let Some(p) = cycle_pair_prediction(x, &cycles[i], &cycles[j]) {
                note(&p);
            }
        }
    }

    let value = best.expect("at least one cycle exists");
    // Girth 4 needs two disjoint star edges, which do not exist, so 6 is a
    // floor no unenumerated subgraph can beat.
    let exact = (all_exact && !pairs_truncated) || value == 6;
    Ok(GirthPrediction {
        value: Some(value),
        kind: if exact { PredictionKind::Exact } else { PredictionKind::UpperBound },
        rule: GirthRule::SubgraphMinimum,
        preconditions_met: exact,
        competing_bound: Some(upper_bound_hint(x)),
    })
}

/// Interpret a pair of simple cycles as a barbell or theta member.
fn cycle_pair_prediction(x: &Graph, a: &[usize], b: &[usize]) -> Option<GirthPrediction> {
    let sa: BTreeSet<usize> = a.iter().copied().collect();
    let sb: BTreeSet<usize> = b.iter().copied().collect();
    let shared: Vec<usize> = sa.intersection(&sb).copied().collect();
    match shared.len() {
        0 => {
            // Vertex-disjoint: connect by a shortest path avoiding the cycle
            // interiors.
            let d = connecting_path_len(x, &sa, &sb)?;
            barbell_girth(&FamilySpec::Barbell { m1: a.len(), m2: b.len(), d }).ok()
        }
        1 => barbell_girth(&FamilySpec::Barbell { m1: a.len(), m2: b.len(), d: 0 }).ok(),
        _ => {
            // Union is a theta graph iff it has exactly two degree-3 vertices
            // and one surplus edge.
            let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
            for (c, k) in [(a, a.len()), (b, b.len())] {
                for i in 0..k {
                    let (u, v) = (c[i], c[(i + 1) % k]);
                    edges.insert((u.min(v), u.max(v)));
                }
            }
            let verts: BTreeSet<usize> = sa.union(&sb).copied().collect();
            if edges.len() != verts.len() + 1 {
                return None;
            }
            let sub = Graph::from_edges(x.n(), edges.iter().copied()).ok()?;
            let core = {
                let vs: Vec<usize> = verts.iter().copied().collect();
                sub.induced(&vs).topological_core().ok()?
            };
            if core.vertex_count == 2 && core.loop_count() == 0 && core.edges.len() == 3 {
                let mut lengths: Vec<usize> = core.edges.iter().map(|&(_, _, l)| l).collect();
                lengths.sort_unstable();
                if lengths[1] == 1 {
                    return None;
                }
                theta_girth(&FamilySpec::GeneralizedTheta(lengths)).ok()
            } else {
                None
            }
        }
    }
}

/// Shortest path between two disjoint vertex sets whose inner vertices avoid
/// both sets; returns its edge count.
fn connecting_path_len(x: &Graph, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> Option<usize> {
    let adj = x.adjacency();
    let mut dist = vec![usize::MAX; x.n()];
    let mut queue = std::collections::VecDeque::new();
    for &v in a {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        if b.contains(&u) {
            return Some(dist[u]);
        }
        // Inner vertices may not re-enter the first cycle.
        if dist[u] > 0 && a.contains(&u) {
            continue;
        }
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Enumerate simple cycles up to `max_len`, each once (smallest vertex
/// first, orientation fixed); the flag reports truncation by `max_count`.
pub fn enumerate_cycles(x: &Graph, max_len: usize, max_count: usize) -> (Vec<Vec<usize>>, bool) {
    let adj = x.adjacency();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut truncated = false;
    let mut path = Vec::new();
    let mut on_path = vec![false; x.n()];
    #[allow(clippy::too_many_arguments)]
    fn extend(
        adj: &[Vec<usize>],
        start: usize,
        max_len: usize,
        max_count: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        truncated: &mut bool,
    ) {
        if out.len() >= max_count {
            *truncated = true;
            return;
        }
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w == start && path.len() >= 3 {
                // Fix orientation: second vertex smaller than last.
                if path[1] < path[path.len() - 1] {
                    out.push(path.clone());
                }
            } else if w > start && !on_path[w] && path.len() < max_len {
                path.push(w);
                on_path[w] = true;
                extend(adj, start, max_len, max_count, path, on_path, out, truncated);
                on_path[w] = false;
                path.pop();
            }
        }
    }
    for s in 0..x.n() {
        path.clear();
        path.push(s);
        on_path[s] = true;
        extend(&adj, s, max_len, max_count, &mut path, &mut on_path, &mut out, &mut truncated);
        on_path[s] = false;
    }
    (out, truncated)
}

/// Witness for the two-cycle structure statement: any connected graph with
/// at least two distinct cycles contains a barbell or a theta subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BarbellOrTheta {
    Barbell { cycle1: Vec<usize>, cycle2: Vec<usize>, path: Vec<usize> },
    Theta { cycle: Vec<usize>, ear: Vec<usize> },
}

/// Exhibit a barbell or theta subgraph when `x` has two distinct cycles;
/// `None` iff at most one cycle exists (per connected component).
pub fn find_barbell_or_theta(x: &Graph) -> Option<BarbellOrTheta> {
    let (cycles, _) = enumerate_cycles(x, x.n(), 2);
    if cycles.len() < 2 {
        return None;
    }
    let (a, b) = (&cycles[0], &cycles[1]);
    let sa: BTreeSet<usize> = a.iter().copied().collect();
    let sb: BTreeSet<usize> = b.iter().copied().collect();
    let shared: Vec<usize> = sa.intersection(&sb).copied().collect();
    match shared.len() {
        0 => {
            let path = connecting_path(x, &sa, &sb)?;
            Some(BarbellOrTheta::Barbell { cycle1: a.clone(), cycle2: b.clone(), path })
        }
        1 => Some(BarbellOrTheta::Barbell {
            cycle1: a.clone(),
            cycle2: b.clone(),
            path: vec![shared[0]],
        }),
        _ => {
            // Walk along b from an edge outside a until hitting a on both
            // sides; that arc is an ear of a.
            let eb: Vec<(usize, usize)> =
                (0..b.len()).map(|i| (b[i], b[(i + 1) % b.len()])).collect();
            let in_a_edge = |u: usize, v: usize| {
                (0..a.len()).any(|i| {
                    let (x1, y1) = (a[i], a[(i + 1) % a.len()]);
                    (x1 == u && y1 == v) || (x1 == v && y1 == u)
                })
            };
            let start = (0..eb.len()).find(|&i| !in_a_edge(eb[i].0, eb[i].1))?;
            // Expand backward and forward along b to the nearest a-vertices.
            let k = b.len();
            let mut lo = start; // edge index (b[lo], b[lo+1])
            while !sa.contains(&b[lo]) {
                lo = (lo + k - 1) % k;
            }
            let mut hi = (start + 1) % k;
            while !sa.contains(&b[hi]) {
                hi = (hi + 1) % k;
            }
            let mut ear = Vec::new();
            let mut i = lo;
            loop {
                ear.push(b[i]);
                if i == hi {
                    break;
                }
                i = (i + 1) % k;
            }
            Some(BarbellOrTheta::Theta { cycle: a.clone(), ear })
        }
    }
}

fn connecting_path(x: &Graph, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> Option<Vec<usize>> {
    let adj = x.adjacency();
    let mut prev = vec![usize::MAX; x.n()];
    let mut dist = vec![usize::MAX; x.n()];
    let mut queue = std::collections::VecDeque::new();
    for &v in a {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        if b.contains(&u) {
            let mut path = vec![u];
            let mut cur = u;
            while prev[cur] != usize::MAX {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        if dist[u] > 0 && a.contains(&u) {
            continue;
        }
        for &w in &adj[u] {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}
