//! Parameterized graph family generators with canonical vertex layouts.
//!
//! Every generator also returns a [`Landmarks`] table naming hub vertices and
//! listing cycle and path vertex orders, so downstream code (trajectories,
//! canonical forms) never re-derives structure from the edge set.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    /// Star on `n` vertices with center `n - 1`.
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// The exceptional 7-vertex one-ear graph: `GeneralizedTheta([2,3,3])`.
    Theta0,
    /// Path `0..n-1` plus chords `{0, w-1}` and `{n-1, v-1}`. The parameters
    /// `v`, `w` keep their 1-indexed meaning (`2 <= v <= n/2 < w <= n-1`,
    /// `v + (n+1-w) < n`); vertices are shifted down by one.
    OneEarCanonical { n: usize, v: usize, w: usize },
    /// Two cycles of `m1` and `m2` vertices joined by a path with `d` edges;
    /// `d = 0` means the cycles share exactly one vertex.
    Barbell { m1: usize, m2: usize, d: usize },
    /// Two hub vertices joined by `k >= 2` internally disjoint paths with the
    /// given edge counts; at most one length may be 1.
    GeneralizedTheta(Vec<usize>),
    /// K_4 with each edge replaced by a path; lengths follow the fixed edge
    /// order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
    K4Subdivision([usize; 6]),
    /// K_{3,3} with parts {0,1,2},{3,4,5}; lengths follow the fixed edge
    /// order (0,3),(0,4),(0,5),(1,3),(1,4),(1,5),(2,3),(2,4),(2,5).
    K33Subdivision([usize; 9]),
}

impl FamilySpec {
    /// Number of vertices of the generated graph.
    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Star(n)
            | FamilySpec::Complete(n) => *n,
            FamilySpec::CompleteBipartite(i, j) => i + j,
            FamilySpec::Theta0 => 7,
            FamilySpec::OneEarCanonical { n, .. } => *n,
            FamilySpec::Barbell { m1, m2, d } => m1 + m2 + d - 1,
            FamilySpec::GeneralizedTheta(lengths) => {
                2 + lengths.iter().map(|l| l - 1).sum::<usize>()
            }
            FamilySpec::K4Subdivision(lengths) => {
                4 + lengths.iter().map(|l| l - 1).sum::<usize>()
            }
            FamilySpec::K33Subdivision(lengths) => {
                6 + lengths.iter().map(|l| l - 1).sum::<usize>()
            }
        }
    }

    /// The CLI spec string, e.g. `cycle:5` or `theta:4,4,4`.
    pub fn to_spec_string(&self) -> String {
        fn list(xs: &[usize]) -> String {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        }
        match self {
            FamilySpec::Path(n) => format!("path:{n}"),
            FamilySpec::Cycle(n) => format!("cycle:{n}"),
            FamilySpec::Star(n) => format!("star:{n}"),
            FamilySpec::Complete(n) => format!("complete:{n}"),
            FamilySpec::CompleteBipartite(i, j) => format!("kb:{i},{j}"),
            FamilySpec::Theta0 => "theta0".to_string(),
            FamilySpec::OneEarCanonical { n, v, w } => format!("onear:{n},{v},{w}"),
            FamilySpec::Barbell { m1, m2, d } => format!("barbell:{m1},{m2},{d}"),
            FamilySpec::GeneralizedTheta(l) => format!("theta:{}", list(l)),
            FamilySpec::K4Subdivision(l) => format!("k4s:{}", list(l)),
            FamilySpec::K33Subdivision(l) => format!("k33s:{}", list(l)),
        }
    }

    /// Parse a CLI spec string.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let bad = |msg: &str| Error::InvalidSpec(format!("{text}: {msg}"));
        if text == "theta0" {
            return Ok(FamilySpec::Theta0);
        }
        let (head, rest) = text
            .split_once(':')
            .ok_or_else(|| bad("expected '<family>:<params>'"))?;
        let nums: Vec<usize> = rest
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| bad(&format!("bad integer: {e}")))?;
        let spec = match (head, nums.as_slice()) {
            ("path", [n]) => FamilySpec::Path(*n),
            ("cycle", [n]) => FamilySpec::Cycle(*n),
            ("star", [n]) => FamilySpec::Star(*n),
            ("complete", [n]) => FamilySpec::Complete(*n),
            ("kb", [i, j]) => FamilySpec::CompleteBipartite(*i, *j),
            ("onear", [n, v, w]) => FamilySpec::OneEarCanonical { n: *n, v: *v, w: *w },
            ("barbell", [m1, m2, d]) => FamilySpec::Barbell { m1: *m1, m2: *m2, d: *d },
            ("theta", ls) if ls.len() >= 2 => FamilySpec::GeneralizedTheta(ls.to_vec()),
            ("k4s", ls) if ls.len() == 6 => {
                FamilySpec::K4Subdivision(ls.to_vec().try_into().unwrap())
            }
            ("k33s", ls) if ls.len() == 9 => {
                FamilySpec::K33Subdivision(ls.to_vec().try_into().unwrap())
            }
            _ => return Err(bad("unknown family or wrong parameter count")),
        };
        Ok(spec)
    }
}

/// Structural annotations of a generated graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Landmarks {
    /// Designated high-degree vertices (branch vertices, star center).
    pub hubs: Vec<usize>,
    /// Cycle vertex orders (each entry lists a cycle once, starting at its hub
    /// where one exists).
    pub cycles: Vec<Vec<usize>>,
    /// Path vertex orders including endpoints (hub-to-hub paths for theta
    /// families and subdivisions, the connecting path for barbells).
    pub paths: Vec<Vec<usize>>,
}

/// Build the graph for `spec` together with its landmark table.
pub fn make(spec: &FamilySpec) -> Result<(Graph, Landmarks)> {
    let err = |msg: String| Error::InvalidSpec(msg);
    match spec {
        FamilySpec::Path(n) => {
            if *n == 0 {
                return Err(err("path:0 has no vertices".into()));
            }
            let g = Graph::from_edges(*n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))?;
            let lm = Landmarks { paths: vec![(0..*n).collect()], ..Default::default() };
            Ok((g, lm))
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(err(format!("cycle:{n} needs n >= 3")));
            }
            let mut g = Graph::from_edges(*n, (0..n - 1).map(|i| (i, i + 1)))?;
            g.add_edge(n - 1, 0)?;
            let lm = Landmarks { cycles: vec![(0..*n).collect()], ..Default::default() };
            Ok((g, lm))
        }
        FamilySpec::Star(n) => {
            if *n < 2 {
                return Err(err(format!("star:{n} needs n >= 2")));
            }
            let g = Graph::from_edges(*n, (0..n - 1).map(|i| (i, n - 1)))?;
            let lm = Landmarks { hubs: vec![n - 1], ..Default::default() };
            Ok((g, lm))
        }
        FamilySpec::Complete(n) => {
            let g = Graph::from_edges(
                *n,
                (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))),
            )?;
            Ok((g, Landmarks::default()))
        }
        FamilySpec::CompleteBipartite(i, j) => {
            if *i == 0 || *j == 0 {
                return Err(err("kb parts must be nonempty".into()));
            }
            let g = Graph::from_edges(
                i + j,
                (0..*i).flat_map(|u| (*i..i + j).map(move |v| (u, v))),
            )?;
            Ok((g, Landmarks::default()))
        }
        FamilySpec::Theta0 => make(&FamilySpec::GeneralizedTheta(vec![2, 3, 3])),
        FamilySpec::OneEarCanonical { n, v, w } => {
            let (n, v, w) = (*n, *v, *w);
            let ok = 2 <= v && v <= n / 2 && n / 2 < w && w < n && v + (n + 1) - w < n;
            if !ok {
                return Err(err(format!(
                    "onear:{n},{v},{w} violates 2 <= v <= n/2 < w <= n-1, v + (n+1-w) < n"
                )));
            }
            let mut g = Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1)))?;
            g.add_edge(0, w - 1)?;
            g.add_edge(n - 1, v - 1)?;
            // Three internally disjoint hub paths, mirroring the theta layout.
            let short: Vec<usize> = (0..v).rev().chain([w - 1]).collect();
            let middle: Vec<usize> = (v - 1..w).collect();
            let ear: Vec<usize> = [v - 1].into_iter().chain((w - 1..n).rev()).collect();
            let lm = Landmarks {
                hubs: vec![v - 1, w - 1],
                cycles: Vec::new(),
                paths: vec![short, middle, ear],
            };
            Ok((g, lm))
        }
        FamilySpec::Barbell { m1, m2, d } => {
            let (m1, m2, d) = (*m1, *m2, *d);
            if m1 < 3 || m2 < 3 {
                return Err(err(format!("barbell:{m1},{m2},{d} needs cycle sizes >= 3")));
            }
            let n = m1 + m2 + d - 1;
            let mut g = Graph::empty(n);
            // First cycle on 0..m1 with hub 0.
            let c1: Vec<usize> = (0..m1).collect();
            for i in 0..m1 {
                g.add_edge(c1[i], c1[(i + 1) % m1])?;
            }
            let (hub2, c2, path) = if d == 0 {
                // Shared vertex: second cycle through 0 and m1..m1+m2-1.
                let mut c2 = vec![0];
                c2.extend(m1..m1 + m2 - 1);
                (0, c2, vec![0])
            } else {
                let hub2 = m1;
                let mut c2 = vec![hub2];
                c2.extend(m1 + 1..m1 + m2);
                // Connecting path 0 -> hub2 with d - 1 inner vertices.
                let mut path = vec![0];
                path.extend(m1 + m2..m1 + m2 + d - 1);
                path.push(hub2);
                for i in 0..path.len() - 1 {
                    g.add_edge(path[i], path[i + 1])?;
                }
                (hub2, c2, path)
            };
            for i in 0..m2 {
                g.add_edge(c2[i], c2[(i + 1) % m2])?;
            }
            let lm = Landmarks { hubs: vec![0, hub2], cycles: vec![c1, c2], paths: vec![path] };
            Ok((g, lm))
        }
        FamilySpec::GeneralizedTheta(lengths) => {
            let k = lengths.len();
            if k < 2 {
                return Err(err("theta needs at least 2 paths".into()));
            }
            if lengths.contains(&0) {
                return Err(err("theta path lengths must be >= 1".into()));
            }
            if lengths.iter().filter(|&&l| l == 1).count() > 1 {
                return Err(err(
                    "theta with two unit paths is not a simple graph".into(),
                ));
            }
            let n = spec.vertex_count();
            let mut g = Graph::empty(n);
            let (hub_a, hub_b) = (0usize, 1usize);
            let mut next = 2;
            let mut paths = Vec::with_capacity(k);
            for &len in lengths {
                let mut p = vec![hub_a];
                for _ in 0..len - 1 {
                    p.push(next);
                    next += 1;
                }
                p.push(hub_b);
                for i in 0..p.len() - 1 {
                    g.add_edge(p[i], p[i + 1])?;
                }
                paths.push(p);
            }
            let lm = Landmarks { hubs: vec![hub_a, hub_b], cycles: Vec::new(), paths };
            Ok((g, lm))
        }
        FamilySpec::K4Subdivision(lengths) => {
            subdivision(spec, 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], lengths)
        }
        FamilySpec::K33Subdivision(lengths) => subdivision(
            spec,
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
            lengths,
        ),
    }
}

fn subdivision(
    spec: &FamilySpec,
    hubs: usize,
    skeleton: &[(usize, usize)],
    lengths: &[usize],
) -> Result<(Graph, Landmarks)> {
    if lengths.contains(&0) {
        return Err(Error::InvalidSpec("subdivision lengths must be >= 1".into()));
    }
    let n = spec.vertex_count();
    let mut g = Graph::empty(n);
    let mut next = hubs;
    let mut paths = Vec::with_capacity(skeleton.len());
    for (&(a, b), &len) in skeleton.iter().zip(lengths) {
        let mut p = vec![a];
        for _ in 0..len - 1 {
            p.push(next);
            next += 1;
        }
        p.push(b);
        for i in 0..p.len() - 1 {
            g.add_edge(p[i], p[i + 1])?;
        }
        paths.push(p);
    }
    let lm = Landmarks { hubs: (0..hubs).collect(), cycles: Vec::new(), paths };
    Ok((g, lm))
}

/// Shapes over which [`enumerate_instances`] ranges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeKind {
    Cycle,
    Barbell,
    /// Generalized theta with exactly this many paths.
    Theta(usize),
    K4Subdivision,
    K33Subdivision,
}

impl ShapeKind {
    pub fn parse(text: &str) -> Result<ShapeKind> {
        Ok(match text {
            "cycle" => ShapeKind::Cycle,
            "barbell" => ShapeKind::Barbell,
            "theta" | "theta3" => ShapeKind::Theta(3),
            "theta4" => ShapeKind::Theta(4),
            "theta5" => ShapeKind::Theta(5),
            "k4s" | "k4_subdivision" => ShapeKind::K4Subdivision,
            "k33s" | "k33_subdivision" => ShapeKind::K33Subdivision,
            _ => return Err(Error::InvalidSpec(format!("unknown shape '{text}'"))),
        })
    }
}

/// Every parameter tuple of `shape` with at most `vertex_budget` vertices,
/// exactly once, in nondecreasing vertex count. Theta lengths are emitted as
/// sorted tuples; subdivision tuples are deduplicated under the skeleton's
/// automorphisms.
pub fn enumerate_instances(shape: ShapeKind, vertex_budget: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    match shape {
        ShapeKind::Cycle => {
            for n in 3..=vertex_budget {
                out.push(FamilySpec::Cycle(n));
            }
        }
        ShapeKind::Barbell => {
            for m1 in 3..=vertex_budget {
                for m2 in m1..=vertex_budget {
                    for d in 0..=vertex_budget {
                        let spec = FamilySpec::Barbell { m1, m2, d };
                        if spec.vertex_count() <= vertex_budget {
                            out.push(spec);
                        }
                    }
                }
            }
        }
        ShapeKind::Theta(k) => {
            // Sorted tuples p1 <= ... <= pk with at most one unit length.
            let mut tuple = vec![0usize; k];
            fn rec(
                tuple: &mut Vec<usize>,
                idx: usize,
                min: usize,
                budget: usize,
                out: &mut Vec<FamilySpec>,
            ) {
                if idx == tuple.len() {
                    let spec = FamilySpec::GeneralizedTheta(tuple.clone());
                    if spec.vertex_count() <= budget {
                        out.push(spec);
                    }
                    return;
                }
                // Unit length allowed only in the first slot.
                let lo = if idx == 0 { 1 } else { min.max(2) };
                for l in lo..=budget {
                    tuple[idx] = l;
                    // Prune: remaining slots need at least l each.
                    let remaining = tuple.len() - idx - 1;
                    let projected = 2
                        + tuple[..=idx].iter().map(|x| x - 1).sum::<usize>()
                        + remaining * (l.max(2) - 1);
                    if projected > budget {
                        break;
                    }
                    rec(tuple, idx + 1, l, budget, out);
                }
            }
            rec(&mut tuple, 0, 1, vertex_budget, &mut out);
        }
        ShapeKind::K4Subdivision => {
            let verts = 4;
            let skeleton = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for tuple in canonical_subdivision_tuples(verts, &skeleton, vertex_budget) {
                out.push(FamilySpec::K4Subdivision(tuple.try_into().unwrap()));
            }
        }
        ShapeKind::K33Subdivision => {
            let verts = 6;
            let skeleton =
                [(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];
            for tuple in canonical_subdivision_tuples(verts, &skeleton, vertex_budget) {
                out.push(FamilySpec::K33Subdivision(tuple.try_into().unwrap()));
            }
        }
    }
    out.sort_by_key(|s| (s.vertex_count(), s.to_spec_string()));
    out
}

/// Length tuples for a subdivided skeleton, canonical under the skeleton's
/// vertex automorphisms (minimum tuple representative).
fn canonical_subdivision_tuples(
    verts: usize,
    skeleton: &[(usize, usize)],
    vertex_budget: usize,
) -> Vec<Vec<usize>> {
    // Edge permutations induced by skeleton automorphisms.
    let mut edge_perms = Vec::new();
    let mut perm: Vec<usize> = (0..verts).collect();
    loop {
        let is_auto = skeleton.iter().all(|&(a, b)| {
            let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
            skeleton.iter().any(|&(c, d)| (c, d) == (x, y))
        });
        if is_auto {
            let ep: Vec<usize> = skeleton
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
                    skeleton.iter().position(|&(c, d)| (c, d) == (x, y)).unwrap()
                })
                .collect();
            edge_perms.push(ep);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }

    let base = verts;
    let m = skeleton.len();
    let mut out = Vec::new();
    let mut tuple = vec![1usize; m];
    loop {
        let n = base + tuple.iter().map(|l| l - 1).sum::<usize>();
        if n <= vertex_budget {
            let canonical = edge_perms
                .iter()
                .map(|ep| {
                    let mut t: Vec<usize> = vec![0; m];
                    for (i, &j) in ep.iter().enumerate() {
                        t[j] = tuple[i];
                    }
                    t
                })
                .min()
                .unwrap();
            if canonical == tuple {
                out.push(tuple.clone());
            }
        }
        // Odometer over length tuples, bounded by the vertex budget.
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            tuple[i] += 1;
            let n = base + tuple.iter().map(|l| l - 1).sum::<usize>();
            if n <= vertex_budget {
                break;
            }
            tuple[i] = 1;
        }
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
