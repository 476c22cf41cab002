//! Open ear decompositions of biconnected graphs.
//!
//! `decompose` produces `[P_0, P_1, .., P_r]` where `P_0` is a simple cycle,
//! each later piece is a path whose endpoints lie in earlier pieces and whose
//! inner vertices are new, and the edge sets partition `E(G)`. The ear count
//! `r` always equals `|E| - |V|`. A chain decomposition over a DFS tree
//! yields the pieces; the DFS can be steered so that any designated simple
//! cycle becomes `P_0`.

use serde::Serialize;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::families::{make, FamilySpec};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EarDecomposition {
    /// Simple cycle `P_0` as an ordered vertex list.
    pub initial_cycle: Vec<usize>,
    /// Ears `P_1..P_r`, each an ordered path vertex list (endpoints included).
    pub ears: Vec<Vec<usize>>,
}

impl EarDecomposition {
    pub fn ear_count(&self) -> usize {
        self.ears.len()
    }
}

/// Compute an open ear decomposition, optionally forcing `P_0`.
pub fn decompose(g: &Graph, initial_cycle: Option<&[usize]>) -> Result<EarDecomposition> {
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    if let Some(c) = initial_cycle {
        check_simple_cycle(g, c)?;
    }

    let n = g.n();
    let adj = g.adjacency();

    // DFS from the designated root (first vertex of the cycle, else 0). When
    // a cycle is forced, each cycle vertex prefers the next cycle vertex so
    // the tree's leftmost path runs along the cycle; ties break by lowest
    // vertex index.
    let root = initial_cycle.map_or(0, |c| c[0]);
    let mut cycle_next = vec![usize::MAX; n];
    if let Some(c) = initial_cycle {
        for i in 0..c.len() - 1 {
            cycle_next[c[i]] = c[i + 1];
        }
    }
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![usize::MAX; n]; // DFS discovery index
    let mut by_order = Vec::with_capacity(n);
    fn dfs(
        u: usize,
        adj: &[Vec<usize>],
        cycle_next: &[usize],
        parent: &mut [usize],
        order: &mut [usize],
        by_order: &mut Vec<usize>,
    ) {
        order[u] = by_order.len();
        by_order.push(u);
        let mut nbrs: Vec<usize> = adj[u].clone();
        if cycle_next[u] != usize::MAX {
            nbrs.retain(|&w| w != cycle_next[u]);
            nbrs.insert(0, cycle_next[u]);
        }
        for w in nbrs {
            if order[w] == usize::MAX {
                parent[w] = u;
                dfs(w, adj, cycle_next, parent, order, by_order);
            }
        }
    }
    dfs(root, &adj, &cycle_next, &mut parent, &mut order, &mut by_order);

    // Back edges, keyed at the DFS-ancestor endpoint.
    let mut back: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        if parent[u] == v || parent[v] == u {
            continue;
        }
        // The endpoint with the smaller discovery index is the ancestor.
        let (anc, desc) = if order[u] < order[v] { (u, v) } else { (v, u) };
        back[anc].push(desc);
    }
    // Deterministic processing order: by descendant discovery index.
    for list in &mut back {
        list.sort_unstable_by_key(|&d| order[d]);
    }
    // If a cycle is forced, its closing back edge must start the first chain.
    if let Some(c) = initial_cycle {
        let last = c[c.len() - 1];
        if let Some(pos) = back[root].iter().position(|&d| d == last) {
            back[root].remove(pos);
            back[root].insert(0, last);
        }
    }

    // Chain decomposition: visit vertices in DFS order; for each back edge
    // from an ancestor, walk the tree upward from the descendant until a
    // marked vertex, marking along the way. The first chain is a cycle, all
    // others are open ears.
    let mut marked = vec![false; n];
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for &v in &by_order {
        for &d in &back[v] {
            marked[v] = true;
            let mut chain = vec![v, d];
            let mut cur = d;
            while !marked[cur] {
                marked[cur] = true;
                cur = parent[cur];
                chain.push(cur);
            }
            chains.push(chain);
        }
    }
    let mut it = chains.into_iter();
    let mut initial = it.next().ok_or(Error::NotBiconnected)?;
    // The first chain closes at the root: drop the repeated endpoint.
    debug_assert_eq!(initial.first(), initial.last());
    initial.pop();
    let decomp = EarDecomposition { initial_cycle: initial, ears: it.collect() };
    debug_assert!(validate(&decomp, g));
    debug_assert_eq!(decomp.ear_count(), g.edge_count() - g.n());
    Ok(decomp)
}

fn check_simple_cycle(g: &Graph, c: &[usize]) -> Result<()> {
    let fail = |msg: &str| Err(Error::NotACycle(format!("{c:?}: {msg}")));
    if c.len() < 3 {
        return fail("fewer than 3 vertices");
    }
    let set: BTreeSet<usize> = c.iter().copied().collect();
    if set.len() != c.len() {
        return fail("repeated vertex");
    }
    if c.iter().any(|&v| v >= g.n()) {
        return fail("vertex out of range");
    }
    for i in 0..c.len() {
        let (u, v) = (c[i], c[(i + 1) % c.len()]);
        if !g.has_edge(u, v) {
            return fail("missing edge");
        }
    }
    Ok(())
}

/// Check the three open-ear-decomposition conditions against `g`.
pub fn validate(d: &EarDecomposition, g: &Graph) -> bool {
    let norm = |u: usize, v: usize| (u.min(v), u.max(v));
    // P_0 is a simple cycle of g.
    if check_simple_cycle(g, &d.initial_cycle).is_err() {
        return false;
    }
    let mut used_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut placed: BTreeSet<usize> = d.initial_cycle.iter().copied().collect();
    let c = &d.initial_cycle;
    for i in 0..c.len() {
        used_edges.insert(norm(c[i], c[(i + 1) % c.len()]));
    }
    for ear in &d.ears {
        // A path with at least one edge, distinct endpoints, edges in g.
        if ear.len() < 2 || ear.first() == ear.last() {
            return false;
        }
        let inner = &ear[1..ear.len() - 1];
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        if !ear.iter().all(|&v| v < g.n() && seen.insert(v)) {
            return false;
        }
        // Endpoints in earlier pieces, inner vertices new.
        if !placed.contains(&ear[0]) || !placed.contains(ear.last().unwrap()) {
            return false;
        }
        if inner.iter().any(|v| placed.contains(v)) {
            return false;
        }
        for w in ear.windows(2) {
            if !g.has_edge(w[0], w[1]) || !used_edges.insert(norm(w[0], w[1])) {
                return false; // missing or duplicated edge
            }
        }
        placed.extend(inner.iter().copied());
    }
    // Edge sets partition E(g).
    used_edges.len() == g.edge_count()
}

/// Result of folding a biconnected graph onto the one-ear canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OneEarForm {
    /// Isomorphic to `OneEarCanonical(n, v, w)`; `iso[c]` is the graph vertex
    /// playing canonical vertex `c`.
    Canonical { n: usize, v: usize, w: usize, iso: Vec<usize> },
    /// A spanning cycle exists.
    Hamiltonian,
    /// The ear count differs from 1.
    NotOneEar,
}

/// Fold a biconnected graph with exactly one ear onto its canonical form.
pub fn one_ear_canonical(g: &Graph) -> Result<OneEarForm> {
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    if g.edge_count() != g.n() + 1 {
        return Ok(OneEarForm::NotOneEar);
    }
    if has_hamiltonian_cycle(g) {
        return Ok(OneEarForm::Hamiltonian);
    }
    // A non-Hamiltonian biconnected one-ear graph has exactly two degree-3
    // vertices joined by three internally disjoint paths, all of length >= 2.
    let adj = g.adjacency();
    let hubs: Vec<usize> = (0..g.n()).filter(|&v| adj[v].len() == 3).collect();
    debug_assert_eq!(hubs.len(), 2);
    let (ha, hb) = (hubs[0], hubs[1]);
    let mut paths: Vec<Vec<usize>> = adj[ha]
        .iter()
        .map(|&start| {
            let mut p = vec![ha, start];
            let (mut prev, mut cur) = (ha, start);
            while cur != hb {
                let next = *adj[cur].iter().find(|&&w| w != prev).unwrap();
                prev = cur;
                cur = next;
                p.push(cur);
            }
            p
        })
        .collect();
    // Sort by edge count, ties by vertex sequence for determinism.
    paths.sort_by_key(|p| (p.len(), p.clone()));
    let n = g.n();
    debug_assert_eq!(paths.iter().map(|p| p.len() - 1).sum::<usize>(), n + 1);
    debug_assert!(paths[0].len() > 2, "an edge path would be Hamiltonian");
    // The layout assigns the three path lengths to roles: the short arc of
    // the initial cycle (length v), the middle run (w - v), and the ear
    // (n + 1 - w). Several assignments can satisfy the inequalities; take
    // the lexicographically smallest (v, w).
    let mut lens: Vec<usize> = paths.iter().map(|p| p.len() - 1).collect();
    lens.sort_unstable();
    let mut best: Option<(usize, usize, [usize; 3])> = None;
    let mut perm = [0usize, 1, 2];
    loop {
        let (a, b, c) = (lens[perm[0]], lens[perm[1]], lens[perm[2]]);
        let (v, w) = (a, a + b);
        let valid = 2 <= v && v <= n / 2 && n / 2 < w && w < n && a + c < n;
        if valid && best.is_none_or(|(bv, bw, _)| (v, w) < (bv, bw)) {
            best = Some((v, w, [a, b, c]));
        }
        if !next_index_perm(&mut perm) {
            break;
        }
    }
    let (v, w, roles) = best.expect("a non-Hamiltonian one-ear graph admits the layout");
    // Canonical paths from hub v-1 to hub w-1 (0-indexed layout):
    // down the short arc through the {0, w-1} chord, along the middle, and
    // out the {n-1, v-1} chord back down the tail.
    let short: Vec<usize> = (0..v).rev().chain([w - 1]).collect();
    let middle: Vec<usize> = (v - 1..w).collect();
    let ear: Vec<usize> = [v - 1].into_iter().chain((w - 1..n).rev()).collect();
    // Match each role to the first unused host path of that length.
    let mut used = [false; 3];
    let mut role_paths: Vec<&Vec<usize>> = Vec::with_capacity(3);
    for want in roles {
        let i = (0..3).find(|&i| !used[i] && paths[i].len() - 1 == want).unwrap();
        used[i] = true;
        role_paths.push(&paths[i]);
    }
    let mut iso = vec![usize::MAX; n];
    for (canon_path, g_path) in [(&short, role_paths[0]), (&middle, role_paths[1]), (&ear, role_paths[2])] {
        debug_assert_eq!(canon_path.len(), g_path.len());
        for (&cv, &gv) in canon_path.iter().zip(g_path.iter()) {
            debug_assert!(iso[cv] == usize::MAX || iso[cv] == gv);
            iso[cv] = gv;
        }
    }
    debug_assert!({
        let canon = make(&FamilySpec::OneEarCanonical { n, v, w }).unwrap().0;
        is_isomorphism(&canon, g, &iso)
    });
    Ok(OneEarForm::Canonical { n, v, w, iso })
}

/// `{a,b} in E(from)` iff `{map[a], map[b]} in E(to)`, over all pairs.
pub fn is_isomorphism(from: &Graph, to: &Graph, map: &[usize]) -> bool {
    if from.n() != to.n() || map.len() != from.n() {
        return false;
    }
    let mut seen = vec![false; from.n()];
    for &m in map {
        if m >= from.n() || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    (0..from.n()).all(|a| {
        (a + 1..from.n()).all(|b| from.has_edge(a, b) == to.has_edge(map[a], map[b]))
    })
}

fn next_index_perm(perm: &mut [usize; 3]) -> bool {
    // Lexicographic successor over the six orderings of three indices.
    let order = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let pos = order.iter().position(|o| o == perm).unwrap();
    if pos + 1 == order.len() {
        false
    } else {
        *perm = order[pos + 1];
        true
    }
}

fn has_hamiltonian_cycle(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let adj = g.adjacency();
    // Backtracking from vertex 0; prune on remaining degree.
    let mut on_path = vec![false; n];
    on_path[0] = true;
    let mut path = vec![0usize];
    fn rec(adj: &[Vec<usize>], on_path: &mut [bool], path: &mut Vec<usize>, n: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == n {
            return adj[last].contains(&0);
        }
        for &w in &adj[last] {
            if !on_path[w] {
                on_path[w] = true;
                path.push(w);
                if rec(adj, on_path, path, n) {
                    return true;
                }
                path.pop();
                on_path[w] = false;
            }
        }
        false
    }
    rec(&adj, &mut on_path, &mut path, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilySpec};

    fn fam(text: &str) -> Graph {
        make(&FamilySpec::parse(text).unwrap()).unwrap().0
    }

    #[test]
    fn cycle_decomposes_with_zero_ears() {
        let d = decompose(&fam("cycle:6"), None).unwrap();
        assert_eq!(d.initial_cycle.len(), 6);
        assert_eq!(d.ear_count(), 0);
        assert!(validate(&d, &fam("cycle:6")));
    }

    #[test]
    fn theta_has_one_ear_k4_has_two() {
        let theta = fam("theta:2,2,3");
        let d = decompose(&theta, None).unwrap();
        assert_eq!(d.ear_count(), 1);
        assert!(validate(&d, &theta));

        let k4 = fam("complete:4");
        let d = decompose(&k4, None).unwrap();
        assert_eq!(d.ear_count(), 2);
        assert!(validate(&d, &k4));
    }

    #[test]
    fn decompose_rejects_non_biconnected() {
        assert!(decompose(&fam("path:4"), None).is_err());
    }

    #[test]
    fn forced_initial_cycle_is_respected() {
        let theta = fam("theta:2,2,3");
        // Cycle through paths 1 and 2: hubs 0,1 with inners 2 and 3.
        let c = vec![0, 2, 1, 3];
        let d = decompose(&theta, Some(&c)).unwrap();
        assert!(validate(&d, &theta));
        let got: std::collections::BTreeSet<usize> = d.initial_cycle.iter().copied().collect();
        let want: std::collections::BTreeSet<usize> = c.iter().copied().collect();
        assert_eq!(got, want);
        // Not a cycle: reject.
        assert!(decompose(&theta, Some(&[0, 1, 2])).is_err());
    }

    #[test]
    fn validate_rejects_broken_decompositions() {
        let theta = fam("theta:2,2,3");
        let good = decompose(&theta, None).unwrap();
        // Duplicate an edge across pieces.
        let mut dup = good.clone();
        let e0 = dup.initial_cycle[0];
        let e1 = dup.initial_cycle[1];
        dup.ears.push(vec![e0, e1]);
        assert!(!validate(&dup, &theta));
        // An ear that is a closed cycle.
        let mut closed = good.clone();
        let c = closed.initial_cycle.clone();
        closed.ears.push(vec![c[0], c[1], c[0]]);
        assert!(!validate(&closed, &theta));
    }

    #[test]
    fn one_ear_canonical_fixed_point() {
        let spec = FamilySpec::OneEarCanonical { n: 8, v: 3, w: 6 };
        let g = make(&spec).unwrap().0;
        match one_ear_canonical(&g).unwrap() {
            OneEarForm::Canonical { n, v, w, iso } => {
                assert_eq!((n, v, w), (8, 3, 6));
                assert!(is_isomorphism(&g, &g, &iso));
            }
            other => panic!("expected canonical form, got {other:?}"),
        }
    }

    #[test]
    fn hamiltonian_detection() {
        // K_4 minus an edge = theta(1,2,2) has a spanning cycle.
        let g = fam("theta:1,2,2");
        assert_eq!(one_ear_canonical(&g).unwrap(), OneEarForm::Hamiltonian);
        // Two ears.
        assert_eq!(one_ear_canonical(&fam("complete:4")).unwrap(), OneEarForm::NotOneEar);
    }

    #[test]
    fn theta0_folds_to_v2() {
        let g = fam("theta0");
        match one_ear_canonical(&g).unwrap() {
            OneEarForm::Canonical { n, v, w, iso } => {
                assert_eq!(n, 7);
                assert_eq!(v, 2);
                assert_eq!(w, 5);
                let canon = make(&FamilySpec::OneEarCanonical { n, v, w }).unwrap().0;
                assert!(is_isomorphism(&canon, &g, &iso));
            }
            other => panic!("expected canonical form, got {other:?}"),
        }
    }

    #[test]
    fn decomposition_valid_for_all_biconnected_up_to_6() {
        // Every biconnected graph on n <= 6 decomposes validly with
        // r = |E| - |V|, and any simple cycle can be forced as P_0.
        for n in 3..=6usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let g = Graph::from_edges(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                )
                .unwrap();
                if !g.is_biconnected() {
                    continue;
                }
                let d = decompose(&g, None).unwrap();
                assert!(validate(&d, &g), "mask {mask}");
                assert_eq!(d.ear_count(), g.edge_count() - n, "mask {mask}");
            }
        }
    }
}
