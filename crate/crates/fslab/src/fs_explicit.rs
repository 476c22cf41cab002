//! Explicit construction of `FS(X, Y)` over all `n!` configurations.
//!
//! This is the universal brute-force oracle: components, girth, reachability
//! and structural checks are all computed directly on the materialized graph.
//! Configurations are indexed by lexicographic permutation rank.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm;

pub const DEFAULT_N_LIMIT: usize = 8;

/// One vertex of `FS(X, Y)`: `mapping[x]` is the Y-vertex placed on X-vertex
/// `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub mapping: Vec<u8>,
}

impl Configuration {
    pub fn identity(n: usize) -> Self {
        Configuration { mapping: (0..n as u8).collect() }
    }

    pub fn new(mapping: Vec<u8>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &t in &mapping {
            if (t as usize) >= n || seen[t as usize] {
                return Err(Error::Precondition(format!(
                    "mapping {mapping:?} is not a permutation"
                )));
            }
            seen[t as usize] = true;
        }
        Ok(Configuration { mapping })
    }

    /// The configuration obtained by swapping the tokens on `a` and `b`.
    pub fn swapped(&self, a: usize, b: usize) -> Configuration {
        let mut m = self.mapping.clone();
        m.swap(a, b);
        Configuration { mapping: m }
    }

    pub fn rank(&self) -> usize {
        perm::rank(&self.mapping)
    }
}

/// Explicit `FS(X, Y)` with adjacency lists over permutation ranks.
pub struct FsGraph {
    n: usize,
    adj: Vec<Vec<u32>>,
}

/// Build `FS(x, y)`. Both graphs must have the same vertex count
/// `n <= n_limit`.
pub fn build(x: &Graph, y: &Graph, n_limit: usize) -> Result<FsGraph> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch { x: x.n(), y: y.n() });
    }
    let n = x.n();
    if n > n_limit {
        return Err(Error::TooLarge { n, limit: n_limit });
    }
    let total = perm::factorial(n);
    let y_adj = y.adjacency_masks();
    let x_edges: Vec<(usize, usize)> = x.edges().collect();
    let mut adj = vec![Vec::new(); total];
    let mut p = Vec::with_capacity(n);
    for r in 0..total {
        perm::unrank(n, r, &mut p);
        for &(a, b) in &x_edges {
            if y_adj[p[a] as usize] >> p[b] & 1 == 1 {
                p.swap(a, b);
                let r2 = perm::rank(&p);
                p.swap(a, b);
                if r2 > r {
                    adj[r].push(r2 as u32);
                    adj[r2].push(r as u32);
                }
            }
        }
    }
    Ok(FsGraph { n, adj })
}

impl FsGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, r: usize) -> &[u32] {
        &self.adj[r]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(r, nbrs)| {
            nbrs.iter().filter_map(move |&s| (s > r as u32).then_some((r as u32, s)))
        })
    }

    /// Component id per vertex plus the number of components.
    pub fn component_ids(&self) -> (Vec<u32>, usize) {
        let total = self.adj.len();
        let mut id = vec![u32::MAX; total];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..total {
            if id[s] != u32::MAX {
                continue;
            }
            id[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if id[w as usize] == u32::MAX {
                        id[w as usize] = count;
                        stack.push(w as usize);
                    }
                }
            }
            count += 1;
        }
        (id, count as usize)
    }

    /// Component sizes, ascending.
    pub fn components(&self) -> Vec<usize> {
        let (id, count) = self.component_ids();
        let mut sizes = vec![0usize; count];
        for c in id {
            sizes[c as usize] += 1;
        }
        sizes.sort_unstable();
        sizes
    }

    /// Exact girth by rooted BFS over all roots, or `None` if acyclic.
    ///
    /// `FS` graphs are bipartite, so the search stops early once a 4-cycle is
    /// found.
    pub fn girth_explicit(&self) -> Option<usize> {
        let total = self.adj.len();
        let mut best: Option<usize> = None;
        let mut level = vec![u32::MAX; total];
        let mut parent = vec![u32::MAX; total];
        let mut touched: Vec<usize> = Vec::new();
        for root in 0..total {
            if best == Some(4) {
                break;
            }
            for &t in &touched {
                level[t] = u32::MAX;
                parent[t] = u32::MAX;
            }
            touched.clear();
            level[root] = 0;
            touched.push(root);
            let mut frontier = vec![root as u32];
            let mut depth = 0u32;
            while !frontier.is_empty() {
                if let Some(b) = best {
                    if 2 * depth as usize + 1 >= b {
                        break;
                    }
                }
                let mut next = Vec::new();
                for &u in &frontier {
                    for &w in &self.adj[u as usize] {
                        if w == parent[u as usize] {
                            continue;
                        }
                        if level[w as usize] == u32::MAX {
                            level[w as usize] = depth + 1;
                            parent[w as usize] = u;
                            touched.push(w as usize);
                            next.push(w);
                        } else {
                            let c = (depth + level[w as usize] + 1) as usize;
                            if best.is_none_or(|b| c < b) {
                                best = Some(c);
                            }
                        }
                    }
                }
                frontier = next;
                depth += 1;
            }
        }
        best
    }

    /// Every edge must join permutations of opposite parity.
    pub fn bipartite_sign_check(&self) -> bool {
        let mut p = Vec::new();
        let mut odd = Vec::with_capacity(self.adj.len());
        for r in 0..self.adj.len() {
            perm::unrank(self.n, r, &mut p);
            odd.push(perm::is_odd(&p));
        }
        self.edges().all(|(r, s)| odd[r as usize] != odd[s as usize])
    }
}

/// Component-size multiset of `FS(x, y)` against the direct sum over ordered
/// set partitions of Cartesian products of per-component FS graphs.
///
/// For disconnected `x` with components `X_1..X_r`, every ordered partition
/// `(V_1..V_r)` of `V(y)` with `|V_i| = |V(X_i)|` contributes the products of
/// component sizes of the factors `FS(X_i, y[V_i])`. The check compares size
/// multisets only.
pub fn verify_decomposition(x: &Graph, y: &Graph) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch { x: x.n(), y: y.n() });
    }
    let n = x.n();
    if n > 7 {
        return Err(Error::TooLarge { n, limit: 7 });
    }
    let mut lhs = build(x, y, DEFAULT_N_LIMIT)?.components();
    lhs.sort_unstable();

    let comps = x.connected_components();
    let factors: Vec<Graph> = comps.iter().map(|c| x.induced(c)).collect();
    let sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();

    let mut rhs: Vec<usize> = Vec::new();
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    enumerate_partitions(n, &sizes, 0, (1usize << n) - 1, &mut chosen, &mut |parts| {
        let mut factor_sizes: Vec<Vec<usize>> = Vec::with_capacity(parts.len());
        for (xi, vi) in factors.iter().zip(parts) {
            let yi = y.induced(vi);
            factor_sizes.push(build(xi, &yi, DEFAULT_N_LIMIT).unwrap().components());
        }
        // Components of a Cartesian product are products of components.
        let mut products = vec![1usize];
        for fs in &factor_sizes {
            let mut next = Vec::with_capacity(products.len() * fs.len());
            for &p in &products {
                for &s in fs {
                    next.push(p * s);
                }
            }
            products = next;
        }
        rhs.extend(products);
    });
    rhs.sort_unstable();
    Ok(lhs == rhs)
}

/// Visit every ordered set partition of the vertex set with the given sizes.
fn enumerate_partitions(
    n: usize,
    sizes: &[usize],
    idx: usize,
    remaining: usize,
    chosen: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    if idx == sizes.len() {
        visit(chosen);
        return;
    }
    let avail: Vec<usize> = (0..n).filter(|&v| remaining >> v & 1 == 1).collect();
    let k = sizes[idx];
    let mut pick = vec![0usize; k];
    subsets(&avail, k, 0, 0, &mut pick, &mut |set| {
        let mask: usize = set.iter().map(|&v| 1usize << v).sum();
        chosen.push(set.to_vec());
        enumerate_partitions(n, sizes, idx + 1, remaining & !mask, chosen, visit);
        chosen.pop();
    });
}

fn subsets(
    avail: &[usize],
    k: usize,
    start: usize,
    depth: usize,
    pick: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if depth == k {
        visit(pick);
        return;
    }
    for i in start..avail.len() {
        pick[depth] = avail[i];
        subsets(avail, k, i + 1, depth + 1, pick, visit);
    }
}

/// Whether `sigma` and `sigma` with `a`,`b` swapped lie in one component of
/// `FS(x, y)`; returns the witness swap sequence (as X-edges) when they do.
///
/// Requires `{sigma(a), sigma(b)}` to be an edge of `y` and `n <= 8`.
pub fn exchangeability_oracle(
    x: &Graph,
    y: &Graph,
    sigma: &Configuration,
    a: usize,
    b: usize,
) -> Result<Option<Vec<(usize, usize)>>> {
    let n = x.n();
    if sigma.mapping.len() != n {
        return Err(Error::Precondition("configuration size mismatch".into()));
    }
    if !y.has_edge(sigma.mapping[a] as usize, sigma.mapping[b] as usize) {
        return Err(Error::Precondition(format!(
            "tokens on {a} and {b} are not adjacent in Y"
        )));
    }
    let fs = build(x, y, DEFAULT_N_LIMIT)?;
    let start = sigma.rank();
    let goal = sigma.swapped(a, b).rank();
    // BFS with parent pointers for the witness path.
    let mut prev = vec![u32::MAX; fs.vertex_count()];
    let mut seen = vec![false; fs.vertex_count()];
    seen[start] = true;
    let mut queue = std::collections::VecDeque::from([start as u32]);
    while let Some(u) = queue.pop_front() {
        if u as usize == goal {
            break;
        }
        for &w in fs.neighbors(u as usize) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                prev[w as usize] = u;
                queue.push_back(w);
            }
        }
    }
    if !seen[goal] {
        return Ok(None);
    }
    // Recover ranks along the path, then express each step as the X-edge
    // whose endpoints changed.
    let mut ranks = vec![goal as u32];
    while *ranks.last().unwrap() != start as u32 {
        ranks.push(prev[*ranks.last().unwrap() as usize]);
    }
    ranks.reverse();
    let mut steps = Vec::with_capacity(ranks.len() - 1);
    let mut cur = Vec::new();
    let mut nxt = Vec::new();
    for w in ranks.windows(2) {
        perm::unrank(n, w[0] as usize, &mut cur);
        perm::unrank(n, w[1] as usize, &mut nxt);
        let diff: Vec<usize> = (0..n).filter(|&i| cur[i] != nxt[i]).collect();
        debug_assert_eq!(diff.len(), 2);
        steps.push((diff[0], diff[1]));
    }
    Ok(Some(steps))
}
