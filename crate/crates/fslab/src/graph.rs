//! Simple undirected graphs on 0-indexed contiguous vertices, plus the
//! labeled multigraph produced by suppressing degree-2 vertices.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple undirected graph. Edges are stored as ordered pairs `(u, v)` with
/// `u < v`; no loops, no parallel edges.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u},{v}) out of range for n = {}",
                self.n
            )));
        }
        self.edges.insert(norm(u, v));
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&norm(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Per-vertex neighbor bitmasks; requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }

    pub fn complement(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.edges.contains(&(u, v)) {
                    edges.insert((u, v));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Connected, at least 3 vertices, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let adj = self.adjacency();
        // Removing any single vertex must leave the rest connected.
        (0..self.n).all(|skip| {
            let start = (0..self.n).find(|&v| v != skip).unwrap();
            let mut seen = vec![false; self.n];
            seen[skip] = true;
            seen[start] = true;
            let mut queue = vec![start];
            let mut count = 1;
            while let Some(u) = queue.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        queue.push(w);
                    }
                }
            }
            count == self.n - 1
        })
    }

    /// Length of the shortest cycle, or `None` for a forest.
    ///
    /// Rooted BFS from every vertex; a non-tree edge seen from `u` to an
    /// already-leveled `w` closes a walk of length `level(u) + level(w) + 1`
    /// through the root. Such a walk always contains a cycle no longer than
    /// itself, and a root lying on a shortest cycle reports its exact length,
    /// so the minimum over all roots is the girth.
    pub fn girth(&self) -> Option<usize> {
        let adj = self.adjacency();
        let mut best: Option<usize> = None;
        let mut level = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if best == Some(3) {
                break;
            }
            level.fill(usize::MAX);
            parent.fill(usize::MAX);
            level[root] = 0;
            let mut frontier = vec![root];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &u in &frontier {
                    // No improvement possible beyond half the best length.
                    if let Some(b) = best {
                        if 2 * level[u] + 1 >= b {
                            continue;
                        }
                    }
                    for &w in &adj[u] {
                        if w == parent[u] {
                            continue;
                        }
                        if level[w] == usize::MAX {
                            level[w] = level[u] + 1;
                            parent[w] = u;
                            next.push(w);
                        } else {
                            let c = level[u] + level[w] + 1;
                            if best.is_none_or(|b| c < b) {
                                best = Some(c);
                            }
                        }
                    }
                }
                frontier = next;
            }
        }
        best
    }

    /// Forest test with component sizes and their gcd.
    pub fn forest_profile(&self) -> ForestProfile {
        let comps = self.connected_components();
        let is_forest = self.edges.len() + comps.len() == self.n;
        if !is_forest || self.n == 0 {
            return ForestProfile { is_forest, tree_sizes: Vec::new(), gcd_of_sizes: None };
        }
        let mut tree_sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        tree_sizes.sort_unstable();
        let gcd = tree_sizes.iter().copied().fold(0, gcd);
        ForestProfile { is_forest, tree_sizes, gcd_of_sizes: Some(gcd) }
    }

    pub fn is_forest(&self) -> bool {
        self.forest_profile().is_forest
    }

    /// Two edges with no shared endpoint.
    pub fn has_two_disjoint_edges(&self) -> bool {
        let edges: Vec<_> = self.edges.iter().copied().collect();
        for (i, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[i + 1..] {
                if a != c && a != d && b != c && b != d {
                    return true;
                }
            }
        }
        false
    }

    pub fn has_triangle(&self) -> bool {
        if self.n > 64 {
            let adj = self.adjacency();
            return self.edges.iter().any(|&(u, v)| {
                adj[u].iter().any(|&w| w != v && self.has_edge(w, v))
            });
        }
        let masks = self.adjacency_masks();
        self.edges.iter().any(|&(u, v)| masks[u] & masks[v] != 0)
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for &w in &adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Suppress every degree-2 vertex, merging its incident edges and summing
    /// their length labels. A cycle collapses to a single vertex carrying one
    /// loop labeled with the cycle length.
    ///
    /// Requires a connected graph with minimum degree 2.
    pub fn topological_core(&self) -> Result<Multigraph> {
        if self.n == 0 || !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let adj = self.adjacency();
        if let Some(v) = (0..self.n).find(|&v| adj[v].len() < 2) {
            return Err(Error::InvalidGraph(format!(
                "vertex {v} has degree {} < 2",
                adj[v].len()
            )));
        }
        let hubs: Vec<usize> = (0..self.n).filter(|&v| adj[v].len() >= 3).collect();
        if hubs.is_empty() {
            // All degrees are 2 and the graph is connected: a single cycle.
            return Ok(Multigraph { vertex_count: 1, edges: vec![(0, 0, self.n)] });
        }
        let mut hub_id = vec![usize::MAX; self.n];
        for (i, &h) in hubs.iter().enumerate() {
            hub_id[h] = i;
        }
        let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut edges = Vec::new();
        for &h in &hubs {
            for &start in &adj[h] {
                if used.contains(&norm(h, start)) {
                    continue;
                }
                let mut prev = h;
                let mut cur = start;
                let mut len = 1;
                used.insert(norm(h, start));
                while hub_id[cur] == usize::MAX {
                    let next = *adj[cur].iter().find(|&&w| w != prev).unwrap();
                    used.insert(norm(cur, next));
                    prev = cur;
                    cur = next;
                    len += 1;
                }
                let (a, b) = norm(hub_id[h], hub_id[cur]);
                edges.push((a, b, len));
            }
        }
        edges.sort_unstable();
        Ok(Multigraph { vertex_count: hubs.len(), edges })
    }

    /// Bit-exact JSON: `{"n": <int>, "edges": [[u,v], ...]}` with `u < v`,
    /// edges sorted lexicographically.
    pub fn to_json(&self) -> String {
        let doc = GraphJson { n: self.n, edges: self.edges.iter().copied().collect() };
        serde_json::to_string(&doc).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let doc: GraphJson = serde_json::from_str(text)?;
        Graph::from_edges(doc.n, doc.edges)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(u, v)| norm(perm[u], perm[v])).collect();
        Graph { n: self.n, edges }
    }

    /// Induced subgraph on `verts` (sorted ascending), relabeled to
    /// `0..verts.len()`.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| norm(pos[u], pos[v]))
            .collect();
        Graph { n: verts.len(), edges }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForestProfile {
    pub is_forest: bool,
    /// Component vertex counts, ascending; empty unless `is_forest`.
    pub tree_sizes: Vec<usize>,
    /// Defined iff the graph is a nonempty forest.
    pub gcd_of_sizes: Option<usize>,
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Multigraph with positive length labels; the target of degree-2
/// suppression. Parallel edges and loops are allowed; a loop is stored as
/// `(v, v, len)` with `len >= 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    pub vertex_count: usize,
    /// `(u, v, length)` with `u <= v`, sorted.
    pub edges: Vec<(usize, usize, usize)>,
}

impl Multigraph {
    pub fn total_length(&self) -> usize {
        self.edges.iter().map(|&(_, _, l)| l).sum()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b, _)| match (a == v, b == v) {
                (true, true) => 2,
                (true, false) | (false, true) => 1,
                _ => 0,
            })
            .sum()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|&&(a, b, _)| a == b).count()
    }
}
