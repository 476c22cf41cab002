//! Small-graph enumeration and canonical forms backing the verification
//! sweeps. Graphs on `n <= 8` vertices are encoded as edge bitmasks over
//! pair indices; canonical forms are brute-force minima over all `n!`
//! relabelings, which is exact at this scale.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Pair-index helpers for a fixed `n`: edge `(u, v)` with `u < v` maps to a
/// bit position in `0..n(n-1)/2`.
#[derive(Clone)]
pub struct PairIndexer {
    pub n: usize,
    pairs: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
}

impl PairIndexer {
    pub fn new(n: usize) -> Self {
        assert!(n <= 8, "mask enumeration is limited to n <= 8");
        let mut pairs = Vec::new();
        let mut index = vec![vec![usize::MAX; n]; n];
        for u in 0..n {
            for v in u + 1..n {
                index[u][v] = pairs.len();
                index[v][u] = pairs.len();
                pairs.push((u, v));
            }
        }
        PairIndexer { n, pairs, index }
    }

    pub fn bits(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair_bit(&self, u: usize, v: usize) -> usize {
        self.index[u][v]
    }

    pub fn graph(&self, mask: u64) -> Graph {
        Graph::from_edges(
            self.n,
            self.pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
        )
        .expect("mask edges are valid by construction")
    }

    pub fn mask(&self, g: &Graph) -> u64 {
        let mut m = 0u64;
        for (u, v) in g.edges() {
            m |= 1 << self.pair_bit(u, v);
        }
        m
    }

    /// Neighbor bitmasks per vertex.
    pub fn adjacency(&self, mask: u64) -> Vec<u16> {
        let mut adj = vec![0u16; self.n];
        for (i, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        adj
    }

    pub fn is_connected(&self, mask: u64) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency(mask);
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let mut next: u16 = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v] & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen.count_ones() as usize == self.n
    }

    pub fn is_biconnected(&self, mask: u64) -> bool {
        if self.n < 3 || !self.is_connected(mask) {
            return false;
        }
        let adj = self.adjacency(mask);
        (0..self.n).all(|skip| {
            let all: u16 = ((1u32 << self.n) - 1) as u16 & !(1 << skip);
            let start = all.trailing_zeros() as usize;
            let mut seen: u16 = 1 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next: u16 = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= adj[v] & all & !seen;
                }
                seen |= next;
                frontier = next;
            }
            seen == all
        })
    }

    pub fn is_forest(&self, mask: u64) -> bool {
        // Acyclic iff every component has edges = vertices - 1; equivalently
        // edge count + component count = n.
        let edges = mask.count_ones() as usize;
        let comps = self.component_count(mask);
        edges + comps == self.n
    }

    pub fn component_count(&self, mask: u64) -> usize {
        let adj = self.adjacency(mask);
        let mut seen: u16 = 0;
        let mut count = 0;
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            count += 1;
            let mut frontier: u16 = 1 << s;
            seen |= frontier;
            while frontier != 0 {
                let mut next: u16 = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= adj[v] & !seen;
                }
                seen |= next;
                frontier = next;
            }
        }
        count
    }
}

/// Brute-force canonicalizer: the minimum edge mask over all relabelings.
pub struct Canonicalizer {
    pub indexer: PairIndexer,
    /// For each permutation, old pair bit -> new pair bit.
    perm_tables: Vec<Vec<u8>>,
}

impl Canonicalizer {
    pub fn new(n: usize) -> Self {
        let indexer = PairIndexer::new(n);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut perm_tables = Vec::new();
        loop {
            let table: Vec<u8> = indexer
                .pairs
                .iter()
                .map(|&(u, v)| indexer.pair_bit(perm[u], perm[v]) as u8)
                .collect();
            perm_tables.push(table);
            if !next_perm(&mut perm) {
                break;
            }
        }
        Canonicalizer { indexer, perm_tables }
    }

    pub fn canonical(&self, mask: u64) -> u64 {
        let mut best = u64::MAX;
        for table in &self.perm_tables {
            let mut out = 0u64;
            let mut m = mask;
            while m != 0 {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                out |= 1 << table[i];
            }
            if out < best {
                best = out;
            }
        }
        best
    }
}

fn next_perm(perm: &mut [usize]) -> bool {
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

/// Representatives (as masks) of the isomorphism classes of all graphs on `n`
/// vertices satisfying `filter`, with class sizes.
pub fn classes_up_to_iso(
    canon: &Canonicalizer,
    filter: impl Fn(&PairIndexer, u64) -> bool,
) -> Vec<(u64, usize)> {
    let bits = canon.indexer.bits();
    let mut reps: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    for mask in 0..(1u64 << bits) {
        if filter(&canon.indexer, mask) {
            *reps.entry(canon.canonical(mask)).or_insert(0) += 1;
        }
    }
    let mut out: Vec<(u64, usize)> = reps.into_iter().collect();
    out.sort_unstable();
    out
}

/// All labeled trees on `n` vertices via Pruefer sequences.
pub fn labeled_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    if n == 2 {
        return vec![Graph::from_edges(2, [(0, 1)]).unwrap()];
    }
    let total = n.pow(n as u32 - 2);
    let mut out = Vec::with_capacity(total);
    let mut seq = vec![0usize; n - 2];
    loop {
        out.push(tree_from_pruefer(n, &seq));
        // Odometer.
        let mut i = seq.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut g = Graph::empty(n);
    let mut used = vec![false; n];
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).unwrap();
        g.add_edge(leaf, s).unwrap();
        used[leaf] = true;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !used[v] && degree[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

/// Free trees on exactly `n` vertices, one per isomorphism class.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return labeled_trees(n);
    }
    let canon = Canonicalizer::new(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for t in labeled_trees(n) {
        let c = canon.canonical(canon.indexer.mask(&t));
        if seen.insert(c) {
            out.push(canon.indexer.graph(c));
        }
    }
    out
}

/// Forests on exactly `n` vertices, one per isomorphism class, as disjoint
/// unions of free trees with nondecreasing (size, class) order.
pub fn free_forests(n: usize) -> Vec<Graph> {
    let trees_by_size: Vec<Vec<Graph>> = (0..=n).map(free_trees).collect();
    let mut out = Vec::new();
    let mut parts: Vec<(usize, usize)> = Vec::new(); // (size, class index)
    fn rec(
        n: usize,
        remaining: usize,
        min_part: (usize, usize),
        trees_by_size: &[Vec<Graph>],
        parts: &mut Vec<(usize, usize)>,
        out: &mut Vec<Graph>,
    ) {
        if remaining == 0 {
            let mut g = Graph::empty(n);
            let mut offset = 0;
            for &(size, idx) in parts.iter() {
                for (u, v) in trees_by_size[size][idx].edges() {
                    g.add_edge(u + offset, v + offset).unwrap();
                }
                offset += size;
            }
            out.push(g);
            return;
        }
        for size in min_part.0..=remaining {
            let start = if size == min_part.0 { min_part.1 } else { 0 };
            for idx in start..trees_by_size[size].len() {
                parts.push((size, idx));
                rec(n, remaining - size, (size, idx), trees_by_size, parts, out);
                parts.pop();
            }
        }
    }
    rec(n, n, (1, 0), &trees_by_size, &mut parts, &mut out);
    out
}

/// Rooted trees up to isomorphism by size, as (canonical code, graph rooted
/// at vertex 0) pairs.
fn rooted_trees(max_size: usize) -> Vec<Vec<(String, Graph)>> {
    let mut by_size: Vec<Vec<(String, Graph)>> = vec![Vec::new(); max_size + 1];
    if max_size == 0 {
        return by_size;
    }
    by_size[1].push(("()".to_string(), Graph::empty(1)));
    for size in 2..=max_size {
        // Children form a multiset of rooted trees with total size - 1;
        // enforce nondecreasing (size, code) to enumerate multisets once.
        let mut combos: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut cur: Vec<(usize, usize)> = Vec::new();
        fn rec(
            remaining: usize,
            min: (usize, usize),
            by_size: &[Vec<(String, Graph)>],
            cur: &mut Vec<(usize, usize)>,
            combos: &mut Vec<Vec<(usize, usize)>>,
        ) {
            if remaining == 0 {
                combos.push(cur.clone());
                return;
            }
            for s in min.0..=remaining {
                if by_size.len() <= s {
                    break;
                }
                let start = if s == min.0 { min.1 } else { 0 };
                for i in start..by_size[s].len() {
                    cur.push((s, i));
                    rec(remaining - s, (s, i), by_size, cur, combos);
                    cur.pop();
                }
            }
        }
        rec(size - 1, (1, 0), &by_size, &mut cur, &mut combos);
        for combo in combos {
            let mut codes: Vec<&str> =
                combo.iter().map(|&(s, i)| by_size[s][i].0.as_str()).collect();
            codes.sort_unstable();
            let code = format!("({})", codes.concat());
            let mut g = Graph::empty(size);
            let mut offset = 1;
            for &(s, i) in &combo {
                let child = &by_size[s][i].1;
                g.add_edge(0, offset).unwrap();
                for (u, v) in child.edges() {
                    g.add_edge(u + offset, v + offset).unwrap();
                }
                offset += s;
            }
            by_size[size].push((code, g));
        }
        by_size[size].sort_by(|a, b| a.0.cmp(&b.0));
        by_size[size].dedup_by(|a, b| a.0 == b.0);
    }
    by_size
}

/// Connected unicyclic graphs on exactly `n` vertices, one per isomorphism
/// class: a cycle of length `k` with rooted trees hung on its vertices,
/// deduplicated as a necklace of rooted-tree codes under rotation and
/// reflection.
pub fn unicyclic_up_to_iso(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let trees = rooted_trees(n.saturating_sub(2).max(1));
    for k in 3..=n {
        // Choices per cycle slot: any rooted tree with size <= n - k + 1.
        let max_tree = n - k + 1;
        let mut options: Vec<(usize, usize)> = Vec::new(); // (size, index)
        for s in 1..=max_tree.min(trees.len() - 1) {
            for i in 0..trees[s].len() {
                options.push((s, i));
            }
        }
        let mut slot = vec![0usize; k];
        let mut seen = std::collections::HashSet::new();
        loop {
            let total: usize = slot.iter().map(|&o| options[o].0).sum();
            if total == n {
                let codes: Vec<&str> = slot
                    .iter()
                    .map(|&o| trees[options[o].0][options[o].1].0.as_str())
                    .collect();
                if seen.insert(necklace_canonical(&codes)) {
                    out.push(build_sunlet(n, k, &slot, &options, &trees));
                }
            }
            // Odometer over slots.
            let mut i = k;
            let exhausted = loop {
                if i == 0 {
                    break true;
                }
                i -= 1;
                slot[i] += 1;
                if slot[i] < options.len() {
                    break false;
                }
                slot[i] = 0;
            };
            if exhausted {
                break;
            }
        }
    }
    out
}

fn necklace_canonical(codes: &[&str]) -> String {
    let k = codes.len();
    let mut best: Option<String> = None;
    for rev in [false, true] {
        let seq: Vec<&str> = if rev {
            codes.iter().rev().copied().collect()
        } else {
            codes.to_vec()
        };
        for shift in 0..k {
            let rotated: String =
                (0..k).map(|i| seq[(i + shift) % k]).collect::<Vec<_>>().join("|");
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap()
}

fn build_sunlet(
    n: usize,
    k: usize,
    slot: &[usize],
    options: &[(usize, usize)],
    trees: &[Vec<(String, Graph)>],
) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..k {
        g.add_edge(i, (i + 1) % k).unwrap();
    }
    let mut offset = k;
    for (i, &o) in slot.iter().enumerate() {
        let (s, idx) = options[o];
        let t = &trees[s][idx].1;
        // Graft the rooted tree: its root is cycle vertex i, other vertices
        // are fresh.
        let map = |v: usize| if v == 0 { i } else { offset + v - 1 };
        for (u, v) in t.edges() {
            g.add_edge(map(u), map(v)).unwrap();
        }
        offset += s - 1;
    }
    g
}

/// Deterministically sample distinct biconnected graphs on `n` vertices.
pub fn sample_biconnected(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let indexer = PairIndexer::new(n);
    let bits = indexer.bits();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let mask: u64 = rng.gen::<u64>() & ((1 << bits) - 1);
        if indexer.is_biconnected(mask) && seen.insert(mask) {
            out.push(indexer.graph(mask));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_predicates_agree_with_graph_methods() {
        let idx = PairIndexer::new(5);
        for mask in 0..(1u64 << idx.bits()) {
            let g = idx.graph(mask);
            assert_eq!(idx.is_connected(mask), g.is_connected());
            assert_eq!(idx.is_forest(mask), g.is_forest());
            if mask % 7 == 0 {
                assert_eq!(idx.is_biconnected(mask), g.is_biconnected());
            }
        }
    }

    #[test]
    fn canonical_is_isomorphism_invariant() {
        let canon = Canonicalizer::new(5);
        let g = canon.indexer.mask(&Graph::from_edges(5, [(0, 1), (1, 2), (2, 3)]).unwrap());
        let h = canon.indexer.mask(&Graph::from_edges(5, [(4, 2), (2, 0), (0, 3)]).unwrap());
        assert_eq!(canon.canonical(g), canon.canonical(h));
    }

    #[test]
    fn graph_class_counts_match_known_values() {
        // Graphs on 4 vertices up to isomorphism: 11; on 5: 34.
        let canon4 = Canonicalizer::new(4);
        assert_eq!(classes_up_to_iso(&canon4, |_, _| true).len(), 11);
        let canon5 = Canonicalizer::new(5);
        assert_eq!(classes_up_to_iso(&canon5, |_, _| true).len(), 34);
    }

    #[test]
    fn tree_counts() {
        // Cayley: n^(n-2) labeled trees.
        assert_eq!(labeled_trees(4).len(), 16);
        assert_eq!(labeled_trees(5).len(), 125);
        // Free trees: 1, 1, 1, 2, 3, 6, 11.
        assert_eq!(free_trees(4).len(), 2);
        assert_eq!(free_trees(6).len(), 6);
        assert_eq!(free_trees(7).len(), 11);
        assert!(free_trees(7).iter().all(|t| t.is_forest() && t.is_connected()));
    }

    #[test]
    fn forest_counts() {
        // Unlabeled forests on n nodes: 1, 2, 3, 6, 10, 20, 37.
        assert_eq!(free_forests(3).len(), 3);
        assert_eq!(free_forests(5).len(), 10);
        assert_eq!(free_forests(6).len(), 20);
        assert_eq!(free_forests(7).len(), 37);
    }

    #[test]
    fn unicyclic_counts() {
        // Connected unicyclic graphs up to isomorphism: 1, 2, 5, 13, 33, 89.
        assert_eq!(unicyclic_up_to_iso(3).len(), 1);
        assert_eq!(unicyclic_up_to_iso(4).len(), 2);
        assert_eq!(unicyclic_up_to_iso(5).len(), 5);
        assert_eq!(unicyclic_up_to_iso(6).len(), 13);
        assert_eq!(unicyclic_up_to_iso(7).len(), 33);
        assert_eq!(unicyclic_up_to_iso(8).len(), 89);
        for g in unicyclic_up_to_iso(7) {
            assert!(g.is_connected());
            assert_eq!(g.edge_count(), g.n());
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_biconnected(7, 10, 42);
        let b = sample_biconnected(7, 10, 42);
        assert_eq!(a.len(), 10);
        assert!(a.iter().zip(&b).all(|(x, y)| x == y));
        assert!(a.iter().all(|g| g.is_biconnected()));
    }
}
