//! Implicit search over `FS(X, Star_n)` without materializing `n!` vertices.
//!
//! With `Y = Star_n` the only friendly swaps move the central token, so a
//! configuration is a placement of tokens on `V(X)` and its neighbors are the
//! X-edges incident to the central token's position. States pack into 64 bits
//! (4 bits per vertex), and relabeling the non-central tokens is an
//! automorphism, so girth searches only need one canonical root per X-vertex.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fs_explicit::{self, Configuration};
use crate::girth_theory;
use crate::graph::Graph;
use crate::trajectories::SwapSequence;

/// Hard engine limit: 4-bit packing plus an all-ones empty-slot sentinel.
pub const MAX_N: usize = 14;

/// Central token id for `Star_n` with center `n - 1`.
pub fn central_token(n: usize) -> u8 {
    n as u8 - 1
}

/// A configuration packed 4 bits per X-vertex, with the central token's
/// position cached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PackedConfig {
    bits: u64,
    central: u8,
}

impl PackedConfig {
    pub fn pack(mapping: &[u8]) -> PackedConfig {
        debug_assert!(mapping.len() <= MAX_N);
        let central = central_token(mapping.len());
        let mut bits = 0u64;
        let mut central_pos = 0u8;
        for (i, &t) in mapping.iter().enumerate() {
            bits |= (t as u64) << (4 * i);
            if t == central {
                central_pos = i as u8;
            }
        }
        PackedConfig { bits, central: central_pos }
    }

    pub fn unpack(&self, n: usize) -> Vec<u8> {
        (0..n).map(|i| (self.bits >> (4 * i) & 0xF) as u8).collect()
    }

    pub fn key(&self) -> u64 {
        self.bits
    }

    /// Position of the central token.
    pub fn central_pos(&self) -> usize {
        self.central as usize
    }

    /// Move the central token from its position to adjacent position `q`.
    pub fn swap_central_to(&self, q: usize) -> PackedConfig {
        let p = self.central as usize;
        let tp = self.bits >> (4 * p) & 0xF;
        let tq = self.bits >> (4 * q) & 0xF;
        let mut bits = self.bits;
        bits &= !(0xF << (4 * p));
        bits &= !(0xF << (4 * q));
        bits |= tq << (4 * p);
        bits |= tp << (4 * q);
        PackedConfig { bits, central: q as u8 }
    }

    /// Canonical representative with the central token at `v`: all other
    /// tokens placed in index order on the remaining vertices.
    pub fn canonical_root(n: usize, v: usize) -> PackedConfig {
        let mut mapping = Vec::with_capacity(n);
        let mut next = 0u8;
        for i in 0..n {
            if i == v {
                mapping.push(central_token(n));
            } else {
                mapping.push(next);
                next += 1;
            }
        }
        PackedConfig::pack(&mapping)
    }
}

/// Neighbors of `c` in `FS(x, Star_n)`: one per X-edge incident to the
/// central token's position.
pub fn neighbors(x: &Graph, c: &PackedConfig) -> Vec<PackedConfig> {
    let adj = x.adjacency();
    adj[c.central_pos()].iter().map(|&q| c.swap_central_to(q)).collect()
}

/// Open-addressed index over packed states: power-of-two capacity, linear
/// probing, grown geometrically. `u64::MAX` marks an empty slot (never a
/// valid packing for n <= 15).
struct PackedTable {
    keys: Vec<u64>,
    meta: Vec<Meta>,
    mask: usize,
    len: usize,
}

#[derive(Clone, Copy, Default)]
struct Meta {
    level: u16,
    /// Central position before the move that discovered this state;
    /// `u8::MAX` for the root.
    prev_central: u8,
}

const EMPTY: u64 = u64::MAX;

impl PackedTable {
    fn new() -> Self {
        let cap = 1 << 10;
        PackedTable { keys: vec![EMPTY; cap], meta: vec![Meta::default(); cap], mask: cap - 1, len: 0 }
    }

    #[inline]
    fn slot(&self, key: u64) -> usize {
        (key.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> 32) as usize & self.mask
    }

    #[inline]
    fn get(&self, key: u64) -> Option<Meta> {
        let mut i = self.slot(key);
        loop {
            let k = self.keys[i];
            if k == key {
                return Some(self.meta[i]);
            }
            if k == EMPTY {
                return None;
            }
            i = (i + 1) & self.mask;
        }
    }

    /// Insert if absent; returns whether the key was new.
    fn insert(&mut self, key: u64, meta: Meta) -> bool {
        if (self.len + 1) * 10 >= self.keys.len() * 7 {
            self.grow();
        }
        let mut i = self.slot(key);
        loop {
            let k = self.keys[i];
            if k == key {
                return false;
            }
            if k == EMPTY {
                self.keys[i] = key;
                self.meta[i] = meta;
                self.len += 1;
                return true;
            }
            i = (i + 1) & self.mask;
        }
    }

    fn grow(&mut self) {
        let cap = self.keys.len() * 2;
        let old_keys = std::mem::replace(&mut self.keys, vec![EMPTY; cap]);
        let old_meta = std::mem::replace(&mut self.meta, vec![Meta::default(); cap]);
        self.mask = cap - 1;
        for (k, m) in old_keys.into_iter().zip(old_meta) {
            if k != EMPTY {
                let mut i = self.slot(k);
                while self.keys[i] != EMPTY {
                    i = (i + 1) & self.mask;
                }
                self.keys[i] = k;
                self.meta[i] = m;
            }
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Maximum BFS level to visit (cycles up to twice this are detectable).
    pub depth_cap: Option<usize>,
    /// Per-root visited-state cap.
    pub state_cap: Option<usize>,
}

pub const DEFAULT_STATE_CAP: usize = 50_000_000;

/// Exact reachability in `FS(x, Star_n)` with a witness swap sequence.
pub fn reachable(
    x: &Graph,
    from: &Configuration,
    to: &Configuration,
    state_cap: Option<usize>,
) -> Result<Option<Vec<(usize, usize)>>> {
    let n = x.n();
    if n > MAX_N {
        return Err(Error::TooLarge { n, limit: MAX_N });
    }
    if from.mapping.len() != n || to.mapping.len() != n {
        return Err(Error::Precondition("configuration size mismatch".into()));
    }
    let cap = state_cap.unwrap_or(DEFAULT_STATE_CAP);
    let adj = x.adjacency();
    let start = PackedConfig::pack(&from.mapping);
    let goal = PackedConfig::pack(&to.mapping);
    let mut table = PackedTable::new();
    table.insert(start.key(), Meta { level: 0, prev_central: u8::MAX });
    let mut frontier = vec![start];
    let mut level = 0u16;
    'bfs: while !frontier.is_empty() {
        if table.len > cap {
            return Err(Error::Budget { visited: table.len, cap });
        }
        let mut next = Vec::new();
        for c in &frontier {
            if c.key() == goal.key() {
                break 'bfs;
            }
            for &q in &adj[c.central_pos()] {
                let nc = c.swap_central_to(q);
                if table
                    .insert(nc.key(), Meta { level: level + 1, prev_central: c.central })
                {
                    next.push(nc);
                }
            }
        }
        frontier = next;
        level += 1;
    }
    if table.get(goal.key()).is_none() {
        return Ok(None);
    }
    // Walk back to the start: undoing the discovery move of each state is
    // swapping the central token back to its previous position.
    let mut steps_rev = Vec::new();
    let mut cur = goal;
    loop {
        let meta = table.get(cur.key()).unwrap();
        if meta.prev_central == u8::MAX {
            break;
        }
        let p = meta.prev_central as usize;
        steps_rev.push((cur.central_pos().min(p), cur.central_pos().max(p)));
        cur = cur.swap_central_to(p);
    }
    steps_rev.reverse();
    Ok(Some(steps_rev))
}

/// Outcome of a girth search.
#[derive(Clone, Debug, Serialize)]
pub struct GirthReport {
    pub value: GirthValue,
    /// Closed walk of the central token realizing a `Finite` value.
    pub witness: Option<SwapSequence>,
    pub method: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GirthValue {
    Finite(usize),
    Infinite,
    /// The search was truncated: no cycle of length below `floor` exists,
    /// and `best_upper` is the shortest cycle actually found (if any).
    UnknownAbove { floor: usize, best_upper: Option<usize> },
}

impl GirthValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            GirthValue::Finite(v) => Some(*v),
            _ => None,
        }
    }
}

struct RootOutcome {
    /// Shortest candidate cycle through this root, with the two endpoint
    /// states of the closing edge.
    best: Option<(usize, PackedConfig, PackedConfig)>,
    /// All levels `<= complete_level` were fully expanded.
    complete_level: usize,
}

/// Exact girth of `FS(x, Star_n)` for connected `x`.
///
/// One rooted BFS per X-vertex from a canonical configuration; every state of
/// `FS(x, Star_n)` is equivalent to one of these roots under relabeling of the
/// non-central tokens, so the minimum over roots is the girth. Non-tree edges
/// close walks through the root whose lengths never undercut the girth, and a
/// root on a shortest cycle reports it exactly. Search depth per root is
/// bounded by the best formula upper bound, the best cycle found so far, and
/// `opts.depth_cap`.
pub fn girth_star(x: &Graph, opts: &SearchOptions) -> Result<GirthReport> {
    let n = x.n();
    if !x.is_connected() {
        return Err(Error::NotConnected);
    }
    if x.girth().is_none() {
        return Ok(GirthReport { value: GirthValue::Infinite, witness: None, method: "search" });
    }
    if n > MAX_N {
        return Err(Error::TooLarge { n, limit: MAX_N });
    }
    let bound = girth_theory::upper_bound_hint(x);
    let state_cap = opts.state_cap.unwrap_or(DEFAULT_STATE_CAP);
    // Visiting levels up to ceil(bound/2) suffices to see every cycle of
    // length <= bound through the root.
    let visit_cap = opts.depth_cap.unwrap_or(bound.div_ceil(2)).min(bound.div_ceil(2));

    let adj = x.adjacency();
    let outcomes: Vec<RootOutcome> = (0..n)
        .into_par_iter()
        .map(|v| bfs_root(&adj, n, v, visit_cap, state_cap, bound))
        .collect();

    let mut best: Option<(usize, usize)> = None; // (length, root)
    for (v, o) in outcomes.iter().enumerate() {
        if let Some((len, _, _)) = o.best {
            if best.is_none_or(|(b, _)| len < b) {
                best = Some((len, v));
            }
        }
    }
    // The search is exact when every root was expanded far enough to have
    // seen any cycle shorter than the best one found.
    let need = |len: usize| len / 2 - 1;
    match best {
        Some((len, root)) => {
            let exact = outcomes.iter().all(|o| o.complete_level >= need(len));
            if exact {
                let (_, u, w) = outcomes[root].best.unwrap();
                let witness = reconstruct_witness(&adj, n, root, u, w, visit_cap);
                Ok(GirthReport {
                    value: GirthValue::Finite(len),
                    witness: Some(witness),
                    method: "search",
                })
            } else {
                let floor = outcomes
                    .iter()
                    .map(|o| 2 * o.complete_level + 4)
                    .min()
                    .unwrap()
                    .min(len);
                Ok(GirthReport {
                    value: GirthValue::UnknownAbove { floor, best_upper: Some(len) },
                    witness: None,
                    method: "search",
                })
            }
        }
        None => {
            let floor = outcomes.iter().map(|o| 2 * o.complete_level + 4).min().unwrap();
            Ok(GirthReport {
                value: GirthValue::UnknownAbove { floor, best_upper: None },
                witness: None,
                method: "search",
            })
        }
    }
}

fn bfs_root(
    adj: &[Vec<usize>],
    n: usize,
    root_vertex: usize,
    visit_cap: usize,
    state_cap: usize,
    initial_bound: usize,
) -> RootOutcome {
    let root = PackedConfig::canonical_root(n, root_vertex);
    let mut table = PackedTable::new();
    table.insert(root.key(), Meta { level: 0, prev_central: u8::MAX });
    let mut frontier = vec![root];
    let mut best: Option<(usize, PackedConfig, PackedConfig)> = None;
    let mut bound = initial_bound;
    let mut complete_level = 0usize;
    let mut level = 0usize;
    while !frontier.is_empty() {
        // Expanding level L generates level L+1 and can only reveal cycles of
        // length >= 2L + 2; nothing below the current bound remains once
        // L + 1 exceeds bound/2.
        if level + 1 > visit_cap || level + 1 > bound / 2 {
            break;
        }
        if table.len > state_cap {
            break;
        }
        let mut next = Vec::new();
        for c in &frontier {
            let c_level = level as u16;
            let c_prev = table.get(c.key()).unwrap().prev_central;
            for &q in &adj[c.central_pos()] {
                if c_prev != u8::MAX && q == c_prev as usize {
                    continue; // parent edge
                }
                let nc = c.swap_central_to(q);
                if table.insert(nc.key(), Meta { level: c_level + 1, prev_central: c.central }) {
                    next.push(nc);
                } else {
                    let m = table.get(nc.key()).unwrap();
                    let len = level + m.level as usize + 1;
                    if len <= bound && best.as_ref().is_none_or(|&(b, _, _)| len < b) {
                        best = Some((len, *c, nc));
                        bound = len;
                    }
                }
            }
        }
        complete_level = level;
        frontier = next;
        level += 1;
    }
    if frontier.is_empty() {
        // The component was exhausted: everything detectable was seen.
        complete_level = usize::MAX / 4;
    }
    RootOutcome { best, complete_level }
}

/// All closed walks of length `len` through the canonical root at
/// `root_vertex` that arise from a single non-tree edge; used to gather
/// full-usage evidence over every girth-achieving candidate at one root.
pub fn closed_walks_through_root(
    x: &Graph,
    root_vertex: usize,
    len: usize,
) -> Result<Vec<SwapSequence>> {
    let n = x.n();
    if n > MAX_N {
        return Err(Error::TooLarge { n, limit: MAX_N });
    }
    let adj = x.adjacency();
    let root = PackedConfig::canonical_root(n, root_vertex);
    let mut table = PackedTable::new();
    table.insert(root.key(), Meta { level: 0, prev_central: u8::MAX });
    let mut frontier = vec![root];
    let mut level = 0usize;
    let mut closing: Vec<(PackedConfig, PackedConfig)> = Vec::new();
    while !frontier.is_empty() && level < len.div_ceil(2) {
        let mut next = Vec::new();
        for c in &frontier {
            let c_prev = table.get(c.key()).unwrap().prev_central;
            for &q in &adj[c.central_pos()] {
                if c_prev != u8::MAX && q == c_prev as usize {
                    continue;
                }
                let nc = c.swap_central_to(q);
                if table.insert(nc.key(), Meta { level: level as u16 + 1, prev_central: c.central })
                {
                    next.push(nc);
                } else if level + table.get(nc.key()).unwrap().level as usize + 1 == len {
                    closing.push((*c, nc));
                }
            }
        }
        frontier = next;
        level += 1;
    }
    Ok(closing
        .into_iter()
        .map(|(u, w)| reconstruct_witness(&adj, n, root_vertex, u, w, len.div_ceil(2)))
        .collect())
}

/// Rebuild the closed walk through the root from the closing edge `(u, w)`.
fn reconstruct_witness(
    adj: &[Vec<usize>],
    n: usize,
    root_vertex: usize,
    u: PackedConfig,
    w: PackedConfig,
    visit_cap: usize,
) -> SwapSequence {
    // Re-run the BFS to rebuild predecessor metadata (the per-root tables are
    // dropped to keep the parallel reduction small).
    let root = PackedConfig::canonical_root(n, root_vertex);
    let mut table = PackedTable::new();
    table.insert(root.key(), Meta { level: 0, prev_central: u8::MAX });
    let mut frontier = vec![root];
    let mut level = 0usize;
    while !frontier.is_empty() && level < visit_cap {
        let mut next = Vec::new();
        for c in &frontier {
            let c_prev = table.get(c.key()).unwrap().prev_central;
            for &q in &adj[c.central_pos()] {
                if c_prev != u8::MAX && q == c_prev as usize {
                    continue;
                }
                let nc = c.swap_central_to(q);
                if table.insert(nc.key(), Meta { level: level as u16 + 1, prev_central: c.central })
                {
                    next.push(nc);
                }
            }
        }
        frontier = next;
        level += 1;
    }
    let path_to_root = |mut c: PackedConfig| -> Vec<(usize, usize)> {
        let mut steps = Vec::new();
        loop {
            let meta = table.get(c.key()).unwrap();
            if meta.prev_central == u8::MAX {
                break;
            }
            let p = meta.prev_central as usize;
            steps.push((c.central_pos().min(p), c.central_pos().max(p)));
            c = c.swap_central_to(p);
        }
        steps
    };
    // root -> u, closing edge, w -> root.
    let mut steps: Vec<(usize, usize)> = path_to_root(u);
    steps.reverse();
    let e = (u.central_pos().min(w.central_pos()), u.central_pos().max(w.central_pos()));
    steps.push(e);
    steps.extend(path_to_root(w));
    SwapSequence { start_vertex: root_vertex, steps }
}

/// Connected host graphs at size `n` for girth sweeps: labeled-exhaustive
/// for `n <= 5` (or `n = 6` with `exhaustive`), isomorphism-class
/// representatives at `n = 6`, seeded samples at `n = 7`.
pub fn connected_hosts(
    n: usize,
    opts: &crate::connectivity::SweepOptions,
) -> Result<Vec<Graph>> {
    use crate::enumerate::{classes_up_to_iso, Canonicalizer, PairIndexer};
    if !(3..=7).contains(&n) {
        return Err(Error::Precondition(format!("girth sweep needs 3 <= n <= 7, got {n}")));
    }
    let idx = PairIndexer::new(n);
    Ok(if n <= 5 || (n == 6 && opts.exhaustive) {
        (0..(1u64 << idx.bits()))
            .filter(|&m| idx.is_connected(m))
            .map(|m| idx.graph(m))
            .collect()
    } else if n == 6 {
        let canon = Canonicalizer::new(6);
        classes_up_to_iso(&canon, |i, m| i.is_connected(m))
            .into_iter()
            .map(|(m, _)| idx.graph(m))
            .collect()
    } else {
        let mut hs = Vec::new();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(opts.seed);
        let mut seen = std::collections::HashSet::new();
        while hs.len() < opts.sample {
            let mask: u64 = rand::Rng::gen::<u64>(&mut rng) & ((1 << idx.bits()) - 1);
            if idx.is_connected(mask) && seen.insert(mask) {
                hs.push(idx.graph(mask));
            }
        }
        hs
    })
}

/// For every connected host `x` at size `n`: the implicit search must agree
/// with the explicit oracle on `FS(x, Star_n)`, be infinite exactly for
/// acyclic `x`, and respect the quadratic bound.
pub fn star_girth_agreement_sweep(
    n: usize,
    opts: &crate::connectivity::SweepOptions,
) -> Result<crate::connectivity::SweepReport> {
    use crate::connectivity::{Mismatch, SweepReport};
    let hosts = connected_hosts(n, opts)?;
    let star = crate::families::make(&crate::families::FamilySpec::Star(n))?.0;
    let reports: Vec<SweepReport> = hosts
        .par_iter()
        .map(|x| {
            let mut rep = SweepReport { instances: 1, ..Default::default() };
            let explicit = fs_explicit::build(x, &star, fs_explicit::DEFAULT_N_LIMIT)
                .unwrap()
                .girth_explicit();
            let searched = girth_star(x, &SearchOptions::default()).unwrap();
            let agree = match (&searched.value, explicit) {
                (GirthValue::Finite(a), Some(b)) => *a == b,
                (GirthValue::Infinite, None) => true,
                _ => false,
            };
            let acyclic_iff = (x.girth().is_none()) == (searched.value == GirthValue::Infinite);
            let quad_ok = match (x.girth(), &searched.value) {
                (Some(g), GirthValue::Finite(v)) => *v <= g * (g - 1),
                (None, GirthValue::Infinite) => true,
                _ => false,
            };
            if !(agree && acyclic_iff && quad_ok) {
                rep.mismatches.push(Mismatch {
                    check: "girth_star_vs_explicit".into(),
                    x: x.to_json(),
                    y: star.to_json(),
                    predicted: format!("{:?}", searched.value),
                    actual: format!("{explicit:?}"),
                });
            }
            rep
        })
        .collect();
    let mut out = SweepReport::default();
    for r in reports {
        out.merge(r);
    }
    Ok(out)
}

/// The four-cycle biconditional against the oracle over host pairs at size
/// `n <= 5`: labeled-exhaustive at `n <= 4`, isomorphism-class
/// representatives at `n = 5` (both sides of the biconditional are
/// relabeling-invariant).
pub fn four_cycle_pair_sweep(n: usize) -> Result<crate::connectivity::SweepReport> {
    use crate::connectivity::{Mismatch, SweepReport};
    use crate::enumerate::{classes_up_to_iso, Canonicalizer, PairIndexer};
    use crate::girth_theory;
    if !(3..=5).contains(&n) {
        return Err(Error::Precondition(format!("pair sweep needs 3 <= n <= 5, got {n}")));
    }
    let idx = PairIndexer::new(n);
    let pair_hosts: Vec<Graph> = if n <= 4 {
        (0..(1u64 << idx.bits())).map(|m| idx.graph(m)).collect()
    } else {
        let canon = Canonicalizer::new(5);
        classes_up_to_iso(&canon, |_, _| true).into_iter().map(|(m, _)| idx.graph(m)).collect()
    };
    let pairs: Vec<(usize, usize)> = (0..pair_hosts.len())
        .flat_map(|i| (0..pair_hosts.len()).map(move |j| (i, j)))
        .collect();
    let reports: Vec<SweepReport> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (x, y) = (&pair_hosts[i], &pair_hosts[j]);
            let mut rep = SweepReport { instances: 1, ..Default::default() };
            let predicted = girth_theory::girth_is_four(x, y);
            let actual = fs_explicit::build(x, y, fs_explicit::DEFAULT_N_LIMIT)
                .unwrap()
                .girth_explicit()
                == Some(4);
            if predicted != actual {
                rep.mismatches.push(Mismatch {
                    check: "girth_is_four".into(),
                    x: x.to_json(),
                    y: y.to_json(),
                    predicted: predicted.to_string(),
                    actual: actual.to_string(),
                });
            }
            rep
        })
        .collect();
    let mut out = SweepReport::default();
    for r in reports {
        out.merge(r);
    }
    Ok(out)
}

/// Girth sweep at size `n`: search-vs-oracle agreement for every connected
/// host, plus the four-cycle pair biconditional when `n <= 5`.
pub fn verify_girth_sweep(
    n: usize,
    opts: &crate::connectivity::SweepOptions,
) -> Result<crate::connectivity::SweepReport> {
    let mut report = star_girth_agreement_sweep(n, opts)?;
    if n <= 5 {
        report.merge(four_cycle_pair_sweep(n)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilySpec};
    use crate::fs_explicit;
    use crate::trajectories;

    fn fam(text: &str) -> Graph {
        make(&FamilySpec::parse(text).unwrap()).unwrap().0
    }

    #[test]
    fn pack_round_trip() {
        let mapping = vec![3, 0, 2, 1, 4];
        let pc = PackedConfig::pack(&mapping);
        assert_eq!(pc.unpack(5), mapping);
        assert_eq!(pc.central_pos(), 4);
    }

    #[test]
    fn neighbor_counts_match_degree() {
        let x = fam("cycle:5");
        let c = PackedConfig::canonical_root(5, 2);
        assert_eq!(neighbors(&x, &c).len(), 2);

        let star = fam("star:5");
        let center = PackedConfig::canonical_root(5, 4);
        assert_eq!(neighbors(&star, &center).len(), 4);

        let theta = fam("theta:2,2,2");
        let hub = PackedConfig::canonical_root(5, 0);
        assert_eq!(neighbors(&theta, &hub).len(), 3);
    }

    #[test]
    fn reachable_trivial_and_rotation() {
        let x = fam("cycle:4");
        let id = Configuration::identity(4);
        let path = reachable(&x, &id, &id, None).unwrap().unwrap();
        assert!(path.is_empty());

        // Walking the central token once around the cycle rotates the other
        // tokens by one; six further steps realize a 6-step path.
        let mut c = id.clone();
        let seq = [(3usize, 0usize), (0, 1), (1, 2), (2, 3), (3, 0), (0, 1)];
        for &(u, v) in &seq {
            c = c.swapped(u, v);
        }
        let path = reachable(&x, &id, &c, None).unwrap().unwrap();
        assert_eq!(path.len(), 6);
    }

    #[test]
    fn path_components_are_rigid() {
        // In FS(Path_n, Star_n) the non-central tokens keep their relative
        // order, so transposing two of them is unreachable.
        let x = fam("path:4");
        let id = Configuration::identity(4);
        let mut other = id.clone();
        other.mapping.swap(0, 1); // swap tokens 0,1 (neither is central)
        assert!(reachable(&x, &id, &other, None).unwrap().is_none());
    }

    #[test]
    fn girth_matches_star_cycle_formula() {
        let report = girth_star(&fam("cycle:5"), &SearchOptions::default()).unwrap();
        assert_eq!(report.value, GirthValue::Finite(20));
        let witness = report.witness.unwrap();
        let sim = trajectories::simulate(&fam("cycle:5"), &witness).unwrap();
        assert!(sim.is_closed && sim.is_simple);
        assert_eq!(sim.length, 20);
    }

    #[test]
    fn girth_of_unicyclic_uses_cycle_length() {
        // Triangle with one pendant vertex: k(k-1) = 6.
        let x = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let report = girth_star(&x, &SearchOptions::default()).unwrap();
        assert_eq!(report.value, GirthValue::Finite(6));
    }

    #[test]
    fn girth_star_agrees_with_explicit_oracle_on_k23() {
        let x = fam("theta:2,2,2"); // K_{2,3} on 5 vertices
        let explicit =
            fs_explicit::build(&x, &fam("star:5"), 8).unwrap().girth_explicit().unwrap();
        let report = girth_star(&x, &SearchOptions::default()).unwrap();
        assert_eq!(report.value, GirthValue::Finite(explicit));
    }

    #[test]
    fn acyclic_is_infinite() {
        let report = girth_star(&fam("path:6"), &SearchOptions::default()).unwrap();
        assert_eq!(report.value, GirthValue::Infinite);
    }

    #[test]
    fn depth_cap_degrades_to_unknown() {
        let report = girth_star(
            &fam("cycle:6"),
            &SearchOptions { depth_cap: Some(3), state_cap: None },
        )
        .unwrap();
        match report.value {
            GirthValue::UnknownAbove { floor, best_upper } => {
                assert!(floor > 3);
                assert_eq!(best_upper, None);
            }
            v => panic!("expected truncation, got {v:?}"),
        }
    }

    #[test]
    fn reachable_is_symmetric() {
        let x = fam("theta:1,2,2");
        let a = Configuration::identity(4);
        let mut b = a.clone();
        b.mapping.swap(0, 3);
        b.mapping.swap(1, 2);
        let forward = reachable(&x, &a, &b, None).unwrap().is_some();
        let backward = reachable(&x, &b, &a, None).unwrap().is_some();
        assert_eq!(forward, backward);
    }
}
