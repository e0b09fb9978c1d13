//! Exhaustive search for IASSL / IASSI labelings of a small graph.
//!
//! Vertices are assigned in a static order (descending degree, ties by id),
//! each trying every unused non-empty subset of X in value-lexicographic
//! order. With pruning enabled a branch is cut as soon as
//!
//! 1. an edge between two assigned vertices has a sum set outside X, or two
//!    such edges share a label (the partial labeling is no longer an IASI);
//! 2. for IASSI, some set occurs twice among vertex and edge labels;
//! 3. the still-missing subsets outnumber the vertices and edges left to
//!    label them.
//!
//! Leaves are always checked in full, so pruning only affects how many nodes
//! are visited. Optional symmetry pruning keeps only labelings that are
//! lexicographically minimal under the graph's automorphisms and then expands
//! each one back to its orbit.

use std::collections::BTreeSet;
use std::num::NonZeroUsize;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::graph::{Edge, Graph, LabeledGraph};
use crate::sets::{mask_cmp, GroundSet, LabelSet, MaskAlgebra};
use crate::verify::Predicate;

pub const DEFAULT_MAX_GROUND: usize = 5;
pub const DEFAULT_MAX_VERTICES: usize = 12;
/// Beyond this the sum table (`4^|X|` entries) gets unreasonably large.
pub const HARD_MAX_GROUND: usize = 10;
/// Symmetry pruning is skipped for graphs with more automorphisms than this.
pub const MAX_AUTOMORPHISMS: usize = 40_320;

const ESCAPED: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// `Iassl` or `Iassi`.
    pub predicate: Predicate,
    pub enumerate_all: bool,
    /// Upper bound on reported solutions when enumerating.
    pub cap: Option<NonZeroUsize>,
    pub pruning: bool,
    pub symmetry: bool,
    pub parallel: bool,
    pub max_ground: usize,
    pub max_vertices: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            predicate: Predicate::Iassl,
            enumerate_all: false,
            cap: None,
            pruning: true,
            symmetry: false,
            parallel: false,
            max_ground: DEFAULT_MAX_GROUND,
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl SearchOptions {
    pub fn new(predicate: Predicate) -> Self {
        Self {
            predicate,
            ..Self::default()
        }
    }

    pub fn all(mut self) -> Self {
        self.enumerate_all = true;
        self
    }

    fn limit(&self) -> usize {
        if self.enumerate_all {
            self.cap.map_or(usize::MAX, NonZeroUsize::get)
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    /// Complete labelings indexed by vertex id, sorted value-lexicographically.
    pub solutions: Vec<Vec<LabelSet>>,
    pub nodes_expanded: u64,
    /// True iff the whole search space was visited.
    pub exhausted: bool,
}

impl SearchResult {
    pub fn found(&self) -> bool {
        !self.solutions.is_empty()
    }

    pub fn labeled(&self, g: &Graph, x: &GroundSet, index: usize) -> Result<LabeledGraph> {
        LabeledGraph::with_labels(g.clone(), x.clone(), self.solutions[index].clone())
    }
}

/// Every automorphism of `g` as a vertex permutation, identity first, or
/// `None` when there are more than `limit`.
pub fn automorphisms(g: &Graph, limit: usize) -> Option<Vec<Vec<usize>>> {
    fn extend(
        g: &Graph,
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> bool {
        let n = g.vertex_count();
        if v == n {
            out.push(map.clone());
            return out.len() <= limit;
        }
        for w in 0..n {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(map[u], w)) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            let keep_going = extend(g, v + 1, map, used, out, limit);
            used[w] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
    let n = g.vertex_count();
    let mut out = Vec::new();
    let complete = extend(g, 0, &mut vec![0; n], &mut vec![false; n], &mut out, limit);
    complete.then_some(out)
}

struct Space {
    n: usize,
    order: Vec<usize>,
    /// earlier[k]: neighbours of order[k] that precede it in the order.
    earlier: Vec<Vec<usize>>,
    /// Edges evaluated at depth >= k.
    edges_from: Vec<usize>,
    table: Vec<u32>,
    width: usize,
    candidates: Vec<u32>,
    rank: Vec<u32>,
    labels: usize,
    injective: bool,
    pruning: bool,
    symmetries: Vec<Vec<usize>>,
}

impl Space {
    fn new(g: &Graph, x: &GroundSet, opts: &SearchOptions) -> Result<Self> {
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let earlier: Vec<Vec<usize>> = order
            .iter()
            .enumerate()
            .map(|(k, &v)| g.neighbors(v).filter(|&w| pos[w] < k).collect())
            .collect();
        let mut edges_from = vec![0; n + 1];
        for k in (0..n).rev() {
            edges_from[k] = edges_from[k + 1] + earlier[k].len();
        }
        let alg = MaskAlgebra::new(x)?;
        let width = 1usize << x.len();
        let mut table = vec![ESCAPED; width * width];
        for a in 1..width as u32 {
            for b in 1..width as u32 {
                if let Some(s) = alg.sum(a, b) {
                    table[a as usize * width + b as usize] = s;
                }
            }
        }
        let candidates = alg.canonical_masks();
        let mut rank = vec![0u32; width];
        for (r, &m) in candidates.iter().enumerate() {
            rank[m as usize] = r as u32;
        }
        let symmetries = if opts.symmetry {
            automorphisms(g, MAX_AUTOMORPHISMS)
                .map(|auts| auts.into_iter().skip(1).collect())
                .unwrap_or_default()
        } else {
            Vec::new()
        };
        Ok(Self {
            n,
            order,
            earlier,
            edges_from,
            table,
            width,
            candidates,
            rank,
            labels: width - 1,
            injective: opts.predicate == Predicate::Iassi,
            pruning: opts.pruning,
            symmetries,
        })
    }
}

#[derive(Default)]
struct Subtree {
    solutions: Vec<Vec<u32>>,
    nodes: u64,
    nodes_at_solution: Vec<u64>,
}

struct State<'a> {
    space: &'a Space,
    assign: Vec<u32>,
    vcount: Vec<u32>,
    ecount: Vec<u32>,
    covered: usize,
    escaped: usize,
    edge_dups: usize,
    fstar_dups: usize,
    limit: usize,
    out: Subtree,
}

impl<'a> State<'a> {
    fn new(space: &'a Space, limit: usize) -> Self {
        Self {
            space,
            assign: vec![0; space.n],
            vcount: vec![0; space.width],
            ecount: vec![0; space.width],
            covered: 0,
            escaped: 0,
            edge_dups: 0,
            fstar_dups: 0,
            limit,
            out: Subtree::default(),
        }
    }

    fn add(&mut self, m: u32, vertex: bool) {
        if m == ESCAPED {
            self.escaped += 1;
            return;
        }
        let m = m as usize;
        if vertex {
            self.vcount[m] += 1;
        } else {
            self.ecount[m] += 1;
            if self.ecount[m] == 2 {
                self.edge_dups += 1;
            }
        }
        match self.vcount[m] + self.ecount[m] {
            1 => self.covered += 1,
            2 => self.fstar_dups += 1,
            _ => {}
        }
    }

    fn remove(&mut self, m: u32, vertex: bool) {
        if m == ESCAPED {
            self.escaped -= 1;
            return;
        }
        let m = m as usize;
        match self.vcount[m] + self.ecount[m] {
            1 => self.covered -= 1,
            2 => self.fstar_dups -= 1,
            _ => {}
        }
        if vertex {
            self.vcount[m] -= 1;
        } else {
            if self.ecount[m] == 2 {
                self.edge_dups -= 1;
            }
            self.ecount[m] -= 1;
        }
    }

    fn edge_label(&self, a: u32, b: u32) -> u32 {
        self.space.table[a as usize * self.space.width + b as usize]
    }

    fn satisfied(&self) -> bool {
        self.escaped == 0
            && self.edge_dups == 0
            && self.covered == self.space.labels
            && (!self.space.injective || self.fstar_dups == 0)
    }

    fn dead(&self, depth: usize) -> bool {
        let s = self.space;
        if self.escaped > 0 || self.edge_dups > 0 || (s.injective && self.fstar_dups > 0) {
            return true;
        }
        let missing = s.labels - self.covered;
        let room = (s.n - depth - 1) + s.edges_from[depth + 1];
        missing > room
    }

    /// Some automorphic image of the partial labeling is already known to be
    /// lexicographically smaller.
    fn dominated(&self) -> bool {
        let s = self.space;
        'perm: for sigma in &s.symmetries {
            for &p in &s.order {
                let (a, b) = (self.assign[p], self.assign[sigma[p]]);
                if a == 0 || b == 0 {
                    continue 'perm;
                }
                if a != b {
                    if s.rank[b as usize] < s.rank[a as usize] {
                        return true;
                    }
                    continue 'perm;
                }
            }
        }
        false
    }

    fn full(&self) -> bool {
        self.out.solutions.len() >= self.limit
    }

    /// Assigns `label` at `depth`, explores below, undoes. Returns true when
    /// the solution limit has been reached.
    fn branch(&mut self, depth: usize, label: u32) -> bool {
        let s = self.space;
        let v = s.order[depth];
        self.out.nodes += 1;
        self.assign[v] = label;
        self.add(label, true);
        let mut edge_labels = Vec::with_capacity(s.earlier[depth].len());
        for &w in &s.earlier[depth] {
            let e = self.edge_label(label, self.assign[w]);
            self.add(e, false);
            edge_labels.push(e);
        }
        let prune = s.pruning && (self.dead(depth) || (!s.symmetries.is_empty() && self.dominated()));
        if !prune {
            if depth + 1 == s.n {
                if self.satisfied() && (s.symmetries.is_empty() || !self.dominated()) {
                    self.out.solutions.push(self.assign.clone());
                    self.out.nodes_at_solution.push(self.out.nodes);
                }
            } else {
                self.descend(depth + 1);
            }
        }
        for e in edge_labels.into_iter().rev() {
            self.remove(e, false);
        }
        self.remove(label, true);
        self.assign[v] = 0;
        self.full()
    }

    fn descend(&mut self, depth: usize) {
        for i in 0..self.space.candidates.len() {
            let label = self.space.candidates[i];
            if self.vcount[label as usize] > 0 {
                continue;
            }
            if self.branch(depth, label) {
                return;
            }
        }
    }
}

fn validate(g: &Graph, x: &GroundSet, opts: &SearchOptions) -> Result<()> {
    if !matches!(opts.predicate, Predicate::Iassl | Predicate::Iassi) {
        return Err(Error::Domain(format!("search supports iassl and iassi, not {}", opts.predicate)));
    }
    if !x.contains_zero() {
        return Err(Error::Domain(format!("sequential labelings need 0 in X, got {x}")));
    }
    let ground_limit = opts.max_ground.min(HARD_MAX_GROUND);
    if x.len() > ground_limit {
        return Err(Error::Capacity {
            what: "|X| for search",
            actual: x.len(),
            limit: ground_limit,
        });
    }
    if g.vertex_count() > opts.max_vertices {
        return Err(Error::Capacity {
            what: "vertex count for search",
            actual: g.vertex_count(),
            limit: opts.max_vertices,
        });
    }
    Ok(())
}

/// Finds labelings of `g` over `x` satisfying `opts.predicate`.
pub fn find_labelings(g: &Graph, x: &GroundSet, opts: &SearchOptions) -> Result<SearchResult> {
    validate(g, x, opts)?;
    let empty = SearchResult {
        solutions: Vec::new(),
        nodes_expanded: 0,
        exhausted: true,
    };
    let n = g.vertex_count();
    // no injective labeling exists, or nothing to label
    if n == 0 || n > x.powerset_size() {
        return Ok(empty);
    }
    let space = Space::new(g, x, opts)?;
    let limit = opts.limit();

    let run = |first: u32, limit: usize| {
        let mut st = State::new(&space, limit);
        st.branch(0, first);
        st.out
    };
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut nodes = 0u64;
    let mut stopped = false;
    if opts.parallel {
        let subtrees: Vec<Subtree> = space.candidates.par_iter().map(|&c| run(c, limit)).collect();
        for sub in subtrees {
            let remaining = limit - found.len();
            if sub.solutions.len() >= remaining {
                nodes += sub.nodes_at_solution[remaining - 1];
                found.extend(sub.solutions.into_iter().take(remaining));
                stopped = true;
                break;
            }
            nodes += sub.nodes;
            found.extend(sub.solutions);
        }
    } else {
        for &c in &space.candidates {
            let sub = run(c, limit - found.len());
            nodes += sub.nodes;
            found.extend(sub.solutions);
            if found.len() >= limit {
                stopped = true;
                break;
            }
        }
    }

    if !space.symmetries.is_empty() {
        let mut orbit: BTreeSet<Vec<u32>> = BTreeSet::new();
        let identity: Vec<usize> = (0..n).collect();
        for sol in &found {
            for sigma in std::iter::once(&identity).chain(&space.symmetries) {
                orbit.insert((0..n).map(|v| sol[sigma[v]]).collect());
            }
        }
        found = orbit.into_iter().collect();
    }
    found.sort_by(|a, b| {
        a.iter()
            .zip(b)
            .map(|(&p, &q)| mask_cmp(p, q))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    found.truncate(limit);
    Ok(SearchResult {
        solutions: found
            .into_iter()
            .map(|sol| sol.into_iter().map(|m| x.set_of_mask(m)).collect())
            .collect(),
        nodes_expanded: nodes,
        exhausted: !stopped,
    })
}

/// All ground sets `X ∋ 0` with `|X| <= max_size` and `max(X) <= max_value`,
/// ordered by size, then maximum, then value-lexicographically.
pub fn ground_sets(max_size: usize, max_value: u32) -> Vec<GroundSet> {
    fn combos(from: u32, to: u32, k: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in from..to {
            prefix.push(v);
            combos(v + 1, to, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if max_size >= 1 {
        out.push(GroundSet::new(vec![0]).expect("{0} is a ground set"));
    }
    for size in 2..=max_size {
        for top in (size as u32 - 1)..=max_value {
            let mut middles = Vec::new();
            combos(1, top, size - 2, &mut Vec::new(), &mut middles);
            for mid in middles {
                let mut values = vec![0];
                values.extend(mid);
                values.push(top);
                out.push(GroundSet::new(values).expect("distinct by construction"));
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroundBounds {
    pub max_size: usize,
    pub max_value: u32,
}

/// Smallest ground set (by size, maximum, then lexicographically) over which
/// `g` admits the target predicate.
pub fn min_ground_set(g: &Graph, bounds: GroundBounds, opts: &SearchOptions) -> Result<Option<GroundSet>> {
    let ground_limit = opts.max_ground.min(HARD_MAX_GROUND);
    if bounds.max_size > ground_limit {
        return Err(Error::Capacity {
            what: "|X| bound for ground-set search",
            actual: bounds.max_size,
            limit: ground_limit,
        });
    }
    let decide = SearchOptions {
        enumerate_all: false,
        ..opts.clone()
    };
    for x in ground_sets(bounds.max_size, bounds.max_value) {
        if find_labelings(g, &x, &decide)?.found() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// One cell of a sweep table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRecord {
    pub graph: String,
    pub n_vertices: usize,
    pub edges: Vec<Edge>,
    pub ground: GroundSet,
    pub predicate: Predicate,
    pub decision: bool,
    pub exhausted: bool,
    pub nodes_expanded: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<LabelSet>>,
}

impl SweepRecord {
    /// A "no" is only definitive when the space was exhausted.
    pub fn decided(&self) -> bool {
        self.decision || self.exhausted
    }
}

/// Decides the predicate for every family member with a vertex count in
/// `orders` against every ground set within `bounds`.
pub fn sweep_graphs(
    family: Family,
    orders: RangeInclusive<usize>,
    bounds: GroundBounds,
    opts: &SearchOptions,
) -> Result<Vec<SweepRecord>> {
    let mut graphs = Vec::new();
    for n in orders {
        graphs.extend(family.members(n)?);
    }
    let grounds = ground_sets(bounds.max_size, bounds.max_value);
    let cells: Vec<_> = graphs
        .iter()
        .flat_map(|ng| grounds.iter().map(move |x| (ng, x)))
        .collect();
    let decide = SearchOptions {
        enumerate_all: false,
        parallel: false,
        ..opts.clone()
    };
    let eval = |(ng, x): &(&crate::families::NamedGraph, &GroundSet)| -> Result<SweepRecord> {
        let r = find_labelings(&ng.graph, x, &decide)?;
        Ok(SweepRecord {
            graph: ng.name.clone(),
            n_vertices: ng.graph.vertex_count(),
            edges: ng.graph.edges().collect(),
            ground: (*x).clone(),
            predicate: opts.predicate,
            decision: r.found(),
            exhausted: r.exhausted,
            nodes_expanded: r.nodes_expanded,
            witness: r.solutions.into_iter().next(),
        })
    };
    if opts.parallel {
        cells.par_iter().map(eval).collect()
    } else {
        cells.iter().map(eval).collect()
    }
}
