//! Cycle-space algebra over GF(2) and isometric cycle enumeration.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex bound for [`enumerate_isometric_cycles`].
pub const DEFAULT_MAX_N: usize = 32;

/// A single simple cycle with its vertex sequence.
///
/// The sequence starts at the smallest vertex and continues toward the
/// smaller of its two cycle neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub edges: EdgeSet,
    pub vertices: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

impl Serialize for Cycle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            edges: Vec<usize>,
            vertices: &'a [usize],
        }
        Repr { edges: self.edges.to_vec(), vertices: &self.vertices }.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotACycle {
    #[error("empty edge set")]
    Empty,
    #[error("edge set is over {0} edges, graph has {1}")]
    WrongSpace(usize, usize),
    #[error("vertex {vertex} has degree {degree} in the set")]
    BadDegree { vertex: usize, degree: usize },
    #[error("edge set is disconnected")]
    Disconnected,
}

/// Which isometric cycles to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleRule {
    /// Every cycle whose own distances equal graph distances.
    Isometric,
    /// Isometric cycles outside the span of strictly shorter isometric
    /// cycles.
    #[default]
    Relevant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsometricCycleSet {
    pub rule: CycleRule,
    pub cycles: Vec<Cycle>,
}

impl IsometricCycleSet {
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    /// Cycles of the given length; 0 keeps all.
    pub fn of_length(&self, len: usize) -> Vec<&Cycle> {
        self.cycles.iter().filter(|c| len == 0 || c.len() == len).collect()
    }
}

pub fn ring_sum<'a>(m: usize, sets: impl IntoIterator<Item = &'a EdgeSet>) -> Result<EdgeSet> {
    let mut acc = EdgeSet::empty(m);
    for s in sets {
        acc.ring_add(s)?;
    }
    Ok(acc)
}

pub fn as_cycle(g: &Graph, s: &EdgeSet) -> std::result::Result<Cycle, NotACycle> {
    if s.space() != g.m() {
        return Err(NotACycle::WrongSpace(s.space(), g.m()));
    }
    if s.is_empty() {
        return Err(NotACycle::Empty);
    }
    let mut deg = vec![0usize; g.n() + 1];
    for e in s.iter() {
        let (u, v) = g.edges()[e - 1];
        deg[u] += 1;
        deg[v] += 1;
    }
    if let Some(v) = (1..=g.n()).find(|&v| deg[v] != 0 && deg[v] != 2) {
        return Err(NotACycle::BadDegree { vertex: v, degree: deg[v] });
    }
    let start = (1..=g.n()).find(|&v| deg[v] == 2).expect("non-empty");
    let nbrs = |v: usize| {
        let mut it = g.incident(v).iter().filter(|&&(_, e)| s.contains(e)).map(|&(w, _)| w);
        (it.next().expect("degree 2"), it.next().expect("degree 2"))
    };
    let (a, _) = nbrs(start); // incident() is sorted, so a is the smaller
    let mut seq = vec![start];
    let (mut prev, mut cur) = (start, a);
    while cur != start {
        seq.push(cur);
        let (x, y) = nbrs(cur);
        let next = if x == prev { y } else { x };
        prev = cur;
        cur = next;
    }
    if seq.len() != s.count() {
        return Err(NotACycle::Disconnected);
    }
    Ok(Cycle { edges: s.clone(), vertices: seq })
}

pub fn is_isometric(g: &Graph, c: &Cycle) -> bool {
    is_isometric_with(&g.distances(), c)
}

pub fn is_isometric_with(dist: &[Vec<u32>], c: &Cycle) -> bool {
    let l = c.len();
    (0..l).all(|i| {
        (i + 1..l).all(|j| {
            let along = (j - i).min(l - (j - i)) as u32;
            dist[c.vertices[i]][c.vertices[j]] == along
        })
    })
}

#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub rule: CycleRule,
    pub max_n: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { rule: CycleRule::default(), max_n: DEFAULT_MAX_N }
    }
}

pub fn enumerate_isometric_cycles(g: &Graph) -> Result<IsometricCycleSet> {
    enumerate_isometric_cycles_with(g, EnumOptions::default())
}

pub fn enumerate_isometric_cycles_with(g: &Graph, opts: EnumOptions) -> Result<IsometricCycleSet> {
    if g.n() > opts.max_n {
        return Err(Error::TooLarge { what: "isometric cycle enumeration", n: g.n(), bound: opts.max_n });
    }
    let dist = g.distances();
    let diam = dist
        .iter()
        .skip(1)
        .flat_map(|r| r[1..].iter())
        .filter(|&&d| d != u32::MAX)
        .copied()
        .max()
        .unwrap_or(0) as usize;
    let max_len = 2 * diam + 1;
    let mut cycles: Vec<Cycle> = (1..=g.n())
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut out = Vec::new();
            for l in 3..=max_len.min(g.n()) {
                let mut path = vec![s];
                let mut on = vec![false; g.n() + 1];
                on[s] = true;
                search(g, &dist, l, &mut path, &mut on, &mut out);
            }
            out
        })
        .collect();
    cycles.sort_by(|a, b| a.edges.cmp(&b.edges));
    cycles.dedup_by(|a, b| a.edges == b.edges);
    if opts.rule == CycleRule::Relevant {
        cycles = relevant_only(cycles);
    }
    Ok(IsometricCycleSet { rule: opts.rule, cycles })
}

// DFS over vertices larger than path[0]. Every subpath of length at most
// l/2 has to be a shortest path, and the walk must still be able to get
// home in time.
fn search(g: &Graph, dist: &[Vec<u32>], l: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Cycle>) {
    let s = path[0];
    let p = path.len();
    let last = path[p - 1];
    if p == l {
        if path[1] < path[l - 1] && g.adjacent(last, s) {
            let mut edges = EdgeSet::empty(g.m());
            for k in 0..l {
                edges.insert(g.edge_between(path[k], path[(k + 1) % l]).expect("consecutive"));
            }
            let c = Cycle { edges, vertices: path.clone() };
            if is_isometric_with(dist, &c) {
                out.push(c);
            }
        }
        return;
    }
    let h = l / 2;
    for &(y, _) in g.incident(last) {
        if y <= s || on[y] {
            continue;
        }
        if dist[y][s] as usize > l - p {
            continue;
        }
        if !(p.saturating_sub(h)..p).all(|k| dist[path[k]][y] as usize == p - k) {
            continue;
        }
        path.push(y);
        on[y] = true;
        search(g, dist, l, path, on, out);
        on[y] = false;
        path.pop();
    }
}

fn relevant_only(cycles: Vec<Cycle>) -> Vec<Cycle> {
    let mut basis = Gf2Basis::default();
    let mut keep = Vec::new();
    let mut i = 0;
    while i < cycles.len() {
        let l = cycles[i].len();
        let j = cycles[i..].iter().position(|c| c.len() != l).map_or(cycles.len(), |k| i + k);
        for c in &cycles[i..j] {
            if !basis.in_span(&c.edges) {
                keep.push(c.clone());
            }
        }
        for c in &cycles[i..j] {
            basis.insert(&c.edges);
        }
        i = j;
    }
    keep
}

/// Echelon basis of a GF(2) subspace of edge sets.
#[derive(Debug, Clone, Default)]
pub struct Gf2Basis {
    // (pivot edge, vector); each pivot occurs in its own row only
    rows: Vec<(usize, EdgeSet)>,
}

impl Gf2Basis {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, x: &EdgeSet) -> EdgeSet {
        let mut x = x.clone();
        for (p, r) in &self.rows {
            if x.contains(*p) {
                x ^= r;
            }
        }
        x
    }

    pub fn in_span(&self, x: &EdgeSet) -> bool {
        self.reduce(x).is_empty()
    }

    /// Adds `x`; false if it was already in the span.
    pub fn insert(&mut self, x: &EdgeSet) -> bool {
        let r = self.reduce(x);
        let Some(p) = r.iter().next() else { return false };
        for (_, row) in &mut self.rows {
            if row.contains(p) {
                *row ^= &r;
            }
        }
        self.rows.push((p, r));
        true
    }
}

pub fn ring_sum_all(g: &Graph, s: &IsometricCycleSet) -> EdgeSet {
    ring_sum(g.m(), s.cycles.iter().map(|c| &c.edges)).expect("cycles of this graph")
}

/// Per-edge count of cycles through it, and per-vertex sums of those.
pub fn cycle_incidence_weights(g: &Graph, s: &IsometricCycleSet) -> (Vec<u64>, Vec<u64>) {
    let mut xi = vec![0u64; g.m()];
    for c in &s.cycles {
        for e in c.edges.iter() {
            xi[e - 1] += 1;
        }
    }
    let mut zeta = vec![0u64; g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        zeta[u - 1] += xi[i];
        zeta[v - 1] += xi[i];
    }
    (xi, zeta)
}
