//! Two-level edge-cut spectrum and the weights derived from it.
//!
//! `w0(e)` is the base cut of `e = (u, v)`, i.e. `star(u) ^ star(v)`.
//! `w1(e)` is the ring sum of `w0(f)` over `f` in `w0(e)`. The edge weight
//! is `|w0(e)| + |w1(e)|` and a vertex weight sums its incident edges.

use rayon::prelude::*;
use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::Result;
use crate::graph::Graph;

/// Number of spectrum levels. Fixed.
pub const LEVELS: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightTable {
    /// Position `i` holds the weight of edge `i + 1`.
    pub edge_weights: Vec<u64>,
    /// Position `i` holds the weight of vertex `i + 1`.
    pub vertex_weights: Vec<u64>,
    pub edge_fingerprint: Vec<u64>,
    pub vertex_fingerprint: Vec<u64>,
    #[serde(skip)]
    pub levels: u8,
}

impl WeightTable {
    pub fn xi(&self, e: usize) -> u64 {
        self.edge_weights[e - 1]
    }

    pub fn zeta(&self, v: usize) -> u64 {
        self.vertex_weights[v - 1]
    }
}

pub fn base_cut(g: &Graph, e: usize) -> Result<EdgeSet> {
    let (u, v) = g.edge(e)?;
    Ok(&g.star(u)? ^ &g.star(v)?)
}

fn all_base_cuts(g: &Graph) -> Vec<EdgeSet> {
    g.edges()
        .iter()
        .map(|&(u, v)| &g.star(u).expect("endpoint") ^ &g.star(v).expect("endpoint"))
        .collect()
}

fn xor_of(w0: &[EdgeSet], members: &EdgeSet) -> EdgeSet {
    let mut acc = EdgeSet::empty(members.space());
    for f in members.iter() {
        acc ^= &w0[f - 1];
    }
    acc
}

/// Second level by XOR of base cuts.
pub fn second_level(g: &Graph, e: usize) -> Result<EdgeSet> {
    g.check_edge(e)?;
    let w0 = all_base_cuts(g);
    Ok(xor_of(&w0, &w0[e - 1]))
}

/// Second level computed another way: the cut between the vertices that
/// meet `w0(e)` an odd number of times and the rest.
pub fn second_level_by_parity(g: &Graph, e: usize) -> Result<EdgeSet> {
    let w0 = base_cut(g, e)?;
    let mut odd = vec![false; g.n() + 1];
    for f in w0.iter() {
        let (a, b) = g.edges()[f - 1];
        odd[a] ^= true;
        odd[b] ^= true;
    }
    let mut cut = EdgeSet::empty(g.m());
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if odd[a] != odd[b] {
            cut.insert(i + 1);
        }
    }
    Ok(cut)
}

pub fn edge_weights(g: &Graph) -> WeightTable {
    let w0 = all_base_cuts(g);
    let xi: Vec<u64> = w0
        .par_iter()
        .map(|c| (c.count() + xor_of(&w0, c).count()) as u64)
        .collect();
    let mut zeta = vec![0u64; g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        zeta[u - 1] += xi[i];
        zeta[v - 1] += xi[i];
    }
    let mut ef = xi.clone();
    ef.sort_unstable();
    let mut vf = zeta.clone();
    vf.sort_unstable();
    WeightTable { edge_weights: xi, vertex_weights: zeta, edge_fingerprint: ef, vertex_fingerprint: vf, levels: LEVELS }
}

/// `(e, [xi(e), zeta(lo), zeta(hi)])` with the two vertex weights ascending.
pub fn edge_weight_triples(g: &Graph, wt: &WeightTable) -> Vec<(usize, [u64; 3])> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            let (a, b) = (wt.zeta(u), wt.zeta(v));
            (i + 1, [wt.edge_weights[i], a.min(b), a.max(b)])
        })
        .collect()
}

pub fn fingerprint_equal(a: &WeightTable, b: &WeightTable) -> bool {
    a.edge_fingerprint == b.edge_fingerprint && a.vertex_fingerprint == b.vertex_fingerprint
}
