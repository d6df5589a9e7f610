//! Brute-force automorphism enumeration, used as the referee for every
//! other result in the crate.

use rayon::prelude::*;
use serde::Serialize;

use crate::cut_spectrum::edge_weights;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orbit_partition::{preserves_edge_set, VertexPartition};
use crate::perm::{group_orbits, Permutation, PermutationGroup};

pub const DEFAULT_CAP: usize = 1_000_000;
/// Largest n accepted by [`count_spanning_cycles`].
pub const SPANNING_MAX_N: usize = 16;
/// Largest n accepted by [`all_bijections_automorphisms`].
pub const DUMB_MAX_N: usize = 8;

#[derive(Debug, Clone, Serialize)]
pub struct OracleResult {
    #[serde(skip)]
    pub group: PermutationGroup,
    pub order: usize,
    pub orbits: VertexPartition,
    pub truncated: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    pub cap: usize,
    /// Restrict images to the same (degree, vertex weight) class.
    pub prune: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { cap: DEFAULT_CAP, prune: true }
    }
}

pub fn enumerate_automorphisms(g: &Graph, cap: usize) -> OracleResult {
    enumerate_automorphisms_with(g, OracleOptions { cap, prune: true })
}

pub fn enumerate_automorphisms_with(g: &Graph, opts: OracleOptions) -> OracleResult {
    let n = g.n();
    let key: Vec<(usize, u64)> = if opts.prune {
        let wt = edge_weights(g);
        (0..=n).map(|v| if v == 0 { (0, 0) } else { (g.degree(v), wt.zeta(v)) }).collect()
    } else {
        vec![(0, 0); n + 1]
    };
    let adj = adjacency_matrix(g);
    if n == 0 {
        let group = PermutationGroup::trivial(0);
        return OracleResult { orbits: group_orbits(&group), order: 1, group, truncated: false };
    }
    let cap = opts.cap.max(1);
    // split on the image of vertex 1
    let branches: Vec<(Vec<Permutation>, bool)> = (1..=n)
        .into_par_iter()
        .filter(|&w| key[w] == key[1])
        .map(|w| {
            let mut st = Search { n, adj: &adj, key: &key, map: vec![0; n + 1], used: vec![false; n + 1], out: Vec::new(), cap, hit_cap: false };
            st.map[1] = w;
            st.used[w] = true;
            st.go(2);
            (st.out, st.hit_cap)
        })
        .collect();
    let mut truncated = branches.iter().any(|b| b.1);
    let mut all: Vec<Permutation> = branches.into_iter().flat_map(|b| b.0).collect();
    all.sort();
    if all.len() > cap {
        all.truncate(cap);
        truncated = true;
    }
    let group = PermutationGroup::from_elements_unchecked(n, all);
    OracleResult { order: group.order(), orbits: group_orbits(&group), group, truncated }
}

fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n + 1]; n + 1];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

struct Search<'a> {
    n: usize,
    adj: &'a [Vec<bool>],
    key: &'a [(usize, u64)],
    map: Vec<usize>,
    used: Vec<bool>,
    out: Vec<Permutation>,
    cap: usize,
    hit_cap: bool,
}

impl Search<'_> {
    fn go(&mut self, v: usize) {
        if self.hit_cap {
            return;
        }
        if v > self.n {
            self.out.push(Permutation::from_map_unchecked(&self.map));
            if self.out.len() >= self.cap {
                self.hit_cap = true;
            }
            return;
        }
        for w in 1..=self.n {
            if self.used[w] || self.key[w] != self.key[v] {
                continue;
            }
            if !(1..v).all(|u| self.adj[u][v] == self.adj[self.map[u]][w]) {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            self.go(v + 1);
            self.used[w] = false;
            if self.hit_cap {
                return;
            }
        }
    }
}

pub fn true_orbits(g: &Graph) -> Result<VertexPartition> {
    let r = enumerate_automorphisms(g, DEFAULT_CAP);
    if r.truncated {
        return Err(Error::Truncated);
    }
    Ok(r.orbits)
}

/// Filters all n! bijections by edge-set preservation. Small n only.
pub fn all_bijections_automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    let n = g.n();
    if n > DUMB_MAX_N {
        return Err(Error::TooLarge { what: "bijection filter", n, bound: DUMB_MAX_N });
    }
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        let p = Permutation::from_images(cur.clone())?;
        if preserves_edge_set(g, &p) {
            out.push(p);
        }
        if !next_permutation(&mut cur) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else { return false };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).expect("exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Distinct Hamiltonian cycles as edge sets, in canonical order.
pub fn spanning_cycles(g: &Graph) -> Result<Vec<EdgeSet>> {
    let n = g.n();
    if n > SPANNING_MAX_N {
        return Err(Error::TooLarge { what: "spanning cycle count", n, bound: SPANNING_MAX_N });
    }
    let mut out = Vec::new();
    if n < 3 {
        return Ok(out);
    }
    let mut path = vec![1];
    let mut on = vec![false; n + 1];
    on[1] = true;
    ham(g, &mut path, &mut on, &mut out);
    out.sort();
    Ok(out)
}

pub fn count_spanning_cycles(g: &Graph) -> Result<usize> {
    spanning_cycles(g).map(|v| v.len())
}

fn ham(g: &Graph, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<EdgeSet>) {
    let n = g.n();
    let last = *path.last().expect("non-empty");
    if path.len() == n {
        // each cycle is met twice, keep the orientation with path[1] < path[n-1]
        if path[1] < path[n - 1] && g.adjacent(last, 1) {
            let mut s = EdgeSet::empty(g.m());
            for k in 0..n {
                s.insert(g.edge_between(path[k], path[(k + 1) % n]).expect("consecutive"));
            }
            out.push(s);
        }
        return;
    }
    for &(y, _) in g.incident(last) {
        if on[y] {
            continue;
        }
        on[y] = true;
        path.push(y);
        ham(g, path, on, out);
        path.pop();
        on[y] = false;
    }
}
