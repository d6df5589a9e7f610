//! Generating cycles, their dihedral maps, and extension of those maps to
//! automorphisms.
//!
//! A generating cycle is either a single isometric cycle or a ring sum of
//! several that is again one simple cycle. Each of its 2L rotations and
//! reflections is a partial vertex map, and backtracking completes it to
//! full automorphisms where possible.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::cut_spectrum::edge_weights;
use crate::cycle_space::{as_cycle, Cycle, IsometricCycleSet};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::orbit_partition::{weight_classes, VertexPartition};
use crate::perm::{group_closure, Permutation, PermutationGroup};

/// Default largest subset size for [`candidate_generating_cycles`].
pub const DEFAULT_MAX_SUBSET: usize = 6;
/// Default cap on subsets examined by the combinatorial searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

// generic bitset; EdgeSet does not care what its indices mean
type Bits = EdgeSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratingCycle {
    #[serde(flatten)]
    pub cycle: Cycle,
    /// Each producer is a sorted list of 1-based indices into the isometric
    /// cycle set whose ring sum is this cycle.
    pub producers: Vec<Vec<usize>>,
    /// Vertices on the cycle, ascending.
    pub scope: Vec<usize>,
    /// How many of the 2L dihedral self-maps extend to an automorphism.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetry: Option<usize>,
}

impl GeneratingCycle {
    fn new(cycle: Cycle, producers: Vec<Vec<usize>>) -> Self {
        let mut scope = cycle.vertices.clone();
        scope.sort_unstable();
        GeneratingCycle { cycle, producers, scope, symmetry: None }
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverConfiguration {
    pub subset: Vec<usize>,
    pub covered: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverResult {
    pub k: usize,
    pub len: usize,
    /// k-subsets whose vertex union is the whole graph.
    pub covering: usize,
    /// Covering k-subsets whose ring sum is a single spanning cycle.
    pub configurations: Vec<CoverConfiguration>,
    pub generating: Vec<GeneratingCycle>,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    r
}

fn vertex_bits(g: &Graph, c: &Cycle) -> Bits {
    let mut b = Bits::empty(g.n());
    for &v in &c.vertices {
        b.insert(v);
    }
    b
}

/// k-subsets of the (length-filtered) isometric cycles that cover every
/// vertex; those whose ring sum is one spanning cycle are the
/// configurations, and the distinct spanning cycles are generating cycles.
pub fn enumerate_cycle_covers(g: &Graph, iso: &IsometricCycleSet, k: usize, len: usize, budget: u64) -> Result<CoverResult> {
    if k == 0 {
        return Err(Error::Parse { line: 0, msg: "k must be at least 1".into() });
    }
    let pool: Vec<usize> = (0..iso.count()).filter(|&i| len == 0 || iso.cycles[i].len() == len).collect();
    if binomial(pool.len(), k) > budget as u128 {
        return Err(Error::Budget { what: "cycle cover subsets", limit: budget });
    }
    let vbits: Vec<Bits> = pool.iter().map(|&i| vertex_bits(g, &iso.cycles[i])).collect();
    let ebits: Vec<&EdgeSet> = pool.iter().map(|&i| &iso.cycles[i].edges).collect();

    struct Acc {
        covering: usize,
        hits: Vec<(Vec<usize>, EdgeSet)>,
    }
    fn rec(g: &Graph, vb: &[Bits], eb: &[&EdgeSet], k: usize, chosen: &mut Vec<usize>, cover: &Bits, sum: &EdgeSet, acc: &mut Acc) {
        if chosen.len() == k {
            if cover.count() == g.n() {
                acc.covering += 1;
                if sum.count() == g.n() && as_cycle(g, sum).is_ok_and(|c| c.len() == g.n()) {
                    acc.hits.push((chosen.clone(), sum.clone()));
                }
            }
            return;
        }
        let start = chosen.last().map_or(0, |&x| x + 1);
        let need = k - chosen.len();
        for i in start..=vb.len().saturating_sub(need) {
            let mut c = cover.clone();
            for w in vb[i].iter() {
                c.insert(w);
            }
            chosen.push(i);
            rec(g, vb, eb, k, chosen, &c, &(sum ^ eb[i]), acc);
            chosen.pop();
        }
    }

    let parts: Vec<Acc> = (0..pool.len())
        .into_par_iter()
        .map(|first| {
            let mut acc = Acc { covering: 0, hits: Vec::new() };
            if pool.len() - first >= k {
                let mut chosen = vec![first];
                rec(g, &vbits, &ebits, k, &mut chosen, &vbits[first], ebits[first], &mut acc);
            }
            acc
        })
        .collect();

    let covering = parts.iter().map(|a| a.covering).sum();
    let mut configurations = Vec::new();
    let mut by_cycle: BTreeMap<EdgeSet, Vec<Vec<usize>>> = BTreeMap::new();
    for a in parts {
        for (sub, sum) in a.hits {
            let subset: Vec<usize> = sub.iter().map(|&i| pool[i] + 1).collect();
            configurations.push(CoverConfiguration { subset: subset.clone(), covered: (1..=g.n()).collect() });
            by_cycle.entry(sum).or_default().push(subset);
        }
    }
    let part = weight_classes(g, &edge_weights(g));
    let ext = Extender::new(g, &part);
    let generating = by_cycle
        .into_iter()
        .map(|(es, prods)| {
            let mut q = GeneratingCycle::new(as_cycle(g, &es).expect("checked above"), prods);
            q.symmetry = Some(ext.dihedral_symmetry(&q.cycle));
            q
        })
        .collect();
    Ok(CoverResult { k, len, covering, configurations, generating })
}

/// Single-class isometric cycles plus every ring sum of at most
/// `max_subset` isometric cycles that is one simple cycle inside a single
/// weight class.
///
/// Only subsets that are connected under edge sharing are examined. A
/// subset that falls apart into edge-disjoint groups can only sum to one
/// cycle if some group sums to nothing, so nothing new is lost.
pub fn candidate_generating_cycles(
    g: &Graph,
    iso: &IsometricCycleSet,
    part: &VertexPartition,
    max_subset: usize,
    budget: u64,
) -> Result<Vec<GeneratingCycle>> {
    let nc = iso.count();
    let class = part.class_index(g.n());
    let mut nbr: Vec<Bits> = vec![Bits::empty(nc.max(1)); nc];
    for i in 0..nc {
        for j in i + 1..nc {
            if iso.cycles[i].edges.intersects(&iso.cycles[j].edges) {
                nbr[i].insert(j + 1);
                nbr[j].insert(i + 1);
            }
        }
    }
    let seen = AtomicU64::new(0);
    let found: Vec<Result<Vec<(EdgeSet, Vec<usize>)>>> = (0..nc)
        .into_par_iter()
        .map(|v| {
            let mut st = Esu { g, iso, class: &class, nbr: &nbr, max: max_subset, budget, seen: &seen, out: Vec::new() };
            let mut sub = vec![v];
            let mut in_sub = Bits::empty(nc);
            in_sub.insert(v + 1);
            let mut ext: Vec<usize> = nbr[v].iter().map(|x| x - 1).filter(|&u| u > v).collect();
            st.extend(&mut sub, &mut in_sub, &mut ext, v, &iso.cycles[v].edges)?;
            Ok(st.out)
        })
        .collect();
    let mut by_cycle: BTreeMap<EdgeSet, Vec<Vec<usize>>> = BTreeMap::new();
    for r in found {
        for (es, mut sub) in r? {
            sub.sort_unstable();
            by_cycle.entry(es).or_default().push(sub.iter().map(|i| i + 1).collect());
        }
    }
    Ok(by_cycle
        .into_iter()
        .map(|(es, mut prods)| {
            prods.sort();
            GeneratingCycle::new(as_cycle(g, &es).expect("checked in search"), prods)
        })
        .collect())
}

struct Esu<'a> {
    g: &'a Graph,
    iso: &'a IsometricCycleSet,
    class: &'a [usize],
    nbr: &'a [Bits],
    max: usize,
    budget: u64,
    seen: &'a AtomicU64,
    out: Vec<(EdgeSet, Vec<usize>)>,
}

impl Esu<'_> {
    fn record(&mut self, sub: &[usize], sum: &EdgeSet) -> Result<()> {
        if self.seen.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::Budget { what: "generating cycle subsets", limit: self.budget });
        }
        if sum.count() < 3 {
            return Ok(());
        }
        if let Ok(c) = as_cycle(self.g, sum) {
            let k = self.class[c.vertices[0]];
            if c.vertices.iter().all(|&v| self.class[v] == k) {
                self.out.push((sum.clone(), sub.to_vec()));
            }
        }
        Ok(())
    }

    fn extend(&mut self, sub: &mut Vec<usize>, in_sub: &mut Bits, ext: &mut Vec<usize>, root: usize, sum: &EdgeSet) -> Result<()> {
        self.record(sub, sum)?;
        if sub.len() >= self.max {
            return Ok(());
        }
        while let Some(w) = ext.pop() {
            // exclusive neighbors of w: not in sub and not next to sub
            let mut next = ext.clone();
            for u1 in self.nbr[w].iter() {
                let u = u1 - 1;
                if u <= root || in_sub.contains(u1) || next.contains(&u) {
                    continue;
                }
                if sub.iter().any(|&s| self.nbr[s].contains(u1)) {
                    continue;
                }
                next.push(u);
            }
            sub.push(w);
            in_sub.insert(w + 1);
            let s2 = sum ^ &self.iso.cycles[w].edges;
            self.extend(sub, in_sub, &mut next, root, &s2)?;
            in_sub.remove(w + 1);
            sub.pop();
        }
        Ok(())
    }
}

/// Index maps of the dihedral group on positions `0..l`: the l rotations
/// `i -> i + r`, then the l reflections `i -> t - i`, all mod l. Identity
/// first.
pub fn dihedral_index_maps(l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(2 * l);
    for r in 0..l {
        out.push((0..l).map(|i| (i + r) % l).collect());
    }
    for t in 0..l {
        out.push((0..l).map(|i| (t + l - i) % l).collect());
    }
    out
}

/// The 2L partial maps `s_i -> s_sigma(i)` on the cycle's own vertices.
pub fn dihedral_partial_maps(q: &Cycle) -> Vec<Vec<(usize, usize)>> {
    let s = &q.vertices;
    dihedral_index_maps(s.len())
        .into_iter()
        .map(|sig| (0..s.len()).map(|i| (s[i], s[sig[i]])).collect())
        .collect()
}

/// All automorphisms extending `pm`, with images restricted to the same
/// class of `part`.
pub fn extend_partial_map(g: &Graph, part: &VertexPartition, pm: &[(usize, usize)]) -> Vec<Permutation> {
    Extender::new(g, part).extend(pm)
}

/// Backtracking completion of partial maps. Holds the adjacency matrix and
/// class table so repeated calls are cheap.
pub struct Extender<'a> {
    g: &'a Graph,
    adj: Vec<Vec<bool>>,
    class: Vec<usize>,
}

impl<'a> Extender<'a> {
    pub fn new(g: &'a Graph, part: &VertexPartition) -> Self {
        let n = g.n();
        let mut adj = vec![vec![false; n + 1]; n + 1];
        for &(u, v) in g.edges() {
            adj[u][v] = true;
            adj[v][u] = true;
        }
        let mut class = part.class_index(n);
        // vertices missing from the partition form their own class
        for c in class.iter_mut().skip(1) {
            if *c == usize::MAX {
                *c = usize::MAX - 1;
            }
        }
        Extender { g, adj, class }
    }

    fn ok(&self, u: usize, w: usize) -> bool {
        self.class[u] == self.class[w] && self.g.degree(u) == self.g.degree(w)
    }

    pub fn extend(&self, pm: &[(usize, usize)]) -> Vec<Permutation> {
        let n = self.g.n();
        let mut map = vec![0usize; n + 1];
        let mut used = vec![false; n + 1];
        for &(u, w) in pm {
            if u == 0 || u > n || w == 0 || w > n {
                return Vec::new();
            }
            if (map[u] != 0 && map[u] != w) || (used[w] && map[u] != w) || !self.ok(u, w) {
                return Vec::new();
            }
            map[u] = w;
            used[w] = true;
        }
        let fixed: Vec<usize> = (1..=n).filter(|&u| map[u] != 0).collect();
        for (i, &a) in fixed.iter().enumerate() {
            for &b in &fixed[i + 1..] {
                if self.adj[a][b] != self.adj[map[a]][map[b]] {
                    return Vec::new();
                }
            }
        }
        // next vertex: most already-placed neighbors, ties to the smallest
        let mut order = Vec::with_capacity(n - fixed.len());
        let mut placed: Vec<bool> = (0..=n).map(|u| u != 0 && map[u] != 0).collect();
        let mut score: Vec<usize> = (0..=n).map(|u| if u == 0 { 0 } else { self.g.neighbors(u).filter(|&x| placed[x]).count() }).collect();
        while order.len() < n - fixed.len() {
            let v = (1..=n).filter(|&u| !placed[u]).max_by_key(|&u| (score[u], std::cmp::Reverse(u))).expect("unplaced");
            placed[v] = true;
            order.push(v);
            for x in self.g.neighbors(v) {
                score[x] += 1;
            }
        }
        let mut out = Vec::new();
        let mut mapped = fixed;
        self.go(&order, 0, &mut map, &mut used, &mut mapped, &mut out);
        out.sort();
        out
    }

    fn go(&self, order: &[usize], i: usize, map: &mut [usize], used: &mut [bool], mapped: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if i == order.len() {
            out.push(Permutation::from_map_unchecked(map));
            return;
        }
        let v = order[i];
        for w in 1..=self.g.n() {
            if used[w] || !self.ok(v, w) {
                continue;
            }
            if !mapped.iter().all(|&u| self.adj[u][v] == self.adj[map[u]][w]) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            mapped.push(v);
            self.go(order, i + 1, map, used, mapped, out);
            mapped.pop();
            used[w] = false;
            map[v] = 0;
        }
    }

    /// Number of dihedral self-maps of `q` that extend to at least one
    /// automorphism.
    pub fn dihedral_symmetry(&self, q: &Cycle) -> usize {
        dihedral_partial_maps(q).iter().filter(|pm| !self.extend(pm).is_empty()).count()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralResult {
    pub family_size: usize,
    pub cycle_length: usize,
    /// family size times 2L: the product the hand method reports.
    pub nominal: usize,
    /// Extensions summed over (cycle, dihedral map) pairs.
    pub raw_count: usize,
    #[serde(skip)]
    pub distinct: Vec<Permutation>,
    pub distinct_count: usize,
    #[serde(skip)]
    pub closure: PermutationGroup,
    pub closure_order: usize,
}

#[derive(Debug, Clone)]
pub struct SpectralOptions {
    pub max_subset: usize,
    pub budget: u64,
    /// Use these cycles as the family instead of searching for candidates.
    pub family: Option<Vec<GeneratingCycle>>,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions { max_subset: DEFAULT_MAX_SUBSET, budget: DEFAULT_BUDGET, family: None }
    }
}

/// The shortest candidates. When some single-class isometric cycle has
/// girth length no ring sum can beat or add to it (a girth cycle is
/// isometric, hence already in the set), so the subset search is skipped.
fn shortest_candidates(
    g: &Graph,
    iso: &IsometricCycleSet,
    part: &VertexPartition,
    opts: &SpectralOptions,
) -> Result<Vec<GeneratingCycle>> {
    let class = part.class_index(g.n());
    let single = |c: &Cycle| c.vertices.iter().all(|&v| class[v] == class[c.vertices[0]]);
    if let Some(girth) = iso.cycles.first().map(Cycle::len) {
        let at_girth: Vec<GeneratingCycle> = iso
            .cycles
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() == girth && single(c))
            .map(|(i, c)| GeneratingCycle::new(c.clone(), vec![vec![i + 1]]))
            .collect();
        if !at_girth.is_empty() {
            return Ok(at_girth);
        }
    }
    let cands = candidate_generating_cycles(g, iso, part, opts.max_subset, opts.budget)?;
    let l = cands.first().map_or(0, |c| c.len());
    Ok(cands.into_iter().filter(|c| c.len() == l).collect())
}

/// Dihedral induction over a family of equal-length generating cycles.
///
/// The family is the candidates sharing the length of the first candidate
/// (or `opts.family`). With `q0` the first member, every member `q` and
/// every dihedral index map `sigma` give the partial map
/// `q0[i] -> q[sigma(i)]`, which is then extended.
pub fn automorphisms_from_generating_cycles(g: &Graph, iso: &IsometricCycleSet, opts: &SpectralOptions) -> Result<SpectralResult> {
    let part = weight_classes(g, &edge_weights(g));
    let family: Vec<GeneratingCycle> = match &opts.family {
        Some(f) => f.clone(),
        None => shortest_candidates(g, iso, &part, opts)?,
    };
    let l = family.first().map_or(0, |c| c.len());
    if family.iter().any(|c| c.len() != l) {
        return Err(Error::Parse { line: 0, msg: "generating cycles of mixed length".into() });
    }
    let ext = Extender::new(g, &part);
    let maps = dihedral_index_maps(l);
    let per: Vec<Vec<Permutation>> = family
        .par_iter()
        .map(|q| {
            let s0 = &family[0].cycle.vertices;
            let s = &q.cycle.vertices;
            maps.iter()
                .flat_map(|sig| {
                    let pm: Vec<(usize, usize)> = (0..l).map(|i| (s0[i], s[sig[i]])).collect();
                    ext.extend(&pm)
                })
                .collect()
        })
        .collect();
    let raw_count = per.iter().map(Vec::len).sum();
    let mut distinct: Vec<Permutation> = per.into_iter().flatten().collect();
    distinct.sort();
    distinct.dedup();
    let closure = group_closure(g.n(), &distinct)?;
    Ok(SpectralResult {
        family_size: family.len(),
        cycle_length: l,
        nominal: family.len() * 2 * l,
        raw_count,
        distinct_count: distinct.len(),
        distinct,
        closure_order: closure.order(),
        closure,
    })
}
