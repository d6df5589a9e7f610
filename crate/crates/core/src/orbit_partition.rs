//! Equal-weight vertex classes as candidate orbits, plus the
//! relabel-and-compare automorphism check.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::cut_spectrum::WeightTable;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexClass {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VertexPartition {
    pub classes: Vec<VertexClass>,
}

impl VertexPartition {
    /// `class_of[v]` = index of v's class; index 0 unused.
    pub fn class_index(&self, n: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; n + 1];
        for (i, c) in self.classes.iter().enumerate() {
            for &v in &c.vertices {
                idx[v] = i;
            }
        }
        idx
    }

    /// True when every class of `self` lies inside one class of `coarser`.
    pub fn refines(&self, coarser: &VertexPartition, n: usize) -> bool {
        let idx = coarser.class_index(n);
        self.classes
            .iter()
            .all(|c| c.vertices.iter().all(|&v| idx[v] == idx[c.vertices[0]]))
    }

    pub fn sets(&self) -> Vec<Vec<usize>> {
        let mut s: Vec<Vec<usize>> = self.classes.iter().map(|c| c.vertices.clone()).collect();
        s.sort();
        s
    }
}

/// Groups by vertex weight, then splits by degree. Classes come heaviest
/// first; ties by smallest member.
pub fn weight_classes(g: &Graph, wt: &WeightTable) -> VertexPartition {
    let mut map: BTreeMap<(u64, usize), Vec<usize>> = BTreeMap::new();
    for v in 1..=g.n() {
        map.entry((wt.zeta(v), g.degree(v))).or_default().push(v);
    }
    let mut classes: Vec<VertexClass> = map
        .into_iter()
        .map(|((w, d), vertices)| VertexClass { weight: Some(w), degree: Some(d), vertices })
        .collect();
    classes.sort_by(|a, b| b.weight.cmp(&a.weight).then(a.vertices[0].cmp(&b.vertices[0])));
    VertexPartition { classes }
}

/// Relabel each adjacency row by `p` and compare with the row of `p(v)`.
pub fn verify_permutation(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.degree() != g.n() {
        return Err(Error::NotABijection(format!("degree {} on a graph with {} vertices", p.degree(), g.n())));
    }
    for v in 1..=g.n() {
        let pv = p.apply(v);
        if g.degree(v) != g.degree(pv) {
            return Ok(false);
        }
        let mut row: Vec<usize> = g.neighbors(v).map(|w| p.apply(w)).collect();
        row.sort_unstable();
        if !row.iter().copied().eq(g.neighbors(pv)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Independent check: `p` maps the edge set onto itself.
pub fn preserves_edge_set(g: &Graph, p: &Permutation) -> bool {
    let norm = |u: usize, v: usize| (u.min(v), u.max(v));
    let edges: HashSet<(usize, usize)> = g.edges().iter().map(|&(u, v)| norm(u, v)).collect();
    p.degree() == g.n() && g.edges().iter().all(|&(u, v)| edges.contains(&norm(p.apply(u), p.apply(v))))
}

/// Number of non-empty subsets of `k` classes, 2^k - 1.
pub fn orbit_subset_count(k: u32) -> u64 {
    (1u64 << k) - 1
}

/// Tries every combination of swapping the two-vertex classes. Identity
/// first, then the passing combinations in image-list order.
pub fn pairwise_transposition_automorphisms(g: &Graph, part: &VertexPartition) -> Result<Vec<Permutation>> {
    if let Some(c) = part.classes.iter().find(|c| c.vertices.len() > 2) {
        return Err(Error::ClassTooLarge(c.vertices.len()));
    }
    let pairs: Vec<(usize, usize)> = part
        .classes
        .iter()
        .filter(|c| c.vertices.len() == 2)
        .map(|c| (c.vertices[0], c.vertices[1]))
        .collect();
    if pairs.len() >= 63 {
        return Err(Error::Budget { what: "transposition search", limit: 1 << 62 });
    }
    let mut out = vec![Permutation::identity(g.n())];
    for mask in 1u64..=orbit_subset_count(pairs.len() as u32) {
        let mut map: Vec<usize> = (0..=g.n()).collect();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                map.swap(a, b);
            }
        }
        let p = Permutation::from_map_unchecked(&map);
        if verify_permutation(g, &p)? {
            out.push(p);
        }
    }
    out[1..].sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::cut_spectrum::edge_weights;
    use crate::perm::parse_permutation;

    #[test]
    fn k4_minus_e_classes_and_swaps() {
        let g = catalog("k4_minus_e").unwrap();
        let part = weight_classes(&g, &edge_weights(&g));
        assert_eq!(part.classes[0].vertices, vec![2, 4]);
        assert_eq!(part.classes[0].weight, Some(18));
        assert_eq!(part.classes[1].vertices, vec![1, 3]);
        let auts = pairwise_transposition_automorphisms(&g, &part).unwrap();
        let s: Vec<String> = auts.iter().map(|p| p.cycle_notation(false)).collect();
        assert_eq!(s, vec!["()", "(2 4)", "(1 3)", "(1 3)(2 4)"]);
    }

    #[test]
    fn g3_swap_of_two_three_fails() {
        let g = catalog("g3_ex13").unwrap();
        assert!(!verify_permutation(&g, &parse_permutation("(2 3)", 6).unwrap()).unwrap());
        assert!(verify_permutation(&g, &parse_permutation("(4 6)", 6).unwrap()).unwrap());
        assert!(verify_permutation(&g, &Permutation::identity(6)).unwrap());
    }

    #[test]
    fn subset_counts() {
        assert_eq!(orbit_subset_count(3), 7);
        assert_eq!(orbit_subset_count(4), 15);
        assert_eq!(orbit_subset_count(0), 0);
    }

    #[test]
    fn large_class_is_an_error() {
        let g = catalog("petersen").unwrap();
        let part = weight_classes(&g, &edge_weights(&g));
        assert_eq!(part.classes.len(), 1);
        assert_eq!(pairwise_transposition_automorphisms(&g, &part), Err(Error::ClassTooLarge(10)));
    }

    #[test]
    fn wrong_degree_perm() {
        let g = catalog("k4").unwrap();
        assert!(verify_permutation(&g, &Permutation::identity(5)).is_err());
    }
}
