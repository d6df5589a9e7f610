//! Vertex permutations, group closure, orbits and Cayley tables.
//!
//! Composition is `(a * b)(v) = a(b(v))`: apply `b` first.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::orbit_partition::{VertexClass, VertexPartition};

/// Default cap on group order for [`group_closure`].
pub const CLOSURE_CAP: usize = 1_000_000;
/// Default cap on the order of a group whose full Cayley table is built.
pub const CAYLEY_CAP: usize = 10_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// From the image list `[p(1), ..., p(n)]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n {
                return Err(Error::NotABijection(format!("image {x} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotABijection(format!("{x} is hit twice")));
            }
        }
        Ok(Permutation { images })
    }

    /// From a map indexed by vertex (index 0 ignored). No checks.
    pub(crate) fn from_map_unchecked(map: &[usize]) -> Self {
        Permutation { images: map[1..].to_vec() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn compose(&self, b: &Permutation) -> Result<Permutation> {
        if self.degree() != b.degree() {
            return Err(Error::DegreeMismatch(self.degree(), b.degree()));
        }
        Ok(self.mul(b))
    }

    // unchecked compose, a(b(v))
    fn mul(&self, b: &Permutation) -> Permutation {
        Permutation { images: b.images.iter().map(|&x| self.images[x - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles including fixed points, each starting at its
    /// smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for s in 1..=n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    pub fn cycle_notation(&self, include_fixed: bool) -> String {
        let mut s = String::new();
        for c in self.cycles() {
            if c.len() == 1 && !include_fixed {
                continue;
            }
            s.push('(');
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            s.push_str(&parts.join(" "));
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation(false))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation(false))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.cycle_notation(false))
    }
}

/// Accepts an image list (`2,1,4,3`, `<2,1,4,3>`, `⟨2,1,4,3⟩`, `2 1 4 3`)
/// or cycle notation (`(1 2)(3 4)`, `(1,2)`, `()`).
pub fn parse_permutation(text: &str, n: usize) -> Result<Permutation> {
    let t = text.trim();
    if t.starts_with('(') {
        parse_cycles(t, n)
    } else {
        let inner = t
            .trim_start_matches(['<', '⟨', '['])
            .trim_end_matches(['>', '⟩', ']']);
        let images = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::BadPermutation(format!("bad integer `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        if images.len() != n {
            return Err(Error::BadPermutation(format!("expected {n} images, got {}", images.len())));
        }
        Permutation::from_images(images)
    }
}

fn parse_cycles(t: &str, n: usize) -> Result<Permutation> {
    let mut map: Vec<usize> = (0..=n).collect();
    let mut touched = vec![false; n + 1];
    let mut rest = t;
    while !rest.is_empty() {
        let body_end = rest
            .find(')')
            .ok_or_else(|| Error::BadPermutation("unclosed `(`".into()))?;
        if !rest.starts_with('(') {
            return Err(Error::BadPermutation(format!("unexpected `{rest}`")));
        }
        let body = &rest[1..body_end];
        if body.contains('(') {
            return Err(Error::BadPermutation("nested `(`".into()));
        }
        let elems = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::BadPermutation(format!("bad integer `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        for &x in &elems {
            if x == 0 || x > n {
                return Err(Error::NotABijection(format!("{x} outside 1..={n}")));
            }
            if std::mem::replace(&mut touched[x], true) {
                return Err(Error::NotABijection(format!("{x} appears twice")));
            }
        }
        for (i, &x) in elems.iter().enumerate() {
            map[x] = elems[(i + 1) % elems.len()];
        }
        rest = rest[body_end + 1..].trim_start();
    }
    Ok(Permutation::from_map_unchecked(&map))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    elements: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn trivial(n: usize) -> Self {
        PermutationGroup { degree: n, elements: vec![Permutation::identity(n)] }
    }

    /// Wraps a list that is already known to be a group; sorts it.
    pub(crate) fn from_elements_unchecked(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        PermutationGroup { degree, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Identity first, then ascending image lists.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }
}

/// Smallest group containing `seed`, by Dimino's coset method.
pub fn group_closure(n: usize, seed: &[Permutation]) -> Result<PermutationGroup> {
    group_closure_capped(n, seed, CLOSURE_CAP)
}

pub fn group_closure_capped(n: usize, seed: &[Permutation], cap: usize) -> Result<PermutationGroup> {
    let id = Permutation::identity(n);
    let mut elements = vec![id.clone()];
    let mut set: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut gens: Vec<Permutation> = Vec::new();
    for s in seed {
        if s.degree() != n {
            return Err(Error::DegreeMismatch(n, s.degree()));
        }
        if set.contains(s) {
            continue;
        }
        gens.push(s.clone());
        let h: Vec<Permutation> = elements.clone();
        let mut reps = vec![id.clone()];
        let add_coset = |t: &Permutation, elements: &mut Vec<Permutation>, set: &mut HashSet<Permutation>| -> Result<()> {
            for x in &h {
                let y = x.mul(t);
                set.insert(y.clone());
                elements.push(y);
            }
            if elements.len() > cap {
                return Err(Error::Budget { what: "group closure", limit: cap as u64 });
            }
            Ok(())
        };
        add_coset(s, &mut elements, &mut set)?;
        reps.push(s.clone());
        let mut pos = 1;
        while pos < reps.len() {
            for g in &gens {
                let t = reps[pos].mul(g);
                if !set.contains(&t) {
                    add_coset(&t, &mut elements, &mut set)?;
                    reps.push(t);
                }
            }
            pos += 1;
        }
    }
    elements.sort();
    Ok(PermutationGroup { degree: n, elements })
}

/// Orbits of the group action, ordered by smallest member.
pub fn group_orbits(grp: &PermutationGroup) -> VertexPartition {
    let n = grp.degree();
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for p in grp.elements() {
        for v in 1..=n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, p.apply(v)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for v in 1..=n {
        let r = find(&mut parent, v);
        by_root[r].push(v);
    }
    let classes = by_root
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(|vertices| VertexClass { weight: None, degree: None, vertices })
        .collect();
    VertexPartition { classes }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CayleyTable {
    pub order: usize,
    /// `cells[i][j]` is the index of `elements[i] * elements[j]`.
    pub cells: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn is_latin_square(&self) -> bool {
        let k = self.order;
        fn perm_ok(k: usize, mut it: impl Iterator<Item = usize>) -> bool {
            let mut seen = vec![false; k];
            it.all(|x| x < k && !std::mem::replace(&mut seen[x], true))
        }
        (0..k).all(|i| perm_ok(k, self.cells[i].iter().copied()))
            && (0..k).all(|j| perm_ok(k, (0..k).map(|i| self.cells[i][j])))
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for row in &self.cells {
            let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            s.push_str(&r.join(","));
            s.push('\n');
        }
        s
    }
}

pub fn cayley_table(grp: &PermutationGroup) -> Result<CayleyTable> {
    cayley_table_ordered(grp.elements(), CAYLEY_CAP)
}

/// Table over an explicit element order, e.g. one grouped into cosets.
pub fn cayley_table_ordered(elements: &[Permutation], cap: usize) -> Result<CayleyTable> {
    let k = elements.len();
    if k > cap {
        return Err(Error::Budget { what: "cayley table", limit: cap as u64 });
    }
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut cells = vec![vec![0; k]; k];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            let c = a.compose(b)?;
            cells[i][j] = *index
                .get(&c)
                .ok_or_else(|| Error::NotABijection("element list is not closed".into()))?;
        }
    }
    Ok(CayleyTable { order: k, cells })
}

/// Group elements arranged by left cosets `g * H`, cosets in order of their
/// first element. With `H` a dihedral subgroup of order 2L the table falls
/// into 2L x 2L blocks.
pub fn coset_order(grp: &PermutationGroup, sub: &PermutationGroup) -> Result<Vec<Permutation>> {
    if !sub.is_subgroup_of(grp) {
        return Err(Error::NotABijection("not a subgroup".into()));
    }
    let mut placed: HashSet<&Permutation> = HashSet::new();
    let mut out = Vec::with_capacity(grp.order());
    for g in grp.elements() {
        if placed.contains(g) {
            continue;
        }
        for h in sub.elements() {
            let x = g.mul(h);
            let idx = grp.index_of(&x).expect("subgroup coset lies in the group");
            placed.insert(&grp.elements()[idx]);
            out.push(x);
        }
    }
    Ok(out)
}

/// A Klein four-subgroup `{id, a, b, ab}`. A normal one is preferred when
/// the group is small enough to check (up to [`CAYLEY_CAP`] elements);
/// otherwise the first in canonical search order. Elements come sorted,
/// identity first.
pub fn find_klein_four(grp: &PermutationGroup) -> Option<PermutationGroup> {
    let inv: Vec<&Permutation> = grp
        .elements()
        .iter()
        .filter(|p| !p.is_identity() && p.mul(p).is_identity())
        .collect();
    let mut first = None;
    for (i, a) in inv.iter().enumerate() {
        for b in &inv[i + 1..] {
            let ab = a.mul(b);
            if ab != b.mul(a) {
                continue;
            }
            let mut els = vec![Permutation::identity(grp.degree()), (*a).clone(), (*b).clone(), ab];
            els.sort();
            let k = PermutationGroup::from_elements_unchecked(grp.degree(), els);
            if grp.order() > CAYLEY_CAP {
                return Some(k);
            }
            let normal = grp.elements().iter().all(|g| {
                let gi = g.inverse();
                k.elements()[1..].iter().all(|x| k.contains(&g.mul(x).mul(&gi)))
            });
            if normal {
                return Some(k);
            }
            first.get_or_insert(k);
        }
    }
    first
}
