//! Published fixtures and small independent reference implementations
//! shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use graphsym::{catalog, parse_permutation, EdgeSet, Graph, Permutation};

pub fn g(name: &str) -> Graph {
    catalog(name).unwrap()
}

pub fn es(m: usize, idx: &[usize]) -> EdgeSet {
    EdgeSet::from_indices(m, idx).unwrap()
}

pub fn perm(text: &str, n: usize) -> Permutation {
    parse_permutation(text, n).unwrap()
}

/// Image lists written as digit strings, one digit per vertex.
pub fn digit_perms(list: &[&str]) -> Vec<Permutation> {
    list.iter()
        .map(|s| Permutation::from_images(s.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()).unwrap())
        .collect()
}

pub const K4_PERMS: [&str; 24] = [
    "1234", "3124", "2314", "1324", "3214", "2134", "1243", "4123", "2413", "1423", "4213", "2143", "1342", "4132",
    "3412", "1432", "4312", "3142", "2431", "3241", "4321", "2341", "3421", "4231",
];

pub const PETERSEN_PERMS: [&str; 10] = [
    "1,2,3,4,5,6,7,8,9,10",
    "5,1,2,3,4,10,6,7,8,9",
    "4,5,1,2,3,9,10,6,7,8",
    "3,4,5,1,2,8,9,10,6,7",
    "2,3,4,5,1,7,8,9,10,6",
    "1,5,4,3,2,6,10,9,8,7",
    "3,2,1,5,4,8,7,6,10,9",
    "5,4,3,2,1,10,9,8,7,6",
    "2,1,5,4,3,7,6,10,9,8",
    "4,3,2,1,5,9,8,7,6,10",
];

pub const G2_PERMS: [&str; 8] =
    ["12345678", "14325678", "12345876", "14325876", "76583214", "78563412", "76583412", "78563214"];

pub const G3_AUT: [&str; 4] = ["()", "(1 5)(2 3)", "(4 6)", "(1 5)(2 3)(4 6)"];

pub const K4_CYCLES: [&[usize]; 4] = [&[1, 2, 5], &[4, 5, 6], &[2, 3, 6], &[1, 3, 4]];

pub const OCTAHEDRON_CYCLES: [&[usize]; 11] = [
    &[1, 3, 6],
    &[2, 3, 11],
    &[8, 9, 11],
    &[5, 6, 9],
    &[2, 4, 12],
    &[5, 7, 10],
    &[1, 4, 7],
    &[8, 10, 12],
    &[1, 2, 5, 8],
    &[3, 4, 9, 10],
    &[6, 7, 11, 12],
];

pub const PETERSEN_CYCLES: [&[usize]; 12] = [
    &[1, 2, 4, 6, 8],
    &[1, 2, 5, 10, 14],
    &[1, 3, 4, 7, 11],
    &[1, 3, 5, 12, 13],
    &[2, 3, 10, 11, 15],
    &[2, 3, 8, 9, 12],
    &[4, 5, 6, 9, 13],
    &[4, 5, 7, 14, 15],
    &[6, 7, 9, 11, 12],
    &[6, 7, 8, 10, 15],
    &[8, 9, 10, 13, 14],
    &[11, 12, 13, 14, 15],
];

pub const C10_12_CYCLES: [&[usize]; 12] = [
    &[1, 2, 5],
    &[1, 4, 7],
    &[2, 3, 9, 13, 17],
    &[3, 4, 20],
    &[5, 6, 8],
    &[6, 7, 11, 15, 19],
    &[8, 9, 10],
    &[10, 11, 12],
    &[12, 13, 14],
    &[14, 15, 16],
    &[16, 17, 18],
    &[18, 19, 20],
];

pub const C10_12_RIM: [usize; 10] = [1, 4, 5, 8, 10, 12, 14, 16, 18, 20];

pub const ICOSAHEDRON_TRIANGLES: [&[usize]; 20] = [
    &[1, 2, 6],
    &[1, 5, 7],
    &[2, 3, 10],
    &[3, 4, 13],
    &[4, 5, 16],
    &[6, 9, 11],
    &[7, 8, 20],
    &[8, 9, 24],
    &[10, 12, 14],
    &[11, 12, 26],
    &[13, 15, 18],
    &[14, 15, 28],
    &[16, 17, 19],
    &[17, 18, 22],
    &[19, 20, 21],
    &[21, 23, 25],
    &[22, 23, 30],
    &[24, 25, 27],
    &[26, 27, 29],
    &[28, 29, 30],
];

pub const SHRIKHANDE_QUADS: [&[usize]; 12] = [
    &[1, 6, 11, 43],
    &[2, 3, 13, 21],
    &[4, 5, 32, 39],
    &[7, 10, 15, 34],
    &[8, 9, 17, 25],
    &[12, 14, 19, 38],
    &[16, 18, 23, 42],
    &[20, 22, 27, 45],
    &[24, 26, 30, 47],
    &[28, 29, 31, 35],
    &[33, 36, 41, 46],
    &[37, 40, 44, 48],
];

pub const FRUCHT_XI: [u64; 18] = [10, 10, 14, 10, 14, 12, 10, 10, 10, 14, 12, 10, 10, 8, 12, 12, 14, 16];
pub const FRUCHT_ZETA: [u64; 12] = [34, 34, 32, 32, 34, 32, 32, 30, 30, 40, 42, 44];
pub const C12_13_XI: [u64; 24] =
    [14, 16, 16, 14, 14, 16, 16, 14, 16, 16, 14, 16, 14, 16, 14, 16, 14, 16, 14, 16, 14, 16, 14, 14];

pub fn edge_sets(list: &[&[usize]]) -> BTreeSet<Vec<usize>> {
    list.iter().map(|c| c.to_vec()).collect()
}

// ---- reference implementations, written without the library ----

/// Adjacency sets, 1-based.
pub fn adj_sets(gr: &Graph) -> Vec<HashSet<usize>> {
    let mut a = vec![HashSet::new(); gr.n() + 1];
    for &(u, v) in gr.edges() {
        a[u].insert(v);
        a[v].insert(u);
    }
    a
}

/// Floyd-Warshall distances.
pub fn floyd(gr: &Graph) -> Vec<Vec<usize>> {
    let n = gr.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n + 1]; n + 1];
    for v in 1..=n {
        d[v][v] = 0;
    }
    for &(u, v) in gr.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 1..=n {
        for i in 1..=n {
            for j in 1..=n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Every simple cycle as (sorted edge list, vertex sequence), by plain DFS.
pub fn all_simple_cycles(gr: &Graph) -> Vec<(Vec<usize>, Vec<usize>)> {
    let a = adj_sets(gr);
    let eid = |u: usize, v: usize| gr.edges().iter().position(|&(x, y)| (x, y) == (u, v) || (x, y) == (v, u)).unwrap() + 1;
    let mut out = Vec::new();
    fn dfs(a: &[HashSet<usize>], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let s = path[0];
        let last = *path.last().unwrap();
        let mut nb: Vec<usize> = a[last].iter().copied().collect();
        nb.sort();
        for y in nb {
            if y == s && path.len() >= 3 && path[1] < path[path.len() - 1] {
                out.push(path.clone());
            } else if y > s && !path.contains(&y) {
                path.push(y);
                dfs(a, path, out);
                path.pop();
            }
        }
    }
    let mut seqs = Vec::new();
    for s in 1..=gr.n() {
        dfs(&a, &mut vec![s], &mut seqs);
    }
    for seq in seqs {
        let l = seq.len();
        let mut e: Vec<usize> = (0..l).map(|i| eid(seq[i], seq[(i + 1) % l])).collect();
        e.sort();
        out.push((e, seq));
    }
    out
}

pub fn cycle_is_isometric(d: &[Vec<usize>], seq: &[usize]) -> bool {
    let l = seq.len();
    for i in 0..l {
        for j in 0..l {
            let k = if i > j { i - j } else { j - i };
            if d[seq[i]][seq[j]] != k.min(l - k) {
                return false;
            }
        }
    }
    true
}

/// GF(2) rank of bitmasks (m <= 64).
pub fn rank(vectors: &[u64]) -> usize {
    let mut rows: Vec<u64> = vectors.to_vec();
    let mut r = 0;
    for bit in 0..64 {
        if let Some(p) = (r..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) {
            rows.swap(r, p);
            for i in 0..rows.len() {
                if i != r && rows[i] >> bit & 1 == 1 {
                    rows[i] ^= rows[r];
                }
            }
            r += 1;
        }
    }
    r
}

pub fn mask(edges: &[usize]) -> u64 {
    edges.iter().fold(0, |m, &e| m | 1 << (e - 1))
}

/// BFS check that the whole graph is one component.
pub fn connected(gr: &Graph) -> bool {
    let a = adj_sets(gr);
    let mut seen = vec![false; gr.n() + 1];
    let mut q = VecDeque::from([1]);
    seen[1] = true;
    while let Some(x) = q.pop_front() {
        for &y in &a[x] {
            if !seen[y] {
                seen[y] = true;
                q.push_back(y);
            }
        }
    }
    seen[1..].iter().all(|&b| b)
}
