//! Simple undirected graphs with 1-based vertices and edges.
//!
//! Edge `i` is the `i`-th pair of the input list. Two graphs with the same
//! edges in a different order are different values, since every weight
//! tuple downstream is indexed by edge position.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    name: String,
    n: usize,
    edges: Vec<(usize, usize)>,
    // inc[v] = (neighbor, edge index), sorted by neighbor; inc[0] unused
    inc: Vec<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    /// `None` when there are no non-adjacent pairs (complete graphs).
    pub mu: Option<usize>,
}

impl SrgParams {
    /// mu (v - k - 1) = k (k - lambda - 1); vacuous for complete graphs.
    pub fn identity_holds(&self) -> bool {
        match self.mu {
            Some(mu) => mu * (self.v - self.k - 1) == self.k * (self.k - self.lambda - 1),
            None => self.v == self.k + 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Json,
    Dot,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    name: String,
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Validates and builds. Errors carry the 1-based position of the
    /// offending edge as `line`.
    pub fn new(name: impl Into<String>, n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let lines: Vec<usize> = (1..=edges.len()).collect();
        Self::with_lines(name.into(), n, edges, &lines)
    }

    fn with_lines(name: String, n: usize, edges: Vec<(usize, usize)>, lines: &[usize]) -> Result<Self> {
        let mut inc = vec![Vec::new(); n + 1];
        let mut seen = HashSet::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            let line = lines[i];
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { line, v: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop { line, v: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { line, u, v });
            }
            inc[u].push((v, i + 1));
            inc[v].push((u, i + 1));
        }
        for l in &mut inc {
            l.sort_unstable();
        }
        Ok(Graph { name, n, edges, inc })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e` (1-based).
    pub fn edge(&self, e: usize) -> Result<(usize, usize)> {
        self.check_edge(e)?;
        Ok(self.edges[e - 1])
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::NoSuchVertex { v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e == 0 || e > self.m() {
            Err(Error::NoSuchEdge { e, m: self.m() })
        } else {
            Ok(())
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inc[v].iter().map(|&(w, _)| w)
    }

    /// (neighbor, edge index) pairs, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.inc[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        if u == 0 || u > self.n {
            return None;
        }
        let l = &self.inc[u];
        l.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| l[i].1)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn star(&self, v: usize) -> Result<EdgeSet> {
        self.check_vertex(v)?;
        let mut s = EdgeSet::empty(self.m());
        for &(_, e) in &self.inc[v] {
            s.insert(e);
        }
        Ok(s)
    }

    pub fn is_regular(&self) -> bool {
        (2..=self.n).all(|v| self.degree(v) == self.degree(1))
    }

    /// BFS distances, `d[u][v]`, 1-based; `u32::MAX` when unreachable.
    pub fn distances(&self) -> Vec<Vec<u32>> {
        let mut d = vec![vec![u32::MAX; self.n + 1]; self.n + 1];
        let mut q = VecDeque::new();
        for s in 1..=self.n {
            let row = &mut d[s];
            row[s] = 0;
            q.push_back(s);
            while let Some(x) = q.pop_front() {
                for &(y, _) in &self.inc[x] {
                    if row[y] == u32::MAX {
                        row[y] = row[x] + 1;
                        q.push_back(y);
                    }
                }
            }
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let d = self.distances();
        d[1][1..].iter().all(|&x| x != u32::MAX)
    }

    /// Connected, at least 3 vertices, no articulation vertex.
    pub fn is_nonseparable(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }

    pub fn articulation_points(&self) -> Vec<usize> {
        // iterative Tarjan low-link
        let n = self.n;
        let mut disc = vec![0usize; n + 1];
        let mut low = vec![0usize; n + 1];
        let mut is_cut = vec![false; n + 1];
        let mut t = 0;
        for root in 1..=n {
            if disc[root] != 0 {
                continue;
            }
            t += 1;
            disc[root] = t;
            low[root] = t;
            let mut root_children = 0;
            // (vertex, parent, next neighbor position)
            let mut stack = vec![(root, 0usize, 0usize)];
            while let Some(top) = stack.last_mut() {
                let (v, parent, pos) = *top;
                if pos < self.inc[v].len() {
                    top.2 += 1;
                    let w = self.inc[v][pos].0;
                    if disc[w] == 0 {
                        t += 1;
                        disc[w] = t;
                        low[w] = t;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != 0 {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (1..=n).filter(|&v| is_cut[v]).collect()
    }

    /// Strong-regularity parameters, `Ok(None)` if the graph is regular but
    /// not strongly regular.
    pub fn srg_parameters(&self) -> Result<Option<SrgParams>> {
        if !self.is_regular() {
            return Err(Error::NotRegular);
        }
        let k = if self.n == 0 { 0 } else { self.degree(1) };
        let mut lambda = None;
        let mut mu = None;
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                let c = self.common_neighbors(u, v);
                let slot = if self.adjacent(u, v) { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(c),
                    Some(x) if x != c => return Ok(None),
                    _ => {}
                }
            }
        }
        Ok(Some(SrgParams { v: self.n, k, lambda: lambda.unwrap_or(0), mu }))
    }

    fn common_neighbors(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.inc[u], &self.inc[v]);
        let (mut i, mut j, mut c) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    c += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        c
    }

    /// Copy with vertices renamed by `map` (`map[v]` is the new label of v,
    /// index 0 ignored). Edge order is kept.
    pub fn relabeled(&self, map: &[usize]) -> Result<Graph> {
        let edges = self.edges.iter().map(|&(u, v)| (map[u], map[v])).collect();
        Graph::new(self.name.clone(), self.n, edges)
    }

    pub fn export(&self, format: Format) -> String {
        match format {
            Format::EdgeList => {
                let mut s = format!("# {}\n{} {}\n", self.name, self.n, self.m());
                for (u, v) in &self.edges {
                    let _ = writeln!(s, "{u} {v}");
                }
                s
            }
            Format::Json => {
                let j = JsonGraph {
                    name: self.name.clone(),
                    n: self.n,
                    edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
                };
                serde_json::to_string(&j).expect("plain struct serializes")
            }
            Format::Dot => {
                let mut s = format!("graph {} {{\n", dot_id(&self.name));
                for (u, v) in &self.edges {
                    let _ = writeln!(s, "  {u} -- {v};");
                }
                s.push_str("}\n");
                s
            }
        }
    }
}

fn dot_id(name: &str) -> String {
    if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        name.to_string()
    } else {
        format!("\"{}\"", name.replace('"', "\\\""))
    }
}

/// Parse the edge-list format: `#` comments, a `n m` header, then m lines
/// `u v`. A leading comment holding a single word is taken as the name.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut name = None;
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if let Some(c) = line.strip_prefix('#') {
            let c = c.trim();
            if header.is_none() && name.is_none() && !c.is_empty() && !c.contains(char::is_whitespace) {
                name = Some(c.to_string());
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let nums = parse_ints(line, lineno)?;
        if nums.len() != 2 {
            let what = if header.is_none() { "header must be `n m`" } else { "edge line must be `u v`" };
            return Err(Error::Parse { line: lineno, msg: what.into() });
        }
        match header {
            None => header = Some((nums[0], nums[1], lineno)),
            Some(_) => {
                edges.push((nums[0], nums[1]));
                lines.push(lineno);
            }
        }
    }
    let (n, m, hline) = header.ok_or(Error::Parse { line: 1, msg: "missing `n m` header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::with_lines(name.unwrap_or_else(|| "graph".into()), n, edges, &lines)
}

fn parse_ints(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse { line: lineno, msg: format!("bad integer `{t}`") })
        })
        .collect()
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let j: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    Graph::new(j.name, j.n, j.edges.into_iter().map(|[u, v]| (u, v)).collect())
}

/// Minimal DOT reader: `graph NAME { u -- v; ... }`. The vertex count is
/// the largest label seen.
pub fn parse_dot(text: &str) -> Result<Graph> {
    let open = text.find('{').ok_or(Error::Parse { line: 1, msg: "missing `{`".into() })?;
    let head: Vec<&str> = text[..open].split_whitespace().collect();
    let name = match head.as_slice() {
        ["graph"] => "graph".to_string(),
        ["graph", id] | ["strict", "graph", id] => id.trim_matches('"').to_string(),
        _ => return Err(Error::Parse { line: 1, msg: "expected `graph NAME {`".into() }),
    };
    let close = text.rfind('}').ok_or(Error::Parse { line: 1, msg: "missing `}`".into() })?;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    let mut n = 0;
    let first_line = text[..open].matches('\n').count() + 1;
    for (i, row) in text[open + 1..close].split('\n').enumerate() {
        let line = first_line + i;
        for stmt in row.split(';') {
            let s = stmt.trim();
            if s.is_empty() {
                continue;
            }
            let parts: Vec<&str> = s.split("--").map(str::trim).collect();
            let (Some(u), Some(v)) = (parts.first(), parts.get(1)) else {
                return Err(Error::Parse { line, msg: format!("expected `u -- v`, got `{s}`") });
            };
            let (Ok(u), Ok(v), 2) = (u.parse::<usize>(), v.parse::<usize>(), parts.len()) else {
                return Err(Error::Parse { line, msg: format!("expected `u -- v`, got `{s}`") });
            };
            n = n.max(u).max(v);
            edges.push((u, v));
            lines.push(line);
        }
    }
    Graph::with_lines(name, n, edges, &lines).map_err(|e| match e {
        Error::VertexOutOfRange { line, v, .. } => Error::Parse { line, msg: format!("vertex {v} must be >= 1") },
        e => e,
    })
}

/// Chooses the reader by the first non-space character.
pub fn parse_any(text: &str) -> Result<Graph> {
    let t = text.trim_start();
    if t.starts_with('{') {
        parse_json(text)
    } else if t.starts_with("graph") || t.starts_with("strict") {
        parse_dot(text)
    } else {
        parse_graph(text)
    }
}
