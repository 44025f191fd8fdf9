//! Labeled trees and their structural measures.
//!
//! A [`Tree`] is immutable once built: every edit produces a new value and is
//! re-validated. Vertices are `0..n`.

use std::collections::VecDeque;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Tree {
    /// Builds a tree on `n` vertices, checking that `edges` has exactly
    /// `n - 1` distinct non-loop entries and connects every vertex.
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Tree> {
        if n == 0 {
            return Err(Error::InvalidTree(
                "a tree needs at least one vertex".into(),
            ));
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges given, a tree on {} vertices has {}",
                edges.len(),
                n,
                n - 1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidTree(format!("edge {u}-{v} leaves 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at {u}")));
            }
            if adj[u].contains(&v) {
                return Err(Error::InvalidTree(format!("duplicate edge {u}-{v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let tree = Tree { edges, adj };
        let reached = tree
            .distances_from(0)
            .iter()
            .filter(|d| d.is_some())
            .count();
        if reached != n {
            return Err(Error::InvalidTree(format!(
                "disconnected: {reached} of {n} vertices reachable from 0"
            )));
        }
        Ok(tree)
    }

    /// Builds a tree from a parent array; exactly one entry (the root) is `None`.
    pub fn from_parents(parents: &[Option<Vertex>]) -> Result<Tree> {
        let edges = parents
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)))
            .collect();
        Tree::new(parents.len(), edges)
    }

    pub fn single_vertex() -> Tree {
        Tree {
            edges: Vec::new(),
            adj: vec![Vec::new()],
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.iter().map(Vec::len)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// Number of vertices of degree one.
    pub fn pendant_count(&self) -> usize {
        self.degrees().filter(|&d| d == 1).count()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(u).is_some_and(|a| a.contains(&v))
    }

    pub fn is_path(&self) -> bool {
        self.max_degree() <= 2
    }

    /// BFS distances from `src`; `None` marks unreachable vertices, which only
    /// happens while validating a candidate edge list.
    fn distances_from(&self, src: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self, src: Vertex) -> Vec<usize> {
        self.distances_from(src)
            .into_iter()
            .map(Option::unwrap)
            .collect()
    }

    /// Parent pointers and a BFS order for the tree rooted at `root`.
    pub(crate) fn rooted(&self, root: Vertex) -> (Vec<Option<Vertex>>, Vec<Vertex>) {
        let mut parent = vec![None; self.n()];
        let mut order = Vec::with_capacity(self.n());
        let mut seen = vec![false; self.n()];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    order.push(w);
                }
            }
        }
        (parent, order)
    }

    /// Vertices of a longest path, from one end to the other.
    pub fn diameter_path(&self) -> Vec<Vertex> {
        let far = |src: Vertex| {
            let d = self.distances(src);
            (0..self.n())
                .max_by_key(|&v| (d[v], std::cmp::Reverse(v)))
                .unwrap()
        };
        let a = far(0);
        let (parent, order) = self.rooted(a);
        let dist = self.distances(a);
        let b = order
            .iter()
            .copied()
            .max_by_key(|&v| (dist[v], std::cmp::Reverse(v)))
            .unwrap();
        let mut path = vec![b];
        let mut cur = b;
        while let Some(p) = parent[cur] {
            path.push(p);
            cur = p;
        }
        path
    }

    /// Number of edges on a longest path.
    pub fn diameter(&self) -> usize {
        self.diameter_path().len() - 1
    }

    /// The one or two middle vertices of a longest path.
    pub fn centers(&self) -> Vec<Vertex> {
        let path = self.diameter_path();
        let len = path.len();
        if len % 2 == 1 {
            vec![path[len / 2]]
        } else {
            let mut c = vec![path[len / 2 - 1], path[len / 2]];
            c.sort_unstable();
            c
        }
    }

    /// Sum of distances over unordered vertex pairs.
    ///
    /// Each edge separates the tree into parts of sizes `s` and `n - s` and
    /// lies on exactly `s * (n - s)` of the shortest paths.
    pub fn wiener(&self) -> u64 {
        let n = self.n();
        let (parent, order) = self.rooted(0);
        let mut size = vec![1u64; n];
        let mut total = 0u64;
        for &v in order.iter().rev() {
            if let Some(p) = parent[v] {
                total += size[v] * (n as u64 - size[v]);
                size[p] += size[v];
            }
        }
        total
    }

    /// First Zagreb index: the sum of squared degrees.
    pub fn zagreb(&self) -> u64 {
        self.degrees().map(|d| (d * d) as u64).sum()
    }

    /// Subdivides every edge once. Edge `i = (u, v)` gets the new vertex
    /// `n + i`, so the result has `2n - 1` vertices.
    pub fn subdivision(&self) -> Tree {
        let n = self.n();
        let mut edges = Vec::with_capacity(2 * self.edges.len());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            edges.push((u, n + i));
            edges.push((n + i, v));
        }
        Tree::new(2 * n - 1, edges).expect("subdivision of a tree is a tree")
    }

    /// The perfect matching, if any. In a tree it is unique: a leaf must be
    /// matched to its neighbor, and removing both leaves a forest with the same
    /// property, so peeling leaves bottom-up either covers every vertex or
    /// strands one.
    pub fn perfect_matching(&self) -> Option<Vec<(Vertex, Vertex)>> {
        let n = self.n();
        if n % 2 == 1 {
            return None;
        }
        let (parent, order) = self.rooted(0);
        let mut mate: Vec<Option<Vertex>> = vec![None; n];
        let mut matching = Vec::with_capacity(n / 2);
        for &v in order.iter().rev() {
            if mate[v].is_some() {
                continue;
            }
            match parent[v] {
                Some(p) if mate[p].is_none() => {
                    mate[v] = Some(p);
                    mate[p] = Some(v);
                    matching.push((v.min(p), v.max(p)));
                }
                _ => return None,
            }
        }
        matching.sort_unstable();
        Some(matching)
    }

    pub fn has_perfect_matching(&self) -> bool {
        self.perfect_matching().is_some()
    }

    /// Follows the branch that leaves `hub` through its neighbor `start`.
    /// Returns the branch's vertices (`start` first, leaf last) when that
    /// branch is a bare path, `None` otherwise.
    pub fn pendant_path(&self, hub: Vertex, start: Vertex) -> Option<Vec<Vertex>> {
        if !self.has_edge(hub, start) {
            return None;
        }
        let mut path = vec![start];
        let (mut prev, mut cur) = (hub, start);
        loop {
            match self.degree(cur) {
                1 => return Some(path),
                2 => {
                    let next = self.adj[cur].iter().copied().find(|&w| w != prev).unwrap();
                    path.push(next);
                    prev = cur;
                    cur = next;
                }
                _ => return None,
            }
        }
    }

    /// All pendant paths hanging off `hub`, ordered by their first vertex.
    pub fn pendant_paths(&self, hub: Vertex) -> Vec<Vec<Vertex>> {
        let mut starts = self.adj[hub].clone();
        starts.sort_unstable();
        starts
            .into_iter()
            .filter_map(|s| self.pendant_path(hub, s))
            .collect()
    }

    /// Removes the listed edges (in either orientation), adds new ones and
    /// re-validates.
    pub fn rewire(&self, remove: &[(Vertex, Vertex)], add: &[(Vertex, Vertex)]) -> Result<Tree> {
        let same = |a: (Vertex, Vertex), b: (Vertex, Vertex)| a == b || (a.1, a.0) == b;
        for &r in remove {
            if !self.has_edge(r.0, r.1) {
                return Err(Error::InvalidTree(format!(
                    "no edge {}-{} to remove",
                    r.0, r.1
                )));
            }
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|&e| !remove.iter().any(|&r| same(e, r)))
            .collect();
        edges.extend_from_slice(add);
        Tree::new(self.n(), edges)
    }

    /// Parses one line of the text format: `n u1 v1 u2 v2 ...`.
    pub fn parse_line(line: &str) -> Result<Tree, String> {
        let nums = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| format!("not a vertex index: {tok:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let (&n, rest) = nums.split_first().ok_or("empty line")?;
        if rest.len() % 2 != 0 {
            return Err("odd number of edge endpoints".into());
        }
        let edges = rest.chunks(2).map(|c| (c[0], c[1])).collect();
        Tree::new(n, edges).map_err(|e| e.to_string())
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        Tree::parse_line(s).map_err(|message| Error::Parse { line: 1, message })
    }
}

/// The text format: vertex count followed by the endpoints of each edge.
impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n())?;
        for (u, v) in &self.edges {
            write!(f, " {u} {v}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for Tree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Reads one tree per non-blank line. Lines starting with `#` are comments.
pub fn read_trees<R: BufRead>(reader: R) -> Result<Vec<Tree>> {
    let mut trees = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        trees.push(Tree::parse_line(body).map_err(|message| Error::Parse {
            line: i + 1,
            message,
        })?);
    }
    Ok(trees)
}
