//! Graph data model: canonical edges, exact integer weights, weighted and
//! unweighted simple graphs, and the plain-text edge-list format.
//!
//! The text format is
//!
//! ```text
//! # optional comment lines
//! n m
//! u v w      (m lines, 0 <= u < v < n, 1 <= w <= 2^63 - 1)
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, ParseErrorKind, Result};

/// Largest weight accepted by the text format.
pub const MAX_WEIGHT: u64 = i64::MAX as u64;

/// An undirected edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Builds the canonical form of `{a, b}`. Fails on self-loops.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

/// A strictly positive edge weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(u64);

impl Weight {
    pub fn new(value: u64) -> Result<Self> {
        if value == 0 || value > MAX_WEIGHT {
            return Err(Error::InvalidWeight(value));
        }
        Ok(Weight(value))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// How repeated weight values are treated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WeightMode {
    /// Repeated weights are rejected.
    #[default]
    Strict,
    /// Ties are broken by `(weight, u, v)` and the graph is flagged.
    Permissive,
}

/// A set of edges iterated in canonical `(u, v)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.0.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn extend<I: IntoIterator<Item = Edge>>(&mut self, it: I) {
        self.0.extend(it)
    }

    /// Writes one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in self.iter() {
            out.push_str(&format!("{e}\n"));
        }
        out
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl IntoIterator for EdgeSet {
    type Item = Edge;
    type IntoIter = std::collections::btree_set::IntoIter<Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Unweighted simple undirected graph with sorted adjacency lists.
///
/// This is the structure connectivity queries run on. Edges can be added
/// one at a time, which is how construction orders are replayed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges<'a, I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Edge>,
    {
        let mut g = SimpleGraph::empty(n);
        for e in edges {
            if !g.add_edge(*e)? {
                return Err(Error::DuplicateEdge(*e));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|x| (0..n).filter(|&y| y != x).collect())
            .collect();
        SimpleGraph {
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn check_vertex(&self, x: usize) -> Result<()> {
        if x >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Adds `e`, returning `false` if it was already present.
    pub fn add_edge(&mut self, e: Edge) -> Result<bool> {
        self.check_vertex(e.v)?;
        let (u, v) = e.endpoints();
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(true)
            }
        }
    }

    /// Removes `e`, returning `false` if it was absent.
    pub fn remove_edge(&mut self, e: Edge) -> bool {
        let (u, v) = e.endpoints();
        if v >= self.n() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(pos);
                self.m -= 1;
                true
            }
            Err(_) => false,
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && b < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn neighbors(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].len()
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| Edge { u, v })
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// Vertex pairs that are not edges, in canonical order.
    pub fn anti_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| Edge { u, v })
        })
    }

    /// BFS reachability from `s` avoiding the vertices flagged in `blocked`.
    pub fn reachable_avoiding(&self, s: usize, blocked: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        if blocked.get(s).copied().unwrap_or(false) {
            return seen;
        }
        let mut queue = std::collections::VecDeque::new();
        seen[s] = true;
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] && !blocked.get(y).copied().unwrap_or(false) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.reachable_avoiding(0, &[]).iter().all(|&r| r)
    }
}

/// Simple undirected graph with positive integer edge weights.
///
/// Immutable once built. Vertices are `0..n`; `labels` maps each vertex back
/// to its id in the graph this one was derived from (identity for graphs
/// built directly).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: BTreeMap<Edge, Weight>,
    labels: Vec<usize>,
    tie_broken: bool,
}

impl WeightedGraph {
    /// Builds a graph from `(u, v, w)` triples.
    pub fn new<I>(n: usize, triples: I, mode: WeightMode) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut edges = BTreeMap::new();
        for (a, b, w) in triples {
            let e = Edge::new(a, b)?;
            if e.v >= n {
                return Err(Error::VertexOutOfRange { vertex: e.v, n });
            }
            let w = Weight::new(w)?;
            if edges.insert(e, w).is_some() {
                return Err(Error::DuplicateEdge(e));
            }
        }
        Self::from_map(n, edges, (0..n).collect(), mode)
    }

    fn from_map(
        n: usize,
        edges: BTreeMap<Edge, Weight>,
        labels: Vec<usize>,
        mode: WeightMode,
    ) -> Result<Self> {
        let mut by_weight: Vec<(Weight, Edge)> = edges.iter().map(|(&e, &w)| (w, e)).collect();
        by_weight.sort_unstable();
        let tie = by_weight.windows(2).find(|p| p[0].0 == p[1].0);
        let tie_broken = match (tie, mode) {
            (Some(p), WeightMode::Strict) => {
                return Err(Error::DuplicateWeight {
                    weight: p[0].0.get(),
                    first: p[0].1,
                    second: p[1].1,
                })
            }
            (Some(_), WeightMode::Permissive) => true,
            (None, _) => false,
        };
        Ok(WeightedGraph {
            n,
            edges,
            labels,
            tie_broken,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// True when the graph holds repeated weights resolved by `(weight, u, v)`.
    pub fn is_tie_broken(&self) -> bool {
        self.tie_broken
    }

    pub fn weight(&self, e: &Edge) -> Option<Weight> {
        self.edges.get(e).copied()
    }

    /// Edges with weights in canonical edge order.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, Weight)> + '_ {
        self.edges.iter().map(|(&e, &w)| (e, w))
    }

    /// Edges sorted by `(weight, u, v)`: a strict total order.
    pub fn edges_by_weight(&self) -> Vec<Edge> {
        let mut v: Vec<(Weight, Edge)> = self.edges.iter().map(|(&e, &w)| (w, e)).collect();
        v.sort_unstable();
        v.into_iter().map(|(_, e)| e).collect()
    }

    /// Original id of local vertex `x`.
    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Maps a local edge to original ids.
    pub fn relabel(&self, e: Edge) -> Edge {
        Edge::new(self.labels[e.u], self.labels[e.v]).expect("labels are injective")
    }

    pub fn topology(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.n, self.edges.keys()).expect("valid by construction")
    }

    /// The subgraph induced by the vertices not in `removed`, re-indexed
    /// densely in increasing order. Labels compose, so the result always
    /// maps back to the ids of the root graph.
    pub fn induced_subgraph(&self, removed: &BTreeSet<usize>) -> Result<WeightedGraph> {
        if let Some(&bad) = removed.iter().find(|&&x| x >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        if removed.len() >= self.n {
            return Err(Error::RemovesAllVertices);
        }
        let mut local = vec![usize::MAX; self.n];
        let mut labels = Vec::with_capacity(self.n - removed.len());
        for x in (0..self.n).filter(|x| !removed.contains(x)) {
            local[x] = labels.len();
            labels.push(self.labels[x]);
        }
        let edges = self
            .edges
            .iter()
            .filter(|(e, _)| local[e.u] != usize::MAX && local[e.v] != usize::MAX)
            .map(|(e, &w)| {
                (
                    Edge {
                        u: local[e.u],
                        v: local[e.v],
                    },
                    w,
                )
            })
            .collect();
        Ok(WeightedGraph {
            n: labels.len(),
            edges,
            labels,
            tie_broken: self.tie_broken,
        })
    }

    /// Same graph with labels reset to the identity.
    pub fn detach(mut self) -> WeightedGraph {
        self.labels = (0..self.n).collect();
        self
    }

    /// Parses the edge-list format.
    pub fn parse(text: &str, mode: WeightMode) -> Result<WeightedGraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            kind: ParseErrorKind::MissingHeader,
        })?;
        let hdr = parse_fields::<2>(header, header_line)?;
        let (n, m) = (to_usize(hdr[0], header_line)?, to_usize(hdr[1], header_line)?);

        let mut edges = BTreeMap::new();
        let mut first_with_weight: BTreeMap<Weight, Edge> = BTreeMap::new();
        let mut tie_broken = false;
        let mut found = 0usize;
        for (line, body) in lines {
            found += 1;
            if found > m {
                return Err(Error::Parse {
                    line,
                    kind: ParseErrorKind::EdgeCount { declared: m },
                });
            }
            let f = parse_fields::<3>(body, line)?;
            let (a, b) = (to_usize(f[0], line)?, to_usize(f[1], line)?);
            let e = Edge::new(a, b).map_err(|_| Error::Parse {
                line,
                kind: ParseErrorKind::SelfLoop(a),
            })?;
            if e.v >= n {
                return Err(Error::Parse {
                    line,
                    kind: ParseErrorKind::VertexOutOfRange { vertex: e.v, n },
                });
            }
            let w = Weight::new(f[2]).map_err(|_| Error::Parse {
                line,
                kind: ParseErrorKind::BadWeight(f[2]),
            })?;
            if edges.insert(e, w).is_some() {
                return Err(Error::Parse {
                    line,
                    kind: ParseErrorKind::DuplicateEdge(e),
                });
            }
            if let Some(&prev) = first_with_weight.get(&w) {
                match mode {
                    WeightMode::Strict => {
                        return Err(Error::Parse {
                            line,
                            kind: ParseErrorKind::DuplicateWeight {
                                weight: w.get(),
                                previous: prev,
                            },
                        })
                    }
                    WeightMode::Permissive => tie_broken = true,
                }
            } else {
                first_with_weight.insert(w, e);
            }
        }
        if found != m {
            return Err(Error::Parse {
                line: header_line,
                kind: ParseErrorKind::EdgeCount { declared: m },
            });
        }
        Ok(WeightedGraph {
            n,
            edges,
            labels: (0..n).collect(),
            tie_broken,
        })
    }

    /// Writes the edge-list format in canonical edge order.
    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for (e, w) in &self.edges {
            out.push_str(&format!("{} {} {}\n", e.u, e.v, w));
        }
        out
    }
}

fn parse_fields<const N: usize>(body: &str, line: usize) -> Result<[u64; N]> {
    let toks: Vec<&str> = body.split_whitespace().collect();
    if toks.len() != N {
        return Err(Error::Parse {
            line,
            kind: ParseErrorKind::Malformed(format!(
                "expected {N} fields, found {}",
                toks.len()
            )),
        });
    }
    let mut out = [0u64; N];
    for (slot, tok) in out.iter_mut().zip(toks) {
        *slot = tok.parse().map_err(|_| Error::Parse {
            line,
            kind: ParseErrorKind::Malformed(format!("not a non-negative integer: {tok:?}")),
        })?;
    }
    Ok(out)
}

fn to_usize(x: u64, line: usize) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::Parse {
        line,
        kind: ParseErrorKind::Malformed(format!("value too large: {x}")),
    })
}
