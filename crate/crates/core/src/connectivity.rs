//! Local vertex connectivity and minimum vertex separators.
//!
//! Every vertex `x` other than the source and target is split into
//! `x_in -> x_out` with capacity 1; each undirected edge `{x, y}` becomes
//! the arcs `x_out -> y_in` and `y_out -> x_in` with unbounded capacity, so
//! a minimum cut only ever crosses split arcs. Augmenting paths are found by
//! BFS, one unit at a time, and the search stops as soon as `cap` paths are
//! known.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Edge, SimpleGraph};

const UNBOUNDED: i32 = i32::MAX / 2;
const NONE: u32 = u32::MAX;

/// Proof that `s` and `t` are at most `paths_found`-connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorCertificate {
    pub s: usize,
    pub t: usize,
    pub separator: BTreeSet<usize>,
    pub paths_found: usize,
}

impl SeparatorCertificate {
    /// Checks the certificate against `g` by BFS: the separator avoids `s`
    /// and `t`, and deleting it leaves no `s`-`t` path.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        if self.separator.contains(&self.s) || self.separator.contains(&self.t) {
            return false;
        }
        let mut blocked = vec![false; g.n()];
        for &x in &self.separator {
            if x >= g.n() {
                return false;
            }
            blocked[x] = true;
        }
        !g.reachable_avoiding(self.s, &blocked)[self.t]
    }
}

/// Reusable scratch space for connectivity queries.
///
/// Holds the residual network of the last query. A single instance must not
/// be shared across threads; create one per worker.
#[derive(Debug, Default)]
pub struct FlowScratch {
    start: Vec<usize>,
    arc_to: Vec<u32>,
    arc_cap: Vec<i32>,
    arc_rev: Vec<u32>,
    parent: Vec<u32>,
    queue: VecDeque<u32>,
}

#[inline]
fn node_in(x: usize) -> usize {
    2 * x
}

#[inline]
fn node_out(x: usize) -> usize {
    2 * x + 1
}

impl FlowScratch {
    pub fn new() -> Self {
        Self::default()
    }

    /// `min(cap, maximum number of internally vertex-disjoint s-t paths)`.
    /// A direct `{s, t}` edge counts as one path.
    pub fn local_connectivity(
        &mut self,
        g: &SimpleGraph,
        s: usize,
        t: usize,
        cap: usize,
    ) -> Result<usize> {
        check_query(g, s, t)?;
        if cap == 0 {
            return Err(Error::ZeroCap);
        }
        let direct = usize::from(g.has_edge(s, t));
        if direct >= cap {
            return Ok(cap);
        }
        // Connectivity never exceeds the smaller endpoint degree.
        let bound = (g.degree(s).min(g.degree(t)) - direct).min(cap - direct);
        if bound == 0 {
            return Ok(direct);
        }
        self.build(g, s, t);
        Ok(direct + self.augment(s, t, bound))
    }

    /// Minimum vertex separator for non-adjacent `s`, `t`.
    pub fn min_separator(
        &mut self,
        g: &SimpleGraph,
        s: usize,
        t: usize,
    ) -> Result<SeparatorCertificate> {
        check_query(g, s, t)?;
        if g.has_edge(s, t) {
            return Err(Error::Adjacent(Edge::new(s, t)?));
        }
        self.build(g, s, t);
        let paths_found = self.augment(s, t, usize::MAX);
        let reach = self.residual_reach(node_out(s));
        let separator = (0..g.n())
            .filter(|&x| x != s && x != t && reach[node_in(x)] && !reach[node_out(x)])
            .collect();
        Ok(SeparatorCertificate {
            s,
            t,
            separator,
            paths_found,
        })
    }

    fn build(&mut self, g: &SimpleGraph, s: usize, t: usize) {
        let nodes = 2 * g.n();
        // Degree pass, then fill: a compact CSR layout keeps BFS cache-friendly.
        let mut count = vec![0usize; nodes + 1];
        let add = |count: &mut Vec<usize>, a: usize, b: usize| {
            count[a] += 1;
            count[b] += 1;
        };
        for x in 0..g.n() {
            if x != s && x != t {
                add(&mut count, node_in(x), node_out(x));
            }
            for &y in g.neighbors(x) {
                if y != s && x != t && !(x == s && y == t) {
                    add(&mut count, node_out(x), node_in(y));
                }
            }
        }
        self.start.clear();
        self.start.push(0);
        for c in &count[..nodes] {
            let last = *self.start.last().unwrap();
            self.start.push(last + c);
        }
        let arcs = *self.start.last().unwrap();
        self.arc_to.clear();
        self.arc_to.resize(arcs, 0);
        self.arc_cap.clear();
        self.arc_cap.resize(arcs, 0);
        self.arc_rev.clear();
        self.arc_rev.resize(arcs, 0);
        let mut fill: Vec<usize> = self.start[..nodes].to_vec();
        let mut link = |a: usize, b: usize, c: i32| {
            let (ia, ib) = (fill[a], fill[b]);
            fill[a] += 1;
            fill[b] += 1;
            self.arc_to[ia] = b as u32;
            self.arc_cap[ia] = c;
            self.arc_rev[ia] = ib as u32;
            self.arc_to[ib] = a as u32;
            self.arc_cap[ib] = 0;
            self.arc_rev[ib] = ia as u32;
        };
        for x in 0..g.n() {
            if x != s && x != t {
                link(node_in(x), node_out(x), 1);
            }
            for &y in g.neighbors(x) {
                if y != s && x != t && !(x == s && y == t) {
                    link(node_out(x), node_in(y), UNBOUNDED);
                }
            }
        }
    }

    /// Pushes up to `limit` unit augmenting paths from `s_out` to `t_in`.
    fn augment(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let (source, sink) = (node_out(s), node_in(t));
        let mut flow = 0;
        while flow < limit && self.bfs(source, sink) {
            let mut x = sink;
            while x != source {
                let a = self.parent[x] as usize;
                let r = self.arc_rev[a] as usize;
                self.arc_cap[a] -= 1;
                self.arc_cap[r] += 1;
                x = self.arc_to[r] as usize;
            }
            flow += 1;
        }
        flow
    }

    fn bfs(&mut self, source: usize, sink: usize) -> bool {
        let nodes = self.start.len() - 1;
        self.parent.clear();
        self.parent.resize(nodes, NONE);
        self.queue.clear();
        self.queue.push_back(source as u32);
        // Mark the source so it is never re-entered.
        self.parent[source] = u32::MAX - 1;
        while let Some(x) = self.queue.pop_front() {
            let x = x as usize;
            for a in self.start[x]..self.start[x + 1] {
                let y = self.arc_to[a] as usize;
                if self.arc_cap[a] > 0 && self.parent[y] == NONE {
                    self.parent[y] = a as u32;
                    if y == sink {
                        return true;
                    }
                    self.queue.push_back(y as u32);
                }
            }
        }
        false
    }

    fn residual_reach(&self, source: usize) -> Vec<bool> {
        let nodes = self.start.len() - 1;
        let mut seen = vec![false; nodes];
        let mut queue = VecDeque::from([source]);
        seen[source] = true;
        while let Some(x) = queue.pop_front() {
            for a in self.start[x]..self.start[x + 1] {
                let y = self.arc_to[a] as usize;
                if self.arc_cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

fn check_query(g: &SimpleGraph, s: usize, t: usize) -> Result<()> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    Ok(())
}

/// `min(cap, number of internally vertex-disjoint s-t paths in g)`.
pub fn local_connectivity(g: &SimpleGraph, s: usize, t: usize, cap: usize) -> Result<usize> {
    FlowScratch::new().local_connectivity(g, s, t, cap)
}

/// A minimum set of vertices whose deletion disconnects non-adjacent `s`
/// and `t`, together with the number of disjoint paths that certify it.
pub fn min_separator(g: &SimpleGraph, s: usize, t: usize) -> Result<SeparatorCertificate> {
    FlowScratch::new().min_separator(g, s, t)
}
