//! The robust MST cover `M_k(G)`: the union of the minimum spanning trees
//! of all induced subgraphs that survive the deletion of `k - 1` vertices.
//!
//! Two routes compute it. [`mk_fast`] is Kruskal with a different admission
//! rule: an edge is kept iff its endpoints are at most `(k-1)`-connected in
//! the edges kept so far. [`mk_brute`] evaluates the definition directly and
//! serves as the oracle.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;

use crate::connectivity::FlowScratch;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, SimpleGraph, WeightedGraph};
use crate::mst::{mst_sequence, scan_by_weight};

/// Default cap on brute-force work, in edge visits.
pub const DEFAULT_WORK_LIMIT: u128 = 2_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Fast,
    Brute,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Fast => "fast",
            Method::Brute => "brute",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BruteOptions {
    pub work_limit: u128,
    pub parallel: bool,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions {
            work_limit: DEFAULT_WORK_LIMIT,
            parallel: true,
        }
    }
}

/// `nk - k(k+1)/2`, the largest possible `|M_k|` on `n >= k+1` vertices.
pub fn edge_bound(n: usize, k: usize) -> usize {
    (n * k).saturating_sub(k * (k + 1) / 2)
}

/// `ceil((1 + e/2) k n)`, the older and weaker bound. Display only.
pub fn gv_bound(n: usize, k: usize) -> u64 {
    ((1.0 + std::f64::consts::E / 2.0) * (k * n) as f64).ceil() as u64
}

/// Fails unless `1 <= k <= n - 1`.
pub fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::KOutOfRange {
            k,
            min: 1,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// `M_k(G)` with its bound bookkeeping.
#[derive(Clone, Debug)]
pub struct CoverReport {
    pub n: usize,
    pub k: usize,
    pub cover: EdgeSet,
    /// Cover edges by increasing weight.
    pub order: Vec<Edge>,
    pub bound: usize,
    pub gv_bound: u64,
    pub tight: bool,
    pub method: Method,
    pub tie_broken: bool,
    pub elapsed: Duration,
}

impl CoverReport {
    /// Assembles a report, refusing any cover larger than the edge bound.
    pub fn new(
        g: &WeightedGraph,
        k: usize,
        order: Vec<Edge>,
        method: Method,
        elapsed: Duration,
    ) -> Result<CoverReport> {
        let n = g.n();
        let cover: EdgeSet = order.iter().copied().collect();
        let bound = edge_bound(n, k);
        if cover.len() > bound {
            return Err(Error::BoundExceeded {
                n,
                k,
                size: cover.len(),
                bound,
            });
        }
        Ok(CoverReport {
            n,
            k,
            tight: cover.len() == bound,
            cover,
            order,
            bound,
            gv_bound: gv_bound(n, k),
            method,
            tie_broken: g.is_tie_broken(),
            elapsed,
        })
    }

    pub fn cover_size(&self) -> usize {
        self.cover.len()
    }

    /// `k=.. size=.. bound=.. tight=yes|no method=..`
    pub fn summary(&self) -> String {
        self.summary_with_method(&self.method.to_string())
    }

    pub fn summary_with_method(&self, method: &str) -> String {
        let mut s = format!(
            "k={} size={} bound={} tight={} method={}",
            self.k,
            self.cover_size(),
            self.bound,
            if self.tight { "yes" } else { "no" },
            method
        );
        if self.tie_broken {
            s.push_str(" tie_broken=yes");
        }
        s
    }
}

/// Generalized Kruskal: keep `{u, v}` iff `u` and `v` are at most
/// `(k-1)`-connected in the kept edges.
///
/// For an incomplete graph the cover is only defined when no `k - 1`
/// deletions disconnect it; that is checked on the pairs the cover leaves
/// below `k`, and a separator is reported otherwise.
pub fn mk_fast(g: &WeightedGraph, k: usize) -> Result<CoverReport> {
    let start = Instant::now();
    check_k(g.n(), k)?;
    let mut kept = SimpleGraph::empty(g.n());
    let mut flow = FlowScratch::new();
    let order = scan_by_weight(g, |e| {
        let (u, v) = e.endpoints();
        if flow.local_connectivity(&kept, u, v, k)? < k {
            kept.add_edge(e)?;
            Ok(true)
        } else {
            Ok(false)
        }
    })?;
    if !g.is_complete() {
        let full = g.topology();
        for pair in full.anti_edges() {
            let (u, v) = pair.endpoints();
            if flow.local_connectivity(&kept, u, v, k)? < k
                && flow.local_connectivity(&full, u, v, k)? < k
            {
                let cert = flow.min_separator(&full, u, v)?;
                return Err(Error::NotKConnected {
                    k,
                    u: g.label(u),
                    v: g.label(v),
                    separator: cert.separator.iter().map(|&x| g.label(x)).collect(),
                });
            }
        }
    }
    let order = order.into_iter().map(|e| g.relabel(e)).collect();
    CoverReport::new(g, k, order, Method::Fast, start.elapsed())
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The definition, evaluated: union over every `X` with `|X| = k - 1` of
/// `MST(G[V \ X])`.
pub fn mk_brute(g: &WeightedGraph, k: usize, opts: &BruteOptions) -> Result<CoverReport> {
    let start = Instant::now();
    let n = g.n();
    check_k(n, k)?;
    let required = binomial(n, k - 1) * (g.edge_count() + n) as u128;
    if required > opts.work_limit {
        return Err(Error::WorkLimit {
            required,
            limit: opts.work_limit,
        });
    }
    // Work in g's own ids; translate to root ids once at the end.
    let base = g.clone().detach();
    let one = |removed: Vec<usize>| -> Result<Vec<Edge>> {
        let set: BTreeSet<usize> = removed.iter().copied().collect();
        let h = base.induced_subgraph(&set)?;
        let tree = mst_sequence(&h).map_err(|_| Error::DisconnectedSubgraph {
            removed: removed.iter().map(|&x| g.label(x)).collect(),
        })?;
        Ok(tree.into_iter().map(|e| h.relabel(e)).collect())
    };
    let subsets = (0..n).combinations(k - 1);
    let trees: Vec<Result<Vec<Edge>>> = if opts.parallel {
        subsets.collect::<Vec<_>>().into_par_iter().map(one).collect()
    } else {
        subsets.map(one).collect()
    };
    let mut cover = EdgeSet::new();
    for tree in trees {
        cover.extend(tree?);
    }
    let mut order: Vec<(u64, Edge)> = cover
        .iter()
        .map(|&e| (g.weight(&e).expect("cover edge in graph").get(), e))
        .collect();
    order.sort_unstable();
    let order = order.into_iter().map(|(_, e)| g.relabel(e)).collect();
    CoverReport::new(g, k, order, Method::Brute, start.elapsed())
}

/// Either route by name.
pub fn mk(g: &WeightedGraph, k: usize, method: Method, opts: &BruteOptions) -> Result<CoverReport> {
    match method {
        Method::Fast => mk_fast(g, k),
        Method::Brute => mk_brute(g, k, opts),
    }
}

/// Whether `M_k(G) ⊆ M_{k+1}(G)`. Defined for `1 <= k <= n - 2`.
pub fn check_monotone(
    g: &WeightedGraph,
    k: usize,
    method: Method,
    opts: &BruteOptions,
) -> Result<bool> {
    if k == 0 || k + 2 > g.n() {
        return Err(Error::KOutOfRange {
            k,
            min: 1,
            max: g.n().saturating_sub(2),
        });
    }
    let small = mk(g, k, method, opts)?;
    let large = mk(g, k + 1, method, opts)?;
    Ok(small.cover.is_subset(&large.cover))
}
