//! Batch verification over seeded instances.
//!
//! Each check runs on every instance of its kind and is tallied per vertex
//! count. Cells that would exceed the brute-force work limit, or whose `n`
//! lies above `brute_max_n`, are counted as skipped rather than failed.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use crate::connectivity::FlowScratch;
use crate::constructible::{check_order, embed_weights, ConstructionOrder};
use crate::cover::{edge_bound, mk_brute, mk_fast, BruteOptions, CoverReport};
use crate::error::{Error, Result};
use crate::generators::{gen_random_complete, gen_tight, Seed};
use crate::graph::{Edge, SimpleGraph, WeightedGraph};
use crate::mst::mst;

/// Signature of an `M_k` routine under test.
pub type FastFn = dyn Fn(&WeightedGraph, usize) -> Result<CoverReport> + Sync;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Equivalence,
    Bound,
    Monotone,
    ConstructionOrder,
    Embedding,
    Tightness,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Equivalence,
        Check::Bound,
        Check::Monotone,
        Check::ConstructionOrder,
        Check::Embedding,
        Check::Tightness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Equivalence => "equivalence",
            Check::Bound => "bound",
            Check::Monotone => "monotone",
            Check::ConstructionOrder => "construction-order",
            Check::Embedding => "embedding",
            Check::Tightness => "tightness",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Vertex counts for random complete graphs.
    pub ns: Vec<usize>,
    /// Values of k to test; `None` means every `1..n`.
    pub ks: Option<Vec<usize>>,
    pub seeds: Vec<u64>,
    /// Brute-force legs only run for `n <= brute_max_n`.
    pub brute_max_n: usize,
    pub work_limit: u128,
    pub tight_cases: Vec<(usize, usize)>,
    /// Number of random construction orders fed to the weight embedding.
    pub embed_orders: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let mut tight_cases = vec![(4, 2), (6, 3), (7, 3), (8, 4)];
        tight_cases.extend((1..=7).map(|k| (k + 1, k)));
        SuiteConfig {
            ns: (4..=8).collect(),
            ks: None,
            seeds: (0..40).collect(),
            brute_max_n: 8,
            work_limit: crate::cover::DEFAULT_WORK_LIMIT,
            tight_cases,
            embed_orders: 50,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cell {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// First few failure or skip descriptions.
    pub notes: Vec<String>,
}

impl Cell {
    fn record(&mut self, outcome: Outcome) {
        match outcome {
            Outcome::Pass => self.passed += 1,
            Outcome::Fail(msg) => {
                self.failed += 1;
                self.note(msg);
            }
            Outcome::Skip(msg) => {
                self.skipped += 1;
                self.note(msg);
            }
        }
    }

    fn note(&mut self, msg: String) {
        if self.notes.len() < 3 {
            self.notes.push(msg);
        }
    }

    fn merge(&mut self, other: Cell) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        for n in other.notes {
            self.note(n);
        }
    }

    pub fn status(&self) -> &'static str {
        if self.failed > 0 {
            "FAIL"
        } else if self.passed == 0 {
            "skip"
        } else {
            "pass"
        }
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

impl Outcome {
    fn check(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(msg())
        }
    }
}

/// Results keyed by `(check, n)`.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub cells: BTreeMap<(Check, usize), Cell>,
}

impl SuiteReport {
    fn add(&mut self, check: Check, n: usize, outcome: Outcome) {
        self.cells.entry((check, n)).or_default().record(outcome);
    }

    fn absorb(&mut self, other: SuiteReport) {
        for (key, cell) in other.cells {
            self.cells.entry(key).or_default().merge(cell);
        }
    }

    pub fn failures(&self) -> usize {
        self.cells.values().map(|c| c.failed).sum()
    }

    pub fn is_success(&self) -> bool {
        self.failures() == 0
    }

    pub fn totals(&self, check: Check) -> Cell {
        let mut total = Cell::default();
        for ((c, _), cell) in &self.cells {
            if *c == check {
                total.merge(cell.clone());
            }
        }
        total
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ns: Vec<usize> = {
            let mut v: Vec<usize> = self.cells.keys().map(|&(_, n)| n).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        write!(f, "{:<20}", "check \\ n")?;
        for n in &ns {
            write!(f, "{n:>6}")?;
        }
        writeln!(f)?;
        for check in Check::ALL {
            write!(f, "{:<20}", check.name())?;
            for n in &ns {
                let s = self.cells.get(&(check, *n)).map_or("-", Cell::status);
                write!(f, "{s:>6}")?;
            }
            writeln!(f)?;
        }
        for ((check, n), cell) in &self.cells {
            writeln!(
                f,
                "check={} n={} pass={} fail={} skipped={}",
                check.name(),
                n,
                cell.passed,
                cell.failed,
                cell.skipped
            )?;
            for note in &cell.notes {
                writeln!(f, "  note: {note}")?;
            }
        }
        writeln!(
            f,
            "result={} failures={}",
            if self.is_success() { "pass" } else { "fail" },
            self.failures()
        )
    }
}

pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    run_suite_with(cfg, &mk_fast)
}

/// Runs every check with `fast` standing in for the generalized Kruskal
/// routine. The brute-force oracle is always the library's own.
pub fn run_suite_with(cfg: &SuiteConfig, fast: &FastFn) -> SuiteReport {
    let brute_opts = BruteOptions {
        work_limit: cfg.work_limit,
        // Parallelism is spent on instances instead.
        parallel: false,
    };
    let instances: Vec<(usize, u64)> = cfg
        .ns
        .iter()
        .flat_map(|&n| cfg.seeds.iter().map(move |&s| (n, s)))
        .collect();
    let mut parts: Vec<SuiteReport> = instances
        .par_iter()
        .map(|&(n, seed)| random_instance(cfg, fast, &brute_opts, n, seed))
        .collect();
    parts.extend(
        cfg.tight_cases
            .par_iter()
            .map(|&(n, k)| tight_instance(cfg, fast, &brute_opts, n, k))
            .collect::<Vec<_>>(),
    );
    parts.extend(
        (0..cfg.embed_orders as u64)
            .into_par_iter()
            .map(|i| embedding_instance(&brute_opts, i))
            .collect::<Vec<_>>(),
    );
    let mut report = SuiteReport::default();
    for p in parts {
        report.absorb(p);
    }
    report
}

fn describe(err: &Error) -> Outcome {
    match err {
        Error::WorkLimit { .. } => Outcome::Skip(err.to_string()),
        _ => Outcome::Fail(err.to_string()),
    }
}

fn random_instance(
    cfg: &SuiteConfig,
    fast: &FastFn,
    brute_opts: &BruteOptions,
    n: usize,
    seed: u64,
) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let g = match gen_random_complete(n, Seed(seed)) {
        Ok(g) => g,
        Err(e) => {
            rep.add(Check::Bound, n, Outcome::Fail(e.to_string()));
            return rep;
        }
    };
    let ks: Vec<usize> = match &cfg.ks {
        Some(ks) => ks.iter().copied().filter(|&k| k >= 1 && k < n).collect(),
        None => (1..n).collect(),
    };
    let tag = |k: usize| format!("n={n} seed={seed} k={k}");
    let mut covers: BTreeMap<usize, CoverReport> = BTreeMap::new();
    for &k in &ks {
        match fast(&g, k) {
            Ok(r) => {
                rep.add(
                    Check::Bound,
                    n,
                    Outcome::check(r.cover_size() <= edge_bound(n, k), || {
                        format!("{}: size {} > bound {}", tag(k), r.cover_size(), r.bound)
                    }),
                );
                let order = ConstructionOrder::new(n, k, r.order.clone());
                let ok = order.map(|o| check_order(&o).valid).unwrap_or(false);
                rep.add(
                    Check::ConstructionOrder,
                    n,
                    Outcome::check(ok, || format!("{}: weight order is not a construction order", tag(k))),
                );
                covers.insert(k, r);
            }
            Err(e) => rep.add(Check::Bound, n, Outcome::Fail(format!("{}: {e}", tag(k)))),
        }
    }

    if let Some(r1) = covers.get(&1) {
        let ok = mst(&g).map(|t| t == r1.cover).unwrap_or(false);
        rep.add(
            Check::Monotone,
            n,
            Outcome::check(ok, || format!("{}: M_1 differs from the MST", tag(1))),
        );
    }
    for (k, r) in &covers {
        if let Some(next) = covers.get(&(k + 1)) {
            rep.add(
                Check::Monotone,
                n,
                Outcome::check(r.cover.is_subset(&next.cover), || {
                    format!("{}: M_k not contained in M_(k+1)", tag(*k))
                }),
            );
        }
    }

    for (&k, r) in &covers {
        if n > cfg.brute_max_n {
            rep.add(
                Check::Equivalence,
                n,
                Outcome::Skip(format!("n={n} above brute-force range, skipped")),
            );
            break;
        }
        let outcome = match mk_brute(&g, k, brute_opts) {
            Ok(b) => Outcome::check(b.cover == r.cover, || {
                format!("{}: fast and brute covers differ", tag(k))
            }),
            Err(e) => describe(&e),
        };
        rep.add(Check::Equivalence, n, outcome);
    }
    rep
}

fn tight_instance(
    cfg: &SuiteConfig,
    fast: &FastFn,
    brute_opts: &BruteOptions,
    n: usize,
    k: usize,
) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let tag = format!("tight n={n} k={k}");
    let g = match gen_tight(n, k, Seed(n as u64 * 31 + k as u64)) {
        Ok(g) => g,
        Err(e) => {
            rep.add(Check::Tightness, n, Outcome::Fail(format!("{tag}: {e}")));
            return rep;
        }
    };
    let f = match fast(&g, k) {
        Ok(f) => f,
        Err(e) => {
            rep.add(Check::Tightness, n, Outcome::Fail(format!("{tag}: {e}")));
            return rep;
        }
    };
    rep.add(
        Check::Tightness,
        n,
        Outcome::check(f.cover_size() == edge_bound(n, k), || {
            format!("{tag}: size {} != bound {}", f.cover_size(), edge_bound(n, k))
        }),
    );
    if n <= cfg.brute_max_n {
        let outcome = match mk_brute(&g, k, brute_opts) {
            Ok(b) => Outcome::check(b.cover == f.cover, || format!("{tag}: brute disagrees")),
            Err(e) => describe(&e),
        };
        rep.add(Check::Tightness, n, outcome);
    }
    rep
}

/// A random valid k-construction order: pairs in shuffled order, each
/// appended with some probability if it keeps the order valid.
pub fn random_construction_order(n: usize, k: usize, seed: Seed) -> ConstructionOrder {
    let mut rng = seed.rng();
    let mut pairs: Vec<Edge> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v).unwrap()))
        .collect();
    pairs.shuffle(&mut rng);
    let keep = rng.gen_range(0.5..=1.0);
    let mut g = SimpleGraph::empty(n);
    let mut flow = FlowScratch::new();
    let mut sequence = Vec::new();
    for e in pairs {
        if !rng.gen_bool(keep) {
            continue;
        }
        if flow.local_connectivity(&g, e.u(), e.v(), k).unwrap() < k {
            g.add_edge(e).unwrap();
            sequence.push(e);
        }
    }
    ConstructionOrder::new(n, k, sequence).unwrap()
}

fn embedding_instance(brute_opts: &BruteOptions, i: u64) -> SuiteReport {
    let mut rep = SuiteReport::default();
    let n = 4 + (i % 4) as usize;
    let k = 1 + (i / 4 % 3) as usize;
    let order = random_construction_order(n, k, Seed(0xE3B0_0000 + i));
    let tag = format!("embed n={n} k={k} order#{i}");
    let outcome = match embed_weights(&order).and_then(|g| mk_brute(&g, k, brute_opts)) {
        Ok(r) => Outcome::check(
            order.sequence().iter().all(|e| r.cover.contains(e)),
            || format!("{tag}: an order edge is missing from the cover"),
        ),
        Err(e) => describe(&e),
    };
    rep.add(Check::Embedding, n, outcome);
    rep
}
