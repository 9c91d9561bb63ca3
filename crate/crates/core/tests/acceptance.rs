//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use itertools::Itertools;
use mkcover::connectivity::FlowScratch;
use mkcover::constructible::{check_order, embed_weights, is_k_minimal, ConstructionOrder};
use mkcover::cover::{edge_bound, mk_brute, mk_fast, BruteOptions, CoverReport};
use mkcover::generators::{fixture_c4, gen_random_complete, gen_tight, Seed};
use mkcover::mst::{mst, mst_leaves};
use mkcover::suite::random_construction_order;
use mkcover::{EdgeSet, SimpleGraph, WeightedGraph};
use rand::seq::SliceRandom;

use common::*;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const SERIAL: BruteOptions = BruteOptions {
    work_limit: mkcover::cover::DEFAULT_WORK_LIMIT,
    parallel: false,
};

/// Random complete graphs on n = 4..=8, forty seeds each.
fn small_corpus() -> Vec<WeightedGraph> {
    (4..=8)
        .flat_map(|n| (0..40).map(move |s| gen_random_complete(n, Seed(1000 * n as u64 + s)).unwrap()))
        .collect()
}

/// n = 200 instances with their M_2, M_3, M_5 covers (fast route only).
fn large_corpus() -> &'static [(WeightedGraph, Vec<CoverReport>)] {
    static CORPUS: OnceLock<Vec<(WeightedGraph, Vec<CoverReport>)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (0..3)
            .map(|s| {
                let g = gen_random_complete(200, Seed(200_000 + s)).unwrap();
                let reports = [2, 3, 5].iter().map(|&k| mk_fast(&g, k).unwrap()).collect();
                (g, reports)
            })
            .collect()
    })
}

fn c4_fixture() -> Verdict {
    let g = fixture_c4();
    let cycle: EdgeSet = [(0, 1), (1, 2), (2, 3), (0, 3)].iter().map(|&(a, b)| e(a, b)).collect();
    // Warm the thread pool so the timing reflects the computation.
    mk_brute(&g, 2, &BruteOptions::default()).unwrap();
    let mut times = Vec::new();
    for _ in 0..11 {
        let start = Instant::now();
        let fast = mk_fast(&g, 2).map_err(|x| x.to_string())?;
        let brute = mk_brute(&g, 2, &BruteOptions::default()).map_err(|x| x.to_string())?;
        times.push(start.elapsed());
        for r in [&fast, &brute] {
            ensure!(r.cover == cycle, "{} cover {:?} is not the 4-cycle", r.method, r.cover);
            ensure!(r.cover_size() == 4 && r.bound == 5, "size {} bound {}", r.cover_size(), r.bound);
        }
        ensure!(
            fast.summary_with_method("both") == "k=2 size=4 bound=5 tight=no method=both",
            "summary {}",
            fast.summary_with_method("both")
        );
    }
    times.sort();
    let median = times[times.len() / 2];
    ensure!(median < Duration::from_millis(1), "median runtime {median:?} >= 1 ms");
    Ok(format!("cover = 4-cycle, size 4 <= bound 5, both methods; median {median:?}"))
}

fn oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let corpus = small_corpus();
    let mut comparisons = 0;
    for g in &corpus {
        for k in 1..g.n() {
            let fast = mk_fast(g, k).map_err(|x| x.to_string())?;
            let brute = mk_brute(g, k, &SERIAL).map_err(|x| x.to_string())?;
            ensure!(fast.cover == brute.cover, "n={} k={k}: fast != brute", g.n());
            comparisons += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(corpus.len() >= 200, "only {} graphs", corpus.len());
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!(
        "{} graphs, {comparisons} (graph, k) pairs identical, single-threaded in {elapsed:?}",
        corpus.len()
    ))
}

fn edge_bound_holds() -> Verdict {
    let mut checked = 0;
    for g in small_corpus() {
        for k in 1..g.n() {
            for r in [mk_fast(&g, k), mk_brute(&g, k, &SERIAL)] {
                let r = r.map_err(|x| x.to_string())?;
                ensure!(r.cover_size() <= edge_bound(g.n(), k), "n={} k={k}: {} > bound", g.n(), r.cover_size());
                checked += 1;
            }
        }
    }
    let mut slowest_k5 = Duration::ZERO;
    for (_, reports) in large_corpus() {
        for r in reports {
            if r.k == 5 {
                slowest_k5 = slowest_k5.max(r.elapsed);
            }
            ensure!(r.cover_size() <= edge_bound(200, r.k), "n=200 k={}: {} > {}", r.k, r.cover_size(), r.bound);
            checked += 1;
        }
    }
    ensure!(slowest_k5 < Duration::from_secs(60), "n=200 k=5 took {slowest_k5:?}");
    Ok(format!("{checked} covers within nk - k(k+1)/2, zero violations; n=200 k=5 in {slowest_k5:?}"))
}

fn tightness() -> Verdict {
    let mut cases = vec![(4, 2), (6, 3), (7, 3), (8, 4)];
    cases.extend((1..=7).map(|k| (k + 1, k)));
    for &(n, k) in &cases {
        for seed in 0..5 {
            let g = gen_tight(n, k, Seed(seed)).map_err(|x| x.to_string())?;
            let fast = mk_fast(&g, k).map_err(|x| x.to_string())?;
            ensure!(
                fast.cover_size() == edge_bound(n, k) && fast.tight,
                "n={n} k={k}: size {} != bound {}",
                fast.cover_size(),
                edge_bound(n, k)
            );
            if n <= 8 {
                let brute = mk_brute(&g, k, &SERIAL).map_err(|x| x.to_string())?;
                ensure!(brute.cover == fast.cover, "n={n} k={k}: brute disagrees");
            }
        }
    }
    Ok(format!("{} (n, k) cases x 5 seeds attain the bound exactly", cases.len()))
}

fn monotonicity() -> Verdict {
    let mut pairs = 0;
    for g in small_corpus() {
        let covers: Vec<EdgeSet> = (1..g.n()).map(|k| mk_fast(&g, k).unwrap().cover).collect();
        ensure!(covers[0] == mst(&g).unwrap(), "n={}: M_1 != MST", g.n());
        for w in covers.windows(2) {
            ensure!(w[0].is_subset(&w[1]), "n={}: chain broken", g.n());
            pairs += 1;
        }
        ensure!(covers.last().unwrap().len() == g.n() * (g.n() - 1) / 2, "M_(n-1) is not complete");
    }
    for (g, reports) in large_corpus() {
        ensure!(mk_fast(g, 1).unwrap().cover == mst(g).unwrap(), "n=200: M_1 != MST");
        ensure!(reports[0].cover.is_subset(&reports[1].cover), "n=200: M_2 not in M_3");
        ensure!(reports[1].cover.is_subset(&reports[2].cover), "n=200: M_3 not in M_5");
        pairs += 2;
    }
    Ok(format!("{pairs} inclusions M_k <= M_k' verified; M_1 = MST on every instance"))
}

fn fast_order_is_construction_order() -> Verdict {
    let mut checked = 0;
    let mut check = |n: usize, r: &CoverReport| -> Verdict {
        let o = ConstructionOrder::new(n, r.k, r.order.clone()).map_err(|x| x.to_string())?;
        let v = check_order(&o);
        ensure!(v.valid, "n={n} k={}: violation {:?}", r.k, v.first_violation);
        checked += 1;
        Ok(String::new())
    };
    for g in small_corpus() {
        for k in 1..g.n() {
            check(g.n(), &mk_fast(&g, k).unwrap())?;
        }
    }
    for (_, reports) in large_corpus() {
        for r in reports {
            check(200, r)?;
        }
    }
    Ok(format!("{checked} weight-ordered covers are valid k-construction orders"))
}

fn embedding() -> Verdict {
    let mut count = 0;
    for i in 0..60u64 {
        let n = 4 + (i % 4) as usize;
        let k = 1 + (i / 4 % 3) as usize;
        let order = random_construction_order(n, k, Seed(7_000 + i));
        let g = embed_weights(&order).map_err(|x| x.to_string())?;
        let cover = mk_brute(&g, k, &SERIAL).map_err(|x| x.to_string())?.cover;
        for edge in order.sequence() {
            ensure!(cover.contains(edge), "order #{i} (n={n} k={k}): {{{edge}}} missing");
        }
        count += 1;
    }
    Ok(format!("{count} random orders (n <= 7, k <= 3): every order edge lies in M_k"))
}

fn menger() -> Verdict {
    let mut flow = FlowScratch::new();
    let mut graphs = 0;
    let mut pairs = 0;
    for n in 3..=8usize {
        for (i, p) in [0.2, 0.35, 0.5, 0.65, 0.8].iter().enumerate() {
            for s in 0..6u64 {
                let g = random_graph(n, *p, 50_000 + 100 * n as u64 + 10 * i as u64 + s);
                graphs += 1;
                for (a, b) in (0..n).tuple_combinations() {
                    if g.has_edge(a, b) {
                        continue;
                    }
                    let kappa = flow.local_connectivity(&g, a, b, usize::MAX).unwrap();
                    let brute = brute_min_separator(&g, a, b);
                    ensure!(kappa == brute, "n={n} pair ({a},{b}): flow {kappa} vs separator {brute}");
                    let cert = flow.min_separator(&g, a, b).unwrap();
                    ensure!(cert.separator.len() == brute && cert.verify(&g), "bad certificate");
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{graphs} graphs, {pairs} non-adjacent pairs: max paths = min separator"))
}

fn mader() -> Verdict {
    let mut curated: Vec<(String, SimpleGraph, usize, bool)> = Vec::new();
    for n in 3..=10 {
        curated.push((format!("C_{n}"), cycle(n), 2, true));
    }
    for k in 1..=7 {
        curated.push((format!("K_{}", k + 1), SimpleGraph::complete(k + 1), k, true));
    }
    for r in 4..=8 {
        curated.push((format!("W_{r}"), wheel(r), 3, true));
        curated.push((format!("W_{r} (k=2)"), wheel(r), 2, false));
    }
    curated.push(("K_3,3".into(), complete_bipartite(3, 3), 3, true));
    curated.push(("K_4,4".into(), complete_bipartite(4, 4), 4, true));
    curated.push(("Q_3".into(), hypercube(3), 3, true));
    curated.push(("Q_4".into(), hypercube(4), 4, true));
    curated.push(("Petersen".into(), petersen(), 3, true));
    curated.push(("prism".into(), prism(), 3, true));
    let mut c4_chord = cycle(4);
    c4_chord.add_edge(e(0, 2)).unwrap();
    curated.push(("C_4 + chord".into(), c4_chord, 2, false));
    curated.push(("K_5 (k=3)".into(), SimpleGraph::complete(5), 3, false));

    let mut rng = Seed(6).rng();
    let mut minimal = 0;
    for (name, g, k, expect) in &curated {
        let got = is_k_minimal(g, *k);
        ensure!(got == *expect, "{name}: is_k_minimal = {got}, expected {expect}");
        if !got {
            continue;
        }
        minimal += 1;
        ensure!(
            g.edge_count() <= edge_bound(g.n(), *k),
            "{name}: {} edges > bound {}",
            g.edge_count(),
            edge_bound(g.n(), *k)
        );
        let mut edges: Vec<_> = g.edges().collect();
        for _ in 0..20 {
            edges.shuffle(&mut rng);
            let o = ConstructionOrder::new(g.n(), *k, edges.clone()).unwrap();
            ensure!(check_order(&o).valid, "{name}: permutation rejected");
        }
    }
    Ok(format!("{minimal} k-minimal graphs within the bound, 20 permutations each valid"))
}

fn leaf_deletion() -> Verdict {
    let mut leaves = 0;
    for i in 0..100u64 {
        let n = 3 + (i % 8) as usize;
        let g = gen_random_complete(n, Seed(90_000 + i)).unwrap();
        let t = mst(&g).unwrap();
        for v in mst_leaves(&t, n).unwrap() {
            let tree_edge = *t.iter().find(|x| x.contains(v)).unwrap();
            let h = g.induced_subgraph(&BTreeSet::from([v])).unwrap();
            let sub: EdgeSet = mst(&h).unwrap().into_iter().map(|x| h.relabel(x)).collect();
            let mut expected = t.clone();
            expected.remove(&tree_edge);
            ensure!(sub == expected, "graph #{i} n={n} leaf {v}");
            leaves += 1;
        }
    }
    Ok(format!("100 graphs (n <= 10), {leaves} leaves: MST(G - v) = MST(G) - {{uv}}"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("c4-fixture", c4_fixture),
        ("oracle-equivalence", oracle_equivalence),
        ("edge-bound", edge_bound_holds),
        ("tightness", tightness),
        ("monotonicity", monotonicity),
        ("cover-order-is-construction-order", fast_order_is_construction_order),
        ("weight-embedding", embedding),
        ("menger", menger),
        ("mader-cross-check", mader),
        ("leaf-deletion", leaf_deletion),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let verdict = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match verdict {
            Ok(detail) => println!("[PASS] {name:<36} {detail} ({took:.2?})"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name:<36} {why} ({took:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
