//! Test-only oracles and fixtures shared by the integration tests.

#![allow(dead_code)]

use itertools::Itertools;
use mkcover::generators::Seed;
use mkcover::{Edge, SimpleGraph};
use rand::Rng;

pub fn e(a: usize, b: usize) -> Edge {
    Edge::new(a, b).unwrap()
}

pub fn graph(n: usize, pairs: &[(usize, usize)]) -> SimpleGraph {
    let es: Vec<Edge> = pairs.iter().map(|&(a, b)| e(a, b)).collect();
    SimpleGraph::from_edges(n, &es).unwrap()
}

/// Size of the smallest vertex set (avoiding `s`, `t`) whose deletion
/// leaves no `s`-`t` path, by enumerating subsets in order of size.
pub fn brute_min_separator(g: &SimpleGraph, s: usize, t: usize) -> usize {
    let others: Vec<usize> = (0..g.n()).filter(|&x| x != s && x != t).collect();
    for size in 0..=others.len() {
        for del in others.iter().copied().combinations(size) {
            let mut blocked = vec![false; g.n()];
            for x in del {
                blocked[x] = true;
            }
            if !g.reachable_avoiding(s, &blocked)[t] {
                return size;
            }
        }
    }
    panic!("{s} and {t} are adjacent");
}

/// Erdos-Renyi style graph with a seeded edge probability.
pub fn random_graph(n: usize, p: f64, seed: u64) -> SimpleGraph {
    let mut rng = Seed(seed).rng();
    let mut g = SimpleGraph::empty(n);
    for (a, b) in (0..n).tuple_combinations() {
        if rng.gen_bool(p) {
            g.add_edge(e(a, b)).unwrap();
        }
    }
    g
}

pub fn cycle(n: usize) -> SimpleGraph {
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    graph(n, &pairs)
}

/// Hub 0 joined to every vertex of the rim cycle 1..=r.
pub fn wheel(r: usize) -> SimpleGraph {
    let mut pairs: Vec<(usize, usize)> = (1..=r).map(|i| (0, i)).collect();
    pairs.extend((1..=r).map(|i| (i, i % r + 1)));
    graph(r + 1, &pairs)
}

pub fn complete_bipartite(a: usize, b: usize) -> SimpleGraph {
    let pairs: Vec<(usize, usize)> = (0..a)
        .flat_map(|x| (a..a + b).map(move |y| (x, y)))
        .collect();
    graph(a + b, &pairs)
}

pub fn hypercube(d: usize) -> SimpleGraph {
    let n = 1 << d;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..d).map(move |i| (x, x ^ (1 << i))))
        .filter(|&(x, y)| x < y)
        .collect();
    graph(n, &pairs)
}

pub fn petersen() -> SimpleGraph {
    let mut pairs: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    pairs.extend((0..5).map(|i| (i, i + 5)));
    pairs.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    graph(10, &pairs)
}

/// Triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> SimpleGraph {
    graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}
