//! Kruskal's algorithm and spanning-tree utilities.
//!
//! [`scan_by_weight`] is the shared skeleton: it walks edges in increasing
//! weight order and asks an admission predicate about each one. The MST
//! admits edges joining different components; the M_k cover admits edges
//! whose endpoints are not yet k-connected.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, WeightedGraph};

/// Union-find with path compression and union by rank.
#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; `false` if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}

/// Scans the edges of `g` by increasing weight and keeps those `admit`
/// accepts, returning them in acceptance order.
pub fn scan_by_weight<F>(g: &WeightedGraph, mut admit: F) -> Result<Vec<Edge>>
where
    F: FnMut(Edge) -> Result<bool>,
{
    let mut accepted = Vec::new();
    for e in g.edges_by_weight() {
        if admit(e)? {
            accepted.push(e);
        }
    }
    Ok(accepted)
}

/// MST edges in increasing weight order.
pub fn mst_sequence(g: &WeightedGraph) -> Result<Vec<Edge>> {
    let mut dsu = DisjointSets::new(g.n());
    let tree = scan_by_weight(g, |e| Ok(dsu.union(e.u(), e.v())))?;
    if tree.len() + 1 < g.n() {
        let v = (1..g.n()).find(|&x| !dsu.same(0, x)).unwrap();
        return Err(Error::Disconnected { u: 0, v });
    }
    Ok(tree)
}

/// The minimum spanning tree of a connected graph, in local vertex ids.
pub fn mst(g: &WeightedGraph) -> Result<EdgeSet> {
    Ok(mst_sequence(g)?.into_iter().collect())
}

/// Degree-one vertices of a spanning tree on `n` vertices.
pub fn mst_leaves(tree: &EdgeSet, n: usize) -> Result<BTreeSet<usize>> {
    if n < 2 {
        return Err(Error::NotATree(format!("needs at least 2 vertices, got {n}")));
    }
    if tree.len() != n - 1 {
        return Err(Error::NotATree(format!(
            "{} edges on {n} vertices",
            tree.len()
        )));
    }
    let mut dsu = DisjointSets::new(n);
    let mut degree = vec![0usize; n];
    for e in tree {
        if e.v() >= n {
            return Err(Error::VertexOutOfRange { vertex: e.v(), n });
        }
        if !dsu.union(e.u(), e.v()) {
            return Err(Error::NotATree(format!("edge {{{e}}} closes a cycle")));
        }
        degree[e.u()] += 1;
        degree[e.v()] += 1;
    }
    Ok((0..n).filter(|&x| degree[x] == 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightMode;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn edges(pairs: &[(usize, usize)]) -> EdgeSet {
        pairs.iter().map(|&(a, b)| Edge::new(a, b).unwrap()).collect()
    }

    fn random_complete(n: usize, seed: u64) -> WeightedGraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ws: Vec<u64> = (1..=(n * (n - 1) / 2) as u64).collect();
        ws.shuffle(&mut rng);
        let mut it = ws.into_iter();
        let triples: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .map(|(u, v)| (u, v, it.next().unwrap()))
            .collect();
        WeightedGraph::new(n, triples, WeightMode::Strict).unwrap()
    }

    #[test]
    fn dsu_basics() {
        let mut d = DisjointSets::new(5);
        assert!(d.union(0, 1));
        assert!(d.union(3, 4));
        assert!(!d.union(1, 0));
        assert!(d.same(0, 1));
        assert!(!d.same(1, 3));
        let root = d.find(4);
        assert_eq!(d.find(root), root);
    }

    #[test]
    fn triangle() {
        let g = WeightedGraph::new(3, [(0, 1, 1), (0, 2, 2), (1, 2, 3)], WeightMode::Strict).unwrap();
        assert_eq!(mst(&g).unwrap(), edges(&[(0, 1), (0, 2)]));
    }

    #[test]
    fn c4_fixture_takes_three_cheapest_cycle_edges() {
        // Kruskal by hand: 01(1), 12(2), 23(3) accepted; 03(4), 02(5), 13(6) close cycles.
        let g = WeightedGraph::new(
            4,
            [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4), (0, 2, 5), (1, 3, 6)],
            WeightMode::Strict,
        )
        .unwrap();
        assert_eq!(mst(&g).unwrap(), edges(&[(0, 1), (1, 2), (2, 3)]));
    }

    #[test]
    fn single_edge() {
        let g = WeightedGraph::new(2, [(0, 1, 9)], WeightMode::Strict).unwrap();
        assert_eq!(mst(&g).unwrap(), edges(&[(0, 1)]));
    }

    #[test]
    fn disconnected_input_names_unreachable_pair() {
        let g = WeightedGraph::new(4, [(0, 1, 1), (2, 3, 2)], WeightMode::Strict).unwrap();
        assert!(matches!(mst(&g), Err(Error::Disconnected { u: 0, v: 2 })));
    }

    #[test]
    fn leaves_of_path_and_star() {
        let path = edges(&[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(mst_leaves(&path, 4).unwrap(), BTreeSet::from([0, 3]));
        let star = edges(&[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(mst_leaves(&star, 5).unwrap(), BTreeSet::from([1, 2, 3, 4]));
    }

    #[test]
    fn leaves_reject_non_trees() {
        let cycle_plus_isolated = edges(&[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(
            mst_leaves(&cycle_plus_isolated, 4),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(mst_leaves(&edges(&[(0, 1)]), 3), Err(Error::NotATree(_))));
    }

    #[test]
    fn leaves_match_degree_count_on_random_tree() {
        let g = random_complete(8, 17);
        let t = mst(&g).unwrap();
        let mut deg = [0usize; 8];
        for e in &t {
            deg[e.u()] += 1;
            deg[e.v()] += 1;
        }
        let oracle: BTreeSet<usize> = (0..8).filter(|&x| deg[x] == 1).collect();
        assert_eq!(mst_leaves(&t, 8).unwrap(), oracle);
        assert!(oracle.len() >= 2);
    }

    proptest! {
        #[test]
        fn cheapest_edge_always_in_tree(n in 2usize..12, seed in any::<u64>()) {
            let g = random_complete(n, seed);
            let t = mst(&g).unwrap();
            prop_assert_eq!(t.len(), n - 1);
            prop_assert!(t.contains(&g.edges_by_weight()[0]));
        }

        #[test]
        fn insertion_order_is_irrelevant(n in 2usize..10, seed in any::<u64>(), shuffle in any::<u64>()) {
            let g = random_complete(n, seed);
            let mut triples: Vec<_> = g.edges().map(|(e, w)| (e.v(), e.u(), w.get())).collect();
            triples.shuffle(&mut ChaCha8Rng::seed_from_u64(shuffle));
            let h = WeightedGraph::new(n, triples, WeightMode::Strict).unwrap();
            prop_assert_eq!(mst(&g).unwrap(), mst(&h).unwrap());
        }

        #[test]
        fn deleting_a_leaf_drops_only_its_edge(n in 3usize..=10, seed in any::<u64>()) {
            let g = random_complete(n, seed);
            let t = mst(&g).unwrap();
            for v in mst_leaves(&t, n).unwrap() {
                let tree_edge = *t.iter().find(|e| e.contains(v)).unwrap();
                let h = g.induced_subgraph(&BTreeSet::from([v])).unwrap();
                let sub: EdgeSet = mst(&h).unwrap().into_iter().map(|e| h.relabel(e)).collect();
                let mut expected = t.clone();
                expected.remove(&tree_edge);
                prop_assert_eq!(sub, expected);
            }
        }
    }
}
