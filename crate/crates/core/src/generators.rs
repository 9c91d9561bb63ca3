//! Deterministic instance generators.
//!
//! All randomness comes from [`ChaCha8Rng`] seeded with [`Seed`], which is
//! portable across platforms, so a seed and a parameter set always give
//! bit-identical graphs.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{WeightMode, WeightedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Complete graph whose weights are a seeded permutation of `1..=n(n-1)/2`.
pub fn gen_random_complete(n: usize, seed: Seed) -> Result<WeightedGraph> {
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let mut weights: Vec<u64> = (1..=(n * (n - 1) / 2) as u64).collect();
    weights.shuffle(&mut seed.rng());
    let triples = all_pairs(n).zip(weights).map(|((u, v), w)| (u, v, w));
    WeightedGraph::new(n, triples, WeightMode::Strict)
}

/// Complete graph attaining `|M_k| = nk - k(k+1)/2`.
///
/// With `V' = {0, .., k-1}`, edges inside `V'` get the smallest weights,
/// edges with one endpoint in `V'` the next block, and all remaining edges
/// the largest. Each block is a run of consecutive integers shuffled by the
/// seed.
pub fn gen_tight(n: usize, k: usize, seed: Seed) -> Result<WeightedGraph> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::KOutOfRange {
            k,
            min: 1,
            max: n.saturating_sub(1),
        });
    }
    let mut classes: [Vec<(usize, usize)>; 3] = Default::default();
    for (u, v) in all_pairs(n) {
        let inside = usize::from(u < k) + usize::from(v < k);
        classes[2 - inside].push((u, v));
    }
    let mut rng = seed.rng();
    let mut next = 1u64;
    let mut triples = Vec::with_capacity(n * (n - 1) / 2);
    for class in &classes {
        let mut block: Vec<u64> = (next..next + class.len() as u64).collect();
        next += class.len() as u64;
        block.shuffle(&mut rng);
        triples.extend(class.iter().zip(block).map(|(&(u, v), w)| (u, v, w)));
    }
    WeightedGraph::new(n, triples, WeightMode::Strict)
}

/// K4 whose 4-cycle 0-1-2-3-0 carries weights 1..4 and whose diagonals
/// 0-2 and 1-3 carry 5 and 6. Its M_2 is exactly the cycle.
pub fn fixture_c4() -> WeightedGraph {
    WeightedGraph::new(
        4,
        [(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 3, 4), (0, 2, 5), (1, 3, 6)],
        WeightMode::Strict,
    )
    .expect("fixture is valid")
}
