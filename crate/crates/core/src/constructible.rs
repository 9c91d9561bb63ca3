//! k-constructible graphs.
//!
//! A sequence of edges is a k-construction order when every edge, at the
//! moment it is added, joins two vertices with at most `k - 1` internally
//! vertex-disjoint paths between them in the edges added before it.
//!
//! Order files are plain text: a header `n k`, then one `u v` line per edge
//! in sequence order. Lines starting with `#` are comments.

use std::collections::BTreeSet;

use crate::connectivity::FlowScratch;
use crate::error::{Error, ParseErrorKind, Result};
use crate::graph::{Edge, SimpleGraph, WeightMode, WeightedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionOrder {
    k: usize,
    host_n: usize,
    sequence: Vec<Edge>,
}

impl ConstructionOrder {
    /// Checks well-formedness only (range, no repeats, `k >= 1`).
    pub fn new(host_n: usize, k: usize, sequence: Vec<Edge>) -> Result<Self> {
        if k == 0 {
            return Err(Error::KOutOfRange {
                k,
                min: 1,
                max: host_n.saturating_sub(1),
            });
        }
        let mut seen = BTreeSet::new();
        for &e in &sequence {
            if e.v() >= host_n {
                return Err(Error::VertexOutOfRange {
                    vertex: e.v(),
                    n: host_n,
                });
            }
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        Ok(ConstructionOrder {
            k,
            host_n,
            sequence,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn sequence(&self) -> &[Edge] {
        &self.sequence
    }

    /// Same edges, checked against a different `k`.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        Self::new(self.host_n, k, self.sequence.clone())
    }

    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.host_n, &self.sequence).expect("well-formed order")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            kind: ParseErrorKind::MissingHeader,
        })?;
        let [n, k] = parse_pair(header, hline)?;
        let mut seen = BTreeSet::new();
        let mut sequence = Vec::new();
        for (line, body) in lines {
            let [a, b] = parse_pair(body, line)?;
            let e = Edge::new(a, b).map_err(|_| Error::Parse {
                line,
                kind: ParseErrorKind::SelfLoop(a),
            })?;
            if e.v() >= n {
                return Err(Error::Parse {
                    line,
                    kind: ParseErrorKind::VertexOutOfRange { vertex: e.v(), n },
                });
            }
            if !seen.insert(e) {
                return Err(Error::Parse {
                    line,
                    kind: ParseErrorKind::DuplicateEdge(e),
                });
            }
            sequence.push(e);
        }
        ConstructionOrder::new(n, k, sequence).map_err(|e| match e {
            Error::KOutOfRange { .. } => Error::Parse {
                line: hline,
                kind: ParseErrorKind::Malformed("k must be at least 1".into()),
            },
            other => other,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.host_n, self.k);
        for e in &self.sequence {
            out.push_str(&format!("{e}\n"));
        }
        out
    }
}

fn parse_pair(body: &str, line: usize) -> Result<[usize; 2]> {
    let toks: Vec<&str> = body.split_whitespace().collect();
    let bad = |msg: String| Error::Parse {
        line,
        kind: ParseErrorKind::Malformed(msg),
    };
    if toks.len() != 2 {
        return Err(bad(format!("expected 2 fields, found {}", toks.len())));
    }
    let a = toks[0]
        .parse()
        .map_err(|_| bad(format!("not a non-negative integer: {:?}", toks[0])))?;
    let b = toks[1]
        .parse()
        .map_err(|_| bad(format!("not a non-negative integer: {:?}", toks[1])))?;
    Ok([a, b])
}

/// The first edge that breaks a construction order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Zero-based position in the sequence.
    pub index: usize,
    pub edge: Edge,
    /// Connectivity of the endpoints in the prefix, capped at `k`.
    pub connectivity: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderVerdict {
    pub valid: bool,
    pub first_violation: Option<Violation>,
}

impl OrderVerdict {
    pub fn into_result(self, k: usize) -> Result<()> {
        match self.first_violation {
            None => Ok(()),
            Some(v) => Err(Error::InvalidOrder {
                k,
                index: v.index,
                edge: v.edge,
                connectivity: v.connectivity,
            }),
        }
    }
}

/// Replays the order and reports the first edge whose endpoints are already
/// `k`-connected in the prefix.
pub fn check_order(order: &ConstructionOrder) -> OrderVerdict {
    let k = order.k;
    let mut prefix = SimpleGraph::empty(order.host_n);
    let mut flow = FlowScratch::new();
    for (index, &edge) in order.sequence.iter().enumerate() {
        let (u, v) = edge.endpoints();
        let connectivity = flow
            .local_connectivity(&prefix, u, v, k)
            .expect("well-formed order");
        if connectivity >= k {
            return OrderVerdict {
                valid: false,
                first_violation: Some(Violation {
                    index,
                    edge,
                    connectivity,
                }),
            };
        }
        prefix.add_edge(edge).expect("well-formed order");
    }
    OrderVerdict {
        valid: true,
        first_violation: None,
    }
}

/// Grows a valid order until no anti-edge fits anywhere in it.
///
/// Anti-edges are taken in lexicographic order. Each is appended if its
/// endpoints are at most `(k-1)`-connected in the current graph; otherwise
/// it is inserted at the earliest position that keeps the whole order
/// valid, if there is one. A single pass is enough: inserting more edges
/// only enlarges every prefix, so a pair that fits nowhere now never will.
pub fn extend_maximal(base: &ConstructionOrder) -> Result<(SimpleGraph, ConstructionOrder)> {
    check_order(base).into_result(base.k)?;
    let k = base.k;
    let n = base.host_n;
    let mut g = base.graph();
    let mut sequence = base.sequence.clone();
    let mut flow = FlowScratch::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let e = Edge::new(u, v)?;
            let slot = if flow.local_connectivity(&g, u, v, k)? < k {
                Some(sequence.len())
            } else {
                (0..sequence.len()).find(|&p| fits_at(&sequence, n, k, e, p, &mut flow))
            };
            if let Some(p) = slot {
                g.add_edge(e)?;
                sequence.insert(p, e);
            }
        }
    }
    let order = ConstructionOrder::new(n, k, sequence)?;
    Ok((g, order))
}

/// Whether inserting `e` before position `p` of a valid order keeps it valid.
fn fits_at(
    sequence: &[Edge],
    n: usize,
    k: usize,
    e: Edge,
    p: usize,
    flow: &mut FlowScratch,
) -> bool {
    let mut prefix = SimpleGraph::from_edges(n, &sequence[..p]).expect("valid order");
    if flow.local_connectivity(&prefix, e.u(), e.v(), k).unwrap() >= k {
        return false;
    }
    prefix.add_edge(e).unwrap();
    for &f in &sequence[p..] {
        if flow.local_connectivity(&prefix, f.u(), f.v(), k).unwrap() >= k {
            return false;
        }
        prefix.add_edge(f).unwrap();
    }
    true
}

/// Weights that make every order edge part of `M_k`: the i-th edge gets
/// weight `i` (1-based), and the remaining pairs follow in lexicographic
/// order.
pub fn embed_weights(order: &ConstructionOrder) -> Result<WeightedGraph> {
    check_order(order).into_result(order.k)?;
    let g = order.graph();
    let triples: Vec<(usize, usize, u64)> = order
        .sequence
        .iter()
        .copied()
        .chain(g.anti_edges())
        .zip(1u64..)
        .map(|(e, w)| (e.u(), e.v(), w))
        .collect();
    WeightedGraph::new(order.host_n, triples, WeightMode::Strict)
}

/// Whether `g` is k-connected (every pair joined by `k` disjoint paths) and
/// edge-minimal with that property.
///
/// Deleting `{u, v}` can only lower the connectivity of pairs it separates,
/// and any such drop is witnessed by `u, v` themselves, so only the
/// endpoints of each deleted edge are re-checked.
pub fn is_k_minimal(g: &SimpleGraph, k: usize) -> bool {
    if k == 0 || g.n() < 2 {
        return false;
    }
    let mut flow = FlowScratch::new();
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            if flow.local_connectivity(g, u, v, k).unwrap() < k {
                return false;
            }
        }
    }
    let mut h = g.clone();
    for e in g.edges() {
        h.remove_edge(e);
        let still = flow.local_connectivity(&h, e.u(), e.v(), k).unwrap() >= k;
        h.add_edge(e).unwrap();
        if still {
            return false;
        }
    }
    true
}
