//! Deterministic graph constructions used by tests, corpora, and the CLI.

use crate::{Graph, GraphError, MAX_VERTICES};

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    Graph::from_pairs(n, &pairs)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let pairs: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_pairs(n, &pairs)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_pairs(n, &pairs)
}

/// Complete bipartite graph with sides `{0..a}` and `{a..a+b}`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    let mut pairs = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in a..(a + b) {
            pairs.push((u, v));
        }
    }
    Graph::from_pairs(a + b, &pairs)
}

/// Circulant graph: vertex `v` is joined to `v ± s` (mod n) for each step.
pub fn circulant(n: usize, steps: &[usize]) -> Result<Graph, GraphError> {
    let mut pairs = Vec::new();
    for &s in steps {
        if s == 0 || s > n / 2 {
            return Err(GraphError::InvalidParameter(format!(
                "circulant step {s} out of range for n = {n}"
            )));
        }
        for v in 0..n {
            let w = (v + s) % n;
            let (a, b) = (v.min(w), v.max(w));
            if !pairs.contains(&(a, b)) {
                pairs.push((a, b));
            }
        }
    }
    Graph::from_pairs(n, &pairs)
}

/// Kneser graph: vertices are the k-subsets of an n-set in colex order
/// (equivalently, increasing subset-bitmask order), adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph, GraphError> {
    if k < 1 || n <= 2 * k {
        return Err(GraphError::InvalidParameter(format!(
            "kneser requires n > 2k >= 2, got n = {n}, k = {k}"
        )));
    }
    let vertex_count = binomial(n, k);
    if vertex_count > MAX_VERTICES {
        return Err(GraphError::TooLarge {
            given: vertex_count,
            limit: MAX_VERTICES,
        });
    }
    let subsets = k_subsets_colex(n, k);
    let mut pairs = Vec::new();
    for i in 0..subsets.len() {
        for j in (i + 1)..subsets.len() {
            if subsets[i] & subsets[j] == 0 {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_pairs(vertex_count, &pairs)
}

/// The Petersen graph, as the Kneser graph K(5, 2).
pub fn petersen() -> Graph {
    kneser(5, 2).expect("K(5,2) is within limits")
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut num = 1usize;
    for i in 0..k {
        num = num * (n - i) / (i + 1);
    }
    num
}

/// All k-subsets of `{0..n}` as bitmasks, ascending (= colex order on sets).
fn k_subsets_colex(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut mask: u64 = (1 << k) - 1;
    let limit: u64 = 1 << n;
    while mask < limit {
        out.push(mask);
        // Gosper's hack: next bitmask with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    out
}
