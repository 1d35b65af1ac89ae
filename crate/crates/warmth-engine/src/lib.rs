//! Exact warmth of small graphs, plus cheap warmth upper bounds.
//!
//! A family of vertex subsets is d-stable when every member is the
//! intersection of the neighborhoods of at most d members (repetition
//! allowed). A graph admits a d-stable family exactly when it fails to be
//! (d+2)-warm, so the least such d pins the warmth down to `d + 1`. The
//! engine computes that least d by a greatest-fixed-point sweep over the
//! subset lattice ([`exists_d_stable`]), and offers two shortcuts that only
//! ever bound warmth from above: singleton families built from vertex
//! representatives and the codegree criterion.
//!
//! Family members are restricted to nonempty proper subsets. Allowing the
//! empty set or the full vertex set would make `{∅}` or `{V}` stable for
//! free and collapse every warmth to 2, contradicting the complete-graph
//! values; the nonempty-proper reading is the one consistent with cold-map
//! semantics (some vertex must stay excluded).

mod cover;
mod gfp;

use std::collections::BTreeMap;

use graph_core::{Graph, VertexSet};
use thiserror::Error;

use cover::CoverSearch;

/// Cap for the exact lattice computation: 2^16 subset codes.
pub const MAX_EXACT_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WarmthError {
    #[error("graph on {n} vertices exceeds the exact-computation cap {MAX_EXACT_N}")]
    TooLargeForExact { n: usize },
    #[error("warmth is undefined for edgeless graphs")]
    NoEdges,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no stable family found up to d = {searched}; this contradicts w <= chi and indicates a bug")]
    NoStableFamily { searched: usize },
}

/// A set of nonempty proper vertex subsets, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetFamily {
    n: usize,
    members: Vec<VertexSet>,
}

impl SubsetFamily {
    pub fn new(
        n: usize,
        members: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self, WarmthError> {
        let full = VertexSet::full(n);
        let mut members: Vec<VertexSet> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            if m.is_empty() || m == full || !m.is_subset(full) {
                return Err(WarmthError::InvalidParameter(format!(
                    "family member {m:?} must be a nonempty proper subset of the {n} vertices"
                )));
            }
        }
        Ok(SubsetFamily { n, members })
    }

    /// The family of all singleton vertices.
    pub fn singletons(n: usize) -> Self {
        SubsetFamily {
            n,
            members: (0..n).map(VertexSet::singleton).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: VertexSet) -> bool {
        self.members.binary_search(&m).is_ok()
    }
}

/// One member's witness: at most d family members whose neighborhood
/// intersection reproduces the member exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessEntry {
    pub member: VertexSet,
    pub intersect_of: Vec<VertexSet>,
}

/// A replayable proof that a family is d-stable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityCertificate {
    pub d: usize,
    pub family: SubsetFamily,
    pub witnesses: Vec<WitnessEntry>,
}

impl StabilityCertificate {
    /// Replays every witness against the graph: each witness must use only
    /// family members, stay within arity d, and intersect to its member.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.witnesses.len() != self.family.len() {
            return false;
        }
        self.witnesses.iter().all(|w| {
            self.family.contains(w.member)
                && !w.intersect_of.is_empty()
                && w.intersect_of.len() <= self.d
                && w.intersect_of.iter().all(|&b| self.family.contains(b))
                && intersect_neighborhoods(g, &w.intersect_of) == Ok(w.member)
        })
    }

    /// Audit record: `{d, members: [hex], witnesses: {member: [members...]}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let hex = |s: VertexSet| format!("{:#x}", s.bits());
        let witnesses: BTreeMap<String, Vec<String>> = self
            .witnesses
            .iter()
            .map(|w| {
                (
                    hex(w.member),
                    w.intersect_of.iter().map(|&b| hex(b)).collect(),
                )
            })
            .collect();
        serde_json::json!({
            "d": self.d,
            "members": self.family.members().iter().map(|&m| hex(m)).collect::<Vec<_>>(),
            "witnesses": witnesses,
        })
    }
}

/// Exact warmth with the certificate for the minimal stable-family arity.
#[derive(Debug, Clone)]
pub struct WarmthResult {
    pub warmth: usize,
    pub d_star: usize,
    pub certificate: StabilityCertificate,
}

/// `⋂_j N(sets[j])`; the list must be nonempty.
pub fn intersect_neighborhoods(g: &Graph, sets: &[VertexSet]) -> Result<VertexSet, WarmthError> {
    if sets.is_empty() {
        return Err(WarmthError::InvalidParameter(
            "intersection over an empty list of sets".into(),
        ));
    }
    Ok(sets
        .iter()
        .map(|&s| g.neighborhood_set(s))
        .fold(g.vertices(), VertexSet::intersection))
}

/// Checks the d-stability of an explicit family and returns a replayable
/// certificate on success. Works for any graph size (no lattice sweep).
///
/// Witness tuples are the first found when candidates are scanned in
/// ascending member order, so repeated runs emit identical certificates.
pub fn is_d_stable(g: &Graph, family: &SubsetFamily, d: usize) -> Option<StabilityCertificate> {
    if d < 1 || family.is_empty() {
        return None;
    }
    let full = g.vertices();
    let nvals: Vec<VertexSet> = family
        .members()
        .iter()
        .map(|&m| g.neighborhood_set(m))
        .collect();
    let mut witnesses = Vec::with_capacity(family.len());
    for &a in family.members() {
        let universe = full.difference(a);
        let mut idx = Vec::new();
        let mut covers = Vec::new();
        for (i, &nv) in nvals.iter().enumerate() {
            if a.is_subset(nv) {
                idx.push(i);
                covers.push(universe.difference(nv).bits());
            }
        }
        let chosen = CoverSearch::new(covers).find(universe.bits(), d)?;
        witnesses.push(WitnessEntry {
            member: a,
            intersect_of: chosen
                .into_iter()
                .map(|i| family.members()[idx[i]])
                .collect(),
        });
    }
    Some(StabilityCertificate {
        d,
        family: family.clone(),
        witnesses,
    })
}

/// Decides whether any d-stable family exists (n <= 16) and, if so, returns
/// a certificate for the unique maximal one.
pub fn exists_d_stable(g: &Graph, d: usize) -> Result<Option<StabilityCertificate>, WarmthError> {
    if g.n() > MAX_EXACT_N {
        return Err(WarmthError::TooLargeForExact { n: g.n() });
    }
    if d < 1 {
        return Err(WarmthError::InvalidParameter("d must be >= 1".into()));
    }
    Ok(gfp::maximal_stable_family(g, d))
}

/// Exact warmth: the least d admitting a d-stable family, plus one.
///
/// Padding a witness by repetition shows d-stability is monotone in d, so a
/// linear search from d = 1 is exact. Any graph with an edge satisfies
/// d* <= chi - 1 <= n - 1; the loop still runs to d = n and reports a
/// diagnostic error beyond that rather than trusting the theory blindly.
pub fn warmth_exact(g: &Graph) -> Result<WarmthResult, WarmthError> {
    if g.n() > MAX_EXACT_N {
        return Err(WarmthError::TooLargeForExact { n: g.n() });
    }
    if g.edge_count() == 0 {
        return Err(WarmthError::NoEdges);
    }
    for d in 1..=g.n() {
        if let Some(certificate) = gfp::maximal_stable_family(g, d) {
            return Ok(WarmthResult {
                warmth: d + 1,
                d_star: d,
                certificate,
            });
        }
    }
    Err(WarmthError::NoStableFamily { searched: g.n() })
}

/// Least s such that every vertex v has s neighbors whose neighborhoods
/// intersect exactly in {v}; `None` when some vertex has no representative
/// of any size. When defined, the singleton family is s-stable, hence
/// warmth <= s + 1.
pub fn singleton_min_stability(g: &Graph) -> Option<usize> {
    if g.n() < 2 {
        return None;
    }
    let full = g.vertices();
    let mut s_min = 0usize;
    for v in 0..g.n() {
        let target = VertexSet::singleton(v);
        let universe = full.difference(target);
        let neighbors: Vec<usize> = g.neighbors(v).iter().collect();
        let covers: Vec<u64> = neighbors
            .iter()
            .map(|&u| universe.difference(g.neighbors(u)).bits())
            .collect();
        let search = CoverSearch::new(covers);
        let s_v = (1..=neighbors.len()).find(|&s| search.find(universe.bits(), s).is_some())?;
        s_min = s_min.max(s_v);
    }
    Some(s_min)
}

/// Codegree criterion: if every pair of vertices shares fewer than k common
/// neighbors and every vertex has at least k neighbors, then picking any k
/// neighbors of v isolates {v}, the singletons form a k-stable family, and
/// warmth <= k + 1. Returns that bound for the least valid k (one above the
/// maximum codegree), or `None` when the minimum degree is too small. Using
/// the minimum degree extends the regular-graph statement: the argument only
/// needs k neighbors to exist at each vertex.
pub fn codegree_warmth_ub(g: &Graph) -> Option<usize> {
    if g.n() < 2 {
        return None;
    }
    let stats = g.degree_stats();
    let k = stats.max_codegree + 1;
    (k <= stats.min_degree).then_some(k + 1)
}
