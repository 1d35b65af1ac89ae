//! Greatest-fixed-point computation of the maximal d-stable family.
//!
//! Start from every nonempty proper subset and repeatedly delete members not
//! expressible as an intersection of at most d neighborhoods of current
//! members. The deflationary operator is monotone, so the surviving family
//! is the unique maximal d-stable family and is independent of deletion
//! order. The subset lattice is enumerated explicitly, hence the n <= 16 cap.
//!
//! Representability of a member A depends only on which neighborhood VALUES
//! are still realized by some live member, so witnesses are tracked as
//! neighborhood values and a member is re-examined only when one of its
//! witness values loses its last live representative.

use std::collections::BTreeSet;

use graph_core::{Graph, VertexSet};

use crate::cover::CoverSearch;
use crate::{StabilityCertificate, SubsetFamily, WitnessEntry, MAX_EXACT_N};

pub(crate) fn maximal_stable_family(g: &Graph, d: usize) -> Option<StabilityCertificate> {
    debug_assert!(g.n() <= MAX_EXACT_N && d >= 1);
    let n = g.n();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    if full <= 1 {
        return None; // n = 1: no nonempty proper subsets exist
    }
    let size = full as usize + 1;

    // nb[m] = N(m) over the whole subset lattice, built incrementally.
    let mut nb = vec![0u32; size];
    for m in 1..size {
        let low = m.trailing_zeros() as usize;
        nb[m] = nb[m & (m - 1)] | g.neighbors(low).bits() as u32;
    }

    let mut state = Gfp {
        full,
        d,
        nb,
        alive: vec![false; size],
        alive_count: 0,
        nval_count: vec![0u32; size],
        witness: vec![Vec::new(); size],
        dependents: vec![Vec::new(); size],
        worklist: BTreeSet::new(),
    };
    for m in 1..full as usize {
        state.alive[m] = true;
        state.alive_count += 1;
        state.nval_count[state.nb[m] as usize] += 1;
    }

    state.initial_pass();
    state.drain_worklist();

    if state.alive_count == 0 {
        return None;
    }
    Some(state.certify(g))
}

struct Gfp {
    full: u32,
    d: usize,
    nb: Vec<u32>,
    alive: Vec<bool>,
    alive_count: usize,
    nval_count: Vec<u32>,
    /// Current witness of each live member, as neighborhood values.
    witness: Vec<Vec<u32>>,
    /// Members whose stored witness uses this neighborhood value. Entries can
    /// go stale after a re-check; stale wakeups are harmless re-examinations.
    dependents: Vec<Vec<u32>>,
    worklist: BTreeSet<u32>,
}

impl Gfp {
    fn initial_pass(&mut self) {
        if self.d == 1 {
            // A is an intersection of one neighborhood iff A itself is a
            // realized value, so the lattice scan is a direct lookup.
            for a in 1..self.full {
                if self.nval_count[a as usize] > 0 {
                    self.store_witness(a, vec![a]);
                } else {
                    self.delete(a);
                }
            }
            return;
        }

        // Superset AND-aggregate over the initial value set: meet[a] is the
        // intersection of every realized neighborhood value containing a.
        // Deletions during the scan only shrink the value set, which makes
        // this snapshot a sound pre-filter (see re-check for the live path).
        let size = self.full as usize + 1;
        let mut meet = vec![self.full; size];
        for (val, &cnt) in self.nval_count.iter().enumerate() {
            if cnt > 0 {
                meet[val] &= val as u32;
            }
        }
        let bits = self.full.count_ones();
        for b in 0..bits {
            let bit = 1usize << b;
            for a in 0..size {
                if a & bit == 0 {
                    meet[a] &= meet[a | bit];
                }
            }
        }

        for a in 1..self.full {
            if meet[a as usize] != a {
                self.delete(a);
            } else if let Some(w) = self.search_witness(a) {
                self.store_witness(a, w);
            } else {
                self.delete(a);
            }
        }
    }

    fn drain_worklist(&mut self) {
        while let Some(a) = self.worklist.pop_first() {
            if !self.alive[a as usize] {
                continue;
            }
            let found = if self.d == 1 {
                (self.nval_count[a as usize] > 0).then(|| vec![a])
            } else {
                self.search_witness(a)
            };
            match found {
                Some(w) => self.store_witness(a, w),
                None => self.delete(a),
            }
        }
    }

    /// Live search: collect realized values containing `a` (ascending) and
    /// cover the complement of `a` with at most d of them.
    fn search_witness(&self, a: u32) -> Option<Vec<u32>> {
        let universe = self.full & !a;
        let rest = universe;
        let mut candidates = Vec::new();
        // enumerate supersets of a: a | (subset of rest), descending
        let mut s = rest;
        loop {
            let val = a | s;
            if self.nval_count[val as usize] > 0 {
                candidates.push(val);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
        candidates.sort_unstable();
        let covers = candidates
            .iter()
            .map(|&v| (universe & !v) as u64)
            .collect();
        let chosen = CoverSearch::new(covers).find(universe as u64, self.d)?;
        Some(chosen.into_iter().map(|i| candidates[i]).collect())
    }

    fn store_witness(&mut self, a: u32, values: Vec<u32>) {
        for &v in &values {
            self.dependents[v as usize].push(a);
        }
        self.witness[a as usize] = values;
    }

    fn delete(&mut self, a: u32) {
        debug_assert!(self.alive[a as usize]);
        self.alive[a as usize] = false;
        self.alive_count -= 1;
        self.witness[a as usize].clear();
        let val = self.nb[a as usize] as usize;
        self.nval_count[val] -= 1;
        if self.nval_count[val] == 0 {
            let deps = std::mem::take(&mut self.dependents[val]);
            for dep in deps {
                if self.alive[dep as usize] {
                    self.worklist.insert(dep);
                }
            }
        }
    }

    /// Rebuilds member-level witnesses against the final family, so the
    /// certificate depends only on (graph, d), not on deletion order.
    fn certify(&self, g: &Graph) -> StabilityCertificate {
        let size = self.full as usize + 1;
        let mut repr = vec![u32::MAX; size]; // least live member per value
        let mut members = Vec::with_capacity(self.alive_count);
        for m in 1..self.full {
            if self.alive[m as usize] {
                members.push(VertexSet::from_bits(m as u64));
                let val = self.nb[m as usize] as usize;
                if repr[val] == u32::MAX {
                    repr[val] = m;
                }
            }
        }
        let family = SubsetFamily::new(g.n(), members).expect("live members are valid");

        let mut witnesses = Vec::with_capacity(self.alive_count);
        for m in 1..self.full {
            if !self.alive[m as usize] {
                continue;
            }
            let universe = self.full & !m;
            let rest = universe;
            let mut reps = Vec::new();
            let mut s = rest;
            loop {
                let val = m | s;
                if self.nval_count[val as usize] > 0 {
                    reps.push((repr[val as usize], val));
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & rest;
            }
            reps.sort_unstable();
            let covers = reps.iter().map(|&(_, v)| (universe & !v) as u64).collect();
            let chosen = CoverSearch::new(covers)
                .find(universe as u64, self.d)
                .expect("fixed-point member must be representable");
            witnesses.push(WitnessEntry {
                member: VertexSet::from_bits(m as u64),
                intersect_of: chosen
                    .into_iter()
                    .map(|i| VertexSet::from_bits(reps[i].0 as u64))
                    .collect(),
            });
        }
        StabilityCertificate {
            d: self.d,
            family,
            witnesses,
        }
    }
}
