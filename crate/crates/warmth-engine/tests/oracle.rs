//! Independent oracles for the fixed-point engine.
//!
//! For n <= 4 every family over the 2^n - 2 candidate members is enumerated
//! and tested for d-stability straight from the definition, with its own
//! intersection arithmetic. That pins down both the existence answer and the
//! maximality claim (the engine's family must equal the union of all stable
//! families). For d = 1 a larger oracle applies: any 1-stable family consists
//! of realized neighborhood values only, so enumerating subsets of that pool
//! is exhaustive.

use graph_core::generators::{complete, cycle, path, petersen};
use graph_core::{Graph, VertexSet};
use random_models::{gnp, GnpParams, Seed};
use warmth_engine::{
    codegree_warmth_ub, exists_d_stable, is_d_stable, singleton_min_stability, warmth_exact,
    SubsetFamily,
};

fn nval(g: &Graph, m: u64) -> u64 {
    let mut nv = 0u64;
    for v in VertexSet::from_bits(m).iter() {
        nv |= g.neighbors(v).bits();
    }
    nv
}

/// All labeled graphs on n vertices.
fn all_graphs(n: usize) -> Vec<Graph> {
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0..(1u32 << all_pairs.len()))
        .map(|bits| {
            let pairs: Vec<_> = all_pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::from_pairs(n, &pairs).unwrap()
        })
        .collect()
}

#[test]
fn exhaustive_family_oracle_n_up_to_4() {
    for n in 2..=4usize {
        let candidates: Vec<u64> = (1..((1u64 << n) - 1)).collect();
        let k = candidates.len();
        for g in all_graphs(n) {
            let nvals: Vec<u64> = candidates.iter().map(|&m| nval(&g, m)).collect();
            for d in 1..=3usize {
                // witness picks: index sets of size <= d whose neighborhood
                // meet equals the target candidate
                let mut picks_for: Vec<Vec<u32>> = vec![Vec::new(); k];
                for pick in 1u32..(1 << k) {
                    if pick.count_ones() as usize > d {
                        continue;
                    }
                    let mut meet = u64::MAX;
                    let mut bits = pick;
                    while bits != 0 {
                        let i = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        meet &= nvals[i];
                    }
                    if let Ok(ai) = candidates.binary_search(&meet) {
                        picks_for[ai].push(pick);
                    }
                }

                // definition-level stability of every possible family
                let mut any_stable = false;
                let mut union_of_stable = 0u32;
                for fam in 1u32..(1 << k) {
                    let stable = (0..k).all(|ai| {
                        fam >> ai & 1 == 0
                            || picks_for[ai].iter().any(|&p| p & !fam == 0)
                    });
                    if stable {
                        any_stable = true;
                        union_of_stable |= fam;
                    }
                }

                let engine = exists_d_stable(&g, d).unwrap();
                assert_eq!(
                    engine.is_some(),
                    any_stable,
                    "existence mismatch on {g:?} at d = {d}"
                );
                if let Some(cert) = engine {
                    assert!(cert.verify(&g), "bad certificate on {g:?} at d = {d}");
                    let engine_bits: u32 = (0..k)
                        .filter(|&ai| cert.family.contains(VertexSet::from_bits(candidates[ai])))
                        .map(|ai| 1u32 << ai)
                        .sum();
                    assert_eq!(
                        engine_bits, union_of_stable,
                        "maximal family mismatch on {g:?} at d = {d}"
                    );
                }
            }
        }
    }
}

/// Every member of a 1-stable family is N(B) for a member B, so members come
/// from the pool of realized proper neighborhood values. Enumerate subsets of
/// that pool and look for one closed under "equals some member's value".
fn brute_exists_1_stable(g: &Graph) -> bool {
    let full = g.vertices().bits();
    let mut pool: Vec<u64> = (1..full)
        .map(|m| nval(g, m))
        .filter(|&nv| nv != 0 && nv != full)
        .collect();
    pool.sort_unstable();
    pool.dedup();
    assert!(pool.len() <= 20, "pool too large for this oracle");
    (1u32..(1 << pool.len())).any(|bits| {
        let members: Vec<u64> = pool
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &m)| m)
            .collect();
        members
            .iter()
            .all(|&a| members.iter().any(|&b| nval(g, b) == a))
    })
}

#[test]
fn one_stable_oracle_on_small_named_graphs() {
    for (g, expect) in [
        (cycle(4).unwrap(), true),
        (cycle(5).unwrap(), false),
        (cycle(6).unwrap(), true),
        (complete(4).unwrap(), false),
        (path(5).unwrap(), true),
        (complete(2).unwrap(), true),
    ] {
        assert_eq!(brute_exists_1_stable(&g), expect, "oracle on {g:?}");
        assert_eq!(
            exists_d_stable(&g, 1).unwrap().is_some(),
            expect,
            "engine on {g:?}"
        );
    }
}

#[test]
fn stability_is_monotone_in_d() {
    let seed = Seed::new(97);
    for trial in 0..24u64 {
        let n = 5 + (trial % 6) as usize; // 5..=10
        let g = gnp(&GnpParams::direct(n, 0.4), &seed, trial).unwrap();
        for d in 1..=3 {
            if exists_d_stable(&g, d).unwrap().is_some() {
                assert!(
                    exists_d_stable(&g, d + 1).unwrap().is_some(),
                    "monotonicity broke on {g:?} at d = {d}"
                );
            }
        }
    }
}

#[test]
fn certificates_replay_on_random_corpus() {
    let seed = Seed::new(1234);
    for trial in 0..20u64 {
        let n = 4 + (trial % 7) as usize;
        let g = gnp(&GnpParams::direct(n, 0.5), &seed, trial).unwrap();
        if g.edge_count() == 0 {
            continue;
        }
        let result = warmth_exact(&g).unwrap();
        assert!(result.certificate.verify(&g));
        assert_eq!(result.warmth, result.d_star + 1);
        // the engine family passes the public checker as well
        assert!(
            is_d_stable(&g, &result.certificate.family, result.d_star).is_some(),
            "public checker rejects the engine family on {g:?}"
        );
    }
}

#[test]
fn gfp_contains_accepted_singleton_families() {
    let mut graphs = vec![
        complete(5).unwrap(),
        complete(6).unwrap(),
        cycle(5).unwrap(),
        cycle(7).unwrap(),
        petersen(),
    ];
    let seed = Seed::new(55);
    for trial in 0..6u64 {
        graphs.push(random_models::random_regular(10, 3, &seed, trial).unwrap());
    }
    for g in graphs {
        let Some(s) = singleton_min_stability(&g) else {
            continue;
        };
        let singles = SubsetFamily::singletons(g.n());
        let accepted = is_d_stable(&g, &singles, s).expect("s_min makes singletons stable");
        assert!(accepted.verify(&g));
        let maximal = exists_d_stable(&g, s)
            .unwrap()
            .expect("a stable family exists at s_min");
        for v in 0..g.n() {
            assert!(
                maximal.family.contains(VertexSet::singleton(v)),
                "maximal family on {g:?} at d = {s} misses a singleton"
            );
        }
    }
}

#[test]
fn warmth_below_cheap_bounds() {
    let seed = Seed::new(7777);
    let mut graphs: Vec<Graph> = vec![
        complete(5).unwrap(),
        cycle(5).unwrap(),
        cycle(8).unwrap(),
        petersen(),
        path(6).unwrap(),
    ];
    for trial in 0..40u64 {
        let n = 4 + (trial % 5) as usize; // 4..=8
        graphs.push(gnp(&GnpParams::direct(n, 0.45), &seed, trial).unwrap());
    }
    for g in graphs {
        if g.edge_count() == 0 {
            continue;
        }
        let w = warmth_exact(&g).unwrap().warmth;
        if let Some(s) = singleton_min_stability(&g) {
            assert!(w <= s + 1, "warmth {w} above singleton bound on {g:?}");
        }
        if let Some(ub) = codegree_warmth_ub(&g) {
            assert!(w <= ub, "warmth {w} above codegree bound on {g:?}");
        }
    }
}
