//! Minimum-cover search over bitmask cover sets.
//!
//! Shared by the stability checks: "is A an intersection of at most d
//! neighborhoods" reduces to covering the complement of A, where candidate
//! B (with N(B) ⊇ A) covers exactly the vertices its neighborhood excludes.

/// Depth-first cover search over a fixed candidate order.
///
/// `find` returns the first cover (of size <= limit) encountered when
/// candidates are tried in ascending index order and candidates adding no
/// new coverage are skipped, so results are deterministic for a fixed
/// candidate order.
pub(crate) struct CoverSearch {
    covers: Vec<u64>,
    suffix_union: Vec<u64>,
    suffix_max_pop: Vec<u32>,
}

impl CoverSearch {
    pub(crate) fn new(covers: Vec<u64>) -> Self {
        let k = covers.len();
        let mut suffix_union = vec![0u64; k + 1];
        let mut suffix_max_pop = vec![0u32; k + 1];
        for i in (0..k).rev() {
            suffix_union[i] = suffix_union[i + 1] | covers[i];
            suffix_max_pop[i] = suffix_max_pop[i + 1].max(covers[i].count_ones());
        }
        CoverSearch {
            covers,
            suffix_union,
            suffix_max_pop,
        }
    }

    pub(crate) fn find(&self, universe: u64, limit: usize) -> Option<Vec<usize>> {
        let mut chosen = Vec::new();
        if self.dfs(0, universe, limit, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn dfs(&self, start: usize, uncovered: u64, remaining: usize, chosen: &mut Vec<usize>) -> bool {
        if uncovered == 0 {
            return true;
        }
        if remaining == 0 {
            return false;
        }
        for i in start..self.covers.len() {
            if uncovered & !self.suffix_union[i] != 0 {
                return false; // later candidates can never reach these bits
            }
            if (remaining as u32) * self.suffix_max_pop[i] < uncovered.count_ones() {
                return false;
            }
            if self.covers[i] & uncovered == 0 {
                continue;
            }
            chosen.push(i);
            if self.dfs(i + 1, uncovered & !self.covers[i], remaining - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_first_workable_tuple() {
        // universe {0,1,2}; candidate 0 covers {0}, 1 covers {1,2}, 2 covers all
        let search = CoverSearch::new(vec![0b001, 0b110, 0b111]);
        assert_eq!(search.find(0b111, 2), Some(vec![0, 1]));
        assert_eq!(search.find(0b111, 1), Some(vec![2]));
        let search = CoverSearch::new(vec![0b001, 0b010]);
        assert_eq!(search.find(0b111, 2), None);
    }

    #[test]
    fn singleton_covers_need_many_sets() {
        // 30 candidates each covering one distinct bit: limits below 30 fail fast
        let covers: Vec<u64> = (0..30).map(|i| 1u64 << i).collect();
        let search = CoverSearch::new(covers);
        let universe = (1u64 << 30) - 1;
        assert!(search.find(universe, 29).is_none());
        assert_eq!(search.find(universe, 30).unwrap().len(), 30);
    }
}
