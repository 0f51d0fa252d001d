//! The interval poset of `(t, t + 1, ..., t + p)`-cores.
//!
//! Every β-set of such a core lies in the union of the intervals
//! `S_i = [(i - 1)(t + p) + 1, i t - 1]` for `1 <= i <= (t + p - 2) / p`.
//! Ordering that union by `y ⪯ x` iff `x - y` is a nonnegative combination of
//! `t, ..., t + p`, the cores correspond exactly to the down-sets.

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::Count;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalFamily {
    t: usize,
    p: usize,
    index_bound: usize,
    intervals: Vec<RangeInclusive<usize>>,
}

impl IntervalFamily {
    /// Empty intervals are dropped; `index_bound` still reports
    /// `(t + p - 2) / p`.
    pub fn new(t: usize, p: usize) -> Self {
        assert!(t >= 1 && p >= 1, "t and p must be positive");
        let index_bound = (t + p - 2) / p;
        let intervals = (1..=index_bound)
            .map(|i| (i - 1) * (t + p) + 1..=i * t - 1)
            .filter(|r| !r.is_empty())
            .collect();
        IntervalFamily {
            t,
            p,
            index_bound,
            intervals,
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn index_bound(&self) -> usize {
        self.index_bound
    }

    pub fn intervals(&self) -> &[RangeInclusive<usize>] {
        &self.intervals
    }

    /// Union of the intervals, increasing.
    pub fn ground(&self) -> Vec<usize> {
        self.intervals.iter().cloned().flatten().collect()
    }
}

pub fn build_intervals(t: usize, p: usize) -> IntervalFamily {
    IntervalFamily::new(t, p)
}

#[derive(Debug, Clone)]
pub struct CorePoset {
    t: usize,
    p: usize,
    ground: Vec<usize>,
    semigroup: Semigroup,
    /// Indices into `ground` of the elements covered by each element.
    lower_covers: Vec<Vec<usize>>,
}

/// Flat export: ground set plus cover pairs `(lower, upper)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosetExport {
    pub t: usize,
    pub p: usize,
    pub index_bound: usize,
    pub ground: Vec<usize>,
    pub covers: Vec<(usize, usize)>,
}

impl CorePoset {
    pub fn new(t: usize, p: usize) -> Self {
        let ground = IntervalFamily::new(t, p).ground();
        let moduli: Vec<usize> = (t..=t + p).collect();
        let semigroup = Semigroup::new(&moduli, ground.last().copied().unwrap_or(0));
        let below = |y: usize, x: usize| y < x && semigroup.contains(x - y);
        let lower_covers = ground
            .iter()
            .map(|&x| {
                (0..ground.len())
                    .filter(|&a| below(ground[a], x))
                    .filter(|&a| !ground.iter().any(|&z| below(ground[a], z) && below(z, x)))
                    .collect()
            })
            .collect();
        CorePoset {
            t,
            p,
            ground,
            semigroup,
            lower_covers,
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn contains(&self, x: usize) -> bool {
        self.ground.binary_search(&x).is_ok()
    }

    /// `y ⪯ x`, decided on the integer difference alone. Both arguments must
    /// lie in the ground set.
    pub fn leq(&self, y: usize, x: usize) -> bool {
        debug_assert!(self.contains(x) && self.contains(y));
        y <= x && self.semigroup.contains(x - y)
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.lower_covers
            .iter()
            .enumerate()
            .flat_map(|(b, lows)| lows.iter().map(move |&a| (a, b)))
            .map(|(a, b)| (self.ground[a], self.ground[b]))
            .collect()
    }

    pub fn export(&self) -> PosetExport {
        PosetExport {
            t: self.t,
            p: self.p,
            index_bound: IntervalFamily::new(self.t, self.p).index_bound(),
            ground: self.ground.clone(),
            covers: self.covers(),
        }
    }

    /// Whether `s` is downward closed. Elements outside the ground set are
    /// rejected.
    pub fn is_good_subset(&self, s: &BTreeSet<usize>) -> Result<bool> {
        if let Some(&x) = s.iter().find(|&&x| !self.contains(x)) {
            return Err(Error::OutsideGround(x));
        }
        Ok(s.iter().all(|&x| {
            self.ground
                .iter()
                .filter(|&&y| self.leq(y, x))
                .all(|y| s.contains(y))
        }))
    }

    /// Walks the ground set in increasing order; an element may join once
    /// all of its lower covers have.
    fn for_each_down_set<F: FnMut(&[usize])>(&self, mut visit: F) {
        let mut member = vec![false; self.ground.len()];
        let mut chosen = Vec::new();
        self.down_set_dfs(0, &mut member, &mut chosen, &mut visit);
    }

    fn down_set_dfs<F: FnMut(&[usize])>(
        &self,
        idx: usize,
        member: &mut [bool],
        chosen: &mut Vec<usize>,
        visit: &mut F,
    ) {
        if idx == self.ground.len() {
            visit(chosen);
            return;
        }
        self.down_set_dfs(idx + 1, member, chosen, visit);
        if self.lower_covers[idx].iter().all(|&a| member[a]) {
            member[idx] = true;
            chosen.push(self.ground[idx]);
            self.down_set_dfs(idx + 1, member, chosen, visit);
            chosen.pop();
            member[idx] = false;
        }
    }

    pub fn count_good_subsets(&self) -> Count {
        let mut count = Count::zero();
        self.for_each_down_set(|_| count += Count::one());
        count
    }

    /// Every down-set once, ordered by cardinality then lexicographically on
    /// the increasing element lists.
    pub fn enumerate_good_subsets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_down_set(|s| out.push(s.to_vec()));
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

pub fn build_poset(t: usize, p: usize) -> CorePoset {
    CorePoset::new(t, p)
}
