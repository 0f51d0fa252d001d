//! Exhaustive enumeration of the finite family of simultaneous cores.
//!
//! Cores are generated as β-sets: subsets `S` of `1..bound` such that
//! `x - t` is a positive member of `S` for every `x` in `S` and every modulus
//! `t <= x`. Candidates are decided in increasing order, and whether `x` may
//! join depends only on smaller elements, so each closed set is reached by
//! exactly one branch of the search.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::betaset::{BetaSet, CoreSpec};
use crate::error::{Error, Result};
use crate::finiteness::analyze;
use crate::partitions::Partition;
use crate::{Count, Rational};

pub(crate) fn serialize_display<T: std::fmt::Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreFamily {
    spec: CoreSpec,
    count: usize,
    members: Vec<Partition>,
}

impl CoreFamily {
    pub fn spec(&self) -> &CoreSpec {
        &self.spec
    }

    /// Members sorted by size, ties broken by reverse lexicographic order of
    /// the parts (so `[2]` precedes `[1,1]`).
    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.members.iter().any(|m| m == p)
    }

    pub fn stats(&self) -> FamilyStats {
        let max_size = self.members.iter().map(Partition::size).max().unwrap_or(0);
        let total_size = self
            .members
            .iter()
            .fold(Count::zero(), |acc, m| acc + Count::from(m.size()));
        let self_conjugate_count = self.members.iter().filter(|m| m.is_self_conjugate()).count();
        FamilyStats {
            count: Count::from(self.members.len()),
            max_size,
            total_size,
            self_conjugate_count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyStats {
    #[serde(serialize_with = "serialize_display")]
    pub count: Count,
    pub max_size: usize,
    #[serde(serialize_with = "serialize_display")]
    pub total_size: Count,
    pub self_conjugate_count: usize,
}

impl FamilyStats {
    /// Exact mean size; `None` for an empty family, which never occurs for a
    /// finite spec since the empty partition is always a core.
    pub fn average_size(&self) -> Option<Rational> {
        if self.count.is_zero() {
            return None;
        }
        Some(BigRational::new(
            self.total_size.clone().into(),
            self.count.clone().into(),
        ))
    }
}

/// Visits every subset of `1..end` closed under subtraction of each modulus.
pub fn for_each_closed_beta_set<F: FnMut(&[usize])>(end: usize, moduli: &[usize], mut visit: F) {
    let mut member = vec![false; end.max(1)];
    let mut chosen = Vec::new();
    closed_dfs(1, end, moduli, &mut member, &mut chosen, &mut visit);
}

fn closed_dfs<F: FnMut(&[usize])>(
    x: usize,
    end: usize,
    moduli: &[usize],
    member: &mut [bool],
    chosen: &mut Vec<usize>,
    visit: &mut F,
) {
    if x >= end {
        visit(chosen);
        return;
    }
    closed_dfs(x + 1, end, moduli, member, chosen, visit);
    let admissible = moduli.iter().all(|&t| t > x || (t < x && member[x - t]));
    if admissible {
        member[x] = true;
        chosen.push(x);
        closed_dfs(x + 1, end, moduli, member, chosen, visit);
        chosen.pop();
        member[x] = false;
    }
}

fn canonical_order(members: &mut [Partition]) {
    members.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.parts().cmp(a.parts())));
}

/// All `(t_1, ..., t_m)`-cores. Fails with [`Error::InfiniteFamily`] when the
/// moduli share a factor.
pub fn enumerate_cores(spec: &CoreSpec) -> Result<CoreFamily> {
    let report = analyze(spec);
    let end = report.bound.ok_or(Error::InfiniteFamily { gcd: report.gcd })?;
    let mut members = Vec::new();
    for_each_closed_beta_set(end, spec.moduli(), |elems| {
        let beta = BetaSet::new(elems.iter().copied()).expect("elements are positive");
        members.push(beta.to_partition());
    });
    canonical_order(&mut members);
    Ok(CoreFamily {
        spec: spec.clone(),
        count: members.len(),
        members,
    })
}

pub fn stats(spec: &CoreSpec) -> Result<FamilyStats> {
    Ok(enumerate_cores(spec)?.stats())
}

/// Smallest positive integer missing from the β-set of `p`.
pub fn r_class(p: &Partition) -> usize {
    let beta = p.beta_set();
    (1..).find(|&j| !beta.contains(j)).expect("beta-sets are finite")
}

/// Entry `j - 1` counts the `(t, ..., t + p)`-cores whose β-set contains
/// `1, ..., j - 1` but not `j`, for `j = 1..=t`. No class beyond `t` is
/// populated because `t` never lies in the β-set of a `t`-core.
pub fn r_class_counts(t: usize, p: usize) -> Result<Vec<Count>> {
    let spec = CoreSpec::consecutive(t, p)?;
    let family = enumerate_cores(&spec)?;
    let mut counts = vec![Count::zero(); t];
    for member in family.members() {
        let j = r_class(member);
        debug_assert!((1..=t).contains(&j));
        counts[j - 1] += Count::one();
    }
    Ok(counts)
}
