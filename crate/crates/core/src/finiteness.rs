//! Finiteness of the family of simultaneous cores.
//!
//! The family is finite iff the moduli are coprime. When they are, no β-set
//! element of a core reaches `(t_1 - 1) * (t_2 + ... + t_m)`. When they share
//! a factor `d > 1`, the β-sets `{1, 1 + d, ..., 1 + n d}` give infinitely many
//! cores.

use serde::Serialize;

use crate::betaset::{BetaSet, CoreSpec};
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FinitenessReport {
    pub gcd: usize,
    pub finite: bool,
    /// Exclusive upper bound on β-set elements; present iff `finite`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
}

/// When `t_1 = 1` the formula gives 0; the bound is then clamped to 1 so the
/// universe is empty and only the empty partition remains.
pub fn analyze(spec: &CoreSpec) -> FinitenessReport {
    let gcd = spec.gcd();
    if gcd != 1 {
        return FinitenessReport {
            gcd,
            finite: false,
            bound: None,
        };
    }
    let t1 = spec.smallest();
    let rest: usize = spec.moduli()[1..].iter().sum();
    let bound = ((t1 - 1) * rest).max(1);
    FinitenessReport {
        gcd,
        finite: true,
        bound: Some(bound),
    }
}

/// The `n`-th member of the infinite family, with β-set `{1, 1 + d, ..., 1 + n d}`.
pub fn witness(spec: &CoreSpec, n: usize) -> Result<Partition> {
    let d = spec.gcd();
    if d == 1 {
        return Err(Error::InvalidSpec(format!(
            "{spec} has gcd 1, so its cores form a finite family"
        )));
    }
    let beta = BetaSet::new((0..=n).map(|j| 1 + j * d))?;
    Ok(beta.to_partition())
}
