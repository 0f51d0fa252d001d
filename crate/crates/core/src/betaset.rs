//! β-sets and the β-set characterization of core partitions.
//!
//! The β-set of `λ = (λ_1, ..., λ_r)` is `{λ_i + r - i}`, the set of hook
//! lengths in the first column. A partition is a `t`-core exactly when its
//! β-set is closed under `x -> x - t` for every `x >= t`, with `0` never a
//! member.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{parse_list, Partition};
use crate::semigroup::reachable_up_to;

/// Finite set of distinct positive integers, stored strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct BetaSet {
    elements: Vec<usize>,
}

impl BetaSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Duplicates collapse; zero is rejected.
    pub fn new<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::InvalidBetaSet("0 is never a beta-set element".into()));
        }
        Ok(Self {
            elements: set.into_iter().rev().collect(),
        })
    }

    pub(crate) fn from_decreasing_unchecked(elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(elements.last().is_none_or(|&x| x > 0));
        Self { elements }
    }

    /// Elements in strictly decreasing order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn largest(&self) -> Option<usize> {
        self.elements.first().copied()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search_by(|probe| x.cmp(probe)).is_ok()
    }

    /// Inverse of [`Partition::beta_set`]: with `x_1 > ... > x_r`, part `i`
    /// is `x_i - (r - i)`. Consecutive elements differ by at least one, so
    /// the parts are positive and weakly decreasing for every β-set.
    pub fn to_partition(&self) -> Partition {
        let r = self.elements.len();
        let parts = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (r - 1 - i))
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    /// Every `x >= t` in the set has `x - t` positive and in the set.
    pub fn is_t_core(&self, t: usize) -> bool {
        assert!(t >= 1, "modulus must be positive");
        self.elements
            .iter()
            .filter(|&&x| x >= t)
            .all(|&x| x > t && self.contains(x - t))
    }

    pub fn is_simultaneous_core(&self, spec: &CoreSpec) -> bool {
        spec.moduli().iter().all(|&t| self.is_t_core(t))
    }

    /// True iff no element is a nonnegative integer combination of the
    /// moduli. Reachability only needs to be computed up to the largest
    /// element.
    pub fn excludes_linear_combinations(&self, spec: &CoreSpec) -> bool {
        let Some(top) = self.largest() else {
            return true;
        };
        let reach = reachable_up_to(spec.moduli(), top);
        self.elements.iter().all(|&x| !reach[x])
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.elements.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for BetaSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|rest| rest.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidBetaSet(format!("expected {{a,b,...}}, got {s:?}")))?;
        let elements = parse_list(inner).map_err(Error::InvalidBetaSet)?;
        let n = elements.len();
        let set = Self::new(elements)?;
        if set.len() != n {
            return Err(Error::InvalidBetaSet("repeated element".into()));
        }
        Ok(set)
    }
}

/// Strictly increasing moduli `t_1 < ... < t_m`, `m >= 1`, all positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CoreSpec {
    moduli: Vec<usize>,
}

impl CoreSpec {
    pub fn new(moduli: Vec<usize>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidSpec("at least one modulus is required".into()));
        }
        if moduli.contains(&0) {
            return Err(Error::InvalidSpec("moduli must be positive".into()));
        }
        if let Some(w) = moduli.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSpec(format!(
                "moduli must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        Ok(Self { moduli })
    }

    /// The run `t, t + 1, ..., t + p`.
    pub fn consecutive(t: usize, p: usize) -> Result<Self> {
        Self::new((t..=t + p).collect())
    }

    pub fn moduli(&self) -> &[usize] {
        &self.moduli
    }

    pub fn smallest(&self) -> usize {
        self.moduli[0]
    }

    pub fn gcd(&self) -> usize {
        self.moduli.iter().fold(0, |acc, &t| acc.gcd(&t))
    }

    /// `Some((t, p))` when the moduli are `t, t + 1, ..., t + p` with `p >= 1`.
    pub fn as_consecutive(&self) -> Option<(usize, usize)> {
        let t = self.moduli[0];
        let p = self.moduli.len() - 1;
        let run = self.moduli.iter().enumerate().all(|(k, &m)| m == t + k);
        (p >= 1 && run).then_some((t, p))
    }
}

impl TryFrom<Vec<usize>> for CoreSpec {
    type Error = Error;

    fn try_from(moduli: Vec<usize>) -> Result<Self> {
        Self::new(moduli)
    }
}

impl From<CoreSpec> for Vec<usize> {
    fn from(spec: CoreSpec) -> Self {
        spec.moduli
    }
}

impl fmt::Display for CoreSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, t) in self.moduli.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

/// Space- and/or comma-separated moduli, optionally wrapped in parentheses.
impl FromStr for CoreSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .unwrap_or(s);
        let moduli = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|e| Error::InvalidSpec(format!("bad modulus {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(moduli)
    }
}

/// Hook-length route: no hook of `p` is divisible by `t`.
pub fn is_t_core_hooks(p: &Partition, t: usize) -> bool {
    assert!(t >= 1, "modulus must be positive");
    p.hook_table().iter().all(|h| h % t != 0)
}

/// Hook-length route over every modulus. See [`BetaSet::is_simultaneous_core`]
/// for the β-set route.
pub fn is_simultaneous_core(p: &Partition, spec: &CoreSpec) -> bool {
    let table = p.hook_table();
    let all_clear = table
        .iter()
        .all(|h| spec.moduli().iter().all(|&t| h % t != 0));
    all_clear
}
