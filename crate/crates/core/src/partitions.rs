//! Integer partitions, Young diagrams and hook lengths.
//!
//! Rows and columns are 0-indexed: box `(i, j)` here is box `(i + 1, j + 1)`
//! in the usual 1-indexed matrix convention.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::betaset::BetaSet;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts. The empty partition is a
/// valid value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates that `parts` is weakly decreasing with every part at least 1.
    pub fn from_parts(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&x| x == 0) {
            return Err(Error::InvalidPartition(format!("part {pos} is zero")));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts increase from {} to {}",
                w[0], w[1]
            )));
        }
        Ok(Self { parts })
    }

    /// Caller guarantees the invariant.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&x| x > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transpose of the Young diagram: part `j` is the length of column `j`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let mut cols = Vec::with_capacity(width);
        let mut rows = self.parts.len();
        for j in 0..width {
            while rows > 0 && self.parts[rows - 1] <= j {
                rows -= 1;
            }
            cols.push(rows);
        }
        Partition { parts: cols }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Hook lengths of every box, `h(i, j) = parts[i] - j + conj[j] - i - 1`.
    pub fn hook_table(&self) -> HookTable {
        let conj = self.conjugate();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &len)| (0..len).map(|j| len - j + conj.parts[j] - i - 1).collect())
            .collect();
        HookTable { rows }
    }

    /// First-column hook lengths `{parts[i] + r - 1 - i}`.
    pub fn beta_set(&self) -> BetaSet {
        let r = self.parts.len();
        let elements = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &part)| part + r - 1 - i)
            .collect();
        BetaSet::from_decreasing_unchecked(elements)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::from_parts(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{part}")?;
        }
        f.write_str("]")
    }
}

/// Parses the bracket form `[5,2,2]`; `[]` is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPartition(format!("expected [a,b,...], got {s:?}")))?;
        let parts = parse_list(inner).map_err(Error::InvalidPartition)?;
        Self::from_parts(parts)
    }
}

/// Comma-separated nonnegative integers; an all-blank string is the empty list.
pub(crate) fn parse_list(inner: &str) -> std::result::Result<Vec<usize>, String> {
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok.starts_with('-') {
                return Err(format!("negative entry {tok}"));
            }
            tok.parse::<usize>()
                .map_err(|e| format!("bad entry {tok:?}: {e}"))
        })
        .collect()
}

/// Hook lengths of a Young diagram; row `i` has `parts[i]` entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookTable {
    rows: Vec<Vec<usize>>,
}

impl HookTable {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.rows.get(i)?.get(j).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn first_column(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().filter_map(|row| row.first().copied())
    }
}
