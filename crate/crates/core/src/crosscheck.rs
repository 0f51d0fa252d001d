//! Independent routes to the same counts, and the matrix that compares them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::betaset::CoreSpec;
use crate::counting::{self, CountTable};
use crate::enumeration::{enumerate_cores, r_class_counts};
use crate::error::{Error, Result};
use crate::intervalposet::CorePoset;
use crate::powerseries::closed_form_counts;
use crate::Count;

/// How to compute the number of `(t, ..., t + p)`-cores.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Recurrence,
    Poset,
    Enumerate,
    /// Expands the closed form to order `t`; the slowest route.
    Series,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Recurrence,
        Method::Poset,
        Method::Enumerate,
        Method::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Poset => "poset",
            Method::Enumerate => "enumerate",
            Method::Series => "series",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

pub fn count_consecutive(t: usize, p: usize, method: Method) -> Result<Count> {
    if p == 0 {
        return Err(Error::InvalidSpec("p must be positive".into()));
    }
    match method {
        Method::Recurrence => Ok(counting::f(t as isize, p)),
        Method::Poset => {
            if t == 0 {
                return Ok(counting::f(0, p));
            }
            Ok(CorePoset::new(t, p).count_good_subsets())
        }
        Method::Enumerate => {
            if t == 0 {
                return Ok(counting::f(0, p));
            }
            let family = enumerate_cores(&CoreSpec::consecutive(t, p)?)?;
            Ok(Count::from(family.len()))
        }
        Method::Series => Ok(closed_form_counts(p, t)?.swap_remove(t)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

fn outcome(name: String, result: Result<Option<String>>) -> CheckOutcome {
    match result {
        Ok(None) => CheckOutcome { name, passed: true, detail: String::new() },
        Ok(Some(detail)) => CheckOutcome { name, passed: false, detail },
        Err(e) => CheckOutcome { name, passed: false, detail: e.to_string() },
    }
}

/// For every `1 <= t <= t_max` and `1 <= p <= p_max`: all four counting
/// methods agree, and the r-class counts obey
/// `r_{t,j} = f_{t-j}` for `j < p` and `r_{t,j} = f_{j-p} f_{t-j}` for `j >= p`.
/// Catalan and Motzkin closed forms are checked against the recurrence as
/// well. Results come back in a fixed order.
pub fn run_matrix(t_max: usize, p_max: usize) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for p in 1..=p_max {
        for t in 1..=t_max {
            out.push(outcome(format!("count t={t} p={p}"), methods_agree(t, p)));
            out.push(outcome(format!("r-classes t={t} p={p}"), r_class_laws(t, p)));
        }
    }
    out.push(outcome(
        format!("catalan t<={t_max}"),
        Ok((0..=t_max)
            .find(|&t| counting::f(t as isize, 1) != counting::catalan(t))
            .map(|t| format!("mismatch at t={t}"))),
    ));
    out.push(outcome(
        format!("motzkin t<={t_max}"),
        Ok((0..=t_max)
            .find(|&t| counting::f(t as isize, 2) != counting::motzkin(t))
            .map(|t| format!("mismatch at t={t}"))),
    ));
    out
}

fn methods_agree(t: usize, p: usize) -> Result<Option<String>> {
    let values = Method::ALL
        .iter()
        .map(|&m| count_consecutive(t, p, m).map(|v| (m, v)))
        .collect::<Result<Vec<_>>>()?;
    let (_, reference) = &values[0];
    if values.iter().all(|(_, v)| v == reference) {
        return Ok(None);
    }
    let listing: Vec<String> = values.iter().map(|(m, v)| format!("{m}={v}")).collect();
    Ok(Some(listing.join(" ")))
}

fn r_class_laws(t: usize, p: usize) -> Result<Option<String>> {
    let mut table = CountTable::<Count>::new(p);
    let observed = r_class_counts(t, p)?;
    for j in 1..=t {
        let expected = if j < p {
            table.get((t - j) as isize)
        } else {
            table.get((j - p) as isize) * table.get((t - j) as isize)
        };
        if observed[j - 1] != expected {
            return Ok(Some(format!(
                "r_{{{t},{j}}} = {} but expected {expected}",
                observed[j - 1]
            )));
        }
    }
    let total: Count = observed.iter().sum();
    if total != table.get(t as isize) {
        return Ok(Some(format!("sum {total} differs from f_t")));
    }
    Ok(None)
}
