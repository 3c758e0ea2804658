//! Bounded exhaustive checking of catalog entries.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::catalog::{lookup, IdentityCase};
use crate::quat::Quaternion;
use crate::{Error, Result};

/// Inclusive index ranges keyed by variable name.
pub type Bounds = BTreeMap<String, (i64, i64)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub indices: BTreeMap<String, i64>,
    pub lhs: Quaternion,
    pub rhs: Quaternion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub id: String,
    pub reference: String,
    pub domain: String,
    pub checked: BTreeMap<String, [i64; 2]>,
    pub status: Status,
    pub counterexample_count: u64,
    /// Lexicographically first failures, up to the storage cap.
    pub counterexamples: Vec<Counterexample>,
    pub minimal_counterexample: Option<BTreeMap<String, i64>>,
    pub elapsed_ms: u64,
}

impl VerdictReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// How many counterexamples to keep; `None` keeps all of them.
    pub max_stored: Option<usize>,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { max_stored: Some(16) }
    }
}

fn named(case: &IdentityCase, point: &[i64]) -> BTreeMap<String, i64> {
    case.vars
        .iter()
        .map(|v| v.to_string())
        .zip(point.iter().copied())
        .collect()
}

/// Clips the requested ranges to the identity's domain.
fn effective_ranges(case: &IdentityCase, bounds: &Bounds) -> Result<Vec<(i64, i64)>> {
    let mut out = Vec::with_capacity(case.arity());
    for (var, min) in case.vars.iter().zip(case.domain_min) {
        let &(lo, hi) = bounds
            .get(*var)
            .ok_or_else(|| Error::InvalidArgument(format!("{}: no bounds given for `{var}`", case.id)))?;
        let lo = min.map_or(lo, |m| lo.max(m));
        if lo > hi {
            return Err(Error::EmptyRange {
                id: case.id.to_string(),
                detail: format!("{var} in [{lo}, {hi}] after clipping to {}", case.domain()),
            });
        }
        out.push((lo, hi));
    }
    if let Some(extra) = bounds.keys().find(|k| !case.vars.contains(&k.as_str())) {
        return Err(Error::InvalidArgument(format!(
            "{}: unknown variable `{extra}`",
            case.id
        )));
    }
    Ok(out)
}

/// Every grid point in lexicographic order.
fn grid(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    ranges.iter().fold(vec![Vec::new()], |acc, &(lo, hi)| {
        acc.iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect()
    })
}

pub fn check_identity(id: &str, bounds: &Bounds) -> Result<VerdictReport> {
    check_identity_with(id, bounds, CheckOptions::default())
}

pub fn check_identity_with(id: &str, bounds: &Bounds, options: CheckOptions) -> Result<VerdictReport> {
    let case = lookup(id)?;
    let start = Instant::now();
    let ranges = effective_ranges(case, bounds)?;
    let points = grid(&ranges);

    let outcomes: Vec<Option<Counterexample>> = points
        .par_iter()
        .map(|p| {
            let sides = case.evaluate(p)?;
            Ok((!sides.holds()).then(|| Counterexample {
                indices: named(case, p),
                lhs: sides.lhs,
                rhs: sides.rhs,
            }))
        })
        .collect::<Result<_>>()?;

    let failures: Vec<Counterexample> = outcomes.into_iter().flatten().collect();
    let count = failures.len() as u64;
    let minimal = failures.first().map(|c| c.indices.clone());
    let mut stored = failures;
    if let Some(cap) = options.max_stored {
        stored.truncate(cap);
    }

    Ok(VerdictReport {
        id: case.id.to_string(),
        reference: case.reference.to_string(),
        domain: case.domain(),
        checked: case
            .vars
            .iter()
            .zip(&ranges)
            .map(|(v, &(lo, hi))| (v.to_string(), [lo, hi]))
            .collect(),
        status: if count == 0 { Status::Pass } else { Status::Fail },
        counterexample_count: count,
        counterexamples: stored,
        minimal_counterexample: minimal,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Lexicographically smallest failing point with every variable in
/// `[-bound, bound]`, clipped to the domain.
pub fn minimal_counterexample(id: &str, bound: i64) -> Result<Option<BTreeMap<String, i64>>> {
    let case = lookup(id)?;
    let ranges: Vec<(i64, i64)> = case
        .domain_min
        .iter()
        .map(|m| (m.unwrap_or(-bound).max(-bound.abs()), bound))
        .collect();
    if ranges.iter().any(|&(lo, hi)| lo > hi) {
        return Ok(None);
    }
    for p in grid(&ranges) {
        if !case.evaluate(&p)?.holds() {
            return Ok(Some(named(case, &p)));
        }
    }
    Ok(None)
}
