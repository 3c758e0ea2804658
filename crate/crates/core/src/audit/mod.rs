//! Exact verification of the identity catalog over bounded index ranges.

mod catalog;
mod check;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

pub use catalog::{catalog, lookup, IdentityCase, Sides};
pub use check::{
    check_identity, check_identity_with, minimal_counterexample, Bounds, CheckOptions, Counterexample, Status,
    VerdictReport,
};

use crate::matrices::{basis, basis_relations_hold};
use crate::Result;

pub const REPORT_VERSION: u32 = 1;

/// Default ranges for a full audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditProfile {
    /// Upper bound for single-variable identities.
    pub max_n: i64,
    /// Upper bound for each variable of two-variable identities.
    pub max_m: i64,
    /// Lower bound for variables the domain leaves unrestricted.
    pub negative_floor: i64,
}

impl Default for AuditProfile {
    fn default() -> Self {
        AuditProfile {
            max_n: 200,
            max_m: 50,
            negative_floor: -25,
        }
    }
}

impl AuditProfile {
    pub fn bounds_for(&self, case: &IdentityCase) -> Bounds {
        let hi = if case.arity() == 1 { self.max_n } else { self.max_m };
        case.vars
            .iter()
            .zip(case.domain_min)
            .map(|(v, min)| (v.to_string(), (min.unwrap_or(self.negative_floor), hi)))
            .collect()
    }
}

/// Orders `I7.10` after `I7.9`.
pub fn natural_key(id: &str) -> Vec<(String, u64)> {
    let mut out = Vec::new();
    let mut text = String::new();
    let mut num: Option<u64> = None;
    for ch in id.chars() {
        match (ch.to_digit(10), num) {
            (Some(d), Some(n)) => num = Some(n * 10 + d as u64),
            (Some(d), None) => num = Some(d as u64),
            (None, Some(n)) => {
                out.push((std::mem::take(&mut text), n));
                num = None;
                text.push(ch);
            }
            (None, None) => text.push(ch),
        }
    }
    out.push((text, num.unwrap_or(0)));
    out
}

pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    natural_key(a).cmp(&natural_key(b))
}

/// Runs every catalog entry, or only `ids` when given, in natural id order.
pub fn run_audit(profile: &AuditProfile, ids: Option<&[String]>) -> Result<Vec<VerdictReport>> {
    let mut cases: Vec<&IdentityCase> = match ids {
        None => catalog().iter().collect(),
        Some(ids) => ids.iter().map(|id| lookup(id)).collect::<Result<_>>()?,
    };
    cases.sort_by(|a, b| natural_cmp(a.id, b.id));
    cases.dedup_by_key(|c| c.id);
    cases
        .into_iter()
        .map(|c| check_identity(c.id, &profile.bounds_for(c)))
        .collect()
}

/// Conventions the checker relies on, stated once per report.
pub fn notes() -> Vec<String> {
    let mut notes = vec![
        "basis matrix K is taken as [[0,-i],[-i,0]], the product I J".to_string(),
        "complex-pair product: q = z1 + z2 j with z2 = a2 + a3 i, and the second output \
         component is read with its imaginary part negated"
            .to_string(),
        "U[0] = U[1] = 0 are initial values and do not follow U[n] = T[n-1] + T[n-2]; \
         the Ut recurrence therefore breaks at n = 0"
            .to_string(),
        "identities with a factor 1/2 or 1/4 are compared after clearing that factor".to_string(),
        "chained equalities report the first link that differs from the left side".to_string(),
    ];
    if basis_relations_hold(&basis::k_sign_variant()) {
        notes.remove(0);
    }
    notes
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub version: u32,
    /// ISO 8601 UTC; `None` in reproducible mode.
    pub generated_at: Option<String>,
    pub profile: AuditProfile,
    pub passed: usize,
    pub failed: usize,
    pub notes: Vec<String>,
    pub results: Vec<VerdictReport>,
}

impl AuditReport {
    /// With `reproducible`, timestamps and timings are zeroed so that two runs
    /// serialize to identical bytes.
    pub fn new(profile: AuditProfile, mut results: Vec<VerdictReport>, reproducible: bool) -> Self {
        if reproducible {
            results.iter_mut().for_each(|r| r.elapsed_ms = 0);
        }
        let passed = results.iter().filter(|r| r.passed()).count();
        AuditReport {
            version: REPORT_VERSION,
            generated_at: (!reproducible)
                .then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)),
            profile,
            passed,
            failed: results.len() - passed,
            notes: notes(),
            results,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
