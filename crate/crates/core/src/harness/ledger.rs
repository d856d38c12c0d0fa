use std::collections::BTreeMap;

use serde::Serialize;

use crate::harness::ids::IdentityId;
use crate::harness::point::ParamPoint;
use crate::harness::verify::{IdentityReport, Verdict};

/// One identity whose printed form fails somewhere on the grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub identity: IdentityId,
    pub statement: &'static str,
    pub corrected_reading: &'static str,
    /// Smallest failing point by `(n, k, height)`.
    pub counterexample: ParamPoint,
    pub verbatim_lhs: String,
    pub verbatim_rhs: String,
    pub corrected: Verdict,
    pub failures: usize,
    pub checked: usize,
}

pub type Ledger = Vec<LedgerEntry>;

/// Collects printed-form failures, one entry per identity, sorted by identity.
pub fn errata_ledger(reports: &[IdentityReport]) -> Ledger {
    let mut checked: BTreeMap<IdentityId, usize> = BTreeMap::new();
    let mut worst: BTreeMap<IdentityId, (&IdentityReport, usize)> = BTreeMap::new();
    for r in reports {
        if r.verbatim == Verdict::Na {
            continue;
        }
        *checked.entry(r.identity).or_default() += 1;
        if r.verbatim != Verdict::Fail {
            continue;
        }
        worst
            .entry(r.identity)
            .and_modify(|(best, count)| {
                *count += 1;
                if r.point.size_key() < best.point.size_key() {
                    *best = r;
                }
            })
            .or_insert((r, 1));
    }
    worst
        .into_iter()
        .map(|(id, (r, failures))| LedgerEntry {
            identity: id,
            statement: id.statement(),
            corrected_reading: id.corrected_reading(),
            counterexample: r.point.clone(),
            verbatim_lhs: r.verbatim_lhs.clone().unwrap_or_else(|| r.lhs.clone()),
            verbatim_rhs: r.verbatim_rhs.clone().unwrap_or_else(|| r.rhs.clone()),
            corrected: r.corrected,
            failures,
            checked: checked[&id],
        })
        .collect()
}
