//! Mechanical verification of every identity, in printed and corrected form.

mod ids;
mod ledger;
mod point;
mod sweep;
mod verify;

pub use ids::{parse_ids, IdentityId, Shape};
pub use ledger::{errata_ledger, Ledger, LedgerEntry};
pub use point::{nonnegative_alpha, GridSpec, ParamPoint};
pub use sweep::{grid_points, sweep, sweep_with_threads, threads_from_env, IdSummary, SweepResult};
pub use verify::{round_trip, verify, IdentityReport, RoundTrip, Verdict, DEFAULT_ORDER};
