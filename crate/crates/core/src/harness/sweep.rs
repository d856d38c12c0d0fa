use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::harness::ids::{IdentityId, Shape};
use crate::harness::point::{classical_point, random_point, GridSpec, ParamPoint};
use crate::harness::verify::{verify, IdentityReport, Verdict};

/// Environment variable fixing the worker count; `0` or unset means automatic.
pub const THREADS_VAR: &str = "POLYFAM_THREADS";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdSummary {
    pub checked: usize,
    pub verbatim_pass: usize,
    pub verbatim_fail: usize,
    pub corrected_pass: usize,
    pub corrected_fail: usize,
    pub na: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub reports: Vec<IdentityReport>,
    pub summary: BTreeMap<IdentityId, IdSummary>,
}

impl SweepResult {
    /// True when no corrected verdict is `FAIL`.
    pub fn corrected_ok(&self) -> bool {
        self.reports.iter().all(|r| r.corrected != Verdict::Fail)
    }
}

fn mix(seed: u64, parts: [u64; 4]) -> u64 {
    // splitmix64 finalizer over each part
    parts.iter().fold(seed, |acc, &p| {
        let mut z = acc ^ p.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    })
}

/// `(n, k)` cells an identity is checked on.
fn cells(id: IdentityId, grid: &GridSpec) -> Vec<(usize, usize)> {
    let ks: Vec<usize> = if id.fixes_k_to_one() {
        vec![1]
    } else {
        (1..=grid.k_max.max(1)).collect()
    };
    match id.shape() {
        Shape::ClassicalSeries | Shape::ParametricSeries => {
            ks.into_iter().map(|k| (0, k)).collect()
        }
        _ => ks
            .into_iter()
            .flat_map(|k| (0..=grid.n_max).map(move |n| (n, k)))
            .collect(),
    }
}

/// Every point the sweep evaluates for `id`, in a fixed order.
pub fn grid_points(id: IdentityId, grid: &GridSpec, seed: u64) -> Vec<ParamPoint> {
    let mut points = Vec::new();
    for (n, k) in cells(id, grid) {
        points.push(classical_point(id, n, k, grid));
        // the classical series have no free parameters
        if id.shape() == Shape::ClassicalSeries {
            continue;
        }
        for i in 0..grid.points {
            let mut rng = ChaCha8Rng::seed_from_u64(mix(
                seed,
                [id.index() as u64, n as u64, k as u64, i as u64],
            ));
            points.push(random_point(id, n, k, grid, &mut rng));
        }
    }
    points
}

/// Reads [`THREADS_VAR`]; `None` means let rayon decide.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
}

/// Verifies `ids` over the grid using the thread count from the environment.
pub fn sweep(ids: &[IdentityId], grid: &GridSpec, seed: u64) -> SweepResult {
    sweep_with_threads(ids, grid, seed, threads_from_env())
}

/// Verifies `ids` over the grid. Output order depends only on the inputs.
pub fn sweep_with_threads(
    ids: &[IdentityId],
    grid: &GridSpec,
    seed: u64,
    threads: Option<usize>,
) -> SweepResult {
    let jobs: Vec<(IdentityId, ParamPoint)> = ids
        .iter()
        .flat_map(|&id| {
            grid_points(id, grid, seed)
                .into_iter()
                .map(move |p| (id, p))
        })
        .collect();
    let run = || -> Vec<IdentityReport> { jobs.par_iter().map(|(id, p)| verify(*id, p)).collect() };
    let reports = match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    let mut summary: BTreeMap<IdentityId, IdSummary> =
        ids.iter().map(|&id| (id, IdSummary::default())).collect();
    for r in &reports {
        let s = summary.entry(r.identity).or_default();
        s.checked += 1;
        match r.verbatim {
            Verdict::Pass => s.verbatim_pass += 1,
            Verdict::Fail => s.verbatim_fail += 1,
            Verdict::Na => {}
        }
        match r.corrected {
            Verdict::Pass => s.corrected_pass += 1,
            Verdict::Fail => s.corrected_fail += 1,
            Verdict::Na => s.na += 1,
        }
    }
    SweepResult { reports, summary }
}
