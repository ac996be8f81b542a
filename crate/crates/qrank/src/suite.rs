//! Runs catalog entries, one check per work unit, and assembles the run report.

use std::time::Instant;

use qrank_core::catalog::{entries, Entry};
use qrank_core::{IdentityReport, Rat, Verdict};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::format::{parse_rat, rat};
use crate::report::{ReportDoc, RunMeta, RunReport};

/// Environment variable overriding every built-in default order.
pub const ORDER_ENV: &str = "QRANK_DEFAULT_ORDER";

/// The order set through [`ORDER_ENV`], if any.
pub fn default_order_from_env() -> Result<Option<Rat>> {
    match std::env::var(ORDER_ENV) {
        Ok(v) if !v.trim().is_empty() => parse_rat(&v).map(Some),
        _ => Ok(None),
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Glob over entry ids.
    pub filter: String,
    /// Order for every entry; entry defaults apply when absent.
    pub order: Option<Rat>,
    /// Worker threads; 0 uses every core.
    pub jobs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            filter: "*".into(),
            order: None,
            jobs: 0,
        }
    }
}

pub struct SuiteOutcome {
    /// Reports ordered by entry id, then by check.
    pub reports: Vec<IdentityReport>,
    pub report: RunReport,
}

impl SuiteOutcome {
    pub fn all_pass(&self) -> bool {
        self.reports.iter().all(|r| r.verdict == Verdict::Pass)
    }

    pub fn any_fail(&self) -> bool {
        self.reports.iter().any(|r| r.verdict == Verdict::Fail)
    }
}

pub fn matching_entries(filter: &str) -> Result<Vec<Entry>> {
    let pat = glob::Pattern::new(filter).map_err(|e| Error::Filter(filter.into(), e))?;
    Ok(entries().into_iter().filter(|e| pat.matches(e.id)).collect())
}

pub fn run_suite(opts: &SuiteOptions) -> Result<SuiteOutcome> {
    let start = Instant::now();
    let mut selected = matching_entries(&opts.filter)?;
    selected.sort_by_key(|e| e.id);
    let units: Vec<(usize, usize, &Entry, Rat)> = selected
        .iter()
        .enumerate()
        .flat_map(|(i, e)| {
            let o = opts.order.unwrap_or_else(|| Rat::from_integer(e.default_order));
            (0..e.checks().len()).map(move |k| (i, k, e, o))
        })
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Format(e.to_string()))?;
    let mut done: Vec<(usize, usize, IdentityReport)> = pool.install(|| {
        units
            .par_iter()
            .map(|&(i, k, e, o)| {
                let t = Instant::now();
                let check = e.checks().swap_remove(k);
                let mut rep = check.run(e.id, o);
                rep.wall_time = Some(t.elapsed());
                (i, k, rep)
            })
            .collect()
    });
    done.sort_by_key(|(i, k, _)| (*i, *k));
    let reports: Vec<IdentityReport> = done.into_iter().map(|(_, _, r)| r).collect();
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    let run = RunMeta {
        tool: "qrank".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        filter: opts.filter.clone(),
        order_override: opts.order.map(rat),
        jobs: pool.current_num_threads(),
        entries: selected.len(),
        checks: reports.len(),
        passed: count(Verdict::Pass),
        failed: count(Verdict::Fail),
        non_generic: count(Verdict::NonGeneric),
        wall_time_ms: start.elapsed().as_millis() as u64,
    };
    let report = RunReport {
        run,
        entries: reports.iter().map(ReportDoc::from).collect(),
    };
    Ok(SuiteOutcome { reports, report })
}
