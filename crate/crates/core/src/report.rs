//! Outcome of comparing two expansions.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::time::Duration;

use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::qseries::{Mismatch, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    NonGeneric,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NonGeneric => "non-generic",
        }
    }
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

pub const TRUNCATION_LIMITED: &str = "truncation-limited";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: String,
    pub instantiation: Vec<(String, String)>,
    pub order: Rat,
    pub verdict: Verdict,
    pub first_mismatch: Option<Mismatch>,
    pub notes: Vec<String>,
    pub wall_time: Option<Duration>,
}

impl IdentityReport {
    pub fn new(id: impl Into<String>, instantiation: Vec<(String, String)>, order: Rat) -> Self {
        IdentityReport {
            id: id.into(),
            instantiation,
            order,
            verdict: Verdict::Pass,
            first_mismatch: None,
            notes: Vec::new(),
            wall_time: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Record an evaluation error as a verdict.
    pub fn with_error(mut self, e: &Error) -> Self {
        self.verdict = match e {
            Error::NonGenericParameter(_) => Verdict::NonGeneric,
            _ => Verdict::Fail,
        };
        self.notes.push(e.to_string());
        self
    }

    /// Keep the worse of two verdicts, merging diagnostics.
    pub fn merge(mut self, other: IdentityReport) -> Self {
        if other.verdict > self.verdict {
            self.verdict = other.verdict;
            self.first_mismatch = other.first_mismatch;
        }
        for n in other.notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
        self
    }
}

/// Compare two independently computed sides below `order`.
pub fn compare(
    id: impl Into<String>,
    instantiation: Vec<(String, String)>,
    lhs: Result<QSeries>,
    rhs: Result<QSeries>,
    order: Rat,
) -> IdentityReport {
    let report = IdentityReport::new(id, instantiation, order);
    let (l, r) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => return report.with_error(&e),
    };
    judge(report, &l, &r, order)
}

pub(crate) fn judge(mut report: IdentityReport, l: &QSeries, r: &QSeries, order: Rat) -> IdentityReport {
    match l.first_difference(r, order) {
        Err(e) => report.with_error(&e),
        Ok(Some(m)) => {
            report.verdict = Verdict::Fail;
            report.first_mismatch = Some(m);
            report
        }
        Ok(None) => {
            let vanishing = |s: &QSeries| s.truncate(order).is_zero() && !s.is_exact();
            if vanishing(l) || vanishing(r) {
                report.notes.push(alloc::format!(
                    "{TRUNCATION_LIMITED}: both sides vanish below q^{order}"
                ));
            }
            report
        }
    }
}
