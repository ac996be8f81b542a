//! The JSON run report and its CSV summary.

use std::io::Write;

use qrank_core::IdentityReport;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::format::{coefficient, rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunMeta {
    pub tool: String,
    pub version: String,
    pub filter: String,
    /// Order applied to every entry, if overridden.
    pub order_override: Option<String>,
    pub jobs: usize,
    pub entries: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub non_generic: usize,
    pub wall_time_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameter {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchDoc {
    pub exponent: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub id: String,
    pub instantiation: Vec<Parameter>,
    pub order: String,
    pub verdict: String,
    pub first_mismatch: Option<MismatchDoc>,
    pub notes: Vec<String>,
    pub wall_time_ms: Option<u64>,
}

impl From<&IdentityReport> for ReportDoc {
    fn from(r: &IdentityReport) -> Self {
        ReportDoc {
            id: r.id.clone(),
            instantiation: r
                .instantiation
                .iter()
                .map(|(name, value)| Parameter {
                    name: name.clone(),
                    value: value.clone(),
                })
                .collect(),
            order: rat(r.order),
            verdict: r.verdict.as_str().into(),
            first_mismatch: r.first_mismatch.as_ref().map(|m| MismatchDoc {
                exponent: rat(m.exponent),
                lhs: coefficient(&m.left),
                rhs: coefficient(&m.right),
            }),
            notes: r.notes.clone(),
            wall_time_ms: r.wall_time.map(|d| d.as_millis() as u64),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub run: RunMeta,
    pub entries: Vec<ReportDoc>,
}

impl RunReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// One row per check: id, instantiation, order, verdict, first mismatch exponent, wall time.
    pub fn write_csv(&self, out: impl Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "id",
            "instantiation",
            "order",
            "verdict",
            "mismatch_exponent",
            "wall_time_ms",
        ])?;
        for e in &self.entries {
            let inst: Vec<String> = e
                .instantiation
                .iter()
                .map(|p| format!("{}={}", p.name, p.value))
                .collect();
            w.write_record([
                e.id.as_str(),
                &inst.join("; "),
                &e.order,
                &e.verdict,
                e.first_mismatch.as_ref().map_or("", |m| m.exponent.as_str()),
                &e.wall_time_ms.map_or(String::new(), |t| t.to_string()),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// A one-line human summary of a report.
pub fn line(r: &IdentityReport) -> String {
    let inst: Vec<String> = r.instantiation.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut s = format!(
        "{:<11} {} [{}] to q^{}",
        r.verdict.as_str(),
        r.id,
        inst.join(", "),
        rat(r.order)
    );
    if let Some(m) = &r.first_mismatch {
        s.push_str(&format!(
            "; first mismatch at q^{}: {} vs {}",
            rat(m.exponent),
            coefficient(&m.left),
            coefficient(&m.right)
        ));
    }
    for n in &r.notes {
        s.push_str(&format!("; {n}"));
    }
    s
}
