use std::fmt;

use serde::{Serialize, Serializer};

use super::TheoremId;

pub const CSV_HEADER: [&str; 7] = [
    "theorem_id",
    "instance",
    "expected",
    "solver_value",
    "verdict",
    "millis",
    "witness",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
    Skipped(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Match => f.write_str("Match"),
            Verdict::Mismatch => f.write_str("Mismatch"),
            Verdict::NotApplicable => f.write_str("NotApplicable"),
            Verdict::Skipped(why) => write!(f, "Skipped({why})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One (statement, instance) check. `witness` lists the solver witness sets
/// behind `solver_value`, so a mismatch can be reproduced from the row alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub instance: String,
    pub expected: String,
    pub solver_value: String,
    pub verdict: Verdict,
    pub millis: u128,
    pub witness: String,
}

impl TheoremReport {
    pub fn is_mismatch(&self) -> bool {
        self.verdict == Verdict::Mismatch
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<22} {:<28} expected {:<16} got {:<20} {}",
            self.theorem_id, self.instance, self.expected, self.solver_value, self.verdict
        )
    }
}

/// CSV with the fixed header. Without `timings` the millis column is left
/// empty so that repeated runs produce identical bytes.
pub fn reports_to_csv(reports: &[TheoremReport], timings: bool) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(vec![]);
    w.write_record(CSV_HEADER).expect("write to memory");
    for r in reports {
        let millis = if timings {
            r.millis.to_string()
        } else {
            String::new()
        };
        w.write_record([
            r.theorem_id.name(),
            &r.instance,
            &r.expected,
            &r.solver_value,
            &r.verdict.to_string(),
            &millis,
            &r.witness,
        ])
        .expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

pub fn reports_to_json(reports: &[TheoremReport], timings: bool) -> String {
    let rows: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).expect("report serializes");
            if !timings {
                v["millis"] = serde_json::Value::Null;
            }
            v
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("reports serialize")
}
