//! Verification reports (JSON) and case-chain rows (CSV).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use hfactor_core::extremal::CaseCheckRecord;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub campaign: String,
    pub schema_version: u32,
    /// Tool version.
    pub version: String,
    pub parameters: BTreeMap<String, Value>,
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub runtime_s: f64,
    pub passed: bool,
    /// Campaign-specific tallies (per-order counts, margins, coverage).
    pub summary: BTreeMap<String, Value>,
}

impl VerificationReport {
    pub fn new(campaign: &str, parameters: BTreeMap<String, Value>) -> VerificationReport {
        VerificationReport {
            campaign: campaign.to_string(),
            schema_version: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION").to_string(),
            parameters,
            checked: 0,
            violations: Vec::new(),
            runtime_s: 0.0,
            passed: true,
            summary: BTreeMap::new(),
        }
    }

    /// Sort violations and set `passed`.
    pub fn finish(mut self, runtime_s: f64) -> VerificationReport {
        self.violations.sort();
        self.passed = self.violations.is_empty();
        self.runtime_s = runtime_s;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report fields are JSON-representable")
    }

    pub fn from_json(text: &str) -> Result<VerificationReport, Error> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn write_json(&self, path: &Path) -> Result<(), Error> {
        let mut f = std::fs::File::create(path)?;
        f.write_all(self.to_json().as_bytes())?;
        f.write_all(b"\n")?;
        Ok(())
    }

    /// JSON with `runtime_s` zeroed, for determinism comparisons.
    pub fn without_runtime(&self) -> String {
        let mut r = self.clone();
        r.runtime_s = 0.0;
        r.to_json()
    }
}

#[derive(Serialize)]
struct CaseRow {
    n: usize,
    s: usize,
    case: u8,
    #[serde(rename = "rho_G2")]
    rho_g2: f64,
    #[serde(rename = "rho_Gstar")]
    rho_gstar: f64,
    phi_star_at_rho: f64,
    margin: f64,
    passed: bool,
}

pub fn write_case_csv<W: Write>(records: &[CaseCheckRecord], out: W) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CaseRow {
            n: r.n,
            s: r.s,
            case: r.case.number(),
            rho_g2: r.rho_g2,
            rho_gstar: r.rho_gstar,
            phi_star_at_rho: r.phi_star_at_rho,
            margin: r.margin,
            passed: r.passed,
        })?;
    }
    w.flush()?;
    Ok(())
}
