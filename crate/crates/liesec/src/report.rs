//! The JSON report schema shared by all CLI commands.
//!
//! Reports are schema-versioned and deterministic: for identical input,
//! seed, and flags, every field is byte-identical except `timing_ms`.
//! All exact data (subspaces, scalars, sections) is rendered through the
//! same canonical string forms as the algebra file format.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::LieAlgebra;
use crate::format::{to_file, AlgebraFile};
use crate::section::MaximalReport;
use crate::subspace::Subspace;
use crate::verify::{ClaimStatus, CounterexampleFinding, VerificationOutcome};

/// Bumped on any backwards-incompatible schema change.
pub const SCHEMA_VERSION: u32 = 1;

/// Top-level report emitted by `analyze`, `verify`, and `search`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema_version: u32,
    pub tool_version: String,
    /// The subcommand that produced the report.
    pub command: String,
    /// Hex SHA-256 of the input file, when the command took one.
    pub input_digest: Option<String>,
    /// Effective parameters after defaulting, as canonical strings.
    pub parameters: BTreeMap<String, String>,
    /// One record per analyzed maximal subalgebra (`analyze`).
    pub maximal_reports: Vec<MaximalRecord>,
    /// One record per verified claim (`verify`).
    pub claims: Vec<ClaimRecord>,
    /// Sharpness-probe findings (`search`).
    pub findings: Vec<FindingRecord>,
    pub warnings: Vec<String>,
    /// Wall-clock milliseconds; the only field excluded from the
    /// determinism contract.
    pub timing_ms: u64,
}

impl ReportFile {
    pub fn new(command: &str, parameters: BTreeMap<String, String>) -> ReportFile {
        ReportFile {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            input_digest: None,
            parameters,
            maximal_reports: Vec::new(),
            claims: Vec::new(),
            findings: Vec::new(),
            warnings: Vec::new(),
            timing_ms: 0,
        }
    }

    /// Canonical JSON text (pretty-printed, trailing newline).
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("schema always serializes");
        s.push('\n');
        s
    }

    /// True when no claim failed — the exit-code criterion for `verify`.
    pub fn all_claims_pass(&self) -> bool {
        self.claims.iter().all(|c| c.status != "fail")
    }
}

/// Serialized form of one [`MaximalReport`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MaximalRecord {
    /// Basis rows of M in the ambient basis, canonical scalar strings.
    pub maximal: Vec<Vec<String>>,
    /// Basis rows of the core of M.
    pub core: Vec<Vec<String>>,
    pub prim_type: u8,
    /// The section as a full algebra file (exact, reloadable).
    pub section: AlgebraFile,
    pub c_index: usize,
    pub ideal_index: usize,
    pub is_c_ideal: bool,
    pub section_solvable: bool,
    pub section_nilpotent: bool,
    pub section_nil: bool,
}

impl MaximalRecord {
    pub fn from_report(ambient: &LieAlgebra, r: &MaximalReport) -> MaximalRecord {
        MaximalRecord {
            maximal: subspace_rows(ambient, &r.m),
            core: subspace_rows(ambient, &r.core),
            prim_type: r.prim_type,
            section: to_file(&r.sec),
            c_index: r.c_index,
            ideal_index: r.ideal_index,
            is_c_ideal: r.is_c_ideal,
            section_solvable: r.sec_flags.solvable,
            section_nilpotent: r.sec_flags.nilpotent,
            section_nil: r.sec_flags.nil,
        }
    }
}

/// Serialized form of one [`VerificationOutcome`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub claim: String,
    /// `"pass"`, `"fail"`, or `"skipped"`.
    pub status: String,
    pub skip_reason: Option<String>,
    pub instances_checked: usize,
    pub violations: Vec<ViolationRecord>,
    pub notes: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub algebra: String,
    pub witness: String,
}

impl From<&VerificationOutcome> for ClaimRecord {
    fn from(o: &VerificationOutcome) -> ClaimRecord {
        let (status, skip_reason) = match &o.status {
            ClaimStatus::Pass => ("pass".to_string(), None),
            ClaimStatus::Fail => ("fail".to_string(), None),
            ClaimStatus::Skipped { reason } => ("skipped".to_string(), Some(reason.clone())),
        };
        ClaimRecord {
            claim: o.claim.name().to_string(),
            status,
            skip_reason,
            instances_checked: o.instances_checked,
            violations: o
                .violations
                .iter()
                .map(|v| ViolationRecord {
                    algebra: v.algebra.clone(),
                    witness: v.witness.clone(),
                })
                .collect(),
            notes: o.notes.clone(),
        }
    }
}

/// Serialized form of one [`CounterexampleFinding`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FindingRecord {
    pub algebra: String,
    pub dim: usize,
    pub trivial_maximals: Vec<Vec<Vec<String>>>,
}

impl FindingRecord {
    pub fn from_finding(ambient: &LieAlgebra, f: &CounterexampleFinding) -> FindingRecord {
        FindingRecord {
            algebra: f.algebra.clone(),
            dim: f.dim,
            trivial_maximals: f
                .trivial_maximals
                .iter()
                .map(|m| subspace_rows(ambient, m))
                .collect(),
        }
    }
}

/// Canonical string rows of a subspace basis.
fn subspace_rows(ambient: &LieAlgebra, s: &Subspace) -> Vec<Vec<String>> {
    s.basis_rows()
        .map(|row| row.iter().map(|x| ambient.field.format_scalar(x)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::scalar::FieldSpec;
    use crate::section::analyze_maximal;

    #[test]
    fn analyze_report_serializes_and_reloads() {
        let entry = catalog(FieldSpec::Rationals, "sl2").unwrap();
        let m = entry.declared_maximals[0].clone();
        let r = analyze_maximal(&entry.algebra, &m, 1 << 20).unwrap();
        let mut report = ReportFile::new("analyze", BTreeMap::new());
        report
            .maximal_reports
            .push(MaximalRecord::from_report(&entry.algebra, &r));
        let text = report.to_json_string();
        let back: ReportFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.maximal_reports[0].c_index, 2);
        assert_eq!(back.maximal_reports[0].ideal_index, 3);
        assert_eq!(back.maximal_reports[0].prim_type, 2);
    }

    #[test]
    fn reports_differing_only_in_timing_compare_equal_after_zeroing() {
        let mut a = ReportFile::new("verify", BTreeMap::new());
        let mut b = a.clone();
        a.timing_ms = 10;
        b.timing_ms = 99;
        a.timing_ms = 0;
        b.timing_ms = 0;
        assert_eq!(a.to_json_string(), b.to_json_string());
    }
}
