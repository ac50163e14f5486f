//! Proposition checking.
//!
//! Every numbered claim about convexity, arithmetic, distance, sequences and
//! mappings has a [`PropositionSpec`] in [`catalog`]. [`check`] searches for
//! a counterexample in up to three tiers:
//!
//! 1. fixture cases built from the worked examples,
//! 2. an exhaustive small-lattice enumeration,
//! 3. `budget` seeded random trials.
//!
//! The random stream for a claim is derived from `seed` and the claim id, so
//! results do not depend on evaluation order or thread count. Witnesses are
//! plain data (sets, an optional mapping, ε values) and can be replayed
//! through [`replay`] or the public library directly.

pub mod catalog;
mod engine;
pub mod errata;
pub mod gen;

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::MappingSpec;
use crate::error::{Error, Result};
use crate::format::{self, Precision};
use crate::set::FuzzySoftSet;

pub use catalog::catalog;
pub use engine::check;

/// Default number of random trials per claim.
pub const DEFAULT_BUDGET: usize = 1000;

/// One input to a law.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Case {
    pub sets: Vec<FuzzySoftSet>,
    pub mapping: Option<MappingSpec>,
    pub limit: Option<FuzzySoftSet>,
    pub epsilons: Vec<f64>,
}

impl Case {
    pub fn sets(sets: Vec<FuzzySoftSet>) -> Self {
        Case {
            sets,
            ..Case::default()
        }
    }

    pub fn with_mapping(sets: Vec<FuzzySoftSet>, mapping: MappingSpec) -> Self {
        Case {
            sets,
            mapping: Some(mapping),
            ..Case::default()
        }
    }

    pub fn eps(mut self, epsilons: Vec<f64>) -> Self {
        self.epsilons = epsilons;
        self
    }

    pub fn limit(mut self, limit: FuzzySoftSet) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn to_json(&self) -> Value {
        let set = |s: &FuzzySoftSet| -> Value {
            serde_json::from_str(&format::set_to_json(s, Precision::Shortest))
                .expect("set documents are valid JSON")
        };
        let mut v = json!({ "sets": self.sets.iter().map(set).collect::<Vec<_>>() });
        if let Some(f) = &self.mapping {
            v["mapping"] = serde_json::from_str(&format::mapping_to_json(f))
                .expect("mapping documents are valid JSON");
        }
        if let Some(l) = &self.limit {
            v["limit"] = set(l);
        }
        if !self.epsilons.is_empty() {
            v["epsilons"] = json!(self.epsilons);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let parse_set = |v: &Value| format::parse_set(&v.to_string());
        let sets = v["sets"]
            .as_array()
            .ok_or_else(|| Error::Malformed("witness has no `sets` array".into()))?
            .iter()
            .map(parse_set)
            .collect::<Result<Vec<_>>>()?;
        let mapping = match v.get("mapping") {
            Some(m) => Some(format::parse_mapping(&m.to_string())?),
            None => None,
        };
        let limit = match v.get("limit") {
            Some(l) => Some(parse_set(l)?),
            None => None,
        };
        let epsilons = match v.get("epsilons") {
            Some(e) => {
                serde_json::from_value(e.clone()).map_err(|e| Error::Malformed(e.to_string()))?
            }
            None => Vec::new(),
        };
        Ok(Case {
            sets,
            mapping,
            limit,
            epsilons,
        })
    }
}

/// Result of evaluating a law on one case.
#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Holds,
    /// The premise does not apply.
    Vacuous,
    Violated(Failure),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    /// `(parameter, object)` of the offending cell, when there is one.
    pub cell: Option<(usize, usize)>,
    pub detail: String,
}

impl Failure {
    pub fn new(detail: impl Into<String>) -> Self {
        Failure {
            cell: None,
            detail: detail.into(),
        }
    }

    pub fn at(cell: (usize, usize), detail: impl Into<String>) -> Self {
        Failure {
            cell: Some(cell),
            detail: detail.into(),
        }
    }
}

pub type Law = fn(&Case) -> Verdict;

/// Where cases for a claim come from.
#[derive(Clone, Copy)]
pub enum Domain {
    /// A cell-wise identity over `arity` sets: exhaustive over every tuple
    /// of 0.1-lattice values, then random grids.
    Cells { arity: usize },
    /// `count` sets of a common shape: exhaustive over small lattices, then
    /// `gen`.
    Sets {
        count: usize,
        gen: fn(&mut gen::Rand) -> Case,
    },
    /// Random cases only.
    Random { gen: fn(&mut gen::Rand) -> Case },
}

#[derive(Clone, Copy)]
pub enum Strategy {
    /// The law must hold on every case.
    Universal(Law),
    /// `qualified` compares only mutually defined cells; `strict` also
    /// requires the undefined masks to agree.
    DefinedCells { strict: Law, qualified: Law },
    /// `restricted` adds the named precondition to `unrestricted`.
    Restricted { restricted: Law, unrestricted: Law },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Verified,
    Falsifiable,
    HoldsOnDefinedCells,
    HoldsWithRestriction(&'static str),
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Verified => f.write_str("VERIFIED"),
            Expected::Falsifiable => f.write_str("FALSIFIABLE"),
            Expected::HoldsOnDefinedCells => f.write_str("HOLDS-ON-DEFINED-CELLS"),
            Expected::HoldsWithRestriction(r) => write!(f, "HOLDS-WITH-RESTRICTION({r})"),
        }
    }
}

#[derive(Clone, Copy)]
pub struct PropositionSpec {
    pub id: &'static str,
    /// The claim in formula notation.
    pub anchor: &'static str,
    pub expected: Expected,
    pub strategy: Strategy,
    pub domain: Domain,
    pub fixtures: Option<fn() -> Vec<Case>>,
}

impl PropositionSpec {
    /// Name of the precondition for restricted claims.
    pub fn restriction(&self) -> Option<&'static str> {
        match self.expected {
            Expected::HoldsWithRestriction(r) => Some(r),
            _ => None,
        }
    }

    fn law(&self, role: LawRole) -> Law {
        match (self.strategy, role) {
            (Strategy::Universal(l), _) => l,
            (Strategy::DefinedCells { qualified, .. }, LawRole::Claim) => qualified,
            (Strategy::DefinedCells { strict, .. }, LawRole::Secondary) => strict,
            (Strategy::Restricted { restricted, .. }, LawRole::Claim) => restricted,
            (Strategy::Restricted { unrestricted, .. }, LawRole::Secondary) => unrestricted,
        }
    }
}

/// Which law a witness violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LawRole {
    /// The claim itself (qualified or restricted form where applicable).
    Claim,
    /// The strict form for defined-cell claims, the unrestricted form for
    /// restricted claims.
    Secondary,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub role: LawRole,
    pub tier: &'static str,
    pub case: Case,
    pub failure: Failure,
}

impl Witness {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "violates": self.role,
            "tier": self.tier,
            "detail": self.failure.detail,
            "case": self.case.to_json(),
        });
        if let Some((i, t)) = self.failure.cell {
            v["cell"] = json!({ "parameter": i, "object": t });
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Verified,
    Falsified(Witness),
    HoldsOnDefinedCells(Witness),
    HoldsWithRestriction(Witness),
    /// No case satisfied the premise.
    Undecided,
}

impl Outcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Outcome::Falsified(w)
            | Outcome::HoldsOnDefinedCells(w)
            | Outcome::HoldsWithRestriction(w) => Some(w),
            _ => None,
        }
    }

    pub fn matches(&self, expected: Expected) -> bool {
        matches!(
            (self, expected),
            (Outcome::Verified, Expected::Verified)
                | (Outcome::Falsified(_), Expected::Falsifiable)
                | (
                    Outcome::HoldsOnDefinedCells(_),
                    Expected::HoldsOnDefinedCells
                )
                | (
                    Outcome::HoldsWithRestriction(_),
                    Expected::HoldsWithRestriction(_)
                )
        )
    }

    pub fn label(&self, spec: &PropositionSpec) -> String {
        match self {
            Outcome::Verified => "VERIFIED".into(),
            Outcome::Falsified(_) => "FALSIFIED".into(),
            Outcome::HoldsOnDefinedCells(_) => "HOLDS-ON-DEFINED-CELLS".into(),
            Outcome::HoldsWithRestriction(_) => format!(
                "HOLDS-WITH-RESTRICTION({})",
                spec.restriction().unwrap_or("see witness")
            ),
            Outcome::Undecided => "UNDECIDED".into(),
        }
    }
}

/// Search effort for the claim law.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Trials {
    pub fixture: usize,
    pub exhaustive: usize,
    pub random: usize,
    /// Cases where the premise applied.
    pub non_vacuous: usize,
    pub bounds: String,
}

impl Trials {
    pub fn total(&self) -> usize {
        self.fixture + self.exhaustive + self.random
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropositionReport {
    pub id: &'static str,
    pub expected: Expected,
    pub outcome: Outcome,
    pub trials: Trials,
}

impl PropositionReport {
    pub fn matched(&self) -> bool {
        self.outcome.matches(self.expected)
    }
}

/// One line of the errata/verification report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportEntry {
    pub id: String,
    pub anchor_quote: String,
    pub expected: String,
    pub outcome: String,
    pub matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub trials: Trials,
}

fn entry(spec: &PropositionSpec, report: &PropositionReport) -> ReportEntry {
    ReportEntry {
        id: spec.id.to_string(),
        anchor_quote: spec.anchor.to_string(),
        expected: spec.expected.to_string(),
        outcome: report.outcome.label(spec),
        matched: report.matched(),
        witness: report.outcome.witness().map(Witness::to_json),
        trials: report.trials.clone(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub seed: u64,
    pub budget: usize,
    pub entries: Vec<ReportEntry>,
}

impl RunReport {
    pub fn surprises(&self) -> Vec<&ReportEntry> {
        self.entries.iter().filter(|e| !e.matched).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.entries).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn entry(&self, id: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

/// Checks every catalog entry, then appends the printed-table errata.
pub fn run_all(seed: u64, budget: usize) -> RunReport {
    let specs = catalog();
    let reports = engine::check_many(&specs, seed, budget);
    let mut entries: Vec<ReportEntry> = specs
        .iter()
        .zip(&reports)
        .map(|(s, r)| entry(s, r))
        .collect();
    entries.extend(errata::entries());
    RunReport {
        seed,
        budget,
        entries,
    }
}

pub fn find(id: &str) -> Option<PropositionSpec> {
    catalog().into_iter().find(|s| s.id == id)
}

/// Re-evaluates a witness; true when it still violates its law.
pub fn replay(spec: &PropositionSpec, role: LawRole, case: &Case) -> bool {
    matches!((spec.law(role))(case), Verdict::Violated(_))
}

/// Replays a witness object as written in a report.
pub fn replay_json(id: &str, witness: &Value) -> Result<bool> {
    let spec = find(id).ok_or_else(|| Error::Malformed(format!("unknown claim `{id}`")))?;
    let role: LawRole = serde_json::from_value(witness["violates"].clone())
        .map_err(|e| Error::Malformed(e.to_string()))?;
    let case = Case::from_json(&witness["case"])?;
    Ok(replay(&spec, role, &case))
}

impl<'de> serde::Deserialize<'de> for LawRole {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match String::deserialize(d)?.as_str() {
            "claim" => Ok(LawRole::Claim),
            "secondary" => Ok(LawRole::Secondary),
            other => Err(serde::de::Error::custom(format!(
                "unknown law role `{other}`"
            ))),
        }
    }
}
