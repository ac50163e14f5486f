//! Convexity, concavity, normalization and the fuzzy-soft-number predicate.
//!
//! Convexity is discrete quasiconcavity over object positions: for every
//! triple `t1 < t < t2`, `μ(t) >= min(μ(t1), μ(t2))`. It must hold on every
//! parameter row and on the intersection profile. Concavity is the dual
//! (`μ(t) <= max(μ(t1), μ(t2))`). Failures carry the lexicographically first
//! violating `(row, t1, t, t2)`, with the profile checked after all rows.
//!
//! Upper semi-continuity and compact support are automatic on a finite
//! discrete universe; they are reported as [`FINITE_UNIVERSE_NOTE`] and never
//! computed.

use std::fmt;

use serde::Serialize;

use crate::set::{FuzzySoftSet, EQ_TOL};

pub const FINITE_UNIVERSE_NOTE: &str = "trivially satisfied (finite universe)";

/// Which part of the grid a witness refers to.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Subject {
    Row { index: usize, label: String },
    Profile,
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Row { label, .. } => f.write_str(label),
            Subject::Profile => f.write_str("∩-profile"),
        }
    }
}

impl Subject {
    fn values(&self, set: &FuzzySoftSet) -> Vec<f64> {
        match self {
            Subject::Row { index, .. } => set.row(*index).to_vec(),
            Subject::Profile => set.profile().values,
        }
    }
}

/// Evidence that a predicate fails. Object indices are 0-based.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// `values[1]` at `t` breaks the bound set by `values[0]` at `t1` and
    /// `values[2]` at `t2`.
    Triple {
        subject: Subject,
        t1: usize,
        t: usize,
        t2: usize,
        values: [f64; 3],
    },
    /// The row (or profile) never reaches 1; `max` is its largest value.
    NoPeak { subject: Subject, max: f64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Convex,
    Concave,
}

impl Violation {
    /// Re-evaluates the witness against `set`; true when it still shows a
    /// violation of `shape` (ignored for peak witnesses).
    pub fn reproduces(&self, set: &FuzzySoftSet, shape: Shape) -> bool {
        match self {
            Violation::Triple {
                subject, t1, t, t2, ..
            } => {
                let v = subject.values(set);
                if *t2 >= v.len() || !(t1 < t && t < t2) {
                    return false;
                }
                match shape {
                    Shape::Convex => v[*t] < v[*t1].min(v[*t2]) - EQ_TOL,
                    Shape::Concave => v[*t] > v[*t1].max(v[*t2]) + EQ_TOL,
                }
            }
            Violation::NoPeak { subject, .. } => {
                subject.values(set).iter().all(|&x| x < 1.0 - EQ_TOL)
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Triple {
                subject,
                t1,
                t,
                t2,
                values,
            } => write!(
                f,
                "{subject} at (h{}, h{}, h{}): {:.4} vs ends {:.4}, {:.4}",
                t1 + 1,
                t + 1,
                t2 + 1,
                values[1],
                values[0],
                values[2]
            ),
            Violation::NoPeak { subject, max } => {
                write!(f, "{subject} never reaches 1 (max {max:.4})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationResult {
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Violation>,
}

impl ClassificationResult {
    fn from_witness(witness: Option<Violation>) -> Self {
        ClassificationResult {
            verdict: witness.is_none(),
            witness,
        }
    }
}

/// First `(t1, t, t2)` with `row[t] < min(row[t1], row[t2])`.
pub fn quasiconcave_violation(row: &[f64]) -> Option<(usize, usize, usize)> {
    triple_scan(row, |mid, a, b| mid < a.min(b) - EQ_TOL)
}

/// First `(t1, t, t2)` with `row[t] > max(row[t1], row[t2])`.
pub fn quasiconvex_violation(row: &[f64]) -> Option<(usize, usize, usize)> {
    triple_scan(row, |mid, a, b| mid > a.max(b) + EQ_TOL)
}

fn triple_scan(
    row: &[f64],
    violates: impl Fn(f64, f64, f64) -> bool,
) -> Option<(usize, usize, usize)> {
    let m = row.len();
    for t1 in 0..m {
        for t in t1 + 1..m {
            for t2 in t + 1..m {
                if violates(row[t], row[t1], row[t2]) {
                    return Some((t1, t, t2));
                }
            }
        }
    }
    None
}

fn shape_witness(set: &FuzzySoftSet, shape: Shape) -> Option<Violation> {
    let scan = match shape {
        Shape::Convex => quasiconcave_violation,
        Shape::Concave => quasiconvex_violation,
    };
    let triple = |subject: Subject, v: &[f64]| {
        scan(v).map(|(t1, t, t2)| Violation::Triple {
            subject,
            t1,
            t,
            t2,
            values: [v[t1], v[t], v[t2]],
        })
    };
    for (i, row) in set.rows().enumerate() {
        let subject = Subject::Row {
            index: i,
            label: set.parameters()[i].clone(),
        };
        if let Some(w) = triple(subject, row) {
            return Some(w);
        }
    }
    triple(Subject::Profile, &set.profile().values)
}

pub fn is_convex(set: &FuzzySoftSet) -> ClassificationResult {
    ClassificationResult::from_witness(shape_witness(set, Shape::Convex))
}

pub fn is_concave(set: &FuzzySoftSet) -> ClassificationResult {
    ClassificationResult::from_witness(shape_witness(set, Shape::Concave))
}

fn peak_witness(subject: Subject, values: &[f64]) -> Option<Violation> {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (max < 1.0 - EQ_TOL).then_some(Violation::NoPeak { subject, max })
}

/// Every row reaches 1 and the intersection profile reaches 1.
pub fn is_normalized(set: &FuzzySoftSet) -> ClassificationResult {
    let witness = set
        .rows()
        .enumerate()
        .find_map(|(i, row)| {
            let subject = Subject::Row {
                index: i,
                label: set.parameters()[i].clone(),
            };
            peak_witness(subject, row)
        })
        .or_else(|| peak_witness(Subject::Profile, &set.profile().values));
    ClassificationResult::from_witness(witness)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumberClassification {
    pub verdict: bool,
    pub convex: ClassificationResult,
    pub normalized: ClassificationResult,
    pub upper_semicontinuous: &'static str,
    pub compact_support: &'static str,
    /// Objects where every row equals 1; non-empty whenever `verdict` holds.
    pub peak: Vec<usize>,
}

impl NumberClassification {
    /// First failing witness, convexity before normalization.
    pub fn witness(&self) -> Option<&Violation> {
        self.convex
            .witness
            .as_ref()
            .or(self.normalized.witness.as_ref())
    }
}

pub fn is_fuzzy_soft_number(set: &FuzzySoftSet) -> NumberClassification {
    let convex = is_convex(set);
    let normalized = is_normalized(set);
    NumberClassification {
        verdict: convex.verdict && normalized.verdict,
        convex,
        normalized,
        upper_semicontinuous: FINITE_UNIVERSE_NOTE,
        compact_support: FINITE_UNIVERSE_NOTE,
        peak: set.profile().peak(),
    }
}
