//! Fuzzy soft sets over a finite universe.
//!
//! A [`FuzzySoftSet`] is a grid with one row per parameter and one column per
//! object; cell `(i, t)` holds the membership of object `t` under parameter
//! `i`. Object order is significant: convexity is judged over column
//! positions, so no operation here ever reorders rows or columns.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Two memberships are considered equal when they differ by at most this.
pub const EQ_TOL: f64 = 1e-9;

/// Tolerance used when comparing against two-decimal printed tables.
pub const PRINT_TOL: f64 = 5e-3;

/// Ordered, duplicate-free list of labels shared cheaply between sets.
pub type Labels = Arc<[String]>;

/// A single membership grade in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Membership(f64);

impl Membership {
    pub const ZERO: Membership = Membership(0.0);
    pub const ONE: Membership = Membership(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(Membership(value))
        } else {
            Err(Error::ValueOutOfRange(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Membership {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Membership::new(value)
    }
}

/// Builds `prefix1 .. prefixN`.
pub fn numbered_labels(prefix: &str, count: usize) -> Labels {
    (1..=count).map(|k| format!("{prefix}{k}")).collect()
}

fn check_unique(kind: &'static str, labels: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for label in labels {
        if !seen.insert(label.as_str()) {
            return Err(Error::DuplicateLabel {
                kind,
                label: label.clone(),
            });
        }
    }
    Ok(())
}

fn same_labels(a: &Labels, b: &Labels) -> bool {
    Arc::ptr_eq(a, b) || a[..] == b[..]
}

#[derive(Clone, Debug, PartialEq)]
pub struct FuzzySoftSet {
    universe: Labels,
    parameters: Labels,
    // row-major, parameters × universe
    cells: Vec<f64>,
}

impl FuzzySoftSet {
    /// Validating constructor: labels must be unique and every row must have
    /// one membership in `[0, 1]` per object.
    pub fn new(
        universe: impl Into<Labels>,
        parameters: impl Into<Labels>,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let universe = universe.into();
        let parameters = parameters.into();
        if universe.is_empty() {
            return Err(Error::Empty("object"));
        }
        if parameters.is_empty() {
            return Err(Error::Empty("parameter"));
        }
        check_unique("object", &universe)?;
        check_unique("parameter", &parameters)?;
        if rows.len() != parameters.len() {
            return Err(Error::RowCount {
                expected: parameters.len(),
                found: rows.len(),
            });
        }
        let m = universe.len();
        let mut cells = Vec::with_capacity(m * parameters.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != m {
                return Err(Error::RaggedRow {
                    row: i,
                    expected: m,
                    found: row.len(),
                });
            }
            for (t, v) in row.into_iter().enumerate() {
                if !(0.0..=1.0).contains(&v) {
                    return Err(Error::MembershipOutOfRange {
                        parameter: parameters[i].clone(),
                        object: universe[t].clone(),
                        value: v,
                    });
                }
                cells.push(v);
            }
        }
        Ok(FuzzySoftSet {
            universe,
            parameters,
            cells,
        })
    }

    /// Grid with labels `h1..hm` and `e1..en`.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        Self::new(numbered_labels("h", m), numbered_labels("e", n), rows)
    }

    /// Builds a set over the given labels from a cell function. Values are
    /// checked like [`FuzzySoftSet::new`].
    pub fn from_fn(
        universe: Labels,
        parameters: Labels,
        mut f: impl FnMut(usize, usize) -> f64,
    ) -> Result<Self> {
        let rows = (0..parameters.len())
            .map(|i| (0..universe.len()).map(|t| f(i, t)).collect())
            .collect();
        Self::new(universe, parameters, rows)
    }

    /// Crate-internal constructor for grids already known to be valid.
    pub(crate) fn from_parts(universe: Labels, parameters: Labels, cells: Vec<f64>) -> Self {
        debug_assert_eq!(cells.len(), universe.len() * parameters.len());
        debug_assert!(cells.iter().all(|v| (0.0..=1.0).contains(v)));
        FuzzySoftSet {
            universe,
            parameters,
            cells,
        }
    }

    /// The null set: every membership is 0.
    pub fn zeros_like(other: &FuzzySoftSet) -> Self {
        Self::constant_like(other, 0.0)
    }

    /// The absolute set: every membership is 1.
    pub fn ones_like(other: &FuzzySoftSet) -> Self {
        Self::constant_like(other, 1.0)
    }

    fn constant_like(other: &FuzzySoftSet, v: f64) -> Self {
        FuzzySoftSet::from_parts(
            other.universe.clone(),
            other.parameters.clone(),
            vec![v; other.cells.len()],
        )
    }

    pub fn universe(&self) -> &Labels {
        &self.universe
    }

    pub fn parameters(&self) -> &Labels {
        &self.parameters
    }

    pub fn n_parameters(&self) -> usize {
        self.parameters.len()
    }

    pub fn n_objects(&self) -> usize {
        self.universe.len()
    }

    pub fn value(&self, parameter: usize, object: usize) -> f64 {
        self.cells[parameter * self.universe.len() + object]
    }

    pub fn row(&self, parameter: usize) -> &[f64] {
        let m = self.universe.len();
        &self.cells[parameter * m..(parameter + 1) * m]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.cells.chunks(self.universe.len())
    }

    pub fn cells(&self) -> &[f64] {
        &self.cells
    }

    pub fn parameter_index(&self, label: &str) -> Option<usize> {
        self.parameters.iter().position(|p| p == label)
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.universe.iter().position(|h| h == label)
    }

    /// Errors unless `other` has the same universe and parameters in the
    /// same order.
    pub fn check_compatible(&self, other: &FuzzySoftSet) -> Result<()> {
        if !same_labels(&self.universe, &other.universe) {
            return Err(Error::LabelMismatch(format!(
                "universes differ: [{}] vs [{}]",
                self.universe.join(", "),
                other.universe.join(", ")
            )));
        }
        if !same_labels(&self.parameters, &other.parameters) {
            return Err(Error::LabelMismatch(format!(
                "parameters differ: [{}] vs [{}]",
                self.parameters.join(", "),
                other.parameters.join(", ")
            )));
        }
        Ok(())
    }

    pub(crate) fn zip_with(
        &self,
        other: &FuzzySoftSet,
        f: impl Fn(f64, f64) -> f64,
    ) -> Result<FuzzySoftSet> {
        self.check_compatible(other)?;
        let cells = self
            .cells
            .iter()
            .zip(&other.cells)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(FuzzySoftSet::from_parts(
            self.universe.clone(),
            self.parameters.clone(),
            cells,
        ))
    }

    /// Cell-wise maximum.
    pub fn union(&self, other: &FuzzySoftSet) -> Result<FuzzySoftSet> {
        self.zip_with(other, f64::max)
    }

    /// Cell-wise minimum.
    pub fn intersection(&self, other: &FuzzySoftSet) -> Result<FuzzySoftSet> {
        self.zip_with(other, f64::min)
    }

    /// Cell-wise `1 - μ`.
    pub fn complement(&self) -> FuzzySoftSet {
        FuzzySoftSet::from_parts(
            self.universe.clone(),
            self.parameters.clone(),
            self.cells.iter().map(|v| 1.0 - v).collect(),
        )
    }

    /// True iff every cell of `self` is at most the matching cell of `other`
    /// (up to [`EQ_TOL`]).
    pub fn subset_of(&self, other: &FuzzySoftSet) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self
            .cells
            .iter()
            .zip(&other.cells)
            .all(|(a, b)| *a <= b + EQ_TOL))
    }

    /// Per-object minimum across all parameter rows.
    pub fn profile(&self) -> ObjectProfile {
        let mut values = self.row(0).to_vec();
        for row in self.rows().skip(1) {
            for (acc, v) in values.iter_mut().zip(row) {
                *acc = acc.min(*v);
            }
        }
        ObjectProfile { values }
    }

    /// Per-object maximum across all parameter rows.
    pub fn max_profile(&self) -> Vec<f64> {
        let mut values = self.row(0).to_vec();
        for row in self.rows().skip(1) {
            for (acc, v) in values.iter_mut().zip(row) {
                *acc = acc.max(*v);
            }
        }
        values
    }

    pub fn soft_point(&self, parameter: &str) -> Result<SoftPoint> {
        let i = self
            .parameter_index(parameter)
            .ok_or_else(|| Error::UnknownParameter(parameter.to_string()))?;
        Ok(self.soft_point_at(i))
    }

    pub fn soft_point_at(&self, i: usize) -> SoftPoint {
        SoftPoint {
            parameter: self.parameters[i].clone(),
            row: self.row(i).to_vec(),
        }
    }

    /// Same labels and every cell within [`EQ_TOL`].
    pub fn approx_eq(&self, other: &FuzzySoftSet) -> bool {
        self.approx_eq_within(other, EQ_TOL)
    }

    pub fn approx_eq_within(&self, other: &FuzzySoftSet, tol: f64) -> bool {
        self.check_compatible(other).is_ok()
            && self
                .cells
                .iter()
                .zip(&other.cells)
                .all(|(a, b)| (a - b).abs() <= tol)
    }

    /// Copy restricted to the given row and column indices, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> FuzzySoftSet {
        let universe: Labels = cols.iter().map(|&t| self.universe[t].clone()).collect();
        let parameters: Labels = rows.iter().map(|&i| self.parameters[i].clone()).collect();
        let cells = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&t| (i, t)))
            .map(|(i, t)| self.value(i, t))
            .collect();
        FuzzySoftSet::from_parts(universe, parameters, cells)
    }
}

impl fmt::Display for FuzzySoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}=[", self.parameters[i])?;
            for (t, v) in row.iter().enumerate() {
                if t > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v:.2}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// One parameter row of a set, e.g. `e1(F)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SoftPoint {
    pub parameter: String,
    pub row: Vec<f64>,
}

/// Column-wise minimum of a set's grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ObjectProfile {
    pub values: Vec<f64>,
}

impl ObjectProfile {
    /// Indices where the profile reaches 1 (within [`EQ_TOL`]).
    pub fn peak(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|&(_, v)| *v >= 1.0 - EQ_TOL)
            .map(|(t, _)| t)
            .collect()
    }
}
