//! The four arithmetic operations.
//!
//! | op  | cell value                 | undefined when      |
//! |-----|----------------------------|---------------------|
//! | add | `a + b - a·b`              | never               |
//! | sub | `a·b`                      | never               |
//! | mul | `a·b / max(a, b)`          | `max(a, b) = 0`     |
//! | div | `a / max(a, b)`            | `max(a, b) = 0`     |
//!
//! Undefined cells are tracked in an explicit mask rather than reported as
//! errors, so identities can be checked on the cells where both sides exist.
//! `mul` deliberately evaluates the quotient; that it equals `min(a, b)` is a
//! property the test suite checks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::{FuzzySoftSet, Labels, EQ_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl ArithOp {
    pub const ALL: [ArithOp; 4] = [ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div];

    /// Cell rule; `None` marks a 0/0 cell.
    pub fn cell(self, a: f64, b: f64) -> Option<f64> {
        match self {
            ArithOp::Add => Some(a + b - a * b),
            ArithOp::Sub => Some(a * b),
            ArithOp::Mul => quotient(a * b, a.max(b)),
            ArithOp::Div => quotient(a, a.max(b)),
        }
    }
}

fn quotient(num: f64, den: f64) -> Option<f64> {
    if den == 0.0 {
        return None;
    }
    let v = num / den;
    // analytically in [0, 1]; anything further out is a bug, not rounding
    debug_assert!(
        (-EQ_TOL..=1.0 + EQ_TOL).contains(&v),
        "quotient {v} out of range"
    );
    Some(v.clamp(0.0, 1.0))
}

impl fmt::Display for ArithOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArithOp::Add => "add",
            ArithOp::Sub => "sub",
            ArithOp::Mul => "mul",
            ArithOp::Div => "div",
        })
    }
}

impl FromStr for ArithOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "add" => Ok(ArithOp::Add),
            "sub" => Ok(ArithOp::Sub),
            "mul" => Ok(ArithOp::Mul),
            "div" => Ok(ArithOp::Div),
            other => Err(format!(
                "unknown operation `{other}` (expected add|sub|mul|div)"
            )),
        }
    }
}

/// A membership grid where some cells may be undefined.
#[derive(Clone, Debug, PartialEq)]
pub struct ArithResult {
    universe: Labels,
    parameters: Labels,
    cells: Vec<Option<f64>>,
}

/// First cell where two partial grids disagree.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellMismatch {
    pub parameter: usize,
    pub object: usize,
    pub left: Option<f64>,
    pub right: Option<f64>,
}

impl fmt::Display for CellMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<f64>| v.map_or("undefined".to_string(), |v| format!("{v:.6}"));
        write!(
            f,
            "cell (e{}, h{}): {} vs {}",
            self.parameter + 1,
            self.object + 1,
            show(self.left),
            show(self.right)
        )
    }
}

impl ArithResult {
    pub fn new(
        universe: impl Into<Labels>,
        parameters: impl Into<Labels>,
        rows: Vec<Vec<Option<f64>>>,
    ) -> Result<Self> {
        let universe = universe.into();
        let parameters = parameters.into();
        // validate labels and ranges through the set constructor
        FuzzySoftSet::new(
            universe.clone(),
            parameters.clone(),
            rows.iter()
                .map(|r| r.iter().map(|v| v.unwrap_or(0.0)).collect())
                .collect(),
        )?;
        Ok(ArithResult {
            universe,
            parameters,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn universe(&self) -> &Labels {
        &self.universe
    }

    pub fn parameters(&self) -> &Labels {
        &self.parameters
    }

    pub fn value(&self, parameter: usize, object: usize) -> Option<f64> {
        self.cells[parameter * self.universe.len() + object]
    }

    pub fn is_defined(&self, parameter: usize, object: usize) -> bool {
        self.value(parameter, object).is_some()
    }

    pub fn is_fully_defined(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    pub fn undefined_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_none()).count()
    }

    /// Row-major `(parameter, object)` positions of undefined cells.
    pub fn undefined_cells(&self) -> Vec<(usize, usize)> {
        let m = self.universe.len();
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(k, _)| (k / m, k % m))
            .collect()
    }

    pub fn mask(&self) -> Vec<Vec<bool>> {
        self.cells
            .chunks(self.universe.len())
            .map(|r| r.iter().map(Option::is_some).collect())
            .collect()
    }

    fn check_compatible(&self, other: &ArithResult) -> Result<()> {
        if self.universe[..] != other.universe[..] || self.parameters[..] != other.parameters[..] {
            return Err(Error::LabelMismatch(
                "arithmetic results are over different labels".into(),
            ));
        }
        Ok(())
    }

    fn zip(&self, other: &ArithResult, f: impl Fn(f64, f64) -> Option<f64>) -> Result<ArithResult> {
        self.check_compatible(other)?;
        let cells = self
            .cells
            .iter()
            .zip(&other.cells)
            .map(|(a, b)| match (a, b) {
                (Some(a), Some(b)) => f(*a, *b),
                _ => None,
            })
            .collect();
        Ok(ArithResult {
            universe: self.universe.clone(),
            parameters: self.parameters.clone(),
            cells,
        })
    }

    /// Cell-wise max; undefined wherever either side is.
    pub fn union(&self, other: &ArithResult) -> Result<ArithResult> {
        self.zip(other, |a, b| Some(a.max(b)))
    }

    /// Cell-wise min; undefined wherever either side is.
    pub fn intersection(&self, other: &ArithResult) -> Result<ArithResult> {
        self.zip(other, |a, b| Some(a.min(b)))
    }

    /// Strips the mask. Fails on the first undefined cell.
    pub fn to_fuzzy_soft_set(&self) -> Result<FuzzySoftSet> {
        let m = self.universe.len();
        let mut cells = Vec::with_capacity(self.cells.len());
        for (k, c) in self.cells.iter().enumerate() {
            match c {
                Some(v) => cells.push(*v),
                None => {
                    return Err(Error::UndefinedCell {
                        parameter: self.parameters[k / m].clone(),
                        object: self.universe[k % m].clone(),
                    })
                }
            }
        }
        Ok(FuzzySoftSet::from_parts(
            self.universe.clone(),
            self.parameters.clone(),
            cells,
        ))
    }

    /// First cell where both sides are defined and differ by more than `tol`.
    pub fn mismatch_on_defined(&self, other: &ArithResult, tol: f64) -> Option<CellMismatch> {
        self.first_mismatch(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => (a - b).abs() > tol,
            _ => false,
        })
    }

    /// First cell where the masks differ or both values differ by more
    /// than `tol`.
    pub fn mismatch(&self, other: &ArithResult, tol: f64) -> Option<CellMismatch> {
        self.first_mismatch(other, |a, b| match (a, b) {
            (Some(a), Some(b)) => (a - b).abs() > tol,
            (None, None) => false,
            _ => true,
        })
    }

    fn first_mismatch(
        &self,
        other: &ArithResult,
        differs: impl Fn(Option<f64>, Option<f64>) -> bool,
    ) -> Option<CellMismatch> {
        if self.check_compatible(other).is_err() {
            return Some(CellMismatch {
                parameter: 0,
                object: 0,
                left: None,
                right: None,
            });
        }
        let m = self.universe.len();
        self.cells
            .iter()
            .zip(&other.cells)
            .position(|(a, b)| differs(*a, *b))
            .map(|k| CellMismatch {
                parameter: k / m,
                object: k % m,
                left: self.cells[k],
                right: other.cells[k],
            })
    }
}

impl From<&FuzzySoftSet> for ArithResult {
    fn from(set: &FuzzySoftSet) -> Self {
        ArithResult {
            universe: set.universe().clone(),
            parameters: set.parameters().clone(),
            cells: set.cells().iter().map(|&v| Some(v)).collect(),
        }
    }
}

impl From<FuzzySoftSet> for ArithResult {
    fn from(set: FuzzySoftSet) -> Self {
        ArithResult::from(&set)
    }
}

/// Applies `op` to two partial grids; undefined inputs give undefined
/// outputs.
pub fn combine(op: ArithOp, left: &ArithResult, right: &ArithResult) -> Result<ArithResult> {
    left.zip(right, |a, b| op.cell(a, b))
}

pub fn apply(op: ArithOp, f: &FuzzySoftSet, g: &FuzzySoftSet) -> Result<ArithResult> {
    f.check_compatible(g)?;
    combine(op, &f.into(), &g.into())
}

/// Probabilistic sum `a + b - ab`.
pub fn add(f: &FuzzySoftSet, g: &FuzzySoftSet) -> Result<ArithResult> {
    apply(ArithOp::Add, f, g)
}

/// Product `ab`.
pub fn sub(f: &FuzzySoftSet, g: &FuzzySoftSet) -> Result<ArithResult> {
    apply(ArithOp::Sub, f, g)
}

/// `ab / max(a, b)`; undefined at 0/0.
pub fn mul(f: &FuzzySoftSet, g: &FuzzySoftSet) -> Result<ArithResult> {
    apply(ArithOp::Mul, f, g)
}

/// `a / max(a, b)`; undefined at 0/0.
pub fn div(f: &FuzzySoftSet, g: &FuzzySoftSet) -> Result<ArithResult> {
    apply(ArithOp::Div, f, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::set::PRINT_TOL;

    fn grid(rows: &[&[f64]]) -> FuzzySoftSet {
        FuzzySoftSet::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn row(r: &ArithResult, i: usize) -> Vec<Option<f64>> {
        (0..r.universe().len()).map(|t| r.value(i, t)).collect()
    }

    fn assert_row(r: &ArithResult, i: usize, want: &[f64], tol: f64) {
        for (t, (got, want)) in row(r, i).iter().zip(want).enumerate() {
            let got = got.unwrap_or_else(|| panic!("cell ({i},{t}) undefined"));
            assert!((got - want).abs() <= tol, "cell ({i},{t}): {got} vs {want}");
        }
    }

    #[test]
    fn add_matches_worked_rows() {
        let r = add(&fixtures::f_a(), &fixtures::g_a()).unwrap();
        assert!(r.is_fully_defined());
        assert_row(&r, 0, &[0.10, 0.92, 1.00, 0.92, 0.10], PRINT_TOL);
        // 0.0 + 0.2 - 0 at (e2, h5); the printed 0.10 is wrong
        assert_row(&r, 1, &[0.37, 0.97, 1.00, 0.96, 0.20], PRINT_TOL);
        let f = fixtures::f_a();
        let plus_null = add(&f, &FuzzySoftSet::zeros_like(&f)).unwrap();
        assert!(plus_null.to_fuzzy_soft_set().unwrap().approx_eq(&f));
        assert!((ArithOp::Add.cell(0.6, 0.8).unwrap() - 0.92).abs() <= EQ_TOL);
    }

    #[test]
    fn sub_is_product() {
        let r = sub(&fixtures::f_a(), &fixtures::g_a()).unwrap();
        assert_row(&r, 0, &[0.00, 0.48, 1.00, 0.48, 0.00], PRINT_TOL);
        assert_row(&r, 1, &[0.03, 0.63, 1.00, 0.64, 0.00], PRINT_TOL);
        let f = fixtures::f_a();
        let r = sub(&f, &FuzzySoftSet::ones_like(&f)).unwrap();
        assert_eq!(r.to_fuzzy_soft_set().unwrap(), f);
    }

    #[test]
    fn mul_quotient_form() {
        let r = mul(&fixtures::f_a(), &fixtures::g_a()).unwrap();
        assert!(r.is_fully_defined());
        assert_row(&r, 0, &[0.00, 0.60, 1.00, 0.60, 0.00], PRINT_TOL);
        assert_row(&r, 1, &[0.10, 0.70, 1.00, 0.80, 0.00], PRINT_TOL);

        let z = grid(&[&[0.0, 0.5]]);
        let r = mul(&z, &z).unwrap();
        assert_eq!(row(&r, 0), vec![None, Some(0.5)]);

        let f = fixtures::f_a();
        let r = mul(&f, &FuzzySoftSet::ones_like(&f)).unwrap();
        assert!(r.is_fully_defined());
        assert!(r.to_fuzzy_soft_set().unwrap().approx_eq(&f));
    }

    #[test]
    fn div_rows() {
        let r = div(&fixtures::f_a(), &fixtures::g_a()).unwrap();
        assert_row(&r, 0, &[0.00, 0.75, 1.00, 1.00, 1.00], PRINT_TOL);
        // 0.1/0.3 and 0.0/0.2 by the formula
        assert_row(&r, 1, &[1.0 / 3.0, 0.7 / 0.9, 1.00, 1.00, 0.00], EQ_TOL);

        let f = fixtures::f_a();
        let r = div(&f, &f).unwrap();
        for i in 0..2 {
            for t in 0..5 {
                match r.value(i, t) {
                    Some(v) => assert_eq!(v, 1.0),
                    None => assert_eq!(f.value(i, t), 0.0),
                }
            }
        }
        assert_eq!(r.undefined_cells(), vec![(0, 0), (1, 4)]);
    }

    #[test]
    fn to_fuzzy_soft_set_reports_first_undefined_cell() {
        let f = fixtures::f_a();
        let g = fixtures::g_a();
        assert!(add(&f, &g).unwrap().to_fuzzy_soft_set().is_ok());
        let z = FuzzySoftSet::zeros_like(&f);
        assert_eq!(
            mul(&z, &z).unwrap().to_fuzzy_soft_set(),
            Err(Error::UndefinedCell {
                parameter: "e1".into(),
                object: "h1".into()
            })
        );
        // no cell of F_A, G_A is 0 on both sides
        let q = div(&f, &g).unwrap();
        assert!(q.is_fully_defined());
        assert!(q.to_fuzzy_soft_set().is_ok());
    }

    #[test]
    fn mismatched_labels_are_rejected() {
        let a = grid(&[&[0.1, 0.2]]);
        let b = grid(&[&[0.1]]);
        for op in ArithOp::ALL {
            assert!(matches!(apply(op, &a, &b), Err(Error::LabelMismatch(_))));
        }
    }

    #[test]
    fn partial_lattice_propagates_undefined() {
        let a = ArithResult::new(
            vec!["h1".to_string(), "h2".to_string()],
            vec!["e1".to_string()],
            vec![vec![None, Some(0.4)]],
        )
        .unwrap();
        let b: ArithResult = grid(&[&[0.3, 0.6]]).into();
        let u = a.union(&b).unwrap();
        assert_eq!(row(&u, 0), vec![None, Some(0.6)]);
        assert!(a.mismatch_on_defined(&u, EQ_TOL).is_some());
        assert_eq!(a.mismatch(&a, EQ_TOL), None);
    }

    #[test]
    fn op_names_parse() {
        for op in ArithOp::ALL {
            assert_eq!(op.to_string().parse::<ArithOp>().unwrap(), op);
        }
        assert!("pow".parse::<ArithOp>().is_err());
    }
}
