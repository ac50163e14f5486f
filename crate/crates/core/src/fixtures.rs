//! The named worked-example sets, mappings and printed result tables.
//!
//! Universes are `h1..hm` (source) or `k1..k5` (mapping target); parameters
//! are `e1..en` or `e1'`, `e2'`.

use std::collections::BTreeMap;

use crate::analysis::MappingSpec;
use crate::set::{numbered_labels, FuzzySoftSet, Labels};

fn set(rows: &[&[f64]]) -> FuzzySoftSet {
    FuzzySoftSet::from_rows(rows.iter().map(|r| r.to_vec()).collect())
        .expect("fixture grids are valid")
}

fn target_universe() -> Labels {
    numbered_labels("k", 5)
}

fn target_parameters() -> Labels {
    vec!["e1'".to_string(), "e2'".to_string()].into()
}

fn target_set(rows: &[&[f64]]) -> FuzzySoftSet {
    FuzzySoftSet::new(
        target_universe(),
        target_parameters(),
        rows.iter().map(|r| r.to_vec()).collect(),
    )
    .expect("fixture grids are valid")
}

/// Convex example.
pub fn p_a() -> FuzzySoftSet {
    set(&[&[0.1, 0.6, 1.0, 0.8, 0.2], &[0.3, 0.9, 1.0, 0.7, 0.2]])
}

/// Concave example.
pub fn n_a() -> FuzzySoftSet {
    set(&[&[0.9, 0.4, 0.0, 0.2, 0.8], &[0.7, 0.1, 0.0, 0.3, 0.8]])
}

/// Normalized example over three objects.
pub fn k_a() -> FuzzySoftSet {
    set(&[&[0.2, 1.0, 0.3], &[0.1, 1.0, 0.2]])
}

pub fn f_a() -> FuzzySoftSet {
    set(&[&[0.0, 0.6, 1.0, 0.8, 0.1], &[0.1, 0.7, 1.0, 0.8, 0.0]])
}

pub fn g_a() -> FuzzySoftSet {
    set(&[&[0.1, 0.8, 1.0, 0.6, 0.0], &[0.3, 0.9, 1.0, 0.8, 0.2]])
}

/// Top of the distance-monotonicity chain `H' ⊆ M ⊆ L`.
pub fn l_a() -> FuzzySoftSet {
    set(&[&[0.2, 0.8, 1.0, 0.7, 0.1], &[0.3, 0.9, 1.0, 0.7, 0.2]])
}

pub fn m_a() -> FuzzySoftSet {
    set(&[&[0.1, 0.8, 1.0, 0.6, 0.0], &[0.1, 0.7, 1.0, 0.7, 0.0]])
}

/// Bottom of the chain; not the same set as [`h_a`].
pub fn h_a_prime() -> FuzzySoftSet {
    set(&[&[0.1, 0.7, 1.0, 0.6, 0.0], &[0.0, 0.7, 1.0, 0.7, 0.0]])
}

/// Three-parameter source set of the mapping example.
pub fn h_a() -> FuzzySoftSet {
    set(&[
        &[0.0, 0.6, 1.0, 0.8, 0.1],
        &[0.1, 0.7, 1.0, 0.8, 0.0],
        &[0.3, 0.9, 1.0, 0.7, 0.2],
    ])
}

/// Target-side set whose preimage is taken.
pub fn h_b_prime() -> FuzzySoftSet {
    target_set(&[&[0.2, 0.8, 1.0, 0.7, 0.1], &[0.1, 0.6, 1.0, 0.7, 0.0]])
}

pub fn q_a() -> FuzzySoftSet {
    set(&[
        &[0.3, 0.9, 1.0, 0.7, 0.2],
        &[0.1, 0.7, 1.0, 0.8, 0.0],
        &[0.0, 0.8, 1.0, 0.7, 0.0],
    ])
}

fn mapping(p: &[(&str, &str)]) -> MappingSpec {
    let p: BTreeMap<String, String> = p
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let q: BTreeMap<String, String> = [("e1", "e2'"), ("e2", "e1'"), ("e3", "e2'")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    MappingSpec::new(
        numbered_labels("h", 5),
        numbered_labels("e", 3),
        target_universe(),
        target_parameters(),
        &p,
        &q,
    )
    .expect("fixture mapping is total")
}

/// `p(h_t) = k_t`, `q = {e1: e2', e2: e1', e3: e2'}`.
pub fn map_problem_4_22() -> MappingSpec {
    mapping(&[
        ("h1", "k1"),
        ("h2", "k2"),
        ("h3", "k3"),
        ("h4", "k4"),
        ("h5", "k5"),
    ])
}

/// Same `q`, objects scrambled so the image of `H_A` stops being convex.
pub fn map_permuted() -> MappingSpec {
    mapping(&[
        ("h1", "k3"),
        ("h2", "k5"),
        ("h3", "k1"),
        ("h4", "k2"),
        ("h5", "k4"),
    ])
}

/// Every named set with the file stem it is shipped under.
pub fn named_sets() -> Vec<(&'static str, FuzzySoftSet)> {
    vec![
        ("P_A", p_a()),
        ("N_A", n_a()),
        ("K_A", k_a()),
        ("F_A", f_a()),
        ("G_A", g_a()),
        ("L_A", l_a()),
        ("M_A", m_a()),
        ("H_A_prime", h_a_prime()),
        ("H_A", h_a()),
        ("H_B_prime", h_b_prime()),
        ("Q_A", q_a()),
    ]
}

pub fn named_mappings() -> Vec<(&'static str, MappingSpec)> {
    vec![
        ("map_4_22", map_problem_4_22()),
        ("map_permuted", map_permuted()),
    ]
}

/// A result grid exactly as printed next to a worked example.
#[derive(Clone, Debug)]
pub struct PrintedTable {
    pub id: &'static str,
    /// Formula-style description of what was computed.
    pub expression: &'static str,
    pub rows: Vec<Vec<f64>>,
}

fn printed(id: &'static str, expression: &'static str, rows: &[&[f64]]) -> PrintedTable {
    PrintedTable {
        id,
        expression,
        rows: rows.iter().map(|r| r.to_vec()).collect(),
    }
}

pub fn printed_add() -> PrintedTable {
    printed(
        "X3.17.i",
        "F_A +~ G_A",
        &[
            &[0.10, 0.92, 1.00, 0.92, 0.10],
            &[0.37, 0.97, 1.00, 0.96, 0.10],
        ],
    )
}

pub fn printed_sub() -> PrintedTable {
    printed(
        "X3.17.ii",
        "F_A -~ G_A",
        &[
            &[0.00, 0.48, 1.00, 0.48, 0.00],
            &[0.03, 0.63, 1.00, 0.64, 0.00],
        ],
    )
}

pub fn printed_mul() -> PrintedTable {
    printed(
        "X3.17.iii",
        "F_A x~ G_A",
        &[
            &[0.00, 0.60, 1.00, 0.60, 0.00],
            &[0.10, 0.70, 1.00, 0.80, 0.00],
        ],
    )
}

pub fn printed_div() -> PrintedTable {
    printed(
        "X3.17.iv",
        "F_A /~ G_A",
        &[
            &[0.00, 0.75, 1.00, 1.00, 1.00],
            &[0.34, 0.78, 1.00, 1.00, 1.00],
        ],
    )
}

pub fn printed_image() -> PrintedTable {
    printed(
        "X4.22.image",
        "f(H_A)",
        &[&[0.1, 0.7, 1.0, 0.8, 0.0], &[0.3, 0.9, 1.0, 0.8, 0.2]],
    )
}

pub fn printed_preimage() -> PrintedTable {
    printed(
        "X4.22.preimage",
        "f^-1(H_B')",
        &[
            &[0.1, 0.6, 1.0, 0.7, 0.0],
            &[0.2, 0.8, 1.0, 0.8, 0.0],
            &[0.1, 0.6, 1.0, 0.7, 0.0],
        ],
    )
}

pub fn printed_permuted_image() -> PrintedTable {
    printed(
        "X4.23.image",
        "f_perm(H_A)",
        &[&[1.0, 0.8, 0.1, 0.0, 0.7], &[1.0, 0.8, 0.3, 0.2, 0.9]],
    )
}

pub fn printed_image_q() -> PrintedTable {
    printed(
        "X4.38.image",
        "f(Q_A)",
        &[&[0.1, 0.7, 1.0, 0.8, 0.0], &[0.3, 0.9, 1.0, 0.7, 0.2]],
    )
}

/// Single-row table: the intersection profile of `F_A^C`.
pub fn printed_complement_profile() -> PrintedTable {
    printed(
        "X4.5.profile",
        "profile(F_A^C)",
        &[&[0.9, 0.3, 0.0, 0.2, 0.9]],
    )
}
