//! Distances between fuzzy soft sets.
//!
//! The distance between two sets is the Chebyshev distance between their
//! intersection profiles. Distinct sets can share a profile, so on sets the
//! distance is only a pseudometric; [`check_metric_axioms`] tests the identity
//! axiom at profile granularity and reports set-level collisions separately.
//!
//! Spheres and neighborhoods are decided over a finite collection, indexed
//! by position. Every candidate radius comes from the distance spectrum of
//! that collection, so the predicates are decidable.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::{FuzzySoftSet, SoftPoint, EQ_TOL};

/// A distance in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Distance(f64);

impl Distance {
    pub const ZERO: Distance = Distance(0.0);

    pub fn get(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.4}", self.0)
    }
}

fn chebyshev(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, found })
    }
}

/// `max_t |profile(F)[t] - profile(G)[t]|`.
pub fn distance(f: &FuzzySoftSet, g: &FuzzySoftSet) -> Result<Distance> {
    f.check_compatible(g)?;
    Ok(Distance(chebyshev(
        &f.profile().values,
        &g.profile().values,
    )))
}

/// Distance from one parameter row to another set's profile.
pub fn point_set_distance(point: &SoftPoint, g: &FuzzySoftSet) -> Result<Distance> {
    check_len(g.n_objects(), point.row.len())?;
    Ok(Distance(chebyshev(&point.row, &g.profile().values)))
}

pub fn point_point_distance(p: &SoftPoint, q: &SoftPoint) -> Result<Distance> {
    check_len(p.row.len(), q.row.len())?;
    Ok(Distance(chebyshev(&p.row, &q.row)))
}

/// Largest row-to-row distance; 0 for a single parameter.
pub fn diameter(f: &FuzzySoftSet) -> Distance {
    let n = f.n_parameters();
    let mut best = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            best = best.max(chebyshev(f.row(i), f.row(j)));
        }
    }
    Distance(best)
}

/// `distance(F, complement(F))`. The complement's profile is `1 - max_i μ`,
/// so no complement is materialized.
pub fn distance_to_complement(f: &FuzzySoftSet) -> Distance {
    let low = f.profile().values;
    let high = f.max_profile();
    Distance(
        low.iter()
            .zip(&high)
            .map(|(lo, hi)| (lo - (1.0 - hi)).abs())
            .fold(0.0, f64::max),
    )
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::RadiusOutOfRange(r))
    }
}

fn distances_from(center: &FuzzySoftSet, collection: &[FuzzySoftSet]) -> Result<Vec<f64>> {
    collection
        .iter()
        .map(|g| distance(center, g).map(Distance::get))
        .collect()
}

/// Indices of members strictly closer than `r` to `center`.
pub fn open_sphere(
    center: &FuzzySoftSet,
    r: f64,
    collection: &[FuzzySoftSet],
) -> Result<Vec<usize>> {
    check_radius(r)?;
    let d = distances_from(center, collection)?;
    Ok((0..d.len()).filter(|&k| d[k] < r).collect())
}

/// Indices of members at distance at most `r` from `center`.
pub fn closed_sphere(
    center: &FuzzySoftSet,
    r: f64,
    collection: &[FuzzySoftSet],
) -> Result<Vec<usize>> {
    check_radius(r)?;
    let d = distances_from(center, collection)?;
    Ok((0..d.len()).filter(|&k| d[k] <= r + EQ_TOL).collect())
}

/// Candidate radii in `(0, 1)`: the distinct spectrum values and the
/// midpoints between consecutive values (with 0 and 1 as sentinels).
pub fn candidate_radii(spectrum: &[f64]) -> Vec<f64> {
    let mut points: Vec<f64> = spectrum.to_vec();
    points.extend([0.0, 1.0]);
    points.sort_by(f64::total_cmp);
    points.dedup_by(|a, b| (*a - *b).abs() <= EQ_TOL);
    let mut out: Vec<f64> = points
        .iter()
        .copied()
        .filter(|&v| v > 0.0 && v < 1.0)
        .collect();
    out.extend(points.windows(2).map(|w| (w[0] + w[1]) / 2.0));
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NeighborhoodResult {
    pub verdict: bool,
    /// Largest candidate radius whose open sphere stays inside the subset.
    pub radius: Option<f64>,
    /// A member outside the subset at minimal distance from the center.
    pub blocker: Option<usize>,
}

/// Whether some open sphere around `collection[center]` lies inside `sub`.
pub fn is_neighborhood(
    sub: &[usize],
    center: usize,
    collection: &[FuzzySoftSet],
) -> Result<NeighborhoodResult> {
    let c = collection.get(center).ok_or(Error::CenterNotInCollection)?;
    let d = distances_from(c, collection)?;
    let outside: Vec<usize> = (0..d.len()).filter(|k| !sub.contains(k)).collect();
    let blocker = outside
        .iter()
        .copied()
        .min_by(|&a, &b| d[a].total_cmp(&d[b]));
    let radius = candidate_radii(&d)
        .into_iter()
        .rev()
        .find(|&r| outside.iter().all(|&k| d[k] >= r));
    Ok(NeighborhoodResult {
        verdict: radius.is_some(),
        radius,
        blocker,
    })
}

/// Every member of `sub` has a sphere inside `sub`.
pub fn is_open(sub: &[usize], collection: &[FuzzySoftSet]) -> Result<bool> {
    for &k in sub {
        if !is_neighborhood(sub, k, collection)?.verdict {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AxiomCheck {
    Pass,
    Fail {
        members: Vec<usize>,
        distances: Vec<f64>,
    },
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomCheck::Pass)
    }

    fn from_witness(w: Option<(Vec<usize>, Vec<f64>)>) -> Self {
        match w {
            None => AxiomCheck::Pass,
            Some((members, distances)) => AxiomCheck::Fail { members, distances },
        }
    }
}

pub const PSEUDOMETRIC_NOTE: &str = "pseudometric on sets / metric on profiles";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AxiomReport {
    pub size: usize,
    pub nonnegativity: AxiomCheck,
    pub identity_on_profiles: AxiomCheck,
    pub symmetry: AxiomCheck,
    pub triangle: AxiomCheck,
    /// First pair of distinct sets at distance 0, if any.
    pub set_level_collision: Option<(usize, usize)>,
    pub structure: &'static str,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.nonnegativity.passed()
            && self.identity_on_profiles.passed()
            && self.symmetry.passed()
            && self.triangle.passed()
    }
}

fn profiles_equal(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= EQ_TOL)
}

#[cfg(feature = "parallel")]
fn first_triangle_violation(n: usize, d: &[Vec<f64>]) -> Option<(usize, usize, usize)> {
    use rayon::prelude::*;
    (0..n)
        .into_par_iter()
        .filter_map(|a| {
            (0..n)
                .flat_map(|b| (0..n).map(move |c| (b, c)))
                .find(|&(b, c)| d[a][c] > d[a][b] + d[b][c] + EQ_TOL)
                .map(|(b, c)| (a, b, c))
        })
        .min()
}

#[cfg(not(feature = "parallel"))]
fn first_triangle_violation(n: usize, d: &[Vec<f64>]) -> Option<(usize, usize, usize)> {
    (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .find(|&(a, b, c)| d[a][c] > d[a][b] + d[b][c] + EQ_TOL)
}

/// Checks the four metric axioms over every pair and triple of the
/// collection.
pub fn check_metric_axioms(collection: &[FuzzySoftSet]) -> Result<AxiomReport> {
    let n = collection.len();
    if let Some(first) = collection.first() {
        for g in &collection[1..] {
            first.check_compatible(g)?;
        }
    }
    let profiles: Vec<Vec<f64>> = collection.iter().map(|f| f.profile().values).collect();
    let d: Vec<Vec<f64>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| chebyshev(&profiles[a], &profiles[b]))
                .collect()
        })
        .collect();
    let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));

    let nonnegativity = pairs()
        .find(|&(a, b)| d[a][b] < 0.0)
        .map(|(a, b)| (vec![a, b], vec![d[a][b]]));
    let identity = pairs()
        .find(|&(a, b)| (d[a][b] <= EQ_TOL) != profiles_equal(&profiles[a], &profiles[b]))
        .map(|(a, b)| (vec![a, b], vec![d[a][b]]));
    let symmetry = pairs()
        .find(|&(a, b)| (d[a][b] - d[b][a]).abs() > EQ_TOL)
        .map(|(a, b)| (vec![a, b], vec![d[a][b], d[b][a]]));
    let triangle = first_triangle_violation(n, &d)
        .map(|(a, b, c)| (vec![a, b, c], vec![d[a][c], d[a][b], d[b][c]]));
    let set_level_collision = pairs()
        .find(|&(a, b)| a < b && d[a][b] <= EQ_TOL && !collection[a].approx_eq(&collection[b]));

    Ok(AxiomReport {
        size: n,
        nonnegativity: AxiomCheck::from_witness(nonnegativity),
        identity_on_profiles: AxiomCheck::from_witness(identity),
        symmetry: AxiomCheck::from_witness(symmetry),
        triangle: AxiomCheck::from_witness(triangle),
        set_level_collision,
        structure: PSEUDOMETRIC_NOTE,
    })
}
