//! Case generators: random flavored grids, mappings and sequences, plus the
//! exhaustive small-lattice enumeration.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::analysis::MappingSpec;
use crate::set::{numbered_labels, FuzzySoftSet, Labels};

use super::Case;

pub type Rand = ChaCha8Rng;

/// Largest random shape: parameters × objects.
pub const MAX_PARAMETERS: usize = 3;
pub const MAX_OBJECTS: usize = 5;

/// Shapes covered by the exhaustive tier.
pub const LATTICE_SHAPES: [(usize, usize); 6] = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)];

/// Upper bound on enumerated cases per shape; the lattice is coarsened
/// until `levels^cells` fits.
pub const LATTICE_CAP: u64 = 70_000;

const LEVEL_CHOICES: [u32; 6] = [11, 6, 5, 4, 3, 2];

/// Number of lattice levels used for `cells` free cells, or `None` when
/// even the two-point lattice exceeds [`LATTICE_CAP`].
pub fn lattice_levels(cells: usize) -> Option<u32> {
    LEVEL_CHOICES.into_iter().find(|&l| {
        (l as u64)
            .checked_pow(cells as u32)
            .is_some_and(|c| c <= LATTICE_CAP)
    })
}

pub fn lattice_value(k: u32, levels: u32) -> f64 {
    k as f64 / (levels - 1) as f64
}

/// Every tuple of `count` sets of shape `n × m` over the lattice sized by
/// [`lattice_levels`]; empty when the shape is too large.
pub fn lattice_cases(count: usize, n: usize, m: usize) -> impl Iterator<Item = Case> {
    let cells = count * n * m;
    let (levels, total) = match lattice_levels(cells) {
        Some(l) => (l, (l as u64).pow(cells as u32)),
        None => (2, 0),
    };
    let universe = numbered_labels("h", m);
    let parameters = numbered_labels("e", n);
    (0..total).map(move |mut code| {
        let mut values = Vec::with_capacity(cells);
        for _ in 0..cells {
            values.push(lattice_value((code % levels as u64) as u32, levels));
            code /= levels as u64;
        }
        let sets = values
            .chunks(n * m)
            .map(|c| FuzzySoftSet::from_parts(universe.clone(), parameters.clone(), c.to_vec()))
            .collect();
        Case::sets(sets)
    })
}

/// All `arity`-tuples of 0.1-lattice values laid out as single-row sets,
/// one tuple per column.
pub fn cell_tuples(arity: usize) -> Case {
    let total = 11usize.pow(arity as u32);
    let universe = numbered_labels("h", total);
    let parameters = numbered_labels("e", 1);
    let sets = (0..arity)
        .map(|k| {
            let stride = 11usize.pow(k as u32);
            let cells = (0..total)
                .map(|c| ((c / stride) % 11) as f64 / 10.0)
                .collect();
            FuzzySoftSet::from_parts(universe.clone(), parameters.clone(), cells)
        })
        .collect();
    Case::sets(sets)
}

/// A membership: a 0.1-lattice value half of the time, otherwise uniform.
pub fn value(rng: &mut Rand) -> f64 {
    if rng.random_bool(0.5) {
        rng.random_range(0..=10) as f64 / 10.0
    } else {
        rng.random_range(0.0..=1.0)
    }
}

pub fn shape(rng: &mut Rand) -> (usize, usize) {
    (
        rng.random_range(1..=MAX_PARAMETERS),
        rng.random_range(1..=MAX_OBJECTS),
    )
}

fn labels(n: usize, m: usize) -> (Labels, Labels) {
    (numbered_labels("h", m), numbered_labels("e", n))
}

pub fn set_from_rows(rows: Vec<Vec<f64>>) -> FuzzySoftSet {
    let n = rows.len();
    let m = rows[0].len();
    let (u, e) = labels(n, m);
    FuzzySoftSet::from_parts(u, e, rows.into_iter().flatten().collect())
}

pub fn grid(rng: &mut Rand, n: usize, m: usize) -> FuzzySoftSet {
    let (u, e) = labels(n, m);
    FuzzySoftSet::from_parts(u, e, (0..n * m).map(|_| value(rng)).collect())
}

/// Nondecreasing up to `peak`, nonincreasing after, with `row[peak] = top`.
pub fn unimodal_row(rng: &mut Rand, m: usize, peak: usize, top: f64) -> Vec<f64> {
    let mut left: Vec<f64> = (0..peak).map(|_| value(rng) * top).collect();
    left.sort_by(f64::total_cmp);
    let mut right: Vec<f64> = (peak + 1..m).map(|_| value(rng) * top).collect();
    right.sort_by(|a, b| b.total_cmp(a));
    left.push(top);
    left.extend(right);
    left
}

/// Rows with independent peaks; the profile may still fail convexity.
pub fn convex_set(rng: &mut Rand, n: usize, m: usize) -> FuzzySoftSet {
    let rows = (0..n)
        .map(|_| {
            let peak = rng.random_range(0..m);
            let top = if rng.random_bool(0.5) {
                1.0
            } else {
                value(rng)
            };
            unimodal_row(rng, m, peak, top)
        })
        .collect();
    set_from_rows(rows)
}

/// Rows that dip then rise; the profile may still fail concavity.
pub fn concave_set(rng: &mut Rand, n: usize, m: usize) -> FuzzySoftSet {
    convex_set(rng, n, m).complement()
}

/// A fuzzy soft number with every row equal to 1 at `peak`.
pub fn number_at(rng: &mut Rand, n: usize, m: usize, peak: usize) -> FuzzySoftSet {
    set_from_rows((0..n).map(|_| unimodal_row(rng, m, peak, 1.0)).collect())
}

pub fn number(rng: &mut Rand, n: usize, m: usize) -> FuzzySoftSet {
    let peak = rng.random_range(0..m);
    number_at(rng, n, m, peak)
}

/// Cell-wise `g · u` with `u` in `[0, 1]`.
pub fn below(rng: &mut Rand, g: &FuzzySoftSet) -> FuzzySoftSet {
    let cells = g
        .cells()
        .iter()
        .map(|&v| {
            if rng.random_bool(0.2) {
                v
            } else {
                v * value(rng)
            }
        })
        .collect();
    FuzzySoftSet::from_parts(g.universe().clone(), g.parameters().clone(), cells)
}

/// A set with the same intersection profile as `g`: each column keeps one
/// minimal cell and raises the others anywhere up to 1.
pub fn profile_twin(rng: &mut Rand, g: &FuzzySoftSet) -> FuzzySoftSet {
    let n = g.n_parameters();
    let m = g.n_objects();
    let low = g.profile().values;
    let mut cells = vec![0.0; n * m];
    for t in 0..m {
        let keep = rng.random_range(0..n);
        for i in 0..n {
            cells[i * m + t] = if i == keep {
                low[t]
            } else {
                low[t] + (1.0 - low[t]) * rng.random_range(0.0..=1.0)
            };
        }
    }
    FuzzySoftSet::from_parts(g.universe().clone(), g.parameters().clone(), cells)
}

/// `size` sets of one shape; about half are profile twins of earlier ones.
pub fn collection(rng: &mut Rand, n: usize, m: usize, size: usize) -> Vec<FuzzySoftSet> {
    let mut out: Vec<FuzzySoftSet> = Vec::with_capacity(size);
    while out.len() < size {
        if !out.is_empty() && rng.random_bool(0.5) {
            let base = out[rng.random_range(0..out.len())].clone();
            out.push(profile_twin(rng, &base));
        } else {
            out.push(grid(rng, n, m));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectMap {
    /// Order-preserving bijection onto a same-size universe.
    Monotone,
    Permutation,
    Any,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParameterMap {
    Bijection,
    Any,
}

pub fn target_parameters(k: usize) -> Labels {
    (1..=k).map(|i| format!("e{i}'")).collect()
}

pub fn mapping(rng: &mut Rand, n: usize, m: usize, p: ObjectMap, q: ParameterMap) -> MappingSpec {
    let (pm, target_m) = match p {
        ObjectMap::Monotone => ((0..m).collect(), m),
        ObjectMap::Permutation => {
            let mut v: Vec<usize> = (0..m).collect();
            v.shuffle(rng);
            (v, m)
        }
        ObjectMap::Any => {
            let k = rng.random_range(1..=m + 1);
            ((0..m).map(|_| rng.random_range(0..k)).collect(), k)
        }
    };
    let (qm, target_n) = match q {
        ParameterMap::Bijection => {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(rng);
            (v, n)
        }
        ParameterMap::Any => {
            let k = rng.random_range(1..=n + 1);
            ((0..n).map(|_| rng.random_range(0..k)).collect(), k)
        }
    };
    let (u, e) = labels(n, m);
    MappingSpec::from_indices(
        u,
        e,
        numbered_labels("k", target_m),
        target_parameters(target_n),
        pm,
        qm,
    )
    .expect("generated index tables are in range")
}

pub fn any_object_map(rng: &mut Rand) -> ObjectMap {
    *[ObjectMap::Monotone, ObjectMap::Permutation, ObjectMap::Any]
        .choose(rng)
        .unwrap()
}

pub fn any_parameter_map(rng: &mut Rand) -> ParameterMap {
    if rng.random_bool(0.5) {
        ParameterMap::Bijection
    } else {
        ParameterMap::Any
    }
}

/// `F_n = F0 + (R_n - F0)·r^n` for random `R_n`, so `d(F_n, F0) <= r^n`.
pub fn converging_prefix(
    rng: &mut Rand,
    limit: &FuzzySoftSet,
    len: usize,
    r: f64,
) -> Vec<FuzzySoftSet> {
    (1..=len)
        .map(|k| {
            let noise = grid(rng, limit.n_parameters(), limit.n_objects());
            let scale = r.powi(k as i32);
            let cells = limit
                .cells()
                .iter()
                .zip(noise.cells())
                .map(|(&a, &b)| (a + (b - a) * scale).clamp(0.0, 1.0))
                .collect();
            FuzzySoftSet::from_parts(limit.universe().clone(), limit.parameters().clone(), cells)
        })
        .collect()
}

pub fn epsilon(rng: &mut Rand) -> f64 {
    *[0.02, 0.05, 0.1, 0.2, 0.3].choose(rng).unwrap()
}
