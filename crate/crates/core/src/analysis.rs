//! (p, q)-mappings and sequence analysis.
//!
//! A [`MappingSpec`] sends source objects to target objects (`p`) and source
//! parameters to target parameters (`q`). The image of a set takes, for each
//! target cell, the maximum over all source cells that map onto it (0 when
//! nothing does). The preimage is plain substitution.
//!
//! Continuity and sequence verdicts are decided over finite data only. An ε-δ
//! search ranges over the distance spectrum of the supplied collection, and
//! sequence verdicts describe the given prefix, never the infinite tail.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::{is_fuzzy_soft_number, Violation};
use crate::error::{Error, Result};
use crate::metric::{candidate_radii, distance};
use crate::set::{FuzzySoftSet, Labels, EQ_TOL};

#[derive(Clone, Debug, PartialEq)]
pub struct MappingSpec {
    source_universe: Labels,
    source_parameters: Labels,
    target_universe: Labels,
    target_parameters: Labels,
    p: Vec<usize>,
    q: Vec<usize>,
}

fn resolve(
    kind: &str,
    source: &Labels,
    target: &Labels,
    table: &BTreeMap<String, String>,
) -> Result<Vec<usize>> {
    if let Some(extra) = table.keys().find(|k| !source.contains(k)) {
        return Err(Error::InvalidMapping(format!(
            "{kind} map has key `{extra}` outside the source labels"
        )));
    }
    source
        .iter()
        .map(|s| {
            let t = table
                .get(s)
                .ok_or_else(|| Error::InvalidMapping(format!("{kind} map does not cover `{s}`")))?;
            target.iter().position(|x| x == t).ok_or_else(|| {
                Error::InvalidMapping(format!("{kind} map sends `{s}` to unknown `{t}`"))
            })
        })
        .collect()
}

fn is_bijection(map: &[usize], target_len: usize) -> bool {
    if map.len() != target_len {
        return false;
    }
    let mut hit = vec![false; target_len];
    for &t in map {
        if std::mem::replace(&mut hit[t], true) {
            return false;
        }
    }
    true
}

impl MappingSpec {
    /// Builds a mapping from label tables. Both tables must be total on the
    /// source labels and land inside the target labels.
    pub fn new(
        source_universe: impl Into<Labels>,
        source_parameters: impl Into<Labels>,
        target_universe: impl Into<Labels>,
        target_parameters: impl Into<Labels>,
        p: &BTreeMap<String, String>,
        q: &BTreeMap<String, String>,
    ) -> Result<Self> {
        let source_universe = source_universe.into();
        let source_parameters = source_parameters.into();
        let target_universe = target_universe.into();
        let target_parameters = target_parameters.into();
        // reuse the set constructor's emptiness and duplicate checks
        for (u, e) in [
            (&source_universe, &source_parameters),
            (&target_universe, &target_parameters),
        ] {
            FuzzySoftSet::new(u.clone(), e.clone(), vec![vec![0.0; u.len()]; e.len()])?;
        }
        let p = resolve("p", &source_universe, &target_universe, p)?;
        let q = resolve("q", &source_parameters, &target_parameters, q)?;
        Ok(MappingSpec {
            source_universe,
            source_parameters,
            target_universe,
            target_parameters,
            p,
            q,
        })
    }

    /// Mapping from index tables; `p[s]` and `q[a]` are target indices.
    pub fn from_indices(
        source_universe: Labels,
        source_parameters: Labels,
        target_universe: Labels,
        target_parameters: Labels,
        p: Vec<usize>,
        q: Vec<usize>,
    ) -> Result<Self> {
        let table =
            |src: &Labels, tgt: &Labels, map: &[usize]| -> Result<BTreeMap<String, String>> {
                if map.len() != src.len() {
                    return Err(Error::InvalidMapping(
                        "index table length differs from source".into(),
                    ));
                }
                map.iter()
                    .zip(src.iter())
                    .map(|(&t, s)| {
                        tgt.get(t).map(|l| (s.clone(), l.clone())).ok_or_else(|| {
                            Error::InvalidMapping(format!("target index {t} out of range"))
                        })
                    })
                    .collect()
            };
        let pt = table(&source_universe, &target_universe, &p)?;
        let qt = table(&source_parameters, &target_parameters, &q)?;
        MappingSpec::new(
            source_universe,
            source_parameters,
            target_universe,
            target_parameters,
            &pt,
            &qt,
        )
    }

    /// Identity mapping on the labels of `set`.
    pub fn identity(set: &FuzzySoftSet) -> Self {
        MappingSpec {
            source_universe: set.universe().clone(),
            source_parameters: set.parameters().clone(),
            target_universe: set.universe().clone(),
            target_parameters: set.parameters().clone(),
            p: (0..set.n_objects()).collect(),
            q: (0..set.n_parameters()).collect(),
        }
    }

    pub fn source_universe(&self) -> &Labels {
        &self.source_universe
    }

    pub fn source_parameters(&self) -> &Labels {
        &self.source_parameters
    }

    pub fn target_universe(&self) -> &Labels {
        &self.target_universe
    }

    pub fn target_parameters(&self) -> &Labels {
        &self.target_parameters
    }

    /// Target index of source object `s`.
    pub fn object_image(&self, s: usize) -> usize {
        self.p[s]
    }

    /// Target index of source parameter `a`.
    pub fn parameter_image(&self, a: usize) -> usize {
        self.q[a]
    }

    pub fn p_bijective(&self) -> bool {
        is_bijection(&self.p, self.target_universe.len())
    }

    /// `s1 < s2` implies `p(s1) < p(s2)`.
    pub fn p_order_preserving(&self) -> bool {
        self.p.windows(2).all(|w| w[0] < w[1])
    }

    pub fn q_bijective(&self) -> bool {
        is_bijection(&self.q, self.target_parameters.len())
    }

    pub fn q_injective(&self) -> bool {
        let mut seen = vec![false; self.target_parameters.len()];
        self.q
            .iter()
            .all(|&b| !std::mem::replace(&mut seen[b], true))
    }

    pub fn q_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_parameters.len()];
        for &b in &self.q {
            hit[b] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// Our reading of a number mapping: `p` is an order-preserving
    /// bijection, so discrete convexity survives relabeling.
    pub fn is_number_mapping(&self) -> bool {
        self.p_bijective() && self.p_order_preserving()
    }

    fn expect_source(&self, f: &FuzzySoftSet) -> Result<()> {
        if f.universe()[..] != self.source_universe[..]
            || f.parameters()[..] != self.source_parameters[..]
        {
            return Err(Error::LabelMismatch(
                "set labels differ from the mapping's source labels".into(),
            ));
        }
        Ok(())
    }

    fn expect_target(&self, g: &FuzzySoftSet) -> Result<()> {
        if g.universe()[..] != self.target_universe[..]
            || g.parameters()[..] != self.target_parameters[..]
        {
            return Err(Error::LabelMismatch(
                "set labels differ from the mapping's target labels".into(),
            ));
        }
        Ok(())
    }
}

/// `f(F)(β)(y) = max { μ_{F(α)}(s) : q(α) = β, p(s) = y }`, or 0 when the
/// preimage of the cell is empty.
pub fn image(f: &MappingSpec, set: &FuzzySoftSet) -> Result<FuzzySoftSet> {
    f.expect_source(set)?;
    let m = f.target_universe.len();
    let mut cells = vec![0.0f64; f.target_parameters.len() * m];
    for (a, &beta) in f.q.iter().enumerate() {
        for (s, &y) in f.p.iter().enumerate() {
            let cell = &mut cells[beta * m + y];
            *cell = cell.max(set.value(a, s));
        }
    }
    Ok(FuzzySoftSet::from_parts(
        f.target_universe.clone(),
        f.target_parameters.clone(),
        cells,
    ))
}

/// `f⁻¹(G)(α)(x) = μ_{G(q(α))}(p(x))`.
pub fn preimage(f: &MappingSpec, g: &FuzzySoftSet) -> Result<FuzzySoftSet> {
    f.expect_target(g)?;
    let cells =
        f.q.iter()
            .flat_map(|&b| f.p.iter().map(move |&y| g.value(b, y)))
            .collect();
    Ok(FuzzySoftSet::from_parts(
        f.source_universe.clone(),
        f.source_parameters.clone(),
        cells,
    ))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PreservationReport {
    pub verdict: bool,
    /// Index of the first sample whose image is not a number, with the
    /// classifier's witness on that image.
    pub failure: Option<(usize, Violation)>,
}

/// Whether every sample's image is a fuzzy soft number.
pub fn is_number_preserving(
    f: &MappingSpec,
    samples: &[FuzzySoftSet],
) -> Result<PreservationReport> {
    for (k, s) in samples.iter().enumerate() {
        let img = image(f, s)?;
        if let Some(w) = is_fuzzy_soft_number(&img).witness() {
            return Ok(PreservationReport {
                verdict: false,
                failure: Some((k, w.clone())),
            });
        }
    }
    Ok(PreservationReport {
        verdict: true,
        failure: None,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairWitness {
    pub pair: (usize, usize),
    pub source_distance: f64,
    pub image_distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IsometryReport {
    pub verdict: bool,
    pub pairs_checked: usize,
    pub witness: Option<PairWitness>,
}

/// Compares source and image distances on every sample pair.
pub fn check_isometry(f: &MappingSpec, samples: &[FuzzySoftSet]) -> Result<IsometryReport> {
    let images = samples
        .iter()
        .map(|s| image(f, s))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs_checked = 0;
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            pairs_checked += 1;
            let d1 = distance(&samples[i], &samples[j])?.get();
            let d2 = distance(&images[i], &images[j])?.get();
            if (d1 - d2).abs() > EQ_TOL {
                return Ok(IsometryReport {
                    verdict: false,
                    pairs_checked,
                    witness: Some(PairWitness {
                        pair: (i, j),
                        source_distance: d1,
                        image_distance: d2,
                    }),
                });
            }
        }
    }
    Ok(IsometryReport {
        verdict: true,
        pairs_checked,
        witness: None,
    })
}

/// Outcome of the δ search for one ε.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EpsilonOutcome {
    pub epsilon: f64,
    /// Largest candidate δ that works.
    pub delta: Option<f64>,
    /// When no δ works: a pair within every candidate δ whose images are
    /// further apart than ε.
    pub witness: Option<PairWitness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContinuityReport {
    pub verdict: bool,
    pub collection_size: usize,
    pub outcomes: Vec<EpsilonOutcome>,
}

struct PairTable {
    pairs: Vec<PairWitness>,
}

impl PairTable {
    fn search(&self, eps: f64) -> EpsilonOutcome {
        let spectrum: Vec<f64> = self.pairs.iter().map(|p| p.source_distance).collect();
        let mut candidates = candidate_radii(&spectrum);
        if eps > 0.0 && eps < 1.0 {
            candidates.push(eps);
        }
        candidates.push(1.0);
        candidates.sort_by(f64::total_cmp);
        let works = |delta: f64| {
            self.pairs
                .iter()
                .all(|p| p.source_distance > delta + EQ_TOL || p.image_distance <= eps + EQ_TOL)
        };
        let delta = candidates.iter().rev().copied().find(|&d| works(d));
        let witness = match delta {
            Some(_) => None,
            None => {
                let smallest = candidates[0];
                self.pairs
                    .iter()
                    .filter(|p| {
                        p.source_distance <= smallest + EQ_TOL && p.image_distance > eps + EQ_TOL
                    })
                    .min_by(|a, b| a.source_distance.total_cmp(&b.source_distance))
                    .cloned()
            }
        };
        EpsilonOutcome {
            epsilon: eps,
            delta,
            witness,
        }
    }
}

fn decide(table: PairTable, size: usize, epsilons: &[f64]) -> ContinuityReport {
    let outcomes: Vec<EpsilonOutcome> = epsilons.iter().map(|&e| table.search(e)).collect();
    ContinuityReport {
        verdict: outcomes.iter().all(|o| o.delta.is_some()),
        collection_size: size,
        outcomes,
    }
}

/// ε-δ continuity at `collection[center]`: for each ε some δ > 0 with
/// `d1(F, F0) <= δ ⇒ d2(f(F), f(F0)) <= ε` over the collection.
pub fn check_continuity_at(
    f: &MappingSpec,
    center: usize,
    collection: &[FuzzySoftSet],
    epsilons: &[f64],
) -> Result<ContinuityReport> {
    check_continuity_of(|s| image(f, s), center, collection, epsilons)
}

/// [`check_continuity_at`] for an arbitrary set transform, such as
/// `|g| preimage(f, g)`.
pub fn check_continuity_of(
    transform: impl Fn(&FuzzySoftSet) -> Result<FuzzySoftSet>,
    center: usize,
    collection: &[FuzzySoftSet],
    epsilons: &[f64],
) -> Result<ContinuityReport> {
    let c = collection.get(center).ok_or(Error::CenterNotInCollection)?;
    let fc = transform(c)?;
    let mut pairs = Vec::with_capacity(collection.len());
    for (k, x) in collection.iter().enumerate() {
        pairs.push(PairWitness {
            pair: (center, k),
            source_distance: distance(c, x)?.get(),
            image_distance: distance(&fc, &transform(x)?)?.get(),
        });
    }
    Ok(decide(PairTable { pairs }, collection.len(), epsilons))
}

/// As [`check_continuity_at`], with one δ serving every pair.
pub fn check_uniform_continuity(
    f: &MappingSpec,
    collection: &[FuzzySoftSet],
    epsilons: &[f64],
) -> Result<ContinuityReport> {
    check_uniform_continuity_of(|s| image(f, s), collection, epsilons)
}

pub fn check_uniform_continuity_of(
    transform: impl Fn(&FuzzySoftSet) -> Result<FuzzySoftSet>,
    collection: &[FuzzySoftSet],
    epsilons: &[f64],
) -> Result<ContinuityReport> {
    let images = collection
        .iter()
        .map(&transform)
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = Vec::new();
    for i in 0..collection.len() {
        for j in i + 1..collection.len() {
            pairs.push(PairWitness {
                pair: (i, j),
                source_distance: distance(&collection[i], &collection[j])?.get(),
                image_distance: distance(&images[i], &images[j])?.get(),
            });
        }
    }
    Ok(decide(PairTable { pairs }, collection.len(), epsilons))
}

/// Homeomorphism constrains the parameter map only: `q` must be bijective.
pub fn is_homeomorphism(f: &MappingSpec) -> bool {
    f.q_bijective()
}

pub const SEQUENCE_NOTE: &str =
    "verdicts are consistent with the limit property on this finite prefix; they are not proofs";

/// Bounded verdict. A finite prefix is always bounded; `beta` is the
/// largest pairwise distance and `pair` realizes it (1-based).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundedVerdict {
    pub pass: bool,
    pub beta: f64,
    pub pair: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CauchyVerdict {
    pub pass: bool,
    /// Smallest 1-based `N` whose tail stays within ε.
    pub n: usize,
    /// On failure, the first pair `(n, m)` with `n, m >= latest admissible N`
    /// at distance above ε.
    pub witness: Option<(usize, usize, f64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergentVerdict {
    pub pass: bool,
    pub n: usize,
    /// On failure, the first term past the latest admissible `N` outside
    /// the ε-ball around the limit.
    pub witness: Option<(usize, f64)>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SequenceReport {
    pub prefix_length: usize,
    pub epsilon: f64,
    /// The latest `N` a verdict may rely on: the tail from it must cover at
    /// least half of the prefix.
    pub latest_admissible_n: usize,
    pub bounded: BoundedVerdict,
    pub cauchy_consistent: CauchyVerdict,
    pub convergent_consistent: Option<ConvergentVerdict>,
    pub note: &'static str,
}

/// `ceil(len / 2)`: a tail starting there holds at least half the terms.
pub fn latest_admissible_n(len: usize) -> usize {
    len.div_ceil(2).max(1)
}

/// Analyzes a finite prefix. A Cauchy or convergence verdict passes when the
/// property holds from some `N` no later than [`latest_admissible_n`], so a
/// one-term tail never passes a sequence on its own.
pub fn analyze_sequence(
    prefix: &[FuzzySoftSet],
    limit: Option<&FuzzySoftSet>,
    epsilon: f64,
) -> Result<SequenceReport> {
    let len = prefix.len();
    if len == 0 {
        return Err(Error::EmptyPrefix);
    }
    let mut d = vec![vec![0.0f64; len]; len];
    for i in 0..len {
        for j in i + 1..len {
            let v = distance(&prefix[i], &prefix[j])?.get();
            d[i][j] = v;
            d[j][i] = v;
        }
    }
    let admissible = latest_admissible_n(len);

    let mut bounded = BoundedVerdict {
        pass: true,
        beta: 0.0,
        pair: None,
    };
    for i in 0..len {
        for j in i + 1..len {
            if d[i][j] > bounded.beta {
                bounded.beta = d[i][j];
                bounded.pair = Some((i + 1, j + 1));
            }
        }
    }

    // tail_max[k] = largest distance among terms k..len (0-based)
    let mut tail_max = vec![0.0f64; len + 1];
    for k in (0..len).rev() {
        let row = (k..len).map(|j| d[k][j]).fold(0.0, f64::max);
        tail_max[k] = tail_max[k + 1].max(row);
    }
    let cauchy_n = (0..len)
        .find(|&k| tail_max[k] <= epsilon + EQ_TOL)
        .unwrap_or(len - 1)
        + 1;
    let cauchy_pass = cauchy_n <= admissible;
    let cauchy_witness = if cauchy_pass {
        None
    } else {
        let s = admissible - 1;
        (s..len)
            .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
            .find(|&(i, j)| d[i][j] > epsilon + EQ_TOL)
            .map(|(i, j)| (i + 1, j + 1, d[i][j]))
    };

    let convergent_consistent = match limit {
        None => None,
        Some(l) => {
            let to_limit = prefix
                .iter()
                .map(|x| distance(x, l).map(|v| v.get()))
                .collect::<Result<Vec<_>>>()?;
            let last_bad = (0..len).rev().find(|&k| to_limit[k] > epsilon + EQ_TOL);
            let n = last_bad.map_or(1, |k| k + 2);
            let pass = n <= admissible;
            let witness = if pass {
                None
            } else {
                (admissible - 1..len)
                    .find(|&k| to_limit[k] > epsilon + EQ_TOL)
                    .map(|k| (k + 1, to_limit[k]))
            };
            Some(ConvergentVerdict { pass, n, witness })
        }
    };

    Ok(SequenceReport {
        prefix_length: len,
        epsilon,
        latest_admissible_n: admissible,
        bounded,
        cauchy_consistent: CauchyVerdict {
            pass: cauchy_pass,
            n: cauchy_n,
            witness: cauchy_witness,
        },
        convergent_consistent,
        note: SEQUENCE_NOTE,
    })
}

/// `F_n` with every cell `1 - (1 - μ)·2^-n` (n = 1..=len); converges to the
/// all-ones set with `d(F_n, Ẽ) = 2^-n · max_t (1 - profile(F)[t])`.
pub fn geometric_sequence(base: &FuzzySoftSet, len: usize) -> Vec<FuzzySoftSet> {
    (1..=len)
        .map(|n| {
            let scale = 0.5f64.powi(n as i32);
            FuzzySoftSet::from_parts(
                base.universe().clone(),
                base.parameters().clone(),
                base.cells()
                    .iter()
                    .map(|&v| 1.0 - (1.0 - v) * scale)
                    .collect(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::is_convex;
    use crate::fixtures;
    use crate::metric::distance;
    use crate::set::numbered_labels;

    fn grid(rows: &[&[f64]]) -> FuzzySoftSet {
        FuzzySoftSet::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn rows(set: &FuzzySoftSet) -> Vec<Vec<f64>> {
        set.rows().map(<[f64]>::to_vec).collect()
    }

    #[test]
    fn worked_image_and_preimage() {
        let f = fixtures::map_problem_4_22();
        let img = image(&f, &fixtures::h_a()).unwrap();
        assert_eq!(rows(&img), fixtures::printed_image().rows);
        let pre = preimage(&f, &fixtures::h_b_prime()).unwrap();
        // substitution gives e2 = H_B'(e1'); the printed h4/h5 cells differ
        assert_eq!(pre.row(0), &[0.1, 0.6, 1.0, 0.7, 0.0]);
        assert_eq!(pre.row(1), &[0.2, 0.8, 1.0, 0.7, 0.1]);
        assert_eq!(pre.row(2), &[0.1, 0.6, 1.0, 0.7, 0.0]);
    }

    #[test]
    fn permuted_image_loses_convexity() {
        let f = fixtures::map_permuted();
        assert!(f.p_bijective() && !f.p_order_preserving());
        let img = image(&f, &fixtures::h_a()).unwrap();
        assert_eq!(rows(&img), fixtures::printed_permuted_image().rows);
        assert!(!is_convex(&img).verdict);
        let rep = is_number_preserving(&f, &[fixtures::h_a()]).unwrap();
        assert!(!rep.verdict);
        assert_eq!(rep.failure.as_ref().unwrap().0, 0);
    }

    #[test]
    fn identity_maps() {
        let h = fixtures::h_a();
        let id = MappingSpec::identity(&h);
        assert_eq!(image(&id, &h).unwrap(), h);
        assert_eq!(preimage(&id, &h).unwrap(), h);
        assert!(id.is_number_mapping() && is_homeomorphism(&id));
        assert!(
            is_number_preserving(&id, std::slice::from_ref(&h))
                .unwrap()
                .verdict
        );
        assert!(is_number_preserving(&id, &[]).unwrap().verdict);
        assert!(
            check_isometry(&id, &[h.clone(), fixtures::q_a()])
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn constant_q_copies_one_row() {
        let g = fixtures::h_b_prime();
        let f = MappingSpec::from_indices(
            numbered_labels("h", 5),
            numbered_labels("e", 3),
            g.universe().clone(),
            g.parameters().clone(),
            (0..5).collect(),
            vec![1, 1, 1],
        )
        .unwrap();
        let pre = preimage(&f, &g).unwrap();
        for row in pre.rows() {
            assert_eq!(row, g.row(1));
        }
    }

    #[test]
    fn mapping_validation() {
        let src = numbered_labels("h", 2);
        let params = numbered_labels("e", 1);
        let q: BTreeMap<_, _> = [("e1".to_string(), "e1".to_string())].into();
        let partial: BTreeMap<_, _> = [("h1".to_string(), "h1".to_string())].into();
        assert!(matches!(
            MappingSpec::new(
                src.clone(),
                params.clone(),
                src.clone(),
                params.clone(),
                &partial,
                &q
            ),
            Err(Error::InvalidMapping(_))
        ));
        let outside: BTreeMap<_, _> = [
            ("h1".to_string(), "h1".to_string()),
            ("h2".to_string(), "k9".to_string()),
        ]
        .into();
        assert!(matches!(
            MappingSpec::new(src.clone(), params.clone(), src, params, &outside, &q),
            Err(Error::InvalidMapping(_))
        ));
    }

    #[test]
    fn isometry_on_worked_pair() {
        let f = fixtures::map_problem_4_22();
        let (h, q) = (fixtures::h_a(), fixtures::q_a());
        assert!((distance(&h, &q).unwrap().get() - 0.1).abs() <= EQ_TOL);
        let rep = check_isometry(&f, &[h, q]).unwrap();
        assert!(rep.verdict);
        assert_eq!(rep.pairs_checked, 1);
        // isometric on the sample, yet not a homeomorphism
        assert!(!is_homeomorphism(&f));
    }

    fn collapsing_map() -> MappingSpec {
        MappingSpec::from_indices(
            numbered_labels("h", 2),
            numbered_labels("e", 1),
            numbered_labels("k", 2),
            numbered_labels("e", 1),
            vec![0, 0],
            vec![0],
        )
        .unwrap()
    }

    #[test]
    fn collapsing_p_shrinks_distance() {
        let a = grid(&[&[0.2, 0.9]]);
        let b = grid(&[&[0.9, 0.2]]);
        let rep = check_isometry(&collapsing_map(), &[a, b]).unwrap();
        assert!(!rep.verdict);
        let w = rep.witness.unwrap();
        assert!(w.image_distance < w.source_distance);
    }

    #[test]
    fn homeomorphism_reads_q_only() {
        let f = MappingSpec::from_indices(
            numbered_labels("h", 3),
            numbered_labels("e", 2),
            numbered_labels("k", 3),
            numbered_labels("e", 2),
            vec![1, 1, 1],
            vec![1, 0],
        )
        .unwrap();
        assert!(is_homeomorphism(&f));
        assert!(!f.p_bijective());
    }

    /// Profile twins in the source whose images are 0.5 apart.
    fn twin_collection() -> (MappingSpec, Vec<FuzzySoftSet>) {
        let u = numbered_labels("h", 2);
        let e = numbered_labels("e", 2);
        let x0 =
            FuzzySoftSet::new(u.clone(), e.clone(), vec![vec![0.2, 0.2], vec![0.7, 0.7]]).unwrap();
        let x1 =
            FuzzySoftSet::new(u.clone(), e.clone(), vec![vec![0.2, 0.7], vec![0.7, 0.2]]).unwrap();
        assert!(distance(&x0, &x1).unwrap().get() <= EQ_TOL);
        // collapse both objects onto one; the max over objects separates them
        let f = MappingSpec::from_indices(
            u,
            e.clone(),
            numbered_labels("k", 1),
            e,
            vec![0, 0],
            vec![0, 1],
        )
        .unwrap();
        (f, vec![x0, x1])
    }

    #[test]
    fn continuity_searches_spectrum() {
        let (f, xs) = twin_collection();
        let d2 = distance(&image(&f, &xs[0]).unwrap(), &image(&f, &xs[1]).unwrap()).unwrap();
        assert!((d2.get() - 0.5).abs() <= EQ_TOL);
        let rep = check_continuity_at(&f, 0, &xs, &[0.4]).unwrap();
        assert!(!rep.verdict);
        assert_eq!(rep.outcomes[0].witness.as_ref().unwrap().pair, (0, 1));
        let rep = check_uniform_continuity(&f, &xs, &[0.4]).unwrap();
        assert!(!rep.verdict);
        assert!(
            check_uniform_continuity(&f, &xs[..1], &[0.4])
                .unwrap()
                .verdict
        );

        let id = MappingSpec::identity(&fixtures::f_a());
        let coll = vec![
            fixtures::f_a(),
            fixtures::g_a(),
            fixtures::f_a().complement(),
        ];
        for rep in [
            check_continuity_at(&id, 0, &coll, &[0.05, 0.2, 0.5]).unwrap(),
            check_uniform_continuity(&id, &coll, &[0.05, 0.2, 0.5]).unwrap(),
        ] {
            assert!(rep.verdict);
            for o in &rep.outcomes {
                assert!(o.delta.unwrap() >= o.epsilon - EQ_TOL);
            }
        }
        assert_eq!(
            check_continuity_at(&id, 9, &coll, &[0.1]),
            Err(Error::CenterNotInCollection)
        );
    }

    #[test]
    fn isolated_center_is_continuous() {
        let (f, _) = twin_collection();
        let u = numbered_labels("h", 2);
        let e = numbered_labels("e", 2);
        let a =
            FuzzySoftSet::new(u.clone(), e.clone(), vec![vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap();
        let b = FuzzySoftSet::new(u, e, vec![vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
        assert!(
            check_continuity_at(&f, 0, &[a, b], &[0.01])
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn constant_sequence() {
        let prefix = vec![fixtures::f_a(); 10];
        let rep = analyze_sequence(&prefix, Some(&fixtures::f_a()), 0.01).unwrap();
        assert!(rep.bounded.pass && rep.bounded.beta == 0.0);
        assert!(rep.cauchy_consistent.pass);
        assert_eq!(rep.cauchy_consistent.n, 1);
        assert!(rep.convergent_consistent.unwrap().pass);
    }

    #[test]
    fn geometric_sequence_converges_to_absolute() {
        let base = fixtures::f_a();
        let prefix = geometric_sequence(&base, 20);
        let top = FuzzySoftSet::ones_like(&base);
        for (k, x) in prefix.iter().enumerate() {
            let want = 0.5f64.powi(k as i32 + 1);
            assert!((distance(x, &top).unwrap().get() - want).abs() <= EQ_TOL);
        }
        let rep = analyze_sequence(&prefix, Some(&top), 0.05).unwrap();
        let conv = rep.convergent_consistent.unwrap();
        assert!(conv.pass && conv.n == 5, "{conv:?}");
        assert!(rep.cauchy_consistent.pass && rep.cauchy_consistent.n == 5);
    }

    #[test]
    fn alternating_sequence_is_not_cauchy() {
        let prefix: Vec<_> = (0..10)
            .map(|k| {
                if k % 2 == 0 {
                    fixtures::f_a()
                } else {
                    fixtures::g_a()
                }
            })
            .collect();
        let rep = analyze_sequence(&prefix, None, 0.1).unwrap();
        assert!(!rep.cauchy_consistent.pass);
        let (n, m, d) = rep.cauchy_consistent.witness.unwrap();
        assert_eq!(m, n + 1);
        assert!((d - 0.2).abs() <= EQ_TOL);
        assert!(rep.bounded.pass);
        assert!((rep.bounded.beta - 0.2).abs() <= EQ_TOL);
        assert_eq!(analyze_sequence(&[], None, 0.1), Err(Error::EmptyPrefix));
    }
}
