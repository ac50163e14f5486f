//! Algebraic and metric laws on random grids, plus small exhaustive sweeps.

use fuzzysoft_core::analysis::{
    analyze_sequence, check_isometry, image, is_number_preserving, preimage, MappingSpec,
};
use fuzzysoft_core::arith::{self, ArithOp, ArithResult};
use fuzzysoft_core::classify::{
    is_concave, is_convex, is_fuzzy_soft_number, is_normalized, quasiconcave_violation,
};
use fuzzysoft_core::metric::{
    check_metric_axioms, diameter, distance, distance_to_complement, open_sphere,
};
use fuzzysoft_core::set::numbered_labels;
use fuzzysoft_core::{FuzzySoftSet, EQ_TOL};
use proptest::prelude::*;

fn membership() -> impl Strategy<Value = f64> {
    prop_oneof![(0u8..=10).prop_map(|k| k as f64 / 10.0), 0.0f64..=1.0]
}

fn grid(n: usize, m: usize) -> impl Strategy<Value = FuzzySoftSet> {
    prop::collection::vec(prop::collection::vec(membership(), m), n)
        .prop_map(|rows| FuzzySoftSet::from_rows(rows).unwrap())
}

/// `count` grids sharing one random shape up to 3 × 5.
fn grids(count: usize) -> impl Strategy<Value = Vec<FuzzySoftSet>> {
    (1usize..=3, 1usize..=5).prop_flat_map(move |(n, m)| prop::collection::vec(grid(n, m), count))
}

fn row(m: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<f64>> {
    m.prop_flat_map(|m| prop::collection::vec(membership(), m))
}

/// Nondecreasing then nonincreasing: an independent quasiconcavity oracle.
fn unimodal(v: &[f64]) -> bool {
    let mut k = 0;
    while k + 1 < v.len() && v[k + 1] >= v[k] - EQ_TOL {
        k += 1;
    }
    while k + 1 < v.len() && v[k + 1] <= v[k] + EQ_TOL {
        k += 1;
    }
    k + 1 >= v.len()
}

/// A grid whose rows all peak at 1 on one common object.
fn number(n: usize, m: usize) -> impl Strategy<Value = FuzzySoftSet> {
    (
        0..m,
        prop::collection::vec(prop::collection::vec(membership(), m), n),
    )
        .prop_map(move |(peak, raw)| {
            let rows = raw
                .into_iter()
                .map(|mut r| {
                    r[peak] = 1.0;
                    let (l, rest) = r.split_at_mut(peak);
                    l.sort_by(f64::total_cmp);
                    rest[1..].sort_by(|a, b| b.total_cmp(a));
                    r
                })
                .collect();
            FuzzySoftSet::from_rows(rows).unwrap()
        })
}

fn numbers(count: usize) -> impl Strategy<Value = Vec<FuzzySoftSet>> {
    (1usize..=3, 1usize..=5).prop_flat_map(move |(n, m)| prop::collection::vec(number(n, m), count))
}

fn ar(s: &FuzzySoftSet) -> ArithResult {
    ArithResult::from(s)
}

fn d(a: &FuzzySoftSet, b: &FuzzySoftSet) -> f64 {
    distance(a, b).unwrap().get()
}

fn lattice_rows(m: usize) -> impl Iterator<Item = Vec<f64>> {
    (0..11usize.pow(m as u32)).map(move |mut code| {
        (0..m)
            .map(|_| {
                let v = (code % 11) as f64 / 10.0;
                code /= 11;
                v
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn lattice_laws(s in grids(3)) {
        let (f, g, h) = (&s[0], &s[1], &s[2]);
        prop_assert_eq!(f.union(g).unwrap(), g.union(f).unwrap());
        prop_assert_eq!(f.intersection(g).unwrap(), g.intersection(f).unwrap());
        prop_assert_eq!(
            f.union(&g.union(h).unwrap()).unwrap(),
            f.union(g).unwrap().union(h).unwrap()
        );
        prop_assert_eq!(
            f.intersection(&g.intersection(h).unwrap()).unwrap(),
            f.intersection(g).unwrap().intersection(h).unwrap()
        );
        prop_assert_eq!(&f.union(f).unwrap(), f);
        prop_assert_eq!(&f.intersection(f).unwrap(), f);
        prop_assert_eq!(&f.union(&f.intersection(g).unwrap()).unwrap(), f);
        prop_assert_eq!(&f.intersection(&f.union(g).unwrap()).unwrap(), f);
    }

    #[test]
    fn de_morgan_and_involution(s in grids(2)) {
        let (f, g) = (&s[0], &s[1]);
        prop_assert!(f.complement().complement().approx_eq(f));
        prop_assert!(f.union(g).unwrap().complement().approx_eq(
            &f.complement().intersection(&g.complement()).unwrap()
        ));
        prop_assert!(f.intersection(g).unwrap().complement().approx_eq(
            &f.complement().union(&g.complement()).unwrap()
        ));
    }

    #[test]
    fn profile_of_intersection(s in grids(2)) {
        let (f, g) = (&s[0], &s[1]);
        let meet = f.intersection(g).unwrap().profile().values;
        let (pf, pg) = (f.profile().values, g.profile().values);
        for t in 0..meet.len() {
            prop_assert_eq!(meet[t], pf[t].min(pg[t]));
            for i in 0..f.n_parameters() {
                prop_assert!(pf[t] <= f.value(i, t));
            }
        }
    }

    #[test]
    fn subset_is_a_partial_order(s in grids(3)) {
        let (f, g, h) = (&s[0], &s[1], &s[2]);
        prop_assert!(f.subset_of(f).unwrap());
        if f.subset_of(g).unwrap() && g.subset_of(f).unwrap() {
            prop_assert!(f.approx_eq(g));
        }
        let lo = f.intersection(g).unwrap();
        let hi = lo.union(h).unwrap();
        prop_assert!(lo.subset_of(&hi).unwrap());
        if f.subset_of(g).unwrap() && g.subset_of(h).unwrap() {
            prop_assert!(f.subset_of(h).unwrap());
        }
    }

    #[test]
    fn triple_scan_matches_unimodality(r in row(1..=8)) {
        prop_assert_eq!(quasiconcave_violation(&r).is_none(), unimodal(&r));
    }

    #[test]
    fn convex_closure_under_intersection(s in grids(2)) {
        let (f, g) = (&s[0], &s[1]);
        if is_convex(f).verdict && is_convex(g).verdict {
            prop_assert!(is_convex(&f.intersection(g).unwrap()).verdict);
        }
    }

    #[test]
    fn witnesses_reproduce(f in grids(1)) {
        use fuzzysoft_core::classify::Shape;
        let f = &f[0];
        if let Some(w) = is_convex(f).witness {
            prop_assert!(w.reproduces(f, Shape::Convex));
        }
        if let Some(w) = is_concave(f).witness {
            prop_assert!(w.reproduces(f, Shape::Concave));
        }
    }

    #[test]
    fn numbers_have_a_common_peak(s in numbers(1)) {
        let n = is_fuzzy_soft_number(&s[0]);
        prop_assert!(n.verdict);
        prop_assert!(!n.peak.is_empty());
    }

    #[test]
    fn commutativity_and_neutral_elements(s in grids(2)) {
        let (f, g) = (&s[0], &s[1]);
        let zeros = FuzzySoftSet::zeros_like(f);
        let ones = FuzzySoftSet::ones_like(f);
        prop_assert!(arith::add(f, g).unwrap().mismatch(&arith::add(g, f).unwrap(), EQ_TOL).is_none());
        prop_assert!(arith::mul(f, g).unwrap().mismatch(&arith::mul(g, f).unwrap(), EQ_TOL).is_none());
        prop_assert!(arith::add(f, &zeros).unwrap().mismatch(&ar(f), EQ_TOL).is_none());
        prop_assert!(arith::mul(f, &ones).unwrap().mismatch(&ar(f), EQ_TOL).is_none());
        for (left, right) in [
            (arith::mul(f, &zeros).unwrap(), ar(&zeros)),
            (arith::div(&zeros, f).unwrap(), ar(&zeros)),
            (arith::div(f, &zeros).unwrap(), ar(&ones)),
            (arith::div(f, f).unwrap(), ar(&ones)),
        ] {
            prop_assert!(left.mismatch_on_defined(&right, EQ_TOL).is_none());
            for i in 0..f.n_parameters() {
                for t in 0..f.n_objects() {
                    prop_assert_eq!(left.is_defined(i, t), f.value(i, t) != 0.0);
                }
            }
        }
    }

    #[test]
    fn associativity(s in grids(3)) {
        let (f, g, h) = (ar(&s[0]), ar(&s[1]), ar(&s[2]));
        for op in [ArithOp::Add, ArithOp::Mul] {
            let l = arith::combine(op, &arith::combine(op, &f, &g).unwrap(), &h).unwrap();
            let r = arith::combine(op, &f, &arith::combine(op, &g, &h).unwrap()).unwrap();
            prop_assert!(l.mismatch_on_defined(&r, EQ_TOL).is_none(), "{:?}", op);
        }
    }

    #[test]
    fn mul_is_min_on_defined_cells(s in grids(2)) {
        let (f, g) = (&s[0], &s[1]);
        let m = arith::mul(f, g).unwrap();
        for i in 0..f.n_parameters() {
            for t in 0..f.n_objects() {
                if let Some(v) = m.value(i, t) {
                    prop_assert!((v - f.value(i, t).min(g.value(i, t))).abs() <= EQ_TOL);
                }
            }
        }
    }

    #[test]
    fn add_and_sub_are_monotone(s in grids(3)) {
        let (f, g) = (&s[0], &s[1]);
        let bigger = g.union(&s[2]).unwrap();
        for op in [ArithOp::Add, ArithOp::Sub] {
            let lo = arith::apply(op, f, g).unwrap().to_fuzzy_soft_set().unwrap();
            let hi = arith::apply(op, f, &bigger).unwrap().to_fuzzy_soft_set().unwrap();
            prop_assert!(lo.subset_of(&hi).unwrap());
        }
    }

    #[test]
    fn common_peak_closure(s in numbers(2)) {
        let (f, g) = (&s[0], &s[1]);
        let pf = f.profile().peak();
        if g.profile().peak().iter().any(|t| pf.contains(t)) {
            for op in [ArithOp::Add, ArithOp::Sub, ArithOp::Mul] {
                // mul leaves 0/0 cells undefined; those results are not sets
                if let Ok(r) = arith::apply(op, f, g).unwrap().to_fuzzy_soft_set() {
                    prop_assert!(is_fuzzy_soft_number(&r).verdict, "{:?}", op);
                }
            }
        }
    }

    #[test]
    fn pseudometric_axioms(s in grids(4)) {
        let report = check_metric_axioms(&s).unwrap();
        prop_assert!(report.all_pass(), "{:?}", report);
        for a in &s {
            prop_assert_eq!(d(a, a), 0.0);
            for b in &s {
                prop_assert_eq!(d(a, b), d(b, a));
                for c in &s {
                    prop_assert!(d(a, c) <= d(a, b) + d(b, c) + EQ_TOL);
                }
            }
        }
    }

    #[test]
    fn chain_distances_are_monotone(s in grids(3)) {
        let l = s[0].intersection(&s[1]).unwrap().intersection(&s[2]).unwrap();
        let m = s[1].intersection(&s[2]).unwrap();
        let h = &s[2];
        prop_assert!(d(&l, &m) <= d(&l, h) + EQ_TOL);
        prop_assert!(d(&m, h) <= d(&l, h) + EQ_TOL);
    }

    #[test]
    fn normalized_sets_are_one_from_their_complement(s in numbers(1)) {
        prop_assert!(is_normalized(&s[0]).verdict);
        prop_assert_eq!(distance_to_complement(&s[0]).get(), 1.0);
    }

    #[test]
    fn single_parameter_diameter_is_zero(r in row(1..=5)) {
        let f = FuzzySoftSet::from_rows(vec![r]).unwrap();
        prop_assert_eq!(diameter(&f).get(), 0.0);
    }

    #[test]
    fn union_diameter_bounds(s in grids(2)) {
        let (f, g) = (&s[0], &s[1]);
        let u = diameter(&f.union(g).unwrap()).get();
        let (a, b) = (diameter(f).get(), diameter(g).get());
        prop_assert!(u <= a.max(b) + EQ_TOL);
        prop_assert!(u <= a + b + EQ_TOL);
    }

    #[test]
    fn spheres_grow_with_radius(s in grids(5), r1 in 0.01f64..0.99, r2 in 0.01f64..0.99) {
        let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
        let small = open_sphere(&s[0], lo, &s).unwrap();
        let big = open_sphere(&s[0], hi, &s).unwrap();
        prop_assert!(small.iter().all(|k| big.contains(k)));
        prop_assert!(small.contains(&0));
    }

    #[test]
    fn sequence_reports_respect_the_triangle_inequality(
        s in (1usize..=2, 1usize..=3).prop_flat_map(|(n, m)| (grid(n, m), prop::collection::vec(grid(n, m), 1..10))),
        eps in prop_oneof![Just(0.05), Just(0.1), Just(0.3)],
    ) {
        let (limit, prefix) = s;
        let r = analyze_sequence(&prefix, Some(&limit), eps).unwrap();
        if r.convergent_consistent.as_ref().unwrap().pass {
            prop_assert!(analyze_sequence(&prefix, None, 2.0 * eps).unwrap().cauchy_consistent.pass);
        }
        if r.cauchy_consistent.pass {
            let n = r.cauchy_consistent.n;
            let mut pre = 0.0f64;
            for i in 0..n {
                for j in 0..n {
                    pre = pre.max(d(&prefix[i], &prefix[j]));
                }
            }
            prop_assert!(r.bounded.beta <= eps + pre + EQ_TOL);
        }
    }

    #[test]
    fn bijective_mappings_are_adjoint(
        (f, pp, qq) in (1usize..=3, 1usize..=5).prop_flat_map(|(n, m)| (
            grid(n, m),
            Just((0..m).collect::<Vec<_>>()).prop_shuffle(),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        ))
    ) {
        let n = f.n_parameters();
        let m = f.n_objects();
        let map = MappingSpec::from_indices(
            f.universe().clone(),
            f.parameters().clone(),
            numbered_labels("k", m),
            (1..=n).map(|i| format!("e{i}'")).collect(),
            pp,
            qq,
        ).unwrap();
        let img = image(&map, &f).unwrap();
        prop_assert_eq!(&preimage(&map, &img).unwrap(), &f);
        prop_assert_eq!(image(&map, &preimage(&map, &img).unwrap()).unwrap(), img);
    }

    #[test]
    fn one_one_onto_preserves_numbers_and_distances(
        (s, qq) in (1usize..=3, 1usize..=5).prop_flat_map(|(n, m)| (
            prop::collection::vec(number(n, m), 2..4),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        ))
    ) {
        let f = &s[0];
        let map = MappingSpec::from_indices(
            f.universe().clone(),
            f.parameters().clone(),
            numbered_labels("k", f.n_objects()),
            (1..=f.n_parameters()).map(|i| format!("e{i}'")).collect(),
            (0..f.n_objects()).collect(),
            qq,
        ).unwrap();
        prop_assert!(is_number_preserving(&map, &s).unwrap().verdict);
        prop_assert!(check_isometry(&map, &s).unwrap().verdict);
    }
}

#[test]
fn exhaustive_single_parameter_duality() {
    for r in lattice_rows(3) {
        let f = FuzzySoftSet::from_rows(vec![r]).unwrap();
        if is_convex(&f).verdict {
            assert!(is_concave(&f.complement()).verdict, "{f}");
        }
    }
}

#[test]
fn triple_scan_matches_unimodality_on_many_rows() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let m = rng.random_range(1..=8);
        let r: Vec<f64> = (0..m)
            .map(|_| rng.random_range(0..=10) as f64 / 10.0)
            .collect();
        assert_eq!(quasiconcave_violation(&r).is_none(), unimodal(&r), "{r:?}");
    }
}

#[test]
fn exhaustive_partial_identities() {
    // every pair of lattice values as a 1 × 121 grid
    let cells: Vec<(f64, f64)> = lattice_rows(2).map(|v| (v[0], v[1])).collect();
    let f = FuzzySoftSet::from_rows(vec![cells.iter().map(|c| c.0).collect()]).unwrap();
    let g = FuzzySoftSet::from_rows(vec![cells.iter().map(|c| c.1).collect()]).unwrap();
    let m = arith::mul(&f, &g).unwrap();
    let q = arith::div(&f, &g).unwrap();
    for (t, &(a, b)) in cells.iter().enumerate() {
        assert_eq!(m.is_defined(0, t), a.max(b) > 0.0);
        assert_eq!(q.is_defined(0, t), a.max(b) > 0.0);
        if let Some(v) = m.value(0, t) {
            assert!((v - a.min(b)).abs() <= EQ_TOL);
        }
    }
}
