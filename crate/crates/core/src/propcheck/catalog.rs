//! Every numbered claim with its law, expected label and search domain.
//!
//! Conventions: `sets[0]` is `F`, `sets[1]` is `G`, `sets[2]` is `H`. Laws
//! return [`Verdict::Vacuous`] when the premise does not apply.

use rand::Rng;

use crate::analysis::{
    analyze_sequence, check_continuity_at, check_continuity_of, check_isometry,
    check_uniform_continuity, check_uniform_continuity_of, image, is_homeomorphism,
    is_number_preserving, preimage, MappingSpec,
};
use crate::arith::{self, ArithOp, ArithResult};
use crate::classify::{is_concave, is_convex, is_fuzzy_soft_number, is_normalized};
use crate::fixtures;
use crate::metric::{diameter, distance, distance_to_complement};
use crate::set::{FuzzySoftSet, Labels, EQ_TOL};

use super::gen::{self, ObjectMap, ParameterMap, Rand};
use super::{Case, Domain, Expected, Failure, PropositionSpec, Strategy, Verdict};

fn check(ok: bool, detail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Holds
    } else {
        Verdict::Violated(Failure::new(detail()))
    }
}

fn f(c: &Case) -> &FuzzySoftSet {
    &c.sets[0]
}

fn g(c: &Case) -> &FuzzySoftSet {
    &c.sets[1]
}

fn h(c: &Case) -> &FuzzySoftSet {
    &c.sets[2]
}

fn convex(s: &FuzzySoftSet) -> bool {
    is_convex(s).verdict
}

fn concave(s: &FuzzySoftSet) -> bool {
    is_concave(s).verdict
}

fn number(s: &FuzzySoftSet) -> bool {
    is_fuzzy_soft_number(s).verdict
}

fn subset(a: &FuzzySoftSet, b: &FuzzySoftSet) -> bool {
    a.subset_of(b).expect("case sets share labels")
}

fn upper(a: &FuzzySoftSet, b: &FuzzySoftSet) -> FuzzySoftSet {
    a.union(b).expect("case sets share labels")
}

fn lower(a: &FuzzySoftSet, b: &FuzzySoftSet) -> FuzzySoftSet {
    a.intersection(b).expect("case sets share labels")
}

fn op(o: ArithOp, a: &ArithResult, b: &ArithResult) -> ArithResult {
    arith::combine(o, a, b).expect("case sets share labels")
}

fn same_set(left: &FuzzySoftSet, right: &FuzzySoftSet, what: &str) -> Verdict {
    let m = left.n_objects();
    match left
        .cells()
        .iter()
        .zip(right.cells())
        .position(|(a, b)| (a - b).abs() > EQ_TOL)
    {
        None => Verdict::Holds,
        Some(k) => Verdict::Violated(Failure::at(
            (k / m, k % m),
            format!("{what}: {} vs {}", left.cells()[k], right.cells()[k]),
        )),
    }
}

/// Values and undefined masks must agree.
fn strict(left: &ArithResult, right: &ArithResult) -> Verdict {
    match left.mismatch(right, EQ_TOL) {
        None => Verdict::Holds,
        Some(m) => Verdict::Violated(Failure::at((m.parameter, m.object), m.to_string())),
    }
}

/// Values must agree wherever both sides are defined.
fn defined(left: &ArithResult, right: &ArithResult) -> Verdict {
    match left.mismatch_on_defined(right, EQ_TOL) {
        None => Verdict::Holds,
        Some(m) => Verdict::Violated(Failure::at((m.parameter, m.object), m.to_string())),
    }
}

fn both(a: Verdict, b: impl FnOnce() -> Verdict) -> Verdict {
    match a {
        Verdict::Holds => b(),
        other => other,
    }
}

fn ar(s: &FuzzySoftSet) -> ArithResult {
    ArithResult::from(s)
}

// ---- convexity and concavity ------------------------------------------------

fn t3_3(c: &Case) -> Verdict {
    if !(convex(f(c)) && convex(g(c))) {
        return Verdict::Vacuous;
    }
    let meet = lower(f(c), g(c));
    check(convex(&meet), || format!("F ∩ G = {meet} is not convex"))
}

fn t3_4(c: &Case) -> Verdict {
    if !(convex(f(c)) && convex(g(c)) && subset(f(c), g(c))) {
        return Verdict::Vacuous;
    }
    let join = upper(f(c), g(c));
    let meet = lower(f(c), g(c));
    check(convex(&join) && convex(&meet), || {
        format!("F ∪ G = {join}, F ∩ G = {meet}: not both convex")
    })
}

fn t3_5(c: &Case) -> Verdict {
    if !(convex(f(c)) && convex(g(c))) {
        return Verdict::Vacuous;
    }
    let join = upper(f(c), g(c));
    check(convex(&join), || format!("F ∪ G = {join} is not convex"))
}

fn p3_8(c: &Case) -> Verdict {
    if !(concave(f(c)) && concave(g(c))) {
        return Verdict::Vacuous;
    }
    let meet = lower(f(c), g(c));
    let join = upper(f(c), g(c));
    check(concave(&meet) && concave(&join), || {
        format!("F ∩ G = {meet}, F ∪ G = {join}: not both concave")
    })
}

fn complement_concave(s: &FuzzySoftSet) -> Verdict {
    let co = s.complement();
    check(concave(&co), || format!("complement {co} is not concave"))
}

fn p3_9(c: &Case) -> Verdict {
    if !convex(f(c)) {
        return Verdict::Vacuous;
    }
    complement_concave(f(c))
}

fn p3_9_single(c: &Case) -> Verdict {
    if f(c).n_parameters() != 1 {
        return Verdict::Vacuous;
    }
    p3_9(c)
}

fn p3_10(c: &Case) -> Verdict {
    if !(convex(f(c)) && concave(g(c)) && subset(f(c), g(c))) {
        return Verdict::Vacuous;
    }
    let join = upper(f(c), g(c));
    let meet = lower(f(c), g(c));
    both(same_set(&join, g(c), "F ∪ G = G"), || {
        both(same_set(&meet, f(c), "F ∩ G = F"), || {
            check(concave(&join) && convex(&meet), || {
                "classifiers disagree on F ∪ G or F ∩ G".into()
            })
        })
    })
}

fn p3_14(c: &Case) -> Verdict {
    let n = is_fuzzy_soft_number(f(c));
    if !n.verdict {
        return Verdict::Vacuous;
    }
    check(!n.peak.is_empty(), || "number without a common peak".into())
}

fn p3_15(c: &Case) -> Verdict {
    if !number(f(c)) {
        return Verdict::Vacuous;
    }
    complement_concave(f(c))
}

fn p3_18(c: &Case) -> Verdict {
    let (a, b) = (f(c), g(c));
    let mul = arith::mul(a, b).expect("shared labels");
    let div = arith::div(a, b).expect("shared labels");
    for i in 0..a.n_parameters() {
        for t in 0..a.n_objects() {
            let zero = a.value(i, t) == 0.0 && b.value(i, t) == 0.0;
            if mul.is_defined(i, t) == zero || div.is_defined(i, t) == zero {
                return Verdict::Violated(Failure::at(
                    (i, t),
                    format!(
                        "cells {} and {}: mask does not match the 0/0 rule",
                        a.value(i, t),
                        b.value(i, t)
                    ),
                ));
            }
        }
    }
    Verdict::Holds
}

fn closure(c: &Case) -> Verdict {
    for o in [ArithOp::Add, ArithOp::Sub, ArithOp::Mul] {
        let r = arith::apply(o, f(c), g(c)).expect("shared labels");
        // closure is only meaningful where the result is a set
        let Ok(s) = r.to_fuzzy_soft_set() else {
            continue;
        };
        if !number(&s) {
            return Verdict::Violated(Failure::new(format!("F {o} G = {s} is not a number")));
        }
    }
    Verdict::Holds
}

fn p3_19(c: &Case) -> Verdict {
    if !(number(f(c)) && number(g(c))) {
        return Verdict::Vacuous;
    }
    closure(c)
}

fn p3_19_common_peak(c: &Case) -> Verdict {
    let a = is_fuzzy_soft_number(f(c));
    let b = is_fuzzy_soft_number(g(c));
    if !(a.verdict && b.verdict && a.peak.iter().any(|t| b.peak.contains(t))) {
        return Verdict::Vacuous;
    }
    closure(c)
}

// ---- cell-wise identities -----------------------------------------------------

fn zeros(c: &Case) -> ArithResult {
    ar(&FuzzySoftSet::zeros_like(f(c)))
}

fn ones(c: &Case) -> ArithResult {
    ar(&FuzzySoftSet::ones_like(f(c)))
}

fn p3_20_i(c: &Case) -> Verdict {
    let (a, b) = (ar(f(c)), ar(g(c)));
    strict(&op(ArithOp::Add, &a, &b), &op(ArithOp::Add, &b, &a))
}

fn p3_20_ii(c: &Case) -> Verdict {
    let (a, b) = (ar(f(c)), ar(g(c)));
    strict(&op(ArithOp::Mul, &a, &b), &op(ArithOp::Mul, &b, &a))
}

fn p3_20_iii(c: &Case) -> Verdict {
    strict(&op(ArithOp::Add, &ar(f(c)), &zeros(c)), &ar(f(c)))
}

fn p3_20_iv(c: &Case) -> Verdict {
    strict(&op(ArithOp::Mul, &ar(f(c)), &ones(c)), &ar(f(c)))
}

macro_rules! partial_identity {
    ($strict:ident, $qualified:ident, |$c:ident| $left:expr, $right:expr) => {
        fn $strict($c: &Case) -> Verdict {
            strict(&$left, &$right)
        }
        fn $qualified($c: &Case) -> Verdict {
            defined(&$left, &$right)
        }
    };
}

partial_identity!(
    p3_20_v,
    p3_20_v_d,
    |c| op(ArithOp::Mul, &ar(f(c)), &zeros(c)),
    zeros(c)
);
partial_identity!(
    p3_20_vi,
    p3_20_vi_d,
    |c| op(ArithOp::Div, &zeros(c), &ar(f(c))),
    zeros(c)
);
partial_identity!(
    p3_20_vii,
    p3_20_vii_d,
    |c| op(ArithOp::Div, &ar(f(c)), &zeros(c)),
    ones(c)
);
partial_identity!(
    p3_20_viii,
    p3_20_viii_d,
    |c| op(ArithOp::Div, &ar(f(c)), &ar(f(c))),
    ones(c)
);

fn fgh(c: &Case) -> (ArithResult, ArithResult, ArithResult) {
    (ar(f(c)), ar(g(c)), ar(h(c)))
}

fn assoc(o: ArithOp, c: &Case) -> Verdict {
    let (a, b, d) = fgh(c);
    strict(&op(o, &op(o, &a, &b), &d), &op(o, &a, &op(o, &b, &d)))
}

fn p3_21_i(c: &Case) -> Verdict {
    assoc(ArithOp::Add, c)
}

fn p3_21_ii(c: &Case) -> Verdict {
    assoc(ArithOp::Mul, c)
}

#[derive(Clone, Copy)]
enum Lat {
    Join,
    Meet,
}

fn lat(l: Lat, a: &ArithResult, b: &ArithResult) -> ArithResult {
    match l {
        Lat::Join => a.union(b),
        Lat::Meet => a.intersection(b),
    }
    .expect("case sets share labels")
}

/// `F o (G inner H)` against `(F o G) outer (F o H)`.
fn left_dist(o: ArithOp, inner: Lat, outer: Lat, c: &Case) -> (ArithResult, ArithResult) {
    let (a, b, d) = fgh(c);
    let left = op(o, &a, &lat(inner, &b, &d));
    let right = lat(outer, &op(o, &a, &b), &op(o, &a, &d));
    (left, right)
}

/// `(G inner H) o F` against `(G o F) outer (H o F)`.
fn right_dist(o: ArithOp, inner: Lat, outer: Lat, c: &Case) -> (ArithResult, ArithResult) {
    let (a, b, d) = fgh(c);
    let left = op(o, &lat(inner, &b, &d), &a);
    let right = lat(outer, &op(o, &b, &a), &op(o, &d, &a));
    (left, right)
}

macro_rules! dist_law {
    ($name:ident, $side:ident, $o:expr, $inner:expr, $outer:expr) => {
        fn $name(c: &Case) -> Verdict {
            let (l, r) = $side($o, $inner, $outer, c);
            strict(&l, &r)
        }
    };
    ($name:ident, $qualified:ident, $side:ident, $o:expr, $inner:expr, $outer:expr) => {
        dist_law!($name, $side, $o, $inner, $outer);
        fn $qualified(c: &Case) -> Verdict {
            let (l, r) = $side($o, $inner, $outer, c);
            defined(&l, &r)
        }
    };
}

dist_law!(p3_21_iii, left_dist, ArithOp::Add, Lat::Join, Lat::Join);
dist_law!(p3_21_iv, left_dist, ArithOp::Add, Lat::Meet, Lat::Meet);
dist_law!(p3_21_v, left_dist, ArithOp::Sub, Lat::Join, Lat::Meet);
dist_law!(p3_21_vi, left_dist, ArithOp::Sub, Lat::Meet, Lat::Join);
dist_law!(p3_21_vii, right_dist, ArithOp::Sub, Lat::Join, Lat::Join);
dist_law!(p3_21_viii, right_dist, ArithOp::Sub, Lat::Meet, Lat::Meet);
dist_law!(
    p3_21_ix,
    p3_21_ix_d,
    left_dist,
    ArithOp::Mul,
    Lat::Join,
    Lat::Join
);
dist_law!(p3_21_x, left_dist, ArithOp::Mul, Lat::Meet, Lat::Meet);
dist_law!(
    p3_21_xi,
    p3_21_xi_d,
    left_dist,
    ArithOp::Div,
    Lat::Join,
    Lat::Meet
);
dist_law!(p3_21_xii, left_dist, ArithOp::Div, Lat::Meet, Lat::Join);
dist_law!(
    p3_21_xiii,
    p3_21_xiii_d,
    right_dist,
    ArithOp::Div,
    Lat::Join,
    Lat::Join
);
dist_law!(p3_21_xiv, right_dist, ArithOp::Div, Lat::Meet, Lat::Meet);

// ---- distance and diameter ------------------------------------------------------

fn p4_5(c: &Case) -> Verdict {
    let d = distance_to_complement(f(c)).get();
    check((d - 1.0).abs() <= EQ_TOL, || format!("d(F, F^C) = {d}"))
}

fn p4_5_normalized(c: &Case) -> Verdict {
    if !is_normalized(f(c)).verdict {
        return Verdict::Vacuous;
    }
    p4_5(c)
}

fn d(a: &FuzzySoftSet, b: &FuzzySoftSet) -> f64 {
    distance(a, b).expect("case sets share labels").get()
}

fn t4_6(c: &Case) -> Verdict {
    let (l, m, hh) = (f(c), g(c), h(c));
    if !(subset(l, m) && subset(m, hh)) {
        return Verdict::Vacuous;
    }
    let (lm, lh, mh) = (d(l, m), d(l, hh), d(m, hh));
    check(lm <= lh + EQ_TOL && mh <= lh + EQ_TOL, || {
        format!("d(L,M) = {lm}, d(M,H) = {mh}, d(L,H) = {lh}")
    })
}

fn p4_9(c: &Case) -> Verdict {
    if f(c).n_parameters() != 1 {
        return Verdict::Vacuous;
    }
    let v = diameter(f(c)).get();
    check(v == 0.0, || format!("diameter {v}"))
}

fn t4_10(c: &Case) -> Verdict {
    if !subset(f(c), g(c)) {
        return Verdict::Vacuous;
    }
    let (a, b) = (diameter(f(c)).get(), diameter(g(c)).get());
    check(a <= b + EQ_TOL, || format!("δ(F) = {a} > δ(G) = {b}"))
}

fn t4_11(c: &Case) -> Verdict {
    let meet = lower(f(c), g(c));
    if meet.cells().iter().all(|&v| v == 0.0) {
        return Verdict::Vacuous;
    }
    let u = diameter(&upper(f(c), g(c))).get();
    let (a, b) = (diameter(f(c)).get(), diameter(g(c)).get());
    let bound = a.max(b);
    check(u <= bound + EQ_TOL && u <= a + b - a * b + EQ_TOL, || {
        format!("δ(F ∪ G) = {u}, δ(F) = {a}, δ(G) = {b}")
    })
}

// ---- sequences --------------------------------------------------------------------

fn t4_19(c: &Case) -> Verdict {
    let eps = c.epsilons[0];
    let prefix = &c.sets;
    let r = analyze_sequence(prefix, c.limit.as_ref(), eps).expect("nonempty prefix");
    let mut applied = false;
    if let Some(conv) = &r.convergent_consistent {
        if conv.pass {
            applied = true;
            let wide = analyze_sequence(prefix, None, 2.0 * eps).expect("nonempty prefix");
            if !wide.cauchy_consistent.pass {
                return Verdict::Violated(Failure::new(format!(
                    "convergent at ε = {eps} from N = {} but not Cauchy at 2ε",
                    conv.n
                )));
            }
        }
    }
    if r.cauchy_consistent.pass {
        applied = true;
        let n = r.cauchy_consistent.n;
        let mut pre = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                pre = pre.max(d(&prefix[i], &prefix[j]));
            }
        }
        if r.bounded.beta > eps + pre + EQ_TOL {
            return Verdict::Violated(Failure::new(format!(
                "Cauchy from N = {n} but β = {} > ε + {pre}",
                r.bounded.beta
            )));
        }
    }
    if applied {
        Verdict::Holds
    } else {
        Verdict::Vacuous
    }
}

// ---- mappings ---------------------------------------------------------------------

fn mapping(c: &Case) -> &MappingSpec {
    c.mapping.as_ref().expect("mapping case")
}

fn one_one_onto(f: &MappingSpec) -> bool {
    f.is_number_mapping() && f.q_bijective()
}

fn isometric(c: &Case) -> bool {
    check_isometry(mapping(c), &c.sets)
        .expect("samples match the mapping")
        .verdict
}

fn p4_23(c: &Case) -> Verdict {
    let m = mapping(c);
    if !m.p_bijective() || !c.sets.iter().all(number) {
        return Verdict::Vacuous;
    }
    let r = is_number_preserving(m, &c.sets).expect("samples match the mapping");
    match r.failure {
        None => Verdict::Holds,
        Some((k, v)) => Verdict::Violated(Failure::new(format!(
            "p is a bijection but the image of sample {k} is not a number ({v:?})"
        ))),
    }
}

fn t4_25(c: &Case) -> Verdict {
    let m = mapping(c);
    if !one_one_onto(m) || !c.sets.iter().all(number) {
        return Verdict::Vacuous;
    }
    let pres = is_number_preserving(m, &c.sets).expect("samples match the mapping");
    if let Some((k, _)) = pres.failure {
        return Verdict::Violated(Failure::new(format!("image of sample {k} is not a number")));
    }
    t4_37(c)
}

fn eps_ok(c: &Case) -> &[f64] {
    &c.epsilons
}

fn continuity_failure(r: &crate::analysis::ContinuityReport, what: &str) -> Verdict {
    match r.outcomes.iter().find(|o| o.delta.is_none()) {
        None => Verdict::Holds,
        Some(o) => Verdict::Violated(Failure::new(format!(
            "{what}: no δ for ε = {}{}",
            o.epsilon,
            o.witness
                .as_ref()
                .map(|w| format!(
                    " (pair {:?}: d1 = {}, d2 = {})",
                    w.pair, w.source_distance, w.image_distance
                ))
                .unwrap_or_default()
        ))),
    }
}

/// The preimage transform is continuous at every member of the target-side
/// collection.
fn p4_28(c: &Case) -> Verdict {
    let m = mapping(c);
    for k in 0..c.sets.len() {
        let r = check_continuity_of(|s| preimage(m, s), k, &c.sets, eps_ok(c))
            .expect("collection matches the mapping target");
        let v = continuity_failure(&r, &format!("preimage at member {k}"));
        if v != Verdict::Holds {
            return v;
        }
    }
    Verdict::Holds
}

fn p4_28_surjective(c: &Case) -> Verdict {
    if !mapping(c).q_surjective() {
        return Verdict::Vacuous;
    }
    p4_28(c)
}

/// `sets[0]` is the center, the rest a prefix converging toward it.
fn t4_29(c: &Case) -> Verdict {
    let m = mapping(c);
    let eps = c.epsilons[0];
    let cont = check_continuity_at(m, 0, &c.sets, &[eps]).expect("collection matches");
    let Some(delta) = cont.outcomes[0].delta else {
        return Verdict::Vacuous;
    };
    let center = &c.sets[0];
    let prefix = &c.sets[1..];
    let src = analyze_sequence(prefix, Some(center), delta).expect("nonempty prefix");
    if !src.convergent_consistent.as_ref().is_some_and(|v| v.pass) {
        return Verdict::Vacuous;
    }
    let mapped: Vec<FuzzySoftSet> = prefix
        .iter()
        .map(|s| image(m, s).expect("matches"))
        .collect();
    let fc = image(m, center).expect("matches");
    let out = analyze_sequence(&mapped, Some(&fc), eps).expect("nonempty prefix");
    check(
        out.convergent_consistent.as_ref().is_some_and(|v| v.pass),
        || format!("prefix converges at δ = {delta} but images do not at ε = {eps}"),
    )
}

fn p4_32(c: &Case) -> Verdict {
    let m = mapping(c);
    if !m.is_number_mapping() {
        return Verdict::Vacuous;
    }
    let r = check_uniform_continuity(m, &c.sets, eps_ok(c)).expect("collection matches");
    continuity_failure(&r, "image")
}

fn p4_32_injective(c: &Case) -> Verdict {
    if !mapping(c).q_injective() {
        return Verdict::Vacuous;
    }
    p4_32(c)
}

fn t4_33(c: &Case) -> Verdict {
    let m = mapping(c);
    let uni = check_uniform_continuity(m, &c.sets, eps_ok(c)).expect("collection matches");
    if !uni.verdict {
        return Verdict::Vacuous;
    }
    for k in 0..c.sets.len() {
        let r = check_continuity_at(m, k, &c.sets, eps_ok(c)).expect("collection matches");
        let v = continuity_failure(&r, &format!("uniformly continuous but not at member {k}"));
        if v != Verdict::Holds {
            return v;
        }
    }
    Verdict::Holds
}

fn t4_34(c: &Case) -> Verdict {
    let m = mapping(c);
    let eps = c.epsilons[0];
    let mapped: Vec<FuzzySoftSet> = c
        .sets
        .iter()
        .map(|s| image(m, s).expect("matches"))
        .collect();
    let mut applied = false;

    if isometric(c) {
        applied = true;
        let a = analyze_sequence(&c.sets, None, eps).expect("nonempty prefix");
        let b = analyze_sequence(&mapped, None, eps).expect("nonempty prefix");
        if a.cauchy_consistent.pass != b.cauchy_consistent.pass {
            return Verdict::Violated(Failure::new(format!(
                "isometric image changes the Cauchy verdict at ε = {eps}"
            )));
        }
    }

    let uni = check_uniform_continuity_of(|s| image(m, s), &c.sets, &[eps]).expect("matches");
    if let Some(delta) = uni.outcomes[0].delta {
        let src = analyze_sequence(&c.sets, None, delta).expect("nonempty prefix");
        if src.cauchy_consistent.pass {
            applied = true;
            let out = analyze_sequence(&mapped, None, eps).expect("nonempty prefix");
            if !out.cauchy_consistent.pass {
                return Verdict::Violated(Failure::new(format!(
                    "Cauchy at δ = {delta} but the image is not Cauchy at ε = {eps}"
                )));
            }
        }
    }
    if applied {
        Verdict::Holds
    } else {
        Verdict::Vacuous
    }
}

fn t4_36(c: &Case) -> Verdict {
    let m = mapping(c);
    if !one_one_onto(m) {
        return Verdict::Vacuous;
    }
    check(is_homeomorphism(m), || {
        "one-one onto but q is not bijective".into()
    })
}

fn t4_37(c: &Case) -> Verdict {
    if !one_one_onto(mapping(c)) {
        return Verdict::Vacuous;
    }
    let r = check_isometry(mapping(c), &c.sets).expect("samples match the mapping");
    match r.witness {
        None => Verdict::Holds,
        Some(w) => Verdict::Violated(Failure::new(format!(
            "pair {:?}: d1 = {}, d2 = {}",
            w.pair, w.source_distance, w.image_distance
        ))),
    }
}

/// Universal reading: an isometry is a one-one onto number function.
fn t4_38(c: &Case) -> Verdict {
    if c.sets.len() < 2 || !isometric(c) {
        return Verdict::Vacuous;
    }
    check(one_one_onto(mapping(c)), || {
        "isometric on the samples but not a one-one onto number function".into()
    })
}

/// Universal reading: an isometry is a homeomorphism.
fn t4_39(c: &Case) -> Verdict {
    if c.sets.len() < 2 || !isometric(c) {
        return Verdict::Vacuous;
    }
    check(is_homeomorphism(mapping(c)), || {
        "isometric on the samples but q is not bijective".into()
    })
}

// ---- generators ---------------------------------------------------------------------

fn pair_with<F: Fn(&mut Rand, usize, usize) -> FuzzySoftSet>(rng: &mut Rand, make: F) -> Case {
    let (n, m) = gen::shape(rng);
    Case::sets(vec![make(rng, n, m), make(rng, n, m)])
}

fn two_convex(rng: &mut Rand) -> Case {
    pair_with(rng, gen::convex_set)
}

fn two_concave(rng: &mut Rand) -> Case {
    pair_with(rng, gen::concave_set)
}

fn scaled(s: &FuzzySoftSet, k: f64) -> FuzzySoftSet {
    let rows = s
        .rows()
        .map(|r| r.iter().map(|v| v * k).collect())
        .collect();
    FuzzySoftSet::new(s.universe().clone(), s.parameters().clone(), rows)
        .expect("scaled values stay in range")
}

/// A convex `G` and a scaled-down copy `F ⊆ G`.
fn convex_chain(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let big = gen::convex_set(rng, n, m);
    let k = rng.random_range(0.0..=1.0);
    if rng.random_bool(0.2) {
        let other = gen::convex_set(rng, n, m);
        return Case::sets(vec![other, big]);
    }
    Case::sets(vec![scaled(&big, k), big])
}

fn convex_under_concave(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let outer = gen::concave_set(rng, n, m);
    let floor = outer.cells().iter().copied().fold(1.0, f64::min);
    let inner = scaled(&gen::convex_set(rng, n, m), floor);
    Case::sets(vec![inner, outer])
}

fn one_convex(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let s = if rng.random_bool(0.7) {
        gen::convex_set(rng, n, m)
    } else {
        gen::grid(rng, n, m)
    };
    Case::sets(vec![s])
}

fn one_number(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let s = if rng.random_bool(0.8) {
        gen::number(rng, n, m)
    } else {
        gen::grid(rng, n, m)
    };
    Case::sets(vec![s])
}

fn two_numbers(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let a = gen::number(rng, n, m);
    let b = if rng.random_bool(0.5) {
        let peak = a.profile().peak()[0];
        gen::number_at(rng, n, m, peak)
    } else {
        gen::number(rng, n, m)
    };
    Case::sets(vec![a, b])
}

fn maybe_normalized(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let s = if rng.random_bool(0.7) {
        gen::number(rng, n, m)
    } else {
        gen::grid(rng, n, m)
    };
    Case::sets(vec![s])
}

fn chain3(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let top = gen::grid(rng, n, m);
    let mid = gen::below(rng, &top);
    let low = gen::below(rng, &mid);
    Case::sets(vec![low, mid, top])
}

fn one_row(rng: &mut Rand) -> Case {
    let (_, m) = gen::shape(rng);
    Case::sets(vec![gen::grid(rng, 1, m)])
}

fn nested_pair(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let big = gen::grid(rng, n, m);
    let small = gen::below(rng, &big);
    Case::sets(vec![small, big])
}

fn any_pair(rng: &mut Rand) -> Case {
    pair_with(rng, gen::grid)
}

fn sequence(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let limit = gen::grid(rng, n, m);
    let len = rng.random_range(1..=12);
    let prefix = if rng.random_bool(0.7) {
        let r = rng.random_range(0.2..0.9);
        gen::converging_prefix(rng, &limit, len, r)
    } else {
        (0..len).map(|_| gen::grid(rng, n, m)).collect()
    };
    Case::sets(prefix).limit(limit).eps(vec![gen::epsilon(rng)])
}

fn samples_for(rng: &mut Rand, f: &MappingSpec, numbers: bool, size: usize) -> Vec<FuzzySoftSet> {
    let n = f.source_parameters().len();
    let m = f.source_universe().len();
    (0..size)
        .map(|_| {
            if numbers {
                gen::number(rng, n, m)
            } else {
                gen::grid(rng, n, m)
            }
        })
        .collect()
}

fn number_samples(rng: &mut Rand, p: ObjectMap, q: ParameterMap) -> Case {
    let (n, m) = gen::shape(rng);
    let f = gen::mapping(rng, n, m, p, q);
    let size = rng.random_range(1..=4);
    Case::with_mapping(samples_for(rng, &f, true, size), f)
}

fn bijective_p_samples(rng: &mut Rand) -> Case {
    let p = if rng.random_bool(0.5) {
        ObjectMap::Monotone
    } else {
        ObjectMap::Permutation
    };
    let q = gen::any_parameter_map(rng);
    number_samples(rng, p, q)
}

fn one_one_onto_samples(rng: &mut Rand) -> Case {
    number_samples(rng, ObjectMap::Monotone, ParameterMap::Bijection)
}

fn any_map_samples(rng: &mut Rand) -> Case {
    let p = gen::any_object_map(rng);
    let q = gen::any_parameter_map(rng);
    number_samples(rng, p, q)
}

fn epsilons(rng: &mut Rand) -> Vec<f64> {
    let mut e = vec![gen::epsilon(rng), gen::epsilon(rng)];
    e.sort_by(f64::total_cmp);
    e.dedup();
    e
}

fn on_labels(rng: &mut Rand, universe: &Labels, parameters: &Labels) -> FuzzySoftSet {
    let s = gen::grid(rng, parameters.len(), universe.len());
    FuzzySoftSet::new(
        universe.clone(),
        parameters.clone(),
        s.rows().map(<[f64]>::to_vec).collect(),
    )
    .expect("generated values are in range")
}

/// Target-side collection with profile twins; the mapping's `q` is
/// surjective about half of the time.
fn preimage_collection(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let p = gen::any_object_map(rng);
    let q = gen::any_parameter_map(rng);
    let f = gen::mapping(rng, n, m, p, q);
    let tu = f.target_universe().clone();
    let tp = f.target_parameters().clone();
    let size = rng.random_range(2..=5);
    let mut sets: Vec<FuzzySoftSet> = Vec::with_capacity(size);
    while sets.len() < size {
        if !sets.is_empty() && rng.random_bool(0.5) {
            let base = sets[rng.random_range(0..sets.len())].clone();
            sets.push(gen::profile_twin(rng, &base));
        } else {
            sets.push(on_labels(rng, &tu, &tp));
        }
    }
    Case::with_mapping(sets, f).eps(epsilons(rng))
}

fn number_map_collection(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let q = gen::any_parameter_map(rng);
    let f = gen::mapping(rng, n, m, ObjectMap::Monotone, q);
    let size = rng.random_range(2..=5);
    Case::with_mapping(gen::collection(rng, n, m, size), f).eps(epsilons(rng))
}

fn any_map_collection(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let p = gen::any_object_map(rng);
    let q = gen::any_parameter_map(rng);
    let f = gen::mapping(rng, n, m, p, q);
    let size = rng.random_range(2..=5);
    Case::with_mapping(gen::collection(rng, n, m, size), f).eps(epsilons(rng))
}

fn converging_with_map(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let p = gen::any_object_map(rng);
    let q = gen::any_parameter_map(rng);
    let f = gen::mapping(rng, n, m, p, q);
    let center = gen::grid(rng, n, m);
    let len = rng.random_range(2..=10);
    let r = rng.random_range(0.2..0.8);
    let mut sets = vec![center.clone()];
    sets.extend(gen::converging_prefix(rng, &center, len, r));
    Case::with_mapping(sets, f).eps(vec![gen::epsilon(rng)])
}

fn sequence_with_map(rng: &mut Rand) -> Case {
    let (n, m) = gen::shape(rng);
    let p = gen::any_object_map(rng);
    let q = gen::any_parameter_map(rng);
    let f = gen::mapping(rng, n, m, p, q);
    let limit = gen::grid(rng, n, m);
    let len = rng.random_range(2..=10);
    let r = rng.random_range(0.2..0.8);
    let prefix = gen::converging_prefix(rng, &limit, len, r);
    Case::with_mapping(prefix, f).eps(vec![gen::epsilon(rng)])
}

// ---- fixtures -----------------------------------------------------------------------------

fn worked_isometry() -> Vec<Case> {
    vec![Case::with_mapping(
        vec![fixtures::h_a(), fixtures::q_a()],
        fixtures::map_problem_4_22(),
    )]
}

fn worked_permutation() -> Vec<Case> {
    vec![Case::with_mapping(
        vec![fixtures::h_a()],
        fixtures::map_permuted(),
    )]
}

fn worked_numbers() -> Vec<Case> {
    vec![Case::sets(vec![fixtures::f_a(), fixtures::g_a()])]
}

fn worked_chain() -> Vec<Case> {
    vec![Case::sets(vec![
        fixtures::h_a_prime(),
        fixtures::m_a(),
        fixtures::l_a(),
    ])]
}

fn half_grid() -> Vec<Case> {
    vec![
        Case::sets(vec![fixtures::f_a()]),
        Case::sets(vec![gen::set_from_rows(vec![vec![0.5; 5]; 2])]),
    ]
}

// ---- catalog ---------------------------------------------------------------------------------

use Expected::{Falsifiable as F, HoldsOnDefinedCells as D, Verified as V};

const fn universal(
    id: &'static str,
    anchor: &'static str,
    expected: Expected,
    law: super::Law,
    domain: Domain,
) -> PropositionSpec {
    PropositionSpec {
        id,
        anchor,
        expected,
        strategy: Strategy::Universal(law),
        domain,
        fixtures: None,
    }
}

const fn on_defined(
    id: &'static str,
    anchor: &'static str,
    strict: super::Law,
    qualified: super::Law,
    arity: usize,
) -> PropositionSpec {
    PropositionSpec {
        id,
        anchor,
        expected: D,
        strategy: Strategy::DefinedCells { strict, qualified },
        domain: Domain::Cells { arity },
        fixtures: None,
    }
}

const fn restricted(
    id: &'static str,
    anchor: &'static str,
    restriction: &'static str,
    restricted: super::Law,
    unrestricted: super::Law,
    domain: Domain,
) -> PropositionSpec {
    PropositionSpec {
        id,
        anchor,
        expected: Expected::HoldsWithRestriction(restriction),
        strategy: Strategy::Restricted {
            restricted,
            unrestricted,
        },
        domain,
        fixtures: None,
    }
}

const fn sets(count: usize, gen: fn(&mut Rand) -> Case) -> Domain {
    Domain::Sets { count, gen }
}

const fn random(gen: fn(&mut Rand) -> Case) -> Domain {
    Domain::Random { gen }
}

const CELLS1: Domain = Domain::Cells { arity: 1 };
const CELLS2: Domain = Domain::Cells { arity: 2 };
const CELLS3: Domain = Domain::Cells { arity: 3 };

fn with_fixtures(mut spec: PropositionSpec, fixtures: fn() -> Vec<Case>) -> PropositionSpec {
    spec.fixtures = Some(fixtures);
    spec
}

/// The full catalog in a stable order.
pub fn catalog() -> Vec<PropositionSpec> {
    vec![
        universal(
            "T3.3",
            "convex(F) ∧ convex(G) ⇒ convex(F ∩ G)",
            V,
            t3_3,
            sets(2, two_convex),
        ),
        universal(
            "T3.4",
            "convex(F) ∧ convex(G) ∧ F ⊆ G ⇒ convex(F ∪ G) ∧ convex(F ∩ G)",
            V,
            t3_4,
            sets(2, convex_chain),
        ),
        universal(
            "T3.5",
            "convex(F) ∧ convex(G) ⇒ convex(F ∪ G)",
            F,
            t3_5,
            sets(2, two_convex),
        ),
        universal(
            "P3.8",
            "concave(F) ∧ concave(G) ⇒ concave(F ∩ G) ∧ concave(F ∪ G)",
            F,
            p3_8,
            sets(2, two_concave),
        ),
        restricted(
            "P3.9",
            "convex(F) ⇒ concave(F^C)",
            "single parameter",
            p3_9_single,
            p3_9,
            sets(1, one_convex),
        ),
        universal(
            "P3.10",
            "convex(F) ∧ concave(G) ∧ F ⊆ G ⇒ F ∪ G = G concave ∧ F ∩ G = F convex",
            V,
            p3_10,
            sets(2, convex_under_concave),
        ),
        universal(
            "P3.14",
            "number(F) ⇒ ∃t: profile(F)[t] = 1",
            V,
            p3_14,
            sets(1, one_number),
        ),
        universal(
            "P3.15",
            "number(F) ⇒ concave(F^C)",
            V,
            p3_15,
            sets(1, one_number),
        ),
        universal(
            "P3.18",
            "μ_F = μ_G = 0 ⇔ (F ×~ G and F ÷~ G undefined)",
            V,
            p3_18,
            CELLS2,
        ),
        with_fixtures(
            restricted(
                "P3.19",
                "number(F) ∧ number(G) ⇒ number(F +~ G) ∧ number(F -~ G) ∧ number(F ×~ G)",
                "common peak",
                p3_19_common_peak,
                p3_19,
                sets(2, two_numbers),
            ),
            worked_numbers,
        ),
        universal("P3.20.i", "F +~ G = G +~ F", V, p3_20_i, CELLS2),
        universal("P3.20.ii", "F ×~ G = G ×~ F", V, p3_20_ii, CELLS2),
        universal("P3.20.iii", "F +~ φ = F", V, p3_20_iii, CELLS1),
        universal("P3.20.iv", "F ×~ E = F", V, p3_20_iv, CELLS1),
        on_defined("P3.20.v", "F ×~ φ = φ", p3_20_v, p3_20_v_d, 1),
        on_defined("P3.20.vi", "φ ÷~ F = φ", p3_20_vi, p3_20_vi_d, 1),
        on_defined("P3.20.vii", "F ÷~ φ = E", p3_20_vii, p3_20_vii_d, 1),
        on_defined("P3.20.viii", "F ÷~ F = E", p3_20_viii, p3_20_viii_d, 1),
        universal(
            "P3.21.i",
            "(F +~ G) +~ H = F +~ (G +~ H)",
            V,
            p3_21_i,
            CELLS3,
        ),
        universal(
            "P3.21.ii",
            "(F ×~ G) ×~ H = F ×~ (G ×~ H)",
            V,
            p3_21_ii,
            CELLS3,
        ),
        universal(
            "P3.21.iii",
            "F +~ (G ∪ H) = (F +~ G) ∪ (F +~ H)",
            V,
            p3_21_iii,
            CELLS3,
        ),
        universal(
            "P3.21.iv",
            "F +~ (G ∩ H) = (F +~ G) ∩ (F +~ H)",
            V,
            p3_21_iv,
            CELLS3,
        ),
        universal(
            "P3.21.v",
            "F -~ (G ∪ H) = (F -~ G) ∩ (F -~ H)",
            F,
            p3_21_v,
            CELLS3,
        ),
        universal(
            "P3.21.vi",
            "F -~ (G ∩ H) = (F -~ G) ∪ (F -~ H)",
            F,
            p3_21_vi,
            CELLS3,
        ),
        universal(
            "P3.21.vii",
            "(G ∪ H) -~ F = (G -~ F) ∪ (H -~ F)",
            V,
            p3_21_vii,
            CELLS3,
        ),
        universal(
            "P3.21.viii",
            "(G ∩ H) -~ F = (G -~ F) ∩ (H -~ F)",
            V,
            p3_21_viii,
            CELLS3,
        ),
        on_defined(
            "P3.21.ix",
            "F ×~ (G ∪ H) = (F ×~ G) ∪ (F ×~ H)",
            p3_21_ix,
            p3_21_ix_d,
            3,
        ),
        universal(
            "P3.21.x",
            "F ×~ (G ∩ H) = (F ×~ G) ∩ (F ×~ H)",
            V,
            p3_21_x,
            CELLS3,
        ),
        on_defined(
            "P3.21.xi",
            "F ÷~ (G ∪ H) = (F ÷~ G) ∩ (F ÷~ H)",
            p3_21_xi,
            p3_21_xi_d,
            3,
        ),
        universal(
            "P3.21.xii",
            "F ÷~ (G ∩ H) = (F ÷~ G) ∪ (F ÷~ H)",
            V,
            p3_21_xii,
            CELLS3,
        ),
        on_defined(
            "P3.21.xiii",
            "(G ∪ H) ÷~ F = (G ÷~ F) ∪ (H ÷~ F)",
            p3_21_xiii,
            p3_21_xiii_d,
            3,
        ),
        universal(
            "P3.21.xiv",
            "(G ∩ H) ÷~ F = (G ÷~ F) ∩ (H ÷~ F)",
            V,
            p3_21_xiv,
            CELLS3,
        ),
        with_fixtures(
            restricted(
                "P4.5",
                "d(F, F^C) = 1",
                "normalized",
                p4_5_normalized,
                p4_5,
                sets(1, maybe_normalized),
            ),
            half_grid,
        ),
        with_fixtures(
            universal(
                "T4.6",
                "L ⊆ M ⊆ H ⇒ d(L,M) ≤ d(L,H) ∧ d(M,H) ≤ d(L,H)",
                V,
                t4_6,
                sets(3, chain3),
            ),
            worked_chain,
        ),
        universal("P4.9", "|E| = 1 ⇒ δ(F) = 0", V, p4_9, sets(1, one_row)),
        universal(
            "T4.10",
            "F ⊆ G ⇒ δ(F) ≤ δ(G)",
            F,
            t4_10,
            sets(2, nested_pair),
        ),
        with_fixtures(
            universal(
                "T4.11",
                "F ∩ G ≠ φ ⇒ δ(F ∪ G) ≤ max(δ(F), δ(G)) ≤ δ(F) +~ δ(G)",
                V,
                t4_11,
                sets(2, any_pair),
            ),
            worked_numbers,
        ),
        universal(
            "T4.19",
            "F_n → F' at ε ⇒ Cauchy at 2ε; Cauchy at ε from N ⇒ β ≤ ε + max_{i,j ≤ N} d(F_i, F_j)",
            V,
            t4_19,
            random(sequence),
        ),
        with_fixtures(
            universal(
                "P4.23",
                "p bijective ∧ number(F) ⇒ number(f(F))",
                F,
                p4_23,
                random(bijective_p_samples),
            ),
            worked_permutation,
        ),
        universal(
            "T4.25",
            "f one-one onto ⇒ number(f(F)) ∧ d1(F, G) = d2(f(F), f(G))",
            V,
            t4_25,
            random(one_one_onto_samples),
        ),
        restricted(
            "P4.28",
            "G ↦ f^-1(G) is continuous",
            "q surjective",
            p4_28_surjective,
            p4_28,
            random(preimage_collection),
        ),
        universal(
            "T4.29",
            "f continuous at F' ∧ F_n → F' ⇒ f(F_n) → f(F')",
            V,
            t4_29,
            random(converging_with_map),
        ),
        restricted(
            "P4.32",
            "f number function ⇒ f uniformly continuous",
            "q injective",
            p4_32_injective,
            p4_32,
            random(number_map_collection),
        ),
        universal(
            "T4.33",
            "f uniformly continuous ⇒ f continuous at every F",
            V,
            t4_33,
            random(any_map_collection),
        ),
        universal(
            "T4.34",
            "f uniformly continuous ∧ (F_n) Cauchy ⇒ (f(F_n)) Cauchy",
            V,
            t4_34,
            random(sequence_with_map),
        ),
        universal(
            "T4.36",
            "f one-one onto ⇒ f homeomorphism",
            V,
            t4_36,
            random(one_one_onto_samples),
        ),
        universal(
            "T4.37",
            "f one-one onto ⇒ d1(X, Y) = d2(f(X), f(Y))",
            V,
            t4_37,
            random(one_one_onto_samples),
        ),
        with_fixtures(
            universal(
                "T4.38",
                "f isometry ⇒ f one-one onto",
                F,
                t4_38,
                random(any_map_samples),
            ),
            worked_isometry,
        ),
        with_fixtures(
            universal(
                "T4.39",
                "f isometry ⇒ f homeomorphism",
                F,
                t4_39,
                random(any_map_samples),
            ),
            worked_isometry,
        ),
    ]
}

/// Ids a caller may expect in every report, in catalog order.
pub fn ids() -> Vec<&'static str> {
    catalog().into_iter().map(|s| s.id).collect()
}
