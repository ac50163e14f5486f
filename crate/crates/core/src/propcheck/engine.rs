use rand::SeedableRng;

use super::gen::{self, Rand, LATTICE_CAP, LATTICE_SHAPES, MAX_OBJECTS, MAX_PARAMETERS};
use super::{
    Case, Domain, Law, LawRole, Outcome, PropositionReport, PropositionSpec, Strategy, Trials,
    Verdict, Witness,
};

const SECONDARY_SALT: u64 = 0x9e37_79b9_7f4a_7c15;

fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn stream(seed: u64, id: &str, role: LawRole) -> Rand {
    let salt = match role {
        LawRole::Claim => 0,
        LawRole::Secondary => SECONDARY_SALT,
    };
    Rand::seed_from_u64(seed ^ fnv1a(id) ^ salt)
}

struct Search {
    trials: Trials,
    witness: Option<Witness>,
}

impl Search {
    fn new() -> Self {
        Search {
            trials: Trials::default(),
            witness: None,
        }
    }

    /// Evaluates one case; returns true once a violation is recorded.
    fn run(
        &mut self,
        law: Law,
        role: LawRole,
        tier: &'static str,
        case: Case,
        weight: usize,
    ) -> bool {
        match tier {
            "fixture" => self.trials.fixture += weight,
            "exhaustive" => self.trials.exhaustive += weight,
            _ => self.trials.random += weight,
        }
        match law(&case) {
            Verdict::Holds => {
                self.trials.non_vacuous += weight;
                false
            }
            Verdict::Vacuous => false,
            Verdict::Violated(failure) => {
                self.trials.non_vacuous += 1;
                let (case, failure) = shrink(law, case, failure);
                self.witness = Some(Witness {
                    role,
                    tier,
                    case,
                    failure,
                });
                true
            }
        }
    }
}

fn random_cells(rng: &mut Rand, arity: usize) -> Case {
    let (n, m) = gen::shape(rng);
    Case::sets((0..arity).map(|_| gen::grid(rng, n, m)).collect())
}

fn search(spec: &PropositionSpec, role: LawRole, seed: u64, budget: usize) -> Search {
    let law = spec.law(role);
    let mut s = Search::new();
    if let Some(fixtures) = spec.fixtures {
        for case in fixtures() {
            if s.run(law, role, "fixture", case, 1) {
                return s;
            }
        }
    }
    match spec.domain {
        Domain::Cells { arity } => {
            let case = gen::cell_tuples(arity);
            let tuples = case.sets[0].n_objects();
            if s.run(law, role, "exhaustive", case, tuples) {
                return s;
            }
        }
        Domain::Sets { count, .. } => {
            for (n, m) in LATTICE_SHAPES {
                for case in gen::lattice_cases(count, n, m) {
                    if s.run(law, role, "exhaustive", case, 1) {
                        return s;
                    }
                }
            }
        }
        Domain::Random { .. } => {}
    }
    let mut rng = stream(seed, spec.id, role);
    for _ in 0..budget {
        let case = match spec.domain {
            Domain::Cells { arity } => random_cells(&mut rng, arity),
            Domain::Sets { gen, .. } | Domain::Random { gen } => gen(&mut rng),
        };
        if s.run(law, role, "random", case, 1) {
            return s;
        }
    }
    s
}

fn shrink(law: Law, case: Case, failure: super::Failure) -> (Case, super::Failure) {
    if case.mapping.is_some() || case.sets.is_empty() {
        return (case, failure);
    }
    let shape = (case.sets[0].n_parameters(), case.sets[0].n_objects());
    let same_shape = case
        .sets
        .iter()
        .chain(&case.limit)
        .all(|s| (s.n_parameters(), s.n_objects()) == shape);
    if !same_shape {
        return (case, failure);
    }
    let select = |case: &Case, rows: &[usize], cols: &[usize]| Case {
        sets: case.sets.iter().map(|s| s.select(rows, cols)).collect(),
        mapping: None,
        limit: case.limit.as_ref().map(|l| l.select(rows, cols)),
        epsilons: case.epsilons.clone(),
    };
    let violated = |c: &Case| match law(c) {
        Verdict::Violated(f) => Some(f),
        _ => None,
    };

    if let Some((i, t)) = failure.cell {
        let single = select(&case, &[i], &[t]);
        if let Some(f) = violated(&single) {
            return (single, f);
        }
    }

    let mut rows: Vec<usize> = (0..shape.0).collect();
    let mut cols: Vec<usize> = (0..shape.1).collect();
    let mut best = (case.clone(), failure);
    let mut progress = true;
    while progress {
        progress = false;
        for k in 0..rows.len() {
            if rows.len() == 1 {
                break;
            }
            let mut r = rows.clone();
            r.remove(k);
            let c = select(&case, &r, &cols);
            if let Some(f) = violated(&c) {
                rows = r;
                best = (c, f);
                progress = true;
                break;
            }
        }
        for k in 0..cols.len() {
            if cols.len() == 1 {
                break;
            }
            let mut cs = cols.clone();
            cs.remove(k);
            let c = select(&case, &rows, &cs);
            if let Some(f) = violated(&c) {
                cols = cs;
                best = (c, f);
                progress = true;
                break;
            }
        }
    }
    best
}

fn bounds(spec: &PropositionSpec, budget: usize) -> String {
    let fixture = if spec.fixtures.is_some() {
        "worked-example fixtures; "
    } else {
        ""
    };
    let exhaustive = match spec.domain {
        Domain::Cells { arity } => format!("every {arity}-tuple of values in {{0, 0.1, ..., 1}}; "),
        Domain::Sets { count, .. } => {
            let shapes: Vec<String> = LATTICE_SHAPES
                .iter()
                .filter_map(|&(n, m)| {
                    gen::lattice_levels(count * n * m).map(|l| format!("{n}x{m}@{l}"))
                })
                .collect();
            format!(
                "{count} set(s) per case over lattice shapes {} (shape@levels, at most {LATTICE_CAP} cases each); ",
                shapes.join(" ")
            )
        }
        Domain::Random { .. } => String::new(),
    };
    format!("{fixture}{exhaustive}{budget} random cases up to {MAX_PARAMETERS}x{MAX_OBJECTS}")
}

/// Searches the catalog entry. Deterministic in `(seed, budget)`.
pub fn check(spec: &PropositionSpec, seed: u64, budget: usize) -> PropositionReport {
    let claim = search(spec, LawRole::Claim, seed, budget);
    let mut trials = claim.trials.clone();
    trials.bounds = bounds(spec, budget);
    let outcome = if let Some(w) = claim.witness {
        Outcome::Falsified(w)
    } else {
        let secondary = match spec.strategy {
            Strategy::Universal(_) => None,
            _ => search(spec, LawRole::Secondary, seed, budget).witness,
        };
        match (spec.strategy, secondary) {
            (Strategy::DefinedCells { .. }, Some(w)) => Outcome::HoldsOnDefinedCells(w),
            (Strategy::Restricted { .. }, Some(w)) => Outcome::HoldsWithRestriction(w),
            _ if trials.non_vacuous == 0 => Outcome::Undecided,
            _ => Outcome::Verified,
        }
    };
    PropositionReport {
        id: spec.id,
        expected: spec.expected,
        outcome,
        trials,
    }
}

pub(crate) fn check_many(
    specs: &[PropositionSpec],
    seed: u64,
    budget: usize,
) -> Vec<PropositionReport> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        specs.par_iter().map(|s| check(s, seed, budget)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        specs.iter().map(|s| check(s, seed, budget)).collect()
    }
}
