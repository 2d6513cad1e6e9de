//! Randomized invariant suites, runnable from the command line.
//!
//! Each suite draws its own seed from the root seed and its index, so the
//! outcome does not depend on how suites are spread over worker threads.

use serde::Serialize;

use crate::bundle::{
    birkhoff_factorize, bundle_constructions, h0_dimension, hom_basis, splitting_type, validate_morphism, Construction,
    SplittingType, TransitionBundle,
};
use crate::field::Scalar;
use crate::graded::{e_functor, inverse_e};
use crate::laurent::{parse_laurent, LaurentPoly};
use crate::sample::{self, SampleRng};
use crate::torsor::{
    classify_bundle, cocharacter_pushout, double_coset_type, double_coset_witnesses, pgl_lift, Cocharacter, GroupTag,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteReport>,
    pub passed: usize,
    pub failed: usize,
}

type SuiteFn = fn(&mut SampleRng, usize) -> (usize, usize);

const SUITES: &[(&str, SuiteFn)] = &[
    ("field-axioms", field_axioms),
    ("laurent-text-round-trip", laurent_round_trip),
    ("splitting-vs-sections", splitting_vs_sections),
    ("birkhoff-witness", birkhoff_witness),
    ("gauge-invariance", gauge_invariance),
    ("tensor-compatibility", tensor_compatibility),
    ("hn-preservation", hn_preservation),
    ("graded-round-trip", graded_round_trip),
    ("torsor-classification", torsor_classification),
    ("double-coset-invariance", double_coset_invariance),
    ("pgl-lifting", pgl_lifting),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Runs every suite with `trials` random cases each, spread over `workers`
/// threads.
pub fn run_selftest(seed: u64, trials: usize, workers: usize) -> SelftestReport {
    let workers = workers.clamp(1, SUITES.len());
    let mut results: Vec<Option<SuiteReport>> = vec![None; SUITES.len()];
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..SUITES.len())
                        .step_by(workers)
                        .map(|i| {
                            let (name, run) = SUITES[i];
                            let mut rng = sample::rng(sample::derive_seed(seed, i as u64));
                            let (passed, failed) = run(&mut rng, trials);
                            (i, SuiteReport { name, passed, failed })
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("suite worker panicked") {
                results[i] = Some(r);
            }
        }
    });
    let suites: Vec<SuiteReport> = results.into_iter().map(|r| r.expect("every suite ran")).collect();
    SelftestReport {
        seed,
        trials,
        passed: suites.iter().map(|s| s.passed).sum(),
        failed: suites.iter().map(|s| s.failed).sum(),
        suites,
    }
}

fn tally(results: impl IntoIterator<Item = bool>) -> (usize, usize) {
    results.into_iter().fold((0, 0), |(p, f), ok| if ok { (p + 1, f) } else { (p, f + 1) })
}

fn field_axioms(rng: &mut SampleRng, trials: usize) -> (usize, usize) {
    tally((0..trials).map(|_| {
        let field = sample::field_choice(rng);
        let [a, b, c] = [0; 3].map(|_| sample::scalar(rng, field, false));
        let assoc = &(&a + &b) + &c == &a + &(&b + &c) && &(&a * &b) * &c == &a * &(&b * &c);
        let distrib = &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        let inverse = a.is_zero() || (&a * &a.inv().expect("nonzero")).is_one();
        assoc && distrib && inverse && (&a + &-&a).is_zero()
    }))
}

fn laurent_round_trip(rng: &mut SampleRng, trials: usize) -> (usize, usize) {
    use rand::Rng;
    tally((0..trials).map(|_| {
        let field = sample::field_choice(rng);
        let terms: Vec<(i64, Scalar)> =
            (0..rng.gen_range(0..5)).map(|_| (rng.gen_range(-4..=4), sample::scalar(rng, field, false))).collect();
        let p = LaurentPoly::from_terms(field, terms).expect("one field");
        parse_laurent(field, &p.to_string()).is_ok_and(|q| q == p)
    }))
}

fn splitting_vs_sections(rng: &mut SampleRng, trials: usize) -> (usize, usize) {
    use rand::Rng;
    tally((0..trials).map(|_| {
        let field = sample::field_choice(rng);
        let n = rng.gen_range(1..=3);
        let e = sample::bundle(rng, field, n, 2);
        let ty = splitting_type(&e);
        (-4..=4).all(|m| ty.h0_of_twist(m) == h0_dimension(&e.twist(m))) && ty.degree() == e.degree()
    }))
}

fn birkhoff_witness(rng: &mut SampleRng, trials: usize) -> (usize, usize) {
    use rand::Rng;
    tally((0..trials).map(|_| {
        let field = sample::field_choice(rng);
        let n = rng.gen_range(1..=3);
        let e = sample::bundle(rng, field, n, 3);
        birkhoff_factorize(&e).is_ok_and(|w| w.check(e.transition()).all() && w.splitting == splitting_type(&e))
    }))
}

fn random_type(rng: &mut SampleRng, n: usize, bound: i64) -> Vec<i64> {
    use rand::Rng;
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

fn gauge_invariance(rng: &mut SampleRng, trials: usize) -> (usize, usize) {
    use rand::Rng;
    tally((0..trials).map(|_| {
        let field = sample::field_choice(rng);
        let n = rng.gen_range(1..=3);
        let exps = random_type(rng, n, 3);
        let e = sample::bundle_with_type(rng, field, &exps, 3);
        splitting_type(&e) == SplittingType::new(exps)
    }))
}

fn tensor_compatibility(rng: &mut SampleRng, trials: usize) -> (usize, usize) {
    use rand::Rng;
    tally((0..trials).map(|_| {
        let field = sample::field_choice(rng);
        let n = rng.gen_range(2..=3);
        let k = rng.gen_range(1..=2);
        let (a, b) = (random_type(rng, n, 2), random_type(rng, k, 2));
        let e = sample::bundle_with_type(rng, field, &a, 2);
        let f = sample::bundle_with_type(rng, field, &b, 2);
        let (ta, tb) = (SplittingType::new(a), SplittingType::new(b));
        let ty = |k, g: Option<&TransitionBundle>| bundle_constructions(k, &e, g).map(|x| splitting_type(&x));
        ty(Construction::Tensor, Some(&f)).is_ok_and(|t| t == ta.tensor(&tb))
            && ty(Construction::Dual, None).is_ok_and(|t| t == ta.dual())
            && ty(Construction::Exterior2, None).is_ok_and(|t| t == ta.exterior2())
            && ty(Construction::Sym2, None).is_ok_and(|t| t == ta.sym2())
            && ty(Construction::DirectSum, Some(&f)).is_ok_and(|t| t == ta.direct_sum(&tb))
    }))
}

fn hn_preservation(rng: &mut SampleRng, trials: usize) -> (usize, usize) {
    use rand::Rng;
    tally((0..trials.div_ceil(4)).map(|_| {
        let field = sample::field_choice(rng);
        let n = rng.gen_range(1..=2);
        let e = sample::bundle(rng, field, n, 2);
        let k = rng.gen_range(1..=2);
        let f = sample::bundle(rng, field, k, 2);
        hom_basis(&e, &f).is_ok_and(|basis| {
            basis.iter().all(|m| {
                let r = validate_morphism(m);
                r.valid && r.hn_preserved
            })
        })
    }))
}

fn graded_round_trip(rng: &mut SampleRng, trials: usize) -> (usize, usize) {
    tally((0..trials).map(|_| {
        let field = sample::field_choice(rng);
        let v = sample::graded_space(rng, 3, 3, 2);
        e_functor(&v, field).is_ok_and(|e| inverse_e(&e) == v)
    }))
}

fn torsor_classification(rng: &mut SampleRng, trials: usize) -> (usize, usize) {
    use rand::Rng;
    tally((0..trials).map(|_| {
        let n = rng.gen_range(1..=3);
        let chi = Cocharacter::gl(random_type(rng, n, 3));
        cocharacter_pushout(&chi, sample::field_choice(rng)).is_ok_and(|e| classify_bundle(&e) == chi.dominantize())
    }))
}

fn double_coset_invariance(rng: &mut SampleRng, trials: usize) -> (usize, usize) {
    use rand::Rng;
    tally((0..trials.div_ceil(2)).map(|_| {
        let field = sample::field_choice(rng);
        let n = rng.gen_range(1..=3);
        let lambda = random_type(rng, n, 2);
        let g = sample::loop_element(rng, field, &lambda, 3);
        let expected = Cocharacter::gl(lambda).dominantize();
        double_coset_type(&g).is_ok_and(|l| l == expected)
            && double_coset_witnesses(&g).is_ok_and(|w| w.lambda == expected && w.check(&g).all())
    }))
}

fn pgl_lifting(_: &mut SampleRng, _: usize) -> (usize, usize) {
    let mut results = Vec::new();
    for n in 1..=5 {
        for weights in dominant_tuples(n, 3) {
            let chi = Cocharacter::new(GroupTag::pgl(n), weights).expect("valid PGL tuple");
            results.push(pgl_lift(&chi).is_ok_and(|l| l.is_dominant() && l.project_to_pgl() == chi));
        }
    }
    tally(results)
}

/// Weakly decreasing tuples with entries in `[0, max]` and last entry 0.
fn dominant_tuples(n: usize, max: i64) -> Vec<Vec<i64>> {
    fn go(prefix: &mut Vec<i64>, n: usize, cap: i64, out: &mut Vec<Vec<i64>>) {
        if prefix.len() + 1 == n {
            let mut t = prefix.clone();
            t.push(0);
            out.push(t);
            return;
        }
        for w in (0..=cap).rev() {
            prefix.push(w);
            go(prefix, n, w, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, max, &mut out);
    out
}
