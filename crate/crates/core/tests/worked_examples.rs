//! Small worked examples with hand-checkable answers.

use p1torsor::bundle::{
    birkhoff_factorize, bundle_constructions, cohomology_dims, euler_witness, h0_dimension, hn_filtration,
    hom_dimension, is_semistable, make_bundle, splitting_type, twist, validate_morphism, BirkhoffWitness,
    BundleMorphism, Construction, HnStep,
};
use p1torsor::field::{scalar_arithmetic, ScalarOp};
use p1torsor::graded::{e_functor, fil_and_gr, graded_constructions, inverse_e, GradedConstruction};
use p1torsor::laurent::{laurent_arithmetic, parse_laurent, ring_membership, LaurentOp};
use p1torsor::matrix::{invert_variable, matrix_determinant, matrix_inverse, matrix_multiply};
use p1torsor::torsor::{
    classify_bundle, cocharacter_pushout, dominantize, double_coset_type, double_coset_witnesses, pgl_lift,
    DoubleCosetWitness,
};
use p1torsor::{
    Cocharacter, Error, Field, GradedVectorSpace, GroupTag, LaurentMatrix, LaurentPoly, Ring, Scalar, SplittingType,
    TransitionBundle,
};

const Q: Field = Field::Rationals;
const F5: Field = Field::PrimeField { p: 5 };

fn m(field: Field, rows: &[&[&str]]) -> LaurentMatrix {
    let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
    LaurentMatrix::parse(field, &rows).unwrap()
}

fn poly(field: Field, s: &str) -> LaurentPoly {
    parse_laurent(field, s).unwrap()
}

fn bundle(rows: &[&[&str]]) -> TransitionBundle {
    make_bundle(m(Q, rows)).unwrap()
}

fn ty(exps: &[i64]) -> SplittingType {
    SplittingType::new(exps.to_vec())
}

fn upper() -> TransitionBundle {
    bundle(&[&["t", "1"], &["0", "t^-1"]])
}

fn lower() -> TransitionBundle {
    bundle(&[&["t", "0"], &["1", "t^-1"]])
}

#[test]
fn scalars() {
    let half = Scalar::from_ratio(Q, &1.into(), &2.into()).unwrap();
    let third = Scalar::from_ratio(Q, &1.into(), &3.into()).unwrap();
    let sum = scalar_arithmetic(ScalarOp::Add, &half, Some(&third)).unwrap();
    assert_eq!(sum, Scalar::from_ratio(Q, &5.into(), &6.into()).unwrap());
    let inv = scalar_arithmetic(ScalarOp::Inv, &Scalar::from_i64(F5, 2), None).unwrap();
    assert_eq!(inv, Scalar::from_i64(F5, 3));
    let x = Scalar::from_i64(Q, -7);
    assert!(scalar_arithmetic(ScalarOp::Mul, &Scalar::zero(Q), Some(&x)).unwrap().is_zero());
    assert_eq!(Scalar::zero(Q).inv(), Err(Error::DivisionByZero));
}

#[test]
fn laurent_polynomials() {
    let mul = |f, a, b| laurent_arithmetic(LaurentOp::Mul, &poly(f, a), Some(&poly(f, b))).unwrap();
    assert_eq!(mul(Q, "1 + t", "1 - t"), poly(Q, "1 - t^2"));
    assert!(mul(Q, "t^-1", "t").is_one());
    assert!(mul(F5, "2*t", "3*t^-1").is_one());
    assert!(ring_membership(&poly(Q, "t^2 + 1"), Ring::PolyInT));
    assert!(!ring_membership(&poly(Q, "t^-1"), Ring::PolyInT));
    assert!(ring_membership(&poly(Q, "3*t^4"), Ring::MonomialUnit));
}

#[test]
fn matrices() {
    let id = LaurentMatrix::identity(Q, 2);
    let d = |e: &[i64]| LaurentMatrix::diag_t_powers(Q, e);
    assert_eq!(matrix_multiply(&d(&[1]), &d(&[-1])).unwrap(), LaurentMatrix::identity(Q, 1));
    let a = m(Q, &[&["1", "t"], &["0", "1"]]);
    let b = m(Q, &[&["1", "-t"], &["0", "1"]]);
    assert_eq!(matrix_multiply(&a, &b).unwrap(), id);

    assert_eq!(matrix_determinant(&d(&[2, -1])).unwrap(), poly(Q, "t"));
    let u = m(Q, &[&["t", "1"], &["0", "t^-1"]]);
    assert!(matrix_determinant(&u).unwrap().is_one());
    let ones = m(Q, &[&["1", "1"], &["1", "1"]]);
    assert!(matrix_determinant(&ones).unwrap().is_zero());

    assert_eq!(matrix_inverse(&u).unwrap(), m(Q, &[&["t^-1", "-1"], &["0", "t"]]));
    assert_eq!(matrix_inverse(&d(&[3, -2, 0])).unwrap(), d(&[-3, 2, 0]));
    assert!(matches!(matrix_inverse(&ones), Err(Error::NotAUnit(_))));

    assert_eq!(invert_variable(&d(&[2, -1])), d(&[-2, 1]));
    assert_eq!(invert_variable(&u), m(Q, &[&["t^-1", "1"], &["0", "t"]]));
}

#[test]
fn bundles_and_twists() {
    let e = make_bundle(LaurentMatrix::diag_t_powers(Q, &[2, -1])).unwrap();
    assert_eq!(e.rank(), 2);
    assert!(matches!(make_bundle(m(Q, &[&["1", "1"], &["1", "1"]])), Err(Error::NotABundle(_))));
    assert!(upper().determinant().is_one());
    assert_eq!(twist(&TransitionBundle::trivial(Q, 1), 2), TransitionBundle::line(Q, 2));
    let e = make_bundle(LaurentMatrix::diag_t_powers(Q, &[1, 0])).unwrap();
    assert_eq!(twist(&e, -1).transition(), &LaurentMatrix::diag_t_powers(Q, &[0, -1]));
}

#[test]
fn sections() {
    assert_eq!(h0_dimension(&TransitionBundle::line(Q, 3)), 4);
    assert_eq!(h0_dimension(&TransitionBundle::line(Q, -1)), 0);
    assert_eq!(h0_dimension(&lower()), 2);
}

#[test]
fn splitting_types() {
    assert_eq!(splitting_type(&TransitionBundle::split(Q, &[2, -1])), ty(&[2, -1]));
    assert_eq!(splitting_type(&upper()), ty(&[1, -1]));
    assert_eq!(splitting_type(&lower()), ty(&[0, 0]));
}

#[test]
fn birkhoff_witnesses() {
    let d = TransitionBundle::split(Q, &[2, -1]);
    let w = birkhoff_factorize(&d).unwrap();
    assert_eq!(w.splitting, ty(&[2, -1]));
    assert!(w.p.is_identity() && w.q.is_identity());

    // the stated witnesses verify, and so do the computed ones
    let stated = [
        (upper(), m(Q, &[&["1", "t"], &["0", "1"]]), ty(&[1, -1]), LaurentMatrix::identity(Q, 2)),
        (lower(), m(Q, &[&["t", "-1"], &["1", "0"]]), ty(&[0, 0]), m(Q, &[&["1", "t^-1"], &["0", "1"]])),
    ];
    for (e, p, splitting, q) in stated {
        let w = BirkhoffWitness { p, splitting: splitting.clone(), q };
        assert!(w.check(e.transition()).all());
        let ours = birkhoff_factorize(&e).unwrap();
        assert!(ours.check(e.transition()).all());
        assert_eq!(ours.splitting, splitting);
    }
}

#[test]
fn cohomology() {
    let c = cohomology_dims(&TransitionBundle::line(Q, -2));
    assert_eq!((c.h0, c.h1), (0, 1));
    let c = ty(&[2, -1]).cohomology();
    assert_eq!((c.h0, c.h1), (3, 0));
    let c = ty(&[-3, -2]).cohomology();
    assert_eq!((c.h0, c.h1), (0, 3));
}

#[test]
fn constructions() {
    let dual = bundle_constructions(Construction::Dual, &TransitionBundle::line(Q, 4), None).unwrap();
    assert_eq!(splitting_type(&dual), ty(&[-4]));
    let e = TransitionBundle::split(Q, &[2, -1]);
    let f = TransitionBundle::split(Q, &[0, 1]);
    let t = bundle_constructions(Construction::Tensor, &e, Some(&f)).unwrap();
    assert_eq!(splitting_type(&t), ty(&[3, 2, 0, -1]));
    let ext = bundle_constructions(Construction::Exterior2, &TransitionBundle::split(Q, &[3, -5]), None).unwrap();
    assert_eq!(splitting_type(&ext), ty(&[-2]));
    assert!(bundle_constructions(Construction::Tensor, &e, None).is_err());
}

#[test]
fn hn_filtrations() {
    let steps = |exps: &[i64]| hn_filtration(&TransitionBundle::split(Q, exps)).unwrap();
    let hn = steps(&[2, -1, 0, 2]);
    let expected = [(2, 2), (0, 1), (-1, 1)].map(|(slope, rank)| HnStep { slope, rank });
    assert_eq!(hn.steps, expected);
    assert_eq!(hn.cumulative_ranks(), vec![2, 3, 4]);
    assert_eq!(steps(&[1, 1]).steps, vec![HnStep { slope: 1, rank: 2 }]);
    assert_eq!(steps(&[5]).steps, vec![HnStep { slope: 5, rank: 1 }]);
}

#[test]
fn semistability_and_homs() {
    assert!(is_semistable(&lower()));
    assert!(!is_semistable(&upper()));
    assert!(is_semistable(&bundle(&[&["3*t^-7"]])));
    let o = |a| TransitionBundle::line(Q, a);
    assert_eq!(hom_dimension(&o(1), &o(0)).unwrap(), 0);
    assert_eq!(hom_dimension(&o(0), &o(2)).unwrap(), 3);
    assert_eq!(hom_dimension(&lower(), &lower()).unwrap(), 4);
}

#[test]
fn morphisms() {
    let e = upper();
    let id = LaurentMatrix::identity(Q, 2);
    let r = validate_morphism(&BundleMorphism { source: e.clone(), target: e, chart0: id.clone(), chart1: id });
    assert!(r.valid && r.hn_preserved);

    let euler_in = BundleMorphism {
        source: TransitionBundle::line(Q, -1),
        target: TransitionBundle::trivial(Q, 2),
        chart0: m(Q, &[&["1"], &["t"]]),
        chart1: m(Q, &[&["t^-1"], &["1"]]),
    };
    let r = validate_morphism(&euler_in);
    assert!(r.valid && r.hn_preserved);

    // Hom(O(1), O + O) = 0, so no nonzero candidate is valid
    for (a, b) in [("1", "0"), ("t", "1"), ("t^-1", "0")] {
        let bad = BundleMorphism {
            source: TransitionBundle::line(Q, 1),
            target: TransitionBundle::trivial(Q, 2),
            chart0: m(Q, &[&[a], &[b]]),
            chart1: m(Q, &[&[a], &[b]]),
        };
        assert!(!validate_morphism(&bad).valid);
    }
}

#[test]
fn euler_sequence() {
    let w = euler_witness();
    assert!(validate_morphism(&w.inclusion).valid && validate_morphism(&w.projection).valid);
    assert_eq!(w.gr_mismatch.mid_slopes, vec![0, 0]);
    assert_eq!(w.gr_mismatch.outer_slopes, vec![-1, 1]);
    assert!(w.gr_mismatch.composition_is_zero);
    assert!(!w.gr_mismatch.slopes_match);
}

#[test]
fn graded_spaces() {
    let g = |w: &[(i64, usize)]| GradedVectorSpace::new(w.iter().copied());
    let e = e_functor(&g(&[(-1, 1)]), Q).unwrap();
    assert_eq!(e, TransitionBundle::line(Q, -1));
    assert_eq!(e_functor(&g(&[(0, 1)]), Q).unwrap(), TransitionBundle::line(Q, 0));
    let e = e_functor(&g(&[(1, 1), (0, 2)]), Q).unwrap();
    assert_eq!(e.transition(), &LaurentMatrix::diag_t_powers(Q, &[1, 0, 0]));
    assert_eq!(splitting_type(&e), ty(&[1, 0, 0]));

    assert_eq!(inverse_e(&TransitionBundle::split(Q, &[2, -1, 2])), g(&[(2, 2), (-1, 1)]));
    assert_eq!(inverse_e(&TransitionBundle::trivial(Q, 3)), g(&[(0, 3)]));

    let v = g(&[(2, 2), (0, 1), (-1, 1)]);
    let fg = fil_and_gr(&v, 0);
    assert_eq!((fg.fil_dim, fg.gr_dim), (3, 1));
    assert_eq!(fil_and_gr(&v, -9).fil_dim, 4);
    assert_eq!(fil_and_gr(&v, 9).fil_dim, 0);

    assert_eq!(graded_constructions(GradedConstruction::Dual, &g(&[(1, 2)]), None).unwrap(), g(&[(-1, 2)]));
    let t = graded_constructions(GradedConstruction::Tensor, &g(&[(1, 1)]), Some(&g(&[(-1, 1)]))).unwrap();
    assert_eq!(t, g(&[(0, 1)]));
}

#[test]
fn cocharacters() {
    assert_eq!(dominantize(&Cocharacter::gl(vec![0, 2, -1])).weights(), &[2, 0, -1]);
    let pgl = Cocharacter::new(GroupTag::pgl(2), vec![3, 1]).unwrap();
    assert_eq!(dominantize(&pgl).weights(), &[2, 0]);
    let sl = Cocharacter::new(GroupTag::sl(2), vec![-1, 1]).unwrap();
    assert_eq!(dominantize(&sl).weights(), &[1, -1]);

    let e = cocharacter_pushout(&Cocharacter::gl(vec![1, 0]), Q).unwrap();
    assert_eq!(e.transition(), &LaurentMatrix::diag_t_powers(Q, &[-1, 0]));
    assert_eq!(splitting_type(&e), ty(&[0, -1]));
    assert_eq!(cocharacter_pushout(&Cocharacter::gl(vec![0, 0, 0]), Q).unwrap(), TransitionBundle::trivial(Q, 3));
    assert_eq!(cocharacter_pushout(&Cocharacter::gl(vec![-2]), Q).unwrap(), TransitionBundle::line(Q, 2));

    assert_eq!(classify_bundle(&TransitionBundle::line(Q, -1)).weights(), &[1]);
    assert_eq!(classify_bundle(&TransitionBundle::trivial(Q, 2)).weights(), &[0, 0]);
    assert_eq!(classify_bundle(&TransitionBundle::split(Q, &[2, -1])).weights(), &[1, -2]);

    for w in [vec![1, 0], vec![2, 1, 0]] {
        let chi = Cocharacter::new(GroupTag::pgl(w.len()), w.clone()).unwrap();
        let lift = pgl_lift(&chi).unwrap();
        assert_eq!(lift, Cocharacter::gl(w));
    }
    assert!(pgl_lift(&Cocharacter::gl(vec![1])).is_err());
}

#[test]
fn double_cosets() {
    let d = LaurentMatrix::diag_t_powers(Q, &[2, -1]);
    assert_eq!(double_coset_type(&d).unwrap().weights(), &[2, -1]);
    let w = double_coset_witnesses(&d).unwrap();
    assert!(w.u.is_identity() && w.v.is_identity());

    let g = upper().transition().clone();
    assert_eq!(double_coset_type(&g).unwrap().weights(), &[0, 0]);
    let stated = DoubleCosetWitness {
        u: m(Q, &[&["0", "1"], &["-1", "t^-1"]]),
        lambda: Cocharacter::gl(vec![0, 0]),
        v: m(Q, &[&["1", "0"], &["t", "1"]]),
    };
    assert!(stated.check(&g).all());
    assert!(double_coset_witnesses(&g).unwrap().check(&g).all());

    let u = m(Q, &[&["1", "t^-1"], &["0", "1"]]);
    assert_eq!(double_coset_type(&u.mul(&g)).unwrap().weights(), &[0, 0]);
    assert!(matches!(double_coset_type(&m(Q, &[&["1", "1"], &["1", "1"]])), Err(Error::NotABundle(_))));
}
