//! Seeded random generators for bundles, gauge transformations, graded
//! spaces, and loop-group elements. All randomness flows from an explicit
//! seed so transcripts are reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bundle::TransitionBundle;
use crate::field::{Field, Scalar};
use crate::graded::GradedVectorSpace;
use crate::laurent::LaurentPoly;
use crate::matrix::LaurentMatrix;

pub type SampleRng = ChaCha8Rng;

/// Seed used when a caller does not supply one.
pub const DEFAULT_SEED: u64 = 20_241_015;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent seed for shard `index` of a run rooted at `root`.
pub fn derive_seed(root: u64, index: u64) -> u64 {
    // splitmix64
    let mut z = root.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn scalar(rng: &mut impl Rng, field: Field, nonzero: bool) -> Scalar {
    loop {
        let s = match field {
            Field::Rationals => {
                let num = rng.gen_range(-3i64..=3);
                let den = if rng.gen_bool(0.2) { 2 } else { 1 };
                Scalar::from_ratio(field, &num.into(), &den.into()).expect("nonzero denominator")
            }
            Field::PrimeField { p } => Scalar::from_i64(field, rng.gen_range(0..p as i64)),
        };
        if !nonzero || !s.is_zero() {
            return s;
        }
    }
}

/// `I + c t^e E_ij` for a random `i != j`.
fn elementary(rng: &mut impl Rng, field: Field, n: usize, exps: std::ops::RangeInclusive<i64>) -> LaurentMatrix {
    let mut m = LaurentMatrix::identity(field, n);
    if n < 2 {
        return m;
    }
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(1..n)) % n;
    let e = rng.gen_range(exps);
    m.set(i, j, LaurentPoly::monomial(scalar(rng, field, true), e));
    m
}

fn permutation(rng: &mut impl Rng, field: Field, n: usize) -> LaurentMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    LaurentMatrix::permutation(field, &perm)
}

fn constant_diagonal(rng: &mut impl Rng, field: Field, n: usize) -> LaurentMatrix {
    LaurentMatrix::from_fn(field, n, n, |i, j| {
        if i == j {
            LaurentPoly::constant(if rng.gen_bool(0.5) { Scalar::one(field) } else { scalar(rng, field, true) })
        } else {
            LaurentPoly::zero(field)
        }
    })
}

/// A random element of `GL_n(k[t])` with constant determinant: a product of
/// `steps` elementary matrices with entries of degree at most `max_degree`,
/// a permutation, and a constant diagonal.
pub fn gauge_in_t(rng: &mut impl Rng, field: Field, n: usize, steps: usize, max_degree: i64) -> LaurentMatrix {
    let mut m = constant_diagonal(rng, field, n).mul(&permutation(rng, field, n));
    for _ in 0..steps {
        m = m.mul(&elementary(rng, field, n, 0..=max_degree));
    }
    m
}

/// A random element of `GL_n(k[t^-1])` with constant determinant.
pub fn gauge_in_t_inv(rng: &mut impl Rng, field: Field, n: usize, steps: usize, max_degree: i64) -> LaurentMatrix {
    gauge_in_t(rng, field, n, steps, max_degree).invert_variable()
}

/// A random bundle of rank `n` whose transition entries have exponents in
/// `[-bound, bound]`: a diagonal of random powers mixed by Laurent elementary
/// operations on both sides, keeping only those that stay within the bound.
pub fn bundle(rng: &mut impl Rng, field: Field, n: usize, bound: i64) -> TransitionBundle {
    let exps: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
    let mut t = LaurentMatrix::diag_t_powers(field, &exps);
    for _ in 0..4 * n {
        let e = elementary(rng, field, n, -bound..=bound);
        let next = if rng.gen_bool(0.5) { e.mul(&t) } else { t.mul(&e) };
        let within = next.min_exp().is_some_and(|lo| lo >= -bound) && next.max_exp().is_some_and(|hi| hi <= bound);
        if within {
            t = next;
        }
    }
    t = permutation(rng, field, n).mul(&t);
    TransitionBundle::new(t).expect("products of elementary matrices are invertible")
}

/// A random bundle isomorphic to `O(a_1) + ... + O(a_n)`.
pub fn bundle_with_type(rng: &mut impl Rng, field: Field, exps: &[i64], steps: usize) -> TransitionBundle {
    let n = exps.len();
    let p = gauge_in_t(rng, field, n, steps, 1);
    let q = gauge_in_t_inv(rng, field, n, steps, 1);
    TransitionBundle::split(field, exps).gauge(&p, &q).expect("gauge preserves invertibility")
}

pub fn graded_space(rng: &mut impl Rng, max_weights: usize, weight_bound: i64, max_dim: usize) -> GradedVectorSpace {
    let count = rng.gen_range(1..=max_weights);
    GradedVectorSpace::new(
        (0..count).map(|_| (rng.gen_range(-weight_bound..=weight_bound), rng.gen_range(1..=max_dim))),
    )
}

pub fn field_choice(rng: &mut impl Rng) -> Field {
    if rng.gen_bool(0.5) {
        Field::Rationals
    } else {
        Field::PrimeField { p: 5 }
    }
}

/// A loop-group element `u * t^lambda * v` with `u` in `GL_n(k[t^-1])` and
/// `v` in `GL_n(k[t])`, both with constant determinant.
pub fn loop_element(rng: &mut impl Rng, field: Field, lambda: &[i64], steps: usize) -> LaurentMatrix {
    let n = lambda.len();
    let u = gauge_in_t_inv(rng, field, n, steps, 1);
    let v = gauge_in_t(rng, field, n, steps, 1);
    u.mul(&LaurentMatrix::diag_t_powers(field, lambda)).mul(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Ring;

    #[test]
    fn gauges_have_constant_determinant() {
        let mut r = rng(7);
        for field in [Field::Rationals, Field::PrimeField { p: 5 }] {
            for n in 1..=4 {
                let p = gauge_in_t(&mut r, field, n, 5, 2);
                assert!(p.entries_in(Ring::PolyInT));
                assert!(p.determinant().unwrap().is_in(Ring::ConstUnit));
                let q = gauge_in_t_inv(&mut r, field, n, 5, 2);
                assert!(q.entries_in(Ring::PolyInTInv));
            }
        }
    }

    #[test]
    fn bundles_respect_bound() {
        let mut r = rng(11);
        for _ in 0..20 {
            let e = bundle(&mut r, Field::Rationals, 3, 3);
            let t = e.transition();
            assert!(t.min_exp().unwrap() >= -3 && t.max_exp().unwrap() <= 3);
        }
    }

    #[test]
    fn reproducible() {
        let a = bundle(&mut rng(3), Field::Rationals, 3, 2);
        let b = bundle(&mut rng(3), Field::Rationals, 3, 2);
        assert_eq!(a, b);
        assert_ne!(derive_seed(1, 0), derive_seed(1, 1));
    }
}
