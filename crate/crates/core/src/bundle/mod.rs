//! Vector bundles on the projective line, presented by a transition matrix
//! between the charts `Spec k[t]` and `Spec k[t^-1]`.
//!
//! Sections are pairs `(s0, s1)` with `s0` in `k[t]^n`, `s1` in `k[t^-1]^n`
//! and `s0 = T * s1`. With this orientation `diag(t^a)` is `O(a)`, whose
//! global sections are spanned by `1, t, ..., t^a`.

mod birkhoff;
mod constructions;
mod hn;
mod sections;
mod splitting;

pub use birkhoff::{birkhoff_factorize, BirkhoffWitness};
pub use constructions::{bundle_constructions, Construction};
pub use hn::{
    euler_witness, euler_witness_over, hn_filtration, hom_basis, hom_basis_from_frames, validate_morphism,
    BundleMorphism, EulerWitness, GrMismatch, HnFiltration, HnStep, MorphismReport,
};
pub use sections::{h0_dimension, h0_profile};
pub use splitting::{cohomology_dims, hom_dimension, is_semistable, splitting_type, Cohomology, SplittingType};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::laurent::LaurentPoly;
use crate::matrix::LaurentMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransitionBundle {
    transition: LaurentMatrix,
    det_coeff: Scalar,
    degree: i64,
}

impl TransitionBundle {
    /// Validates that `T` is square, nonempty, and has determinant `c * t^d`.
    pub fn new(transition: LaurentMatrix) -> Result<Self> {
        if !transition.is_square() {
            return Err(Error::NotABundle(format!("transition matrix is {}x{}", transition.rows(), transition.cols())));
        }
        if transition.rows() == 0 {
            return Err(Error::NotABundle("rank 0".into()));
        }
        let det = transition.determinant()?;
        let (c, d) =
            det.as_monomial().ok_or_else(|| Error::NotABundle(format!("det = {det} is not a monomial unit")))?;
        Ok(TransitionBundle { det_coeff: c.clone(), degree: d, transition })
    }

    /// The line bundle `O(a)`.
    pub fn line(field: Field, a: i64) -> Self {
        Self::split(field, &[a])
    }

    /// `O(a_1) + ... + O(a_n)`.
    pub fn split(field: Field, exps: &[i64]) -> Self {
        Self::new(LaurentMatrix::diag_t_powers(field, exps)).expect("diagonal monomials")
    }

    pub fn trivial(field: Field, n: usize) -> Self {
        Self::split(field, &vec![0; n])
    }

    pub fn rank(&self) -> usize {
        self.transition.rows()
    }

    pub fn field(&self) -> Field {
        self.transition.field()
    }

    pub fn transition(&self) -> &LaurentMatrix {
        &self.transition
    }

    /// The `d` in `det T = c * t^d`.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn determinant(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.det_coeff.clone(), self.degree)
    }

    /// `E(m) = E (x) O(m)`, transition `t^m * T`.
    pub fn twist(&self, m: i64) -> Self {
        TransitionBundle {
            transition: self.transition.shift(m),
            det_coeff: self.det_coeff.clone(),
            degree: self.degree + m * self.rank() as i64,
        }
    }

    /// The bundle with transition `A * T * B`; for `A` in `GL_n(k[t])` and
    /// `B` in `GL_n(k[t^-1])` this is an isomorphic bundle.
    pub fn gauge(&self, a: &LaurentMatrix, b: &LaurentMatrix) -> Result<Self> {
        Self::new(a.checked_mul(&self.transition)?.checked_mul(b)?)
    }
}

pub fn make_bundle(transition: LaurentMatrix) -> Result<TransitionBundle> {
    TransitionBundle::new(transition)
}

pub fn twist(bundle: &TransitionBundle, m: i64) -> TransitionBundle {
    bundle.twist(m)
}
