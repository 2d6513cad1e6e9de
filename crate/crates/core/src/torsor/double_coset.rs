//! Normal form `g = u * t^lambda * v` with `u` over `k[t^-1]`, `v` over
//! `k[t]` (a unit of `k[[t]]`) and `lambda` dominant.
//!
//! The substitution `t -> t^-1` swaps the two gauge groups, so a Birkhoff
//! witness `P * t^D * Q` of the substituted matrix transports to
//! `g = P(t^-1) * t^-D * Q(t^-1)`. Reversing the coordinates sorts `-D`
//! into dominant order.

use serde::Serialize;

use super::cocharacter::Cocharacter;
use crate::bundle::{birkhoff_factorize, TransitionBundle};
use crate::error::{Error, Result};
use crate::laurent::Ring;
use crate::matrix::LaurentMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetWitness {
    pub u: LaurentMatrix,
    pub lambda: Cocharacter,
    pub v: LaurentMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DoubleCosetCheck {
    pub product_matches: bool,
    pub u_polynomial_in_t_inv: bool,
    pub det_u_constant: bool,
    pub v_polynomial_in_t: bool,
    pub det_v_power_series_unit: bool,
    pub lambda_dominant: bool,
    /// `u^-1 * g * v^-1 = t^lambda`.
    pub uniformization: bool,
}

impl DoubleCosetCheck {
    pub fn all(&self) -> bool {
        self.product_matches
            && self.u_polynomial_in_t_inv
            && self.det_u_constant
            && self.v_polynomial_in_t
            && self.det_v_power_series_unit
            && self.lambda_dominant
            && self.uniformization
    }
}

impl DoubleCosetWitness {
    pub fn middle(&self) -> LaurentMatrix {
        LaurentMatrix::diag_t_powers(self.u.field(), self.lambda.weights())
    }

    pub fn check(&self, g: &LaurentMatrix) -> DoubleCosetCheck {
        let n = self.lambda.weights().len();
        let shapes_ok = [&self.u, &self.v, g].iter().all(|m| m.rows() == n && m.cols() == n && m.field() == g.field());
        let det_u = self.u.determinant().ok();
        let det_v = self.v.determinant().ok();
        let middle = self.middle();
        let uniformization = shapes_ok
            && match (self.u.inverse(), self.v.inverse()) {
                (Ok(ui), Ok(vi)) => ui.mul(g).mul(&vi) == middle,
                _ => false,
            };
        DoubleCosetCheck {
            product_matches: shapes_ok && &self.u.mul(&middle).mul(&self.v) == g,
            u_polynomial_in_t_inv: self.u.entries_in(Ring::PolyInTInv),
            det_u_constant: det_u.is_some_and(|d| d.is_in(Ring::ConstUnit)),
            v_polynomial_in_t: self.v.entries_in(Ring::PolyInT),
            det_v_power_series_unit: det_v.is_some_and(|d| d.is_in(Ring::PolyInT) && !d.coeff(0).is_zero()),
            lambda_dominant: self.lambda.is_dominant(),
            uniformization,
        }
    }
}

fn reversal(field: crate::field::Field, n: usize) -> LaurentMatrix {
    LaurentMatrix::permutation(field, &(0..n).rev().collect::<Vec<_>>())
}

fn as_bundle(g: &LaurentMatrix) -> Result<TransitionBundle> {
    TransitionBundle::new(g.invert_variable())
}

/// The dominant `lambda` with `g in GL_n(k[t^-1]) t^lambda GL_n(k[[t]])`.
pub fn double_coset_type(g: &LaurentMatrix) -> Result<Cocharacter> {
    let bundle = as_bundle(g)?;
    let ty = crate::bundle::splitting_type(&bundle);
    Ok(Cocharacter::gl(ty.exponents().iter().rev().map(|a| -a).collect()).dominantize())
}

pub fn double_coset_witnesses(g: &LaurentMatrix) -> Result<DoubleCosetWitness> {
    let bundle = as_bundle(g)?;
    let w = birkhoff_factorize(&bundle)?;
    let n = g.rows();
    let j = reversal(g.field(), n);
    let witness = DoubleCosetWitness {
        u: w.p.invert_variable().mul(&j),
        lambda: Cocharacter::gl(w.splitting.exponents().iter().rev().map(|a| -a).collect()),
        v: j.mul(&w.q.invert_variable()),
    };
    let check = witness.check(g);
    if !check.all() {
        return Err(Error::InternalSearchFailure(format!("double coset witness failed verification: {check:?}")));
    }
    Ok(witness)
}
