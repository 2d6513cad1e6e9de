//! Birkhoff–Grothendieck factorization `T = P * diag(t^D) * Q` with
//! `P in GL_n(k[t])` and `Q in GL_n(k[t^-1])`.
//!
//! With `D` known, the rows `p_i` of `P' = P^-1` are exactly the polynomial
//! row vectors with `p_i * T * t^-D_i` in `k[t^-1]^n`. Each such row has
//! degree at most `D_i + maxexp(T^-1)`, so the search space is finite. The
//! constant term of `Q = t^-D * P' * T` is invertible iff `det P'` is a
//! nonzero constant, so rows are picked greedily, smallest exponent first,
//! keeping the constant terms of the resulting rows of `Q` independent.

use std::collections::BTreeMap;

use serde::Serialize;

use super::splitting::{try_splitting_type, SplittingType};
use super::TransitionBundle;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::laurent::{LaurentPoly, Ring};
use crate::linalg::{sparse_from_dense, Echelon, SparseRow};
use crate::matrix::LaurentMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BirkhoffWitness {
    /// Entries in `k[t]`, determinant a nonzero constant.
    pub p: LaurentMatrix,
    pub splitting: SplittingType,
    /// Entries in `k[t^-1]`, determinant a nonzero constant.
    pub q: LaurentMatrix,
}

/// Outcome of re-checking a witness, one flag per invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessCheck {
    pub product_matches: bool,
    pub p_polynomial_in_t: bool,
    pub q_polynomial_in_t_inv: bool,
    pub det_p_constant: bool,
    pub det_q_constant: bool,
    pub exponents_sorted: bool,
}

impl WitnessCheck {
    pub fn all(&self) -> bool {
        self.product_matches
            && self.p_polynomial_in_t
            && self.q_polynomial_in_t_inv
            && self.det_p_constant
            && self.det_q_constant
            && self.exponents_sorted
    }
}

impl BirkhoffWitness {
    pub fn middle(&self) -> LaurentMatrix {
        LaurentMatrix::diag_t_powers(self.p.field(), self.splitting.exponents())
    }

    /// Re-checks every invariant by exact multiplication.
    pub fn check(&self, transition: &LaurentMatrix) -> WitnessCheck {
        let det_const = |m: &LaurentMatrix| m.determinant().is_ok_and(|d| d.is_in(Ring::ConstUnit));
        let shapes_ok = self.p.is_square()
            && self.q.is_square()
            && self.p.rows() == self.splitting.rank()
            && self.q.rows() == self.splitting.rank()
            && self.p.field() == transition.field()
            && self.q.field() == transition.field();
        WitnessCheck {
            product_matches: shapes_ok && &self.p.mul(&self.middle()).mul(&self.q) == transition,
            p_polynomial_in_t: self.p.entries_in(Ring::PolyInT),
            q_polynomial_in_t_inv: self.q.entries_in(Ring::PolyInTInv),
            det_p_constant: det_const(&self.p),
            det_q_constant: det_const(&self.q),
            exponents_sorted: self.splitting.exponents().windows(2).all(|w| w[0] >= w[1]),
        }
    }

    /// `P^-1 * T * Q^-1 = t^D`: the frames `P` over `Spec k[t]` and `Q^-1`
    /// over `Spec k[t^-1]` trivialize the bundle on each chart.
    pub fn chart_trivializations(&self) -> Result<(LaurentMatrix, LaurentMatrix)> {
        Ok((self.p.inverse()?, self.q.inverse()?))
    }
}

pub fn birkhoff_factorize(bundle: &TransitionBundle) -> Result<BirkhoffWitness> {
    let splitting = try_splitting_type(bundle)?;
    let t = bundle.transition();
    let n = bundle.rank() as i64;
    let exps = splitting.exponents();
    let (top, bottom) = (exps[0], exps[exps.len() - 1]);
    let cap = top + t.inverse()?.max_exp().expect("nonzero inverse");
    let mut degree = n * (top - bottom);
    loop {
        let rung = degree.min(cap);
        if let Some(witness) = attempt(t, &splitting, rung) {
            let check = witness.check(t);
            if !check.all() {
                return Err(Error::InternalSearchFailure(format!("witness failed verification: {check:?}")));
            }
            return Ok(witness);
        }
        if rung >= cap {
            return Err(Error::InternalSearchFailure(format!(
                "no factorization with type {splitting} up to degree {cap}"
            )));
        }
        degree = (2 * degree).max(1);
    }
}

fn attempt(t: &LaurentMatrix, splitting: &SplittingType, degree: i64) -> Option<BirkhoffWitness> {
    let field = t.field();
    let n = t.rows();
    let width = degree as usize + 1;
    let exps = splitting.exponents();
    let mut values: Vec<i64> = exps.to_vec();
    values.dedup();

    // coefficient of t^e in column c of p * T, as a row over the unknowns
    let constraint = |c: usize, e: i64| -> SparseRow {
        let mut row: SparseRow = Vec::new();
        for k in 0..n {
            for (exp, coeff) in t.get(k, c).terms() {
                let j = e - exp;
                if (0..=degree).contains(&j) {
                    row.push((k * width + j as usize, coeff.clone()));
                }
            }
        }
        row.sort_by_key(|(col, _)| *col);
        row
    };

    let mut ech = Echelon::new(field, n * width);
    let mut e = degree + t.max_exp()?;
    let mut candidates: BTreeMap<i64, Vec<Vec<Scalar>>> = BTreeMap::new();
    for &v in &values {
        while e > v {
            for c in 0..n {
                ech.insert(constraint(c, e));
            }
            e -= 1;
        }
        candidates.insert(v, ech.kernel_basis());
    }

    let dot = |row: &SparseRow, x: &[Scalar]| row.iter().fold(Scalar::zero(field), |acc, (i, v)| &acc + &(v * &x[*i]));
    let mut constant_terms = Echelon::new(field, n);
    let mut chosen: BTreeMap<i64, Vec<Vec<Scalar>>> = BTreeMap::new();
    for &v in values.iter().rev() {
        let need = exps.iter().filter(|&&a| a == v).count();
        let picked = chosen.entry(v).or_default();
        for x in &candidates[&v] {
            if picked.len() == need {
                break;
            }
            let c0: Vec<Scalar> = (0..n).map(|c| dot(&constraint(c, v), x)).collect();
            if constant_terms.insert(sparse_from_dense(&c0)) {
                picked.push(x.clone());
            }
        }
        if picked.len() < need {
            return None;
        }
    }

    let mut rows = Vec::with_capacity(n);
    for &a in exps {
        let x = chosen.get_mut(&a)?.pop()?;
        let row: Vec<LaurentPoly> = (0..n)
            .map(|k| {
                let terms = (0..width).map(|j| (j as i64, x[k * width + j].clone()));
                LaurentPoly::from_terms(field, terms).expect("same field")
            })
            .collect();
        rows.push(row);
    }
    let p_inv = LaurentMatrix::from_rows(field, rows).ok()?;
    let q = LaurentMatrix::diag_t_powers(field, &exps.iter().map(|a| -a).collect::<Vec<_>>()).mul(&p_inv).mul(t);
    let p = p_inv.inverse().ok()?;
    Some(BirkhoffWitness { p, splitting: splitting.clone(), q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    const Q: Field = Field::Rationals;

    fn m(rows: &[&[&str]]) -> LaurentMatrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        LaurentMatrix::parse(Q, &rows).unwrap()
    }

    #[test]
    fn diagonal_input() {
        let e = TransitionBundle::split(Q, &[2, -1]);
        let w = birkhoff_factorize(&e).unwrap();
        assert_eq!(w.splitting.exponents(), &[2, -1]);
        assert!(w.p.is_identity() && w.q.is_identity());
    }

    #[test]
    fn upper_triangular() {
        let t = m(&[&["t", "1"], &["0", "t^-1"]]);
        let w = birkhoff_factorize(&TransitionBundle::new(t.clone()).unwrap()).unwrap();
        assert_eq!(w.splitting.exponents(), &[1, -1]);
        assert!(w.check(&t).all());
        // an alternative witness for the same matrix
        let alt = BirkhoffWitness {
            p: m(&[&["1", "t"], &["0", "1"]]),
            splitting: w.splitting.clone(),
            q: LaurentMatrix::identity(Q, 2),
        };
        assert!(alt.check(&t).all());
    }

    #[test]
    fn semistable_non_diagonal() {
        let t = m(&[&["t", "0"], &["1", "t^-1"]]);
        let w = birkhoff_factorize(&TransitionBundle::new(t.clone()).unwrap()).unwrap();
        assert_eq!(w.splitting.exponents(), &[0, 0]);
        assert!(w.check(&t).all());
        let alt = BirkhoffWitness {
            p: m(&[&["t", "-1"], &["1", "0"]]),
            splitting: w.splitting.clone(),
            q: m(&[&["1", "t^-1"], &["0", "1"]]),
        };
        assert!(alt.check(&t).all());
    }

    #[test]
    fn bad_witness_is_flagged() {
        let t = m(&[&["t", "1"], &["0", "t^-1"]]);
        let bogus = BirkhoffWitness {
            p: m(&[&["1", "t^-1"], &["0", "1"]]),
            splitting: SplittingType::new(vec![1, -1]),
            q: LaurentMatrix::identity(Q, 2),
        };
        let check = bogus.check(&t);
        assert!(!check.all());
        assert!(!check.p_polynomial_in_t);
    }

    #[test]
    fn chart_trivialization() {
        let t = m(&[&["t^2", "1 + t"], &["0", "t^-1"]]);
        let w = birkhoff_factorize(&TransitionBundle::new(t.clone()).unwrap()).unwrap();
        let (p_inv, q_inv) = w.chart_trivializations().unwrap();
        assert_eq!(p_inv.mul(&t).mul(&q_inv), w.middle());
    }
}
