//! Dense matrices over `k[t, t^-1]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::laurent::{parse_laurent, LaurentPoly, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    /// Row-major constructor; every entry must live over `field`.
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        for e in &entries {
            field.ensure_same(&e.field())?;
        }
        Ok(LaurentMatrix { rows, cols, field, entries })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Parses rows of text-form entries, e.g. `[["t", "1"], ["0", "t^-1"]]`.
    pub fn parse<S: AsRef<str>>(field: Field, rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_laurent(field, s.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, parsed)
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        LaurentMatrix { rows, cols, field, entries }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self::from_fn(field, rows, cols, |_, _| LaurentPoly::zero(field))
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| if i == j { LaurentPoly::one(field) } else { LaurentPoly::zero(field) })
    }

    /// `diag(t^e_1, ..., t^e_n)`.
    pub fn diag_t_powers(field: Field, exps: &[i64]) -> Self {
        let n = exps.len();
        Self::from_fn(
            field,
            n,
            n,
            |i, j| if i == j { LaurentPoly::t_power(field, exps[i]) } else { LaurentPoly::zero(field) },
        )
    }

    pub fn permutation(field: Field, perm: &[usize]) -> Self {
        let n = perm.len();
        Self::from_fn(field, n, n, |i, j| if perm[j] == i { LaurentPoly::one(field) } else { LaurentPoly::zero(field) })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: LaurentPoly) {
        assert_eq!(value.field(), self.field, "entry field mismatch");
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        LaurentMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect()
    }

    pub fn checked_mul(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        self.field.ensure_same(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let field = self.field;
        Ok(Self::from_fn(field, self.rows, other.cols, |i, j| {
            let mut acc = LaurentPoly::zero(field);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    /// Exact product, panicking on shape or field mismatch.
    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        self.checked_mul(other).expect("matrix product")
    }

    pub fn checked_add(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        self.field.ensure_same(&other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("cannot add matrices of different shapes".into()));
        }
        Ok(LaurentMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        self.map(|e| e * p)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        self.map(|e| e.shift(k))
    }

    /// Entrywise substitution `t -> t^-1`; a ring automorphism.
    pub fn invert_variable(&self) -> Self {
        self.map(LaurentPoly::invert_variable)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn entries_in(&self, ring: Ring) -> bool {
        self.entries.iter().all(|e| e.is_in(ring))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.entries.iter().filter_map(LaurentPoly::min_exp).min()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.entries.iter().filter_map(LaurentPoly::max_exp).max()
    }

    /// Coefficients of `det(x I - A)`, leading coefficient first, via
    /// Berkowitz's division-free recurrence.
    pub fn characteristic_polynomial(&self) -> Result<Vec<LaurentPoly>> {
        self.require_square()?;
        let field = self.field;
        let n = self.rows;
        let mut coeffs = vec![LaurentPoly::one(field)];
        for r in 0..n {
            // Toeplitz column: 1, -a, -R C, -R M C, ..., -R M^{r-1} C
            let a = self.get(r, r);
            let mut toeplitz = vec![LaurentPoly::one(field), -a];
            let mut col: Vec<LaurentPoly> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let rc = (0..r).fold(LaurentPoly::zero(field), |acc, j| &acc + &(self.get(r, j) * &col[j]));
                toeplitz.push(-&rc);
                col = (0..r)
                    .map(|i| (0..r).fold(LaurentPoly::zero(field), |acc, j| &acc + &(self.get(i, j) * &col[j])))
                    .collect();
            }
            coeffs = (0..r + 2)
                .map(|i| {
                    (0..=i.min(r)).fold(LaurentPoly::zero(field), |acc, j| &acc + &(&toeplitz[i - j] * &coeffs[j]))
                })
                .collect();
        }
        Ok(coeffs)
    }

    pub fn determinant(&self) -> Result<LaurentPoly> {
        let coeffs = self.characteristic_polynomial()?;
        let last = &coeffs[self.rows];
        Ok(if self.rows.is_multiple_of(2) { last.clone() } else { -last })
    }

    pub fn adjugate(&self) -> Result<LaurentMatrix> {
        let coeffs = self.characteristic_polynomial()?;
        let n = self.rows;
        let id = Self::identity(self.field, n);
        let mut acc = id.clone();
        for c in &coeffs[1..n] {
            acc = self.mul(&acc).checked_add(&id.scale(c))?;
        }
        Ok(if n % 2 == 1 { acc } else { acc.map(|e| -e) })
    }

    /// Inverse over `k[t, t^-1]`; requires `det = c * t^d`.
    pub fn inverse(&self) -> Result<LaurentMatrix> {
        let det = self.determinant()?;
        let (c, d) = det.as_monomial().ok_or_else(|| Error::NotAUnit(det.to_string()))?;
        let unit_inv = LaurentPoly::monomial(c.inv()?, -d);
        let inv = self.adjugate()?.scale(&unit_inv);
        debug_assert!(self.mul(&inv).is_identity(), "A * A^-1 != I");
        Ok(inv)
    }

    pub fn kronecker(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        self.field.ensure_same(&other.field)?;
        let (r2, c2) = (other.rows, other.cols);
        Ok(Self::from_fn(self.field, self.rows * r2, self.cols * c2, |i, j| {
            self.get(i / r2, j / c2) * other.get(i % r2, j % c2)
        }))
    }

    pub fn block_diagonal(&self, other: &LaurentMatrix) -> Result<LaurentMatrix> {
        self.field.ensure_same(&other.field)?;
        let field = self.field;
        let (r, c) = (self.rows, self.cols);
        Ok(Self::from_fn(field, r + other.rows, c + other.cols, |i, j| match (i < r, j < c) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => other.get(i - r, j - c).clone(),
            _ => LaurentPoly::zero(field),
        }))
    }

    /// The constant-in-`t` coefficient matrix of `t^e`.
    pub fn coefficient_matrix(&self, e: i64) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|p| p.coeff(e)).collect()).collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", self.rows, self.cols)))
        }
    }
}

pub fn matrix_multiply(a: &LaurentMatrix, b: &LaurentMatrix) -> Result<LaurentMatrix> {
    a.checked_mul(b)
}

pub fn matrix_determinant(a: &LaurentMatrix) -> Result<LaurentPoly> {
    a.determinant()
}

pub fn matrix_inverse(a: &LaurentMatrix) -> Result<LaurentMatrix> {
    a.inverse()
}

pub fn invert_variable(a: &LaurentMatrix) -> LaurentMatrix {
    a.invert_variable()
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn m(rows: &[&[&str]]) -> LaurentMatrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        LaurentMatrix::parse(Q, &rows).unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    // Laplace expansion along the first row; independent of Berkowitz.
    fn laplace(a: &LaurentMatrix) -> LaurentPoly {
        let n = a.rows();
        if n == 1 {
            return a.get(0, 0).clone();
        }
        let mut acc = LaurentPoly::zero(a.field());
        for j in 0..n {
            let minor = LaurentMatrix::from_fn(a.field(), n - 1, n - 1, |r, c| {
                a.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = a.get(0, j) * &laplace(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn products() {
        assert!(LaurentMatrix::diag_t_powers(Q, &[1]).mul(&LaurentMatrix::diag_t_powers(Q, &[-1])).is_identity());
        assert!(m(&[&["1", "t"], &["0", "1"]]).mul(&m(&[&["1", "-t"], &["0", "1"]])).is_identity());
        let a = m(&[&["t", "1"], &["0", "t^-1"]]);
        assert!(matches!(a.checked_mul(&LaurentMatrix::identity(Q, 3)), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn determinants() {
        assert_eq!(LaurentMatrix::diag_t_powers(Q, &[2, -1]).determinant().unwrap(), p("t"));
        assert!(m(&[&["t", "1"], &["0", "t^-1"]]).determinant().unwrap().is_one());
        assert!(m(&[&["1", "1"], &["1", "1"]]).determinant().unwrap().is_zero());
        let err = m(&[&["1", "1"]]).determinant().unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }

    #[test]
    fn inverses() {
        let a = m(&[&["t", "1"], &["0", "t^-1"]]);
        assert_eq!(a.inverse().unwrap(), m(&[&["t^-1", "-1"], &["0", "t"]]));
        let d = LaurentMatrix::diag_t_powers(Q, &[3, -2, 0]);
        assert_eq!(d.inverse().unwrap(), LaurentMatrix::diag_t_powers(Q, &[-3, 2, 0]));
        assert!(matches!(m(&[&["1", "1"], &["1", "1"]]).inverse(), Err(Error::NotAUnit(_))));
        assert!(matches!(m(&[&["1 + t"]]).inverse(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn variable_inversion() {
        let d = LaurentMatrix::diag_t_powers(Q, &[2, -1]);
        assert_eq!(d.invert_variable(), LaurentMatrix::diag_t_powers(Q, &[-2, 1]));
        let a = m(&[&["t", "1"], &["0", "t^-1"]]);
        assert_eq!(a.invert_variable(), m(&[&["t^-1", "1"], &["0", "t"]]));
        assert_eq!(a.invert_variable().invert_variable(), a);
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = LaurentMatrix> {
        prop::collection::vec(prop::collection::vec((-2i64..=2, -3i64..=3), 0..3), n * n).prop_map(move |cells| {
            let entries = cells
                .into_iter()
                .map(|terms| {
                    LaurentPoly::from_terms(Q, terms.into_iter().map(|(e, c)| (e, Scalar::from_i64(Q, c)))).unwrap()
                })
                .collect();
            LaurentMatrix::new(Q, n, n, entries).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn berkowitz_matches_laplace(a in (1usize..=4).prop_flat_map(arb_matrix)) {
            prop_assert_eq!(a.determinant().unwrap(), laplace(&a));
        }

        #[test]
        fn adjugate_identity(a in (1usize..=4).prop_flat_map(arb_matrix)) {
            let det = a.determinant().unwrap();
            let n = a.rows();
            prop_assert_eq!(a.mul(&a.adjugate().unwrap()), LaurentMatrix::identity(Q, n).scale(&det));
        }

        #[test]
        fn identity_law_and_ring_map(a in arb_matrix(3), b in arb_matrix(3)) {
            prop_assert_eq!(a.mul(&LaurentMatrix::identity(Q, 3)), a.clone());
            prop_assert_eq!(a.mul(&b).invert_variable(), a.invert_variable().mul(&b.invert_variable()));
        }
    }
}
