//! Exact linear algebra over the base field: an incrementally built echelon
//! form with sparse rows, used for rank and kernel computations.

use std::collections::BTreeMap;

use crate::field::{Field, Scalar};

/// A sparse row: `(column, value)` pairs, strictly increasing columns, no zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(row: &[Scalar]) -> SparseRow {
    row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect()
}

/// `a - c * b`
fn axpy(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -&(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row-echelon basis of a growing row space. Pivot rows are normalized to a
/// leading 1 and keyed by their pivot column.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        Echelon { field, ncols, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `row` against the pivots until its leading column is free.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        while let Some((lead, coeff)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(pivot) => row = axpy(&row, &coeff, pivot),
                None => break,
            }
        }
        row
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((lead, coeff)) = row.first().cloned() else {
            return false;
        };
        let inv = coeff.inv().expect("nonzero leading coefficient");
        let normalized = row.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        self.pivots.insert(lead, normalized);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// A basis of `{x : r . x = 0 for every row r}`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Scalar::zero(self.field); self.ncols];
                x[f] = Scalar::one(self.field);
                for (&p, row) in self.pivots.iter().rev() {
                    let mut s = Scalar::zero(self.field);
                    for (c, v) in &row[1..] {
                        if !x[*c].is_zero() {
                            s = &s + &(v * &x[*c]);
                        }
                    }
                    x[p] = -s;
                }
                x
            })
            .collect()
    }
}

/// Rank of a dense matrix.
pub fn rank(field: Field, rows: &[Vec<Scalar>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut ech = Echelon::new(field, ncols);
    for r in rows {
        ech.insert(sparse_from_dense(r));
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| Scalar::from_i64(Field::Rationals, x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let rows = q(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(Field::Rationals, &rows), 2);
        let mut ech = Echelon::new(Field::Rationals, 3);
        for r in &rows {
            ech.insert(sparse_from_dense(r));
        }
        let kernel = ech.kernel_basis();
        assert_eq!(kernel.len(), 1);
        for r in &rows {
            let dot = r.iter().zip(&kernel[0]).fold(Scalar::zero(Field::Rationals), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn rank_mod_p() {
        let f3 = Field::prime(3).unwrap();
        let rows: Vec<Vec<Scalar>> =
            [[1, 1], [1, 4]].iter().map(|r| r.iter().map(|&x| Scalar::from_i64(f3, x)).collect()).collect();
        assert_eq!(rank(f3, &rows), 1);
        assert_eq!(rank(Field::Rationals, &q(&[&[1, 1], &[1, 4]])), 2);
    }
}
