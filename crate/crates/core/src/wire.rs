//! JSON records exchanged with scripts and other tools.
//!
//! Polynomials travel in their text form (`"3*t^2 - 1/2*t^-1"`), matrices as
//! arrays of rows of such strings, fields as `{"field":"Q"}` or
//! `{"field":"Fp","p":5}`.

use serde::{Deserialize, Serialize};

use crate::bundle::{BirkhoffWitness, SplittingType, TransitionBundle};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::LaurentMatrix;
use crate::torsor::{Cocharacter, DoubleCosetWitness};

pub type MatrixText = Vec<Vec<String>>;

pub fn matrix_text(m: &LaurentMatrix) -> MatrixText {
    m.to_strings()
}

/// Parses a matrix; the error names `context` and the offending cell.
pub fn parse_matrix(field: Field, rows: &MatrixText, context: &str) -> Result<LaurentMatrix> {
    if rows.is_empty() {
        return Err(Error::Parse(format!("{context}: matrix has no rows")));
    }
    let width = rows[0].len();
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(Error::Parse(format!("{context}[{i}]: expected {width} entries, found {}", row.len())));
        }
        let mut out = Vec::with_capacity(width);
        for (j, cell) in row.iter().enumerate() {
            let p = crate::laurent::parse_laurent(field, cell)
                .map_err(|e| Error::Parse(format!("{context}[{i}][{j}]: {e}")))?;
            out.push(p);
        }
        parsed.push(out);
    }
    LaurentMatrix::from_rows(field, parsed)
}

/// `{"field": ..., "rank": n, "transition": [[...]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleRecord {
    pub field: Field,
    pub rank: usize,
    pub transition: MatrixText,
}

impl BundleRecord {
    pub fn from_bundle(b: &TransitionBundle) -> Self {
        BundleRecord { field: b.field(), rank: b.rank(), transition: matrix_text(b.transition()) }
    }

    /// The transition matrix, checked against `rank`; bundle validity is left
    /// to [`TransitionBundle::new`].
    pub fn matrix(&self, context: &str) -> Result<LaurentMatrix> {
        let m = parse_matrix(self.field, &self.transition, &format!("{context}.transition"))?;
        if m.rows() != self.rank || m.cols() != self.rank {
            return Err(Error::Parse(format!(
                "{context}.rank: declared {} but transition is {}x{}",
                self.rank,
                m.rows(),
                m.cols()
            )));
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub field: Field,
    #[serde(rename = "P")]
    pub p: MatrixText,
    #[serde(rename = "D")]
    pub d: Vec<i64>,
    #[serde(rename = "Q")]
    pub q: MatrixText,
}

impl WitnessRecord {
    pub fn from_witness(w: &BirkhoffWitness) -> Self {
        WitnessRecord {
            field: w.p.field(),
            p: matrix_text(&w.p),
            d: w.splitting.exponents().to_vec(),
            q: matrix_text(&w.q),
        }
    }

    pub fn to_witness(&self) -> Result<BirkhoffWitness> {
        Ok(BirkhoffWitness {
            p: parse_matrix(self.field, &self.p, "P")?,
            splitting: SplittingType::new(self.d.clone()),
            q: parse_matrix(self.field, &self.q, "Q")?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCosetRecord {
    pub field: Field,
    pub u: MatrixText,
    pub lambda: Cocharacter,
    pub v: MatrixText,
}

impl DoubleCosetRecord {
    pub fn from_witness(w: &DoubleCosetWitness) -> Self {
        DoubleCosetRecord { field: w.u.field(), u: matrix_text(&w.u), lambda: w.lambda.clone(), v: matrix_text(&w.v) }
    }

    pub fn to_witness(&self) -> Result<DoubleCosetWitness> {
        Ok(DoubleCosetWitness {
            u: parse_matrix(self.field, &self.u, "u")?,
            lambda: self.lambda.clone(),
            v: parse_matrix(self.field, &self.v, "v")?,
        })
    }
}
