use serde::{Deserialize, Serialize};

use super::TransitionBundle;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::LaurentMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Construction {
    Dual,
    Tensor,
    Exterior2,
    Sym2,
    DirectSum,
}

pub fn bundle_constructions(
    kind: Construction,
    e: &TransitionBundle,
    f: Option<&TransitionBundle>,
) -> Result<TransitionBundle> {
    let other = || f.ok_or_else(|| Error::DimensionMismatch(format!("{kind:?} needs a second bundle")));
    match kind {
        Construction::Dual => Ok(e.dual()),
        Construction::Tensor => e.tensor(other()?),
        Construction::DirectSum => e.direct_sum(other()?),
        Construction::Exterior2 => e.exterior2(),
        Construction::Sym2 => Ok(e.sym2()),
    }
}

fn pairs(n: usize, strict: bool) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (if strict { i + 1 } else { i }..n).map(move |j| (i, j))).collect()
}

impl TransitionBundle {
    /// Transition `(T^-1)^T`.
    pub fn dual(&self) -> TransitionBundle {
        let inv = self.transition().inverse().expect("bundle transition is invertible");
        TransitionBundle::new(inv.transpose()).expect("dual of a bundle")
    }

    /// Kronecker product of transitions.
    pub fn tensor(&self, other: &TransitionBundle) -> Result<TransitionBundle> {
        TransitionBundle::new(self.transition().kronecker(other.transition())?)
    }

    pub fn direct_sum(&self, other: &TransitionBundle) -> Result<TransitionBundle> {
        TransitionBundle::new(self.transition().block_diagonal(other.transition())?)
    }

    /// Action on `e_i ^ e_j`, `i < j`, by 2x2 minors.
    pub fn exterior2(&self) -> Result<TransitionBundle> {
        let n = self.rank();
        if n < 2 {
            return Err(Error::DimensionMismatch("exterior square needs rank at least 2".into()));
        }
        let t = self.transition();
        let basis = pairs(n, true);
        let m = LaurentMatrix::from_fn(self.field(), basis.len(), basis.len(), |r, c| {
            let ((i, j), (k, l)) = (basis[r], basis[c]);
            &(t.get(i, k) * t.get(j, l)) - &(t.get(i, l) * t.get(j, k))
        });
        TransitionBundle::new(m)
    }

    /// Action on the monomials `e_i e_j`, `i <= j`.
    pub fn sym2(&self) -> TransitionBundle {
        let t = self.transition();
        let basis = pairs(self.rank(), false);
        let m = LaurentMatrix::from_fn(self.field(), basis.len(), basis.len(), |r, c| {
            let ((i, j), (k, l)) = (basis[r], basis[c]);
            let direct = t.get(i, k) * t.get(j, l);
            if i == j {
                direct
            } else {
                let swapped: LaurentPoly = t.get(j, k) * t.get(i, l);
                &direct + &swapped
            }
        });
        TransitionBundle::new(m).expect("symmetric square of a bundle")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::splitting_type;
    use crate::field::Field;

    const Q: Field = Field::Rationals;

    #[test]
    fn line_bundle_cases() {
        for a in -3..=3 {
            assert_eq!(TransitionBundle::line(Q, a).dual(), TransitionBundle::line(Q, -a));
        }
        let e = TransitionBundle::split(Q, &[2, -1]);
        assert_eq!(e.exterior2().unwrap(), TransitionBundle::line(Q, 1));
        assert!(matches!(
            bundle_constructions(Construction::Exterior2, &TransitionBundle::line(Q, 1), None),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(bundle_constructions(Construction::Tensor, &e, None).is_err());
    }

    #[test]
    fn tensor_of_split_bundles() {
        let e = TransitionBundle::split(Q, &[2, -1]);
        let f = TransitionBundle::split(Q, &[0, 1]);
        let t = bundle_constructions(Construction::Tensor, &e, Some(&f)).unwrap();
        assert_eq!(splitting_type(&t).exponents(), &[3, 2, 0, -1]);
        let s = bundle_constructions(Construction::DirectSum, &e, Some(&f)).unwrap();
        assert_eq!(splitting_type(&s).exponents(), &[2, 1, 0, -1]);
    }

    #[test]
    fn field_mismatch() {
        let e = TransitionBundle::line(Q, 0);
        let f = TransitionBundle::line(Field::prime(5).unwrap(), 0);
        assert!(matches!(e.tensor(&f), Err(Error::FieldMismatch { .. })));
        assert!(matches!(e.direct_sum(&f), Err(Error::FieldMismatch { .. })));
    }
}
