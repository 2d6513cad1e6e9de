//! Graded vector spaces as representations of `G_m`, and the functor to
//! bundles.
//!
//! Weight `i` means `G_m` acts on `V_i` through `z -> z^-i`; the block `V_i`
//! goes to `O(i)^{dim V_i}`. The standard representation `z -> z` therefore
//! sits in weight `-1` and lands on `O(-1)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bundle::{splitting_type, TransitionBundle};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RawGraded")]
pub struct GradedVectorSpace {
    #[serde(serialize_with = "weights_as_strings")]
    weights: BTreeMap<i64, usize>,
}

#[derive(Deserialize)]
struct RawGraded {
    weights: BTreeMap<String, usize>,
}

impl TryFrom<RawGraded> for GradedVectorSpace {
    type Error = Error;

    fn try_from(raw: RawGraded) -> Result<Self> {
        let mut out = GradedVectorSpace::default();
        for (k, d) in raw.weights {
            let w: i64 = k.trim().parse().map_err(|_| Error::Parse(format!("weight {k:?} is not an integer")))?;
            out.add(w, d);
        }
        Ok(out)
    }
}

fn weights_as_strings<S: serde::Serializer>(w: &BTreeMap<i64, usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut map = s.serialize_map(Some(w.len()))?;
    for (k, v) in w {
        map.serialize_entry(&k.to_string(), v)?;
    }
    map.end()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum GradedConstruction {
    Dual,
    Tensor,
    DirectSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FilGr {
    pub fil_dim: usize,
    pub gr_dim: usize,
}

impl GradedVectorSpace {
    /// Drops zero dimensions.
    pub fn new(weights: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let mut out = Self::default();
        for (w, d) in weights {
            out.add(w, d);
        }
        out
    }

    fn add(&mut self, weight: i64, dim: usize) {
        if dim > 0 {
            *self.weights.entry(weight).or_default() += dim;
        }
    }

    pub fn weights(&self) -> &BTreeMap<i64, usize> {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.values().sum()
    }

    pub fn dim_of(&self, weight: i64) -> usize {
        self.weights.get(&weight).copied().unwrap_or(0)
    }

    /// `dim fil^i(V) = sum_{j >= i} dim V_j`, and `dim gr^i = dim V_i`.
    pub fn fil_and_gr(&self, i: i64) -> FilGr {
        FilGr { fil_dim: self.weights.range(i..).map(|(_, d)| d).sum(), gr_dim: self.dim_of(i) }
    }

    pub fn dual(&self) -> Self {
        Self::new(self.weights.iter().map(|(w, d)| (-w, *d)))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::new(self.weights.iter().flat_map(|(a, m)| other.weights.iter().map(move |(b, n)| (a + b, m * n))))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(self.weights.iter().chain(&other.weights).map(|(w, d)| (*w, *d)))
    }

    /// Weights in decreasing order, repeated by dimension.
    pub fn weight_list(&self) -> Vec<i64> {
        self.weights.iter().rev().flat_map(|(w, d)| std::iter::repeat_n(*w, *d)).collect()
    }
}

pub fn fil_and_gr(v: &GradedVectorSpace, i: i64) -> FilGr {
    v.fil_and_gr(i)
}

pub fn graded_constructions(
    kind: GradedConstruction,
    v: &GradedVectorSpace,
    w: Option<&GradedVectorSpace>,
) -> Result<GradedVectorSpace> {
    let other = || w.ok_or_else(|| Error::DimensionMismatch(format!("{kind:?} needs a second graded space")));
    Ok(match kind {
        GradedConstruction::Dual => v.dual(),
        GradedConstruction::Tensor => v.tensor(other()?),
        GradedConstruction::DirectSum => v.direct_sum(other()?),
    })
}

/// `diag(t^i)` over the weights, one entry per dimension. The zero space has
/// no bundle, since rank-0 bundles are excluded.
pub fn e_functor(v: &GradedVectorSpace, field: Field) -> Result<TransitionBundle> {
    if v.dim() == 0 {
        return Err(Error::NotABundle("the zero representation gives a rank-0 bundle".into()));
    }
    Ok(TransitionBundle::split(field, &v.weight_list()))
}

/// Multiplicities of the splitting type.
pub fn inverse_e(bundle: &TransitionBundle) -> GradedVectorSpace {
    GradedVectorSpace::new(splitting_type(bundle).exponents().iter().map(|a| (*a, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::SplittingType;
    use crate::matrix::LaurentMatrix;

    const Q: Field = Field::Rationals;

    fn g(pairs: &[(i64, usize)]) -> GradedVectorSpace {
        GradedVectorSpace::new(pairs.iter().copied())
    }

    #[test]
    fn standard_representation_goes_to_minus_one() {
        assert_eq!(e_functor(&g(&[(-1, 1)]), Q).unwrap(), TransitionBundle::line(Q, -1));
        assert_eq!(e_functor(&g(&[(0, 1)]), Q).unwrap(), TransitionBundle::line(Q, 0));
        let e = e_functor(&g(&[(1, 1), (0, 2)]), Q).unwrap();
        assert_eq!(e.transition(), &LaurentMatrix::diag_t_powers(Q, &[1, 0, 0]));
        assert!(e_functor(&GradedVectorSpace::default(), Q).is_err());
    }

    #[test]
    fn inverse_functor() {
        assert_eq!(inverse_e(&TransitionBundle::split(Q, &[2, -1, 2])), g(&[(2, 2), (-1, 1)]));
        assert_eq!(inverse_e(&TransitionBundle::trivial(Q, 3)), g(&[(0, 3)]));
    }

    #[test]
    fn filtration_dims() {
        let v = g(&[(2, 2), (0, 1), (-1, 1)]);
        assert_eq!(fil_and_gr(&v, 0), FilGr { fil_dim: 3, gr_dim: 1 });
        assert_eq!(fil_and_gr(&v, -10).fil_dim, 4);
        assert_eq!(fil_and_gr(&v, 3), FilGr { fil_dim: 0, gr_dim: 0 });
    }

    #[test]
    fn constructions() {
        assert_eq!(graded_constructions(GradedConstruction::Dual, &g(&[(1, 2)]), None).unwrap(), g(&[(-1, 2)]));
        assert_eq!(
            graded_constructions(GradedConstruction::Tensor, &g(&[(1, 1)]), Some(&g(&[(-1, 1)]))).unwrap(),
            g(&[(0, 1)])
        );
        let (v, w) = (g(&[(1, 1), (0, 2)]), g(&[(2, 1), (-1, 1)]));
        let lhs = splitting_type(&e_functor(&v.tensor(&w), Q).unwrap());
        let rhs = splitting_type(&e_functor(&v, Q).unwrap().tensor(&e_functor(&w, Q).unwrap()).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, SplittingType::new(vec![3, 2, 2, 0, -1, -1]));
    }

    #[test]
    fn json_form() {
        let v: GradedVectorSpace = serde_json::from_str(r#"{"weights": {"2": 2, "-1": 1, "5": 0}}"#).unwrap();
        assert_eq!(v, g(&[(2, 2), (-1, 1)]));
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"weights":{"-1":1,"2":2}}"#);
        assert!(serde_json::from_str::<GradedVectorSpace>(r#"{"weights": {"x": 1}}"#).is_err());
    }
}
