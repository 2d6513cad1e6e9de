use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bundle::{splitting_type, TransitionBundle};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::LaurentMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupFamily {
    GL,
    SL,
    PGL,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupTag {
    pub family: GroupFamily,
    pub n: usize,
}

impl GroupTag {
    pub fn gl(n: usize) -> Self {
        GroupTag { family: GroupFamily::GL, n }
    }

    pub fn sl(n: usize) -> Self {
        GroupTag { family: GroupFamily::SL, n }
    }

    pub fn pgl(n: usize) -> Self {
        GroupTag { family: GroupFamily::PGL, n }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{}", self.family, self.n)
    }
}

/// A cocharacter of the diagonal torus, `z -> diag(z^w_1, ..., z^w_n)`.
///
/// `SL` tuples sum to zero; `PGL` tuples are stored as the representative
/// of their class modulo `Z (1, ..., 1)` whose minimum entry is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCocharacter", into = "RawCocharacter")]
pub struct Cocharacter {
    group: GroupTag,
    weights: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawCocharacter {
    group: GroupFamily,
    n: usize,
    weights: Vec<i64>,
}

impl TryFrom<RawCocharacter> for Cocharacter {
    type Error = Error;
    fn try_from(raw: RawCocharacter) -> Result<Self> {
        Cocharacter::new(GroupTag { family: raw.group, n: raw.n }, raw.weights)
    }
}

impl From<Cocharacter> for RawCocharacter {
    fn from(c: Cocharacter) -> Self {
        RawCocharacter { group: c.group.family, n: c.group.n, weights: c.weights }
    }
}

impl Cocharacter {
    pub fn new(group: GroupTag, mut weights: Vec<i64>) -> Result<Self> {
        if group.n == 0 {
            return Err(Error::InvalidCocharacter("rank parameter must be at least 1".into()));
        }
        if weights.len() != group.n {
            return Err(Error::InvalidCocharacter(format!("{} weights for {group}", weights.len())));
        }
        match group.family {
            GroupFamily::GL => {}
            GroupFamily::SL => {
                if weights.iter().sum::<i64>() != 0 {
                    return Err(Error::InvalidCocharacter(format!("{weights:?} does not sum to 0")));
                }
            }
            GroupFamily::PGL => {
                let min = *weights.iter().min().expect("n >= 1");
                weights.iter_mut().for_each(|w| *w -= min);
            }
        }
        Ok(Cocharacter { group, weights })
    }

    pub fn gl(weights: Vec<i64>) -> Self {
        let n = weights.len();
        Self::new(GroupTag::gl(n), weights).expect("any tuple is a GL cocharacter")
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn is_dominant(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] >= w[1])
    }

    /// The Weyl-orbit representative with weakly decreasing weights.
    pub fn dominantize(&self) -> Self {
        let mut weights = self.weights.clone();
        weights.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(self.group, weights).expect("sorting preserves the lattice constraints")
    }

    /// The image in `X_*(PGL_n)`.
    pub fn project_to_pgl(&self) -> Self {
        Self::new(GroupTag::pgl(self.group.n), self.weights.clone()).expect("any tuple has a PGL class")
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.group, self.weights)
    }
}

pub fn dominantize(chi: &Cocharacter) -> Cocharacter {
    chi.dominantize()
}

/// Pushing the Hopf bundle along weight `m` gives `O(-m)`, so a `GL_n`
/// cocharacter goes to `diag(t^-m_1, ..., t^-m_n)`.
pub fn cocharacter_pushout(chi: &Cocharacter, field: Field) -> Result<TransitionBundle> {
    if chi.group.family != GroupFamily::GL {
        return Err(Error::UnsupportedGroup(format!("pushout is only materialized for GL, not {}", chi.group)));
    }
    let exps: Vec<i64> = chi.weights.iter().map(|m| -m).collect();
    TransitionBundle::new(LaurentMatrix::diag_t_powers(field, &exps))
}

/// The dominant `GL_n` cocharacter whose pushout is isomorphic to `E`.
pub fn classify_bundle(bundle: &TransitionBundle) -> Cocharacter {
    Cocharacter::gl(splitting_type(bundle).exponents().iter().map(|a| -a).collect()).dominantize()
}

/// Classification as a torsor under `GL_n`, `SL_n` (transition determinant
/// exactly 1), or `PGL_n` (image of the `GL_n` class).
pub fn classify_bundle_for(bundle: &TransitionBundle, family: GroupFamily) -> Result<Cocharacter> {
    let gl = classify_bundle(bundle);
    match family {
        GroupFamily::GL => Ok(gl),
        GroupFamily::SL => {
            if !bundle.determinant().is_one() {
                return Err(Error::UnsupportedGroup(format!(
                    "transition determinant {} is not 1, so this is not an SL torsor",
                    bundle.determinant()
                )));
            }
            Cocharacter::new(GroupTag::sl(bundle.rank()), gl.weights)
        }
        GroupFamily::PGL => Ok(gl.project_to_pgl()),
    }
}

/// The canonical `GL_n` lift (minimum entry 0) of a `PGL_n` cocharacter.
pub fn pgl_lift(chi: &Cocharacter) -> Result<Cocharacter> {
    if chi.group.family != GroupFamily::PGL {
        return Err(Error::UnsupportedGroup(format!("expected a PGL cocharacter, got {}", chi.group)));
    }
    Ok(Cocharacter::gl(chi.weights.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::SplittingType;

    const Q: Field = Field::Rationals;

    #[test]
    fn dominance() {
        assert_eq!(Cocharacter::gl(vec![0, 2, -1]).dominantize().weights(), &[2, 0, -1]);
        let pgl = Cocharacter::new(GroupTag::pgl(2), vec![3, 1]).unwrap();
        assert_eq!(pgl.dominantize().weights(), &[2, 0]);
        let pgl = Cocharacter::new(GroupTag::pgl(2), vec![1, 3]).unwrap();
        assert_eq!(pgl.dominantize().weights(), &[2, 0]);
        let sl = Cocharacter::new(GroupTag::sl(2), vec![-1, 1]).unwrap();
        assert_eq!(sl.dominantize().weights(), &[1, -1]);
    }

    #[test]
    fn lattice_constraints() {
        assert!(Cocharacter::new(GroupTag::sl(2), vec![1, 1]).is_err());
        assert!(Cocharacter::new(GroupTag::gl(2), vec![1]).is_err());
        assert!(Cocharacter::new(GroupTag::gl(0), vec![]).is_err());
        assert_eq!(Cocharacter::new(GroupTag::pgl(3), vec![5, 4, 7]).unwrap().weights(), &[1, 0, 3]);
    }

    #[test]
    fn pushouts() {
        let e = cocharacter_pushout(&Cocharacter::gl(vec![1, 0]), Q).unwrap();
        assert_eq!(e.transition(), &LaurentMatrix::diag_t_powers(Q, &[-1, 0]));
        assert_eq!(splitting_type(&e), SplittingType::new(vec![0, -1]));
        assert_eq!(cocharacter_pushout(&Cocharacter::gl(vec![0, 0, 0]), Q).unwrap(), TransitionBundle::trivial(Q, 3));
        assert_eq!(cocharacter_pushout(&Cocharacter::gl(vec![-2]), Q).unwrap(), TransitionBundle::line(Q, 2));
        let sl = Cocharacter::new(GroupTag::sl(2), vec![1, -1]).unwrap();
        assert!(matches!(cocharacter_pushout(&sl, Q), Err(Error::UnsupportedGroup(_))));
    }

    #[test]
    fn classification() {
        assert_eq!(classify_bundle(&TransitionBundle::line(Q, -1)).weights(), &[1]);
        assert_eq!(classify_bundle(&TransitionBundle::trivial(Q, 2)).weights(), &[0, 0]);
        assert_eq!(classify_bundle(&TransitionBundle::split(Q, &[2, -1])).weights(), &[1, -2]);
        let sl = classify_bundle_for(&TransitionBundle::split(Q, &[2, -2]), GroupFamily::SL).unwrap();
        assert_eq!((sl.group(), sl.weights()), (GroupTag::sl(2), &[2, -2][..]));
        assert!(classify_bundle_for(&TransitionBundle::split(Q, &[2, -1]), GroupFamily::SL).is_err());
        let pgl = classify_bundle_for(&TransitionBundle::split(Q, &[2, -1]), GroupFamily::PGL).unwrap();
        assert_eq!(pgl.weights(), &[3, 0]);
    }

    #[test]
    fn lifting() {
        let lift = pgl_lift(&Cocharacter::new(GroupTag::pgl(2), vec![1, 0]).unwrap()).unwrap();
        assert_eq!((lift.group(), lift.weights()), (GroupTag::gl(2), &[1, 0][..]));
        let lift = pgl_lift(&Cocharacter::new(GroupTag::pgl(3), vec![2, 1, 0]).unwrap()).unwrap();
        assert_eq!(lift.weights(), &[2, 1, 0]);
        assert!(pgl_lift(&Cocharacter::gl(vec![1, 0])).is_err());
    }

    #[test]
    fn json_form() {
        let c: Cocharacter = serde_json::from_str(r#"{"group":"GL","n":2,"weights":[1,0]}"#).unwrap();
        assert_eq!(c, Cocharacter::gl(vec![1, 0]));
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"group":"GL","n":2,"weights":[1,0]}"#);
        assert!(serde_json::from_str::<Cocharacter>(r#"{"group":"SL","n":2,"weights":[1,0]}"#).is_err());
    }
}
