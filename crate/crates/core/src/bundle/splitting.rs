use std::fmt;

use serde::{Deserialize, Serialize};

use super::sections::h0_profile;
use super::TransitionBundle;
use crate::error::{Error, Result};

/// Grothendieck exponents `a_1 >= ... >= a_n` with `E = O(a_1) + ... + O(a_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SplittingType(Vec<i64>);

impl SplittingType {
    /// Sorts the exponents into weakly decreasing order.
    pub fn new(mut exps: Vec<i64>) -> Self {
        exps.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType(exps)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `dim H^0(E(m)) = sum max(0, a_i + m + 1)`.
    pub fn h0_of_twist(&self, m: i64) -> usize {
        self.0.iter().map(|a| (a + m + 1).max(0) as usize).sum()
    }

    pub fn cohomology(&self) -> Cohomology {
        Cohomology { h0: self.h0_of_twist(0), h1: self.0.iter().map(|a| (-a - 1).max(0) as usize).sum() }
    }

    pub fn is_semistable(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn dual(&self) -> Self {
        Self::new(self.0.iter().map(|a| -a).collect())
    }

    pub fn twist(&self, m: i64) -> Self {
        SplittingType(self.0.iter().map(|a| a + m).collect())
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::new(self.0.iter().flat_map(|a| other.0.iter().map(move |b| a + b)).collect())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn exterior2(&self) -> Self {
        let e = &self.0;
        Self::new((0..e.len()).flat_map(|i| (i + 1..e.len()).map(move |j| e[i] + e[j])).collect())
    }

    pub fn sym2(&self) -> Self {
        let e = &self.0;
        Self::new((0..e.len()).flat_map(|i| (i..e.len()).map(move |j| e[i] + e[j])).collect())
    }

    /// `dim Hom(E, F) = sum_{i,j} max(0, b_j - a_i + 1)`.
    pub fn hom_dimension(&self, target: &Self) -> usize {
        self.dual().tensor(target).h0_of_twist(0)
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cohomology {
    pub h0: usize,
    pub h1: usize,
}

/// Decodes the splitting type from the `h0` profile of twists.
///
/// Every exponent lies in `[-maxexp(T^-1), maxexp(T)]`. The second difference
/// `f(-a) - 2 f(-a-1) + f(-a-2)` of `f(m) = dim H^0(E(m))` is the
/// multiplicity of `a`. At the top twist all `a_i + m >= 0`, so `f` must equal
/// `deg + n (m + 1)` there; that is checked before decoding.
pub fn splitting_type(bundle: &TransitionBundle) -> SplittingType {
    try_splitting_type(bundle).expect("section profile is consistent")
}

pub(crate) fn try_splitting_type(bundle: &TransitionBundle) -> Result<SplittingType> {
    let t = bundle.transition();
    let n = bundle.rank() as i64;
    let d = bundle.degree();
    let hi = t.max_exp().expect("nonzero transition");
    let inv = t.inverse()?;
    let lo = -inv.max_exp().expect("nonzero inverse");
    let (m_lo, m_top) = (-hi - 1, -lo);
    let profile = h0_profile(bundle, m_lo, m_top);
    let f = |m: i64| if m < m_lo { 0 } else { profile[(m - m_lo) as usize] as i64 };
    if f(m_top) != d + n * (m_top + 1) || f(m_lo) != 0 {
        return Err(Error::InternalSearchFailure(format!(
            "h0 profile {profile:?} inconsistent with degree {d} and rank {n}"
        )));
    }
    let mut exps = Vec::with_capacity(n as usize);
    for a in (lo..=hi).rev() {
        let mult = f(-a) - 2 * f(-a - 1) + f(-a - 2);
        if mult < 0 {
            return Err(Error::InternalSearchFailure(format!("negative multiplicity for exponent {a}")));
        }
        exps.extend(std::iter::repeat_n(a, mult as usize));
    }
    let ty = SplittingType(exps);
    if ty.rank() as i64 != n || ty.degree() != d {
        return Err(Error::InternalSearchFailure(format!("decoded {ty} has wrong rank or degree")));
    }
    Ok(ty)
}

pub fn cohomology_dims(bundle: &TransitionBundle) -> Cohomology {
    let coh = splitting_type(bundle).cohomology();
    debug_assert_eq!(coh.h0, super::h0_dimension(bundle), "h0 disagrees with the Čech computation");
    coh
}

pub fn is_semistable(bundle: &TransitionBundle) -> bool {
    splitting_type(bundle).is_semistable()
}

pub fn hom_dimension(source: &TransitionBundle, target: &TransitionBundle) -> Result<usize> {
    source.field().ensure_same(&target.field())?;
    Ok(splitting_type(source).hom_dimension(&splitting_type(target)))
}
