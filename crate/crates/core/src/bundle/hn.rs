//! Harder–Narasimhan filtrations, bundle morphisms, and the Euler sequence.

use serde::Serialize;

use super::birkhoff::{birkhoff_factorize, BirkhoffWitness};
use super::splitting::splitting_type;
use super::TransitionBundle;
use crate::error::Result;
use crate::field::Field;
use crate::laurent::{LaurentPoly, Ring};
use crate::matrix::LaurentMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HnStep {
    pub slope: i64,
    pub rank: usize,
}

/// The filtration `HN^i`, presented in the diagonalizing frame of a
/// Birkhoff witness: `HN^i` is spanned by the coordinates with exponent `>= i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnFiltration {
    pub steps: Vec<HnStep>,
    /// `(P, Q)` with `T = P * t^D * Q`.
    pub basis_change: (LaurentMatrix, LaurentMatrix),
}

impl HnFiltration {
    pub fn cumulative_ranks(&self) -> Vec<usize> {
        self.steps
            .iter()
            .scan(0, |acc, s| {
                *acc += s.rank;
                Some(*acc)
            })
            .collect()
    }

    /// `rank HN^i`.
    pub fn rank_at(&self, i: i64) -> usize {
        self.steps.iter().filter(|s| s.slope >= i).map(|s| s.rank).sum()
    }

    /// Frames of `HN^i` on the two charts: the leading columns of `P` over
    /// `Spec k[t]` and of `Q^-1` over `Spec k[t^-1]`.
    pub fn subbundle_frames(&self, i: i64) -> Result<(LaurentMatrix, LaurentMatrix)> {
        let r = self.rank_at(i);
        let (p, q) = &self.basis_change;
        let q_inv = q.inverse()?;
        let take = |m: &LaurentMatrix| LaurentMatrix::from_fn(m.field(), m.rows(), r, |a, b| m.get(a, b).clone());
        Ok((take(p), take(&q_inv)))
    }
}

pub fn hn_filtration(bundle: &TransitionBundle) -> Result<HnFiltration> {
    let BirkhoffWitness { p, splitting, q } = birkhoff_factorize(bundle)?;
    let mut steps: Vec<HnStep> = Vec::new();
    for &a in splitting.exponents() {
        match steps.last_mut() {
            Some(s) if s.slope == a => s.rank += 1,
            _ => steps.push(HnStep { slope: a, rank: 1 }),
        }
    }
    Ok(HnFiltration { steps, basis_change: (p, q) })
}

/// A map of bundles given chart-wise: `M0` over `k[t]`, `M1` over `k[t^-1]`,
/// agreeing on the overlap: `M0 * T_source = T_target * M1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleMorphism {
    pub source: TransitionBundle,
    pub target: TransitionBundle,
    pub chart0: LaurentMatrix,
    pub chart1: LaurentMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MorphismReport {
    pub valid: bool,
    pub hn_preserved: bool,
}

impl BundleMorphism {
    fn shapes_ok(&self) -> bool {
        let (r, c) = (self.target.rank(), self.source.rank());
        let field = self.source.field();
        (self.chart0.rows(), self.chart0.cols()) == (r, c)
            && (self.chart1.rows(), self.chart1.cols()) == (r, c)
            && [self.target.field(), self.chart0.field(), self.chart1.field()].iter().all(|f| *f == field)
    }

    pub fn is_valid(&self) -> bool {
        self.shapes_ok()
            && self.chart0.entries_in(Ring::PolyInT)
            && self.chart1.entries_in(Ring::PolyInTInv)
            && self.chart0.mul(self.source.transition()) == self.target.transition().mul(&self.chart1)
    }

    /// `M0` rewritten in the diagonalizing frames, `P_target^-1 * M0 * P_source`.
    pub fn diagonal_frame_chart0(&self) -> Result<(LaurentMatrix, Vec<i64>, Vec<i64>)> {
        let ws = birkhoff_factorize(&self.source)?;
        let wt = birkhoff_factorize(&self.target)?;
        let n0 = wt.p.inverse()?.mul(&self.chart0).mul(&ws.p);
        Ok((n0, ws.splitting.exponents().to_vec(), wt.splitting.exponents().to_vec()))
    }
}

/// `valid` checks the overlap equation and chart rings; `hn_preserved` checks
/// that in diagonalizing coordinates no slope-`a` source coordinate maps to a
/// target coordinate of slope `b < a`.
pub fn validate_morphism(f: &BundleMorphism) -> MorphismReport {
    let valid = f.is_valid();
    let hn_preserved = f.shapes_ok()
        && f.diagonal_frame_chart0().is_ok_and(|(n0, src, tgt)| {
            tgt.iter().enumerate().all(|(j, b)| src.iter().enumerate().all(|(i, a)| b >= a || n0.get(j, i).is_zero()))
        });
    MorphismReport { valid, hn_preserved }
}

/// A basis of `Hom(E, F)` built in diagonalizing coordinates: for a source
/// coordinate of slope `a` and a target coordinate of slope `b >= a`, the
/// maps `t^k` with `0 <= k <= b - a`, transported back through the Birkhoff
/// witnesses of both bundles.
pub fn hom_basis(source: &TransitionBundle, target: &TransitionBundle) -> Result<Vec<BundleMorphism>> {
    source.field().ensure_same(&target.field())?;
    let ws = birkhoff_factorize(source)?;
    let wt = birkhoff_factorize(target)?;
    Ok(hom_basis_from_frames(source, target, &ws, &wt))
}

/// Like [`hom_basis`], but with caller-supplied factorizations.
pub fn hom_basis_from_frames(
    source: &TransitionBundle,
    target: &TransitionBundle,
    ws: &BirkhoffWitness,
    wt: &BirkhoffWitness,
) -> Vec<BundleMorphism> {
    let field = source.field();
    let (a, b) = (ws.splitting.exponents(), wt.splitting.exponents());
    let ps_inv = ws.p.inverse().expect("witness P is invertible");
    let qt_inv = wt.q.inverse().expect("witness Q is invertible");
    let mut out = Vec::new();
    for (j, bj) in b.iter().enumerate() {
        for (i, ai) in a.iter().enumerate() {
            for k in 0..=(bj - ai) {
                let mut n0 = LaurentMatrix::zeros(field, b.len(), a.len());
                let mut n1 = n0.clone();
                n0.set(j, i, LaurentPoly::t_power(field, k));
                n1.set(j, i, LaurentPoly::t_power(field, k + ai - bj));
                out.push(BundleMorphism {
                    source: source.clone(),
                    target: target.clone(),
                    chart0: wt.p.mul(&n0).mul(&ps_inv),
                    chart1: qt_inv.mul(&n1).mul(&ws.q),
                });
            }
        }
    }
    out
}

/// Slope multisets showing that `gr . HN` does not send the Euler sequence
/// to an exact sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GrMismatch {
    pub mid_slopes: Vec<i64>,
    pub outer_slopes: Vec<i64>,
    pub ranks_balance: bool,
    pub slopes_match: bool,
    pub composition_is_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerWitness {
    pub sub: TransitionBundle,
    pub mid: TransitionBundle,
    pub quot: TransitionBundle,
    pub inclusion: BundleMorphism,
    pub projection: BundleMorphism,
    pub gr_mismatch: GrMismatch,
}

pub fn euler_witness() -> EulerWitness {
    euler_witness_over(Field::Rationals)
}

/// `0 -> O(-1) -> O + O -> O(1) -> 0` with inclusion `(1, t)` and
/// projection `(-t, 1)` on the `k[t]` chart.
pub fn euler_witness_over(field: Field) -> EulerWitness {
    let poly = |s: &str| crate::laurent::parse_laurent(field, s).expect("literal");
    let sub = TransitionBundle::line(field, -1);
    let mid = TransitionBundle::trivial(field, 2);
    let quot = TransitionBundle::line(field, 1);
    let col = |a: &str, b: &str| LaurentMatrix::from_rows(field, vec![vec![poly(a)], vec![poly(b)]]).expect("2x1");
    let row = |a: &str, b: &str| LaurentMatrix::from_rows(field, vec![vec![poly(a), poly(b)]]).expect("1x2");
    let inclusion =
        BundleMorphism { source: sub.clone(), target: mid.clone(), chart0: col("1", "t"), chart1: col("t^-1", "1") };
    let projection =
        BundleMorphism { source: mid.clone(), target: quot.clone(), chart0: row("-t", "1"), chart1: row("-1", "t^-1") };
    let composition = projection.chart0.mul(&inclusion.chart0);
    let mid_slopes = splitting_type(&mid).exponents().to_vec();
    let mut outer_slopes: Vec<i64> =
        splitting_type(&sub).exponents().iter().chain(splitting_type(&quot).exponents()).copied().collect();
    outer_slopes.sort_unstable();
    let mut mid_sorted = mid_slopes.clone();
    mid_sorted.sort_unstable();
    let gr_mismatch = GrMismatch {
        slopes_match: mid_sorted == outer_slopes,
        ranks_balance: sub.rank() + quot.rank() == mid.rank(),
        composition_is_zero: composition.entries().iter().all(LaurentPoly::is_zero),
        mid_slopes,
        outer_slopes,
    };
    EulerWitness { sub, mid, quot, inclusion, projection, gr_mismatch }
}
