//! Global sections by Čech linear algebra.
//!
//! A section of `E(m)` is determined by `s1 in k[t^-1]^n` with
//! `t^m * T * s1` polynomial in `t`. Since `s1 = T^-1 * t^-m * s0` with `s0`
//! polynomial, every exponent of `s1` is at least `minexp(T^-1) - m`, which
//! bounds the unknowns exactly. Lowering the twist only adds constraints, so a
//! whole range of twists is handled by one incremental elimination.

use super::TransitionBundle;
use crate::linalg::{Echelon, SparseRow};

/// `dim H^0(E(m))` for every `m` in `lo..=hi`, in increasing order of `m`.
pub fn h0_profile(bundle: &TransitionBundle, lo: i64, hi: i64) -> Vec<usize> {
    assert!(lo <= hi, "empty twist range");
    let t = bundle.transition();
    let n = bundle.rank();
    let inv = t.inverse().expect("transition of a bundle is invertible");
    let inv_min = inv.min_exp().expect("invertible matrix has a nonzero entry");
    let bound = (hi - inv_min).max(0);
    let width = bound as usize + 1;
    let unknowns = n * width;

    let mut ech = Echelon::new(bundle.field(), unknowns);
    // exponents of T * s1 start at minexp(T) - bound
    let mut e = t.min_exp().expect("invertible matrix has a nonzero entry") - bound;
    let mut dims = Vec::with_capacity((hi - lo + 1) as usize);
    for m in (lo..=hi).rev() {
        // H^0(E(m)) needs the coefficients of T * s1 below t^-m to vanish
        while e < -m {
            for r in 0..n {
                let mut row: SparseRow = Vec::new();
                for k in 0..n {
                    for (exp, c) in t.get(r, k).terms() {
                        let j = exp - e;
                        if (0..=bound).contains(&j) {
                            row.push((k * width + j as usize, c.clone()));
                        }
                    }
                }
                row.sort_by_key(|(col, _)| *col);
                ech.insert(row);
            }
            e += 1;
        }
        dims.push(unknowns - ech.rank());
    }
    dims.reverse();
    dims
}

/// `dim_k H^0(P^1, E)`.
pub fn h0_dimension(bundle: &TransitionBundle) -> usize {
    h0_profile(bundle, 0, 0)[0]
}
