//! Torsors under `GL_n`, `SL_n`, `PGL_n` through their cocharacters, and the
//! double-coset normal form for `G(k[t^-1]) \ G(k((t))) / G(k[[t]])`.

mod cocharacter;
mod double_coset;

pub use cocharacter::{
    classify_bundle, classify_bundle_for, cocharacter_pushout, dominantize, pgl_lift, Cocharacter, GroupFamily,
    GroupTag,
};
pub use double_coset::{double_coset_type, double_coset_witnesses, DoubleCosetCheck, DoubleCosetWitness};
