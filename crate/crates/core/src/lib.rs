//! Exact computations with vector bundles and torsors on the projective line.
//!
//! Bundles are transition matrices over `k[t, t^-1]` for `k = Q` or `F_p`.
//! The crate computes splitting types with certified Birkhoff factorizations,
//! cohomology, Harder–Narasimhan filtrations, the functor from graded vector
//! spaces, cocharacter classification of `GL_n`/`SL_n`/`PGL_n` torsors, and
//! the loop-group double-coset normal form. See `examples/` for one runnable
//! program per capability.

pub mod bundle;
pub mod error;
pub mod field;
pub mod graded;
pub mod laurent;
pub mod linalg;
pub mod matrix;
pub mod sample;
pub mod selftest;
pub mod task;
pub mod torsor;
pub mod wire;

pub use bundle::{BirkhoffWitness, SplittingType, TransitionBundle};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use graded::GradedVectorSpace;
pub use laurent::{LaurentPoly, Ring};
pub use matrix::LaurentMatrix;
pub use torsor::{Cocharacter, GroupFamily, GroupTag};
