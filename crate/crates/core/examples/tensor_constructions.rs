//! Dual, tensor, exterior and symmetric squares, direct sum.

use p1torsor::bundle::{bundle_constructions, splitting_type, Construction, TransitionBundle};
use p1torsor::Field;

fn main() -> p1torsor::Result<()> {
    let q = Field::Rationals;
    let e = TransitionBundle::split(q, &[2, 0, -1]);
    let f = TransitionBundle::split(q, &[1, -1]);
    for kind in [Construction::Dual, Construction::Exterior2, Construction::Sym2] {
        let out = bundle_constructions(kind, &e, None)?;
        println!("{kind:?}(E) = {}", splitting_type(&out));
    }
    for kind in [Construction::Tensor, Construction::DirectSum] {
        let out = bundle_constructions(kind, &e, Some(&f))?;
        println!("{kind:?}(E, F) = {}", splitting_type(&out));
    }
    Ok(())
}
