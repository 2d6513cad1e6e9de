//! `h0` and `h1` from the splitting type, against a direct section count.

use p1torsor::bundle::{cohomology_dims, h0_dimension, h0_profile, TransitionBundle};
use p1torsor::{Field, LaurentMatrix};

fn main() -> p1torsor::Result<()> {
    let q = Field::Rationals;
    for a in -3..=3 {
        let c = cohomology_dims(&TransitionBundle::line(q, a));
        println!("O({a:>2}): h0 = {}, h1 = {}", c.h0, c.h1);
    }

    let e = TransitionBundle::new(LaurentMatrix::parse(q, &[vec!["t", "0"], vec!["1", "t^-1"]])?)?;
    let c = cohomology_dims(&e);
    println!("[[t, 0], [1, t^-1]]: h0 = {}, h1 = {}, counted h0 = {}", c.h0, c.h1, h0_dimension(&e));
    println!("h0 of twists -2..=2: {:?}", h0_profile(&e, -2, 2));
    Ok(())
}
