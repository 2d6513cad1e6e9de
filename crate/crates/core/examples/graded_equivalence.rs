//! Graded vector spaces as split bundles, and back.

use p1torsor::bundle::splitting_type;
use p1torsor::graded::{e_functor, inverse_e, GradedVectorSpace};
use p1torsor::Field;

fn main() -> p1torsor::Result<()> {
    let v = GradedVectorSpace::new([(2, 2), (-1, 1)]);
    let e = e_functor(&v, Field::Rationals)?;
    println!("{} -> {}", serde_json::to_string(&v).unwrap(), splitting_type(&e));
    assert_eq!(inverse_e(&e), v);

    // the standard representation has weight -1
    let std_rep = GradedVectorSpace::new([(-1, 1)]);
    println!("standard representation -> {}", splitting_type(&e_functor(&std_rep, Field::Rationals)?));

    for i in [-2, 0, 2, 3] {
        let fg = v.fil_and_gr(i);
        println!("i = {i:>2}: dim Fil = {}, dim Gr = {}", fg.fil_dim, fg.gr_dim);
    }
    Ok(())
}
