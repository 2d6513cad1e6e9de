//! HN filtration of a bundle and a check that morphisms respect it.

use p1torsor::bundle::{hn_filtration, hom_basis, hom_dimension, validate_morphism, TransitionBundle};
use p1torsor::{Field, LaurentMatrix};

fn main() -> p1torsor::Result<()> {
    let q = Field::Rationals;
    let e = TransitionBundle::new(LaurentMatrix::parse(
        q,
        &[vec!["t^2", "t", "0"], vec!["0", "1", "0"], vec!["0", "t^-1", "t^-1"]],
    )?)?;
    let hn = hn_filtration(&e)?;
    for s in &hn.steps {
        println!("slope {:>2}  rank {}", s.slope, s.rank);
    }
    println!("cumulative ranks {:?}", hn.cumulative_ranks());

    let f = TransitionBundle::split(q, &[1, 1]);
    let basis = hom_basis(&e, &f)?;
    println!("dim Hom(E, F) = {} ({} basis maps)", hom_dimension(&e, &f)?, basis.len());
    for m in &basis {
        let r = validate_morphism(m);
        assert!(r.valid && r.hn_preserved);
    }
    println!("every basis map is valid and preserves HN");
    Ok(())
}
