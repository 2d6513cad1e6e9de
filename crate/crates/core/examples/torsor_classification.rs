//! Torsors under GL_n, SL_n and PGL_n named by dominant cocharacters.

use p1torsor::bundle::TransitionBundle;
use p1torsor::torsor::{classify_bundle, classify_bundle_for, cocharacter_pushout};
use p1torsor::{Cocharacter, Field, GroupFamily, LaurentMatrix};

fn main() -> p1torsor::Result<()> {
    let q = Field::Rationals;
    let chi = Cocharacter::gl(vec![-1, 3, 0]);
    let e = cocharacter_pushout(&chi, q)?;
    println!("pushout of {chi} has transition {}", e.transition());
    println!("classified as {}", classify_bundle(&e));

    let e = TransitionBundle::new(LaurentMatrix::parse(q, &[vec!["t", "1"], vec!["0", "t^-1"]])?)?;
    for family in [GroupFamily::GL, GroupFamily::SL, GroupFamily::PGL] {
        println!("{family:?}: {}", classify_bundle_for(&e, family)?);
    }
    Ok(())
}
