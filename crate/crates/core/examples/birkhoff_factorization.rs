//! A certified factorization `T = P * t^D * Q`, checked by multiplying out.

use p1torsor::bundle::{birkhoff_factorize, TransitionBundle};
use p1torsor::{Field, LaurentMatrix};

fn main() -> p1torsor::Result<()> {
    let t = LaurentMatrix::parse(
        Field::Rationals,
        &[vec!["t^2", "t + 1/2", "0"], vec!["0", "1", "0"], vec!["3*t^-2", "t^-1 + t", "t^-1"]],
    )?;
    let e = TransitionBundle::new(t)?;
    let w = birkhoff_factorize(&e)?;
    println!("T = {}", e.transition());
    println!("P = {}", w.p);
    println!("D = {}", w.splitting);
    println!("Q = {}", w.q);
    let check = w.check(e.transition());
    println!("{check:#?}");
    assert!(check.all());
    Ok(())
}
