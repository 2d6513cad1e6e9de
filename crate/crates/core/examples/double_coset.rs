//! Normal form of a loop-group element `g = u * t^lambda * v`.

use p1torsor::torsor::double_coset_witnesses;
use p1torsor::{Field, LaurentMatrix};

fn main() -> p1torsor::Result<()> {
    let f5 = Field::prime(5)?;
    let u = LaurentMatrix::parse(f5, &[vec!["1", "t^-1"], vec!["0", "1"]])?;
    let v = LaurentMatrix::parse(f5, &[vec!["1", "0"], vec!["2*t + 1", "1"]])?;
    let g = u.mul(&LaurentMatrix::diag_t_powers(f5, &[-1, 2])).mul(&v);
    println!("g = {g}");
    let w = double_coset_witnesses(&g)?;
    println!("lambda = {}", w.lambda);
    println!("u = {}", w.u);
    println!("v = {}", w.v);
    let check = w.check(&g);
    println!("{check:#?}");
    assert!(check.all());
    Ok(())
}
