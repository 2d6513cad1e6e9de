//! Splitting types of a few bundles, including one hidden behind a gauge.

use p1torsor::bundle::{splitting_type, TransitionBundle};
use p1torsor::{Field, LaurentMatrix};

fn main() -> p1torsor::Result<()> {
    let q = Field::Rationals;
    let cases = [
        vec![vec!["t^2", "0"], vec!["0", "t^-1"]],
        vec![vec!["t", "0"], vec!["1", "t^-1"]],
        vec![vec!["t", "1"], vec!["0", "t^-1"]],
        vec![vec!["t^3", "t + 2"], vec!["0", "t^-2"]],
    ];
    for rows in &cases {
        let e = TransitionBundle::new(LaurentMatrix::parse(q, rows)?)?;
        println!("{:?}  ->  {}", rows, splitting_type(&e));
    }

    // O(2) + O(-1) twisted by random-looking gauges over F_7
    let f7 = Field::prime(7)?;
    let p = LaurentMatrix::parse(f7, &[vec!["1", "3*t + 1"], vec!["0", "1"]])?;
    let qm = LaurentMatrix::parse(f7, &[vec!["1", "0"], vec!["2*t^-2 + t^-1", "1"]])?;
    let e = TransitionBundle::split(f7, &[2, -1]).gauge(&p, &qm)?;
    println!("gauged over F_7: {}  ->  {}", e.transition(), splitting_type(&e));
    Ok(())
}
