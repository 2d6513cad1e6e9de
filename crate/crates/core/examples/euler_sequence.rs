//! `0 -> O(-1) -> O^2 -> O(1) -> 0` is exact, but its graded HN pieces are not.

use p1torsor::bundle::{euler_witness, validate_morphism};

fn main() {
    let w = euler_witness();
    println!("inclusion  M0 = {}  M1 = {}", w.inclusion.chart0, w.inclusion.chart1);
    println!("projection M0 = {}  M1 = {}", w.projection.chart0, w.projection.chart1);
    println!("inclusion  {:?}", validate_morphism(&w.inclusion));
    println!("projection {:?}", validate_morphism(&w.projection));
    let g = &w.gr_mismatch;
    println!("slopes of the middle: {:?}, of the ends: {:?}", g.mid_slopes, g.outer_slopes);
    println!("ranks balance: {}, slopes match: {}", g.ranks_balance, g.slopes_match);
}
