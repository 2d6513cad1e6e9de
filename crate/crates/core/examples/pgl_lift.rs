//! Every PGL_n cocharacter lifts to GL_n.

use p1torsor::torsor::pgl_lift;
use p1torsor::{Cocharacter, GroupTag};

fn main() -> p1torsor::Result<()> {
    for weights in [vec![3, 1], vec![5, 5, 2], vec![0, 4, 4, 1]] {
        let chi = Cocharacter::new(GroupTag::pgl(weights.len()), weights.clone())?;
        let lift = pgl_lift(&chi)?;
        println!("{weights:?}: PGL class {chi}, GL lift {lift}, projects back: {}", lift.project_to_pgl() == chi);
    }
    Ok(())
}
